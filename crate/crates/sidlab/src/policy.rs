//! Controllers: open-loop action sequences and linear state feedback.

use crate::error::{Error, Result};
use crate::rng::{self, stream};
use rand::Rng;
use serde::{Deserialize, Serialize};

pub const POLICY_RECORD_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyKind {
    OpenLoop,
    LinearFeedback,
}

impl std::fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PolicyKind::OpenLoop => write!(f, "open_loop"),
            PolicyKind::LinearFeedback => write!(f, "linear_feedback"),
        }
    }
}

impl std::str::FromStr for PolicyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open_loop" => Ok(PolicyKind::OpenLoop),
            "linear_feedback" => Ok(PolicyKind::LinearFeedback),
            other => Err(Error::Config(format!("unknown policy kind '{other}'"))),
        }
    }
}

/// A parametric controller tied to one environment's dimensions.
///
/// `open_loop`: `horizon * n_a` raw action entries.
/// `linear_feedback`: gain matrix (`n_a * n_s`, row-major) then bias (`n_a`),
/// applied as `a = K s + b`. Emitted actions are clipped to the environment's
/// action box on evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Policy {
    pub kind: PolicyKind,
    pub env_id: String,
    pub horizon: usize,
    pub n_s: usize,
    pub n_a: usize,
    pub params: Vec<f64>,
}

/// Versioned on-disk wrapper for [`Policy`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolicyRecord {
    pub version: u32,
    #[serde(flatten)]
    pub policy: Policy,
}

impl Policy {
    /// Number of parameters a policy of `kind` needs for these dimensions.
    pub fn param_count(kind: PolicyKind, horizon: usize, n_s: usize, n_a: usize) -> usize {
        match kind {
            PolicyKind::OpenLoop => horizon * n_a,
            PolicyKind::LinearFeedback => n_a * n_s + n_a,
        }
    }

    pub fn from_params(
        kind: PolicyKind,
        env_id: impl Into<String>,
        horizon: usize,
        n_s: usize,
        n_a: usize,
        params: Vec<f64>,
    ) -> Result<Self> {
        let expected = Self::param_count(kind, horizon, n_s, n_a);
        if params.len() != expected {
            return Err(Error::Config(format!(
                "{kind} policy needs {expected} params for horizon {horizon}, n_s {n_s}, n_a {n_a}; got {}",
                params.len()
            )));
        }
        Ok(Self {
            kind,
            env_id: env_id.into(),
            horizon,
            n_s,
            n_a,
            params,
        })
    }

    /// All-zero parameters (zero actions / zero gains).
    pub fn zero(
        kind: PolicyKind,
        env_id: impl Into<String>,
        horizon: usize,
        n_s: usize,
        n_a: usize,
    ) -> Self {
        let p = Self::param_count(kind, horizon, n_s, n_a);
        Self {
            kind,
            env_id: env_id.into(),
            horizon,
            n_s,
            n_a,
            params: vec![0.0; p],
        }
    }

    /// The naive exploration baseline: i.i.d. uniform actions over the action
    /// box, materialized as an open-loop sequence.
    pub fn random_uniform(
        env_id: impl Into<String>,
        horizon: usize,
        n_s: usize,
        n_a: usize,
        action_low: &[f64],
        action_high: &[f64],
        seed: u64,
    ) -> Self {
        let mut rng = rng::rng_for(seed, stream::RANDOM_POLICY, 0);
        let params: Vec<f64> = (0..horizon * n_a)
            .map(|k| {
                let j = k % n_a;
                rng.random_range(action_low[j]..=action_high[j])
            })
            .collect();
        Self {
            kind: PolicyKind::OpenLoop,
            env_id: env_id.into(),
            horizon,
            n_s,
            n_a,
            params,
        }
    }

    /// Action at step `h` in state `s`, clipped to the action box. Stateless:
    /// depends only on `(h, s)`.
    pub fn action(&self, h: usize, s: &[f64], action_low: &[f64], action_high: &[f64]) -> Vec<f64> {
        let raw: Vec<f64> = match self.kind {
            PolicyKind::OpenLoop => {
                let start = h * self.n_a;
                self.params[start..start + self.n_a].to_vec()
            }
            PolicyKind::LinearFeedback => {
                let (gains, bias) = self.params.split_at(self.n_a * self.n_s);
                (0..self.n_a)
                    .map(|i| {
                        let row = &gains[i * self.n_s..(i + 1) * self.n_s];
                        row.iter().zip(s).map(|(k, x)| k * x).sum::<f64>() + bias[i]
                    })
                    .collect()
            }
        };
        raw.iter()
            .enumerate()
            .map(|(j, &a)| a.clamp(action_low[j], action_high[j]))
            .collect()
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let record = PolicyRecord {
            version: POLICY_RECORD_VERSION,
            policy: self.clone(),
        };
        std::fs::write(path, serde_json::to_string_pretty(&record)?)?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let record: PolicyRecord = serde_json::from_str(&text)?;
        if record.version != POLICY_RECORD_VERSION {
            return Err(Error::Config(format!(
                "unsupported policy record version {}",
                record.version
            )));
        }
        Ok(record.policy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn open_loop_indexes_by_step() {
        let p = Policy::from_params(PolicyKind::OpenLoop, "e", 3, 1, 1, vec![0.1, 0.2, 0.3])
            .unwrap();
        assert_eq!(p.action(1, &[9.0], &[-1.0], &[1.0]), vec![0.2]);
    }

    #[test]
    fn linear_feedback_applies_gains_and_clips() {
        // a = 2*s0 - s1 + 0.5, state (1, 3) -> 2 - 3 + 0.5 = -0.5
        let p = Policy::from_params(
            PolicyKind::LinearFeedback,
            "e",
            5,
            2,
            1,
            vec![2.0, -1.0, 0.5],
        )
        .unwrap();
        assert_eq!(p.action(0, &[1.0, 3.0], &[-1.0], &[1.0]), vec![-0.5]);
        // Saturates at the box.
        assert_eq!(p.action(0, &[10.0, 0.0], &[-1.0], &[1.0]), vec![1.0]);
    }

    #[test]
    fn param_count_mismatch_rejected() {
        assert!(Policy::from_params(PolicyKind::OpenLoop, "e", 3, 1, 1, vec![0.0]).is_err());
    }

    #[test]
    fn random_uniform_respects_box_and_seed() {
        let a = Policy::random_uniform("e", 50, 3, 2, &[-1.0, 0.0], &[1.0, 2.0], 77);
        let b = Policy::random_uniform("e", 50, 3, 2, &[-1.0, 0.0], &[1.0, 2.0], 77);
        assert_eq!(a, b);
        for k in 0..50 {
            assert!((-1.0..=1.0).contains(&a.params[2 * k]));
            assert!((0.0..=2.0).contains(&a.params[2 * k + 1]));
        }
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("policy.json");
        let p = Policy::from_params(PolicyKind::OpenLoop, "e", 2, 1, 1, vec![0.5, -0.5]).unwrap();
        p.save(&path).unwrap();
        assert_eq!(Policy::load(&path).unwrap(), p);
    }
}
