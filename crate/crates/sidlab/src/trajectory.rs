//! Episode records: the state/action sequence produced by one rollout.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// One episode: `horizon + 1` states and `horizon` actions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub states: Vec<Vec<f64>>,
    pub actions: Vec<Vec<f64>>,
    pub horizon: usize,
    pub env_id: String,
    pub seed: u64,
}

impl Trajectory {
    pub fn new(
        states: Vec<Vec<f64>>,
        actions: Vec<Vec<f64>>,
        env_id: impl Into<String>,
        seed: u64,
    ) -> Result<Self> {
        let horizon = actions.len();
        if states.len() != horizon + 1 {
            return Err(Error::Config(format!(
                "trajectory has {} states for {} actions; expected {}",
                states.len(),
                horizon,
                horizon + 1
            )));
        }
        for (h, s) in states.iter().enumerate() {
            if s.iter().any(|x| !x.is_finite()) {
                return Err(Error::Domain(format!("non-finite state at step {h}")));
            }
        }
        Ok(Self {
            states,
            actions,
            horizon,
            env_id: env_id.into(),
            seed,
        })
    }

    pub fn initial_state(&self) -> &[f64] {
        &self.states[0]
    }

    pub fn final_state(&self) -> &[f64] {
        &self.states[self.horizon]
    }

    /// Truncate to the first `k` steps (k+1 states). Used for information
    /// monotonicity checks.
    pub fn prefix(&self, k: usize) -> Trajectory {
        let k = k.min(self.horizon);
        Trajectory {
            states: self.states[..=k].to_vec(),
            actions: self.actions[..k].to_vec(),
            horizon: k,
            env_id: self.env_id.clone(),
            seed: self.seed,
        }
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self)?;
        std::fs::write(path, json)?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let traj: Trajectory = serde_json::from_str(&text)?;
        Ok(traj)
    }
}
