//! Physics parameter vectors and the truncated Gaussian distribution used as
//! prior and posterior over them.

use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

/// Std below this is treated as degenerate: sampling returns the clipped mean.
const DEGENERATE_STD: f64 = 1e-12;

/// The unknown physics parameters of an environment, with names and box bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamVector {
    pub values: Vec<f64>,
    pub names: Vec<String>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl ParamVector {
    pub fn new(
        values: Vec<f64>,
        names: Vec<String>,
        lower: Vec<f64>,
        upper: Vec<f64>,
    ) -> Result<Self> {
        let d = values.len();
        if d == 0 {
            return Err(Error::Config("parameter vector must not be empty".into()));
        }
        if names.len() != d || lower.len() != d || upper.len() != d {
            return Err(Error::Config(format!(
                "parameter vector field lengths disagree: values {d}, names {}, lower {}, upper {}",
                names.len(),
                lower.len(),
                upper.len()
            )));
        }
        for i in 0..d {
            if !(lower[i] <= values[i] && values[i] <= upper[i]) {
                return Err(Error::Config(format!(
                    "parameter '{}' = {} outside bounds [{}, {}]",
                    names[i], values[i], lower[i], upper[i]
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::Config(format!("duplicate parameter name '{n}'")));
            }
        }
        Ok(Self {
            values,
            names,
            lower,
            upper,
        })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Same names/bounds, new values (clipped into bounds).
    pub fn with_values(&self, values: &[f64]) -> Result<Self> {
        if values.len() != self.dim() {
            return Err(Error::Config(format!(
                "expected {} parameter values, got {}",
                self.dim(),
                values.len()
            )));
        }
        let clipped: Vec<f64> = values
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(&v, (&lo, &hi))| v.clamp(lo, hi))
            .collect();
        Self::new(clipped, self.names.clone(), self.lower.clone(), self.upper.clone())
    }
}

/// Diagonal Gaussian over parameters, truncated at box bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamDistribution {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl ParamDistribution {
    pub fn new(mean: Vec<f64>, std: Vec<f64>, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let d = mean.len();
        if d == 0 || std.len() != d || lower.len() != d || upper.len() != d {
            return Err(Error::Config(
                "parameter distribution field lengths disagree or are empty".into(),
            ));
        }
        for i in 0..d {
            if !(std[i] > 0.0) {
                return Err(Error::Config(format!(
                    "parameter distribution std[{i}] = {} must be > 0",
                    std[i]
                )));
            }
            if !(lower[i] < upper[i]) {
                return Err(Error::Config(format!(
                    "truncation interval [{}, {}] for component {i} is empty",
                    lower[i], upper[i]
                )));
            }
        }
        Ok(Self {
            mean,
            std,
            lower,
            upper,
        })
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    /// Draw one parameter vector from the truncated Gaussian via inverse-CDF,
    /// so sampling stays exact even when the mean sits near or outside bounds.
    pub fn sample(&self, rng: &mut impl Rng, template: &ParamVector) -> Result<ParamVector> {
        let values = self.sample_values(rng);
        template.with_values(&values)
    }

    /// Raw sampled values without attaching names/bounds metadata.
    pub fn sample_values(&self, rng: &mut impl Rng) -> Vec<f64> {
        let std_normal = Normal::standard();
        (0..self.dim())
            .map(|i| {
                let (mu, sigma) = (self.mean[i], self.std[i]);
                if sigma <= DEGENERATE_STD {
                    return mu.clamp(self.lower[i], self.upper[i]);
                }
                let a = std_normal.cdf((self.lower[i] - mu) / sigma);
                let b = std_normal.cdf((self.upper[i] - mu) / sigma);
                if b - a <= f64::EPSILON {
                    // Essentially no mass inside the interval; collapse to the
                    // nearer bound.
                    return mu.clamp(self.lower[i], self.upper[i]);
                }
                let u: f64 = rng.random_range(a..b);
                let x = mu + sigma * std_normal.inverse_cdf(u);
                x.clamp(self.lower[i], self.upper[i])
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn template(d: usize, lo: f64, hi: f64) -> ParamVector {
        ParamVector::new(
            vec![(lo + hi) / 2.0; d],
            (0..d).map(|i| format!("p{i}")).collect(),
            vec![lo; d],
            vec![hi; d],
        )
        .unwrap()
    }

    /// Closed-form mean of a truncated normal, used as an independent oracle.
    fn truncated_mean(mu: f64, sigma: f64, lo: f64, hi: f64) -> f64 {
        let n = Normal::standard();
        let a = (lo - mu) / sigma;
        let b = (hi - mu) / sigma;
        let phi = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let z = n.cdf(b) - n.cdf(a);
        mu + sigma * (phi(a) - phi(b)) / z
    }

    /// Closed-form variance of a truncated normal.
    fn truncated_var(mu: f64, sigma: f64, lo: f64, hi: f64) -> f64 {
        let n = Normal::standard();
        let a = (lo - mu) / sigma;
        let b = (hi - mu) / sigma;
        let phi = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let z = n.cdf(b) - n.cdf(a);
        let m = (phi(a) - phi(b)) / z;
        sigma * sigma * (1.0 + (a * phi(a) - b * phi(b)) / z - m * m)
    }

    #[test]
    fn degenerate_std_returns_clipped_mean() {
        let q = ParamDistribution::new(vec![3.0], vec![1e-15], vec![0.0], vec![2.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let v = q.sample_values(&mut rng);
        assert_eq!(v, vec![2.0]);
    }

    #[test]
    fn empirical_mean_matches_truncated_moments() {
        // Asymmetric truncation so the truncated mean differs clearly from mu.
        let (mu, sigma, lo, hi) = (0.8, 0.5, 0.0, 1.0);
        let q = ParamDistribution::new(vec![mu], vec![sigma], vec![lo], vec![hi]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let n = 10_000;
        let mut sum = 0.0;
        for _ in 0..n {
            sum += q.sample_values(&mut rng)[0];
        }
        let emp_mean = sum / n as f64;
        let exact_mean = truncated_mean(mu, sigma, lo, hi);
        let se = (truncated_var(mu, sigma, lo, hi) / n as f64).sqrt();
        assert!(
            (emp_mean - exact_mean).abs() <= 3.0 * se,
            "empirical {emp_mean} vs exact {exact_mean} (se {se})"
        );
    }

    #[test]
    fn rejects_empty_interval_and_bad_std() {
        assert!(ParamDistribution::new(vec![0.0], vec![0.0], vec![0.0], vec![1.0]).is_err());
        assert!(ParamDistribution::new(vec![0.0], vec![1.0], vec![1.0], vec![1.0]).is_err());
    }

    #[test]
    fn param_vector_validation() {
        assert!(ParamVector::new(vec![2.0], vec!["a".into()], vec![0.0], vec![1.0]).is_err());
        assert!(ParamVector::new(
            vec![0.5, 0.5],
            vec!["a".into(), "a".into()],
            vec![0.0, 0.0],
            vec![1.0, 1.0]
        )
        .is_err());
        let t = template(2, 0.0, 1.0);
        let clipped = t.with_values(&[5.0, -3.0]).unwrap();
        assert_eq!(clipped.values, vec![1.0, 0.0]);
    }

    proptest! {
        #[test]
        fn samples_always_inside_bounds(
            mu in -2.0..2.0f64,
            sigma in 0.01..3.0f64,
            seed in 0u64..1000,
        ) {
            let q = ParamDistribution::new(vec![mu], vec![sigma], vec![-1.0], vec![1.0]).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..50 {
                let v = q.sample_values(&mut rng)[0];
                prop_assert!((-1.0..=1.0).contains(&v));
            }
        }
    }
}
