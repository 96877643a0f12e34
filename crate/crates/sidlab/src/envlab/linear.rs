//! `linear1d`: scalar gain integrator `s' = s + theta * a`.
//!
//! The workhorse for oracle tests: every Fisher and estimation quantity has a
//! closed form. Task: reach a target at the end of the episode.

use super::{EnvSpec, SuccessThresholds};
use crate::trajectory::Trajectory;
use std::collections::BTreeMap;

pub const ENV_ID: &str = "linear1d";

pub fn default_spec() -> EnvSpec {
    let mut extras = BTreeMap::new();
    extras.insert("target".to_string(), 3.0);
    EnvSpec {
        env_id: ENV_ID.to_string(),
        n_s: 1,
        n_a: 1,
        d: 1,
        horizon: 3,
        sigma_w: 0.1,
        action_low: vec![-1.0],
        action_high: vec![1.0],
        init_state_sampler_id: "zero".to_string(),
        extras,
    }
}

pub fn param_names() -> Vec<String> {
    vec!["gain".to_string()]
}

pub fn param_bounds() -> (Vec<f64>, Vec<f64>) {
    (vec![0.1], vec![2.5])
}

pub fn default_prior() -> (Vec<f64>, Vec<f64>) {
    (vec![1.0], vec![0.5])
}

pub fn dynamics(s: &[f64], a: &[f64], theta: &[f64]) -> Vec<f64> {
    vec![s[0] + theta[0] * a[0]]
}

pub fn init_state() -> Vec<f64> {
    vec![0.0]
}

pub fn episode_return(spec: &EnvSpec, traj: &Trajectory) -> f64 {
    let target = spec.extras["target"];
    let err = traj.final_state()[0] - target;
    -err * err
}

pub fn headline_metric(spec: &EnvSpec, traj: &Trajectory) -> f64 {
    let target = spec.extras["target"];
    (traj.final_state()[0] - target).abs()
}

pub fn success(spec: &EnvSpec, traj: &Trajectory, thresholds: &SuccessThresholds) -> bool {
    headline_metric(spec, traj) <= thresholds.linear_terminal_err
}
