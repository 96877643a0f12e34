//! `rod-pivot`: probing a rod's unknown center-of-mass offset.
//!
//! Each step applies an impulse `J` at lever position `x` and observes the
//! resulting angular velocity `omega = J (x - c) / I(c)` with moment of
//! inertia `I(c) = m L^2 / 12 + m c^2`. The downstream task is to place the
//! rod on a perch: the final action's `x` component is the placement point,
//! and the tilt after release is proportional to the placement error.

use super::{EnvSpec, SuccessThresholds};
use crate::trajectory::Trajectory;
use std::collections::BTreeMap;

pub const ENV_ID: &str = "rod-pivot";

pub fn default_spec() -> EnvSpec {
    let mut extras = BTreeMap::new();
    extras.insert("mass".to_string(), 1.0);
    extras.insert("length".to_string(), 1.0);
    extras.insert("tilt_per_offset_deg".to_string(), 30.0);
    EnvSpec {
        env_id: ENV_ID.to_string(),
        n_s: 1,
        n_a: 2,
        d: 1,
        horizon: 5,
        sigma_w: 0.8,
        action_low: vec![-1.0, -0.5],
        action_high: vec![1.0, 0.5],
        init_state_sampler_id: "zero".to_string(),
        extras,
    }
}

pub fn param_names() -> Vec<String> {
    vec!["com_offset".to_string()]
}

pub fn param_bounds() -> (Vec<f64>, Vec<f64>) {
    (vec![-0.45], vec![0.45])
}

pub fn default_prior() -> (Vec<f64>, Vec<f64>) {
    (vec![0.0], vec![0.2])
}

pub fn moment_of_inertia(spec: &EnvSpec, c: f64) -> f64 {
    let m = spec.extras["mass"];
    let l = spec.extras["length"];
    m * l * l / 12.0 + m * c * c
}

/// Angular velocity response to an impulse, the heart of the environment.
pub fn omega(spec: &EnvSpec, impulse: f64, lever: f64, c: f64) -> f64 {
    impulse * (lever - c) / moment_of_inertia(spec, c)
}

pub fn dynamics(spec: &EnvSpec, _s: &[f64], a: &[f64], theta: &[f64]) -> Vec<f64> {
    vec![omega(spec, a[0], a[1], theta[0])]
}

pub fn init_state() -> Vec<f64> {
    vec![0.0]
}

/// Tilt angle in degrees after placing the rod at the final action's lever
/// position.
pub fn tilt_deg(spec: &EnvSpec, theta: &[f64], traj: &Trajectory) -> f64 {
    let k = spec.extras["tilt_per_offset_deg"];
    let placement = traj.actions[traj.horizon - 1][1];
    k * (theta[0] - placement)
}

pub fn episode_return(spec: &EnvSpec, theta: &[f64], traj: &Trajectory) -> f64 {
    let t = tilt_deg(spec, theta, traj);
    -t * t
}

pub fn headline_metric(spec: &EnvSpec, theta: &[f64], traj: &Trajectory) -> f64 {
    tilt_deg(spec, theta, traj).abs()
}

pub fn success(
    spec: &EnvSpec,
    theta: &[f64],
    traj: &Trajectory,
    thresholds: &SuccessThresholds,
) -> bool {
    headline_metric(spec, theta, traj) <= thresholds.rod_tilt_deg
}
