//! `pointmass-friction`: strike a ball to a goal under unknown rolling
//! friction. The striker is walled off short of the goal, so the final
//! approach is a free roll whose length depends on the friction coefficient.

use super::ball::BallWorld;
use super::{EnvSpec, SuccessThresholds};
use crate::trajectory::Trajectory;
use std::collections::BTreeMap;

pub const ENV_ID: &str = "pointmass-friction";

pub fn default_spec() -> EnvSpec {
    let mut extras = BTreeMap::new();
    extras.insert("dt".to_string(), 0.1);
    extras.insert("gravity".to_string(), 9.81);
    extras.insert("contact_radius".to_string(), 0.06);
    extras.insert("restitution".to_string(), 0.9);
    extras.insert("striker_min".to_string(), -0.5);
    extras.insert("striker_max".to_string(), 1.6);
    extras.insert("ball_start".to_string(), 1.2);
    extras.insert("ball_jitter".to_string(), 0.15);
    extras.insert("goal_x".to_string(), 2.0);
    extras.insert("goal_radius".to_string(), 0.15);
    EnvSpec {
        env_id: ENV_ID.to_string(),
        n_s: 3,
        n_a: 1,
        d: 1,
        horizon: 60,
        sigma_w: 0.01,
        action_low: vec![-1.0],
        action_high: vec![1.0],
        init_state_sampler_id: "ball_jitter".to_string(),
        extras,
    }
}

pub fn param_names() -> Vec<String> {
    vec!["mu".to_string()]
}

pub fn param_bounds() -> (Vec<f64>, Vec<f64>) {
    (vec![0.02], vec![0.15])
}

pub fn default_prior() -> (Vec<f64>, Vec<f64>) {
    (vec![0.085], vec![0.05])
}

pub fn world(spec: &EnvSpec) -> BallWorld {
    BallWorld {
        dt: spec.extras["dt"],
        gravity: spec.extras["gravity"],
        contact_radius: spec.extras["contact_radius"],
        restitution: spec.extras["restitution"],
        striker_min: spec.extras["striker_min"],
        striker_max: spec.extras["striker_max"],
    }
}

pub fn dynamics(spec: &EnvSpec, s: &[f64], a: &[f64], theta: &[f64]) -> Vec<f64> {
    super::ball::step(&world(spec), s, a[0], |_| theta[0])
}

pub fn init_state(spec: &EnvSpec, jitter_u: f64) -> Vec<f64> {
    let ball = spec.extras["ball_start"] + spec.extras["ball_jitter"] * jitter_u;
    vec![0.0, ball, 0.0]
}

pub fn episode_return(spec: &EnvSpec, traj: &Trajectory) -> f64 {
    let err = traj.final_state()[1] - spec.extras["goal_x"];
    -err * err
}

pub fn headline_metric(spec: &EnvSpec, traj: &Trajectory) -> f64 {
    (traj.final_state()[1] - spec.extras["goal_x"]).abs()
}

pub fn success(spec: &EnvSpec, traj: &Trajectory, thresholds: &SuccessThresholds) -> bool {
    headline_metric(spec, traj) <= thresholds.goal_radius
}
