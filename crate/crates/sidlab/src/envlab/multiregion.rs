//! `multi-region`: a ball crossing three friction patches with independent
//! coefficients. The ball starts in patch 1 and the striker is confined
//! there, so patches 2 and 3 only influence (and only inform about) episodes
//! in which the ball is driven across their boundaries.

use super::ball::BallWorld;
use super::{EnvSpec, SuccessThresholds};
use crate::trajectory::Trajectory;
use std::collections::BTreeMap;

pub const ENV_ID: &str = "multi-region";

pub fn default_spec() -> EnvSpec {
    let mut extras = BTreeMap::new();
    extras.insert("dt".to_string(), 0.1);
    extras.insert("gravity".to_string(), 9.81);
    extras.insert("contact_radius".to_string(), 0.06);
    extras.insert("restitution".to_string(), 0.95);
    extras.insert("striker_min".to_string(), -0.5);
    extras.insert("striker_max".to_string(), 0.95);
    extras.insert("ball_start".to_string(), 0.5);
    extras.insert("ball_jitter".to_string(), 0.1);
    extras.insert("patch1_end".to_string(), 1.0);
    extras.insert("patch2_end".to_string(), 2.0);
    extras.insert("goal_x".to_string(), 2.6);
    extras.insert("goal_radius".to_string(), 0.15);
    EnvSpec {
        env_id: ENV_ID.to_string(),
        n_s: 3,
        n_a: 1,
        d: 3,
        horizon: 80,
        sigma_w: 0.01,
        action_low: vec![-1.0],
        action_high: vec![1.0],
        init_state_sampler_id: "ball_jitter".to_string(),
        extras,
    }
}

pub fn param_names() -> Vec<String> {
    vec!["mu1".to_string(), "mu2".to_string(), "mu3".to_string()]
}

pub fn param_bounds() -> (Vec<f64>, Vec<f64>) {
    (vec![0.02; 3], vec![0.10; 3])
}

pub fn default_prior() -> (Vec<f64>, Vec<f64>) {
    (vec![0.06; 3], vec![0.03; 3])
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

/// Which patch a ball position belongs to (0-based).
pub fn patch_index(spec: &EnvSpec, x: f64) -> usize {
    if x < spec.extras["patch1_end"] {
        0
    } else if x < spec.extras["patch2_end"] {
        1
    } else {
        2
    }
}

pub fn dynamics(spec: &EnvSpec, s: &[f64], a: &[f64], theta: &[f64]) -> Vec<f64> {
    super::ball::step(&world(spec), s, a[0], |x| theta[patch_index(spec, x)])
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

/// Patches touched by the ball anywhere along the trajectory.
pub fn patches_visited(spec: &EnvSpec, traj: &Trajectory) -> [bool; 3] {
    let mut visited = [false; 3];
    for s in &traj.states {
        visited[patch_index(spec, s[1])] = true;
    }
    visited
}
