//! Catalog of parametric toy dynamical systems with seeded, deterministic
//! rollout and replay.
//!
//! The same code serves as the simulator (any parameter vector) and as the
//! stand-in real environment (a hidden true parameter vector). All dynamics
//! follow `s' = f_theta(s, a) + w` with `w ~ N(0, sigma_w^2 I)` drawn from a
//! counter-based stream keyed on `(seed, step)`, so replaying an action
//! sequence under a different parameter vector sees the identical noise.

pub mod ball;
pub mod linear;
pub mod multiregion;
pub mod pointmass;
pub mod rod;

use crate::error::{Error, Result};
use crate::params::{ParamDistribution, ParamVector};
use crate::policy::Policy;
use crate::rng::{self, stream};
use crate::trajectory::Trajectory;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Static description of one environment: dimensions, horizon, noise scale,
/// action box, and model constants (`extras`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvSpec {
    pub env_id: String,
    pub n_s: usize,
    pub n_a: usize,
    pub d: usize,
    pub horizon: usize,
    pub sigma_w: f64,
    pub action_low: Vec<f64>,
    pub action_high: Vec<f64>,
    pub init_state_sampler_id: String,
    pub extras: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EnvKind {
    Linear1d,
    PointmassFriction,
    RodPivot,
    MultiRegion,
}

/// How the trajectory discrepancy weighs state dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscrepancyWeighting {
    /// Plain squared distance.
    Uniform,
    /// Each dimension divided by the real trajectory's per-dimension std
    /// (floored), for states mixing heterogeneous units.
    RealStd,
}

/// Task success thresholds, pre-registered in configs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SuccessThresholds {
    /// rod-pivot: |tilt| in degrees.
    pub rod_tilt_deg: f64,
    /// Ball environments: |final ball position - goal|.
    pub goal_radius: f64,
    /// linear1d: |final state - target|.
    pub linear_terminal_err: f64,
}

impl Default for SuccessThresholds {
    fn default() -> Self {
        Self {
            rod_tilt_deg: 2.0,
            goal_radius: 0.15,
            linear_terminal_err: 0.05,
        }
    }
}

/// Post-hoc rollout analysis used by coverage/visitation studies. Recomputed
/// from the recorded states and actions only, never from parameters.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RolloutStats {
    /// Striker touched the ball at least once (ball environments; for
    /// rod-pivot, any nonzero impulse).
    pub contact: bool,
    pub contact_steps: usize,
    /// Net displacement of the tracked object.
    pub displacement: f64,
    /// The object moved at any point during the episode.
    pub moved: bool,
    /// Patches touched by the ball (multi-region; empty otherwise).
    pub patches_visited: Vec<bool>,
    /// Patches other than the starting one that were visited.
    pub non_start_patches: usize,
}

/// An immutable environment handle: dimensions plus dynamics. Cheap to clone,
/// safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Env {
    spec: EnvSpec,
    kind: EnvKind,
}

/// All registered environment ids.
pub const CATALOG: [&str; 4] = [
    linear::ENV_ID,
    pointmass::ENV_ID,
    rod::ENV_ID,
    multiregion::ENV_ID,
];

impl Env {
    /// Look up an environment by id.
    pub fn from_id(env_id: &str) -> Result<Self> {
        let (kind, spec) = match env_id {
            linear::ENV_ID => (EnvKind::Linear1d, linear::default_spec()),
            pointmass::ENV_ID => (EnvKind::PointmassFriction, pointmass::default_spec()),
            rod::ENV_ID => (EnvKind::RodPivot, rod::default_spec()),
            multiregion::ENV_ID => (EnvKind::MultiRegion, multiregion::default_spec()),
            other => {
                return Err(Error::Config(format!(
                    "unknown env_id '{other}'; known: {}",
                    CATALOG.join(", ")
                )))
            }
        };
        Ok(Self { spec, kind })
    }

    pub fn spec(&self) -> &EnvSpec {
        &self.spec
    }

    pub fn env_id(&self) -> &str {
        &self.spec.env_id
    }

    pub fn with_horizon(mut self, horizon: usize) -> Self {
        assert!(horizon >= 1, "horizon must be >= 1");
        self.spec.horizon = horizon;
        self
    }

    pub fn with_sigma_w(mut self, sigma_w: f64) -> Self {
        assert!(sigma_w >= 0.0, "sigma_w must be >= 0");
        self.spec.sigma_w = sigma_w;
        self
    }

    /// Parameter names and bounds with midpoint values; the starting point
    /// for building concrete parameter vectors.
    pub fn param_template(&self) -> ParamVector {
        let names = match self.kind {
            EnvKind::Linear1d => linear::param_names(),
            EnvKind::PointmassFriction => pointmass::param_names(),
            EnvKind::RodPivot => rod::param_names(),
            EnvKind::MultiRegion => multiregion::param_names(),
        };
        let (lower, upper) = match self.kind {
            EnvKind::Linear1d => linear::param_bounds(),
            EnvKind::PointmassFriction => pointmass::param_bounds(),
            EnvKind::RodPivot => rod::param_bounds(),
            EnvKind::MultiRegion => multiregion::param_bounds(),
        };
        let mid: Vec<f64> = lower
            .iter()
            .zip(&upper)
            .map(|(&lo, &hi)| 0.5 * (lo + hi))
            .collect();
        ParamVector::new(mid, names, lower, upper).expect("catalog template is valid")
    }

    /// Build a parameter vector for this environment from raw values.
    pub fn params_from_values(&self, values: &[f64]) -> Result<ParamVector> {
        let t = self.param_template();
        if values.len() != t.dim() {
            return Err(Error::Config(format!(
                "{} expects {} parameters, got {}",
                self.env_id(),
                t.dim(),
                values.len()
            )));
        }
        ParamVector::new(values.to_vec(), t.names, t.lower, t.upper)
    }

    /// Default prior over parameters, truncated at the catalog bounds.
    pub fn default_prior(&self) -> ParamDistribution {
        let (mean, std) = match self.kind {
            EnvKind::Linear1d => linear::default_prior(),
            EnvKind::PointmassFriction => pointmass::default_prior(),
            EnvKind::RodPivot => rod::default_prior(),
            EnvKind::MultiRegion => multiregion::default_prior(),
        };
        let t = self.param_template();
        ParamDistribution::new(mean, std, t.lower, t.upper).expect("catalog prior is valid")
    }

    pub fn discrepancy_weighting(&self) -> DiscrepancyWeighting {
        match self.kind {
            EnvKind::Linear1d | EnvKind::RodPivot => DiscrepancyWeighting::Uniform,
            EnvKind::PointmassFriction | EnvKind::MultiRegion => DiscrepancyWeighting::RealStd,
        }
    }

    /// Default policy classes (exploration, task) for this environment.
    pub fn default_policy_kinds(&self) -> (crate::policy::PolicyKind, crate::policy::PolicyKind) {
        use crate::policy::PolicyKind::*;
        match self.kind {
            EnvKind::Linear1d | EnvKind::RodPivot => (OpenLoop, OpenLoop),
            EnvKind::PointmassFriction | EnvKind::MultiRegion => (LinearFeedback, LinearFeedback),
        }
    }

    fn clip_action(&self, a: &[f64]) -> Vec<f64> {
        a.iter()
            .enumerate()
            .map(|(j, &x)| x.clamp(self.spec.action_low[j], self.spec.action_high[j]))
            .collect()
    }

    fn check_state(&self, s: &[f64]) -> Result<()> {
        if s.len() != self.spec.n_s {
            return Err(Error::Config(format!(
                "state has {} dims, {} expects {}",
                s.len(),
                self.env_id(),
                self.spec.n_s
            )));
        }
        if s.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain(format!("non-finite state in {}", self.env_id())));
        }
        Ok(())
    }

    fn check_params(&self, theta: &ParamVector) -> Result<()> {
        if theta.dim() != self.spec.d {
            return Err(Error::Config(format!(
                "parameter vector has {} dims, {} expects {}",
                theta.dim(),
                self.env_id(),
                self.spec.d
            )));
        }
        Ok(())
    }

    /// Noiseless nominal dynamics `f_theta(s, a)` with action clipping.
    pub fn nominal_step(&self, s: &[f64], a: &[f64], theta: &ParamVector) -> Result<Vec<f64>> {
        self.check_state(s)?;
        self.check_params(theta)?;
        if a.len() != self.spec.n_a {
            return Err(Error::Config(format!(
                "action has {} dims, {} expects {}",
                a.len(),
                self.env_id(),
                self.spec.n_a
            )));
        }
        let a = self.clip_action(a);
        let th = &theta.values;
        Ok(match self.kind {
            EnvKind::Linear1d => linear::dynamics(s, &a, th),
            EnvKind::PointmassFriction => pointmass::dynamics(&self.spec, s, &a, th),
            EnvKind::RodPivot => rod::dynamics(&self.spec, s, &a, th),
            EnvKind::MultiRegion => multiregion::dynamics(&self.spec, s, &a, th),
        })
    }

    /// One transition `f_theta(s, a) + w` for an explicit noise draw `w`.
    pub fn step(&self, s: &[f64], a: &[f64], theta: &ParamVector, w: &[f64]) -> Result<Vec<f64>> {
        if w.len() != self.spec.n_s {
            return Err(Error::Config(format!(
                "noise draw has {} dims, {} expects {}",
                w.len(),
                self.env_id(),
                self.spec.n_s
            )));
        }
        let mut next = self.nominal_step(s, a, theta)?;
        for (x, wi) in next.iter_mut().zip(w) {
            *x += wi;
        }
        Ok(next)
    }

    /// Deterministic initial state for an episode seed.
    pub fn init_state(&self, seed: u64) -> Vec<f64> {
        match self.kind {
            EnvKind::Linear1d => linear::init_state(),
            EnvKind::RodPivot => rod::init_state(),
            EnvKind::PointmassFriction | EnvKind::MultiRegion => {
                let mut rng = rng::rng_for(seed, stream::INIT_STATE, 0);
                let u: f64 = rng.random_range(-1.0..=1.0);
                match self.kind {
                    EnvKind::PointmassFriction => pointmass::init_state(&self.spec, u),
                    _ => multiregion::init_state(&self.spec, u),
                }
            }
        }
    }

    fn noise(&self, seed: u64, h: usize) -> Vec<f64> {
        if self.spec.sigma_w == 0.0 {
            return vec![0.0; self.spec.n_s];
        }
        rng::noise_draw(seed, h, self.spec.n_s)
            .into_iter()
            .map(|z| self.spec.sigma_w * z)
            .collect()
    }

    /// Roll a policy for the full horizon. A pure function of
    /// `(env, policy, theta, seed)`.
    pub fn rollout(&self, policy: &Policy, theta: &ParamVector, seed: u64) -> Result<Trajectory> {
        if policy.env_id != self.spec.env_id
            || policy.n_s != self.spec.n_s
            || policy.n_a != self.spec.n_a
            || policy.horizon != self.spec.horizon
        {
            return Err(Error::Config(format!(
                "policy ({}, horizon {}, n_s {}, n_a {}) does not match env ({}, horizon {}, n_s {}, n_a {})",
                policy.env_id,
                policy.horizon,
                policy.n_s,
                policy.n_a,
                self.spec.env_id,
                self.spec.horizon,
                self.spec.n_s,
                self.spec.n_a
            )));
        }
        let s1 = self.init_state(seed);
        self.run_open(s1, theta, seed, |h, s| {
            policy.action(h, s, &self.spec.action_low, &self.spec.action_high)
        })
    }

    /// Re-execute a recorded action sequence open-loop from `s1` under
    /// parameter `theta`, with the noise stream keyed by `seed`.
    pub fn replay(
        &self,
        actions: &[Vec<f64>],
        theta: &ParamVector,
        s1: &[f64],
        seed: u64,
    ) -> Result<Trajectory> {
        if actions.len() != self.spec.horizon {
            return Err(Error::Config(format!(
                "replay got {} actions, {} expects horizon {}",
                actions.len(),
                self.env_id(),
                self.spec.horizon
            )));
        }
        self.check_params(theta)?;
        self.check_state(s1)?;
        self.run_open(s1.to_vec(), theta, seed, |h, _| self.clip_action(&actions[h]))
    }

    fn run_open(
        &self,
        s1: Vec<f64>,
        theta: &ParamVector,
        seed: u64,
        mut act: impl FnMut(usize, &[f64]) -> Vec<f64>,
    ) -> Result<Trajectory> {
        let h_max = self.spec.horizon;
        let mut states = Vec::with_capacity(h_max + 1);
        let mut actions = Vec::with_capacity(h_max);
        states.push(s1);
        for h in 0..h_max {
            let s = states[h].clone();
            let a = act(h, &s);
            let w = self.noise(seed, h);
            let next = self.step(&s, &a, theta, &w)?;
            states.push(next);
            actions.push(a);
        }
        Trajectory::new(states, actions, self.spec.env_id.clone(), seed)
    }

    /// Contact/coverage/displacement analysis of a recorded trajectory.
    pub fn stats(&self, traj: &Trajectory) -> RolloutStats {
        match self.kind {
            EnvKind::Linear1d => RolloutStats {
                contact: true,
                contact_steps: traj.horizon,
                displacement: (traj.final_state()[0] - traj.initial_state()[0]).abs(),
                moved: (traj.final_state()[0] - traj.initial_state()[0]).abs() > 1e-9,
                patches_visited: vec![],
                non_start_patches: 0,
            },
            EnvKind::RodPivot => {
                let impulses = traj.actions.iter().filter(|a| a[0].abs() > 1e-9).count();
                let peak = traj
                    .states
                    .iter()
                    .map(|s| s[0].abs())
                    .fold(0.0f64, f64::max);
                RolloutStats {
                    contact: impulses > 0,
                    contact_steps: impulses,
                    displacement: peak,
                    moved: peak > 1e-9,
                    patches_visited: vec![],
                    non_start_patches: 0,
                }
            }
            EnvKind::PointmassFriction | EnvKind::MultiRegion => {
                let world = match self.kind {
                    EnvKind::PointmassFriction => pointmass::world(&self.spec),
                    _ => multiregion::world(&self.spec),
                };
                let mut contact_steps = 0;
                for h in 0..traj.horizon {
                    if ball::contact_fires(&world, &traj.states[h], traj.actions[h][0]) {
                        contact_steps += 1;
                    }
                }
                let displacement = (traj.final_state()[1] - traj.initial_state()[1]).abs();
                let moved = traj.states.iter().any(|s| s[2].abs() > 1e-9) || displacement > 1e-9;
                let (patches_visited, non_start) = if self.kind == EnvKind::MultiRegion {
                    let v = multiregion::patches_visited(&self.spec, traj);
                    let start = multiregion::patch_index(&self.spec, traj.initial_state()[1]);
                    let non_start = v
                        .iter()
                        .enumerate()
                        .filter(|&(i, &vis)| vis && i != start)
                        .count();
                    (v.to_vec(), non_start)
                } else {
                    (vec![], 0)
                };
                RolloutStats {
                    contact: contact_steps > 0,
                    contact_steps,
                    displacement,
                    moved,
                    patches_visited,
                    non_start_patches: non_start,
                }
            }
        }
    }

    /// Episode return of the downstream task under the environment's own
    /// physics parameters (training uses an estimate, evaluation the truth).
    pub fn episode_return(&self, theta: &ParamVector, traj: &Trajectory) -> f64 {
        match self.kind {
            EnvKind::Linear1d => linear::episode_return(&self.spec, traj),
            EnvKind::PointmassFriction => pointmass::episode_return(&self.spec, traj),
            EnvKind::RodPivot => rod::episode_return(&self.spec, &theta.values, traj),
            EnvKind::MultiRegion => multiregion::episode_return(&self.spec, traj),
        }
    }

    /// Headline task metric (|terminal error|, |tilt| in degrees, or distance
    /// to goal), lower is better.
    pub fn headline_metric(&self, theta: &ParamVector, traj: &Trajectory) -> f64 {
        match self.kind {
            EnvKind::Linear1d => linear::headline_metric(&self.spec, traj),
            EnvKind::PointmassFriction => pointmass::headline_metric(&self.spec, traj),
            EnvKind::RodPivot => rod::headline_metric(&self.spec, &theta.values, traj),
            EnvKind::MultiRegion => multiregion::headline_metric(&self.spec, traj),
        }
    }

    pub fn episode_success(
        &self,
        theta: &ParamVector,
        traj: &Trajectory,
        thresholds: &SuccessThresholds,
    ) -> bool {
        match self.kind {
            EnvKind::Linear1d => linear::success(&self.spec, traj, thresholds),
            EnvKind::PointmassFriction => pointmass::success(&self.spec, traj, thresholds),
            EnvKind::RodPivot => rod::success(&self.spec, &theta.values, traj, thresholds),
            EnvKind::MultiRegion => multiregion::success(&self.spec, traj, thresholds),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::policy::PolicyKind;
    use proptest::prelude::*;

    fn open_loop(env: &Env, actions: &[f64]) -> Policy {
        Policy::from_params(
            PolicyKind::OpenLoop,
            env.env_id(),
            env.spec().horizon,
            env.spec().n_s,
            env.spec().n_a,
            actions.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn unknown_env_id_is_config_error() {
        assert!(matches!(Env::from_id("nope"), Err(Error::Config(_))));
    }

    #[test]
    fn non_finite_state_is_domain_error() {
        let env = Env::from_id("linear1d").unwrap();
        let th = env.params_from_values(&[1.0]).unwrap();
        let r = env.nominal_step(&[f64::INFINITY], &[0.5], &th);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn linear1d_nominal_step_examples() {
        let env = Env::from_id("linear1d").unwrap();
        let th = env.params_from_values(&[0.5]).unwrap();
        assert_eq!(env.nominal_step(&[0.0], &[1.0], &th).unwrap(), vec![0.5]);
        let th = env.params_from_values(&[0.9]).unwrap();
        assert_eq!(env.nominal_step(&[2.0], &[0.0], &th).unwrap(), vec![2.0]);
    }

    #[test]
    fn pointmass_stationary_ball_ignores_friction() {
        let env = Env::from_id("pointmass-friction").unwrap();
        let s = vec![0.0, 1.2, 0.0];
        let lo = env.params_from_values(&[0.03]).unwrap();
        let hi = env.params_from_values(&[0.14]).unwrap();
        let a = vec![0.0];
        assert_eq!(
            env.nominal_step(&s, &a, &lo).unwrap(),
            env.nominal_step(&s, &a, &hi).unwrap()
        );
    }

    #[test]
    fn rollout_is_deterministic() {
        let env = Env::from_id("pointmass-friction").unwrap();
        let th = env.params_from_values(&[0.08]).unwrap();
        let pol = Policy::random_uniform(
            env.env_id(),
            env.spec().horizon,
            env.spec().n_s,
            env.spec().n_a,
            &env.spec().action_low,
            &env.spec().action_high,
            5,
        );
        let a = env.rollout(&pol, &th, 99).unwrap();
        let b = env.rollout(&pol, &th, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn linear1d_noiseless_rollout_is_cumulative_sum() {
        let env = Env::from_id("linear1d").unwrap().with_sigma_w(0.0);
        let th = env.params_from_values(&[1.0]).unwrap();
        let pol = open_loop(&env, &[1.0, 1.0, 1.0]);
        let traj = env.rollout(&pol, &th, 0).unwrap();
        let states: Vec<f64> = traj.states.iter().map(|s| s[0]).collect();
        assert_eq!(states, vec![0.0, 1.0, 2.0, 3.0]);
    }

    #[test]
    fn replay_of_own_actions_reproduces_trajectory() {
        let env = Env::from_id("rod-pivot").unwrap();
        let th = env.params_from_values(&[0.2]).unwrap();
        let pol = Policy::random_uniform(
            env.env_id(),
            env.spec().horizon,
            env.spec().n_s,
            env.spec().n_a,
            &env.spec().action_low,
            &env.spec().action_high,
            3,
        );
        let traj = env.rollout(&pol, &th, 17).unwrap();
        let replayed = env
            .replay(&traj.actions, &th, traj.initial_state(), traj.seed)
            .unwrap();
        assert_eq!(traj, replayed);
    }

    #[test]
    fn linear1d_replay_final_state_linear_in_theta() {
        let env = Env::from_id("linear1d")
            .unwrap()
            .with_horizon(2)
            .with_sigma_w(0.0);
        let actions = vec![vec![1.0], vec![1.0]];
        let hi = env.params_from_values(&[0.7]).unwrap();
        let lo = env.params_from_values(&[0.5]).unwrap();
        let t_hi = env.replay(&actions, &hi, &[0.0], 0).unwrap();
        let t_lo = env.replay(&actions, &lo, &[0.0], 0).unwrap();
        let diff = t_hi.final_state()[0] - t_lo.final_state()[0];
        assert!((diff - 0.4).abs() < 1e-12, "diff {diff}");
    }

    #[test]
    fn untouched_ball_replay_identical_for_any_friction() {
        let env = Env::from_id("pointmass-friction").unwrap();
        // Striker runs away from the ball: no contact ever.
        let pol = {
            let h = env.spec().horizon;
            open_loop(&env, &vec![-1.0; h])
        };
        let th_a = env.params_from_values(&[0.03]).unwrap();
        let th_b = env.params_from_values(&[0.14]).unwrap();
        let real = env.rollout(&pol, &th_a, 11).unwrap();
        assert!(!env.stats(&real).contact);
        let re_a = env
            .replay(&real.actions, &th_a, real.initial_state(), real.seed)
            .unwrap();
        let re_b = env
            .replay(&real.actions, &th_b, real.initial_state(), real.seed)
            .unwrap();
        assert_eq!(re_a.states, re_b.states);
    }

    #[test]
    fn linear1d_closed_form_with_noise() {
        let env = Env::from_id("linear1d").unwrap().with_sigma_w(0.3);
        let th = env.params_from_values(&[1.3]).unwrap();
        let pol = open_loop(&env, &[0.5, -1.0, 0.25]);
        let seed = 4242;
        let traj = env.rollout(&pol, &th, seed).unwrap();
        let sum_a: f64 = traj.actions.iter().map(|a| a[0]).sum();
        let sum_w: f64 = (0..traj.horizon)
            .map(|h| 0.3 * crate::rng::noise_draw(seed, h, 1)[0])
            .sum();
        let expect = 1.3 * sum_a + sum_w;
        assert!((traj.final_state()[0] - expect).abs() < 1e-12);
    }

    #[test]
    fn multiregion_patch_coverage_stats() {
        let env = Env::from_id("multi-region").unwrap().with_sigma_w(0.0);
        let h = env.spec().horizon;
        let pol = open_loop(&env, &vec![1.0; h]);
        let th = env.params_from_values(&[0.03, 0.03, 0.03]).unwrap();
        let traj = env.rollout(&pol, &th, 2).unwrap();
        let stats = env.stats(&traj);
        assert!(stats.contact);
        assert!(stats.moved);
        assert_eq!(stats.non_start_patches, 2, "stats: {stats:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn rollout_deterministic_and_matches_replay(
            env_idx in 0usize..4,
            seed in 0u64..500,
            pol_seed in 0u64..500,
        ) {
            let env = Env::from_id(CATALOG[env_idx]).unwrap();
            let th = env.default_prior()
                .sample(&mut crate::rng::rng_for(seed, 0xabc, 0), &env.param_template())
                .unwrap();
            let pol = Policy::random_uniform(
                env.env_id(),
                env.spec().horizon,
                env.spec().n_s,
                env.spec().n_a,
                &env.spec().action_low,
                &env.spec().action_high,
                pol_seed,
            );
            let a = env.rollout(&pol, &th, seed).unwrap();
            let b = env.rollout(&pol, &th, seed).unwrap();
            prop_assert_eq!(&a, &b);
            // Open-loop rollouts replay to themselves with the same seed.
            let r = env.replay(&a.actions, &th, a.initial_state(), a.seed).unwrap();
            prop_assert_eq!(&a.states, &r.states);
        }
    }
}
