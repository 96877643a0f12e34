//! Desk-scale laboratory for information-driven exploration, trajectory-based
//! system identification, and zero-shot policy transfer on a catalog of
//! parametric toy dynamical systems.
//!
//! The pipeline, per seed: train an exploration policy in simulation that
//! maximizes the expected Fisher information about the unknown physics
//! parameters, roll it out for a single episode on a held-out "real"
//! environment, fit the parameters by minimizing replay discrepancy, train
//! the downstream task policy on the identified simulator, and evaluate it
//! zero-shot against the real parameters.

pub mod cem;
pub mod control;
pub mod envlab;
pub mod error;
pub mod explore;
pub mod fisher;
pub mod harness;
pub mod params;
pub mod policy;
pub mod rng;
pub mod sysid;
pub mod trajectory;

pub use envlab::{Env, EnvSpec, SuccessThresholds};
pub use error::{Error, Result};
pub use params::{ParamDistribution, ParamVector};
pub use policy::{Policy, PolicyKind};
pub use trajectory::Trajectory;
