//! Shared striker/ball dynamics for the friction environments.
//!
//! One-dimensional track: a kinematic striker (position commanded through a
//! velocity action) and a rolling ball decelerated by friction. State layout
//! is `[striker_x, ball_x, ball_v]`. The striker transfers momentum on
//! overlap with a fixed restitution constant; rolling friction removes
//! `mu * g * dt` of speed per step and clamps through zero.

/// Geometry and contact constants, read from the environment extras.
#[derive(Debug, Clone, Copy)]
pub struct BallWorld {
    pub dt: f64,
    pub gravity: f64,
    pub contact_radius: f64,
    pub restitution: f64,
    pub striker_min: f64,
    pub striker_max: f64,
}

/// Advance `[striker_x, ball_x, ball_v]` one step under friction coefficient
/// `mu_at(ball_x)`. `a` is the commanded striker velocity, already clipped.
pub fn step(world: &BallWorld, s: &[f64], a: f64, mu_at: impl Fn(f64) -> f64) -> Vec<f64> {
    let (striker_x, ball_x, ball_v) = (s[0], s[1], s[2]);

    let new_striker = (striker_x + a * world.dt).clamp(world.striker_min, world.striker_max);
    let (hit, dir) = contact(world, striker_x, new_striker, ball_x, ball_v, a);
    let mut v = ball_v;
    if hit {
        v = (1.0 + world.restitution) * a - world.restitution * ball_v;
    }

    // Rolling friction opposes motion and can stop the ball within the step.
    let decel = mu_at(ball_x) * world.gravity * world.dt;
    v = if v.abs() <= decel {
        0.0
    } else {
        v - v.signum() * decel
    };

    let mut new_ball = ball_x + v * world.dt;
    // Keep the striker from ending up inside (or past) the ball.
    if dir * (new_ball - new_striker) < world.contact_radius {
        new_ball = new_striker + dir * world.contact_radius;
    }

    vec![new_striker, new_ball, v]
}

/// Contact test: the striker ends within the contact radius of the ball or
/// sweeps across it during the step, while closing in on it. Returns the
/// firing decision and the side the ball sits on (+1 = ahead of the striker).
fn contact(
    world: &BallWorld,
    striker_x: f64,
    new_striker: f64,
    ball_x: f64,
    ball_v: f64,
    a: f64,
) -> (bool, f64) {
    let gap_pre = ball_x - striker_x;
    let gap_post = ball_x - new_striker;
    let dir = if gap_pre >= 0.0 { 1.0 } else { -1.0 };
    let overlap = gap_post.abs() <= world.contact_radius || gap_pre * gap_post < 0.0;
    (overlap && (a - ball_v) * dir > 0.0, dir)
}

/// Whether the contact branch fires for `(s, a)`; used for rollout analysis.
/// Mirrors the predicate inside [`step`] exactly.
pub fn contact_fires(world: &BallWorld, s: &[f64], a: f64) -> bool {
    let new_striker = (s[0] + a * world.dt).clamp(world.striker_min, world.striker_max);
    contact(world, s[0], new_striker, s[1], s[2], a).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn world() -> BallWorld {
        BallWorld {
            dt: 0.1,
            gravity: 9.81,
            contact_radius: 0.06,
            restitution: 0.9,
            striker_min: -0.5,
            striker_max: 1.6,
        }
    }

    #[test]
    fn stationary_ball_stays_stationary() {
        let s = vec![0.0, 1.2, 0.0];
        let next = step(&world(), &s, 0.0, |_| 0.3);
        assert_eq!(next, s);
    }

    #[test]
    fn strike_transfers_momentum() {
        let w = world();
        // Striker adjacent to the ball, pushing at full speed.
        let s = vec![1.2 - w.contact_radius, 1.2, 0.0];
        let next = step(&w, &s, 1.0, |_| 0.0);
        assert!((next[2] - 1.9).abs() < 1e-12, "ball_v {}", next[2]);
    }

    #[test]
    fn friction_stops_slow_ball() {
        let w = world();
        let decel = 0.1 * 9.81 * w.dt;
        let s = vec![-0.5, 1.0, decel * 0.5];
        let next = step(&w, &s, 0.0, |_| 0.1);
        assert_eq!(next[2], 0.0);
        assert_eq!(next[1], 1.0);
    }

    #[test]
    fn striker_respects_walls() {
        let w = world();
        let s = vec![1.59, 3.0, 0.0];
        let next = step(&w, &s, 1.0, |_| 0.1);
        assert_eq!(next[0], w.striker_max);
    }

    #[test]
    fn friction_independent_when_ball_at_rest() {
        let w = world();
        let s = vec![0.3, 1.2, 0.0];
        let lo = step(&w, &s, 0.5, |_| 0.02);
        let hi = step(&w, &s, 0.5, |_| 0.15);
        assert_eq!(lo, hi);
    }
}
