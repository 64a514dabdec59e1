//! Analytic nonrelativistic quiver solution.

use super::{MethodTag, Trajectory, TrajectoryMethod};
use crate::error::{CoreError, Result};
use crate::fields::RestFrameField;
use crate::geometry::Vec3;

/// Quivering motion z(t) = (q E0 / (m ω²)) env(t) cos(ωt + φ_c), x = y = 0.
///
/// The velocity is the derivative of the carrier with the envelope treated
/// as slowly varying (the envelope derivative is neglected).
pub fn analytic_quiver(
    field: &RestFrameField,
    t_span: (f64, f64),
    n_samples: usize,
) -> Result<Trajectory> {
    if field.omega == 0.0 {
        return Err(CoreError::Domain("quiver amplitude diverges at omega = 0".into()));
    }
    if n_samples < 2 {
        return Err(CoreError::InvalidArgument("need at least 2 samples".into()));
    }
    let (t0, t1) = t_span;
    if !(t1 > t0) {
        return Err(CoreError::InvalidArgument("empty time span".into()));
    }
    let dt = (t1 - t0) / (n_samples - 1) as f64;
    let amp = field.a0() / field.omega;
    let mut pos = Vec::with_capacity(n_samples);
    let mut vel = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let t = t0 + dt * i as f64;
        let env = field.envelope_at(t);
        let phase = field.omega * t + field.carrier_phase;
        pos.push(Vec3::new(0.0, 0.0, amp * env * phase.cos()));
        vel.push(Vec3::new(0.0, 0.0, -field.a0() * env * phase.sin()));
    }
    let env_ends = field.envelope_at(t0).max(field.envelope_at(t1));
    Trajectory::new(t0, dt, pos, vel, MethodTag::Analytic, dt, 0.0, env_ends)
}

/// Registry entry for the analytic path.
pub struct AnalyticQuiver;

impl TrajectoryMethod for AnalyticQuiver {
    fn name(&self) -> &'static str {
        "analytic"
    }

    fn compute(
        &self,
        field: &RestFrameField,
        t_span: (f64, f64),
        n_samples: usize,
    ) -> Result<Trajectory> {
        analytic_quiver(field, t_span, n_samples)
    }
}
