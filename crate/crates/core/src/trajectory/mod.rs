//! Classical electron paths in the rest-frame field: the analytic
//! nonrelativistic quiver and the full relativistic numerical trajectory
//! with the magnetic force included.

mod analytic;
mod rk4;

pub use analytic::{analytic_quiver, AnalyticQuiver};
pub use rk4::{
    integrate_fixed_steps, integrate_trajectory, integrate_trajectory_raw, plane_wave_invariant,
    RelativisticRk4,
};

use crate::error::{CoreError, Result};
use crate::fields::RestFrameField;
use crate::geometry::Vec3;
use std::io::Write;

/// How a trajectory was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodTag {
    Analytic,
    RelativisticNumeric,
}

impl MethodTag {
    pub fn label(self) -> &'static str {
        match self {
            MethodTag::Analytic => "analytic",
            MethodTag::RelativisticNumeric => "relativistic-numeric",
        }
    }
}

/// Time-sampled electron path on a uniform grid (natural units).
///
/// The grid is stored as (t0, dt) so uniform spacing holds exactly;
/// `|v| < 1` at every sample is enforced at construction.
#[derive(Debug, Clone)]
pub struct Trajectory {
    t0: f64,
    dt: f64,
    pub pos: Vec<Vec3>,
    pub vel: Vec<Vec3>,
    pub method: MethodTag,
    /// Integrator step actually used (equals `dt` for analytic paths).
    pub step: f64,
    /// Residual reached by the step-refinement loop (0 for analytic).
    pub tol_achieved: f64,
    /// Envelope value at the span ends relative to the peak, used to
    /// check that amplitude integrals cover the pulse.
    pub envelope_at_ends: f64,
}

impl Trajectory {
    pub(crate) fn new(
        t0: f64,
        dt: f64,
        pos: Vec<Vec3>,
        vel: Vec<Vec3>,
        method: MethodTag,
        step: f64,
        tol_achieved: f64,
        envelope_at_ends: f64,
    ) -> Result<Trajectory> {
        if pos.len() != vel.len() || pos.len() < 2 {
            return Err(CoreError::InvalidArgument(
                "trajectory needs matching position/velocity arrays with >= 2 samples".into(),
            ));
        }
        if !(dt > 0.0) {
            return Err(CoreError::InvalidArgument("time grid must be increasing".into()));
        }
        for v in &vel {
            if v.norm_sq() >= 1.0 {
                return Err(CoreError::Domain(format!(
                    "superluminal velocity sample |v| = {}",
                    v.norm()
                )));
            }
        }
        Ok(Trajectory {
            t0,
            dt,
            pos,
            vel,
            method,
            step,
            tol_achieved,
            envelope_at_ends,
        })
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    pub fn t(&self, i: usize) -> f64 {
        self.t0 + self.dt * i as f64
    }

    pub fn t_start(&self) -> f64 {
        self.t0
    }

    pub fn t_end(&self) -> f64 {
        self.t(self.len() - 1)
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.t(i))
    }

    /// Largest speed along the path.
    pub fn v_max(&self) -> f64 {
        self.vel
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    /// CSV export: t,x,y,z,vx,vy,vz at 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "t,x,y,z,vx,vy,vz")?;
        for i in 0..self.len() {
            let r = self.pos[i];
            let v = self.vel[i];
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                self.t(i),
                r.x,
                r.y,
                r.z,
                v.x,
                v.y,
                v.z
            )?;
        }
        Ok(())
    }
}

/// A way of producing a trajectory, selectable by name at runtime.
pub trait TrajectoryMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn compute(
        &self,
        field: &RestFrameField,
        t_span: (f64, f64),
        n_samples: usize,
    ) -> Result<Trajectory>;
}

/// All registered trajectory methods.
pub fn method_registry(tol: f64) -> Vec<Box<dyn TrajectoryMethod>> {
    vec![
        Box::new(AnalyticQuiver),
        Box::new(RelativisticRk4 { tol }),
    ]
}

/// Look a method up by its registered name.
pub fn method_by_name(name: &str, tol: f64) -> Option<Box<dyn TrajectoryMethod>> {
    method_registry(tol).into_iter().find(|m| m.name() == name)
}
