//! Driving-field description: lab-frame laser/undulator configuration,
//! its rest-frame plane-wave equivalent, and regime validation.
//!
//! The rest-frame field is a plane wave travelling along -x with electric
//! field along z and magnetic field along y:
//!
//! ```text
//! E(t, x) = ẑ E0 env(t + x) cos(ω (t + x) + φ_c)
//! B(t, x) = ŷ E0 env(t + x) cos(ω (t + x) + φ_c)
//! ```
//!
//! An undulator is mapped to the same picture as an equivalent
//! counter-propagating wave with a0 = K; the static-field lab geometry is
//! not simulated separately.

use crate::constants::{
    self, convert, Unit, BOHR_MAGNETON_J_T, C_M_S, ELECTRON_MASS_EV, EV_J, HBARC_EV_M,
};
use crate::error::{CoreError, Result};
use crate::geometry::{Vec3, Y_HAT, Z_HAT};

/// Pulse envelope applied to the carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeShape {
    /// exp(-η² / (2 T²)) with T the 1/e field half-width.
    Gaussian,
    /// 1 for |η| <= T, 0 outside.
    Rectangular,
}

/// What drives the electron in the laboratory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldKind {
    Laser {
        /// Photon energy in the lab, eV.
        photon_energy_ev: f64,
        /// Intensity in the lab, W/cm².
        intensity_w_cm2: f64,
        /// Envelope half-width in carrier cycles.
        halfwidth_cycles: f64,
        /// Electron beam against the laser (true) or along it (false).
        counter_propagating: bool,
    },
    Undulator {
        /// Undulator period, m.
        period_m: f64,
        /// Normalized amplitude; plays the role of a0.
        k_factor: f64,
        /// Number of periods traversed.
        n_periods: f64,
    },
}

/// Lab-frame description of the scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabFieldConfig {
    pub kind: FieldKind,
    /// Electron boost factor, >= 1.
    pub gamma: f64,
    pub envelope: EnvelopeShape,
    /// Carrier phase at the envelope peak, radians (0 = cosine).
    pub carrier_phase: f64,
}

impl LabFieldConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.gamma >= 1.0) {
            return Err(CoreError::Domain(format!(
                "gamma must be >= 1, got {}",
                self.gamma
            )));
        }
        match self.kind {
            FieldKind::Laser {
                photon_energy_ev,
                intensity_w_cm2,
                halfwidth_cycles,
                ..
            } => {
                if photon_energy_ev <= 0.0 {
                    return Err(CoreError::Domain("photon energy must be > 0".into()));
                }
                if intensity_w_cm2 <= 0.0 {
                    return Err(CoreError::Domain("intensity must be > 0".into()));
                }
                if halfwidth_cycles < 1.0 {
                    return Err(CoreError::Domain(
                        "envelope half-width must be at least one cycle".into(),
                    ));
                }
            }
            FieldKind::Undulator {
                period_m,
                k_factor,
                n_periods,
            } => {
                if period_m <= 0.0 {
                    return Err(CoreError::Domain("undulator period must be > 0".into()));
                }
                if k_factor <= 0.0 {
                    return Err(CoreError::Domain("K factor must be > 0".into()));
                }
                if n_periods < 1.0 {
                    return Err(CoreError::Domain("need at least one undulator period".into()));
                }
            }
        }
        Ok(())
    }
}

/// Velocity fraction β for a boost factor, in a cancellation-safe split.
///
/// `beta` itself is fine from sqrt((γ-1)(γ+1))/γ; the dangerous quantity
/// 1-β is returned through the exact identity 1-β = 1/(γ²(1+β)).
pub fn beta_of_gamma(gamma: f64) -> f64 {
    ((gamma - 1.0) * (gamma + 1.0)).sqrt() / gamma
}

/// 1 - β without cancellation, valid for any γ >= 1.
pub fn one_minus_beta(gamma: f64) -> f64 {
    1.0 / (gamma * gamma * (1.0 + beta_of_gamma(gamma)))
}

/// Rest-frame equivalent plane wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestFrameField {
    /// Electric amplitude, eV² (natural units).
    pub e0: f64,
    /// Angular frequency, eV.
    pub omega: f64,
    /// Envelope half-width, eV⁻¹ (= cycles · 2π/ω).
    pub t_halfwidth: f64,
    pub envelope: EnvelopeShape,
    /// Carrier phase at η = 0, radians.
    pub carrier_phase: f64,
    a0: f64,
}

impl RestFrameField {
    /// Build from amplitude, checking the redundant a0 invariant.
    pub fn new(
        e0: f64,
        omega: f64,
        t_halfwidth: f64,
        envelope: EnvelopeShape,
        carrier_phase: f64,
    ) -> Result<RestFrameField> {
        if omega <= 0.0 {
            return Err(CoreError::Domain(format!("omega must be > 0, got {omega}")));
        }
        if e0 < 0.0 {
            return Err(CoreError::Domain("field amplitude must be >= 0".into()));
        }
        if t_halfwidth <= 0.0 {
            return Err(CoreError::Domain("envelope half-width must be > 0".into()));
        }
        let a0 = constants::coupling_q() * e0 / (ELECTRON_MASS_EV * omega);
        Ok(RestFrameField {
            e0,
            omega,
            t_halfwidth,
            envelope,
            carrier_phase,
            a0,
        })
    }

    /// Build directly from the dimensionless strength a0.
    pub fn from_a0(
        a0: f64,
        omega: f64,
        halfwidth_cycles: f64,
        envelope: EnvelopeShape,
    ) -> Result<RestFrameField> {
        let e0 = a0 * ELECTRON_MASS_EV * omega / constants::coupling_q();
        let t_halfwidth = halfwidth_cycles * std::f64::consts::TAU / omega;
        RestFrameField::new(e0, omega, t_halfwidth, envelope, 0.0)
    }

    /// Dimensionless strength a0 = q E0 / (m ω).
    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// Envelope half-width in carrier cycles.
    pub fn halfwidth_cycles(&self) -> f64 {
        self.t_halfwidth * self.omega / std::f64::consts::TAU
    }

    /// Envelope value at wave phase-time η = t + x.
    pub fn envelope_at(&self, eta: f64) -> f64 {
        match self.envelope {
            EnvelopeShape::Gaussian => {
                let u = eta / self.t_halfwidth;
                (-0.5 * u * u).exp()
            }
            EnvelopeShape::Rectangular => {
                if eta.abs() <= self.t_halfwidth {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Half-width of the span needed for the envelope to fall below
    /// `threshold` of its peak (the full window for a rectangular pulse).
    pub fn support_halfwidth(&self, threshold: f64) -> f64 {
        match self.envelope {
            EnvelopeShape::Gaussian => self.t_halfwidth * (2.0 * (1.0 / threshold).ln()).sqrt(),
            EnvelopeShape::Rectangular => self.t_halfwidth,
        }
    }

    /// Electric and magnetic field at time `t`, position `x` along the
    /// boost axis. The wave moves along -x, so everything depends on
    /// η = t + x only.
    pub fn e_b_at(&self, t: f64, x: f64) -> (Vec3, Vec3) {
        let eta = t + x;
        let amp = self.e0 * self.envelope_at(eta) * (self.omega * eta + self.carrier_phase).cos();
        (Z_HAT * amp, Y_HAT * amp)
    }
}

/// Map the lab description onto the rest-frame plane wave.
///
/// Laser: ω and E0 both scale by the Doppler factor γ(1+β) (or γ(1-β)
/// co-propagating), which leaves a0 invariant. Undulator: ω = γβ·2πc/λ_u
/// and a0 = K.
pub fn rest_frame_equivalent(cfg: &LabFieldConfig) -> Result<RestFrameField> {
    cfg.validate()?;
    let gamma = cfg.gamma;
    let beta = beta_of_gamma(gamma);
    match cfg.kind {
        FieldKind::Laser {
            photon_energy_ev,
            intensity_w_cm2,
            halfwidth_cycles,
            counter_propagating,
        } => {
            let doppler = if counter_propagating {
                gamma * (1.0 + beta)
            } else {
                gamma * one_minus_beta(gamma)
            };
            let omega = doppler * photon_energy_ev;
            let e_lab_v_m = convert(intensity_w_cm2, Unit::WattsPerCm2, Unit::VoltsPerMeter)?;
            let e_lab = convert(e_lab_v_m, Unit::VoltsPerMeter, Unit::NaturalFieldEv2)?;
            let e0 = doppler * e_lab;
            let t_halfwidth = halfwidth_cycles * std::f64::consts::TAU / omega;
            RestFrameField::new(e0, omega, t_halfwidth, cfg.envelope, cfg.carrier_phase)
        }
        FieldKind::Undulator {
            period_m,
            k_factor,
            n_periods,
        } => {
            let period_nat = period_m / HBARC_EV_M;
            let omega = gamma * beta * std::f64::consts::TAU / period_nat;
            if omega <= 0.0 {
                return Err(CoreError::Domain(
                    "undulator needs gamma > 1 for a moving electron".into(),
                ));
            }
            let e0 = k_factor * ELECTRON_MASS_EV * omega / constants::coupling_q();
            let t_halfwidth = n_periods * std::f64::consts::TAU / omega;
            RestFrameField::new(e0, omega, t_halfwidth, cfg.envelope, cfg.carrier_phase)
        }
    }
}

/// Severity of a regime-condition ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    Ok,
    Marginal,
    Violated,
}

impl Flag {
    fn of_ratio(r: f64) -> Flag {
        if r < 0.1 {
            Flag::Ok
        } else if r < 1.0 {
            Flag::Marginal
        } else {
            Flag::Violated
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Flag::Ok => "ok",
            Flag::Marginal => "marginal",
            Flag::Violated => "violated",
        }
    }
}

/// One checked ratio in the validity report.
#[derive(Debug, Clone)]
pub struct ValidityEntry {
    pub name: &'static str,
    pub value: f64,
    pub flag: Flag,
}

/// Regime report: never an error, only flags.
#[derive(Debug, Clone)]
pub struct ValidityReport {
    pub a0: f64,
    pub entries: Vec<ValidityEntry>,
    /// qE >= ωm: pair probability saturates, higher harmonics grow.
    pub relativistic_saturation: bool,
}

impl ValidityReport {
    pub fn worst(&self) -> Flag {
        let mut worst = Flag::Ok;
        for e in &self.entries {
            worst = match (worst, e.flag) {
                (_, Flag::Violated) | (Flag::Violated, _) => Flag::Violated,
                (_, Flag::Marginal) | (Flag::Marginal, _) => Flag::Marginal,
                _ => Flag::Ok,
            };
        }
        worst
    }

    pub fn entry(&self, name: &str) -> Option<&ValidityEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Check the regime conditions behind the rest-frame treatment:
/// a0² = v_max² (nonrelativistic quiver), ω/m (photon energy far below the
/// mass), and the spin ratio μ_e B/ω computed through SI conversions.
pub fn validate(field: &RestFrameField) -> ValidityReport {
    let a0 = field.a0();
    let a0_sq = a0 * a0;
    let omega_over_m = field.omega / ELECTRON_MASS_EV;

    // μ_e B / ω via SI: natural field -> V/m -> tesla -> eV.
    let b_tesla = field.e0 * constants::volts_per_meter_per_ev2() / C_M_S;
    let mu_b_ev = BOHR_MAGNETON_J_T * b_tesla / EV_J;
    let spin_ratio = mu_b_ev / field.omega;

    let entries = vec![
        ValidityEntry {
            name: "a0",
            value: a0,
            flag: Flag::of_ratio(a0),
        },
        ValidityEntry {
            name: "a0_squared",
            value: a0_sq,
            flag: Flag::of_ratio(a0_sq),
        },
        ValidityEntry {
            name: "omega_over_m",
            value: omega_over_m,
            flag: Flag::of_ratio(omega_over_m),
        },
        ValidityEntry {
            name: "spin_ratio",
            value: spin_ratio,
            flag: Flag::of_ratio(spin_ratio),
        },
        ValidityEntry {
            name: "v_max_squared",
            value: a0_sq,
            flag: Flag::of_ratio(a0_sq),
        },
    ];
    ValidityReport {
        a0,
        entries,
        relativistic_saturation: a0 >= 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::schwinger_field_ev2;

    pub fn fig1_lab_config() -> LabFieldConfig {
        LabFieldConfig {
            kind: FieldKind::Laser {
                photon_energy_ev: 2.5,
                intensity_w_cm2: 1.0e18,
                halfwidth_cycles: 100.0,
                counter_propagating: true,
            },
            gamma: 300.0,
            envelope: EnvelopeShape::Gaussian,
            carrier_phase: 0.0,
        }
    }

    #[test]
    fn laser_boost_hits_kev_scale() {
        let field = rest_frame_equivalent(&fig1_lab_config()).unwrap();
        let beta = beta_of_gamma(300.0);
        let oracle = 300.0 * (1.0 + beta) * 2.5;
        assert!((field.omega / oracle - 1.0).abs() < 1e-12);
        assert!((field.omega - 1500.0).abs() / 1500.0 < 1e-4);
    }

    #[test]
    fn fig1_field_sits_near_thousandth_of_schwinger() {
        let field = rest_frame_equivalent(&fig1_lab_config()).unwrap();
        let ratio = schwinger_field_ev2() / field.e0;
        assert!(ratio > 500.0 && ratio < 2000.0, "E_S/E0 = {ratio}");
    }

    #[test]
    fn undulator_frequency_order_ev() {
        let cfg = LabFieldConfig {
            kind: FieldKind::Undulator {
                period_m: 0.01,
                k_factor: 0.9,
                n_periods: 100.0,
            },
            gamma: 4000.0,
            envelope: EnvelopeShape::Rectangular,
            carrier_phase: 0.0,
        };
        let field = rest_frame_equivalent(&cfg).unwrap();
        // oracle: γ β 2π ħc / λ_u
        let oracle = 4000.0 * beta_of_gamma(4000.0) * std::f64::consts::TAU * HBARC_EV_M / 0.01;
        assert!((field.omega / oracle - 1.0).abs() < 1e-12);
        assert!(field.omega > 0.1 && field.omega < 10.0);
        assert!((field.a0() - 0.9).abs() < 1e-12);
    }

    #[test]
    fn identity_boost_is_identity() {
        let cfg = LabFieldConfig {
            kind: FieldKind::Laser {
                photon_energy_ev: 2.5,
                intensity_w_cm2: 1.0e15,
                halfwidth_cycles: 10.0,
                counter_propagating: true,
            },
            gamma: 1.0,
            envelope: EnvelopeShape::Gaussian,
            carrier_phase: 0.0,
        };
        let field = rest_frame_equivalent(&cfg).unwrap();
        assert_eq!(field.omega, 2.5);
    }

    #[test]
    fn gamma_below_one_rejected() {
        let mut cfg = fig1_lab_config();
        cfg.gamma = 0.5;
        assert!(rest_frame_equivalent(&cfg).is_err());
    }

    #[test]
    fn a0_is_boost_invariant_for_lasers() {
        let cfg = fig1_lab_config();
        let field = rest_frame_equivalent(&cfg).unwrap();
        // Lab-frame a0 from lab field and lab frequency directly.
        let e_lab_v_m = convert(1.0e18, Unit::WattsPerCm2, Unit::VoltsPerMeter).unwrap();
        let e_lab = convert(e_lab_v_m, Unit::VoltsPerMeter, Unit::NaturalFieldEv2).unwrap();
        let a0_lab = constants::coupling_q() * e_lab / (ELECTRON_MASS_EV * 2.5);
        assert!((a0_lab / field.a0() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rest_frame_omega_monotone_in_gamma() {
        let mut prev = 0.0;
        for gamma in [1.0, 2.0, 10.0, 100.0, 1000.0, 20000.0] {
            let mut cfg = fig1_lab_config();
            cfg.gamma = gamma;
            let f = rest_frame_equivalent(&cfg).unwrap();
            assert!(f.omega > prev);
            prev = f.omega;
        }
        let mut prev = 0.0;
        for gamma in [1.5, 2.0, 10.0, 100.0, 4000.0] {
            let cfg = LabFieldConfig {
                kind: FieldKind::Undulator {
                    period_m: 0.01,
                    k_factor: 0.5,
                    n_periods: 10.0,
                },
                gamma,
                envelope: EnvelopeShape::Rectangular,
                carrier_phase: 0.0,
            };
            let f = rest_frame_equivalent(&cfg).unwrap();
            assert!(f.omega > prev);
            prev = f.omega;
        }
    }

    #[test]
    fn validity_fig1_quiver_is_marginal() {
        let field = rest_frame_equivalent(&fig1_lab_config()).unwrap();
        let report = validate(&field);
        let v2 = report.entry("v_max_squared").unwrap();
        assert_eq!(v2.flag, Flag::Marginal);
        // caption-level value ~1/9; intensity 1e18 gives ~0.18
        assert!(v2.value > 1.0 / 18.0 && v2.value < 2.0 / 9.0);
        assert!(!report.relativistic_saturation);
    }

    #[test]
    fn validity_zero_field_all_ok() {
        let field = RestFrameField::new(0.0, 1500.0, 0.4, EnvelopeShape::Gaussian, 0.0).unwrap();
        let report = validate(&field);
        assert_eq!(report.worst(), Flag::Ok);
        for name in ["a0", "a0_squared", "spin_ratio", "v_max_squared"] {
            assert_eq!(report.entry(name).unwrap().value, 0.0);
        }
    }

    #[test]
    fn validity_undulator_k09_marginal() {
        let cfg = LabFieldConfig {
            kind: FieldKind::Undulator {
                period_m: 0.01,
                k_factor: 0.9,
                n_periods: 100.0,
            },
            gamma: 4000.0,
            envelope: EnvelopeShape::Rectangular,
            carrier_phase: 0.0,
        };
        let field = rest_frame_equivalent(&cfg).unwrap();
        let report = validate(&field);
        assert!(report.a0 < 1.0);
        assert_eq!(report.entry("a0").unwrap().flag, Flag::Marginal);
    }

    #[test]
    fn validity_flags_monotone_in_field() {
        let rank = |f: Flag| match f {
            Flag::Ok => 0,
            Flag::Marginal => 1,
            Flag::Violated => 2,
        };
        let mut prev = -1i32;
        for scale in [0.0, 0.01, 0.3, 1.0, 3.0] {
            let e0 = scale * schwinger_field_ev2() / 1000.0;
            let field =
                RestFrameField::new(e0, 1500.0, 0.4, EnvelopeShape::Gaussian, 0.0).unwrap();
            let r = rank(validate(&field).entry("a0_squared").unwrap().flag) as i32;
            assert!(r >= prev);
            prev = r;
        }
    }

    #[test]
    fn a0_invariant_stored_consistently() {
        let field = RestFrameField::new(1.0e9, 1500.0, 0.4, EnvelopeShape::Gaussian, 0.0).unwrap();
        let recomputed = constants::coupling_q() * field.e0 / (ELECTRON_MASS_EV * field.omega);
        assert!((field.a0() / recomputed - 1.0).abs() < 1e-12);
    }

    #[test]
    fn envelope_shapes() {
        let g = RestFrameField::new(1.0, 1.0, 2.0, EnvelopeShape::Gaussian, 0.0).unwrap();
        assert!((g.envelope_at(0.0) - 1.0).abs() < 1e-15);
        assert!((g.envelope_at(2.0) - (-0.5f64).exp()).abs() < 1e-15);
        let r = RestFrameField::new(1.0, 1.0, 2.0, EnvelopeShape::Rectangular, 0.0).unwrap();
        assert_eq!(r.envelope_at(1.999), 1.0);
        assert_eq!(r.envelope_at(2.001), 0.0);
        // support half-widths
        assert!(g.support_halfwidth(1e-6) > 5.0 * g.t_halfwidth);
        assert_eq!(r.support_halfwidth(1e-6), 2.0);
    }
}
