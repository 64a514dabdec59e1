//! Physical constants, the natural-unit system, and unit conversions.
//!
//! Everything downstream works in natural units `ħ = c = ε₀ = μ₀ = 1`
//! with energies in eV: lengths and times carry eV⁻¹, electric and
//! magnetic fields carry eV². The constants below are frozen
//! (CODATA-2018 values, 10 significant digits) so that tests pin against
//! this table rather than live physics data. SI values enter only through
//! [`convert`] and the few explicitly SI-named helpers.

use crate::error::{CoreError, Result};

/// Electron rest energy, eV. Frozen project value.
pub const ELECTRON_MASS_EV: f64 = 5.110e5;

/// Fine-structure constant.
pub const ALPHA_QED: f64 = 7.297352569e-3;

/// Reduced Planck constant, J s.
pub const HBAR_JS: f64 = 1.054571817e-34;

/// Reduced Planck constant, eV s.
pub const HBAR_EVS: f64 = 6.582119569e-16;

/// Speed of light, m/s.
pub const C_M_S: f64 = 2.997924580e8;

/// Boltzmann constant, J/K.
pub const BOLTZMANN_J_K: f64 = 1.380649e-23;

/// Boltzmann constant, eV/K.
pub const BOLTZMANN_EV_K: f64 = 8.617333262e-5;

/// Vacuum permittivity, F/m.
pub const EPSILON0_F_M: f64 = 8.854187813e-12;

/// Elementary charge, C (also the eV -> J factor).
pub const EV_J: f64 = 1.602176634e-19;

/// Bohr magneton, J/T.
pub const BOHR_MAGNETON_J_T: f64 = 9.274010078e-24;

/// ħc, eV m.
pub const HBARC_EV_M: f64 = 1.973269804e-7;

/// Dimensionless coupling q = sqrt(4π α); q²/(4π) = α identically.
pub fn coupling_q() -> f64 {
    (4.0 * std::f64::consts::PI * ALPHA_QED).sqrt()
}

/// SI field (V/m) carried by one natural field unit (eV²).
///
/// Derived by equating the force q·E (natural) with e·E_SI: one eV² of
/// force is (eV→J)²/(ħc) newtons.
pub fn volts_per_meter_per_ev2() -> f64 {
    coupling_q() * EV_J / (HBAR_JS * C_M_S)
}

/// Bundle of the frozen constants for report output.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    pub electron_mass_ev: f64,
    pub alpha_qed: f64,
    pub coupling_q: f64,
    pub hbar_js: f64,
    pub c_m_s: f64,
    pub boltzmann_j_k: f64,
    pub bohr_magneton_j_t: f64,
    pub epsilon0_f_m: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants {
            electron_mass_ev: ELECTRON_MASS_EV,
            alpha_qed: ALPHA_QED,
            coupling_q: coupling_q(),
            hbar_js: HBAR_JS,
            c_m_s: C_M_S,
            boltzmann_j_k: BOLTZMANN_J_K,
            bohr_magneton_j_t: BOHR_MAGNETON_J_T,
            epsilon0_f_m: EPSILON0_F_M,
        }
    }
}

/// Temperature seen by an observer with proper acceleration `a` (SI m/s²),
/// in kelvin: T = ħ a / (2π k_B c).
pub fn unruh_temperature(accel_m_s2: f64) -> Result<f64> {
    if accel_m_s2 < 0.0 {
        return Err(CoreError::Domain(format!(
            "proper acceleration must be non-negative, got {accel_m_s2}"
        )));
    }
    Ok(HBAR_JS * accel_m_s2 / (2.0 * std::f64::consts::PI * BOLTZMANN_J_K * C_M_S))
}

/// Critical field m²/q in natural units (eV²).
pub fn schwinger_field_ev2() -> f64 {
    ELECTRON_MASS_EV * ELECTRON_MASS_EV / coupling_q()
}

/// Critical field in SI V/m (≈ 1.32e18).
pub fn schwinger_field_v_per_m() -> f64 {
    schwinger_field_ev2() * volts_per_meter_per_ev2()
}

/// Units supported by [`convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    /// Intensity, W/cm².
    WattsPerCm2,
    /// Electric field, V/m.
    VoltsPerMeter,
    /// Energy or angular frequency, eV.
    ElectronVolts,
    /// Angular frequency, rad/s.
    RadiansPerSecond,
    /// Electric/magnetic field in natural units, eV².
    NaturalFieldEv2,
    /// Temperature, K.
    Kelvin,
    /// Length, m.
    Meters,
    /// Length/time in natural units, eV⁻¹.
    InverseElectronVolts,
}

impl Unit {
    pub fn name(self) -> &'static str {
        match self {
            Unit::WattsPerCm2 => "W/cm^2",
            Unit::VoltsPerMeter => "V/m",
            Unit::ElectronVolts => "eV",
            Unit::RadiansPerSecond => "rad/s",
            Unit::NaturalFieldEv2 => "eV^2 (field)",
            Unit::Kelvin => "K",
            Unit::Meters => "m",
            Unit::InverseElectronVolts => "eV^-1",
        }
    }
}

/// Convert `value` between the supported unit pairs.
///
/// Supported pairs: W/cm² ↔ V/m (via E = sqrt(2I/(ε₀c))), eV ↔ rad/s,
/// eV² (natural field) ↔ V/m, K ↔ eV, m ↔ eV⁻¹, plus the identity.
/// Round-trips are exact to relative 1e-12.
pub fn convert(value: f64, from: Unit, to: Unit) -> Result<f64> {
    use Unit::*;
    if from == to {
        return Ok(value);
    }
    let out = match (from, to) {
        (WattsPerCm2, VoltsPerMeter) => {
            if value < 0.0 {
                return Err(CoreError::Domain("intensity must be non-negative".into()));
            }
            // W/cm² -> W/m² carries the 1e4.
            (2.0 * value * 1.0e4 / (EPSILON0_F_M * C_M_S)).sqrt()
        }
        (VoltsPerMeter, WattsPerCm2) => {
            if value < 0.0 {
                return Err(CoreError::Domain("field must be non-negative".into()));
            }
            value * value * EPSILON0_F_M * C_M_S / 2.0 * 1.0e-4
        }
        (ElectronVolts, RadiansPerSecond) => value / HBAR_EVS,
        (RadiansPerSecond, ElectronVolts) => value * HBAR_EVS,
        (NaturalFieldEv2, VoltsPerMeter) => value * volts_per_meter_per_ev2(),
        (VoltsPerMeter, NaturalFieldEv2) => value / volts_per_meter_per_ev2(),
        (Kelvin, ElectronVolts) => value * BOLTZMANN_EV_K,
        (ElectronVolts, Kelvin) => value / BOLTZMANN_EV_K,
        (Meters, InverseElectronVolts) => value / HBARC_EV_M,
        (InverseElectronVolts, Meters) => value * HBARC_EV_M,
        (from, to) => {
            return Err(CoreError::UnsupportedConversion {
                from: from.name(),
                to: to.name(),
            })
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coupling_squares_to_alpha() {
        let q = coupling_q();
        let alpha = q * q / (4.0 * std::f64::consts::PI);
        assert!((alpha / ALPHA_QED - 1.0).abs() < 1e-10);
        assert!((q - 0.3028).abs() < 1e-3);
    }

    #[test]
    fn unruh_temperature_examples() {
        assert_eq!(unruh_temperature(0.0).unwrap(), 0.0);

        // Acceleration that maps to exactly 1 K, from the defining formula.
        let a_one_kelvin =
            2.0 * std::f64::consts::PI * BOLTZMANN_J_K * C_M_S / HBAR_JS;
        assert!((a_one_kelvin - 2.47e20).abs() / 2.47e20 < 1e-2);
        let t = unruh_temperature(a_one_kelvin).unwrap();
        assert!((t - 1.0).abs() < 1e-12);

        // Earth gravity.
        let t = unruh_temperature(9.81).unwrap();
        let oracle = HBAR_JS * 9.81 / (2.0 * std::f64::consts::PI * BOLTZMANN_J_K * C_M_S);
        assert_eq!(t, oracle);
        assert!((t - 4.0e-20).abs() / 4.0e-20 < 2e-2);

        assert!(unruh_temperature(-1.0).is_err());
    }

    #[test]
    fn unruh_temperature_is_linear() {
        let a = 1.234e7;
        let t1 = unruh_temperature(a).unwrap();
        let t2 = unruh_temperature(2.0 * a).unwrap();
        assert_eq!(t2, 2.0 * t1);
    }

    #[test]
    fn schwinger_field_values() {
        let es = schwinger_field_ev2();
        let oracle = 5.110e5 * 5.110e5 / coupling_q();
        assert_eq!(es, oracle);
        assert!((es - 8.62e11).abs() / 8.62e11 < 1e-2);

        // SI value against independent standard-constants arithmetic
        // m²c³/(qħ) with the electron mass in kg.
        let m_kg = 9.109383702e-31;
        let si_oracle = m_kg * m_kg * C_M_S.powi(3) / (EV_J * HBAR_JS);
        let si = schwinger_field_v_per_m();
        assert!((si - 1.32e18).abs() / 1.32e18 < 1e-2);
        // The frozen 511.0 keV mass differs from m_e c² by ~2e-6.
        assert!((si / si_oracle - 1.0).abs() < 1e-4);
    }

    #[test]
    fn schwinger_natural_and_si_agree_under_convert() {
        let nat = schwinger_field_ev2();
        let si = schwinger_field_v_per_m();
        let converted = convert(nat, Unit::NaturalFieldEv2, Unit::VoltsPerMeter).unwrap();
        assert!((converted / si - 1.0).abs() < 1e-6);
    }

    #[test]
    fn convert_examples() {
        // 1e18 W/cm² -> ~2.75e12 V/m
        let e = convert(1.0e18, Unit::WattsPerCm2, Unit::VoltsPerMeter).unwrap();
        let oracle = (2.0 * 1.0e22 / (EPSILON0_F_M * C_M_S)).sqrt();
        assert_eq!(e, oracle);
        assert!((e - 2.75e12).abs() / 2.75e12 < 1e-2);

        // zero maps to zero for every supported pair
        for (a, b) in [
            (Unit::WattsPerCm2, Unit::VoltsPerMeter),
            (Unit::ElectronVolts, Unit::RadiansPerSecond),
            (Unit::NaturalFieldEv2, Unit::VoltsPerMeter),
            (Unit::Kelvin, Unit::ElectronVolts),
            (Unit::Meters, Unit::InverseElectronVolts),
        ] {
            assert_eq!(convert(0.0, a, b).unwrap(), 0.0);
            assert_eq!(convert(0.0, b, a).unwrap(), 0.0);
        }

        // 2.5 eV -> ~3.80e15 rad/s
        let w = convert(2.5, Unit::ElectronVolts, Unit::RadiansPerSecond).unwrap();
        assert_eq!(w, 2.5 / HBAR_EVS);
        assert!((w - 3.80e15).abs() / 3.80e15 < 1e-2);

        assert!(matches!(
            convert(1.0, Unit::Kelvin, Unit::Meters),
            Err(CoreError::UnsupportedConversion { .. })
        ));
    }

    #[test]
    fn convert_round_trips() {
        let pairs = [
            (Unit::WattsPerCm2, Unit::VoltsPerMeter),
            (Unit::ElectronVolts, Unit::RadiansPerSecond),
            (Unit::NaturalFieldEv2, Unit::VoltsPerMeter),
            (Unit::Kelvin, Unit::ElectronVolts),
            (Unit::Meters, Unit::InverseElectronVolts),
        ];
        for (a, b) in pairs {
            for scale in [1e-6, 1.0, 3.7e9, 1e18] {
                let x = 1.2345678901234 * scale;
                let rt = convert(convert(x, a, b).unwrap(), b, a).unwrap();
                assert!(
                    (rt / x - 1.0).abs() < 1e-12,
                    "round trip {:?}->{:?} failed: {} vs {}",
                    a,
                    b,
                    rt,
                    x
                );
            }
        }
    }
}
