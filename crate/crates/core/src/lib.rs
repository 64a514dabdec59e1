//! Radiation channels of a relativistic electron driven by a strong
//! periodic electromagnetic field, evaluated in the electron's average
//! rest frame.
//!
//! The crate computes the classical one-photon (Larmor) amplitude and the
//! quantum two-photon amplitude on classical electron trajectories, turns
//! them into closed-form probability estimates, lab-frame energy-angle
//! maps, and photon statistics of the coherent and two-mode squeezed
//! radiation states.
//!
//! All internal arithmetic uses natural units `ħ = c = ε₀ = μ₀ = 1` with
//! energies in eV; SI quantities appear only at the conversion boundary
//! (see [`constants`]).

pub mod amplitudes;
pub mod constants;
pub mod error;
pub mod estimates;
pub mod fields;
pub mod geometry;
pub mod labframe;
pub mod qoptics;
pub mod trajectory;

pub use error::CoreError;
