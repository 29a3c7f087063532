//! Radial Schrödinger problems for screened Coulomb and anharmonic oscillator
//! potentials in `N` spatial dimensions.
//!
//! The crate covers four pieces that build on each other:
//!
//! * [`numerics`]: tridiagonal Sturm-bisection eigensolver, semi-infinite
//!   quadrature and a damped 2D Newton root finder.
//! * [`potentials`]: the Yukawa potential, its six-term power series and the
//!   even-power oscillator obtained from it.
//! * [`transform`]: the `r = αρ²/2` map taking the `N`-dimensional screened
//!   Coulomb problem to an `N' = 2N − 2 − 2λ` dimensional oscillator.
//! * [`susy`]: closed-form ground states from polynomial superpotentials and
//!   the parameter constraints that make them exact.
//! * [`spectra`]: converged finite-difference spectra and the two reference
//!   tables built from them.
//!
//! All math is generic over [`Real`] (`f32` or `f64`); the aliases at the
//! bottom of this file fix the scalar to `f64`, which is what the tables and
//! the CLI use. Hartree atomic units throughout.

pub mod error;
pub mod numerics;
pub mod potentials;
pub mod spectra;
pub mod susy;
pub mod transform;

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

pub use error::{Error, Result};

/// Floating-point scalar the numerical kernels are written against.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal. Lossy for `f32`, never fails.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Lossy view as `f64`, used for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub type RadialGrid = numerics::RadialGrid<f64>;
pub type TridiagonalSymmetric = numerics::TridiagonalSymmetric<f64>;
pub type ConvergenceReport = numerics::ConvergenceReport<f64>;
pub type YukawaPotential = potentials::YukawaPotential<f64>;
pub type PowerSeriesPotential = potentials::PowerSeriesPotential<f64>;
pub type OscillatorPotential = potentials::OscillatorPotential<f64>;
pub type MappedSystem = transform::MappedSystem<f64>;
pub type SusyCoulombAnsatz = susy::SusyCoulombAnsatz<f64>;
pub type SusyOscillatorAnsatz = susy::SusyOscillatorAnsatz<f64>;
pub type ExactSolution = susy::ExactSolution<f64>;
pub type SpectrumResult = spectra::SpectrumResult<f64>;

pub use spectra::{EnergyFlag, Table1Record, Table2Record};
pub use transform::{MappedSpace, QuantumNumbers};
