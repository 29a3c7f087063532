//! Shared numerical kernels.

mod grid;
mod quadrature;
mod roots;
mod tridiag;

pub use grid::RadialGrid;
pub use quadrature::{integrate_semi_infinite, Quadrature};
pub use roots::{find_root_2d, Root2d};
pub use tridiag::{eigenvalues_lowest, TridiagonalSymmetric};

use crate::Real;

/// Outcome of an iterated refinement.
///
/// `estimated_error` is the absolute difference between the last two
/// refinement levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceReport<T> {
    pub value: T,
    pub estimated_error: T,
    pub refinement_steps: usize,
}

impl<T: Real> ConvergenceReport<T> {
    pub fn new(value: T, previous: T, refinement_steps: usize) -> Self {
        Self {
            value,
            estimated_error: (value - previous).abs(),
            refinement_steps,
        }
    }
}
