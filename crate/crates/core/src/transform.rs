//! Change of variables `r = αρ²/2`, `R = F/ρ^λ` taking the `N`-dimensional
//! radial problem with angular momentum `ℓ` to an `N' = 2N − 2 − 2λ`
//! dimensional one with angular momentum `L = 2ℓ + λ`.
//!
//! With `α² = 1/|E₀|` the power-series potential becomes an even-power
//! oscillator whose ground energy is `Ê = −2A₁/√|E₀|`. Only the ground state
//! is mapped.

use crate::potentials::{OscillatorPotential, PowerSeriesPotential};
use crate::{Error, Real, Result};

/// Radial problem labels `(N, ℓ, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub dimension: u32,
    pub ell: u32,
    pub n: u32,
}

impl QuantumNumbers {
    pub fn new(dimension: u32, ell: u32, n: u32) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::domain("dimension must be at least 2", dimension as f64));
        }
        Ok(Self { dimension, ell, n })
    }

    /// `M = N + 2ℓ`; the reduced radial equation depends on `(M, n)` only.
    pub fn m_index(&self) -> u32 {
        self.dimension + 2 * self.ell
    }
}

/// Target space of the map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MappedSpace {
    pub n_prime: i64,
    pub l: i64,
    pub lambda: u32,
    pub m_prime: i64,
}

fn check_lambda(lambda: u32) -> Result<()> {
    if lambda > 1 {
        return Err(Error::InvalidArgument(format!(
            "mapping parameter λ must be 0 or 1, got {lambda}"
        )));
    }
    Ok(())
}

/// `N' = 2N − 2 − 2λ`, `L = 2ℓ + λ`, `M' = N' + 2L`.
pub fn map_space(q: &QuantumNumbers, lambda: u32) -> Result<MappedSpace> {
    check_lambda(lambda)?;
    let (n, ell, lam) = (q.dimension as i64, q.ell as i64, lambda as i64);
    let n_prime = 2 * n - 2 - 2 * lam;
    let l = 2 * ell + lam;
    let m_prime = n_prime + 2 * l;
    if m_prime != 2 * (q.m_index() as i64 - 1) {
        return Err(Error::InvalidArgument(format!(
            "inconsistent mapped index M' = {m_prime} for M = {}",
            q.m_index()
        )));
    }
    Ok(MappedSpace {
        n_prime,
        l,
        lambda,
        m_prime,
    })
}

/// `r = α ρ² / 2`.
pub fn map_coordinate<T: Real>(alpha: T, rho: T) -> T {
    alpha * rho * rho / T::lit(2.0)
}

/// `M'/(M − 1)` computed from raw labels. Rejects `M = 1`.
pub fn index_ratio<T: Real>(dimension: u32, ell: u32, lambda: u32) -> Result<T> {
    check_lambda(lambda)?;
    let (n, ell, lam) = (dimension as i64, ell as i64, lambda as i64);
    let m = n + 2 * ell;
    if m == 1 {
        return Err(Error::domain("M − 1 vanishes", 1.0));
    }
    let m_prime = 2 * (n - 1 - lam) + 2 * (2 * ell + lam);
    Ok(T::lit(m_prime as f64) / T::lit((m - 1) as f64))
}

/// `M'/(M − 1)` for a physical state; equal to 2 for either admissible λ.
pub fn check_lambda_consistency<T: Real>(q: &QuantumNumbers, lambda: u32) -> Result<T> {
    index_ratio(q.dimension, q.ell, lambda)
}

/// Oscillator side of a mapped power-series potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedSystem<T> {
    pub oscillator: OscillatorPotential<T>,
    /// `Ê = −2A₁/√|E₀|`.
    pub e_hat_exact: T,
    /// `α = 1/√|E₀|`.
    pub alpha: T,
    pub source_energy: T,
}

/// Oscillator coefficients `α^{k+2} A_k / 2^{k−2}` with `α² = 1/|E₀|`.
///
/// The `ρ²` coefficient is `α²(A₂ − E₀)`, which is `1 + A₂/|E₀|` for a bound
/// source state. A positive `E₀` is accepted here (the closed-form SUSY
/// point lies at positive energy); [`map_system`] restricts to `E₀ < 0`.
pub fn mapped_oscillator<T: Real>(
    p: &PowerSeriesPotential<T>,
    e0: T,
) -> Result<(OscillatorPotential<T>, T)> {
    if e0 == T::zero() || !e0.is_finite() {
        return Err(Error::domain("source energy must be non-zero", e0.as_f64()));
    }
    let abs_e = e0.abs();
    let alpha = T::one() / abs_e.sqrt();
    let a2 = alpha * alpha;
    let a3 = a2 * alpha;
    let a4 = a2 * a2;
    let a5 = a4 * alpha;
    let a6 = a4 * a2;
    let oscillator = OscillatorPotential {
        c2: a2 * (p.a2 - e0),
        c4: p.a3 * a3 / T::lit(2.0),
        c6: p.a4 * a4 / T::lit(4.0),
        c8: p.a5 * a5 / T::lit(8.0),
        c10: p.a6 * a6 / T::lit(16.0),
    };
    Ok((oscillator, alpha))
}

/// Maps a bound state of the power-series potential at energy `E₀ < 0` to
/// the oscillator and its predicted ground energy.
pub fn map_system<T: Real>(p: &PowerSeriesPotential<T>, e0: T) -> Result<MappedSystem<T>> {
    if !(e0 < T::zero()) {
        return Err(Error::domain("mapping needs a bound source state (E₀ < 0)", e0.as_f64()));
    }
    if p.a6 < T::zero() {
        return Err(Error::domain("r⁴ coefficient must be non-negative", p.a6.as_f64()));
    }
    let (oscillator, alpha) = mapped_oscillator(p, e0)?;
    Ok(MappedSystem {
        oscillator,
        e_hat_exact: -T::lit(2.0) * p.a1 * alpha,
        alpha,
        source_energy: e0,
    })
}

/// `Ê = −(M'/(M − 1)) A₁/√|E₀|`; reduces to [`MappedSystem::e_hat_exact`]
/// when `M' = 2(M − 1)`.
pub fn ground_energy_via_index_ratio<T: Real>(a1: T, e0: T, m: T, m_prime: T) -> Result<T> {
    if m == T::one() {
        return Err(Error::domain("M − 1 vanishes", 1.0));
    }
    if e0 == T::zero() {
        return Err(Error::domain("source energy must be non-zero", 0.0));
    }
    Ok(-(m_prime / (m - T::one())) * a1 / e0.abs().sqrt())
}
