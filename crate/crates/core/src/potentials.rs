//! The three potential families: the Yukawa (screened Coulomb) potential,
//! its six-term power-series truncation, and the even-power oscillator that
//! the truncation maps to.

use crate::{Error, Real, Result};

/// Anything that can be sampled on a radial grid.
///
/// Implemented for the potential types below and for plain closures.
pub trait Potential<T>: Sync {
    /// Raw value at `r`; may be non-finite outside the physical domain.
    fn value(&self, r: T) -> T;
}

impl<T, F> Potential<T> for F
where
    F: Fn(T) -> T + Sync,
{
    fn value(&self, r: T) -> T {
        self(r)
    }
}

/// `V(r) = −e² exp(−δr) / r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YukawaPotential<T> {
    pub e2: T,
    pub delta: T,
}

impl<T: Real> YukawaPotential<T> {
    pub fn new(e2: T, delta: T) -> Result<Self> {
        if !(e2 > T::zero()) || !e2.is_finite() {
            return Err(Error::domain("coupling e² must be positive", e2.as_f64()));
        }
        if !(delta >= T::zero()) || !delta.is_finite() {
            return Err(Error::domain("screening δ must be non-negative", delta.as_f64()));
        }
        Ok(Self { e2, delta })
    }

    /// Hydrogen-like units: `e² = 1`.
    pub fn atomic(delta: T) -> Result<Self> {
        Self::new(T::one(), delta)
    }

    pub fn eval(&self, r: T) -> Result<T> {
        if !(r > T::zero()) {
            return Err(Error::domain("radius must be positive", r.as_f64()));
        }
        Ok(-self.e2 * (-self.delta * r).exp() / r)
    }

    /// Expansion of the exponential through `δ⁵`:
    /// `−e²/r + e²δ − e²δ²r/2 + e²δ³r²/6 − e²δ⁴r³/24 + e²δ⁵r⁴/120`.
    pub fn truncate(&self) -> PowerSeriesPotential<T> {
        let (e2, d) = (self.e2, self.delta);
        let d2 = d * d;
        let d3 = d2 * d;
        let d4 = d3 * d;
        let d5 = d4 * d;
        PowerSeriesPotential {
            a1: -e2,
            a2: e2 * d,
            a3: -e2 * d2 / T::lit(2.0),
            a4: e2 * d3 / T::lit(6.0),
            a5: -e2 * d4 / T::lit(24.0),
            a6: e2 * d5 / T::lit(120.0),
        }
    }
}

impl<T: Real> Potential<T> for YukawaPotential<T> {
    fn value(&self, r: T) -> T {
        -self.e2 * (-self.delta * r).exp() / r
    }
}

/// Free-function form of [`YukawaPotential::eval`].
pub fn yukawa_eval<T: Real>(p: &YukawaPotential<T>, r: T) -> Result<T> {
    p.eval(r)
}

/// Free-function form of [`YukawaPotential::truncate`].
pub fn truncate_yukawa<T: Real>(p: &YukawaPotential<T>) -> PowerSeriesPotential<T> {
    p.truncate()
}

/// `V(r) = A₁/r + A₂ + A₃r + A₄r² + A₅r³ + A₆r⁴`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSeriesPotential<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: T,
    pub a6: T,
}

impl<T: Real> PowerSeriesPotential<T> {
    pub fn from_coefficients(a: [T; 6]) -> Self {
        Self {
            a1: a[0],
            a2: a[1],
            a3: a[2],
            a4: a[3],
            a5: a[4],
            a6: a[5],
        }
    }

    pub fn coefficients(&self) -> [T; 6] {
        [self.a1, self.a2, self.a3, self.a4, self.a5, self.a6]
    }

    /// Every coefficient multiplied by `s`.
    pub fn scaled(&self, s: T) -> Self {
        Self::from_coefficients(self.coefficients().map(|a| a * s))
    }

    pub fn eval(&self, r: T) -> Result<T> {
        if !(r > T::zero()) {
            return Err(Error::domain("radius must be positive", r.as_f64()));
        }
        Ok(self.value(r))
    }
}

impl<T: Real> Potential<T> for PowerSeriesPotential<T> {
    fn value(&self, r: T) -> T {
        let poly = self.a2 + r * (self.a3 + r * (self.a4 + r * (self.a5 + r * self.a6)));
        self.a1 / r + poly
    }
}

/// Free-function form of [`PowerSeriesPotential::eval`].
pub fn powerseries_eval<T: Real>(p: &PowerSeriesPotential<T>, r: T) -> Result<T> {
    p.eval(r)
}

/// `V̂(ρ) = c₂ρ² + c₄ρ⁴ + c₆ρ⁶ + c₈ρ⁸ + c₁₀ρ¹⁰`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorPotential<T> {
    pub c2: T,
    pub c4: T,
    pub c6: T,
    pub c8: T,
    pub c10: T,
}

impl<T: Real> OscillatorPotential<T> {
    pub fn from_coefficients(c: [T; 5]) -> Self {
        Self {
            c2: c[0],
            c4: c[1],
            c6: c[2],
            c8: c[3],
            c10: c[4],
        }
    }

    pub fn coefficients(&self) -> [T; 5] {
        [self.c2, self.c4, self.c6, self.c8, self.c10]
    }

    /// Pure `ω²ρ²/2` well.
    pub fn harmonic(c2: T) -> Self {
        Self::from_coefficients([c2, T::zero(), T::zero(), T::zero(), T::zero()])
    }

    pub fn eval(&self, rho: T) -> T {
        let x = rho * rho;
        x * (self.c2 + x * (self.c4 + x * (self.c6 + x * (self.c8 + x * self.c10))))
    }

    /// Highest non-zero coefficient is positive, so `V̂ → +∞`.
    pub fn is_confining(&self) -> bool {
        self.coefficients()
            .iter()
            .rev()
            .find(|c| **c != T::zero())
            .is_some_and(|c| *c > T::zero())
    }
}

impl<T: Real> Potential<T> for OscillatorPotential<T> {
    fn value(&self, rho: T) -> T {
        self.eval(rho)
    }
}

/// Free-function form of [`OscillatorPotential::eval`].
pub fn oscillator_eval<T: Real>(p: &OscillatorPotential<T>, rho: T) -> T {
    p.eval(rho)
}
