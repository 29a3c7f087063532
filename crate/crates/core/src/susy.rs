//! Closed-form ground states from polynomial superpotentials.
//!
//! For a superpotential `W`, the state `Ψ = exp(∫W)` satisfies
//! `−Ψ'' + (W² + W')Ψ = 0`. Matching `W² + W'` term by term to the effective
//! potential of the reduced radial equation fixes the superpotential, the
//! energy, and two constraints on the potential parameters. Each closed-form
//! state carries its own constraints, so states obtained at different
//! parameter points belong to different potentials and are not orthogonal.
//!
//! Two systems are covered:
//!
//! * screened Coulomb: `W(r) = a₁/r + a₂ + a₃r + a₄r²`, `a₄ < 0`;
//! * mapped oscillator: `W(ρ) = aρ⁵ + bρ³ + c/ρ + dρ`, `a < 0`, `d < 0`.

use std::fmt;
use std::sync::Arc;

use crate::numerics::{find_root_2d, Quadrature};
use crate::potentials::{OscillatorPotential, PowerSeriesPotential, YukawaPotential};
use crate::{Error, Real, Result};

/// `W(r) = a₁/r + a₂ + a₃r + a₄r²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusyCoulombAnsatz<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
}

/// Coefficients of `W² + W'` for the screened Coulomb superpotential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombPartnerCoefficients<T> {
    pub inv_r2: T,
    pub inv_r: T,
    pub constant: T,
    pub r1: T,
    pub r2: T,
    pub r3: T,
    pub r4: T,
}

impl<T: Real> CoulombPartnerCoefficients<T> {
    /// Expansion for arbitrary (not necessarily normalizable) parameters.
    pub fn from_parameters(a1: T, a2: T, a3: T, a4: T) -> Self {
        let two = T::lit(2.0);
        Self {
            inv_r2: a1 * (a1 - T::one()),
            inv_r: two * a1 * a2,
            constant: a2 * a2 + a3 * (two * a1 + T::one()),
            r1: two * (a1 * a4 + a4 + a2 * a3),
            r2: two * a2 * a4 + a3 * a3,
            r3: two * a3 * a4,
            r4: a4 * a4,
        }
    }

    pub fn eval(&self, r: T) -> T {
        let poly = self.constant + r * (self.r1 + r * (self.r2 + r * (self.r3 + r * self.r4)));
        (self.inv_r2 / r + self.inv_r) / r + poly
    }
}

impl<T: Real> SusyCoulombAnsatz<T> {
    pub fn new(a1: T, a2: T, a3: T, a4: T) -> Result<Self> {
        if !(a4 < T::zero()) {
            return Err(Error::NoValidAnsatz(format!("a4 = {a4} must be negative")));
        }
        if !(a1 > T::zero()) {
            return Err(Error::NoValidAnsatz(format!("a1 = {a1} must be positive")));
        }
        Ok(Self { a1, a2, a3, a4 })
    }

    /// `M = 2a₁ + 1`.
    pub fn m_index(&self) -> T {
        T::lit(2.0) * self.a1 + T::one()
    }

    pub fn superpotential(&self, r: T) -> T {
        self.a1 / r + self.a2 + r * (self.a3 + r * self.a4)
    }

    pub fn partner_coefficients(&self) -> CoulombPartnerCoefficients<T> {
        CoulombPartnerCoefficients::from_parameters(self.a1, self.a2, self.a3, self.a4)
    }

    /// `V₊(r) = W(r)² + W'(r)`.
    pub fn partner_potential(&self, r: T) -> Result<T> {
        if !(r > T::zero()) {
            return Err(Error::domain("radius must be positive", r.as_f64()));
        }
        Ok(self.partner_coefficients().eval(r))
    }

    /// `ln Ψ` without normalization.
    pub fn log_wavefunction(&self, r: T) -> T {
        let third = T::one() / T::lit(3.0);
        self.a1 * r.ln() + r * (self.a2 + r * (self.a3 / T::lit(2.0) + r * self.a4 * third))
    }
}

fn require_confining<T: Real>(p: &PowerSeriesPotential<T>) -> Result<T> {
    if !(p.a6 > T::zero()) {
        return Err(Error::domain("r⁴ coefficient must be positive", p.a6.as_f64()));
    }
    Ok((T::lit(2.0) * p.a6).sqrt())
}

fn require_m<T: Real>(m: T) -> Result<()> {
    if !(m > T::one()) || !m.is_finite() {
        return Err(Error::domain("index M must exceed 1", m.as_f64()));
    }
    Ok(())
}

/// `a₁ = (M−1)/2`, `a₂ = 2A₁/(M−1)`, `a₃ = −A₅/√(2A₆)`, `a₄ = −√(2A₆)`.
pub fn susy_coulomb_params<T: Real>(p: &PowerSeriesPotential<T>, m: T) -> Result<SusyCoulombAnsatz<T>> {
    let root = require_confining(p)?;
    require_m(m)?;
    let m1 = m - T::one();
    Ok(SusyCoulombAnsatz {
        a1: m1 / T::lit(2.0),
        a2: T::lit(2.0) * p.a1 / m1,
        a3: -p.a5 / root,
        a4: -root,
    })
}

/// Free-function form of [`SusyCoulombAnsatz::partner_potential`].
pub fn susy_partner_potential<T: Real>(w: &SusyCoulombAnsatz<T>, r: T) -> Result<T> {
    w.partner_potential(r)
}

/// `E₀ = A₂ − ½[4A₁²/(M−1)² − A₅M/√(2A₆)]`.
///
/// Only physical when [`constraint_residuals`] vanish; evaluated regardless.
pub fn susy_coulomb_energy<T: Real>(p: &PowerSeriesPotential<T>, m: T) -> Result<T> {
    if m == T::one() {
        return Err(Error::domain("M − 1 vanishes", 1.0));
    }
    let root = require_confining(p)?;
    let m1 = m - T::one();
    let bracket = T::lit(4.0) * p.a1 * p.a1 / (m1 * m1) - p.a5 * m / root;
    Ok(p.a2 - bracket / T::lit(2.0))
}

/// Residuals of the two matching conditions left over after the ansatz is
/// fixed (the `r²` and `r` terms):
///
/// * `A₁ + (M−1)(8A₆A₄ − 2A₅²)/(16A₆√(2A₆))`
/// * `A₃ + √(2A₆)[(M+1)/2 + A₁A₅/((M−1)A₆)]`
pub fn constraint_residuals<T: Real>(p: &PowerSeriesPotential<T>, m: T) -> Result<(T, T)> {
    if m == T::one() {
        return Err(Error::domain("M − 1 vanishes", 1.0));
    }
    let root = require_confining(p)?;
    let m1 = m - T::one();
    let res1 = p.a1
        + m1 * (T::lit(8.0) * p.a6 * p.a4 - T::lit(2.0) * p.a5 * p.a5) / (T::lit(16.0) * p.a6 * root);
    let res2 = p.a3 + root * ((m + T::one()) / T::lit(2.0) + p.a1 * p.a5 / (m1 * p.a6));
    Ok((res1, res2))
}

/// [`constraint_residuals`] for the truncated Yukawa potential.
pub fn susy_coulomb_constraints<T: Real>(e2: T, delta: T, m: T) -> Result<(T, T)> {
    if !(delta > T::zero()) {
        return Err(Error::domain("screening δ must be positive", delta.as_f64()));
    }
    let p = YukawaPotential::new(e2, delta)?.truncate();
    constraint_residuals(&p, m)
}

/// Parameter point `(M, δ)` where the closed-form state is exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusyPoint<T> {
    pub m: T,
    pub delta: T,
    pub residuals: (T, T),
    pub iterations: usize,
}

impl<T: Real> SusyPoint<T> {
    /// Distance of `M` from the nearest integer.
    pub fn integer_defect(&self) -> T {
        (self.m - self.m.round()).abs()
    }
}

/// Default starting point for [`solve_susy_coulomb_point`] at `e² = 1`.
pub const DEFAULT_SUSY_GUESS: (f64, f64) = (4.0, 0.2);

/// Solves both constraints for `(M, δ)` at fixed `e²`, treating `M` as a
/// continuous unknown.
///
/// Newton runs in `u = √t(M−1)`, `v = √t(M+1)` with `t = δ/e²`, on the
/// residuals scaled by `e²` and `e⁶t²`. In these variables the first
/// constraint is linear in `u` and the second linear in `v`, so the
/// iteration converges from any guess with `M > 1` and `δ > 0`.
pub fn solve_susy_coulomb_point<T: Real>(e2: T, initial: (T, T)) -> Result<SusyPoint<T>> {
    if !(e2 > T::zero()) || !e2.is_finite() {
        return Err(Error::domain("coupling e² must be positive", e2.as_f64()));
    }
    let (m0, delta0) = initial;
    if !(m0 > T::one()) || !(delta0 > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "initial guess ({m0}, {delta0}) needs M > 1 and δ > 0"
        )));
    }
    let two = T::lit(2.0);
    let from_uv = |u: T, v: T| {
        let root_t = (v - u) / two;
        ((v + u) / (v - u), e2 * root_t * root_t)
    };
    let residual = |u: T, v: T| {
        if !(u > T::zero()) || !(v > u) {
            return (T::nan(), T::nan());
        }
        let (m, delta) = from_uv(u, v);
        let t = delta / e2;
        match susy_coulomb_constraints(e2, delta, m) {
            Ok((r1, r2)) => (r1 / e2, r2 / (e2 * e2 * e2 * t * t)),
            Err(_) => (T::nan(), T::nan()),
        }
    };
    let root_t0 = (delta0 / e2).sqrt();
    let start = (root_t0 * (m0 - T::one()), root_t0 * (m0 + T::one()));
    let tol = T::lit(1e-13).max(T::lit(64.0) * T::epsilon());
    let root = find_root_2d(residual, start, tol)?;
    let (m, delta) = from_uv(root.x, root.y);
    let residuals = susy_coulomb_constraints(e2, delta, m)?;
    Ok(SusyPoint {
        m,
        delta,
        residuals,
        iterations: root.iterations,
    })
}

type Wavefunction<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// A closed-form state with its energy and normalization.
#[derive(Clone)]
pub struct ExactSolution<T> {
    pub energy: T,
    /// Unnormalized `Ψ`; zero for non-positive arguments.
    pub wavefunction: Wavefunction<T>,
    /// `N` such that `N²∫₀^∞|Ψ|² = 1`.
    pub normalization: T,
    /// Matching conditions not enforced by the ansatz; zero iff exact.
    pub constraint_residuals: (T, T),
    log_wavefunction: Wavefunction<T>,
    log_normalization: T,
}

impl<T: fmt::Debug> fmt::Debug for ExactSolution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExactSolution")
            .field("energy", &self.energy)
            .field("normalization", &self.normalization)
            .field("constraint_residuals", &self.constraint_residuals)
            .finish_non_exhaustive()
    }
}

impl<T: Real> ExactSolution<T> {
    pub fn eval(&self, x: T) -> T {
        (self.wavefunction)(x)
    }

    pub fn normalized(&self, x: T) -> T {
        if x > T::zero() {
            (self.log_normalization + (self.log_wavefunction)(x)).exp()
        } else {
            T::zero()
        }
    }

    /// `ln Ψ(x)` for `x > 0`, finite where `Ψ` itself underflows.
    pub fn ln_eval(&self, x: T) -> T {
        (self.log_wavefunction)(x)
    }

    /// `ln(NΨ(x))` for `x > 0`.
    pub fn ln_normalized(&self, x: T) -> T {
        self.log_normalization + (self.log_wavefunction)(x)
    }

    fn from_log<L>(log_psi: L, decay_scale: T, energy: T, constraint_residuals: (T, T)) -> Result<Self>
    where
        L: Fn(T) -> T + Send + Sync + 'static,
    {
        // shift by the largest sampled log value so |Ψ|² stays in range
        let mut shift = T::neg_infinity();
        for k in 1..=4000 {
            let x = decay_scale * T::lit(k as f64 * 1e-3);
            let g = log_psi(x);
            if g.is_finite() {
                shift = shift.max(g);
            }
        }
        if !shift.is_finite() {
            return Err(Error::NonNormalizable("wavefunction vanishes on the sampled range"));
        }
        let scaled = |x: T| {
            if x > T::zero() {
                (T::lit(2.0) * (log_psi(x) - shift)).exp()
            } else {
                T::zero()
            }
        };
        let integral = Quadrature::semi_infinite(scaled, decay_scale)?.value;
        let log_normalization = -shift - integral.ln() / T::lit(2.0);
        let log_wavefunction: Wavefunction<T> = Arc::new(log_psi);
        let inner = log_wavefunction.clone();
        let wavefunction: Wavefunction<T> = Arc::new(move |x: T| {
            if x > T::zero() {
                inner(x).exp()
            } else {
                T::zero()
            }
        });
        Ok(Self {
            energy,
            wavefunction,
            normalization: log_normalization.exp(),
            constraint_residuals,
            log_wavefunction,
            log_normalization,
        })
    }
}

/// `Ψ(r) = N₀ r^{a₁} exp(a₂r + a₃r²/2 + a₄r³/3)` with energy from
/// [`susy_coulomb_energy`] at `M = 2a₁ + 1`.
///
/// `w` is expected to come from [`susy_coulomb_params`] for the same `p`.
pub fn susy_coulomb_wavefunction<T: Real>(
    w: &SusyCoulombAnsatz<T>,
    p: &PowerSeriesPotential<T>,
) -> Result<ExactSolution<T>> {
    if !(w.a4 < T::zero()) {
        return Err(Error::NonNormalizable("a4 must be negative"));
    }
    let m = w.m_index();
    let energy = susy_coulomb_energy(p, m)?;
    let residuals = constraint_residuals(p, m)?;
    let scale = (T::lit(3.0) / w.a4.abs()).cbrt();
    let ansatz = *w;
    ExactSolution::from_log(move |r| ansatz.log_wavefunction(r), scale, energy, residuals)
}

/// `W(ρ) = aρ⁵ + bρ³ + c/ρ + dρ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusyOscillatorAnsatz<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Real> SusyOscillatorAnsatz<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        if !(a < T::zero()) || !(d < T::zero()) {
            return Err(Error::NoValidAnsatz(format!(
                "a = {a} and d = {d} must both be negative"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    /// `M' = 2c + 1`.
    pub fn m_prime(&self) -> T {
        T::lit(2.0) * self.c + T::one()
    }

    pub fn superpotential(&self, rho: T) -> T {
        let x = rho * rho;
        rho * (self.d + x * (self.b + x * self.a)) + self.c / rho
    }

    /// The oscillator for which this ansatz is exact, from `W² + W' =
    /// 2V̂ + c(c−1)/ρ² − 2Ê`.
    pub fn matched_potential(&self) -> OscillatorPotential<T> {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let two = T::lit(2.0);
        OscillatorPotential {
            c2: (d * d + two * b * c + T::lit(3.0) * b) / two,
            c4: (two * a * c + two * b * d + T::lit(5.0) * a) / two,
            c6: (b * b + two * a * d) / two,
            c8: a * b,
            c10: a * a / two,
        }
    }

    /// `W(ρ)² + W'(ρ)`.
    pub fn partner_potential(&self, rho: T) -> Result<T> {
        if !(rho > T::zero()) {
            return Err(Error::domain("radius must be positive", rho.as_f64()));
        }
        let centrifugal = self.c * (self.c - T::one()) / (rho * rho);
        let constant = (T::lit(2.0) * self.c + T::one()) * self.d;
        Ok(T::lit(2.0) * self.matched_potential().eval(rho) + centrifugal + constant)
    }

    pub fn log_wavefunction(&self, rho: T) -> T {
        let x = rho * rho;
        self.c * rho.ln()
            + x * (self.d / T::lit(2.0) + x * (self.b / T::lit(4.0) + x * self.a / T::lit(6.0)))
    }
}

/// Both sign branches of `a = ±√(A₆/8)/|E|^{3/2}` with the remaining
/// parameters `b = A₅/(8a|E|^{5/2})`, `c = (M'−1)/2`,
/// `d = (A₄/(2|E|²) − b²)/(2a)`. Negative `a` first. Unchecked.
pub fn susy_oscillator_branches<T: Real>(
    p: &PowerSeriesPotential<T>,
    e0: T,
    m_prime: T,
) -> Result<[SusyOscillatorAnsatz<T>; 2]> {
    require_confining(p)?;
    if e0 == T::zero() || !e0.is_finite() {
        return Err(Error::domain("source energy must be non-zero", e0.as_f64()));
    }
    let abs_e = e0.abs();
    let magnitude = (p.a6 / T::lit(8.0)).sqrt() / abs_e.powf(T::lit(1.5));
    let branch = |a: T| {
        let b = p.a5 / (T::lit(8.0) * a) / abs_e.powf(T::lit(2.5));
        let d = (p.a4 / (T::lit(2.0) * abs_e * abs_e) - b * b) / (T::lit(2.0) * a);
        SusyOscillatorAnsatz {
            a,
            b,
            c: (m_prime - T::one()) / T::lit(2.0),
            d,
        }
    };
    Ok([branch(-magnitude), branch(magnitude)])
}

/// Normalizable branch of [`susy_oscillator_branches`]. Only `|E₀|` enters.
pub fn susy_oscillator_params<T: Real>(
    p: &PowerSeriesPotential<T>,
    e0: T,
    m_prime: T,
) -> Result<SusyOscillatorAnsatz<T>> {
    let [negative, _] = susy_oscillator_branches(p, e0, m_prime)?;
    if !(negative.d < T::zero()) {
        return Err(Error::NoValidAnsatz(format!(
            "d = {} is not negative on the a < 0 branch",
            negative.d
        )));
    }
    Ok(negative)
}

/// `Ê = −d(2c + 1)/2`.
pub fn susy_oscillator_energy<T: Real>(ansatz: &SusyOscillatorAnsatz<T>) -> T {
    -ansatz.d * (T::lit(2.0) * ansatz.c + T::one()) / T::lit(2.0)
}

/// `Ê = (8A₆A₄ − 2A₅²)/(16A₆√(2A₆)) · M'/√|E₀|`, the same energy written
/// directly in the source-potential coefficients.
pub fn susy_oscillator_energy_from_series<T: Real>(
    p: &PowerSeriesPotential<T>,
    e0: T,
    m_prime: T,
) -> Result<T> {
    let root = require_confining(p)?;
    if e0 == T::zero() {
        return Err(Error::domain("source energy must be non-zero", 0.0));
    }
    let factor = (T::lit(8.0) * p.a6 * p.a4 - T::lit(2.0) * p.a5 * p.a5) / (T::lit(16.0) * p.a6 * root);
    Ok(factor * m_prime / e0.abs().sqrt())
}

/// `Ψ(ρ) = C₀ ρ^c exp(aρ⁶/6 + bρ⁴/4 + dρ²/2)`.
///
/// `Ψ(ρ) = ρ^{(N'−1)/2} F(ρ)` with `F` the oscillator radial function. The
/// residuals compare the `ρ⁴` and `ρ²` coefficients the ansatz implies with
/// those of `oscillator`.
pub fn susy_oscillator_wavefunction<T: Real>(
    ansatz: &SusyOscillatorAnsatz<T>,
    oscillator: &OscillatorPotential<T>,
) -> Result<ExactSolution<T>> {
    if !(ansatz.a < T::zero()) {
        return Err(Error::NonNormalizable("a must be negative"));
    }
    let matched = ansatz.matched_potential();
    let residuals = (matched.c4 - oscillator.c4, matched.c2 - oscillator.c2);
    let energy = susy_oscillator_energy(ansatz);
    let scale = (T::lit(6.0) / ansatz.a.abs()).powf(T::lit(1.0 / 6.0));
    let w = *ansatz;
    ExactSolution::from_log(move |rho| w.log_wavefunction(rho), scale, energy, residuals)
}
