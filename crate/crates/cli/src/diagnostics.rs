//! Numerical self-checks of the closed-form SUSY states.

use qes_core::potentials::{Potential, YukawaPotential};
use qes_core::susy::{
    solve_susy_coulomb_point, susy_coulomb_params, susy_coulomb_wavefunction, susy_oscillator_energy,
    susy_oscillator_params, susy_oscillator_wavefunction, SusyCoulombAnsatz,
};
use qes_core::transform::{ground_energy_via_index_ratio, mapped_oscillator};

use crate::output::{Cell, Table};
use crate::CliError;

pub const PARTNER_SAMPLES: usize = 100;
pub const PARTNER_THRESHOLD: f64 = 1e-8;
pub const RESIDUAL_THRESHOLD: f64 = 1e-8;
pub const ENERGY_THRESHOLD: f64 = 1e-10;
pub const CONSTRAINT_THRESHOLD: f64 = 1e-10;

/// Largest relative gap between the expanded `W² + W'` and a five-point
/// numerical derivative, over quasi-random ansätze.
pub fn partner_identity_error(samples: usize) -> f64 {
    // additive recurrence with irrational steps spreads the samples evenly
    let steps = [0.754_877_666_246_692_7, 0.569_840_290_998_053_2, 0.430_159_709_001_946_7, 0.245_122_333_753_307_2];
    let h = 1e-4;
    let mut worst: f64 = 0.0;
    for k in 1..=samples {
        let u: Vec<f64> = steps.iter().map(|s| (s * k as f64).fract()).collect();
        let w = SusyCoulombAnsatz {
            a1: 0.1 + 3.9 * u[0],
            a2: -2.0 + 4.0 * u[1],
            a3: -1.0 + 2.0 * u[2],
            a4: -(1e-3 + u[3]),
        };
        for j in 1..=20 {
            let r = 0.25 * j as f64;
            let at = |t: f64| w.superpotential(r + t * h);
            let derivative = (at(-2.0) - 8.0 * at(-1.0) + 8.0 * at(1.0) - at(2.0)) / (12.0 * h);
            let numeric = w.superpotential(r).powi(2) + derivative;
            let symbolic = w.partner_coefficients().eval(r);
            worst = worst.max((symbolic - numeric).abs() / numeric.abs().max(1.0));
        }
    }
    worst
}

/// Largest `|−Ψ''/Ψ + U − 2E| / (|Ψ''/Ψ| + |U| + |2E|)` on `[lo, hi]`, with
/// `Ψ''/Ψ = g'' + g'²` from five-point differences of `g = ln Ψ`.
pub fn relative_residual(ln_psi: impl Fn(f64) -> f64, u: impl Fn(f64) -> f64, energy: f64, lo: f64, hi: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..=400 {
        let x = lo + (hi - lo) * i as f64 / 400.0;
        let h = 5e-3 * x;
        let g = |t: f64| ln_psi(x + t * h);
        let d1 = (g(-2.0) - 8.0 * g(-1.0) + 8.0 * g(1.0) - g(2.0)) / (12.0 * h);
        let d2 = (-g(-2.0) + 16.0 * g(-1.0) - 30.0 * g(0.0) + 16.0 * g(1.0) - g(2.0)) / (12.0 * h * h);
        let kinetic = d2 + d1 * d1;
        let scale = kinetic.abs() + u(x).abs() + (2.0 * energy).abs();
        let res = (-kinetic + u(x) - 2.0 * energy).abs() / scale;
        worst = if res.is_nan() { f64::INFINITY } else { worst.max(res) };
    }
    worst
}

/// Diagnostics table for `susy-check`.
pub fn susy_check(e2: f64, guess: (f64, f64)) -> Result<Table, CliError> {
    let point = solve_susy_coulomb_point(e2, guess)?;
    let (m, delta) = (point.m, point.delta);
    let series = YukawaPotential::new(e2, delta)?.truncate();

    let w = susy_coulomb_params(&series, m)?;
    let coulomb = susy_coulomb_wavefunction(&w, &series)?;
    let centrifugal = (m - 1.0) * (m - 3.0) / 4.0;
    let coulomb_residual = relative_residual(
        |r| coulomb.ln_normalized(r),
        |r| centrifugal / (r * r) + 2.0 * series.value(r),
        coulomb.energy,
        0.2,
        15.0,
    );

    let m_prime = 2.0 * (m - 1.0);
    let (oscillator, _) = mapped_oscillator(&series, coulomb.energy)?;
    let ansatz = susy_oscillator_params(&series, coulomb.energy, m_prime)?;
    let osc = susy_oscillator_wavefunction(&ansatz, &oscillator)?;
    let centrifugal_prime = (m_prime - 1.0) * (m_prime - 3.0) / 4.0;
    let oscillator_residual = relative_residual(
        |rho| osc.ln_normalized(rho),
        |rho| centrifugal_prime / (rho * rho) + 2.0 * oscillator.eval(rho),
        osc.energy,
        0.2,
        6.0,
    );

    let energy_gap =
        (susy_oscillator_energy(&ansatz) - ground_energy_via_index_ratio(series.a1, coulomb.energy, m, m_prime)?).abs();
    let constraint = point.residuals.0.abs().max(point.residuals.1.abs());

    let mut table = Table::new(vec!["check", "value", "threshold", "status"]);
    let checks = [
        ("constraint_residual", constraint, CONSTRAINT_THRESHOLD),
        ("partner_identity", partner_identity_error(PARTNER_SAMPLES), PARTNER_THRESHOLD),
        ("coulomb_eigenfunction_residual", coulomb_residual, RESIDUAL_THRESHOLD),
        ("oscillator_eigenfunction_residual", oscillator_residual, RESIDUAL_THRESHOLD),
        ("mapped_energy_gap", energy_gap, ENERGY_THRESHOLD),
    ];
    for (name, value, threshold) in checks {
        table.push(vec![
            Cell::Text(name.into()),
            Cell::Sci(value, 3),
            Cell::Sci(threshold, 1),
            Cell::Text(if value < threshold { "pass" } else { "fail" }.into()),
        ]);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partner_identity_is_tight() {
        assert!(partner_identity_error(20) < PARTNER_THRESHOLD);
    }

    #[test]
    fn residual_of_hydrogen_ground_state() {
        // Ψ = r e^{−r}, U = −2/r, E = −1/2
        let res = relative_residual(|r: f64| r.ln() - r, |r| -2.0 / r, -0.5, 0.2, 10.0);
        assert!(res < 1e-9, "{res}");
        let wrong = relative_residual(|r: f64| r.ln() - r, |r| -2.0 / r, -0.49, 0.2, 10.0);
        assert!(wrong > 1e-3);
    }

    #[test]
    fn all_checks_pass_at_unit_coupling() {
        let table = susy_check(1.0, qes_core::susy::DEFAULT_SUSY_GUESS).unwrap();
        for row in &table.rows {
            assert_eq!(row[3], Cell::Text("pass".into()), "{row:?}");
        }
    }
}
