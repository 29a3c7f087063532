use qes_core::potentials::{Potential, YukawaPotential};
use qes_core::susy::{
    solve_susy_coulomb_point, susy_coulomb_energy, susy_coulomb_params, susy_coulomb_wavefunction,
    susy_oscillator_energy, susy_oscillator_energy_from_series, susy_oscillator_params, susy_oscillator_wavefunction,
    susy_partner_potential, SusyOscillatorAnsatz, DEFAULT_SUSY_GUESS,
};
use qes_core::transform::mapped_oscillator;
use qes_core::ExactSolution;

/// Composite Simpson rule on `[0, hi]` with `2n` panels.
fn simpson(f: impl Fn(f64) -> f64, hi: f64, n: usize) -> f64 {
    let h = hi / (2 * n) as f64;
    let mut sum = f(0.0) + f(hi);
    for i in 1..2 * n {
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
    }
    sum * h / 3.0
}

fn norm_defect(s: &ExactSolution, hi: f64) -> f64 {
    (simpson(|x| s.normalized(x).powi(2), hi, 200_000) - 1.0).abs()
}

#[test]
fn partner_minus_potential_is_constant_at_constraint_point() {
    let point = solve_susy_coulomb_point(1.0, DEFAULT_SUSY_GUESS).unwrap();
    let series = YukawaPotential::new(1.0, point.delta).unwrap().truncate();
    let w = susy_coulomb_params(&series, point.m).unwrap();
    let e0 = susy_coulomb_energy(&series, point.m).unwrap();
    let centrifugal = (point.m - 1.0) * (point.m - 3.0) / 4.0;
    for k in 1..=25 {
        let r = 0.4 * k as f64;
        let gap = susy_partner_potential(&w, r).unwrap() - 2.0 * series.value(r) - centrifugal / (r * r);
        assert!((gap + 2.0 * e0).abs() < 1e-10, "r={r}: {gap} vs {}", -2.0 * e0);
    }
}

#[test]
fn closed_form_states_are_normalized() {
    let point = solve_susy_coulomb_point(1.0, DEFAULT_SUSY_GUESS).unwrap();
    let series = YukawaPotential::new(1.0, point.delta).unwrap().truncate();
    let w = susy_coulomb_params(&series, point.m).unwrap();
    let coulomb = susy_coulomb_wavefunction(&w, &series).unwrap();
    assert!(norm_defect(&coulomb, 40.0) < 1e-9);

    let (oscillator, _) = mapped_oscillator(&series, coulomb.energy).unwrap();
    let ansatz = susy_oscillator_params(&series, coulomb.energy, 2.0 * (point.m - 1.0)).unwrap();
    let osc = susy_oscillator_wavefunction(&ansatz, &oscillator).unwrap();
    assert!(norm_defect(&osc, 10.0) < 1e-9);
    assert!(osc.constraint_residuals.0.abs() < 1e-10 && osc.constraint_residuals.1.abs() < 1e-10);
}

#[test]
fn energy_expressions_agree_at_constraint_point() {
    let point = solve_susy_coulomb_point(1.0, DEFAULT_SUSY_GUESS).unwrap();
    let series = YukawaPotential::new(1.0, point.delta).unwrap().truncate();
    let e0 = susy_coulomb_energy(&series, point.m).unwrap();
    let m_prime = 2.0 * (point.m - 1.0);
    let ansatz = susy_oscillator_params(&series, e0, m_prime).unwrap();
    let a = susy_oscillator_energy(&ansatz);
    let b = susy_oscillator_energy_from_series(&series, e0, m_prime).unwrap();
    assert!(((a - b) / a).abs() < 1e-10, "{a} vs {b}");
}

#[test]
fn harmonic_limit() {
    let ansatz = SusyOscillatorAnsatz::new(-1e-14, 0.0, 1.5, -2f64.sqrt()).unwrap();
    assert!((susy_oscillator_energy(&ansatz) - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    let v = ansatz.matched_potential();
    assert!((v.c2 - 1.0).abs() < 1e-12);
    let state = susy_oscillator_wavefunction(&ansatz, &v).unwrap();
    assert!(norm_defect(&state, 12.0) < 1e-9);
    // ρ^{3/2} e^{−ρ²/√2}
    let ratio = |x: f64| state.eval(x) / (x.powf(1.5) * (-x * x / 2f64.sqrt()).exp());
    assert!((ratio(0.5) - ratio(2.0)).abs() < 1e-9);
}
