use crate::{Error, Real, Result};

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (abscissae descending, centre last).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const REL_TOL: f64 = 1e-11;
const ABS_TOL: f64 = 1e-15;
const TAIL_CUTOFF: f64 = 1e-18;
const MIN_PANELS: usize = 4;
const MAX_PANELS: usize = 80;
const MAX_SUBDIVISIONS: usize = 20_000;

#[derive(Debug, Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    pub estimated_error: T,
    pub segments: usize,
}

fn kronrod<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> (Segment<T>, T) {
    let half = T::lit(0.5);
    let centre = half * (a + b);
    let radius = half * (b - a);
    let fc = f(centre);
    let mut kron = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    let mut peak = fc.abs();
    for j in 0..7 {
        let dx = radius * T::lit(XGK[j]);
        let (f1, f2) = (f(centre - dx), f(centre + dx));
        peak = peak.max(f1.abs()).max(f2.abs());
        kron = kron + T::lit(WGK[j]) * (f1 + f2);
        if j % 2 == 1 {
            gauss = gauss + T::lit(WG[j / 2]) * (f1 + f2);
        }
    }
    let value = kron * radius;
    let error = ((kron - gauss) * radius).abs();
    (Segment { a, b, value, error }, peak)
}

impl<T: Real> Quadrature<T> {
    /// Integrates `f` over `(0, ∞)`.
    ///
    /// The half-line is cut into panels `[0, s], [s, 2s], [2s, 4s], …` with
    /// `s = decay_scale`; panels stop once every sampled `|f|` in a panel falls
    /// below `1e-18` of the largest value seen. The panels are then bisected
    /// adaptively (Gauss–Kronrod 7/15) until the summed error estimate is
    /// below `1e-11·|I| + 1e-15`.
    pub fn semi_infinite<F: Fn(T) -> T>(f: F, decay_scale: T) -> Result<Self> {
        if !(decay_scale > T::zero()) || !decay_scale.is_finite() {
            return Err(Error::domain("decay scale must be positive", decay_scale.as_f64()));
        }
        let mut segments = Vec::new();
        let mut peak = T::zero();
        let (mut a, mut b) = (T::zero(), decay_scale);
        let mut closed = false;
        for panel in 0..MAX_PANELS {
            let (seg, panel_peak) = kronrod(&f, a, b);
            if !seg.value.is_finite() {
                return Err(Error::domain("integrand is not finite near", b.as_f64()));
            }
            peak = peak.max(panel_peak);
            segments.push(seg);
            if panel + 1 >= MIN_PANELS && panel_peak <= T::lit(TAIL_CUTOFF) * peak {
                closed = true;
                break;
            }
            a = b;
            b = b + b;
        }
        let total = |s: &[Segment<T>]| {
            s.iter()
                .fold((T::zero(), T::zero()), |(v, e), g| (v + g.value, e + g.error))
        };
        if !closed {
            let (value, error) = total(&segments);
            return Err(Error::Convergence {
                context: "semi-infinite quadrature tail".into(),
                estimate: value.as_f64(),
                estimated_error: error.as_f64(),
            });
        }

        let mut splits = 0;
        loop {
            let (value, error) = total(&segments);
            if error <= T::lit(REL_TOL) * value.abs() + T::lit(ABS_TOL) {
                return Ok(Self {
                    value,
                    estimated_error: error,
                    segments: segments.len(),
                });
            }
            if splits >= MAX_SUBDIVISIONS {
                return Err(Error::Convergence {
                    context: "semi-infinite quadrature".into(),
                    estimate: value.as_f64(),
                    estimated_error: error.as_f64(),
                });
            }
            let (worst, _) = segments
                .iter()
                .enumerate()
                .fold((0, T::neg_infinity()), |(wi, we), (i, s)| {
                    if s.error > we {
                        (i, s.error)
                    } else {
                        (wi, we)
                    }
                });
            let Segment { a, b, .. } = segments.swap_remove(worst);
            let mid = T::lit(0.5) * (a + b);
            segments.push(kronrod(&f, a, mid).0);
            segments.push(kronrod(&f, mid, b).0);
            splits += 1;
        }
    }
}

/// Integral of `f` over `(0, ∞)`; see [`Quadrature::semi_infinite`].
pub fn integrate_semi_infinite<T: Real, F: Fn(T) -> T>(f: F, decay_scale: T) -> Result<T> {
    Quadrature::semi_infinite(f, decay_scale).map(|q| q.value)
}
