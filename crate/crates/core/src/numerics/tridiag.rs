use crate::{Error, Real, Result};

/// Real symmetric tridiagonal matrix stored as its diagonal and the single
/// off-diagonal band (one element shorter).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSymmetric<T> {
    diagonal: Vec<T>,
    off_diagonal: Vec<T>,
}

impl<T: Real> TridiagonalSymmetric<T> {
    pub fn new(diagonal: Vec<T>, off_diagonal: Vec<T>) -> Result<Self> {
        if diagonal.is_empty() {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        if off_diagonal.len() + 1 != diagonal.len() {
            return Err(Error::InvalidArgument(format!(
                "off-diagonal length {} does not match dimension {}",
                off_diagonal.len(),
                diagonal.len()
            )));
        }
        if diagonal.iter().chain(&off_diagonal).any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
        }
        Ok(Self {
            diagonal,
            off_diagonal,
        })
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[T] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[T] {
        &self.off_diagonal
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.dim();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let left = if i > 0 { self.off_diagonal[i - 1].abs() } else { T::zero() };
            let right = if i + 1 < n { self.off_diagonal[i].abs() } else { T::zero() };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo, hi)
    }

    fn pivot_floor(&self) -> T {
        let emax = self
            .off_diagonal
            .iter()
            .fold(T::one(), |m, &e| m.max(e * e));
        T::min_positive_value() * emax
    }

    /// Number of eigenvalues below `x` (Sturm sequence via the LDLᵀ pivots).
    pub fn sturm_count(&self, x: T) -> usize {
        self.sturm_count_with_floor(x, self.pivot_floor())
    }

    fn sturm_count_with_floor(&self, x: T, pivmin: T) -> usize {
        let mut count = 0;
        let mut q = self.diagonal[0] - x;
        if q.abs() <= pivmin {
            q = -pivmin;
        }
        if q < T::zero() {
            count += 1;
        }
        for (d, e) in self.diagonal[1..].iter().zip(&self.off_diagonal) {
            q = (*d - x) - *e * *e / q;
            if q.abs() <= pivmin {
                q = -pivmin;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// The `k` smallest eigenvalues in ascending order, by bisection on the
    /// Sturm count.
    pub fn eigenvalues_lowest(&self, k: usize) -> Result<Vec<T>> {
        let n = self.dim();
        if k > n {
            return Err(Error::InvalidArgument(format!(
                "requested {k} eigenvalues of a {n}x{n} matrix"
            )));
        }
        let pivmin = self.pivot_floor();
        let (gl, gu) = self.gershgorin();
        let norm = gl.abs().max(gu.abs());
        let eps = T::epsilon();
        let pad = (norm * eps * T::lit(2.0 * n as f64 + 10.0)).max(pivmin);
        let (lo0, hi0) = (gl - pad, gu + pad);
        // resolve each eigenvalue to its own precision, not the norm's
        let abs_tol = (eps * eps * norm).max(pivmin);

        let mut out = Vec::with_capacity(k);
        let mut lower = lo0;
        for j in 0..k {
            let mut lo = lower;
            let mut hi = hi0;
            loop {
                let mid = T::lit(0.5) * (lo + hi);
                let width = hi - lo;
                if width <= abs_tol.max(T::lit(2.0) * eps * lo.abs().max(hi.abs()))
                    || mid <= lo
                    || mid >= hi
                {
                    break;
                }
                if self.sturm_count_with_floor(mid, pivmin) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let value = T::lit(0.5) * (lo + hi);
            out.push(value);
            lower = lo;
        }
        Ok(out)
    }
}

/// Free-function form of [`TridiagonalSymmetric::eigenvalues_lowest`].
pub fn eigenvalues_lowest<T: Real>(matrix: &TridiagonalSymmetric<T>, k: usize) -> Result<Vec<T>> {
    matrix.eigenvalues_lowest(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn laplacian(n: usize) -> (TridiagonalSymmetric<f64>, f64) {
        let h = 1.0 / (n as f64 + 1.0);
        let m = TridiagonalSymmetric::new(vec![2.0 / (h * h); n], vec![-1.0 / (h * h); n - 1])
            .unwrap();
        (m, h)
    }

    #[test]
    fn two_by_two() {
        let m = TridiagonalSymmetric::new(vec![2.0_f64, 2.0], vec![-1.0]).unwrap();
        let all = m.eigenvalues_lowest(2).unwrap();
        assert!((all[0] - 1.0).abs() < 1e-14 && (all[1] - 3.0).abs() < 1e-14);
        let lowest = eigenvalues_lowest(&m, 1).unwrap();
        assert_eq!(lowest.len(), 1);
        assert!((lowest[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix() {
        let m = TridiagonalSymmetric::new(vec![0.0_f64; 3], vec![0.0; 2]).unwrap();
        for v in m.eigenvalues_lowest(3).unwrap() {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn laplacian_matches_closed_form() {
        let (m, h) = laplacian(100);
        let ev = m.eigenvalues_lowest(5).unwrap();
        for (j, v) in ev.iter().enumerate() {
            let s = ((j + 1) as f64 * PI * h / 2.0).sin();
            let exact = 4.0 / (h * h) * s * s;
            assert!(((v - exact) / exact).abs() < 1e-10, "j={j}: {v} vs {exact}");
        }
        // lowest is π² up to O(h²)
        assert!((ev[0] - PI * PI).abs() < PI.powi(4) * h * h / 12.0 * 1.01);
    }

    #[test]
    fn k_larger_than_dimension_is_rejected() {
        let m = TridiagonalSymmetric::new(vec![1.0_f64, 2.0], vec![0.5]).unwrap();
        assert!(matches!(m.eigenvalues_lowest(3), Err(Error::InvalidArgument(_))));
        assert!(m.eigenvalues_lowest(0).unwrap().is_empty());
    }

    #[test]
    fn inconsistent_lengths_are_rejected() {
        assert!(TridiagonalSymmetric::new(vec![1.0_f64, 2.0], vec![]).is_err());
        assert!(TridiagonalSymmetric::<f64>::new(vec![], vec![]).is_err());
        assert!(TridiagonalSymmetric::new(vec![f64::NAN], vec![]).is_err());
    }

    #[test]
    fn sturm_count_brackets_spectrum() {
        let m = TridiagonalSymmetric::new(vec![2.0_f64, 2.0], vec![-1.0]).unwrap();
        assert_eq!(m.sturm_count(0.5), 0);
        assert_eq!(m.sturm_count(2.0), 1);
        assert_eq!(m.sturm_count(3.5), 2);
    }

    #[test]
    fn runs_in_single_precision() {
        let m = TridiagonalSymmetric::new(vec![2.0_f32, 2.0], vec![-1.0]).unwrap();
        let ev = m.eigenvalues_lowest(2).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-5 && (ev[1] - 3.0).abs() < 1e-5);
    }
}
