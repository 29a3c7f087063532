use crate::{Error, Real, Result};

/// Uniform grid of strictly positive radii.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid<T> {
    r_min: T,
    r_max: T,
    n_points: usize,
    spacing: T,
}

impl<T: Real> RadialGrid<T> {
    pub const MIN_POINTS: usize = 16;

    pub fn new(r_min: T, r_max: T, n_points: usize) -> Result<Self> {
        if !(r_min > T::zero()) {
            return Err(Error::domain("grid start must be positive", r_min.as_f64()));
        }
        if !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "grid end {r_max} must exceed start {r_min}"
            )));
        }
        if n_points < Self::MIN_POINTS {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least {} points, got {n_points}",
                Self::MIN_POINTS
            )));
        }
        let spacing = (r_max - r_min) / T::lit((n_points - 1) as f64);
        Ok(Self {
            r_min,
            r_max,
            n_points,
            spacing,
        })
    }

    /// Interior points of `(0, box_radius)` split into `intervals` equal
    /// steps, i.e. `r_i = i·h` for `i = 1..intervals`. Both walls carry
    /// Dirichlet conditions and are not part of the grid.
    pub fn interior(box_radius: T, intervals: usize) -> Result<Self> {
        if !(box_radius > T::zero()) {
            return Err(Error::domain("box radius must be positive", box_radius.as_f64()));
        }
        if intervals < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 intervals, got {intervals}"
            )));
        }
        let h = box_radius / T::lit(intervals as f64);
        Self::new(h, h * T::lit((intervals - 1) as f64), intervals - 1)
    }

    pub fn r_min(&self) -> T {
        self.r_min
    }

    pub fn r_max(&self) -> T {
        self.r_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> T {
        self.spacing
    }

    /// Position of the Dirichlet wall one step beyond the last point.
    pub fn wall(&self) -> T {
        self.r_max + self.spacing
    }

    pub fn point(&self, i: usize) -> T {
        debug_assert!(i < self.n_points);
        if i + 1 == self.n_points {
            self.r_max
        } else {
            self.r_min + self.spacing * T::lit(i as f64)
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = T> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_endpoints() {
        let g = RadialGrid::new(0.5_f64, 2.0, 16).unwrap();
        assert!((g.spacing() - 0.1).abs() < 1e-15);
        assert_eq!(g.point(0), 0.5);
        assert_eq!(g.point(15), 2.0);
        assert!(g.points().all(|r| r > 0.0));
    }

    #[test]
    fn interior_grid_excludes_walls() {
        let g = RadialGrid::interior(10.0_f64, 100).unwrap();
        assert_eq!(g.n_points(), 99);
        assert!((g.r_min() - 0.1).abs() < 1e-15);
        assert!((g.r_max() - 9.9).abs() < 1e-12);
        assert!((g.wall() - 10.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(RadialGrid::new(0.0, 1.0, 32).is_err());
        assert!(RadialGrid::new(1.0, 1.0, 32).is_err());
        assert!(RadialGrid::new(0.1, 1.0, 15).is_err());
        assert!(RadialGrid::<f32>::new(0.1, 1.0, 16).is_ok());
    }
}
