use crate::{Error, Real, Result};

const MAX_ITERATIONS: usize = 200;
const MAX_HALVINGS: usize = 40;

/// Root of a two-component residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root2d<T> {
    pub x: T,
    pub y: T,
    pub residual: (T, T),
    pub iterations: usize,
}

fn norm2<T: Real>(r: (T, T)) -> T {
    r.0 * r.0 + r.1 * r.1
}

fn fd_step<T: Real>(v: T) -> T {
    T::lit(1e-7) * v.abs().max(T::one())
}

/// Damped Newton iteration with a forward-difference Jacobian.
///
/// Each Newton step is halved until `|F|²` decreases. When the Jacobian is
/// numerically singular the iterate instead moves one coordinate at a time,
/// bisecting the trial step along that axis until `|F|²` decreases.
pub fn find_root_2d<T, F>(residual: F, initial: (T, T), tol: T) -> Result<Root2d<T>>
where
    T: Real,
    F: Fn(T, T) -> (T, T),
{
    if !(tol > T::zero()) {
        return Err(Error::domain("root tolerance must be positive", tol.as_f64()));
    }
    let eval = |x: T, y: T| -> Result<(T, T)> {
        let r = residual(x, y);
        if r.0.is_finite() && r.1.is_finite() {
            Ok(r)
        } else {
            Err(Error::RootNotFound {
                x: x.as_f64(),
                y: y.as_f64(),
                iterations: 0,
                residual: f64::NAN,
            })
        }
    };
    let converged = |r: (T, T)| r.0.abs() < tol && r.1.abs() < tol;

    let (mut x, mut y) = initial;
    let mut r = eval(x, y)?;
    for iteration in 0..MAX_ITERATIONS {
        if converged(r) {
            return Ok(Root2d {
                x,
                y,
                residual: r,
                iterations: iteration,
            });
        }
        let (hx, hy) = (fd_step(x), fd_step(y));
        let rx = eval(x + hx, y)?;
        let ry = eval(x, y + hy)?;
        let j11 = (rx.0 - r.0) / hx;
        let j21 = (rx.1 - r.1) / hx;
        let j12 = (ry.0 - r.0) / hy;
        let j22 = (ry.1 - r.1) / hy;
        let det = j11 * j22 - j12 * j21;
        let scale = (j11.abs() + j12.abs()) * (j21.abs() + j22.abs());

        let base = norm2(r);
        let mut accepted = None;
        if det.abs() > T::lit(1e-12) * scale && det.is_finite() {
            let dx = -(j22 * r.0 - j12 * r.1) / det;
            let dy = -(-j21 * r.0 + j11 * r.1) / det;
            let mut t = T::one();
            for _ in 0..MAX_HALVINGS {
                let (nx, ny) = (x + t * dx, y + t * dy);
                if let Ok(nr) = eval(nx, ny) {
                    if norm2(nr) < base {
                        accepted = Some((nx, ny, nr));
                        break;
                    }
                }
                t = t * T::lit(0.5);
            }
        }
        if accepted.is_none() {
            accepted = coordinate_search(&eval, x, y, base);
        }
        match accepted {
            Some((nx, ny, nr)) => {
                x = nx;
                y = ny;
                r = nr;
            }
            None => {
                return Err(Error::RootNotFound {
                    x: x.as_f64(),
                    y: y.as_f64(),
                    iterations: iteration,
                    residual: norm2(r).sqrt().as_f64(),
                })
            }
        }
    }
    if converged(r) {
        return Ok(Root2d {
            x,
            y,
            residual: r,
            iterations: MAX_ITERATIONS,
        });
    }
    Err(Error::RootNotFound {
        x: x.as_f64(),
        y: y.as_f64(),
        iterations: MAX_ITERATIONS,
        residual: norm2(r).sqrt().as_f64(),
    })
}

#[allow(clippy::type_complexity)]
fn coordinate_search<T: Real>(
    eval: &impl Fn(T, T) -> Result<(T, T)>,
    x: T,
    y: T,
    base: T,
) -> Option<(T, T, (T, T))> {
    for axis in 0..2 {
        let v = if axis == 0 { x } else { y };
        let mut step = T::lit(0.1) * v.abs().max(T::one());
        for _ in 0..MAX_HALVINGS {
            for s in [step, -step] {
                let (nx, ny) = if axis == 0 { (x + s, y) } else { (x, y + s) };
                if let Ok(nr) = eval(nx, ny) {
                    if norm2(nr) < base {
                        return Some((nx, ny, nr));
                    }
                }
            }
            step = step * T::lit(0.5);
        }
    }
    None
}
