//! Sample grids on arbitrary intervals.
//!
//! Periodic data lives on `M` equispaced points of `[a, b)`. Chebyshev data
//! lives on the `N + 1` cosine-spaced points `cos(πn/N)` mapped affinely onto
//! `[a, b]`; these run from `b` down to `a`.

use std::f64::consts::PI;

use crate::error::{invalid, Result, SpecError};

/// Relative (to `b - a`) tolerance used when validating sample locations.
pub const SAMPLING_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    PeriodicEquispaced,
    ChebyshevCosine,
}

/// Basis kind, interval and sample count. For Chebyshev grids `count` is
/// `N + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub kind: GridKind,
    pub a: f64,
    pub b: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(kind: GridKind, a: f64, b: f64, count: usize) -> Result<Self> {
        check_interval(a, b)?;
        if count < 2 {
            return invalid(format!("grid needs at least 2 samples, got {count}"));
        }
        Ok(Self { kind, a, b, count })
    }

    pub fn periodic(a: f64, b: f64, m: usize) -> Result<Self> {
        Self::new(GridKind::PeriodicEquispaced, a, b, m)
    }

    /// Cosine grid of order `n`, i.e. `n + 1` samples.
    pub fn chebyshev(a: f64, b: f64, n: usize) -> Result<Self> {
        Self::new(GridKind::ChebyshevCosine, a, b, n + 1)
    }

    /// The sample locations this grid implies.
    pub fn points(&self) -> Vec<f64> {
        match self.kind {
            GridKind::PeriodicEquispaced => periodic_points(self.count, self.a, self.b),
            GridKind::ChebyshevCosine => cosine_points(self.count - 1, self.a, self.b),
        }
    }

    /// `scale^ν`, where scale is `(b - a)/2π` (periodic) or `(b - a)/2`
    /// (Chebyshev). Canonical-domain derivatives are divided by this.
    pub fn scale_correction(&self, order: usize) -> f64 {
        let scale = match self.kind {
            GridKind::PeriodicEquispaced => (self.b - self.a) / (2.0 * PI),
            GridKind::ChebyshevCosine => (self.b - self.a) / 2.0,
        };
        scale.powi(order as i32)
    }
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return invalid(format!("interval requires finite b > a, got a={a}, b={b}"));
    }
    Ok(())
}

fn periodic_points(m: usize, a: f64, b: f64) -> Vec<f64> {
    let step = (b - a) / m as f64;
    (0..m).map(|n| a + n as f64 * step).collect()
}

fn cosine_points(n: usize, a: f64, b: f64) -> Vec<f64> {
    let half = (b - a) / 2.0;
    let mid = (b + a) / 2.0;
    (0..=n)
        .map(|i| {
            // pin the endpoints so t_0 = b and t_N = a exactly
            if i == 0 {
                b
            } else if i == n {
                a
            } else {
                // cos(πi/N) written as sin(π(N-2i)/2N): exactly antisymmetric, 0 at the middle
                let k = n as f64 - 2.0 * i as f64;
                (PI * k / (2 * n) as f64).sin() * half + mid
            }
        })
        .collect()
}

/// `M` equispaced points on `[a, b)`.
pub fn fourier_points(m: usize, a: f64, b: f64) -> Result<Vec<f64>> {
    check_interval(a, b)?;
    if m < 2 {
        return invalid(format!("periodic grid needs M >= 2, got {m}"));
    }
    Ok(periodic_points(m, a, b))
}

/// `N + 1` cosine-spaced points on `[a, b]`, descending from `b` to `a`.
pub fn chebyshev_points(n: usize, a: f64, b: f64) -> Result<Vec<f64>> {
    check_interval(a, b)?;
    if n < 1 {
        return invalid("cosine grid needs N >= 1");
    }
    Ok(cosine_points(n, a, b))
}

/// Recovers the grid a sample vector was drawn from, rejecting vectors that do
/// not match the basis' sampling recipe.
pub fn infer_grid(t: &[f64], kind: GridKind) -> Result<GridSpec> {
    if t.len() < 2 {
        return invalid(format!("need at least 2 sample locations, got {}", t.len()));
    }
    if t.iter().any(|v| !v.is_finite()) {
        return invalid("sample locations must be finite");
    }
    let count = t.len();
    let (a, b) = match kind {
        GridKind::PeriodicEquispaced => {
            let span = (t[count - 1] - t[0]) * count as f64 / (count - 1) as f64;
            (t[0], t[0] + span)
        }
        GridKind::ChebyshevCosine => (t[count - 1], t[0]),
    };
    let example = |a: f64, b: f64| -> Vec<f64> {
        let (lo, hi) = if b > a { (a, b) } else { (b, a) };
        let hi = if hi > lo { hi } else { lo + 1.0 };
        match kind {
            GridKind::PeriodicEquispaced => periodic_points(count, lo, hi),
            GridKind::ChebyshevCosine => cosine_points(count - 1, lo, hi),
        }
    };
    if b <= a {
        let reason = match kind {
            GridKind::PeriodicEquispaced => "periodic samples must increase".to_string(),
            GridKind::ChebyshevCosine => {
                "cosine-spaced samples must run from b down to a".to_string()
            }
        };
        return Err(SpecError::InvalidSampling {
            reason,
            example: example(a, b),
        });
    }
    let spec = GridSpec { kind, a, b, count };
    let expected = spec.points();
    let tol = SAMPLING_TOLERANCE * (b - a);
    if let Some((n, (got, want))) = t
        .iter()
        .zip(&expected)
        .enumerate()
        .find(|(_, (got, want))| (*got - *want).abs() > tol)
    {
        return Err(SpecError::InvalidSampling {
            reason: format!("sample {n} is {got}, expected {want} for a {kind:?} grid on [{a}, {b}]"),
            example: expected,
        });
    }
    Ok(spec)
}

/// Free-function form of [`GridSpec::scale_correction`].
pub fn scale_correction(grid: &GridSpec, order: usize) -> f64 {
    grid.scale_correction(order)
}
