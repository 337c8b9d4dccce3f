//! Row-major multidimensional arrays and axis-wise derivatives.
//!
//! Differentiation is linear, so a partial derivative is the 1-D operation
//! applied independently to every fiber along one axis. Mixed partials are
//! successive single-axis calls.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::chebyshev::{cheb_derivative, cheb_derivative_complex};
use crate::error::{invalid, Result};
use crate::fourier::{fourier_derivative, fourier_derivative_complex, FilterMask};
use crate::grid::{GridKind, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fourier,
    Chebyshev,
}

impl Method {
    /// Grid kind the method differentiates on.
    pub fn grid_kind(self) -> GridKind {
        match self {
            Method::Fourier => GridKind::PeriodicEquispaced,
            Method::Chebyshev => GridKind::ChebyshevCosine,
        }
    }
}

/// Sample types the 1-D derivative routines accept.
pub trait SpectralScalar: Copy + Send + Sync + 'static {
    fn derivative(
        y: &[Self],
        grid: &GridSpec,
        method: Method,
        order: usize,
        mask: Option<&FilterMask>,
    ) -> Result<Vec<Self>>;
}

impl SpectralScalar for f64 {
    fn derivative(
        y: &[f64],
        grid: &GridSpec,
        method: Method,
        order: usize,
        mask: Option<&FilterMask>,
    ) -> Result<Vec<f64>> {
        match method {
            Method::Fourier => fourier_derivative(y, grid, order, mask),
            Method::Chebyshev => cheb_derivative(y, grid, order, mask),
        }
    }
}

impl SpectralScalar for Complex64 {
    fn derivative(
        y: &[Complex64],
        grid: &GridSpec,
        method: Method,
        order: usize,
        mask: Option<&FilterMask>,
    ) -> Result<Vec<Complex64>> {
        match method {
            Method::Fourier => fourier_derivative_complex(y, grid, order, mask),
            Method::Chebyshev => cheb_derivative_complex(y, grid, order, mask),
        }
    }
}

/// One step of a mixed partial: differentiate along `axis`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSpec {
    pub axis: usize,
    pub order: usize,
    pub method: Method,
    pub mask: Option<FilterMask>,
}

/// Dense row-major array with an optional grid per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
    grids: Vec<Option<GridSpec>>,
}

impl<T: Copy + Send + Sync> Tensor<T> {
    pub fn new(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return invalid(format!("shape must be nonempty with positive extents, got {shape:?}"));
        }
        let expected: usize = shape.iter().product();
        if expected != data.len() {
            return invalid(format!(
                "shape {shape:?} needs {expected} elements, got {}",
                data.len()
            ));
        }
        let grids = vec![None; shape.len()];
        Ok(Self { shape, data, grids })
    }

    /// Attaches `grid` to `axis`; its count must equal the axis extent.
    pub fn with_grid(mut self, axis: usize, grid: GridSpec) -> Result<Self> {
        self.check_axis(axis)?;
        if grid.count != self.shape[axis] {
            return invalid(format!(
                "grid has {} points but axis {axis} has extent {}",
                grid.count, self.shape[axis]
            ));
        }
        self.grids[axis] = Some(grid);
        Ok(self)
    }

    /// Fills a tensor by evaluating `f` at the grid points of every axis.
    pub fn from_grids(grids: &[GridSpec], f: impl Fn(&[f64]) -> T) -> Result<Self> {
        let points: Vec<Vec<f64>> = grids.iter().map(GridSpec::points).collect();
        let shape: Vec<usize> = grids.iter().map(|g| g.count).collect();
        let total: usize = shape.iter().product();
        let mut coords = vec![0.0; grids.len()];
        let data = (0..total)
            .map(|flat| {
                let mut rem = flat;
                for d in (0..shape.len()).rev() {
                    coords[d] = points[d][rem % shape[d]];
                    rem /= shape[d];
                }
                f(&coords)
            })
            .collect();
        let mut t = Self::new(shape, data)?;
        for (axis, g) in grids.iter().enumerate() {
            t = t.with_grid(axis, *g)?;
        }
        Ok(t)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn grid(&self, axis: usize) -> Option<&GridSpec> {
        self.grids.get(axis).and_then(Option::as_ref)
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.rank() {
            return invalid(format!("axis {axis} out of range for rank {}", self.rank()));
        }
        Ok(())
    }

    /// Replaces every 1-D fiber along `axis` with `op(fiber)`. Fibers are
    /// processed in parallel; each is independent so the result does not
    /// depend on scheduling.
    pub fn apply_along_axis<F>(&self, axis: usize, op: F) -> Result<Self>
    where
        F: Fn(&[T]) -> Result<Vec<T>> + Sync,
    {
        self.check_axis(axis)?;
        let len = self.shape[axis];
        let stride: usize = self.shape[axis + 1..].iter().product();
        let outer: usize = self.shape[..axis].iter().product();

        let fibers: Vec<Vec<T>> = (0..outer * stride)
            .into_par_iter()
            .map(|f| {
                let (o, i) = (f / stride, f % stride);
                let base = o * len * stride + i;
                let fiber: Vec<T> = (0..len).map(|n| self.data[base + n * stride]).collect();
                let out = op(&fiber)?;
                if out.len() != len {
                    return invalid(format!(
                        "operation changed fiber length from {len} to {}",
                        out.len()
                    ));
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;

        let mut data = self.data.clone();
        for (f, fiber) in fibers.iter().enumerate() {
            let (o, i) = (f / stride, f % stride);
            let base = o * len * stride + i;
            for (n, v) in fiber.iter().enumerate() {
                data[base + n * stride] = *v;
            }
        }
        Ok(Self {
            shape: self.shape.clone(),
            data,
            grids: self.grids.clone(),
        })
    }
}

impl<T: SpectralScalar> Tensor<T> {
    /// `ν`-th partial derivative along `axis` using the grid attached there.
    pub fn partial_derivative(
        &self,
        axis: usize,
        order: usize,
        method: Method,
        mask: Option<&FilterMask>,
    ) -> Result<Self> {
        self.check_axis(axis)?;
        let grid = match self.grid(axis) {
            Some(g) => *g,
            None => return invalid(format!("no grid attached to axis {axis}")),
        };
        if grid.kind != method.grid_kind() {
            return invalid(format!(
                "axis {axis} has a {:?} grid, incompatible with {method:?}",
                grid.kind
            ));
        }
        self.apply_along_axis(axis, |fiber| T::derivative(fiber, &grid, method, order, mask))
    }

    /// Applies each step in order, left to right.
    pub fn mixed_partial(&self, specs: &[PartialSpec]) -> Result<Self> {
        specs.iter().try_fold(self.clone(), |t, s| {
            t.partial_derivative(s.axis, s.order, s.method, s.mask.as_ref())
        })
    }
}
