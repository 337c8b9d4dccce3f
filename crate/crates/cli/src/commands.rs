use num_complex::Complex64;
use specdiff::chebfourier::{describe, EndpointEngine};
use specdiff::chebyshev::{cheb_coefficients, cheb_derivative};
use specdiff::grid::{chebyshev_points, fourier_points, infer_grid};
use specdiff::transforms::{dft, Direction};
use specdiff::{fourier_derivative, lowpass_mask, FilterMask, GridKind, GridSpec, Method, Tensor};

use crate::io::Table;
use crate::CliError;

/// Output block: optional header plus columns.
pub struct Block {
    pub header: Option<Vec<String>>,
    pub columns: Vec<Vec<f64>>,
}

pub fn points(kind: GridKind, n: Option<usize>, m: Option<usize>, a: f64, b: f64) -> Result<Vec<f64>, CliError> {
    let p = match kind {
        GridKind::ChebyshevCosine => {
            let n = n.ok_or_else(|| CliError::Usage("--kind cheb needs --n (polynomial order, count = N + 1)".into()))?;
            if m.is_some() {
                return Err(CliError::Usage("--m applies to --kind fourier; use --n".into()));
            }
            chebyshev_points(n, a, b)?
        }
        GridKind::PeriodicEquispaced => {
            let m = m.ok_or_else(|| CliError::Usage("--kind fourier needs --m (sample count)".into()))?;
            if n.is_some() {
                return Err(CliError::Usage("--n applies to --kind cheb; use --m".into()));
            }
            fourier_points(m, a, b)?
        }
    };
    Ok(p)
}

/// The 1-D view of an input table: optional t column, grid and signal columns.
struct Signal {
    t: Option<Vec<f64>>,
    grid: GridSpec,
    ys: Vec<Vec<f64>>,
    names: Vec<String>,
    /// Rows were given in ascending order on a cosine grid and have been
    /// flipped to the grid's native b-to-a order.
    flipped: bool,
}

fn interval(a: Option<f64>, b: Option<f64>) -> Result<Option<(f64, f64)>, CliError> {
    match (a, b) {
        (Some(a), Some(b)) => Ok(Some((a, b))),
        (None, None) => Ok(None),
        _ => Err(CliError::Usage("--a and --b must be given together".into())),
    }
}

fn signal(table: &Table, kind: GridKind, a: Option<f64>, b: Option<f64>) -> Result<Signal, CliError> {
    let rows = table.rows();
    let names = |skip: usize| -> Vec<String> {
        match &table.header {
            Some(h) => h[skip..].to_vec(),
            None => (0..table.columns.len() - skip).map(|j| format!("y{j}")).collect(),
        }
    };
    if let Some((a, b)) = interval(a, b)? {
        let grid = GridSpec::new(kind, a, b, rows)?;
        return Ok(Signal {
            t: None,
            grid,
            ys: table.columns.clone(),
            names: names(0),
            flipped: false,
        });
    }
    if table.columns.len() < 2 {
        return Err(CliError::Usage(
            "need a t column followed by at least one signal column, or --a/--b".into(),
        ));
    }
    let t = table.columns[0].clone();
    let mut ys = table.columns[1..].to_vec();
    let flipped = kind == GridKind::ChebyshevCosine && rows > 1 && t[0] < t[rows - 1];
    let grid = if flipped {
        let rev: Vec<f64> = t.iter().rev().copied().collect();
        for y in &mut ys {
            y.reverse();
        }
        infer_grid(&rev, kind)?
    } else {
        infer_grid(&t, kind)?
    };
    Ok(Signal {
        t: Some(t),
        grid,
        ys,
        names: names(1),
        flipped,
    })
}

fn mask_for(method: Method, len: usize, cutoff: Option<usize>) -> Result<Option<FilterMask>, CliError> {
    let Some(c) = cutoff else { return Ok(None) };
    let k_max = match method {
        Method::Fourier => len / 2,
        Method::Chebyshev => len.saturating_sub(1),
    };
    Ok(Some(lowpass_mask(k_max, c)?))
}

fn derivative_1d(
    y: &[f64],
    grid: &GridSpec,
    method: Method,
    order: usize,
    mask: Option<&FilterMask>,
) -> Result<Vec<f64>, CliError> {
    Ok(match method {
        Method::Fourier => fourier_derivative(y, grid, order, mask)?,
        Method::Chebyshev => cheb_derivative(y, grid, order, mask)?,
    })
}

pub struct DerivRequest {
    pub method: Method,
    pub order: usize,
    pub axis: usize,
    pub cutoff: Option<usize>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub matrix: bool,
}

pub fn deriv(table: &Table, req: &DerivRequest) -> Result<Block, CliError> {
    if req.matrix {
        return deriv_matrix(table, req);
    }
    if req.axis != 0 {
        return Err(CliError::Usage("--axis other than 0 needs --matrix".into()));
    }
    let sig = signal(table, req.method.grid_kind(), req.a, req.b)?;
    let mask = mask_for(req.method, sig.grid.count, req.cutoff)?;
    let mut columns = Vec::with_capacity(sig.ys.len() + 1);
    if let Some(t) = &sig.t {
        columns.push(t.clone());
    }
    for y in &sig.ys {
        let mut d = derivative_1d(y, &sig.grid, req.method, req.order, mask.as_ref())?;
        if sig.flipped {
            d.reverse();
        }
        columns.push(d);
    }
    Ok(Block {
        header: table.header.clone(),
        columns,
    })
}

fn deriv_matrix(table: &Table, req: &DerivRequest) -> Result<Block, CliError> {
    let (a, b) = interval(req.a, req.b)?
        .ok_or_else(|| CliError::Usage("--matrix needs --a and --b for the differentiated axis".into()))?;
    let (rows, cols) = (table.rows(), table.columns.len());
    if req.axis > 1 {
        return Err(CliError::Usage(format!("--axis {} out of range for a matrix", req.axis)));
    }
    let len = if req.axis == 0 { rows } else { cols };
    let grid = GridSpec::new(req.method.grid_kind(), a, b, len)?;
    let data: Vec<f64> = (0..rows).flat_map(|r| table.columns.iter().map(move |c| c[r])).collect();
    let field = Tensor::new(vec![rows, cols], data)?.with_grid(req.axis, grid)?;
    let mask = mask_for(req.method, len, req.cutoff)?;
    let d = field.partial_derivative(req.axis, req.order, req.method, mask.as_ref())?;
    let flat = d.data();
    let columns = (0..cols).map(|c| (0..rows).map(|r| flat[r * cols + c]).collect()).collect();
    Ok(Block {
        header: table.header.clone(),
        columns,
    })
}

pub fn spectrum(table: &Table, method: Method, a: Option<f64>, b: Option<f64>) -> Result<Block, CliError> {
    let sig = signal(table, method.grid_kind(), a, b)?;
    let single = sig.ys.len() == 1;
    let mut header = vec!["k".to_string()];
    let mut columns = Vec::new();
    match method {
        Method::Fourier => {
            let half = sig.grid.count / 2;
            columns.push((0..=half).map(|k| k as f64).collect());
            for (y, name) in sig.ys.iter().zip(&sig.names) {
                let z: Vec<Complex64> = y.iter().map(|&v| v.into()).collect();
                let s = dft(&z, Direction::Forward)?;
                columns.push(s[..=half].iter().map(|c| c.re).collect());
                columns.push(s[..=half].iter().map(|c| c.im).collect());
                if single {
                    header.extend(["re".to_string(), "im".to_string()]);
                } else {
                    header.extend([format!("re_{name}"), format!("im_{name}")]);
                }
            }
        }
        Method::Chebyshev => {
            columns.push((0..sig.grid.count).map(|k| k as f64).collect());
            for (y, name) in sig.ys.iter().zip(&sig.names) {
                columns.push(cheb_coefficients(y)?.coeffs);
                header.push(if single { "a".to_string() } else { format!("a_{name}") });
            }
        }
    }
    Ok(Block {
        header: Some(header),
        columns,
    })
}

pub fn table(order: usize) -> Result<String, CliError> {
    if order < 1 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    Ok(describe(&EndpointEngine::from_env(), order)?)
}
