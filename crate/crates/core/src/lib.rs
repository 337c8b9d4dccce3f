//! Spectral derivatives of sampled functions.
//!
//! Periodic data is differentiated in the Fourier basis by multiplying DFT
//! coefficients by `(jk)^ν`. Aperiodic data sampled on a cosine-spaced grid is
//! differentiated in the Chebyshev basis, either through the series derivative
//! recurrence ([`chebyshev`]) or through the θ-domain route with chain-rule
//! factors and symbolic endpoint limits ([`chebfourier`]), which serves as an
//! independent reference for the first.
//!
//! Both bases accept arbitrary intervals `[a, b]` ([`grid`]), optional
//! multiplicative spectral filters, and can be applied along one axis of a
//! multidimensional array ([`tensor`]).

pub mod chebfourier;
pub mod chebyshev;
pub mod error;
pub mod fourier;
pub mod grid;
pub mod tensor;
pub mod transforms;

pub use chebyshev::{cheb_derivative, ChebSeries};
pub use error::{Result, SpecError};
pub use fourier::{fourier_derivative, lowpass_mask, FilterMask};
pub use grid::{GridKind, GridSpec};
pub use num_complex::Complex64;
pub use tensor::{Method, Tensor};
