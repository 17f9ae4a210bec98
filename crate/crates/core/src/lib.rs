//! Spectral moments and eigenvalue statistics of the real symmetric
//! Toeplitz random-matrix ensemble.
//!
//! The library has four parts:
//!
//! * [`ensemble`] — seeded, reproducible sampling of symmetric Toeplitz
//!   matrices with mean-0 / variance-1 entry distributions;
//! * [`linalg`] — dense symmetric eigensolution, trace powers, and an
//!   FFT-accelerated Toeplitz matrix-vector product;
//! * [`moments`] — exact limiting spectral moments via pairing
//!   enumeration and Diophantine lattice counting in exact rational
//!   arithmetic;
//! * [`statistics`] — Monte Carlo moment estimation, convergence-rate
//!   diagnostics, and adjacent eigenvalue spacing statistics with
//!   Poisson/GOE comparison.
//!
//! Floating-point routines are generic over the scalar type through
//! [`Scalar`]; the exact moment engine works in arbitrary-precision
//! rationals. Concrete `f64` aliases for the main types live at the
//! crate root.

pub mod ensemble;
pub mod linalg;
pub mod moments;
pub mod statistics;

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the numeric routines are generic over: `f32` or `f64`.
pub trait Scalar:
    Float + NumAssign + FromPrimitive + ToPrimitive + Sum + Send + Sync + Debug + Display + 'static
{
}

impl<T> Scalar for T where
    T: Float + NumAssign + FromPrimitive + ToPrimitive + Sum + Send + Sync + Debug + Display + 'static
{
}

/// Default scalar used by the command-line tool and the concrete aliases below.
pub type Real = f64;

/// One ensemble draw at the default scalar.
pub type Sample = ensemble::ToeplitzSample<Real>;
/// Eigenvalue set of one sample at the default scalar.
pub type Spectrum = linalg::Spectrum<Real>;
/// Pooled spacing sample at the default scalar.
pub type SpacingSample = statistics::SpacingSample<Real>;
/// Monte Carlo moment estimate at the default scalar.
pub type MomentEstimate = statistics::MomentEstimate<Real>;
/// Central-moment estimate at the default scalar.
pub type CentralMomentEstimate = statistics::CentralMomentEstimate<Real>;
/// Spacing goodness-of-fit report at the default scalar.
pub type FitReport = statistics::FitReport<Real>;
