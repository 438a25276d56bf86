//! Certified sign patterns and growth diagnostics for Maclaurin coefficients
//! of entire functions in the Laguerre-Polya class.
//!
//! Series are generic over [`scalar::Coefficient`]; exact rationals and
//! error-tracked balls are the two backends. The aliases below name the
//! concrete instantiations used throughout.

pub mod cli;
pub mod error;
pub mod functions;
pub mod growth;
pub mod hyperbolicity;
pub mod scalar;
pub mod series;
pub mod signs;
pub mod theorems;

pub use error::{Error, Result};
pub use scalar::{Backend, Ball, Coefficient, Sign};
pub use series::{AnySeries, TruncatedSeries};

pub type Rational = num_rational::BigRational;
pub type ExactSeries = TruncatedSeries<Rational>;
pub type BallSeries = TruncatedSeries<Ball>;
pub use hyperbolicity::ExactPolynomial;
