//! Numerics for separable coordinate systems on the three-dimensional complex
//! sphere.

pub mod eigenbasis;
pub mod embedding;
pub mod error;
pub mod geometry;
pub mod jet;
pub mod kernel;
pub mod report;
pub mod scalar;
pub mod specfun;

pub use error::{Error, Result};
pub use jet::Jet;
pub use scalar::{ComplexScalar, RealField, Scalar};

pub type Real = f64;
pub type Cplx = num_complex::Complex<f64>;
/// Second-order jet in three coordinates over complex doubles.
pub type Jet3 = Jet<Cplx, 3>;
/// Second-order jet in one variable.
pub type Jet1 = Jet<Cplx, 1>;
