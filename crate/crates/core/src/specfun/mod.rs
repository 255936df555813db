//! Special functions. All evaluators are generic in the argument scalar so
//! that jets pass straight through for exact derivatives.

pub mod airy;
pub mod bessel;
pub mod elliptic;
pub mod gamma;
pub mod hyper;
pub mod legendre;
pub mod orthopoly;
pub mod quad;
pub mod theta;

pub use airy::airy_ai;
pub use bessel::{bessel_eval, bessel_i, bessel_j, bessel_k_imag, hankel1_half, hankel1_int, BesselKind};
pub use elliptic::{complete_k, jacobi_elliptic};
pub use gamma::{factorial, gamma_complex, gamma_real, rgamma};
pub use hyper::{hyp1f1, hyp2f1, hyp2f1_regularized};
pub use legendre::{legendre_p, legendre_q_half};
pub use orthopoly::{gegenbauer, jacobi, laguerre, orthopoly_eval, OrthoFamily};
pub use theta::theta3;
