//! Jacobi theta function Θ₃(v|τ) = Σ_n exp(iπτn² + 2inv).

use num_complex::Complex;
use num_traits::{Float, FloatConst, One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{lit, ComplexScalar};

/// Θ₃(v|τ). For |τ| < 1 the series is summed at −1/τ through
/// Θ₃(v|τ) = (−iτ)^{−1/2} e^{−iv²/(πτ)} Θ₃(v/τ | −1/τ), which avoids the
/// cancellation of the slowly decaying direct series.
pub fn theta3<S: ComplexScalar>(v: S, tau: Complex<S::Real>) -> Result<S> {
    if tau.im <= S::Real::zero() {
        return Err(Error::InvalidParameter("theta3 needs Im tau > 0".into()));
    }
    if tau.norm() >= S::Real::one() {
        return theta3_terms(v, tau, 0);
    }
    let one = Complex::<S::Real>::one();
    let i = Complex::new(S::Real::zero(), S::Real::one());
    let pi = S::Real::PI();
    let inv = one / tau;
    let pre = (-(i * tau)).powf(lit(-0.5));
    let gauss = (v * v).mul_c(-(i * inv) / pi).exp();
    Ok((gauss * theta3_terms(v.mul_c(inv), -inv, 0)?).mul_c(pre))
}

/// Same series with `extra` additional terms past the stopping point.
pub fn theta3_terms<S: ComplexScalar>(v: S, tau: Complex<S::Real>, extra: usize) -> Result<S> {
    if tau.im <= S::Real::zero() {
        return Err(Error::InvalidParameter("theta3 needs Im tau > 0".into()));
    }
    let pi = S::Real::PI();
    let i = Complex::new(S::Real::zero(), S::Real::one());
    let grow = v.value_c().im.abs();
    let mut sum = S::one();
    let mut past = None;
    for n in 1..100_000usize {
        let nf: S::Real = lit(n as f64);
        let q = (i * tau * pi * nf * nf).exp();
        let bound = q.norm() * (lit::<S::Real>(2.0) * nf * grow).exp();
        sum += v.scale(lit(2.0 * n as f64)).cos().mul_c(q).scale(lit(2.0));
        match past {
            None if bound < lit(1e-17) => {
                if extra == 0 {
                    return Ok(sum);
                }
                past = Some(1);
            }
            Some(m) if m >= extra => return Ok(sum),
            Some(m) => past = Some(m + 1),
            None => {}
        }
    }
    Err(Error::NoConvergence("theta3"))
}
