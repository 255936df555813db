//! Associated Legendre functions.

use num_complex::Complex;
use num_traits::{FloatConst, One, Zero};

use super::hyper::hyp2f1_regularized;
use crate::error::{Error, Result};
use crate::scalar::{lit, ComplexScalar};

/// P_ν^μ(x) through the hypergeometric representation
/// [(1+x)/(1−x)]^{μ/2} ₂F₁(−ν, ν+1; 1−μ; (1−x)/2)/Γ(1−μ).
///
/// On (−1,1) this is the Ferrers function; for x > 1 the ratio is taken as
/// (x+1)/(x−1). Reliable for −0.8 ≤ x < 1 and 1 < x ≤ 19; 1−μ at a pole of Γ
/// is handled through the regularized series.
pub fn legendre_p<S: ComplexScalar>(nu: Complex<S::Real>, mu: Complex<S::Real>, x: S) -> Result<S> {
    let xr = x.value_re();
    let one = S::Real::one();
    if xr == one || xr == -one {
        return Err(Error::OutOfRegion { func: "legendre_p", detail: "x = ±1".into() });
    }
    let ratio = if xr < one { (S::one() + x) / (S::one() - x) } else { (x + S::one()) / (x - S::one()) };
    let z = (S::one() - x).scale(lit(0.5));
    let f = hyp2f1_regularized(-nu, nu + one, Complex::new(one, S::Real::zero()) - mu, z)?;
    let half: S::Real = lit(0.5);
    Ok(ratio.powc(mu * half) * f)
}

/// Q_ν^{1/2}(u) = i √(π/(2 sinh d)) e^{−(ν+1/2)d}, u = cosh d > 1.
pub fn legendre_q_half<S: ComplexScalar>(nu: Complex<S::Real>, u: S) -> Result<S> {
    if u.value_re() <= S::Real::one() {
        return Err(Error::OutOfRegion { func: "legendre_q_half", detail: "u must exceed 1".into() });
    }
    let sh = (u * u - S::one()).sqrt();
    let d = (u + sh).ln();
    let half: S::Real = lit(0.5);
    let pi = S::Real::PI();
    let amp = (sh.scale(lit(2.0)) / S::from_real(pi)).recip().sqrt();
    Ok((amp * d.mul_c(-(nu + half)).exp()) * S::i())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn degree_zero_order_zero_at_one_limit() {
        let v =
            legendre_p(Complex64::new(0.7, 0.2), Complex64::new(0.0, 0.0), Complex64::new(1.0 - 1e-15, 0.0)).unwrap();
        assert!((v - 1.0).norm() < 1e-12);
    }

    #[test]
    fn half_order_closed_form() {
        let th = std::f64::consts::FRAC_PI_3;
        let v = legendre_p(Complex64::new(0.5, 0.0), Complex64::new(-0.5, 0.0), Complex64::new(th.cos(), 0.0)).unwrap();
        let exact = (2.0 / (std::f64::consts::PI * th.sin())).sqrt() * th.sin();
        assert!((v.re - exact).abs() < 1e-13);
        assert!((v.re - 0.7425).abs() < 1e-4);
    }

    #[test]
    fn legendre_polynomial() {
        let x = 0.3_f64;
        let v = legendre_p(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(x, 0.0)).unwrap();
        assert!((v.re - (3.0 * x * x - 1.0) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn q_half_closed_form() {
        let d = 1.0_f64;
        let v = legendre_q_half(Complex64::new(0.0, 0.0), Complex64::new(d.cosh(), 0.0)).unwrap();
        assert!(v.re.abs() < 1e-15);
        assert!((v.im - 0.701_223_699_413_775_8).abs() < 1e-14);
        assert!(legendre_q_half(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)).is_err());
    }
}
