//! Gauss and Kummer hypergeometric functions.
//!
//! Both are generic in the argument type, so jets passed as `z` yield exact
//! derivatives through the series.

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use super::gamma::{gamma_complex, rgamma};
use crate::error::{Error, Result};
use crate::scalar::{lit, ComplexScalar, RealField};

const MAX_TERMS: usize = 6000;
/// |z| bound for the direct and transformed series.
pub const SERIES_RADIUS: f64 = 0.9;

fn c<F: RealField>(x: f64) -> Complex<F> {
    Complex::new(lit(x), F::zero())
}

fn nonpositive_integer<F: RealField>(a: Complex<F>) -> Option<usize> {
    if a.im == F::zero() && a.re <= F::zero() && a.re == a.re.round() {
        a.re.abs().to_usize()
    } else {
        None
    }
}

/// Direct Maclaurin series Σ (a)_n (b)_n / (c)_n z^n / n!.
fn series_2f1<S: ComplexScalar>(a: Complex<S::Real>, b: Complex<S::Real>, cc: Complex<S::Real>, z: S) -> Result<S> {
    let eps: S::Real = lit(1e-17);
    let mut term = S::one();
    let mut sum = S::one();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf: S::Real = lit(n as f64);
        let num = (a + nf) * (b + nf);
        if num.is_zero() {
            return Ok(sum);
        }
        let den = (cc + nf) * (nf + S::Real::one());
        term = (term * z).mul_c(num / den);
        sum += term;
        if term.magnitude() <= eps * sum.magnitude() {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence("hyp2f1"))
}

/// ₂F₁(a, b; c; z).
///
/// Region: any z when a or b is a nonpositive integer; otherwise |z| ≤ 0.9,
/// |z/(z−1)| ≤ 0.9 (Pfaff) or |1−z| ≤ 0.9 with c−a−b not an integer.
pub fn hyp2f1<S: ComplexScalar>(a: Complex<S::Real>, b: Complex<S::Real>, cc: Complex<S::Real>, z: S) -> Result<S> {
    let terminating = nonpositive_integer(a).or(nonpositive_integer(b));
    if let Some(m) = nonpositive_integer(cc) {
        match terminating {
            Some(t) if t <= m => {}
            _ => return Err(Error::Pole("hyp2f1 (c is a nonpositive integer)")),
        }
    }
    if terminating.is_some() {
        return series_2f1(a, b, cc, z);
    }
    let zv = z.value_c();
    let r: S::Real = lit(SERIES_RADIUS);
    if zv.norm() <= r {
        return series_2f1(a, b, cc, z);
    }
    let one = Complex::<S::Real>::one();
    if (zv / (zv - one)).norm() <= r {
        // Pfaff: (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1))
        let w = z / (z.add_real(-S::Real::one()));
        let pre = (S::one() - z).powc(-a);
        return Ok(pre * series_2f1(a, cc - b, cc, w)?);
    }
    if (one - zv).norm() <= r {
        let s = cc - a - b;
        if s.im == S::Real::zero() && s.re == s.re.round() {
            return Err(Error::OutOfRegion { func: "hyp2f1", detail: "c-a-b integer near z=1".into() });
        }
        let w = S::one() - z;
        let gc = gamma_complex(cc)?;
        let t1 = gc * gamma_complex(s)? * rgamma(cc - a) * rgamma(cc - b);
        let t2 = gc * gamma_complex(-s)? * rgamma(a) * rgamma(b);
        let f1 = series_2f1(a, b, one - s, w)?;
        let f2 = series_2f1(cc - a, cc - b, one + s, w)?;
        return Ok(f1.mul_c(t1) + w.powc(s) * f2.mul_c(t2));
    }
    Err(Error::OutOfRegion { func: "hyp2f1", detail: format!("z = {zv:?}") })
}

/// Regularized ₂F₁(a,b;c;z)/Γ(c), finite also when c is a nonpositive integer.
pub fn hyp2f1_regularized<S: ComplexScalar>(
    a: Complex<S::Real>,
    b: Complex<S::Real>,
    cc: Complex<S::Real>,
    z: S,
) -> Result<S> {
    if let Some(m) = nonpositive_integer(cc) {
        // F/Γ(c) → (a)_{m+1}(b)_{m+1}/(m+1)! z^{m+1} ₂F₁(a+m+1, b+m+1; m+2; z)
        let k = m + 1;
        let kf: Complex<S::Real> = c(k as f64);
        let coef = super::gamma::poch(a, k) * super::gamma::poch(b, k)
            / Complex::new(super::gamma::factorial::<S::Real>(k), S::Real::zero());
        let f = hyp2f1(a + kf, b + kf, kf + S::Real::one(), z)?;
        return Ok((z.powi(k as i32) * f).mul_c(coef));
    }
    Ok(hyp2f1(a, b, cc, z)?.mul_c(rgamma(cc)))
}

/// ₁F₁(a; c; z), Kummer transformation for Re z < 0. Region |z| ≤ 40.
pub fn hyp1f1<S: ComplexScalar>(a: Complex<S::Real>, cc: Complex<S::Real>, z: S) -> Result<S> {
    if nonpositive_integer(cc).is_some() && nonpositive_integer(a).is_none() {
        return Err(Error::Pole("hyp1f1 (c is a nonpositive integer)"));
    }
    let zv = z.value_c();
    if zv.norm() > lit(40.0) {
        return Err(Error::OutOfRegion { func: "hyp1f1", detail: format!("|z| = {:?}", zv.norm()) });
    }
    if zv.re < S::Real::zero() && nonpositive_integer(a).is_none() {
        return Ok(z.exp() * series_1f1(cc - a, cc, -z)?);
    }
    series_1f1(a, cc, z)
}

fn series_1f1<S: ComplexScalar>(a: Complex<S::Real>, cc: Complex<S::Real>, z: S) -> Result<S> {
    let eps: S::Real = lit(1e-17);
    let mut term = S::one();
    let mut sum = S::one();
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf: S::Real = lit(n as f64);
        let num = a + nf;
        if num.is_zero() {
            return Ok(sum);
        }
        term = (term * z).mul_c(num / ((cc + nf) * (nf + S::Real::one())));
        sum += term;
        if term.magnitude() <= eps * sum.magnitude() {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence("hyp1f1"))
}
