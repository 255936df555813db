//! Jacobi elliptic functions and the complete elliptic integral.

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

/// (sn, cn, dn)(u, k) by descending Landen / AGM; dn from dn² = 1 − k²sn².
pub fn jacobi_elliptic<S: Scalar>(u: S, k: f64) -> Result<(S, S, S)> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::InvalidParameter(format!("elliptic modulus k = {k} outside [0, 1)")));
    }
    if k == 0.0 {
        return Ok((u.sin(), u.cos(), S::one()));
    }
    let mut a = vec![1.0_f64];
    let mut c = vec![k];
    let mut b = (1.0 - k * k).sqrt();
    while c.last().unwrap().abs() > f64::EPSILON * a.last().unwrap() && a.len() < 40 {
        let an = *a.last().unwrap();
        let cn = (an - b) / 2.0;
        let bn = (an * b).sqrt();
        a.push((an + b) / 2.0);
        c.push(cn);
        b = bn;
    }
    let n = a.len() - 1;
    let mut phi = u.scale(lit(2f64.powi(n as i32) * a[n]));
    for j in (1..=n).rev() {
        let r = c[j] / a[j];
        phi = (phi + phi.sin().scale(lit(r)).asin()).scale(lit(0.5));
    }
    let sn = phi.sin();
    let cn = phi.cos();
    let dn = (S::one() - (sn * sn).scale(lit(k * k))).sqrt();
    Ok((sn, cn, dn))
}

/// Complete elliptic integral K(k) = π / (2 AGM(1, k')).
pub fn complete_k(k: f64) -> f64 {
    let mut a = 1.0_f64;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..60 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let an = (a + b) / 2.0;
        b = (a * b).sqrt();
        a = an;
    }
    std::f64::consts::PI / (2.0 * a)
}
