//! Airy function Ai on the real line.

use num_traits::ToPrimitive;

use super::bessel::bessel_j;
use super::gamma::gamma_real;
use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

/// Ai(t) for |t| ≤ 20.
///
/// Maclaurin series for |t| ≤ 2. For t > 2 the positive integral
/// Ai = (1/π)√(t/3) K_{1/3}(ζ); for t < −2 the Bessel J form with
/// ζ = (2/3)|t|^{3/2}.
pub fn airy_ai<S: Scalar>(t: S) -> Result<S> {
    let tv = t.value_re().to_f64().unwrap_or(f64::NAN);
    if !(tv.abs() <= 20.0) {
        return Err(Error::OutOfRegion { func: "airy_ai", detail: format!("t = {tv}") });
    }
    if tv.abs() <= 2.0 {
        return Ok(maclaurin(t));
    }
    if tv > 0.0 {
        let zeta = t.powr(lit(1.5)).scale(lit(2.0 / 3.0));
        let k = bessel_k_real(1.0 / 3.0, zeta);
        return Ok((t.scale(lit(1.0 / 3.0))).sqrt() * k.scale(lit(1.0 / std::f64::consts::PI)));
    }
    let x = -t;
    let zeta = x.powr(lit(1.5)).scale(lit(2.0 / 3.0));
    let j = bessel_j(1.0 / 3.0, zeta)? + bessel_j(-1.0 / 3.0, zeta)?;
    Ok(x.sqrt() * j.scale(lit(1.0 / 3.0)))
}

fn maclaurin<S: Scalar>(t: S) -> S {
    // Ai = c1 f − c2 g with f = Σ 3^k (1/3)_k t^{3k}/(3k)!, g = Σ 3^k (2/3)_k t^{3k+1}/(3k+1)!
    let c1 = 1.0 / (3f64.powf(2.0 / 3.0) * gamma_real(2.0 / 3.0).unwrap());
    let c2 = 1.0 / (3f64.powf(1.0 / 3.0) * gamma_real(1.0 / 3.0).unwrap());
    let t3 = t * t * t;
    let mut fk = S::one();
    let mut gk = t;
    let mut f = fk;
    let mut g = gk;
    for k in 1..80 {
        let k = k as f64;
        fk = (fk * t3).scale(lit(1.0 / ((3.0 * k - 1.0) * (3.0 * k))));
        gk = (gk * t3).scale(lit(1.0 / ((3.0 * k) * (3.0 * k + 1.0))));
        f += fk;
        g += gk;
        if fk.magnitude() + gk.magnitude() < lit::<S::Real>(1e-18) * (f.magnitude() + g.magnitude()) {
            break;
        }
    }
    f.scale(lit(c1)) - g.scale(lit(c2))
}

/// K_ν(x) = ∫_0^∞ e^{−x cosh s} cosh(νs) ds by the trapezoid rule, x > 0.
fn bessel_k_real<S: Scalar>(nu: f64, x: S) -> S {
    let xv = x.value_re().to_f64().unwrap_or(1.0);
    let h = 1.0 / 32.0;
    let upper = (760.0 / xv).max(1.0).acosh() + 0.5;
    let n = (upper / h).ceil() as usize;
    // factor out e^{−x} so tiny values keep full relative accuracy
    let mut acc = S::from_f64(0.5);
    for j in 1..=n {
        let s = j as f64 * h;
        acc += (-(x.scale(lit(s.cosh() - 1.0)))).exp().scale(lit((nu * s).cosh()));
    }
    (-x).exp() * acc.scale(lit(h))
}
