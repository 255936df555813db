//! Classical orthogonal polynomials by three-term recurrence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum OrthoFamily {
    /// P_n^{(α,β)}
    Jacobi { alpha: f64, beta: f64 },
    /// C_n^{λ}
    Gegenbauer { lambda: f64 },
    /// L_n^{(α)}; any real α (α ≤ −1 gives the non-classical but well defined polynomial)
    Laguerre { alpha: f64 },
}

pub fn orthopoly_eval<S: Scalar>(family: OrthoFamily, n: usize, x: S) -> Result<S> {
    match family {
        OrthoFamily::Jacobi { alpha, beta } => jacobi(n, alpha, beta, x),
        OrthoFamily::Gegenbauer { lambda } => gegenbauer(n, lambda, x),
        OrthoFamily::Laguerre { alpha } => laguerre(n, alpha, x),
    }
}

pub fn jacobi<S: Scalar>(n: usize, alpha: f64, beta: f64, x: S) -> Result<S> {
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::InvalidParameter(format!("jacobi needs alpha, beta > -1 (got {alpha}, {beta})")));
    }
    let mut p0 = S::one();
    if n == 0 {
        return Ok(p0);
    }
    let ab = alpha + beta;
    let mut p1 = (x.add_real(-lit::<S::Real>(1.0))).scale(lit((ab + 2.0) / 2.0)).add_real(lit(alpha + 1.0));
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        let a3 = (c - 1.0) * c * (c - 2.0);
        let a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
        let p2 = ((x.scale(lit(a3)).add_real(lit(a2))) * p1 - p0.scale(lit(a4))).scale(lit(1.0 / a1));
        p0 = p1;
        p1 = p2;
    }
    Ok(p1)
}

pub fn gegenbauer<S: Scalar>(n: usize, lambda: f64, x: S) -> Result<S> {
    if lambda <= -0.5 {
        return Err(Error::InvalidParameter(format!("gegenbauer needs lambda > -1/2 (got {lambda})")));
    }
    let mut c0 = S::one();
    if n == 0 {
        return Ok(c0);
    }
    let mut c1 = x.scale(lit(2.0 * lambda));
    for k in 2..=n {
        let k = k as f64;
        let c2 =
            (x.scale(lit(2.0 * (k + lambda - 1.0))) * c1 - c0.scale(lit(k + 2.0 * lambda - 2.0))).scale(lit(1.0 / k));
        c0 = c1;
        c1 = c2;
    }
    Ok(c1)
}

pub fn laguerre<S: Scalar>(n: usize, alpha: f64, x: S) -> Result<S> {
    let mut l0 = S::one();
    if n == 0 {
        return Ok(l0);
    }
    let mut l1 = (-x).add_real(lit(1.0 + alpha));
    for k in 2..=n {
        let k = k as f64;
        let l2 = ((-x).add_real(lit(2.0 * k - 1.0 + alpha)) * l1 - l0.scale(lit(k - 1.0 + alpha))).scale(lit(1.0 / k));
        l0 = l1;
        l1 = l2;
    }
    Ok(l1)
}
