//! Bessel functions needed by the eigenfunctions and 1D blocks.

use num_complex::Complex;
use num_traits::{FloatConst, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::gamma::{digamma_int, factorial, gamma_real};
use super::quad::integrate_gl;
use crate::error::{Error, Result};
use crate::scalar::{lit, ComplexScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BesselKind {
    /// J_ν(x), real order 0 ≤ ν ≤ 50, 0 ≤ x ≤ 100
    JRealOrder,
    /// H^{(1)}_{n+1/2}(z), closed form, any z ≠ 0
    H1HalfInteger,
    /// H^{(1)}_n(z), integer n ≥ 0, 0 < |z| ≤ 12, z off the negative real axis
    H1Integer,
    /// K_{ik}(x), |k| ≤ 10, x ≥ 0.1
    KImagOrder,
    /// I_ν(x), real order ν ≥ 0, 0 ≤ x ≤ 100
    IRealOrder,
}

/// Uniform entry point over the supported kinds. `order` is ν (for
/// `H1HalfInteger` the full half-integer order, for `KImagOrder` the k in ik).
pub fn bessel_eval(kind: BesselKind, order: f64, arg: Complex<f64>) -> Result<Complex<f64>> {
    let real_arg = || -> Result<f64> {
        if arg.im != 0.0 {
            return Err(Error::OutOfRegion { func: "bessel", detail: "real argument required".into() });
        }
        Ok(arg.re)
    };
    match kind {
        BesselKind::JRealOrder => {
            let x = real_arg()?;
            if !(0.0..=50.0).contains(&order) || !(0.0..=100.0).contains(&x) {
                return Err(Error::OutOfRegion { func: "bessel_j", detail: format!("nu={order}, x={x}") });
            }
            Ok(Complex::new(bessel_j(order, x)?, 0.0))
        }
        BesselKind::H1HalfInteger => {
            let n = order - 0.5;
            if n != n.round() {
                return Err(Error::InvalidParameter(format!("order {order} is not half-integer")));
            }
            hankel1_half(n as i32, arg)
        }
        BesselKind::H1Integer => {
            if order < 0.0 || order != order.round() {
                return Err(Error::InvalidParameter(format!("order {order} is not a nonnegative integer")));
            }
            hankel1_int(order as u32, arg)
        }
        BesselKind::KImagOrder => {
            let x = real_arg()?;
            if x < 0.1 || order.abs() > 10.0 {
                return Err(Error::OutOfRegion { func: "bessel_k_imag", detail: format!("k={order}, x={x}") });
            }
            Ok(Complex::new(bessel_k_imag(order, x)?, 0.0))
        }
        BesselKind::IRealOrder => {
            let x = real_arg()?;
            if order < 0.0 || !(0.0..=100.0).contains(&x) {
                return Err(Error::OutOfRegion { func: "bessel_i", detail: format!("nu={order}, x={x}") });
            }
            Ok(Complex::new(bessel_i(order, x)?, 0.0))
        }
    }
}

fn power_series<S: Scalar>(nu: f64, x: S, sign: f64) -> Result<S> {
    // Σ sign^k (x/2)^{2k+ν} / (k! Γ(k+ν+1))
    let half = x.scale(lit(0.5));
    if x.value_abs() == S::Real::zero() {
        return Ok(if nu == 0.0 { S::one() } else { S::zero() });
    }
    let lead = if nu == nu.round() && nu >= 0.0 {
        half.powi(nu as i32).scale(lit(1.0 / factorial::<f64>(nu as usize)))
    } else {
        half.powr(lit(nu)).scale(lit(1.0 / gamma_real(nu + 1.0)?))
    };
    let q = (half * half).scale(lit(sign));
    let mut term = lead;
    let mut sum = lead;
    let eps: S::Real = lit(1e-17);
    for k in 1..2000 {
        let k = k as f64;
        term = (term * q).scale(lit(1.0 / (k * (k + nu))));
        sum += term;
        if term.magnitude() <= eps * sum.magnitude() && k > 2.0 {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence("bessel series"))
}

/// J_ν(x) for real order ν (negative orders allowed internally) and real x ≥ 0.
///
/// Power series when it is well conditioned, otherwise Schläfli's integral.
pub fn bessel_j<S: Scalar>(nu: f64, x: S) -> Result<S> {
    if nu < 0.0 && nu == nu.round() {
        let sgn = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(bessel_j(-nu, x)?.scale(lit(sgn)));
    }
    let xv = x.value_re().to_f64().unwrap_or(0.0);
    if xv < 0.0 {
        return Err(Error::OutOfRegion { func: "bessel_j", detail: "x must be nonnegative".into() });
    }
    if xv <= 8.0 || xv <= nu.abs() {
        return power_series(nu, x, -1.0);
    }
    Ok(schlafli(nu, x))
}

fn schlafli<S: Scalar>(nu: f64, x: S) -> S {
    let xv = x.value_re().to_f64().unwrap_or(1.0);
    let pi = std::f64::consts::PI;
    let panels = ((xv + nu.abs()) / 2.0).ceil().max(16.0) as usize;
    let first: S = integrate_gl(
        |t: S::Real| {
            let tf = t.to_f64().unwrap();
            (x * S::from_f64(tf.sin()) - S::from_f64(nu * tf)).cos()
        },
        S::Real::zero(),
        lit(pi),
        panels,
        16,
    );
    let mut out = first.scale(lit(1.0 / pi));
    let s = (nu * pi).sin();
    if s.abs() > 1e-300 {
        let upper = (60.0 / xv).asinh() + 1.0;
        let second: S = integrate_gl(
            |t: S::Real| {
                let tf = t.to_f64().unwrap();
                (-(x * S::from_f64(tf.sinh())) - S::from_f64(nu * tf)).exp()
            },
            S::Real::zero(),
            lit(upper),
            32,
            16,
        );
        out -= second.scale(lit(s / pi));
    }
    out
}

/// I_ν(x) for real ν ≥ 0, x ≥ 0 (power series, no cancellation).
pub fn bessel_i<S: Scalar>(nu: f64, x: S) -> Result<S> {
    power_series(nu, x, 1.0)
}

/// K_{ik}(x) = ∫_0^∞ e^{−x cosh t} cos(kt) dt.
///
/// The integrand is even and decays double-exponentially, so the trapezoid
/// rule on a uniform grid (step 1/32) converges geometrically.
pub fn bessel_k_imag<S: Scalar>(k: f64, x: S) -> Result<S> {
    let xv = x.value_re().to_f64().unwrap_or(0.0);
    if xv <= 0.0 {
        return Err(Error::OutOfRegion { func: "bessel_k_imag", detail: "x must be positive".into() });
    }
    let h = 1.0 / 32.0;
    let upper = (760.0 / xv).max(1.0).acosh() + 0.5;
    let n = (upper / h).ceil() as usize;
    let mut acc = (-x).exp().scale(lit(0.5));
    for j in 1..=n {
        let t = j as f64 * h;
        acc += (-(x.scale(lit(t.cosh())))).exp().scale(lit((k * t).cos()));
    }
    Ok(acc.scale(lit(h)))
}

/// H^{(1)}_{n+1/2}(z) from the terminating spherical Hankel sum.
pub fn hankel1_half<S: ComplexScalar>(n: i32, z: S) -> Result<S> {
    if z.value_abs() == S::Real::zero() {
        return Err(Error::Pole("hankel1 at 0"));
    }
    if n < 0 {
        // H^{(1)}_{-ν} = e^{iπν} H^{(1)}_ν with ν = -n - 1/2
        let nu = -(n as f64) - 0.5;
        let ph = Complex::new(lit::<S::Real>(0.0), lit(std::f64::consts::PI * nu)).exp();
        return Ok(hankel1_half(-n - 1, z)?.mul_c(ph));
    }
    let n = n as usize;
    let i = Complex::new(S::Real::zero(), S::Real::one());
    let mut sum = S::zero();
    let inv2z = (z.scale(lit(2.0))).recip();
    let mut pw = S::one();
    let mut ik = Complex::new(S::Real::one(), S::Real::zero());
    for k in 0..=n {
        let c = factorial::<f64>(n + k) / (factorial::<f64>(k) * factorial::<f64>(n - k));
        sum += pw.mul_c(ik).scale(lit(c));
        pw *= inv2z;
        ik *= i;
    }
    let mut lead = Complex::new(S::Real::one(), S::Real::zero());
    for _ in 0..=n {
        lead *= -i;
    }
    let pi = S::Real::PI();
    let amp = (z.scale(pi / lit(2.0))).recip().sqrt();
    Ok((amp * (z * S::i()).exp() * sum).mul_c(lead))
}

/// H^{(1)}_n(z) = J_n(z) + i Y_n(z) for integer n ≥ 0 via the power series of
/// J_n and Y_n. Region 0 < |z| ≤ 12, principal branch of ln z.
pub fn hankel1_int<S: ComplexScalar>(n: u32, z: S) -> Result<S> {
    let zabs = z.value_abs().to_f64().unwrap_or(0.0);
    if zabs == 0.0 || zabs > 12.0 {
        return Err(Error::OutOfRegion { func: "hankel1_int", detail: format!("|z| = {zabs}") });
    }
    let j = power_series(n as f64, z, -1.0)?;
    let y = bessel_y_int(n, z, j)?;
    Ok(j + y * S::i())
}

/// Y_n(z) given J_n(z).
fn bessel_y_int<S: ComplexScalar>(n: u32, z: S, jn: S) -> Result<S> {
    let pi = std::f64::consts::PI;
    let n = n as usize;
    let half = z.scale(lit(0.5));
    let mut out = (jn * half.ln()).scale(lit(2.0 / pi));
    // −(1/π) Σ_{k<n} (n−k−1)!/k! (z/2)^{2k−n}
    if n > 0 {
        let inv = half.recip();
        let mut fin = S::zero();
        for k in 0..n {
            let c = factorial::<f64>(n - k - 1) / factorial::<f64>(k);
            fin += (half.powi(2 * k as i32) * inv.powi(n as i32)).scale(lit(c));
        }
        out -= fin.scale(lit(1.0 / pi));
    }
    // −(1/π) Σ_k [ψ(k+1)+ψ(n+k+1)] (−z²/4)^k (z/2)^n/(k!(n+k)!)
    let q = -(half * half);
    let mut term = half.powi(n as i32).scale(lit(1.0 / factorial::<f64>(n)));
    let mut sum = term.scale(lit(digamma_int::<f64>(0) + digamma_int::<f64>(n)));
    let eps: S::Real = lit(1e-17);
    let mut converged = false;
    for k in 1..2000usize {
        term = (term * q).scale(lit(1.0 / (k as f64 * (n + k) as f64)));
        let add = term.scale(lit(digamma_int::<f64>(k) + digamma_int::<f64>(n + k)));
        sum += add;
        if add.magnitude() <= eps * sum.magnitude() && k > 2 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence("bessel_y series"));
    }
    out -= sum.scale(lit(1.0 / pi));
    Ok(out)
}
