//! Invariant distances, heat kernels and Green functions on the real sphere
//! S³ and the hyperboloid Λ³ (ħ = m = 1, imaginary time τ).

mod dd;

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use crate::eigenbasis::energy;
use crate::error::{Error, Result};
use crate::report::{nan_max, VerificationReport};
use crate::scalar::Scalar;
use crate::specfun::{legendre_q_half, theta3};
use crate::Jet1;

/// Distance from a spectrum point below which the eigen-expansion of the
/// resolvent is refused.
pub const POLE_GUARD: f64 = 1e-6;

/// cos ψ between two points (χ, ϑ, φ) in spherical coordinates on S³.
pub fn cos_psi_spherical(a: [f64; 3], b: [f64; 3]) -> f64 {
    let [c1, t1, p1] = a;
    let [c2, t2, p2] = b;
    ((c1 - c2).cos() - c1.sin() * c2.sin() * angular_gap(t1, p1, t2, p2)).clamp(-1.0, 1.0)
}

/// cosh d between two points (τ, ϑ, φ) in spherical coordinates on Λ³.
pub fn cosh_d_hyperboloid(a: [f64; 3], b: [f64; 3]) -> f64 {
    let [r1, t1, p1] = a;
    let [r2, t2, p2] = b;
    ((r1 - r2).cosh() + r1.sinh() * r2.sinh() * angular_gap(t1, p1, t2, p2)).max(1.0)
}

/// 1 − cos of the angle between two directions (ϑ, φ) on S², in half-angle
/// form so that it vanishes exactly for coincident directions.
fn angular_gap(t1: f64, p1: f64, t2: f64, p2: f64) -> f64 {
    let half = |x: f64| (0.5 * x).sin().powi(2);
    2.0 * half(t1 - t2) + 2.0 * t1.sin() * t2.sin() * half(p1 - p2)
}

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("tau must be positive (got {tau})")))
    }
}

fn check_cos(c: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&c) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("cos psi = {c} outside [-1, 1]")))
    }
}

/// C_J^1(cos ψ) for J = 0..=j_max: sin((J+1)ψ)/sin ψ away from the poles,
/// the three-term recurrence near them.
pub fn gegenbauer_one(cos_psi: f64, j_max: u32) -> Vec<f64> {
    let psi = cos_psi.acos();
    let s = psi.sin();
    if s > 1e-3 {
        return (0..=j_max).map(|j| ((j + 1) as f64 * psi).sin() / s).collect();
    }
    let mut out = Vec::with_capacity(j_max as usize + 1);
    let (mut c0, mut c1) = (1.0, 2.0 * cos_psi);
    out.push(c0);
    for _ in 0..j_max {
        out.push(c1);
        let c2 = 2.0 * cos_psi * c1 - c0;
        c0 = c1;
        c1 = c2;
    }
    out
}

/// Smallest J_max with (J+1)² e^{−τJ(J+2)/2} past its peak and below 1e−34;
/// the remaining terms then fall off faster than geometrically.
pub fn heat_truncation(tau: f64) -> u32 {
    let mut j = 0u32;
    loop {
        let jf = j as f64;
        let log_term = 2.0 * (jf + 1.0).ln() - tau * jf * (jf + 2.0) / 2.0;
        let past_peak = (jf + 1.0) * tau >= 2.0;
        if (past_peak && log_term < -78.0) || j >= 1_000_000 {
            return j;
        }
        j += 1;
    }
}

/// (1/2π²) Σ_{J ≤ J_max} (J+1) C_J^1(cos ψ) e^{−τ J(J+2)/2}; `None` picks
/// J_max by [`heat_truncation`].
///
/// Near the antipode at small τ the terms are O(1) while the sum is tiny, so
/// the series is accumulated in double-double arithmetic: C_J^1 by its
/// three-term recurrence at the given cos ψ, and the weights as products of
/// r = e^{−τ/2} (r^{J(J+2)}, updated by r^{2J+3}).
pub fn heat_kernel_spectral(cos_psi: f64, tau: f64, j_max: Option<u32>) -> Result<f64> {
    check_tau(tau)?;
    check_cos(cos_psi)?;
    let j_max = j_max.unwrap_or_else(|| heat_truncation(tau));
    let r = dd_exp(-tau / 2.0);
    let r2 = r * r;
    let two_x = dd::Dd::from(2.0 * cos_psi);
    let (mut c_prev, mut c) = (dd::Dd::ZERO, dd::Dd::ONE);
    let mut w = dd::Dd::ONE;
    let mut step = r * r2;
    let mut sum = dd::Dd::ZERO;
    for j in 0..=j_max {
        sum = sum + dd::Dd::from((j + 1) as f64) * c * w;
        let next = two_x * c - c_prev;
        c_prev = c;
        c = next;
        w = w * step;
        step = step * r2;
    }
    Ok(sum.to_f64() / (2.0 * PI * PI))
}

/// e^x in double-double for any x ≤ 0 by halving into the Taylor range.
fn dd_exp(x: f64) -> dd::Dd {
    let mut k = 0;
    let mut y = x;
    while y.abs() > 0.5 {
        y /= 2.0;
        k += 1;
    }
    let mut e = dd::Dd::exp_small(y);
    for _ in 0..k {
        e = e * e;
    }
    e
}

/// e^{τ/2}/(4π²) d/d(cos ψ) Θ₃(ψ/2 | iτ/2π), the derivative taken as
/// −(1/sin ψ) ∂_ψ with a jet. At ψ ∈ {0, π} the form is singular and an
/// out-of-region error directs to [`heat_kernel_spectral`].
pub fn heat_kernel_theta(cos_psi: f64, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    check_cos(cos_psi)?;
    if cos_psi.abs() == 1.0 {
        return Err(Error::OutOfRegion {
            func: "heat_kernel_theta",
            detail: "sin psi = 0; use heat_kernel_spectral".into(),
        });
    }
    let psi = cos_psi.acos();
    let v = Jet1::variable(Complex64::new(psi, 0.0), 0).scale(0.5);
    let th = theta3(v, Complex64::new(0.0, tau / (2.0 * PI)))?;
    let d = -th.d(0).re / psi.sin();
    Ok((tau / 2.0).exp() / (4.0 * PI * PI) * d)
}

/// s = √(1 + 2E) = γ + 1/2 as a complex number (imaginary for E < −1/2).
fn s_of(e: f64) -> Complex64 {
    Complex64::new(1.0 + 2.0 * e, 0.0).sqrt()
}

/// sin(a s)/s with its limit a at s = 0.
fn sinc_scaled(a: f64, s: Complex64) -> Complex64 {
    if s.norm() < 1e-300 {
        Complex64::new(a, 0.0)
    } else {
        (s * a).sin() / s
    }
}

fn check_psi(psi: f64) -> Result<()> {
    if psi > 0.0 && psi < PI {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("psi = {psi} outside (0, pi)")))
    }
}

/// (1/2π) sin[(π−ψ)s] / (sin(πs) sin ψ), s = γ + 1/2 = √(1+2E).
pub fn green_sphere(psi: f64, e: f64) -> Result<f64> {
    check_psi(psi)?;
    let s = s_of(e);
    let den = sinc_scaled(PI, s);
    if den.norm() < 1e-12 {
        return Err(Error::Pole("green_sphere (E on the spectrum)"));
    }
    let g = sinc_scaled(PI - psi, s) / den / (2.0 * PI * psi.sin());
    Ok(g.re)
}

/// Nearest spectrum point E_J to `e`.
fn nearest_level(e: f64) -> f64 {
    let n = (1.0 + 2.0 * e).max(0.0).sqrt().round().max(1.0);
    let j = (n - 1.0) as u32;
    energy(j)
}

/// J_max for which the accelerated remainder is below 1e−13.
pub fn resolvent_truncation(e: f64) -> u32 {
    let s2 = (1.0 + 2.0 * e).abs();
    let need = (s2 * s2 / 4e-13).powf(0.25);
    (need.ceil() as u32).max(2 * s2.sqrt().ceil() as u32 + 8).max(64)
}

/// (1/2π²) Σ_{J ≤ J_max} (J+1) C_J^1(cos ψ)/(E_J − E).
///
/// With n = J+1 and s² = 1+2E the sum is (1/π² sin ψ) Σ n sin(nψ)/(n² − s²).
/// The slowly decaying parts Σ sin(nψ)/n and s² Σ sin(nψ)/n³ are summed in
/// closed form; the remainder s⁴ Σ sin(nψ)/(n³(n² − s²)) is truncated at J_max
/// (`None` picks it by [`resolvent_truncation`]).
pub fn resolvent_spectral(psi: f64, e: f64, j_max: Option<u32>) -> Result<f64> {
    check_psi(psi)?;
    if (e - nearest_level(e)).abs() < POLE_GUARD {
        return Err(Error::Conditioning(format!("E = {e} within {POLE_GUARD:e} of a spectrum point")));
    }
    let j_max = j_max.unwrap_or_else(|| resolvent_truncation(e));
    let s2 = 1.0 + 2.0 * e;
    let mut rem = 0.0;
    for n in (1..=j_max as u64 + 1).rev() {
        let nf = n as f64;
        rem += (nf * psi).sin() / (nf.powi(3) * (nf * nf - s2));
    }
    let sum1 = (PI - psi) / 2.0;
    let sum3 = PI * PI * psi / 6.0 - PI * psi * psi / 4.0 + psi.powi(3) / 12.0;
    let total = sum1 + s2 * sum3 + s2 * s2 * rem;
    Ok(total / (PI * PI * psi.sin()))
}

/// −1/(π² sinh d) Q^{1/2}_{−1/2−ip}(cosh d), p = √(2E − 1).
pub fn green_hyperboloid(d: f64, e: f64) -> Result<Complex64> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::InvalidParameter(format!("d must be positive (got {d})")));
    }
    let p = Complex64::new(2.0 * e - 1.0, 0.0).sqrt();
    let nu = Complex64::new(-0.5, 0.0) - p * Complex64::i();
    let q = legendre_q_half(nu, Complex64::new(d.cosh(), 0.0))?;
    Ok(q * (-1.0 / (PI * PI * d.sinh())))
}

/// First `n_poles` energies in [lo, hi] where sin[π(γ+1/2)] vanishes,
/// by bracketing on a 0.01 grid and bisection. E = −1/2 (γ+1/2 = 0) is a
/// removable zero and is skipped.
pub fn pole_scan(lo: f64, hi: f64, n_poles: usize) -> Result<Vec<f64>> {
    if !(hi > lo) {
        return Err(Error::InvalidParameter(format!("empty energy range [{lo}, {hi}]")));
    }
    let f = |e: f64| (PI * (1.0 + 2.0 * e).sqrt()).sin();
    let start = lo.max(-0.5 + 1e-9);
    let step = 0.01;
    let mut out = Vec::new();
    let mut a = start;
    while out.len() < n_poles && a < hi {
        let b = (a + step).min(hi);
        let (fa, fb) = (f(a), f(b));
        if fa == 0.0 {
            out.push(a);
        } else if fa * fb < 0.0 {
            let (mut x0, mut x1, mut f0) = (a, b, fa);
            for _ in 0..200 {
                let m = 0.5 * (x0 + x1);
                let fm = f(m);
                if fm == 0.0 || x1 - x0 < 1e-15 {
                    x0 = m;
                    x1 = m;
                    break;
                }
                if (fm < 0.0) == (f0 < 0.0) {
                    x0 = m;
                    f0 = fm;
                } else {
                    x1 = m;
                }
            }
            out.push(0.5 * (x0 + x1));
        }
        a = b;
    }
    if out.len() < n_poles {
        return Err(Error::InvalidParameter(format!(
            "energy range [{lo}, {hi}] holds {} poles, {n_poles} requested",
            out.len()
        )));
    }
    Ok(out)
}

/// One point of the heat kernel comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HeatRow {
    pub psi: f64,
    pub tau: f64,
    pub spectral: f64,
    pub theta: f64,
    pub abs_diff: f64,
}

pub const PSI_GRID: [f64; 4] = [0.3, 1.0, 2.0, 3.0];
pub const TAU_GRID: [f64; 4] = [0.25, 0.5, 1.0, 2.0];
pub const RESOLVENT_PSI: [f64; 3] = [0.8, 1.6, 2.4];
pub const RESOLVENT_E: [f64; 3] = [-1.0, -0.5, -0.375];

/// Spectral against Θ form over the grid (rows in ψ-major order). The
/// report uses the relative difference.
pub fn theta_identity(psi_grid: &[f64], tau_grid: &[f64], tol: f64) -> Result<(Vec<HeatRow>, VerificationReport)> {
    let mut rows = Vec::with_capacity(psi_grid.len() * tau_grid.len());
    let (mut abs, mut rel) = (0.0f64, 0.0f64);
    for &psi in psi_grid {
        for &tau in tau_grid {
            check_psi(psi)?;
            let spectral = heat_kernel_spectral(psi.cos(), tau, None)?;
            let theta = heat_kernel_theta(psi.cos(), tau)?;
            let abs_diff = (spectral - theta).abs();
            abs = nan_max(abs, abs_diff);
            rel = nan_max(rel, abs_diff / spectral.abs());
            rows.push(HeatRow { psi, tau, spectral, theta, abs_diff });
        }
    }
    let mut r = VerificationReport::new("heat_kernel_theta_identity", None)
        .param("mode", "rel")
        .param("psi_grid", psi_grid.to_vec())
        .param("tau_grid", tau_grid.to_vec());
    r.n_points = rows.len();
    r.max_abs_err = abs;
    r.max_rel_err = rel;
    r.tol = tol;
    Ok((rows, r.decide()))
}

/// Eigen-expansion of the resolvent against the closed-form sphere Green
/// function on all (ψ, E) pairs.
pub fn resolvent_identity(psi_grid: &[f64], e_grid: &[f64], tol: f64) -> Result<VerificationReport> {
    let (mut abs, mut rel) = (0.0f64, 0.0f64);
    for &psi in psi_grid {
        for &e in e_grid {
            let a = resolvent_spectral(psi, e, None)?;
            let b = green_sphere(psi, e)?;
            abs = nan_max(abs, (a - b).abs());
            rel = nan_max(rel, (a - b).abs() / b.abs());
        }
    }
    let mut r = VerificationReport::new("resolvent_identity", None)
        .param("mode", "abs")
        .param("psi_grid", psi_grid.to_vec())
        .param("energy_grid", e_grid.to_vec());
    r.n_points = psi_grid.len() * e_grid.len();
    r.max_abs_err = abs;
    r.max_rel_err = rel;
    r.tol = tol;
    Ok(r.decide())
}

/// First six poles of the sphere Green function against J(J+2)/2.
pub fn pole_recovery(tol: f64) -> Result<VerificationReport> {
    let found = pole_scan(-0.4, 20.0, 6)?;
    let err = found.iter().enumerate().map(|(j, &e)| (e - energy(j as u32)).abs()).fold(0.0, nan_max);
    let mut r = VerificationReport::new("pole_scan", None).param("mode", "abs").param("poles", found.clone());
    r.n_points = found.len();
    r.max_abs_err = err;
    r.max_rel_err = err;
    r.tol = tol;
    Ok(r.decide())
}
