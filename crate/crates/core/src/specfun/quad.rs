//! Quadrature rules used by the integral representations.

use crate::scalar::{lit, Scalar};

/// Gauss–Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 {
                1.0
            } else if n == 1 {
                z
            } else {
                p1
            };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * pn - pm) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Composite Gauss–Legendre integral of `f` over [a, b].
pub fn integrate_gl<S, F>(f: F, a: S::Real, b: S::Real, panels: usize, order: usize) -> S
where
    S: Scalar,
    F: Fn(S::Real) -> S,
{
    let (x, w) = gauss_legendre(order);
    let width = (b - a) / lit(panels as f64);
    let half = width / lit(2.0);
    let mut acc = S::zero();
    for p in 0..panels {
        let mid = a + width * lit(p as f64 + 0.5);
        let mut part = S::zero();
        for (xi, wi) in x.iter().zip(&w) {
            part += f(mid + half * lit(*xi)).scale(lit(*wi));
        }
        acc += part.scale(half);
    }
    acc
}

/// Tanh–sinh (double exponential) integral of `f` over [a, b].
///
/// Abscissae close to an end are built from the distance to that end, so
/// integrable endpoint singularities are sampled without cancellation.
pub fn integrate_tanh_sinh<S, F>(f: F, a: S::Real, b: S::Real, step: f64) -> S
where
    S: Scalar,
    F: Fn(S::Real) -> S,
{
    let half: S::Real = (b - a) / lit(2.0);
    let hpi = std::f64::consts::FRAC_PI_2;
    let mut acc = S::zero();
    let kmax = (4.5 / step).ceil() as i64;
    for k in -kmax..=kmax {
        let t = k as f64 * step;
        let s = hpi * t.sinh();
        let ch = s.cosh();
        let wt = hpi * t.cosh() / (ch * ch);
        if wt < 1e-300 {
            continue;
        }
        // distance from the nearer endpoint, in units of `half`
        let gap = 2.0 / ((2.0 * s.abs()).exp() + 1.0);
        if gap == 0.0 {
            continue;
        }
        let x = if s >= 0.0 { b - half * lit(gap) } else { a + half * lit(gap) };
        acc += f(x).scale(lit::<S::Real>(wt * step) * half);
    }
    acc
}

/// Convenience: real-valued composite Gauss–Legendre.
pub fn integrate_real<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize, order: usize) -> f64 {
    integrate_gl::<f64, _>(f, a, b, panels, order)
}
