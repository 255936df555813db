//! Closed-form diagonal metrics, √g and Γ_a = ∂_a ln √g for all 21 systems.

use crate::embedding::ChartParams;
use crate::error::{Error, Result};
use crate::scalar::{lit, ComplexScalar};
use crate::specfun::jacobi_elliptic;

pub struct ClosedForm<S> {
    pub diag: [S; 3],
    pub sqrt_g: S,
    /// Explicit Γ where a closed expression is known (systems 1–16).
    pub gamma: Option<[S; 3]>,
}

fn c<S: ComplexScalar>(x: f64) -> S {
    S::from_f64(x)
}

/// f(ρ) of the ellipsoidal-type systems 17–21.
pub fn f_rho<S: ComplexScalar>(system: u32, r: S, p: &ChartParams) -> S {
    let m = |e: f64| r.add_real(lit(-e));
    let four: S = c(-4.0);
    match system {
        17 => four * m(p.a) * m(p.b) * m(1.0) * r,
        18 => four * m(p.a) * m(1.0) * r * r,
        19 => four * m(1.0) * m(1.0) * r * r,
        20 => four * m(1.0) * r * r * r,
        _ => four * r * r * r * r,
    }
}

pub fn closed_form<S: ComplexScalar>(system: u32, u: [S; 3], p: &ChartParams) -> Result<ClosedForm<S>> {
    let [a, b, w] = u;
    let one = S::one();
    let zero = S::zero();
    let i = S::i();
    let two: S = c(2.0);
    let cot = |x: S| x.cos() / x.sin();
    let e2ix = |x: S| (i * x).scale(lit(2.0)).exp();
    let out = match system {
        1 => {
            let (s, co) = (a.sin(), a.cos());
            ClosedForm { diag: [one, s * s, co * co], sqrt_g: s * co, gamma: Some([cot(a) - a.tan(), zero, zero]) }
        }
        2 => {
            let e = e2ix(a);
            ClosedForm { diag: [one, e, e], sqrt_g: e, gamma: Some([two * i, zero, zero]) }
        }
        3 => {
            let (s, st) = (a.sin(), b.sin());
            ClosedForm {
                diag: [one, s * s, s * s * st * st],
                sqrt_g: s * s * st,
                gamma: Some([two * cot(a), cot(b), zero]),
            }
        }
        4 => {
            let s2 = a.sin() * a.sin();
            ClosedForm {
                diag: [one, s2, s2 * e2ix(b)],
                sqrt_g: (i * b).exp() * s2,
                gamma: Some([two * cot(a), i, zero]),
            }
        }
        5 => {
            let e = e2ix(a);
            ClosedForm { diag: [one, e, e * b * b], sqrt_g: b * e, gamma: Some([two * i, b.recip(), zero]) }
        }
        6 => {
            let (k, kp) = (p.k, p.k_prime());
            let (sa, ca, da) = jacobi_elliptic(b, k)?;
            let (sb, cb, db) = jacobi_elliptic(w, kp)?;
            let f = (ca * ca).scale(lit(k * k)) + (cb * cb).scale(lit(kp * kp));
            let s2 = a.sin() * a.sin();
            ClosedForm {
                diag: [one, s2 * f, s2 * f],
                sqrt_g: f * s2,
                gamma: Some([
                    two * cot(a),
                    (sa * ca * da).scale(lit(-2.0 * k * k)) / f,
                    (sb * cb * db).scale(lit(-2.0 * kp * kp)) / f,
                ]),
            }
        }
        7 => {
            let (c1, c2) = (b.cosh(), w.cosh());
            let g = (c1 * c1).recip() - (c2 * c2).recip();
            let s2 = a.sin() * a.sin();
            ClosedForm {
                diag: [one, s2 * g, -(s2 * g)],
                sqrt_g: i * s2 * g,
                gamma: Some([
                    two * cot(a),
                    -(two * b.sinh() / (c1 * c1 * c1)) / g,
                    two * w.sinh() / (c2 * c2 * c2) / g,
                ]),
            }
        }
        8 => {
            let h = (w * w).recip() - (b * b).recip();
            let s2 = a.sin() * a.sin();
            ClosedForm {
                diag: [one, s2 * h, -(s2 * h)],
                sqrt_g: i * s2 * h,
                gamma: Some([two * cot(a), two / (b * b * b) / h, -(two / (w * w * w)) / h]),
            }
        }
        9 => {
            let (c1, c2) = (b.cosh(), w.cosh());
            let m = c1 * c1 - c2 * c2;
            let e = e2ix(a);
            ClosedForm {
                diag: [one, e * m, -(e * m)],
                sqrt_g: i * e * m,
                gamma: Some([two * i, two * b.sinh() * c1 / m, -(two * w.sinh() * c2) / m]),
            }
        }
        10 => {
            let (ey, ez) = (b.scale(lit(2.0)).exp(), w.scale(lit(2.0)).exp());
            let s = ey + ez;
            let e = e2ix(a);
            ClosedForm {
                diag: [one, e * s, -(e * s)],
                sqrt_g: i * e * s,
                gamma: Some([two * i, two * ey / s, two * ez / s]),
            }
        }
        11 => {
            let s = b * b + w * w;
            let e = e2ix(a);
            ClosedForm { diag: [one, e * s, e * s], sqrt_g: e * s, gamma: Some([two * i, two * b / s, two * w / s]) }
        }
        12 => {
            let d = b - w;
            let e = e2ix(a).scale(lit(4.0));
            ClosedForm {
                diag: [one, e * d, -(e * d)],
                sqrt_g: i * e * d,
                gamma: Some([two * i, d.recip(), -d.recip()]),
            }
        }
        13 => {
            let (k, kp) = (p.k, p.k_prime());
            let (sa, ca, da) = jacobi_elliptic(a, k)?;
            let (sb, cb, db) = jacobi_elliptic(b, k)?;
            let d = sa * sa - sb * sb;
            let m = d.scale(lit(-k * k));
            let pp = (ca * ca * cb * cb).scale(lit((k / kp) * (k / kp)));
            ClosedForm {
                diag: [m, -m, -pp],
                sqrt_g: (d * ca * cb).scale(lit(k * k * k / kp)),
                gamma: Some([two * sa * ca * da / d - sa * da / ca, -(two * sb * cb * db) / d - sb * db / cb, zero]),
            }
        }
        14 => {
            let (t1, t2) = (a.tanh(), b.tanh());
            let t = t1 * t1 - t2 * t2;
            let (c1, c2) = (a.cosh(), b.cosh());
            ClosedForm {
                diag: [-t, t, -(t1 * t1 * t2 * t2)],
                sqrt_g: t * t1 * t2,
                gamma: Some([
                    two * a.sinh() / (c1 * c1 * c1) / t + (a.sinh() * c1).recip(),
                    -(two * b.sinh() / (c2 * c2 * c2)) / t + (b.sinh() * c2).recip(),
                    zero,
                ]),
            }
        }
        15 => {
            let (c1, c2) = (a.cosh(), b.cosh());
            let g = (c1 * c1).recip() - (c2 * c2).recip();
            let cc = c1 * c2;
            ClosedForm {
                diag: [g, -g, -(cc * cc).recip()],
                sqrt_g: g / cc,
                gamma: Some([
                    -(two * a.sinh() / (c1 * c1 * c1)) / g - a.tanh(),
                    two * b.sinh() / (c2 * c2 * c2) / g - b.tanh(),
                    zero,
                ]),
            }
        }
        16 => {
            let s = (a * a).recip() + (b * b).recip();
            let xe = a * b;
            ClosedForm {
                diag: [-s, -s, -(xe * xe).recip()],
                sqrt_g: i * s / xe,
                gamma: Some([-(two / (a * a * a)) / s - a.recip(), -(two / (b * b * b)) / s - b.recip(), zero]),
            }
        }
        17..=21 => {
            let g0 = (a - b) * (a - w) / f_rho(system, a, p);
            let g1 = (b - w) * (b - a) / f_rho(system, b, p);
            let g2 = (w - a) * (w - b) / f_rho(system, w, p);
            ClosedForm { diag: [g0, g1, g2], sqrt_g: g0.sqrt() * g1.sqrt() * g2.sqrt(), gamma: None }
        }
        _ => return Err(Error::UnknownSystem(system)),
    };
    Ok(out)
}
