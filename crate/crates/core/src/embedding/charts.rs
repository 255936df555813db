//! Coordinate charts z(u) for systems 1–17, written once for any complex scalar.

use crate::error::{Error, Result};
use crate::scalar::{lit, ComplexScalar};
use crate::specfun::jacobi_elliptic;

use super::ChartParams;

fn c<S: ComplexScalar>(x: f64) -> S {
    S::from_f64(x)
}

/// Horicyclic family: x plus a transverse pair (w2, w3).
fn horicyclic<S: ComplexScalar>(x: S, w2: S, w3: S) -> [S; 4] {
    let i = S::i();
    let q = -(w2 * w2 + w3 * w3);
    let e = (i * x).exp();
    let em = (-(i * x)).exp();
    [(em + (S::one() + q) * e).scale(lit(0.5)), w2 * e, w3 * e, i * (em - (S::one() - q) * e).scale(lit(0.5))]
}

/// Embeds a coordinate triple of `system` (1–17).
pub fn chart<S: ComplexScalar>(system: u32, u: [S; 3], p: &ChartParams) -> Result<[S; 4]> {
    let [a, b, w] = u;
    let i = S::i();
    let half: S = c(0.5);
    let z = match system {
        1 => {
            let (s, co) = (a.sin(), a.cos());
            [s * b.cos(), s * b.sin(), co * w.cos(), co * w.sin()]
        }
        2 => horicyclic(a, b, w),
        3 => {
            let s = a.sin();
            [s * b.cos(), s * b.sin() * w.cos(), s * b.sin() * w.sin(), a.cos()]
        }
        4 => {
            let s = a.sin();
            let (e, em) = ((i * b).exp(), (-(i * b)).exp());
            let y2 = w * w;
            [half * (em + (S::one() - y2) * e) * s, w * e * s, -(i * half) * (em - (S::one() + y2) * e) * s, a.cos()]
        }
        5 => horicyclic(a, b * w.cos(), b * w.sin()),
        6 => {
            let kp = p.k_prime();
            let (sa, ca, da) = jacobi_elliptic(b, p.k)?;
            let (sb, cb, db) = jacobi_elliptic(w, kp)?;
            let s = a.sin();
            [s * sa * db, s * ca * cb, s * da * sb, a.cos()]
        }
        7 => {
            let (c1, c2) = (b.cosh(), w.cosh());
            let h = half * (c2 / c1 + c1 / c2);
            let s = a.sin();
            [s * h, s * b.tanh() * w.tanh(), i * s * ((c1 * c2).recip() - h), a.cos()]
        }
        8 => {
            let s = a.sin();
            let xe = b * w;
            let d2 = b * b - w * w;
            let s2 = b * b + w * w;
            let four: S = c(4.0);
            [
                -(i * s) * (d2 * d2 + four) / (xe.scale(lit(8.0))),
                s * s2 / (xe.scale(lit(2.0))),
                s * (four - d2 * d2) / (xe.scale(lit(8.0))),
                a.cos(),
            ]
        }
        9 => horicyclic(a, b.cosh() * w.cosh(), -(i * b.sinh() * w.sinh())),
        10 => {
            let r = lit(std::f64::consts::FRAC_1_SQRT_2);
            let (sh, ex) = ((b - w).sinh(), (b + w).exp());
            horicyclic(a, (sh + ex).scale(r), -(i * (sh - ex).scale(r)))
        }
        11 => horicyclic(a, half * (b * b - w * w), b * w),
        12 => {
            let d = b - w;
            let s = b + w;
            horicyclic(a, half * d * d + s, -(i * (half * d * d - s)))
        }
        13 => {
            let (k, kp) = (p.k, p.k_prime());
            let (sa, ca, da) = jacobi_elliptic(a, k)?;
            let (sb, cb, db) = jacobi_elliptic(b, k)?;
            let r: S = c(k / kp);
            let cc = r * ca * cb;
            [(sa * sb).scale(lit(k)), -(i * cc * w.cos()), -(i * cc * w.sin()), (da * db).scale(lit(1.0 / kp))]
        }
        14 => {
            let (c1, c2) = (a.cosh(), b.cosh());
            let h = half * (c1 / c2 + c2 / c1);
            let tt = a.tanh() * b.tanh();
            [h, tt * w.cosh(), -(i * tt * w.sinh()), i * (h - (c1 * c2).recip())]
        }
        15 => {
            let (c1, c2) = (a.cosh(), b.cosh());
            let h = half * (c1 / c2 + c2 / c1);
            let cc = c1 * c2;
            let t2 = w * w;
            [
                -h - t2 / (cc.scale(lit(2.0))),
                i * w / cc,
                a.tanh() * b.tanh(),
                i * ((c::<S>(2.0) - t2) / (cc.scale(lit(2.0))) - h),
            ]
        }
        16 => {
            let xe = a * b;
            let s2 = a * a + b * b;
            let q = s2 * s2;
            let tt = w * w / xe.scale(lit(2.0));
            let e8 = xe.scale(lit(8.0));
            [(q + c(4.0)) / e8 + tt, -(i * w / xe), -(i * half) * (a / b - b / a), i * ((q - c(4.0)) / e8 + tt)]
        }
        17 => {
            let w = super::algebraic::ellipsoidal_squares(u, p);
            [w[0].sqrt(), w[1].sqrt(), w[2].sqrt(), w[3].sqrt()]
        }
        18..=21 => return Err(Error::Capability { system, what: "embedding" }),
        _ => return Err(Error::UnknownSystem(system)),
    };
    Ok(z)
}
