//! Systems 17–21 in ellipsoidal-type coordinates ρ₁ < ρ₂ < ρ₃.
//!
//! The embedding is fixed only through squares (or products of two linear
//! combinations) of the z components. The identity check and the metric here
//! never take a square root, except for system 21 where the relations are
//! solved explicitly.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::scalar::{lit, ComplexScalar};

use super::ChartParams;

type J3 = Jet<Complex64, 3>;

fn sym<S: ComplexScalar>(r: [S; 3]) -> (S, S, S) {
    let [x, y, z] = r;
    (x + y + z, x * y + x * z + y * z, x * y * z)
}

/// Π (ρᵢ − e)
fn shifted<S: ComplexScalar>(r: [S; 3], e: f64) -> S {
    let [x, y, z] = r;
    x.add_real(lit(-e)) * y.add_real(lit(-e)) * z.add_real(lit(-e))
}

/// z₁², …, z₄² for the ellipsoidal system (17).
pub fn ellipsoidal_squares<S: ComplexScalar>(r: [S; 3], p: &ChartParams) -> [S; 4] {
    let (a, b) = (p.a, p.b);
    let (_, _, e3) = sym(r);
    [
        e3.scale(lit(1.0 / (a * b))),
        shifted(r, 1.0).scale(lit(-1.0 / ((a - 1.0) * (b - 1.0)))),
        shifted(r, b).scale(lit(1.0 / ((a - b) * (b - 1.0) * b))),
        shifted(r, a).scale(lit(-1.0 / ((a - b) * (a - 1.0) * a))),
    ]
}

/// The defining relations of one system, as squares and pairs.
///
/// `Pair(A, B)` means u² = A and u·v = B for two linear combinations u, v with
/// u·v a sum of two squared components; `Square(W)` means z² = W.
enum Relation<S> {
    Square(S),
    Pair(S, S),
}

fn relations<S: ComplexScalar>(system: u32, r: [S; 3], p: &ChartParams) -> Result<Vec<Relation<S>>> {
    let (e1, e2, e3) = sym(r);
    let rels = match system {
        17 => ellipsoidal_squares(r, p).into_iter().map(Relation::Square).collect(),
        18 => {
            let a = p.a;
            // (i z1 + z2)², z1² + z2², z3², z4²
            let u2 = e3.scale(lit(-1.0 / a));
            let uv = (e3.scale(lit(a + 1.0)) - e2.scale(lit(a))).scale(lit(-1.0 / (a * a)));
            vec![
                Relation::Pair(u2, uv),
                Relation::Square(shifted(r, 1.0).scale(lit(-1.0 / (1.0 - a)))),
                Relation::Square(shifted(r, a).scale(lit(-1.0 / (a * a * (a - 1.0))))),
            ]
        }
        19 => vec![
            Relation::Pair(-shifted(r, 1.0), e3.scale(lit(2.0)) - e2 + S::one()),
            Relation::Pair(-e3, e2 - e3.scale(lit(2.0))),
        ],
        20 => {
            // (z2 − i z1)² = e3, z3 = −(e2 − e3)/(2(z2 − i z1))
            let d = e2 - e3;
            let z3sq = d * d / e3.scale(lit(4.0));
            let l3 = e3 - e2 + e1;
            vec![Relation::Pair(e3, l3 - z3sq), Relation::Square(z3sq), Relation::Square(-shifted(r, 1.0))]
        }
        _ => return Err(Error::Capability { system, what: "algebraic relations" }),
    };
    Ok(rels)
}

/// Explicit solution of the system 21 relations.
pub fn system21_point<S: ComplexScalar>(r: [S; 3]) -> [S; 4] {
    let (e1, e2, e3) = sym(r);
    let u = e3.scale(lit(2.0)).sqrt();
    let pp = -e2 / u;
    let q = ((pp * pp).scale(lit(0.5)) - e1) / u;
    let ub = (S::one() - pp * q) / u;
    let i = S::i();
    let half: S::Real = lit(0.5);
    [(u + ub).scale(half), (u - ub) / (i.scale(lit(2.0))), (pp + q).scale(half), (pp - q) / (i.scale(lit(2.0)))]
}

/// Checks the coordinate ordering of systems 17–21. `strict = false`
/// admits the boundary values (where one of the squares vanishes).
pub fn check_ordering(system: u32, r: [f64; 3], p: &ChartParams, strict: bool) -> Result<()> {
    let lt = |x: f64, y: f64| if strict { x < y } else { x <= y };
    let (a, b) = (p.a, p.b);
    let ok = match system {
        17 => lt(0.0, r[0]) && lt(r[0], 1.0) && lt(1.0, r[1]) && lt(r[1], b) && lt(b, r[2]) && lt(r[2], a),
        18 => lt(0.0, r[0]) && lt(r[0], 1.0) && lt(1.0, r[1]) && lt(r[1], a) && lt(a, r[2]),
        19 | 20 => lt(0.0, r[0]) && lt(r[0], 1.0) && lt(1.0, r[1]) && lt(r[1], r[2]),
        21 => lt(0.0, r[0]) && lt(r[0], r[1]) && lt(r[1], r[2]),
        _ => return Err(Error::Capability { system, what: "algebraic ordering" }),
    };
    if !r.iter().all(|x| x.is_finite()) || !ok {
        return Err(Error::Ordering(format!("system {system}: rho = {r:?} (a = {a}, b = {b})")));
    }
    Ok(())
}

/// |Σzᵢ² − 1| from the defining relations, without square roots (system 21:
/// from its explicit solution, which satisfies the constraint by construction).
pub fn constraint_identity(system: u32, r: [f64; 3], p: &ChartParams) -> Result<f64> {
    if !(17..=21).contains(&system) {
        return Err(Error::Capability { system, what: "constraint identity" });
    }
    p.validate(system)?;
    check_ordering(system, r, p, false)?;
    let rc = r.map(|x| Complex64::new(x, 0.0));
    let total = if system == 21 {
        system21_point(rc).iter().map(|z| z * z).sum::<Complex64>()
    } else {
        relations(system, rc, p)?
            .into_iter()
            .map(|rel| match rel {
                Relation::Square(w) => w,
                Relation::Pair(_, uv) => uv,
            })
            .sum()
    };
    Ok((total - 1.0).norm())
}

/// Metric g_ab = Σ ∂_a z ∂_b z assembled from the relations (no branch choice).
pub fn algebraic_metric(system: u32, r: [f64; 3], p: &ChartParams) -> Result<[[Complex64; 3]; 3]> {
    let seeds: [J3; 3] = Jet::seed(r.map(|x| Complex64::new(x, 0.0)));
    let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
    if system == 21 {
        let z = system21_point(seeds);
        for zi in z {
            for a in 0..3 {
                for b in 0..3 {
                    g[a][b] += zi.d(a) * zi.d(b);
                }
            }
        }
        return Ok(g);
    }
    for rel in relations(system, seeds, p)? {
        match rel {
            Relation::Square(w) => {
                // dz = dW/(2z) ⇒ dz dz = dW dW/(4W)
                for a in 0..3 {
                    for b in 0..3 {
                        g[a][b] += w.d(a) * w.d(b) / (4.0 * w.v);
                    }
                }
            }
            Relation::Pair(u2, uv) => {
                // du dv with u² = A, uv = B
                let (av, bv) = (u2.v, uv.v);
                for a in 0..3 {
                    for b in 0..3 {
                        g[a][b] += (u2.d(a) * uv.d(b) + u2.d(b) * uv.d(a)) / (4.0 * av)
                            - bv * u2.d(a) * u2.d(b) / (4.0 * av * av);
                    }
                }
            }
        }
    }
    Ok(g)
}
