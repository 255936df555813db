//! Metric data from the charts (exact jets) and from closed forms, and the
//! Laplace–Beltrami operator.

pub mod closed_form;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{self, algebraic_metric, chart, chart_info, check_domain, domain_sample, CoordTriple};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::report::{nan_max, VerificationReport};
use crate::Jet3;

pub use closed_form::{closed_form, ClosedForm};

pub type Mat3 = [[Complex64; 3]; 3];

/// Tolerance for Γ agreement.
pub const GAMMA_TOL: f64 = 1e-8;
/// Relative tolerance for (√g)² = det g.
pub const SQRT_G_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricSample {
    pub g: Mat3,
    pub sqrt_g: Complex64,
    /// Γ_a = ∂_a ln √g
    pub gamma: [Complex64; 3],
}

fn seeds(p: &CoordTriple) -> [Jet3; 3] {
    Jet::seed(p.u.map(|x| Complex64::new(x, 0.0)))
}

fn det3(m: &Mat3) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn inv3(m: &Mat3) -> Option<Mat3> {
    let d = det3(m);
    if d.norm() == 0.0 || !d.is_finite() {
        return None;
    }
    let mut r = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (i1, i2) = ((j + 1) % 3, (j + 2) % 3);
            let (j1, j2) = ((i + 1) % 3, (i + 2) % 3);
            r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
        }
    }
    Some(r)
}

/// ∂z_i/∂u^a, 4×3.
pub fn jacobian(p: &CoordTriple) -> Result<[[Complex64; 3]; 4]> {
    check_domain(p)?;
    let z = chart(p.system, seeds(p), &p.params)?;
    Ok(z.map(|zi| [zi.d(0), zi.d(1), zi.d(2)]))
}

/// g_ab = Σ_i ∂_a z_i ∂_b z_i with √g and Γ from det g and its derivatives.
pub fn metric_from_embedding(p: &CoordTriple) -> Result<MetricSample> {
    check_domain(p)?;
    let z = chart(p.system, seeds(p), &p.params)?;
    let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
    let mut dg = [[[Complex64::new(0.0, 0.0); 3]; 3]; 3];
    for zi in &z {
        for a in 0..3 {
            for b in 0..3 {
                g[a][b] += zi.d(a) * zi.d(b);
                for (cidx, dgc) in dg.iter_mut().enumerate() {
                    dgc[a][b] += zi.dd(cidx, a) * zi.d(b) + zi.d(a) * zi.dd(cidx, b);
                }
            }
        }
    }
    let ginv = inv3(&g).ok_or_else(|| Error::Degenerate(format!("{:?}", p.u)))?;
    let mut gamma = [Complex64::new(0.0, 0.0); 3];
    for (cidx, gc) in gamma.iter_mut().enumerate() {
        let mut tr = Complex64::new(0.0, 0.0);
        for a in 0..3 {
            for b in 0..3 {
                tr += ginv[a][b] * dg[cidx][b][a];
            }
        }
        *gc = 0.5 * tr;
    }
    Ok(MetricSample { g, sqrt_g: det3(&g).sqrt(), gamma })
}

/// Closed-form metric; Γ from the explicit expressions where they exist and
/// otherwise from ∂ ln √g of the closed-form diagonal.
pub fn metric_closed_form(p: &CoordTriple) -> Result<MetricSample> {
    check_domain(p)?;
    let cf = closed_form(p.system, seeds(p), &p.params)?;
    let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
    for a in 0..3 {
        g[a][a] = cf.diag[a].v;
    }
    let gamma = match cf.gamma {
        Some(gm) => gm.map(|x| x.v),
        None => log_sqrt_det_gradient(&cf.diag),
    };
    Ok(MetricSample { g, sqrt_g: cf.sqrt_g.v, gamma })
}

fn log_sqrt_det_gradient(diag: &[Jet3; 3]) -> [Complex64; 3] {
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (a, o) in out.iter_mut().enumerate() {
        *o = 0.5 * diag.iter().map(|d| d.d(a) / d.v).sum::<Complex64>();
    }
    out
}

/// A twice-differentiable function of the chart coordinates.
pub trait ScalarField: Sync {
    fn eval(&self, u: [Jet3; 3]) -> Result<Jet3>;
}

impl<F> ScalarField for F
where
    F: Fn([Jet3; 3]) -> Result<Jet3> + Sync,
{
    fn eval(&self, u: [Jet3; 3]) -> Result<Jet3> {
        self(u)
    }
}

/// Δf = Σ_a g^{aa}[∂²_a f + (Γ_a − ∂_a g_aa / g_aa) ∂_a f] with the
/// closed-form (orthogonal) metric.
pub fn laplace_beltrami_apply(system: u32, f: &dyn ScalarField, p: &CoordTriple) -> Result<Complex64> {
    if system != p.system {
        return Err(Error::InvalidParameter(format!("point belongs to system {}, not {system}", p.system)));
    }
    check_domain(p)?;
    let u = seeds(p);
    let cf = closed_form(system, u, &p.params)?;
    let scale = cf.diag.iter().map(|d| d.v.norm()).fold(0.0, f64::max);
    for d in &cf.diag {
        if !d.v.is_finite() || d.v.norm() <= 1e-14 * scale {
            return Err(Error::Degenerate(format!("system {system} at {:?}", p.u)));
        }
    }
    let gamma = log_sqrt_det_gradient(&cf.diag);
    let fj = f.eval(u)?;
    let mut out = Complex64::new(0.0, 0.0);
    for a in 0..3 {
        let gaa = cf.diag[a];
        out += (fj.dd(a, a) + (gamma[a] - gaa.d(a) / gaa.v) * fj.d(a)) / gaa.v;
    }
    Ok(out)
}

/// max |−½Δf − E f| / max |f| over `points`.
pub fn hamiltonian_residual(system: u32, f: &dyn ScalarField, e: f64, points: &[CoordTriple]) -> Result<f64> {
    let per: Vec<(f64, f64)> = points
        .par_iter()
        .map(|p| {
            let lap = laplace_beltrami_apply(system, f, p)?;
            let val = f.eval(seeds(p))?.v;
            Ok(((-0.5 * lap - e * val).norm(), val.norm()))
        })
        .collect::<Result<_>>()?;
    let (res, scale) = per.iter().fold((0.0, 0.0), |(r, s), &(a, b)| (nan_max(r, a), nan_max(s, b)));
    if scale == 0.0 {
        return Err(Error::Degenerate("field vanishes on all points".into()));
    }
    Ok(res / scale)
}

#[derive(Default, Clone, Copy)]
struct Deviation {
    metric: f64,
    metric_rel: f64,
    offdiag: f64,
    gamma: f64,
    sqrt_g: f64,
}

impl Deviation {
    fn merge(self, o: Deviation) -> Deviation {
        Deviation {
            metric: nan_max(self.metric, o.metric),
            metric_rel: nan_max(self.metric_rel, o.metric_rel),
            offdiag: nan_max(self.offdiag, o.offdiag),
            gamma: nan_max(self.gamma, o.gamma),
            sqrt_g: nan_max(self.sqrt_g, o.sqrt_g),
        }
    }
}

fn compare(g: &Mat3, closed: &MetricSample) -> (f64, f64, f64) {
    let scale = (0..3).map(|a| closed.g[a][a].norm()).fold(0.0, f64::max);
    let mut worst: f64 = 0.0;
    let mut off: f64 = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            worst = nan_max(worst, (g[a][b] - closed.g[a][b]).norm());
            if a != b {
                off = nan_max(off, g[a][b].norm());
                off = nan_max(off, (g[a][b] - g[b][a]).norm());
            }
        }
    }
    (worst, worst / scale, off)
}

fn notes_for(system: u32) -> Vec<String> {
    let mut v = Vec::new();
    if system >= 18 {
        v.push("metric from the defining relations (no branch choice) vs closed-form f(rho) metric".to_string());
    }
    if (17..=21).contains(&system) || system == 9 {
        v.push("Gamma from d ln sqrt(g) of the closed-form metric".to_string());
    }
    if let Ok(c) = chart_info(system, &Default::default()) {
        v.extend(c.errata_notes.iter().map(|s| s.to_string()));
    }
    v
}

/// Embedding-derived (systems 1–17) or relation-derived (18–21) metric
/// against the closed form on `n` seeded samples. Γ and (√g)² = det g are
/// checked alongside wherever an embedding exists.
pub fn metric_agreement(system: u32, n: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let chart = chart_info(system, &Default::default())?;
    let pts = domain_sample(system, n, seed)?;
    let dev = pts
        .par_iter()
        .map(|p| -> Result<Deviation> {
            let closed = metric_closed_form(p)?;
            if chart.capabilities.embedding {
                let emb = metric_from_embedding(p)?;
                let (m, r, off) = compare(&emb.g, &closed);
                let gamma = (0..3).map(|a| (emb.gamma[a] - closed.gamma[a]).norm()).fold(0.0, nan_max);
                let det = det3(&emb.g);
                let sq = (closed.sqrt_g * closed.sqrt_g - det).norm() / det.norm();
                Ok(Deviation { metric: m, metric_rel: r, offdiag: off, gamma, sqrt_g: sq })
            } else {
                let g = algebraic_metric(system, p.u, &p.params)?;
                let (m, r, off) = compare(&g, &closed);
                let det = det3(&closed.g);
                let sq = (closed.sqrt_g * closed.sqrt_g - det).norm() / det.norm();
                Ok(Deviation { metric: m, metric_rel: r, offdiag: off, gamma: 0.0, sqrt_g: sq })
            }
        })
        .try_reduce(Deviation::default, |a, b| Ok(a.merge(b)))?;
    let mut rep = VerificationReport::new("metric_agreement", Some(system))
        .param("mode", "abs")
        .param("name", chart.name)
        .param("source", if chart.capabilities.embedding { "embedding" } else { "relations" })
        .param("gamma_max_abs_err", dev.gamma)
        .param("gamma_tol", GAMMA_TOL)
        .param("offdiag_max_abs", dev.offdiag)
        .param("sqrt_g_sq_vs_det_rel_err", dev.sqrt_g)
        .param("sqrt_g_tol", SQRT_G_TOL);
    rep.n_points = n;
    rep.seed = Some(seed);
    rep.max_abs_err = dev.metric;
    rep.max_rel_err = dev.metric_rel;
    rep.tol = tol;
    rep.notes = notes_for(system);
    let mut rep = rep.decide();
    let side_ok = dev.gamma <= GAMMA_TOL && dev.sqrt_g <= SQRT_G_TOL && dev.offdiag <= tol.max(1e-12);
    if !side_ok {
        rep.notes.push("Gamma, sqrt(g) or off-diagonal check failed".into());
    }
    rep.pass = rep.pass && side_ok;
    Ok(rep)
}

/// Constraint residual of embedded samples (systems 1–17) or the identity of
/// the defining relations (18–21).
pub fn constraint_check(system: u32, n: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let chart = chart_info(system, &Default::default())?;
    let pts = domain_sample(system, n, seed)?;
    let worst = pts
        .par_iter()
        .map(|p| -> Result<f64> {
            if chart.capabilities.embedding {
                Ok(embedding::constraint_residual(&embedding::embed(p)?))
            } else {
                embedding::constraint_identity(system, p.u, &p.params)
            }
        })
        .try_reduce(|| 0.0, |a, b| Ok(nan_max(a, b)))?;
    let mut rep = VerificationReport::new("constraint", Some(system))
        .param("mode", "abs")
        .param("name", chart.name)
        .param("source", if chart.capabilities.embedding { "embedding" } else { "relations" });
    rep.n_points = n;
    rep.seed = Some(seed);
    rep.max_abs_err = worst;
    rep.max_rel_err = worst;
    rep.tol = tol;
    if system == 21 {
        rep.notes.push("structural: the fourth component is fixed by the constraint".into());
    }
    Ok(rep.decide())
}
