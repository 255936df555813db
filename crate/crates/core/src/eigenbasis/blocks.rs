//! One-dimensional separated equations and their closed-form solutions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::nan_max;
use crate::scalar::{ComplexScalar, Scalar};
use crate::specfun::{airy_ai, bessel_k_imag, hankel1_half, hankel1_int, hyp2f1, laguerre, legendre_p};
use crate::Jet1;

/// Order of the Hankel function tried in the complex Liouville block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HankelOrder {
    /// ν = J + 1/2
    JPlusHalf,
    /// ν = J + 1
    JPlusOne,
}

impl std::fmt::Display for HankelOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HankelOrder::JPlusHalf => "J+1/2",
            HankelOrder::JPlusOne => "J+1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "block", rename_all = "snake_case")]
pub enum Block {
    /// ψ = e^{−ix} H^{(1)}_ν(k e^{−ix}) in ψ″ + 2iψ′ + (J(J+2) − k² e^{−2ix})ψ = 0.
    ComplexLiouville { j: u32, k: f64, order: HankelOrder },
    /// Φ = (sin χ)^{−1/2} P^{−l−1/2}_{J+1/2}(cos χ) in
    /// Φ″ + 2 cot χ Φ′ − l(l+1)Φ/sin²χ + J(J+2)Φ = 0.
    SymPoschlTeller { j: u32, l: u32 },
    /// ψ = cosh^{2k₁−1/2} sinh^{2k₂−1/2} ₂F₁(k₁+k₂−κ, k₁+k₂+κ−1; 2k₂; −sinh²r),
    /// k₁ = (1+ν)/2, k₂ = (1+η)/2, κ = (1+ip)/2, in
    /// ψ″ − [(η²−¼)/sinh²r − (ν²−¼)/cosh²r]ψ + p²ψ = 0.
    ModPoschlTeller { eta: f64, nu: f64, p: f64 },
    /// u = r^α e^{−ωr²/2} L_n^{(α)}(ωr²) in u″ + u′/r − α²u/r² − ω²r²u + εu = 0,
    /// ε = 2ω(2n+α+1).
    RadialOscillator { n: u32, alpha: f64, omega: f64 },
    /// Ai″ − t Ai = 0.
    Airy,
    /// y = P^{ik}_{ip−1/2}(tanh τ) in y″ + [k² − (p²+¼) sech²τ] y = 0.
    LegendreComplex { k: f64, p: f64 },
    /// K = K_{ik}(p e^y) in K″ + (k² − p² e^{2y}) K = 0.
    BesselKImag { k: f64, p: f64 },
}

impl Block {
    /// Interval inside the region where the building blocks are reliable.
    pub fn default_range(&self) -> (f64, f64) {
        match self {
            Block::ComplexLiouville { .. } => (-1.0, 1.0),
            Block::SymPoschlTeller { .. } => (0.1, 3.0),
            Block::ModPoschlTeller { .. } => (0.2, 1.5),
            Block::RadialOscillator { .. } => (0.2, 2.5),
            Block::Airy => (-2.0, 2.0),
            Block::LegendreComplex { .. } => (-1.0, 1.5),
            Block::BesselKImag { .. } => (-1.0, 1.0),
        }
    }

    /// `n` equally spaced points of the default range, ends included.
    pub fn default_grid(&self, n: usize) -> Vec<f64> {
        let (a, b) = self.default_range();
        let n = n.max(2);
        (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
    }

    fn solution(&self, t: Jet1) -> Result<Jet1> {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        match *self {
            Block::ComplexLiouville { j, k, order } => {
                let em = (-(Jet1::i() * t)).exp();
                let z = em.scale(k);
                let h = match order {
                    HankelOrder::JPlusOne => hankel1_int(j + 1, z)?,
                    HankelOrder::JPlusHalf => hankel1_half(j as i32, z)?,
                };
                Ok(em * h)
            }
            Block::SymPoschlTeller { j, l } => {
                let p = legendre_p(c(j as f64 + 0.5, 0.0), c(-(l as f64) - 0.5, 0.0), t.cos())?;
                Ok(t.sin().sqrt().recip() * p)
            }
            Block::ModPoschlTeller { eta, nu, p } => {
                let (k1, k2) = ((1.0 + nu) / 2.0, (1.0 + eta) / 2.0);
                let kappa = c(0.5, p / 2.0);
                let s = t.sinh();
                let f = hyp2f1(c(k1 + k2, 0.0) - kappa, c(k1 + k2 - 1.0, 0.0) + kappa, c(2.0 * k2, 0.0), -(s * s))?;
                Ok(t.cosh().powr(2.0 * k1 - 0.5) * s.powr(2.0 * k2 - 0.5) * f)
            }
            Block::RadialOscillator { n, alpha, omega } => {
                let x = (t * t).scale(omega);
                Ok(t.powr(alpha) * (-x.scale(0.5)).exp() * laguerre(n as usize, alpha, x)?)
            }
            Block::Airy => airy_ai(t),
            Block::LegendreComplex { k, p } => legendre_p(c(-0.5, p), c(0.0, k), t.tanh()),
            Block::BesselKImag { k, p } => bessel_k_imag(k, t.exp().scale(p)),
        }
    }

    fn residual(&self, t: f64, y: &Jet1) -> Complex64 {
        let (y0, y1, y2) = (y.v, y.d(0), y.dd(0, 0));
        let i = Complex64::new(0.0, 1.0);
        match *self {
            Block::ComplexLiouville { j, k, .. } => {
                let jj = j as f64;
                y2 + 2.0 * i * y1 + (jj * (jj + 2.0) - k * k * (-2.0 * i * t).exp()) * y0
            }
            Block::SymPoschlTeller { j, l } => {
                let (jj, ll) = (j as f64, l as f64);
                y2 + 2.0 / t.tan() * y1 - ll * (ll + 1.0) / t.sin().powi(2) * y0 + jj * (jj + 2.0) * y0
            }
            Block::ModPoschlTeller { eta, nu, p } => {
                let v = (eta * eta - 0.25) / t.sinh().powi(2) - (nu * nu - 0.25) / t.cosh().powi(2);
                y2 - v * y0 + p * p * y0
            }
            Block::RadialOscillator { n, alpha, omega } => {
                let eps = 2.0 * omega * (2.0 * n as f64 + alpha + 1.0);
                y2 + y1 / t - alpha * alpha / (t * t) * y0 - omega * omega * t * t * y0 + eps * y0
            }
            Block::Airy => y2 - t * y0,
            Block::LegendreComplex { k, p } => y2 + (k * k - (p * p + 0.25) / t.cosh().powi(2)) * y0,
            Block::BesselKImag { k, p } => y2 + (k * k - p * p * (2.0 * t).exp()) * y0,
        }
    }
}

/// Max |residual| / max |solution| of the block's closed-form solution over
/// `grid`, with derivatives from jets.
pub fn ode_residual_1d(block: &Block, grid: &[f64]) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("empty grid".into()));
    }
    let (lo, hi) = block.default_range();
    let tol = 1e-12 * (hi - lo);
    let mut res: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for &t in grid {
        if !(t >= lo - tol && t <= hi + tol) {
            return Err(Error::OutOfRegion { func: "ode_residual_1d", detail: format!("{t} outside [{lo}, {hi}]") });
        }
        let y = block.solution(Jet1::variable(Complex64::new(t, 0.0), 0))?;
        res = nan_max(res, block.residual(t, &y).norm());
        scale = nan_max(scale, y.v.norm());
    }
    if scale == 0.0 {
        return Err(Error::Degenerate("solution vanishes on the grid".into()));
    }
    Ok(res / scale)
}

/// Outcome of testing both Hankel orders in the complex Liouville block.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Arbitration {
    pub j: u32,
    pub k: f64,
    pub residual_j_plus_half: f64,
    pub residual_j_plus_one: f64,
    /// The single order whose residual is within `pass_tol`, if exactly one is.
    pub selected: Option<HankelOrder>,
}

impl Arbitration {
    pub fn summary(&self) -> String {
        let verdict = |r: f64, tol: f64| if r <= tol { "passes" } else { "fails" };
        format!(
            "J={}: order=J+1 {} (residual {:.2e}); order=J+1/2 {} (residual {:.2e})",
            self.j,
            verdict(self.residual_j_plus_one, 1e-8),
            self.residual_j_plus_one,
            verdict(self.residual_j_plus_half, 1e-8),
            self.residual_j_plus_half
        )
    }
}

/// Residuals of both orders on `n` points of x ∈ [−1, 1]; an order is
/// selected when it alone passes `pass_tol` and the other exceeds `fail_tol`.
pub fn liouville_arbitration(j: u32, k: f64, n: usize, pass_tol: f64, fail_tol: f64) -> Result<Arbitration> {
    let run = |order| {
        let b = Block::ComplexLiouville { j, k, order };
        ode_residual_1d(&b, &b.default_grid(n))
    };
    let half = run(HankelOrder::JPlusHalf)?;
    let one = run(HankelOrder::JPlusOne)?;
    let selected = match (half <= pass_tol, one <= pass_tol) {
        (true, false) if one > fail_tol => Some(HankelOrder::JPlusHalf),
        (false, true) if half > fail_tol => Some(HankelOrder::JPlusOne),
        _ => None,
    };
    Ok(Arbitration { j, k, residual_j_plus_half: half, residual_j_plus_one: one, selected })
}
