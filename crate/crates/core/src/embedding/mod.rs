//! Coordinate charts of the complex sphere z₁² + z₂² + z₃² + z₄² = 1.

pub mod algebraic;
pub mod charts;
pub mod registry;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebraic::{algebraic_metric, constraint_identity};
pub use charts::chart;
pub use registry::{chart_info, registry, Capabilities, Chart, Interval, NAMES, SYSTEM_COUNT};

/// Parameters shared by the charts that need them.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartParams {
    /// Elliptic modulus k (systems 6, 13).
    pub k: f64,
    /// Ellipsoidal parameters, a > b > 1 (a also used by system 18).
    pub a: f64,
    pub b: f64,
}

impl Default for ChartParams {
    fn default() -> Self {
        ChartParams { k: std::f64::consts::FRAC_1_SQRT_2, a: 3.0, b: 2.0 }
    }
}

impl ChartParams {
    pub fn k_prime(&self) -> f64 {
        (1.0 - self.k * self.k).sqrt()
    }

    pub fn validate(&self, system: u32) -> Result<()> {
        match system {
            6 | 13 if !(self.k > 0.0 && self.k < 1.0) => {
                Err(Error::InvalidParameter(format!("modulus k = {} not in (0, 1)", self.k)))
            }
            17 if !(self.a > self.b && self.b > 1.0) => {
                Err(Error::InvalidParameter(format!("need a > b > 1 (a = {}, b = {})", self.a, self.b)))
            }
            18 if !(self.a > 1.0) => Err(Error::InvalidParameter(format!("need a > 1 (a = {})", self.a))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordTriple {
    pub system: u32,
    pub u: [f64; 3],
    #[serde(default)]
    pub params: ChartParams,
}

impl CoordTriple {
    pub fn new(system: u32, u: [f64; 3]) -> Self {
        CoordTriple { system, u, params: ChartParams::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CPoint4 {
    pub z: [Complex64; 4],
}

impl CPoint4 {
    pub fn new(z: [Complex64; 4]) -> Self {
        CPoint4 { z }
    }
}

/// Verifies that `p` lies in the open domain of its chart.
pub fn check_domain(p: &CoordTriple) -> Result<()> {
    let chart = chart_info(p.system, &p.params)?;
    p.params.validate(p.system)?;
    for (co, &x) in chart.coordinates.iter().zip(&p.u) {
        if !co.domain.contains(x) {
            return Err(Error::Domain { system: p.system, coord: co.name, value: x, domain: co.domain.to_string() });
        }
    }
    let u = p.u;
    let ordered = match p.system {
        7 => u[1] < u[2],
        8 | 9 | 12 => u[2] < u[1],
        13 | 15 => u[0] < u[1],
        14 => u[1] < u[0],
        17..=21 => return algebraic::check_ordering(p.system, u, &p.params, true),
        _ => true,
    };
    if !ordered {
        return Err(Error::Ordering(format!(
            "system {}: {} violated at {:?}",
            p.system,
            chart.ordering.unwrap_or("ordering"),
            u
        )));
    }
    Ok(())
}

/// Embedded point of an in-domain coordinate triple (systems 1–17).
pub fn embed(p: &CoordTriple) -> Result<CPoint4> {
    check_domain(p)?;
    let u = p.u.map(|x| Complex64::new(x, 0.0));
    Ok(CPoint4::new(chart(p.system, u, &p.params)?))
}

/// Bilinear pairing Σ aᵢbᵢ (no conjugation).
pub fn dot4(a: &CPoint4, b: &CPoint4) -> Complex64 {
    a.z.iter().zip(&b.z).map(|(x, y)| x * y).sum()
}

pub fn constraint_residual(q: &CPoint4) -> f64 {
    (dot4(q, q) - 1.0).norm()
}

/// Deterministic interior samples inside the chart's sampling box.
///
/// Sample `i` depends only on (seed, system, i), so any sub-range can be
/// regenerated independently.
pub fn domain_sample(system: u32, n: usize, seed: u64) -> Result<Vec<CoordTriple>> {
    domain_sample_with(system, n, seed, ChartParams::default())
}

pub fn domain_sample_with(system: u32, n: usize, seed: u64, params: ChartParams) -> Result<Vec<CoordTriple>> {
    let chart = chart_info(system, &params)?;
    params.validate(system)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(system as u64);
    let out = (0..n)
        .map(|i| {
            rng.set_word_pos(i as u128 * 16);
            let mut u = [0.0; 3];
            for (x, co) in u.iter_mut().zip(&chart.coordinates) {
                let [lo, hi] = co.sample;
                let r: f64 = rng.gen();
                *x = lo + (hi - lo) * r;
            }
            CoordTriple { system, u, params }
        })
        .collect();
    Ok(out)
}
