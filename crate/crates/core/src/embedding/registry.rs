//! Static description of the 21 charts: names, coordinate domains, sampling
//! boxes, capabilities and the corrections applied to the stated formulas.

use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::specfun::complete_k;

use super::ChartParams;

pub const SYSTEM_COUNT: u32 = 21;
/// Distance kept from singular loci when sampling.
pub const MARGIN: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    /// `None` means unbounded.
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    /// Periodic coordinates are half-open [lo, hi); all others open.
    pub periodic: bool,
}

impl Interval {
    const fn open(lo: f64, hi: f64) -> Self {
        Interval { lo: Some(lo), hi: Some(hi), periodic: false }
    }
    const fn above(lo: f64) -> Self {
        Interval { lo: Some(lo), hi: None, periodic: false }
    }
    const fn line() -> Self {
        Interval { lo: None, hi: None, periodic: false }
    }
    const fn angle() -> Self {
        Interval { lo: Some(0.0), hi: Some(2.0 * PI), periodic: true }
    }

    pub fn contains(&self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        let lo_ok = match self.lo {
            Some(l) if self.periodic => x >= l,
            Some(l) => x > l,
            None => true,
        };
        let hi_ok = self.hi.is_none_or(|h| x < h);
        lo_ok && hi_ok
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let lo = self.lo.map_or("-inf".to_string(), |v| format!("{v}"));
        let hi = self.hi.map_or("inf".to_string(), |v| format!("{v}"));
        let open = if self.periodic { '[' } else { '(' };
        write!(f, "{open}{lo}, {hi})")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Coordinate {
    pub name: &'static str,
    pub domain: Interval,
    /// Closed box used by `domain_sample`.
    pub sample: [f64; 2],
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    pub embedding: bool,
    pub metric_closed_form: bool,
    pub gamma_closed_form: bool,
    pub eigenbasis: bool,
    pub constraint_identity_only: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Chart {
    pub system_id: u32,
    pub name: &'static str,
    #[serde(rename = "domains")]
    pub coordinates: Vec<Coordinate>,
    /// Extra strict inequality between coordinates, if any.
    pub ordering: Option<&'static str>,
    pub capabilities: Capabilities,
    /// Elliptic modulus for systems 6 and 13.
    pub modulus: Option<f64>,
    pub errata_notes: Vec<&'static str>,
}

pub const NAMES: [&str; 21] = [
    "Cylindrical",
    "Horicyclic",
    "Spherical",
    "Horospherical",
    "Horicyclic-polar",
    "Sphero-elliptic",
    "Spherical-degenerate elliptic I",
    "Spherical-degenerate elliptic II",
    "Horicyclic-elliptic",
    "Horicyclic-hyperbolic",
    "Horicyclic-parabolic I",
    "Horicyclic-parabolic II",
    "Elliptic-Cylindrical",
    "Elliptic-Parabolic",
    "Elliptic-Hyperbolic",
    "Parabolic",
    "Ellipsoidal",
    "System 18",
    "System 19",
    "System 20",
    "System 21",
];

fn coord(name: &'static str, domain: Interval, lo: f64, hi: f64) -> Coordinate {
    Coordinate { name, domain, sample: [lo, hi] }
}

fn notes(system: u32) -> Vec<&'static str> {
    let v: &[&'static str] = match system {
        2 | 5 | 11 => &[
            "transverse components carry no factor i; with it the constraint holds but the metric becomes dx^2 - e^{2ix}(...)",
            "z4 = (i/2)[e^{-ix} - (1 - Q)e^{ix}] with Q = -(w2^2 + w3^2), so that sum z^2 = 1",
        ],
        9 => &[
            "transverse pair (cosh t1 cosh t2, -i sinh t1 sinh t2)",
            "stated Gamma has the vanishing denominator cosh^2 t2 - cosh^2 t2; Gamma taken from d ln sqrt(g)",
            "sqrt(g) needs a factor i",
        ],
        10 => &[
            "transverse pair ((sinh(y-z) + e^{y+z})/sqrt2, -i(sinh(y-z) - e^{y+z})/sqrt2); z4 without the duplicated e^{ix}",
            "metric is e^{2ix}(e^{2y} + e^{2z})(dy^2 - dz^2); Gamma_z = 2e^{2z}/S (sign corrected); sqrt(g) needs a factor i",
        ],
        12 => &["z4 lacked a factor i", "sqrt(g) needs a factor i"],
        6 => &["Gamma_alpha, Gamma_beta denominator is k^2 cn^2 alpha + k'^2 cn^2 beta"],
        7 => &["z3 = i sin(chi)[1/(cosh t1 cosh t2) - h]", "sqrt(g) needs a factor i"],
        8 => &[
            "z2 = sin(chi)(xi^2 + eta^2)/(2 xi eta), z4 = cos(chi)",
            "Gamma_xi, Gamma_eta signs corrected; sqrt(g) needs a factor i",
        ],
        13 => &[
            "same modulus k for alpha and beta; range 0 < alpha < beta < K",
            "metric -k^2(sn^2 a - sn^2 b)(da^2 - db^2) - (k/k')^2 cn^2 a cn^2 b dphi^2",
            "Gamma from this chart: 2 sn cn dn(a)/(sn^2 a - sn^2 b) - sn dn/cn(a), and the analogue in b",
        ],
        14 => &["metric has the opposite overall sign", "second Gamma term is 1/(sinh cosh)"],
        15 => &["the dtau3^2 term has the opposite sign"],
        16 => &["metric has the opposite overall sign; sqrt(g) needs a factor i"],
        17 => &["all four squares z_i^2 have the opposite sign (their sum was -1)"],
        18 => &[
            "relations have the opposite sign (their sum was -1)",
            "f(rho) = -4(rho - a)(rho - 1)rho^2; the form with a = 2 fixed is a special case",
        ],
        20 => &["first relation read as (z2 - i z1)^2 = rho1 rho2 rho3; identity uses only the unambiguous relations"],
        21 => &["fourth component fixed by the constraint; identity check is structural"],
        _ => &[],
    };
    v.to_vec()
}

/// Chart descriptor for `system` with the given parameters.
pub fn chart_info(system: u32, p: &ChartParams) -> Result<Chart> {
    if !(1..=SYSTEM_COUNT).contains(&system) {
        return Err(Error::UnknownSystem(system));
    }
    let m = MARGIN;
    let line = Interval::line();
    let ang = Interval::angle();
    let pi = PI;
    let (coordinates, ordering): (Vec<Coordinate>, Option<&'static str>) = match system {
        1 => (
            vec![
                coord("theta", Interval::open(0.0, FRAC_PI_2), m, FRAC_PI_2 - m),
                coord("phi1", ang, 0.0, 2.0 * pi),
                coord("phi2", ang, 0.0, 2.0 * pi),
            ],
            None,
        ),
        2 | 10 => (vec![coord("x", line, -1.5, 1.5), coord("y", line, -1.5, 1.5), coord("z", line, -1.5, 1.5)], None),
        3 => (
            vec![
                coord("chi", Interval::open(0.0, pi), m, pi - m),
                coord("theta", Interval::open(0.0, pi), m, pi - m),
                coord("phi", ang, 0.0, 2.0 * pi),
            ],
            None,
        ),
        4 => (
            vec![
                coord("chi", Interval::open(0.0, pi), m, pi - m),
                coord("x", line, -1.5, 1.5),
                coord("y", line, -1.5, 1.5),
            ],
            None,
        ),
        5 => (
            vec![
                coord("x", line, -1.5, 1.5),
                coord("rho", Interval::above(0.0), m, 3.0),
                coord("phi", ang, 0.0, 2.0 * pi),
            ],
            None,
        ),
        6 => {
            let (kk, kkp) = (complete_k(p.k), complete_k(p.k_prime()));
            (
                vec![
                    coord("chi", Interval::open(0.0, pi), m, pi - m),
                    coord("alpha", Interval::open(-kk, kk), -kk + m, kk - m),
                    coord("beta", Interval::open(-kkp, kkp), -kkp + m, kkp - m),
                ],
                None,
            )
        }
        7 => (
            vec![
                coord("chi", Interval::open(0.0, pi), m, pi - m),
                coord("tau1", Interval::above(0.0), m, 0.8),
                coord("tau2", Interval::above(0.0), 0.9, 2.0),
            ],
            Some("tau1 < tau2"),
        ),
        8 => (
            vec![
                coord("chi", Interval::open(0.0, pi), m, pi - m),
                coord("xi", Interval::above(0.0), 1.2, 2.5),
                coord("eta", Interval::above(0.0), 0.2, 1.1),
            ],
            Some("eta < xi"),
        ),
        9 => (
            vec![
                coord("x", line, -1.5, 1.5),
                coord("tau1", Interval::above(0.0), 0.9, 2.0),
                coord("tau2", Interval::above(0.0), m, 0.8),
            ],
            Some("tau2 < tau1"),
        ),
        11 => (
            vec![
                coord("x", line, -1.5, 1.5),
                coord("xi", Interval::above(0.0), m, 2.0),
                coord("eta", Interval::above(0.0), m, 2.0),
            ],
            None,
        ),
        12 => (
            vec![coord("x", line, -1.5, 1.5), coord("xi", line, 1.1, 2.5), coord("eta", line, m, 1.0)],
            Some("eta < xi"),
        ),
        13 => {
            let kk = complete_k(p.k);
            (
                vec![
                    coord("alpha", Interval::open(0.0, kk), m, 0.8),
                    coord("beta", Interval::open(0.0, kk), 0.9, kk - m),
                    coord("phi", ang, 0.0, 2.0 * pi),
                ],
                Some("alpha < beta"),
            )
        }
        14 => (
            vec![
                coord("tau1", Interval::above(0.0), 0.9, 2.0),
                coord("tau2", Interval::above(0.0), m, 0.8),
                coord("tau3", line, -1.5, 1.5),
            ],
            Some("tau2 < tau1"),
        ),
        15 => (
            vec![
                coord("tau1", Interval::above(0.0), m, 0.8),
                coord("tau2", Interval::above(0.0), 0.9, 2.0),
                coord("tau3", line, -1.5, 1.5),
            ],
            Some("tau1 < tau2"),
        ),
        16 => (
            vec![
                coord("xi", Interval::above(0.0), 0.2, 2.0),
                coord("eta", Interval::above(0.0), 0.2, 2.0),
                coord("tau", line, -1.5, 1.5),
            ],
            None,
        ),
        17 => {
            let (a, b) = (p.a, p.b);
            (
                vec![
                    coord("rho1", Interval::open(0.0, 1.0), m, 1.0 - m),
                    coord("rho2", Interval::open(1.0, b), 1.0 + m, b - m),
                    coord("rho3", Interval::open(b, a), b + m, a - m),
                ],
                Some("0 < rho1 < 1 < rho2 < b < rho3 < a"),
            )
        }
        18 => {
            let a = p.a;
            (
                vec![
                    coord("rho1", Interval::open(0.0, 1.0), m, 1.0 - m),
                    coord("rho2", Interval::open(1.0, a), 1.0 + m, a - m),
                    coord("rho3", Interval::above(a), a + m, a + 2.0),
                ],
                Some("0 < rho1 < 1 < rho2 < a < rho3"),
            )
        }
        19 | 20 => (
            vec![
                coord("rho1", Interval::open(0.0, 1.0), m, 1.0 - m),
                coord("rho2", Interval::above(1.0), 1.0 + m, 2.0),
                coord("rho3", Interval::above(1.0), 2.0 + m, 3.5),
            ],
            Some("0 < rho1 < 1 < rho2 < rho3"),
        ),
        21 => (
            vec![
                coord("rho1", Interval::above(0.0), 0.2, 1.0),
                coord("rho2", Interval::above(0.0), 1.0 + m, 2.0),
                coord("rho3", Interval::above(0.0), 2.0 + m, 3.0),
            ],
            Some("0 < rho1 < rho2 < rho3"),
        ),
        _ => unreachable!(),
    };
    let capabilities = Capabilities {
        embedding: system <= 17,
        metric_closed_form: true,
        gamma_closed_form: system <= 16,
        eigenbasis: matches!(system, 1..=5 | 16),
        constraint_identity_only: system >= 18,
    };
    Ok(Chart {
        system_id: system,
        name: NAMES[(system - 1) as usize],
        coordinates,
        ordering,
        capabilities,
        modulus: matches!(system, 6 | 13).then_some(p.k),
        errata_notes: notes(system),
    })
}

/// All 21 charts with the default parameters.
pub fn registry() -> Vec<Chart> {
    let p = ChartParams::default();
    (1..=SYSTEM_COUNT).map(|s| chart_info(s, &p).expect("valid system")).collect()
}
