//! Explicit eigenfunctions of −½Δ for the charts where they reduce to
//! classical special functions, plus the one-dimensional blocks of the
//! remaining separable charts.

mod blocks;

pub use blocks::{liouville_arbitration, ode_residual_1d, Arbitration, Block, HankelOrder};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::embedding::{check_domain, CoordTriple};
use crate::error::{Error, Result};
use crate::geometry::ScalarField;
use crate::scalar::ComplexScalar;
use crate::specfun::quad::gauss_legendre;
use crate::specfun::{
    bessel_j, factorial, gamma_real, gegenbauer, hankel1_half, hankel1_int, jacobi, laguerre, legendre_p,
};
use crate::Jet3;

/// Largest transverse momentum accepted where an integer-order Hankel
/// function of k e^{−ix} is needed.
const MAX_HANKEL_ARG: f64 = 12.0;

/// Labels of one eigenmode. `j` is the principal label wherever it is an input.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuantumNumbers {
    /// System 1: Jacobi polynomial in cos 2ϑ times Fourier factors.
    Cylindrical { j: u32, m1: i32, m2: i32 },
    /// System 2: plane waves in (y, z) times a Hankel function of κ e^{−ix}.
    Horicyclic { j: u32, ky: f64, kz: f64 },
    /// System 3: nested Gegenbauer polynomials.
    Spherical { j: u32, m1: u32, m2: u32 },
    /// System 4: J = l + n_x.
    Horospherical { l: u32, nx: u32, ky: f64 },
    /// System 5: Bessel J_ν(kρ) in the transverse plane.
    HoricyclicPolar { j: u32, nu: i32, k: f64 },
    /// System 16: J = n_ξ + n_η, oscillator frequency |k|.
    Parabolic { n_xi: u32, n_eta: u32, k: f64 },
}

impl QuantumNumbers {
    pub fn system(&self) -> u32 {
        match self {
            QuantumNumbers::Cylindrical { .. } => 1,
            QuantumNumbers::Horicyclic { .. } => 2,
            QuantumNumbers::Spherical { .. } => 3,
            QuantumNumbers::Horospherical { .. } => 4,
            QuantumNumbers::HoricyclicPolar { .. } => 5,
            QuantumNumbers::Parabolic { .. } => 16,
        }
    }

    pub fn j(&self) -> u32 {
        match *self {
            QuantumNumbers::Cylindrical { j, .. }
            | QuantumNumbers::Horicyclic { j, .. }
            | QuantumNumbers::Spherical { j, .. }
            | QuantumNumbers::HoricyclicPolar { j, .. } => j,
            QuantumNumbers::Horospherical { l, nx, .. } => l + nx,
            QuantumNumbers::Parabolic { n_xi, n_eta, .. } => n_xi + n_eta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::InvalidQuantumNumbers(s));
        match *self {
            QuantumNumbers::Cylindrical { j, m1, m2 } => {
                let s = m1.unsigned_abs() + m2.unsigned_abs();
                if s > j {
                    return bad(format!("|m1| + |m2| = {s} exceeds J = {j}"));
                }
                if (j - s) % 2 != 0 {
                    return bad(format!("J - |m1| - |m2| = {} must be even", j - s));
                }
            }
            QuantumNumbers::Spherical { j, m1, m2 } => {
                if !(j >= m1 && m1 >= m2) {
                    return bad(format!("need J >= m1 >= m2 >= 0 (got {j}, {m1}, {m2})"));
                }
            }
            QuantumNumbers::Horicyclic { ky, kz, .. } => {
                let kappa = ky.hypot(kz);
                if !(kappa > 0.0 && kappa <= MAX_HANKEL_ARG) {
                    return bad(format!("sqrt(ky^2 + kz^2) = {kappa} must lie in (0, {MAX_HANKEL_ARG}]"));
                }
            }
            QuantumNumbers::Horospherical { ky, .. } => {
                if !(ky.is_finite() && ky != 0.0) {
                    return bad(format!("ky = {ky} must be finite and nonzero"));
                }
            }
            QuantumNumbers::HoricyclicPolar { k, .. } => {
                if !(k > 0.0 && k <= MAX_HANKEL_ARG) {
                    return bad(format!("k = {k} must lie in (0, {MAX_HANKEL_ARG}]"));
                }
            }
            QuantumNumbers::Parabolic { k, .. } => {
                if !(k.is_finite() && k != 0.0) {
                    return bad(format!("k = {k} must be finite and nonzero"));
                }
            }
        }
        Ok(())
    }
}

/// E_J = J(J+2)/2.
pub fn energy(j: u32) -> f64 {
    let j = j as f64;
    j * (j + 2.0) / 2.0
}

/// Reason the full eigenbasis of `system` is not provided, if it is not.
pub fn out_of_scope_reason(system: u32) -> Option<&'static str> {
    match system {
        1..=5 | 16 => None,
        6 => Some("Lame"),
        7 => Some("conical Legendre block only"),
        8 | 15 => Some("spheroidal"),
        9 | 13 => Some("Mathieu"),
        10 => Some("Bessel K block only"),
        11 => Some("parabolic cylinder"),
        12 => Some("Airy block only"),
        14 => Some("modified Poschl-Teller block only"),
        17 => Some("ellipsoidal Lame"),
        _ => Some("Heun"),
    }
}

fn supported(system: u32) -> Result<()> {
    match out_of_scope_reason(system) {
        None => Ok(()),
        Some(r) if system <= 21 => Err(Error::OutOfScope(r)),
        Some(_) => Err(Error::UnknownSystem(system)),
    }
}

fn fact(n: u32) -> f64 {
    factorial::<f64>(n as usize)
}

/// Evaluates the mode on chart coordinates of any complex scalar type.
pub fn eval_mode<S: ComplexScalar<Real = f64>>(qn: &QuantumNumbers, u: [S; 3]) -> Result<S> {
    let i = S::i();
    match *qn {
        QuantumNumbers::Cylindrical { j, m1, m2 } => {
            let (a1, a2) = (m1.unsigned_abs(), m2.unsigned_abs());
            let n = (j - a1 - a2) / 2;
            let b = (j + a1 + a2) / 2;
            let c = (j - a1 + a2) / 2;
            let d = (j + a1 - a2) / 2;
            let norm = (2.0 * (j + 1) as f64 * fact(n) * fact(b) / (fact(c) * fact(d))).sqrt() / (2.0 * PI);
            let [th, p1, p2] = u;
            let phase = (i * (p1.scale(m1 as f64) + p2.scale(m2 as f64))).exp();
            let poly = jacobi(n as usize, a1 as f64, a2 as f64, th.scale(2.0).cos())?;
            Ok((phase * th.sin().powi(a1 as i32) * th.cos().powi(a2 as i32) * poly).scale(norm))
        }
        QuantumNumbers::Horicyclic { j, ky, kz } => {
            let [x, y, z] = u;
            let kappa = ky.hypot(kz);
            let em = (-(i * x)).exp();
            let h = hankel1_int(j + 1, em.scale(kappa))?;
            let plane = (i * (y.scale(ky) + z.scale(kz))).exp();
            Ok((plane * em * h).scale(1.0 / (2.0 * PI * 2f64.sqrt())))
        }
        QuantumNumbers::Spherical { j, m1, m2 } => {
            let (jf, a, b) = (j as f64, m1 as f64, m2 as f64);
            let nn = 2.0
                * PI.powi(3)
                * 2f64.powf(-1.0 - 2.0 * a - 2.0 * b)
                * gamma_real(jf + a + 2.0)?
                * gamma_real(a + b + 1.0)?
                / ((jf + 1.0)
                    * (a + 0.5)
                    * fact(j - m1)
                    * fact(m1 - m2)
                    * gamma_real(a + 1.0)?.powi(2)
                    * gamma_real(b + 0.5)?.powi(2));
            let [chi, th, phi] = u;
            let outer = chi.sin().powi(m1 as i32) * gegenbauer((j - m1) as usize, a + 1.0, chi.cos())?;
            let inner = th.sin().powi(m2 as i32) * gegenbauer((m1 - m2) as usize, b + 0.5, th.cos())?;
            Ok(((i * phi.scale(b)).exp() * outer * inner).scale(nn.sqrt().recip()))
        }
        QuantumNumbers::Horospherical { l, nx, ky } => {
            let jj = l + nx;
            let [chi, x, y] = u;
            let em = (-(i * x)).exp();
            let h = hankel1_half(nx as i32, em.scale(ky))?;
            let xpart = (-(i * x.scale(0.5))).exp() * h;
            let c = ((l + nx + 1) as f64 * gamma_real((l + 2 * nx + 2) as f64)? / fact(l)).sqrt();
            let p =
                legendre_p(Complex64::new(jj as f64 + 0.5, 0.0), Complex64::new(-(nx as f64) - 0.5, 0.0), chi.cos())?;
            let plane = (i * y.scale(ky)).exp();
            Ok((plane * xpart * chi.sin().sqrt().recip() * p).scale(c / (2.0 * PI).sqrt() / 2f64.sqrt()))
        }
        QuantumNumbers::HoricyclicPolar { j, nu, k } => {
            let [x, rho, phi] = u;
            let em = (-(i * x)).exp();
            let h = hankel1_int(j + 1, em.scale(k))?;
            let bj = bessel_j(nu as f64, rho.scale(k))?;
            let ang = (i * phi.scale(nu as f64)).exp();
            Ok((ang * bj * em * h).scale(k.sqrt() / (2.0 * PI).sqrt() / 2f64.sqrt()))
        }
        QuantumNumbers::Parabolic { n_xi, n_eta, k } => {
            let jj = n_xi + n_eta;
            let w = k.abs();
            let [xi, eta, tau] = u;
            let alpha = -(jj as f64) - 1.0;
            let lx = laguerre(n_xi as usize, alpha, (xi * xi).scale(w))?;
            let ly = laguerre(n_eta as usize, alpha, (eta * eta).scale(w))?;
            let gauss = (-(xi * xi + eta * eta).scale(w / 2.0)).exp();
            let pw = (xi * eta).powi(-(jj as i32));
            Ok(((i * tau.scale(k)).exp() * pw * gauss * lx * ly).scale((w / (2.0 * PI)).sqrt()))
        }
    }
}

/// A validated eigenmode together with its energy.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenMode {
    pub system_id: u32,
    pub qn: QuantumNumbers,
    pub energy: f64,
}

impl EigenMode {
    pub fn new(system: u32, qn: QuantumNumbers) -> Result<Self> {
        supported(system)?;
        if qn.system() != system {
            return Err(Error::InvalidQuantumNumbers(format!("labels belong to system {}, not {system}", qn.system())));
        }
        qn.validate()?;
        Ok(EigenMode { system_id: system, qn, energy: energy(qn.j()) })
    }

    pub fn eval(&self, p: &CoordTriple) -> Result<Complex64> {
        if p.system != self.system_id {
            return Err(Error::InvalidParameter(format!(
                "point belongs to system {}, not {}",
                p.system, self.system_id
            )));
        }
        check_domain(p)?;
        eval_mode(&self.qn, p.u.map(|x| Complex64::new(x, 0.0)))
    }
}

impl ScalarField for EigenMode {
    fn eval(&self, u: [Jet3; 3]) -> Result<Jet3> {
        eval_mode(&self.qn, u)
    }
}

pub fn eigenfunction_eval(system: u32, qn: &QuantumNumbers, p: &CoordTriple) -> Result<Complex64> {
    EigenMode::new(system, *qn)?.eval(p)
}

/// Modes with J ≤ `j_max`, ordered by J then by the remaining labels.
///
/// Discrete systems (1, 3, 16; k = 1 for 16) list every valid label set.
/// Systems 2, 4 and 5 carry continuous labels; a fixed representative set is
/// used: (k_y, k_z) ∈ {(1, 0), (0.6, 0.8)}, k_y = 1 with every l + n_x = J,
/// and ν ∈ {0, 1, −2} with k = 1.
pub fn modes(system: u32, j_max: u32) -> Result<Vec<QuantumNumbers>> {
    supported(system)?;
    let mut out = Vec::new();
    for j in 0..=j_max {
        let ji = j as i32;
        match system {
            1 => {
                for m1 in -ji..=ji {
                    for m2 in -ji..=ji {
                        let q = QuantumNumbers::Cylindrical { j, m1, m2 };
                        if q.validate().is_ok() {
                            out.push(q);
                        }
                    }
                }
            }
            2 => {
                for (ky, kz) in [(1.0, 0.0), (0.6, 0.8)] {
                    out.push(QuantumNumbers::Horicyclic { j, ky, kz });
                }
            }
            3 => {
                for m1 in 0..=j {
                    for m2 in 0..=m1 {
                        out.push(QuantumNumbers::Spherical { j, m1, m2 });
                    }
                }
            }
            4 => {
                for nx in 0..=j {
                    out.push(QuantumNumbers::Horospherical { l: j - nx, nx, ky: 1.0 });
                }
            }
            5 => {
                for nu in [0, 1, -2] {
                    out.push(QuantumNumbers::HoricyclicPolar { j, nu, k: 1.0 });
                }
            }
            _ => {
                for n_xi in 0..=j {
                    out.push(QuantumNumbers::Parabolic { n_xi, n_eta: j - n_xi, k: 1.0 });
                }
            }
        }
    }
    Ok(out)
}

/// Largest deviation of the Gram matrix of `modes` from the identity
/// (systems 1 and 3). Angles with a Fourier factor are integrated exactly; the
/// remaining compact variables use Gauss–Legendre rules of order ≥ 4 J_max.
pub fn norm_check(system: u32, modes: &[QuantumNumbers]) -> Result<f64> {
    if system != 1 && system != 3 {
        return Err(Error::Capability { system, what: "normalization check" });
    }
    let list: Vec<EigenMode> = modes.iter().map(|q| EigenMode::new(system, *q)).collect::<Result<_>>()?;
    let j_max = list.iter().map(|m| m.qn.j()).max().unwrap_or(0) as usize;
    let order = (4 * j_max + 16).max(48);
    let (x, w) = gauss_legendre(order);
    // nodes mapped to (0, top) together with the measure weight
    let map = |top: f64| -> Vec<(f64, f64)> {
        x.iter().zip(&w).map(|(&xi, &wi)| (top / 2.0 * (xi + 1.0), top / 2.0 * wi)).collect()
    };
    let fourier = |q: &QuantumNumbers| match *q {
        QuantumNumbers::Cylindrical { m1, m2, .. } => (m1, m2),
        QuantumNumbers::Spherical { m2, .. } => (m2 as i32, 0),
        _ => (0, 0),
    };
    // values at the quadrature nodes with the Fourier angles set to zero
    let (nodes, weight): (Vec<[f64; 3]>, Vec<f64>) = if system == 1 {
        map(PI / 2.0).into_iter().map(|(t, wt)| ([t, 0.0, 0.0], wt * t.sin() * t.cos() * 4.0 * PI * PI)).unzip()
    } else {
        let pts = map(PI);
        pts.iter()
            .flat_map(|&(c, wc)| {
                pts.iter().map(move |&(t, wt)| ([c, t, 0.0], wc * wt * c.sin().powi(2) * t.sin() * 2.0 * PI))
            })
            .unzip()
    };
    let values: Vec<Vec<Complex64>> = list
        .iter()
        .map(|m| nodes.iter().map(|u| eval_mode(&m.qn, u.map(|v| Complex64::new(v, 0.0)))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for a in 0..list.len() {
        for b in a..list.len() {
            let target = if a == b { 1.0 } else { 0.0 };
            let entry = if fourier(&list[a].qn) != fourier(&list[b].qn) {
                Complex64::new(0.0, 0.0)
            } else {
                values[a].iter().zip(&values[b]).zip(&weight).map(|((va, vb), wt)| va.conj() * vb * wt).sum()
            };
            worst = worst.max((entry - target).norm());
        }
    }
    Ok(worst)
}
