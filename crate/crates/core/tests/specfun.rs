use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, LN_2, PI};

use csphere::specfun::theta::theta3_terms;
use csphere::specfun::{
    airy_ai, bessel_eval, bessel_j, gamma_complex, gamma_real, gegenbauer, hyp1f1, hyp2f1, jacobi, jacobi_elliptic,
    laguerre, legendre_p, legendre_q_half, theta3, BesselKind,
};
use csphere::{Cplx, Jet1};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

fn r(x: f64) -> Cplx {
    c(x, 0.0)
}

fn rel(a: Cplx, b: Cplx) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

/// Γ(z) from Stirling's series at z + 40, brought back with Γ(z+1) = zΓ(z).
fn gamma_oracle(z: Cplx) -> Cplx {
    let shift = 40;
    let w = z + shift as f64;
    let w2 = w * w;
    let series =
        1.0 / (12.0 * w) - 1.0 / (360.0 * w * w2) + 1.0 / (1260.0 * w * w2 * w2) - 1.0 / (1680.0 * w * w2 * w2 * w2);
    let ln_g = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series;
    let mut den = r(1.0);
    for k in 0..shift {
        den *= z + k as f64;
    }
    ln_g.exp() / den
}

/// Plain compensated power series Σ t_n with t_{n+1} = t_n · ratio(n).
fn kahan_series(ratio: impl Fn(usize) -> Cplx) -> Cplx {
    let (mut sum, mut comp, mut term) = (r(1.0), r(0.0), r(1.0));
    for n in 0..2000 {
        term *= ratio(n);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term.norm() < 1e-20 * sum.norm() {
            break;
        }
    }
    sum
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma_complex(r(1.0)).unwrap(), r(1.0));
    assert!(rel(gamma_complex(r(5.0)).unwrap(), r(24.0)) < 1e-15);
    let z = c(0.5, 2.0);
    let got = gamma_complex(z).unwrap();
    assert!((got - gamma_oracle(z)).norm() <= 1e-11, "{got} vs {}", gamma_oracle(z));
    assert!(gamma_complex(r(-2.0)).is_err());
    assert!(gamma_real(0.0).is_err());
}

#[test]
fn hyp2f1_examples() {
    let got: Cplx = hyp2f1(r(0.7), r(1.9), r(1.9), r(0.3)).unwrap();
    assert!(rel(got, r(0.7f64.powf(-0.7))) < 1e-13);

    let got: Cplx = hyp2f1(r(1.0), r(1.0), r(2.0), r(0.5)).unwrap();
    assert!(rel(got, r(2.0 * LN_2)) < 1e-13);

    // three terms: 1 − 1.6 + 0.512
    let got: Cplx = hyp2f1(r(-2.0), r(3.0), r(1.5), r(0.4)).unwrap();
    assert!((got - r(-0.088)).norm() < 1e-14, "{got}");
}

#[test]
fn hyp1f1_examples() {
    let got: Cplx = hyp1f1(r(0.6), r(0.6), r(1.0)).unwrap();
    assert!(rel(got, r(std::f64::consts::E)) < 1e-14);
    let got: Cplx = hyp1f1(r(-1.0), r(1.0), r(0.25)).unwrap();
    assert!((got - r(0.75)).norm() < 1e-15);

    let (a, b, z) = (0.3, 1.7, -2.0);
    let oracle = kahan_series(|n| r((a + n as f64) / ((b + n as f64) * (n as f64 + 1.0)) * z));
    let got: Cplx = hyp1f1(r(a), r(b), r(z)).unwrap();
    assert!((got - oracle).norm() <= 1e-11, "{got} vs {oracle}");
}

#[test]
fn orthogonal_polynomial_examples() {
    assert_eq!(gegenbauer(0, 1.0, 0.3f64).unwrap(), 1.0);
    assert!((gegenbauer(1, 1.0, 0.3f64).unwrap() - 0.6).abs() < 1e-15);
    assert!((jacobi(1, 0.0, 0.0, -0.2f64).unwrap() + 0.2).abs() < 1e-15);

    let x = 1.5;
    let via_1f1: Cplx = hyp1f1(r(-2.0), r(2.0), r(x)).unwrap();
    let l = laguerre(2, 1.0, x).unwrap();
    assert!((l - 3.0 * via_1f1.re).abs() <= 1e-12);
    assert!((l - (x * x - 6.0 * x + 6.0) / 2.0).abs() <= 1e-12);
}

#[test]
fn legendre_examples() {
    let nu = c(0.7, 0.2);
    let got: Cplx = legendre_p(nu, r(0.0), r(1.0 - 1e-12)).unwrap();
    assert!((got - r(1.0)).norm() < 1e-9);

    let th = FRAC_PI_3;
    let got: Cplx = legendre_p(r(0.5), r(-0.5), r(th.cos())).unwrap();
    let closed = (2.0 / (PI * th.sin())).sqrt() * th.sin();
    assert!((got - r(closed)).norm() < 1e-13);
    assert!((closed - 0.7425).abs() < 1e-4);

    // Ferrers P^μ_ν(x) = [(1+x)/(1−x)]^{μ/2} ₂F₁(−ν, ν+1; 1−μ; (1−x)/2) / Γ(1−μ)
    let (nu, mu, x) = (c(-0.5, 2.0), c(0.0, 1.0), 0.8f64.tanh());
    let z = (1.0 - x) / 2.0;
    let f = kahan_series(|n| {
        let n = n as f64;
        (-nu + n) * (nu + 1.0 + n) / ((r(1.0) - mu + n) * (n + 1.0)) * z
    });
    let oracle = r((1.0 + x) / (1.0 - x)).powc(mu / 2.0) * f / gamma_oracle(r(1.0) - mu);
    let got: Cplx = legendre_p(nu, mu, r(x)).unwrap();
    assert!((got - oracle).norm() <= 1e-9, "{got} vs {oracle}");
}

#[test]
fn legendre_q_half_examples() {
    let d = 1.0f64;
    let got: Cplx = legendre_q_half(r(0.0), r(d.cosh())).unwrap();
    let want = c(0.0, (PI / (2.0 * d.sinh())).sqrt() * (-0.5f64).exp());
    assert!((got - want).norm() < 1e-14);
    assert!((got.im - 0.7012).abs() < 1e-4);

    let d = 0.6f64;
    let got: Cplx = legendre_q_half(r(-0.5), r(d.cosh())).unwrap();
    assert!((got - c(0.0, (PI / (2.0 * d.sinh())).sqrt())).norm() < 1e-14);
    assert!(legendre_q_half(r(0.0), r(1.0)).is_err());
}

#[test]
fn bessel_examples() {
    let z = r(2.0);
    let closed = c(0.0, -1.0) * (2.0 / (PI * z)).sqrt() * (c(0.0, 1.0) * z).exp();
    let got = bessel_eval(BesselKind::H1HalfInteger, 0.5, z).unwrap();
    assert!((got - closed).norm() < 1e-15);
    assert!((got - c(0.5130, 0.2347)).norm() < 1e-4);

    assert_eq!(bessel_eval(BesselKind::JRealOrder, 0.0, r(0.0)).unwrap(), r(1.0));

    // K₀(1) = ∫₀^∞ e^{−cosh t} dt, trapezoid rule (spectrally accurate here)
    let h = 0.02;
    let oracle: f64 = h * (0.5 * (-1.0f64).exp() + (1..600).map(|n| (-(n as f64 * h).cosh()).exp()).sum::<f64>());
    let got = bessel_eval(BesselKind::KImagOrder, 0.0, r(1.0)).unwrap();
    assert!((got.re - oracle).abs() <= 1e-12, "{} vs {oracle}", got.re);
    assert!((oracle - 0.42102443824070834).abs() < 1e-14);
}

#[test]
fn airy_examples() {
    let c1 = 0.355_028_053_887_817_2;
    let c2 = 0.258_819_403_792_806_8;
    let maclaurin = |x: f64| {
        let (mut f, mut g) = (0.0, 0.0);
        let (mut tf, mut tg) = (1.0, x);
        for k in 0..60 {
            f += tf;
            g += tg;
            let k = k as f64;
            tf *= x * x * x / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
            tg *= x * x * x / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        }
        c1 * f - c2 * g
    };
    assert!((airy_ai(0.0f64).unwrap() - 0.3550280539).abs() < 1e-10);
    let got = airy_ai(1.0f64).unwrap();
    assert!((got - maclaurin(1.0)).abs() < 1e-12);
    assert!((got - 0.1352924163).abs() < 1e-10);

    for t in [-2.0, 0.0, 2.0] {
        let a = airy_ai(Jet1::variable(r(t), 0)).unwrap();
        assert!((a.dd(0, 0) - t * a.v).norm() <= 1e-8);
    }
}

#[test]
fn elliptic_examples() {
    let (sn, cn, dn) = jacobi_elliptic(0.7f64, 0.0).unwrap();
    assert!((sn - 0.6442176872).abs() < 1e-10 && (cn - 0.7f64.cos()).abs() < 1e-15 && dn == 1.0);
    let (sn, _, _) = jacobi_elliptic(0.7f64, 1e-9).unwrap();
    assert!((sn - 0.7f64.sin()).abs() < 1e-12);
    for k in [0.1, 0.5, 0.99] {
        assert_eq!(jacobi_elliptic(0.0f64, k).unwrap(), (0.0, 1.0, 1.0));
    }

    // RK4 on sn′ = cn dn, cn′ = −sn dn, dn′ = −k² sn cn
    let k = 0.5f64.sqrt();
    let rhs = |y: [f64; 3]| [y[1] * y[2], -y[0] * y[2], -k * k * y[0] * y[1]];
    let (steps, u) = (2400, 1.2);
    let h = u / steps as f64;
    let mut y = [0.0, 1.0, 1.0];
    for _ in 0..steps {
        let k1 = rhs(y);
        let k2 = rhs([0, 1, 2].map(|i| y[i] + 0.5 * h * k1[i]));
        let k3 = rhs([0, 1, 2].map(|i| y[i] + 0.5 * h * k2[i]));
        let k4 = rhs([0, 1, 2].map(|i| y[i] + h * k3[i]));
        y = [0, 1, 2].map(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
    }
    let (sn, cn, dn) = jacobi_elliptic(u, k).unwrap();
    assert!((sn - y[0]).abs() <= 1e-10 && (cn - y[1]).abs() <= 1e-10 && (dn - y[2]).abs() <= 1e-10);
    assert!(jacobi_elliptic(0.3f64, 1.0).is_err());
}

#[test]
fn theta_examples() {
    let i = c(0.0, 1.0);
    let direct: f64 = 1.0 + 2.0 * (1..10).map(|n| (-PI * (n * n) as f64).exp()).sum::<f64>();
    let got: Cplx = theta3(r(0.0), i).unwrap();
    assert!((got - r(direct)).norm() < 1e-15);
    assert!((got.re - 1.0864348112).abs() < 1e-10);

    let got: Cplx = theta3(r(FRAC_PI_2), i).unwrap();
    let want = 1.0 - 2.0 * (-PI).exp() + 2.0 * (-4.0 * PI).exp() - 2.0 * (-9.0 * PI).exp();
    assert!((got - r(want)).norm() < 1e-15);
    assert!((got.re - 0.913_579_138_156_117).abs() < 1e-15);

    let a: Cplx = theta3(r(0.4), i).unwrap();
    let b: Cplx = theta3(r(-0.4), i).unwrap();
    assert!((a - b).norm() <= 1e-15);
    assert!(theta3(r(0.1), c(0.3, 0.0)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_recurrence(re in -4.5f64..12.0, im in -10.0f64..10.0) {
        prop_assume!(im.abs() > 0.05 || (re - re.round()).abs() > 0.05);
        let z = c(re, im);
        let g = gamma_complex(z).unwrap();
        let g1 = gamma_complex(z + 1.0).unwrap();
        prop_assert!(rel(g1, z * g) <= 1e-12, "z = {z}: {g1} vs {}", z * g);
    }

    #[test]
    fn elliptic_identities(u in -10.0f64..10.0, k in 0.0f64..0.999) {
        let (sn, cn, dn) = jacobi_elliptic(u, k).unwrap();
        prop_assert!((sn * sn + cn * cn - 1.0).abs() <= 1e-12);
        prop_assert!((dn * dn - (1.0 - k * k * sn * sn)).abs() <= 1e-12);
    }

    #[test]
    fn elliptic_derivative(u in -5.0f64..5.0, k in 0.05f64..0.95) {
        let (sn, cn, dn) = jacobi_elliptic(Jet1::variable(r(u), 0), k).unwrap();
        prop_assert!((sn.d(0) - cn.v * dn.v).norm() <= 1e-8);
    }

    #[test]
    fn theta_is_even_and_tail_is_negligible(v in -3.0f64..3.0, re in -0.5f64..0.5, im in 0.3f64..2.0) {
        let tau = c(re, im);
        let a: Cplx = theta3(r(v), tau).unwrap();
        let b: Cplx = theta3(r(-v), tau).unwrap();
        prop_assert!((a - b).norm() <= 1e-14 * a.norm().max(1.0));
        let base: Cplx = theta3_terms(r(v), tau, 0).unwrap();
        let more: Cplx = theta3_terms(r(v), tau, 5).unwrap();
        prop_assert!((base - more).norm() < 1e-15 * base.norm().max(1.0));
    }

    #[test]
    fn bessel_j_solves_bessel_equation(nu in 0.0f64..8.0, x in 0.2f64..30.0) {
        let y = bessel_j(nu, Jet1::variable(r(x), 0)).unwrap();
        let res = x * x * y.dd(0, 0) + x * y.d(0) + (x * x - nu * nu) * y.v;
        let scale = (x * x * y.v.norm()).max(x * y.d(0).norm()).max(1e-3);
        prop_assert!(res.norm() <= 1e-8 * scale.max(1.0), "res {res}");
    }

    #[test]
    fn ferrers_functions_solve_legendre_equation(nu_re in -1.0f64..3.0, nu_im in -2.0f64..2.0,
                                                 mu in -1.5f64..1.5, x in -0.8f64..0.95) {
        let nu = c(nu_re, nu_im);
        let y: Jet1 = legendre_p(nu, r(mu), Jet1::variable(r(x), 0)).unwrap();
        let w = 1.0 - x * x;
        let res = w * y.dd(0, 0) - 2.0 * x * y.d(0) + (nu * (nu + 1.0) - mu * mu / w) * y.v;
        let scale = y.v.norm().max(y.d(0).norm()).max(y.dd(0, 0).norm()).max(1.0);
        prop_assert!(res.norm() <= 1e-8 * scale, "res {res}");
    }

    #[test]
    fn gegenbauer_three_term_recurrence(n in 1usize..30, lambda in 0.2f64..4.0, x in -1.0f64..1.0) {
        let (cm, c0, cp) = (gegenbauer(n - 1, lambda, x).unwrap(), gegenbauer(n, lambda, x).unwrap(),
                            gegenbauer(n + 1, lambda, x).unwrap());
        let nf = n as f64;
        let res = (nf + 1.0) * cp - 2.0 * (nf + lambda) * x * c0 + (nf + 2.0 * lambda - 1.0) * cm;
        let scale = cp.abs().max(c0.abs()).max(cm.abs()).max(1.0) * (nf + 2.0 * lambda);
        prop_assert!(res.abs() <= 1e-12 * scale);
    }

    #[test]
    fn half_integer_hankel_matches_bessel_j(n in 0i32..6, x in 0.5f64..20.0) {
        let nu = n as f64 + 0.5;
        let h = bessel_eval(BesselKind::H1HalfInteger, nu, r(x)).unwrap();
        let j = bessel_j(nu, x).unwrap();
        prop_assert!((h.re - j).abs() <= 1e-10 * j.abs().max(1.0));
    }
}
