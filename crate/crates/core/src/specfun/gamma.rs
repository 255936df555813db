//! Gamma function and friends.
//!
//! Lanczos approximation (g = 607/128, 15 terms) for Re z ≥ 1/2, reflection
//! otherwise.

use num_complex::Complex;
use num_traits::{Float, FloatConst, Zero};

use crate::error::{Error, Result};
use crate::scalar::{lit, RealField};

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn is_pole<F: RealField>(z: Complex<F>) -> bool {
    z.im == F::zero() && z.re <= F::zero() && z.re == z.re.round()
}

/// ln Γ(z) for Re z ≥ 1/2 (log of the Lanczos form; imaginary part is not
/// reduced modulo 2π).
fn ln_gamma_right<F: RealField>(z: Complex<F>) -> Complex<F> {
    let zm = z - F::one();
    let mut a = Complex::new(lit::<F>(LANCZOS[0]), F::zero());
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        a += Complex::new(lit::<F>(*c), F::zero()) / (zm + lit::<F>(k as f64));
    }
    let t = zm + lit::<F>(LANCZOS_G + 0.5);
    let half_ln_2pi = lit::<F>(0.918_938_533_204_672_7);
    (zm + lit::<F>(0.5)) * t.ln() - t + a.ln() + half_ln_2pi
}

/// Γ(z) for complex z.
pub fn gamma_complex<F: RealField>(z: Complex<F>) -> Result<Complex<F>> {
    if is_pole(z) {
        return Err(Error::Pole("gamma"));
    }
    if z.im == F::zero() {
        return gamma_real(z.re).map(|g| Complex::new(g, F::zero()));
    }
    if z.re >= lit(0.5) {
        Ok(ln_gamma_right(z).exp())
    } else {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let pi = F::PI();
        let s = (z * pi).sin();
        let g = ln_gamma_right(Complex::new(F::one(), F::zero()) - z).exp();
        Ok(Complex::new(pi, F::zero()) / (s * g))
    }
}

/// Γ(x) for real x.
pub fn gamma_real<F: RealField>(x: F) -> Result<F> {
    if x <= F::zero() && x == x.round() {
        return Err(Error::Pole("gamma"));
    }
    if x == x.round() && x <= lit(171.0) {
        // exact factorial for small integers
        let n = x.to_usize().unwrap_or(1) - 1;
        return Ok(factorial::<F>(n));
    }
    if x >= lit(0.5) {
        Ok(ln_gamma_right(Complex::new(x, F::zero())).re.exp())
    } else {
        let pi = F::PI();
        let g = ln_gamma_right(Complex::new(F::one() - x, F::zero())).re.exp();
        Ok(pi / ((pi * x).sin() * g))
    }
}

/// 1/Γ(z), entire: returns 0 at the poles of Γ.
pub fn rgamma<F: RealField>(z: Complex<F>) -> Complex<F> {
    if is_pole(z) {
        return Complex::zero();
    }
    Complex::new(F::one(), F::zero()) / gamma_complex(z).expect("non-pole")
}

/// n! as a float (exact product up to 170!).
pub fn factorial<F: Float>(n: usize) -> F {
    let mut acc = F::one();
    for k in 2..=n {
        acc = acc * F::from(k).unwrap();
    }
    acc
}

/// Pochhammer symbol (a)_n.
pub fn poch<F: RealField>(a: Complex<F>, n: usize) -> Complex<F> {
    let mut acc = Complex::new(F::one(), F::zero());
    for k in 0..n {
        acc *= a + lit::<F>(k as f64);
    }
    acc
}

/// ψ(n+1) = H_n − γ for nonnegative integer n.
pub fn digamma_int<F: Float + FloatConst>(n: usize) -> F {
    let mut h = F::zero();
    for k in 1..=n {
        h = h + F::one() / F::from(k).unwrap();
    }
    h - lit::<F>(EULER_GAMMA)
}

pub fn euler_gamma<F: Float>() -> F {
    lit(EULER_GAMMA)
}
