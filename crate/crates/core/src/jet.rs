//! Second-order forward-mode dual numbers ("jets").
//!
//! A `Jet<T, N>` carries a value, its gradient with respect to `N` seed
//! variables and the full Hessian. Arithmetic and elementary functions
//! propagate all three exactly, so derivatives are correct to roundoff.

use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::scalar::{ComplexScalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<T, const N: usize> {
    pub v: T,
    pub g: [T; N],
    pub h: [[T; N]; N],
}

impl<T: Scalar, const N: usize> Jet<T, N> {
    pub fn constant(v: T) -> Self {
        Jet { v, g: [T::zero(); N], h: [[T::zero(); N]; N] }
    }

    /// Seed variable number `k` at value `v`.
    pub fn variable(v: T, k: usize) -> Self {
        let mut j = Self::constant(v);
        j.g[k] = T::one();
        j
    }

    /// Seeds all `N` variables at once.
    pub fn seed(vals: [T; N]) -> [Self; N] {
        let mut out = [Self::constant(T::zero()); N];
        for (k, v) in vals.into_iter().enumerate() {
            out[k] = Self::variable(v, k);
        }
        out
    }

    pub fn value(&self) -> T {
        self.v
    }
    pub fn d(&self, a: usize) -> T {
        self.g[a]
    }
    pub fn dd(&self, a: usize, b: usize) -> T {
        self.h[a][b]
    }

    /// Applies a scalar function given its value and first two derivatives at `self.v`.
    pub fn chain(self, f0: T, f1: T, f2: T) -> Self {
        let mut out = Self::constant(f0);
        for a in 0..N {
            out.g[a] = f1 * self.g[a];
            for b in 0..N {
                out.h[a][b] = f1 * self.h[a][b] + f2 * self.g[a] * self.g[b];
            }
        }
        out
    }

    fn map(self, f: impl Fn(T) -> T) -> Self {
        let mut out = self;
        out.v = f(self.v);
        for a in 0..N {
            out.g[a] = f(self.g[a]);
            for b in 0..N {
                out.h[a][b] = f(self.h[a][b]);
            }
        }
        out
    }
}

impl<T: Scalar, const N: usize> Add for Jet<T, N> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self.v += o.v;
        for a in 0..N {
            self.g[a] += o.g[a];
            for b in 0..N {
                self.h[a][b] += o.h[a][b];
            }
        }
        self
    }
}

impl<T: Scalar, const N: usize> Sub for Jet<T, N> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self.v -= o.v;
        for a in 0..N {
            self.g[a] -= o.g[a];
            for b in 0..N {
                self.h[a][b] -= o.h[a][b];
            }
        }
        self
    }
}

impl<T: Scalar, const N: usize> Mul for Jet<T, N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::constant(self.v * o.v);
        for a in 0..N {
            out.g[a] = self.v * o.g[a] + o.v * self.g[a];
            for b in 0..N {
                out.h[a][b] = self.v * o.h[a][b] + o.v * self.h[a][b] + self.g[a] * o.g[b] + o.g[a] * self.g[b];
            }
        }
        out
    }
}

impl<T: Scalar, const N: usize> Div for Jet<T, N> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * Scalar::recip(o)
    }
}

impl<T: Scalar, const N: usize> Neg for Jet<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x)
    }
}

macro_rules! assign_op {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<T: Scalar, const N: usize> $tr for Jet<T, N> {
            fn $m(&mut self, o: Self) {
                *self = *self $op o;
            }
        }
    };
}
assign_op!(AddAssign, add_assign, +);
assign_op!(SubAssign, sub_assign, -);
assign_op!(MulAssign, mul_assign, *);
assign_op!(DivAssign, div_assign, /);

impl<T: Scalar, const N: usize> Scalar for Jet<T, N> {
    type Real = T::Real;

    fn from_real(r: T::Real) -> Self {
        Self::constant(T::from_real(r))
    }
    fn value_re(&self) -> T::Real {
        self.v.value_re()
    }
    fn value_abs(&self) -> T::Real {
        self.v.value_abs()
    }
    fn magnitude(&self) -> T::Real {
        let mut m = self.v.magnitude();
        for a in 0..N {
            m = m.max(self.g[a].magnitude());
            for b in 0..N {
                m = m.max(self.h[a][b].magnitude());
            }
        }
        m
    }
    fn is_finite(&self) -> bool {
        self.v.is_finite() && self.g.iter().all(|x| x.is_finite()) && self.h.iter().flatten().all(|x| x.is_finite())
    }
    fn scale(self, r: T::Real) -> Self {
        self.map(|x| x.scale(r))
    }
    fn add_real(mut self, r: T::Real) -> Self {
        self.v = self.v.add_real(r);
        self
    }

    fn exp(self) -> Self {
        let e = self.v.exp();
        self.chain(e, e, e)
    }
    fn ln(self) -> Self {
        let r = self.v.recip();
        self.chain(self.v.ln(), r, -(r * r))
    }
    fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        let d1 = (s.scale(lit2())).recip();
        self.chain(s, d1, -(d1 / (self.v.scale(lit2()))))
    }
    fn sin(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.chain(s, c, -s)
    }
    fn cos(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.chain(c, -s, -c)
    }
    fn tan(self) -> Self {
        let t = self.v.tan();
        let d1 = T::one() + t * t;
        self.chain(t, d1, (t * d1).scale(lit2()))
    }
    fn sinh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.chain(s, c, s)
    }
    fn cosh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.chain(c, s, c)
    }
    fn tanh(self) -> Self {
        let t = self.v.tanh();
        let d1 = T::one() - t * t;
        self.chain(t, d1, -(t * d1).scale(lit2()))
    }
    fn asin(self) -> Self {
        let w = T::one() - self.v * self.v;
        let r = w.sqrt().recip();
        self.chain(self.v.asin(), r, self.v * r * r * r)
    }
    fn recip(self) -> Self {
        let r = self.v.recip();
        self.chain(r, -(r * r), (r * r * r).scale(lit2()))
    }
    fn powr(self, p: T::Real) -> Self {
        let one = T::Real::one();
        let f0 = self.v.powr(p);
        let f1 = self.v.powr(p - one).scale(p);
        let f2 = self.v.powr(p - one - one).scale(p * (p - one));
        self.chain(f0, f1, f2)
    }
}

#[inline]
fn lit2<F: Float>() -> F {
    F::one() + F::one()
}

impl<T: ComplexScalar, const N: usize> ComplexScalar for Jet<T, N> {
    fn from_complex(c: Complex<T::Real>) -> Self {
        Self::constant(T::from_complex(c))
    }
    fn value_c(&self) -> Complex<T::Real> {
        self.v.value_c()
    }
    fn mul_c(self, c: Complex<T::Real>) -> Self {
        self.map(|x| x.mul_c(c))
    }
    fn powc(self, e: Complex<T::Real>) -> Self {
        if self.v.value_c().is_zero() {
            return (self.ln().mul_c(e)).exp();
        }
        let one = Complex::new(T::Real::one(), T::Real::zero());
        let f0 = self.v.powc(e);
        let f1 = self.v.powc(e - one).mul_c(e);
        let f2 = self.v.powc(e - one - one).mul_c(e * (e - one));
        self.chain(f0, f1, f2)
    }
}
