//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! Algorithms are written once against [`Scalar`] (real-or-complex field with
//! the elementary functions) or [`ComplexScalar`] (adds complex constants).
//! Plain floats, `Complex<F>` and [`Jet`](crate::jet::Jet) all implement them,
//! so the same chart or special-function code yields values and exact
//! derivatives.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign, One, Zero};

/// Real floating type underlying every scalar.
pub trait RealField: Float + FloatConst + NumAssign + Debug + Default + Send + Sync + 'static {}
impl RealField for f32 {}
impl RealField for f64 {}

/// Converts an `f64` literal into `F`.
#[inline]
pub fn lit<F: Float>(x: f64) -> F {
    F::from(x).expect("literal representable in target float")
}

pub trait Scalar:
    Copy
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    type Real: RealField;

    fn from_real(r: Self::Real) -> Self;

    fn from_f64(x: f64) -> Self {
        Self::from_real(lit(x))
    }
    fn zero() -> Self {
        Self::from_real(Self::Real::zero())
    }
    fn one() -> Self {
        Self::from_real(Self::Real::one())
    }

    /// Real part of the (undifferentiated) value.
    fn value_re(&self) -> Self::Real;
    /// Modulus of the (undifferentiated) value.
    fn value_abs(&self) -> Self::Real;
    /// Largest modulus over all stored components; used for series termination.
    fn magnitude(&self) -> Self::Real;
    fn is_finite(&self) -> bool;

    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }
    fn add_real(self, r: Self::Real) -> Self {
        self + Self::from_real(r)
    }

    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self {
        self.sin() / self.cos()
    }
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn tanh(self) -> Self {
        self.sinh() / self.cosh()
    }
    fn asin(self) -> Self;
    fn recip(self) -> Self {
        Self::one() / self
    }
    /// `self^r` for real `r` (principal branch for complex values).
    fn powr(self, r: Self::Real) -> Self;

    fn powi(self, n: i32) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut acc = Self::one();
        let mut base = self;
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }
    fn square(self) -> Self {
        self * self
    }
}

pub trait ComplexScalar: Scalar {
    fn from_complex(c: Complex<Self::Real>) -> Self;
    fn value_c(&self) -> Complex<Self::Real>;

    fn i() -> Self {
        Self::from_complex(Complex::new(Self::Real::zero(), Self::Real::one()))
    }
    fn mul_c(self, c: Complex<Self::Real>) -> Self {
        self * Self::from_complex(c)
    }
    fn add_c(self, c: Complex<Self::Real>) -> Self {
        self + Self::from_complex(c)
    }
    /// `self^e` for complex `e`, principal branch.
    fn powc(self, e: Complex<Self::Real>) -> Self {
        (self.ln().mul_c(e)).exp()
    }
}

macro_rules! real_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            #[inline]
            fn from_real(r: $t) -> Self {
                r
            }
            #[inline]
            fn value_re(&self) -> $t {
                *self
            }
            #[inline]
            fn value_abs(&self) -> $t {
                Float::abs(*self)
            }
            #[inline]
            fn magnitude(&self) -> $t {
                Float::abs(*self)
            }
            fn is_finite(&self) -> bool {
                Float::is_finite(*self)
            }
            fn exp(self) -> Self {
                Float::exp(self)
            }
            fn ln(self) -> Self {
                Float::ln(self)
            }
            fn sqrt(self) -> Self {
                Float::sqrt(self)
            }
            fn sin(self) -> Self {
                Float::sin(self)
            }
            fn cos(self) -> Self {
                Float::cos(self)
            }
            fn tan(self) -> Self {
                Float::tan(self)
            }
            fn sinh(self) -> Self {
                Float::sinh(self)
            }
            fn cosh(self) -> Self {
                Float::cosh(self)
            }
            fn tanh(self) -> Self {
                Float::tanh(self)
            }
            fn asin(self) -> Self {
                Float::asin(self)
            }
            fn powr(self, r: $t) -> Self {
                Float::powf(self, r)
            }
            fn powi(self, n: i32) -> Self {
                Float::powi(self, n)
            }
        }
    };
}

real_scalar!(f32);
real_scalar!(f64);

impl<F: RealField> Scalar for Complex<F> {
    type Real = F;
    #[inline]
    fn from_real(r: F) -> Self {
        Complex::new(r, F::zero())
    }
    #[inline]
    fn value_re(&self) -> F {
        self.re
    }
    #[inline]
    fn value_abs(&self) -> F {
        self.norm()
    }
    #[inline]
    fn magnitude(&self) -> F {
        self.norm()
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn exp(self) -> Self {
        Complex::exp(self)
    }
    fn ln(self) -> Self {
        Complex::ln(self)
    }
    fn sqrt(self) -> Self {
        Complex::sqrt(self)
    }
    fn sin(self) -> Self {
        Complex::sin(self)
    }
    fn cos(self) -> Self {
        Complex::cos(self)
    }
    fn tan(self) -> Self {
        Complex::tan(self)
    }
    fn sinh(self) -> Self {
        Complex::sinh(self)
    }
    fn cosh(self) -> Self {
        Complex::cosh(self)
    }
    fn tanh(self) -> Self {
        Complex::tanh(self)
    }
    fn asin(self) -> Self {
        Complex::asin(self)
    }
    fn powr(self, r: F) -> Self {
        if self.re == F::zero() && self.im == F::zero() {
            return if r == F::zero() { <Self as Scalar>::one() } else { <Self as Scalar>::zero() };
        }
        Complex::powf(self, r)
    }
    fn powi(self, n: i32) -> Self {
        Complex::powi(&self, n)
    }
}

impl<F: RealField> ComplexScalar for Complex<F> {
    #[inline]
    fn from_complex(c: Complex<F>) -> Self {
        c
    }
    #[inline]
    fn value_c(&self) -> Complex<F> {
        *self
    }
    fn powc(self, e: Complex<F>) -> Self {
        if self.re == F::zero() && self.im == F::zero() {
            return if e.re == F::zero() && e.im == F::zero() {
                <Self as Scalar>::one()
            } else {
                <Self as Scalar>::zero()
            };
        }
        Complex::powc(self, e)
    }
}
