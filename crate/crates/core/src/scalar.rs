//! Scalar rings used by the sparse linear algebra.
//!
//! Three instances: exact rationals (the default everywhere), Gaussian
//! rationals for the complex spinor matrices, and a tolerance-compared `f64`
//! for the exploratory float backend.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Commutative ring operations needed by [`crate::sparse`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..v.unsigned_abs() {
            acc = acc.add(&one);
        }
        if v < 0 {
            acc.neg()
        } else {
            acc
        }
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

/// Shorthand for an integer-valued rational.
pub fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        q(v)
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian { re, im: Zero::zero() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian { re: q(re), im: q(im) }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Gaussian { re: &self.re * s, im: &self.im * s }
    }

    /// Whether the canonical sign rule would flip this value: real part
    /// negative, or real part zero and imaginary part negative.
    pub fn is_sign_negative(&self) -> bool {
        self.re.is_negative() || (Zero::is_zero(&self.re) && self.im.is_negative())
    }
}

impl Ring for Gaussian {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        Gaussian { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gaussian { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn from_i64(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        Gaussian { re: &self.re / &n, im: -&self.im / &n }
    }
}

impl fmt::Display for Gaussian {
    /// `p/q+r/s*i`, the bit-exact text form used in reports.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", self.re, sign, self.im.abs())
    }
}

/// Double-precision value compared against a fixed absolute tolerance.
///
/// Rows fed to the float eliminator are scaled to unit max-norm first, so the
/// tolerance acts as a relative rank threshold.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Approx(pub f64);

impl Approx {
    pub const TOLERANCE: f64 = 1e-9;

    pub fn abs(self) -> f64 {
        if self.0 < 0.0 {
            -self.0
        } else {
            self.0
        }
    }
}

impl Ring for Approx {
    fn zero() -> Self {
        Approx(0.0)
    }
    fn one() -> Self {
        Approx(1.0)
    }
    fn is_zero(&self) -> bool {
        self.abs() <= Self::TOLERANCE
    }
    fn add(&self, rhs: &Self) -> Self {
        Approx(self.0 + rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Approx(self.0 - rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Approx(self.0 * rhs.0)
    }
    fn neg(&self) -> Self {
        Approx(-self.0)
    }
    fn from_i64(v: i64) -> Self {
        Approx(v as f64)
    }
}

impl Field for Approx {
    fn inv(&self) -> Self {
        Approx(1.0 / self.0)
    }
}
