//! Exact arithmetic: big rationals, bivariate Laurent polynomials in `p` and
//! `q`, and the field of rational functions built from them.
//!
//! Every value produced here is exact. Rational functions are kept in a
//! canonical form (see [`RatFunc`]) so that structural equality is field
//! equality and evaluation at `p = q = 1` never hits a removable pole.

mod gcd;
mod laurent;
mod ratfunc;
mod text;

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use gcd::poly_gcd;
pub use laurent::LaurentPoly;
pub use ratfunc::{rf_arith, rf_eval, rf_normalize, ArithOp, RatFunc};
pub use text::{rf_format, rf_parse};

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: alloc::string::String },
}

/// Shorthand for the rational `num / den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The rational with integer value `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for a possibly negative exponent. `base` must be nonzero when
/// `exp < 0`.
pub(crate) fn rational_pow(base: &Rational, exp: i32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// The two Hecke parameters. Short-root generators deform with `p`, long-root
/// generators with `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parameter {
    P,
    Q,
}

/// Coefficient ring for representation matrices.
///
/// Implemented by [`Rational`] (group algebras) and [`RatFunc`] (Hecke
/// algebras). `quadratic_coefficient` is the `x - x^{-1}` appearing in the
/// quadratic relation `T^2 = (x - x^{-1}) T + 1`; it is zero for groups.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn quadratic_coefficient(param: Parameter) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
}

impl Scalar for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn quadratic_coefficient(_param: Parameter) -> Self {
        Zero::zero()
    }
}

impl Scalar for RatFunc {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn quadratic_coefficient(param: Parameter) -> Self {
        let x = match param {
            Parameter::P => LaurentPoly::monomial(int(1), 1, 0) - LaurentPoly::monomial(int(1), -1, 0),
            Parameter::Q => LaurentPoly::monomial(int(1), 0, 1) - LaurentPoly::monomial(int(1), 0, -1),
        };
        RatFunc::from_laurent(x)
    }
}

/// Integer content of a set of rational coefficients: `gcd(numerators) /
/// lcm(denominators)`, positive. Dividing by it yields coprime integers.
pub(crate) fn rational_content<'a, I: IntoIterator<Item = &'a Rational>>(coeffs: I) -> Rational {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for c in coeffs {
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        return Rational::one();
    }
    Rational::new(g.abs(), l)
}
