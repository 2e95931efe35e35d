use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::{exact_div, make_primitive, poly_gcd};
use super::{ArithError, LaurentPoly, Rational};

/// An element of `Q(p, q)` in canonical form.
///
/// Invariants: numerator and denominator are polynomials (no negative
/// exponents) with no common factor; the denominator has coprime integer
/// coefficients and a positive leading coefficient under graded-lex order
/// with `p` before `q`. Zero is `0 / 1`. Two equal functions therefore have
/// identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Field operation selector for [`rf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Brings `num / den` into canonical form.
pub fn rf_normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc, ArithError> {
    if den.is_zero() {
        return Err(ArithError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    // clear Laurent exponents from both members with one monomial
    let (np, nq) = num.min_exponents();
    let (dp, dq) = den.min_exponents();
    let shift = (-np.min(dp).min(0), -nq.min(dq).min(0));
    let (mut num, mut den) =
        if shift != (0, 0) { (num.shift(shift.0, shift.1), den.shift(shift.0, shift.1)) } else { (num, den) };

    if !den.is_constant() {
        let g = poly_gcd(&num, &den);
        if !g.is_one() {
            num = exact_div(&num, &g).expect("gcd divides numerator");
            den = exact_div(&den, &g).expect("gcd divides denominator");
        }
    }
    let (den, factor) = make_primitive(&den);
    let num = num.scale(&factor);
    Ok(RatFunc { num, den })
}

/// `a / b` for a divisor `b` known to divide `a`.
fn divide(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if b.is_one() {
        return a.clone();
    }
    exact_div(a, b).expect("gcd divides")
}

/// Applies a field operation; division by zero is an error.
pub fn rf_arith(op: ArithOp, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, ArithError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl RatFunc {
    /// Canonical form of `num / den` for coprime polynomials, `den != 0`.
    fn coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (den, factor) = make_primitive(&den);
        Self { num: num.scale(&factor), den }
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::int(n))
    }

    /// `c * p^p_exp * q^q_exp`.
    pub fn monomial(c: Rational, p_exp: i32, q_exp: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(c, p_exp, q_exp))
    }

    pub fn p() -> Self {
        Self::from_laurent(LaurentPoly::p())
    }

    pub fn q() -> Self {
        Self::from_laurent(LaurentPoly::q())
    }

    pub fn from_laurent(f: LaurentPoly) -> Self {
        rf_normalize(f, LaurentPoly::one()).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if `p` does not occur.
    pub fn is_free_of_p(&self) -> bool {
        self.num.is_free_of_p() && self.den.is_free_of_p()
    }

    /// The constant value, if this function is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coefficient(0, 0))
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        rf_normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        rf_normalize(&self.num * &other.den, &self.den * &other.num)
    }

    /// `self^e` for any integer exponent; negative powers of zero fail.
    pub fn pow(&self, e: i32) -> Result<Self, ArithError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at `(p0, q0)`. Fails with [`ArithError::Pole`] when the reduced
    /// denominator vanishes there.
    pub fn eval(&self, p0: &Rational, q0: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(p0, q0)?;
        if d.is_zero() {
            return Err(ArithError::Pole);
        }
        Ok(self.num.eval(p0, q0)? / d)
    }

    /// Substitutes `p = p0`, keeping `q` symbolic.
    pub fn specialize_p(&self, p0: &Rational) -> Result<Self, ArithError> {
        let den = self.den.subs_p(p0)?;
        if den.is_zero() {
            return Err(ArithError::Pole);
        }
        rf_normalize(self.num.subs_p(p0)?, den)
    }

    /// Substitutes `q = q0`, keeping `p` symbolic.
    pub fn specialize_q(&self, q0: &Rational) -> Result<Self, ArithError> {
        let den = self.den.subs_q(q0)?;
        if den.is_zero() {
            return Err(ArithError::Pole);
        }
        rf_normalize(self.num.subs_q(q0)?, den)
    }
}

/// Evaluates `f` at `(p0, q0)`.
pub fn rf_eval(f: &RatFunc, p0: &Rational, q0: &Rational) -> Result<Rational, ArithError> {
    f.eval(p0, q0)
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if rhs.den.is_one() {
            return RatFunc::coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        // a/(g b') + c/(g d') = (a d' + c b') / (g b' d'), where only g can
        // share a factor with the new numerator
        let g = poly_gcd(&self.den, &rhs.den);
        let b1 = divide(&self.den, &g);
        let d1 = divide(&rhs.den, &g);
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let h = poly_gcd(&t, &g);
        RatFunc::coprime(divide(&t, &h), &(&divide(&g, &h) * &b1) * &d1)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            // product of Laurent polynomials stays canonical after clearing
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        // cross cancellation suffices since both factors are reduced
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let num = &divide(&self.num, &g1) * &divide(&rhs.num, &g2);
        RatFunc::coprime(num, &divide(&self.den, &g2) * &divide(&rhs.den, &g1))
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}
