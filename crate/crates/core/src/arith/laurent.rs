use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rational_pow, ArithError, Rational};

/// A Laurent polynomial in `p` and `q` with rational coefficients.
///
/// Terms are keyed by `(p exponent, q exponent)`. No stored coefficient is
/// zero, so the zero polynomial has no terms and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), Rational>,
}

/// Graded-lexicographic comparison of exponent pairs with `p` before `q`.
pub(crate) fn grlex(a: &(i32, i32), b: &(i32, i32)) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, p_exp: i32, q_exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p_exp, q_exp), c);
        }
        Self { terms }
    }

    /// The variable `p`.
    pub fn p() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds a polynomial from `(p exp, q exp, coefficient)` triples, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, exp: (i32, i32), c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if the polynomial is a single constant term (or zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == (0, 0))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, p_exp: i32, q_exp: i32) -> Rational {
        self.terms.get(&(p_exp, q_exp)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Smallest `p` and `q` exponents among the terms, or `(0, 0)` for zero.
    pub fn min_exponents(&self) -> (i32, i32) {
        let mut it = self.terms.keys();
        let Some(&(mut a, mut b)) = it.next() else {
            return (0, 0);
        };
        for &(x, y) in it {
            a = a.min(x);
            b = b.min(y);
        }
        (a, b)
    }

    pub fn has_negative_exponents(&self) -> bool {
        let (a, b) = self.min_exponents();
        a < 0 || b < 0
    }

    /// Only `q` appears (every `p` exponent is zero).
    pub fn is_free_of_p(&self) -> bool {
        self.terms.keys().all(|e| e.0 == 0)
    }

    /// Multiplies by the monomial `p^dp q^dq`.
    pub fn shift(&self, dp: i32, dq: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), c)| ((a + dp, b + dq), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Leading term under graded-lexicographic order with `p` before `q`.
    pub fn leading_term(&self) -> Option<((i32, i32), &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0)).map(|(e, c)| (*e, c))
    }

    /// Terms sorted in descending graded-lexicographic order.
    pub fn terms_grlex_desc(&self) -> alloc::vec::Vec<((i32, i32), &Rational)> {
        let mut v: alloc::vec::Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|a, b| grlex(&b.0, &a.0));
        v
    }

    /// Evaluates at `(p0, q0)`. Negative exponents need a nonzero point.
    pub fn eval(&self, p0: &Rational, q0: &Rational) -> Result<Rational, ArithError> {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            if (a < 0 && p0.is_zero()) || (b < 0 && q0.is_zero()) {
                return Err(ArithError::Pole);
            }
            acc += c * rational_pow(p0, a) * rational_pow(q0, b);
        }
        Ok(acc)
    }

    /// Substitutes `p = p0`, leaving a polynomial in `q` only.
    pub fn subs_p(&self, p0: &Rational) -> Result<Self, ArithError> {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a < 0 && p0.is_zero() {
                return Err(ArithError::Pole);
            }
            out.add_term((0, b), c * rational_pow(p0, a));
        }
        Ok(out)
    }

    /// Substitutes `q = q0`, leaving a polynomial in `p` only.
    pub fn subs_q(&self, q0: &Rational) -> Result<Self, ArithError> {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if b < 0 && q0.is_zero() {
                return Err(ArithError::Pole);
            }
            out.add_term((a, 0), c * rational_pow(q0, b));
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn zero_terms_vanish() {
        let a = LaurentPoly::q() - LaurentPoly::q();
        assert!(a.is_zero());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn leading_term_is_grlex_with_p_first() {
        // p*q and q^2 have equal total degree; p wins.
        let f = LaurentPoly::from_terms([((0, 2), int(1)), ((1, 1), int(-3)), ((0, 0), int(5))]);
        assert_eq!(f.leading_term().unwrap().0, (1, 1));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let f = LaurentPoly::q() - LaurentPoly::monomial(int(1), 0, -1);
        assert_eq!(f.eval(&int(1), &int(2)).unwrap(), rat(3, 2));
        assert_eq!(f.eval(&int(1), &int(0)), Err(ArithError::Pole));
    }
}
