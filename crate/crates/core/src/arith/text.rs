//! Canonical text form of rational functions.
//!
//! ```text
//! ratfunc  := poly | "(" poly ")/(" poly ")"
//! poly     := ["-"] term { ("+" | "-") term }
//! term     := integer [ "/" posinteger ] [ "*" monomial ] | monomial
//! monomial := "p" ["^" integer] ["*"] ["q" ["^" integer]] | "q" ["^" integer]
//! ```
//!
//! Whitespace between tokens is ignored on input. Output lists terms in
//! descending graded-lex order, separated by `" + "` / `" - "`.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt::{self, Write};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rf_normalize, ArithError, LaurentPoly, RatFunc, Rational};

/// Parses the canonical text grammar into a normalized [`RatFunc`].
pub fn rf_parse(s: &str) -> Result<RatFunc, ArithError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let f = p.ratfunc()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

/// Formats `f` in canonical text form; `rf_parse` inverts it exactly.
pub fn rf_format(f: &RatFunc) -> String {
    let mut out = String::new();
    if f.denominator().is_one() {
        write_poly(&mut out, f.numerator());
    } else {
        out.push('(');
        write_poly(&mut out, f.numerator());
        out.push_str(")/(");
        write_poly(&mut out, f.denominator());
        out.push(')');
    }
    out
}

fn write_poly(out: &mut String, f: &LaurentPoly) {
    let terms = f.terms_grlex_desc();
    if terms.is_empty() {
        out.push('0');
        return;
    }
    for (i, ((pe, qe), c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let mono = monomial_text(pe, qe);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{mag}*{mono}");
        }
    }
}

fn monomial_text(pe: i32, qe: i32) -> String {
    let var = |name: char, e: i32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    let (p, q) = (var('p', pe), var('q', qe));
    match (p.is_empty(), q.is_empty()) {
        (false, false) => format!("{p}*{q}"),
        _ => p + &q,
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rf_format(self))
    }
}

impl FromStr for RatFunc {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        rf_parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ArithError {
        ArithError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ArithError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn ratfunc(&mut self) -> Result<RatFunc, ArithError> {
        if self.eat(b'(') {
            let num = self.poly()?;
            self.expect(b')')?;
            self.expect(b'/')?;
            self.expect(b'(')?;
            let at = self.pos;
            let den = self.poly()?;
            self.expect(b')')?;
            if den.is_zero() {
                return Err(ArithError::Parse { position: at, message: "zero denominator".into() });
            }
            rf_normalize(num, den)
        } else {
            Ok(RatFunc::from_laurent(self.poly()?))
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, ArithError> {
        let mut out = LaurentPoly::zero();
        let mut negative = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            out.add_term(e, if negative { -c } else { c });
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn digits(&mut self) -> Result<BigInt, ArithError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn exponent(&mut self) -> Result<i32, ArithError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let negative = self.eat(b'-');
        let at = self.pos;
        let v = self.digits()?;
        let v = if negative { -v } else { v };
        i32::try_from(v).map_err(|_| ArithError::Parse { position: at, message: "exponent out of range".into() })
    }

    fn term(&mut self) -> Result<((i32, i32), Rational), ArithError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.digits()?;
                let mut c = Rational::from_integer(num);
                if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(ArithError::Parse { position: at, message: "zero denominator".into() });
                    }
                    c /= Rational::from_integer(den);
                }
                let e = if self.eat(b'*') { self.monomial()? } else { (0, 0) };
                Ok((e, c))
            }
            Some(b'p') | Some(b'q') => Ok((self.monomial()?, Rational::one())),
            _ => Err(self.error("expected a term")),
        }
    }

    fn monomial(&mut self) -> Result<(i32, i32), ArithError> {
        match self.peek() {
            Some(b'p') => {
                self.pos += 1;
                let pe = self.exponent()?;
                let save = self.pos;
                let star = self.eat(b'*');
                if self.eat(b'q') {
                    Ok((pe, self.exponent()?))
                } else if star {
                    self.pos = save;
                    Err(self.error("expected 'q' after '*'"))
                } else {
                    Ok((pe, 0))
                }
            }
            Some(b'q') => {
                self.pos += 1;
                Ok((0, self.exponent()?))
            }
            _ => Err(self.error("expected 'p' or 'q'")),
        }
    }
}
