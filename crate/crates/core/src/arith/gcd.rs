//! Bivariate polynomial GCD.
//!
//! Polynomials are viewed as univariate in `q` with coefficients in `Q[p]`.
//! The gcd is the product of the gcd of the `Q[p]` contents and the last
//! nonzero member of a primitive pseudo-remainder sequence.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_content, LaurentPoly, Rational};

/// Dense polynomial in `p`, lowest degree first, no trailing zeros.
type UPoly = Vec<Rational>;
/// Dense polynomial in `q` over `Q[p]`, lowest degree first, no trailing zeros.
type BiPoly = Vec<UPoly>;

fn u_trim(a: &mut UPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn u_add_scaled_shift(acc: &mut UPoly, b: &UPoly, c: &Rational, shift: usize) {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, Rational::zero());
    }
    for (i, v) in b.iter().enumerate() {
        acc[i + shift] += v * c;
    }
    u_trim(acc);
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = a.clone();
    u_add_scaled_shift(&mut out, b, &-Rational::one(), 0);
    out
}

/// Division with remainder; `b` must be nonzero.
fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let db = b.len() - 1;
    let lb = b[db].recip();
    let mut r = a.clone();
    let mut quo = Vec::new();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let t = &r[r.len() - 1] * &lb;
        if quo.len() <= shift {
            quo.resize(shift + 1, Rational::zero());
        }
        quo[shift] = t.clone();
        u_add_scaled_shift(&mut r, b, &-t, shift);
    }
    u_trim(&mut quo);
    (quo, r)
}

fn u_monic(a: &UPoly) -> UPoly {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = l.recip();
            a.iter().map(|c| c * &inv).collect()
        }
    }
}

/// Scales to coprime integer coefficients, which bounds coefficient growth
/// in remainder sequences.
fn u_primitive(a: UPoly) -> UPoly {
    let scale = rational_content(&a).recip();
    a.iter().map(|c| c * &scale).collect()
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut x, mut y) = (u_primitive(a.clone()), u_primitive(b.clone()));
    while !y.is_empty() {
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = u_primitive(r);
    }
    u_monic(&x)
}

fn u_exact_div(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let (quo, r) = u_divrem(a, b);
    r.is_empty().then_some(quo)
}

fn b_trim(a: &mut BiPoly) {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
}

fn to_dense(f: &LaurentPoly) -> BiPoly {
    let mut out: BiPoly = Vec::new();
    for (&(pe, qe), c) in f.terms() {
        assert!(pe >= 0 && qe >= 0, "dense conversion needs nonnegative exponents");
        let (pe, qe) = (pe as usize, qe as usize);
        if out.len() <= qe {
            out.resize(qe + 1, Vec::new());
        }
        let row = &mut out[qe];
        if row.len() <= pe {
            row.resize(pe + 1, Rational::zero());
        }
        row[pe] = c.clone();
    }
    for row in out.iter_mut() {
        u_trim(row);
    }
    b_trim(&mut out);
    out
}

fn from_dense(f: &BiPoly) -> LaurentPoly {
    LaurentPoly::from_terms(f.iter().enumerate().flat_map(|(qe, row)| {
        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(pe, c)| ((pe as i32, qe as i32), c.clone()))
    }))
}

fn b_content(f: &BiPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in f {
        g = u_gcd(&g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

/// Divides out the `Q[p]` content and then the rational content, which
/// keeps coefficient growth in the remainder sequence bounded.
fn b_primitive(f: &BiPoly) -> BiPoly {
    let c = b_content(f);
    let f: BiPoly = if c.len() <= 1 {
        f.clone()
    } else {
        f.iter()
            .map(|row| if row.is_empty() { Vec::new() } else { u_exact_div(row, &c).expect("content divides") })
            .collect()
    };
    let scale = rational_content(f.iter().flatten()).recip();
    f.iter().map(|row| row.iter().map(|x| x * &scale).collect()).collect()
}

/// Pseudo-remainder of `f` by `g` in `Q[p][q]`.
fn b_prem(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.clone();
    while !r.is_empty() && r.len() > dg {
        let shift = r.len() - 1 - dg;
        let lr = r[r.len() - 1].clone();
        let mut next: BiPoly = r.iter().map(|c| u_mul(c, lg)).collect();
        for (i, c) in g.iter().enumerate() {
            next[i + shift] = u_sub(&next[i + shift], &u_mul(c, &lr));
        }
        b_trim(&mut next);
        r = next;
    }
    r
}

fn b_exact_div(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    let db = b.len() - 1;
    let mut r = a.clone();
    let mut quo: BiPoly = Vec::new();
    while !r.is_empty() {
        if r.len() <= db {
            return None;
        }
        let shift = r.len() - 1 - db;
        let t = u_exact_div(&r[r.len() - 1], &b[db])?;
        if quo.len() <= shift {
            quo.resize(shift + 1, Vec::new());
        }
        quo[shift] = t.clone();
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = u_sub(&r[i + shift], &u_mul(c, &t));
        }
        b_trim(&mut r);
    }
    b_trim(&mut quo);
    Some(quo)
}

/// Scales a polynomial to have coprime integer coefficients and a positive
/// graded-lexicographic leading coefficient. Returns the scaled polynomial
/// and the factor it was multiplied by.
pub(crate) fn make_primitive(f: &LaurentPoly) -> (LaurentPoly, Rational) {
    let Some((_, lc)) = f.leading_term() else {
        return (LaurentPoly::zero(), Rational::one());
    };
    let mut factor = rational_content(f.terms().map(|(_, c)| c)).recip();
    if lc.is_negative() {
        factor = -factor;
    }
    (f.scale(&factor), factor)
}

/// Exact quotient `a / b` of polynomials with nonnegative exponents, or
/// `None` if `b` does not divide `a`.
pub(crate) fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    b_exact_div(&to_dense(a), &to_dense(b)).map(|q| from_dense(&q))
}

const PRIME: u64 = 2_147_483_647;

fn mod_pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64) -> u64 {
    mod_pow(a, PRIME - 2)
}

/// Univariate polynomial mod `PRIME`, lowest degree first, trimmed.
fn m_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree of the gcd mod `PRIME` of two nonzero polynomials.
fn m_gcd_degree(a: Vec<u64>, b: Vec<u64>) -> usize {
    let (mut x, mut y) = (a, b);
    while !y.is_empty() {
        let inv = mod_inv(*y.last().unwrap());
        let dy = y.len() - 1;
        while x.len() > dy {
            let shift = x.len() - 1 - dy;
            let t = x[x.len() - 1] * inv % PRIME;
            for (i, c) in y.iter().enumerate() {
                x[i + shift] = (x[i + shift] + PRIME - t * c % PRIME) % PRIME;
            }
            x = m_trim(x);
        }
        core::mem::swap(&mut x, &mut y);
    }
    x.len() - 1
}

/// Image mod `PRIME` of an integer polynomial with one variable set to
/// `at`, as a polynomial in the other; `None` if the leading coefficient
/// in the remaining variable vanishes there.
fn m_image(terms: &[(i32, i32, u64)], keep_q: bool, at: u64) -> Option<Vec<u64>> {
    let mut out: Vec<u64> = Vec::new();
    let mut lead_deg = 0;
    for &(pe, qe, c) in terms {
        let (kept, evaluated) = if keep_q { (qe, pe) } else { (pe, qe) };
        let kept = kept as usize;
        if out.len() <= kept {
            out.resize(kept + 1, 0);
        }
        lead_deg = lead_deg.max(kept);
        out[kept] = (out[kept] + c * mod_pow(at, evaluated as u64)) % PRIME;
    }
    (out[lead_deg] != 0).then_some(out)
}

/// Terms of the primitive integer multiple of `f`, reduced mod `PRIME`.
fn m_terms(f: &LaurentPoly) -> Vec<(i32, i32, u64)> {
    let (f, _) = make_primitive(f);
    let prime = num_bigint::BigInt::from(PRIME);
    f.terms()
        .map(|(&(pe, qe), c)| {
            let (_, digits) = c.numer().mod_floor(&prime).to_u64_digits();
            (pe, qe, digits.first().copied().unwrap_or(0))
        })
        .collect()
}

/// True if `a` and `b` are certainly coprime. Evaluating one variable at a
/// point where the leading coefficient of `a` in the other survives keeps
/// the degree of the gcd's image, so constant images in both variables
/// certify a constant gcd. `false` means inconclusive.
fn certify_coprime(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let (ta, tb) = (m_terms(a), m_terms(b));
    [true, false].iter().all(|&keep_q| {
        (3..10).any(|at| match (m_image(&ta, keep_q, at), m_image(&tb, keep_q, at)) {
            (Some(x), Some(y)) => m_gcd_degree(x, y) == 0,
            _ => false,
        })
    })
}

/// Greatest common divisor of two polynomials in `p` and `q`.
///
/// Both inputs must have nonnegative exponents. The result divides both
/// exactly, has coprime integer coefficients and a positive leading
/// coefficient; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!a.has_negative_exponents() && !b.has_negative_exponents(), "poly_gcd needs nonnegative exponents");
    if a.is_zero() {
        return make_primitive(b).0;
    }
    if b.is_zero() {
        return make_primitive(a).0;
    }
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    // monomial factors split off cheaply
    let (ma, mb) = (a.min_exponents(), b.min_exponents());
    let common = (ma.0.min(mb.0), ma.1.min(mb.1));
    if a.len() == 1 || b.len() == 1 {
        return LaurentPoly::monomial(Rational::one(), common.0, common.1);
    }

    let (sa, sb) = (a.shift(-ma.0, -ma.1), b.shift(-mb.0, -mb.1));
    if certify_coprime(&sa, &sb) {
        return LaurentPoly::monomial(Rational::one(), common.0, common.1);
    }
    let da = to_dense(&sa);
    let db = to_dense(&sb);
    let content = u_gcd(&b_content(&da), &b_content(&db));
    let pa = b_primitive(&da);
    let pb = b_primitive(&db);
    let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let primitive_gcd = loop {
        if g.len() == 1 {
            break vec![vec![Rational::one()]];
        }
        let r = b_prem(&f, &g);
        if r.is_empty() {
            break g;
        }
        f = g;
        g = b_primitive(&r);
    };
    let g: BiPoly = primitive_gcd.iter().map(|c| u_mul(c, &content)).collect();
    make_primitive(&from_dense(&g).shift(common.0, common.1)).0
}
