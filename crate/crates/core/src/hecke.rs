//! Seminormal representations of the Iwahori-Hecke algebras over
//! `Q(p, q)`.
//!
//! Generators satisfy `T^2 = (x - x^-1) T + 1` with `x = p` for the short
//! simple root of B and G2 and `x = q` otherwise. Type D lives over `Q(q)`:
//! it is built with `p = 1` throughout.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{int, ArithError, LaurentPoly, Parameter, RatFunc, Rational, Scalar};
use crate::error::Error;
use crate::labels::{DLabel, G2Label, GroupType, ShapeLabel};
use crate::matrix::Matrix;
use crate::rep::{diagonal_generator, g2_basis, split_basis, split_half, swap_generator, BasisVector, Representation};
use crate::tableau::{enum_standard_tableaux, Partition, Shape, StandardTableau};
use crate::weyl;

/// Seminormal representation of a Hecke algebra over `Q(p, q)`.
pub type HeckeRep = Representation<RatFunc>;

/// Which parameter deforms generator `i`.
pub fn generator_parameter(group: GroupType, i: usize) -> Parameter {
    match (group, i) {
        (GroupType::B, 1) | (GroupType::G2, 1) => Parameter::P,
        _ => Parameter::Q,
    }
}

fn q_inv() -> RatFunc {
    RatFunc::monomial(int(1), 0, -1)
}

/// The Hecke content of the box holding `k`: `q^{2 ct}` in type A,
/// `sgn * p^{sgn} * q^{2 ct}` in type B (with `p = 1` for type D).
fn hecke_content(group: GroupType, t: &StandardTableau, k: usize) -> (i64, i32, i32) {
    let ct = 2 * t.content(k) as i32;
    match group {
        GroupType::A => (1, 0, ct),
        GroupType::B => (t.sign(k), t.sign(k) as i32, ct),
        _ => (t.sign(k), 0, ct),
    }
}

/// `CT(L(k))` as a rational function.
pub fn content_value(group: GroupType, t: &StandardTableau, k: usize) -> RatFunc {
    let (s, pe, qe) = hecke_content(group, t, k);
    RatFunc::monomial(int(s), pe, qe)
}

/// `(q - q^-1) / (1 - CT(L(i-1)) / CT(L(i)))`.
fn hecke_diag(group: GroupType, t: &StandardTableau, i: usize) -> RatFunc {
    let (s0, p0, q0) = hecke_content(group, t, i - 1);
    let (s1, p1, q1) = hecke_content(group, t, i);
    let den = LaurentPoly::one() - LaurentPoly::monomial(int(s0 * s1), p0 - p1, q0 - q1);
    let num = LaurentPoly::q() - LaurentPoly::monomial(int(1), 0, -1);
    crate::arith::rf_normalize(num, den).expect("consecutive entries never share a Hecke content")
}

fn hecke_swap(group: GroupType, ts: &[StandardTableau], i: usize) -> Matrix<RatFunc> {
    let qi = q_inv();
    swap_generator(ts, i, |t| hecke_diag(group, t, i), |d| &qi + d)
}

fn tableau_basis(ts: &[StandardTableau]) -> Vec<BasisVector> {
    ts.iter().cloned().map(BasisVector::Tableau).collect()
}

/// Hoefsmit's representation of the type A Hecke algebra on the tableaux of
/// `lambda`, generators `T2..Tn`.
pub fn build_hecke_a(lambda: &Partition) -> HeckeRep {
    let n = lambda.size();
    let ts = enum_standard_tableaux(&Shape::single(lambda.clone()));
    let generators = (2..=n).map(|i| (i, hecke_swap(GroupType::A, &ts, i))).collect();
    Representation {
        group: GroupType::A,
        n,
        label: ShapeLabel::A(lambda.clone()),
        basis: tableau_basis(&ts),
        generators,
        hecke: true,
    }
}

/// Type B generators with contents of the given flavor (`B` keeps `p`,
/// `D` sets `p = 1`).
fn type_b_matrices(flavor: GroupType, ts: &[StandardTableau], n: usize) -> Vec<(usize, Matrix<RatFunc>)> {
    let mut gens = Vec::with_capacity(n);
    if n >= 1 {
        gens.push((1, diagonal_generator(ts, |t| content_value(flavor, t, 1))));
    }
    for i in 2..=n {
        gens.push((i, hecke_swap(flavor, ts, i)));
    }
    gens
}

/// Hoefsmit's representation of the type B Hecke algebra on the tableaux of
/// `(alpha, beta)`.
pub fn build_hecke_b(alpha: &Partition, beta: &Partition) -> HeckeRep {
    let n = alpha.size() + beta.size();
    let ts = enum_standard_tableaux(&Shape::double(alpha.clone(), beta.clone()));
    Representation {
        group: GroupType::B,
        n,
        label: ShapeLabel::B(alpha.clone(), beta.clone()),
        basis: tableau_basis(&ts),
        generators: type_b_matrices(GroupType::B, &ts, n),
        hecke: true,
    }
}

/// The type B representation with `p = 1`, i.e. of `HB_n(1, q^2)`.
pub fn build_hecke_b_unit_p(alpha: &Partition, beta: &Partition) -> HeckeRep {
    let n = alpha.size() + beta.size();
    let ts = enum_standard_tableaux(&Shape::double(alpha.clone(), beta.clone()));
    Representation {
        group: GroupType::B,
        n,
        label: ShapeLabel::B(alpha.clone(), beta.clone()),
        basis: tableau_basis(&ts),
        generators: type_b_matrices(GroupType::D, &ts, n),
        hecke: true,
    }
}

/// `Tt1 = T1 T2 T1` acts by the `T2` diagonal with a negated off-diagonal.
fn type_d_matrices(ts: &[StandardTableau], n: usize) -> Vec<(usize, Matrix<RatFunc>)> {
    let mut gens = type_b_matrices(GroupType::D, ts, n);
    let qi = q_inv();
    gens[0] = (1, swap_generator(ts, 2, |t| hecke_diag(GroupType::D, t, 2), |d| -(&qi + d)));
    gens
}

/// Type D generators on the full basis of `(alpha, beta)`, `alpha = beta`
/// allowed.
pub fn build_hecke_d_ordered(alpha: &Partition, beta: &Partition) -> HeckeRep {
    let n = alpha.size() + beta.size();
    let ts = enum_standard_tableaux(&Shape::double(alpha.clone(), beta.clone()));
    Representation {
        group: GroupType::D,
        n,
        label: ShapeLabel::D(DLabel::Pair(alpha.clone(), beta.clone())),
        basis: tableau_basis(&ts),
        generators: type_d_matrices(&ts, n),
        hecke: true,
    }
}

/// Seminormal representation of `HD_n(q^2)` for a type D label.
pub fn build_hecke_d(label: &DLabel) -> Result<HeckeRep, Error> {
    match label {
        DLabel::Pair(a, b) => {
            GroupType::D.check_rank(a.size() + b.size())?;
            if a == b {
                return Err(Error::InvalidShape(alloc::format!("({a})|({b}) needs a + or - suffix")));
            }
            Ok(build_hecke_d_ordered(a, b))
        }
        DLabel::Split(a, sign) => {
            GroupType::D.check_rank(2 * a.size())?;
            let full = build_hecke_d_ordered(a, a);
            let ts: Vec<StandardTableau> = full.basis.iter().filter_map(|b| b.tableau().cloned()).collect();
            let generators = full.generators.iter().map(|(i, x)| (*i, split_half(&ts, x, *sign))).collect();
            Ok(Representation {
                group: GroupType::D,
                n: full.n,
                label: ShapeLabel::D(label.clone()),
                basis: tableau_basis(&split_basis(&ts)),
                generators,
                hecke: true,
            })
        }
    }
}

/// The entries `(a, x)` of the two-dimensional G2 modules:
/// `(±1 + p^-1 (q - q^-1)) / (p + p^-1)`.
pub fn g2_diagonal_entry(label: G2Label) -> RatFunc {
    let sign = match label {
        G2Label::Phi22 => -1,
        _ => 1,
    };
    let num =
        LaurentPoly::constant(int(sign)) + LaurentPoly::monomial(int(1), -1, 1) - LaurentPoly::monomial(int(1), -1, -1);
    let den = LaurentPoly::p() + LaurentPoly::monomial(int(1), -1, 0);
    crate::arith::rf_normalize(num, den).expect("nonzero denominator")
}

/// The tabulated representations of `HG_2(p^2, q^2)`.
pub fn build_hecke_g2(label: G2Label) -> HeckeRep {
    let p = RatFunc::p();
    let q = RatFunc::q();
    let p_inv = RatFunc::monomial(int(1), -1, 0);
    let qi = q_inv();
    let one = |x: RatFunc| Matrix::from_rows(vec![vec![x]]);
    let (t1, t2) = match label {
        G2Label::Phi10 => (one(p.clone()), one(q.clone())),
        G2Label::Phi16 => (one(-&p_inv), one(-&qi)),
        G2Label::Phi13p => (one(p.clone()), one(-&qi)),
        G2Label::Phi13pp => (one(-&p_inv), one(q.clone())),
        G2Label::Phi21 | G2Label::Phi22 => {
            let a = g2_diagonal_entry(label);
            let b = &q - &a;
            let c = &qi + &a;
            let d = &(&q - &qi) - &a;
            (Matrix::from_diagonal(&[p.clone(), -&p_inv]), Matrix::from_rows(vec![vec![a, b], vec![c, d]]))
        }
    };
    Representation {
        group: GroupType::G2,
        n: 2,
        label: ShapeLabel::G2(label),
        basis: g2_basis(label),
        generators: vec![(1, t1), (2, t2)],
        hecke: true,
    }
}

/// Builds the Hecke representation for any label.
pub fn build_hecke(label: &ShapeLabel) -> Result<HeckeRep, Error> {
    match label {
        ShapeLabel::A(p) => {
            GroupType::A.check_rank(p.size())?;
            Ok(build_hecke_a(p))
        }
        ShapeLabel::B(a, b) => {
            GroupType::B.check_rank(a.size() + b.size())?;
            Ok(build_hecke_b(a, b))
        }
        ShapeLabel::D(d) => build_hecke_d(d),
        ShapeLabel::G2(l) => Ok(build_hecke_g2(*l)),
    }
}

/// The generator word of the Murphy element `M_k`.
///
/// A: `T_k..T_2 T_2..T_k`. B: `T_k..T_2 T_1 T_2..T_k`. D: `1`, `Tt2 Tt1`,
/// then `Tt_k..Tt_2 Tt_1 Tt_3..Tt_k`. G2: `T1` at level 1 and
/// `(T1 T2)^3` at level 2.
pub fn murphy_word(group: GroupType, k: usize) -> Vec<usize> {
    match group {
        GroupType::A => (2..=k).rev().chain(2..=k).collect(),
        GroupType::B => (2..=k).rev().chain([1]).chain(2..=k).collect(),
        GroupType::D => match k {
            1 => Vec::new(),
            2 => vec![2, 1],
            _ => (2..=k).rev().chain([1]).chain(3..=k).collect(),
        },
        GroupType::G2 => match k {
            1 => vec![1],
            _ => vec![1, 2, 1, 2, 1, 2],
        },
    }
}

fn check_level(rep: &HeckeRep, k: usize) -> Result<(), Error> {
    let lo = if rep.group == GroupType::A { 2 } else { 1 };
    if k < lo || k > rep.n {
        return Err(Error::OutOfRange { index: k, max: rep.n });
    }
    Ok(())
}

/// Matrix of the Murphy element `M_k`.
pub fn murphy_matrix(rep: &HeckeRep, k: usize) -> Result<Matrix<RatFunc>, Error> {
    check_level(rep, k)?;
    Ok(rep.word_matrix(&murphy_word(rep.group, k)))
}

/// The expected eigenvalue of `M_k` on a basis tableau: `CT(L(k))` in types
/// A and B, `CT(L(1)) CT(L(k))` in type D.
pub fn murphy_eigenvalue(group: GroupType, t: &StandardTableau, k: usize) -> RatFunc {
    match group {
        GroupType::D => &content_value(group, t, 1) * &content_value(group, t, k),
        _ => content_value(group, t, k),
    }
}

/// A reduced word of the longest element of the level-`k` subgroup.
pub fn longest_word(group: GroupType, k: usize) -> Vec<usize> {
    match (group, k) {
        (GroupType::A, 1) | (GroupType::D, 1) => Vec::new(),
        (GroupType::G2, 1) => vec![1],
        _ => weyl::reduced_word(group, &weyl::longest_element(group, k).expect("valid level")),
    }
}

/// Matrix of `T_{w_{k,0}}` for the level-`k` longest element.
pub fn longest_matrix(rep: &HeckeRep, k: usize) -> Matrix<RatFunc> {
    rep.word_matrix(&longest_word(rep.group, k))
}

/// The central element `z_k` of the level-`k` subalgebra.
///
/// A: `M_k..M_2 = T_{w_{k,0}}^2`. B: `M_k..M_1 = T_{w_{k,0}}`. D:
/// `(Mt_k..Mt_1)^2`, the square of `T_{w_{k,0}}`. G2: `T1` at level 1 and
/// `(T1 T2)^3` at level 2.
pub fn central_matrix(rep: &HeckeRep, k: usize) -> Result<Matrix<RatFunc>, Error> {
    check_level(rep, k)?;
    let d = rep.dim();
    Ok(match rep.group {
        GroupType::A => Matrix::product(
            d,
            (2..=k).rev().map(|j| rep.word_matrix(&murphy_word(rep.group, j))).collect::<Vec<_>>().iter(),
        ),
        GroupType::B => Matrix::product(
            d,
            (1..=k).rev().map(|j| rep.word_matrix(&murphy_word(rep.group, j))).collect::<Vec<_>>().iter(),
        ),
        GroupType::D => {
            let w = Matrix::product(
                d,
                (1..=k).rev().map(|j| rep.word_matrix(&murphy_word(rep.group, j))).collect::<Vec<_>>().iter(),
            );
            w.mul(&w)
        }
        GroupType::G2 => rep.word_matrix(&murphy_word(rep.group, k)),
    })
}

/// Entrywise evaluation at `(p0, q0)`; fails on a pole.
pub fn specialize_rep(rep: &HeckeRep, p0: &Rational, q0: &Rational) -> Result<Representation<Rational>, ArithError> {
    let generators = rep
        .generators
        .iter()
        .map(|(i, m)| Ok((*i, m.try_map(|f| f.eval(p0, q0))?)))
        .collect::<Result<Vec<_>, ArithError>>()?;
    Ok(Representation {
        group: rep.group,
        n: rep.n,
        label: rep.label.clone(),
        basis: rep.basis.clone(),
        generators,
        hecke: rep.hecke,
    })
}

/// `T^-1 = T - (x - x^-1)` for generator `i`.
pub fn inverse_generator(rep: &HeckeRep, i: usize) -> Matrix<RatFunc> {
    let x = RatFunc::quadratic_coefficient(generator_parameter(rep.group, i));
    rep.generator(i).sub(&Matrix::scalar(rep.dim(), &x))
}
