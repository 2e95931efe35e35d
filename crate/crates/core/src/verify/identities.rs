use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::arith::{int, rat, RatFunc, Rational};
use crate::error::Error;
use crate::hecke::{
    build_hecke, build_hecke_g2, central_matrix, inverse_generator, murphy_matrix, murphy_word, HeckeRep,
};
use crate::labels::{enum_shapes, G2Label, GroupType, ShapeLabel};
use crate::matrix::Matrix;
use crate::rep::{apply_group_algebra, build_rep, build_rep_g2, SeminormalRep};
use crate::weyl::{self, CentralFlavor, GroupAlgebraElement, JmFlavor};

use super::{expect_equal, Check, CheckReport, Subject, Witness};

/// The commutation identities that drive the inductive construction:
///
/// - types A, B, D: `s_m m_{m-1} = m_m s_m - 1 - m_{m,s} m_{m-1,s}` for the
///   long-flavor Jucys-Murphy elements (the last term only where short
///   elements exist), formally and in every representation of rank `n`,
/// - types A and B: `M_m = T_m M_{m-1} T_m` and `T_m^-1 = M_m^-1 T_m M_{m-1}`
///   for the Murphy elements, as words and as matrices,
/// - G2: the derivation of the printed matrices from the central constants.
pub fn check_step2_identities(group: GroupType, n: usize) -> Result<CheckReport, Error> {
    group.check_rank(n)?;
    let result = match group {
        GroupType::G2 => g2_identities(),
        _ => classical_identities(group, n),
    };
    Ok(CheckReport::from_result(Check::Step2Identities, Subject::group(group, n), result))
}

fn long_flavor(group: GroupType) -> JmFlavor {
    if group == GroupType::D {
        JmFlavor::Two
    } else {
        JmFlavor::Long
    }
}

/// Both sides of `s_m m_{m-1} = m_m s_m - 1 - m_{m,s} m_{m-1,s}`.
fn step2_sides(group: GroupType, n: usize, m: usize) -> Result<(GroupAlgebraElement, GroupAlgebraElement), Error> {
    let s = GroupAlgebraElement::from_element(weyl::generator(group, n, m));
    let flavor = long_flavor(group);
    let lhs = s.mul(&weyl::jm_element(group, n, m - 1, flavor)?)?;
    let mut rhs = weyl::jm_element(group, n, m, flavor)?.mul(&s)?;
    rhs = rhs.sub(&GroupAlgebraElement::from_element(weyl::GroupElement::identity(group, n)));
    if group != GroupType::A {
        let neg = |k: usize| {
            GroupAlgebraElement::from_element(weyl::GroupElement::Signed(weyl::SignedPermutation::negate(n, k)))
        };
        rhs = rhs.sub(&neg(m).mul(&neg(m - 1))?);
    }
    Ok((lhs, rhs))
}

fn classical_identities(group: GroupType, n: usize) -> Result<(), Witness> {
    for m in 2..=n {
        let (lhs, rhs) = step2_sides(group, n, m)?;
        if lhs != rhs {
            return Err(Witness::values(format!("formal commutation identity at level {m}"), rhs, lhs));
        }
    }
    for label in enum_shapes(group, n)? {
        let rep = build_rep(&label)?;
        for m in 2..=n {
            let (lhs, rhs) = step2_sides(group, n, m)?;
            expect_equal(
                format!("{label}: commutation identity at level {m}"),
                &apply_group_algebra(&rep, &rhs)?,
                &apply_group_algebra(&rep, &lhs)?,
            )?;
        }
        if group != GroupType::D {
            murphy_recursion(&build_hecke(&label)?)?;
        }
    }
    Ok(())
}

/// `M_m = T_m M_{m-1} T_m` (with `M_1 = 1` in type A) and
/// `M_m T_m^-1 = T_m M_{m-1}`.
fn murphy_recursion(rep: &HeckeRep) -> Result<(), Witness> {
    let group = rep.group;
    let first = if group == GroupType::A { 2 } else { 1 };
    for m in first + 1..=rep.n {
        let mut word = vec![m];
        word.extend(murphy_word(group, m - 1));
        word.push(m);
        if word != murphy_word(group, m) {
            return Err(Witness::message(format!("M{m} is not T{m} M{} T{m} as a word", m - 1)));
        }
        let mm = murphy_matrix(rep, m)?;
        let prev = murphy_matrix(rep, m - 1)?;
        let t = rep.generator(m);
        expect_equal(format!("{}: M{m} = T{m} M{} T{m}", rep.label, m - 1), &mm, &t.mul(&prev).mul(t))?;
        expect_equal(
            format!("{}: M{m} T{m}^-1 = T{m} M{}", rep.label, m - 1),
            &t.mul(&prev),
            &mm.mul(&inverse_generator(rep, m)),
        )?;
    }
    if group == GroupType::A && rep.n >= 2 {
        let t = rep.generator(2);
        expect_equal(format!("{}: M2 = T2 T2", rep.label), &t.mul(t), &murphy_matrix(rep, 2)?)?;
    }
    Ok(())
}

/// Group-algebra identity `z_{2,l} = s2 + s1 s2 s1 + z_{2,0} s1` and the
/// word identity `s1^-1 s2^-1 s1^-1 z_{2,0} = s2 s1 s2`.
fn g2_formal() -> Result<(), Witness> {
    let g = |w: &[usize]| weyl::word_element(GroupType::G2, 2, w);
    let long = weyl::central_sum(GroupType::G2, 2, 2, CentralFlavor::Long)?;
    let z0 = weyl::central_sum(GroupType::G2, 2, 2, CentralFlavor::Zero)?;
    let rhs = GroupAlgebraElement::sum_of([g(&[2]), g(&[1, 2, 1])])
        .add(&z0.mul(&GroupAlgebraElement::from_element(g(&[1])))?);
    if long != rhs {
        return Err(Witness::values("z_{2,l} = s2 + s1 s2 s1 + z_{2,0} s1", rhs, long));
    }
    let s1inv = g(&[1]).inverse();
    let s2inv = g(&[2]).inverse();
    let lhs = s1inv.compose(&s2inv)?.compose(&s1inv)?.compose(&g(&[1, 2, 1, 2, 1, 2]))?;
    if lhs != g(&[2, 1, 2]) {
        return Err(Witness::values("s1^-1 s2^-1 s1^-1 z_{2,0} = s2 s1 s2", g(&[2, 1, 2]), lhs));
    }
    Ok(())
}

fn g2_identities() -> Result<(), Witness> {
    g2_formal()?;
    for label in G2Label::ALL {
        let (_, cl, c0) = label.constants();
        let rep = build_rep_g2(label);
        let hecke = build_hecke_g2(label);
        let paths: Vec<i64> = label.restriction().iter().map(|s| s.sign()).collect();
        // (a) s1 acts by the level-one constants.
        let s1: Vec<Rational> = paths.iter().map(|&c| int(c)).collect();
        expect_equal(format!("{}: s1 = diag(c_10)", label.name()), &Matrix::from_diagonal(&s1), rep.generator(1))?;
        // (b) diagonal of s2 from the central constants.
        let s2 = rep.generator(2);
        for (i, &c10) in paths.iter().enumerate() {
            let expected = rat(cl - c0 * c10, 1 + c10 * c10);
            if s2[(i, i)] != expected {
                return Err(Witness::values(
                    format!("{}: diagonal entry {i} of s2", label.name()),
                    expected,
                    &s2[(i, i)],
                ));
            }
        }
        // The group identity behind (b), read in the representation.
        let long = apply_group_algebra(&rep, &weyl::central_sum(GroupType::G2, 2, 2, CentralFlavor::Long)?)?;
        let z0 = rep.word_matrix(&[1, 2, 1, 2, 1, 2]);
        let s1m = rep.generator(1);
        let rhs = s2.add(&s1m.mul(s2).mul(s1m)).add(&z0.mul(s1m));
        expect_equal(format!("{}: z_(2,l) = s2 + s1 s2 s1 + z_(2,0) s1", label.name()), &rhs, &long)?;
        if paths.len() == 2 {
            g2_weyl_off_diagonal(label, &rep)?;
            g2_hecke_two_dim(label, &hecke, c0)?;
        }
        g2_hecke_identity(&hecke)?;
    }
    Ok(())
}

/// (c): `(s2)_{LM} (s2)_{ML} = (1 + (s2)_{LL})(1 - (s2)_{LL})` and the gauge
/// `(s2)_{ML} = 1 + (s2)_{LL} = 1 - (s2)_{MM}`.
fn g2_weyl_off_diagonal(label: G2Label, rep: &SeminormalRep) -> Result<(), Witness> {
    let s = rep.generator(2);
    let one = Rational::one();
    let (ll, lm, ml, mm) = (&s[(0, 0)], &s[(0, 1)], &s[(1, 0)], &s[(1, 1)]);
    let product = lm * ml;
    let expected = (&one + ll) * (&one - ll);
    if product != expected {
        return Err(Witness::values(format!("{}: off-diagonal product of s2", label.name()), expected, product));
    }
    if *ml != &one + ll || *ml != &one - mm {
        return Err(Witness::values(format!("{}: off-diagonal gauge of s2", label.name()), &one + ll, ml));
    }
    Ok(())
}

/// `-c_0 = p (T2)_{LL} - p^-1 (T2)_{MM}`, `tr T2 = q - q^-1` and
/// `(T2)_{LM} (T2)_{ML} = (q - (T2)_{LL})(q^-1 + (T2)_{LL})`.
fn g2_hecke_two_dim(label: G2Label, rep: &HeckeRep, c0: i64) -> Result<(), Witness> {
    let t = rep.generator(2);
    let p = RatFunc::p();
    let q = RatFunc::q();
    let p_inv = RatFunc::monomial(int(1), -1, 0);
    let q_inv = RatFunc::monomial(int(1), 0, -1);
    let (ll, lm, ml, mm) = (&t[(0, 0)], &t[(0, 1)], &t[(1, 0)], &t[(1, 1)]);
    let lhs = &(&p * ll) - &(&p_inv * mm);
    let expected = RatFunc::from_int(-c0);
    if lhs != expected {
        return Err(Witness::values(format!("{}: p (T2)_LL - p^-1 (T2)_MM", label.name()), expected, lhs));
    }
    let trace = t.trace();
    let expected = &q - &q_inv;
    if trace != expected {
        return Err(Witness::values(format!("{}: trace of T2", label.name()), expected, trace));
    }
    let product = lm * ml;
    let expected = &(&q - ll) * &(&q_inv + ll);
    if product != expected {
        return Err(Witness::values(format!("{}: off-diagonal product of T2", label.name()), expected, product));
    }
    Ok(())
}

/// `T1^-1 T2^-1 T1^-1 z2 = T2 T1 T2`.
fn g2_hecke_identity(rep: &HeckeRep) -> Result<(), Witness> {
    let z2 = central_matrix(rep, 2)?;
    let t1i = inverse_generator(rep, 1);
    let t2i = inverse_generator(rep, 2);
    let lhs = t1i.mul(&t2i).mul(&t1i).mul(&z2);
    expect_equal(format!("{}: T1^-1 T2^-1 T1^-1 z2 = T2 T1 T2", rep.label), &rep.word_matrix(&[2, 1, 2]), &lhs)
}

/// The two-dimensional modules' `T2` entries:
/// `a = (1 + p^-1 (q - q^-1)) / (p + p^-1)`, `b = q - a`, `c = q^-1 + a`,
/// `d = (q - q^-1) - a`, and `x, y, z, w` with `-1` in place of `1`.
fn printed_hecke_t2(sign: i64) -> Result<Matrix<RatFunc>, crate::arith::ArithError> {
    let p = RatFunc::p();
    let q = RatFunc::q();
    let p_inv = p.recip()?;
    let q_inv = q.recip()?;
    let a = (&RatFunc::from_int(sign) + &(&p_inv * &(&q - &q_inv))).checked_div(&(&p + &p_inv))?;
    let b = &q - &a;
    let c = &q_inv + &a;
    let d = &(&q - &q_inv) - &a;
    Ok(Matrix::from_rows(vec![vec![a, b], vec![c, d]]))
}

/// The tabulated G2 matrices, Weyl and Hecke, entry for entry.
pub fn check_g2_printed_matrices() -> CheckReport {
    CheckReport::from_result(Check::G2PrintedMatrices, Subject::group(GroupType::G2, 2), printed())
}

fn printed() -> Result<(), Witness> {
    let r = |n: i64, d: i64| rat(n, d);
    let one = |x: i64| Matrix::from_rows(vec![vec![int(x)]]);
    let flip = Matrix::from_diagonal(&[int(1), int(-1)]);
    let weyl: [(G2Label, Matrix<Rational>, Matrix<Rational>); 6] = [
        (G2Label::Phi10, one(1), one(1)),
        (G2Label::Phi16, one(-1), one(-1)),
        (G2Label::Phi13p, one(1), one(-1)),
        (G2Label::Phi13pp, one(-1), one(1)),
        (G2Label::Phi21, flip.clone(), Matrix::from_rows(vec![vec![r(1, 2), r(1, 2)], vec![r(3, 2), r(-1, 2)]])),
        (G2Label::Phi22, flip, Matrix::from_rows(vec![vec![r(-1, 2), r(3, 2)], vec![r(1, 2), r(1, 2)]])),
    ];
    for (label, s1, s2) in &weyl {
        let rep = build_rep_g2(*label);
        expect_equal(format!("{}(s1)", label.name()), s1, rep.generator(1))?;
        expect_equal(format!("{}(s2)", label.name()), s2, rep.generator(2))?;
    }
    let p = RatFunc::p();
    let q = RatFunc::q();
    let mp = -&p.recip()?;
    let mq = -&q.recip()?;
    let one = |x: &RatFunc| Matrix::from_rows(vec![vec![x.clone()]]);
    let t1 = Matrix::from_diagonal(&[p.clone(), mp.clone()]);
    let hecke: [(G2Label, Matrix<RatFunc>, Matrix<RatFunc>); 6] = [
        (G2Label::Phi10, one(&p), one(&q)),
        (G2Label::Phi16, one(&mp), one(&mq)),
        (G2Label::Phi13p, one(&p), one(&mq)),
        (G2Label::Phi13pp, one(&mp), one(&q)),
        (G2Label::Phi21, t1.clone(), printed_hecke_t2(1)?),
        (G2Label::Phi22, t1, printed_hecke_t2(-1)?),
    ];
    for (label, t1, t2) in &hecke {
        let rep = build_hecke_g2(*label);
        expect_equal(format!("{}(T1)", label.name()), t1, rep.generator(1))?;
        expect_equal(format!("{}(T2)", label.name()), t2, rep.generator(2))?;
    }
    Ok(())
}

/// Class representatives `1, s1, s2, s1 s2, (s1 s2)^2, (s1 s2)^3` and the
/// character values on them.
pub const G2_CLASS_WORDS: [&[usize]; 6] = [&[], &[1], &[2], &[1, 2], &[1, 2, 1, 2], &[1, 2, 1, 2, 1, 2]];

pub const G2_CHARACTER_TABLE: [(G2Label, [i64; 6]); 6] = [
    (G2Label::Phi10, [1, 1, 1, 1, 1, 1]),
    (G2Label::Phi16, [1, -1, -1, 1, 1, 1]),
    (G2Label::Phi13p, [1, 1, -1, -1, 1, -1]),
    (G2Label::Phi13pp, [1, -1, 1, -1, 1, -1]),
    (G2Label::Phi21, [2, 0, 0, 1, -1, -2]),
    (G2Label::Phi22, [2, 0, 0, -1, -1, 2]),
];

/// All 36 character values, as traces of element matrices.
pub fn check_g2_character_table() -> CheckReport {
    let result = (|| {
        for (label, row) in G2_CHARACTER_TABLE {
            let rep = build_rep(&ShapeLabel::G2(label))?;
            for (word, &value) in G2_CLASS_WORDS.iter().zip(&row) {
                let g = weyl::word_element(GroupType::G2, 2, word);
                let chi = rep.character(&g)?;
                if chi != int(value) {
                    return Err(Witness::values(format!("chi_{}({g})", label.name()), value, chi));
                }
            }
        }
        Ok(())
    })();
    CheckReport::from_result(Check::G2CharacterTable, Subject::group(GroupType::G2, 2), result)
}
