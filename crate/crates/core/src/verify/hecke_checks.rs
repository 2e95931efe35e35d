use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::arith::{int, ArithError, Parameter, RatFunc, Rational, Scalar};
use crate::hecke::{central_matrix, longest_matrix, murphy_eigenvalue, murphy_matrix, specialize_rep, HeckeRep};
use crate::labels::GroupType;
use crate::matrix::Matrix;
use crate::rep::{apply_group_algebra, BasisVector, SeminormalRep};
use crate::weyl::{self, CentralFlavor, GroupElement, SignedPermutation};

use super::spectra::{level_constant, weyl_centrality};
use super::{expect_diagonal, expect_equal, level_generators, levels, subject_of, Check, CheckReport, Witness};

fn constants(group: GroupType, b: &BasisVector, k: usize) -> (i64, i64, i64) {
    let get = |f: CentralFlavor| {
        if weyl::central_flavors(group, k).contains(&f) {
            level_constant(group, b, k, f)
        } else {
            0
        }
    };
    let zero =
        if weyl::central_flavors(group, k).contains(&CentralFlavor::Zero) { get(CentralFlavor::Zero) } else { 1 };
    (get(CentralFlavor::Short), get(CentralFlavor::Long), zero)
}

/// Eigenvalue of the level-`k` central element on a basis vector.
///
/// A: `q^{2 c_l}`. B: `c_0 p^{c_s} q^{c_l}`. D: `q^{2 c_l}`. G2: `c_{1,0}
/// p^{c_{1,0}}` at level one and `c_0 p^{c_s} q^{c_l}` at level two.
pub(crate) fn central_eigenvalue(group: GroupType, b: &BasisVector, k: usize) -> RatFunc {
    let (s, l, z) = constants(group, b, k);
    match (group, k) {
        (GroupType::A, _) | (GroupType::D, _) => RatFunc::monomial(int(1), 0, 2 * l as i32),
        (GroupType::G2, 1) => RatFunc::monomial(int(z), z as i32, 0),
        _ => RatFunc::monomial(int(z), s as i32, l as i32),
    }
}

/// Eigenvalue of `T_{w_{k,0}}^2`: `p^{2 c_s} q^{2 c_l}`, with the level-one
/// G2 constant `c_{1,0}` in the role of `c_s`.
pub(crate) fn longest_square_eigenvalue(group: GroupType, b: &BasisVector, k: usize) -> RatFunc {
    let (s, l, z) = constants(group, b, k);
    let s = if group == GroupType::G2 && k == 1 { z } else { s };
    RatFunc::monomial(int(1), 2 * s as i32, 2 * l as i32)
}

/// Murphy elements act diagonally with eigenvalues `CT(L(k))` (types A and
/// B) or `CT(L(1)) CT(L(k))` (type D), and pairwise commute. In G2 the
/// central elements `z_1`, `z_2` play this role.
pub fn check_murphy_spectra(rep: &HeckeRep) -> CheckReport {
    CheckReport::from_result(Check::MurphySpectra, subject_of(rep), murphy_spectra(rep))
}

fn murphy_spectra(rep: &HeckeRep) -> Result<(), Witness> {
    let group = rep.group;
    let mut mats = Vec::new();
    for k in levels(group, rep.n) {
        let (m, expected): (Matrix<RatFunc>, Vec<RatFunc>) = if group == GroupType::G2 {
            (central_matrix(rep, k)?, rep.basis.iter().map(|b| central_eigenvalue(group, b, k)).collect())
        } else {
            let ts = rep.tableaux().expect("tableau basis");
            (murphy_matrix(rep, k)?, ts.iter().map(|t| murphy_eigenvalue(group, t, k)).collect())
        };
        expect_diagonal(format!("M{k}"), &expected, &m)?;
        mats.push(m);
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Witness::message("Murphy elements do not commute"));
            }
        }
    }
    Ok(())
}

/// Entrywise evaluation at `p = q = 1` reproduces the Weyl matrices.
pub fn check_specialization(hecke: &HeckeRep, weyl: &SeminormalRep) -> CheckReport {
    let result = (|| {
        let at_one = specialize_rep(hecke, &int(1), &int(1))?;
        for ((i, h), (_, w)) in at_one.generators.iter().zip(&weyl.generators) {
            expect_equal(format!("{} at p = q = 1", hecke.generator_name(*i)), w, h)?;
        }
        Ok(())
    })();
    CheckReport::from_result(Check::Specialization, subject_of(hecke), result)
}

/// `[(X^2 - 1) / (x - x^-1)]` with the other parameter set to 1, evaluated
/// at `x = 1`.
fn reflection_sum_limit(t: &Matrix<RatFunc>, x: Parameter) -> Result<Matrix<Rational>, ArithError> {
    let one = int(1);
    let fixed = t.try_map(|f| match x {
        Parameter::Q => f.specialize_p(&one),
        Parameter::P => f.specialize_q(&one),
    })?;
    let d = t.rows();
    let numer = fixed.mul(&fixed).sub(&Matrix::identity(d));
    let denom = RatFunc::quadratic_coefficient(x);
    numer.try_map(|f| f.checked_div(&denom)?.eval(&one, &one))
}

/// The longest element of the level-`k` subgroup, embedded at rank `n`.
fn level_longest(group: GroupType, n: usize, k: usize) -> Result<GroupElement, crate::error::Error> {
    match (group, k) {
        (GroupType::G2, 1) => Ok(weyl::generator(group, n, 1)),
        (GroupType::G2, _) => weyl::longest_element(group, 2),
        (GroupType::A, 1) | (GroupType::D, 1) => Ok(GroupElement::identity(group, n)),
        _ => match weyl::longest_element(group, k)? {
            GroupElement::Signed(p) => {
                let mut images = p.images().to_vec();
                images.extend(k as i32 + 1..=n as i32);
                Ok(GroupElement::Signed(SignedPermutation::from_images(images)?))
            }
            other => Ok(other),
        },
    }
}

/// The three specialization identities at each level `k`:
///
/// - with `p = 1`, `(T_{w_{k,0}}^2 - 1)/(q - q^-1)` at `q = 1` is the sum of
///   the long reflections,
/// - with `q = 1`, `(T_{w_{k,0}}^2 - 1)/(p - p^-1)` at `p = 1` is the sum of
///   the short reflections (types B and G2),
/// - `T_{w_{k,0}}` at `p = q = 1` is the matrix of `w_{k,0}`.
pub fn check_jucys_specialization(hecke: &HeckeRep, weyl: &SeminormalRep) -> CheckReport {
    CheckReport::from_result(Check::JucysSpecialization, subject_of(hecke), jucys(hecke, weyl))
}

fn jucys(hecke: &HeckeRep, rep: &SeminormalRep) -> Result<(), Witness> {
    let (group, n, d) = (rep.group, rep.n, rep.dim());
    for k in levels(group, n) {
        let t = longest_matrix(hecke, k);
        let long = match (group, k) {
            (GroupType::G2, 1) => Matrix::zeros(d, d),
            _ => apply_group_algebra(rep, &weyl::central_sum(group, n, k, CentralFlavor::Long)?)?,
        };
        expect_equal(format!("long reflections at level {k}"), &long, &reflection_sum_limit(&t, Parameter::Q)?)?;
        let short = match (group, k) {
            (GroupType::G2, 1) => Some(weyl::central_sum(group, n, 1, CentralFlavor::Zero)?),
            (GroupType::G2, _) | (GroupType::B, _) => Some(weyl::central_sum(group, n, k, CentralFlavor::Short)?),
            _ => None,
        };
        if let Some(short) = short {
            let expected = apply_group_algebra(rep, &short)?;
            expect_equal(
                format!("short reflections at level {k}"),
                &expected,
                &reflection_sum_limit(&t, Parameter::P)?,
            )?;
        }
        let w = rep.element_matrix(&level_longest(group, n, k)?)?;
        let at_one = t.try_map(|f| f.eval(&Rational::one(), &Rational::one()))?;
        expect_equal(format!("longest element at level {k}"), &w, &at_one)?;
    }
    Ok(())
}

/// Central elements commute with their level's generators and act by the
/// tabulated scalars; `T_{w_{k,0}}^2` acts by `p^{2 c_s} q^{2 c_l}`. The
/// Weyl central sums commute with their level's generators.
pub fn check_centrality(hecke: &HeckeRep, weyl: &SeminormalRep) -> CheckReport {
    let result = weyl_centrality(weyl).and_then(|()| hecke_centrality(hecke));
    CheckReport::from_result(Check::Centrality, subject_of(hecke), result)
}

fn hecke_centrality(rep: &HeckeRep) -> Result<(), Witness> {
    let group = rep.group;
    for k in levels(group, rep.n) {
        let z = central_matrix(rep, k)?;
        for i in level_generators(group, k) {
            let g = rep.generator(i);
            expect_equal(format!("z{k} commutes with {}", rep.generator_name(i)), &g.mul(&z), &z.mul(g))?;
        }
        let expected: Vec<RatFunc> = rep.basis.iter().map(|b| central_eigenvalue(group, b, k)).collect();
        expect_diagonal(format!("z{k}"), &expected, &z)?;
        let w = longest_matrix(rep, k);
        let expected: Vec<RatFunc> = rep.basis.iter().map(|b| longest_square_eigenvalue(group, b, k)).collect();
        expect_diagonal(format!("square of the level {k} longest element"), &expected, &w.mul(&w))?;
    }
    Ok(())
}
