use alloc::format;
use alloc::vec::Vec;

use crate::arith::{int, Rational, Scalar};
use crate::hecke::generator_parameter;
use crate::labels::{g2_path_weight, shape_constants, GroupType, LevelWeight};
use crate::matrix::Matrix;
use crate::rep::{apply_group_algebra, BasisVector, Representation, SeminormalRep};
use crate::weyl::{self, CentralFlavor, JmFlavor, Relation};

use super::{expect_diagonal, expect_equal, subject_of, Check, CheckReport, Witness};

/// Every presentation relation holds as a matrix identity. Quadratic
/// relations read `X^2 = (x - x^-1) X + 1`, which is `X^2 = 1` over the
/// rationals.
pub fn check_relations<S: Scalar>(rep: &Representation<S>) -> CheckReport {
    let check = if rep.hecke { Check::HeckeRelations } else { Check::Relations };
    CheckReport::from_result(check, subject_of(rep), relations(rep))
}

fn relations<S: Scalar>(rep: &Representation<S>) -> Result<(), Witness> {
    let pres = weyl::presentation(rep.group, rep.n)?;
    let d = rep.dim();
    for rel in &pres.relations {
        let (lhs, rhs) = match rel {
            Relation::Quadratic(i) => {
                let x = rep.generator(*i);
                let coef =
                    if rep.hecke { S::quadratic_coefficient(generator_parameter(rep.group, *i)) } else { S::zero() };
                (x.mul(x), x.scale(&coef).add(&Matrix::identity(d)))
            }
            Relation::Equal(a, b) => (rep.word_matrix(a), rep.word_matrix(b)),
        };
        expect_equal(rel.describe(rep.group, rep.hecke), &rhs, &lhs)?;
    }
    Ok(())
}

/// The constant of `flavor` at level `k` for the level-`k` shape of a basis
/// vector.
pub(crate) fn level_constant(group: GroupType, b: &BasisVector, k: usize, flavor: CentralFlavor) -> i64 {
    let w: LevelWeight = match b {
        BasisVector::Tableau(t) => shape_constants(group, &t.level_shape(k)),
        BasisVector::Path(p) => g2_path_weight(p)[k - 1],
    };
    let value = match flavor {
        CentralFlavor::Short => w.short,
        CentralFlavor::Long => w.long,
        CentralFlavor::Zero => w.zero,
    };
    value.unwrap_or_else(|| panic!("no {} constant at level {k}", flavor.name()))
}

/// Eigenvalue of a Jucys-Murphy element on a basis tableau.
pub(crate) fn jm_eigenvalue(group: GroupType, b: &BasisVector, k: usize, flavor: JmFlavor) -> i64 {
    let t = b.tableau().expect("Jucys-Murphy elements act on tableau bases");
    match (group, flavor) {
        (GroupType::A, _) => t.content(k),
        (_, JmFlavor::Short) => t.sign(k),
        (_, JmFlavor::One) => t.sign(1) * t.sign(k),
        _ => 2 * t.content(k),
    }
}

/// All Jucys-Murphy elements and central sums act diagonally with the
/// tabulated eigenvalues.
pub fn check_jm_spectra(rep: &SeminormalRep) -> CheckReport {
    CheckReport::from_result(Check::JmSpectra, subject_of(rep), jm_spectra(rep))
}

fn jm_spectra(rep: &SeminormalRep) -> Result<(), Witness> {
    let (group, n) = (rep.group, rep.n);
    for k in 1..=n {
        for &flavor in weyl::jm_flavors(group) {
            let m = apply_group_algebra(rep, &weyl::jm_element(group, n, k, flavor)?)?;
            let expected: Vec<Rational> = rep.basis.iter().map(|b| int(jm_eigenvalue(group, b, k, flavor))).collect();
            expect_diagonal(format!("jm level {k} {}", flavor.name()), &expected, &m)?;
        }
        for &flavor in weyl::central_flavors(group, k) {
            let m = apply_group_algebra(rep, &weyl::central_sum(group, n, k, flavor)?)?;
            let expected: Vec<Rational> = rep.basis.iter().map(|b| int(level_constant(group, b, k, flavor))).collect();
            expect_diagonal(format!("central sum level {k} {}", flavor.name()), &expected, &m)?;
        }
    }
    Ok(())
}

/// Central sums commute with the generators of their level.
pub(crate) fn weyl_centrality(rep: &SeminormalRep) -> Result<(), Witness> {
    let (group, n) = (rep.group, rep.n);
    for k in 1..=n {
        for &flavor in weyl::central_flavors(group, k) {
            let z = apply_group_algebra(rep, &weyl::central_sum(group, n, k, flavor)?)?;
            for i in super::level_generators(group, k) {
                let s = rep.generator(i);
                expect_equal(
                    format!("central sum level {k} {} commutes with {}", flavor.name(), rep.generator_name(i)),
                    &s.mul(&z),
                    &z.mul(s),
                )?;
            }
        }
    }
    Ok(())
}
