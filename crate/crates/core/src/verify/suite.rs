use alloc::vec::Vec;

use crate::arith::{int, RatFunc};
use crate::error::Error;
use crate::hecke::{build_hecke, build_hecke_a, build_hecke_b, build_hecke_d_ordered, HeckeRep};
use crate::labels::{enum_shapes, GroupType, ShapeLabel};
use crate::rep::{build_rep, build_rep_a, build_rep_b, build_rep_d_ordered, SeminormalRep};
use crate::tableau::Shape;
use crate::weyl::DEFAULT_ENUMERATION_CAP;

use super::group::is_split;
use super::{
    check_branching, check_centrality, check_completeness, check_d_embedding, check_d_isomorphism,
    check_g2_character_table, check_g2_printed_matrices, check_jm_spectra, check_jucys_specialization,
    check_murphy_spectra, check_orthogonality, check_projectors, check_relations, check_specialization,
    check_step2_identities, check_weight_separation, Check, CheckReport,
};

/// Largest ranks the suite accepts. Group-level caps bound every check that
/// builds representations or enumerates group elements; tableau-level caps
/// bound checks that only enumerate tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub tableau_a: usize,
    pub tableau_b: usize,
    pub tableau_d: usize,
    /// Largest group order enumerated element by element.
    pub enumeration: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { a: 6, b: 4, d: 4, tableau_a: 8, tableau_b: 5, tableau_d: 5, enumeration: DEFAULT_ENUMERATION_CAP }
    }
}

impl Caps {
    pub fn group_cap(&self, group: GroupType) -> usize {
        match group {
            GroupType::A => self.a,
            GroupType::B => self.b,
            GroupType::D => self.d,
            GroupType::G2 => 2,
        }
    }

    pub fn tableau_cap(&self, group: GroupType) -> usize {
        match group {
            GroupType::A => self.tableau_a,
            GroupType::B => self.tableau_b,
            GroupType::D => self.tableau_d,
            GroupType::G2 => 2,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Checks to run; `None` runs every applicable check.
    pub checks: Option<Vec<Check>>,
    pub caps: Caps,
}

fn applies(check: Check, group: GroupType) -> bool {
    match check {
        Check::DIsomorphism | Check::DEmbedding => group == GroupType::D,
        Check::G2PrintedMatrices | Check::G2CharacterTable => group == GroupType::G2,
        // Type D central sums do not separate the basis.
        Check::Projectors => group != GroupType::D,
        _ => true,
    }
}

fn needs_hecke(check: Check) -> bool {
    matches!(
        check,
        Check::HeckeRelations
            | Check::MurphySpectra
            | Check::HeckeBranching
            | Check::Specialization
            | Check::JucysSpecialization
            | Check::Centrality
    )
}

fn weyl_block(group: GroupType, shape: &Shape) -> SeminormalRep {
    match (group, shape.second()) {
        (GroupType::D, Some(b)) => build_rep_d_ordered(shape.first(), b),
        (_, Some(b)) => build_rep_b(shape.first(), b),
        (_, None) => build_rep_a(shape.first()),
    }
}

fn hecke_block(group: GroupType, shape: &Shape) -> HeckeRep {
    match (group, shape.second()) {
        (GroupType::D, Some(b)) => build_hecke_d_ordered(shape.first(), b),
        (_, Some(b)) => build_hecke_b(shape.first(), b),
        (_, None) => build_hecke_a(shape.first()),
    }
}

fn hecke_s1(sign: i64) -> RatFunc {
    if sign > 0 {
        RatFunc::p()
    } else {
        RatFunc::monomial(int(-1), -1, 0)
    }
}

/// The selected checks that apply to `(group, n)`, in suite order, after
/// validating the rank against the caps.
pub fn plan_suite(group: GroupType, n: usize, options: &SuiteOptions) -> Result<Vec<Check>, Error> {
    group.check_rank(n)?;
    let checks: Vec<Check> = Check::ALL
        .into_iter()
        .filter(|c| options.checks.as_ref().is_none_or(|list| list.contains(c)))
        .filter(|c| applies(*c, group))
        .collect();
    let caps = &options.caps;
    for c in &checks {
        let cap = if c.is_tableau_level() { caps.tableau_cap(group) } else { caps.group_cap(group) };
        if n > cap {
            return Err(Error::RankCapExceeded { group: group.name(), n, cap });
        }
    }
    Ok(checks)
}

/// Runs every selected check that applies to `(group, n)` over all labels
/// of rank `n`. Reports come in check order, then label order.
pub fn run_suite(group: GroupType, n: usize, options: &SuiteOptions) -> Result<Vec<CheckReport>, Error> {
    let checks = plan_suite(group, n, options)?;
    let caps = &options.caps;
    let labels: Vec<ShapeLabel> = enum_shapes(group, n)?;
    let per_label = checks.iter().any(|c| !c.is_tableau_level());
    let weyl: Vec<SeminormalRep> =
        if per_label { labels.iter().map(build_rep).collect::<Result<_, _>>()? } else { Vec::new() };
    let hecke: Vec<HeckeRep> = if checks.iter().any(|c| needs_hecke(*c)) {
        labels.iter().map(build_hecke).collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for &check in &checks {
        match check {
            Check::Relations => out.extend(weyl.iter().map(check_relations)),
            Check::HeckeRelations => out.extend(hecke.iter().map(check_relations)),
            Check::JmSpectra => out.extend(weyl.iter().map(check_jm_spectra)),
            Check::MurphySpectra => out.extend(hecke.iter().map(check_murphy_spectra)),
            Check::Completeness => out.push(check_completeness(group, n)?),
            Check::Orthogonality => out.push(check_orthogonality(group, n, caps.enumeration)?),
            Check::Branching => {
                for rep in weyl.iter().filter(|r| !is_split(&r.label)) {
                    out.push(check_branching(rep, |s| weyl_block(group, s), int));
                }
            }
            Check::HeckeBranching => {
                for rep in hecke.iter().filter(|r| !is_split(&r.label)) {
                    out.push(check_branching(rep, |s| hecke_block(group, s), hecke_s1));
                }
            }
            Check::WeightSeparation => out.push(check_weight_separation(group, n)?),
            Check::Projectors => out.extend(weyl.iter().map(check_projectors)),
            Check::Step2Identities => out.push(check_step2_identities(group, n)?),
            Check::Specialization => {
                out.extend(hecke.iter().zip(&weyl).map(|(h, w)| check_specialization(h, w)));
            }
            Check::JucysSpecialization => {
                out.extend(hecke.iter().zip(&weyl).map(|(h, w)| check_jucys_specialization(h, w)));
            }
            Check::Centrality => out.extend(hecke.iter().zip(&weyl).map(|(h, w)| check_centrality(h, w))),
            Check::DIsomorphism => {
                for label in &labels {
                    out.push(check_d_isomorphism(label, caps.enumeration)?);
                }
            }
            Check::DEmbedding => {
                for label in &labels {
                    out.push(check_d_embedding(label)?);
                }
            }
            Check::G2PrintedMatrices => out.push(check_g2_printed_matrices()),
            Check::G2CharacterTable => out.push(check_g2_character_table()),
        }
    }
    Ok(out)
}
