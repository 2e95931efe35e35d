//! Executable checks with structured pass/fail reports.
//!
//! Every check returns a [`CheckReport`]. A failing report carries a
//! [`Witness`]: the relation, element or entry that broke, with both sides
//! printed as canonical strings.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::Scalar;
use crate::error::Error;
use crate::labels::{GroupType, ShapeLabel};
use crate::matrix::Matrix;
use crate::rep::Representation;

mod group;
mod hecke_checks;
mod identities;
mod projectors;
mod spectra;
mod suite;
mod type_d;

pub use group::{check_branching, check_completeness, check_orthogonality, check_weight_separation};
pub use hecke_checks::{check_centrality, check_jucys_specialization, check_murphy_spectra, check_specialization};
pub use identities::{
    check_g2_character_table, check_g2_printed_matrices, check_step2_identities, G2_CHARACTER_TABLE, G2_CLASS_WORDS,
};
pub use projectors::check_projectors;
pub use spectra::{check_jm_spectra, check_relations};
pub use suite::{plan_suite, run_suite, Caps, SuiteOptions};
pub use type_d::{check_d_embedding, check_d_isomorphism};

/// The named checks, in suite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Relations,
    HeckeRelations,
    JmSpectra,
    MurphySpectra,
    Completeness,
    Orthogonality,
    Branching,
    HeckeBranching,
    WeightSeparation,
    Projectors,
    Step2Identities,
    Specialization,
    JucysSpecialization,
    Centrality,
    DIsomorphism,
    DEmbedding,
    G2PrintedMatrices,
    G2CharacterTable,
}

impl Check {
    pub const ALL: [Check; 18] = [
        Check::Relations,
        Check::HeckeRelations,
        Check::JmSpectra,
        Check::MurphySpectra,
        Check::Completeness,
        Check::Orthogonality,
        Check::Branching,
        Check::HeckeBranching,
        Check::WeightSeparation,
        Check::Projectors,
        Check::Step2Identities,
        Check::Specialization,
        Check::JucysSpecialization,
        Check::Centrality,
        Check::DIsomorphism,
        Check::DEmbedding,
        Check::G2PrintedMatrices,
        Check::G2CharacterTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Relations => "relations",
            Check::HeckeRelations => "hecke_relations",
            Check::JmSpectra => "jm_spectra",
            Check::MurphySpectra => "murphy_spectra",
            Check::Completeness => "completeness",
            Check::Orthogonality => "orthogonality",
            Check::Branching => "branching",
            Check::HeckeBranching => "hecke_branching",
            Check::WeightSeparation => "weight_separation",
            Check::Projectors => "projectors",
            Check::Step2Identities => "step2_identities",
            Check::Specialization => "specialization",
            Check::JucysSpecialization => "jucys_specialization",
            Check::Centrality => "centrality",
            Check::DIsomorphism => "d_isomorphism",
            Check::DEmbedding => "d_embedding",
            Check::G2PrintedMatrices => "g2_printed_matrices",
            Check::G2CharacterTable => "g2_character_table",
        }
    }

    /// Checks that only enumerate tableaux and may run past the group caps.
    pub fn is_tableau_level(self) -> bool {
        matches!(self, Check::WeightSeparation)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::InvalidShape(alloc::format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// What a check was run on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subject {
    pub group: GroupType,
    pub n: usize,
    pub shape: Option<String>,
}

impl Subject {
    pub fn group(group: GroupType, n: usize) -> Self {
        Subject { group, n, shape: None }
    }

    pub fn label(label: &ShapeLabel) -> Self {
        Subject { group: label.group(), n: label.n(), shape: Some(label.to_string()) }
    }
}

/// The first counterexample of a failing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// The relation, element or identity that failed.
    pub item: String,
    /// First differing entry `(row, column)` when matrices are compared.
    pub entry: Option<(usize, usize)>,
    pub expected: Vec<Vec<String>>,
    pub actual: Vec<Vec<String>>,
}

impl Witness {
    pub fn message(item: impl Into<String>) -> Self {
        Witness { item: item.into(), entry: None, expected: Vec::new(), actual: Vec::new() }
    }

    pub fn values(item: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Witness {
            item: item.into(),
            entry: None,
            expected: alloc::vec![alloc::vec![expected.to_string()]],
            actual: alloc::vec![alloc::vec![actual.to_string()]],
        }
    }
}

impl From<Error> for Witness {
    fn from(e: Error) -> Self {
        Witness::message(e.to_string())
    }
}

impl From<crate::arith::ArithError> for Witness {
    fn from(e: crate::arith::ArithError) -> Self {
        Witness::message(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub subject: Subject,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn from_result(check: Check, subject: Subject, result: Result<(), Witness>) -> Self {
        match result {
            Ok(()) => CheckReport { check, subject, status: Status::Pass, witness: None },
            Err(w) => CheckReport { check, subject, status: Status::Fail, witness: Some(w) },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.status.name(), self.check, self.subject.group)?;
        if self.subject.group != GroupType::G2 {
            write!(f, " n={}", self.subject.n)?;
        }
        if let Some(s) = &self.subject.shape {
            write!(f, " {s}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ": {}", w.item)?;
        }
        Ok(())
    }
}

pub(crate) fn matrix_strings<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

/// `Ok` when equal, otherwise a witness naming `item` and the first
/// differing entry.
pub(crate) fn expect_equal<S: Scalar>(
    item: impl fmt::Display,
    expected: &Matrix<S>,
    actual: &Matrix<S>,
) -> Result<(), Witness> {
    if expected.rows() == actual.rows() && expected.cols() == actual.cols() {
        match expected.first_difference(actual) {
            None => return Ok(()),
            Some(entry) => {
                return Err(Witness {
                    item: item.to_string(),
                    entry: Some(entry),
                    expected: matrix_strings(expected),
                    actual: matrix_strings(actual),
                })
            }
        }
    }
    Err(Witness {
        item: alloc::format!("{item} (shape mismatch)"),
        entry: None,
        expected: matrix_strings(expected),
        actual: matrix_strings(actual),
    })
}

pub(crate) fn expect_diagonal<S: Scalar>(
    item: impl fmt::Display,
    expected: &[S],
    actual: &Matrix<S>,
) -> Result<(), Witness> {
    expect_equal(item, &Matrix::from_diagonal(expected), actual)
}

pub(crate) fn subject_of<S>(rep: &Representation<S>) -> Subject {
    Subject::label(&rep.label)
}

/// Generator indices of the level-`k` parabolic subalgebra.
pub(crate) fn level_generators(group: GroupType, k: usize) -> Vec<usize> {
    match group {
        GroupType::A => (2..=k).collect(),
        GroupType::B => (1..=k).collect(),
        GroupType::D if k >= 2 => (1..=k).collect(),
        GroupType::D => Vec::new(),
        GroupType::G2 => (1..=k).collect(),
    }
}

/// Levels carrying central elements: `2..=n` in type A, `1..=n` otherwise.
pub(crate) fn levels(group: GroupType, n: usize) -> core::ops::RangeInclusive<usize> {
    if group == GroupType::A {
        2..=n
    } else {
        1..=n
    }
}
