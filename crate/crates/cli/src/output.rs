//! JSON shapes of the command outputs, one compact document per line. Field
//! order is declaration order, so serialized output is byte-stable.

use serde::Serialize;

use seminormal::arith::Scalar;
use seminormal::labels::{DLabel, ShapeLabel, Sign};
use seminormal::matrix::Matrix;
use seminormal::rep::{BasisVector, Representation};
use seminormal::tableau::{Component, Partition, Shape, StandardTableau};
use seminormal::verify::{CheckReport, Witness};

#[derive(Serialize)]
pub struct ShapeJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<&'static str>,
}

fn rows(p: &Partition) -> Vec<usize> {
    p.rows().to_vec()
}

impl ShapeJson {
    fn empty() -> Self {
        ShapeJson { alpha: None, beta: None, sign: None, label: None }
    }

    pub fn of_label(label: &ShapeLabel) -> Self {
        match label {
            ShapeLabel::A(p) => ShapeJson { alpha: Some(rows(p)), ..Self::empty() },
            ShapeLabel::B(a, b) | ShapeLabel::D(DLabel::Pair(a, b)) => {
                ShapeJson { alpha: Some(rows(a)), beta: Some(rows(b)), ..Self::empty() }
            }
            ShapeLabel::D(DLabel::Split(a, sign)) => ShapeJson {
                alpha: Some(rows(a)),
                beta: Some(rows(a)),
                sign: Some(if *sign == Sign::Plus { "+" } else { "-" }),
                ..Self::empty()
            },
            ShapeLabel::G2(l) => ShapeJson { label: Some(l.name()), ..Self::empty() },
        }
    }

    fn of_shape(shape: &Shape) -> Self {
        ShapeJson { alpha: Some(rows(shape.first())), beta: shape.second().map(rows), ..Self::empty() }
    }
}

/// A tableau as `{"shape", "rows_alpha", "rows_beta"?}` or a G2 path as
/// `{"level1", "label"}`.
#[derive(Serialize)]
#[serde(untagged)]
pub enum BasisJson {
    Tableau {
        shape: ShapeJson,
        rows_alpha: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        rows_beta: Option<Vec<Vec<usize>>>,
    },
    Path {
        level1: String,
        label: &'static str,
    },
}

impl BasisJson {
    pub fn of_tableau(t: &StandardTableau) -> Self {
        let double = t.shape().is_double();
        BasisJson::Tableau {
            shape: ShapeJson::of_shape(t.shape()),
            rows_alpha: t.rows(Component::First),
            rows_beta: double.then(|| t.rows(Component::Second)),
        }
    }

    pub fn of_vector(b: &BasisVector) -> Self {
        match b {
            BasisVector::Tableau(t) => Self::of_tableau(t),
            BasisVector::Path(p) => BasisJson::Path { level1: p.level1.partition().to_string(), label: p.label.name() },
        }
    }
}

#[derive(Serialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

pub fn matrix_strings<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

/// `{"group", "n", "shape", "basis", "generators"}`; Murphy listings use the
/// key `operators` for the same entries.
#[derive(Serialize)]
pub struct RepJson {
    pub group: &'static str,
    pub n: usize,
    pub shape: ShapeJson,
    pub basis: Vec<BasisJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<NamedMatrix>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operators: Option<Vec<NamedMatrix>>,
}

impl RepJson {
    pub fn header<S: Scalar>(rep: &Representation<S>) -> Self {
        RepJson {
            group: rep.group.name(),
            n: rep.n,
            shape: ShapeJson::of_label(&rep.label),
            basis: rep.basis.iter().map(BasisJson::of_vector).collect(),
            generators: None,
            operators: None,
        }
    }

    pub fn with_generators<S: Scalar>(rep: &Representation<S>) -> Self {
        let gens = rep
            .generators
            .iter()
            .map(|(i, m)| NamedMatrix { name: rep.generator_name(*i), matrix: matrix_strings(m) })
            .collect();
        RepJson { generators: Some(gens), ..Self::header(rep) }
    }
}

#[derive(Serialize)]
pub struct LevelJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub short: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub long: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero: Option<i64>,
}

/// One row of the tableau listing.
#[derive(Serialize)]
pub struct TableauEntry {
    pub index: usize,
    #[serde(flatten)]
    pub basis: BasisJson,
    pub contents: Vec<i64>,
    pub signs: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative_signs: Option<Vec<i64>>,
    pub weight: Vec<LevelJson>,
}

#[derive(Serialize)]
pub struct TableauListing {
    pub group: &'static str,
    pub n: usize,
    pub shape: ShapeJson,
    pub tableaux: Vec<TableauEntry>,
}

#[derive(Serialize)]
pub struct ElementJson {
    pub element: String,
    pub word: Vec<usize>,
}

#[derive(Serialize)]
pub struct CharacterJson {
    pub shape: String,
    pub values: Vec<String>,
}

#[derive(Serialize)]
pub struct CharacterTableJson {
    pub group: &'static str,
    pub n: usize,
    pub elements: Vec<ElementJson>,
    pub characters: Vec<CharacterJson>,
}

#[derive(Serialize)]
pub struct SubjectJson {
    pub group: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub item: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub actual: Vec<Vec<String>>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            item: w.item.clone(),
            entry: w.entry.map(|(r, c)| [r, c]),
            expected: w.expected.clone(),
            actual: w.actual.clone(),
        }
    }
}

/// `{"check", "subject", "status", "witness"?}`.
#[derive(Serialize)]
pub struct ReportJson {
    pub check: &'static str,
    pub subject: SubjectJson,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl From<&CheckReport> for ReportJson {
    fn from(r: &CheckReport) -> Self {
        ReportJson {
            check: r.check.name(),
            subject: SubjectJson { group: r.subject.group.name(), n: r.subject.n, shape: r.subject.shape.clone() },
            status: r.status.name(),
            witness: r.witness.as_ref().map(WitnessJson::from),
        }
    }
}
