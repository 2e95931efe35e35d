use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, Rational, Scalar};
use crate::error::Error;
use crate::labels::{enum_shapes, g2_path_weight, g2_paths, tableau_weight, GroupType, LevelWeight, ShapeLabel};
use crate::matrix::Matrix;
use crate::rep::{build_rep, element_matrices, BasisVector, Representation};
use crate::tableau::{enum_standard_tableaux, Shape, StandardTableau};
use crate::weyl::{self, GroupElement};

use super::{expect_equal, subject_of, Check, CheckReport, Subject, Witness};

/// `sum_lambda d_lambda^2 = |W|` over the labels of rank `n`.
pub fn check_completeness(group: GroupType, n: usize) -> Result<CheckReport, Error> {
    let labels = enum_shapes(group, n)?;
    let mut total: u128 = 0;
    for label in &labels {
        let d = build_rep(label)?.dim() as u128;
        total += d * d;
    }
    let order = weyl::group_order(group, n);
    let result = if total == order { Ok(()) } else { Err(Witness::values("sum of squared dimensions", order, total)) };
    Ok(CheckReport::from_result(Check::Completeness, Subject::group(group, n), result))
}

/// Characters of every element, from a breadth-first table of matrices.
fn character_table(rep: &Representation<Rational>, cap: u128) -> Result<BTreeMap<GroupElement, Rational>, Error> {
    Ok(element_matrices(rep, cap)?.into_iter().map(|(g, m)| (g, m.trace())).collect())
}

/// `(1/|W|) sum_w chi_lambda(w) chi_mu(w^-1) = delta` over the full group.
pub fn check_orthogonality(group: GroupType, n: usize, cap: u128) -> Result<CheckReport, Error> {
    let labels = enum_shapes(group, n)?;
    let mut tables = Vec::with_capacity(labels.len());
    for label in &labels {
        tables.push(character_table(&build_rep(label)?, cap)?);
    }
    let order = int(weyl::group_order(group, n) as i64);
    let inverses: Vec<(GroupElement, GroupElement)> = tables[0].keys().map(|g| (g.clone(), g.inverse())).collect();
    let mut result = Ok(());
    'outer: for (i, a) in tables.iter().enumerate() {
        for (j, b) in tables.iter().enumerate().skip(i) {
            let mut sum = Rational::zero();
            for (g, ginv) in &inverses {
                sum += &a[g] * &b[ginv];
            }
            let ip = sum / &order;
            let expected = if i == j { Rational::one() } else { Rational::zero() };
            if ip != expected {
                result = Err(Witness::values(format!("<chi_{}, chi_{}>", labels[i], labels[j]), expected, ip));
                break 'outer;
            }
        }
    }
    Ok(CheckReport::from_result(Check::Orthogonality, Subject::group(group, n), result))
}

/// Restricting to the rank `n - 1` subalgebra block-diagonalizes the
/// representation along the level-`(n - 1)` shapes of the basis (blocks are
/// index sets, not necessarily contiguous in canonical order), and each
/// block is verbatim the smaller seminormal representation.
///
/// `build` produces the smaller representation of a Ferrers shape; `s2` gives
/// the `1 x 1` matrix of the first G2 generator on a path's level-one label.
pub fn check_branching<S: Scalar>(
    rep: &Representation<S>,
    build: impl Fn(&Shape) -> Representation<S>,
    s2: impl Fn(i64) -> S,
) -> CheckReport {
    let check = if rep.hecke { Check::HeckeBranching } else { Check::Branching };
    CheckReport::from_result(check, subject_of(rep), branching(rep, build, s2))
}

fn branching<S: Scalar>(
    rep: &Representation<S>,
    build: impl Fn(&Shape) -> Representation<S>,
    s2: impl Fn(i64) -> S,
) -> Result<(), Witness> {
    let n = rep.n;
    if n < 2 {
        return Ok(());
    }
    if let crate::labels::ShapeLabel::D(crate::labels::DLabel::Split(..)) = rep.label {
        return Err(Witness::message("split type D modules restrict in a twisted basis"));
    }
    let sub_gens: Vec<usize> = match rep.group {
        GroupType::G2 => alloc::vec![1],
        GroupType::D if n == 2 => Vec::new(),
        group => weyl::generator_indices(group, n - 1),
    };
    // Blocks keyed by the level-(n-1) vertex, in first-appearance order.
    let mut keys: Vec<BasisKey> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (idx, b) in rep.basis.iter().enumerate() {
        let key = match b {
            BasisVector::Tableau(t) => BasisKey::Shape(t.level_shape(n - 1)),
            BasisVector::Path(p) => BasisKey::Sign(p.level1.sign()),
        };
        match keys.iter().position(|k| *k == key) {
            Some(pos) => members[pos].push(idx),
            None => {
                keys.push(key);
                members.push(alloc::vec![idx]);
            }
        }
    }
    for &i in &sub_gens {
        let g = rep.generator(i);
        for (a, rows) in members.iter().enumerate() {
            for (b, cols) in members.iter().enumerate() {
                let block = g.submatrix(rows, cols);
                let expected = if a != b {
                    Matrix::zeros(rows.len(), cols.len())
                } else {
                    match &keys[a] {
                        BasisKey::Shape(shape) => {
                            let small = build(shape);
                            let restricted: Vec<StandardTableau> = rows
                                .iter()
                                .map(|&r| rep.basis[r].tableau().expect("tableau basis").restrict(n - 1))
                                .collect();
                            let small_basis: Vec<StandardTableau> =
                                small.basis.iter().map(|v| v.tableau().expect("tableau basis").clone()).collect();
                            if restricted != small_basis {
                                return Err(Witness::message(format!(
                                    "block {shape} basis differs from the smaller module"
                                )));
                            }
                            small.generator(i).clone()
                        }
                        BasisKey::Sign(s) => Matrix::from_diagonal(&[s2(*s)]),
                    }
                };
                expect_equal(format!("{} block ({a}, {b})", rep.generator_name(i)), &expected, &block)?;
            }
        }
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq)]
enum BasisKey {
    Shape(Shape),
    Sign(i64),
}

/// Paths are determined by their weights (types A, B and G2); in type D the
/// weight fibers are exactly the orbits `{L, sigma L}`.
pub fn check_weight_separation(group: GroupType, n: usize) -> Result<CheckReport, Error> {
    group.check_rank(n)?;
    let result = match group {
        GroupType::G2 => {
            let mut seen: BTreeMap<[LevelWeight; 2], _> = BTreeMap::new();
            let mut r = Ok(());
            for p in g2_paths() {
                if let Some(other) = seen.insert(g2_path_weight(&p), p) {
                    r = Err(Witness::message(format!("paths {:?} and {:?} share a weight", other, p)));
                    break;
                }
            }
            r
        }
        GroupType::A | GroupType::B => {
            let fibers = weight_fibers(group, n, |t| tableau_weight(t, group))?;
            match fibers.values().find(|f| f.len() > 1) {
                None => Ok(()),
                Some(f) => Err(Witness::message(format!("tableaux {} and {} share a weight", f[0], f[1]))),
            }
        }
        GroupType::D => {
            let fibers = weight_fibers(group, n, |t| (t.contents(), t.relative_signs()))?;
            let mut r = Ok(());
            for f in fibers.values() {
                let ok = f.len() == 2 && f[0].sigma()? == f[1];
                if !ok {
                    let list: Vec<alloc::string::String> = f.iter().map(|t| format!("{t}")).collect();
                    r = Err(Witness::message(format!("weight fiber {{{}}} is not a sigma orbit", list.join(", "))));
                    break;
                }
            }
            r
        }
    };
    Ok(CheckReport::from_result(Check::WeightSeparation, Subject::group(group, n), result))
}

/// Tableaux of rank `n` grouped by `weight`. Type D reads all ordered
/// double partitions.
fn weight_fibers<K: Ord>(
    group: GroupType,
    n: usize,
    weight: impl Fn(&StandardTableau) -> K,
) -> Result<BTreeMap<K, Vec<StandardTableau>>, Error> {
    let source = if group == GroupType::D { GroupType::B } else { group };
    let mut fibers: BTreeMap<K, Vec<StandardTableau>> = BTreeMap::new();
    for label in enum_shapes(source, n)? {
        let shape = label.shape().expect("tableau label");
        for t in enum_standard_tableaux(&shape) {
            fibers.entry(weight(&t)).or_default().push(t);
        }
    }
    for f in fibers.values_mut() {
        f.sort();
    }
    Ok(fibers)
}

pub(crate) fn is_split(label: &ShapeLabel) -> bool {
    matches!(label, ShapeLabel::D(crate::labels::DLabel::Split(..)))
}
