//! Seminormal matrix representations of the Weyl groups.
//!
//! Matrices act on column vectors: column `j` of a generator matrix is the
//! image of basis vector `j`. Basis vectors are standard tableaux in
//! canonical order (or, for G2, paths in the branching graph).

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, Rational, Scalar};
use crate::error::Error;
use crate::labels::{g2_paths, DLabel, G2Label, G2Path, GroupType, ShapeLabel, Sign};
use crate::matrix::Matrix;
use crate::tableau::{enum_standard_tableaux, Component, Partition, Shape, StandardTableau};
use crate::weyl::{self, GroupAlgebraElement, GroupElement};

/// A basis vector of a seminormal representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisVector {
    Tableau(StandardTableau),
    Path(G2Path),
}

impl BasisVector {
    pub fn tableau(&self) -> Option<&StandardTableau> {
        match self {
            BasisVector::Tableau(t) => Some(t),
            BasisVector::Path(_) => None,
        }
    }
}

/// A representation given by one matrix per generator.
#[derive(Clone, PartialEq)]
pub struct Representation<S> {
    pub group: GroupType,
    pub n: usize,
    pub label: ShapeLabel,
    pub basis: Vec<BasisVector>,
    /// `(generator index, matrix)` in generator order.
    pub generators: Vec<(usize, Matrix<S>)>,
    /// Generators are Hecke `T_i` rather than group elements `s_i`.
    pub hecke: bool,
}

impl<S: Scalar> core::fmt::Debug for Representation<S> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Representation")
            .field("group", &self.group)
            .field("label", &self.label)
            .field("dim", &self.dim())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Seminormal representation of a Weyl group over the rationals.
pub type SeminormalRep = Representation<Rational>;

impl<S: Scalar> Representation<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of generator index `i`.
    pub fn generator(&self, i: usize) -> &Matrix<S> {
        &self.generators.iter().find(|(j, _)| *j == i).unwrap_or_else(|| panic!("no generator {i}")).1
    }

    pub fn generator_name(&self, i: usize) -> alloc::string::String {
        weyl::generator_name(self.group, i, self.hecke)
    }

    /// Product of generator matrices along `word`.
    pub fn word_matrix(&self, word: &[usize]) -> Matrix<S> {
        Matrix::product(self.dim(), word.iter().map(|&i| self.generator(i)))
    }

    /// Basis tableaux, or `None` for G2.
    pub fn tableaux(&self) -> Option<Vec<&StandardTableau>> {
        self.basis.iter().map(BasisVector::tableau).collect()
    }
}

impl SeminormalRep {
    /// Matrix of a group element, via a reduced word.
    pub fn element_matrix(&self, g: &GroupElement) -> Result<Matrix<Rational>, Error> {
        check_membership(self.group, self.n, g)?;
        Ok(self.word_matrix(&weyl::reduced_word(self.group, g)))
    }

    /// Trace of a group element.
    pub fn character(&self, g: &GroupElement) -> Result<Rational, Error> {
        Ok(self.element_matrix(g)?.trace())
    }
}

fn check_membership(group: GroupType, n: usize, g: &GroupElement) -> Result<(), Error> {
    let ok = match g {
        GroupElement::Signed(p) => {
            p.n() == n
                && match group {
                    GroupType::A => p.negative_count() == 0,
                    GroupType::B => true,
                    GroupType::D => p.negative_count() % 2 == 0,
                    GroupType::G2 => false,
                }
        }
        GroupElement::Dihedral(_) => group == GroupType::G2,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::MixedGroups)
    }
}

/// `sum c * matrix(g)` over the terms of `x`.
pub fn apply_group_algebra(rep: &SeminormalRep, x: &GroupAlgebraElement) -> Result<Matrix<Rational>, Error> {
    let mut out = Matrix::zeros(rep.dim(), rep.dim());
    for (g, c) in x.terms() {
        out = out.add(&rep.element_matrix(g)?.scale(c));
    }
    Ok(out)
}

/// Trace of `g` in `rep`.
pub fn character(rep: &SeminormalRep, g: &GroupElement) -> Result<Rational, Error> {
    rep.character(g)
}

/// Matrices of every group element, found by breadth-first search over
/// right multiplication by generators. Fails when the group order exceeds
/// `cap`.
pub fn element_matrices<S: Scalar>(
    rep: &Representation<S>,
    cap: u128,
) -> Result<BTreeMap<GroupElement, Matrix<S>>, Error> {
    let size = weyl::group_order(rep.group, rep.n);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let gens: Vec<(GroupElement, &Matrix<S>)> =
        rep.generators.iter().map(|(i, m)| (weyl::generator(rep.group, rep.n, *i), m)).collect();
    let e = GroupElement::identity(rep.group, rep.n);
    let mut table = BTreeMap::new();
    table.insert(e.clone(), Matrix::identity(rep.dim()));
    let mut queue = VecDeque::from([e]);
    while let Some(g) = queue.pop_front() {
        for (s, m) in &gens {
            let h = g.compose(s)?;
            if !table.contains_key(&h) {
                let mh = table[&g].mul(m);
                table.insert(h.clone(), mh);
                queue.push_back(h);
            }
        }
    }
    Ok(table)
}

/// Builds the generator matrix of an adjacent transposition in a tableau
/// basis: `diag(L)` on `v_L` and `off(diag(L))` on `v_{s L}` when the swap
/// of `swap_index - 1` and `swap_index` is standard.
pub(crate) fn swap_generator<S: Scalar>(
    basis: &[StandardTableau],
    swap_index: usize,
    diag: impl Fn(&StandardTableau) -> S,
    off: impl Fn(&S) -> S,
) -> Matrix<S> {
    let d = basis.len();
    let mut m = Matrix::zeros(d, d);
    for (j, t) in basis.iter().enumerate() {
        let a = diag(t);
        if let Some(u) = t.adjacent_swap(swap_index).expect("index in range") {
            let i = basis.binary_search(&u).expect("swapped tableau in basis");
            m[(i, j)] = off(&a);
        }
        m[(j, j)] = a;
    }
    m
}

/// Diagonal generator matrix with entries `f(L)`.
pub(crate) fn diagonal_generator<S: Scalar>(basis: &[StandardTableau], f: impl Fn(&StandardTableau) -> S) -> Matrix<S> {
    Matrix::from_diagonal(&basis.iter().map(f).collect::<Vec<_>>())
}

/// Restricts a module on `(alpha, alpha)` to the span of
/// `v_L + sign * v_{sigma L}` over tableaux with 1 in the first component.
pub(crate) fn split_half<S: Scalar>(full: &[StandardTableau], x: &Matrix<S>, sign: Sign) -> Matrix<S> {
    let half: Vec<usize> = (0..full.len()).filter(|&j| full[j].cells()[0].component == Component::First).collect();
    let partner: Vec<usize> = half
        .iter()
        .map(|&j| full.binary_search(&full[j].sigma().expect("double shape")).expect("sigma stays in basis"))
        .collect();
    let s = S::from_int(sign.value());
    let mut m = Matrix::zeros(half.len(), half.len());
    for (b, &l) in half.iter().enumerate() {
        for (a, &mm) in half.iter().enumerate() {
            m[(a, b)] = x[(mm, l)].plus(&s.times(&x[(mm, partner[b])]));
        }
    }
    m
}

/// The half of the `(alpha, alpha)` basis spanning the split modules.
pub(crate) fn split_basis(full: &[StandardTableau]) -> Vec<StandardTableau> {
    full.iter().filter(|t| t.cells()[0].component == Component::First).cloned().collect()
}

fn tableau_basis(ts: &[StandardTableau]) -> Vec<BasisVector> {
    ts.iter().cloned().map(BasisVector::Tableau).collect()
}

fn content_gap(t: &StandardTableau, i: usize) -> i64 {
    t.content(i) - t.content(i - 1)
}

/// Diagonal coefficient of `s_i` on `v_L` in types A and B: zero when
/// `i - 1` and `i` lie in different components, otherwise the reciprocal of
/// the content gap.
fn weyl_diag(t: &StandardTableau, i: usize) -> Rational {
    if t.sign(i) != t.sign(i - 1) {
        Rational::zero()
    } else {
        Rational::new(1.into(), content_gap(t, i).into())
    }
}

/// Seminormal representation of `S_n` on the tableaux of `lambda`.
pub fn build_rep_a(lambda: &Partition) -> SeminormalRep {
    let n = lambda.size();
    let ts = enum_standard_tableaux(&Shape::single(lambda.clone()));
    let generators =
        (2..=n).map(|i| (i, swap_generator(&ts, i, |t| weyl_diag(t, i), |d| Rational::one() + d))).collect();
    Representation {
        group: GroupType::A,
        n,
        label: ShapeLabel::A(lambda.clone()),
        basis: tableau_basis(&ts),
        generators,
        hecke: false,
    }
}

fn type_b_matrices(ts: &[StandardTableau], n: usize) -> Vec<(usize, Matrix<Rational>)> {
    let mut gens = Vec::with_capacity(n);
    if n >= 1 {
        gens.push((1, diagonal_generator(ts, |t| int(t.sign(1)))));
    }
    for i in 2..=n {
        gens.push((i, swap_generator(ts, i, |t| weyl_diag(t, i), |d| Rational::one() + d)));
    }
    gens
}

/// Seminormal representation of the hyperoctahedral group on the tableaux
/// of `(alpha, beta)`.
pub fn build_rep_b(alpha: &Partition, beta: &Partition) -> SeminormalRep {
    let n = alpha.size() + beta.size();
    let ts = enum_standard_tableaux(&Shape::double(alpha.clone(), beta.clone()));
    Representation {
        group: GroupType::B,
        n,
        label: ShapeLabel::B(alpha.clone(), beta.clone()),
        basis: tableau_basis(&ts),
        generators: type_b_matrices(&ts, n),
        hecke: false,
    }
}

/// Type D generators on the full tableau basis of `(alpha, beta)`, equal
/// halves allowed. `st1 = s1 s2 s1` acts by the `s2` diagonal with a negated
/// off-diagonal.
fn type_d_matrices(ts: &[StandardTableau], n: usize) -> Vec<(usize, Matrix<Rational>)> {
    let mut gens = type_b_matrices(ts, n);
    gens[0] = (1, swap_generator(ts, 2, |t| weyl_diag(t, 2), |d| -(Rational::one() + d)));
    gens
}

/// Seminormal representation of `WD_n` for a type D label.
pub fn build_rep_d(label: &DLabel) -> Result<SeminormalRep, Error> {
    let (alpha, beta) = match label {
        DLabel::Pair(a, b) => (a, b),
        DLabel::Split(a, _) => (a, a),
    };
    let n = alpha.size() + beta.size();
    GroupType::D.check_rank(n)?;
    let ts = enum_standard_tableaux(&Shape::double(alpha.clone(), beta.clone()));
    let full = type_d_matrices(&ts, n);
    let (basis, generators) = match label {
        DLabel::Pair(a, b) if a == b => {
            return Err(Error::InvalidShape(alloc::format!("({a})|({b}) needs a + or - suffix")));
        }
        DLabel::Pair(..) => (tableau_basis(&ts), full),
        DLabel::Split(a, sign) => {
            if a.is_empty() {
                return Err(Error::InvalidShape(alloc::string::String::from("empty split label")));
            }
            let gens = full.iter().map(|(i, x)| (*i, split_half(&ts, x, *sign))).collect();
            (tableau_basis(&split_basis(&ts)), gens)
        }
    };
    Ok(Representation { group: GroupType::D, n, label: ShapeLabel::D(label.clone()), basis, generators, hecke: false })
}

/// Type D generators on the full basis of `(alpha, beta)`, with
/// `alpha = beta` allowed. The label records the ordered pair.
pub fn build_rep_d_ordered(alpha: &Partition, beta: &Partition) -> SeminormalRep {
    let n = alpha.size() + beta.size();
    let ts = enum_standard_tableaux(&Shape::double(alpha.clone(), beta.clone()));
    Representation {
        group: GroupType::D,
        n,
        label: ShapeLabel::D(DLabel::Pair(alpha.clone(), beta.clone())),
        basis: tableau_basis(&ts),
        generators: type_d_matrices(&ts, n),
        hecke: false,
    }
}

pub(crate) fn g2_basis(label: G2Label) -> Vec<BasisVector> {
    g2_paths().into_iter().filter(|p| p.label == label).map(BasisVector::Path).collect()
}

/// The tabulated representation of the dihedral group of order 12.
pub fn build_rep_g2(label: G2Label) -> SeminormalRep {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let m = |rows: [[Rational; 2]; 2]| Matrix::from_rows(rows.into_iter().map(Vec::from).collect());
    let one = |x: i64| Matrix::from_rows(alloc::vec![alloc::vec![int(x)]]);
    let (s1, s2) = match label {
        G2Label::Phi10 => (one(1), one(1)),
        G2Label::Phi16 => (one(-1), one(-1)),
        G2Label::Phi13p => (one(1), one(-1)),
        G2Label::Phi13pp => (one(-1), one(1)),
        G2Label::Phi21 => (Matrix::from_diagonal(&[int(1), int(-1)]), m([[r(1, 2), r(1, 2)], [r(3, 2), r(-1, 2)]])),
        G2Label::Phi22 => (Matrix::from_diagonal(&[int(1), int(-1)]), m([[r(-1, 2), r(3, 2)], [r(1, 2), r(1, 2)]])),
    };
    Representation {
        group: GroupType::G2,
        n: 2,
        label: ShapeLabel::G2(label),
        basis: g2_basis(label),
        generators: alloc::vec![(1, s1), (2, s2)],
        hecke: false,
    }
}

/// Builds the seminormal representation for any label.
pub fn build_rep(label: &ShapeLabel) -> Result<SeminormalRep, Error> {
    match label {
        ShapeLabel::A(p) => {
            GroupType::A.check_rank(p.size())?;
            Ok(build_rep_a(p))
        }
        ShapeLabel::B(a, b) => {
            GroupType::B.check_rank(a.size() + b.size())?;
            Ok(build_rep_b(a, b))
        }
        ShapeLabel::D(d) => build_rep_d(d),
        ShapeLabel::G2(l) => Ok(build_rep_g2(*l)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn two_one_matrices() {
        let rep = build_rep_a(&p(&[2, 1]));
        assert_eq!(rep.generator(2), &Matrix::from_diagonal(&[int(1), int(-1)]));
        let s3 = Matrix::from_rows(alloc::vec![alloc::vec![rat(-1, 2), rat(3, 2)], alloc::vec![rat(1, 2), rat(1, 2)],]);
        assert_eq!(rep.generator(3), &s3);
    }

    #[test]
    fn one_one_double_shape() {
        let rep = build_rep_b(&p(&[1]), &p(&[1]));
        assert_eq!(rep.generator(1), &Matrix::from_diagonal(&[int(1), int(-1)]));
        let s2 = Matrix::from_rows(alloc::vec![alloc::vec![int(0), int(1)], alloc::vec![int(1), int(0)]]);
        assert_eq!(rep.generator(2), &s2);
    }

    #[test]
    fn split_modules_have_half_dimension() {
        let plus = build_rep_d(&DLabel::Split(p(&[1]), Sign::Plus)).unwrap();
        let full = build_rep_d_ordered(&p(&[1]), &p(&[1]));
        assert_eq!(2 * plus.dim(), full.dim());
    }

    #[test]
    fn element_table_covers_group() {
        let rep = build_rep_g2(G2Label::Phi21);
        let table = element_matrices(&rep, 1000).unwrap();
        assert_eq!(table.len(), 12);
        let w0 = weyl::longest_element(GroupType::G2, 2).unwrap();
        assert_eq!(table[&w0], rep.element_matrix(&w0).unwrap());
    }
}
