//! Weyl groups of types A, B, D and G2.
//!
//! Types A, B and D are realized as signed permutations of `1..=n`;
//! products compose right to left, `(a * b)(x) = a(b(x))`. G2 is the
//! dihedral group of order 12 generated by `s1`, `s2`.
//!
//! Generators use the classical indexing: type A has `s2..sn` with
//! `s_i = (i-1, i)`, type B has `s1 = (1, -1)` and `s2..sn`, type D has
//! `st1 = (1, -2)(2, -1)` and `st2..stn`. Words are sequences of these
//! indices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::Error;
use crate::labels::GroupType;

/// Default bound on the order of a group enumerated in full.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A signed permutation, stored as the images of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as i32).collect() }
    }

    /// Validates that `|images|` is a permutation of `1..=n`.
    pub fn from_images(images: Vec<i32>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidShape(format!("{images:?} is not a signed permutation")));
            }
            seen[a - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a nonzero point of `±{1..n}`.
    pub fn apply(&self, x: i32) -> i32 {
        let y = self.images[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &y) in self.images.iter().enumerate() {
            let x = i as i32 + 1;
            images[y.unsigned_abs() as usize - 1] = if y < 0 { -x } else { x };
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| y == i as i32 + 1)
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&y| y < 0).count()
    }

    /// The involution `(i, j)(-i, -j)`.
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// The involution `(i, -j)(-i, j)`.
    pub fn swap_negate(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images[i - 1] = -(j as i32);
        p.images[j - 1] = -(i as i32);
        p
    }

    /// The sign change `(i, -i)`.
    pub fn negate(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images[i - 1] = -(i as i32);
        p
    }
}

/// An element `r^rot * s1^flip` of the dihedral group of order 12, where
/// `r = s1 s2` has order 6 and `s1 r s1 = r^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    rot: u8,
    flip: bool,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self { rot: 0, flip: false };
    pub const S1: Self = Self { rot: 0, flip: true };
    pub const S2: Self = Self { rot: 5, flip: true };

    pub fn compose(&self, other: &Self) -> Self {
        let k = if self.flip { 6 + self.rot - other.rot } else { self.rot + other.rot };
        Self { rot: k % 6, flip: self.flip ^ other.flip }
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            Self { rot: (6 - self.rot) % 6, flip: false }
        }
    }

    /// All twelve elements.
    pub fn all() -> Vec<Self> {
        (0..6).flat_map(|rot| [false, true].map(|flip| Self { rot, flip })).collect()
    }
}

/// An element of one of the supported Weyl groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Signed(SignedPermutation),
    Dihedral(DihedralElement),
}

impl GroupElement {
    pub fn identity(group: GroupType, n: usize) -> Self {
        match group {
            GroupType::G2 => GroupElement::Dihedral(DihedralElement::IDENTITY),
            _ => GroupElement::Signed(SignedPermutation::identity(n)),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Signed(p) => p.is_identity(),
            GroupElement::Dihedral(d) => *d == DihedralElement::IDENTITY,
        }
    }

    /// `self * other`; fails when the elements live in different groups.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        match (self, other) {
            (GroupElement::Signed(a), GroupElement::Signed(b)) if a.n() == b.n() => {
                Ok(GroupElement::Signed(a.compose(b)))
            }
            (GroupElement::Dihedral(a), GroupElement::Dihedral(b)) => Ok(GroupElement::Dihedral(a.compose(b))),
            _ => Err(Error::MixedGroups),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::Signed(p) => GroupElement::Signed(p.inverse()),
            GroupElement::Dihedral(d) => GroupElement::Dihedral(d.inverse()),
        }
    }

    /// Order of the element.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self).expect("same group");
            k += 1;
        }
        k
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Signed(p) => write!(f, "{:?}", p.images()),
            GroupElement::Dihedral(d) => {
                let word = dihedral_word(d);
                if word.is_empty() {
                    return f.write_str("e");
                }
                for i in word {
                    write!(f, "s{i}")?;
                }
                Ok(())
            }
        }
    }
}

/// Classical generator indices of the group: `2..=n` for A, `1..=n` for B
/// and D, `1, 2` for G2.
pub fn generator_indices(group: GroupType, n: usize) -> Vec<usize> {
    match group {
        GroupType::A => (2..=n).collect(),
        GroupType::B | GroupType::D => (1..=n).collect(),
        GroupType::G2 => vec![1, 2],
    }
}

/// Name of generator `i` in the group (`s_i` or `st_i`) or its Hecke algebra
/// (`T_i` or `Tt_i`).
pub fn generator_name(group: GroupType, i: usize, hecke: bool) -> String {
    match (group, hecke) {
        (GroupType::D, false) => format!("st{i}"),
        (GroupType::D, true) => format!("Tt{i}"),
        (_, false) => format!("s{i}"),
        (_, true) => format!("T{i}"),
    }
}

/// Position of generator index `i` within [`generator_indices`].
pub fn generator_position(group: GroupType, i: usize) -> usize {
    match group {
        GroupType::A => i - 2,
        _ => i - 1,
    }
}

/// The generator with index `i`.
pub fn generator(group: GroupType, n: usize, i: usize) -> GroupElement {
    match group {
        GroupType::A => GroupElement::Signed(SignedPermutation::swap(n, i - 1, i)),
        GroupType::B if i == 1 => GroupElement::Signed(SignedPermutation::negate(n, 1)),
        GroupType::D if i == 1 => GroupElement::Signed(SignedPermutation::swap_negate(n, 1, 2)),
        GroupType::B | GroupType::D => GroupElement::Signed(SignedPermutation::swap(n, i - 1, i)),
        GroupType::G2 => GroupElement::Dihedral(if i == 1 { DihedralElement::S1 } else { DihedralElement::S2 }),
    }
}

/// Generators in index order.
pub fn generators(group: GroupType, n: usize) -> Result<Vec<GroupElement>, Error> {
    group.check_rank(n)?;
    Ok(generator_indices(group, n).into_iter().map(|i| generator(group, n, i)).collect())
}

/// Product of the generators along `word`, left to right.
pub fn word_element(group: GroupType, n: usize, word: &[usize]) -> GroupElement {
    word.iter()
        .fold(GroupElement::identity(group, n), |acc, &i| acc.compose(&generator(group, n, i)).expect("same group"))
}

/// Order of the group.
pub fn group_order(group: GroupType, n: usize) -> u128 {
    // Saturates at u128::MAX for ranks far past any cap.
    let fact = (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k));
    let signs = if n < 127 { 1u128 << n } else { u128::MAX };
    match group {
        GroupType::A => fact,
        GroupType::B => fact.saturating_mul(signs),
        GroupType::D => fact.saturating_mul(signs) / 2,
        GroupType::G2 => 12,
    }
}

/// Every element of the group, sorted. Fails if the order exceeds `cap`.
pub fn enumerate_group(group: GroupType, n: usize, cap: u128) -> Result<Vec<GroupElement>, Error> {
    group.check_rank(n)?;
    let size = group_order(group, n);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    if group == GroupType::G2 {
        return Ok(DihedralElement::all().into_iter().map(GroupElement::Dihedral).collect());
    }
    let mut out = Vec::with_capacity(size as usize);
    let signs: u32 = if group == GroupType::A { 1 } else { 1 << n };
    for perm in permutations(n) {
        for mask in 0..signs {
            if group == GroupType::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let images = perm
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { -(x as i32) } else { x as i32 })
                .collect();
            out.push(GroupElement::Signed(SignedPermutation { images }));
        }
    }
    out.sort();
    Ok(out)
}

/// Permutations of `1..=n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// The longest element: reversal in A, `-1` in B, `-1` (or `-1` twisted by
/// the sign change at 1 for odd `n`) in D, `(s1 s2)^3` in G2.
pub fn longest_element(group: GroupType, n: usize) -> Result<GroupElement, Error> {
    group.check_rank(n)?;
    Ok(match group {
        GroupType::A => GroupElement::Signed(SignedPermutation { images: (1..=n as i32).rev().collect() }),
        GroupType::B => GroupElement::Signed(SignedPermutation { images: (1..=n as i32).map(|x| -x).collect() }),
        GroupType::D => GroupElement::Signed(SignedPermutation {
            images: (1..=n as i32).map(|x| if x == 1 && n % 2 == 1 { 1 } else { -x }).collect(),
        }),
        GroupType::G2 => GroupElement::Dihedral(DihedralElement { rot: 3, flip: false }),
    })
}

/// A reduced word for `w`: right descents are stripped until the identity
/// is reached.
pub fn reduced_word(group: GroupType, w: &GroupElement) -> Vec<usize> {
    match w {
        GroupElement::Dihedral(d) => dihedral_word(d),
        GroupElement::Signed(p) => {
            let n = p.n();
            let mut cur = p.clone();
            let mut word = Vec::new();
            while !cur.is_identity() {
                let v = &cur.images;
                let i = generator_indices(group, n)
                    .into_iter()
                    .find(|&i| match (group, i) {
                        (GroupType::B, 1) => v[0] < 0,
                        (GroupType::D, 1) => v[0] + v[1] < 0,
                        _ => v[i - 2] > v[i - 1],
                    })
                    .expect("a nonidentity element has a right descent");
                let GroupElement::Signed(s) = generator(group, n, i) else { unreachable!() };
                cur = cur.compose(&s);
                word.push(i);
            }
            word.reverse();
            word
        }
    }
}

/// Shortest alternating word for a dihedral element, preferring the one
/// starting with `s1`.
fn dihedral_word(d: &DihedralElement) -> Vec<usize> {
    for len in 0..=6 {
        for start in [1usize, 2] {
            let word: Vec<usize> = (0..len).map(|k| if (k % 2 == 0) == (start == 1) { 1 } else { 2 }).collect();
            if word_element(GroupType::G2, 2, &word) == GroupElement::Dihedral(*d) {
                return word;
            }
        }
    }
    unreachable!("every dihedral element has a word of length at most 6")
}

/// A defining relation between generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// The two words are equal.
    Equal(Vec<usize>, Vec<usize>),
    /// The quadratic relation of generator `i`: `s_i^2 = 1` in the group,
    /// `T_i^2 = (x - x^-1) T_i + 1` in the Hecke algebra.
    Quadratic(usize),
}

impl Relation {
    pub fn describe(&self, group: GroupType, hecke: bool) -> String {
        let word = |w: &[usize]| -> String {
            if w.is_empty() {
                return String::from("1");
            }
            w.iter().map(|&i| generator_name(group, i, hecke)).collect::<Vec<_>>().join("*")
        };
        match self {
            Relation::Equal(a, b) => format!("{} = {}", word(a), word(b)),
            Relation::Quadratic(i) => {
                let g = generator_name(group, *i, hecke);
                if hecke {
                    format!("{g}^2 = (x - x^-1)*{g} + 1")
                } else {
                    format!("{g}^2 = 1")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub group: GroupType,
    pub n: usize,
    pub generators: Vec<usize>,
    pub relations: Vec<Relation>,
}

/// The Coxeter presentation: quadratic relations first, then braid and
/// commutation relations for each pair `i < j`.
pub fn presentation(group: GroupType, n: usize) -> Result<Presentation, Error> {
    group.check_rank(n)?;
    let gens = generator_indices(group, n);
    let mut relations: Vec<Relation> = gens.iter().map(|&i| Relation::Quadratic(i)).collect();
    for (a, &i) in gens.iter().enumerate() {
        for &j in &gens[a + 1..] {
            let m = coxeter_exponent(group, i, j);
            let alt = |x: usize, y: usize| (0..m).map(|k| if k % 2 == 0 { x } else { y }).collect::<Vec<_>>();
            relations.push(Relation::Equal(alt(i, j), alt(j, i)));
        }
    }
    Ok(Presentation { group, n, generators: gens, relations })
}

/// Order of `s_i s_j` for `i < j`.
fn coxeter_exponent(group: GroupType, i: usize, j: usize) -> usize {
    match (group, i) {
        (GroupType::G2, _) => 6,
        (GroupType::B, 1) if j == 2 => 4,
        (GroupType::B, 1) => 2,
        (GroupType::D, 1) if j == 3 => 3,
        (GroupType::D, 1) => 2,
        _ if j == i + 1 => 3,
        _ => 2,
    }
}

/// A formal sum of group elements with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<GroupElement, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_element(g: GroupElement) -> Self {
        Self::from_terms([(g, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElement, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in iter {
            out.add_term(g, c);
        }
        out
    }

    /// Sum of the given elements, each with coefficient 1.
    pub fn sum_of<I: IntoIterator<Item = GroupElement>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|g| (g, Rational::one())))
    }

    fn add_term(&mut self, g: GroupElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElement) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, v)| (g.clone(), v * c)))
    }

    /// Product of formal sums, expanded term by term.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h)?, a * b);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{g}")?;
        }
        Ok(())
    }
}

/// Flavors of Jucys-Murphy elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JmFlavor {
    /// Long-root transpositions ending at `k`.
    Long,
    /// The sign change `(k, -k)`.
    Short,
    /// `(1, -1)(k, -k)`, type D.
    One,
    /// Type D long flavor; same element as in type B.
    Two,
}

impl JmFlavor {
    pub fn name(self) -> &'static str {
        match self {
            JmFlavor::Long => "long",
            JmFlavor::Short => "short",
            JmFlavor::One => "one",
            JmFlavor::Two => "two",
        }
    }
}

/// Flavors of reflection-class sums at a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CentralFlavor {
    Short,
    Long,
    Zero,
}

impl CentralFlavor {
    pub fn name(self) -> &'static str {
        match self {
            CentralFlavor::Short => "short",
            CentralFlavor::Long => "long",
            CentralFlavor::Zero => "zero",
        }
    }
}

fn check_level(group: GroupType, n: usize, k: usize) -> Result<(), Error> {
    group.check_rank(n)?;
    if k == 0 || k > n {
        return Err(Error::OutOfRange { index: k, max: n });
    }
    Ok(())
}

fn signed(p: SignedPermutation) -> GroupElement {
    GroupElement::Signed(p)
}

/// The long reflections `(i, j)(-i, -j)` and, outside type A,
/// `(i, -j)(-i, j)` for `i < k`.
fn long_reflections_to(group: GroupType, n: usize, k: usize) -> Vec<GroupElement> {
    let mut out = Vec::new();
    for i in 1..k {
        out.push(signed(SignedPermutation::swap(n, i, k)));
        if group != GroupType::A {
            out.push(signed(SignedPermutation::swap_negate(n, i, k)));
        }
    }
    out
}

/// The Jucys-Murphy element of the given flavor at level `k` in the group
/// of rank `n`.
///
/// A long: `sum_{i<k} (i, k)`. B short: `(k, -k)`. B long and D two: the
/// long reflections pairing `k` with a smaller index. D one:
/// `(1, -1)(k, -k)`.
pub fn jm_element(group: GroupType, n: usize, k: usize, flavor: JmFlavor) -> Result<GroupAlgebraElement, Error> {
    check_level(group, n, k)?;
    let elements = match (group, flavor) {
        (GroupType::A, JmFlavor::Long) | (GroupType::B, JmFlavor::Long) | (GroupType::D, JmFlavor::Two) => {
            long_reflections_to(group, n, k)
        }
        (GroupType::B, JmFlavor::Short) => vec![signed(SignedPermutation::negate(n, k))],
        (GroupType::D, JmFlavor::One) => {
            let e = if k == 1 {
                SignedPermutation::identity(n)
            } else {
                SignedPermutation::negate(n, 1).compose(&SignedPermutation::negate(n, k))
            };
            vec![signed(e)]
        }
        _ => return Err(Error::InvalidFlavor { group: group.name(), flavor: flavor.name() }),
    };
    Ok(GroupAlgebraElement::sum_of(elements))
}

/// The reflection-class sum (or longest element) of the given flavor for the
/// level-`k` subgroup.
///
/// A: long only. B: short `sum (i, -i)`, long, zero `w_{k,0}`. D: long
/// only. G2: level 1 has zero `= s1`; level 2 has all three.
pub fn central_sum(group: GroupType, n: usize, k: usize, flavor: CentralFlavor) -> Result<GroupAlgebraElement, Error> {
    check_level(group, n, k)?;
    let bad = || Error::InvalidFlavor { group: group.name(), flavor: flavor.name() };
    let elements: Vec<GroupElement> = match (group, flavor) {
        (GroupType::A, CentralFlavor::Long)
        | (GroupType::B, CentralFlavor::Long)
        | (GroupType::D, CentralFlavor::Long) => (2..=k).flat_map(|j| long_reflections_to(group, n, j)).collect(),
        (GroupType::B, CentralFlavor::Short) => (1..=k).map(|i| signed(SignedPermutation::negate(n, i))).collect(),
        (GroupType::B, CentralFlavor::Zero) => {
            let images = (1..=n as i32).map(|x| if x as usize <= k { -x } else { x }).collect();
            vec![signed(SignedPermutation { images })]
        }
        (GroupType::G2, flavor) => {
            let words: &[&[usize]] = match (k, flavor) {
                (1, CentralFlavor::Zero) => &[&[1]],
                (2, CentralFlavor::Short) => &[&[1], &[2, 1, 2], &[1, 2, 1, 2, 1]],
                (2, CentralFlavor::Long) => &[&[2], &[1, 2, 1], &[2, 1, 2, 1, 2]],
                (2, CentralFlavor::Zero) => &[&[1, 2, 1, 2, 1, 2]],
                _ => return Err(bad()),
            };
            words.iter().map(|w| word_element(GroupType::G2, 2, w)).collect()
        }
        _ => return Err(bad()),
    };
    Ok(GroupAlgebraElement::sum_of(elements))
}

/// The flavors of [`central_sum`] defined at level `k`.
pub fn central_flavors(group: GroupType, k: usize) -> &'static [CentralFlavor] {
    match (group, k) {
        (GroupType::A, _) | (GroupType::D, _) => &[CentralFlavor::Long],
        (GroupType::B, _) => &[CentralFlavor::Short, CentralFlavor::Long, CentralFlavor::Zero],
        (GroupType::G2, 1) => &[CentralFlavor::Zero],
        (GroupType::G2, _) => &[CentralFlavor::Short, CentralFlavor::Long, CentralFlavor::Zero],
    }
}

/// The flavors of [`jm_element`] defined for the group type.
pub fn jm_flavors(group: GroupType) -> &'static [JmFlavor] {
    match group {
        GroupType::A => &[JmFlavor::Long],
        GroupType::B => &[JmFlavor::Short, JmFlavor::Long],
        GroupType::D => &[JmFlavor::One, JmFlavor::Two],
        GroupType::G2 => &[],
    }
}
