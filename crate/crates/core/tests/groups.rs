//! Group arithmetic, distinguished elements and characters against
//! independent oracles.

use std::collections::BTreeSet;

use seminormal::arith::{int, Rational};
use seminormal::labels::{enum_shapes, GroupType, ShapeLabel};
use seminormal::rep::{apply_group_algebra, build_rep, element_matrices};
use seminormal::tableau::Partition;
use seminormal::weyl::{
    self, central_sum, enumerate_group, jm_element, longest_element, word_element, CentralFlavor, GroupAlgebraElement,
    GroupElement, JmFlavor, SignedPermutation, DEFAULT_ENUMERATION_CAP,
};

fn signed(images: &[i32]) -> GroupElement {
    GroupElement::Signed(SignedPermutation::from_images(images.to_vec()).unwrap())
}

fn permutations(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for i in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(i, n as i32);
            out.push(p);
        }
    }
    out
}

/// All signed permutations of `1..=n` as image lists, optionally with an
/// even number of negative images.
fn brute_force_signed(n: usize, even_only: bool) -> BTreeSet<Vec<i32>> {
    let mut out = BTreeSet::new();
    for perm in permutations(n) {
        for mask in 0u32..(1 << n) {
            if even_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let images = perm.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect();
            out.insert(images);
        }
    }
    out
}

fn images_of(elements: &[GroupElement]) -> BTreeSet<Vec<i32>> {
    elements
        .iter()
        .map(|g| match g {
            GroupElement::Signed(p) => p.images().to_vec(),
            GroupElement::Dihedral(_) => panic!("expected a signed permutation"),
        })
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=5 {
        let a = enumerate_group(GroupType::A, n, DEFAULT_ENUMERATION_CAP).unwrap();
        let expected: BTreeSet<Vec<i32>> = permutations(n).into_iter().collect();
        assert_eq!(images_of(&a), expected, "A n={n}");
    }
    for n in 1..=4 {
        let b = enumerate_group(GroupType::B, n, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(images_of(&b), brute_force_signed(n, false), "B n={n}");
    }
    for n in 2..=4 {
        let d = enumerate_group(GroupType::D, n, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(images_of(&d), brute_force_signed(n, true), "D n={n}");
    }
}

#[test]
fn group_orders() {
    let count = |g, n| enumerate_group(g, n, DEFAULT_ENUMERATION_CAP).unwrap().len();
    assert_eq!(count(GroupType::A, 3), 6);
    assert_eq!(count(GroupType::B, 2), 8);
    assert_eq!(count(GroupType::D, 4), 192);
    assert_eq!(count(GroupType::G2, 2), 12);
    for (g, n) in [(GroupType::A, 5), (GroupType::B, 4), (GroupType::D, 4), (GroupType::G2, 2)] {
        assert_eq!(weyl::group_order(g, n), count(g, n) as u128);
    }
    assert!(enumerate_group(GroupType::A, 12, 1000).is_err());
}

#[test]
fn generators() {
    assert_eq!(weyl::generator(GroupType::B, 3, 1), signed(&[-1, 2, 3]));
    assert_eq!(weyl::generator(GroupType::D, 3, 1), word_element(GroupType::B, 3, &[1, 2, 1]));
    for (g, n) in [(GroupType::A, 4), (GroupType::B, 3), (GroupType::D, 4), (GroupType::G2, 2)] {
        for i in weyl::generator_indices(g, n) {
            let s = weyl::generator(g, n, i);
            assert!(s.compose(&s).unwrap().is_identity(), "{g} s{i}");
        }
    }
}

#[test]
fn composition() {
    let s1 = signed(&[-1, 2]);
    assert!(s1.compose(&s1).unwrap().is_identity());
    let x = s1.compose(&signed(&[2, 1])).unwrap();
    // iterate until the identity is reached
    let mut acc = x.clone();
    let mut order = 1;
    while !acc.is_identity() {
        acc = acc.compose(&x).unwrap();
        order += 1;
    }
    assert_eq!(order, 4);
    assert_eq!(x.order(), 4);
    let (a, b) = (signed(&[2, -3, 1]), signed(&[-1, 3, 2]));
    assert_eq!(a.compose(&b).unwrap().inverse(), b.inverse().compose(&a.inverse()).unwrap());
}

#[test]
fn type_d_relations_of_the_twisted_generator() {
    let n = 5;
    let s1 = weyl::generator(GroupType::D, n, 1);
    for j in 2..=n {
        let sj = weyl::generator(GroupType::D, n, j);
        let commute = s1.compose(&sj).unwrap() == sj.compose(&s1).unwrap();
        assert_eq!(commute, j != 3, "j = {j}");
    }
    let (b1, b2) = (weyl::generator(GroupType::B, 3, 1), weyl::generator(GroupType::B, 3, 2));
    let lhs = b1.compose(&b2).unwrap().compose(&b1).unwrap().compose(&b2).unwrap();
    let rhs = b2.compose(&b1).unwrap().compose(&b2).unwrap().compose(&b1).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn longest_elements() {
    assert_eq!(longest_element(GroupType::B, 3).unwrap(), signed(&[-1, -2, -3]));
    assert_eq!(longest_element(GroupType::A, 2).unwrap(), signed(&[2, 1]));
    assert_eq!(longest_element(GroupType::G2, 2).unwrap(), word_element(GroupType::G2, 2, &[1, 2, 1, 2, 1, 2]));
    // the longest element has the largest reduced word
    for (g, n) in [(GroupType::A, 4), (GroupType::B, 3), (GroupType::D, 4), (GroupType::G2, 2)] {
        let all = enumerate_group(g, n, DEFAULT_ENUMERATION_CAP).unwrap();
        let max = all.iter().map(|w| weyl::reduced_word(g, w).len()).max().unwrap();
        let w0 = longest_element(g, n).unwrap();
        assert_eq!(weyl::reduced_word(g, &w0).len(), max, "{g} {n}");
    }
}

fn transposition(n: usize, i: usize, j: usize) -> GroupElement {
    GroupElement::Signed(SignedPermutation::swap(n, i, j))
}

#[test]
fn jucys_murphy_and_central_elements() {
    let m3 = jm_element(GroupType::A, 3, 3, JmFlavor::Long).unwrap();
    assert_eq!(m3, GroupAlgebraElement::sum_of([transposition(3, 1, 3), transposition(3, 2, 3)]));
    for k in 1..=4 {
        let z = central_sum(GroupType::A, 4, k, CentralFlavor::Long).unwrap();
        let expected = GroupAlgebraElement::sum_of((1..=k).flat_map(|j| (1..j).map(move |i| transposition(4, i, j))));
        assert_eq!(z, expected, "k = {k}");
        let short = jm_element(GroupType::B, 4, k, JmFlavor::Short).unwrap();
        assert_eq!(short.len(), 1);
        assert_eq!(short.coefficient(&GroupElement::Signed(SignedPermutation::negate(4, k))), int(1));
        let zero = central_sum(GroupType::B, 4, k, CentralFlavor::Zero).unwrap();
        let images: Vec<i32> = (1..=4).map(|x| if x <= k as i32 { -x } else { x }).collect();
        assert_eq!(zero, GroupAlgebraElement::from_element(signed(&images)));
        let one = jm_element(GroupType::D, 4, k, JmFlavor::One).unwrap();
        for (g, _) in one.terms() {
            match g {
                GroupElement::Signed(p) => assert_eq!(p.negative_count() % 2, 0),
                GroupElement::Dihedral(_) => unreachable!(),
            }
        }
    }
    let g2 = |w: &[usize]| word_element(GroupType::G2, 2, w);
    let short = central_sum(GroupType::G2, 2, 2, CentralFlavor::Short).unwrap();
    assert_eq!(short, GroupAlgebraElement::sum_of([g2(&[1]), g2(&[2, 1, 2]), g2(&[1, 2, 1, 2, 1])]));
}

/// Characters of `S_n` by the Murnaghan-Nakayama rule on beta-sets.
fn murnaghan_nakayama(lambda: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &l)| l + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let k = next.len();
        let shape: Vec<usize> = next.iter().enumerate().map(|(j, &x)| x + j + 1 - k).filter(|&x| x > 0).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&shape, rest);
    }
    total
}

fn cycle_type(images: &[i32]) -> Vec<usize> {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize - 1;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[test]
fn symmetric_group_characters_match_murnaghan_nakayama() {
    for n in 1..=5 {
        for part in Partition::all(n) {
            let rep = build_rep(&ShapeLabel::A(part.clone())).unwrap();
            for (g, m) in element_matrices(&rep, DEFAULT_ENUMERATION_CAP).unwrap() {
                let GroupElement::Signed(p) = &g else { unreachable!() };
                let expected = murnaghan_nakayama(part.rows(), &cycle_type(p.images()));
                assert_eq!(m.trace(), int(expected), "shape {part} at {g}");
            }
        }
    }
}

#[test]
fn character_examples() {
    let rep = build_rep(&ShapeLabel::parse(GroupType::A, "2,1").unwrap()).unwrap();
    assert_eq!(rep.character(&transposition(3, 1, 2)).unwrap(), int(0));
    for label in enum_shapes(GroupType::B, 3).unwrap() {
        let rep = build_rep(&label).unwrap();
        assert_eq!(rep.character(&GroupElement::identity(GroupType::B, 3)).unwrap(), int(rep.dim() as i64));
    }
    let phi21 = build_rep(&ShapeLabel::parse(GroupType::G2, "phi_2_1").unwrap()).unwrap();
    assert_eq!(phi21.character(&word_element(GroupType::G2, 2, &[1, 2])).unwrap(), int(1));
}

#[test]
fn group_algebra_elements_act_linearly() {
    let rep = build_rep(&ShapeLabel::parse(GroupType::B, "(2)|(1)").unwrap()).unwrap();
    let x = jm_element(GroupType::B, 3, 2, JmFlavor::Long).unwrap();
    let y = jm_element(GroupType::B, 3, 3, JmFlavor::Short).unwrap();
    let half: Rational = Rational::new(1.into(), 2.into());
    let lhs = apply_group_algebra(&rep, &x.add(&y.scale(&half))).unwrap();
    let rhs = apply_group_algebra(&rep, &x).unwrap().add(&apply_group_algebra(&rep, &y).unwrap().scale(&half));
    assert_eq!(lhs, rhs);
    let xy = apply_group_algebra(&rep, &x.mul(&y).unwrap()).unwrap();
    assert_eq!(xy, apply_group_algebra(&rep, &x).unwrap().mul(&apply_group_algebra(&rep, &y).unwrap()));
}

#[test]
fn presentation_relations_hold_in_the_group() {
    for (g, n) in [(GroupType::A, 5), (GroupType::B, 4), (GroupType::D, 5), (GroupType::G2, 2)] {
        let pres = weyl::presentation(g, n).unwrap();
        for rel in &pres.relations {
            let (lhs, rhs) = match rel {
                weyl::Relation::Equal(a, b) => (a.clone(), b.clone()),
                weyl::Relation::Quadratic(i) => (vec![*i, *i], Vec::new()),
            };
            assert_eq!(word_element(g, n, &lhs), word_element(g, n, &rhs), "{}", rel.describe(g, false));
        }
    }
}

#[test]
fn central_sums_commute_with_their_level() {
    for (g, k) in [(GroupType::A, 5), (GroupType::B, 4), (GroupType::D, 4), (GroupType::G2, 2)] {
        let elements = enumerate_group(g, k, 384).unwrap();
        for level in if g == GroupType::G2 { 1..=2 } else { 1..=k } {
            for &f in weyl::central_flavors(g, level) {
                if level != k && g != GroupType::G2 {
                    continue;
                }
                let z = central_sum(g, k, level, f).unwrap();
                let sub: Vec<&GroupElement> = if level == k {
                    elements.iter().collect()
                } else {
                    // the G2 level-one subgroup is {1, s1}
                    elements.iter().filter(|w| w.is_identity() || **w == word_element(g, 2, &[1])).collect()
                };
                for w in sub {
                    let w = GroupAlgebraElement::from_element(w.clone());
                    assert_eq!(z.mul(&w).unwrap(), w.mul(&z).unwrap(), "{g} level {level} {}", f.name());
                }
            }
        }
    }
}

#[test]
fn jucys_murphy_elements_are_differences_of_central_sums() {
    let n = 4;
    let cases = [
        (GroupType::A, JmFlavor::Long, CentralFlavor::Long),
        (GroupType::B, JmFlavor::Long, CentralFlavor::Long),
        (GroupType::B, JmFlavor::Short, CentralFlavor::Short),
        (GroupType::D, JmFlavor::Two, CentralFlavor::Long),
    ];
    for (g, jm, central) in cases {
        for k in 1..=n {
            let upper = central_sum(g, n, k, central).unwrap();
            let lower = if k == 1 { GroupAlgebraElement::zero() } else { central_sum(g, n, k - 1, central).unwrap() };
            assert_eq!(jm_element(g, n, k, jm).unwrap(), upper.sub(&lower), "{g} {} k={k}", jm.name());
        }
    }
}

#[test]
fn jucys_murphy_elements_commute() {
    let n = 4;
    for g in [GroupType::A, GroupType::B, GroupType::D] {
        let mut all = Vec::new();
        for k in 1..=n {
            for &f in weyl::jm_flavors(g) {
                all.push(jm_element(g, n, k, f).unwrap());
            }
        }
        for (i, x) in all.iter().enumerate() {
            for y in &all[i + 1..] {
                assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap(), "{g}");
            }
        }
    }
}

#[test]
fn type_d_is_an_index_two_subgroup() {
    for n in 2..=4 {
        let b = enumerate_group(GroupType::B, n, DEFAULT_ENUMERATION_CAP).unwrap();
        let d: BTreeSet<GroupElement> =
            enumerate_group(GroupType::D, n, DEFAULT_ENUMERATION_CAP).unwrap().into_iter().collect();
        assert_eq!(b.len(), 2 * d.len());
        for x in &d {
            for y in &d {
                assert!(d.contains(&x.compose(y).unwrap()));
            }
        }
        // the coset of the sign change (1, -1) is the complement
        let t = weyl::generator(GroupType::B, n, 1);
        let coset: BTreeSet<GroupElement> = d.iter().map(|x| t.compose(x).unwrap()).collect();
        assert!(coset.is_disjoint(&d));
        assert_eq!(coset.len() + d.len(), b.len());
    }
}
