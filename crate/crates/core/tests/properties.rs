//! Randomized invariants of the arithmetic, the combinatorics, the groups
//! and the representations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use seminormal::arith::{int, poly_gcd, rf_format, rf_normalize, rf_parse, LaurentPoly, RatFunc, Rational};
use seminormal::hecke::build_hecke;
use seminormal::labels::{GroupType, ShapeLabel};
use seminormal::rep::build_rep;
use seminormal::tableau::{enum_standard_tableaux, Partition, Shape};
use seminormal::verify::{check_relations, Status};
use seminormal::weyl::{self, word_element};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-2i32..=2, -2i32..=2), -3i64..=3), 0..4)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, int(c)))))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent().prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(n, d)| rf_normalize(n, d).unwrap())
}

fn is_integer(c: &Rational) -> bool {
    c.denom().is_one()
}

/// The canonical-form invariants, checked term by term.
fn assert_canonical(f: &RatFunc) {
    let (num, den) = (f.numerator(), f.denominator());
    assert!(!den.is_zero());
    assert!(!num.has_negative_exponents() && !den.has_negative_exponents());
    if num.is_zero() {
        assert!(den.is_one());
        return;
    }
    assert!(poly_gcd(num, den).is_one(), "{f} is not reduced");
    let (_, lead) = den.leading_term().unwrap();
    assert!(lead.is_positive());
    assert!(den.terms().all(|(_, c)| is_integer(c)));
    let content = den.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()));
    assert!(content.is_one(), "{f} has denominator content {content}");
}

/// `a = b` as fractions, by cross-multiplication.
fn same_fraction(a: &RatFunc, b: &RatFunc) -> bool {
    a.numerator() * b.denominator() == b.numerator() * a.denominator()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        let sum = &(&a + &b) + &c;
        prop_assert_eq!(&sum, &(&a + &(&b + &c)));
        let prod = &a * &(&b + &c);
        prop_assert_eq!(&prod, &(&(&a * &b) + &(&a * &c)));
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        for f in [&sum, &prod] {
            assert_canonical(f);
        }
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonical_equality_is_fraction_equality(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a == b, same_fraction(&a, &b));
    }

    #[test]
    fn normalization_is_idempotent(f in ratfunc()) {
        assert_canonical(&f);
        let again = rf_normalize(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn normalization_preserves_the_fraction(n in laurent(), d in laurent()) {
        prop_assume!(!d.is_zero());
        let f = rf_normalize(n.clone(), d.clone()).unwrap();
        prop_assert!(f.numerator() * &d == &n * f.denominator());
    }

    #[test]
    fn text_round_trip(f in ratfunc()) {
        prop_assert_eq!(rf_parse(&rf_format(&f)).unwrap(), f);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in ratfunc(), b in ratfunc(), p0 in 2i64..5, q0 in -4i64..-1) {
        let (p0, q0) = (int(p0), int(q0));
        if let (Ok(x), Ok(y)) = (a.eval(&p0, &q0), b.eval(&p0, &q0)) {
            prop_assert_eq!((&a * &b).eval(&p0, &q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&p0, &q0).unwrap(), &x + &y);
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=6).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn double_shape() -> impl Strategy<Value = (Partition, Partition)> {
    (0usize..=2, 0usize..=2).prop_flat_map(|(a, b)| {
        let (pa, pb) = (Partition::all(a), Partition::all(b));
        (0..pa.len(), 0..pb.len()).prop_map(move |(i, j)| (pa[i].clone(), pb[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn consecutive_entries_in_one_component_have_distinct_contents(a in partition(), b in partition()) {
        for t in enum_standard_tableaux(&Shape::double(a, b)) {
            for k in 2..=t.n() {
                let (x, y) = (t.cells()[k - 2], t.cells()[k - 1]);
                if x.component == y.component {
                    prop_assert_ne!(x.content(), y.content());
                }
            }
        }
    }

    #[test]
    fn adjacent_swaps_are_involutions(a in partition()) {
        for t in enum_standard_tableaux(&Shape::single(a)) {
            for i in 2..=t.n() {
                if let Some(s) = t.adjacent_swap(i).unwrap() {
                    prop_assert_eq!(s.adjacent_swap(i).unwrap().unwrap(), t.clone());
                    prop_assert_ne!(t.content(i), t.content(i - 1));
                }
            }
        }
    }

    #[test]
    fn weyl_relations_hold_for_random_shapes(a in partition(), (x, y) in double_shape()) {
        let rep = build_rep(&ShapeLabel::A(a)).unwrap();
        prop_assert_eq!(check_relations(&rep).status, Status::Pass);
        prop_assume!(x.size() + y.size() > 0);
        let rep = build_rep(&ShapeLabel::B(x, y)).unwrap();
        prop_assert_eq!(check_relations(&rep).status, Status::Pass);
    }

    #[test]
    fn hecke_relations_hold_for_random_shapes((x, y) in double_shape()) {
        prop_assume!(x.size() + y.size() > 0);
        let rep = build_hecke(&ShapeLabel::B(x, y)).unwrap();
        prop_assert_eq!(check_relations(&rep).status, Status::Pass);
    }

    #[test]
    fn random_words_reduce_to_the_same_element(word in prop::collection::vec(1usize..=4, 0..12)) {
        for g in [GroupType::B, GroupType::D] {
            let w = word_element(g, 4, &word);
            let reduced = weyl::reduced_word(g, &w);
            prop_assert!(reduced.len() <= word.len());
            prop_assert_eq!(reduced.len() % 2, word.len() % 2);
            prop_assert_eq!(word_element(g, 4, &reduced), w.clone());
            let inv: Vec<usize> = word.iter().rev().copied().collect();
            prop_assert!(w.compose(&word_element(g, 4, &inv)).unwrap().is_identity());
        }
    }

    #[test]
    fn words_act_as_matrix_products(word in prop::collection::vec(2usize..=4, 0..10)) {
        let rep = build_rep(&ShapeLabel::parse(GroupType::A, "2,1,1").unwrap()).unwrap();
        let w = word_element(GroupType::A, 4, &word);
        prop_assert_eq!(rep.element_matrix(&w).unwrap(), rep.word_matrix(&word));
    }
}
