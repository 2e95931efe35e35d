//! The checks themselves: they pass on correct data, fail with a witness on
//! corrupted data, and respect the caps.

use seminormal::arith::{int, RatFunc};
use seminormal::error::Error;
use seminormal::hecke::build_hecke;
use seminormal::labels::{enum_shapes, GroupType, ShapeLabel};
use seminormal::rep::build_rep;
use seminormal::verify::{
    check_d_embedding, check_d_isomorphism, check_g2_character_table, check_g2_printed_matrices, check_jm_spectra,
    check_projectors, check_relations, check_step2_identities, run_suite, Check, CheckReport, SuiteOptions,
};

fn label(group: GroupType, s: &str) -> ShapeLabel {
    ShapeLabel::parse(group, s).unwrap()
}

fn assert_all_pass(reports: &[CheckReport]) {
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn corrupted_generator_breaks_the_relations_with_a_witness() {
    let mut rep = build_rep(&label(GroupType::A, "2,1")).unwrap();
    assert!(check_relations(&rep).passed());
    rep.generators[1].1[(0, 1)] = int(7);
    let report = check_relations(&rep);
    assert!(!report.passed());
    let w = report.witness.unwrap();
    assert!(w.entry.is_some(), "{}", w.item);
    assert_ne!(w.expected, w.actual);
}

#[test]
fn corrupted_diagonal_breaks_the_jm_spectra() {
    let mut rep = build_rep(&label(GroupType::B, "(1)|(1)")).unwrap();
    assert!(check_jm_spectra(&rep).passed());
    rep.generators[0].1[(0, 0)] = int(-1);
    assert!(!check_jm_spectra(&rep).passed());
}

#[test]
fn corrupted_hecke_entry_breaks_the_quadratic_relation() {
    let mut rep = build_hecke(&label(GroupType::A, "2,1")).unwrap();
    assert!(check_relations(&rep).passed());
    rep.generators[0].1[(0, 0)] = RatFunc::p();
    let report = check_relations(&rep);
    assert!(!report.passed());
    assert!(report.witness.is_some());
}

#[test]
fn full_suite_passes_for_the_dihedral_group() {
    assert_all_pass(&run_suite(GroupType::G2, 2, &SuiteOptions::default()).unwrap());
}

#[test]
fn full_suite_passes_for_b3() {
    let reports = run_suite(GroupType::B, 3, &SuiteOptions::default()).unwrap();
    assert_all_pass(&reports);
    assert!(reports.iter().any(|r| r.check == Check::Step2Identities));
}

#[test]
fn step2_identities_pass_in_small_ranks() {
    for (g, n) in [(GroupType::A, 4), (GroupType::B, 3), (GroupType::D, 3), (GroupType::G2, 2)] {
        let r = check_step2_identities(g, n).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn dihedral_tables() {
    assert!(check_g2_printed_matrices().passed());
    assert!(check_g2_character_table().passed());
}

#[test]
fn type_d_restrictions() {
    for n in 2..=3 {
        for l in enum_shapes(GroupType::D, n).unwrap() {
            let r = check_d_isomorphism(&l, 1 << 20).unwrap();
            assert!(r.passed(), "{r}");
            let r = check_d_embedding(&l).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
    for l in enum_shapes(GroupType::D, 4).unwrap() {
        let r = check_d_embedding(&l).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn projectors_of_small_shapes() {
    for (g, n) in [(GroupType::A, 4), (GroupType::B, 3)] {
        for l in enum_shapes(g, n).unwrap() {
            let r = check_projectors(&build_rep(&l).unwrap());
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn check_names_round_trip() {
    for c in Check::ALL {
        assert_eq!(c.name().parse::<Check>().unwrap(), c);
    }
    assert!("nonsense".parse::<Check>().is_err());
}

#[test]
fn selected_checks_only() {
    let options = SuiteOptions { checks: Some(vec![Check::Completeness]), ..Default::default() };
    let reports = run_suite(GroupType::A, 4, &options).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].check, Check::Completeness);
}

#[test]
fn ranks_past_the_caps_are_refused() {
    let err = run_suite(GroupType::A, 20, &SuiteOptions::default()).unwrap_err();
    assert!(matches!(err, Error::RankCapExceeded { n: 20, .. }), "{err}");
    let options = SuiteOptions { checks: Some(vec![Check::WeightSeparation]), ..Default::default() };
    assert!(run_suite(GroupType::A, 8, &options).unwrap().iter().all(|r| r.passed()));
    assert!(run_suite(GroupType::A, 9, &options).is_err());
}
