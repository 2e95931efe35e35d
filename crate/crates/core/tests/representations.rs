//! Weyl and Hecke matrices of small shapes, frozen from direct evaluation
//! and checked against the defining relations.

use seminormal::arith::{int, rat, rf_parse, Parameter, RatFunc, Rational, Scalar};
use seminormal::hecke::{build_hecke, central_matrix, murphy_matrix, specialize_rep};
use seminormal::labels::{enum_shapes, GroupType, ShapeLabel};
use seminormal::matrix::Matrix;
use seminormal::rep::{apply_group_algebra, build_rep};
use seminormal::weyl::{jm_element, JmFlavor};

fn label(group: GroupType, s: &str) -> ShapeLabel {
    ShapeLabel::parse(group, s).unwrap()
}

fn q_mat(rows: &[&[Rational]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn rf(s: &str) -> RatFunc {
    rf_parse(s).unwrap()
}

#[test]
fn two_one_matrices_and_braid_relation() {
    let rep = build_rep(&label(GroupType::A, "2,1")).unwrap();
    let s2 = rep.generator(2);
    let s3 = rep.generator(3);
    assert_eq!(s2, &q_mat(&[&[int(1), int(0)], &[int(0), int(-1)]]));
    assert_eq!(s3, &q_mat(&[&[rat(-1, 2), rat(3, 2)], &[rat(1, 2), rat(1, 2)]]));
    assert_eq!(s2.mul(s3).mul(s2), s3.mul(s2).mul(s3));
}

#[test]
fn row_and_column_shapes() {
    for n in 2..=5 {
        let row = build_rep(&ShapeLabel::A(seminormal::tableau::Partition::new(vec![n]).unwrap())).unwrap();
        let col = build_rep(&ShapeLabel::A(seminormal::tableau::Partition::new(vec![1; n]).unwrap())).unwrap();
        let h_row = build_hecke(&row.label).unwrap();
        let h_col = build_hecke(&col.label).unwrap();
        for i in 2..=n {
            assert_eq!(row.generator(i), &Matrix::from_diagonal(&[int(1)]));
            assert_eq!(col.generator(i), &Matrix::from_diagonal(&[int(-1)]));
            assert_eq!(h_row.generator(i), &Matrix::from_diagonal(&[RatFunc::q()]));
            assert_eq!(h_col.generator(i), &Matrix::from_diagonal(&[rf("-q^-1")]));
        }
    }
}

#[test]
fn hyperoctahedral_small_shapes() {
    let one = build_rep(&label(GroupType::B, "(1)|()")).unwrap();
    assert_eq!(one.generator(1), &Matrix::from_diagonal(&[int(1)]));
    let minus = build_rep(&label(GroupType::B, "()|(1)")).unwrap();
    assert_eq!(minus.generator(1), &Matrix::from_diagonal(&[int(-1)]));
    let rep = build_rep(&label(GroupType::B, "(1)|(1)")).unwrap();
    let (s1, s2) = (rep.generator(1), rep.generator(2));
    assert_eq!(s1, &Matrix::from_diagonal(&[int(1), int(-1)]));
    assert_eq!(s2, &q_mat(&[&[int(0), int(1)], &[int(1), int(0)]]));
    assert_eq!(s1.mul(s2).mul(s1).mul(s2), s2.mul(s1).mul(s2).mul(s1));

    let h = build_hecke(&label(GroupType::B, "(1)|()")).unwrap();
    assert_eq!(h.generator(1), &Matrix::from_diagonal(&[RatFunc::p()]));
    let h = build_hecke(&label(GroupType::B, "()|(1)")).unwrap();
    assert_eq!(h.generator(1), &Matrix::from_diagonal(&[rf("-p^-1")]));
    let h = build_hecke(&label(GroupType::B, "(1)|(1)")).unwrap();
    assert_eq!(h.generator(2)[(0, 0)], rf("(q - q^-1)/(1 + p^2)"));
    let t1 = h.generator(1);
    let quad = RatFunc::quadratic_coefficient(Parameter::P);
    assert_eq!(t1.mul(t1), t1.scale(&quad).add(&Matrix::identity(2)));
}

#[test]
fn jucys_murphy_long_element_doubles_contents_in_type_b() {
    let rep = build_rep(&label(GroupType::B, "(2)|()")).unwrap();
    let m2 = apply_group_algebra(&rep, &jm_element(GroupType::B, 2, 2, JmFlavor::Long).unwrap()).unwrap();
    assert_eq!(m2, Matrix::from_diagonal(&[int(2)]));
    let a = build_rep(&label(GroupType::A, "2,1")).unwrap();
    let m3 = apply_group_algebra(&a, &jm_element(GroupType::A, 3, 3, JmFlavor::Long).unwrap()).unwrap();
    assert_eq!(m3, Matrix::from_diagonal(&[int(-1), int(1)]));
    let b = build_rep(&label(GroupType::B, "(1)|(1)")).unwrap();
    let m2s = apply_group_algebra(&b, &jm_element(GroupType::B, 2, 2, JmFlavor::Short).unwrap()).unwrap();
    assert_eq!(m2s, Matrix::from_diagonal(&[int(-1), int(1)]));
}

#[test]
fn split_type_d_modules_have_half_dimension() {
    for n in [2, 4] {
        for l in enum_shapes(GroupType::D, n).unwrap() {
            let s = l.to_string();
            if let Some(body) = s.strip_suffix('+') {
                let full = build_rep(&label(GroupType::B, body)).unwrap();
                assert_eq!(build_rep(&l).unwrap().dim() * 2, full.dim(), "{l}");
            }
        }
    }
    let sigma_d: usize = enum_shapes(GroupType::D, 4).unwrap().iter().map(|l| build_rep(l).unwrap().dim().pow(2)).sum();
    assert_eq!(sigma_d, 192);
}

#[test]
fn dihedral_printed_matrices() {
    let phi10 = build_rep(&label(GroupType::G2, "phi_1_0")).unwrap();
    assert_eq!(phi10.generator(1), &Matrix::from_diagonal(&[int(1)]));
    assert_eq!(phi10.generator(2), &Matrix::from_diagonal(&[int(1)]));
    let phi21 = build_rep(&label(GroupType::G2, "phi_2_1")).unwrap();
    assert_eq!(phi21.generator(2), &q_mat(&[&[rat(1, 2), rat(1, 2)], &[rat(3, 2), rat(-1, 2)]]));
    let phi22 = build_rep(&label(GroupType::G2, "phi_2_2")).unwrap();
    assert_eq!(phi22.generator(1), &Matrix::from_diagonal(&[int(1), int(-1)]));

    let h10 = build_hecke(&label(GroupType::G2, "phi_1_0")).unwrap();
    assert_eq!(h10.generator(1), &Matrix::from_diagonal(&[RatFunc::p()]));
    assert_eq!(h10.generator(2), &Matrix::from_diagonal(&[RatFunc::q()]));
    let h21 = build_hecke(&label(GroupType::G2, "phi_2_1")).unwrap();
    let a = rf("(1 + p^-1 q - p^-1 q^-1)/(p + p^-1)");
    assert_eq!(h21.generator(2)[(0, 0)], a);
    assert_eq!(a.eval(&int(1), &int(1)).unwrap(), rat(1, 2));
}

#[test]
fn murphy_eigenvalues_of_small_shapes() {
    let two = build_hecke(&label(GroupType::A, "2")).unwrap();
    assert_eq!(murphy_matrix(&two, 2).unwrap(), Matrix::from_diagonal(&[rf("q^2")]));
    let one_one = build_hecke(&label(GroupType::A, "1,1")).unwrap();
    assert_eq!(murphy_matrix(&one_one, 2).unwrap(), Matrix::from_diagonal(&[rf("q^-2")]));
    for n in 2..=5 {
        let row = build_hecke(&ShapeLabel::A(seminormal::tableau::Partition::new(vec![n]).unwrap())).unwrap();
        let z = central_matrix(&row, n).unwrap();
        let e = (n * (n - 1)) as i32;
        assert_eq!(z, Matrix::from_diagonal(&[RatFunc::monomial(int(1), 0, e)]), "n = {n}");
    }
    let b = build_hecke(&label(GroupType::B, "(1)|(1)")).unwrap();
    assert_eq!(murphy_matrix(&b, 1).unwrap(), Matrix::from_diagonal(&[rf("p"), rf("-p^-1")]));
    let g = build_hecke(&label(GroupType::G2, "phi_1_0")).unwrap();
    assert_eq!(central_matrix(&g, 2).unwrap(), Matrix::from_diagonal(&[rf("p^3 q^3")]));
}

#[test]
fn specialization_at_one_recovers_weyl_matrices() {
    for (g, n) in [(GroupType::A, 4), (GroupType::B, 3), (GroupType::D, 4), (GroupType::G2, 2)] {
        for l in enum_shapes(g, n).unwrap() {
            let at_one = specialize_rep(&build_hecke(&l).unwrap(), &int(1), &int(1)).unwrap();
            assert_eq!(at_one.generators, build_rep(&l).unwrap().generators, "{l}");
        }
    }
}

#[test]
fn specialization_at_q_one_in_the_trivial_shape_is_all_ones() {
    let row = build_hecke(&label(GroupType::A, "4")).unwrap();
    for (_, m) in specialize_rep(&row, &int(1), &int(1)).unwrap().generators {
        assert_eq!(m, Matrix::from_diagonal(&[int(1)]));
    }
    let two_one = build_hecke(&label(GroupType::A, "2,1")).unwrap();
    assert!(specialize_rep(&two_one, &int(1), &int(0)).is_err());
}
