use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::arith::{int, Scalar};
use crate::error::Error;
use crate::hecke::{build_hecke_b_unit_p, build_hecke_d, build_hecke_d_ordered, murphy_matrix};
use crate::labels::{DLabel, ShapeLabel, Sign};
use crate::matrix::Matrix;
use crate::rep::{build_rep_b, build_rep_d, build_rep_d_ordered, element_matrices, Representation};
use crate::tableau::{Component, Partition, StandardTableau};
use crate::weyl::GroupElement;

use super::spectra::check_relations;
use super::{expect_equal, Check, CheckReport, Subject, Witness};

fn d_label(label: &ShapeLabel) -> Result<&DLabel, Error> {
    match label {
        ShapeLabel::D(d) => Ok(d),
        _ => Err(Error::MixedGroups),
    }
}

fn traces<S: Scalar>(rep: &Representation<S>, cap: u128) -> Result<BTreeMap<GroupElement, S>, Error> {
    Ok(element_matrices(rep, cap)?.into_iter().map(|(g, m)| (g, m.trace())).collect())
}

fn compare_traces<S: Scalar>(
    what: &str,
    expected: &BTreeMap<GroupElement, S>,
    actual: &BTreeMap<GroupElement, S>,
) -> Result<(), Witness> {
    for (g, e) in expected {
        let a = &actual[g];
        if a != e {
            return Err(Witness::values(format!("{what} at {g}"), e, a));
        }
    }
    Ok(())
}

/// `V^(a,b)` and `V^(b,a)` have equal characters on every group element,
/// and equal traces on every `T_w`; the character of `V^(a,a)` is the sum
/// of the characters of its two halves. Traces are taken over all `|W|`
/// elements, so the group order must stay within `cap`.
pub fn check_d_isomorphism(label: &ShapeLabel, cap: u128) -> Result<CheckReport, Error> {
    let d = d_label(label)?;
    let result = match d {
        DLabel::Pair(a, b) => pair_isomorphism(a, b, cap)?,
        DLabel::Split(a, _) => split_characters(a, cap)?,
    };
    Ok(CheckReport::from_result(Check::DIsomorphism, Subject::label(label), result))
}

fn pair_isomorphism(a: &Partition, b: &Partition, cap: u128) -> Result<Result<(), Witness>, Error> {
    let w1 = traces(&build_rep_d_ordered(a, b), cap)?;
    let w2 = traces(&build_rep_d_ordered(b, a), cap)?;
    if let Err(w) = compare_traces("swapped character", &w1, &w2) {
        return Ok(Err(w));
    }
    let h1 = traces(&build_hecke_d_ordered(a, b), cap)?;
    let h2 = traces(&build_hecke_d_ordered(b, a), cap)?;
    Ok(compare_traces("swapped Hecke trace", &h1, &h2))
}

fn split_characters(a: &Partition, cap: u128) -> Result<Result<(), Witness>, Error> {
    let full = traces(&build_rep_d_ordered(a, a), cap)?;
    let p = traces(&build_rep_d(&DLabel::Split(a.clone(), Sign::Plus))?, cap)?;
    let m = traces(&build_rep_d(&DLabel::Split(a.clone(), Sign::Minus))?, cap)?;
    let sum: BTreeMap<_, _> = p.iter().map(|(g, x)| (g.clone(), x + &m[g])).collect();
    if let Err(w) = compare_traces("character of the sum of halves", &full, &sum) {
        return Ok(Err(w));
    }
    let full = traces(&build_hecke_d_ordered(a, a), cap)?;
    let p = traces(&build_hecke_d(&DLabel::Split(a.clone(), Sign::Plus))?, cap)?;
    let m = traces(&build_hecke_d(&DLabel::Split(a.clone(), Sign::Minus))?, cap)?;
    let sum: BTreeMap<_, _> = p.iter().map(|(g, x)| (g.clone(), x + &m[g])).collect();
    Ok(compare_traces("Hecke trace of the sum of halves", &full, &sum))
}

/// The type D generators sit inside type B as `s~1 = s1 s2 s1` (with
/// `T~1 = T1 T2 T1` in `HB_n(1, q^2)`) and `s~i = s_i`; Murphy elements
/// factor as `M~k = M_k M_1`. For split labels, the half-basis vectors
/// `v_L +- v_{sigma L}` intertwine the full module with each half.
pub fn check_d_embedding(label: &ShapeLabel) -> Result<CheckReport, Error> {
    let d = d_label(label)?;
    let (a, b) = match d {
        DLabel::Pair(a, b) => (a, b),
        DLabel::Split(a, _) => (a, a),
    };
    let mut result = embedding(a, b);
    if result.is_ok() {
        if let DLabel::Split(_, sign) = d {
            result = split_intertwiners(label, *sign);
        }
    }
    Ok(CheckReport::from_result(Check::DEmbedding, Subject::label(label), result))
}

fn embedding(a: &Partition, b: &Partition) -> Result<(), Witness> {
    let name = format!("({a})|({b})");
    let dw = build_rep_d_ordered(a, b);
    let bw = build_rep_b(a, b);
    let dh = build_hecke_d_ordered(a, b);
    let bh = build_hecke_b_unit_p(a, b);
    for full in [check_relations(&dw), check_relations(&dh)] {
        if let Some(w) = full.witness {
            return Err(Witness::message(format!("{name}: {}", w.item)));
        }
    }
    let n = dw.n;
    expect_equal(format!("{name}: s~1 = s1 s2 s1"), &bw.word_matrix(&[1, 2, 1]), dw.generator(1))?;
    expect_equal(format!("{name}: T~1 = T1 T2 T1"), &bh.word_matrix(&[1, 2, 1]), dh.generator(1))?;
    for i in 2..=n {
        expect_equal(format!("{name}: s~{i} = s{i}"), bw.generator(i), dw.generator(i))?;
        expect_equal(format!("{name}: T~{i} = T{i}"), bh.generator(i), dh.generator(i))?;
    }
    let m1 = murphy_matrix(&bh, 1)?;
    for k in 1..=n {
        let expected = if k == 1 { Matrix::identity(dh.dim()) } else { murphy_matrix(&bh, k)?.mul(&m1) };
        expect_equal(format!("{name}: M~{k} = M{k} M1"), &expected, &murphy_matrix(&dh, k)?)?;
    }
    Ok(())
}

/// The `d x d/2` matrix whose columns are `v_L +- v_{sigma L}`.
fn half_basis_matrix<S: Scalar>(full: &[StandardTableau], sign: Sign) -> Matrix<S> {
    let half: Vec<usize> = (0..full.len()).filter(|&j| full[j].cells()[0].component == Component::First).collect();
    let mut w = Matrix::zeros(full.len(), half.len());
    for (col, &j) in half.iter().enumerate() {
        let partner = full.binary_search(&full[j].sigma().expect("double shape")).expect("sigma stays in basis");
        w[(j, col)] = S::one();
        w[(partner, col)] = S::from_rational(&int(sign.value()));
    }
    w
}

fn intertwines<S: Scalar>(full: &Representation<S>, half: &Representation<S>, sign: Sign) -> Result<(), Witness> {
    let ts: Vec<StandardTableau> = full.basis.iter().map(|b| b.tableau().expect("tableau basis").clone()).collect();
    let w: Matrix<S> = half_basis_matrix(&ts, sign);
    for (i, x) in &full.generators {
        expect_equal(
            format!("{} intertwines with the half basis", full.generator_name(*i)),
            &x.mul(&w),
            &w.mul(half.generator(*i)),
        )?;
    }
    Ok(())
}

fn split_intertwiners(label: &ShapeLabel, sign: Sign) -> Result<(), Witness> {
    let d = d_label(label)?;
    let a = match d {
        DLabel::Split(a, _) => a,
        DLabel::Pair(..) => return Ok(()),
    };
    intertwines(&build_rep_d_ordered(a, a), &build_rep_d(d)?, sign)?;
    intertwines(&build_hecke_d_ordered(a, a), &build_hecke_d(d)?, sign)?;
    Ok(())
}
