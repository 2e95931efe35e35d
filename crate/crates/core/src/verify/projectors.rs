use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::arith::{int, Rational};
use crate::labels::{enum_shapes, g2_path_weight, g2_paths, shape_constants, GroupType, LevelWeight};
use crate::matrix::Matrix;
use crate::rep::{apply_group_algebra, SeminormalRep};
use crate::tableau::{Partition, Shape};
use crate::weyl::{self, CentralFlavor};

use super::spectra::level_constant;
use super::{expect_diagonal, expect_equal, subject_of, Check, CheckReport, Witness};

/// Each basis vector's idempotent `E_LL` is the product over levels `k` and
/// flavors `j` of `prod_mu (z_{k,j} - c_{k,j}(mu)) / (c_{k,j}(L) - c_{k,j}(mu))`,
/// where `mu` runs over the level-`k` constants different from the one of
/// `L`. Also checks that each `z_{k,j}` is constant on branching blocks.
pub fn check_projectors(rep: &SeminormalRep) -> CheckReport {
    CheckReport::from_result(Check::Projectors, subject_of(rep), projectors(rep))
}

fn pick(w: &LevelWeight, flavor: CentralFlavor) -> Option<i64> {
    match flavor {
        CentralFlavor::Short => w.short,
        CentralFlavor::Long => w.long,
        CentralFlavor::Zero => w.zero,
    }
}

/// The constants of `flavor` over every label at level `k`.
fn level_values(group: GroupType, k: usize, flavor: CentralFlavor) -> BTreeSet<i64> {
    let weights: Vec<LevelWeight> = match group {
        GroupType::G2 => g2_paths().iter().map(|p| g2_path_weight(p)[k - 1]).collect(),
        GroupType::A => Partition::all(k).into_iter().map(|p| shape_constants(group, &Shape::single(p))).collect(),
        // Type D constants are read on all ordered double partitions.
        GroupType::B | GroupType::D => enum_shapes(GroupType::B, k)
            .expect("positive level")
            .iter()
            .map(|l| shape_constants(group, &l.shape().expect("tableau label")))
            .collect(),
    };
    weights.iter().filter_map(|w| pick(w, flavor)).collect()
}

fn projectors(rep: &SeminormalRep) -> Result<(), Witness> {
    let (group, n, d) = (rep.group, rep.n, rep.dim());
    // (level, flavor, matrix of z, values at that level)
    let mut ops: Vec<(usize, CentralFlavor, Matrix<Rational>, BTreeSet<i64>)> = Vec::new();
    for k in 1..=n {
        for &flavor in weyl::central_flavors(group, k) {
            let z = apply_group_algebra(rep, &weyl::central_sum(group, n, k, flavor)?)?;
            let own: Vec<Rational> = rep.basis.iter().map(|b| int(level_constant(group, b, k, flavor))).collect();
            expect_diagonal(format!("z level {k} {} on branching blocks", flavor.name()), &own, &z)?;
            ops.push((k, flavor, z, level_values(group, k, flavor)));
        }
    }
    let mut sum = Matrix::zeros(d, d);
    for (l, b) in rep.basis.iter().enumerate() {
        let mut p = Matrix::identity(d);
        for (k, flavor, z, values) in &ops {
            let own = level_constant(group, b, *k, *flavor);
            if !values.contains(&own) {
                return Err(Witness::message(format!(
                    "level {k} {} constant {own} is not a label value",
                    flavor.name()
                )));
            }
            for &c in values.iter().filter(|&&c| c != own) {
                let factor = z.sub(&Matrix::scalar(d, &int(c))).scale(&(Rational::one() / int(own - c)));
                p = p.mul(&factor);
            }
        }
        let mut e = Matrix::zeros(d, d);
        e[(l, l)] = Rational::one();
        expect_equal(format!("projector of basis vector {l}"), &e, &p)?;
        sum = sum.add(&p);
    }
    expect_equal("sum of projectors", &Matrix::identity(d), &sum)
}
