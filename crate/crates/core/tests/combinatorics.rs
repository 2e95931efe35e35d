//! Tableaux, contents, signs and labels against brute-force oracles.

use std::collections::BTreeSet;

use seminormal::labels::{enum_shapes, tableau_weight, weight_constants, G2Label, GroupType, LevelWeight, ShapeLabel};
use seminormal::tableau::{enum_standard_tableaux, Partition, Shape, StandardTableau};

fn p(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

/// Box positions `(component, row, col)` of `1..=n`.
type Positions = Vec<(usize, usize, usize)>;

fn positions(t: &StandardTableau) -> Positions {
    t.cells().iter().map(|c| (c.component as usize, c.row, c.col)).collect()
}

fn boxes(shape: &Shape) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let parts: Vec<&Partition> = std::iter::once(shape.first()).chain(shape.second()).collect();
    for (comp, part) in parts.iter().enumerate() {
        for (r, &len) in part.rows().iter().enumerate() {
            for c in 1..=len {
                out.push((comp, r + 1, c));
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for i in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(i, n);
            out.push(p);
        }
    }
    out
}

/// Every filling of the boxes by `1..=n`, kept when rows and columns
/// increase, sorted by the position sequence.
fn brute_force_tableaux(shape: &Shape) -> Vec<Positions> {
    let cells = boxes(shape);
    let n = cells.len();
    let mut out = Vec::new();
    for perm in permutations(n) {
        let value = |cell: (usize, usize, usize)| cells.iter().position(|&x| x == cell).map(|i| perm[i]);
        let standard = cells.iter().all(|&(comp, r, c)| {
            let v = value((comp, r, c)).unwrap();
            let left_ok = c == 1 || value((comp, r, c - 1)).unwrap() < v;
            let up_ok = r == 1 || value((comp, r - 1, c)).unwrap() < v;
            left_ok && up_ok
        });
        if standard {
            let mut pos = vec![(0, 0, 0); n];
            for (i, &cell) in cells.iter().enumerate() {
                pos[perm[i] - 1] = cell;
            }
            out.push(pos);
        }
    }
    out.sort();
    out
}

fn hook_length_count(part: &Partition) -> u128 {
    let rows = part.rows();
    let n = part.size() as u128;
    let mut hooks: u128 = 1;
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&l| l > j).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=n).product::<u128>() / hooks
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn single_shapes_match_brute_force_fillings_in_canonical_order() {
    for n in 1..=6 {
        for part in Partition::all(n) {
            let shape = Shape::single(part);
            let got: Vec<Positions> = enum_standard_tableaux(&shape).iter().map(positions).collect();
            assert_eq!(got, brute_force_tableaux(&shape), "shape {shape}");
        }
    }
}

#[test]
fn double_shapes_match_brute_force_fillings_in_canonical_order() {
    for n in 1..=5 {
        for label in enum_shapes(GroupType::B, n).unwrap() {
            let shape = label.shape().unwrap();
            let got: Vec<Positions> = enum_standard_tableaux(&shape).iter().map(positions).collect();
            assert_eq!(got, brute_force_tableaux(&shape), "shape {shape}");
        }
    }
}

#[test]
fn counts_follow_the_hook_length_formula() {
    for n in 1..=9 {
        for part in Partition::all(n) {
            let got = enum_standard_tableaux(&Shape::single(part.clone())).len() as u128;
            assert_eq!(got, hook_length_count(&part), "shape {part}");
        }
    }
}

#[test]
fn double_counts_are_binomial_times_hook_counts() {
    for n in 1..=6 {
        for label in enum_shapes(GroupType::B, n).unwrap() {
            let shape = label.shape().unwrap();
            let (a, b) = (shape.first(), shape.second().unwrap());
            let expected = binomial(n as u128, a.size() as u128) * hook_length_count(a) * hook_length_count(b);
            assert_eq!(enum_standard_tableaux(&shape).len() as u128, expected, "shape {shape}");
        }
    }
}

#[test]
fn canonical_index_is_the_listing_position() {
    for label in enum_shapes(GroupType::B, 4).unwrap() {
        let ts = enum_standard_tableaux(&label.shape().unwrap());
        for (i, t) in ts.iter().enumerate() {
            assert_eq!(t.canonical_index(), i);
        }
    }
}

#[test]
fn small_shape_examples() {
    assert_eq!(enum_standard_tableaux(&Shape::single(p(&[5]))).len(), 1);
    let two_one = enum_standard_tableaux(&Shape::single(p(&[2, 1])));
    assert_eq!(two_one.len(), 2);
    // the box of 2 at (1,2) precedes (2,1)
    assert_eq!(two_one[0].rows(seminormal::tableau::Component::First), vec![vec![1, 2], vec![3]]);
    assert_eq!(enum_standard_tableaux(&Shape::double(p(&[1]), p(&[1]))).len(), 2);
}

#[test]
fn eight_box_filling_is_standard_with_the_expected_contents() {
    let t = StandardTableau::from_rows(&[vec![1, 2, 4], vec![3, 5, 6], vec![7, 8]], None).unwrap();
    assert!(enum_standard_tableaux(&Shape::single(p(&[3, 3, 2]))).contains(&t));
    assert_eq!(t.content(4), 2);
    assert_eq!(t.content(1), 0);
    assert_eq!(t.contents(), vec![0, 1, -1, 2, 0, 1, -2, -1]);
}

#[test]
fn fourteen_box_double_filling_is_standard_with_signs() {
    let alpha = [vec![2, 3, 4], vec![7, 11, 13], vec![8, 12]];
    let beta = [vec![1, 5, 6, 10], vec![9], vec![14]];
    let t = StandardTableau::from_rows(&alpha, Some(&beta)).unwrap();
    assert!(enum_standard_tableaux(&Shape::double(p(&[3, 3, 2]), p(&[4, 1, 1]))).contains(&t));
    for k in [1, 5, 6, 9, 10, 14] {
        assert_eq!(t.sign(k), -1, "entry {k} lies in beta");
    }
    for k in [2, 3, 4, 7, 8, 11, 12, 13] {
        assert_eq!(t.sign(k), 1, "entry {k} lies in alpha");
    }
}

#[test]
fn non_standard_fillings_are_rejected() {
    assert!(StandardTableau::from_rows(&[vec![2, 1]], None).is_err());
    assert!(StandardTableau::from_rows(&[vec![1, 3], vec![2, 4], vec![5]], None).is_ok());
    assert!(StandardTableau::from_rows(&[vec![1, 2], vec![4, 3]], None).is_err());
    assert!(Partition::new(vec![1, 2]).is_err());
}

#[test]
fn adjacent_swaps() {
    let t = StandardTableau::from_rows(&[vec![1, 2], vec![3]], None).unwrap();
    let swapped = t.adjacent_swap(3).unwrap().unwrap();
    assert_eq!(swapped, StandardTableau::from_rows(&[vec![1, 3], vec![2]], None).unwrap());
    assert_eq!(swapped.adjacent_swap(3).unwrap().unwrap(), t);
    // 1 and 2 share a row
    assert_eq!(t.adjacent_swap(2).unwrap(), None);
}

#[test]
fn sigma_swaps_components_without_fixed_points() {
    for n in 1..=4 {
        for a in Partition::all(n) {
            let ts = enum_standard_tableaux(&Shape::double(a.clone(), a.clone()));
            for t in &ts {
                let s = t.sigma().unwrap();
                assert_ne!(&s, t);
                assert_eq!(&s.sigma().unwrap(), t);
                assert_eq!(s.relative_signs(), t.relative_signs());
                assert!(ts.contains(&s));
            }
        }
    }
}

#[test]
fn weights_of_small_tableaux() {
    let t = StandardTableau::from_rows(&[vec![1, 2], vec![3]], None).unwrap();
    assert_eq!(t.contents(), vec![0, 1, -1]);
    let row = StandardTableau::from_rows(&[vec![1, 2, 3, 4]], None).unwrap();
    assert_eq!(row.contents(), vec![0, 1, 2, 3]);
    let w = tableau_weight(&t, GroupType::A);
    let longs: Vec<Option<i64>> = w.iter().map(|l| l.long).collect();
    assert_eq!(longs, vec![Some(0), Some(1), Some(0)]);
}

#[test]
fn label_sets() {
    let a3: Vec<String> = enum_shapes(GroupType::A, 3).unwrap().iter().map(|l| l.to_string()).collect();
    assert_eq!(a3, ["3", "2,1", "1,1,1"]);
    assert_eq!(enum_shapes(GroupType::G2, 2).unwrap().len(), 6);
    // brute force: ordered pairs of partitions with sizes summing to n
    for n in 1..=6 {
        let expected: usize = (0..=n).map(|k| Partition::all(k).len() * Partition::all(n - k).len()).sum();
        assert_eq!(enum_shapes(GroupType::B, n).unwrap().len(), expected);
    }
    assert_eq!(enum_shapes(GroupType::B, 2).unwrap().len(), 5);
    // D: unordered pairs with distinct halves, plus two halves per (a, a)
    for n in 2..=6 {
        let pairs: BTreeSet<(Partition, Partition)> = enum_shapes(GroupType::B, n)
            .unwrap()
            .iter()
            .map(|l| {
                let s = l.shape().unwrap();
                let (a, b) = (s.first().clone(), s.second().unwrap().clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let expected: usize = pairs.iter().map(|(a, b)| if a == b { 2 } else { 1 }).sum();
        assert_eq!(enum_shapes(GroupType::D, n).unwrap().len(), expected, "n = {n}");
    }
}

#[test]
fn central_constants_of_small_labels() {
    for k in 1..=6 {
        let row = ShapeLabel::A(p(&[k]));
        assert_eq!(weight_constants(&row).long, Some((k * (k - 1) / 2) as i64));
        let b = ShapeLabel::B(p(&[k]), Partition::empty());
        let k = k as i64;
        assert_eq!(weight_constants(&b), LevelWeight { short: Some(k), long: Some(k * (k - 1)), zero: Some(1) });
    }
    let one_one = ShapeLabel::B(p(&[1]), p(&[1]));
    assert_eq!(weight_constants(&one_one), LevelWeight { short: Some(0), long: Some(0), zero: Some(-1) });
    let phi21 = ShapeLabel::G2(G2Label::Phi21);
    assert_eq!(weight_constants(&phi21), LevelWeight { short: Some(0), long: Some(0), zero: Some(-1) });
}

#[test]
fn shape_parsing() {
    let d = ShapeLabel::parse(GroupType::D, "(2)|(2)+").unwrap();
    assert_eq!(d.to_string(), "(2)|(2)+");
    assert_eq!(ShapeLabel::parse(GroupType::D, "(2)|(2)\u{2212}").unwrap().to_string(), "(2)|(2)-");
    assert!(ShapeLabel::parse(GroupType::D, "(2)|(2)").is_err());
    assert!(ShapeLabel::parse(GroupType::D, "(2)|(1,1)+").is_err());
    assert!(ShapeLabel::parse(GroupType::A, "1,2").is_err());
    assert!(ShapeLabel::parse(GroupType::B, "2,1").is_err());
    assert!(ShapeLabel::parse(GroupType::G2, "phi_3_0").is_err());
    assert_eq!(ShapeLabel::parse(GroupType::B, "()|(1)").unwrap().n(), 1);
}
