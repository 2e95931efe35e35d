//! Labels of irreducible representations and their central-element
//! constants.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::tableau::{Partition, Shape, StandardTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    A,
    B,
    D,
    G2,
}

impl GroupType {
    pub fn name(self) -> &'static str {
        match self {
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::D => "D",
            GroupType::G2 => "G2",
        }
    }

    /// Checks the rank: `n >= 1` for A and B, `n >= 2` for D, `n = 2` for G2.
    pub fn check_rank(self, n: usize) -> Result<(), Error> {
        let ok = match self {
            GroupType::A | GroupType::B => n >= 1,
            GroupType::D => n >= 2,
            GroupType::G2 => n == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidRank { group: self.name(), n })
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(GroupType::A),
            "B" | "b" => Ok(GroupType::B),
            "D" | "d" => Ok(GroupType::D),
            "G2" | "g2" => Ok(GroupType::G2),
            _ => Err(Error::InvalidShape(format!("unknown group type {s:?}"))),
        }
    }
}

/// The six irreducible characters of the dihedral group of order 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum G2Label {
    Phi10,
    Phi16,
    Phi13p,
    Phi13pp,
    Phi21,
    Phi22,
}

/// One of the two irreducibles of `S_2`: the trivial `(2)` or sign `(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum S2Label {
    Trivial,
    Sign,
}

impl S2Label {
    /// Eigenvalue of the generator `s1`.
    pub fn sign(self) -> i64 {
        match self {
            S2Label::Trivial => 1,
            S2Label::Sign => -1,
        }
    }

    pub fn partition(self) -> Partition {
        match self {
            S2Label::Trivial => Partition::new([2].into()).expect("valid"),
            S2Label::Sign => Partition::new([1, 1].into()).expect("valid"),
        }
    }
}

impl G2Label {
    pub const ALL: [G2Label; 6] =
        [G2Label::Phi10, G2Label::Phi16, G2Label::Phi13p, G2Label::Phi13pp, G2Label::Phi21, G2Label::Phi22];

    pub fn name(self) -> &'static str {
        match self {
            G2Label::Phi10 => "phi_1_0",
            G2Label::Phi16 => "phi_1_6",
            G2Label::Phi13p => "phi_1_3p",
            G2Label::Phi13pp => "phi_1_3pp",
            G2Label::Phi21 => "phi_2_1",
            G2Label::Phi22 => "phi_2_2",
        }
    }

    /// `(c_s, c_l, c_0)`: normalized characters of the short-reflection sum,
    /// the long-reflection sum and the longest element.
    pub fn constants(self) -> (i64, i64, i64) {
        match self {
            G2Label::Phi10 => (3, 3, 1),
            G2Label::Phi16 => (-3, -3, 1),
            G2Label::Phi13p => (3, -3, -1),
            G2Label::Phi13pp => (-3, 3, -1),
            G2Label::Phi21 => (0, 0, -1),
            G2Label::Phi22 => (0, 0, 1),
        }
    }

    /// The `S_2` labels that this module restricts to, in basis order.
    pub fn restriction(self) -> &'static [S2Label] {
        match self {
            G2Label::Phi10 | G2Label::Phi13p => &[S2Label::Trivial],
            G2Label::Phi16 | G2Label::Phi13pp => &[S2Label::Sign],
            G2Label::Phi21 | G2Label::Phi22 => &[S2Label::Trivial, S2Label::Sign],
        }
    }
}

impl FromStr for G2Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        G2Label::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidShape(format!("unknown G2 label {s:?}")))
    }
}

/// A path `S_1 -> S_2 -> WG_2` in the branching graph of `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct G2Path {
    pub level1: S2Label,
    pub label: G2Label,
}

/// All eight paths, grouped by endpoint in label order.
pub fn g2_paths() -> Vec<G2Path> {
    G2Label::ALL
        .iter()
        .flat_map(|&label| label.restriction().iter().map(move |&level1| G2Path { level1, label }))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Irreducibles of `WD_n`: unordered pairs `{alpha, beta}` with
/// `alpha != beta`, and the two halves of `(alpha, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DLabel {
    /// Stored in the order given; `(alpha, beta)` and `(beta, alpha)` name
    /// isomorphic modules with different bases.
    Pair(Partition, Partition),
    Split(Partition, Sign),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeLabel {
    A(Partition),
    B(Partition, Partition),
    D(DLabel),
    G2(G2Label),
}

impl ShapeLabel {
    pub fn group(&self) -> GroupType {
        match self {
            ShapeLabel::A(_) => GroupType::A,
            ShapeLabel::B(..) => GroupType::B,
            ShapeLabel::D(_) => GroupType::D,
            ShapeLabel::G2(_) => GroupType::G2,
        }
    }

    /// Rank of the group the label belongs to.
    pub fn n(&self) -> usize {
        match self {
            ShapeLabel::A(p) => p.size(),
            ShapeLabel::B(a, b) | ShapeLabel::D(DLabel::Pair(a, b)) => a.size() + b.size(),
            ShapeLabel::D(DLabel::Split(a, _)) => 2 * a.size(),
            ShapeLabel::G2(_) => 2,
        }
    }

    /// The Ferrers shape whose tableaux index the basis; `None` for G2.
    pub fn shape(&self) -> Option<Shape> {
        match self {
            ShapeLabel::A(p) => Some(Shape::single(p.clone())),
            ShapeLabel::B(a, b) | ShapeLabel::D(DLabel::Pair(a, b)) => Some(Shape::double(a.clone(), b.clone())),
            ShapeLabel::D(DLabel::Split(a, _)) => Some(Shape::double(a.clone(), a.clone())),
            ShapeLabel::G2(_) => None,
        }
    }

    /// Parses a label of the given group type.
    ///
    /// Single shapes are written `3,2`; double shapes `(2,1)|(1)` with `()`
    /// for the empty partition; type D halves append `+` or `-` (or U+2212); G2 labels
    /// are `phi_1_0`, `phi_1_6`, `phi_1_3p`, `phi_1_3pp`, `phi_2_1`, `phi_2_2`.
    pub fn parse(group: GroupType, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match group {
            GroupType::A => Ok(ShapeLabel::A(parse_partition(s)?)),
            GroupType::B => {
                let (a, b) = parse_double(s)?;
                Ok(ShapeLabel::B(a, b))
            }
            GroupType::D => {
                let (body, sign) = if let Some(body) = s.strip_suffix('+') {
                    (body, Some(Sign::Plus))
                } else if let Some(body) = s.strip_suffix('-').or_else(|| s.strip_suffix('\u{2212}')) {
                    (body, Some(Sign::Minus))
                } else {
                    (s, None)
                };
                let (a, b) = parse_double(body)?;
                match (sign, a == b) {
                    (Some(sign), true) if !a.is_empty() => Ok(ShapeLabel::D(DLabel::Split(a, sign))),
                    (None, false) => Ok(ShapeLabel::D(DLabel::Pair(a, b))),
                    (Some(_), _) => {
                        Err(Error::InvalidShape(format!("{s:?}: a sign suffix needs equal nonempty halves")))
                    }
                    (None, true) => Err(Error::InvalidShape(format!("{s:?}: equal halves need a + or - suffix"))),
                }
            }
            GroupType::G2 => Ok(ShapeLabel::G2(s.parse()?)),
        }
    }
}

impl fmt::Display for ShapeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeLabel::A(p) => write!(f, "{p}"),
            ShapeLabel::B(a, b) | ShapeLabel::D(DLabel::Pair(a, b)) => write!(f, "({a})|({b})"),
            ShapeLabel::D(DLabel::Split(a, sign)) => {
                write!(f, "({a})|({a}){}", if *sign == Sign::Plus { '+' } else { '-' })
            }
            ShapeLabel::G2(l) => f.write_str(l.name()),
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let rows = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidShape(format!("bad row length {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(rows)
}

fn parse_double(s: &str) -> Result<(Partition, Partition), Error> {
    let bad = || Error::InvalidShape(format!("expected (rows)|(rows), got {s:?}"));
    let (l, r) = s.split_once('|').ok_or_else(bad)?;
    let inner = |t: &str| -> Result<Partition, Error> {
        let t = t.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        parse_partition(t)
    };
    Ok((inner(l)?, inner(r)?))
}

/// All irreducible labels of the group of type `group` and rank `n`.
///
/// A: partitions of `n`. B: ordered pairs `(alpha, beta)` with `|alpha|`
/// decreasing. D: one representative `(alpha, beta)` per unordered pair with
/// `alpha != beta`, then `(alpha, alpha)+` and `(alpha, alpha)-`, in B order.
/// G2: the six characters.
pub fn enum_shapes(group: GroupType, n: usize) -> Result<Vec<ShapeLabel>, Error> {
    group.check_rank(n)?;
    Ok(match group {
        GroupType::A => Partition::all(n).into_iter().map(ShapeLabel::A).collect(),
        GroupType::B => double_partitions(n).into_iter().map(|(a, b)| ShapeLabel::B(a, b)).collect(),
        GroupType::D => {
            let all = double_partitions(n);
            let mut out = Vec::new();
            for (i, (a, b)) in all.iter().enumerate() {
                if a == b {
                    out.push(ShapeLabel::D(DLabel::Split(a.clone(), Sign::Plus)));
                    out.push(ShapeLabel::D(DLabel::Split(a.clone(), Sign::Minus)));
                } else {
                    let j = all.iter().position(|(x, y)| x == b && y == a).expect("swapped pair present");
                    if i < j {
                        out.push(ShapeLabel::D(DLabel::Pair(a.clone(), b.clone())));
                    }
                }
            }
            out
        }
        GroupType::G2 => G2Label::ALL.into_iter().map(ShapeLabel::G2).collect(),
    })
}

fn double_partitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in Partition::all(k) {
            for b in Partition::all(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// Normalized characters `chi(z)/chi(1)` of the central elements at one
/// level: the short-reflection sum, the long-reflection sum and the longest
/// element, where the group has them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelWeight {
    pub short: Option<i64>,
    pub long: Option<i64>,
    pub zero: Option<i64>,
}

/// Central-element constants of a shape.
///
/// A: long = sum of contents. B: short = sum of signs, long = twice the sum
/// of contents, zero = product of signs. D: long = twice the sum of
/// contents. G2: the tabulated values.
pub fn weight_constants(label: &ShapeLabel) -> LevelWeight {
    match label {
        ShapeLabel::A(p) => LevelWeight { long: Some(p.content_sum()), ..Default::default() },
        ShapeLabel::B(a, b) => type_b_constants(a, b),
        ShapeLabel::D(DLabel::Pair(a, b)) => {
            LevelWeight { long: Some(2 * (a.content_sum() + b.content_sum())), ..Default::default() }
        }
        ShapeLabel::D(DLabel::Split(a, _)) => LevelWeight { long: Some(4 * a.content_sum()), ..Default::default() },
        ShapeLabel::G2(l) => {
            let (s, g, z) = l.constants();
            LevelWeight { short: Some(s), long: Some(g), zero: Some(z) }
        }
    }
}

fn type_b_constants(a: &Partition, b: &Partition) -> LevelWeight {
    let (na, nb) = (a.size() as i64, b.size() as i64);
    LevelWeight {
        short: Some(na - nb),
        long: Some(2 * (a.content_sum() + b.content_sum())),
        zero: Some(if nb % 2 == 0 { 1 } else { -1 }),
    }
}

/// Constants of a Ferrers shape read as a label of `group` (A or B/D).
pub fn shape_constants(group: GroupType, shape: &Shape) -> LevelWeight {
    match (group, shape.second()) {
        (GroupType::A, None) => LevelWeight { long: Some(shape.first().content_sum()), ..Default::default() },
        (GroupType::B, Some(b)) => type_b_constants(shape.first(), b),
        (GroupType::D, Some(b)) => {
            LevelWeight { long: Some(2 * (shape.first().content_sum() + b.content_sum())), ..Default::default() }
        }
        _ => panic!("shape {shape} does not belong to type {group}"),
    }
}

/// The weight of a tableau: level-`k` constants for `k = 1..=n`.
pub fn tableau_weight(t: &StandardTableau, group: GroupType) -> Vec<LevelWeight> {
    (1..=t.n()).map(|k| shape_constants(group, &t.level_shape(k))).collect()
}

/// The weight of a G2 path: the level-one constant of the `S_2` label
/// followed by the level-two constants of the endpoint.
pub fn g2_path_weight(path: &G2Path) -> [LevelWeight; 2] {
    let (s, l, z) = path.label.constants();
    [
        LevelWeight { zero: Some(path.level1.sign()), ..Default::default() },
        LevelWeight { short: Some(s), long: Some(l), zero: Some(z) },
    ]
}

/// Parses a comma list of partition rows, exposed for the CLI.
pub fn parse_rows(s: &str) -> Result<Partition, Error> {
    parse_partition(s)
}
