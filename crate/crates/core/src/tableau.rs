//! Partitions, single and double Ferrers shapes, and standard tableaux.
//!
//! A standard tableau with `n` entries is stored as the sequence of boxes
//! holding `1, 2, ..., n`. Read that way it is also a path in the branching
//! graph: the first `k` boxes form the level-`k` shape.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// A partition, stored as its weakly decreasing positive row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self, Error> {
        if rows.contains(&0) {
            return Err(Error::InvalidShape(format!("zero row in {rows:?}")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row length at 1-based row `r`, zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    /// All partitions of `n`, largest first in lexicographic order:
    /// `(3), (2,1), (1,1,1)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            for r in (1..=rem.min(max)).rev() {
                cur.push(r);
                go(rem - r, r, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Sum of contents `col - row` over all boxes.
    pub fn content_sum(&self) -> i64 {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let r = i as i64 + 1;
                (1..=len as i64).map(|c| c - r).sum::<i64>()
            })
            .sum()
    }

    /// The partition with the last box of 1-based row `r` removed.
    fn without_box(&self, r: usize) -> Partition {
        let mut rows = self.rows.clone();
        rows[r - 1] -= 1;
        if rows[r - 1] == 0 {
            rows.pop();
        }
        Partition { rows }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Which half of a double shape a box lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    First,
    Second,
}

impl Component {
    /// `+1` for the first component, `-1` for the second.
    pub fn sign(self) -> i64 {
        match self {
            Component::First => 1,
            Component::Second => -1,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Component::First => Component::Second,
            Component::Second => Component::First,
        }
    }
}

/// A box of a (double) Ferrers diagram, 1-based. Ordered by
/// `(component, row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub component: Component,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn sign(&self) -> i64 {
        self.component.sign()
    }
}

/// A single partition, or an ordered pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    first: Partition,
    second: Option<Partition>,
}

impl Shape {
    pub fn single(p: Partition) -> Self {
        Self { first: p, second: None }
    }

    pub fn double(alpha: Partition, beta: Partition) -> Self {
        Self { first: alpha, second: Some(beta) }
    }

    pub fn is_double(&self) -> bool {
        self.second.is_some()
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> Option<&Partition> {
        self.second.as_ref()
    }

    pub fn part(&self, c: Component) -> &Partition {
        match c {
            Component::First => &self.first,
            Component::Second => self.second.as_ref().expect("single shape has no second component"),
        }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.as_ref().map_or(0, Partition::size)
    }

    fn components(&self) -> &'static [Component] {
        if self.is_double() {
            &[Component::First, Component::Second]
        } else {
            &[Component::First]
        }
    }

    /// Components exchanged; fails on single shapes.
    pub fn swapped(&self) -> Result<Self, Error> {
        let beta = self.second.clone().ok_or(Error::SingleShape)?;
        Ok(Self::double(beta, self.first.clone()))
    }

    /// Shapes obtained by removing one corner box, in corner order.
    pub fn removals(&self) -> Vec<Shape> {
        let mut out = Vec::new();
        for &c in self.components() {
            let p = self.part(c);
            for r in 1..=p.num_rows() {
                if p.row_len(r) > p.row_len(r + 1) {
                    let q = p.without_box(r);
                    out.push(match c {
                        Component::First => Shape { first: q, second: self.second.clone() },
                        Component::Second => Shape { first: self.first.clone(), second: Some(q) },
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.second {
            None => write!(f, "{}", self.first),
            Some(b) => write!(f, "({})|({})", self.first, b),
        }
    }
}

/// A standard filling of a shape; `cells[k - 1]` holds the box of entry `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Shape,
    cells: Vec<Cell>,
}

impl Ord for StandardTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells.cmp(&other.cells).then_with(|| self.shape.cmp(&other.shape))
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All standard tableaux of `shape` in canonical order: lexicographic on the
/// box sequence `L(1), L(2), ...` with boxes compared by
/// `(component, row, col)`.
pub fn enum_standard_tableaux(shape: &Shape) -> Vec<StandardTableau> {
    let comps = shape.components();
    let targets: Vec<&Partition> = comps.iter().map(|&c| shape.part(c)).collect();
    let mut filled: Vec<Vec<usize>> = targets.iter().map(|p| vec![0; p.num_rows()]).collect();
    let mut cells = Vec::with_capacity(shape.size());
    let mut out = Vec::new();

    fn go(
        comps: &[Component],
        targets: &[&Partition],
        filled: &mut [Vec<usize>],
        cells: &mut Vec<Cell>,
        n: usize,
        shape: &Shape,
        out: &mut Vec<StandardTableau>,
    ) {
        if cells.len() == n {
            out.push(StandardTableau { shape: shape.clone(), cells: cells.clone() });
            return;
        }
        for ci in 0..comps.len() {
            for r in 0..targets[ci].num_rows() {
                let len = filled[ci][r];
                if len < targets[ci].rows()[r] && (r == 0 || filled[ci][r - 1] > len) {
                    cells.push(Cell { component: comps[ci], row: r + 1, col: len + 1 });
                    filled[ci][r] += 1;
                    go(comps, targets, filled, cells, n, shape, out);
                    filled[ci][r] -= 1;
                    cells.pop();
                }
            }
        }
    }

    go(comps, &targets, &mut filled, &mut cells, shape.size(), shape, &mut out);
    out
}

impl StandardTableau {
    /// Builds a tableau from row-wise entries of each component. `second`
    /// must be `Some` exactly for double shapes.
    pub fn from_rows(first: &[Vec<usize>], second: Option<&[Vec<usize>]>) -> Result<Self, Error> {
        let part = |rows: &[Vec<usize>]| Partition::new(rows.iter().map(Vec::len).collect());
        let shape = match second {
            None => Shape::single(part(first)?),
            Some(s) => Shape::double(part(first)?, part(s)?),
        };
        let n = shape.size();
        let mut cells: Vec<Option<Cell>> = vec![None; n];
        let mut place = |rows: &[Vec<usize>], component: Component| -> Result<(), Error> {
            for (r, row) in rows.iter().enumerate() {
                for (c, &k) in row.iter().enumerate() {
                    let slot = cells
                        .get_mut(k.wrapping_sub(1))
                        .ok_or_else(|| Error::InvalidShape(format!("entry {k} outside 1..={n}")))?;
                    if slot.is_some() {
                        return Err(Error::InvalidShape(format!("entry {k} repeated")));
                    }
                    *slot = Some(Cell { component, row: r + 1, col: c + 1 });
                }
            }
            Ok(())
        };
        place(first, Component::First)?;
        if let Some(s) = second {
            place(s, Component::Second)?;
        }
        let cells: Vec<Cell> = cells.into_iter().map(|c| c.expect("bijective filling")).collect();
        let t = StandardTableau { shape, cells };
        if !t.is_standard() {
            return Err(Error::InvalidShape(String::from("filling is not standard")));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        // box (r, c) must arrive after (r-1, c) and (r, c-1)
        let pos = |cell: &Cell| self.cells.iter().position(|x| x == cell);
        self.cells.iter().enumerate().all(|(k, cell)| {
            let above = Cell { row: cell.row - 1, ..*cell };
            let left = Cell { col: cell.col - 1, ..*cell };
            (cell.row == 1 || pos(&above).is_some_and(|j| j < k))
                && (cell.col == 1 || pos(&left).is_some_and(|j| j < k))
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// The box holding entry `k`, 1-based.
    pub fn cell(&self, k: usize) -> Result<Cell, Error> {
        if k == 0 || k > self.n() {
            return Err(Error::OutOfRange { index: k, max: self.n() });
        }
        Ok(self.cells[k - 1])
    }

    /// `(content, sign)` of the box holding `k`.
    pub fn box_stats(&self, k: usize) -> Result<(i64, i64), Error> {
        let c = self.cell(k)?;
        Ok((c.content(), c.sign()))
    }

    pub fn content(&self, k: usize) -> i64 {
        self.cells[k - 1].content()
    }

    pub fn sign(&self, k: usize) -> i64 {
        self.cells[k - 1].sign()
    }

    /// Row-wise entries of one component.
    pub fn rows(&self, c: Component) -> Vec<Vec<usize>> {
        let p = self.shape.part(c);
        let mut rows: Vec<Vec<usize>> = p.rows().iter().map(|&len| vec![0; len]).collect();
        for (k, cell) in self.cells.iter().enumerate() {
            if cell.component == c {
                rows[cell.row - 1][cell.col - 1] = k + 1;
            }
        }
        rows
    }

    /// The filling with `i - 1` and `i` exchanged, when that is standard.
    pub fn adjacent_swap(&self, i: usize) -> Result<Option<Self>, Error> {
        if i < 2 || i > self.n() {
            return Err(Error::OutOfRange { index: i, max: self.n() });
        }
        let (a, b) = (self.cells[i - 2], self.cells[i - 1]);
        if a.component == b.component && (a.row == b.row || a.col == b.col) {
            return Ok(None);
        }
        let mut cells = self.cells.clone();
        cells.swap(i - 2, i - 1);
        Ok(Some(Self { shape: self.shape.clone(), cells }))
    }

    /// Exchanges the two components of a double tableau.
    pub fn sigma(&self) -> Result<Self, Error> {
        let shape = self.shape.swapped()?;
        let cells = self.cells.iter().map(|c| Cell { component: c.component.other(), ..*c }).collect();
        Ok(Self { shape, cells })
    }

    /// The tableau formed by entries `1..=k`.
    pub fn restrict(&self, k: usize) -> Self {
        let cells = self.cells[..k].to_vec();
        let mut lens: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for c in &cells {
            let v = &mut lens[c.component as usize];
            if v.len() < c.row {
                v.resize(c.row, 0);
            }
            v[c.row - 1] += 1;
        }
        let [a, b] = lens;
        let shape =
            Shape { first: Partition { rows: a }, second: self.shape.second.as_ref().map(|_| Partition { rows: b }) };
        Self { shape, cells }
    }

    /// The shape formed by the boxes holding `1..=k`.
    pub fn level_shape(&self, k: usize) -> Shape {
        self.restrict(k).shape
    }

    /// Contents of `L(1), ..., L(n)`.
    pub fn contents(&self) -> Vec<i64> {
        self.cells.iter().map(Cell::content).collect()
    }

    /// Signs of `L(1), ..., L(n)`.
    pub fn signs(&self) -> Vec<i64> {
        self.cells.iter().map(Cell::sign).collect()
    }

    /// Signs relative to the box of 1: `sgn L(1) * sgn L(k)`.
    pub fn relative_signs(&self) -> Vec<i64> {
        let s1 = self.cells.first().map_or(1, Cell::sign);
        self.cells.iter().map(|c| s1 * c.sign()).collect()
    }

    /// Position of this tableau in `enum_standard_tableaux(self.shape())`.
    pub fn canonical_index(&self) -> usize {
        enum_standard_tableaux(&self.shape).binary_search(self).expect("tableau belongs to its own shape")
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |f: &mut fmt::Formatter<'_>, rows: Vec<Vec<usize>>| -> fmt::Result {
            f.write_str("[")?;
            for (i, row) in rows.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{row:?}")?;
            }
            f.write_str("]")
        };
        show(f, self.rows(Component::First))?;
        if self.shape.is_double() {
            f.write_str("|")?;
            show(f, self.rows(Component::Second))?;
        }
        Ok(())
    }
}
