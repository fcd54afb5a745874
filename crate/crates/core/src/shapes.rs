//! Partitions, skew shapes and their distinguished cell sets.
//!
//! Cells are 1-based `(row, col)` pairs; the diagonal index of a cell is
//! `col - row`, constant along north-east diagonals.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    /// Diagonal index `col - row`.
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// An integer partition: weakly decreasing positive parts. Trailing zeros
/// are stripped on construction; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero part in {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `i`-th part, 0-based, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Conjugate (transposed) partition: `conj_j = #{i : parts_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut conj = Vec::with_capacity(cols);
        for j in 1..=cols {
            conj.push(self.parts.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition { parts: conj }
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Corner cells `(i, parts_i)` with `parts_{i+1} < parts_i`.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| Cell::new(i as u32 + 1, self.part(i)))
            .collect()
    }

    /// Cells lying on a diagonal through the bottom box of some column.
    pub fn e_cells(&self) -> Vec<Cell> {
        SkewShape::from_outer(self.clone()).e_cells()
    }

    /// All partitions fitting in a `rows x cols` box, by weight then lex.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut i = 0;
        while i < out.len() {
            let cur = out[i].clone();
            if cur.len() < rows {
                let cap = if cur.is_empty() { cols } else { cur.part(cur.len() - 1) };
                for p in 1..=cap {
                    let mut parts = cur.parts.clone();
                    parts.push(p);
                    out.push(Partition { parts });
                }
            }
            i += 1;
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A skew diagram `outer/inner`, the boxes of `outer` not in `inner`.
/// Disconnected shapes and empty rows or columns are legal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner {} not contained in outer {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn from_outer(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn empty() -> Self {
        SkewShape { outer: Partition::empty(), inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of columns of the outer partition.
    pub fn num_cols(&self) -> usize {
        self.outer.part(0) as usize
    }

    pub fn num_cells(&self) -> u64 {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.num_cells() == 0
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        if cell.row == 0 || cell.col == 0 {
            return false;
        }
        let r = (cell.row - 1) as usize;
        self.inner.part(r) < cell.col && cell.col <= self.outer.part(r)
    }

    /// Cells in row-major order (by row, then column).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.num_cells() as usize);
        for r in 0..self.outer.len() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                out.push(Cell::new(r as u32 + 1, c));
            }
        }
        out
    }

    /// Row span of column `c` (1-based), `None` when the column is empty.
    pub fn col_range(&self, c: u32) -> Option<(u32, u32)> {
        let top = self.inner.conjugate().part(c as usize - 1) + 1;
        let bottom = self.outer.conjugate().part(c as usize - 1);
        if top <= bottom {
            Some((top, bottom))
        } else {
            None
        }
    }

    /// Corners: cells whose right and lower neighbors both fall outside.
    pub fn corners(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|&c| {
                !self.contains_cell(Cell::new(c.row, c.col + 1))
                    && !self.contains_cell(Cell::new(c.row + 1, c.col))
            })
            .collect()
    }

    /// Diagonal indices of the bottom cell of each nonempty column.
    pub fn e_diagonals(&self) -> BTreeSet<i64> {
        let outer_conj = self.outer.conjugate();
        let inner_conj = self.inner.conjugate();
        let mut out = BTreeSet::new();
        for c in 1..=self.num_cols() as u32 {
            let bottom = outer_conj.part(c as usize - 1);
            if bottom > inner_conj.part(c as usize - 1) {
                out.insert(c as i64 - bottom as i64);
            }
        }
        out
    }

    /// Cells lying on a column-bottom diagonal.
    pub fn e_cells(&self) -> Vec<Cell> {
        let diags = self.e_diagonals();
        self.cells()
            .into_iter()
            .filter(|c| diags.contains(&c.diagonal()))
            .collect()
    }

    /// Bottom cells `(conj_c, c)` of the nonempty columns.
    pub fn column_bottoms(&self) -> Vec<Cell> {
        (1..=self.num_cols() as u32)
            .filter_map(|c| self.col_range(c).map(|(_, b)| Cell::new(b, c)))
            .collect()
    }

    /// Diagonal indices that carry at least one cell.
    pub fn diagonals(&self) -> BTreeSet<i64> {
        self.cells().iter().map(|c| c.diagonal()).collect()
    }

    /// Translate the shape so that row 1 and column 1 are nonempty.
    /// Returns the reduced shape with the row and column shift applied.
    pub fn reduce(&self) -> (SkewShape, u32, u32) {
        if self.is_empty() {
            return (SkewShape::empty(), 0, 0);
        }
        let mut rows: Vec<(u32, u32)> = Vec::new();
        for r in 0..self.outer.len() {
            let (lo, hi) = (self.inner.part(r), self.outer.part(r));
            if lo < hi {
                rows.push((lo, hi));
            } else {
                rows.push((0, 0));
            }
        }
        let first = rows.iter().position(|&(_, hi)| hi > 0).unwrap();
        let last = rows.iter().rposition(|&(_, hi)| hi > 0).unwrap();
        let col_shift = rows[first..=last]
            .iter()
            .filter(|&&(_, hi)| hi > 0)
            .map(|&(lo, _)| lo)
            .min()
            .unwrap();
        // Rows emptied inside the range keep a consistent filler width so
        // outer stays weakly decreasing.
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut next_width = 0u32;
        for idx in (first..=last).rev() {
            let (lo, hi) = rows[idx];
            if hi > 0 {
                outer.push(hi - col_shift);
                inner.push(lo - col_shift);
                next_width = hi - col_shift;
            } else {
                outer.push(next_width);
                inner.push(next_width);
            }
        }
        outer.reverse();
        inner.reverse();
        let shape = SkewShape::new(
            Partition::new(outer).expect("reduced outer valid"),
            Partition::new(inner).expect("reduced inner valid"),
        )
        .expect("reduced shape valid");
        (shape, first as u32, col_shift)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SkewShapeRepr {
    lambda: Partition,
    #[serde(default = "Partition::empty", skip_serializing_if = "Partition::is_empty")]
    mu: Partition,
}

impl Serialize for SkewShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SkewShapeRepr { lambda: self.outer.clone(), mu: self.inner.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SkewShapeRepr::deserialize(d)?;
        SkewShape::new(repr.lambda, repr.mu).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 3, 2]).conjugate(), p(&[4, 4, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn conjugate_is_brute_force_transpose() {
        for lam in Partition::all_in_box(5, 5) {
            let conj = lam.conjugate();
            let cells: std::collections::BTreeSet<(u32, u32)> = SkewShape::from_outer(lam.clone())
                .cells()
                .into_iter()
                .map(|c| (c.col, c.row))
                .collect();
            let transposed: std::collections::BTreeSet<(u32, u32)> =
                SkewShape::from_outer(conj.clone())
                    .cells()
                    .into_iter()
                    .map(|c| (c.row, c.col))
                    .collect();
            assert_eq!(cells, transposed, "transpose mismatch for {}", lam);
            assert_eq!(conj.conjugate(), lam);
        }
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![3, 0, 2]).is_err());
        assert_eq!(p(&[3, 2]).parts(), Partition::new(vec![3, 2, 0, 0]).unwrap().parts());
    }

    #[test]
    fn corner_examples() {
        assert_eq!(p(&[2, 2]).corners(), vec![Cell::new(2, 2)]);
        assert_eq!(p(&[1]).corners(), vec![Cell::new(1, 1)]);
        assert_eq!(p(&[3, 1]).corners(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
    }

    #[test]
    fn corners_match_brute_force_rule() {
        for lam in Partition::all_in_box(4, 4) {
            let shape = SkewShape::from_outer(lam.clone());
            assert_eq!(lam.corners(), shape.corners(), "corner mismatch for {}", lam);
        }
    }

    #[test]
    fn e_cell_examples() {
        let sort = |mut v: Vec<Cell>| {
            v.sort();
            v
        };
        assert_eq!(p(&[1]).e_cells(), vec![Cell::new(1, 1)]);
        assert_eq!(
            sort(p(&[2, 2]).e_cells()),
            vec![Cell::new(1, 1), Cell::new(2, 1), Cell::new(2, 2)]
        );
        assert_eq!(sort(p(&[2]).e_cells()), vec![Cell::new(1, 1), Cell::new(1, 2)]);
    }

    #[test]
    fn column_bottoms_are_e_cells() {
        for lam in Partition::all_in_box(4, 4) {
            let shape = SkewShape::from_outer(lam.clone());
            let e: std::collections::BTreeSet<Cell> = lam.e_cells().into_iter().collect();
            for bottom in shape.column_bottoms() {
                assert!(e.contains(&bottom), "{} missing bottom {}", lam, bottom);
            }
        }
    }

    #[test]
    fn cells_row_major() {
        let shape = SkewShape::from_outer(p(&[2, 2]));
        assert_eq!(
            shape.cells(),
            vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1), Cell::new(2, 2)]
        );
        let skew = SkewShape::new(p(&[3, 2, 1]), p(&[1, 1])).unwrap();
        assert_eq!(
            skew.cells(),
            vec![Cell::new(1, 2), Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
        );
        assert_eq!(skew.num_cells(), 4);
        assert!(SkewShape::empty().cells().is_empty());
    }

    #[test]
    fn skew_requires_containment() {
        assert!(SkewShape::new(p(&[2, 1]), p(&[3])).is_err());
        // disconnected shapes are fine
        let disc = SkewShape::new(p(&[3, 1]), p(&[2])).unwrap();
        assert_eq!(disc.cells(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
    }

    #[test]
    fn shape_json_round_trip() {
        let skew = SkewShape::new(p(&[3, 2, 1]), p(&[1, 1])).unwrap();
        let js = serde_json::to_string(&skew).unwrap();
        assert_eq!(js, r#"{"lambda":[3,2,1],"mu":[1,1]}"#);
        let back: SkewShape = serde_json::from_str(&js).unwrap();
        assert_eq!(back, skew);
        let plain: SkewShape = serde_json::from_str(r#"{"lambda":[2,2]}"#).unwrap();
        assert!(plain.inner().is_empty());
    }

    #[test]
    fn reduce_translates_to_origin() {
        // (2,2)/(1,1) is a shifted single column
        let s = SkewShape::new(p(&[2, 2]), p(&[1, 1])).unwrap();
        let (red, dr, dc) = s.reduce();
        assert_eq!((dr, dc), (0, 1));
        assert_eq!(red, SkewShape::from_outer(p(&[1, 1])));
        // middle empty column survives reduction
        let s = SkewShape::new(p(&[3, 1]), p(&[2])).unwrap();
        let (red, _, _) = s.reduce();
        assert_eq!(red, s);
    }
}
