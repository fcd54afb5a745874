//! Cell-indexed tableaux over skew shapes: JSON parsing and serialization,
//! diagonal constancy, convergence-region membership, and the orbit of a
//! tableau under independent permutation of each diagonal.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::combin::{distinct_arrangements, factorial};
use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};

/// An assignment of a value to every cell of a skew shape. Entries are
/// stored in row-major cell order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau<V> {
    shape: SkewShape,
    entries: Vec<V>,
    row_offsets: Vec<usize>,
}

pub type IntTableau = Tableau<i64>;

impl<V: Clone> Tableau<V> {
    pub fn new(shape: SkewShape, entries: Vec<V>) -> Result<Self> {
        if entries.len() as u64 != shape.num_cells() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.num_cells()
            )));
        }
        let row_offsets = offsets(&shape);
        Ok(Tableau { shape, entries, row_offsets })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[V] {
        &self.entries
    }

    pub fn get(&self, cell: Cell) -> Option<&V> {
        self.index_of(cell).map(|i| &self.entries[i])
    }

    fn index_of(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        let r = (cell.row - 1) as usize;
        let inner = self.shape.inner().part(r);
        Some(self.row_offsets[r] + (cell.col - inner - 1) as usize)
    }

    /// Cells paired with their entries, row-major.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, &V)> {
        self.shape.cells().into_iter().zip(self.entries.iter())
    }

    pub fn map<W: Clone>(&self, f: impl FnMut(&V) -> W) -> Tableau<W> {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(f).collect(),
            row_offsets: self.row_offsets.clone(),
        }
    }
}

fn offsets(shape: &SkewShape) -> Vec<usize> {
    let mut out = Vec::with_capacity(shape.num_rows());
    let mut acc = 0usize;
    for r in 0..shape.num_rows() {
        out.push(acc);
        acc += (shape.outer().part(r) - shape.inner().part(r)) as usize;
    }
    out
}

impl IntTableau {
    /// Build a diagonal-constant tableau from a diagonal-to-value map.
    /// Every diagonal of the shape must be covered.
    pub fn from_diagonals(shape: &SkewShape, values: &BTreeMap<i64, i64>) -> Result<IntTableau> {
        let entries = shape
            .cells()
            .iter()
            .map(|c| {
                values.get(&c.diagonal()).copied().ok_or_else(|| {
                    Error::InvalidTableau(format!("no value for diagonal {}", c.diagonal()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape.clone(), entries)
    }

    /// Total of all entries.
    pub fn weight(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Cellwise sum with a nonnegative shift tableau given in row-major order.
    pub fn add_shift(&self, shift: &[u32]) -> Result<IntTableau> {
        if shift.len() != self.entries.len() {
            return Err(Error::InvalidTableau("shift length mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(shift)
            .map(|(&v, &e)| v + e as i64)
            .collect();
        Tableau::new(self.shape.clone(), entries)
    }
}

/// True iff all entries on each diagonal are equal.
pub fn is_diagonal_constant(t: &IntTableau) -> bool {
    diagonal_values(t).is_some()
}

/// The common value on each diagonal, or `None` if some diagonal is not
/// constant.
pub fn diagonal_values(t: &IntTableau) -> Option<BTreeMap<i64, i64>> {
    let mut map = BTreeMap::new();
    for (cell, &v) in t.iter() {
        match map.insert(cell.diagonal(), v) {
            Some(prev) if prev != v => return None,
            _ => {}
        }
    }
    Some(map)
}

/// Convergence regions for integer tableaux: entries at least 1 everywhere,
/// strictly above 1 on the named cell set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Region {
    /// Strict on the corners of the shape.
    W,
    /// Strict on every cell of a column-bottom diagonal.
    WE,
    /// Strict on the column bottoms; additionally requires diagonal
    /// constancy.
    WJt,
}

pub fn in_convergence_region(t: &IntTableau, region: Region) -> bool {
    if t.entries().iter().any(|&v| v < 1) {
        return false;
    }
    let strict: Vec<Cell> = match region {
        Region::W => t.shape().corners(),
        Region::WE => t.shape().e_cells(),
        Region::WJt => {
            if !is_diagonal_constant(t) {
                return false;
            }
            t.shape().column_bottoms()
        }
    };
    strict.into_iter().all(|c| *t.get(c).expect("cell in shape") > 1)
}

/// All tableaux obtained by permuting the entry multiset of each diagonal
/// independently. Deduplicated, deterministic order, contains `t`.
pub fn diag_orbit(t: &IntTableau) -> Vec<IntTableau> {
    let cells = t.shape().cells();
    let mut by_diag: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        by_diag.entry(c.diagonal()).or_default().push(i);
    }
    let groups: Vec<(&Vec<usize>, Vec<Vec<i64>>)> = by_diag
        .values()
        .map(|idxs| {
            let vals: Vec<i64> = idxs.iter().map(|&i| t.entries()[i]).collect();
            (idxs, distinct_arrangements(&vals))
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut entries = t.entries().to_vec();
        for (g, &pick) in groups.iter().zip(&choice) {
            for (&idx, &v) in g.0.iter().zip(&g.1[pick]) {
                entries[idx] = v;
            }
        }
        out.push(Tableau::new(t.shape().clone(), entries).expect("same shape"));
        // odometer over arrangement choices
        let mut pos = groups.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < groups[pos].1.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Multiplicity with which every member of `diag_orbit(t)` occurs when the
/// symmetrization is taken over all tuples of diagonal permutations: the
/// product over diagonals of the factorials of the entry multiplicities.
pub fn diag_multiplicity(t: &IntTableau) -> u64 {
    let mut by_diag: BTreeMap<i64, BTreeMap<i64, u64>> = BTreeMap::new();
    for (cell, &v) in t.iter() {
        *by_diag.entry(cell.diagonal()).or_default().entry(v).or_insert(0) += 1;
    }
    by_diag
        .values()
        .flat_map(|counts| counts.values())
        .map(|&c| factorial(c))
        .product()
}

/// Parse a tableau document: `{"shape": {...}, "rows": [[...]]}` where each
/// row has exactly `lambda_i` slots, the first `mu_i` of them `null`.
pub fn parse_tableau(text: &str) -> Result<IntTableau> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let shape_val = obj.get("shape").ok_or_else(|| Error::Parse("missing \"shape\"".into()))?;
    let shape: SkewShape =
        serde_json::from_value(shape_val.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"rows\" array".into()))?;
    if rows.len() != shape.num_rows() {
        return Err(Error::Parse(format!(
            "{} rows for a shape with {} rows",
            rows.len(),
            shape.num_rows()
        )));
    }
    let mut entries = Vec::with_capacity(shape.num_cells() as usize);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse(format!("row {} is not an array", r + 1)))?;
        let lam = shape.outer().part(r) as usize;
        let mu = shape.inner().part(r) as usize;
        if row.len() != lam {
            return Err(Error::Parse(format!(
                "row {} has {} slots, expected {}",
                r + 1,
                row.len(),
                lam
            )));
        }
        for (j, v) in row.iter().enumerate() {
            if j < mu {
                if !v.is_null() {
                    return Err(Error::Parse(format!(
                        "row {} slot {} must be null (inner cell)",
                        r + 1,
                        j + 1
                    )));
                }
            } else if let Some(n) = v.as_i64() {
                entries.push(n);
            } else {
                return Err(Error::Parse(format!(
                    "row {} slot {}: expected an integer, got {}",
                    r + 1,
                    j + 1,
                    v
                )));
            }
        }
    }
    Tableau::new(shape, entries)
}

/// Serialize with rows padded by `null` on inner cells.
pub fn tableau_to_json(t: &IntTableau) -> Value {
    let shape = t.shape();
    let mut rows = Vec::with_capacity(shape.num_rows());
    let mut it = t.entries().iter();
    for r in 0..shape.num_rows() {
        let mut row = Vec::with_capacity(shape.outer().part(r) as usize);
        for _ in 0..shape.inner().part(r) {
            row.push(Value::Null);
        }
        for _ in shape.inner().part(r)..shape.outer().part(r) {
            row.push(json!(it.next().expect("entry count matches shape")));
        }
        rows.push(Value::Array(row));
    }
    json!({"shape": shape, "rows": rows})
}

pub fn tableau_to_string(t: &IntTableau) -> String {
    tableau_to_json(t).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn tab(text: &str) -> IntTableau {
        parse_tableau(text).unwrap()
    }

    #[test]
    fn parse_examples() {
        let t = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[2,3],[4,2]]}"#);
        assert_eq!(*t.get(Cell::new(1, 1)).unwrap(), 2);
        assert_eq!(*t.get(Cell::new(1, 2)).unwrap(), 3);
        assert_eq!(*t.get(Cell::new(2, 1)).unwrap(), 4);
        assert_eq!(*t.get(Cell::new(2, 2)).unwrap(), 2);

        let t = tab(r#"{"shape":{"lambda":[1]},"rows":[[2]]}"#);
        assert_eq!(t.entries(), &[2]);

        let t = tab(r#"{"shape":{"lambda":[3,2,1],"mu":[1,1]},"rows":[[null,1,3],[null,2],[5]]}"#);
        assert_eq!(t.entries(), &[1, 3, 2, 5]);
        assert_eq!(t.shape().num_cells(), 4);
    }

    #[test]
    fn parse_errors() {
        // null on a shape cell
        assert!(parse_tableau(r#"{"shape":{"lambda":[2]},"rows":[[null,1]]}"#).is_err());
        // non-integer entry
        assert!(parse_tableau(r#"{"shape":{"lambda":[1]},"rows":[["x"]]}"#).is_err());
        // row length mismatch
        assert!(parse_tableau(r#"{"shape":{"lambda":[2,2]},"rows":[[2,3],[4]]}"#).is_err());
        // missing null padding
        assert!(
            parse_tableau(r#"{"shape":{"lambda":[2,2],"mu":[1]},"rows":[[7,3],[4,2]]}"#).is_err()
        );
    }

    #[test]
    fn round_trip() {
        let src = r#"{"shape":{"lambda":[3,2,1],"mu":[1,1]},"rows":[[null,1,3],[null,2],[5]]}"#;
        let t = tab(src);
        let back = parse_tableau(&tableau_to_string(&t)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn diagonal_constancy() {
        assert!(is_diagonal_constant(&tab(
            r#"{"shape":{"lambda":[2,2]},"rows":[[2,3],[4,2]]}"#
        )));
        assert!(!is_diagonal_constant(&tab(
            r#"{"shape":{"lambda":[2,2]},"rows":[[3,3],[4,2]]}"#
        )));
        assert!(is_diagonal_constant(&tab(r#"{"shape":{"lambda":[1]},"rows":[[7]]}"#)));
    }

    #[test]
    fn from_diagonals_builds_constant_tableau() {
        let shape = SkewShape::from_outer(Partition::new(vec![2, 2]).unwrap());
        let vals = BTreeMap::from([(-1, 4), (0, 2), (1, 3)]);
        let t = IntTableau::from_diagonals(&shape, &vals).unwrap();
        assert_eq!(t.entries(), &[2, 3, 4, 2]);
    }

    #[test]
    fn convergence_regions() {
        let t = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[2,3],[4,2]]}"#);
        assert!(in_convergence_region(&t, Region::WJt));
        assert!(in_convergence_region(&t, Region::W));

        let single_one = tab(r#"{"shape":{"lambda":[1]},"rows":[[1]]}"#);
        assert!(!in_convergence_region(&single_one, Region::W));

        let row = tab(r#"{"shape":{"lambda":[2]},"rows":[[1,2]]}"#);
        assert!(in_convergence_region(&row, Region::W));

        // not diagonal-constant: fails WJt but can sit in WE
        let t = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[3,3],[4,2]]}"#);
        assert!(!in_convergence_region(&t, Region::WJt));
        assert!(in_convergence_region(&t, Region::WE));
    }

    #[test]
    fn orbit_examples() {
        let t = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[3,3],[4,2]]}"#);
        let orbit = diag_orbit(&t);
        assert_eq!(orbit.len(), 2);
        let expected = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[2,3],[4,3]]}"#);
        assert!(orbit.contains(&t));
        assert!(orbit.contains(&expected));
        assert_eq!(diag_multiplicity(&t), 1);

        let constant = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[2,3],[4,2]]}"#);
        assert_eq!(diag_orbit(&constant), vec![constant.clone()]);
        assert_eq!(diag_multiplicity(&constant), 2);

        let sym = tab(r#"{"shape":{"lambda":[2,2]},"rows":[[2,4],[4,2]]}"#);
        assert_eq!(diag_orbit(&sym).len(), 1);
        assert_eq!(diag_multiplicity(&sym), 2);
    }

    #[test]
    fn orbit_closure() {
        let t = tab(r#"{"shape":{"lambda":[3,2]},"rows":[[2,3,1],[4,2]]}"#);
        let orbit = diag_orbit(&t);
        for member in &orbit {
            let mut again = diag_orbit(member);
            again.sort_by(|a, b| a.entries().cmp(b.entries()));
            let mut orig = orbit.clone();
            orig.sort_by(|a, b| a.entries().cmp(b.entries()));
            assert_eq!(again, orig);
        }
    }
}
