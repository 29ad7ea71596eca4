//! Left-justified triangular arrays with 1-based matrix indexing.
//!
//! Row `i` (counted from the top) holds exactly `i` entries, and `T(i, j)` is
//! the `j`-th entry from the left. Storage is a single flat vector in
//! row-major order.

use std::fmt;

use crate::error::{shape, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle<V> {
    size: usize,
    cells: Vec<V>,
}

/// Offset of the first cell of 1-based row `i`.
#[inline]
fn row_start(i: usize) -> usize {
    (i - 1) * i / 2
}

/// Number of cells in a triangle with `size` rows.
#[inline]
pub fn cell_count(size: usize) -> usize {
    size * (size + 1) / 2
}

impl<V> Triangle<V> {
    /// Builds a triangle from its rows; row `i` must have `i` entries.
    pub fn from_rows(rows: Vec<Vec<V>>) -> Result<Self> {
        let size = rows.len();
        let mut cells = Vec::with_capacity(cell_count(size));
        for (k, row) in rows.into_iter().enumerate() {
            if row.len() != k + 1 {
                return Err(shape(format!(
                    "row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    k + 1
                )));
            }
            cells.extend(row);
        }
        Ok(Triangle { size, cells })
    }

    /// Builds a triangle from its row-major cell list.
    pub fn from_cells(size: usize, cells: Vec<V>) -> Result<Self> {
        if cells.len() != cell_count(size) {
            return Err(shape(format!(
                "{} cells given for a triangle of size {size}, expected {}",
                cells.len(),
                cell_count(size)
            )));
        }
        Ok(Triangle { size, cells })
    }

    /// Builds a triangle entry by entry from `f(i, j)`.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> V) -> Self {
        let mut cells = Vec::with_capacity(cell_count(size));
        for i in 1..=size {
            for j in 1..=i {
                cells.push(f(i, j));
            }
        }
        Triangle { size, cells }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `T(i, j)`, or `None` outside `1 ≤ j ≤ i ≤ size`.
    pub fn get(&self, i: usize, j: usize) -> Option<&V> {
        if i == 0 || j == 0 || j > i || i > self.size {
            return None;
        }
        self.cells.get(row_start(i) + j - 1)
    }

    /// Row `i` as a slice. Panics if `i` is outside `1..=size`.
    pub fn row(&self, i: usize) -> &[V] {
        assert!(
            (1..=self.size).contains(&i),
            "row {i} outside a triangle of size {}",
            self.size
        );
        &self.cells[row_start(i)..row_start(i) + i]
    }

    /// Rows from top to bottom.
    pub fn rows(&self) -> impl Iterator<Item = &[V]> + '_ {
        (1..=self.size).map(move |i| self.row(i))
    }

    /// The sub-row `T(i, [j:k]) = (T(i,j), …, T(i,k))`.
    ///
    /// The empty row is returned when `i < 1` or `k < j`; otherwise the
    /// indices must satisfy `1 ≤ j ≤ k ≤ i ≤ size`.
    pub fn subrow(&self, i: usize, j: usize, k: usize) -> Result<&[V]> {
        if i < 1 || k < j {
            return Ok(&[]);
        }
        if j < 1 || k > i || i > self.size {
            return Err(Error::Index(format!(
                "sub-row ({i}, [{j}:{k}]) of a triangle of size {}",
                self.size
            )));
        }
        Ok(&self.row(i)[j - 1..k])
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[V] {
        &self.cells
    }

    pub fn map<W>(&self, f: impl FnMut(&V) -> W) -> Triangle<W> {
        Triangle {
            size: self.size,
            cells: self.cells.iter().map(f).collect(),
        }
    }
}

impl<V: Clone> Triangle<V> {
    pub fn to_rows(&self) -> Vec<Vec<V>> {
        self.rows().map(<[V]>::to_vec).collect()
    }

    /// Triangle of the given size with every entry equal to `v`.
    pub fn filled(size: usize, v: V) -> Self {
        Triangle {
            size,
            cells: vec![v; cell_count(size)],
        }
    }
}

impl<V: fmt::Display> fmt::Display for Triangle<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let parts: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_triangle() -> Triangle<u8> {
        // Only row 7 matters; the rest is filler.
        let mut rows: Vec<Vec<u8>> = (1..=9).map(|i| vec![0; i]).collect();
        rows[6] = vec![1, 0, 1, 1, 0, 0, 1];
        Triangle::from_rows(rows).unwrap()
    }

    #[test]
    fn subrow_examples() {
        let t = sample_triangle();
        assert_eq!(t.subrow(7, 1, 3).unwrap(), &[1, 0, 1]);
        assert_eq!(t.subrow(7, 2, 7).unwrap(), &[0, 1, 1, 0, 0, 1]);
        assert!(t.subrow(7, 4, 3).unwrap().is_empty());
        assert!(t.subrow(0, 1, 1).unwrap().is_empty());
        assert!(t.subrow(3, 1, 4).is_err());
        assert!(t.subrow(10, 1, 1).is_err());
    }

    #[test]
    fn shape_is_checked() {
        assert!(Triangle::from_rows(vec![vec![0u8], vec![0]]).is_err());
        assert!(Triangle::from_cells(2, vec![0u8; 2]).is_err());
        let t = Triangle::from_rows(vec![vec![1u8], vec![2, 3]]).unwrap();
        assert_eq!(t.get(2, 1), Some(&2));
        assert_eq!(t.get(1, 2), None);
        assert_eq!(t.get(3, 1), None);
        assert_eq!(t.to_rows(), vec![vec![1], vec![2, 3]]);
        assert_eq!(t.to_string(), "1\n2 3");
    }

    #[test]
    fn from_fn_is_row_major() {
        let t = Triangle::from_fn(3, |i, j| 10 * i + j);
        assert_eq!(t.cells(), &[11, 21, 22, 31, 32, 33]);
        let empty: Triangle<u8> = Triangle::from_rows(vec![]).unwrap();
        assert_eq!(empty.size(), 0);
        assert_eq!(empty.rows().count(), 0);
    }
}
