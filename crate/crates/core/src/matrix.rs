//! Sparse matrices over an exact scalar type.
//!
//! Scalars are arbitrary-precision rationals.  Integer and modular
//! complexes simply never populate a denominator, and keeping one scalar
//! type lets elimination over any ring share a single code path; ring
//! semantics (residue reduction, unit tests) are applied through
//! [`crate::ring::CoefficientRing`].

use num::{BigInt, BigRational, Zero};

use crate::ring::CoefficientRing;

pub type Scalar = BigRational;

pub fn int(k: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(k))
}

/// Sparse matrix in canonical form: entries are sorted by (column, row),
/// contain no zeros and no duplicate positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(u32, u32, Scalar)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    /// Build from (row, col, value) triplets; duplicate positions are
    /// summed in the given ring and zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I, ring: &CoefficientRing) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Scalar)>,
    {
        let mut entries: Vec<(u32, u32, Scalar)> = triplets
            .into_iter()
            .map(|(r, c, v)| {
                assert!((r as usize) < rows && (c as usize) < cols, "entry out of range");
                (r, c, v)
            })
            .collect();
        entries.sort_by_key(|&(r, c, _)| (c, r));
        let mut canon: Vec<(u32, u32, Scalar)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match canon.last_mut() {
                Some((lr, lc, lv)) if *lr == r && *lc == c => {
                    *lv = ring.add(lv, &v);
                }
                _ => canon.push((r, c, ring.canon(v))),
            }
        }
        canon.retain(|(_, _, v)| !v.is_zero());
        SparseMatrix { rows, cols, entries: canon }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by (column, row).
    pub fn entries(&self) -> &[(u32, u32, Scalar)] {
        &self.entries
    }

    pub fn get(&self, r: u32, c: u32) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&(c, r), |&(er, ec, _)| (ec, er))
            .ok()
            .map(|i| &self.entries[i].2)
    }

    /// The nonzero entries of one column as (row, value).
    pub fn column(&self, c: u32) -> &[(u32, u32, Scalar)] {
        let lo = self.entries.partition_point(|&(_, ec, _)| ec < c);
        let hi = self.entries.partition_point(|&(_, ec, _)| ec <= c);
        &self.entries[lo..hi]
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries: Vec<(u32, u32, Scalar)> =
            self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())).collect();
        entries.sort_by_key(|&(r, c, _)| (c, r));
        SparseMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// `self * other` in the given ring.
    pub fn multiply(&self, other: &SparseMatrix, ring: &CoefficientRing) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_col: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in &self.entries {
            by_col[*c as usize].push((*r, v.clone()));
        }
        let mut triplets = Vec::new();
        for oc in 0..other.cols as u32 {
            for (mid, _, w) in other.column(oc) {
                for (r, v) in &by_col[*mid as usize] {
                    triplets.push((*r, oc, v * w));
                }
            }
        }
        SparseMatrix::from_triplets(self.rows, other.cols, triplets, ring)
    }

    /// Submatrix on the given row/column index lists, reindexed to their
    /// positions in the lists.
    pub fn restrict(&self, keep_rows: &[u32], keep_cols: &[u32]) -> SparseMatrix {
        let row_map: std::collections::HashMap<u32, u32> = keep_rows
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as u32))
            .collect();
        let col_map: std::collections::HashMap<u32, u32> = keep_cols
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as u32))
            .collect();
        let mut entries: Vec<(u32, u32, Scalar)> = self
            .entries
            .iter()
            .filter_map(|(r, c, v)| {
                Some((*row_map.get(r)?, *col_map.get(c)?, v.clone()))
            })
            .collect();
        entries.sort_by_key(|&(r, c, _)| (c, r));
        SparseMatrix { rows: keep_rows.len(), cols: keep_cols.len(), entries }
    }

    /// All entries as integers; panics if any entry has a denominator.
    pub fn integer_entries(&self) -> Vec<(u32, u32, BigInt)> {
        self.entries
            .iter()
            .map(|(r, c, v)| {
                assert!(v.is_integer(), "matrix has non-integer entries");
                (*r, *c, v.numer().clone())
            })
            .collect()
    }
}
