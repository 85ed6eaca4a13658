//! Dense bit matrices over GF(2).
//!
//! Rows are packed into `u64` words, so row addition is a word-wise XOR.
//! Every operation here is a pure function of its inputs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::label::Label;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        let words_per_row = n_cols.div_ceil(WORD);
        Gf2Matrix {
            n_rows,
            n_cols,
            words_per_row,
            data: vec![0; n_rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of `0`/`1` entries.
    pub fn from_rows<R: AsRef<[u8]>>(n_cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::Dimension {
                    expected: n_cols,
                    found: row.len(),
                });
            }
            for (j, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::InvalidArgument("matrix entries must be 0 or 1")),
                }
            }
        }
        Ok(m)
    }

    /// Builds an `n_rows × columns.len()` matrix whose column `j` has bit
    /// `i` of `columns[j]` in row `i`. Requires `n_rows <= 64`.
    pub fn from_column_masks(n_rows: usize, columns: &[u64]) -> Self {
        assert!(n_rows <= WORD, "column masks hold at most 64 rows");
        let mut m = Self::zeros(n_rows, columns.len());
        for (j, &c) in columns.iter().enumerate() {
            for i in 0..n_rows {
                if c >> i & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        self.data[row * self.words_per_row + col / WORD] >> (col % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        debug_assert!(row < self.n_rows && col < self.n_cols);
        let w = &mut self.data[row * self.words_per_row + col / WORD];
        let bit = 1u64 << (col % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    fn row_is_zero(&self, row: usize) -> bool {
        self.row_words(row).iter().all(|&w| w == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    /// `row[dst] += row[src]`.
    fn add_row(&mut self, dst: usize, src: usize) {
        let w = self.words_per_row;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    pub fn row(&self, row: usize) -> Vec<bool> {
        (0..self.n_cols).map(|c| self.get(row, c)).collect()
    }

    pub fn column(&self, col: usize) -> Vec<bool> {
        (0..self.n_rows).map(|r| self.get(r, col)).collect()
    }

    /// Column `col` as a bit mask (bit `i` = row `i`). Requires `n_rows <= 64`.
    pub fn column_mask(&self, col: usize) -> u64 {
        assert!(self.n_rows <= WORD, "column masks hold at most 64 rows");
        (0..self.n_rows).fold(0, |acc, r| acc | (self.get(r, col) as u64) << r)
    }

    pub fn is_zero_column(&self, col: usize) -> bool {
        (0..self.n_rows).all(|r| !self.get(r, col))
    }

    /// Appends a row; `bits.len()` must equal `n_cols`.
    pub fn push_row(&mut self, bits: &[bool]) -> Result<()> {
        if bits.len() != self.n_cols {
            return Err(Error::Dimension {
                expected: self.n_cols,
                found: bits.len(),
            });
        }
        let r = self.n_rows;
        self.n_rows += 1;
        self.data.resize(self.n_rows * self.words_per_row, 0);
        for (c, &b) in bits.iter().enumerate() {
            if b {
                self.set(r, c, true);
            }
        }
        Ok(())
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Gf2Matrix {
        let mut m = Self::zeros(self.n_rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.n_rows {
                if self.get(r, c) {
                    m.set(r, j, true);
                }
            }
        }
        m
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n_rows != other.n_rows {
            return Err(Error::Dimension {
                expected: self.n_rows,
                found: other.n_rows,
            });
        }
        let mut m = Self::zeros(self.n_rows, self.n_cols + other.n_cols);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if self.get(r, c) {
                    m.set(r, c, true);
                }
            }
            for c in 0..other.n_cols {
                if other.get(r, c) {
                    m.set(r, self.n_cols + c, true);
                }
            }
        }
        Ok(m)
    }

    /// Block-diagonal `[self 0; 0 other]`.
    pub fn block_diagonal(&self, other: &Gf2Matrix) -> Gf2Matrix {
        let mut m = Self::zeros(self.n_rows + other.n_rows, self.n_cols + other.n_cols);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if self.get(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        for r in 0..other.n_rows {
            for c in 0..other.n_cols {
                if other.get(r, c) {
                    m.set(self.n_rows + r, self.n_cols + c, true);
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Reduced row echelon form and its pivot columns.
    ///
    /// Columns are scanned left to right; the pivot row for a column is the
    /// topmost not-yet-used row with a 1 there. Zero rows end up at the
    /// bottom and are kept.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..m.n_cols {
            if next == m.n_rows {
                break;
            }
            let Some(p) = (next..m.n_rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(next, p);
            for r in 0..m.n_rows {
                if r != next && m.get(r, c) {
                    m.add_row(r, next);
                }
            }
            pivots.push(c);
            next += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Removes all-zero rows, keeping the order of the others.
    pub fn drop_zero_rows(&self) -> Gf2Matrix {
        let keep: Vec<usize> = (0..self.n_rows).filter(|&r| !self.row_is_zero(r)).collect();
        let mut m = Self::zeros(keep.len(), self.n_cols);
        for (i, &r) in keep.iter().enumerate() {
            let w = self.words_per_row;
            m.data[i * w..(i + 1) * w].copy_from_slice(self.row_words(r));
        }
        m
    }

    /// Whether the two matrices have the same row space.
    pub fn row_space_equal(&self, other: &Gf2Matrix) -> Result<bool> {
        if self.n_cols != other.n_cols {
            return Err(Error::Dimension {
                expected: self.n_cols,
                found: other.n_cols,
            });
        }
        Ok(self.rref().0.drop_zero_rows() == other.rref().0.drop_zero_rows())
    }

    /// Lenient standard form: `[I_r | D]` with dependent rows dropped, plus
    /// the column permutation (`perm[j]` = input column now at position `j`).
    /// Pivot columns come first in their original order, then the rest.
    /// Zero columns are allowed and land in `D`.
    pub(crate) fn standardize(&self) -> (Gf2Matrix, Vec<usize>) {
        let (reduced, pivots) = self.rref();
        let reduced = reduced.drop_zero_rows();
        let mut perm = pivots.clone();
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        perm.extend((0..self.n_cols).filter(|&c| !is_pivot[c]));
        (reduced.select_columns(&perm), perm)
    }

    /// Standard form `[I_r | D]` with the labels permuted alongside the
    /// columns; the first `r` returned labels index a basis. Redundant rows
    /// are dropped.
    pub fn standard_form(&self, labels: &[Label]) -> Result<(Gf2Matrix, Vec<Label>)> {
        if labels.len() != self.n_cols {
            return Err(Error::Dimension {
                expected: self.n_cols,
                found: labels.len(),
            });
        }
        if let Some(c) = (0..self.n_cols).find(|&c| self.is_zero_column(c)) {
            return Err(Error::Loop(labels[c].clone()));
        }
        let (m, perm) = self.standardize();
        Ok((m, perm.iter().map(|&j| labels[j].clone()).collect()))
    }
}

/// Rows of space-separated bits.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{}\n{}", self.n_rows, self.n_cols, self)
    }
}
