//! Dense Boolean matrices and vectors with word-packed rows.
//!
//! Every row is stored as a run of `u64` words, least significant bit first.
//! Bits past the logical width of a row are kept at zero so that whole-word
//! comparisons and population counts stay exact.
//!
//! Two products are provided:
//!
//! * [`bool_product`] (`•`): entry `(i, j)` is 1 iff some `k` has
//!   `A(i, k) = 1` and `B(k, j) = 1`.
//! * [`impl_product`] (`⊙`): entry `(i, j)` is 1 iff every `k` satisfies
//!   `A(i, k) <= B(k, j)`.
//!
//! Both are evaluated row-at-a-time: row `i` of the result is the OR (resp.
//! AND) of the rows of `B` selected by the ones of row `i` of `A`.

use std::fmt;

use crate::covering::{ElementSet, Universe};
use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD_BITS {
        0 => !0,
        r => (1u64 << r) - 1,
    }
}

/// Indices of the set bits in a packed word slice, ascending.
fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * WORD_BITS + bit)
        })
    })
}

/// A 0/1 column vector, e.g. the characteristic vector of a subset of the
/// universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolVector {
    len: usize,
    words: Vec<u64>,
}

impl BoolVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![!0; words_for(len)],
        };
        v.clear_tail();
        v
    }

    /// Builds a vector of length `len` with ones at `indices`.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// True for the zero-length vector.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of bounds for length {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of bounds for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Positions holding a 1, ascending.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        set_bits(&self.words)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_all_ones(&self) -> bool {
        *self == Self::ones(self.len)
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn complement(&self) -> Self {
        let mut v = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        v.clear_tail();
        v
    }

    /// `self ⊆ other`, reading both vectors as sets.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.assert_same_len(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.assert_same_len(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// The vector as an `len × 1` matrix.
    pub fn to_column(&self) -> BoolMatrix {
        BoolMatrix::from_fn(self.len, 1, |i, _| self.get(i))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.assert_same_len(other);
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn assert_same_len(&self, other: &Self) {
        assert_eq!(self.len, other.len, "vector lengths differ");
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.len);
        }
    }
}

impl FromIterator<bool> for BoolVector {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let bits: Vec<bool> = iter.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }
}

/// Renders as a transposed row, `[1 0 1]^T`.
impl fmt::Display for BoolVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str("]^T")
    }
}

impl fmt::Debug for BoolVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolVector({self})")
    }
}

/// Dense row-major 0/1 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values. Panics on ragged rows or
    /// entries other than 0 and 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                assert!(v <= 1, "entry ({i}, {j}) is {v}, expected 0 or 1");
                m.set(i, j, v == 1);
            }
        }
        m
    }

    /// Stacks vectors as the rows of a matrix.
    pub fn from_row_vectors(cols: usize, rows: &[BoolVector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {}, expected {cols}", r.len());
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of bounds");
        self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of bounds");
        let mask = 1u64 << (j % WORD_BITS);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        assert!(i < self.rows, "row {i} out of bounds");
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BoolVector {
        BoolVector {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> BoolVector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in set_bits(self.row_words(i)) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn bool_product(&self, rhs: &Self) -> Result<Self> {
        self.check_inner(rhs)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let (lhs_row, acc) = (
                self.row_words(i),
                &mut out.data[i * out.stride..(i + 1) * out.stride],
            );
            for k in set_bits(lhs_row) {
                for (a, b) in acc.iter_mut().zip(rhs.row_words(k)) {
                    *a |= b;
                }
            }
        }
        Ok(out)
    }

    pub fn impl_product(&self, rhs: &Self) -> Result<Self> {
        self.check_inner(rhs)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        let tail = tail_mask(rhs.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * out.stride..(i + 1) * out.stride];
            acc.fill(!0);
            if let Some(last) = acc.last_mut() {
                *last &= tail;
            }
            for k in set_bits(self.row_words(i)) {
                for (a, b) in acc.iter_mut().zip(rhs.row_words(k)) {
                    *a &= b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector with the `•` product: entry `i` is set
    /// iff row `i` meets `v`.
    pub fn bool_mul_vec(&self, v: &BoolVector) -> Result<BoolVector> {
        self.check_vec(v)?;
        Ok((0..self.rows)
            .map(|i| self.row_words(i).iter().zip(v.words()).any(|(a, b)| a & b != 0))
            .collect())
    }

    /// Matrix times column vector with the `⊙` product: entry `i` is set
    /// iff row `i` is contained in `v`.
    pub fn impl_mul_vec(&self, v: &BoolVector) -> Result<BoolVector> {
        self.check_vec(v)?;
        Ok((0..self.rows)
            .map(|i| self.row_words(i).iter().zip(v.words()).all(|(a, b)| a & !b == 0))
            .collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| self.get(i, i))
    }

    fn check_vec(&self, v: &BoolVector) -> Result<()> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x1", v.len()),
            });
        }
        Ok(())
    }

    fn check_inner(&self, rhs: &Self) -> Result<()> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }
}

/// One row per line, entries separated by single spaces, no trailing
/// newline.
impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix {}x{}", self.rows, self.cols)?;
        write!(f, "{self}")
    }
}

pub fn bool_product(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    a.bool_product(b)
}

pub fn impl_product(a: &BoolMatrix, b: &BoolMatrix) -> Result<BoolMatrix> {
    a.impl_product(b)
}

pub fn transpose(a: &BoolMatrix) -> BoolMatrix {
    a.transpose()
}

/// Characteristic vector of `x` under its universe's element order.
pub fn from_set(x: &ElementSet) -> BoolVector {
    x.bits().clone()
}

/// Reads a characteristic vector back as a subset of `universe`.
pub fn to_set(v: &BoolVector, universe: &Universe) -> Result<ElementSet> {
    ElementSet::from_vector(universe.clone(), v.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_times_vector_is_vector() {
        let v: BoolVector = [true, false, true, true, false].into_iter().collect();
        let id = BoolMatrix::identity(5);
        assert_eq!(id.bool_mul_vec(&v).unwrap(), v);
    }

    #[test]
    fn zero_lhs_implies_everything() {
        let a = BoolMatrix::zeros(3, 4);
        let b = BoolMatrix::from_rows(&[[0u8, 1], [0, 0], [1, 0], [0, 0]]);
        let c = a.impl_product(&b).unwrap();
        assert_eq!(c, BoolMatrix::from_rows(&[[1u8, 1], [1, 1], [1, 1]]));
    }

    #[test]
    fn impl_product_on_wide_rows_keeps_tail_clear() {
        let a = BoolMatrix::zeros(2, 3);
        let b = BoolMatrix::zeros(3, 70);
        let c = a.impl_product(&b).unwrap();
        assert_eq!(c.row(0), BoolVector::ones(70));
        assert_eq!(c.row(0).count_ones(), 70);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = BoolMatrix::zeros(2, 3);
        let b = BoolMatrix::zeros(2, 3);
        assert!(matches!(a.bool_product(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.impl_product(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn transpose_shapes() {
        let one = BoolMatrix::from_rows(&[[1u8]]);
        assert_eq!(one.transpose(), one);
        let m = BoolMatrix::zeros(6, 4);
        assert_eq!(m.transpose().shape(), (4, 6));
    }

    #[test]
    fn display_formats() {
        let m = BoolMatrix::from_rows(&[[1u8, 0, 1], [0, 1, 0]]);
        assert_eq!(m.to_string(), "1 0 1\n0 1 0");
        let v: BoolVector = [true, false, false].into_iter().collect();
        assert_eq!(v.to_string(), "[1 0 0]^T");
        assert_eq!(BoolVector::zeros(0).to_string(), "[]^T");
    }

    #[test]
    fn complement_respects_length() {
        let v = BoolVector::from_indices(65, [0, 64]);
        let c = v.complement();
        assert_eq!(c.count_ones(), 63);
        assert!(!c.get(64));
        assert_eq!(c.complement(), v);
    }

    #[test]
    fn ones_iter_crosses_words() {
        let v = BoolVector::from_indices(130, [3, 63, 64, 129]);
        assert_eq!(v.ones_iter().collect::<Vec<_>>(), vec![3, 63, 64, 129]);
    }
}
