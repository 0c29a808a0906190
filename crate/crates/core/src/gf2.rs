//! Dense linear algebra over GF(2).
//!
//! Vectors are packed 64 entries per word and all elimination is row XOR on
//! whole words. The workhorse is [`EchelonBasis`], an incrementally built
//! echelon form whose rows optionally carry a *tag*: the combination of
//! inserted vectors that produced them. Tags turn the same elimination into
//! kernel computation (a dependent insertion yields a relation) and into
//! linear solving (a reduced right-hand side yields the coefficients).

use std::fmt;

use crate::error::{Error, Result};

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVector::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVector::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = BitVector::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        BitVector::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the inner product.
    pub fn dot(&self, other: &BitVector) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Support containment: every set bit of `self` is set in `other`.
    pub fn is_subset(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn lowest_set(&self) -> Option<usize> {
        self.lowest_set_from(0)
    }

    fn lowest_set_from(&self, first_word: usize) -> Option<usize> {
        self.words[first_word..]
            .iter()
            .position(|&w| w != 0)
            .map(|k| (first_word + k) * 64 + self.words[first_word + k].trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + i)
            })
        })
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row echelon form built one vector at a time.
///
/// Each stored row has a distinct pivot (its lowest set bit). When tagging is
/// enabled, `tags[j]` records which inserted vectors sum to `rows[j]`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    tag_len: usize,
    pivot_row: Vec<u32>,
    rows: Vec<BitVector>,
    tags: Vec<BitVector>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis::with_tags(len, 0)
    }

    pub fn with_tags(len: usize, tag_len: usize) -> Self {
        EchelonBasis { len, tag_len, pivot_row: vec![u32::MAX; len], rows: Vec::new(), tags: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    /// Reduces `v` in place (and its tag alongside). Returns true when `v`
    /// lies in the span.
    pub fn reduce(&self, v: &mut BitVector, mut tag: Option<&mut BitVector>) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut word = 0;
        while let Some(p) = v.lowest_set_from(word) {
            let j = self.pivot_row[p];
            if j == u32::MAX {
                return false;
            }
            let j = j as usize;
            v.xor_assign(&self.rows[j]);
            if let Some(t) = tag.as_deref_mut() {
                t.xor_assign(&self.tags[j]);
            }
            word = p / 64;
        }
        true
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w, None)
    }

    /// Inserts `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: BitVector) -> bool {
        let tag = BitVector::zeros(self.tag_len);
        self.insert_tagged(v, tag).is_none()
    }

    /// Inserts `v` carrying `tag`. If `v` is dependent, nothing is stored and
    /// the accumulated tag is returned: a combination of inserted vectors
    /// (including this one) summing to zero.
    pub fn insert_tagged(&mut self, mut v: BitVector, mut tag: BitVector) -> Option<BitVector> {
        debug_assert_eq!(tag.len(), self.tag_len);
        if self.reduce(&mut v, Some(&mut tag)) {
            return Some(tag);
        }
        let p = v.lowest_set().expect("independent vector is nonzero");
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(v);
        self.tags.push(tag);
        None
    }

    /// If `v` is in the span, the tag combination producing it.
    pub fn express(&self, v: &BitVector) -> Option<BitVector> {
        let mut w = v.clone();
        let mut tag = BitVector::zeros(self.tag_len);
        self.reduce(&mut w, Some(&mut tag)).then_some(tag)
    }
}

/// Rank of a family of vectors of equal length.
pub fn rank_of<'a, I: IntoIterator<Item = &'a BitVector>>(len: usize, vectors: I) -> usize {
    let mut basis = EchelonBasis::new(len);
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.rank()
}

/// Dense bit matrix, rows packed into words.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix { rows, cols, data: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        GF2Matrix { rows: n, cols: n, data: (0..n).map(|i| BitVector::unit(n, i)).collect() }
    }

    /// Builds a matrix from its rows; all must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: bad.len() });
        }
        Ok(GF2Matrix { rows: rows.len(), cols, data: rows })
    }

    /// Builds a matrix from its columns; all must have length `rows`.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Result<Self> {
        let mut m = GF2Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, got: c.len() });
            }
            for i in c.iter_ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for j in r.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// `M x` over GF(2).
    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok(BitVector::from_bools(&self.data.iter().map(|r| r.dot(x)).collect::<Vec<_>>()))
    }

    pub fn rank(&self) -> usize {
        rank_of(self.cols, &self.data)
    }

    /// A basis of `{x : M x = 0}`; its size is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let t = self.transpose();
        let mut basis = EchelonBasis::with_tags(self.rows, self.cols);
        let mut kernel = Vec::new();
        for (j, column) in t.data.into_iter().enumerate() {
            if let Some(relation) = basis.insert_tagged(column, BitVector::unit(self.cols, j)) {
                kernel.push(relation);
            }
        }
        kernel
    }

    /// Some `x` with `M x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let t = self.transpose();
        let mut basis = EchelonBasis::with_tags(self.rows, self.cols);
        for (j, column) in t.data.into_iter().enumerate() {
            basis.insert_tagged(column, BitVector::unit(self.cols, j));
        }
        Ok(basis.express(b))
    }
}

/// Plain 0/1 text dump, one row per line.
impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.data {
            writeln!(f, "{r:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn random_matrix(rows: usize, cols: usize, seed: Vec<bool>) -> GF2Matrix {
        let mut m = GF2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, seed[(i * cols + j) % seed.len()]);
            }
        }
        m
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(GF2Matrix::identity(3).rank(), 3);
        assert_eq!(GF2Matrix::zeros(4, 5).rank(), 0);
        assert!(GF2Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(GF2Matrix::zeros(4, 5).kernel_basis().len(), 5);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = BitVector::from_indices(5, [0, 3, 4]);
        assert_eq!(GF2Matrix::identity(5).solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let err = GF2Matrix::identity(3).solve(&BitVector::zeros(4)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 3, got: 4 });
    }

    #[test]
    fn words_beyond_64_columns() {
        let n = 150;
        let mut m = GF2Matrix::zeros(n - 1, n);
        // path incidence: row i joins columns i and i+1
        for i in 0..n - 1 {
            m.set(i, i, true);
            m.set(i, i + 1, true);
        }
        assert_eq!(m.rank(), n - 1);
        let k = m.kernel_basis();
        assert_eq!(k, vec![BitVector::ones(n)]);
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(rows in 1usize..20, cols in 1usize..90, seed in prop::collection::vec(any::<bool>(), 1..400)) {
            let m = random_matrix(rows, cols, seed);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_vectors_are_independent_and_annihilated(rows in 1usize..20, cols in 1usize..90, seed in prop::collection::vec(any::<bool>(), 1..400)) {
            let m = random_matrix(rows, cols, seed);
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), cols - m.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
            prop_assert_eq!(rank_of(cols, &k), k.len());
        }

        #[test]
        fn solve_is_exact_or_certifies_rank_jump(rows in 1usize..20, cols in 1usize..40, seed in prop::collection::vec(any::<bool>(), 1..400), rhs in prop::collection::vec(any::<bool>(), 20)) {
            let m = random_matrix(rows, cols, seed);
            let b = BitVector::from_bools(&rhs[..rows]);
            match m.solve(&b).unwrap() {
                Some(x) => prop_assert_eq!(m.mul_vec(&x).unwrap(), b),
                None => {
                    let mut cols_with_b: Vec<BitVector> = (0..cols).map(|j| m.column(j)).collect();
                    cols_with_b.push(b);
                    prop_assert_eq!(rank_of(rows, &cols_with_b), m.rank() + 1);
                }
            }
        }
    }
}
