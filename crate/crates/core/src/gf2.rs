//! Dense vectors and row reduction over GF(2).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.toggle(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.toggle(i);
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
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

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

/// Row-reduced form of a list of rows, remembering which original rows make
/// up every reduced row. Answers "which subsets of rows sum to `t`".
#[derive(Debug, Clone)]
pub struct RowSpace {
    rows: usize,
    columns: usize,
    /// `(pivot column, reduced row, combination of original rows)`
    pivots: Vec<(usize, BitVec, BitVec)>,
    /// Combinations of original rows summing to zero.
    nullspace: Vec<BitVec>,
}

impl RowSpace {
    pub fn new(columns: usize, rows: &[BitVec]) -> Self {
        let n = rows.len();
        let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
        let mut nullspace = Vec::new();
        for (k, row) in rows.iter().enumerate() {
            let mut r = row.clone();
            let mut tag = BitVec::from_indices(n, [k]);
            for (col, prow, ptag) in &pivots {
                if r.get(*col) {
                    r.xor_assign(prow);
                    tag.xor_assign(ptag);
                }
            }
            match r.first_one() {
                None => nullspace.push(tag),
                Some(col) => {
                    // keep earlier pivot rows reduced at the new column
                    for (_, prow, ptag) in pivots.iter_mut() {
                        if prow.get(col) {
                            prow.xor_assign(&r);
                            ptag.xor_assign(&tag);
                        }
                    }
                    pivots.push((col, r, tag));
                }
            }
        }
        RowSpace { rows: n, columns, pivots, nullspace }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }

    pub fn nullspace(&self) -> &[BitVec] {
        &self.nullspace
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Some combination of rows summing to `target`, if one exists.
    pub fn particular(&self, target: &BitVec) -> Option<BitVec> {
        let mut r = target.clone();
        let mut tag = BitVec::zeros(self.rows);
        for (col, prow, ptag) in &self.pivots {
            if r.get(*col) {
                r.xor_assign(prow);
                tag.xor_assign(ptag);
            }
        }
        r.is_zero().then_some(tag)
    }

    /// A minimum-weight combination summing to `target`: a particular
    /// solution shifted through every nullspace vector (Gray-code order).
    pub fn min_weight(&self, target: &BitVec, max_nullity: usize) -> Result<Option<BitVec>> {
        let Some(mut x) = self.particular(target) else {
            return Ok(None);
        };
        let k = self.nullspace.len();
        if k > max_nullity {
            return Err(Error::TooLarge { what: "nullspace dimension", size: k, cap: max_nullity });
        }
        let mut best = x.clone();
        let mut best_w = x.count_ones();
        for step in 1u64..(1u64 << k) {
            let bit = step.trailing_zeros() as usize;
            x.xor_assign(&self.nullspace[bit]);
            let w = x.count_ones();
            if w < best_w || (w == best_w && x < best) {
                best_w = w;
                best = x.clone();
            }
        }
        Ok(Some(best))
    }
}
