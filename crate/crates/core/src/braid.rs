//! Braid words, strand permutations and the crossing-level structure.
//!
//! Strand positions and strand ids are 0-based internally; a strand's id is
//! its position at the top of the braid. Generator indices keep the usual
//! 1-based `σ_i` numbering, so `σ_i` swaps positions `i − 1` and `i`.
//!
//! Over/under convention: at `σ_i^{+1}` the strand entering from the left
//! (position `i − 1`) passes under; at `σ_i^{−1}` it passes over. With every
//! strand oriented downward the crossing sign equals the exponent.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    /// Exponent of `σ_j` inside a weaving round, `(−1)^{j+1}`.
    pub fn alternating(k: usize) -> Sign {
        if k % 2 == 1 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// One letter `σ_index^{sign}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    /// Decodes the integer form: magnitude is the index, sign is the exponent.
    pub fn from_int(v: i32) -> Option<Self> {
        if v == 0 {
            return None;
        }
        let sign = if v > 0 { Sign::Pos } else { Sign::Neg };
        Some(Letter { index: v.unsigned_abs() as usize, sign })
    }

    pub fn to_int(self) -> i32 {
        self.index as i32 * self.sign.value()
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: self.sign.flip() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BadStrand(0));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::BadLetter { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn from_ints(strands: usize, word: &[i32]) -> Result<Self> {
        let mut letters = Vec::with_capacity(word.len());
        for &v in word {
            letters.push(Letter::from_int(v).ok_or(Error::BadLetter { index: 0, strands })?);
        }
        BraidWord::new(strands, letters)
    }

    pub fn trivial(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// `B_W(p, q) = (σ1 σ2⁻¹ σ3 ⋯ σ_{p−1}^{(−1)^p})^q`.
    pub fn weaving(p: usize, q: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::BadStrand(0));
        }
        let mut letters = Vec::with_capacity((p - 1) * q);
        for _ in 0..q {
            for j in 1..p {
                letters.push(Letter::new(j, Sign::alternating(j)));
            }
        }
        Ok(BraidWord { strands: p, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    /// Sum of the exponents.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value() as i64).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Precondition("concatenated words must have equal strand counts"));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Letters `range` as a word on the same strands.
    pub fn slice(&self, range: core::ops::Range<usize>) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters[range].to_vec() }
    }

    /// Returns `(p, q)` when the generator indices read `1, 2, …, p−1`
    /// repeated `q` times on `p` strands, whatever the exponents are.
    pub fn weaving_layout(&self) -> Option<(usize, usize)> {
        let p = self.strands;
        if p < 2 || self.letters.is_empty() || !self.letters.len().is_multiple_of(p - 1) {
            return None;
        }
        let ok = self.letters.iter().enumerate().all(|(k, l)| l.index == k % (p - 1) + 1);
        ok.then(|| (p, self.letters.len() / (p - 1)))
    }

    /// `(p, q)` when the word is exactly `B_W(p, q)` including exponents.
    pub fn weaving_params(&self) -> Option<(usize, usize)> {
        let (p, q) = self.weaving_layout()?;
        let exact = self.letters.iter().all(|l| l.sign == Sign::alternating(l.index));
        exact.then_some((p, q))
    }

    /// True when every generator `σ_1 … σ_{n−1}` occurs, i.e. the closure is
    /// a connected diagram.
    pub fn uses_every_generator(&self) -> bool {
        let mut seen = alloc::vec![false; self.strands];
        for l in &self.letters {
            seen[l.index] = true;
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn permutation(&self) -> StrandPermutation {
        // at[pos] = strand currently at pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut image = alloc::vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            image[strand] = pos;
        }
        StrandPermutation::from_image(image)
    }

    pub fn crossings(&self) -> Vec<CrossingRecord> {
        let layout = self.weaving_layout();
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for (ordinal, l) in self.letters.iter().enumerate() {
            let left = at[l.index - 1];
            let right = at[l.index];
            let (under, over) = match l.sign {
                Sign::Pos => (left, right),
                Sign::Neg => (right, left),
            };
            let label = layout.map(|(p, _)| (ordinal / (p - 1) + 1, ordinal % (p - 1) + 1));
            out.push(CrossingRecord {
                ordinal,
                round: label.map(|x| x.0),
                letter_pos: label.map(|x| x.1),
                index: l.index,
                sign: l.sign,
                left,
                right,
                over,
                under,
            });
            at.swap(l.index - 1, l.index);
        }
        out
    }

    /// All crossings between strands `a` and `b` (0-based ids).
    pub fn mutual_crossings(&self, a: usize, b: usize) -> Result<Vec<CrossingRecord>> {
        if a >= self.strands {
            return Err(Error::BadStrand(a));
        }
        if b >= self.strands || a == b {
            return Err(Error::BadStrand(b));
        }
        Ok(self.crossings().into_iter().filter(|c| c.involves(a) && c.involves(b)).collect())
    }

    /// Exponents flipped at the given letter ordinals.
    pub fn with_crossing_changes(&self, ordinals: &[usize]) -> Result<BraidWord> {
        let mut letters = self.letters.clone();
        for &o in ordinals {
            let l = letters.get_mut(o).ok_or(Error::BadOrdinal(o))?;
            l.sign = l.sign.flip();
        }
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The word whose closure is this closure with every orientation
    /// reversed, drawn rotated by a half turn: letters read backwards with
    /// `σ_i ↦ σ_{n−i}` and exponents kept.
    pub fn orientation_reversed(&self) -> BraidWord {
        let n = self.strands;
        let letters = self.letters.iter().rev().map(|l| Letter::new(n - l.index, l.sign)).collect();
        BraidWord { strands: n, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// The bijection `ρ`: top position `i` ends at bottom position `ρ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    image: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl StrandPermutation {
    pub fn from_image(image: Vec<usize>) -> Self {
        let n = image.len();
        let mut seen = alloc::vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = image[x];
            }
            cycles.push(cycle);
        }
        StrandPermutation { image, cycles }
    }

    /// Checked constructor for user-supplied images.
    pub fn try_from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = alloc::vec![false; n];
        for &v in &image {
            if v >= n || hit[v] {
                return Err(Error::BadSequence);
            }
            hit[v] = true;
        }
        Ok(Self::from_image(image))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_image((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &StrandPermutation) -> StrandPermutation {
        Self::from_image(self.image.iter().map(|&j| next.image[j]).collect())
    }
}

/// One crossing of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRecord {
    /// Position of the letter in the word.
    pub ordinal: usize,
    /// Round `i` of `c^i_j` (1-based) for words with a weaving layout.
    pub round: Option<usize>,
    /// Position `j` of `c^i_j` inside its round (1-based).
    pub letter_pos: Option<usize>,
    /// Generator index: the crossing swaps positions `index − 1` and `index`.
    pub index: usize,
    pub sign: Sign,
    /// Strand entering from position `index − 1`.
    pub left: usize,
    /// Strand entering from position `index`.
    pub right: usize,
    pub over: usize,
    pub under: usize,
}

impl CrossingRecord {
    pub fn involves(&self, strand: usize) -> bool {
        self.left == strand || self.right == strand
    }

    /// The two strand positions the crossing sits between.
    pub fn heights(&self) -> (usize, usize) {
        (self.index - 1, self.index)
    }
}
