//! Laurent polynomials in one variable with exact integer coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Laurent {
    terms: BTreeMap<i32, i128>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(1, 0)
    }

    pub fn monomial(coeff: i128, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i32, coeff: i128) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Laurent> {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow)?;
                out.add_term(e, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Laurent> {
        let mut out = Laurent::one();
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Multiplies by `coeff · x^exp`.
    pub fn scale(&self, coeff: i128, exp: i32) -> Result<Laurent> {
        self.checked_mul(&Laurent::monomial(coeff, exp))
    }

    pub fn to_pairs(&self) -> Vec<(i32, i128)> {
        self.terms().collect()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if *c < 0 { ("-", c.unsigned_abs()) } else { ("+", c.unsigned_abs()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (*e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "A")?,
                (1, m) => write!(f, "{m}A")?,
                (e, 1) => write!(f, "A^{e}")?,
                (e, m) => write!(f, "{m}A^{e}")?,
            }
        }
        Ok(())
    }
}
