//! Kauffman bracket of braid closures by a Temperley–Lieb transfer.
//!
//! A state is a crossingless matching of the `2n` boundary points of the
//! braid cut at its current height (top points `0..n`, bottom `n..2n`).
//! Each letter sends a state `D` to `A^{±1}·D + A^{∓1}·D e_k`, and the
//! closure joins top point `i` to bottom point `n+i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::limits::Limits;

type Matching = Vec<u8>;

/// `δ = −A² − A⁻²`, the value of one extra circle.
pub fn loop_value() -> Laurent {
    Laurent::monomial(-1, 2).checked_add(&Laurent::monomial(-1, -2)).expect("small")
}

/// Normalized bracket of the `k`-component unlink, `δ^(k−1)`.
pub fn unlink_value(components: usize) -> Laurent {
    loop_value().checked_pow(components.saturating_sub(1) as u32).expect("small")
}

/// Composes `e_k` (acting on bottom positions `k−1, k`) under the matching.
/// Returns the new matching and whether a closed loop was formed.
fn times_e(m: &Matching, n: usize, k: usize) -> (Matching, bool) {
    let b1 = n + k - 1;
    let b2 = n + k;
    if m[b1] as usize == b2 {
        return (m.clone(), true);
    }
    let mut out = m.clone();
    let x = m[b1] as usize;
    let y = m[b2] as usize;
    out[x] = y as u8;
    out[y] = x as u8;
    out[b1] = b2 as u8;
    out[b2] = b1 as u8;
    (out, false)
}

/// Circles in the closure of a matching.
fn closure_loops(m: &Matching, n: usize) -> usize {
    let mut seen = alloc::vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        loops += 1;
        // alternate between a matching arc and a closure arc
        let mut p = start;
        loop {
            seen[p] = true;
            let q = m[p] as usize;
            seen[q] = true;
            p = if q < n { q + n } else { q - n };
            if p == start {
                break;
            }
        }
    }
    loops
}

fn check_caps(b: &BraidWord, limits: &Limits) -> Result<()> {
    if b.strands() > limits.max_strands {
        return Err(Error::TooLarge { what: "bracket strands", size: b.strands(), cap: limits.max_strands });
    }
    if b.len() > limits.max_bracket_letters {
        return Err(Error::TooLarge { what: "bracket letters", size: b.len(), cap: limits.max_bracket_letters });
    }
    Ok(())
}

/// Unnormalized bracket, scaled so that the one-circle diagram has value 1.
pub fn kauffman_bracket(b: &BraidWord, limits: &Limits) -> Result<Laurent> {
    check_caps(b, limits)?;
    let n = b.strands();
    let delta = loop_value();
    let identity: Matching = (0..2 * n).map(|x| if x < n { x + n } else { x - n } as u8).collect();
    let mut states: BTreeMap<Matching, Laurent> = BTreeMap::new();
    states.insert(identity, Laurent::one());

    for l in b.letters() {
        let (keep, cup) = match l.sign {
            Sign::Pos => (1, -1),
            Sign::Neg => (-1, 1),
        };
        let mut next: BTreeMap<Matching, Laurent> = BTreeMap::new();
        for (m, c) in &states {
            let kept = c.scale(1, keep)?;
            accumulate(&mut next, m.clone(), kept)?;
            let (m2, looped) = times_e(m, n, l.index);
            let mut c2 = c.scale(1, cup)?;
            if looped {
                c2 = c2.checked_mul(&delta)?;
            }
            accumulate(&mut next, m2, c2)?;
        }
        states = next;
    }

    let mut total = Laurent::zero();
    for (m, c) in &states {
        let loops = closure_loops(m, n);
        total = total.checked_add(&c.checked_mul(&delta.checked_pow(loops as u32 - 1)?)?)?;
    }
    Ok(total)
}

fn accumulate(map: &mut BTreeMap<Matching, Laurent>, m: Matching, c: Laurent) -> Result<()> {
    let slot = map.entry(m).or_default();
    *slot = slot.checked_add(&c)?;
    Ok(())
}

/// Writhe-normalized bracket `(−A³)^(−w) ⟨D⟩`; the Jones polynomial in the
/// variable `A` (with `t = A⁻⁴`).
pub fn jones_bracket(b: &BraidWord, limits: &Limits) -> Result<Laurent> {
    let w = b.writhe();
    let raw = kauffman_bracket(b, limits)?;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let exp = i32::try_from(-3 * w).map_err(|_| Error::Overflow)?;
    raw.scale(sign, exp)
}
