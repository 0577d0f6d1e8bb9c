//! Sound triviality certificates for braid closures.
//!
//! A closure is declared trivial only with a concrete witness: a base-point
//! sequence of warping degree zero, or a reduction to the empty word. It is
//! declared nontrivial only when the normalized bracket differs from the
//! unlink's. Everything else is `Unknown`.

use alloc::vec::Vec;
use core::fmt;

use crate::bracket::{jones_bracket, unlink_value};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::limits::Limits;
use crate::markov::{markov_simplify, MarkovStep};
use crate::warping::{braid_warping_degree, closed_warping_degree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    CertifiedTrivial,
    CertifiedNontrivial,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::CertifiedTrivial => "trivial",
            Verdict::CertifiedNontrivial => "nontrivial",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    /// A closure-following sequence with no warping crossing points.
    ClosedWarping,
    /// A pure braid with warping degree zero is the trivial braid.
    PureWarping,
    Markov,
    Bracket,
}

impl Stage {
    pub fn number(self) -> u8 {
        match self {
            Stage::ClosedWarping => 1,
            Stage::PureWarping => 2,
            Stage::Markov => 3,
            Stage::Bracket => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stage::ClosedWarping => "closed-warping",
            Stage::PureWarping => "pure-warping",
            Stage::Markov => "markov",
            Stage::Bracket => "bracket",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    /// The stage that decided the verdict.
    pub stage: Option<Stage>,
    /// Zero-warping strand order for the warping stages.
    pub sequence: Option<Vec<usize>>,
    pub trace: Vec<MarkovStep>,
    pub bracket: Option<Laurent>,
    /// Leading pure blocks certified trivial on their own.
    pub trivial_blocks: usize,
    /// Stages not run because a cap was exceeded.
    pub skipped: Vec<&'static str>,
}

impl Certificate {
    fn new() -> Self {
        Certificate { verdict: Verdict::Unknown, stage: None, sequence: None, trace: Vec::new(), bracket: None, trivial_blocks: 0, skipped: Vec::new() }
    }

    fn decide(mut self, verdict: Verdict, stage: Stage) -> Self {
        self.verdict = verdict;
        self.stage = Some(stage);
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.verdict == Verdict::CertifiedTrivial
    }
}

fn capped<T>(r: Result<T>, skipped: &mut Vec<&'static str>, stage: &'static str) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => {
            skipped.push(stage);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Zero-warping witness when `b` is a pure braid of warping degree zero.
fn pure_witness(b: &BraidWord, limits: &Limits, skipped: &mut Vec<&'static str>) -> Result<Option<Vec<usize>>> {
    if !b.permutation().is_identity() {
        return Ok(None);
    }
    let r = capped(braid_warping_degree(b, limits), skipped, "pure-warping")?;
    Ok(r.filter(|r| r.count == 0).map(|r| r.sequence))
}

pub fn certify_triviality(b: &BraidWord, limits: &Limits) -> Result<Certificate> {
    let mut cert = Certificate::new();

    if b.permutation().is_identity() {
        if let Some(seq) = pure_witness(b, limits, &mut cert.skipped)? {
            cert.sequence = Some(seq);
            return Ok(cert.decide(Verdict::CertifiedTrivial, Stage::PureWarping));
        }
    } else if let Some(r) = capped(closed_warping_degree(b, limits), &mut cert.skipped, "closed-warping")? {
        if r.count == 0 {
            cert.sequence = Some(r.sequence);
            return Ok(cert.decide(Verdict::CertifiedTrivial, Stage::ClosedWarping));
        }
    }

    let out = markov_simplify(b, limits.budget);
    if out.reduced {
        cert.trace = out.trace;
        return Ok(cert.decide(Verdict::CertifiedTrivial, Stage::Markov));
    }

    if let Some(j) = capped(jones_bracket(b, limits), &mut cert.skipped, "bracket")? {
        let unlink = unlink_value(b.permutation().cycle_count());
        let differs = j != unlink;
        cert.bracket = Some(j);
        if differs {
            return Ok(cert.decide(Verdict::CertifiedNontrivial, Stage::Bracket));
        }
    }
    Ok(cert)
}

/// Certifies the leading `blocks` chunks of `block_len` letters as trivial
/// pure braids on their own, then certifies what is left. A chunk that does
/// not qualify falls back to certifying the whole word.
pub fn certify_blockwise(b: &BraidWord, block_len: usize, blocks: usize, limits: &Limits) -> Result<Certificate> {
    if block_len == 0 || block_len * blocks > b.len() {
        return Err(Error::Precondition("blocks must fit inside the word"));
    }
    let mut skipped = Vec::new();
    for k in 0..blocks {
        let chunk = b.slice(k * block_len..(k + 1) * block_len);
        if pure_witness(&chunk, limits, &mut skipped)?.is_none() {
            return certify_triviality(b, limits);
        }
    }
    let rest = b.slice(blocks * block_len..b.len());
    let mut cert = certify_triviality(&rest, limits)?;
    cert.trivial_blocks = blocks;
    skipped.append(&mut cert.skipped);
    cert.skipped = skipped;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::warping::{warping_count, BaseSequence};
    use alloc::vec;

    #[test]
    fn one_round_is_closed_warping_trivial() {
        let c = certify_triviality(&BraidWord::weaving(3, 1).unwrap(), &Limits::default()).unwrap();
        assert_eq!((c.verdict, c.stage), (Verdict::CertifiedTrivial, Some(Stage::ClosedWarping)));
    }

    #[test]
    fn figure_eight_is_nontrivial() {
        let c = certify_triviality(&BraidWord::weaving(3, 2).unwrap(), &Limits::default()).unwrap();
        assert_eq!((c.verdict, c.stage), (Verdict::CertifiedNontrivial, Some(Stage::Bracket)));
    }

    #[test]
    fn flipped_block_is_pure_trivial() {
        let b = BraidWord::weaving(3, 3).unwrap();
        let r = warping_count(&b, &BaseSequence::odd_then_even(3)).unwrap();
        let flipped = b.with_crossing_changes(&r.ordinals).unwrap();
        let c = certify_triviality(&flipped, &Limits::default()).unwrap();
        assert_eq!((c.verdict, c.stage), (Verdict::CertifiedTrivial, Some(Stage::PureWarping)));
    }

    #[test]
    fn markov_stage_fires_when_warping_does_not() {
        let b = BraidWord::weaving(5, 1).unwrap();
        let c = certify_triviality(&b, &Limits::default()).unwrap();
        assert_eq!(c.verdict, Verdict::CertifiedTrivial);
        for p in 2..=7 {
            assert!(certify_triviality(&BraidWord::weaving(p, 1).unwrap(), &Limits::default()).unwrap().is_trivial());
        }
    }

    #[test]
    fn capped_stages_are_skipped() {
        let limits = Limits { max_strands: 2, budget: 50, ..Limits::default() };
        let c = certify_triviality(&BraidWord::weaving(3, 2).unwrap(), &limits).unwrap();
        assert_eq!(c.verdict, Verdict::Unknown);
        // one component, so only the bracket hits the strand cap
        assert_eq!(c.skipped, vec!["bracket"]);
    }

    #[test]
    fn trivial_verdicts_agree_with_bracket() {
        let limits = Limits::default();
        for b in [BraidWord::weaving(4, 1).unwrap(), BraidWord::from_ints(3, &[1, -2, -1, 2]).unwrap()] {
            let c = certify_triviality(&b, &limits).unwrap();
            if c.is_trivial() {
                assert_eq!(jones_bracket(&b, &limits).unwrap(), unlink_value(b.permutation().cycle_count()));
            }
        }
    }

    #[test]
    fn blockwise() {
        let b = BraidWord::weaving(3, 4).unwrap();
        let r = warping_count(&b.slice(0..6), &BaseSequence::odd_then_even(3)).unwrap();
        let flipped = b.with_crossing_changes(&r.ordinals).unwrap();
        let c = certify_blockwise(&flipped, 6, 1, &Limits::default()).unwrap();
        assert!(c.is_trivial());
        assert_eq!(c.trivial_blocks, 1);
        assert!(certify_blockwise(&flipped, 6, 2, &Limits::default()).is_err());
    }
}
