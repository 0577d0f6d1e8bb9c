//! Simplification of braid words by moves that keep the closure's link type.
//!
//! Words are treated cyclically throughout (conjugation is free). A greedy
//! phase applies length- or strand-reducing moves and a handle move on the
//! highest generator; when it stalls, a bounded breadth-first search over
//! length-preserving moves looks for a word where the greedy phase resumes.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkovRule {
    /// `σ_i^e … σ_i^{−e}` with only commuting letters in between.
    Cancel,
    /// Removing the single occurrence of an outermost generator.
    Destabilize,
    /// `σ_m^a X σ_{m−1}^b Y σ_m^c ↦ X σ_{m−1}^{…} σ_m^b σ_{m−1}^{…} Y`, which
    /// removes one occurrence of the highest generator.
    Handle,
    Commute,
    BraidRelation,
}

impl fmt::Display for MarkovRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MarkovRule::Cancel => "cancel",
            MarkovRule::Destabilize => "destabilize",
            MarkovRule::Handle => "handle",
            MarkovRule::Commute => "commute",
            MarkovRule::BraidRelation => "braid-relation",
        })
    }
}

/// One rewrite; `word` is the result, up to cyclic rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovStep {
    pub rule: MarkovRule,
    pub word: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovOutcome {
    pub word: BraidWord,
    /// The empty word was reached, so the closure is an unlink.
    pub reduced: bool,
    pub trace: Vec<MarkovStep>,
    /// Words visited by the search phase.
    pub visited: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Word {
    n: usize,
    w: Vec<i32>,
}

impl Word {
    fn from_braid(b: &BraidWord) -> Self {
        Word { n: b.strands(), w: b.to_ints() }
    }

    fn to_braid(&self) -> BraidWord {
        BraidWord::from_ints(self.n, &self.w).expect("moves keep letters in range")
    }

    fn canonical(&self) -> Word {
        let len = self.w.len();
        let best = (0..len.max(1))
            .map(|r| self.rotated(r))
            .min()
            .unwrap_or_else(|| self.w.clone());
        Word { n: self.n, w: best }
    }

    fn rotated(&self, r: usize) -> Vec<i32> {
        let len = self.w.len();
        (0..len).map(|k| self.w[(r + k) % len]).collect()
    }
}

fn idx(x: i32) -> usize {
    x.unsigned_abs() as usize
}

fn sgn(x: i32) -> i32 {
    x.signum()
}

fn cancel(word: &Word) -> Option<Word> {
    let w = &word.w;
    let len = w.len();
    for a in 0..len {
        let x = w[a];
        for off in 1..len {
            let b = (a + off) % len;
            let y = w[b];
            if y == -x {
                let rest = w.iter().enumerate().filter(|&(k, _)| k != a && k != b).map(|(_, &l)| l).collect();
                return Some(Word { n: word.n, w: rest });
            }
            if idx(y).abs_diff(idx(x)) <= 1 {
                break;
            }
        }
    }
    None
}

fn destabilize(word: &Word) -> Option<Word> {
    let w = &word.w;
    let hi = w.iter().map(|&x| idx(x)).max()?;
    let lo = w.iter().map(|&x| idx(x)).min()?;
    let count = |g: usize| w.iter().filter(|&&x| idx(x) == g).count();
    if count(hi) == 1 {
        let rest = w.iter().copied().filter(|&x| idx(x) != hi).collect();
        return Some(Word { n: word.n - 1, w: rest });
    }
    if count(lo) == 1 {
        let rest = w
            .iter()
            .copied()
            .filter(|&x| idx(x) != lo)
            .map(|x| if idx(x) > lo { x - sgn(x) } else { x })
            .collect();
        return Some(Word { n: word.n - 1, w: rest });
    }
    None
}

fn handle(word: &Word) -> Option<Word> {
    let w = &word.w;
    let len = w.len();
    let m = w.iter().map(|&x| idx(x)).max()?;
    if m < 2 {
        return None;
    }
    let occ: Vec<usize> = (0..len).filter(|&k| idx(w[k]) == m).collect();
    if occ.len() < 2 {
        return None;
    }
    let below = m as i32 - 1;
    let top = m as i32;
    for k in 0..occ.len() {
        let a = occ[k];
        let b = (occ[(k + 1) % occ.len()] + len - a) % len;
        let r = word.rotated(a);
        let mids: Vec<usize> = (1..b).filter(|&t| idx(r[t]) == m - 1).collect();
        let [t] = mids[..] else { continue };
        let (sa, sb, sc) = (sgn(r[0]), sgn(r[t]), sgn(r[b]));
        let repl = if sc == -sa {
            [-sa * below, sb * top, sa * below]
        } else if sa == sb && sb == sc {
            [sa * below, sa * top, sa * below]
        } else {
            continue;
        };
        let mut out = Vec::with_capacity(len);
        out.extend_from_slice(&r[1..t]);
        out.extend_from_slice(&repl);
        out.extend_from_slice(&r[t + 1..b]);
        out.extend_from_slice(&r[b + 1..]);
        return Some(Word { n: word.n, w: out });
    }
    None
}

fn greedy(word: &Word) -> Option<(MarkovRule, Word)> {
    if let Some(w) = cancel(word) {
        return Some((MarkovRule::Cancel, w));
    }
    if let Some(w) = destabilize(word) {
        return Some((MarkovRule::Destabilize, w));
    }
    handle(word).map(|w| (MarkovRule::Handle, w))
}

/// The first reducing move the greedy phase would apply, if any.
pub fn greedy_step(b: &BraidWord) -> Option<(MarkovRule, BraidWord)> {
    greedy(&Word::from_braid(b)).map(|(r, w)| (r, w.to_braid()))
}

fn neighbours(word: &Word) -> Vec<(MarkovRule, Word)> {
    let w = &word.w;
    let len = w.len();
    let mut out = Vec::new();
    if len >= 2 {
        for i in 0..len {
            let j = (i + 1) % len;
            if idx(w[i]).abs_diff(idx(w[j])) >= 2 {
                let mut v = w.clone();
                v.swap(i, j);
                out.push((MarkovRule::Commute, Word { n: word.n, w: v }));
            }
        }
    }
    if len >= 3 {
        for i in 0..len {
            let (j, k) = ((i + 1) % len, (i + 2) % len);
            let (x, y, z) = (w[i], w[j], w[k]);
            if idx(x) != idx(z) || idx(x).abs_diff(idx(y)) != 1 {
                continue;
            }
            let (sx, sy, sz) = (sgn(x), sgn(y), sgn(z));
            let (ix, iy) = (idx(x) as i32, idx(y) as i32);
            let repl = if sz == -sx {
                [-sx * iy, sy * ix, sx * iy]
            } else if sx == sy && sy == sz {
                [y, x, y]
            } else {
                continue;
            };
            let mut v = w.clone();
            v[i] = repl[0];
            v[j] = repl[1];
            v[k] = repl[2];
            out.push((MarkovRule::BraidRelation, Word { n: word.n, w: v }));
        }
    }
    out
}

/// Every word one length-preserving move away, up to rotation.
pub fn neighbouring_words(b: &BraidWord) -> Vec<(MarkovRule, BraidWord)> {
    neighbours(&Word::from_braid(b)).into_iter().map(|(r, w)| (r, w.to_braid())).collect()
}

pub fn markov_simplify(b: &BraidWord, budget: usize) -> MarkovOutcome {
    let mut trace = Vec::new();
    let mut cur = Word::from_braid(b);
    let mut visited = 0;

    loop {
        while let Some((rule, next)) = greedy(&cur) {
            trace.push(MarkovStep { rule, word: next.to_braid() });
            cur = next;
        }
        if cur.w.is_empty() {
            break;
        }
        match search(&cur, budget, &mut visited) {
            Some(path) => {
                for (rule, w) in path {
                    trace.push(MarkovStep { rule, word: w.to_braid() });
                    cur = w;
                }
            }
            None => break,
        }
    }

    MarkovOutcome { reduced: cur.w.is_empty(), word: cur.to_braid(), trace, visited }
}

/// Breadth-first search for a word where some greedy move applies; returns
/// the path of length-preserving moves to it.
fn search(start: &Word, budget: usize, visited: &mut usize) -> Option<Vec<(MarkovRule, Word)>> {
    let mut parent: BTreeMap<Word, Option<(Word, MarkovRule, Word)>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    parent.insert(start.canonical(), None);
    queue.push_back(start.clone());
    while let Some(w) = queue.pop_front() {
        for (rule, next) in neighbours(&w) {
            let key = next.canonical();
            if parent.contains_key(&key) {
                continue;
            }
            if *visited >= budget {
                return None;
            }
            *visited += 1;
            parent.insert(key.clone(), Some((w.canonical(), rule, next.clone())));
            if greedy(&next).is_some() {
                let mut path = Vec::new();
                let mut k = key;
                while let Some(Some((prev, rule, word))) = parent.get(&k) {
                    path.push((*rule, word.clone()));
                    k = prev.clone();
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(next);
        }
    }
    None
}
