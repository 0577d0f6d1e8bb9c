//! Warping degrees of braids and of closed diagrams.
//!
//! For a braid with an ordering of its strands, a crossing is a warping
//! crossing point when the strand that comes first in the ordering passes
//! under. For a diagram with one base point per component, a crossing is a
//! warping crossing point when it is first met as an under-passage while the
//! components are travelled one after another from their base points.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::{BraidWord, StrandPermutation};
use crate::closure::ClosureDiagram;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::search::min_linear_order;

/// An ordering of strand ids (braids) or of base-point edges (diagrams).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseSequence(Vec<usize>);

impl BaseSequence {
    /// Checks that `order` is a permutation of `0..n`.
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::BadSequence);
        }
        let mut seen = vec![false; n];
        for &x in &order {
            if x >= n || seen[x] {
                return Err(Error::BadSequence);
            }
            seen[x] = true;
        }
        Ok(BaseSequence(order))
    }

    pub fn from_one_based(order: &[usize], n: usize) -> Result<Self> {
        if order.contains(&0) {
            return Err(Error::BadSequence);
        }
        Self::new(order.iter().map(|&x| x - 1).collect(), n)
    }

    pub fn identity(n: usize) -> Self {
        BaseSequence((0..n).collect())
    }

    /// `(1, 3, 5, …, 2, 4, …)` in 1-based terms.
    pub fn odd_then_even(n: usize) -> Self {
        BaseSequence((0..n).step_by(2).chain((1..n).step_by(2)).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        BaseSequence(self.0.iter().rev().copied().collect())
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            pos[x] = k;
        }
        pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpingReport {
    /// Strand ids for braids, base-point edges for diagrams.
    pub sequence: Vec<usize>,
    /// Crossing ordinals of the warping crossing points, ascending.
    pub ordinals: Vec<usize>,
    pub count: usize,
}

impl WarpingReport {
    fn new(sequence: Vec<usize>, mut ordinals: Vec<usize>) -> Self {
        ordinals.sort_unstable();
        let count = ordinals.len();
        WarpingReport { sequence, ordinals, count }
    }
}

/// `m[a][b]` = crossings where strand `a` passes under strand `b`.
pub fn under_counts(b: &BraidWord) -> Vec<Vec<u64>> {
    let n = b.strands();
    let mut m = vec![vec![0u64; n]; n];
    for c in b.crossings() {
        m[c.under][c.over] += 1;
    }
    m
}

pub fn warping_count(b: &BraidWord, seq: &BaseSequence) -> Result<WarpingReport> {
    if seq.len() != b.strands() {
        return Err(Error::BadSequence);
    }
    let pos = seq.positions();
    let ordinals = b.crossings().into_iter().filter(|c| pos[c.under] < pos[c.over]).map(|c| c.ordinal).collect();
    Ok(WarpingReport::new(seq.0.clone(), ordinals))
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::TooLarge { what, size, cap })
    } else {
        Ok(())
    }
}

/// Minimum of [`warping_count`] over all strand orderings, with a witness.
pub fn braid_warping_degree(b: &BraidWord, limits: &Limits) -> Result<WarpingReport> {
    check_cap("strands", b.strands(), limits.max_strands)?;
    let (_, order) = min_linear_order(&under_counts(b));
    warping_count(b, &BaseSequence(order))
}

/// Whether the ordering lists each strand's closure successor right after
/// it unless that successor already appeared.
pub fn follows_closure(rho: &StrandPermutation, seq: &BaseSequence) -> bool {
    let order = seq.as_slice();
    if order.len() != rho.len() {
        return false;
    }
    let mut placed = vec![false; order.len()];
    for (k, &s) in order.iter().enumerate() {
        placed[s] = true;
        let next = rho.apply(s);
        if next == s || placed[next] {
            continue;
        }
        if order.get(k + 1) != Some(&next) {
            return false;
        }
    }
    true
}

/// Minimum of [`warping_count`] over orderings that follow the closure.
///
/// Such an ordering lists whole cycles of the permutation one after another,
/// each cycle read along the closure from some starting strand. The cost
/// splits into a per-cycle part (minimised over starting strands) and a
/// between-cycle part (minimised over cycle orders).
pub fn closed_warping_degree(b: &BraidWord, limits: &Limits) -> Result<WarpingReport> {
    let rho = b.permutation();
    check_cap("closure components", rho.cycle_count(), limits.max_strands)?;
    let under = under_counts(b);
    let cycles = rho.cycles();

    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(cycles.len());
    for cycle in cycles {
        let len = cycle.len();
        let mut best: Option<(u64, Vec<usize>)> = None;
        for start in 0..len {
            let rot: Vec<usize> = (0..len).map(|k| cycle[(start + k) % len]).collect();
            let mut cost = 0;
            for i in 0..len {
                for j in i + 1..len {
                    cost += under[rot[i]][rot[j]];
                }
            }
            if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                best = Some((cost, rot));
            }
        }
        rotations.push(best.unwrap().1);
    }

    let k = cycles.len();
    let mut between = vec![vec![0u64; k]; k];
    for a in 0..k {
        for bb in 0..k {
            if a != bb {
                between[a][bb] = cycles[a].iter().flat_map(|&x| cycles[bb].iter().map(move |&y| (x, y))).map(|(x, y)| under[x][y]).sum();
            }
        }
    }
    let (_, order) = min_linear_order(&between);
    let seq: Vec<usize> = order.into_iter().flat_map(|c| rotations[c].iter().copied()).collect();
    warping_count(b, &BaseSequence(seq))
}

/// Travels the components in the given order, each from its base-point edge.
pub fn diagram_warping_count(d: &ClosureDiagram, basepoints: &[usize]) -> Result<WarpingReport> {
    if basepoints.len() != d.component_count() {
        return Err(Error::BadBasepoints);
    }
    let mut used = vec![false; d.component_count()];
    for &e in basepoints {
        if e >= d.edges().len() || core::mem::replace(&mut used[d.edge_component(e)], true) {
            return Err(Error::BadBasepoints);
        }
    }
    let mut seen = vec![false; d.crossing_count()];
    let mut ordinals = Vec::new();
    for &start in basepoints {
        let mut e = start;
        loop {
            let step = d.step(e);
            if !core::mem::replace(&mut seen[step.crossing], true) && !step.over {
                ordinals.push(step.crossing);
            }
            e = step.next_edge;
            if e == start {
                break;
            }
        }
    }
    Ok(WarpingReport::new(basepoints.to_vec(), ordinals))
}

/// Under-first count of a single component's self-crossings from `start`.
fn self_warping(d: &ClosureDiagram, start: usize) -> u64 {
    let comp = d.edge_component(start);
    let mut seen = vec![false; d.crossing_count()];
    let mut count = 0;
    let mut e = start;
    loop {
        let step = d.step(e);
        let c = &d.crossings()[step.crossing];
        let own = d.strand_component(c.left) == comp && d.strand_component(c.right) == comp;
        if own && !core::mem::replace(&mut seen[step.crossing], true) && !step.over {
            count += 1;
        }
        e = step.next_edge;
        if e == start {
            break;
        }
    }
    count
}

/// Minimum warping degree of the diagram over all component orders and
/// base points. Crossings between two components only depend on which of
/// them is travelled first; self-crossings only on the base point.
pub fn diagram_warping_degree(d: &ClosureDiagram, limits: &Limits) -> Result<WarpingReport> {
    let k = d.component_count();
    check_cap("closure components", k, limits.max_strands)?;
    let mut between = vec![vec![0u64; k]; k];
    for c in d.crossings() {
        let a = d.strand_component(c.under);
        let b = d.strand_component(c.over);
        if a != b {
            between[a][b] += 1;
        }
    }
    let best_base: Vec<usize> = d
        .components()
        .iter()
        .map(|comp| *comp.edges.iter().min_by_key(|&&e| (self_warping(d, e), e)).unwrap())
        .collect();
    let (_, order) = min_linear_order(&between);
    let basepoints: Vec<usize> = order.into_iter().map(|c| best_base[c]).collect();
    diagram_warping_count(d, &basepoints)
}

/// Base points for the closure read off a closure-following strand order:
/// the top of the first strand of each component, components in order of
/// first appearance.
pub fn closure_basepoints(d: &ClosureDiagram, seq: &BaseSequence) -> Vec<usize> {
    let mut taken = vec![false; d.component_count()];
    let mut out = Vec::new();
    for &s in seq.as_slice() {
        let comp = d.strand_component(s);
        if !core::mem::replace(&mut taken[comp], true) {
            out.push(d.top_edge(s));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternatingWarping {
    /// Warping degree with the downward orientation.
    pub d: usize,
    /// Warping degree with the orientation reversed, `c − d − 1`.
    pub d_reversed: usize,
    /// A base-point edge realising `d`; it enters an over-crossing.
    pub base_edge: usize,
}

impl AlternatingWarping {
    pub fn min(&self) -> usize {
        self.d.min(self.d_reversed)
    }
}

/// Warping degree of an alternating knot diagram read from a base point
/// just before an over-crossing, and of its reverse.
pub fn alternating_wd(d: &ClosureDiagram) -> Result<AlternatingWarping> {
    if d.component_count() != 1 {
        return Err(Error::NotKnot);
    }
    if !d.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let mut best: Option<(usize, usize)> = None;
    for &e in &d.components()[0].edges {
        if !d.step(e).over {
            continue;
        }
        let count = diagram_warping_count(d, &[e])?.count;
        if best.is_none_or(|(c, _)| count < c) {
            best = Some((count, e));
        }
    }
    let (dd, base_edge) = best.expect("an alternating diagram with crossings has over-passages");
    Ok(AlternatingWarping { d: dd, d_reversed: d.crossing_count() - dd - 1, base_edge })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smaller of the two orientation values on the closure of `B_W(p, q)`,
/// the only minimal diagram of the weaving knot.
pub fn minimal_warping_degree(p: usize, q: usize) -> Result<usize> {
    if p < 3 || q < 2 {
        return Err(Error::Precondition("weaving knots need p >= 3 and q >= 2"));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotKnot);
    }
    let d = ClosureDiagram::close(&BraidWord::weaving(p, q)?)?;
    Ok(alternating_wd(&d)?.min())
}

pub fn apply_crossing_changes(b: &BraidWord, ordinals: &[usize]) -> Result<BraidWord> {
    b.with_crossing_changes(ordinals)
}
