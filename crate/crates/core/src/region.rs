//! Region crossing changes, linear algebra over GF(2), and independent
//! region sets.
//!
//! A region crossing change at a face flips every crossing on its boundary;
//! a crossing met at two corners of the same face is flipped twice, so the
//! effect of a set of faces is the sum of their incidence rows mod 2.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::certify::{certify_triviality, Verdict};
use crate::closure::{ClosureDiagram, RegionLabel, SOUTH};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, RowSpace};
use crate::limits::Limits;
use crate::search::permutations;
use crate::warping::{warping_count, BaseSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Restriction {
    AllFaces,
    /// Faces strictly inside the braid box: drops both outer faces and every
    /// face touching a closure arc.
    BraidInterior,
}

/// Incidence of a face with the crossings, mod 2.
pub fn incidence_row(d: &ClosureDiagram, face: usize) -> BitVec {
    let mut row = BitVec::zeros(d.crossing_count());
    for &(c, _) in &d.faces()[face].corners {
        row.toggle(c);
    }
    row
}

/// Faces excluded by [`Restriction::BraidInterior`].
pub fn outside_faces(d: &ClosureDiagram) -> Vec<usize> {
    let n = d.word().strands();
    let mut out = Vec::new();
    for (e, edge) in d.edges().iter().enumerate() {
        let (west, east) = d.edge_faces(e);
        if edge.wraps {
            out.extend([west, east]);
        }
        if edge.column == 0 {
            out.push(west);
        }
        if edge.column + 1 == n {
            out.push(east);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone)]
pub struct IncidenceSystem {
    /// Face ids, one per row.
    allowed: Vec<usize>,
    rows: Vec<BitVec>,
    crossings: usize,
    space: RowSpace,
}

impl IncidenceSystem {
    pub fn new(d: &ClosureDiagram, restriction: Restriction) -> Self {
        let excluded = match restriction {
            Restriction::AllFaces => Vec::new(),
            Restriction::BraidInterior => outside_faces(d),
        };
        let allowed: Vec<usize> = (0..d.face_count()).filter(|f| excluded.binary_search(f).is_err()).collect();
        let rows: Vec<BitVec> = allowed.iter().map(|&f| incidence_row(d, f)).collect();
        let space = RowSpace::new(d.crossing_count(), &rows);
        IncidenceSystem { allowed, rows, crossings: d.crossing_count(), space }
    }

    pub fn for_braid(b: &BraidWord, restriction: Restriction) -> Result<Self> {
        Ok(Self::new(&ClosureDiagram::close(b)?, restriction))
    }

    pub fn allowed(&self) -> &[usize] {
        &self.allowed
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn nullity(&self) -> usize {
        self.space.nullity()
    }

    fn row_of(&self, face: usize) -> Result<usize> {
        self.allowed.binary_search(&face).map_err(|_| Error::BadRegion(face))
    }

    /// Crossings flipped by the given faces.
    pub fn image(&self, faces: &[usize]) -> Result<BitVec> {
        let mut out = BitVec::zeros(self.crossings);
        for &f in faces {
            out.xor_assign(&self.rows[self.row_of(f)?]);
        }
        Ok(out)
    }

    /// A smallest set of allowed faces whose image is `target`, or `None`
    /// when `target` is outside the span.
    pub fn solve_min_weight(&self, target: &BitVec, max_nullity: usize) -> Result<Option<Vec<usize>>> {
        let sol = self.space.min_weight(target, max_nullity)?;
        Ok(sol.map(|x| x.ones().map(|k| self.allowed[k]).collect()))
    }
}

/// Crossings flipped by a set of faces (any face allowed).
pub fn toggle_image(d: &ClosureDiagram, faces: &[usize]) -> Result<BitVec> {
    let mut out = BitVec::zeros(d.crossing_count());
    for &f in faces {
        if f >= d.face_count() {
            return Err(Error::BadRegion(f));
        }
        out.xor_assign(&incidence_row(d, f));
    }
    Ok(out)
}

pub fn rcc_apply(d: &ClosureDiagram, faces: &[usize]) -> Result<ClosureDiagram> {
    let flips: Vec<usize> = toggle_image(d, faces)?.ones().collect();
    d.with_crossing_changes(&flips)
}

/// Face ids for labels; fails when the diagram does not carry them.
pub fn faces_for_labels(d: &ClosureDiagram, labels: &[RegionLabel]) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|&l| d.face_by_label(l).ok_or(Error::Precondition("region label not present in this diagram")))
        .collect()
}

/// Labels of the given faces, in label order.
pub fn sorted_labels(d: &ClosureDiagram, faces: &[usize]) -> Vec<RegionLabel> {
    let mut out: Vec<RegionLabel> = faces.iter().map(|&f| d.faces()[f].label).collect();
    out.sort_unstable();
    out
}

/// Moves labels `k` rounds down.
pub fn shift_rounds(labels: &[RegionLabel], k: usize) -> Vec<RegionLabel> {
    labels
        .iter()
        .map(|&l| match l {
            RegionLabel::Round { round, slot } => RegionLabel::Round { round: round + k, slot },
            other => other,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionWarping {
    /// `None` when no base sequence can be reached.
    pub value: Option<usize>,
    pub sequence: Option<Vec<usize>>,
    pub regions: Vec<usize>,
}

/// Fewest interior region crossing changes turning `b` into a braid of
/// warping degree zero, over all base sequences.
pub fn region_warping_degree(b: &BraidWord, limits: &Limits) -> Result<RegionWarping> {
    if b.strands() > limits.max_strands {
        return Err(Error::TooLarge { what: "strands", size: b.strands(), cap: limits.max_strands });
    }
    let d = ClosureDiagram::close(b)?;
    let sys = IncidenceSystem::new(&d, Restriction::BraidInterior);
    let mut tried: BTreeMap<BitVec, ()> = BTreeMap::new();
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for order in permutations(b.strands()) {
        let seq = BaseSequence::new(order, b.strands())?;
        let report = warping_count(b, &seq)?;
        let target = BitVec::from_indices(b.len(), report.ordinals);
        if tried.insert(target.clone(), ()).is_some() {
            continue;
        }
        if let Some(sol) = sys.solve_min_weight(&target, limits.max_nullity)? {
            if best.as_ref().is_none_or(|(w, _, _)| sol.len() < *w) {
                best = Some((sol.len(), seq.as_slice().to_vec(), sol));
            }
        }
    }
    Ok(match best {
        Some((w, seq, regions)) => RegionWarping { value: Some(w), sequence: Some(seq), regions },
        None => RegionWarping { value: None, sequence: None, regions: Vec::new() },
    })
}

/// `a, a+1, a+4, a+5, …` up to `b`.
fn pairs(a: usize, b: usize) -> impl Iterator<Item = usize> {
    (a..=b).filter(move |j| (j - a) % 4 < 2)
}

fn check_odd(p: usize) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) {
        Err(Error::Precondition("p must be odd and at least 3"))
    } else {
        Ok(())
    }
}

/// Regions of `B_W(p,p)` whose crossing changes flip exactly the warping
/// crossing points of the odd-then-even base sequence.
pub fn square_block_regions(p: usize) -> Result<Vec<RegionLabel>> {
    check_odd(p)?;
    let mut out = Vec::new();
    for i in 1..p {
        let slots: Vec<usize> = if p % 4 == 1 {
            match i % 4 {
                1 if p >= i + 2 => pairs(1, p - i - 2).collect(),
                2 => pairs(2, p - 2).collect(),
                3 => pairs(p - i + 1, p - 1).collect(),
                _ => Vec::new(),
            }
        } else {
            match i % 4 {
                1 => pairs(1, p - 1).collect(),
                2 if p >= i + 2 => pairs(2, p - i - 2).collect(),
                0 => pairs(p - i + 1, p - 2).collect(),
                _ => Vec::new(),
            }
        };
        out.extend(slots.into_iter().map(|slot| RegionLabel::Round { round: i, slot }));
    }
    out.sort_unstable();
    Ok(out)
}

/// First-round regions of `B_W(p,2)` whose crossing changes leave a braid
/// that simplifies away.
pub fn two_round_regions(p: usize) -> Result<Vec<RegionLabel>> {
    check_odd(p)?;
    let slots: Vec<usize> = if p % 4 == 1 {
        pairs(2, p - 2).collect()
    } else {
        core::iter::once(1).chain(pairs(4, p - 2)).collect()
    };
    Ok(slots.into_iter().map(|slot| RegionLabel::Round { round: 1, slot }).collect())
}

/// The two warping crossing points of strands `a < b` among the crossings
/// with ordinals in `range`, identity base order.
fn warping_pair(d: &ClosureDiagram, range: core::ops::Range<usize>, a: usize, b: usize) -> Result<(usize, usize, Vec<usize>)> {
    let mutual: Vec<_> = d.crossings()[range].iter().filter(|c| c.involves(a) && c.involves(b)).collect();
    let warping: Vec<usize> = mutual.iter().filter(|c| c.under == a).map(|c| c.ordinal).collect();
    let [x, y] = warping[..] else {
        return Err(Error::Precondition("strand pair does not have exactly two warping crossings"));
    };
    let between = mutual.iter().map(|c| c.ordinal).filter(|&o| o > x && o < y).collect();
    Ok((x, y, between))
}

/// Edges of strand `s` from leaving crossing `from` until reaching `to`.
fn strand_path(d: &ClosureDiagram, s: usize, from: usize, to: usize) -> Vec<usize> {
    let c = &d.crossings()[from];
    // the left strand leaves through SE, the right one through SW
    let mut e = if c.left == s { 2 * from + 1 } else { 2 * from };
    let mut path = vec![e];
    loop {
        let step = d.step(e);
        if step.crossing == to {
            return path;
        }
        e = step.next_edge;
        path.push(e);
    }
}

/// Faces enclosed by strands `a < b` between their two warping crossing
/// points inside the crossings `range`; returns the faces and the pair.
pub fn pair_region(d: &ClosureDiagram, range: core::ops::Range<usize>, a: usize, b: usize) -> Result<(Vec<usize>, [usize; 2])> {
    let (x, y, between) = warping_pair(d, range, a, b)?;
    let mut barrier = vec![false; d.edges().len()];
    for s in [a, b] {
        for e in strand_path(d, s, x, y) {
            barrier[e] = true;
        }
    }
    let mut inside = vec![false; d.face_count()];
    let mut stack: Vec<usize> = core::iter::once(x).chain(between).map(|c| d.corner_face(c, SOUTH)).collect();
    while let Some(f) = stack.pop() {
        if core::mem::replace(&mut inside[f], true) {
            continue;
        }
        for &e in &d.faces()[f].edges {
            if barrier[e] {
                continue;
            }
            let (w, east) = d.edge_faces(e);
            let g = if w == f { east } else { w };
            if !inside[g] {
                stack.push(g);
            }
        }
    }
    Ok(((0..d.face_count()).filter(|&f| inside[f]).collect(), [x, y]))
}

/// Symmetric difference of all pair regions, block by block, for the
/// closure of `B_W(p, 2p·blocks)` with `p` even.
pub fn construct_sym_diff(d: &ClosureDiagram) -> Result<Vec<usize>> {
    let (p, q) = d.word().weaving_params().ok_or(Error::NotWeaving)?;
    if p % 2 == 1 || q % (2 * p) != 0 {
        return Err(Error::Precondition("needs p even and q a multiple of 2p"));
    }
    let block = (p - 1) * 2 * p;
    let mut chosen = vec![false; d.face_count()];
    for k in 0..q / (2 * p) {
        for a in 0..p {
            for b in a + 1..p {
                let (faces, _) = pair_region(d, k * block..(k + 1) * block, a, b)?;
                for f in faces {
                    chosen[f] ^= true;
                }
            }
        }
    }
    Ok((0..d.face_count()).filter(|&f| chosen[f]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionUnknotting {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// Exact region unknotting number by trying face subsets in increasing
/// size; a size is only ruled out when every subset of it is certified
/// nontrivial.
pub fn region_unknotting_search(d: &ClosureDiagram, limits: &Limits) -> Result<RegionUnknotting> {
    let nf = d.face_count();
    if nf > limits.max_faces {
        return Err(Error::TooLarge { what: "faces", size: nf, cap: limits.max_faces });
    }
    let mut verdicts: BTreeMap<BitVec, Verdict> = BTreeMap::new();
    for w in 0..=nf {
        let mut inconclusive = false;
        for mask in 0u64..(1 << nf) {
            if mask.count_ones() as usize != w {
                continue;
            }
            let faces: Vec<usize> = (0..nf).filter(|f| mask >> f & 1 == 1).collect();
            let img = toggle_image(d, &faces)?;
            let verdict = match verdicts.get(&img) {
                Some(v) => *v,
                None => {
                    let flips: Vec<usize> = img.ones().collect();
                    let v = certify_triviality(&d.word().with_crossing_changes(&flips)?, limits)?.verdict;
                    verdicts.insert(img, v);
                    v
                }
            };
            match verdict {
                Verdict::CertifiedTrivial => return Ok(RegionUnknotting { value: w, witness: faces }),
                Verdict::Unknown => inconclusive = true,
                Verdict::CertifiedNontrivial => {}
            }
        }
        if inconclusive {
            return Err(Error::CertifierInconclusive { weight: w });
        }
    }
    Err(Error::Precondition("no region crossing changes reach a trivial diagram"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolateReport {
    pub number: usize,
    pub witness: Vec<usize>,
    /// The mod-4 construction on weaving closures, with its independence.
    pub construction: Option<(Vec<usize>, bool)>,
}

fn conflict_masks(d: &ClosureDiagram) -> Vec<u128> {
    let nf = d.face_count();
    let mut adj = vec![0u128; nf];
    for c in 0..d.crossing_count() {
        let fs: Vec<usize> = (0..4).map(|k| d.corner_face(c, k)).collect();
        for &f in &fs {
            for &g in &fs {
                if f != g {
                    adj[f] |= 1 << g;
                }
            }
        }
    }
    adj
}

/// Faces pairwise sharing no crossing.
pub fn is_isolated(d: &ClosureDiagram, faces: &[usize]) -> bool {
    faces.iter().enumerate().all(|(k, &f)| faces[k + 1..].iter().all(|&g| f != g && !d.faces_share_crossing(f, g)))
}

fn mis(adj: &[u128], cand: u128, size: usize, best: &mut (usize, u128), chosen: u128) {
    if cand == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + cand.count_ones() as usize <= best.0 {
        return;
    }
    // branch on the candidate with the most conflicts among candidates
    let mut v = cand.trailing_zeros() as usize;
    let mut deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let du = (adj[u] & cand).count_ones();
        if du > deg {
            deg = du;
            v = u;
        }
    }
    if deg == 0 {
        let total = size + cand.count_ones() as usize;
        if total > best.0 {
            *best = (total, chosen | cand);
        }
        return;
    }
    mis(adj, cand & !(1 << v) & !adj[v], size + 1, best, chosen | 1 << v);
    mis(adj, cand & !(1 << v), size, best, chosen);
}

/// Rounds used by the mod-4 construction: whole groups of four, plus one or
/// two more when `q ≡ 2, 3 (mod 4)`.
pub fn construction_rounds(q: usize) -> usize {
    4 * (q / 4) + [0, 0, 1, 2][q % 4]
}

/// Regions `r^i_j` with `i ≡ j (mod 4)` over [`construction_rounds`].
pub fn mod4_construction(p: usize, q: usize) -> Vec<RegionLabel> {
    let mut out = Vec::new();
    for round in 1..=construction_rounds(q) {
        for slot in 1..p {
            if round % 4 == slot % 4 {
                out.push(RegionLabel::Round { round, slot });
            }
        }
    }
    out
}

/// `⌊(p+2)/4⌋ + ⌊(p+1)/4⌋ + ⌊p/4⌋ + ⌊(p−1)/4⌋`: the construction's count in
/// four consecutive rounds.
pub fn four_round_count(p: usize) -> usize {
    (p + 2) / 4 + (p + 1) / 4 + p / 4 + (p.saturating_sub(1)) / 4
}

pub fn isolate_region_number(d: &ClosureDiagram, limits: &Limits) -> Result<IsolateReport> {
    let nf = d.face_count();
    let cap = limits.max_isolate_faces.min(128);
    if nf > cap {
        return Err(Error::TooLarge { what: "faces", size: nf, cap });
    }
    let adj = conflict_masks(d);
    let all = if nf == 128 { u128::MAX } else { (1u128 << nf) - 1 };
    let mut best = (0, 0u128);
    mis(&adj, all, 0, &mut best, 0);
    let witness: Vec<usize> = (0..nf).filter(|&f| best.1 >> f & 1 == 1).collect();
    let construction = d.word().weaving_params().and_then(|(p, q)| {
        let faces = faces_for_labels(d, &mod4_construction(p, q)).ok()?;
        let ok = is_isolated(d, &faces);
        Some((faces, ok))
    });
    Ok(IsolateReport { number: best.0, witness, construction })
}
