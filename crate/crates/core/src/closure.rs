//! The closed-braid diagram: edges, faces, components and linking numbers.
//!
//! Every crossing is a 4-valent vertex with ports in counterclockwise order
//! `NE, NW, SW, SE`. Corner `k` sits between port `k` and port `k + 1`, so
//! the corners are `N, W, S, E`. Strands run downward; the closure arcs
//! return on the right and never cross anything, so the rotation system is
//! the local one at each crossing. Faces are the orbits of darts under
//! "arrive at a port, leave through the next port counterclockwise", which
//! keeps the face on the right of travel.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{BraidWord, CrossingRecord, Sign, StrandPermutation};
use crate::error::{Error, Result};

pub const NE: usize = 0;
pub const NW: usize = 1;
pub const SW: usize = 2;
pub const SE: usize = 3;

pub const NORTH: usize = 0;
pub const WEST: usize = 1;
pub const SOUTH: usize = 2;
pub const EAST: usize = 3;

/// A column segment from one crossing down to the next crossing on the same
/// column. Edge `2c` leaves crossing `c` through `SW`, edge `2c + 1` through
/// `SE`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub column: usize,
    pub from: usize,
    pub to: usize,
    /// Strand carrying the lower end of the segment.
    pub strand: usize,
    /// The segment runs through the closure arc.
    pub wraps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionLabel {
    /// `r^round_slot`, 1-based, the face below crossing `c^round_slot`.
    Round { round: usize, slot: usize },
    /// The face left of the braid.
    Left,
    /// The face right of the braid, inside the closure arcs.
    Right,
    Anonymous(usize),
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionLabel::Round { round, slot } => write!(f, "r{round}_{slot}"),
            RegionLabel::Left => f.write_str("s1"),
            RegionLabel::Right => f.write_str("s2"),
            RegionLabel::Anonymous(id) => write!(f, "f{id}"),
        }
    }
}

impl RegionLabel {
    pub fn parse(s: &str) -> Option<RegionLabel> {
        match s {
            "s1" => return Some(RegionLabel::Left),
            "s2" => return Some(RegionLabel::Right),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix('r') {
            let (a, b) = rest.split_once('_')?;
            let round = a.parse().ok()?;
            let slot = b.parse().ok()?;
            return Some(RegionLabel::Round { round, slot });
        }
        s.strip_prefix('f')?.parse().ok().map(RegionLabel::Anonymous)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: usize,
    pub label: RegionLabel,
    /// `(crossing, corner)` incidences in boundary order.
    pub corners: Vec<(usize, usize)>,
    /// Boundary edges in the same order.
    pub edges: Vec<usize>,
}

impl Region {
    /// Boundary length, crossings counted with multiplicity.
    pub fn gon(&self) -> usize {
        self.corners.len()
    }

    /// Corners of this face at crossing `c`.
    pub fn incidence(&self, c: usize) -> usize {
        self.corners.iter().filter(|&&(x, _)| x == c).count()
    }
}

/// One passage of a component through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
    /// Edge leaving the crossing after this passage.
    pub next_edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Strands in closure order, starting at the smallest.
    pub strands: Vec<usize>,
    /// Edges in traversal order, starting with the edge entering the top of
    /// the first strand.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureDiagram {
    word: BraidWord,
    crossings: Vec<CrossingRecord>,
    weaving: Option<(usize, usize)>,
    permutation: StrandPermutation,
    edges: Vec<Edge>,
    /// `port_edge[c][port]`
    port_edge: Vec<[usize; 4]>,
    faces: Vec<Region>,
    /// `corner_face[c][corner]`
    corner_face: Vec<[usize; 4]>,
    /// `(west, east)` face of each edge.
    edge_faces: Vec<(usize, usize)>,
    components: Vec<Component>,
    edge_component: Vec<usize>,
    strand_component: Vec<usize>,
}

/// Multiset of face sizes.
pub type FaceCensus = BTreeMap<usize, usize>;

impl ClosureDiagram {
    pub fn close(word: &BraidWord) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::CrossingFree);
        }
        if !word.uses_every_generator() {
            return Err(Error::SplitDiagram);
        }
        let n = word.strands();
        let crossings = word.crossings();
        let v = crossings.len();

        // crossings touching each column, top to bottom
        let mut column_hits: Vec<Vec<usize>> = vec![Vec::new(); n];
        for c in &crossings {
            column_hits[c.index - 1].push(c.ordinal);
            column_hits[c.index].push(c.ordinal);
        }

        let mut edges = vec![Edge { column: 0, from: 0, to: 0, strand: 0, wraps: false }; 2 * v];
        let mut port_edge = vec![[usize::MAX; 4]; v];
        for (column, hits) in column_hits.iter().enumerate() {
            for (k, &from) in hits.iter().enumerate() {
                let wraps = k + 1 == hits.len();
                let to = hits[(k + 1) % hits.len()];
                let fc = &crossings[from];
                let side = if fc.index - 1 == column { 0 } else { 1 };
                let id = 2 * from + side;
                let strand = if wraps {
                    column
                } else if side == 0 {
                    fc.right
                } else {
                    fc.left
                };
                edges[id] = Edge { column, from, to, strand, wraps };
                port_edge[from][if side == 0 { SW } else { SE }] = id;
                let in_port = if crossings[to].index - 1 == column { NW } else { NE };
                port_edge[to][in_port] = id;
            }
        }

        let (faces, corner_face, edge_faces) = trace_faces(&edges, &port_edge);
        let permutation = word.permutation();

        let mut strand_component = vec![0; n];
        for (k, cycle) in permutation.cycles().iter().enumerate() {
            for &s in cycle {
                strand_component[s] = k;
            }
        }
        let mut d = ClosureDiagram {
            word: word.clone(),
            crossings,
            weaving: word.weaving_layout(),
            permutation,
            edges,
            port_edge,
            faces,
            corner_face,
            edge_faces,
            components: Vec::new(),
            edge_component: vec![usize::MAX; 2 * v],
            strand_component,
        };
        d.build_components();
        d.attach_labels();
        Ok(d)
    }

    fn build_components(&mut self) {
        let wrap_of_column: Vec<usize> = {
            let mut w = vec![usize::MAX; self.word.strands()];
            for (id, e) in self.edges.iter().enumerate() {
                if e.wraps {
                    w[e.column] = id;
                }
            }
            w
        };
        let cycles: Vec<Vec<usize>> = self.permutation.cycles().to_vec();
        for (k, cycle) in cycles.into_iter().enumerate() {
            let start = wrap_of_column[cycle[0]];
            let mut edges = Vec::new();
            let mut e = start;
            loop {
                self.edge_component[e] = k;
                edges.push(e);
                e = self.step(e).next_edge;
                if e == start {
                    break;
                }
            }
            self.components.push(Component { strands: cycle, edges });
        }
    }

    fn attach_labels(&mut self) {
        let Some((p, q)) = self.weaving else {
            return;
        };
        let mut labels = vec![None; self.faces.len()];
        let mut assign = |face: usize, label: RegionLabel| -> bool {
            if labels[face].is_some() {
                return false;
            }
            labels[face] = Some(label);
            true
        };
        let mut ok = true;
        for round in 1..=q {
            for slot in 1..p {
                let c = (round - 1) * (p - 1) + (slot - 1);
                ok &= assign(self.corner_face[c][SOUTH], RegionLabel::Round { round, slot });
            }
        }
        ok &= assign(self.corner_face[0][WEST], RegionLabel::Left);
        ok &= assign(self.corner_face[p - 2][EAST], RegionLabel::Right);
        if ok && labels.iter().all(Option::is_some) {
            for (f, l) in self.faces.iter_mut().zip(labels) {
                f.label = l.unwrap();
            }
        }
    }

    /// Follows edge `e` into the crossing at its lower end.
    pub fn step(&self, e: usize) -> Passage {
        let edge = &self.edges[e];
        let c = &self.crossings[edge.to];
        let from_left = c.index - 1 == edge.column;
        // the strand goes straight through: NW exits SE, NE exits SW
        let next_edge = if from_left { 2 * edge.to + 1 } else { 2 * edge.to };
        let under = match c.sign {
            Sign::Pos => from_left,
            Sign::Neg => !from_left,
        };
        Passage { crossing: edge.to, over: !under, next_edge }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn crossings(&self) -> &[CrossingRecord] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn weaving_layout(&self) -> Option<(usize, usize)> {
        self.weaving
    }

    pub fn permutation(&self) -> &StrandPermutation {
        &self.permutation
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn port_edge(&self, crossing: usize, port: usize) -> usize {
        self.port_edge[crossing][port]
    }

    pub fn faces(&self) -> &[Region] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn corner_face(&self, crossing: usize, corner: usize) -> usize {
        self.corner_face[crossing][corner]
    }

    /// `(west, east)` faces of an edge.
    pub fn edge_faces(&self, e: usize) -> (usize, usize) {
        self.edge_faces[e]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn edge_component(&self, e: usize) -> usize {
        self.edge_component[e]
    }

    pub fn strand_component(&self, s: usize) -> usize {
        self.strand_component[s]
    }

    /// The edge entering the top of strand `s` (it runs through the closure arc).
    pub fn top_edge(&self, s: usize) -> usize {
        self.edges.iter().position(|e| e.wraps && e.column == s).expect("every column is touched")
    }

    pub fn face_by_label(&self, label: RegionLabel) -> Option<usize> {
        self.faces.iter().position(|f| f.label == label)
    }

    /// Ordinal of `c^round_slot` (1-based labels) in a weaving layout.
    pub fn weaving_crossing(&self, round: usize, slot: usize) -> Option<usize> {
        let (p, q) = self.weaving?;
        (round >= 1 && round <= q && slot >= 1 && slot < p).then(|| (round - 1) * (p - 1) + slot - 1)
    }

    /// The same diagram with exponents flipped at `ordinals`.
    pub fn with_crossing_changes(&self, ordinals: &[usize]) -> Result<ClosureDiagram> {
        ClosureDiagram::close(&self.word.with_crossing_changes(ordinals)?)
    }

    pub fn face_census(&self) -> FaceCensus {
        let mut census = FaceCensus::new();
        for f in &self.faces {
            *census.entry(f.gon()).or_insert(0) += 1;
        }
        census
    }

    /// Number of distinct edges bordering both faces.
    pub fn shared_edge_multiplicity(&self, a: usize, b: usize) -> usize {
        self.edge_faces.iter().filter(|&&(w, e)| (w == a && e == b) || (w == b && e == a)).count()
    }

    /// Two faces share a crossing when both have a corner there.
    pub fn faces_share_crossing(&self, a: usize, b: usize) -> bool {
        self.corner_face.iter().any(|cf| cf.contains(&a) && cf.contains(&b))
    }

    /// A proper 2-colouring of the faces, adjacent faces (across an edge)
    /// getting opposite colours, or `None` when none exists.
    pub fn checkerboard(&self) -> Option<Vec<bool>> {
        let nf = self.faces.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for &(w, e) in &self.edge_faces {
            adj[w].push(e);
            adj[e].push(w);
        }
        let mut color: Vec<Option<bool>> = vec![None; nf];
        for start in 0..nf {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                let cf = color[f].unwrap();
                for &g in &adj[f] {
                    match color[g] {
                        None => {
                            color[g] = Some(!cf);
                            stack.push(g);
                        }
                        Some(cg) if cg == cf => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// `lk[a][b]`: half the signed count of crossings between components
    /// `a` and `b`; the diagonal is zero.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.components.len();
        let mut lk = vec![vec![0i64; k]; k];
        for c in &self.crossings {
            let a = self.strand_component[c.left];
            let b = self.strand_component[c.right];
            if a != b {
                let s = c.sign.value() as i64;
                lk[a][b] += s;
                lk[b][a] += s;
            }
        }
        for row in lk.iter_mut() {
            for x in row.iter_mut() {
                debug_assert!(*x % 2 == 0);
                *x /= 2;
            }
        }
        lk
    }

    /// Every component has even total linking number with the others.
    pub fn is_proper(&self) -> bool {
        self.linking_matrix().iter().all(|row| row.iter().sum::<i64>() % 2 == 0)
    }

    /// Each component meets crossings alternately over and under.
    pub fn is_alternating(&self) -> bool {
        self.components.iter().all(|comp| {
            let over: Vec<bool> = comp.edges.iter().map(|&e| self.step(e).over).collect();
            (0..over.len()).all(|i| over[i] != over[(i + 1) % over.len()])
        })
    }
}

type Traced = (Vec<Region>, Vec<[usize; 4]>, Vec<(usize, usize)>);

fn trace_faces(edges: &[Edge], port_edge: &[[usize; 4]]) -> Traced {
    let v = port_edge.len();
    // dart 2e: downward along e, arrives at (to, in-port); 2e+1: upward, arrives at (from, out-port)
    let arrival = |dart: usize| -> (usize, usize) {
        let e = dart / 2;
        let edge = &edges[e];
        if dart.is_multiple_of(2) {
            let port = if port_edge[edge.to][NW] == e { NW } else { NE };
            (edge.to, port)
        } else {
            (edge.from, if e.is_multiple_of(2) { SW } else { SE })
        }
    };
    let leave = |c: usize, port: usize| -> usize {
        let e = port_edge[c][port];
        if port == SW || port == SE {
            2 * e
        } else {
            2 * e + 1
        }
    };

    let mut dart_face = vec![usize::MAX; 2 * edges.len()];
    let mut corner_face = vec![[usize::MAX; 4]; v];
    let mut faces = Vec::new();
    for start in 0..dart_face.len() {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut region = Region { id, label: RegionLabel::Anonymous(id), corners: Vec::new(), edges: Vec::new() };
        let mut d = start;
        loop {
            dart_face[d] = id;
            region.edges.push(d / 2);
            let (c, port) = arrival(d);
            corner_face[c][port] = id;
            region.corners.push((c, port));
            d = leave(c, (port + 1) % 4);
            if d == start {
                break;
            }
        }
        faces.push(region);
    }
    let edge_faces = (0..edges.len()).map(|e| (dart_face[2 * e], dart_face[2 * e + 1])).collect();
    (faces, corner_face, edge_faces)
}
