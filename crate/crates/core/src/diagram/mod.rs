//! Oriented planar diagrams in PD form.
//!
//! A crossing lists four edge labels counterclockwise, starting with the
//! incoming under-strand, so the under-strand runs from slot 0 to slot 2.
//! For a positive (right-handed) crossing the over-strand runs from slot 3
//! to slot 1; for a negative crossing from slot 1 to slot 3.

mod dt;
mod simplify;

pub use dt::{
    dt_code_variants, extract_dt, flips_are_planar, planar_flips, planar_flips_exhaustive,
    realize_dt, shadow_is_planar, DiagramError,
};
pub use simplify::simplify;

use std::collections::BTreeMap;

use crate::notation::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn new(edges: [usize; 4], sign: i8) -> Self {
        Self { edges, sign }
    }

    /// Slot through which the over-strand enters.
    pub fn over_in_slot(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    /// Slot through which the over-strand leaves.
    pub fn over_out_slot(&self) -> usize {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    pub fn is_incoming_slot(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    /// Slot where the strand entering at `slot` leaves.
    pub fn exit_of(slot: usize) -> usize {
        (slot + 2) % 4
    }

    /// Same crossing seen from the other side of the plane.
    pub fn mirrored(&self) -> Self {
        let [a, b, c, d] = self.edges;
        if self.sign > 0 {
            Self::new([d, a, b, c], -1)
        } else {
            Self::new([b, c, d, a], 1)
        }
    }
}

/// Knot or link diagram. Components without crossings are counted in
/// `free_loops`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Location of one end of an edge: crossing index and slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Port {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadSign { crossing: usize },
    EdgeDegree { edge: usize, count: usize },
    SignOrientation { edge: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::BadSign { crossing } => write!(f, "crossing {crossing}: sign must be +1 or -1"),
            Self::EdgeDegree { edge, count } => {
                write!(f, "edge degree: edge {edge} used {count} times, expected 2")
            }
            Self::SignOrientation { edge } => write!(
                f,
                "sign/orientation: edge {edge} does not run from an outgoing to an incoming slot"
            ),
        }
    }
}

impl PlanarDiagram {
    /// Unchecked constructor; see [`validate_pd`].
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Self {
            crossings,
            free_loops,
        }
    }

    /// Validated constructor that also normalizes edge labels.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, Vec<Violation>> {
        let d = Self {
            crossings,
            free_loops,
        };
        let v = validate_pd(&d);
        if v.is_empty() {
            Ok(d.normalized())
        } else {
            Err(v)
        }
    }

    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: 1,
        }
    }

    pub fn unlink(components: usize) -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: components,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Both ends of every edge, indexed by edge label. Assumes labels are
    /// `0..2n` (true after normalization).
    pub(crate) fn ports(&self) -> Vec<[Port; 2]> {
        let mut ends: Vec<Vec<Port>> = vec![Vec::with_capacity(2); self.edge_count()];
        for (ci, c) in self.crossings.iter().enumerate() {
            for (slot, &e) in c.edges.iter().enumerate() {
                ends[e].push(Port { crossing: ci, slot });
            }
        }
        ends.into_iter().map(|v| [v[0], v[1]]).collect()
    }

    /// The port where edge `e` ends (its incoming slot).
    fn head_of(&self, ends: &[[Port; 2]], e: usize) -> Port {
        let [p, q] = ends[e];
        if self.crossings[p.crossing].is_incoming_slot(p.slot) {
            p
        } else {
            q
        }
    }

    /// Edge following `e` along the orientation.
    pub(crate) fn successor(&self, ends: &[[Port; 2]], e: usize) -> usize {
        let h = self.head_of(ends, e);
        self.crossings[h.crossing].edges[Crossing::exit_of(h.slot)]
    }

    /// Edge labels of each component in traversal order. Free loops are not
    /// listed.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let ends = self.ports();
        let mut seen = vec![false; self.edge_count()];
        let mut out = Vec::new();
        for c in &self.crossings {
            for &start in &c.edges {
                if seen[start] {
                    continue;
                }
                let mut comp = Vec::new();
                let mut e = start;
                while !seen[e] {
                    seen[e] = true;
                    comp.push(e);
                    e = self.successor(&ends, e);
                }
                out.push(comp);
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Relabels edges `0..2n` in traversal order, components taken in order
    /// of first appearance in the crossing list.
    pub fn normalized(&self) -> Self {
        let mut relabel = BTreeMap::new();
        let dense = self.densified();
        for comp in dense.components() {
            for e in comp {
                let next = relabel.len();
                relabel.insert(e, next);
            }
        }
        let crossings = dense
            .crossings
            .iter()
            .map(|c| Crossing::new(c.edges.map(|e| relabel[&e]), c.sign))
            .collect();
        Self {
            crossings,
            free_loops: self.free_loops,
        }
    }

    /// Relabels arbitrary edge identifiers to `0..2n` by first appearance.
    fn densified(&self) -> Self {
        let mut map = BTreeMap::new();
        for c in &self.crossings {
            for &e in &c.edges {
                let next = map.len();
                map.entry(e).or_insert(next);
            }
        }
        Self {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing::new(c.edges.map(|e| map[&e]), c.sign))
                .collect(),
            free_loops: self.free_loops,
        }
    }

    /// True when the underlying 4-valent graph is connected (or empty).
    pub fn is_connected_graph(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return self.free_loops <= 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let ends = self.ports();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(ci) = stack.pop() {
            for &e in &self.crossings[ci].edges {
                for p in ends[e] {
                    if !seen[p.crossing] {
                        seen[p.crossing] = true;
                        stack.push(p.crossing);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Lists every violated diagram invariant; empty means valid.
pub fn validate_pd(d: &PlanarDiagram) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut uses: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, c) in d.crossings.iter().enumerate() {
        if c.sign != 1 && c.sign != -1 {
            out.push(Violation::BadSign { crossing: ci });
        }
        for (slot, &e) in c.edges.iter().enumerate() {
            uses.entry(e).or_default().push((ci, slot));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (&e, ports) in &uses {
        if ports.len() != 2 {
            out.push(Violation::EdgeDegree {
                edge: e,
                count: ports.len(),
            });
            continue;
        }
        let incoming = ports
            .iter()
            .filter(|&&(ci, slot)| d.crossings[ci].is_incoming_slot(slot))
            .count();
        if incoming != 1 {
            out.push(Violation::SignOrientation { edge: e });
        }
    }
    out
}

pub fn writhe(d: &PlanarDiagram) -> i64 {
    d.crossings.iter().map(|c| c.sign as i64).sum()
}

/// Mirror image: every crossing changes, signs flip.
pub fn mirror_pd(d: &PlanarDiagram) -> PlanarDiagram {
    PlanarDiagram {
        crossings: d.crossings.iter().map(Crossing::mirrored).collect(),
        free_loops: d.free_loops,
    }
}

/// Standard closure of a braid drawn bottom to top; `s_i` is a positive
/// crossing in which strand `i` passes over strand `i + 1`.
pub fn braid_closure_pd(word: &BraidWord) -> PlanarDiagram {
    let n = word.strands();
    let mut current: Vec<usize> = (0..n).collect();
    let mut next_edge = n;
    let mut crossings = Vec::with_capacity(word.len());
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (left_in, right_in) = (current[i], current[i + 1]);
        let (left_out, right_out) = (next_edge, next_edge + 1);
        next_edge += 2;
        let c = if l > 0 {
            // under: right_in -> left_out, over: left_in -> right_out
            Crossing::new([right_in, right_out, left_out, left_in], 1)
        } else {
            // under: left_in -> right_out, over: right_in -> left_out
            Crossing::new([left_in, right_in, right_out, left_out], -1)
        };
        crossings.push(c);
        current[i] = left_out;
        current[i + 1] = right_out;
    }
    // closing arcs identify each top edge with the bottom edge below it
    let mut closing: BTreeMap<usize, usize> = BTreeMap::new();
    let mut free_loops = 0;
    for (pos, &top) in current.iter().enumerate() {
        if top == pos {
            free_loops += 1;
        } else {
            closing.insert(top, pos);
        }
    }
    for c in &mut crossings {
        for e in &mut c.edges {
            if let Some(&b) = closing.get(e) {
                *e = b;
            }
        }
    }
    PlanarDiagram {
        crossings,
        free_loops,
    }
    .normalized()
}
