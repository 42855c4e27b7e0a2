//! Realizing DT codes as planar diagrams, and reading codes back off.
//!
//! Traversal positions are `0..2n` (label = position + 1). Edge `p` is the
//! arc of the knot entering position `p`; it leaves position `p - 1`.
//!
//! At each crossing the second pass crosses the first pass in one of two
//! ways. With `in1, out1` the darts of the first pass and `in2, out2` those
//! of the second, the counterclockwise order around the crossing is
//! `[in1, in2, out1, out2]` (flip `false`) or `[in1, out2, out1, in2]`
//! (flip `true`). A flip assignment is planar iff the resulting 4-valent map
//! has `n + 2` faces.

use std::collections::BTreeSet;

use thiserror::Error;

use super::{Crossing, PlanarDiagram};
use crate::notation::DTCode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("DT code {0} has no planar realization")]
    NonRealizable(String),
    #[error("diagram is not a single-component knot diagram with crossings")]
    NotAKnot,
}

/// Traversal positions of each crossing: crossing `k` is met at positions
/// `2k` (odd label `2k+1`) and `|e_k| - 1`.
fn visit_positions(code: &DTCode) -> Vec<(usize, usize)> {
    code.entries()
        .iter()
        .enumerate()
        .map(|(k, &e)| (2 * k, e.unsigned_abs() as usize - 1))
        .collect()
}

/// Dart ids: `2e` is the head of edge `e`, `2e + 1` its tail.
fn head(e: usize) -> usize {
    2 * e
}

fn tail(e: usize) -> usize {
    2 * e + 1
}

/// Counterclockwise dart order around each crossing.
fn rotation(visits: &[(usize, usize)], flips: &[bool]) -> Vec<[usize; 4]> {
    let m = 2 * visits.len();
    visits
        .iter()
        .zip(flips)
        .map(|(&(x, y), &flip)| {
            let (p1, p2) = (x.min(y), x.max(y));
            let in1 = head(p1);
            let out1 = tail((p1 + 1) % m);
            let in2 = head(p2);
            let out2 = tail((p2 + 1) % m);
            if flip {
                [in1, out2, out1, in2]
            } else {
                [in1, in2, out1, out2]
            }
        })
        .collect()
}

/// Faces of the map given by a rotation system on the knot shadow.
fn face_count(rot: &[[usize; 4]]) -> usize {
    let darts = 4 * rot.len();
    let mut next_ccw = vec![usize::MAX; darts];
    for r in rot {
        for i in 0..4 {
            next_ccw[r[i]] = r[(i + 1) % 4];
        }
    }
    let mut seen = vec![false; darts];
    let mut faces = 0;
    for start in 0..darts {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            // cross the edge, then turn to the next dart counterclockwise
            d = next_ccw[d ^ 1];
        }
    }
    faces
}

fn is_planar(visits: &[(usize, usize)], flips: &[bool]) -> bool {
    face_count(&rotation(visits, flips)) == visits.len() + 2
}

/// Interlacement graph of the Gauss word.
fn interlacement(visits: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = visits.len();
    let spans: Vec<(usize, usize)> = visits.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
    let mut g = vec![vec![false; n]; n];
    for u in 0..n {
        for v in (u + 1)..n {
            let (a, b) = spans[u];
            let inside = |p: usize| a < p && p < b;
            let linked = inside(spans[v].0) != inside(spans[v].1);
            g[u][v] = linked;
            g[v][u] = linked;
        }
    }
    g
}

/// Flip assignment for a planar realization of the shadow, or `None` when
/// the Gauss word is not planar.
///
/// Uses the interlacement-graph characterization of planar Gauss words:
/// every crossing is interlaced with an even number of others, every
/// non-interlaced pair shares an even number of interlaced neighbours, and
/// for interlaced pairs the flips differ exactly when the pair shares an
/// even number of neighbours. The last condition is a 2-colouring problem
/// solved per connected component.
pub fn planar_flips(code: &DTCode) -> Option<Vec<bool>> {
    let visits = visit_positions(code);
    let n = visits.len();
    let g = interlacement(&visits);
    let common = |u: usize, v: usize| (0..n).filter(|&w| g[u][w] && g[v][w]).count();
    for u in 0..n {
        if g[u].iter().filter(|&&x| x).count() % 2 != 0 {
            return None;
        }
        for v in (u + 1)..n {
            if !g[u][v] && common(u, v) % 2 != 0 {
                return None;
            }
        }
    }
    let mut flips: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if flips[root].is_some() {
            continue;
        }
        flips[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let fu = flips[u].unwrap();
            for v in 0..n {
                if !g[u][v] {
                    continue;
                }
                let want = fu ^ (common(u, v) % 2 == 0);
                match flips[v] {
                    None => {
                        flips[v] = Some(want);
                        stack.push(v);
                    }
                    Some(fv) if fv != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    // the colouring fixes flips relative to which label parity comes first
    Some(
        flips
            .into_iter()
            .zip(&visits)
            .map(|(f, &(x, y))| f.unwrap() ^ (x.min(y) % 2 == 1))
            .collect(),
    )
}

/// Whether the shadow of `code` can be drawn in the plane.
pub fn shadow_is_planar(code: &DTCode) -> bool {
    planar_flips(code).is_some()
}

/// Exhaustive search over flip assignments (first flip fixed by symmetry).
#[doc(hidden)]
pub fn planar_flips_exhaustive(code: &DTCode) -> Option<Vec<bool>> {
    let visits = visit_positions(code);
    let n = visits.len();
    (0..1u64 << (n - 1)).find_map(|mask| {
        let flips: Vec<bool> = (0..n)
            .map(|i| i > 0 && (mask >> (i - 1)) & 1 == 1)
            .collect();
        is_planar(&visits, &flips).then_some(flips)
    })
}

#[doc(hidden)]
pub fn flips_are_planar(code: &DTCode, flips: &[bool]) -> bool {
    is_planar(&visit_positions(code), flips)
}

fn diagram_from_flips(code: &DTCode, visits: &[(usize, usize)], flips: &[bool]) -> PlanarDiagram {
    let m = 2 * visits.len();
    let rot = rotation(visits, flips);
    let crossings = visits
        .iter()
        .zip(&rot)
        .zip(code.entries())
        .map(|((&(odd_pos, even_pos), r), &entry)| {
            // positive entry: odd pass over, even pass under
            let under_pos = if entry > 0 { even_pos } else { odd_pos };
            let start = r.iter().position(|&d| d == head(under_pos)).unwrap();
            let darts: [usize; 4] = std::array::from_fn(|i| r[(start + i) % 4]);
            let edges = darts.map(|d| (d / 2) % m);
            // the over-strand enters at slot 3 or slot 1
            let sign = if darts[3].is_multiple_of(2) { 1 } else { -1 };
            Crossing::new(edges, sign)
        })
        .collect();
    PlanarDiagram::from_crossings(crossings, 0)
}

/// Builds a diagram for a DT code. The reflection ambiguity is resolved by
/// taking writhe >= 0, ties broken by the lexicographically smallest
/// crossing-sign vector.
pub fn realize_dt(code: &DTCode) -> Result<PlanarDiagram, DiagramError> {
    let visits = visit_positions(code);
    let flips = planar_flips(code).ok_or_else(|| DiagramError::NonRealizable(code.to_string()))?;
    debug_assert!(is_planar(&visits, &flips));
    let reflected: Vec<bool> = flips.iter().map(|f| !f).collect();
    let a = diagram_from_flips(code, &visits, &flips);
    let b = diagram_from_flips(code, &visits, &reflected);
    let key = |d: &PlanarDiagram| {
        let signs: Vec<i8> = d.crossings().iter().map(|c| c.sign).collect();
        (-super::writhe(d), signs)
    };
    Ok(if key(&a) <= key(&b) { a } else { b })
}

/// `(crossing, passes over)` for each visit, following the orientation
/// from the head of `start_edge`.
fn visit_sequence(d: &PlanarDiagram, start_edge: usize) -> Vec<(usize, bool)> {
    let ends = d.ports();
    let mut out = Vec::with_capacity(d.edge_count());
    let mut e = start_edge;
    loop {
        let h = d.head_of(&ends, e);
        out.push((h.crossing, h.slot != 0));
        e = d.crossings()[h.crossing].edges[Crossing::exit_of(h.slot)];
        if e == start_edge {
            break;
        }
    }
    out
}

fn code_from_visits(seq: &[(usize, bool)], crossings: usize) -> Option<DTCode> {
    let mut labels: Vec<Vec<(usize, bool)>> = vec![Vec::new(); crossings];
    for (i, &(c, over)) in seq.iter().enumerate() {
        labels[c].push((i + 1, over));
    }
    let mut entries = vec![0i64; crossings];
    for l in &labels {
        let (odd, even) = match (l[0], l[1]) {
            (a, b) if a.0 % 2 == 1 && b.0 % 2 == 0 => (a, b),
            (a, b) if b.0 % 2 == 1 && a.0 % 2 == 0 => (b, a),
            _ => return None,
        };
        let sign = if even.1 { -1 } else { 1 };
        entries[odd.0 / 2] = sign * even.0 as i64;
    }
    DTCode::new(entries).ok()
}

fn check_knot(d: &PlanarDiagram) -> Result<(), DiagramError> {
    if d.crossing_count() == 0 || d.free_loops() != 0 || d.components().len() != 1 {
        return Err(DiagramError::NotAKnot);
    }
    Ok(())
}

/// DT code read from the traversal starting at the head of edge 0.
pub fn extract_dt(d: &PlanarDiagram) -> Result<DTCode, DiagramError> {
    check_knot(d)?;
    code_from_visits(&visit_sequence(d, 0), d.crossing_count()).ok_or(DiagramError::NotAKnot)
}

/// Every DT code of the diagram over all basepoints and both orientations.
pub fn dt_code_variants(d: &PlanarDiagram) -> Result<BTreeSet<DTCode>, DiagramError> {
    check_knot(d)?;
    let forward = visit_sequence(d, 0);
    let mut backward = forward.clone();
    backward.reverse();
    let mut out = BTreeSet::new();
    for seq in [forward, backward] {
        for shift in 0..seq.len() {
            let mut rotated = seq.clone();
            rotated.rotate_left(shift);
            if let Some(c) = code_from_visits(&rotated, d.crossing_count()) {
                out.insert(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{validate_pd, writhe};
    use crate::notation::parse_dt;

    #[test]
    fn trefoil_and_figure_eight() {
        let t = realize_dt(&parse_dt("4 6 2").unwrap()).unwrap();
        assert_eq!(t.crossing_count(), 3);
        assert!(validate_pd(&t).is_empty());
        assert_eq!(writhe(&t).abs(), 3);
        assert_eq!(extract_dt(&t).unwrap(), parse_dt("4 6 2").unwrap());

        let f = realize_dt(&parse_dt("4 6 8 2").unwrap()).unwrap();
        assert_eq!(f.crossing_count(), 4);
        assert!(validate_pd(&f).is_empty());
        assert_eq!(writhe(&f), 0);
        assert_eq!(extract_dt(&f).unwrap(), parse_dt("4 6 8 2").unwrap());
    }

    #[test]
    fn alternating_when_all_positive() {
        let d = realize_dt(&parse_dt("4 6 8 2").unwrap()).unwrap();
        let seq = visit_sequence(&d, 0);
        for w in seq.windows(2) {
            assert_ne!(w[0].1, w[1].1);
        }
    }
}
