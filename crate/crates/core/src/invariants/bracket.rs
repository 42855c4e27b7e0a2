//! Kauffman bracket by full state sum and by ordered contraction.
//!
//! At a crossing `[a, b, c, d]` the A-smoothing joins `a-b` and `c-d`; the
//! B-smoothing joins `a-d` and `b-c`. The bracket is normalized so that the
//! crossingless unknot has value 1.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{InvariantError, LaurentPolynomial};
use crate::diagram::PlanarDiagram;

pub const DEFAULT_NAIVE_CAP: usize = 20;
pub const DEFAULT_FRONTIER_CAP: usize = 32;

/// Loop value `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

const A_PAIRS: [(usize, usize); 2] = [(0, 1), (2, 3)];
const B_PAIRS: [(usize, usize); 2] = [(0, 3), (1, 2)];

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// State-sum oracle, exponential in the number of crossings.
pub fn kauffman_bracket_naive(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    kauffman_bracket_naive_capped(d, DEFAULT_NAIVE_CAP)
}

pub fn kauffman_bracket_naive_capped(
    d: &PlanarDiagram,
    cap: usize,
) -> Result<LaurentPolynomial, InvariantError> {
    let n = d.crossing_count();
    if n > cap {
        return Err(InvariantError::TooLarge { crossings: n, cap });
    }
    let delta = loop_value();
    if n == 0 {
        return Ok(delta.pow(d.free_loops().saturating_sub(1) as u32));
    }
    let edges = d.edge_count();
    // counts[a - b + n][loops]
    let mut counts = vec![vec![0u64; edges + 2]; 2 * n + 1];
    let mut parent = vec![0usize; edges];
    for mask in 0u64..(1u64 << n) {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut components = edges;
        for (ci, c) in d.crossings().iter().enumerate() {
            let pairs = if mask >> ci & 1 == 0 {
                &A_PAIRS
            } else {
                &B_PAIRS
            };
            for &(s, t) in pairs {
                let (x, y) = (find(&mut parent, c.edges[s]), find(&mut parent, c.edges[t]));
                if x != y {
                    parent[x] = y;
                    components -= 1;
                }
            }
        }
        let b = mask.count_ones() as usize;
        counts[n - b + n - b][components] += 1;
    }
    let mut total = LaurentPolynomial::zero();
    let extra = d.free_loops();
    let mut delta_pows = vec![LaurentPolynomial::one()];
    for _ in 0..edges + extra + 1 {
        let next = delta_pows.last().unwrap() * &delta;
        delta_pows.push(next);
    }
    for (idx, row) in counts.iter().enumerate() {
        let exp = idx as i64 - n as i64;
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = delta_pows[loops + extra - 1]
                .shift(exp)
                .scale(&BigInt::from(count));
            total += &term;
        }
    }
    Ok(total)
}

/// Contraction order: repeatedly take the crossing that leaves the
/// smallest frontier, preferring crossings that close the most open edges.
pub fn contraction_order(d: &PlanarDiagram) -> (Vec<usize>, usize) {
    let n = d.crossing_count();
    let mut seen = vec![0u8; d.edge_count()];
    let mut done = vec![false; n];
    let mut frontier = 0usize;
    let mut width = 0usize;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(i64, i64, usize)> = None;
        for ci in (0..n).filter(|&ci| !done[ci]) {
            let (opened, closed) = frontier_change(&d.crossings()[ci].edges, &seen);
            let key = (opened as i64 - closed as i64, -(closed as i64), ci);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (delta, _, ci) = best.unwrap();
        done[ci] = true;
        for &e in &d.crossings()[ci].edges {
            seen[e] += 1;
        }
        frontier = (frontier as i64 + delta) as usize;
        width = width.max(frontier);
        order.push(ci);
    }
    (order, width)
}

fn frontier_change(edges: &[usize; 4], seen: &[u8]) -> (usize, usize) {
    let mut opened = 0;
    let mut closed = 0;
    for (i, &e) in edges.iter().enumerate() {
        if edges[..i].contains(&e) {
            continue;
        }
        let here = edges.iter().filter(|&&x| x == e).count() as u8;
        match seen[e] + here {
            2 if seen[e] == 1 => closed += 1,
            2 => {}
            _ => opened += 1,
        }
    }
    (opened, closed)
}

const NONE: usize = usize::MAX;

/// Joins the path ends `x` and `y`; returns true when this closes a loop.
fn add_arc(partner: &mut [usize], x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    match (partner[x] != NONE, partner[y] != NONE) {
        (true, true) => {
            let (px, py) = (partner[x], partner[y]);
            partner[x] = NONE;
            partner[y] = NONE;
            if px == y {
                return true;
            }
            partner[px] = py;
            partner[py] = px;
        }
        (true, false) => {
            let px = partner[x];
            partner[x] = NONE;
            partner[px] = y;
            partner[y] = px;
        }
        (false, true) => {
            let py = partner[y];
            partner[y] = NONE;
            partner[py] = x;
            partner[x] = py;
        }
        (false, false) => {
            partner[x] = y;
            partner[y] = x;
        }
    }
    false
}

/// Bracket by contracting crossings along `contraction_order`, keeping one
/// polynomial per connectivity pattern of the open edges.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    kauffman_bracket_capped(d, DEFAULT_FRONTIER_CAP)
}

pub fn kauffman_bracket_capped(
    d: &PlanarDiagram,
    frontier_cap: usize,
) -> Result<LaurentPolynomial, InvariantError> {
    let delta = loop_value();
    let n = d.crossing_count();
    if n == 0 {
        return Ok(delta.pow(d.free_loops().saturating_sub(1) as u32));
    }
    let (order, width) = contraction_order(d);
    if width > frontier_cap {
        return Err(InvariantError::FrontierTooWide {
            width,
            cap: frontier_cap,
        });
    }
    let edges = d.edge_count();
    let mut seen = vec![0u8; edges];
    let mut frontier: Vec<usize> = Vec::new();
    // state: partner index within `frontier` for each frontier edge
    let mut states: HashMap<Vec<u16>, LaurentPolynomial> = HashMap::new();
    states.insert(Vec::new(), LaurentPolynomial::one());
    let mut partner = vec![NONE; edges];

    for &ci in &order {
        let c = d.crossings()[ci];
        for &e in &c.edges {
            seen[e] += 1;
        }
        let next_frontier: Vec<usize> = {
            let mut f: Vec<usize> = frontier.iter().copied().filter(|&e| seen[e] < 2).collect();
            for &e in &c.edges {
                if seen[e] == 1 && !f.contains(&e) {
                    f.push(e);
                }
            }
            f.sort_unstable();
            f
        };
        let mut position = vec![NONE; edges];
        for (i, &e) in next_frontier.iter().enumerate() {
            position[e] = i;
        }
        let mut next: HashMap<Vec<u16>, LaurentPolynomial> =
            HashMap::with_capacity(states.len() * 2);
        for (state, poly) in &states {
            for (pairs, a_exp) in [(&A_PAIRS, 1i64), (&B_PAIRS, -1i64)] {
                for (i, &e) in frontier.iter().enumerate() {
                    partner[e] = frontier[state[i] as usize];
                }
                let mut loops = 0u32;
                for &(s, t) in pairs.iter() {
                    if add_arc(&mut partner, c.edges[s], c.edges[t]) {
                        loops += 1;
                    }
                }
                let key: Vec<u16> = next_frontier
                    .iter()
                    .map(|&e| position[partner[e]] as u16)
                    .collect();
                for &e in frontier.iter().chain(next_frontier.iter()) {
                    partner[e] = NONE;
                }
                let mut term = poly.shift(a_exp);
                for _ in 0..loops {
                    term = &term * &delta;
                }
                next.entry(key).and_modify(|p| *p += &term).or_insert(term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
        frontier = next_frontier;
    }
    debug_assert!(frontier.is_empty());
    let closed = states.remove(&Vec::new()).unwrap_or_default();
    let reduced = closed
        .div_exact(&delta)
        .expect("every closed state contains at least one loop");
    Ok(&reduced * &delta.pow(d.free_loops() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure_pd;
    use crate::notation::BraidWord;

    fn closure(n: usize, letters: &[i32]) -> PlanarDiagram {
        braid_closure_pd(&BraidWord::new(n, letters.to_vec()).unwrap())
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn small_brackets() {
        assert_eq!(
            kauffman_bracket_naive(&PlanarDiagram::unknot()).unwrap(),
            LaurentPolynomial::one()
        );
        assert_eq!(
            kauffman_bracket_naive(&closure(2, &[1])).unwrap(),
            lp(&[(3, -1)])
        );
        assert_eq!(
            kauffman_bracket_naive(&PlanarDiagram::unlink(2)).unwrap(),
            loop_value()
        );
        assert_eq!(kauffman_bracket(&closure(2, &[1])).unwrap(), lp(&[(3, -1)]));
        assert_eq!(
            kauffman_bracket(&closure(2, &[-1])).unwrap(),
            lp(&[(-3, -1)])
        );
    }

    #[test]
    fn trefoil_bracket() {
        let expected = lp(&[(5, -1), (-3, -1), (-7, 1)]);
        let d = closure(2, &[1, 1, 1]);
        assert_eq!(kauffman_bracket_naive(&d).unwrap(), expected);
        assert_eq!(kauffman_bracket(&d).unwrap(), expected);
    }

    #[test]
    fn free_loops_multiply_by_delta() {
        let d = closure(3, &[1, 1, 1]);
        let t = kauffman_bracket(&closure(2, &[1, 1, 1])).unwrap();
        assert_eq!(kauffman_bracket(&d).unwrap(), &t * &loop_value());
        assert_eq!(kauffman_bracket_naive(&d).unwrap(), &t * &loop_value());
    }

    #[test]
    fn caps_are_enforced() {
        let d = closure(2, &[1; 21]);
        assert!(matches!(
            kauffman_bracket_naive(&d),
            Err(InvariantError::TooLarge {
                crossings: 21,
                cap: 20
            })
        ));
        assert!(kauffman_bracket(&d).is_ok());
        assert!(matches!(
            kauffman_bracket_capped(&closure(6, &[1, 2, 3, 4, 5, 1, 2, 3, 4, 5]), 2),
            Err(InvariantError::FrontierTooWide { .. })
        ));
    }
}
