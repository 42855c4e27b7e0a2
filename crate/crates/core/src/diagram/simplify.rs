//! Elementary Reidemeister I and II reductions.

use std::collections::BTreeMap;

use super::{Crossing, PlanarDiagram};

/// Removes kinks and bigons until none remain. Every move deletes
/// crossings; the result is isotopic to the input. Bigon removal is only
/// attempted on diagrams whose crossing graph is connected.
pub fn simplify(d: &PlanarDiagram) -> PlanarDiagram {
    let mut current = d.normalized();
    loop {
        if let Some(next) = remove_kink(&current) {
            current = next;
            continue;
        }
        if current.is_connected_graph() {
            if let Some(next) = remove_bigon(&current) {
                current = next;
                continue;
            }
        }
        return current;
    }
}

/// Deletes the crossings in `removed` and splices the strands: each pair in
/// `joins` is glued into one arc.
fn splice(d: &PlanarDiagram, removed: &[usize], joins: &[(usize, usize)]) -> PlanarDiagram {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn root(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let p = *parent.entry(x).or_insert(x);
        if p == x {
            x
        } else {
            let r = root(parent, p);
            parent.insert(x, r);
            r
        }
    }
    for &(a, b) in joins {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent.insert(ra, rb);
        }
    }
    let crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, c)| {
            Crossing::new(
                c.edges.map(|e| {
                    if parent.contains_key(&e) {
                        root(&mut parent, e)
                    } else {
                        e
                    }
                }),
                c.sign,
            )
        })
        .collect();
    let mut classes: BTreeMap<usize, usize> = BTreeMap::new();
    let keys: Vec<usize> = parent.keys().copied().collect();
    for k in keys {
        let r = root(&mut parent, k);
        classes.entry(r).or_insert(0);
    }
    for c in &crossings {
        for e in c.edges {
            if let Some(n) = classes.get_mut(&e) {
                *n += 1;
            }
        }
    }
    let new_loops = classes.values().filter(|&&n| n == 0).count();
    PlanarDiagram::from_crossings(crossings, d.free_loops() + new_loops).normalized()
}

/// Reidemeister I: an edge occupying two adjacent slots of one crossing.
fn remove_kink(d: &PlanarDiagram) -> Option<PlanarDiagram> {
    for (ci, c) in d.crossings().iter().enumerate() {
        for i in 0..4 {
            if c.edges[i] == c.edges[(i + 1) % 4] {
                let g = c.edges[(i + 2) % 4];
                let h = c.edges[(i + 3) % 4];
                return Some(splice(d, &[ci], &[(g, h)]));
            }
        }
    }
    None
}

/// Reidemeister II: two crossings joined by two edges that are adjacent at
/// both ends, with one strand passing over at both crossings.
fn remove_bigon(d: &PlanarDiagram) -> Option<PlanarDiagram> {
    let ends = d.ports();
    let cs = d.crossings();
    let is_over = |slot: usize| slot % 2 == 1;
    for (e, &[p, q]) in ends.iter().enumerate() {
        if p.crossing == q.crossing {
            continue;
        }
        let (x, y) = (p.crossing, q.crossing);
        if is_over(p.slot) != is_over(q.slot) {
            continue;
        }
        for step in [1, 3] {
            let sx = (p.slot + step) % 4;
            let f = cs[x].edges[sx];
            if f == e {
                continue;
            }
            let [fp, fq] = ends[f];
            let (f_at_x, f_at_y) = if fp.crossing == x && fq.crossing == y {
                (fp, fq)
            } else if fq.crossing == x && fp.crossing == y {
                (fq, fp)
            } else {
                continue;
            };
            debug_assert_eq!(f_at_x.slot, sx);
            let adjacent_at_y = (f_at_y.slot + 1) % 4 == q.slot || (q.slot + 1) % 4 == f_at_y.slot;
            if !adjacent_at_y {
                continue;
            }
            let opp = |c: usize, slot: usize| cs[c].edges[(slot + 2) % 4];
            let joins = [
                (opp(x, p.slot), opp(y, q.slot)),
                (opp(x, f_at_x.slot), opp(y, f_at_y.slot)),
            ];
            return Some(splice(d, &[x, y], &joins));
        }
    }
    None
}
