#![allow(dead_code)]

use knotcensus::braid::{build_ttk, closure_component_count};
use knotcensus::diagram::{braid_closure_pd, planar_flips, realize_dt, PlanarDiagram};
use knotcensus::notation::{DTCode, TTKSpec};

/// T-notation specs with strictly decreasing `r >= 2`, nonzero `s`, at most
/// `max_letters` braid letters, whose closure is a knot.
pub fn ttk_knot_specs(max_letters: usize) -> Vec<TTKSpec> {
    fn extend(
        prefix: &mut Vec<(u32, i32)>,
        r_below: u32,
        budget: usize,
        out: &mut Vec<Vec<(u32, i32)>>,
    ) {
        for r in 2..r_below {
            let width = (r - 1) as usize;
            for mag in 1..=budget / width {
                for s in [mag as i32, -(mag as i32)] {
                    prefix.push((r, s));
                    out.push(prefix.clone());
                    extend(prefix, r, budget - width * mag, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut raw = Vec::new();
    extend(
        &mut Vec::new(),
        max_letters as u32 + 2,
        max_letters,
        &mut raw,
    );
    raw.into_iter()
        .map(|pairs| TTKSpec::new(pairs).expect("decreasing r"))
        .filter(|spec| closure_component_count(&build_ttk(spec)) == 1)
        .collect()
}

pub fn ttk_knot_diagrams(max_letters: usize) -> Vec<(String, PlanarDiagram)> {
    ttk_knot_specs(max_letters)
        .into_iter()
        .map(|spec| (spec.to_string(), braid_closure_pd(&build_ttk(&spec))))
        .collect()
}

fn permutations(items: &[i64]) -> Vec<Vec<i64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Unsigned DT codes with `n` crossings, realizable or not.
pub fn unsigned_codes(n: usize) -> Vec<DTCode> {
    let evens: Vec<i64> = (1..=n as i64).map(|k| 2 * k).collect();
    permutations(&evens)
        .into_iter()
        .filter_map(|p| DTCode::new(p).ok())
        .collect()
}

/// Every sign pattern of every realizable code with `n` crossings.
pub fn realizable_signed_codes(n: usize) -> Vec<DTCode> {
    let mut out = Vec::new();
    for code in unsigned_codes(n) {
        if planar_flips(&code).is_none() {
            continue;
        }
        for mask in 0u32..(1 << n) {
            let signed = code
                .entries()
                .iter()
                .enumerate()
                .map(|(i, &e)| if mask >> i & 1 == 1 { -e } else { e })
                .collect();
            out.push(DTCode::new(signed).expect("sign change keeps code valid"));
        }
    }
    out
}

pub fn dt_diagrams(max_n: usize) -> Vec<(String, PlanarDiagram)> {
    (1..=max_n)
        .flat_map(realizable_signed_codes)
        .map(|c| {
            let d = realize_dt(&c).expect("filtered to realizable codes");
            (format!("DT[{c}]"), d)
        })
        .collect()
}

/// Inserts a Reidemeister I kink of the given sign on edge `e`, with the
/// original strand passing under (`under_first`) or over at the kink.
pub fn add_kink(d: &PlanarDiagram, e: usize, sign: i8, under_first: bool) -> Option<PlanarDiagram> {
    use knotcensus::diagram::Crossing;
    let mut crossings: Vec<Crossing> = d.crossings().to_vec();
    let (head_crossing, head_slot) = crossings.iter().enumerate().find_map(|(ci, c)| {
        (0..4)
            .find(|&s| c.edges[s] == e && c.is_incoming_slot(s))
            .map(|s| (ci, s))
    })?;
    if crossings[head_crossing]
        .edges
        .iter()
        .filter(|&&x| x == e)
        .count()
        > 1
    {
        return None;
    }
    let loop_edge = d.edge_count();
    let out_edge = loop_edge + 1;
    crossings[head_crossing].edges[head_slot] = out_edge;
    let kink = match (sign > 0, under_first) {
        (true, true) => [e, out_edge, loop_edge, loop_edge],
        (false, true) => [e, loop_edge, loop_edge, out_edge],
        (true, false) => [loop_edge, loop_edge, out_edge, e],
        (false, false) => [loop_edge, e, out_edge, loop_edge],
    };
    crossings.push(Crossing::new(kink, sign));
    Some(
        PlanarDiagram::new(crossings, d.free_loops())
            .expect("kink insertion keeps the diagram valid"),
    )
}
