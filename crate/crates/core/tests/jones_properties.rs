mod common;

use knotcensus::braid::{build_ttk, Mirror};
use knotcensus::diagram::{braid_closure_pd, mirror_pd, realize_dt, PlanarDiagram};
use knotcensus::invariants::{
    jones, jones_of_diagram, kauffman_bracket, kauffman_bracket_naive, LaurentPolynomial,
};
use knotcensus::notation::{parse_dt, parse_ttk, BraidWord};
use num_traits::One;
use rayon::prelude::*;

fn corpus() -> Vec<(String, PlanarDiagram)> {
    let mut c = common::ttk_knot_diagrams(9);
    c.extend(common::dt_diagrams(5));
    c
}

#[test]
fn contraction_matches_state_sum() {
    let failures: Vec<String> = corpus()
        .par_iter()
        .filter(|(_, d)| kauffman_bracket(d).unwrap() != kauffman_bracket_naive(d).unwrap())
        .map(|(name, _)| name.clone())
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn value_at_one_is_one() {
    for (name, d) in corpus() {
        assert!(jones(&d).unwrap().coefficient_sum().is_one(), "{name}");
    }
}

#[test]
fn mirror_inverts_variable() {
    for (name, d) in corpus() {
        let v = jones_of_diagram(&d).unwrap();
        assert_eq!(
            jones_of_diagram(&mirror_pd(&d)).unwrap(),
            v.invert_variable(),
            "{name}"
        );
    }
}

#[test]
fn mirror_of_notation_matches_mirror_of_diagram() {
    for spec in common::ttk_knot_specs(8) {
        let d = braid_closure_pd(&build_ttk(&spec));
        let m = braid_closure_pd(&build_ttk(&spec.mirror()));
        assert_eq!(
            jones(&m).unwrap(),
            jones(&d).unwrap().invert_variable(),
            "{spec}"
        );
    }
}

#[test]
fn kinks_do_not_change_jones() {
    for (name, d) in corpus().into_iter().step_by(7) {
        let v = jones_of_diagram(&d).unwrap();
        for e in [0, d.edge_count() / 2] {
            for sign in [1, -1] {
                for under in [true, false] {
                    if let Some(k) = common::add_kink(&d, e, sign, under) {
                        assert_eq!(k.crossing_count(), d.crossing_count() + 1);
                        assert_eq!(
                            jones_of_diagram(&k).unwrap(),
                            v,
                            "{name} edge {e} sign {sign}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn simplification_preserves_jones() {
    for (name, d) in corpus() {
        assert_eq!(jones(&d).unwrap(), jones_of_diagram(&d).unwrap(), "{name}");
    }
}

fn braid_sum(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let shift = a.strands() as i32 - 1;
    let mut letters = a.letters().to_vec();
    letters.extend(b.letters().iter().map(|&l| l.signum() * (l.abs() + shift)));
    BraidWord::new(a.strands() + b.strands() - 1, letters).unwrap()
}

#[test]
fn connected_sums_multiply() {
    let specs = common::ttk_knot_specs(5);
    for a in specs.iter().step_by(3) {
        for b in specs.iter().step_by(4) {
            let (wa, wb) = (build_ttk(a), build_ttk(b));
            let sum = braid_closure_pd(&braid_sum(&wa, &wb));
            let expected =
                &jones(&braid_closure_pd(&wa)).unwrap() * &jones(&braid_closure_pd(&wb)).unwrap();
            assert_eq!(jones(&sum).unwrap(), expected, "{a} # {b}");
        }
    }
}

#[test]
fn named_knots() {
    let trefoil = LaurentPolynomial::from_terms([(1, 1), (3, 1), (4, -1)]);
    let v = jones(&braid_closure_pd(&build_ttk(&parse_ttk("T(2,3)").unwrap()))).unwrap();
    assert!(
        v == trefoil || v == trefoil.invert_variable(),
        "{}",
        v.display_with("t")
    );
    let fig8 = LaurentPolynomial::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
    assert_eq!(
        jones(&realize_dt(&parse_dt("4 6 8 2").unwrap()).unwrap()).unwrap(),
        fig8
    );
    assert_eq!(
        jones(&PlanarDiagram::unknot()).unwrap(),
        LaurentPolynomial::one()
    );
}
