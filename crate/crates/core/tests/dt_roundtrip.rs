mod common;

use knotcensus::diagram::{
    dt_code_variants, extract_dt, flips_are_planar, planar_flips, planar_flips_exhaustive,
    realize_dt, validate_pd, DiagramError,
};
use knotcensus::notation::parse_dt;

#[test]
fn realize_then_extract() {
    for n in 1..=5 {
        for code in common::realizable_signed_codes(n) {
            let d = realize_dt(&code).unwrap();
            assert!(validate_pd(&d).is_empty(), "{code}");
            assert_eq!(d.crossing_count(), n);
            assert_eq!(d.component_count(), 1);
            let back = extract_dt(&d).unwrap();
            let variants = dt_code_variants(&d).unwrap();
            assert!(variants.contains(&code), "{code} -> {back}");
            assert!(variants.contains(&back));
        }
    }
}

#[test]
fn shortest_non_realizable_code() {
    for n in 1..=4 {
        assert!(common::unsigned_codes(n)
            .iter()
            .all(|c| planar_flips(c).is_some()));
    }
    let code = parse_dt("4 6 8 10 2").unwrap();
    assert!(matches!(
        realize_dt(&code),
        Err(DiagramError::NonRealizable(_))
    ));
    assert!(planar_flips_exhaustive(&code).is_none());
    let signed = parse_dt("4 -6 8 -10 2").unwrap();
    assert!(matches!(
        realize_dt(&signed),
        Err(DiagramError::NonRealizable(_))
    ));
}

#[test]
fn fast_flips_agree_with_exhaustive_search() {
    for n in 1..=7 {
        for code in common::unsigned_codes(n) {
            let fast = planar_flips(&code);
            let slow = planar_flips_exhaustive(&code);
            assert_eq!(fast.is_some(), slow.is_some(), "{code}");
            if let Some(f) = fast {
                assert!(flips_are_planar(&code, &f), "{code}");
            }
        }
    }
}
