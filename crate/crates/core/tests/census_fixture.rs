use std::collections::BTreeMap;

use knotcensus::census::{
    group_by_tet, lorenz_count_table, parse_manifold_counts, sort_and_name, stats_table, KNOTS_ROW,
    LORENZ_MIRROR_ROW, LORENZ_ROW, MANIFOLDS_ROW,
};
use knotcensus::notation::{parse_census_str, CensusRecord};

const FIXTURE: &str = include_str!("fixtures/census_counts.csv");
const MANIFOLDS: &str = include_str!("fixtures/manifold_counts.txt");

fn groups() -> BTreeMap<u32, Vec<CensusRecord>> {
    group_by_tet(parse_census_str(FIXTURE).unwrap()).unwrap()
}

#[test]
fn lorenz_table_matches_published_rows() {
    let t = lorenz_count_table(&groups());
    assert_eq!(t.tetrahedra, (1..=8).collect::<Vec<_>>());
    assert_eq!(t.row(KNOTS_ROW).unwrap(), &[0, 1, 2, 4, 22, 43, 129, 301]);
    assert_eq!(t.row(LORENZ_ROW).unwrap(), &[0, 0, 1, 2, 12, 23, 70, 141]);
    assert_eq!(t.total(KNOTS_ROW), Some(502));
    assert_eq!(t.total(LORENZ_ROW), Some(249));
    assert_eq!(t.total(LORENZ_MIRROR_ROW), Some(249));
    let csv = t.to_csv();
    assert!(csv.contains("Knots,0,1,2,4,22,43,129,301,502\n"));
    assert!(csv.contains("Lorenz knots,0,0,1,2,12,23,70,141,249\n"));
}

#[test]
fn stats_table_matches_published_rows() {
    let manifolds = parse_manifold_counts(MANIFOLDS).unwrap();
    let t = stats_table(&groups(), &manifolds);
    assert_eq!(
        t.row(MANIFOLDS_ROW).unwrap(),
        &[0, 2, 9, 52, 223, 913, 3388, 12241]
    );
    assert_eq!(t.total(MANIFOLDS_ROW), Some(16828));
    assert_eq!(t.total(KNOTS_ROW), Some(502));
    let text = t.to_text();
    let last = text.lines().last().unwrap();
    assert!(
        last.starts_with("Knots") && last.ends_with(" 502"),
        "{text}"
    );
}

#[test]
fn fixture_order_is_census_order() {
    for (tet, records) in groups() {
        let mut shuffled = records.clone();
        shuffled.reverse();
        let sorted = sort_and_name(shuffled, tet).unwrap();
        let names: Vec<&str> = sorted.iter().map(|r| r.name.as_str()).collect();
        let original: Vec<&str> = records.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, original);
        assert_eq!(
            sorted.iter().map(|r| &r.census_id).collect::<Vec<_>>(),
            records.iter().map(|r| &r.census_id).collect::<Vec<_>>()
        );
    }
}
