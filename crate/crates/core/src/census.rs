//! Ordering, naming and counting conventions for census tables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::braid::{is_lorenz_form, Mirror};
use crate::notation::{parse_ttk_any_order, CensusRecord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("record {census_id}: missing {field}")]
    MissingField {
        census_id: String,
        field: &'static str,
    },
    #[error("record {census_id}: name {name:?} does not encode a tetrahedra count")]
    Unnamed { census_id: String, name: String },
    #[error("bad manifold counts: {0}")]
    BadCounts(String),
}

/// Value rounded to 10 decimal places, as an exact integer.
fn fixed_key(x: f64) -> i128 {
    let text = format!("{x:.10}");
    text.replace('.', "")
        .parse()
        .expect("formatted finite float is an integer string")
}

fn present(x: f64) -> bool {
    x.is_finite() && x > 0.0
}

/// Volume ascending, systole descending, second geodesic descending (absent
/// last), then census id.
pub fn census_order(a: &CensusRecord, b: &CensusRecord) -> Ordering {
    fixed_key(a.volume)
        .cmp(&fixed_key(b.volume))
        .then_with(|| fixed_key(b.systole).cmp(&fixed_key(a.systole)))
        .then_with(|| {
            b.second_geodesic
                .map(fixed_key)
                .cmp(&a.second_geodesic.map(fixed_key))
        })
        .then_with(|| a.census_id.cmp(&b.census_id))
}

/// Sorts by `census_order` and renames to `k{tet}_{m}`, `m` from 1.
pub fn sort_and_name(
    mut records: Vec<CensusRecord>,
    tet_count: u32,
) -> Result<Vec<CensusRecord>, CensusError> {
    for r in &records {
        for (field, value) in [("volume", r.volume), ("systole", r.systole)] {
            if !present(value) {
                return Err(CensusError::MissingField {
                    census_id: r.census_id.clone(),
                    field,
                });
            }
        }
    }
    records.sort_by(census_order);
    for (i, r) in records.iter_mut().enumerate() {
        r.name = format!("k{tet_count}_{}", i + 1);
    }
    Ok(records)
}

/// Buckets records by the tetrahedra count in their names.
pub fn group_by_tet(
    records: Vec<CensusRecord>,
) -> Result<BTreeMap<u32, Vec<CensusRecord>>, CensusError> {
    let mut groups: BTreeMap<u32, Vec<CensusRecord>> = BTreeMap::new();
    for r in records {
        let tet = r.tet_count().ok_or_else(|| CensusError::Unnamed {
            census_id: r.census_id.clone(),
            name: r.name.clone(),
        })?;
        groups.entry(tet).or_default().push(r);
    }
    Ok(groups)
}

/// Lorenz status of a description: `(strict, up to mirror)`.
/// Anything that is not T-notation is not Lorenz.
pub fn lorenz_status(description: &str) -> (bool, bool) {
    match parse_ttk_any_order(description) {
        Ok(spec) => {
            let strict = is_lorenz_form(&spec);
            (strict, strict || is_lorenz_form(&spec.mirror()))
        }
        Err(_) => (false, false),
    }
}

/// Rows of counts indexed by tetrahedra `1..=max`, with a totals column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub tetrahedra: Vec<u32>,
    pub rows: Vec<(String, Vec<u64>)>,
}

impl CountTable {
    fn new(max_tet: u32) -> Self {
        Self {
            tetrahedra: (1..=max_tet).collect(),
            rows: Vec::new(),
        }
    }

    fn push_row(&mut self, label: &str, counts: &BTreeMap<u32, u64>) {
        let values = self
            .tetrahedra
            .iter()
            .map(|t| counts.get(t).copied().unwrap_or(0))
            .collect();
        self.rows.push((label.to_string(), values));
    }

    pub fn row(&self, label: &str) -> Option<&[u64]> {
        self.rows
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v.as_slice())
    }

    pub fn total(&self, label: &str) -> Option<u64> {
        self.row(label).map(|v| v.iter().sum())
    }

    fn header(&self) -> Vec<String> {
        let mut h = vec!["Tetrahedra".to_string()];
        h.extend(self.tetrahedra.iter().map(u32::to_string));
        h.push(format!(
            "<={}",
            self.tetrahedra.last().copied().unwrap_or(0)
        ));
        h
    }

    fn body(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|(label, values)| {
                let mut line = vec![label.clone()];
                line.extend(values.iter().map(u64::to_string));
                line.push(values.iter().sum::<u64>().to_string());
                line
            })
            .collect()
    }

    /// Aligned plain text: label column left-aligned, numbers right-aligned.
    pub fn to_text(&self) -> String {
        let lines: Vec<Vec<String>> = std::iter::once(self.header()).chain(self.body()).collect();
        let columns = lines[0].len();
        let widths: Vec<usize> = (0..columns)
            .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &lines {
            let mut text = format!("{:<w$}", line[0], w = widths[0]);
            for c in 1..columns {
                write!(text, "  {:>w$}", line[c], w = widths[c]).unwrap();
            }
            out.push_str(text.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        std::iter::once(self.header())
            .chain(self.body())
            .map(|l| l.join(",") + "\n")
            .collect()
    }
}

pub const KNOTS_ROW: &str = "Knots";
pub const MANIFOLDS_ROW: &str = "Manifolds";
pub const LORENZ_ROW: &str = "Lorenz knots";
pub const LORENZ_MIRROR_ROW: &str = "Lorenz up to mirror";

fn max_key<V>(m: &BTreeMap<u32, V>) -> u32 {
    m.keys().next_back().copied().unwrap_or(0)
}

/// Knot counts with strict and mirror-inclusive Lorenz counts.
pub fn lorenz_count_table(groups: &BTreeMap<u32, Vec<CensusRecord>>) -> CountTable {
    let mut knots = BTreeMap::new();
    let mut strict = BTreeMap::new();
    let mut mirrored = BTreeMap::new();
    for (&tet, records) in groups {
        knots.insert(tet, records.len() as u64);
        let status: Vec<(bool, bool)> = records
            .iter()
            .map(|r| lorenz_status(&r.description))
            .collect();
        strict.insert(tet, status.iter().filter(|s| s.0).count() as u64);
        mirrored.insert(tet, status.iter().filter(|s| s.1).count() as u64);
    }
    let mut table = CountTable::new(max_key(groups));
    table.push_row(KNOTS_ROW, &knots);
    table.push_row(LORENZ_ROW, &strict);
    table.push_row(LORENZ_MIRROR_ROW, &mirrored);
    table
}

/// Manifold and knot counts. Manifold totals are not derivable from knot
/// records and are supplied per tetrahedra count.
pub fn stats_table(
    groups: &BTreeMap<u32, Vec<CensusRecord>>,
    manifolds: &BTreeMap<u32, u64>,
) -> CountTable {
    let knots: BTreeMap<u32, u64> = groups.iter().map(|(&t, r)| (t, r.len() as u64)).collect();
    let mut table = CountTable::new(max_key(groups).max(max_key(manifolds)));
    table.push_row(MANIFOLDS_ROW, manifolds);
    table.push_row(KNOTS_ROW, &knots);
    table
}

/// Comma-separated manifold counts for tetrahedra `1, 2, ...`.
pub fn parse_manifold_counts(text: &str) -> Result<BTreeMap<u32, u64>, CensusError> {
    if text.trim().is_empty() {
        return Ok(BTreeMap::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<u64>()
                .map(|n| (i as u32 + 1, n))
                .map_err(|_| CensusError::BadCounts(format!("not a count: {:?}", t.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::Symmetry;
    use proptest::prelude::*;

    fn rec(id: &str, volume: f64, systole: f64, second: Option<f64>) -> CensusRecord {
        CensusRecord {
            name: String::new(),
            census_id: id.to_string(),
            volume,
            chern_simons: None,
            symmetry: Symmetry::Trivial,
            systole,
            second_geodesic: second,
            description: String::new(),
            dt: None,
        }
    }

    fn ids(rs: &[CensusRecord]) -> Vec<&str> {
        rs.iter().map(|r| r.census_id.as_str()).collect()
    }

    #[test]
    fn ordering_rules() {
        let s = sort_and_name(vec![rec("a", 3.0, 0.1, None), rec("b", 2.0, 0.1, None)], 8).unwrap();
        assert_eq!(ids(&s), ["b", "a"]);
        assert_eq!(s[0].name, "k8_1");
        assert_eq!(s[1].name, "k8_2");
        let s = sort_and_name(vec![rec("a", 2.0, 0.5, None), rec("b", 2.0, 0.9, None)], 8).unwrap();
        assert_eq!(ids(&s), ["b", "a"]);
        let s = sort_and_name(
            vec![rec("a", 2.0, 0.5, Some(1.1)), rec("b", 2.0, 0.5, Some(1.4))],
            8,
        )
        .unwrap();
        assert_eq!(ids(&s), ["b", "a"]);
        let s = sort_and_name(
            vec![rec("b", 2.0, 0.5, Some(1.1)), rec("a", 2.0, 0.5, Some(1.1))],
            7,
        )
        .unwrap();
        assert_eq!(ids(&s), ["a", "b"]);
        assert_eq!(s[0].name, "k7_1");
    }

    #[test]
    fn ties_at_ten_decimals() {
        let s = sort_and_name(
            vec![
                rec("a", 2.000000000001, 0.5, None),
                rec("b", 2.0, 0.9, None),
            ],
            8,
        )
        .unwrap();
        assert_eq!(ids(&s), ["b", "a"]);
        let s = sort_and_name(
            vec![rec("a", 2.00000000051, 0.5, None), rec("b", 2.0, 0.9, None)],
            8,
        )
        .unwrap();
        assert_eq!(ids(&s), ["b", "a"]);
        let s = sort_and_name(
            vec![rec("a", 2.0, 0.5, None), rec("b", 2.0000000002, 0.9, None)],
            8,
        )
        .unwrap();
        assert_eq!(ids(&s), ["a", "b"]);
    }

    #[test]
    fn absent_second_geodesic_sorts_last() {
        let s = sort_and_name(
            vec![rec("a", 2.0, 0.5, None), rec("b", 2.0, 0.5, Some(0.7))],
            8,
        )
        .unwrap();
        assert_eq!(ids(&s), ["b", "a"]);
    }

    #[test]
    fn missing_fields_are_rejected() {
        let err = sort_and_name(vec![rec("x", f64::NAN, 0.5, None)], 8).unwrap_err();
        assert_eq!(
            err,
            CensusError::MissingField {
                census_id: "x".into(),
                field: "volume"
            }
        );
        let err = sort_and_name(vec![rec("y", 1.0, 0.0, None)], 8).unwrap_err();
        assert_eq!(
            err,
            CensusError::MissingField {
                census_id: "y".into(),
                field: "systole"
            }
        );
    }

    #[test]
    fn lorenz_descriptions() {
        assert_eq!(lorenz_status("T(3,4,5,2)"), (true, true));
        assert_eq!(lorenz_status("T(5,2,3,4)"), (true, true));
        assert_eq!(lorenz_status("T(5,-2,3,-4)"), (false, true));
        assert_eq!(lorenz_status("T(5,2,3,-4)"), (false, false));
        assert_eq!(lorenz_status("10_161"), (false, false));
        assert_eq!(lorenz_status("See Below"), (false, false));
    }

    #[test]
    fn empty_tables() {
        let empty = BTreeMap::new();
        let t = lorenz_count_table(&empty);
        assert!(t.tetrahedra.is_empty());
        assert_eq!(t.total(KNOTS_ROW), Some(0));
        assert_eq!(t.total(LORENZ_ROW), Some(0));
        let s = stats_table(&empty, &BTreeMap::new());
        assert!(s.tetrahedra.is_empty());
        assert!(s.rows.iter().all(|(_, v)| v.is_empty()));
    }

    #[test]
    fn rendering() {
        let mut groups = BTreeMap::new();
        let mut a = rec("a", 1.0, 1.0, None);
        a.description = "T(3,2)".into();
        groups.insert(2u32, vec![a, rec("b", 1.0, 1.0, None)]);
        let t = lorenz_count_table(&groups);
        assert_eq!(
            t.to_csv(),
            "Tetrahedra,1,2,<=2\nKnots,0,2,2\nLorenz knots,0,1,1\nLorenz up to mirror,0,1,1\n"
        );
        let text = t.to_text();
        assert!(
            text.starts_with("Tetrahedra           1  2  <=2\n"),
            "{text}"
        );
        assert!(
            text.contains("\nKnots                0  2    2\n"),
            "{text}"
        );
    }

    #[test]
    fn manifold_counts() {
        let m = parse_manifold_counts("0, 2,9").unwrap();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), [(1, 0), (2, 2), (3, 9)]);
        assert!(parse_manifold_counts("1,x").is_err());
        assert!(parse_manifold_counts("").unwrap().is_empty());
    }

    fn arb_records() -> impl Strategy<Value = Vec<CensusRecord>> {
        prop::collection::vec(
            (1u32..5, 1u32..4, prop::option::of(1u32..4), 0u32..1000),
            0..20,
        )
        .prop_map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(i, (vol, sys, sec, _))| {
                    rec(
                        &format!("t{i:05}"),
                        vol as f64 * 0.5,
                        sys as f64 * 0.25,
                        sec.map(|s| s as f64 * 0.3),
                    )
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn sorting_is_idempotent(records in arb_records()) {
            let once = sort_and_name(records, 6).unwrap();
            let twice = sort_and_name(once.clone(), 6).unwrap();
            prop_assert_eq!(&once, &twice);
            for (i, r) in once.iter().enumerate() {
                prop_assert_eq!(&r.name, &format!("k6_{}", i + 1));
            }
        }

        #[test]
        fn sorting_ignores_input_order(mut records in arb_records(), seed in any::<u64>()) {
            let sorted = sort_and_name(records.clone(), 3).unwrap();
            let n = records.len();
            if n > 1 {
                records.rotate_left((seed as usize) % n);
                records.reverse();
            }
            prop_assert_eq!(sort_and_name(records, 3).unwrap(), sorted);
        }

        #[test]
        fn lorenz_never_exceeds_knots(descs in prop::collection::vec(
            prop_oneof![Just("T(3,2)"), Just("T(4,-1)"), Just("T(5,2,3,-1)"), Just("8_20"), Just("T(3,4,5,2)")], 0..30)) {
            let records: Vec<CensusRecord> = descs.iter().enumerate().map(|(i, d)| {
                let mut r = rec(&format!("t{i}"), 1.0, 1.0, None);
                r.name = format!("k{}_{}", i % 4 + 1, i + 1);
                r.description = d.to_string();
                r
            }).collect();
            let t = lorenz_count_table(&group_by_tet(records).unwrap());
            let knots = t.row(KNOTS_ROW).unwrap();
            let strict = t.row(LORENZ_ROW).unwrap();
            let mirrored = t.row(LORENZ_MIRROR_ROW).unwrap();
            for i in 0..knots.len() {
                prop_assert!(strict[i] <= mirrored[i] && mirrored[i] <= knots[i]);
            }
        }
    }
}
