//! Text formats: DT codes, braid words, T-notation, Jones table entries and
//! census record files.

mod census_record;
mod dt;
mod jones_entry;
mod knot_input;

pub use census_record::{
    parse_census_file, parse_census_line, parse_census_str, write_census, CensusRecord, Symmetry,
    CENSUS_COLUMNS,
};
pub use dt::{parse_dt, serialize_dt, DTCode};
pub use jones_entry::{format_jones_entry, DegreeSpanEntry};
pub use knot_input::{
    parse_braid, parse_knot_input, parse_knot_notation, parse_ttk, parse_ttk_any_order, BraidWord,
    KnotInput, KnotNotation, TTKSpec,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("empty input")]
    EmptyInput,
    #[error("DT entry {0} is odd")]
    OddEntry(i64),
    #[error("DT entry 0 is not allowed")]
    ZeroEntry,
    #[error("DT magnitude {0} appears more than once")]
    DuplicateMagnitude(i64),
    #[error("DT magnitudes must be exactly 2..2n; {0} is missing")]
    MissingMagnitude(i64),
    #[error("cannot parse token {0:?}")]
    BadToken(String),
    #[error("T(...) needs an even number of integers, got {0}")]
    OddArity(usize),
    #[error("T(...) blocks must satisfy r1 > r2 > ... > rk")]
    NonDecreasingR,
    #[error("invalid T(...) block ({r},{s}): need r >= 2 and s != 0")]
    BadBlock { r: i64, s: i64 },
    #[error("braid letter {letter} out of range for {strands} strands")]
    BadStrandIndex { letter: i32, strands: usize },
    #[error("braids need at least 2 strands, got {0}")]
    BadStrandCount(usize),
    #[error("syntax error: {0}")]
    SyntaxError(String),
    #[error("zero polynomial has no degree span")]
    ZeroPolynomial,
    #[error("line {line}: bad {column}: {reason}")]
    BadField {
        line: usize,
        column: &'static str,
        reason: String,
    },
    #[error("line {line}: missing column {column}")]
    MissingColumn { line: usize, column: &'static str },
    #[error("read error: {0}")]
    Io(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_dt() -> impl Strategy<Value = DTCode> {
        (1usize..12)
            .prop_flat_map(|n| {
                let evens: Vec<i64> = (1..=n as i64).map(|k| 2 * k).collect();
                (
                    Just(evens).prop_shuffle(),
                    proptest::collection::vec(any::<bool>(), n),
                )
            })
            .prop_map(|(evens, signs)| {
                let entries = evens
                    .into_iter()
                    .zip(signs)
                    .map(|(e, neg)| if neg { -e } else { e })
                    .collect();
                DTCode::new(entries).unwrap()
            })
    }

    fn arb_ttk() -> impl Strategy<Value = TTKSpec> {
        proptest::collection::btree_map(
            2u32..12,
            (-9i32..10).prop_filter("nonzero", |s| *s != 0),
            1..4,
        )
        .prop_map(|m| TTKSpec::from_any_order(m.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn dt_round_trip(code in arb_dt()) {
            prop_assert_eq!(parse_dt(&serialize_dt(&code)).unwrap(), code);
        }

        #[test]
        fn ttk_round_trip(spec in arb_ttk()) {
            prop_assert_eq!(parse_ttk(&spec.to_string()).unwrap(), spec.clone());
            prop_assert_eq!(parse_ttk(&spec.to_semicolon_string()).unwrap(), spec);
        }

        #[test]
        fn census_line_round_trip(
            vol in 0.1f64..30.0,
            cs in proptest::option::of(-0.5f64..0.5),
            sys in 0.01f64..3.0,
            second in proptest::option::of(0.01f64..3.0),
            idx in 1u32..400,
            dt in proptest::option::of(arb_dt()),
            spec in arb_ttk(),
        ) {
            let rec = CensusRecord {
                name: format!("k8_{idx}"),
                census_id: format!("t{idx:05}"),
                volume: vol,
                chern_simons: cs,
                symmetry: Symmetry::D2,
                systole: sys,
                second_geodesic: second,
                description: spec.to_semicolon_string(),
                dt,
            };
            let back = parse_census_line(&rec.to_line(), 1).unwrap();
            prop_assert_eq!(back, rec);
        }

        #[test]
        fn dt_acceptance_matches_multiset_rule(entries in proptest::collection::vec(-14i64..15, 1..7)) {
            let n = entries.len() as i64;
            let mut mags: Vec<i64> = entries.iter().map(|e| e.abs()).collect();
            mags.sort_unstable();
            let expected: Vec<i64> = (1..=n).map(|k| 2 * k).collect();
            let valid = mags == expected && entries.iter().all(|e| *e != 0 && e % 2 == 0);
            prop_assert_eq!(DTCode::new(entries).is_ok(), valid);
        }
    }
}
