use std::fmt;
use std::io::BufRead;

use super::{parse_dt, DTCode, NotationError};

/// Isometry group tag of a knot complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Trivial,
    Z2,
    D2,
    D4,
    Other(String),
}

impl Symmetry {
    pub fn parse(text: &str) -> Self {
        match text.trim() {
            "0" => Self::Trivial,
            "Z2" => Self::Z2,
            "D2" => Self::D2,
            "D4" => Self::D4,
            other => Self::Other(other.to_string()),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trivial => f.write_str("0"),
            Self::Z2 => f.write_str("Z2"),
            Self::D2 => f.write_str("D2"),
            Self::D4 => f.write_str("D4"),
            Self::Other(s) => f.write_str(s),
        }
    }
}

/// One row of a knot census table.
#[derive(Clone, Debug, PartialEq)]
pub struct CensusRecord {
    pub name: String,
    pub census_id: String,
    pub volume: f64,
    pub chern_simons: Option<f64>,
    pub symmetry: Symmetry,
    pub systole: f64,
    pub second_geodesic: Option<f64>,
    pub description: String,
    pub dt: Option<DTCode>,
}

impl CensusRecord {
    /// Tetrahedra count encoded in a `k{T}_{m}` name.
    pub fn tet_count(&self) -> Option<u32> {
        let rest = self.name.strip_prefix('k')?;
        let (tet, index) = rest.split_once('_')?;
        index.parse::<u32>().ok()?;
        tet.parse().ok()
    }

    /// Serializes to the nine-field comma-separated line format.
    pub fn to_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.name,
            self.census_id,
            self.volume,
            opt(self.chern_simons),
            self.symmetry,
            self.systole,
            opt(self.second_geodesic),
            self.description,
            self.dt.as_ref().map(|d| d.to_string()).unwrap_or_default()
        )
    }
}

pub const CENSUS_COLUMNS: [&str; 9] = [
    "name",
    "census_id",
    "volume",
    "chern_simons",
    "symmetry",
    "systole",
    "second_geodesic",
    "description",
    "dt",
];

fn bad(line: usize, column: &'static str, reason: impl Into<String>) -> NotationError {
    NotationError::BadField {
        line,
        column,
        reason: reason.into(),
    }
}

fn parse_real(line: usize, column: &'static str, text: &str) -> Result<f64, NotationError> {
    let v = text.trim().parse::<f64>().map_err(|_| {
        bad(
            line,
            column,
            format!("not a real number: {:?}", text.trim()),
        )
    })?;
    if !v.is_finite() {
        return Err(bad(line, column, "must be finite"));
    }
    Ok(v)
}

fn parse_opt_real(
    line: usize,
    column: &'static str,
    text: &str,
) -> Result<Option<f64>, NotationError> {
    if text.trim().is_empty() {
        Ok(None)
    } else {
        parse_real(line, column, text).map(Some)
    }
}

/// Parses one record line; `line` is the 1-based line number used in errors.
pub fn parse_census_line(text: &str, line: usize) -> Result<CensusRecord, NotationError> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() < CENSUS_COLUMNS.len() {
        return Err(NotationError::MissingColumn {
            line,
            column: CENSUS_COLUMNS[fields.len()],
        });
    }
    if fields.len() > CENSUS_COLUMNS.len() {
        return Err(bad(
            line,
            "dt",
            format!("expected 9 fields, found {}", fields.len()),
        ));
    }
    let name = fields[0].trim();
    if name.is_empty() {
        return Err(bad(line, "name", "empty"));
    }
    let census_id = fields[1].trim();
    if census_id.is_empty() {
        return Err(bad(line, "census_id", "empty"));
    }
    let volume = parse_real(line, "volume", fields[2])?;
    if volume <= 0.0 {
        return Err(bad(line, "volume", "must be positive"));
    }
    let chern_simons = parse_opt_real(line, "chern_simons", fields[3])?;
    let symmetry = Symmetry::parse(fields[4]);
    let systole = parse_real(line, "systole", fields[5])?;
    if systole <= 0.0 {
        return Err(bad(line, "systole", "must be positive"));
    }
    let second_geodesic = parse_opt_real(line, "second_geodesic", fields[6])?;
    if matches!(second_geodesic, Some(g) if g <= 0.0) {
        return Err(bad(line, "second_geodesic", "must be positive"));
    }
    let description = fields[7].trim().to_string();
    let dt = if fields[8].trim().is_empty() {
        None
    } else {
        Some(parse_dt(fields[8]).map_err(|e| bad(line, "dt", e.to_string()))?)
    };
    Ok(CensusRecord {
        name: name.to_string(),
        census_id: census_id.to_string(),
        volume,
        chern_simons,
        symmetry,
        systole,
        second_geodesic,
        description,
        dt,
    })
}

/// Reads records in file order, skipping blank lines and `#` comments.
pub fn parse_census_file<R: BufRead>(reader: R) -> Result<Vec<CensusRecord>, NotationError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| NotationError::Io(e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_census_line(trimmed, i + 1)?);
    }
    Ok(out)
}

pub fn parse_census_str(text: &str) -> Result<Vec<CensusRecord>, NotationError> {
    parse_census_file(text.as_bytes())
}

pub fn write_census<'a>(records: impl IntoIterator<Item = &'a CensusRecord>) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_line() {
        let recs = parse_census_str("k8_1,t00017,7.0198,0.1,Z2,0.5,0.9,T(5;2;3;2),\n").unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.name, "k8_1");
        assert_eq!(r.census_id, "t00017");
        assert_eq!(r.volume, 7.0198);
        assert_eq!(r.chern_simons, Some(0.1));
        assert_eq!(r.symmetry, Symmetry::Z2);
        assert_eq!(r.second_geodesic, Some(0.9));
        assert_eq!(r.description, "T(5;2;3;2)");
        assert_eq!(r.dt, None);
        assert_eq!(r.tet_count(), Some(8));
    }

    #[test]
    fn empty_and_comment_only_files() {
        assert!(parse_census_str("").unwrap().is_empty());
        assert!(parse_census_str("# header\n\n   \n").unwrap().is_empty());
    }

    #[test]
    fn bad_volume_reports_line() {
        let text = "# c\nk8_1,t00017,7.0,,0,0.5,,x,\nk8_2,t00018,abc,,0,0.5,,x,\n";
        match parse_census_str(text) {
            Err(NotationError::BadField { line, column, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(column, "volume");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_columns() {
        assert_eq!(
            parse_census_str("k8_1,t00017,7.0"),
            Err(NotationError::MissingColumn {
                line: 1,
                column: "chern_simons"
            })
        );
    }

    #[test]
    fn dt_column_and_free_symmetry() {
        let r = parse_census_line("k7_80,t00100,5.1,,D8?,0.3,,10_161,4 6 2", 1).unwrap();
        assert_eq!(r.dt.unwrap().entries(), &[4, 6, 2]);
        assert_eq!(r.symmetry, Symmetry::Other("D8?".into()));
        assert!(matches!(
            parse_census_line("k7_80,t00100,5.1,,0,0.3,,x,3 5", 1),
            Err(NotationError::BadField { column: "dt", .. })
        ));
    }
}
