use std::fmt;
use std::str::FromStr;

use super::NotationError;

/// Numeric Dowker-Thistlethwaite code.
///
/// `entries()[k]` is the even label paired with the odd label `2k + 1`.
/// A negative entry marks a crossing where the even-labelled pass goes over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DTCode {
    entries: Vec<i64>,
}

impl DTCode {
    pub fn new(entries: Vec<i64>) -> Result<Self, NotationError> {
        if entries.is_empty() {
            return Err(NotationError::EmptyInput);
        }
        let n = entries.len() as i64;
        let mut seen = vec![false; entries.len()];
        for &e in &entries {
            if e == 0 {
                return Err(NotationError::ZeroEntry);
            }
            if e % 2 != 0 {
                return Err(NotationError::OddEntry(e));
            }
        }
        for &e in &entries {
            let half = e.abs() / 2;
            if half > n {
                return Err(NotationError::MissingMagnitude(first_missing(&entries)));
            }
            let slot = &mut seen[(half - 1) as usize];
            if *slot {
                return Err(NotationError::DuplicateMagnitude(e.abs()));
            }
            *slot = true;
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Partner label (1-based) of every traversal label 1..=2n.
    pub fn involution(&self) -> Vec<usize> {
        let n = self.entries.len();
        let mut partner = vec![0usize; 2 * n + 1];
        for (k, &e) in self.entries.iter().enumerate() {
            let odd = 2 * k + 1;
            let even = e.unsigned_abs() as usize;
            partner[odd] = even;
            partner[even] = odd;
        }
        partner
    }
}

fn first_missing(entries: &[i64]) -> i64 {
    let n = entries.len() as i64;
    (1..=n)
        .map(|k| 2 * k)
        .find(|m| !entries.iter().any(|e| e.abs() == *m))
        .unwrap_or(2 * n)
}

/// Parses whitespace- or comma-separated signed even integers.
pub fn parse_dt(text: &str) -> Result<DTCode, NotationError> {
    let entries = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| NotationError::BadToken(t.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    DTCode::new(entries)
}

pub fn serialize_dt(code: &DTCode) -> String {
    code.to_string()
}

impl fmt::Display for DTCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for DTCode {
    type Err = NotationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_dt(s)
    }
}
