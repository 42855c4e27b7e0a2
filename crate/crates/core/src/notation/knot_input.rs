use std::fmt;
use std::str::FromStr;

use super::{parse_dt, DTCode, NotationError};

/// A braid group element as a literal word in the Artin generators.
///
/// Letter `i > 0` is the generator crossing strands `i` and `i + 1`, and
/// `-i` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, NotationError> {
        if strands < 2 {
            return Err(NotationError::BadStrandCount(strands));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(NotationError::BadStrandIndex {
                letter: bad,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Generalized twisted torus knot `T(r1,s1,...,rk,sk)`: the closure of
/// `delta_{r1}^{s1} ... delta_{rk}^{sk}`. Stored with strictly decreasing `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TTKSpec {
    pairs: Vec<(u32, i32)>,
}

impl TTKSpec {
    /// Validates canonical order `r1 > r2 > ... > rk`.
    pub fn new(pairs: Vec<(u32, i32)>) -> Result<Self, NotationError> {
        validate_blocks(&pairs)?;
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(NotationError::NonDecreasingR);
        }
        Ok(Self { pairs })
    }

    /// Accepts blocks in any order with distinct `r` and stores them in
    /// canonical decreasing order.
    pub fn from_any_order(mut pairs: Vec<(u32, i32)>) -> Result<Self, NotationError> {
        validate_blocks(&pairs)?;
        pairs.sort_by_key(|p| std::cmp::Reverse(p.0));
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[(u32, i32)] {
        &self.pairs
    }

    /// Braid index of the defining braid, `r1`.
    pub fn strands(&self) -> usize {
        self.pairs[0].0 as usize
    }

    /// Semicolon-separated form used inside comma-delimited census files.
    pub fn to_semicolon_string(&self) -> String {
        self.format_with(";")
    }

    fn format_with(&self, sep: &str) -> String {
        let body = self
            .pairs
            .iter()
            .map(|(r, s)| format!("{r}{sep}{s}"))
            .collect::<Vec<_>>()
            .join(sep);
        format!("T({body})")
    }
}

fn validate_blocks(pairs: &[(u32, i32)]) -> Result<(), NotationError> {
    if pairs.is_empty() {
        return Err(NotationError::SyntaxError(
            "T() needs at least one (r,s) pair".into(),
        ));
    }
    for &(r, s) in pairs {
        if r < 2 || s == 0 {
            return Err(NotationError::BadBlock {
                r: r as i64,
                s: s as i64,
            });
        }
    }
    Ok(())
}

impl fmt::Display for TTKSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(","))
    }
}

/// The knot descriptions accepted by `parse_knot_input`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotInput {
    Ttk(TTKSpec),
    Braid(BraidWord),
}

/// Any notation the command-line tools can turn into a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotNotation {
    Ttk(TTKSpec),
    Braid(BraidWord),
    Dt(DTCode),
}

fn parse_t_integers(text: &str) -> Result<Vec<i64>, NotationError> {
    let t = text.trim();
    let inner = t
        .strip_prefix("T(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| NotationError::SyntaxError(format!("expected T(...), got {t:?}")))?;
    let nums = inner
        .split([',', ';'])
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| NotationError::BadToken(tok.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if nums.len() % 2 != 0 {
        return Err(NotationError::OddArity(nums.len()));
    }
    Ok(nums)
}

fn to_pairs(nums: &[i64]) -> Result<Vec<(u32, i32)>, NotationError> {
    nums.chunks(2)
        .map(|c| {
            let (r, s) = (c[0], c[1]);
            match (u32::try_from(r), i32::try_from(s)) {
                (Ok(r), Ok(s)) if r >= 2 && s != 0 => Ok((r, s)),
                _ => Err(NotationError::BadBlock { r, s }),
            }
        })
        .collect()
}

/// Parses `T(r1,s1,...)` (commas or semicolons) in canonical decreasing order.
pub fn parse_ttk(text: &str) -> Result<TTKSpec, NotationError> {
    let nums = parse_t_integers(text)?;
    TTKSpec::new(to_pairs(&nums)?)
}

/// Like `parse_ttk` but accepts the blocks in any order of distinct `r`.
pub fn parse_ttk_any_order(text: &str) -> Result<TTKSpec, NotationError> {
    let nums = parse_t_integers(text)?;
    let pairs = to_pairs(&nums)?;
    let mut rs: Vec<u32> = pairs.iter().map(|p| p.0).collect();
    rs.sort_unstable();
    if rs.windows(2).any(|w| w[0] == w[1]) {
        return Err(NotationError::NonDecreasingR);
    }
    TTKSpec::from_any_order(pairs)
}

/// Parses `n: i1 i2 ... im`.
pub fn parse_braid(text: &str) -> Result<BraidWord, NotationError> {
    let (head, body) = text.split_once(':').ok_or_else(|| {
        NotationError::SyntaxError(format!("expected 'n: letters', got {text:?}"))
    })?;
    let strands = head
        .trim()
        .parse::<usize>()
        .map_err(|_| NotationError::BadToken(head.trim().to_string()))?;
    let letters = body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| NotationError::BadToken(t.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(strands, letters)
}

pub fn parse_knot_input(text: &str) -> Result<KnotInput, NotationError> {
    let t = text.trim();
    if t.starts_with("T(") {
        parse_ttk(t).map(KnotInput::Ttk)
    } else if t.contains(':') {
        parse_braid(t).map(KnotInput::Braid)
    } else {
        Err(NotationError::SyntaxError(format!(
            "not T-notation or a braid word: {t:?}"
        )))
    }
}

/// `parse_knot_input` extended with plain DT codes.
pub fn parse_knot_notation(text: &str) -> Result<KnotNotation, NotationError> {
    let t = text.trim();
    if t.starts_with("T(") || t.contains(':') {
        parse_knot_input(t).map(|k| match k {
            KnotInput::Ttk(s) => KnotNotation::Ttk(s),
            KnotInput::Braid(b) => KnotNotation::Braid(b),
        })
    } else {
        parse_dt(t).map(KnotNotation::Dt)
    }
}

impl FromStr for TTKSpec {
    type Err = NotationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ttk(s)
    }
}

impl FromStr for BraidWord {
    type Err = NotationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}
