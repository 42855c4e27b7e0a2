use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::NotationError;
use crate::invariants::LaurentPolynomial;

/// Table entry `(n,m) a0 a1 ... a_{m-n}` standing for
/// `a0 t^n + a1 t^(n+1) + ... + a_{m-n} t^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpanEntry {
    pub low: i64,
    pub high: i64,
    pub coefficients: Vec<BigInt>,
}

impl DegreeSpanEntry {
    pub fn to_polynomial(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_dense(self.low, self.coefficients.iter().cloned())
    }
}

pub fn format_jones_entry(poly: &LaurentPolynomial) -> Result<DegreeSpanEntry, NotationError> {
    let (low, high) = match (poly.min_degree(), poly.max_degree()) {
        (Some(l), Some(h)) => (l, h),
        _ => return Err(NotationError::ZeroPolynomial),
    };
    let coefficients = (low..=high).map(|e| poly.coeff(e)).collect();
    Ok(DegreeSpanEntry {
        low,
        high,
        coefficients,
    })
}

impl fmt::Display for DegreeSpanEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.low, self.high)?;
        for c in &self.coefficients {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSpanEntry {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let close = s
            .find(')')
            .filter(|_| s.starts_with('('))
            .ok_or_else(|| NotationError::SyntaxError(format!("expected (n,m) prefix in {s:?}")))?;
        let (low, high) = s[1..close]
            .split_once(',')
            .ok_or_else(|| NotationError::SyntaxError(format!("expected (n,m) prefix in {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| NotationError::BadToken(t.trim().into()))
        };
        let (low, high) = (parse(low)?, parse(high)?);
        let coefficients = s[close + 1..]
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| NotationError::BadToken(t.into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if low > high || coefficients.len() as i64 != high - low + 1 {
            return Err(NotationError::SyntaxError(format!(
                "span ({low},{high}) needs {} coefficients, got {}",
                (high - low + 1).max(0),
                coefficients.len()
            )));
        }
        if coefficients[0].is_zero() || coefficients[coefficients.len() - 1].is_zero() {
            return Err(NotationError::SyntaxError(
                "end coefficients must be nonzero".into(),
            ));
        }
        Ok(Self {
            low,
            high,
            coefficients,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(p: &LaurentPolynomial) -> String {
        format_jones_entry(p).unwrap().to_string()
    }

    #[test]
    fn constant_and_trefoil() {
        assert_eq!(entry(&LaurentPolynomial::one()), "(0,0) 1");
        let trefoil = LaurentPolynomial::from_terms([(1, 1), (3, 1), (4, -1)]);
        let e = format_jones_entry(&trefoil).unwrap();
        assert_eq!((e.low, e.high), (1, 4));
        assert_eq!(e.to_string(), "(1,4) 1 0 1 -1");
    }

    #[test]
    fn figure_eight_span() {
        let f8 = LaurentPolynomial::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        assert_eq!(entry(&f8), "(-2,2) 1 -1 1 -1 1");
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            format_jones_entry(&LaurentPolynomial::zero()),
            Err(NotationError::ZeroPolynomial)
        );
    }

    #[test]
    fn parse_round_trip() {
        let e: DegreeSpanEntry = "(-2,2) 1 -1 1 -1 1".parse().unwrap();
        assert_eq!(e.to_string(), "(-2,2) 1 -1 1 -1 1");
        assert!("(1,4) 1 0 1".parse::<DegreeSpanEntry>().is_err());
        assert!("(1,2) 0 1".parse::<DegreeSpanEntry>().is_err());
    }
}
