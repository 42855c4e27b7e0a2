use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::InvariantError;

/// Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * x^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `x^(low + i)`.
    pub fn from_dense<C: Into<BigInt>>(low: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c)),
        )
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x -> x^factor` for a nonzero integer factor.
    pub fn scale_exponents(&self, factor: i64) -> Self {
        assert!(factor != 0, "exponent scale factor must be nonzero");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * factor, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x -> x^(1/divisor)`; fails unless every exponent is a
    /// multiple of `divisor`.
    pub fn divide_exponents(&self, divisor: i64) -> Option<Self> {
        assert!(divisor != 0, "exponent divisor must be nonzero");
        if self.terms.keys().any(|e| e % divisor != 0) {
            return None;
        }
        Some(Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e / divisor, c.clone()))
                .collect(),
        })
    }

    /// `x -> 1/x`.
    pub fn invert_variable(&self) -> Self {
        self.scale_exponents(-1)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Exact division by a divisor whose extreme coefficients are units
    /// (±1). Returns `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d_low = divisor.min_degree()?;
        let d_high = divisor.max_degree()?;
        let lead = divisor.coeff(d_high);
        if !(lead.is_one() || (-&lead).is_one()) {
            return None;
        }
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(r_high) = rem.max_degree() {
            let r_low = rem.min_degree().unwrap();
            if r_high - r_low < d_high - d_low {
                return None;
            }
            let c = rem.coeff(r_high) * &lead; // lead is ±1, so this is c / lead
            let shift = r_high - d_high;
            let term = Self::monomial(c, shift);
            rem = &rem - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Some(quotient)
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn evaluate_at(&self, x: &BigRational) -> Result<BigRational, InvariantError> {
        if x.is_zero() {
            return Err(InvariantError::ZeroPoint);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let power = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), e.unsigned_abs() as usize)
            };
            acc += power * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Value at x = 1, i.e. the sum of the coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Renders with the given variable name, e.g. `t^-2 - t^-1 + 1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match *e {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if *e != 1 {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn zero_terms_are_dropped() {
        let a = p(&[(1, 2), (3, -1)]);
        let b = p(&[(1, -2)]);
        let s = &a + &b;
        assert_eq!(s, p(&[(3, -1)]));
        assert_eq!(s.term_count(), 1);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_with_negative_exponents() {
        // (x + x^-1)^2 = x^2 + 2 + x^-2
        let a = p(&[(1, 1), (-1, 1)]);
        assert_eq!(a.pow(2), p(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(a.pow(0), LaurentPolynomial::one());
    }

    #[test]
    fn exact_division_by_loop_value() {
        let delta = p(&[(2, -1), (-2, -1)]);
        let q = p(&[(5, 3), (-7, -2), (0, 1)]);
        let prod = &q * &delta;
        assert_eq!(prod.div_exact(&delta), Some(q));
        assert_eq!(p(&[(0, 1)]).div_exact(&delta), None);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(
            p(&[(1, 1), (3, 1), (4, -1)]).display_with("t"),
            "t + t^3 - t^4"
        );
        assert_eq!(p(&[(-2, 1), (0, -3)]).display_with("A"), "A^-2 - 3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn rational_evaluation() {
        let f8 = p(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        let one = BigRational::one();
        assert_eq!(f8.evaluate_at(&one).unwrap(), one);
        let two = BigRational::from_integer(2.into());
        // 1/4 - 1/2 + 1 - 2 + 4
        let expected = BigRational::new(11.into(), 4.into());
        assert_eq!(f8.evaluate_at(&two).unwrap(), expected);
        assert!(matches!(
            f8.evaluate_at(&BigRational::zero()),
            Err(InvariantError::ZeroPoint)
        ));
    }

    #[test]
    fn exponent_substitutions() {
        let a = p(&[(-8, 1), (4, -2)]);
        assert_eq!(a.divide_exponents(4), Some(p(&[(-2, 1), (1, -2)])));
        assert_eq!(a.divide_exponents(3), None);
        assert_eq!(a.invert_variable(), p(&[(8, 1), (-4, -2)]));
    }
}
