use num_rational::BigRational;

use super::{kauffman_bracket, InvariantError, LaurentPolynomial};
use crate::diagram::{simplify, writhe, PlanarDiagram};
use crate::notation::{format_jones_entry, DegreeSpanEntry};

/// `(-A)^(-3w) <D>`, still in the variable A.
fn normalized_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let w = writhe(d);
    let bracket = kauffman_bracket(d)?;
    let shifted = bracket.shift(-3 * w);
    Ok(if w % 2 == 0 { shifted } else { -shifted })
}

/// Converts a bracket in A of a diagram with writhe `w` to the Jones
/// polynomial in `t = A^-4`.
pub fn bracket_to_jones(
    bracket: &LaurentPolynomial,
    w: i64,
) -> Result<LaurentPolynomial, InvariantError> {
    let shifted = bracket.shift(-3 * w);
    let normalized = if w % 2 == 0 { shifted } else { -shifted };
    normalized
        .divide_exponents(-4)
        .ok_or_else(|| InvariantError::FractionalExponent(normalized.display_with("A")))
}

/// Jones polynomial of exactly this diagram, without simplification.
pub fn jones_of_diagram(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let v = normalized_bracket(d)?;
    v.divide_exponents(-4)
        .ok_or_else(|| InvariantError::FractionalExponent(v.display_with("A")))
}

/// Jones polynomial in `t`; Reidemeister I/II reductions are applied first
/// when they remove crossings. Links with an even number of components have
/// half-integer exponents and are rejected; see [`jones_sqrt_t`].
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    jones_of_diagram(&simplify(d))
}

/// Jones polynomial in `q = t^(1/2)`, defined for every link.
pub fn jones_sqrt_t(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let v = normalized_bracket(&simplify(d))?;
    Ok(v.divide_exponents(-2)
        .expect("bracket exponents are even after writhe normalization"))
}

pub fn degree_span(p: &LaurentPolynomial) -> Result<DegreeSpanEntry, InvariantError> {
    format_jones_entry(p).map_err(|_| InvariantError::ZeroPolynomial)
}

pub fn evaluate_at(p: &LaurentPolynomial, x: &BigRational) -> Result<BigRational, InvariantError> {
    p.evaluate_at(x)
}
