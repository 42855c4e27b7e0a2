//! Exact Kauffman bracket and Jones polynomial.

mod bracket;
mod jones;
mod laurent;

pub use bracket::{
    contraction_order, kauffman_bracket, kauffman_bracket_capped, kauffman_bracket_naive,
    kauffman_bracket_naive_capped, loop_value, DEFAULT_FRONTIER_CAP, DEFAULT_NAIVE_CAP,
};
pub use jones::{
    bracket_to_jones, degree_span, evaluate_at, jones, jones_of_diagram, jones_sqrt_t,
};
pub use laurent::LaurentPolynomial;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("cannot evaluate at zero")]
    ZeroPoint,
    #[error("zero polynomial has no degree span")]
    ZeroPolynomial,
    #[error("{crossings} crossings exceeds the state-sum cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },
    #[error("contraction frontier of width {width} exceeds the cap of {cap}")]
    FrontierTooWide { width: usize, cap: usize },
    #[error("normalized bracket has exponents not divisible by 4; {0}")]
    FractionalExponent(String),
}
