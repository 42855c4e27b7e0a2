//! Integer linear algebra for first homology of Dehn fillings.

mod matrix;
mod snf;

pub use matrix::{parse_matrix, IntMatrix};
pub use snf::{smith_normal_form, SmithForm};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cusp::Slope;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self, HomologyError> {
        if torsion.iter().any(|d| d < &BigInt::from(2)) {
            return Err(HomologyError::Shape(
                "torsion coefficients must be >= 2".into(),
            ));
        }
        if torsion.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(HomologyError::Shape(
                "torsion coefficients must form a divisibility chain".into(),
            ));
        }
        Ok(Self { rank, torsion })
    }

    /// Group presented by `generators` generators and relations whose
    /// Smith form has the given diagonal. Units are dropped and zeros
    /// (and missing diagonal entries) become free rank.
    pub fn from_invariant_factors(generators: usize, diagonal: &[BigInt]) -> Self {
        let nonzero: Vec<BigInt> = diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.abs())
            .collect();
        let rank = generators - nonzero.len();
        let torsion = nonzero.into_iter().filter(|d| !d.is_one()).collect();
        Self { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Order of the group, or `None` when it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }
}

pub fn is_trivial(g: &AbelianGroup) -> bool {
    g.rank == 0 && g.torsion.is_empty()
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Presentation of `H_1(M)` on `g` generators with the classes of the
/// peripheral curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralPresentation {
    relations: IntMatrix,
    meridian: Vec<BigInt>,
    longitude: Vec<BigInt>,
}

impl PeripheralPresentation {
    pub fn new(
        relations: IntMatrix,
        meridian: Vec<BigInt>,
        longitude: Vec<BigInt>,
    ) -> Result<Self, HomologyError> {
        let g = relations.cols();
        if meridian.len() != g || longitude.len() != g {
            return Err(HomologyError::Shape(format!(
                "peripheral classes must have length {g}"
            )));
        }
        Ok(Self {
            relations,
            meridian,
            longitude,
        })
    }

    /// Exterior of a knot in the 3-sphere: `H_1 = Z` generated by the
    /// meridian, longitude null-homologous.
    pub fn knot_exterior() -> Self {
        Self {
            relations: IntMatrix::zeros(0, 1),
            meridian: vec![BigInt::one()],
            longitude: vec![BigInt::zero()],
        }
    }

    pub fn generators(&self) -> usize {
        self.relations.cols()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Parses a relation matrix (`rows cols` then entries) followed by the
    /// meridian class and the longitude class, `cols` integers each.
    pub fn parse(text: &str) -> Result<Self, HomologyError> {
        let toks = matrix::tokens(text)?;
        let (relations, rest) = matrix::read_matrix(&toks)?;
        let g = relations.cols();
        if rest.len() != 2 * g {
            return Err(HomologyError::Parse(format!(
                "expected {} integers for the meridian and longitude classes, found {}",
                2 * g,
                rest.len()
            )));
        }
        Self::new(relations, rest[..g].to_vec(), rest[g..].to_vec())
    }
}

/// `H_1` of the Dehn filling along `slope`: the presentation with the
/// extra relation `p * meridian + q * longitude`.
pub fn filled_homology(pres: &PeripheralPresentation, slope: Slope) -> AbelianGroup {
    let (p, q) = (BigInt::from(slope.p()), BigInt::from(slope.q()));
    let extra: Vec<BigInt> = pres
        .meridian
        .iter()
        .zip(&pres.longitude)
        .map(|(m, l)| &p * m + &q * l)
        .collect();
    let augmented = pres
        .relations
        .with_row(&extra)
        .expect("class length matches generator count");
    let snf = smith_normal_form(&augmented);
    AbelianGroup::from_invariant_factors(pres.generators(), &snf.diagonal())
}
