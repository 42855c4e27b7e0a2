//! Braid words for generalized twisted torus knots and their closures.

use crate::notation::{BraidWord, NotationError, TTKSpec};

/// A permutation of `{1, ..., n}` stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Fails unless `images` is a bijection on `1..=n`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Cycle lengths in order of smallest element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image(i);
                len += 1;
            }
            out.push(len);
        }
        out
    }
}

/// `delta_n = s_1 s_2 ... s_{n-1}`, or with `negative` the letterwise
/// inverse `s_1^-1 ... s_{n-1}^-1`, which is the mirror of `delta_n` and
/// not its group inverse.
pub fn delta(n: usize, negative: bool) -> Result<BraidWord, NotationError> {
    if n < 2 {
        return Err(NotationError::BadStrandCount(n));
    }
    let sign = if negative { -1 } else { 1 };
    BraidWord::new(n, (1..n as i32).map(|i| sign * i).collect())
}

/// Unrolls `T(r1,s1,...,rk,sk)` into `delta_{r1}^{s1} ... delta_{rk}^{sk}`
/// on `r1` strands. Smaller blocks act on the lowest-indexed strands.
pub fn build_ttk(spec: &TTKSpec) -> BraidWord {
    let strands = spec.strands();
    let mut letters = Vec::new();
    for &(r, s) in spec.pairs() {
        let sign = s.signum();
        for _ in 0..s.unsigned_abs() {
            letters.extend((1..r as i32).map(|i| sign * i));
        }
    }
    BraidWord::new(strands, letters).expect("T-notation blocks fit on r1 strands")
}

/// Positive letters minus negative letters; the writhe of the closure.
pub fn exponent_sum(word: &BraidWord) -> i64 {
    word.letters().iter().map(|l| l.signum() as i64).sum()
}

/// Strand permutation: the strand entering at position `i` (bottom) leaves
/// at position `image(i)` (top).
pub fn braid_permutation(word: &BraidWord) -> Permutation {
    // position -> strand currently there
    let n = word.strands();
    let mut at: Vec<usize> = (1..=n).collect();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize;
        at.swap(i - 1, i);
    }
    let mut images = vec![0; n];
    for (pos, &strand) in at.iter().enumerate() {
        images[strand - 1] = pos + 1;
    }
    Permutation::new(images).expect("swaps compose to a permutation")
}

/// Number of link components of the braid closure; 1 means a knot.
pub fn closure_component_count(word: &BraidWord) -> usize {
    braid_permutation(word).cycle_lengths().len()
}

/// Lorenz form: every twist exponent positive. Block order is irrelevant.
pub fn is_lorenz_form(spec: &TTKSpec) -> bool {
    spec.pairs().iter().all(|&(_, s)| s > 0)
}

/// Mirror image: negate twist exponents or braid letters.
pub trait Mirror {
    fn mirror(&self) -> Self;
}

impl Mirror for TTKSpec {
    fn mirror(&self) -> Self {
        TTKSpec::new(self.pairs().iter().map(|&(r, s)| (r, -s)).collect())
            .expect("negating s keeps T-notation valid")
    }
}

impl Mirror for BraidWord {
    fn mirror(&self) -> Self {
        BraidWord::new(self.strands(), self.letters().iter().map(|l| -l).collect())
            .expect("negating letters keeps indices in range")
    }
}
