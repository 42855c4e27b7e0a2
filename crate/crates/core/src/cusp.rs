//! Cusp-torus translation lattices and short filling slopes.
//!
//! In a shortest basis (meridian shortest, longitude second shortest) of a
//! maximal cusp, every slope `(p, q)` of length at most 6 has `|p| <= 7` and
//! `|q| <= 3`: `m >= 1` and `|a| <= m/2` force `b >= sqrt(3) m / 2`, the
//! cusp area bound `m b >= 3.35` then forces `b > 1.7`, so `|q b| <= 6`
//! leaves `|q| <= 3`, and `|p m + q a| <= 6` with `|q a| <= 3m/2` leaves
//! `|p| <= 7`. [`audit_lemma_bounds`] checks this numerically.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Absolute tolerance for every length and area comparison.
pub const TOLERANCE: f64 = 1e-9;
/// Lower bound on the maximal cusp area used by the audit.
pub const CUSP_AREA_BOUND: f64 = 3.35;
/// Slopes longer than this give hyperbolic fillings.
pub const LENGTH_BOUND: f64 = 6.0;
pub const P_BOUND: i64 = 7;
pub const Q_BOUND: i64 = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CuspError {
    #[error("meridian length must be positive, got {0}")]
    NonPositiveMeridian(f64),
    #[error("longitude must have positive imaginary part, got {0}")]
    NonPositiveLongitude(Complex64),
    #[error("translations are collinear; they do not span a lattice")]
    DegenerateLattice,
    #[error("basis is not a shortest basis; reduce it first")]
    NotReduced,
    #[error("slope ({0},{1}) is not primitive")]
    NotPrimitive(i64, i64),
}

/// Meridian translation `m > 0` and longitude translation `l = a + ib`,
/// `b > 0`, of a cusp torus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TranslationPair {
    m: f64,
    l: Complex64,
}

impl TranslationPair {
    pub fn new(m: f64, l: Complex64) -> Result<Self, CuspError> {
        if m.is_nan() || m <= 0.0 || m.is_infinite() {
            return Err(CuspError::NonPositiveMeridian(m));
        }
        if l.im.is_nan() || l.im <= 0.0 || !l.is_finite() {
            return Err(CuspError::NonPositiveLongitude(l));
        }
        Ok(Self { m, l })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn l(&self) -> Complex64 {
        self.l
    }

    pub fn a(&self) -> f64 {
        self.l.re
    }

    pub fn b(&self) -> f64 {
        self.l.im
    }

    /// Area of the fundamental parallelogram.
    pub fn area(&self) -> f64 {
        self.m * self.l.im
    }

    /// Angle between meridian and longitude.
    pub fn angle(&self) -> f64 {
        self.l.arg()
    }

    pub fn is_reduced(&self) -> bool {
        is_shortest_basis(self)
    }

    /// The constraints a shortest basis of a maximal cusp satisfies.
    pub fn is_maximal_cusp(&self) -> bool {
        self.m >= 1.0 - TOLERANCE && self.area() >= CUSP_AREA_BOUND - TOLERANCE
    }
}

/// Primitive slope `p M + q L`, signed so that `q > 0`, or `(1, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, CuspError> {
        if p.gcd(&q) != 1 {
            return Err(CuspError::NotPrimitive(p, q));
        }
        Ok(if q < 0 || (q == 0 && p < 0) {
            Self { p: -p, q: -q }
        } else {
            Self { p, q }
        })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Lagrange-Gauss reduction of the lattice spanned by `u` and `v`.
/// Returns `(shortest, second)` with `|shortest| <= |second|` and
/// `|Re(second / shortest)| <= 1/2`.
pub fn gauss_reduce(
    mut u: Complex64,
    mut v: Complex64,
) -> Result<(Complex64, Complex64), CuspError> {
    if (u.conj() * v).im.abs() <= TOLERANCE {
        return Err(CuspError::DegenerateLattice);
    }
    loop {
        if v.norm_sqr() < u.norm_sqr() {
            std::mem::swap(&mut u, &mut v);
        }
        let mu = (v * u.conj()).re / u.norm_sqr();
        if mu.abs() <= 0.5 + TOLERANCE {
            return Ok((u, v));
        }
        v -= u * mu.round();
    }
}

/// Shortest basis, rotated so the meridian is real positive and reflected
/// if needed so the longitude lies in the upper half plane.
pub fn reduce_basis(t: &TranslationPair) -> Result<TranslationPair, CuspError> {
    reduce_generators(Complex64::new(t.m, 0.0), t.l)
}

/// Same as [`reduce_basis`] for arbitrary complex generators.
pub fn reduce_generators(u: Complex64, v: Complex64) -> Result<TranslationPair, CuspError> {
    let (u, v) = gauss_reduce(u, v)?;
    let rot = u.conj() / u.norm();
    let mut l = v * rot;
    if l.im < 0.0 {
        l = l.conj();
    }
    TranslationPair::new(u.norm(), l)
}

/// Meridian shortest and longitude second shortest, within tolerance.
pub fn is_shortest_basis(t: &TranslationPair) -> bool {
    let m = Complex64::new(t.m, 0.0);
    let ln = t.l.norm();
    ln >= t.m - TOLERANCE
        && (m + t.l).norm() >= ln - TOLERANCE
        && (m - t.l).norm() >= ln - TOLERANCE
}

/// `|p m + q l|`.
pub fn slope_length(t: &TranslationPair, s: Slope) -> f64 {
    (Complex64::new(s.p as f64 * t.m, 0.0) + t.l * s.q as f64).norm()
}

/// All canonical primitive slopes of length at most `bound`, sorted by
/// `(q, p)`.
pub fn enumerate_short_slopes(t: &TranslationPair, bound: f64) -> Result<Vec<Slope>, CuspError> {
    if !is_shortest_basis(t) {
        return Err(CuspError::NotReduced);
    }
    let mut out = Vec::new();
    if bound < 0.0 {
        return Ok(out);
    }
    let q_max = ((bound + TOLERANCE) / t.b()).floor() as i64;
    for q in 0..=q_max {
        let shift = q as f64 * t.a();
        let p_lo = ((-bound - shift) / t.m - TOLERANCE).ceil() as i64;
        let p_hi = ((bound - shift) / t.m + TOLERANCE).floor() as i64;
        for p in p_lo..=p_hi {
            if q == 0 && p != 1 {
                continue;
            }
            if p.gcd(&q) != 1 {
                continue;
            }
            let s = Slope { p, q };
            if slope_length(t, s) <= bound + TOLERANCE {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// One short slope found during the audit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AuditHit {
    pub sample: u64,
    pub pair: TranslationPair,
    pub slope: Slope,
    pub length: f64,
}

impl AuditHit {
    pub fn margin(&self) -> f64 {
        LENGTH_BOUND - self.length
    }

    fn key(&self) -> (f64, u64, i64, i64) {
        (self.margin(), self.sample, self.slope.q, self.slope.p)
    }
}

fn hit_order(a: &AuditHit, b: &AuditHit) -> std::cmp::Ordering {
    let (ka, kb) = (a.key(), b.key());
    ka.0.total_cmp(&kb.0)
        .then(ka.1.cmp(&kb.1))
        .then(ka.2.cmp(&kb.2))
        .then(ka.3.cmp(&kb.3))
}

pub const TIGHTEST_KEPT: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub samples: u64,
    pub seed: u64,
    /// Draws outside the shortest-basis region that were redrawn.
    pub rejected_draws: u64,
    /// Slopes of length <= 6 with `|p| > 7` or `|q| > 3`.
    pub violations: Vec<AuditHit>,
    /// Samples where `b > 1.7` or `b >= sqrt(3) m / 2` failed.
    pub assertion_failures: Vec<u64>,
    pub max_abs_p: i64,
    pub max_abs_q: i64,
    pub min_b: f64,
    pub tightest: Vec<AuditHit>,
}

impl AuditReport {
    fn empty(seed: u64) -> Self {
        Self {
            samples: 0,
            seed,
            rejected_draws: 0,
            violations: Vec::new(),
            assertion_failures: Vec::new(),
            max_abs_p: 0,
            max_abs_q: 0,
            min_b: f64::INFINITY,
            tightest: Vec::new(),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.samples += other.samples;
        self.rejected_draws += other.rejected_draws;
        self.violations.extend(other.violations);
        self.violations.sort_by(hit_order);
        self.assertion_failures.extend(other.assertion_failures);
        self.assertion_failures.sort_unstable();
        self.max_abs_p = self.max_abs_p.max(other.max_abs_p);
        self.max_abs_q = self.max_abs_q.max(other.max_abs_q);
        self.min_b = self.min_b.min(other.min_b);
        self.tightest.extend(other.tightest);
        self.tightest.sort_by(hit_order);
        self.tightest.truncate(TIGHTEST_KEPT);
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.assertion_failures.is_empty()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "rejected_draws: {}", self.rejected_draws)?;
        writeln!(f, "violations: {}", self.violations.len())?;
        writeln!(f, "assertion_failures: {}", self.assertion_failures.len())?;
        writeln!(f, "max_abs_p: {}", self.max_abs_p)?;
        writeln!(f, "max_abs_q: {}", self.max_abs_q)?;
        writeln!(f, "min_b: {:.9}", self.min_b)?;
        writeln!(f, "tightest_margins:")?;
        for h in &self.tightest {
            writeln!(
                f,
                "  slope {} length {:.9} margin {:.9} (sample {}, m {:.6}, l {:.6}{:+.6}i)",
                h.slope,
                h.length,
                h.margin(),
                h.sample,
                h.pair.m,
                h.pair.l.re,
                h.pair.l.im
            )?;
        }
        for v in &self.violations {
            writeln!(
                f,
                "  VIOLATION slope {} length {:.9} (sample {})",
                v.slope, v.length, v.sample
            )?;
        }
        Ok(())
    }
}

/// Uniform draw from the shortest-basis maximal-cusp region
/// `m in [1,4]`, `|a| <= m/2`, `b in [max(sqrt(3) m/2, 3.35/m), 8]`,
/// `|l| >= m`. The stream depends only on `(seed, index)`.
pub fn sample_pair(seed: u64, index: u64) -> (TranslationPair, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut rejected = 0;
    loop {
        let m: f64 = rng.random_range(1.0..=4.0);
        let a: f64 = rng.random_range(-m / 2.0..=m / 2.0);
        let b_lo = (3f64.sqrt() * m / 2.0).max(CUSP_AREA_BOUND / m);
        let b: f64 = rng.random_range(b_lo..=8.0);
        if a * a + b * b >= m * m {
            let pair =
                TranslationPair::new(m, Complex64::new(a, b)).expect("sampled pair is valid");
            return (pair, rejected);
        }
        rejected += 1;
    }
}

fn audit_one(seed: u64, index: u64) -> AuditReport {
    let (pair, rejected) = sample_pair(seed, index);
    let mut report = AuditReport::empty(seed);
    report.samples = 1;
    report.rejected_draws = rejected;
    report.min_b = pair.b();
    let b_chain = pair.b() > 1.7 && pair.b() >= 3f64.sqrt() * pair.m() / 2.0 - TOLERANCE;
    if !b_chain || !pair.is_maximal_cusp() {
        report.assertion_failures.push(index);
    }
    let slopes = enumerate_short_slopes(&pair, LENGTH_BOUND).expect("sampled pairs are reduced");
    for s in slopes {
        let hit = AuditHit {
            sample: index,
            pair,
            slope: s,
            length: slope_length(&pair, s),
        };
        report.max_abs_p = report.max_abs_p.max(s.p.abs());
        report.max_abs_q = report.max_abs_q.max(s.q.abs());
        if s.p.abs() > P_BOUND || s.q.abs() > Q_BOUND {
            report.violations.push(hit);
        }
        report.tightest.push(hit);
    }
    report.tightest.sort_by(hit_order);
    report.tightest.truncate(TIGHTEST_KEPT);
    report
}

/// Samples `sample_count` shortest bases of maximal cusps and checks that
/// every slope of length at most 6 has `|p| <= 7` and `|q| <= 3`.
/// Deterministic in `seed` regardless of thread count.
pub fn audit_lemma_bounds(sample_count: u64, seed: u64) -> AuditReport {
    (0..sample_count)
        .into_par_iter()
        .map(|i| audit_one(seed, i))
        .reduce(|| AuditReport::empty(seed), AuditReport::merge)
}
