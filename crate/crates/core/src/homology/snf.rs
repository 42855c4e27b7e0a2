use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Entries above this many bits switch pivot selection from smallest
/// magnitude to least fill.
const GROWTH_BITS: u64 = 64;

/// `u * a * v == d`, `u` and `v` unimodular, `d` diagonal with a
/// nonnegative divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The first `min(rows, cols)` diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn into_parts(self) -> (IntMatrix, IntMatrix, IntMatrix) {
        (self.u, self.d, self.v)
    }
}

struct Work {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.d.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
    }

    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.d.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
    }

    fn move_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    /// Starting pivot for stage `t`.
    fn choose_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (r, c) = (self.d.rows(), self.d.cols());
        let nonzero = || {
            (t..r)
                .flat_map(move |i| (t..c).map(move |j| (i, j)))
                .filter(|&p| !self.d[p].is_zero())
        };
        let large = nonzero().any(|p| self.d[p].bits() > GROWTH_BITS);
        if large {
            let row_count = |i: usize| (t..c).filter(|&j| !self.d[(i, j)].is_zero()).count();
            let col_count = |j: usize| (t..r).filter(|&i| !self.d[(i, j)].is_zero()).count();
            nonzero().min_by_key(|&(i, j)| {
                (
                    (row_count(i) - 1) * (col_count(j) - 1),
                    self.d[(i, j)].bits(),
                )
            })
        } else {
            nonzero().min_by(|&a, &b| self.d[a].magnitude().cmp(self.d[b].magnitude()))
        }
    }

    /// Clears row `t` and column `t` off the diagonal.
    fn clear_cross(&mut self, t: usize) {
        let (r, c) = (self.d.rows(), self.d.cols());
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if !self.d[(i, t)].is_zero() {
                    let q = self.d[(i, t)].div_floor(&self.d[(t, t)]);
                    self.add_row(i, t, &-q);
                    dirty |= !self.d[(i, t)].is_zero();
                }
            }
            for j in t + 1..c {
                if !self.d[(t, j)].is_zero() {
                    let q = self.d[(t, j)].div_floor(&self.d[(t, t)]);
                    self.add_col(j, t, &-q);
                    dirty |= !self.d[(t, j)].is_zero();
                }
            }
            if !dirty {
                return;
            }
            // every leftover is a remainder smaller than the pivot
            let best_row = (t + 1..r)
                .filter(|&i| !self.d[(i, t)].is_zero())
                .min_by(|&a, &b| self.d[(a, t)].magnitude().cmp(self.d[(b, t)].magnitude()));
            let best_col = (t + 1..c)
                .filter(|&j| !self.d[(t, j)].is_zero())
                .min_by(|&a, &b| self.d[(t, a)].magnitude().cmp(self.d[(t, b)].magnitude()));
            match (best_row, best_col) {
                (Some(i), Some(j)) if self.d[(t, j)].magnitude() < self.d[(i, t)].magnitude() => {
                    self.swap_cols(t, j)
                }
                (Some(i), _) => self.swap_rows(t, i),
                (None, Some(j)) => self.swap_cols(t, j),
                (None, None) => unreachable!(),
            }
        }
    }
}

/// Smith normal form with transformation matrices.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (r, c) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntMatrix::identity(r),
        v: IntMatrix::identity(c),
    };
    for t in 0..r.min(c) {
        let Some(p) = w.choose_pivot(t) else { break };
        w.move_to(t, p);
        loop {
            w.clear_cross(t);
            let pivot = w.d[(t, t)].clone();
            let offender =
                (t + 1..r).find(|&i| (t + 1..c).any(|j| !w.d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.d[(t, t)].is_negative() {
            w.d.negate_row(t);
            w.u.negate_row(t);
        }
    }
    SmithForm {
        u: w.u,
        d: w.d,
        v: w.v,
    }
}
