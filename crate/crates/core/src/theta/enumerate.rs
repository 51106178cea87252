//! Exact Fincke–Pohst enumeration of short lattice vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::gram::{GramMatrix, Ldl};
use super::with_pool;

/// Integers `t` with `(t + c)² ≤ s`, ascending.
fn admissible(c: &BigRational, s: &BigRational) -> Vec<i64> {
    if s.is_negative() {
        return Vec::new();
    }
    let fits = |t: i64| {
        let y = c + BigRational::from_integer(BigInt::from(t));
        &(&y * &y) <= s
    };
    let t0 = (-c).floor().to_integer().to_i64().expect("coordinate fits in i64");
    let mut lo = t0;
    let mut hi = t0 + 1;
    let mut out = Vec::new();
    while fits(lo) {
        out.push(lo);
        lo -= 1;
    }
    out.reverse();
    while fits(hi) {
        out.push(hi);
        hi += 1;
    }
    out
}

struct Walker<'a> {
    f: &'a Ldl,
    bound: BigRational,
}

impl Walker<'_> {
    fn centre(&self, i: usize, x: &[i64]) -> BigRational {
        let mut c = BigRational::zero();
        for (j, &xj) in x.iter().enumerate().skip(i + 1) {
            if xj != 0 {
                c += &self.f.lower[j][i] * BigInt::from(xj);
            }
        }
        c
    }

    fn candidates(&self, i: usize, x: &[i64], rest: &BigRational) -> Vec<(i64, BigRational)> {
        let c = self.centre(i, x);
        let d = &self.f.diag[i];
        admissible(&c, &(rest / d))
            .into_iter()
            .map(|t| {
                let y = &c + BigRational::from_integer(BigInt::from(t));
                (t, rest - d * &y * &y)
            })
            .collect()
    }

    /// Visits every completion of `x[i+1..]`; the callback gets `x` and `xᵀGx`.
    fn walk(&self, i: usize, x: &mut [i64], rest: &BigRational, leaf: &mut dyn FnMut(&[i64], &BigRational)) {
        for (t, r) in self.candidates(i, x, rest) {
            x[i] = t;
            if i == 0 {
                leaf(x, &(&self.bound - &r));
            } else {
                self.walk(i - 1, x, &r, leaf);
            }
        }
        x[i] = 0;
    }

    /// Splits on the outermost coordinate and folds each stripe separately.
    fn striped<T: Send>(&self, n: usize, init: impl Fn() -> T + Sync, leaf: impl Fn(&mut T, &[i64], &BigRational) + Sync) -> Vec<T> {
        if n == 0 {
            let mut acc = init();
            leaf(&mut acc, &[], &BigRational::zero());
            return vec![acc];
        }
        let top = self.candidates(n - 1, &vec![0; n], &self.bound);
        with_pool(|| {
            top.par_iter()
                .map(|(t, r)| {
                    let mut acc = init();
                    let mut x = vec![0i64; n];
                    x[n - 1] = *t;
                    if n == 1 {
                        leaf(&mut acc, &x, &(&self.bound - r));
                    } else {
                        self.walk(n - 2, &mut x, r, &mut |v, q| leaf(&mut acc, v, q));
                    }
                    acc
                })
                .collect()
        })
    }
}

/// All `x ∈ ℤⁿ` with `xᵀGx ≤ 2·max_norm`, ordered lexicographically from the
/// last coordinate.
pub fn enumerate_vectors(g: &GramMatrix, max_norm: &BigRational) -> Vec<Vec<i64>> {
    let w = Walker { f: g.factors(), bound: max_norm * BigInt::from(2) };
    w.striped(g.dim(), Vec::new, |acc: &mut Vec<Vec<i64>>, x, _| acc.push(x.to_vec()))
        .into_iter()
        .flatten()
        .collect()
}

/// `r(n) = #{x : ½xᵀGx = n}` for `n = 0..=n_max`.
pub fn rep_numbers(g: &GramMatrix, n_max: u64) -> Vec<u64> {
    let w = Walker { f: g.factors(), bound: BigRational::from_integer(BigInt::from(2 * n_max)) };
    let len = n_max as usize + 1;
    let stripes = w.striped(
        g.dim(),
        || vec![0u64; len],
        |acc, _, q| {
            let half = q / BigInt::from(2);
            if half.is_integer() {
                if let Some(n) = half.to_integer().to_usize() {
                    acc[n] += 1;
                }
            }
        },
    );
    stripes.into_iter().fold(vec![0u64; len], |mut a, s| {
        a.iter_mut().zip(s).for_each(|(x, y)| *x += y);
        a
    })
}
