//! `E8` theta coefficients against `240·σ₃`.

use serde::Serialize;

use super::enumerate::rep_numbers;
use super::gram::GramMatrix;
use crate::error::{Error, Result};

pub const MAX_CHECK_N: u64 = 20;

/// `σ_k(n) = Σ_{d | n} d^k`.
pub fn divisor_sum(n: u64, k: u32) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| d.pow(k)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinRow {
    pub n: u64,
    pub theta: u64,
    pub eisenstein: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinReport {
    pub rows: Vec<EisensteinRow>,
}

impl EisensteinReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.theta == r.eisenstein)
    }
}

/// Compares `r_{E8}(n)` with `240·σ₃(n)` for `1 ≤ n ≤ n_max`.
pub fn eisenstein_check(n_max: u64) -> Result<EisensteinReport> {
    eisenstein_check_with(GramMatrix::e8(), n_max)
}

/// Same comparison against an arbitrary lattice, for the CLI's `--gram` input.
pub fn eisenstein_check_with(g: &GramMatrix, n_max: u64) -> Result<EisensteinReport> {
    if n_max > MAX_CHECK_N {
        return Err(Error::ShapeMismatch(format!("n_max {n_max} exceeds {MAX_CHECK_N}")));
    }
    let r = rep_numbers(g, n_max);
    let rows = (1..=n_max)
        .map(|n| EisensteinRow { n, theta: r[n as usize], eisenstein: 240 * divisor_sum(n, 3) })
        .collect();
    Ok(EisensteinReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_sums() {
        assert_eq!(divisor_sum(1, 3), 1);
        assert_eq!(divisor_sum(2, 3), 9);
        assert_eq!(divisor_sum(6, 3), 1 + 8 + 27 + 216);
        assert_eq!(divisor_sum(12, 0), 6);
    }

    #[test]
    fn first_coefficients() {
        let rep = eisenstein_check(2).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.rows[1].theta, 2160);
    }

    #[test]
    fn bound_enforced() {
        assert!(eisenstein_check(21).is_err());
    }

    #[test]
    fn wrong_lattice_fails() {
        let rep = eisenstein_check_with(&GramMatrix::scalar(8, 2).unwrap(), 1).unwrap();
        assert!(!rep.passed());
    }
}
