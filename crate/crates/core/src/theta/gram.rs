//! Exact rational Gram matrices.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};

/// `D` and unit lower-triangular `L` with `G = L·D·Lᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ldl {
    pub lower: Vec<Vec<BigRational>>,
    pub diag: Vec<BigRational>,
}

/// `LDLᵀ` without pivoting; `None` when a zero pivot is met before the end.
fn ldl(m: &[Vec<BigRational>]) -> Option<Ldl> {
    let n = m.len();
    let mut lower = vec![vec![BigRational::zero(); n]; n];
    let mut diag = vec![BigRational::zero(); n];
    for j in 0..n {
        let mut d = m[j][j].clone();
        for k in 0..j {
            d -= &lower[j][k] * &lower[j][k] * &diag[k];
        }
        lower[j][j] = BigRational::one();
        for i in j + 1..n {
            let mut s = m[i][j].clone();
            for k in 0..j {
                s -= &lower[i][k] * &lower[j][k] * &diag[k];
            }
            if d.is_zero() {
                if !s.is_zero() {
                    return None;
                }
            } else {
                lower[i][j] = s / &d;
            }
        }
        diag[j] = d;
    }
    Some(Ldl { lower, diag })
}

fn check_square_symmetric(m: &[Vec<BigRational>]) -> Result<()> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeMismatch(format!("matrix rows must all have length {n}")));
    }
    for i in 0..n {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(Error::ShapeMismatch(format!("entries ({i},{j}) and ({j},{i}) differ")));
            }
        }
    }
    Ok(())
}

/// A symmetric positive-definite rational matrix with its `LDLᵀ` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<BigRational>>,
    factors: Ldl,
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        check_square_symmetric(&entries)?;
        let factors = ldl(&entries).ok_or_else(|| Error::NotPositiveDefinite("zero pivot".into()))?;
        if let Some(k) = factors.diag.iter().position(|d| !d.is_positive()) {
            return Err(Error::NotPositiveDefinite(format!("pivot {k} is {}", factors.diag[k])));
        }
        Ok(GramMatrix { entries, factors })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect())
    }

    /// `c · I_n`.
    pub fn scalar(n: usize, c: i64) -> Result<Self> {
        Self::from_integers(&(0..n).map(|i| (0..n).map(|j| if i == j { c } else { 0 }).collect()).collect::<Vec<_>>())
    }

    /// The `E8` root lattice Gram matrix (Cartan matrix).
    pub fn e8() -> &'static GramMatrix {
        static E8: OnceLock<GramMatrix> = OnceLock::new();
        E8.get_or_init(|| {
            let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            let mut m = vec![vec![0i64; 8]; 8];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (a, b) in edges {
                m[a][b] = -1;
                m[b][a] = -1;
            }
            let g = GramMatrix::from_integers(&m).expect("E8 Cartan matrix is positive definite");
            assert!(g.determinant().is_one(), "E8 must be unimodular");
            assert!(g.is_even(), "E8 must be even");
            g
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn factors(&self) -> &Ldl {
        &self.factors
    }

    pub fn determinant(&self) -> BigRational {
        self.factors.diag.iter().fold(BigRational::one(), |acc, d| acc * d)
    }

    /// Integral with even diagonal.
    pub fn is_even(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|v| v.is_integer()))
            && (0..self.dim()).all(|i| (self.entries[i][i].to_integer() % BigInt::from(2)).is_zero())
    }

    /// `xᵀ G x`.
    pub fn norm(&self, x: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row = BigRational::zero();
            for (j, &xj) in x.iter().enumerate() {
                if xj != 0 {
                    row += &self.entries[i][j] * BigInt::from(xj);
                }
            }
            acc += row * BigInt::from(xi);
        }
        acc
    }

    /// Parses `{ "dim": n, "gram": [["p/q", …], …] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            gram: Vec<Vec<Value>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.gram.len() != raw.dim {
            return Err(Error::ShapeMismatch(format!("dim {} but {} rows", raw.dim, raw.gram.len())));
        }
        let entries = raw
            .gram
            .iter()
            .map(|row| row.iter().map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn to_json(&self) -> String {
        let gram: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        serde_json::json!({ "dim": self.dim(), "gram": gram }).to_string()
    }
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => s.trim().parse::<BigRational>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))),
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap_or_default().into())),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

/// Positive semidefinite test over `ℚ` by symmetric pivoting.
pub fn is_positive_semidefinite(m: &[Vec<BigRational>]) -> Result<bool> {
    check_square_symmetric(m)?;
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut live: Vec<usize> = (0..a.len()).collect();
    while let Some(&first) = live.first() {
        let pivot = live.iter().copied().max_by(|&i, &j| a[i][i].cmp(&a[j][j])).unwrap_or(first);
        let d = a[pivot][pivot].clone();
        if d.is_negative() {
            return Ok(false);
        }
        live.retain(|&i| i != pivot);
        if d.is_zero() {
            // zero diagonal forces a zero row
            if live.iter().any(|&i| !a[pivot][i].is_zero()) {
                return Ok(false);
            }
            continue;
        }
        for &i in &live {
            for &j in &live {
                let t = &a[i][pivot] * &a[pivot][j] / &d;
                a[i][j] -= t;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_invariants() {
        let g = GramMatrix::e8();
        assert_eq!(g.dim(), 8);
        assert!(g.determinant().is_one());
        assert!(g.is_even());
    }

    #[test]
    fn rejects_indefinite_and_asymmetric() {
        assert!(matches!(GramMatrix::from_integers(&[vec![1, 2], vec![2, 1]]), Err(Error::NotPositiveDefinite(_))));
        assert!(matches!(GramMatrix::from_integers(&[vec![2, 1], vec![0, 2]]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = GramMatrix::from_json(r#"{"dim":2,"gram":[["2","1/2"],["1/2","3"]]}"#).unwrap();
        assert_eq!(g.entry(0, 1), &BigRational::new(1.into(), 2.into()));
        assert_eq!(GramMatrix::from_json(&g.to_json()).unwrap(), g);
        assert!(GramMatrix::from_json(r#"{"dim":2,"gram":[["1"]]}"#).is_err());
        assert!(matches!(GramMatrix::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn norm_of_root() {
        let mut x = [0i64; 8];
        x[0] = 1;
        assert_eq!(GramMatrix::e8().norm(&x), BigRational::from_integer(2.into()));
    }

    #[test]
    fn semidefinite() {
        let q = |v: i64| BigRational::from_integer(v.into());
        assert!(is_positive_semidefinite(&[vec![q(0)]]).unwrap());
        assert!(is_positive_semidefinite(&[vec![q(1), q(1)], vec![q(1), q(1)]]).unwrap());
        assert!(!is_positive_semidefinite(&[vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap());
        assert!(!is_positive_semidefinite(&[vec![q(-1)]]).unwrap());
    }
}
