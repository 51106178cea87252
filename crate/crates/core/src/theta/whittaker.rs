//! Whittaker factors and rank-one Fourier assembly.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::enumerate::enumerate_vectors;
use super::gram::{is_positive_semidefinite, GramMatrix};
use crate::error::{Error, Result};

/// Exponent convention for `exp(tr βτ)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// `exp(tr βτ)` as displayed.
    #[default]
    Literal,
    /// `exp(2πi tr βτ)`.
    Classical,
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(Convention::Literal),
            "classical" => Ok(Convention::Classical),
            other => Err(Error::Parse(format!("unknown convention {other:?}"))),
        }
    }
}

/// Symmetric rational `r × r` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaMatrix {
    pub entries: Vec<Vec<BigRational>>,
}

impl BetaMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        if !is_positive_semidefinite(&entries)? {
            return Err(Error::NotPositiveDefinite("β must be positive semidefinite".into()));
        }
        Ok(BetaMatrix { entries })
    }

    pub fn scalar(n: BigRational) -> Result<Self> {
        Self::new(vec![vec![n]])
    }

    pub fn zero(r: usize) -> Self {
        BetaMatrix { entries: vec![vec![BigRational::zero(); r]; r] }
    }

    pub fn rank_dim(&self) -> usize {
        self.entries.len()
    }
}

/// `g' = n(b)·m(a)`, so `τ = b + i·a·aᵀ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WhittakerPoint {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<Vec<f64>>,
}

fn det(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap_or(c);
        if a[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                a[i][j] -= f * a[c][j];
            }
        }
    }
    d
}

impl WhittakerPoint {
    pub fn new(a: Vec<Vec<f64>>, b: Vec<Vec<f64>>) -> Result<Self> {
        let r = a.len();
        if a.iter().chain(&b).any(|row| row.len() != r) || b.len() != r {
            return Err(Error::ShapeMismatch(format!("a and b must both be {r}×{r}")));
        }
        if (0..r).any(|i| (0..i).any(|j| b[i][j] != b[j][i])) {
            return Err(Error::ShapeMismatch("b must be symmetric".into()));
        }
        if det(&a) == 0.0 {
            return Err(Error::Singular("a is not invertible".into()));
        }
        Ok(WhittakerPoint { a, b })
    }

    /// `a = t`, `b = u` in genus one.
    pub fn scalar(t: f64, u: f64) -> Result<Self> {
        Self::new(vec![vec![t]], vec![vec![u]])
    }

    pub fn genus(&self) -> usize {
        self.a.len()
    }

    pub fn tau(&self) -> Vec<Vec<Complex64>> {
        let r = self.genus();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v: f64 = (0..r).map(|k| self.a[i][k] * self.a[j][k]).sum();
                        Complex64::new(self.b[i][j], v)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn det_a(&self) -> f64 {
        det(&self.a)
    }
}

/// `|det a|^{(p+q)/2} · exp(tr βτ)`, or with `2πi` in the exponent.
pub fn whittaker(beta: &BetaMatrix, g: &WhittakerPoint, weight_dim: u32, conv: Convention) -> Result<Complex64> {
    if beta.rank_dim() != g.genus() {
        return Err(Error::ShapeMismatch(format!("β is {0}×{0} but the point has genus {1}", beta.rank_dim(), g.genus())));
    }
    let tau = g.tau();
    let mut tr = Complex64::zero();
    for (i, row) in beta.entries.iter().enumerate() {
        for (j, bij) in row.iter().enumerate() {
            tr += tau[j][i] * bij.to_f64().unwrap_or(f64::NAN);
        }
    }
    let exponent = match conv {
        Convention::Literal => tr,
        Convention::Classical => tr * Complex64::new(0.0, 2.0 * std::f64::consts::PI),
    };
    let scale = g.det_a().abs().powf(weight_dim as f64 / 2.0);
    Ok(exponent.exp() * scale)
}

/// `Σ_{½(x,x) = n} w(x)` for `n = 0..=n_max`.
pub fn weighted_counts(l: &GramMatrix, weights: impl Fn(&[i64]) -> BigRational, n_max: u64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n_max as usize + 1];
    for x in enumerate_vectors(l, &BigRational::from_integer(n_max.into())) {
        let half = l.norm(&x) / BigRational::from_integer(2.into());
        if half.is_integer() {
            if let Some(n) = half.to_integer().to_usize() {
                out[n] += weights(&x);
            }
        }
    }
    out
}

/// `n ↦ (Σ_{½(x,x) = n} w(x)) · W_n(g)` on a genus-one point.
pub fn fourier_assemble(
    l: &GramMatrix,
    weights: impl Fn(&[i64]) -> BigRational,
    g: &WhittakerPoint,
    n_max: u64,
    weight_dim: u32,
    conv: Convention,
) -> Result<Vec<Complex64>> {
    weighted_counts(l, weights, n_max)
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            let w = whittaker(&BetaMatrix::scalar(BigRational::from_integer(n.into()))?, g, weight_dim, conv)?;
            Ok(w * c.to_f64().unwrap_or(f64::NAN))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= 1e-12 * (1.0 + b.norm())
    }

    #[test]
    fn zero_beta_is_determinant_power() {
        let g = WhittakerPoint::scalar(2.0, 0.7).unwrap();
        let w = whittaker(&BetaMatrix::zero(1), &g, 3, Convention::Literal).unwrap();
        assert!(close(w, Complex64::new(2f64.powf(1.5), 0.0)));
    }

    #[test]
    fn literal_value_at_identity() {
        let g = WhittakerPoint::scalar(1.0, 0.0).unwrap();
        let beta = BetaMatrix::scalar(BigRational::from_integer(1.into())).unwrap();
        let w = whittaker(&beta, &g, 2, Convention::Literal).unwrap();
        assert!(close(w, Complex64::new(0.0, 1.0).exp()));
        let c = whittaker(&beta, &g, 2, Convention::Classical).unwrap();
        assert!(close(c, Complex64::new((-2.0 * std::f64::consts::PI).exp(), 0.0)));
    }

    #[test]
    fn singular_point_rejected() {
        assert!(matches!(WhittakerPoint::scalar(0.0, 0.0), Err(Error::Singular(_))));
        let minus = BigRational::from_integer((-1).into());
        assert!(BetaMatrix::scalar(minus).is_err());
    }

    #[test]
    fn zero_weights_vanish() {
        let g = WhittakerPoint::scalar(1.0, 0.0).unwrap();
        let l = GramMatrix::scalar(2, 2).unwrap();
        let f = fourier_assemble(&l, |_| BigRational::zero(), &g, 3, 2, Convention::Literal).unwrap();
        assert!(f.iter().all(|z| z.norm() == 0.0));
    }
}
