//! Laplacians `Δ_ij`, harmonicity, and the rank of tableau minor spans.

use super::minors::{delta_t, MinorSide};
use super::partition::Partition;
use super::tableau::enumerate_ssyt;
use crate::algebra::linalg::{rank, SparseVec};
use crate::algebra::{LinOp, Monomial, Polynomial, VariableId};
use crate::error::{check_index, Error, Result};
use crate::oscillator::Signature;

/// `Δ_ij = Σ_ν ∂²/∂X_{iν}∂Y_{jν}`.
pub fn laplacian(i: u16, j: u16, sig: Signature) -> Result<LinOp> {
    check_index("row of X", i as usize, sig.p as usize)?;
    check_index("row of Y", j as usize, sig.q as usize)?;
    let mut op = LinOp::zero();
    for nu in 1..=sig.r {
        let alpha = Monomial::var(VariableId::x(i, nu)).mul(&Monomial::var(VariableId::y(j, nu)));
        op = &op + &LinOp::term(Polynomial::one(), alpha);
    }
    Ok(op)
}

pub fn is_harmonic(poly: &Polynomial, sig: Signature) -> bool {
    (1..=sig.p).all(|i| {
        (1..=sig.q).all(|j| laplacian(i, j, sig).map(|d| d.apply(poly).is_zero()).unwrap_or(false))
    })
}

fn coefficient_vector(p: &Polynomial) -> Result<SparseVec<Monomial>> {
    p.terms()
        .map(|(m, c)| {
            c.as_gauss()
                .map(|g| (m.clone(), g))
                .ok_or_else(|| Error::ShapeMismatch("coefficient involves π".into()))
        })
        .collect()
}

/// Rank of `{Δ_T : T semistandard of shape λ, entries ≤ p}`.
pub fn schur_span_dim(lambda: &Partition, sig: Signature) -> Result<usize> {
    if lambda.len() > sig.p as usize {
        return Err(Error::ShapeMismatch(format!("l({lambda}) exceeds p = {}", sig.p)));
    }
    let vs = enumerate_ssyt(lambda, sig.p as u32)
        .iter()
        .map(|t| delta_t(t, sig, MinorSide::X).and_then(|p| coefficient_vector(&p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank(&vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::minors::kv_highest_weight;

    fn x(i: u16, k: u16) -> Polynomial {
        Polynomial::var(VariableId::x(i, k))
    }

    fn y(j: u16, k: u16) -> Polynomial {
        Polynomial::var(VariableId::y(j, k))
    }

    #[test]
    fn laplacian_examples() {
        let sig = Signature::unitary(1, 1, 1, 0);
        let d = laplacian(1, 1, sig).unwrap();
        assert!(d.apply(&(&x(1, 1) * &y(1, 1))) == Polynomial::one());
        assert!(d.apply(&x(1, 1).pow(2)).is_zero());
    }

    #[test]
    fn harmonicity() {
        let sig = Signature::unitary(1, 1, 1, 0);
        assert!(is_harmonic(&Polynomial::one(), sig));
        assert!(!is_harmonic(&(&x(1, 1) * &y(1, 1)), sig));
        let one = Partition::new(vec![1]).unwrap();
        let sig2 = Signature::unitary(1, 2, 2, 0);
        assert!(is_harmonic(&kv_highest_weight(&one, &one, sig2).unwrap(), sig2));
    }

    #[test]
    fn span_dims() {
        let sig = Signature::unitary(2, 1, 2, 0);
        assert_eq!(schur_span_dim(&Partition::new(vec![1]).unwrap(), sig).unwrap(), 2);
        assert_eq!(schur_span_dim(&Partition::new(vec![1, 1]).unwrap(), sig).unwrap(), 1);
        let sig3 = Signature::unitary(3, 1, 2, 0);
        assert_eq!(schur_span_dim(&Partition::new(vec![2, 1]).unwrap(), sig3).unwrap(), 8);
    }
}
