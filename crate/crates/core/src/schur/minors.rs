//! Determinant polynomials attached to tableaux.

use super::partition::Partition;
use super::tableau::Tableau;
use crate::algebra::perm::permutations;
use crate::algebra::{Polynomial, Scalar, VariableId};
use crate::error::{Error, Result};
use crate::oscillator::Signature;

/// Which side of the Fock variables a minor lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorSide {
    /// Leading columns of `X`.
    X,
    /// Reversed rows, trailing columns of `Y`.
    Y,
}

/// `det(entry(s, t))` for an `n × n` array of polynomials.
pub fn determinant(n: usize, entry: impl Fn(usize, usize) -> Polynomial) -> Polynomial {
    let cells: Vec<Vec<Polynomial>> = (0..n).map(|s| (0..n).map(|t| entry(s, t)).collect()).collect();
    let mut out = Polynomial::zero();
    for (perm, sign) in permutations(n) {
        let mut term = Polynomial::constant(Scalar::from_int(sign));
        for (s, &t) in perm.iter().enumerate() {
            term = &term * &cells[s][t];
            if term.is_zero() {
                break;
            }
        }
        out.add_assign(&term);
    }
    out
}

/// `Δ_{i_1…i_a}(X)`: rows `i_1 < … < i_a`, columns `1..a`.
pub fn x_minor(rows: &[u32]) -> Polynomial {
    determinant(rows.len(), |s, t| Polynomial::var(VariableId::x(rows[s] as u16, t as u16 + 1)))
}

/// `Δ̃_{i_1…i_b}(Y)`: rows `q−i_b+1 < … < q−i_1+1`, the last `b` columns.
pub fn y_minor(rows: &[u32], q: u16, r: u16) -> Polynomial {
    let b = rows.len();
    let ys: Vec<u16> = rows.iter().rev().map(|&i| q + 1 - i as u16).collect();
    determinant(b, |s, t| Polynomial::var(VariableId::y(ys[s], r - b as u16 + 1 + t as u16)))
}

/// `Δ_j(X)`, the leading principal minor.
pub fn leading_x(j: usize) -> Polynomial {
    x_minor(&(1..=j as u32).collect::<Vec<_>>())
}

/// `Δ̃_j(Y)`, the bottom-right minor.
pub fn trailing_y(j: usize, q: u16, r: u16) -> Polynomial {
    y_minor(&(1..=j as u32).collect::<Vec<_>>(), q, r)
}

/// Product of column minors of `t`.
pub fn delta_t(t: &Tableau, sig: Signature, side: MinorSide) -> Result<Polynomial> {
    let bound = match side {
        MinorSide::X => sig.p,
        MinorSide::Y => sig.q,
    } as u32;
    if !t.is_semistandard(bound) {
        return Err(Error::ShapeMismatch(format!("tableau {t:?} is not semistandard with entries ≤ {bound}")));
    }
    if t.shape.len() > sig.r as usize {
        return Err(Error::ShapeMismatch(format!("column length {} exceeds r = {}", t.shape.len(), sig.r)));
    }
    let mut out = Polynomial::one();
    for l in 0..t.num_columns() {
        let col = t.column(l);
        let m = match side {
            MinorSide::X => x_minor(&col),
            MinorSide::Y => y_minor(&col, sig.q, sig.r),
        };
        out = &out * &m;
    }
    Ok(out)
}

/// `P_{λ,μ} = Π Δ_j(X)^{λ_j − λ_{j+1}} · Π Δ̃_j(Y)^{μ_j − μ_{j+1}}`.
pub fn kv_highest_weight(lambda: &Partition, mu: &Partition, sig: Signature) -> Result<Polynomial> {
    if lambda.len() > sig.p as usize || mu.len() > sig.q as usize || lambda.len() + mu.len() > sig.r as usize {
        return Err(Error::ShapeMismatch(format!(
            "need l(λ) ≤ p, l(μ) ≤ q, l(λ)+l(μ) ≤ r; got λ={lambda}, μ={mu}, {sig}"
        )));
    }
    let mut out = Polynomial::one();
    for j in 1..=lambda.len() {
        out = &out * &leading_x(j).pow(lambda.part(j) - lambda.part(j + 1));
    }
    for j in 1..=mu.len() {
        out = &out * &trailing_y(j, sig.q, sig.r).pow(mu.part(j) - mu.part(j + 1));
    }
    Ok(out)
}
