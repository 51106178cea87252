//! Fock-model forms: products of the column forms `ψ_k`.

use super::cochain::GKCochain;
use crate::algebra::{Form, Polynomial, VariableId, WedgeGen, WedgeKind, WedgeMonomial};
use crate::error::{check_index, Error, Result};
use crate::oscillator::{Family, ModelTag, Signature};

/// `ω(k, j) = Σ_l v(l, k) · g(l, j)` for a variable kind and generator kind.
pub fn column_one_form(p: u16, k: u16, j: u16, var: fn(u16, u16) -> VariableId, gen: WedgeKind) -> Form {
    Form::from_terms((1..=p).map(|l| {
        (WedgeMonomial::gen(WedgeGen::new(gen, l, j)), Polynomial::var(var(l, k)))
    }))
}

/// `ω(k,1) ∧ … ∧ ω(k,q)`.
fn column_form(p: u16, q: u16, k: u16, var: fn(u16, u16) -> VariableId, gen: WedgeKind) -> Form {
    (1..=q).fold(Form::unit(), |acc, j| acc.wedge(&column_one_form(p, k, j, var, gen)))
}

/// `ψ_k` with coefficients in column `k` of `X` against `ξ̄`.
pub fn psi_column(sig: Signature, k: u16) -> Form {
    column_form(sig.p, sig.q, k, VariableId::x, WedgeKind::Xibar)
}

/// `ψ̄_k`: conjugate variables against `ξ`.
pub fn psi_bar_column(sig: Signature, k: u16) -> Form {
    column_form(sig.p, sig.q, k, VariableId::xbar, WedgeKind::Xi)
}

/// Orthogonal `ψ_k`: real variables against `ξ`.
pub fn psi_orth_column(sig: Signature, k: u16) -> Form {
    column_form(sig.p, sig.q, k, VariableId::x, WedgeKind::Xi)
}

pub fn build_psi_q(sig: Signature, column: u16) -> Result<GKCochain> {
    if sig.q == 0 {
        return Err(Error::ShapeMismatch("ψ needs q ≥ 1".into()));
    }
    check_index("column", column as usize, sig.r as usize)?;
    let form = match sig.family {
        Family::Unitary => psi_column(sig, column),
        Family::Orthogonal => psi_orth_column(sig, column),
    };
    Ok(GKCochain::new(sig, ModelTag::Fock, form))
}

/// `ψ_1 ∧ … ∧ ψ_r ∧ ψ̄_1 ∧ … ∧ ψ̄_s`.
pub fn build_psi_cup(sig: Signature) -> Result<GKCochain> {
    if sig.family != Family::Unitary {
        return Err(Error::FamilyMismatch("ψ-cup is the unitary construction".into()));
    }
    if (sig.r > sig.p || sig.s > sig.p) && sig.q > 0 {
        return Ok(GKCochain::zero(sig, ModelTag::Fock));
    }
    let mut f = Form::unit();
    for k in 1..=sig.r {
        f = f.wedge(&psi_column(sig, k));
    }
    for k in 1..=sig.s {
        f = f.wedge(&psi_bar_column(sig, k));
    }
    Ok(GKCochain::new(sig, ModelTag::Fock, f))
}

pub fn build_psi_orth(sig: Signature) -> Result<GKCochain> {
    if sig.family != Family::Orthogonal || sig.s != 0 {
        return Err(Error::FamilyMismatch("ψ-orth needs the orthogonal family with s = 0".into()));
    }
    if sig.r > sig.p && sig.q > 0 {
        return Ok(GKCochain::zero(sig, ModelTag::Fock));
    }
    let mut f = Form::unit();
    for k in 1..=sig.r {
        f = f.wedge(&psi_orth_column(sig, k));
    }
    Ok(GKCochain::new(sig, ModelTag::Fock, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    fn x(i: u16, k: u16) -> Polynomial {
        Polynomial::var(VariableId::x(i, k))
    }

    #[test]
    fn single_box() {
        let c = build_psi_q(Signature::unitary(1, 1, 1, 0), 1).unwrap();
        assert_eq!(c.form, Form::term(WedgeMonomial::gen(WedgeGen::xibar(1, 1)), x(1, 1)));
    }

    #[test]
    fn two_rows() {
        let c = build_psi_q(Signature::unitary(2, 1, 1, 0), 1).unwrap();
        let expected = Form::term(WedgeMonomial::gen(WedgeGen::xibar(1, 1)), x(1, 1))
            + Form::term(WedgeMonomial::gen(WedgeGen::xibar(2, 1)), x(2, 1));
        assert_eq!(c.form, expected);
    }

    #[test]
    fn two_columns_square() {
        let c = build_psi_q(Signature::unitary(1, 2, 1, 0), 1).unwrap();
        let w = WedgeMonomial::from_product(&[WedgeGen::xibar(1, 1), WedgeGen::xibar(1, 2)]).unwrap().1;
        assert_eq!(c.form, Form::term(w, x(1, 1).pow(2)));
    }

    #[test]
    fn cup_gives_minor() {
        let c = build_psi_cup(Signature::unitary(2, 1, 2, 0)).unwrap();
        let (sign, w) = WedgeMonomial::from_product(&[WedgeGen::xibar(1, 1), WedgeGen::xibar(2, 1)]).unwrap();
        let minor = &(&x(1, 1) * &x(2, 2)) - &(&x(2, 1) * &x(1, 2));
        assert_eq!(c.coefficient_at(&w), minor.scale(&Scalar::from_int(sign as i64)));
    }

    #[test]
    fn too_many_columns_vanish() {
        assert!(build_psi_cup(Signature::unitary(1, 1, 2, 0)).unwrap().is_zero());
        assert!(build_psi_cup(Signature::unitary(1, 1, 0, 0)).unwrap().form == Form::unit());
    }
}
