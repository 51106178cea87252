//! Forms in the mixed model: gaussian columns first, Fock columns after.

use super::cochain::GKCochain;
use super::fock::psi_column;
use super::km::km_nabla_column;
use crate::algebra::Form;
use crate::error::{Error, Result};
use crate::oscillator::{Family, ModelTag, Signature};

/// `φ_1 ∧ … ∧ φ_s ∧ ψ_{s+1} ∧ … ∧ ψ_r`.
pub fn build_mixed(sig: Signature) -> Result<GKCochain> {
    if sig.family != Family::Unitary {
        return Err(Error::FamilyMismatch("the mixed model is unitary".into()));
    }
    if sig.s > sig.r {
        return Err(Error::ShapeMismatch(format!("mixed model needs s ≤ r, got {sig}")));
    }
    let mut f = Form::unit();
    for k in 1..=sig.s {
        f = f.wedge(&km_nabla_column(sig, k));
    }
    for k in sig.s + 1..=sig.r {
        f = f.wedge(&psi_column(sig, k));
    }
    Ok(GKCochain::new(sig, ModelTag::Mixed { schrodinger_cols: sig.s }, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::fock::build_psi_cup;

    #[test]
    fn no_gaussian_columns_is_fock_cup() {
        let sig = Signature::unitary(2, 1, 2, 0);
        assert_eq!(build_mixed(sig).unwrap().form, build_psi_cup(sig).unwrap().form);
    }

    #[test]
    fn bidegree_support() {
        let c = build_mixed(Signature::unitary(2, 1, 2, 1)).unwrap();
        assert_eq!(c.form.bidegrees().into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
    }
}
