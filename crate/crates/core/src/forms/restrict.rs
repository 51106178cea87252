//! Restriction to the complement of a peeled positive-definite block.

use super::cochain::GKCochain;
use crate::algebra::{Form, VariableId, WedgeGen};
use crate::error::{Error, Result};
use crate::oscillator::Signature;

/// Peels off the first `l` positive rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub l: u16,
}

fn peeled_var(v: VariableId, l: u16) -> bool {
    v.kind.is_x_like() && v.row <= l
}

/// Drops every wedge monomial that touches a peeled row, checks that the
/// surviving coefficients do not involve peeled variables, and shifts the
/// remaining rows down to the `(p − l, q)` signature.
pub fn restrict_form(c: &GKCochain, split: SplitSpec) -> Result<GKCochain> {
    let l = split.l;
    if l > c.sig.p {
        return Err(Error::ShapeMismatch(format!("cannot peel {l} rows from p = {}", c.sig.p)));
    }
    if l == 0 {
        return Ok(c.clone());
    }
    let kept = c.form.kill_gens(|g| g.row <= l);
    for (w, poly) in kept.terms() {
        if poly.depends_on(|v| peeled_var(v, l)) {
            return Err(Error::FactorizationFailure(format!(
                "coefficient of {w} depends on peeled variables"
            )));
        }
    }
    let shifted: Form = kept.relabel(
        |g| WedgeGen { row: g.row - l, ..g },
        |v| if v.kind.is_x_like() { VariableId { row: v.row - l, ..v } } else { v },
    );
    let sig = Signature { p: c.sig.p - l, ..c.sig };
    Ok(GKCochain::new(sig, c.model, shifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::fock::{build_psi_cup, build_psi_q};

    #[test]
    fn zero_split_is_identity() {
        let c = build_psi_q(Signature::unitary(2, 1, 1, 0), 1).unwrap();
        assert_eq!(restrict_form(&c, SplitSpec { l: 0 }).unwrap(), c);
    }

    #[test]
    fn peeling_everything_kills_cup() {
        let c = build_psi_cup(Signature::unitary(2, 1, 1, 0)).unwrap();
        assert!(restrict_form(&c, SplitSpec { l: 2 }).unwrap().is_zero());
    }

    #[test]
    fn stray_dependence_is_reported() {
        use crate::algebra::{Polynomial, WedgeMonomial};
        let sig = Signature::unitary(2, 1, 1, 0);
        let f = Form::term(WedgeMonomial::gen(WedgeGen::xibar(2, 1)), Polynomial::var(VariableId::x(1, 1)));
        let c = GKCochain::new(sig, crate::oscillator::ModelTag::Fock, f);
        assert!(matches!(restrict_form(&c, SplitSpec { l: 1 }), Err(Error::FactorizationFailure(_))));
    }
}
