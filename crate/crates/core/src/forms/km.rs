//! Gaussian-weighted special forms: the `∇`-operator construction, the
//! explicit `C(q, λ)` expansion, and the Euler/Chern forms.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cochain::GKCochain;
use super::fock::column_one_form;
use crate::algebra::perm::{factorial, permutations};
use crate::algebra::{Form, FormOp, LinOp, Scalar, VariableId, WedgeGen, WedgeKind, WedgeMonomial};
use crate::error::{Error, Result};
use crate::oscillator::{Family, ModelTag, Signature};

fn ratio(n: BigInt, d: BigInt) -> Scalar {
    Scalar::from_rational(BigRational::new(n, d))
}

/// `Ω(i, j) = Σ_l ξ̄_{l,i} ∧ ξ_{l,j}` (unitary).
pub fn omega_mixed(p: u16, i: u16, j: u16) -> Form {
    Form::from_terms((1..=p).filter_map(|l| {
        WedgeMonomial::from_product(&[WedgeGen::xibar(l, i), WedgeGen::xi(l, j)])
            .map(|(s, w)| (w, crate::algebra::Polynomial::constant(Scalar::from_int(s as i64))))
    }))
}

/// `Ω(i, j) = Σ_l ξ_{l,i} ∧ ξ_{l,j}` (orthogonal).
pub fn omega_real(p: u16, i: u16, j: u16) -> Form {
    Form::from_terms((1..=p).filter_map(|l| {
        WedgeMonomial::from_product(&[WedgeGen::xi(l, i), WedgeGen::xi(l, j)])
            .map(|(s, w)| (w, crate::algebra::Polynomial::constant(Scalar::from_int(s as i64))))
    }))
}

/// `Σ_l g(l, j) ⊗ (v_{l,k} − c ∂/∂w_{l,k})`.
fn nabla(p: u16, k: u16, j: u16, gen: WedgeKind, v: fn(u16, u16) -> VariableId, w: fn(u16, u16) -> VariableId, c: &Scalar) -> FormOp {
    let mut op = FormOp::new();
    for l in 1..=p {
        let l_op = &LinOp::mul_var(v(l, k)) - &LinOp::deriv(w(l, k)).scale(c);
        op.push(WedgeGen::new(gen, l, j), l_op);
    }
    op
}

fn require_schrodinger_shape(sig: Signature) -> Result<()> {
    match sig.family {
        Family::Unitary if sig.r != sig.s => Err(Error::ShapeMismatch(format!(
            "unitary gaussian forms need r = s, got {sig}"
        ))),
        Family::Orthogonal if sig.s != 0 => Err(Error::ShapeMismatch(format!("orthogonal needs s = 0, got {sig}"))),
        _ => Ok(()),
    }
}

/// `∏_j ∇_{k,j} ∇̄_{k,j}` applied to `f`.
fn apply_nabla_column(sig: Signature, k: u16, mut f: Form) -> Form {
    match sig.family {
        Family::Unitary => {
            let c = Scalar::rational_pi(1, 2, -1);
            for j in (1..=sig.q).rev() {
                f = nabla(sig.p, k, j, WedgeKind::Xi, VariableId::xbar, VariableId::x, &c).apply(&f);
                f = nabla(sig.p, k, j, WedgeKind::Xibar, VariableId::x, VariableId::xbar, &c).apply(&f);
            }
        }
        Family::Orthogonal => {
            let c = Scalar::rational_pi(1, 4, -1);
            for j in (1..=sig.q).rev() {
                f = nabla(sig.p, k, j, WedgeKind::Xi, VariableId::x, VariableId::x, &c).apply(&f);
            }
        }
    }
    f
}

/// `φ_k`, the column factor on its own.
pub fn km_nabla_column(sig: Signature, k: u16) -> Form {
    apply_nabla_column(sig, k, Form::unit())
}

/// The full operator product applied to the vacuum.
pub fn build_km_nabla(sig: Signature) -> Result<GKCochain> {
    require_schrodinger_shape(sig)?;
    let f = (1..=sig.r).rev().fold(Form::unit(), |f, k| apply_nabla_column(sig, k, f));
    Ok(GKCochain::new(sig, ModelTag::Schrodinger, f))
}

/// `C(q, λ)` of the unitary expansion.
pub fn km_constant_unitary(q: u64, lambda: u64) -> Scalar {
    let num = factorial(q).pow(2u32);
    let den = factorial(lambda) * factorial(q - lambda).pow(2u32);
    let sign = if lambda.is_multiple_of(2) { 1 } else { -1 };
    let two_pow = BigInt::from(2).pow(lambda as u32);
    ratio(num * sign, den * two_pow).shift_pi(-(lambda as i32))
}

/// `C(q, λ)` of the orthogonal expansion.
pub fn km_constant_orthogonal(q: u64, lambda: u64) -> Scalar {
    let num = factorial(q);
    let den = BigInt::from(2).pow(lambda as u32) * factorial(lambda) * factorial(q - 2 * lambda);
    let sign = if lambda.is_multiple_of(2) { 1 } else { -1 };
    let four_pow = BigInt::from(4).pow(lambda as u32);
    ratio(num * sign, den * four_pow).shift_pi(-(lambda as i32))
}

fn explicit_unitary_column(p: u16, q: u16, k: u16) -> Form {
    let perms = permutations(q as usize);
    let qf = factorial(q as u64);
    let mut out = Form::zero();
    for lambda in 0..=q {
        let mut a = Form::zero();
        for (s, ss) in &perms {
            for (t, st) in &perms {
                let mut f = Form::unit();
                for idx in 0..q as usize {
                    let (i, j) = (s[idx] as u16 + 1, t[idx] as u16 + 1);
                    if idx < (q - lambda) as usize {
                        f = f.wedge(&column_one_form(p, k, i, VariableId::x, WedgeKind::Xibar));
                        f = f.wedge(&column_one_form(p, k, j, VariableId::xbar, WedgeKind::Xi));
                    } else {
                        f = f.wedge(&omega_mixed(p, i, j));
                    }
                }
                a.add_assign(&f.scale(&Scalar::from_int(ss * st)));
            }
        }
        let c = &km_constant_unitary(q as u64, lambda as u64) * &ratio(BigInt::from(1), qf.pow(2u32));
        out.add_assign(&a.scale(&c));
    }
    out
}

fn explicit_orth_column(p: u16, q: u16, k: u16) -> Form {
    let perms = permutations(q as usize);
    let qf = factorial(q as u64);
    let mut out = Form::zero();
    for lambda in 0..=q / 2 {
        let n_omega = (q - 2 * lambda) as usize;
        let mut a = Form::zero();
        for (s, ss) in &perms {
            let mut f = Form::unit();
            for idx in 0..n_omega {
                f = f.wedge(&column_one_form(p, k, s[idx] as u16 + 1, VariableId::x, WedgeKind::Xi));
            }
            for pair in 0..lambda as usize {
                let i = s[n_omega + 2 * pair] as u16 + 1;
                let j = s[n_omega + 2 * pair + 1] as u16 + 1;
                f = f.wedge(&omega_real(p, i, j));
            }
            a.add_assign(&f.scale(&Scalar::from_int(*ss)));
        }
        let c = &km_constant_orthogonal(q as u64, lambda as u64) * &ratio(BigInt::from(1), qf.clone());
        out.add_assign(&a.scale(&c));
    }
    out
}

/// The explicit `λ`-expansion, column by column.
pub fn build_km_explicit(sig: Signature) -> Result<GKCochain> {
    require_schrodinger_shape(sig)?;
    let mut f = Form::unit();
    for k in 1..=sig.r {
        let col = match sig.family {
            Family::Unitary => explicit_unitary_column(sig.p, sig.q, k),
            Family::Orthogonal => explicit_orth_column(sig.p, sig.q, k),
        };
        f = f.wedge(&col);
    }
    Ok(GKCochain::new(sig, ModelTag::Schrodinger, f))
}

/// Euler form (orthogonal) or top Chern form (unitary) in the `ξ` generators.
pub fn euler_chern_form(sig: Signature) -> Form {
    let (p, q) = (sig.p, sig.q);
    let perms = permutations(q as usize);
    let mut out = Form::zero();
    match sig.family {
        Family::Orthogonal => {
            if q % 2 == 1 {
                return Form::zero();
            }
            let l = q / 2;
            for (s, ss) in &perms {
                let mut f = Form::unit();
                for pair in 0..l as usize {
                    f = f.wedge(&omega_real(p, s[2 * pair] as u16 + 1, s[2 * pair + 1] as u16 + 1));
                }
                out.add_assign(&f.scale(&Scalar::from_int(*ss)));
            }
            out.scale(&ratio(BigInt::from(1), factorial(l as u64)))
        }
        Family::Unitary => {
            for (s, ss) in &perms {
                for (t, st) in &perms {
                    let mut f = Form::unit();
                    for idx in 0..q as usize {
                        f = f.wedge(&omega_mixed(p, s[idx] as u16 + 1, t[idx] as u16 + 1));
                    }
                    out.add_assign(&f.scale(&Scalar::from_int(ss * st)));
                }
            }
            out.scale(&ratio(BigInt::from(1), factorial(q as u64)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    #[test]
    fn unitary_constants() {
        assert!(km_constant_unitary(1, 0).is_one());
        assert_eq!(km_constant_unitary(1, 1), Scalar::rational_pi(-1, 2, -1));
        assert_eq!(km_constant_unitary(2, 1), Scalar::rational_pi(-2, 1, -1));
        assert_eq!(km_constant_unitary(2, 2), Scalar::rational_pi(1, 2, -2));
    }

    #[test]
    fn orthogonal_constants() {
        assert!(km_constant_orthogonal(2, 0).is_one());
        assert_eq!(km_constant_orthogonal(2, 1), Scalar::rational_pi(-1, 4, -1));
    }

    #[test]
    fn rank_one_nabla() {
        let c = build_km_nabla(Signature::unitary(1, 1, 1, 1)).unwrap();
        let w = WedgeMonomial::from_product(&[WedgeGen::xi(1, 1), WedgeGen::xibar(1, 1)]).unwrap().1;
        // ξ̄∧ξ = −ξ∧ξ̄
        let xx = Polynomial::var(VariableId::x(1, 1)) * Polynomial::var(VariableId::xbar(1, 1));
        let expected = &Polynomial::constant(Scalar::rational_pi(1, 2, -1)) - &xx;
        assert_eq!(c.form, Form::term(w, expected));
    }

    #[test]
    fn orthogonal_q2_nabla() {
        let c = build_km_nabla(Signature::orthogonal(1, 2, 1)).unwrap();
        let w = WedgeMonomial::from_product(&[WedgeGen::xi(1, 1), WedgeGen::xi(1, 2)]).unwrap().1;
        let x2 = Polynomial::var(VariableId::x(1, 1)).pow(2);
        let expected = &x2 - &Polynomial::constant(Scalar::rational_pi(1, 4, -1));
        assert_eq!(c.form, Form::term(w, expected));
    }

    #[test]
    fn chern_form_q1() {
        let f = euler_chern_form(Signature::unitary(2, 1, 0, 0));
        assert_eq!(f, &omega_mixed(2, 1, 1) + &Form::zero());
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn euler_form_odd_vanishes() {
        assert!(euler_chern_form(Signature::orthogonal(2, 1, 0)).is_zero());
        assert!(!euler_chern_form(Signature::orthogonal(2, 2, 0)).is_zero());
    }
}
