//! Linear differential operators with polynomial coefficients.
//!
//! An operator is `Σ_α m_α ∂^α`, each multiplier written to the left of its
//! derivative. Terms with equal `α` are merged, so the representation is
//! unique and operator identities reduce to structural equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::polynomial::{Monomial, Polynomial};
use super::scalar::Scalar;
use super::variable::VariableId;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LinOp {
    terms: BTreeMap<Monomial, Polynomial>,
}

impl LinOp {
    pub fn zero() -> Self {
        LinOp::default()
    }

    pub fn identity() -> Self {
        LinOp::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        LinOp::multiply(Polynomial::constant(c))
    }

    /// Multiplication by `p`.
    pub fn multiply(p: Polynomial) -> Self {
        LinOp::term(p, Monomial::one())
    }

    pub fn mul_var(v: VariableId) -> Self {
        LinOp::multiply(Polynomial::var(v))
    }

    /// `∂/∂v`.
    pub fn deriv(v: VariableId) -> Self {
        LinOp::term(Polynomial::one(), Monomial::var(v))
    }

    /// `m · ∂^α`.
    pub fn term(m: Polynomial, alpha: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !m.is_zero() {
            terms.insert(alpha, m);
        }
        LinOp { terms }
    }

    fn add_term(&mut self, alpha: Monomial, m: &Polynomial) {
        if m.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&alpha) {
            Some(v) => {
                v.add_assign(m);
                v.is_zero()
            }
            None => {
                self.terms.insert(alpha, m.clone());
                return;
            }
        };
        if remove {
            self.terms.remove(&alpha);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The scalar `c` when the operator is `c · Id`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let m = self.terms.get(&Monomial::one())?;
        if m.len() == 1 && m.degree() == Some(0) {
            Some(m.constant_term())
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinOp {
        let mut out = LinOp::zero();
        for (a, m) in &self.terms {
            out.add_term(a.clone(), &m.scale(c));
        }
        out
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (alpha, m) in &self.terms {
            let d = p.derivative_multi(alpha);
            if !d.is_zero() {
                out.add_assign(&(m * &d));
            }
        }
        out
    }

    /// `self ∘ other`, normal-ordered with the Leibniz rule
    /// `∂^α ∘ b = Σ_{γ≤α} C(α,γ) (∂^γ b) ∂^{α−γ}`.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        let mut out = LinOp::zero();
        for (alpha, a) in &self.terms {
            for (gamma, binom) in sub_indices(alpha) {
                let rest = alpha.div(&gamma).expect("sub-index divides");
                for (beta, b) in &other.terms {
                    let db = b.derivative_multi(&gamma);
                    if db.is_zero() {
                        continue;
                    }
                    let m = (a * &db).scale(&Scalar::from_int(binom));
                    out.add_term(rest.mul(beta), &m);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &LinOp) -> LinOp {
        &self.compose(other) - &other.compose(self)
    }

    pub fn pow(&self, n: u32) -> LinOp {
        let mut acc = LinOp::identity();
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Rewrites the operator through a Weyl-algebra substitution: each
    /// multiplication by `v` becomes `mult(v)` and each `∂/∂v` becomes
    /// `diff(v)`. The images must satisfy the canonical commutation relations
    /// for the result to be meaningful.
    pub fn substitute<M, D>(&self, mult: &M, diff: &D) -> LinOp
    where
        M: Fn(VariableId) -> LinOp,
        D: Fn(VariableId) -> LinOp,
    {
        let mut out = LinOp::zero();
        for (alpha, m) in &self.terms {
            let mut right = LinOp::identity();
            for &(v, e) in alpha.pairs() {
                right = right.compose(&diff(v).pow(e));
            }
            for (mono, c) in m.terms() {
                let mut left = LinOp::scalar(c.clone());
                for &(v, e) in mono.pairs() {
                    left = left.compose(&mult(v).pow(e));
                }
                out = &out + &left.compose(&right);
            }
        }
        out
    }

    /// `Some(c)` with `self = c · other`.
    pub fn ratio_to(&self, other: &LinOp) -> Option<Scalar> {
        if other.is_zero() {
            return if self.is_zero() { Some(Scalar::zero()) } else { None };
        }
        let (alpha, m) = other.terms.iter().next()?;
        let (mono, c) = m.terms().next()?;
        let mine = self.terms.get(alpha).map(|p| p.coefficient(mono)).unwrap_or_default();
        let ratio = &mine * &c.inv()?;
        if *self == other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    /// Maximal increase of total polynomial degree, if uniform across terms.
    pub fn degree_shift(&self) -> Option<i64> {
        let mut shift = None;
        for (alpha, m) in &self.terms {
            for (mono, _) in m.terms() {
                let s = mono.degree() as i64 - alpha.degree() as i64;
                match shift {
                    None => shift = Some(s),
                    Some(t) if t != s => return None,
                    _ => {}
                }
            }
        }
        shift
    }
}

/// All `γ ≤ α` with the product of binomial coefficients `C(α,γ)`.
fn sub_indices(alpha: &Monomial) -> Vec<(Monomial, i64)> {
    let mut out = vec![(Monomial::one(), 1i64)];
    for &(v, a) in alpha.pairs() {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for (g, c) in &out {
            for k in 0..=a {
                next.push((g.mul(&Monomial::var_pow(v, k)), c * binomial(a, k)));
            }
        }
        out = next;
    }
    out
}

pub fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

impl Add for &LinOp {
    type Output = LinOp;
    fn add(self, o: &LinOp) -> LinOp {
        let mut out = self.clone();
        for (a, m) in &o.terms {
            out.add_term(a.clone(), m);
        }
        out
    }
}

impl Sub for &LinOp {
    type Output = LinOp;
    fn sub(self, o: &LinOp) -> LinOp {
        let mut out = self.clone();
        for (a, m) in &o.terms {
            out.add_term(a.clone(), &-m);
        }
        out
    }
}

impl Neg for &LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        LinOp {
            terms: self.terms.iter().map(|(a, m)| (a.clone(), -m)).collect(),
        }
    }
}

/// Operator composition.
impl Mul for &LinOp {
    type Output = LinOp;
    fn mul(self, o: &LinOp) -> LinOp {
        self.compose(o)
    }
}

impl Add for LinOp {
    type Output = LinOp;
    fn add(self, o: LinOp) -> LinOp {
        &self + &o
    }
}

impl Sub for LinOp {
    type Output = LinOp;
    fn sub(self, o: LinOp) -> LinOp {
        &self - &o
    }
}

impl Neg for LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        -&self
    }
}

impl fmt::Display for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (alpha, m)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if alpha.is_one() {
                write!(f, "({m})")?;
            } else {
                write!(f, "({m})·∂[{alpha}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_square() {
        let x = VariableId::x(1, 1);
        let p = Polynomial::var(x).pow(2);
        assert_eq!(LinOp::deriv(x).apply(&p), Polynomial::var(x).scale(&Scalar::from_int(2)));
    }

    #[test]
    fn euler_operator_kills_constants() {
        let x = VariableId::x(1, 1);
        let e = LinOp::mul_var(x).compose(&LinOp::deriv(x));
        assert!(e.apply(&Polynomial::one()).is_zero());
    }

    #[test]
    fn heisenberg_relation() {
        let x = VariableId::z(1);
        let c = LinOp::deriv(x).commutator(&LinOp::mul_var(x));
        assert_eq!(c, LinOp::identity());
    }

    #[test]
    fn composition_is_normal_ordered() {
        let x = VariableId::z(1);
        let d2 = LinOp::deriv(x).pow(2);
        let xx = LinOp::multiply(Polynomial::var(x).pow(2));
        // ∂² x² = x²∂² + 4x∂ + 2
        let expected = &(&LinOp::term(Polynomial::var(x).pow(2), Monomial::var_pow(x, 2))
            + &LinOp::term(Polynomial::var(x).scale(&Scalar::from_int(4)), Monomial::var(x)))
            + &LinOp::scalar(Scalar::from_int(2));
        assert_eq!(d2.compose(&xx), expected);
    }

    #[test]
    fn substitution_preserves_identity() {
        let x = VariableId::z(1);
        let op = LinOp::deriv(x).commutator(&LinOp::mul_var(x));
        let a = |_v: VariableId| &LinOp::mul_var(x) + &LinOp::deriv(x).scale(&Scalar::from_int(3));
        let d = |_v: VariableId| LinOp::deriv(x);
        assert_eq!(op.substitute(&a, &d), LinOp::identity());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
