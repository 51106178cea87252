use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{GaussRat, Scalar};
use super::variable::VariableId;

/// A monomial, stored as a strictly sorted list of `(variable, exponent > 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(VariableId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VariableId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: VariableId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds and canonicalizes from an arbitrary list.
    pub fn from_pairs<I: IntoIterator<Item = (VariableId, u32)>>(it: I) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in it {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn pairs(&self) -> &[(VariableId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &o.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let need = if j < o.0.len() && o.0[j].0 == v {
                j += 1;
                o.0[j - 1].1
            } else {
                0
            };
            if need > e {
                return None;
            }
            if e > need {
                out.push((v, e - need));
            }
        }
        if j < o.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        o.div(self).is_some()
    }

    /// `∂/∂v` of the monomial: `(exponent, m/v)`, or `None` when `v` is absent.
    pub fn derivative(&self, v: VariableId) -> Option<(u32, Monomial)> {
        let i = self.0.binary_search_by(|(w, _)| w.cmp(&v)).ok()?;
        let e = self.0[i].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some((e, Monomial(out)))
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    pub fn map_vars<F: Fn(VariableId) -> VariableId>(&self, f: F) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|(v, e)| (f(*v), *e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A canonical sparse polynomial with [`Scalar`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(v: VariableId) -> Self {
        Polynomial::term(Monomial::var(v), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + c;
                v.is_zero()
            }
            None => {
                self.terms.insert(m, c.clone());
                return;
            }
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, o: &Polynomial) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms.keys().flat_map(|m| m.variables().collect::<Vec<_>>()).collect()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v * c)))
    }

    pub fn scale_gauss(&self, c: &GaussRat) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, v)| (m.clone(), v.scale(c))))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(n, v)| (n.mul(m), v * c)))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: VariableId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.derivative(v) {
                out.add_term(rest, &(c * &Scalar::from_int(e as i64)));
            }
        }
        out
    }

    /// Applies `∂^α` for a multi-index given as a monomial.
    pub fn derivative_multi(&self, alpha: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coef: i64 = 1;
            let mut ok = true;
            for &(v, a) in alpha.pairs() {
                let e = m.exponent(v);
                if e < a {
                    ok = false;
                    break;
                }
                for t in 0..a {
                    coef *= (e - t) as i64;
                }
            }
            if ok {
                let rest = m.div(alpha).expect("exponents checked");
                out.add_term(rest, &(c * &Scalar::from_int(coef)));
            }
        }
        out
    }

    /// Complex conjugation: conjugate variables and coefficients.
    pub fn conj(&self) -> Polynomial {
        Polynomial::from_terms(
            self.terms.iter().map(|(m, c)| (m.map_vars(VariableId::conj), c.conj())),
        )
    }

    pub fn map_vars<F: Fn(VariableId) -> VariableId>(&self, f: F) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    pub fn map_coeffs<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Sets every variable matching `pred` to zero.
    pub fn kill_vars<F: Fn(VariableId) -> bool>(&self, pred: F) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| !m.variables().any(&pred))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn depends_on<F: Fn(VariableId) -> bool>(&self, pred: F) -> bool {
        self.terms.keys().any(|m| m.variables().any(&pred))
    }

    pub fn max_pi_exponent_span(&self) -> Option<(i32, i32)> {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for c in self.terms.values() {
            for (k, _) in c.terms() {
                lo = lo.min(k);
                hi = hi.max(k);
            }
        }
        if lo > hi {
            None
        } else {
            Some((lo, hi))
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        out.add_assign(small);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.mul(b), &(x * y));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, o: Polynomial) -> Polynomial {
        self.add_assign(&o);
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        &self - &o
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "[{c}]")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "[{c}]·{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x11() -> Polynomial {
        Polynomial::var(VariableId::x(1, 1))
    }
    fn y11() -> Polynomial {
        Polynomial::var(VariableId::y(1, 1))
    }

    #[test]
    fn additive_inverse_vanishes() {
        assert!((&x11() + &(-&x11())).is_zero());
    }

    #[test]
    fn unit_is_identity() {
        assert_eq!(&x11() * &Polynomial::one(), x11());
    }

    #[test]
    fn binomial_square() {
        let s = &x11() + &y11();
        let expected = Polynomial::from_terms([
            (Monomial::var_pow(VariableId::x(1, 1), 2), Scalar::one()),
            (
                Monomial::from_pairs([(VariableId::x(1, 1), 1), (VariableId::y(1, 1), 1)]),
                Scalar::from_int(2),
            ),
            (Monomial::var_pow(VariableId::y(1, 1), 2), Scalar::one()),
        ]);
        assert_eq!(&s * &s, expected);
        assert_eq!(s.pow(2), expected);
    }

    #[test]
    fn derivative_and_multi_derivative_agree() {
        let p = (&x11() + &y11()).pow(3);
        let alpha = Monomial::from_pairs([(VariableId::x(1, 1), 1), (VariableId::y(1, 1), 1)]);
        let twice = p.derivative(VariableId::x(1, 1)).derivative(VariableId::y(1, 1));
        assert_eq!(p.derivative_multi(&alpha), twice);
    }

    #[test]
    fn monomial_division() {
        let a = Monomial::from_pairs([(VariableId::x(1, 1), 2), (VariableId::y(2, 1), 1)]);
        let b = Monomial::var(VariableId::x(1, 1));
        assert_eq!(
            a.div(&b).unwrap(),
            Monomial::from_pairs([(VariableId::x(1, 1), 1), (VariableId::y(2, 1), 1)])
        );
        assert!(b.div(&a).is_none());
        assert!(a.div(&Monomial::var(VariableId::z(1))).is_none());
    }
}
