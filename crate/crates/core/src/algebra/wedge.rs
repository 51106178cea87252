//! Exterior algebra on the generators `ξ_{i,j}`, `ξ̄_{i,j}` with polynomial
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use super::linop::LinOp;
use super::polynomial::Polynomial;
use super::scalar::Scalar;
use super::variable::VariableId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WedgeKind {
    Xi,
    Xibar,
}

impl WedgeKind {
    pub fn name(self) -> &'static str {
        match self {
            WedgeKind::Xi => "xi",
            WedgeKind::Xibar => "xibar",
        }
    }

    pub fn conj(self) -> WedgeKind {
        match self {
            WedgeKind::Xi => WedgeKind::Xibar,
            WedgeKind::Xibar => WedgeKind::Xi,
        }
    }
}

/// `ξ_{row,col}` or `ξ̄_{row,col}`; rows index `1..=p`, columns `1..=q`.
/// Field order gives the `(kind, col, row)` ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeGen {
    pub kind: WedgeKind,
    pub col: u16,
    pub row: u16,
}

impl WedgeGen {
    pub fn xi(row: u16, col: u16) -> Self {
        WedgeGen { kind: WedgeKind::Xi, col, row }
    }

    pub fn xibar(row: u16, col: u16) -> Self {
        WedgeGen { kind: WedgeKind::Xibar, col, row }
    }

    pub fn new(kind: WedgeKind, row: u16, col: u16) -> Self {
        WedgeGen { kind, col, row }
    }

    pub fn conj(self) -> Self {
        WedgeGen { kind: self.kind.conj(), ..self }
    }
}

impl fmt::Display for WedgeGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind.name(), self.row, self.col)
    }
}

impl FromStr for WedgeGen {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("malformed generator `{s}`"));
        }
        let kind = match parts[0] {
            "xi" => WedgeKind::Xi,
            "xibar" => WedgeKind::Xibar,
            other => return Err(format!("unknown generator kind `{other}`")),
        };
        let row = parts[1].parse::<u16>().map_err(|e| format!("{s}: {e}"))?;
        let col = parts[2].parse::<u16>().map_err(|e| format!("{s}: {e}"))?;
        if row == 0 || col == 0 {
            return Err(format!("indices are 1-based in `{s}`"));
        }
        Ok(WedgeGen::new(kind, row, col))
    }
}

/// A strictly increasing list of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WedgeMonomial(Vec<WedgeGen>);

impl WedgeMonomial {
    pub fn empty() -> Self {
        WedgeMonomial(Vec::new())
    }

    pub fn gen(g: WedgeGen) -> Self {
        WedgeMonomial(vec![g])
    }

    /// Sorts an arbitrary product `g_1 ∧ … ∧ g_n`, returning the sign, or
    /// `None` if a generator repeats.
    pub fn from_product(gens: &[WedgeGen]) -> Option<(i32, WedgeMonomial)> {
        let mut v = gens.to_vec();
        let mut sign = 1;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, WedgeMonomial(v)))
    }

    pub fn gens(&self) -> &[WedgeGen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(#ξ, #ξ̄)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let a = self.0.iter().filter(|g| g.kind == WedgeKind::Xi).count();
        (a, self.0.len() - a)
    }

    pub fn contains(&self, g: WedgeGen) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    /// `self ∧ other` as `(sign, monomial)`.
    pub fn wedge(&self, other: &WedgeMonomial) -> Option<(i32, WedgeMonomial)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut inversions = 0usize;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    // b[j] jumps over the remaining a's
                    inversions += a.len() - i;
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, WedgeMonomial(out)))
    }

    pub fn map_gens<F: Fn(WedgeGen) -> WedgeGen>(&self, f: F) -> Option<(i32, WedgeMonomial)> {
        let mapped: Vec<WedgeGen> = self.0.iter().map(|g| f(*g)).collect();
        WedgeMonomial::from_product(&mapped)
    }
}

impl fmt::Display for WedgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "∧")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A polynomial-valued exterior form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Form {
    terms: BTreeMap<WedgeMonomial, Polynomial>,
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }

    pub fn unit() -> Self {
        Form::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Form::term(WedgeMonomial::empty(), p)
    }

    pub fn gen(g: WedgeGen) -> Self {
        Form::term(WedgeMonomial::gen(g), Polynomial::one())
    }

    pub fn term(w: WedgeMonomial, p: Polynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(w, p);
        }
        Form { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (WedgeMonomial, Polynomial)>>(it: I) -> Self {
        let mut f = Form::zero();
        for (w, p) in it {
            f.add_term(w, &p);
        }
        f
    }

    pub fn add_term(&mut self, w: WedgeMonomial, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&w) {
            Some(v) => {
                v.add_assign(p);
                v.is_zero()
            }
            None => {
                self.terms.insert(w, p.clone());
                return;
            }
        };
        if remove {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, o: &Form) {
        for (w, p) in &o.terms {
            self.add_term(w.clone(), p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &Polynomial)> {
        self.terms.iter()
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

    pub fn coefficient(&self, w: &WedgeMonomial) -> Polynomial {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn bidegrees(&self) -> std::collections::BTreeSet<(usize, usize)> {
        self.terms.keys().map(WedgeMonomial::bidegree).collect()
    }

    /// Common total degree, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(WedgeMonomial::degree);
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                if let Some((s, w)) = a.wedge(b) {
                    let c = p * q;
                    let c = if s < 0 { -c } else { c };
                    out.add_term(w, &c);
                }
            }
        }
        out
    }

    /// Left exterior multiplication by a single generator.
    pub fn left_mul_gen(&self, g: WedgeGen) -> Form {
        let gm = WedgeMonomial::gen(g);
        let mut out = Form::zero();
        for (w, p) in &self.terms {
            if let Some((s, m)) = gm.wedge(w) {
                out.add_term(m, &if s < 0 { -p } else { p.clone() });
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        Form::from_terms(self.terms.iter().map(|(w, p)| (w.clone(), p.scale(c))))
    }

    pub fn mul_poly(&self, q: &Polynomial) -> Form {
        Form::from_terms(self.terms.iter().map(|(w, p)| (w.clone(), p * q)))
    }

    /// Applies an operator to every coefficient.
    pub fn apply_op(&self, op: &LinOp) -> Form {
        Form::from_terms(self.terms.iter().map(|(w, p)| (w.clone(), op.apply(p))))
    }

    pub fn map_coeffs<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> Form {
        Form::from_terms(self.terms.iter().map(|(w, p)| (w.clone(), f(p))))
    }

    /// Relabels generators and variables; generator reordering signs are
    /// recomputed, and collisions vanish.
    pub fn relabel<G, V>(&self, g: G, v: V) -> Form
    where
        G: Fn(WedgeGen) -> WedgeGen,
        V: Fn(VariableId) -> VariableId,
    {
        let mut out = Form::zero();
        for (w, p) in &self.terms {
            if let Some((s, m)) = w.map_gens(&g) {
                let q = p.map_vars(&v);
                out.add_term(m, &if s < 0 { -q } else { q });
            }
        }
        out
    }

    /// Complex conjugation: `X ↔ X̄`, `ξ ↔ ξ̄`, `i ↦ −i`.
    pub fn conj(&self) -> Form {
        let mut out = Form::zero();
        for (w, p) in &self.terms {
            if let Some((s, m)) = w.map_gens(WedgeGen::conj) {
                let q = p.conj();
                out.add_term(m, &if s < 0 { -q } else { q });
            }
        }
        out
    }

    /// Drops every wedge monomial containing a generator matching `pred`.
    pub fn kill_gens<F: Fn(WedgeGen) -> bool>(&self, pred: F) -> Form {
        Form::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| !w.gens().iter().any(|g| pred(*g)))
                .map(|(w, p)| (w.clone(), p.clone())),
        )
    }

    /// Part of the form in wedge degree `(a, b)`.
    pub fn component(&self, bideg: (usize, usize)) -> Form {
        Form::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.bidegree() == bideg)
                .map(|(w, p)| (w.clone(), p.clone())),
        )
    }

    /// Value at the origin of the polynomial variables.
    pub fn at_origin(&self) -> Form {
        Form::from_terms(
            self.terms
                .iter()
                .map(|(w, p)| (w.clone(), Polynomial::constant(p.constant_term()))),
        )
    }

    /// `Some(c)` with `self = c · other`, if the forms are proportional by a scalar.
    pub fn ratio_to(&self, other: &Form) -> Option<Scalar> {
        if other.is_zero() {
            return if self.is_zero() { Some(Scalar::zero()) } else { None };
        }
        let (w0, p0) = other.terms.iter().next()?;
        let (m0, c0) = p0.terms().next()?;
        let c = &self.coefficient(w0).coefficient(m0) * &c0.inv()?;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    pub fn total_poly_terms(&self) -> usize {
        self.terms.values().map(Polynomial::len).sum()
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, o: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, o: &Form) -> Form {
        let mut out = self.clone();
        for (w, p) in &o.terms {
            out.add_term(w.clone(), &-p);
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            terms: self.terms.iter().map(|(w, p)| (w.clone(), -p)).collect(),
        }
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, o: Form) -> Form {
        self.add_assign(&o);
        self
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(self, o: Form) -> Form {
        &self - &o
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "({p}) {w}")?;
        }
        Ok(())
    }
}

/// A form-valued first-order operator `Σ_k ε(g_k) ∘ L_k`: apply `L_k` to the
/// coefficients, then multiply on the left by `g_k`.
#[derive(Clone, Debug, Default)]
pub struct FormOp {
    pub parts: Vec<(WedgeGen, LinOp)>,
}

impl FormOp {
    pub fn new() -> Self {
        FormOp::default()
    }

    pub fn push(&mut self, g: WedgeGen, op: LinOp) {
        if !op.is_zero() {
            self.parts.push((g, op));
        }
    }

    pub fn apply(&self, f: &Form) -> Form {
        let mut out = Form::zero();
        for (g, op) in &self.parts {
            out.add_assign(&f.apply_op(op).left_mul_gen(*g));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternation() {
        let g = Form::gen(WedgeGen::xibar(1, 1));
        assert!(g.wedge(&g).is_zero());
    }

    #[test]
    fn anticommutation() {
        let a = Form::gen(WedgeGen::xibar(2, 1));
        let b = Form::gen(WedgeGen::xibar(1, 1));
        assert_eq!(a.wedge(&b), -b.wedge(&a));
    }

    #[test]
    fn bilinear_coefficients() {
        let x = Polynomial::var(VariableId::x(1, 1));
        let y = Polynomial::var(VariableId::y(1, 1));
        let a = Form::term(WedgeMonomial::gen(WedgeGen::xi(1, 1)), x.clone());
        let b = Form::term(WedgeMonomial::gen(WedgeGen::xibar(1, 1)), y.clone());
        let w = WedgeMonomial::from_product(&[WedgeGen::xi(1, 1), WedgeGen::xibar(1, 1)]).unwrap().1;
        assert_eq!(a.wedge(&b), Form::term(w, &x * &y));
    }

    #[test]
    fn generator_order() {
        assert!(WedgeGen::xi(5, 5) < WedgeGen::xibar(1, 1));
        assert!(WedgeGen::xi(2, 1) < WedgeGen::xi(1, 2));
    }

    #[test]
    fn sort_sign_matches_merge_sign() {
        let gens = [WedgeGen::xibar(2, 1), WedgeGen::xi(1, 1), WedgeGen::xibar(1, 1)];
        let (s, w) = WedgeMonomial::from_product(&gens).unwrap();
        let f = Form::gen(gens[0]).wedge(&Form::gen(gens[1])).wedge(&Form::gen(gens[2]));
        assert_eq!(f, Form::term(w, Polynomial::constant(Scalar::from_int(s as i64))));
    }
}
