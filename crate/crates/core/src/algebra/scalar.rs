//! Exact coefficients: Gaussian rationals times Laurent monomials in a formal `π`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `re + i·im` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        GaussRat::new(rat(n, d), BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        GaussRat::new(r, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`, always rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({} - {}i)", self.re, -self.im.clone())
                } else {
                    write!(f, "({} + {}i)", self.re, self.im)
                }
            }
        }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => r.to_f64().unwrap_or(f64::NAN),
    }
}

/// `Σ_k c_k π^k` with `c_k ∈ Q(i)`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: BTreeMap<i32, GaussRat>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_gauss(0, GaussRat::one())
    }

    pub fn i() -> Self {
        Scalar::from_gauss(0, GaussRat::i())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(0, GaussRat::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(0, GaussRat::from_ratio(n, d))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::from_gauss(0, GaussRat::from_rational(r))
    }

    /// `π^k`.
    pub fn pi_pow(k: i32) -> Self {
        Scalar::from_gauss(k, GaussRat::one())
    }

    /// `c · π^k`.
    pub fn from_gauss(k: i32, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Scalar { terms }
    }

    /// `(n/d) · π^k`.
    pub fn rational_pi(n: i64, d: i64, k: i32) -> Self {
        Scalar::from_gauss(k, GaussRat::from_ratio(n, d))
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRat)>>(it: I) -> Self {
        let mut s = Scalar::zero();
        for (k, c) in it {
            s.add_term(k, &c);
        }
        s
    }

    fn add_term(&mut self, k: i32, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&k) {
            Some(v) => {
                *v = &*v + c;
                v.is_zero()
            }
            None => {
                self.terms.insert(k, c.clone());
                false
            }
        };
        if remove {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRat)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient when the scalar is free of `π`.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(k, c)` when the scalar is a single term `c·π^k`.
    pub fn as_monomial(&self) -> Option<(i32, &GaussRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn shift_pi(&self, k: i32) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Inverse of a single-term scalar.
    pub fn inv(&self) -> Option<Self> {
        let (k, c) = self.as_monomial()?;
        Some(Scalar::from_gauss(-k, c.inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric value with `π` substituted.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.terms() {
            let w = std::f64::consts::PI.powi(k);
            let (a, b) = c.to_f64_pair();
            re += a * w;
            im += b * w;
        }
        (re, im)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut s = self.clone();
        for (k, c) in &o.terms {
            s.add_term(*k, c);
        }
        s
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut s = self.clone();
        for (k, c) in &o.terms {
            s.add_term(*k, &-c);
        }
        s
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut s = Scalar::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                s.add_term(a + b, &(x * y));
            }
        }
        s
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}·π", c)?,
                _ => write!(f, "{}·π^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let a = Scalar::rational_pi(1, 2, 1);
        let b = Scalar::rational_pi(-1, 2, 1);
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).len(), 0);
    }

    #[test]
    fn rationals_are_reduced() {
        let a = Scalar::from_ratio(2, 4);
        assert_eq!(a, Scalar::from_ratio(1, 2));
        let (_, c) = Scalar::from_ratio(3, -6).as_monomial().map(|(k, c)| (k, c.clone())).unwrap();
        assert!(c.re.denom().is_positive());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn pi_laurent_exponents_cancel() {
        let a = Scalar::rational_pi(4, 1, 1);
        let b = Scalar::rational_pi(1, 4, -1);
        assert!((&a * &b).is_one());
        assert_eq!(a.inv().unwrap(), b);
    }

    #[test]
    fn conj_flips_imaginary_part() {
        let z = &Scalar::from_int(3) + &Scalar::i().shift_pi(2);
        assert_eq!(z.conj(), &Scalar::from_int(3) - &Scalar::i().shift_pi(2));
    }
}
