//! The Fock → Schrödinger intertwiner and gaussian-relative inner products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::heisenberg::{ladder_op, Ladder};
use crate::algebra::{LinOp, Monomial, Polynomial, Scalar, VariableId};

/// An element `poly · φ₀` of the Schrödinger model; the gaussian is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchrodingerElement {
    pub poly: Polynomial,
}

impl SchrodingerElement {
    pub fn vacuum() -> Self {
        SchrodingerElement { poly: Polynomial::one() }
    }

    pub fn new(poly: Polynomial) -> Self {
        SchrodingerElement { poly }
    }
}

fn lowered(j: usize) -> LinOp {
    // ladder_op only fails on j = 0, never produced here
    -ladder_op(Ladder::Minus, j, j).expect("valid coordinate")
}

/// `T(z^m) = Π_j (−A_j^−)^{m_j} φ₀`, extended linearly.
pub fn intertwine(fock: &Polynomial) -> SchrodingerElement {
    let mut out = Polynomial::zero();
    for (mono, c) in fock.terms() {
        let mut v = Polynomial::one();
        for &(var, e) in mono.pairs() {
            let op = lowered(var.row as usize);
            for _ in 0..e {
                v = op.apply(&v);
            }
        }
        out.add_assign(&v.scale(c));
    }
    SchrodingerElement::new(out)
}

/// `φ_m = Π_j (A_j^−)^{m_j} φ₀`, left unnormalized.
pub fn basis_element(m: &[u32]) -> SchrodingerElement {
    let mut v = Polynomial::one();
    for (j, &e) in m.iter().enumerate() {
        let op = ladder_op(Ladder::Minus, j + 1, m.len()).expect("valid coordinate");
        for _ in 0..e {
            v = op.apply(&v);
        }
    }
    SchrodingerElement::new(v)
}

/// `∫ x^{2n} |φ₀|² / ∫ |φ₀|² = (2n−1)!! / (4π)^n`.
fn moment(e: u32) -> Scalar {
    if e % 2 == 1 {
        return Scalar::zero();
    }
    let n = e / 2;
    let mut df = BigInt::one();
    let mut k = 1u32;
    while k < e {
        df *= BigInt::from(k);
        k += 2;
    }
    let four_n = BigInt::from(4).pow(n);
    Scalar::from_rational(BigRational::new(df, four_n)).shift_pi(-(n as i32))
}

fn monomial_moment(m: &Monomial) -> Scalar {
    let mut acc = Scalar::one();
    for &(_, e) in m.pairs() {
        acc = &acc * &moment(e);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `⟨a, b⟩ / ⟨φ₀, φ₀⟩`, linear in `a`, conjugate-linear in `b`.
pub fn inner_product_rel(a: &SchrodingerElement, b: &SchrodingerElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (ma, ca) in a.poly.terms() {
        for (mb, cb) in b.poly.terms() {
            let w = monomial_moment(&ma.mul(mb));
            if !w.is_zero() {
                acc = &acc + &(&(ca * &cb.conj()) * &w);
            }
        }
    }
    acc
}

/// Coordinate `x_j` as a polynomial.
pub fn coordinate(j: usize) -> Polynomial {
    Polynomial::var(VariableId::z(j as u16))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_goes_to_vacuum() {
        assert_eq!(intertwine(&Polynomial::one()), SchrodingerElement::vacuum());
    }

    #[test]
    fn first_coordinate_image() {
        let t = intertwine(&coordinate(1));
        assert_eq!(t.poly, coordinate(1).scale(&Scalar::rational_pi(4, 1, 1)));
    }

    #[test]
    fn vacuum_has_unit_norm() {
        let v = SchrodingerElement::vacuum();
        assert!(inner_product_rel(&v, &v).is_one());
    }

    #[test]
    fn odd_moment_vanishes() {
        let a = SchrodingerElement::new(coordinate(1));
        assert!(inner_product_rel(&a, &SchrodingerElement::vacuum()).is_zero());
    }

    #[test]
    fn second_moment() {
        let a = SchrodingerElement::new(coordinate(1));
        assert_eq!(inner_product_rel(&a, &a), Scalar::rational_pi(1, 4, -1));
    }
}
