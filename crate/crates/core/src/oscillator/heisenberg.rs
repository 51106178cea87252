//! Heisenberg and symplectic actions on a flat `N`-dimensional model.
//!
//! In the Schrödinger model every element is `poly · φ₀` with the gaussian
//! `φ₀ = exp(−π Σ x_j²)` left implicit. Operators here act on the polynomial
//! factor: conjugating by `φ₀` turns `∂/∂x_j` into `∂/∂x_j − 2π x_j`.

use crate::algebra::{LinOp, Polynomial, Scalar, VariableId};
use crate::error::{check_index, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlatModel {
    Fock,
    Schrodinger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeisenbergGen {
    E,
    F,
    /// Lowering combination; kills the vacuum.
    WPrime,
    /// Raising combination.
    WDoublePrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ladder {
    Plus,
    Minus,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpBlock {
    K11,
    P20,
    P02,
}

fn coord(j: usize) -> VariableId {
    VariableId::z(j as u16)
}

fn x(j: usize) -> LinOp {
    LinOp::mul_var(coord(j))
}

fn dx(j: usize) -> LinOp {
    LinOp::deriv(coord(j))
}

fn pi_times(n: i64) -> Scalar {
    Scalar::rational_pi(n, 1, 1)
}

/// Conjugated `∂/∂x_j`, i.e. the derivative of `poly·φ₀` divided by `φ₀`.
fn dx_gauss(j: usize) -> LinOp {
    &dx(j) - &x(j).scale(&pi_times(2))
}

pub fn heisenberg_op(model: FlatModel, gen: HeisenbergGen, j: usize, n: usize) -> Result<LinOp> {
    check_index("coordinate", j, n)?;
    Ok(match model {
        FlatModel::Schrodinger => match gen {
            HeisenbergGen::E => -dx_gauss(j),
            HeisenbergGen::F => x(j).scale(&(&Scalar::i() * &pi_times(-2))),
            HeisenbergGen::WPrime => -ladder_unchecked(Ladder::Plus, j),
            HeisenbergGen::WDoublePrime => -ladder_unchecked(Ladder::Minus, j),
        },
        FlatModel::Fock => {
            let wp = dx(j).scale(&pi_times(-4));
            let wpp = x(j);
            let half = Scalar::from_ratio(1, 2);
            match gen {
                HeisenbergGen::WPrime => wp,
                HeisenbergGen::WDoublePrime => wpp,
                HeisenbergGen::E => (&wp + &wpp).scale(&half),
                HeisenbergGen::F => (&wp - &wpp).scale(&(&Scalar::i() * &half)),
            }
        }
    })
}

fn ladder_unchecked(kind: Ladder, j: usize) -> LinOp {
    let two_pi_x = x(j).scale(&pi_times(2));
    match kind {
        // ∂ + 2πx conjugated by φ₀
        Ladder::Plus => &dx_gauss(j) + &two_pi_x,
        Ladder::Minus => &dx_gauss(j) - &two_pi_x,
        Ladder::H => {
            let p = ladder_unchecked(Ladder::Plus, j);
            let m = ladder_unchecked(Ladder::Minus, j);
            &p.compose(&m) + &m.compose(&p)
        }
    }
}

/// `A_j^±` and `H_j` on the polynomial factor of the Schrödinger model.
pub fn ladder_op(kind: Ladder, j: usize, n: usize) -> Result<LinOp> {
    check_index("coordinate", j, n)?;
    Ok(ladder_unchecked(kind, j))
}

/// Degree-two operators spanning the symplectic Lie algebra.
pub fn sp_op(model: FlatModel, block: SpBlock, j: usize, k: usize, n: usize) -> Result<LinOp> {
    check_index("coordinate", j, n)?;
    check_index("coordinate", k, n)?;
    let i = Scalar::i();
    let fock = match block {
        SpBlock::K11 => {
            // −i(z_k ∂_j + ∂_j z_k)
            let a = x(k).compose(&dx(j));
            let b = dx(j).compose(&x(k));
            (&a + &b).scale(&-&i)
        }
        SpBlock::P20 => x(j).compose(&x(k)).scale(&i),
        SpBlock::P02 => dx(j).compose(&dx(k)).scale(&(&i * &Scalar::from_int(4))),
    };
    Ok(match model {
        FlatModel::Fock => fock,
        FlatModel::Schrodinger => {
            let quarter_over_pi = Scalar::rational_pi(1, 4, -1);
            fock.substitute(
                &|v: VariableId| {
                    let j = v.row as usize;
                    -ladder_unchecked(Ladder::Minus, j)
                },
                &|v: VariableId| dx(v.row as usize).scale(&quarter_over_pi),
            )
        }
    })
}

/// The vacuum polynomial factor, `1`.
pub fn vacuum() -> Polynomial {
    Polynomial::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fock_raising_is_multiplication() {
        let w = heisenberg_op(FlatModel::Fock, HeisenbergGen::WDoublePrime, 1, 1).unwrap();
        assert_eq!(w, LinOp::mul_var(VariableId::z(1)));
    }

    #[test]
    fn schrodinger_f_is_multiplication() {
        let f = heisenberg_op(FlatModel::Schrodinger, HeisenbergGen::F, 1, 1).unwrap();
        let expected = LinOp::mul_var(VariableId::z(1)).scale(&(&Scalar::i() * &Scalar::rational_pi(-2, 1, 1)));
        assert_eq!(f, expected);
    }

    #[test]
    fn lowering_kills_vacuum() {
        let w = heisenberg_op(FlatModel::Schrodinger, HeisenbergGen::WPrime, 1, 1).unwrap();
        assert!(w.apply(&vacuum()).is_zero());
        let a = ladder_op(Ladder::Plus, 1, 1).unwrap();
        assert!(a.apply(&vacuum()).is_zero());
    }

    #[test]
    fn ladder_relations() {
        let ap = ladder_op(Ladder::Plus, 1, 2).unwrap();
        let am = ladder_op(Ladder::Minus, 1, 2).unwrap();
        let am2 = ladder_op(Ladder::Minus, 2, 2).unwrap();
        let h = ladder_op(Ladder::H, 1, 2).unwrap();
        assert_eq!(ap.commutator(&am), LinOp::scalar(Scalar::rational_pi(-4, 1, 1)));
        assert!(ap.commutator(&am2).is_zero());
        assert_eq!(h.commutator(&ap), ap.scale(&Scalar::rational_pi(8, 1, 1)));
        assert_eq!(h.apply(&vacuum()), Polynomial::constant(Scalar::rational_pi(-4, 1, 1)));
    }

    #[test]
    fn p02_on_product() {
        let op = sp_op(FlatModel::Fock, SpBlock::P02, 1, 2, 2).unwrap();
        let p = Polynomial::var(VariableId::z(1)) * Polynomial::var(VariableId::z(2));
        assert_eq!(op.apply(&p), Polynomial::constant(&Scalar::i() * &Scalar::from_int(4)));
    }

    #[test]
    fn out_of_range() {
        assert!(ladder_op(Ladder::Plus, 3, 2).is_err());
        assert!(heisenberg_op(FlatModel::Fock, HeisenbergGen::E, 0, 2).is_err());
    }
}
