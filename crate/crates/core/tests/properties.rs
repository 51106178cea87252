#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use theta_forms::algebra::{Form, GaussRat, LinOp, Monomial, Polynomial, Scalar, VariableId, WedgeGen, WedgeMonomial};
use theta_forms::export::{export_form, parse_form, Format};
use theta_forms::forms::GKCochain;
use theta_forms::oscillator::{ModelTag, Signature};
use theta_forms::theta::{enumerate_vectors, fourier_assemble, rep_numbers, Convention, GramMatrix, WhittakerPoint};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-2i32..=2, -9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4), 1..3).prop_map(|ts| {
        Scalar::from_terms(ts.into_iter().map(|(k, a, b, c, d)| (k, GaussRat::new(rat(a, b), rat(c, d)))))
    })
}

fn variable() -> impl Strategy<Value = VariableId> {
    prop_oneof![
        (1u16..=2, 1u16..=2).prop_map(|(i, j)| VariableId::x(i, j)),
        (1u16..=2, 1u16..=2).prop_map(|(i, j)| VariableId::xbar(i, j)),
    ]
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec((variable(), 1u32..=2), 0..3), scalar()), 0..4).prop_map(|ts| {
        Polynomial::from_terms(ts.into_iter().map(|(m, c)| (Monomial::from_pairs(m), c)))
    })
}

fn wedge_gen() -> impl Strategy<Value = WedgeGen> {
    prop_oneof![
        (1u16..=2, 1u16..=2).prop_map(|(l, j)| WedgeGen::xi(l, j)),
        (1u16..=2, 1u16..=2).prop_map(|(l, j)| WedgeGen::xibar(l, j)),
    ]
}

fn form() -> impl Strategy<Value = Form> {
    prop::collection::vec((prop::collection::vec(wedge_gen(), 0..3), polynomial()), 0..4).prop_map(|ts| {
        Form::from_terms(ts.into_iter().filter_map(|(gens, p)| {
            WedgeMonomial::from_product(&gens).map(|(s, w)| (w, p.scale(&Scalar::from_int(s as i64))))
        }))
    })
}

fn first_order_op() -> impl Strategy<Value = LinOp> {
    prop::collection::vec((polynomial(), prop::option::of(variable())), 1..3).prop_map(|ts| {
        ts.into_iter().fold(LinOp::zero(), |acc, (p, v)| {
            let alpha = v.map(|v| Monomial::from_pairs([(v, 1)])).unwrap_or_else(|| Monomial::from_pairs([]));
            &acc + &LinOp::term(p, alpha)
        })
    })
}

/// Positive definite by strict diagonal dominance, even diagonal.
fn dominant_gram() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3).prop_flat_map(|d| {
        prop::collection::vec(-1i64..=1, d * (d - 1) / 2).prop_flat_map(move |off| {
            prop::collection::vec(0i64..=1, d).prop_map(move |extra| {
                let mut g = vec![vec![0; d]; d];
                let mut k = 0;
                for i in 0..d {
                    for j in i + 1..d {
                        g[i][j] = off[k];
                        g[j][i] = off[k];
                        k += 1;
                    }
                }
                for i in 0..d {
                    let row: i64 = g[i].iter().map(|v| v.abs()).sum();
                    let base = row + 1;
                    g[i][i] = 2 * ((base + 1) / 2 + extra[i]);
                }
                g
            })
        })
    })
}

fn brute_force(g: &[Vec<i64>], n_max: u64) -> Vec<u64> {
    let d = g.len();
    let radius = 2 * n_max as i64 + 1;
    let width = (2 * radius + 1) as usize;
    let mut out = vec![0u64; n_max as usize + 1];
    for idx in 0..width.pow(d as u32) {
        let mut rest = idx;
        let x: Vec<i64> = (0..d)
            .map(|_| {
                let v = (rest % width) as i64 - radius;
                rest /= width;
                v
            })
            .collect();
        let q: i64 = (0..d).map(|i| (0..d).map(|j| x[i] * g[i][j] * x[j]).sum::<i64>()).sum();
        if (q / 2) as u64 <= n_max {
            out[(q / 2) as usize] += 1;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn json_round_trip(f in form()) {
        let c = GKCochain::new(Signature::unitary(2, 2, 2, 2), ModelTag::Fock, f);
        let text = export_form(&c, Format::Json);
        prop_assert_eq!(parse_form(&text).unwrap(), c);
    }

    #[test]
    fn wedge_is_graded_commutative_on_one_forms(a in wedge_gen(), b in wedge_gen(), p in polynomial(), q in polynomial()) {
        let fa = Form::term(WedgeMonomial::gen(a), p);
        let fb = Form::term(WedgeMonomial::gen(b), q);
        prop_assert_eq!(fa.wedge(&fb), fb.wedge(&fa).scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn wedge_is_associative(a in form(), b in form(), c in form()) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn commutators_satisfy_jacobi(a in first_order_op(), b in first_order_op(), c in first_order_op()) {
        let cyc = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a))) + &c.commutator(&a.commutator(&b));
        prop_assert!(cyc.is_zero());
    }

    #[test]
    fn operators_compose_as_functions(a in first_order_op(), b in first_order_op(), p in polynomial()) {
        prop_assert_eq!(a.compose(&b).apply(&p), a.apply(&b.apply(&p)));
    }

    #[test]
    fn enumeration_is_symmetric_and_bounded(g in dominant_gram(), bound in 0i64..=3) {
        let gram = GramMatrix::from_integers(&g).unwrap();
        let vs = enumerate_vectors(&gram, &rat(bound, 1));
        for v in &vs {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            prop_assert!(vs.contains(&neg));
            let q: i64 = (0..g.len()).map(|i| (0..g.len()).map(|j| v[i] * g[i][j] * v[j]).sum::<i64>()).sum();
            prop_assert!(q <= 2 * bound);
        }
    }

    #[test]
    fn rep_numbers_match_brute_force(g in dominant_gram(), n_max in 0u64..=3) {
        let gram = GramMatrix::from_integers(&g).unwrap();
        prop_assert_eq!(rep_numbers(&gram, n_max), brute_force(&g, n_max));
    }

    #[test]
    fn fourier_assembly_is_linear(a in -3i64..=3, b in -3i64..=3, t in 0.5f64..2.0, u in -1.0f64..1.0) {
        let g = GramMatrix::from_integers(&[vec![2, 1], vec![1, 2]]).unwrap();
        let pt = WhittakerPoint::scalar(t, u).unwrap();
        let w1 = |x: &[i64]| rat(x[0] * x[0], 1);
        let w2 = |x: &[i64]| rat(x[0] * x[1] + 1, 1);
        let run = |w: &dyn Fn(&[i64]) -> BigRational| fourier_assemble(&g, w, &pt, 4, 2, Convention::Classical).unwrap();
        let combined = run(&|x| rat(a, 1) * w1(x) + rat(b, 1) * w2(x));
        let (f1, f2) = (run(&w1), run(&w2));
        for n in 0..combined.len() {
            let expected = f1[n] * a as f64 + f2[n] * b as f64;
            prop_assert!((combined[n] - expected).norm() <= 1e-9 * (1.0 + expected.norm()));
        }
    }
}
