//! The relative Lie algebra differential and `K`-invariance.

use std::collections::VecDeque;

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cochain::GKCochain;
use crate::algebra::linalg::{nullspace, Echelon, SparseVec};
use crate::algebra::{Form, GaussRat, Monomial, Polynomial, Scalar, VarKind, VariableId, WedgeGen, WedgeMonomial};
use crate::error::{Error, Result};
use crate::oscillator::upq::{ColumnKind, KElem, Realization};
use crate::oscillator::{ModelTag, Signature};

pub fn realization_for(c: &GKCochain) -> Result<Realization> {
    Realization::calibrated(c.sig, c.model)
}

/// `d c = Σ_α ξ^α ∧ ω(x_α) c`.
pub fn gk_differential(c: &GKCochain) -> Result<GKCochain> {
    let real = realization_for(c)?;
    Ok(c.with_form(real.differential().apply(&c.form)))
}

/// The largest of `(ω(κ) + κ)·c` over a basis of `𝔨`; zero iff `c` is invariant.
pub fn k_invariance_residual(c: &GKCochain) -> Result<Form> {
    let real = realization_for(c)?;
    Ok(residual_with(&real, &c.form))
}

pub fn residual_with(real: &Realization, f: &Form) -> Form {
    real.k_basis()
        .iter()
        .map(|k| real.k_act(k, f))
        .max_by_key(Form::total_poly_terms)
        .unwrap_or_default()
}

/// Flips the sign of the first coefficient monomial of `c`.
pub fn corrupt(c: &GKCochain) -> GKCochain {
    let mut terms: Vec<(WedgeMonomial, Polynomial)> =
        c.form.terms().map(|(w, p)| (w.clone(), p.clone())).collect();
    if let Some((_, p)) = terms.first_mut() {
        let first = p.terms().next().map(|(m, s)| (m.clone(), s.clone()));
        if let Some((m, s)) = first {
            p.add_term(m, &(&s * &Scalar::from_int(-2)));
        }
    }
    c.with_form(Form::from_terms(terms))
}

type Key = (WedgeMonomial, Monomial);

fn to_sparse(f: &Form) -> Result<SparseVec<Key>> {
    let mut v = SparseVec::new();
    for (w, p) in f.terms() {
        for (m, s) in p.terms() {
            let g = s.as_gauss().ok_or_else(|| Error::ShapeMismatch(format!("coefficient {s} is not free of π")))?;
            v.insert((w.clone(), m.clone()), g);
        }
    }
    Ok(v)
}

fn from_sparse(v: &SparseVec<Key>) -> Form {
    let mut f = Form::zero();
    for ((w, m), c) in v {
        f.add_term(w.clone(), &Polynomial::term(m.clone(), Scalar::from_gauss(0, c.clone())));
    }
    f
}

fn combine(coeffs: &[GaussRat], basis: &[SparseVec<Key>]) -> SparseVec<Key> {
    let mut acc = SparseVec::new();
    for (c, b) in coeffs.iter().zip(basis) {
        crate::algebra::linalg::axpy(&mut acc, c, b);
    }
    acc
}

/// Outcome of one `d∘d` probe.
#[derive(Clone, Debug)]
pub struct DdProbe {
    pub seed: Form,
    pub closure_dim: usize,
    pub invariant_dim: usize,
    pub projection: Form,
    pub dd: Form,
}

/// The `U(𝔨)`-module generated by `seed`, or `None` past `cap` dimensions.
fn k_closure(real: &Realization, seed: &Form, cap: usize) -> Result<Option<Vec<SparseVec<Key>>>> {
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    let s = to_sparse(seed)?;
    ech.insert(&s);
    basis.push(s);
    queue.push_back(seed.clone());
    while let Some(v) = queue.pop_front() {
        for k in real.k_basis() {
            let w = real.k_act(k, &v);
            let sw = to_sparse(&w)?;
            if ech.insert(&sw) {
                if basis.len() >= cap {
                    return Ok(None);
                }
                basis.push(sw);
                queue.push_back(w);
            }
        }
    }
    Ok(Some(basis))
}

/// Projects `seed` onto the invariants of its `𝔨`-closure `W` along `𝔨W`
/// and returns the projection together with `d∘d` of it.
pub fn dd_probe(real: &Realization, seed: &Form, cap: usize) -> Result<Option<DdProbe>> {
    let Some(basis) = k_closure(real, seed, cap)? else { return Ok(None) };
    let ks: &[KElem] = real.k_basis();
    // invariants: Σ c_i b_i killed by every κ
    let cols: Vec<SparseVec<(usize, Key)>> = basis
        .iter()
        .map(|b| {
            let f = from_sparse(b);
            let mut col = SparseVec::new();
            for (ki, k) in ks.iter().enumerate() {
                for (key, c) in to_sparse(&real.k_act(k, &f))? {
                    col.insert((ki, key), c);
                }
            }
            Ok(col)
        })
        .collect::<Result<_>>()?;
    let inv: Vec<SparseVec<Key>> = nullspace(&cols).iter().map(|c| combine(c, &basis)).collect();
    // 𝔨W
    let mut kw = Echelon::new();
    for b in &basis {
        let f = from_sparse(b);
        for k in ks {
            kw.insert(&to_sparse(&real.k_act(k, &f))?);
        }
    }
    // seed = Σ t_j inv_j + u, u ∈ 𝔨W
    let s = to_sparse(seed)?;
    let mut system: Vec<SparseVec<Key>> = inv.clone();
    system.extend(kw.rows().iter().cloned());
    system.push(s);
    let last = system.len() - 1;
    let sol = nullspace(&system)
        .into_iter()
        .find(|v| !v[last].is_zero())
        .ok_or_else(|| Error::ShapeMismatch("seed outside W^K ⊕ 𝔨W".into()))?;
    let scale = (-&sol[last]).inv().expect("nonzero");
    let t: Vec<GaussRat> = sol[..inv.len()].iter().map(|x| x * &scale).collect();
    let projection = from_sparse(&combine(&t, &inv));
    let d = real.differential();
    let dd = d.apply(&d.apply(&projection));
    Ok(Some(DdProbe { seed: seed.clone(), closure_dim: basis.len(), invariant_dim: inv.len(), projection, dd }))
}

fn layout_variables(real: &Realization) -> Vec<VariableId> {
    let sig = real.sig();
    let mut out = Vec::new();
    for col in &real.layout.columns {
        let kinds: &[(VarKind, VarKind)] = match col.kind {
            ColumnKind::HolFock | ColumnKind::OrthFock | ColumnKind::OrthSchrodinger => &[(VarKind::X, VarKind::Y)],
            ColumnKind::ConjFock => &[(VarKind::Xbar, VarKind::Ybar)],
            ColumnKind::Schrodinger => &[(VarKind::X, VarKind::Y), (VarKind::Xbar, VarKind::Ybar)],
        };
        for &(xk, yk) in kinds {
            out.extend((1..=sig.p).map(|i| VariableId::new(xk, i, col.index)));
            out.extend((1..=sig.q).map(|j| VariableId::new(yk, j, col.index)));
        }
    }
    out
}

fn torus_eigenvalues(real: &Realization, torus: &[&KElem], f: &Form) -> Result<Vec<i64>> {
    torus
        .iter()
        .map(|k| {
            let s = real
                .k_act(k, f)
                .ratio_to(f)
                .ok_or_else(|| Error::ShapeMismatch(format!("{f} is not a torus eigenvector")))?;
            s.as_gauss()
                .filter(|g| g.im.is_zero() && g.re.is_integer())
                .and_then(|g| g.re.to_integer().to_i64())
                .ok_or_else(|| Error::ShapeMismatch(format!("torus eigenvalue {s} is not an integer")))
        })
        .collect()
}

/// Torus weights of one-term cochains: a constant shift plus additive
/// contributions of generators and variables. Each variable moves a single
/// weight coordinate by `±1`.
struct WeightTable {
    shift: Vec<i64>,
    gens: Vec<(WedgeGen, Vec<i64>)>,
    /// `(coordinate, direction, variable)`.
    vars: Vec<(usize, i64, VariableId)>,
}

impl WeightTable {
    fn new(real: &Realization) -> Result<Self> {
        let torus = real.torus();
        let shift = torus_eigenvalues(real, &torus, &Form::unit())?;
        let minus_shift = |w: Vec<i64>| w.iter().zip(&shift).map(|(a, b)| a - b).collect::<Vec<_>>();
        let mut gens = Vec::new();
        for e in real.p_basis() {
            gens.push((e.gen, minus_shift(torus_eigenvalues(real, &torus, &Form::gen(e.gen))?)));
        }
        let mut vars = Vec::new();
        for v in layout_variables(real) {
            let w = minus_shift(torus_eigenvalues(real, &torus, &Form::from_poly(Polynomial::var(v)))?);
            let nz: Vec<(usize, i64)> = w.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
            match nz.as_slice() {
                [(c, d)] if d.abs() == 1 => vars.push((*c, *d, v)),
                _ => return Err(Error::ShapeMismatch(format!("variable {v} has weight {w:?}"))),
            }
        }
        Ok(WeightTable { shift, gens, vars })
    }

    /// Net variable displacement needed to bring `subset` to weight zero, if reachable.
    fn target(&self, subset: usize) -> Option<Vec<i64>> {
        let mut t: Vec<i64> = self.shift.iter().map(|x| -x).collect();
        for (i, (_, w)) in self.gens.iter().enumerate() {
            if subset >> i & 1 == 1 {
                t.iter_mut().zip(w).for_each(|(a, b)| *a -= b);
            }
        }
        let reachable = t.iter().enumerate().all(|(c, &tc)| {
            tc == 0 || self.vars.iter().any(|&(vc, d, _)| vc == c && d == tc.signum())
        });
        reachable.then_some(t)
    }
}

/// Sampler of one-term cochains of torus weight zero.
pub struct SeedSampler {
    table: WeightTable,
    /// Reachable generator subsets of low total degree with their displacements.
    subsets: Vec<(usize, Vec<i64>)>,
}

impl SeedSampler {
    pub fn new(real: &Realization) -> Result<Self> {
        let table = WeightTable::new(real)?;
        let n = table.gens.len();
        if n > 16 {
            return Err(Error::ShapeMismatch(format!("{n} generators is beyond the sweep bounds")));
        }
        let all: Vec<(usize, Vec<i64>)> = (0..1usize << n).filter_map(|s| table.target(s).map(|t| (s, t))).collect();
        let degree = |(s, t): &(usize, Vec<i64>)| s.count_ones() as i64 + t.iter().map(|x| x.abs()).sum::<i64>();
        let low = all.iter().map(degree).min().unwrap_or(0);
        let subsets = all.into_iter().filter(|e| degree(e) <= low + 3).collect();
        Ok(SeedSampler { table, subsets })
    }

    /// No one-term cochain of torus weight zero exists, so the invariant complex is zero.
    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Option<Form> {
        if self.subsets.is_empty() {
            return None;
        }
        let (subset, target) = &self.subsets[rng.gen_range(0..self.subsets.len())];
        let gens: Vec<WedgeGen> =
            self.table.gens.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, (g, _))| *g).collect();
        let (_, w) = WedgeMonomial::from_product(&gens)?;
        let mut picked = Vec::new();
        let pick = |c: usize, d: i64, rng: &mut ChaCha8Rng| {
            let pool: Vec<VariableId> =
                self.table.vars.iter().filter(|&&(vc, vd, _)| vc == c && vd == d).map(|&(_, _, v)| v).collect();
            (!pool.is_empty()).then(|| pool[rng.gen_range(0..pool.len())])
        };
        for (c, &tc) in target.iter().enumerate() {
            for _ in 0..tc.abs() {
                picked.push(pick(c, tc.signum(), rng)?);
            }
        }
        // optional cancelling pair for variety
        if rng.gen_bool(0.5) && !target.is_empty() {
            let c = rng.gen_range(0..target.len());
            if let (Some(a), Some(b)) = (pick(c, 1, rng), pick(c, -1, rng)) {
                picked.extend([a, b]);
            }
        }
        let mono = Monomial::from_pairs(picked.into_iter().map(|v| (v, 1)));
        Some(Form::term(w, Polynomial::term(mono, Scalar::one())))
    }
}

#[derive(Clone, Debug)]
pub struct DdReport {
    pub sig: Signature,
    pub probes: Vec<DdProbe>,
    pub requested: usize,
    /// No weight-zero cochain exists; the `K`-invariant complex is zero.
    pub vacuous: bool,
}

impl DdReport {
    pub fn all_zero(&self) -> bool {
        if self.vacuous {
            return self.probes.is_empty();
        }
        self.probes.len() == self.requested && self.probes.iter().all(|p| p.dd.is_zero() && !p.projection.is_zero())
    }
}

/// `d∘d` on the invariant projections of `count` random seeds.
pub fn dd_sweep(sig: Signature, count: usize, seed: u64) -> Result<DdReport> {
    let real = Realization::calibrated(sig, ModelTag::Fock)?;
    let sampler = SeedSampler::new(&real)?;
    if sampler.is_empty() {
        return Ok(DdReport { sig, probes: Vec::new(), requested: count, vacuous: true });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes = Vec::new();
    let mut attempts = 0;
    while probes.len() < count && attempts < 50 * count.max(1) {
        attempts += 1;
        let Some(f) = sampler.sample(&mut rng) else { continue };
        if let Some(probe) = dd_probe(&real, &f, 400)? {
            if !probe.projection.is_zero() {
                probes.push(probe);
            }
        }
    }
    Ok(DdReport { sig, probes, requested: count, vacuous: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::fock::{build_psi_cup, build_psi_q};

    #[test]
    fn unit_differential() {
        let sig = Signature::unitary(1, 1, 1, 0);
        let d = gk_differential(&GKCochain::unit(sig, ModelTag::Fock)).unwrap();
        let xy = Polynomial::var(VariableId::x(1, 1)) * Polynomial::var(VariableId::y(1, 1));
        let expected = Form::term(WedgeMonomial::gen(WedgeGen::xibar(1, 1)), xy.scale(&Scalar::i()));
        assert_eq!(d.form, expected);
    }

    #[test]
    fn psi_is_closed() {
        let sig = Signature::unitary(2, 1, 1, 0);
        let c = build_psi_q(sig, 1).unwrap();
        assert!(gk_differential(&c).unwrap().is_zero());
    }

    #[test]
    fn cup_is_invariant_and_corruption_is_not() {
        let sig = Signature::unitary(2, 1, 1, 0);
        let c = build_psi_cup(sig).unwrap();
        assert!(k_invariance_residual(&c).unwrap().is_zero());
        assert!(!k_invariance_residual(&corrupt(&c)).unwrap().is_zero());
    }

    #[test]
    fn dd_vanishes_on_invariant_projection() {
        let r = dd_sweep(Signature::unitary(1, 1, 1, 1), 3, 7).unwrap();
        assert!(r.all_zero(), "{} probes", r.probes.len());
    }

    #[test]
    fn seeds_have_weight_zero() {
        let real = Realization::calibrated(Signature::unitary(2, 1, 1, 0), ModelTag::Fock).unwrap();
        let sampler = SeedSampler::new(&real).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let f = sampler.sample(&mut rng).unwrap();
            assert!(real.torus().iter().all(|k| real.k_act(k, &f).is_zero()), "{f}");
        }
    }

    #[test]
    fn too_many_columns_leave_no_invariants() {
        let real = Realization::calibrated(Signature::unitary(1, 1, 2, 0), ModelTag::Fock).unwrap();
        assert!(SeedSampler::new(&real).unwrap().is_empty());
        assert!(dd_sweep(Signature::unitary(1, 1, 2, 0), 5, 0).unwrap().vacuous);
    }
}
