//! The infinitesimal action of `gl(p+q)` (and its real forms `u(p,q)`,
//! `o(p,q)`) on matrix-variable models, column by column.
//!
//! Each column `ν` contributes a copy of the rank-one action; a model is a
//! list of columns of various kinds. Operators are built once per model and
//! indexed by elementary matrices `E_ab`, `1 ≤ a, b ≤ p+q`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::signature::{Family, ModelTag, Signature};
use crate::algebra::{Form, FormOp, LinOp, Scalar, VarKind, VariableId, WedgeGen, WedgeMonomial};
use crate::error::{check_index, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    /// Holomorphic Fock column in `X, Y`.
    HolFock,
    /// Antiholomorphic Fock column in `X̄, Ȳ`.
    ConjFock,
    /// Gaussian-weighted column carrying both `X, Y` and `X̄, Ȳ`.
    Schrodinger,
    /// Real Fock column for the orthogonal family.
    OrthFock,
    /// Real gaussian-weighted column for the orthogonal family.
    OrthSchrodinger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Column {
    pub index: u16,
    pub kind: ColumnKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub sig: Signature,
    pub model: ModelTag,
    pub columns: Vec<Column>,
}

impl Layout {
    pub fn new(sig: Signature, model: ModelTag) -> Result<Layout> {
        let cols = |range: std::ops::RangeInclusive<u16>, kind| range.map(move |index| Column { index, kind });
        let columns: Vec<Column> = match (sig.family, model) {
            (Family::Unitary, ModelTag::Fock) => cols(1..=sig.r, ColumnKind::HolFock)
                .chain(cols(1..=sig.s, ColumnKind::ConjFock))
                .collect(),
            (Family::Unitary, ModelTag::Schrodinger) => {
                if sig.r != sig.s {
                    return Err(Error::ShapeMismatch(format!(
                        "Schrödinger model needs r = s, got r = {}, s = {}",
                        sig.r, sig.s
                    )));
                }
                cols(1..=sig.r, ColumnKind::Schrodinger).collect()
            }
            (Family::Unitary, ModelTag::Mixed { schrodinger_cols }) => {
                if schrodinger_cols != sig.s || sig.s > sig.r {
                    return Err(Error::ShapeMismatch(format!(
                        "mixed model needs {} = s ≤ r for {sig}",
                        schrodinger_cols
                    )));
                }
                cols(1..=sig.s, ColumnKind::Schrodinger)
                    .chain(cols(sig.s + 1..=sig.r, ColumnKind::HolFock))
                    .collect()
            }
            (Family::Orthogonal, ModelTag::Fock) => cols(1..=sig.r, ColumnKind::OrthFock).collect(),
            (Family::Orthogonal, ModelTag::Schrodinger) => {
                cols(1..=sig.r, ColumnKind::OrthSchrodinger).collect()
            }
            (Family::Orthogonal, ModelTag::Mixed { .. }) => {
                return Err(Error::FamilyMismatch("no mixed model for the orthogonal family".into()))
            }
        };
        Ok(Layout { sig, model, columns })
    }
}

/// The two free constants of the `𝔭^±` operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    pub c_plus: Scalar,
    pub c_minus: Scalar,
}

impl Constants {
    /// Starting point read off the symplectic normalization: `i zz`, `4i ∂∂`.
    pub fn ansatz() -> Self {
        Constants { c_plus: Scalar::i(), c_minus: &Scalar::i() * &Scalar::from_int(4) }
    }
}

/// Integer combination of elementary matrices.
pub type GlElem = BTreeMap<(u16, u16), i64>;

pub fn elementary(a: u16, b: u16) -> GlElem {
    [((a, b), 1)].into_iter().collect()
}

pub fn gl_bracket(x: &GlElem, y: &GlElem) -> GlElem {
    let mut out = GlElem::new();
    let mut add = |k: (u16, u16), c: i64| {
        let e = out.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            out.remove(&k);
        }
    };
    for (&(a, b), &c) in x {
        for (&(cc, d), &e) in y {
            if b == cc {
                add((a, d), c * e);
            }
            if d == a {
                add((cc, b), -c * e);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct PElem {
    pub gen: WedgeGen,
    pub matrix: GlElem,
    /// Entry whose coefficient is this element's coordinate.
    pub probe: (u16, u16),
    pub op: LinOp,
}

#[derive(Clone, Debug)]
pub struct KElem {
    pub label: String,
    pub matrix: GlElem,
    pub op: LinOp,
    /// `κ·ξ^α = Σ c ξ^β`, keyed by `α`.
    pub coadjoint: BTreeMap<WedgeGen, Vec<(WedgeGen, i64)>>,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub layout: Layout,
    pub consts: Constants,
    rho: Vec<LinOp>,
    p_basis: Vec<PElem>,
    k_basis: Vec<KElem>,
}

type VarMap = dyn Fn(VariableId) -> LinOp;

/// Rank-one action in the variables of one column.
#[allow(clippy::too_many_arguments)]
fn hol_formula(p: u16, a: u16, b: u16, col: u16, xk: VarKind, yk: VarKind, m: &VarMap, d: &VarMap, k: &Constants) -> LinOp {
    let x = |i| VariableId::new(xk, i, col);
    let y = |j| VariableId::new(yk, j, col);
    match (a <= p, b <= p) {
        (true, true) => m(x(a)).compose(&d(x(b))),
        (true, false) => m(x(a)).compose(&m(y(b - p))).scale(&k.c_plus),
        (false, true) => d(x(b)).compose(&d(y(a - p))).scale(&k.c_minus),
        (false, false) => {
            let (l, j) = (a - p, b - p);
            let mut op = m(y(j)).compose(&d(y(l)));
            if l == j {
                op = &op + &LinOp::identity();
            }
            -op
        }
    }
}

fn plain_m(v: VariableId) -> LinOp {
    LinOp::mul_var(v)
}

fn plain_d(v: VariableId) -> LinOp {
    LinOp::deriv(v)
}

/// `v − c·∂/∂w` with `w` the partner of `v`.
fn shifted(v: VariableId, partner: VariableId, c: Scalar) -> LinOp {
    &LinOp::mul_var(v) - &LinOp::deriv(partner).scale(&c)
}

fn column_rho(p: u16, col: Column, a: u16, b: u16, k: &Constants) -> LinOp {
    use VarKind::*;
    let c = col.index;
    match col.kind {
        ColumnKind::HolFock | ColumnKind::OrthFock => hol_formula(p, a, b, c, X, Y, &plain_m, &plain_d, k),
        ColumnKind::ConjFock => -hol_formula(p, b, a, c, Xbar, Ybar, &plain_m, &plain_d, k),
        ColumnKind::Schrodinger => {
            let half_pi_inv = Scalar::rational_pi(1, 2, -1);
            let m = move |v: VariableId| shifted(v, v.conj(), half_pi_inv.clone());
            &hol_formula(p, a, b, c, X, Y, &m, &plain_d, k) - &hol_formula(p, b, a, c, Xbar, Ybar, &m, &plain_d, k)
        }
        ColumnKind::OrthSchrodinger => {
            let quarter_pi_inv = Scalar::rational_pi(1, 4, -1);
            let m = move |v: VariableId| shifted(v, v, quarter_pi_inv.clone());
            hol_formula(p, a, b, c, X, Y, &m, &plain_d, k)
        }
    }
}

impl Realization {
    pub fn new(layout: Layout, consts: Constants) -> Realization {
        let sig = layout.sig;
        let n = sig.m();
        let mut rho = Vec::with_capacity((n as usize).pow(2));
        for a in 1..=n {
            for b in 1..=n {
                let mut op = LinOp::zero();
                for col in &layout.columns {
                    op = &op + &column_rho(sig.p, *col, a, b, &consts);
                }
                rho.push(op);
            }
        }
        let mut real = Realization { layout, consts, rho, p_basis: Vec::new(), k_basis: Vec::new() };
        real.p_basis = real.build_p_basis();
        real.k_basis = real.build_k_basis();
        real
    }

    /// Realization with the calibrated constants.
    pub fn calibrated(sig: Signature, model: ModelTag) -> Result<Realization> {
        let cal = calibrate_structure(sig)?;
        Ok(Realization::new(Layout::new(sig, model)?, cal.constants()))
    }

    pub fn sig(&self) -> Signature {
        self.layout.sig
    }

    /// `ρ(E_ab)`, 1-based.
    pub fn rho(&self, a: u16, b: u16) -> &LinOp {
        let n = self.sig().m() as usize;
        &self.rho[(a as usize - 1) * n + (b as usize - 1)]
    }

    pub fn rho_of(&self, x: &GlElem) -> LinOp {
        let mut out = LinOp::zero();
        for (&(a, b), &c) in x {
            out = &out + &self.rho(a, b).scale(&Scalar::from_int(c));
        }
        out
    }

    fn build_p_basis(&self) -> Vec<PElem> {
        let sig = self.sig();
        let (p, q) = (sig.p, sig.q);
        let mut out = Vec::new();
        for j in 1..=q {
            for i in 1..=p {
                match sig.family {
                    Family::Unitary => {
                        for (gen, matrix, probe) in [
                            (WedgeGen::xibar(i, j), elementary(i, p + j), (i, p + j)),
                            (WedgeGen::xi(i, j), elementary(p + j, i), (p + j, i)),
                        ] {
                            let op = self.rho_of(&matrix);
                            out.push(PElem { gen, matrix, probe, op });
                        }
                    }
                    Family::Orthogonal => {
                        let mut matrix = elementary(i, p + j);
                        matrix.insert((p + j, i), 1);
                        let op = self.rho_of(&matrix);
                        out.push(PElem { gen: WedgeGen::xi(i, j), matrix, probe: (i, p + j), op });
                    }
                }
            }
        }
        out.sort_by_key(|e| e.gen);
        out
    }

    fn build_k_basis(&self) -> Vec<KElem> {
        let sig = self.sig();
        let (p, q) = (sig.p, sig.q);
        let mut mats: Vec<(String, GlElem)> = Vec::new();
        match sig.family {
            Family::Unitary => {
                for a in 1..=p {
                    for b in 1..=p {
                        mats.push((format!("E[{a},{b}]"), elementary(a, b)));
                    }
                }
                for a in 1..=q {
                    for b in 1..=q {
                        mats.push((format!("E[p+{a},p+{b}]"), elementary(p + a, p + b)));
                    }
                }
            }
            Family::Orthogonal => {
                for (off, n, tag) in [(0, p, ""), (p, q, "p+")] {
                    for a in 1..=n {
                        for b in a + 1..=n {
                            let mut m = elementary(off + a, off + b);
                            m.insert((off + b, off + a), -1);
                            mats.push((format!("E[{tag}{a},{tag}{b}]-E[{tag}{b},{tag}{a}]"), m));
                        }
                    }
                }
            }
        }
        mats.into_iter()
            .map(|(label, matrix)| {
                let op = self.rho_of(&matrix);
                let coadjoint = self.coadjoint(&matrix);
                KElem { label, matrix, op, coadjoint }
            })
            .collect()
    }

    /// If `[κ, x_β] = Σ_α M_αβ x_α` then `κ·ξ^α = −Σ_β M_αβ ξ^β`.
    fn coadjoint(&self, kappa: &GlElem) -> BTreeMap<WedgeGen, Vec<(WedgeGen, i64)>> {
        let mut out: BTreeMap<WedgeGen, Vec<(WedgeGen, i64)>> = BTreeMap::new();
        for beta in &self.p_basis {
            let br = gl_bracket(kappa, &beta.matrix);
            for alpha in &self.p_basis {
                if let Some(&c) = br.get(&alpha.probe) {
                    out.entry(alpha.gen).or_default().push((beta.gen, -c));
                }
            }
        }
        out
    }

    pub fn p_basis(&self) -> &[PElem] {
        &self.p_basis
    }

    pub fn k_basis(&self) -> &[KElem] {
        &self.k_basis
    }

    /// `d = Σ_α ε(ξ^α) ∘ ω(x_α)`.
    pub fn differential(&self) -> FormOp {
        let mut d = FormOp::new();
        for e in &self.p_basis {
            d.push(e.gen, e.op.clone());
        }
        d
    }

    /// `(ω(κ) ⊗ 1 + 1 ⊗ κ)·c`.
    pub fn k_act(&self, kappa: &KElem, f: &Form) -> Form {
        let mut out = f.apply_op(&kappa.op);
        for (w, poly) in f.terms() {
            let gens = w.gens();
            for (t, g) in gens.iter().enumerate() {
                let Some(images) = kappa.coadjoint.get(g) else { continue };
                for &(h, c) in images {
                    let mut v = gens.to_vec();
                    v[t] = h;
                    if let Some((sign, m)) = WedgeMonomial::from_product(&v) {
                        out.add_term(m, &poly.scale(&Scalar::from_int(c * sign as i64)));
                    }
                }
            }
        }
        out
    }

    /// Diagonal elements of `𝔨`, used for torus weights.
    pub fn torus(&self) -> Vec<&KElem> {
        self.k_basis
            .iter()
            .filter(|k| k.matrix.len() == 1 && k.matrix.keys().all(|(a, b)| a == b))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpqBlock {
    /// `−ρ(E_ba)` on the `gl(p)` block.
    KGlP(u16, u16),
    /// `−ρ(E_{p+b,p+a})` on the `gl(q)` block.
    KGlQ(u16, u16),
    PPlus(u16, u16),
    PMinus(u16, u16),
}

/// Block operators of the Fock model for `sig`.
pub fn upq_op(sig: Signature, block: UpqBlock) -> Result<LinOp> {
    let (p, q) = (sig.p as usize, sig.q as usize);
    let (a, b, ba, bb) = match block {
        UpqBlock::KGlP(a, b) => (a, b, p, p),
        UpqBlock::KGlQ(a, b) => (a, b, q, q),
        UpqBlock::PPlus(i, j) | UpqBlock::PMinus(i, j) => (i, j, p, q),
    };
    check_index("first block index", a as usize, ba)?;
    check_index("second block index", b as usize, bb)?;
    let real = Realization::calibrated(sig, ModelTag::Fock)?;
    let pp = sig.p;
    Ok(match block {
        UpqBlock::KGlP(a, b) => -real.rho(b, a).clone(),
        UpqBlock::KGlQ(a, b) => -real.rho(pp + b, pp + a).clone(),
        UpqBlock::PPlus(i, j) => real.rho(i, pp + j).clone(),
        UpqBlock::PMinus(i, j) => real.rho(pp + j, i).clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub sig: Signature,
    pub c_plus: Scalar,
    pub c_minus: Scalar,
    /// One line per verified bracket.
    pub report: Vec<String>,
}

impl Calibration {
    pub fn constants(&self) -> Constants {
        Constants { c_plus: self.c_plus.clone(), c_minus: self.c_minus.clone() }
    }
}

fn cache() -> &'static Mutex<HashMap<Signature, Calibration>> {
    static CACHE: OnceLock<Mutex<HashMap<Signature, Calibration>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn kronecker(a: u16, b: u16) -> bool {
    a == b
}

/// Checks `[ρE_ab, ρE_cd] = δ_bc ρE_ad − δ_da ρE_cb` for every basis pair.
pub fn verify_homomorphism(real: &Realization) -> std::result::Result<Vec<String>, String> {
    let n = real.sig().m();
    let mut lines = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    let lhs = real.rho(a, b).commutator(real.rho(c, d));
                    let mut rhs = LinOp::zero();
                    if kronecker(b, c) {
                        rhs = &rhs + real.rho(a, d);
                    }
                    if kronecker(d, a) {
                        rhs = &rhs - real.rho(c, b);
                    }
                    if lhs != rhs {
                        return Err(format!("[E{a}{b}, E{c}{d}] does not close"));
                    }
                    lines.push(format!("[E({a},{b}), E({c},{d})] ok"));
                }
            }
        }
    }
    Ok(lines)
}

fn measure(sig: Signature) -> Result<(Constants, Vec<String>)> {
    let probe = Signature { p: sig.p.max(1), q: sig.q.max(1), r: 1, s: 0, ..sig };
    let ansatz = Constants::ansatz();
    let real = Realization::new(Layout::new(probe, ModelTag::Fock)?, ansatz.clone());
    let p = probe.p;
    let bracket = real.rho(1, p + 1).commutator(real.rho(p + 1, 1));
    let target = real.rho(1, 1) - real.rho(p + 1, p + 1);
    let mu = bracket
        .ratio_to(&target)
        .ok_or_else(|| Error::CalibrationFailure("[p+, p-] is not proportional to its k-image".into()))?;
    let inv = mu.inv().ok_or_else(|| Error::CalibrationFailure(format!("degenerate scale {mu}")))?;
    let consts = Constants { c_plus: ansatz.c_plus.clone(), c_minus: &ansatz.c_minus * &inv };
    Ok((consts, vec![format!("ansatz bracket scale {mu}; c_minus rescaled by 1/({mu})")]))
}

/// Fixes `(c₊, c₋)` so that the operators close onto the `gl(p+q)` structure
/// constants, and records every verified bracket. Cached per signature.
pub fn calibrate_structure(sig: Signature) -> Result<Calibration> {
    if let Some(c) = cache().lock().expect("calibration cache").get(&sig) {
        return Ok(c.clone());
    }
    let (consts, mut report) = measure(sig)?;
    let layout = Layout::new(sig, ModelTag::Fock)?;
    let real = Realization::new(layout.clone(), consts.clone());
    report.extend(verify_homomorphism(&real).map_err(Error::CalibrationFailure)?);

    // rescaling (t c₊, c₋/t) must close as well
    let t = Scalar::from_int(3);
    let scaled = Constants {
        c_plus: &consts.c_plus * &t,
        c_minus: &consts.c_minus * &t.inv().expect("nonzero"),
    };
    if sig.p > 0 && sig.q > 0 {
        let sr = Realization::new(layout, scaled);
        let p = sig.p;
        let lhs = sr.rho(1, p + 1).commutator(sr.rho(p + 1, 1));
        let rhs = sr.rho(1, 1) - sr.rho(p + 1, p + 1);
        if lhs != rhs {
            return Err(Error::CalibrationFailure("closure is not scale consistent".into()));
        }
        report.push("scale consistency (3 c+, c-/3) ok".into());
    }
    let cal = Calibration { sig, c_plus: consts.c_plus, c_minus: consts.c_minus, report };
    cache().lock().expect("calibration cache").insert(sig, cal.clone());
    Ok(cal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    #[test]
    fn calibrated_constants() {
        let cal = calibrate_structure(Signature::unitary(1, 1, 1, 0)).unwrap();
        assert_eq!(cal.c_plus, Scalar::i());
        assert_eq!(cal.c_minus, Scalar::i());
        assert_eq!(&cal.c_plus * &cal.c_minus, Scalar::from_int(-1));
    }

    #[test]
    fn pplus_on_constant() {
        let sig = Signature::unitary(1, 1, 1, 0);
        let op = upq_op(sig, UpqBlock::PPlus(1, 1)).unwrap();
        let xy = Polynomial::var(VariableId::x(1, 1)) * Polynomial::var(VariableId::y(1, 1));
        assert_eq!(op.apply(&Polynomial::one()), xy.scale(&Scalar::i()));
    }

    #[test]
    fn gl_q_trace_shift() {
        let sig = Signature::unitary(1, 2, 2, 0);
        let mut tr = LinOp::zero();
        for a in 1..=2 {
            tr = &tr + &upq_op(sig, UpqBlock::KGlQ(a, a)).unwrap();
        }
        assert_eq!(tr.apply(&Polynomial::one()), Polynomial::constant(Scalar::from_int(2 * 2)));
    }

    #[test]
    fn schrodinger_columns_are_homomorphic() {
        let sig = Signature::unitary(1, 1, 1, 1);
        let real = Realization::calibrated(sig, ModelTag::Schrodinger).unwrap();
        assert!(verify_homomorphism(&real).is_ok());
        let o = Signature::orthogonal(1, 1, 1);
        let real = Realization::calibrated(o, ModelTag::Schrodinger).unwrap();
        assert!(verify_homomorphism(&real).is_ok());
    }

    #[test]
    fn block_index_checks() {
        assert!(upq_op(Signature::unitary(1, 1, 1, 0), UpqBlock::PPlus(2, 1)).is_err());
    }
}
