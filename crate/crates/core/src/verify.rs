//! Named verification suites. Each suite returns one [`Check`] per exact
//! identity it tests; a suite passes when every check does.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{Form, FormOp, LinOp, Monomial, Polynomial, Scalar, VarKind, VariableId, WedgeKind};
use crate::error::{Error, Result};
use crate::forms::differential::{corrupt, dd_sweep, residual_with};
use crate::forms::fock::{psi_bar_column, psi_column, psi_orth_column};
use crate::forms::{
    build_km_explicit, build_km_nabla, build_mixed, build_psi_cup, build_psi_orth, build_psi_q, euler_chern_form,
    restrict_form, GKCochain, SplitSpec,
};
use crate::oscillator::heisenberg::{heisenberg_op, ladder_op, sp_op, vacuum, FlatModel, HeisenbergGen, Ladder, SpBlock};
use crate::oscillator::intertwine::{basis_element, inner_product_rel, intertwine};
use crate::oscillator::upq::{calibrate_structure, upq_op, Realization, UpqBlock};
use crate::oscillator::{Family, ModelTag, Signature};
use crate::schur::{enumerate_ssyt, is_harmonic, kv_highest_weight, schur_span_dim, Partition};
use crate::theta::{eisenstein_check, enumerate_vectors, rep_numbers, GramMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    OscillatorRelations,
    Intertwiner,
    Harmonic,
    SchurDim,
    Closedness,
    Cup,
    KmEquality,
    Restriction,
    KInvariance,
    Eisenstein,
    Calibration,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::OscillatorRelations,
        Suite::Intertwiner,
        Suite::Harmonic,
        Suite::SchurDim,
        Suite::Closedness,
        Suite::Cup,
        Suite::KmEquality,
        Suite::Restriction,
        Suite::KInvariance,
        Suite::Eisenstein,
        Suite::Calibration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OscillatorRelations => "oscillator-relations",
            Suite::Intertwiner => "intertwiner",
            Suite::Harmonic => "harmonic",
            Suite::SchurDim => "schur-dim",
            Suite::Closedness => "closedness",
            Suite::Cup => "cup",
            Suite::KmEquality => "km-equality",
            Suite::Restriction => "restriction",
            Suite::KInvariance => "k-invariance",
            Suite::Eisenstein => "eisenstein",
            Suite::Calibration => "calibration",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random cochains per signature in the `d∘d` sweep.
    pub dd_probes: usize,
    pub eisenstein_n: u64,
    /// Restricts the signature sweeps to one signature.
    pub signature: Option<Signature>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, dd_probes: 20, eisenstein_n: 6, signature: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, label: impl Into<String>, passed: bool) {
        self.0.push(Check { label: label.into(), passed, detail: String::new() });
    }

    fn push_detail(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { label: label.into(), passed, detail: detail.into() });
    }

    /// Records `r`, turning an error into a failed check.
    fn push_result(&mut self, label: impl Into<String>, r: Result<bool>) {
        match r {
            Ok(b) => self.push(label, b),
            Err(e) => self.push_detail(label, false, e.to_string()),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut c = Checks::default();
    match suite {
        Suite::OscillatorRelations => oscillator_relations(&mut c),
        Suite::Intertwiner => intertwiner(&mut c),
        Suite::Harmonic => harmonic(&mut c),
        Suite::SchurDim => schur_dim(&mut c),
        Suite::Closedness => closedness(&mut c, opts),
        Suite::Cup => cup(&mut c, opts),
        Suite::KmEquality => km_equality(&mut c),
        Suite::Restriction => restriction(&mut c),
        Suite::KInvariance => k_invariance(&mut c, opts),
        Suite::Eisenstein => eisenstein(&mut c, opts),
        Suite::Calibration => calibration(&mut c),
    }
    let passed = !c.0.is_empty() && c.0.iter().all(|x| x.passed);
    SuiteReport { suite: suite.name().into(), passed, checks: c.0, elapsed: start.elapsed() }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, opts)).collect()
}

fn delta(i: usize, j: usize) -> bool {
    i == j
}

fn pi_multiple(n: i64) -> Scalar {
    Scalar::rational_pi(n, 1, 1)
}

fn oscillator_relations(c: &mut Checks) {
    use Ladder::*;
    for n in 1..=3 {
        let op = |k: Ladder, j: usize| ladder_op(k, j, n).expect("index in range");
        for i in 1..=n {
            for j in 1..=n {
                let expected = if delta(i, j) { LinOp::scalar(pi_multiple(-4)) } else { LinOp::zero() };
                c.push(format!("N={n} [A+{i}, A-{j}] = -4π δ Id"), op(Plus, i).commutator(&op(Minus, j)) == expected);
                c.push(format!("N={n} [A+{i}, A+{j}] = 0"), op(Plus, i).commutator(&op(Plus, j)).is_zero());
                c.push(format!("N={n} [A-{i}, A-{j}] = 0"), op(Minus, i).commutator(&op(Minus, j)).is_zero());
                for (k, sign) in [(Plus, 8), (Minus, -8)] {
                    let expected = if delta(i, j) { op(k, i).scale(&pi_multiple(sign)) } else { LinOp::zero() };
                    let name = if k == Plus { "A+" } else { "A-" };
                    c.push(format!("N={n} [H{j}, {name}{i}] = {sign}π δ {name}{i}"), op(H, j).commutator(&op(k, i)) == expected);
                }
            }
            c.push(format!("N={n} A+{i} φ0 = 0"), op(Plus, i).apply(&vacuum()).is_zero());
            c.push(
                format!("N={n} H{i} φ0 = -4π φ0"),
                op(H, i).apply(&vacuum()) == vacuum().scale(&pi_multiple(-4)),
            );
        }
    }
}

/// Exponent vectors of length `n` with total degree `≤ d`.
fn exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in exponents(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn z_monomial(e: &[u32]) -> Polynomial {
    let m = Monomial::from_pairs(e.iter().enumerate().map(|(j, &k)| (VariableId::z(j as u16 + 1), k)));
    Polynomial::term(m, Scalar::one())
}

fn intertwiner(c: &mut Checks) {
    c.push("T(1) = φ0", intertwine(&Polynomial::one()).poly == vacuum());
    let gens = [HeisenbergGen::E, HeisenbergGen::F, HeisenbergGen::WPrime, HeisenbergGen::WDoublePrime];
    for n in 1..=2usize {
        let monos = exponents(n, 3);
        for g in gens {
            for j in 1..=n {
                let fock = heisenberg_op(FlatModel::Fock, g, j, n).expect("index in range");
                let schr = heisenberg_op(FlatModel::Schrodinger, g, j, n).expect("index in range");
                let ok = monos.iter().all(|e| {
                    let m = z_monomial(e);
                    intertwine(&fock.apply(&m)).poly == schr.apply(&intertwine(&m).poly)
                });
                c.push(format!("N={n} T∘{g:?}_{j} = {g:?}_{j}∘T on degree ≤ 3"), ok);
            }
        }
        for block in [SpBlock::K11, SpBlock::P20, SpBlock::P02] {
            for j in 1..=n {
                for k in 1..=n {
                    let fock = sp_op(FlatModel::Fock, block, j, k, n).expect("index in range");
                    let schr = sp_op(FlatModel::Schrodinger, block, j, k, n).expect("index in range");
                    let ok = exponents(n, 2).iter().all(|e| {
                        let m = z_monomial(e);
                        intertwine(&fock.apply(&m)).poly == schr.apply(&intertwine(&m).poly)
                    });
                    c.push(format!("N={n} T∘{block:?}({j},{k}) = {block:?}({j},{k})∘T on degree ≤ 2"), ok);
                }
            }
        }
        let ms = exponents(n, 3);
        let mut orthogonal = true;
        let mut nonzero = true;
        for (a, ma) in ms.iter().enumerate() {
            let fa = basis_element(ma);
            nonzero &= !inner_product_rel(&fa, &fa).is_zero();
            for mb in &ms[a + 1..] {
                orthogonal &= inner_product_rel(&fa, &basis_element(mb)).is_zero();
            }
        }
        c.push(format!("N={n} φ_m pairwise orthogonal for |m| ≤ 3"), orthogonal);
        c.push(format!("N={n} φ_m nonzero for |m| ≤ 3"), nonzero);
    }
}

fn harmonic(c: &mut Checks) {
    let parts = Partition::up_to(3);
    for p in 1..=3u16 {
        for q in 1..=3u16 {
            for r in 1..=3u16 {
                let sig = Signature::unitary(p, q, r, 0);
                let real = match Realization::calibrated(sig, ModelTag::Fock) {
                    Ok(real) => real,
                    Err(e) => {
                        c.push_detail(format!("{sig} realization"), false, e.to_string());
                        continue;
                    }
                };
                for lambda in &parts {
                    for mu in &parts {
                        let admissible = lambda.size() + mu.size() <= 3
                            && lambda.len() <= p as usize
                            && mu.len() <= q as usize
                            && lambda.len() + mu.len() <= r as usize;
                        if !admissible {
                            continue;
                        }
                        let label = format!("({p},{q},{r}) λ={lambda} μ={mu}");
                        match kv_highest_weight(lambda, mu, sig) {
                            Ok(poly) => {
                                c.push(format!("{label} Δ_ij P = 0"), is_harmonic(&poly, sig));
                                c.push(format!("{label} weight and highest weight"), weights_ok(&real, &poly, lambda, mu));
                            }
                            Err(e) => c.push_detail(label, false, e.to_string()),
                        }
                    }
                }
            }
        }
    }
}

/// `ρ(E_aa)P = λ_a P`, `ρ(E_{p+b,p+b})P = −(r + μ_{q−b+1})P`, and `P` is
/// killed by the upper-triangular elements of both blocks.
fn weights_ok(real: &Realization, poly: &Polynomial, lambda: &Partition, mu: &Partition) -> bool {
    let sig = real.sig();
    let (p, q, r) = (sig.p, sig.q, sig.r as i64);
    let scaled = |n: i64| poly.scale(&Scalar::from_int(n));
    let p_weights = (1..=p).all(|a| real.rho(a, a).apply(poly) == scaled(lambda.part(a as usize) as i64));
    let q_weights = (1..=q).all(|b| {
        let mu_b = mu.part((q - b + 1) as usize) as i64;
        real.rho(p + b, p + b).apply(poly) == scaled(-(r + mu_b))
    });
    let raising_p = (1..=p).all(|a| (a + 1..=p).all(|b| real.rho(a, b).apply(poly).is_zero()));
    let raising_q = (1..=q).all(|a| (a + 1..=q).all(|b| real.rho(p + a, p + b).apply(poly).is_zero()));
    p_weights && q_weights && raising_p && raising_q
}

fn schur_dim(c: &mut Checks) {
    for p in 1..=3u16 {
        for lambda in Partition::up_to(3) {
            if lambda.len() > p as usize {
                continue;
            }
            let sig = Signature::unitary(p, 1, lambda.len().max(1) as u16, 0);
            let count = enumerate_ssyt(&lambda, p as u32).len();
            match schur_span_dim(&lambda, sig) {
                Ok(rank) => c.push_detail(format!("p={p} λ={lambda}"), rank == count, format!("rank {rank}, tableaux {count}")),
                Err(e) => c.push_detail(format!("p={p} λ={lambda}"), false, e.to_string()),
            }
        }
    }
}

const SWEEP_PQ: [(u16, u16); 4] = [(1, 1), (2, 1), (2, 2), (3, 1)];
const SWEEP_RS: [(u16, u16); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

fn sweep_signatures(opts: &VerifyOptions) -> Vec<Signature> {
    match opts.signature {
        Some(sig) if sig.family == Family::Unitary => vec![sig],
        Some(_) => Vec::new(),
        None => SWEEP_PQ
            .into_iter()
            .flat_map(|(p, q)| SWEEP_RS.into_iter().map(move |(r, s)| Signature::unitary(p, q, r, s)))
            .collect(),
    }
}

fn orthogonal_signatures(opts: &VerifyOptions) -> Vec<Signature> {
    match opts.signature {
        Some(sig) if sig.family == Family::Orthogonal => vec![sig],
        Some(_) => Vec::new(),
        None => SWEEP_PQ.into_iter().flat_map(|(p, q)| (0..=2).map(move |r| Signature::orthogonal(p, q, r))).collect(),
    }
}

fn split_by_kind(d: &FormOp, kind: WedgeKind) -> FormOp {
    FormOp { parts: d.parts.iter().filter(|(g, _)| g.kind == kind).cloned().collect() }
}

/// Both bidegree components of `d c` vanish.
fn closed_both_ways(c: &GKCochain) -> Result<(bool, bool)> {
    let d = Realization::calibrated(c.sig, c.model)?.differential();
    let hol = split_by_kind(&d, WedgeKind::Xibar).apply(&c.form).is_zero();
    let anti = split_by_kind(&d, WedgeKind::Xi).apply(&c.form).is_zero();
    Ok((hol, anti))
}

fn push_closed(c: &mut Checks, label: String, form: Result<GKCochain>) {
    match form.and_then(|f| closed_both_ways(&f)) {
        Ok((a, b)) => c.push_detail(label, a && b, format!("ξ̄-part {}, ξ-part {}", zero_word(a), zero_word(b))),
        Err(e) => c.push_detail(label, false, e.to_string()),
    }
}

fn zero_word(b: bool) -> &'static str {
    if b {
        "zero"
    } else {
        "nonzero"
    }
}

fn closedness(c: &mut Checks, opts: &VerifyOptions) {
    for sig in sweep_signatures(opts) {
        if sig.r == 1 && sig.s == 0 {
            push_closed(c, format!("{sig} d ψ^(q) = 0"), build_psi_q(sig, 1));
        }
        push_closed(c, format!("{sig} d ψ-cup = 0"), build_psi_cup(sig));
    }
    for sig in orthogonal_signatures(opts) {
        push_closed(c, format!("{sig} d ψ-orth = 0"), build_psi_orth(sig));
    }
    if opts.signature.is_none() {
        for sig in [Signature::unitary(1, 1, 1, 1), Signature::unitary(2, 1, 1, 1), Signature::orthogonal(2, 1, 1), Signature::orthogonal(1, 2, 1)] {
            push_closed(c, format!("{sig} d φ = 0"), build_km_nabla(sig));
        }
        push_closed(c, "unitary(2,1,2,1) d φψ mixed = 0".into(), build_mixed(Signature::unitary(2, 1, 2, 1)));
    }
    for sig in sweep_signatures(opts) {
        match dd_sweep(sig, opts.dd_probes, opts.seed) {
            Ok(rep) => {
                let detail = if rep.vacuous {
                    "no weight-zero cochain exists; invariant complex is zero".to_string()
                } else {
                    format!("{} of {} projections", rep.probes.len(), rep.requested)
                };
                c.push_detail(format!("{sig} d∘d = 0 on seeded cochains"), rep.all_zero(), detail);
            }
            Err(e) => c.push_detail(format!("{sig} d∘d sweep"), false, e.to_string()),
        }
    }
}

/// Moves holomorphic columns right by `r1` and conjugate columns by `s1`.
fn shift_columns(f: &Form, r1: u16, s1: u16) -> Form {
    f.relabel(
        |g| g,
        |v| match v.kind {
            VarKind::X | VarKind::Y => VariableId { col: v.col + r1, ..v },
            VarKind::Xbar | VarKind::Ybar => VariableId { col: v.col + s1, ..v },
            VarKind::Z => v,
        },
    )
}

fn koszul(q: u16, s1: u16, r2: u16) -> Scalar {
    Scalar::from_int(if (q as u32 * s1 as u32 * r2 as u32).is_multiple_of(2) { 1 } else { -1 })
}

fn cup(c: &mut Checks, opts: &VerifyOptions) {
    for sig in sweep_signatures(opts) {
        let Ok(whole) = build_psi_cup(sig) else {
            c.push(format!("{sig} ψ-cup builds"), false);
            continue;
        };
        for r1 in 0..=sig.r {
            for s1 in 0..=sig.s {
                let (r2, s2) = (sig.r - r1, sig.s - s1);
                let a = build_psi_cup(sig.with_rs(r1, s1));
                let b = build_psi_cup(sig.with_rs(r2, s2));
                let ok = match (a, b) {
                    (Ok(a), Ok(b)) => {
                        let prod = a.form.wedge(&shift_columns(&b.form, r1, s1)).scale(&koszul(sig.q, s1, r2));
                        prod == whole.form
                    }
                    _ => false,
                };
                c.push(format!("{sig} ψ-cup = ψ-cup(r={r1},s={s1}) ∧ ψ-cup(r={r2},s={s2})"), ok);
            }
        }
        if sig.r > sig.p || sig.s > sig.p {
            let mut direct = Form::unit();
            for k in 1..=sig.r {
                direct = direct.wedge(&psi_column(sig, k));
            }
            for k in 1..=sig.s {
                direct = direct.wedge(&psi_bar_column(sig, k));
            }
            c.push(format!("{sig} column wedge vanishes beyond p"), direct.is_zero() && whole.is_zero());
        }
    }
    for sig in orthogonal_signatures(opts) {
        let Ok(whole) = build_psi_orth(sig) else {
            c.push(format!("{sig} ψ-orth builds"), false);
            continue;
        };
        for r1 in 0..=sig.r {
            let a = build_psi_orth(sig.with_rs(r1, 0));
            let b = build_psi_orth(sig.with_rs(sig.r - r1, 0));
            let ok = matches!((a, b), (Ok(a), Ok(b)) if a.form.wedge(&shift_columns(&b.form, r1, 0)) == whole.form);
            c.push(format!("{sig} ψ-orth splits at column {r1}"), ok);
        }
        if sig.r > sig.p {
            let direct = (1..=sig.r).fold(Form::unit(), |f, k| f.wedge(&psi_orth_column(sig, k)));
            c.push(format!("{sig} column wedge vanishes beyond p"), direct.is_zero() && whole.is_zero());
        }
    }
}

fn km_equal(sig: Signature) -> Result<bool> {
    Ok(build_km_nabla(sig)?.form == build_km_explicit(sig)?.form)
}

fn km_equality(c: &mut Checks) {
    for sig in [
        Signature::unitary(1, 1, 1, 1),
        Signature::unitary(2, 1, 1, 1),
        Signature::orthogonal(2, 1, 1),
        Signature::orthogonal(1, 1, 1),
        Signature::orthogonal(1, 2, 1),
    ] {
        c.push_result(format!("{sig} ∇-product = explicit expansion"), km_equal(sig));
    }
    for q in [1, 3] {
        let sig = Signature::orthogonal(1, q, 1);
        c.push_result(format!("{sig} φ(0) = 0"), build_km_nabla(sig).map(|f| f.form.at_origin().is_zero()));
    }
    for sig in [Signature::unitary(1, 1, 1, 1), Signature::orthogonal(1, 2, 1)] {
        let r = build_km_nabla(sig).map(|f| {
            let power = (0..sig.r).fold(Form::unit(), |acc, _| acc.wedge(&euler_chern_form(sig)));
            f.form.at_origin().ratio_to(&power)
        });
        match r {
            Ok(Some(k)) => c.push_detail(format!("{sig} φ(0) ∝ Ω-power"), !k.is_zero(), format!("ratio {k}")),
            Ok(None) => c.push_detail(format!("{sig} φ(0) ∝ Ω-power"), false, "not proportional"),
            Err(e) => c.push_detail(format!("{sig} φ(0) ∝ Ω-power"), false, e.to_string()),
        }
    }
}

fn restricts_to(c: &mut Checks, label: &str, big: Result<GKCochain>, small: Result<GKCochain>, l: u16) {
    let r = big.and_then(|b| restrict_form(&b, SplitSpec { l })).and_then(|r| Ok(r.form == small?.form));
    c.push_result(label, r);
}

fn restriction(c: &mut Checks) {
    let u21 = Signature::unitary(2, 1, 1, 0);
    restricts_to(c, "ψ^(q) (2,1) → (1,1), l=1", build_psi_q(u21, 1), build_psi_q(Signature::unitary(1, 1, 1, 0), 1), 1);
    restricts_to(
        c,
        "φ unitary (2,1,1,1) → (1,1,1,1), l=1",
        build_km_nabla(Signature::unitary(2, 1, 1, 1)),
        build_km_nabla(Signature::unitary(1, 1, 1, 1)),
        1,
    );
    restricts_to(
        c,
        "φ orthogonal (2,1,1) → (1,1,1), l=1",
        build_km_nabla(Signature::orthogonal(2, 1, 1)),
        build_km_nabla(Signature::orthogonal(1, 1, 1)),
        1,
    );
    restricts_to(c, "l=0 is the identity", build_psi_cup(u21), build_psi_cup(u21), 0);
    c.push_result(
        "l=p kills ψ-cup",
        build_psi_cup(u21).and_then(|f| restrict_form(&f, SplitSpec { l: 2 })).map(|r| r.is_zero()),
    );
}

fn constructed_forms(opts: &VerifyOptions) -> Vec<(String, Result<GKCochain>)> {
    let mut out = Vec::new();
    for sig in sweep_signatures(opts) {
        if sig.r == 1 && sig.s == 0 {
            out.push((format!("{sig} ψ^(q)"), build_psi_q(sig, 1)));
        }
        out.push((format!("{sig} ψ-cup"), build_psi_cup(sig)));
    }
    for sig in orthogonal_signatures(opts) {
        out.push((format!("{sig} ψ-orth"), build_psi_orth(sig)));
    }
    if opts.signature.is_some() {
        return out;
    }
    for sig in [
        Signature::unitary(1, 1, 1, 1),
        Signature::unitary(2, 1, 1, 1),
        Signature::unitary(1, 1, 2, 2),
        Signature::orthogonal(1, 1, 1),
        Signature::orthogonal(2, 1, 1),
        Signature::orthogonal(1, 2, 1),
        Signature::orthogonal(2, 2, 1),
    ] {
        out.push((format!("{sig} φ"), build_km_nabla(sig)));
    }
    for sig in [Signature::unitary(2, 1, 1, 1), Signature::unitary(1, 1, 2, 1), Signature::unitary(2, 1, 2, 1)] {
        out.push((format!("{sig} mixed"), build_mixed(sig)));
    }
    out
}

fn k_invariance(c: &mut Checks, opts: &VerifyOptions) {
    let mut controls = 0;
    for (label, form) in constructed_forms(opts) {
        let outcome = form.and_then(|f| {
            let real = Realization::calibrated(f.sig, f.model)?;
            let clean = residual_with(&real, &f.form).is_zero();
            let control = (f.form.len() >= 2).then(|| !residual_with(&real, &corrupt(&f).form).is_zero());
            Ok((clean, control))
        });
        match outcome {
            Ok((clean, control)) => {
                c.push(format!("{label} residual = 0"), clean);
                if let Some(detected) = control {
                    controls += 1;
                    c.push(format!("{label} corrupted residual ≠ 0"), detected);
                }
            }
            Err(e) => c.push_detail(format!("{label} residual"), false, e.to_string()),
        }
    }
    c.push_detail("negative controls ran", controls > 0, format!("{controls} corrupted forms"));
}

/// `#{x : ½xᵀGx = n}` by scanning the box `|x_i| ≤ radius`.
fn brute_force_counts(g: &[Vec<i64>], n_max: u64, radius: i64) -> Vec<u64> {
    let d = g.len();
    let mut out = vec![0u64; n_max as usize + 1];
    let mut x = vec![-radius; d];
    loop {
        let q: i64 = (0..d).map(|i| (0..d).map(|j| x[i] * g[i][j] * x[j]).sum::<i64>()).sum();
        if q % 2 == 0 && q >= 0 && (q / 2) as u64 <= n_max {
            out[(q / 2) as usize] += 1;
        }
        let mut i = 0;
        while i < d && x[i] == radius {
            x[i] = -radius;
            i += 1;
        }
        if i == d {
            break;
        }
        x[i] += 1;
    }
    out
}

/// Small integral lattices in dimensions 1 to 4.
pub fn sample_lattices() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![vec![2]],
        vec![vec![4]],
        vec![vec![2, 1], vec![1, 2]],
        vec![vec![2, 0], vec![0, 4]],
        vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]],
        vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
        vec![vec![2, 1, 0, 0], vec![1, 4, 1, 0], vec![0, 1, 2, 1], vec![0, 0, 1, 6]],
    ]
}

fn eisenstein(c: &mut Checks, opts: &VerifyOptions) {
    match eisenstein_check(opts.eisenstein_n) {
        Ok(rep) => {
            for row in &rep.rows {
                c.push_detail(
                    format!("r_E8({}) = 240 σ3({})", row.n, row.n),
                    row.theta == row.eisenstein,
                    format!("{} vs {}", row.theta, row.eisenstein),
                );
            }
        }
        Err(e) => c.push_detail("eisenstein check", false, e.to_string()),
    }
    let roots = enumerate_vectors(GramMatrix::e8(), &BigRational::from_integer(1.into())).len();
    c.push_detail("E8 vectors of norm ≤ 2", roots == 241, format!("{roots}"));
    for m in sample_lattices() {
        let label = format!("rep numbers of {m:?} match brute force for n ≤ 4");
        match GramMatrix::from_integers(&m) {
            Ok(g) => {
                let fast = rep_numbers(&g, 4);
                let slow = brute_force_counts(&m, 4, 6);
                c.push_detail(label, fast == slow, format!("{fast:?}"));
            }
            Err(e) => c.push_detail(label, false, e.to_string()),
        }
    }
}

fn calibration(c: &mut Checks) {
    for p in 1..=2u16 {
        for q in 1..=2u16 {
            for (r, s) in [(1, 0), (2, 0), (1, 1)] {
                let sig = Signature::unitary(p, q, r, s);
                match calibrate_structure(sig) {
                    Ok(cal) => c.push_detail(
                        format!("{sig} calibrates"),
                        true,
                        format!("c+ = {}, c- = {}, {} brackets", cal.c_plus, cal.c_minus, cal.report.len()),
                    ),
                    Err(e) => {
                        c.push_detail(format!("{sig} calibrates"), false, e.to_string());
                        continue;
                    }
                }
                c.push_result(format!("{sig} block commutators close onto 𝔨"), block_closure(sig));
            }
        }
    }
}

/// Structure constants of the `u(p,q)` blocks.
fn block_closure(sig: Signature) -> Result<bool> {
    use UpqBlock::*;
    let (p, q) = (sig.p, sig.q);
    let op = |b: UpqBlock| upq_op(sig, b);
    let pairs = |n: u16, m: u16| (1..=n).flat_map(move |a| (1..=m).map(move |b| (a, b))).collect::<Vec<_>>();
    let mut kp = std::collections::BTreeMap::new();
    let mut kq = std::collections::BTreeMap::new();
    let mut pp = std::collections::BTreeMap::new();
    let mut pm = std::collections::BTreeMap::new();
    for (a, b) in pairs(p, p) {
        kp.insert((a, b), op(KGlP(a, b))?);
    }
    for (a, b) in pairs(q, q) {
        kq.insert((a, b), op(KGlQ(a, b))?);
    }
    for (i, j) in pairs(p, q) {
        pp.insert((i, j), op(PPlus(i, j))?);
        pm.insert((i, j), op(PMinus(i, j))?);
    }
    let d = |a: u16, b: u16| a == b;
    let term = |on: bool, x: &LinOp| if on { x.clone() } else { LinOp::zero() };
    let mut ok = true;
    for (&(i, j), x) in &pp {
        for (&(k, l), y) in &pm {
            let rhs = &term(d(i, k), &kq[&(j, l)]) - &term(d(j, l), &kp[&(k, i)]);
            ok &= x.commutator(y) == rhs;
        }
        for y in pp.values() {
            ok &= x.commutator(y).is_zero();
        }
    }
    for x in pm.values() {
        for y in pm.values() {
            ok &= x.commutator(y).is_zero();
        }
    }
    for (&(a, b), k) in &kp {
        for (&(i, j), x) in &pp {
            ok &= k.commutator(x) == -term(d(a, i), &pp[&(b, j)]);
        }
        for (&(i, j), x) in &pm {
            ok &= k.commutator(x) == term(d(i, b), &pm[&(a, j)]);
        }
        for (&(c2, d2), k2) in &kp {
            let rhs = &term(d(b, c2), &kp[&(a, d2)]) - &term(d(a, d2), &kp[&(c2, b)]);
            ok &= k.commutator(k2) == rhs;
        }
        for k2 in kq.values() {
            ok &= k.commutator(k2).is_zero();
        }
    }
    for (&(a, b), k) in &kq {
        for (&(i, j), x) in &pp {
            ok &= k.commutator(x) == term(d(j, b), &pp[&(i, a)]);
        }
        for (&(i, j), x) in &pm {
            ok &= k.commutator(x) == -term(d(a, j), &pm[&(i, b)]);
        }
        for (&(c2, d2), k2) in &kq {
            let rhs = &term(d(b, c2), &kq[&(a, d2)]) - &term(d(a, d2), &kq[&(c2, b)]);
            ok &= k.commutator(k2) == rhs;
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn exponent_vectors() {
        assert_eq!(exponents(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(exponents(2, 3).len(), 10);
    }

    #[test]
    fn brute_force_square() {
        assert_eq!(brute_force_counts(&[vec![2, 0], vec![0, 2]], 2, 3), vec![1, 4, 4]);
    }

    #[test]
    fn restriction_suite_passes() {
        let r = run_suite(Suite::Restriction, &VerifyOptions::default());
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
    }
}
