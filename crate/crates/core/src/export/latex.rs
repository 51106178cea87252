//! LaTeX rendering in `X`, `\overline{X}`, `\xi`, `\overline{\xi}` notation.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{GaussRat, Monomial, Polynomial, Scalar, VarKind, VariableId, WedgeGen, WedgeKind};
use crate::forms::GKCochain;

fn variable(v: VariableId) -> String {
    let base = match v.kind {
        VarKind::X => "X",
        VarKind::Y => "Y",
        VarKind::Xbar => "\\overline{X}",
        VarKind::Ybar => "\\overline{Y}",
        VarKind::Z => return format!("x_{{{}}}", v.row),
    };
    format!("{base}_{{{}{}}}", v.row, v.col)
}

fn monomial(m: &Monomial) -> String {
    m.pairs()
        .iter()
        .map(|&(v, e)| if e == 1 { variable(v) } else { format!("{}^{{{e}}}", variable(v)) })
        .collect::<Vec<_>>()
        .join(" ")
}

fn rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn gauss(c: &GaussRat) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => rational(&c.re),
        (true, false) if c.im.is_one() => "i".into(),
        (true, false) => format!("{} i", rational(&c.im)),
        (false, false) => {
            let sign = if c.im.is_negative() { "-" } else { "+" };
            format!("({} {sign} {} i)", rational(&c.re), rational(&c.im.abs()))
        }
    }
}

fn pi_power(k: i32) -> String {
    match k {
        0 => String::new(),
        1 => "\\pi".into(),
        k => format!("\\pi^{{{k}}}"),
    }
}

fn scalar(s: &Scalar) -> String {
    s.terms()
        .map(|(k, c)| {
            let p = pi_power(k);
            if p.is_empty() {
                gauss(c)
            } else if c.is_real() && c.re.is_one() {
                p
            } else {
                format!("{} {p}", gauss(c))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Splits off a leading minus when `c` is a single negative real term.
fn sign_split(c: &Scalar) -> (bool, Scalar) {
    let negative = c.len() == 1 && c.terms().all(|(_, g)| g.is_real() && g.re.is_negative());
    if negative {
        (true, c * &Scalar::from_int(-1))
    } else {
        (false, c.clone())
    }
}

fn polynomial(p: &Polynomial) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        let (negative, c) = sign_split(c);
        let mono = monomial(m);
        let body = match (mono.is_empty(), c.is_one()) {
            (true, _) => scalar(&c),
            (false, true) => mono,
            (false, false) if c.len() > 1 => format!("\\left({}\\right) {mono}", scalar(&c)),
            (false, false) => format!("{} {mono}", scalar(&c)),
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&body),
            (true, true) => out.push_str(&format!("-{body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
            (false, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

fn generator(g: WedgeGen) -> String {
    match g.kind {
        WedgeKind::Xi => format!("\\xi_{{{}{}}}", g.row, g.col),
        WedgeKind::Xibar => format!("\\overline{{\\xi}}_{{{}{}}}", g.row, g.col),
    }
}

pub fn to_latex(c: &GKCochain) -> String {
    let mut out = String::new();
    for (w, p) in c.form.terms() {
        if !out.is_empty() {
            out.push_str("\n+ ");
        }
        let _ = write!(out, "\\left({}\\right)", polynomial(p));
        if w.degree() > 0 {
            let gens: Vec<String> = w.gens().iter().map(|&g| generator(g)).collect();
            let _ = write!(out, " {}", gens.join(" \\wedge "));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{build_km_nabla, build_psi_q};
    use crate::oscillator::Signature;

    #[test]
    fn single_box() {
        let c = build_psi_q(Signature::unitary(1, 1, 1, 0), 1).unwrap();
        assert_eq!(to_latex(&c), "\\left(X_{11}\\right) \\overline{\\xi}_{11}");
    }

    #[test]
    fn gaussian_constant() {
        let c = build_km_nabla(Signature::unitary(1, 1, 1, 1)).unwrap();
        let s = to_latex(&c);
        assert!(s.contains("\\frac{1}{2} \\pi^{-1}"), "{s}");
        assert!(s.contains("\\overline{X}_{11}"), "{s}");
    }

    #[test]
    fn negative_terms_subtract() {
        let c = crate::forms::build_psi_cup(Signature::unitary(2, 1, 2, 0)).unwrap();
        let s = to_latex(&c);
        assert!(s.contains("X_{11} X_{22} - X_{21} X_{12}"), "{s}");
    }
}
