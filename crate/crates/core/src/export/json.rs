//! JSON artifacts for cochains.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{Form, GaussRat, Monomial, Polynomial, Scalar, VariableId, WedgeGen, WedgeMonomial};
use crate::error::{Error, Result};
use crate::forms::GKCochain;
use crate::oscillator::{ModelTag, Signature};

#[derive(Serialize, Deserialize)]
struct CoeffDoc {
    re: String,
    im: String,
    #[serde(rename = "piExp")]
    pi_exp: i32,
}

#[derive(Serialize, Deserialize)]
struct PolyTermDoc {
    coeff: CoeffDoc,
    mono: Vec<(String, u32)>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    wedge: Vec<String>,
    poly: Vec<PolyTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct CochainDoc {
    signature: Signature,
    model: String,
    terms: Vec<TermDoc>,
}

fn poly_doc(p: &Polynomial) -> Vec<PolyTermDoc> {
    let mut out = Vec::new();
    for (m, s) in p.terms() {
        for (k, c) in s.terms() {
            out.push(PolyTermDoc {
                coeff: CoeffDoc { re: c.re.to_string(), im: c.im.to_string(), pi_exp: k },
                mono: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
            });
        }
    }
    out
}

pub fn to_json(c: &GKCochain) -> String {
    let doc = CochainDoc {
        signature: c.sig,
        model: c.model.to_string(),
        terms: c
            .form
            .terms()
            .map(|(w, p)| TermDoc { wedge: w.gens().iter().map(|g| g.to_string()).collect(), poly: poly_doc(p) })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn rational(s: &str) -> Result<BigRational> {
    s.parse().map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
}

pub fn from_json(text: &str) -> Result<GKCochain> {
    let doc: CochainDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let sig = Signature::new(doc.signature.p, doc.signature.q, doc.signature.r, doc.signature.s, doc.signature.family)?;
    let model: ModelTag = doc.model.parse()?;
    let mut form = Form::zero();
    for t in &doc.terms {
        let gens = t
            .wedge
            .iter()
            .map(|g| g.parse::<WedgeGen>().map_err(Error::Parse))
            .collect::<Result<Vec<_>>>()?;
        let (sign, w) = WedgeMonomial::from_product(&gens)
            .ok_or_else(|| Error::Parse(format!("repeated generator in {:?}", t.wedge)))?;
        let mut poly = Polynomial::zero();
        for pt in &t.poly {
            let vars = pt
                .mono
                .iter()
                .map(|(v, e)| v.parse::<VariableId>().map(|v| (v, *e)).map_err(Error::Parse))
                .collect::<Result<Vec<_>>>()?;
            let c = GaussRat::new(rational(&pt.coeff.re)?, rational(&pt.coeff.im)?);
            poly.add_term(Monomial::from_pairs(vars), &Scalar::from_gauss(pt.coeff.pi_exp, c));
        }
        form.add_term(w, &poly.scale(&Scalar::from_int(sign as i64)));
    }
    Ok(GKCochain::new(sig, model, form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::build_psi_q;

    #[test]
    fn unit_cochain() {
        let c = GKCochain::unit(Signature::unitary(1, 1, 1, 0), ModelTag::Fock);
        let v: serde_json::Value = serde_json::from_str(&to_json(&c)).unwrap();
        let expected: serde_json::Value = serde_json::from_str(
            r#"[{"wedge":[],"poly":[{"coeff":{"re":"1","im":"0","piExp":0},"mono":[]}]}]"#,
        )
        .unwrap();
        assert_eq!(v["terms"], expected);
        assert_eq!(v["model"], "fock");
        assert_eq!(v["signature"]["family"], "unitary");
    }

    #[test]
    fn single_box_psi() {
        let c = build_psi_q(Signature::unitary(1, 1, 1, 0), 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&c)).unwrap();
        assert_eq!(v["terms"][0]["wedge"], serde_json::json!(["xibar:1:1"]));
        assert_eq!(v["terms"][0]["poly"][0]["mono"], serde_json::json!([["X:1:1", 1]]));
        assert_eq!(from_json(&to_json(&c)).unwrap(), c);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(from_json("[]"), Err(Error::Parse(_))));
        let bad = r#"{"signature":{"p":1,"q":1,"r":1,"s":0,"family":"unitary"},"model":"fock",
            "terms":[{"wedge":["xi:1:1","xi:1:1"],"poly":[]}]}"#;
        assert!(from_json(bad).is_err());
    }
}
