use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Unitary,
    Orthogonal,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unitary" | "u" => Ok(Family::Unitary),
            "orthogonal" | "o" => Ok(Family::Orthogonal),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Unitary => "unitary",
            Family::Orthogonal => "orthogonal",
        })
    }
}

/// Isometry signature `(p, q)`, dual-pair size `(r, s)` and family.
///
/// `p ≥ q` is not required: several small cases of interest have `q > p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub p: u16,
    pub q: u16,
    pub r: u16,
    pub s: u16,
    pub family: Family,
}

impl Signature {
    pub fn new(p: u16, q: u16, r: u16, s: u16, family: Family) -> Result<Self> {
        if family == Family::Orthogonal && s != 0 {
            return Err(Error::InvalidSignature(format!(
                "orthogonal family needs s = 0, got s = {s}"
            )));
        }
        Ok(Signature { p, q, r, s, family })
    }

    pub fn unitary(p: u16, q: u16, r: u16, s: u16) -> Self {
        Signature { p, q, r, s, family: Family::Unitary }
    }

    pub fn orthogonal(p: u16, q: u16, r: u16) -> Self {
        Signature { p, q, r, s: 0, family: Family::Orthogonal }
    }

    /// `m = p + q`.
    pub fn m(&self) -> u16 {
        self.p + self.q
    }

    pub fn with_rs(&self, r: u16, s: u16) -> Self {
        Signature { r, s, ..*self }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={}, q={}, r={}, s={})", self.family, self.p, self.q, self.r, self.s)
    }
}

/// Which realization of the oscillator representation a cochain lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "which")]
pub enum ModelTag {
    Fock,
    Schrodinger,
    /// Columns `1..=schrodinger_cols` carry gaussian-weighted variables, the
    /// remaining ones are Fock columns.
    Mixed { schrodinger_cols: u16 },
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelTag::Fock => f.write_str("fock"),
            ModelTag::Schrodinger => f.write_str("schrodinger"),
            ModelTag::Mixed { schrodinger_cols } => write!(f, "mixed:{schrodinger_cols}"),
        }
    }
}

impl FromStr for ModelTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fock" => Ok(ModelTag::Fock),
            "schrodinger" => Ok(ModelTag::Schrodinger),
            _ => {
                let k = s
                    .strip_prefix("mixed:")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown model `{s}`")))?;
                Ok(ModelTag::Mixed { schrodinger_cols: k })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_forbids_conjugate_columns() {
        assert!(Signature::new(2, 1, 1, 1, Family::Orthogonal).is_err());
        assert!(Signature::new(2, 1, 1, 0, Family::Orthogonal).is_ok());
    }

    #[test]
    fn model_tags_parse() {
        for t in [ModelTag::Fock, ModelTag::Schrodinger, ModelTag::Mixed { schrodinger_cols: 2 }] {
            assert_eq!(t.to_string().parse::<ModelTag>().unwrap(), t);
        }
    }
}
