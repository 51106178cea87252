//! Text artifacts for cochains.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forms::GKCochain;

pub mod json;
pub mod latex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "latex" | "tex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

pub fn export_form(c: &GKCochain, format: Format) -> String {
    match format {
        Format::Json => json::to_json(c),
        Format::Latex => latex::to_latex(c),
    }
}

pub fn parse_form(text: &str) -> Result<GKCochain> {
    json::from_json(text)
}
