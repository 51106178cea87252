use serde::{Deserialize, Serialize};

use crate::algebra::{Form, Polynomial, WedgeMonomial};
use crate::oscillator::{ModelTag, Signature};

/// A relative Lie algebra cochain: a polynomial-valued wedge form living in
/// a declared model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GKCochain {
    pub form: Form,
    pub model: ModelTag,
    pub sig: Signature,
}

impl GKCochain {
    pub fn new(sig: Signature, model: ModelTag, form: Form) -> Self {
        GKCochain { form, model, sig }
    }

    pub fn unit(sig: Signature, model: ModelTag) -> Self {
        GKCochain::new(sig, model, Form::unit())
    }

    pub fn zero(sig: Signature, model: ModelTag) -> Self {
        GKCochain::new(sig, model, Form::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn coefficient_at(&self, w: &WedgeMonomial) -> Polynomial {
        self.form.coefficient(w)
    }

    pub fn with_form(&self, form: Form) -> Self {
        GKCochain { form, ..*self }
    }
}

/// Plain-data summary used in reports and exports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bidegree {
    pub xi: usize,
    pub xibar: usize,
}
