//! Exact coefficient, polynomial, operator and exterior arithmetic.

pub mod linalg;
pub mod linop;
pub mod perm;
pub mod polynomial;
pub mod scalar;
pub mod variable;
pub mod wedge;

pub use linop::LinOp;
pub use polynomial::{Monomial, Polynomial};
pub use scalar::{GaussRat, Scalar};
pub use variable::{VarKind, VariableId};
pub use wedge::{Form, FormOp, WedgeGen, WedgeKind, WedgeMonomial};
