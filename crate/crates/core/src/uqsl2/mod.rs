//! U_q(sl2) in PBW normal form, its Hopf structure, tensor powers, and the
//! Verma-module oracle.
//!
//! Elements are finite sums of ordered monomials F^a K^b E^c with exact
//! coefficients; products are straightened into this basis using the defining
//! relations
//!
//!   K E K^{-1} = q^2 E,   K F K^{-1} = q^{-2} F,
//!   E F - F E = (K - K^{-1})/(q - q^{-1}).
//!
//! The straightening of E·F^a is derived from these by induction and is
//! certified against the Verma-module oracle in the test suites.

mod hopf;
mod pbw;
mod tensor;
mod verma;

pub use hopf::Hopf;
pub use pbw::{EpsAlgebra, GenAlgebra, PbwAlgebra, PbwElement, PbwMonomial};
pub use tensor::TensorElement;
pub use verma::{verma_action, verma_action_vec, VermaError, VermaVector, XLaurent};
