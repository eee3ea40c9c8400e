//! Exact symbolic computation for quantum loop algebras of the n-punctured sphere.
//!
//! The library implements, over exact rational and cyclotomic arithmetic:
//!
//! - the quantized enveloping algebra U_q(sl2) in PBW normal form, its Hopf
//!   structure, tensor powers, and a Verma-module oracle ([`uqsl2`]);
//! - finite dimensional modules, R-matrices and quantum traces ([`repv`]);
//! - the loop algebra L_{0,n} of the sphere with n+1 punctures, realized
//!   inside U_q(sl2)^{⊗n} through the Alekseev embedding ([`graphalg`]);
//! - its specialization at odd roots of unity, the resulting center and the
//!   Frobenius map onto it, with Chebyshev threading ([`rootcenter`]);
//! - the quantum coadjoint derivations and their exponentials ([`qca`]);
//! - the classical Poisson side: Fock-Rosly and coadjoint brackets, the dual
//!   group law, and the dressing identities ([`poisson`]);
//! - the Kauffman bracket / Wilson loop dictionary ([`skein`]).
//!
//! Every identity checked by the [`suite`] runners reduces to an exact zero
//! residual; there is no floating point anywhere in the crate.

pub mod scalar;
pub mod uqsl2;
pub mod repv;
pub mod matrix;
pub mod graphalg;
pub mod rootcenter;
pub mod qca;
pub mod poisson;
pub mod skein;
pub mod grammar;
pub mod report;
pub mod suite;

pub use scalar::{Cyclotomic, LaurentPoly, RatFunc};
