//! The exact coefficient tower.
//!
//! Three layers: [`LaurentPoly`] (Laurent polynomials in v = q^{1/2} over the
//! rationals), [`RatFunc`] (reduced quotients of those), and [`Cyclotomic`]
//! (the field Q\[x\]/Φ_{4l}(x) housing the root of unity ε together with
//! ε^{1/2}, i and ζ = i·ε^{1/2}). Specialization maps the generic layer into
//! the cyclotomic one by evaluating v at ε^{1/2}.

mod chebyshev;
mod cyclotomic;
mod laurent;
mod ratfunc;
mod scalars;

pub use chebyshev::{chebyshev, chebyshev_eval};
pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use laurent::LaurentPoly;
pub use ratfunc::{RatFunc, ScalarError};
pub use scalars::{GenericQ, RootOfUnity, Scalar, ScalarOps};

use num::BigRational;

/// Shorthand for an exact rational number.
pub type Q = BigRational;

pub(crate) fn q_from(num: i64, den: i64) -> Q {
    use num::bigint::BigInt;
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
