//! Exact computations in the Hecke algebra of the extended affine Weyl group
//! of type B̃₃ and in the based ring of its two-sided cell with `a = 6`.

pub mod bijection;
pub mod cells;
pub mod error;
pub mod hecke;
pub mod jring;
pub mod laurent;
pub mod repring;
pub mod report;
pub mod verify;
pub mod weyl;

pub use error::Error;
pub use hecke::{Basis, HeckeElement, KlTable, Side};
pub use laurent::{Coeff, LaurentPoly};
pub use weyl::{GenSet, GeneratorWord, WeylElement};

/// Laurent polynomials over `i64` with overflow checks.
pub type Laurent = LaurentPoly<i64>;
/// Hecke algebra elements over `i64`.
pub type Hecke = HeckeElement<i64>;
