//! Canonical reduction numbers of numerical semigroup rings `k[[H]]`, together
//! with canonical ideals, Hilbert functions of canonical ideals, traces of the
//! canonical module and the Gorenstein-type classification they support.
//!
//! All computation is exact and combinatorial: monomial fractional ideals of
//! `k[[H]]` are modelled by [`RelativeIdeal`]s, subsets `E ⊆ ℤ` with `E + H ⊆ E`.

mod bits;
pub mod enumerate;
pub mod error;
pub mod idealization;
pub mod invariants;
pub mod relideal;
pub mod semigroup;

pub use error::{Error, Result};
pub use invariants::{classify, Check, ClassificationReport, HilbertTable, Violation};
pub use relideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;
