use thiserror::Error;

use crate::invariants::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator list is empty or contains a non-positive entry")]
    EmptyInput,
    #[error("gcd of generators {0:?} is not 1")]
    GcdNotOne(Vec<i64>),
    #[error("generator {0} exceeds the supported bound 2^31")]
    GeneratorTooLarge(i64),
    #[error("conductor {0} exceeds the supported window size")]
    WindowTooLarge(i64),
    #[error("relative ideal needs at least one generator")]
    EmptyGenerators,
    #[error("relative ideals belong to different semigroups")]
    ParentMismatch,
    #[error("second ideal is not contained in the first")]
    NotASubset,
    #[error("ideal is not contained in the semigroup")]
    NotIntegral,
    #[error("{what}: no stabilization within bound {bound}")]
    BoundExceeded { what: &'static str, bound: i64 },
    #[error("n_max = {n_max} is below the multiplicity {multiplicity}")]
    NMaxTooSmall { n_max: usize, multiplicity: i64 },
    #[error("quotient by the unit ideal is the zero ring")]
    ZeroQuotient,
    #[error("semigroup is not symmetric")]
    NotSymmetric,
    #[error("module is not isomorphic to a trace ideal")]
    NotTraceIso,
    #[error("module is isomorphic to the canonical module; the idealization is Gorenstein of type 1")]
    GorensteinIdealization,
    #[error("genus {genus} exceeds the gap-search limit {limit}")]
    TooManyGaps { genus: i64, limit: i64 },
    #[error("genus bound {genus_max} exceeds the limit {limit}")]
    GuardExceeded { genus_max: i64, limit: i64 },
    #[error("theorem violation: {0}")]
    TheoremViolation(Box<Violation>),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
