//! Numerical toolkit for finite exponential sums on tube domains: amoebas,
//! Jessen functions, mean motions, and the rational relations between the
//! mean motions of different complement components.
//!
//! An exponential sum is a finite expression
//!
//! ```text
//! f(z) = Σ c_λ exp(i⟨z, λ⟩),   z ∈ C^p,  λ ∈ R^p
//! ```
//!
//! whose frequency vectors λ are stored exactly as rational combinations of a
//! user-declared set of base irrationals. Exactness is what makes the group
//! generated by the spectrum, its Hermite-normal-form basis, and integrality
//! statements about mean-motion differences checkable without floating-point
//! ambiguity.
//!
//! Module map:
//! - [`expsum`] — exact sum representation, evaluation, spectrum, group basis
//! - [`jessen`] — Jessen function estimation and the two mean-motion estimators
//! - [`amoeba`] — fiber minimum search, raster classification, components
//! - [`relations`] — snapping mean motions into the spectrum group, verdicts
//! - [`kronecker`] — simultaneous Diophantine approximation by grid scan
//! - [`sumspec`] — the JSON sum-specification file format

pub mod amoeba;
pub mod argtrack;
pub mod expsum;
pub mod jessen;
pub mod kronecker;
pub mod relations;
pub mod rng;
pub mod sumspec;

pub use expsum::{
    BaseIrrationals, EvalError, ExponentialSum, FrequencyVector, GroupBasis, Term,
};
pub use jessen::{JessenEstimate, QuadratureConfig};
pub use kronecker::KroneckerSolution;

/// Complex scalar used throughout.
pub type Complex = num::complex::Complex64;

/// Exact rational scalar used for frequency coordinates.
pub type Rational = num::BigRational;
