//! Symbolic classification of locally connected refinements of the real line
//! by interval-partition types, plus the connected completely-metrizable
//! sine-arc graph family `F[g]`.
//!
//! The crate is organized around five submodules:
//!
//! - [`cardinal`] — exact arithmetic on `{0,1,…} ∪ {ℵ₀, 𝔠}`;
//! - [`interval`] — generalized intervals with exact rational endpoints;
//! - [`partition`] — finite descriptions of interval partitions of ℝ,
//!   type computation, admissible-type synthesis and the two partition
//!   transformations;
//! - [`classify`] — decision procedures on type quadruples (admissibility,
//!   homeomorphism, embeddability);
//! - [`sinegraph`] — the `F[g]` family: symbolic pieces, numeric evaluation,
//!   path components, digit-string encoding and the discontinuity set.
//!
//! With the default `parallel` feature, bulk point evaluation runs on rayon;
//! disable default features for a fully sequential build.

pub mod cardinal;
pub mod classify;
pub mod interval;
pub mod par;
pub mod partition;
pub mod sinegraph;

pub use cardinal::Cardinal;
pub use interval::{Endpoint, Interval, IntervalKind, Rational};
pub use partition::{Block, PartitionDesc, TypeQuadruple};
