//! Arithmetic on the extended cardinal alphabet `{0, 1, 2, …} ∪ {ℵ₀, 𝔠}`.
//!
//! These are the only cardinals that occur as entries of a partition type:
//! finite counts, countable infinity, and the cardinality of the continuum.
//! The continuum is an opaque top element; nothing between `Aleph0` and
//! `Continuum` is representable, and no exponentiation is provided.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

/// An extended count: a finite natural number, ℵ₀, or 𝔠.
///
/// The derived order is the cardinal order: every finite value is below
/// `Aleph0`, which is below `Continuum`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    /// A finite count. Arbitrary precision so grid arithmetic never overflows.
    Fin(BigUint),
    /// ℵ₀, the countable infinite cardinal.
    Aleph0,
    /// 𝔠 = |ℝ|, kept opaque (never computed as a power).
    Continuum,
}

impl Cardinal {
    /// Convenience constructor for small finite cardinals.
    pub fn fin(n: u64) -> Self {
        Cardinal::Fin(BigUint::from(n))
    }

    pub fn zero() -> Self {
        Cardinal::Fin(BigUint::zero())
    }

    pub fn one() -> Self {
        Cardinal::fin(1)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cardinal::Fin(n) if n.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Fin(_))
    }

    /// True for members of Ω₁ = ℕ ∪ {0, ℵ₀}, i.e. everything below 𝔠.
    pub fn is_countable(&self) -> bool {
        *self <= Cardinal::Aleph0
    }

    /// Cardinal sum: finite values add, otherwise the larger argument wins.
    pub fn add(&self, other: &Cardinal) -> Cardinal {
        match (self, other) {
            (Cardinal::Fin(a), Cardinal::Fin(b)) => Cardinal::Fin(a + b),
            _ => self.clone().max(other.clone()),
        }
    }

    /// Cardinal product: zero annihilates, finite values multiply, otherwise
    /// the larger argument wins.
    pub fn mul(&self, other: &Cardinal) -> Cardinal {
        if self.is_zero() || other.is_zero() {
            return Cardinal::zero();
        }
        match (self, other) {
            (Cardinal::Fin(a), Cardinal::Fin(b)) => Cardinal::Fin(a * b),
            _ => self.clone().max(other.clone()),
        }
    }

    pub fn le(&self, other: &Cardinal) -> bool {
        self <= other
    }

    /// The finite value, if this cardinal is finite and fits in `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        match self {
            Cardinal::Fin(n) => u64::try_from(n).ok(),
            _ => None,
        }
    }
}

impl From<u64> for Cardinal {
    fn from(n: u64) -> Self {
        Cardinal::fin(n)
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Fin(n) => write!(f, "{n}"),
            Cardinal::Aleph0 => write!(f, "aleph0"),
            Cardinal::Continuum => write!(f, "continuum"),
        }
    }
}

/// Error type for the textual cardinal form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a cardinal: {0:?} (expected a nonnegative integer, \"aleph0\" or \"continuum\")")]
pub struct ParseCardinalError(pub String);

impl FromStr for Cardinal {
    type Err = ParseCardinalError;

    /// Accepts `"0"`, `"1"`, …, `"aleph0"`, `"continuum"`; case-insensitive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "aleph0" => Ok(Cardinal::Aleph0),
            "continuum" => Ok(Cardinal::Continuum),
            digits => digits
                .parse::<BigUint>()
                .map(Cardinal::Fin)
                .map_err(|_| ParseCardinalError(s.to_string())),
        }
    }
}
