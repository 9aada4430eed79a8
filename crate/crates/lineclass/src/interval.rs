//! Exact generalized intervals over the extended rational line.
//!
//! Endpoints are exact rationals (or ±∞), never floating point: the kind of
//! an interval and disjointness of two intervals must be decided exactly.
//! Every interval is nonempty by construction and falls into exactly one of
//! four kinds — singleton, compact, half-open, open — where the unbounded
//! one-side-closed forms `[t,+inf[` and `]-inf,t]` count as half-open.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational scalar used for every endpoint, stride and sample step.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or an integer literal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, IntervalError> {
    let t = s.trim();
    let bad = || IntervalError::ParseRational(s.to_string());
    match t.split_once('/') {
        None => {
            let n = BigInt::from_str(t).map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Rational from an integer pair, for tests and constructions.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("not a rational: {0:?} (expected \"p/q\" or an integer)")]
    ParseRational(String),
    #[error("not an interval: {0:?}")]
    ParseInterval(String),
    #[error("invalid interval bounds: {0}")]
    InvalidBounds(String),
    #[error("abuts requires disjoint intervals, got overlapping {0} and {1}")]
    AbutsOverlap(Box<Interval>, Box<Interval>),
}

/// One end of a generalized interval.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    NegInf,
    Rat(Rational),
    PosInf,
}

impl Endpoint {
    pub fn rational(&self) -> Option<&Rational> {
        match self {
            Endpoint::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Endpoint::Rat(_))
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => write!(f, "-inf"),
            Endpoint::Rat(r) => write!(f, "{r}"),
            Endpoint::PosInf => write!(f, "+inf"),
        }
    }
}

/// The four kinds of interval, the alphabet of a partition type.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    Singleton,
    Compact,
    HalfOpen,
    Open,
}

/// A nonempty interval of reals with exact endpoints.
///
/// Invariants, enforced by [`Interval::new`]:
/// - `lo <= hi`, and if `lo == hi` both ends are closed rationals;
/// - an infinite endpoint is never closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Endpoint,
    lo_closed: bool,
    hi: Endpoint,
    hi_closed: bool,
}

impl Interval {
    pub fn new(
        lo: Endpoint,
        lo_closed: bool,
        hi: Endpoint,
        hi_closed: bool,
    ) -> Result<Self, IntervalError> {
        if !lo.is_finite() && lo_closed || !hi.is_finite() && hi_closed {
            return Err(IntervalError::InvalidBounds(
                "an infinite endpoint cannot be closed".into(),
            ));
        }
        if matches!(lo, Endpoint::PosInf) || matches!(hi, Endpoint::NegInf) {
            return Err(IntervalError::InvalidBounds(
                "lower bound must be -inf or rational, upper bound rational or +inf".into(),
            ));
        }
        match lo.cmp(&hi) {
            Ordering::Greater => Err(IntervalError::InvalidBounds(format!(
                "lower bound {lo} exceeds upper bound {hi}"
            ))),
            Ordering::Equal => {
                if lo_closed && hi_closed {
                    Ok(Interval {
                        lo,
                        lo_closed,
                        hi,
                        hi_closed,
                    })
                } else {
                    Err(IntervalError::InvalidBounds(format!(
                        "degenerate interval at {lo} must be closed on both ends"
                    )))
                }
            }
            Ordering::Less => Ok(Interval {
                lo,
                lo_closed,
                hi,
                hi_closed,
            }),
        }
    }

    /// The singleton `[a,a]`.
    pub fn point(a: Rational) -> Self {
        Interval {
            lo: Endpoint::Rat(a.clone()),
            lo_closed: true,
            hi: Endpoint::Rat(a),
            hi_closed: true,
        }
    }

    /// `[a,b]` with `a < b`.
    pub fn segment(a: Rational, b: Rational) -> Self {
        Self::bounded(a, true, b, true)
    }

    /// `[a,b[` with `a < b`.
    pub fn left_closed(a: Rational, b: Rational) -> Self {
        Self::bounded(a, true, b, false)
    }

    /// `]a,b]` with `a < b`.
    pub fn right_closed(a: Rational, b: Rational) -> Self {
        Self::bounded(a, false, b, true)
    }

    /// `]a,b[` with `a < b`.
    pub fn open(a: Rational, b: Rational) -> Self {
        Self::bounded(a, false, b, false)
    }

    fn bounded(a: Rational, lc: bool, b: Rational, hc: bool) -> Self {
        assert!(a < b, "bounded interval constructor requires a < b");
        Interval {
            lo: Endpoint::Rat(a),
            lo_closed: lc,
            hi: Endpoint::Rat(b),
            hi_closed: hc,
        }
    }

    /// `[a,+inf[` or `]a,+inf[`.
    pub fn ray_right(a: Rational, closed: bool) -> Self {
        Interval {
            lo: Endpoint::Rat(a),
            lo_closed: closed,
            hi: Endpoint::PosInf,
            hi_closed: false,
        }
    }

    /// `]-inf,a]` or `]-inf,a[`.
    pub fn ray_left(a: Rational, closed: bool) -> Self {
        Interval {
            lo: Endpoint::NegInf,
            lo_closed: false,
            hi: Endpoint::Rat(a),
            hi_closed: closed,
        }
    }

    /// The whole line `]-inf,+inf[`.
    pub fn line() -> Self {
        Interval {
            lo: Endpoint::NegInf,
            lo_closed: false,
            hi: Endpoint::PosInf,
            hi_closed: false,
        }
    }

    pub fn lo(&self) -> &Endpoint {
        &self.lo
    }

    pub fn hi(&self) -> &Endpoint {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    /// Width `hi - lo` of a bounded interval.
    pub fn width(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Endpoint::Rat(a), Endpoint::Rat(b)) => Some(b - a),
            _ => None,
        }
    }

    /// Translates both endpoints by `delta`. Kind is preserved.
    pub fn translate(&self, delta: &Rational) -> Interval {
        let shift = |e: &Endpoint| match e {
            Endpoint::Rat(r) => Endpoint::Rat(r + delta),
            other => other.clone(),
        };
        Interval {
            lo: shift(&self.lo),
            lo_closed: self.lo_closed,
            hi: shift(&self.hi),
            hi_closed: self.hi_closed,
        }
    }

    /// Classifies into exactly one of the four kinds.
    pub fn kind(&self) -> IntervalKind {
        if self.is_singleton() {
            IntervalKind::Singleton
        } else {
            match (self.lo_closed, self.hi_closed) {
                (true, true) => IntervalKind::Compact,
                (false, false) => IntervalKind::Open,
                _ => IntervalKind::HalfOpen,
            }
        }
    }

    /// Number of noncut points: removing a noncut point leaves the set
    /// connected. Closed finite ends are the noncut points, so
    /// singleton → 1, compact → 2, half-open → 1, open → 0.
    pub fn noncut_count(&self) -> u8 {
        match self.kind() {
            IntervalKind::Singleton => 1,
            IntervalKind::Compact => 2,
            IntervalKind::HalfOpen => 1,
            IntervalKind::Open => 0,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above_lo = match &self.lo {
            Endpoint::NegInf => true,
            Endpoint::Rat(a) => x > a || (self.lo_closed && x == a),
            Endpoint::PosInf => false,
        };
        let below_hi = match &self.hi {
            Endpoint::PosInf => true,
            Endpoint::Rat(b) => x < b || (self.hi_closed && x == b),
            Endpoint::NegInf => false,
        };
        above_lo && below_hi
    }

    /// True iff no point lies in both intervals.
    pub fn disjoint(&self, other: &Interval) -> bool {
        !upper_meets_lower(self, other) || !upper_meets_lower(other, self)
    }

    /// True iff the two intervals are disjoint and their union is again an
    /// interval, i.e. they share an endpoint value with at least one side
    /// closed there.
    pub fn abuts(&self, other: &Interval) -> Result<bool, IntervalError> {
        if !self.disjoint(other) {
            return Err(IntervalError::AbutsOverlap(
                Box::new(self.clone()),
                Box::new(other.clone()),
            ));
        }
        let junction = |left: &Interval, right: &Interval| {
            left.hi == right.lo && left.hi.is_finite() && (left.hi_closed || right.lo_closed)
        };
        Ok(junction(self, other) || junction(other, self))
    }

    /// Exact intersection, `None` when disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = max_lower((&self.lo, self.lo_closed), (&other.lo, other.lo_closed));
        let (hi, hi_closed) = min_upper((&self.hi, self.hi_closed), (&other.hi, other.hi_closed));
        Interval::new(lo.clone(), lo_closed, hi.clone(), hi_closed).ok()
    }

    /// Some rational inside the interval.
    pub fn sample_point(&self) -> Rational {
        match (&self.lo, &self.hi) {
            (Endpoint::Rat(a), Endpoint::Rat(b)) => {
                if a == b {
                    a.clone()
                } else {
                    (a + b) / rat_int(2)
                }
            }
            (Endpoint::Rat(a), Endpoint::PosInf) => a + Rational::one(),
            (Endpoint::NegInf, Endpoint::Rat(b)) => b - Rational::one(),
            _ => Rational::zero(),
        }
    }
}

/// Can a point satisfy both `a`'s upper constraint and `b`'s lower one?
fn upper_meets_lower(a: &Interval, b: &Interval) -> bool {
    match (&a.hi, &b.lo) {
        (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => true,
        (Endpoint::Rat(h), Endpoint::Rat(l)) => match h.cmp(l) {
            Ordering::Greater => true,
            Ordering::Equal => a.hi_closed && b.lo_closed,
            Ordering::Less => false,
        },
        _ => unreachable!("interval invariants exclude hi=-inf and lo=+inf"),
    }
}

/// Compares two lower bounds; at equal value a closed bound reaches lower.
pub(crate) fn cmp_lower(a: (&Endpoint, bool), b: (&Endpoint, bool)) -> Ordering {
    a.0.cmp(b.0).then_with(|| b.1.cmp(&a.1))
}

/// Compares two upper bounds; at equal value a closed bound reaches higher.
pub(crate) fn cmp_upper(a: (&Endpoint, bool), b: (&Endpoint, bool)) -> Ordering {
    a.0.cmp(b.0).then_with(|| a.1.cmp(&b.1))
}

fn max_lower<'a>(a: (&'a Endpoint, bool), b: (&'a Endpoint, bool)) -> (&'a Endpoint, bool) {
    if cmp_lower(a, b) == Ordering::Less {
        b
    } else {
        a
    }
}

fn min_upper<'a>(a: (&'a Endpoint, bool), b: (&'a Endpoint, bool)) -> (&'a Endpoint, bool) {
    if cmp_upper(a, b) == Ordering::Greater {
        b
    } else {
        a
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open_bracket = if self.lo_closed { '[' } else { ']' };
        let close_bracket = if self.hi_closed { ']' } else { '[' };
        write!(
            f,
            "{}{},{}{}",
            open_bracket, self.lo, self.hi, close_bracket
        )
    }
}

impl FromStr for Interval {
    type Err = IntervalError;

    /// Accepts `"[a,b]"`, `"[a,b["`, `"]a,b]"`, `"]a,b["` with `-inf`/`+inf`
    /// allowed only on open sides and rationals as `p/q` or integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || IntervalError::ParseInterval(s.to_string());
        let mut chars = t.chars();
        let first = chars.next().ok_or_else(bad)?;
        let last = t.chars().last().ok_or_else(bad)?;
        let lo_closed = match first {
            '[' => true,
            ']' => false,
            _ => return Err(bad()),
        };
        let hi_closed = match last {
            ']' => true,
            '[' => false,
            _ => return Err(bad()),
        };
        if t.len() < 2 {
            return Err(bad());
        }
        let inner = &t[1..t.len() - 1];
        let (lo_s, hi_s) = inner.split_once(',').ok_or_else(bad)?;
        let parse_end = |raw: &str| -> Result<Endpoint, IntervalError> {
            match raw.trim() {
                "-inf" => Ok(Endpoint::NegInf),
                "+inf" => Ok(Endpoint::PosInf),
                other => Ok(Endpoint::Rat(parse_rational(other)?)),
            }
        };
        Interval::new(parse_end(lo_s)?, lo_closed, parse_end(hi_s)?, hi_closed)
    }
}
