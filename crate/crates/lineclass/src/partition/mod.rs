//! Finite symbolic descriptions of (possibly infinite) interval partitions
//! of ℝ.
//!
//! A description lists finitely many [`Block`]s; every real not covered by a
//! block is implicitly its own singleton member. All endpoints and strides
//! are rational, so every infinite family is eventually periodic and
//! validation, complement extraction and type computation are exact.

mod complement;
mod io;
mod synth;
mod transform;

pub use complement::{Complement, PeriodicTail};
pub use synth::synthesize;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::cardinal::Cardinal;
use crate::interval::{
    cmp_lower, rat_int, Endpoint, Interval, IntervalError, IntervalKind, Rational,
};

/// Which end of a harmonic cell the half-open members accumulate toward.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    AccumulateLeft,
    AccumulateRight,
}

/// One block of a partition description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    /// A single explicit member interval.
    Single(Interval),
    /// `proto` translated by `n * stride` for `0 <= n < count`.
    /// `proto` is bounded, `stride != 0` and `count <= aleph0`.
    Arith {
        proto: Interval,
        stride: Rational,
        count: Cardinal,
    },
    /// For each cell `0 <= n < count`, the open interval of the given length
    /// at `anchor + n*stride` is tiled by countably many half-open members
    /// `[anchor + L/(k+1), anchor + L/k[` for `k >= 1` (accumulating at the
    /// left end; mirrored as `].., ..]` members for [`Side::AccumulateRight`]).
    /// The covered set of a cell is exactly its open interval.
    HarmonicFill {
        anchor: Rational,
        length: Rational,
        side: Side,
        stride: Rational,
        count: Cardinal,
    },
}

impl Block {
    /// Structural problems that make the block meaningless (as opposed to
    /// overlap violations, which [`PartitionDesc::validate`] reports).
    fn malformed_reason(&self) -> Option<String> {
        match self {
            Block::Single(_) => None,
            Block::Arith {
                proto,
                stride,
                count,
            } => {
                if !proto.is_bounded() {
                    Some("arith proto must be bounded".into())
                } else if stride.is_zero() && *count > Cardinal::one() {
                    Some("arith stride must be nonzero".into())
                } else if !count.is_countable() {
                    Some("arith count must be at most aleph0".into())
                } else if count.is_finite() && count.to_u64().is_none() {
                    Some("finite arith count is too large".into())
                } else {
                    None
                }
            }
            Block::HarmonicFill {
                length,
                stride,
                count,
                ..
            } => {
                if !length.is_positive() {
                    Some("harmonic cell length must be positive".into())
                } else if stride.is_negative() {
                    Some("harmonic stride must be nonnegative".into())
                } else if stride.is_zero() && *count > Cardinal::one() {
                    Some("harmonic stride must be positive for more than one cell".into())
                } else if !count.is_countable() {
                    Some("harmonic count must be at most aleph0".into())
                } else if count.is_finite() && count.to_u64().is_none() {
                    Some("finite harmonic count is too large".into())
                } else {
                    None
                }
            }
        }
    }
}

/// A finite description of an interval partition of ℝ. Uncovered points are
/// implicit singleton members.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PartitionDesc {
    pub blocks: Vec<Block>,
}

/// The homeomorphism invariant of a locally connected refinement:
/// counts of singleton, compact, half-open and open members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeQuadruple {
    pub alpha: Cardinal,
    pub beta: Cardinal,
    pub gamma: Cardinal,
    pub delta: Cardinal,
}

impl TypeQuadruple {
    /// Checks that β, γ, δ are countable (every nondegenerate interval
    /// contains a rational, so only α can reach the continuum).
    pub fn new(
        alpha: Cardinal,
        beta: Cardinal,
        gamma: Cardinal,
        delta: Cardinal,
    ) -> Result<Self, PartitionError> {
        for (name, c) in [("beta", &beta), ("gamma", &gamma), ("delta", &delta)] {
            if !c.is_countable() {
                return Err(PartitionError::Format(format!(
                    "{name} must be countable, got {c}"
                )));
            }
        }
        Ok(TypeQuadruple {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn from_u64(alpha: u64, beta: u64, gamma: u64, delta: u64) -> Self {
        TypeQuadruple {
            alpha: Cardinal::fin(alpha),
            beta: Cardinal::fin(beta),
            gamma: Cardinal::fin(gamma),
            delta: Cardinal::fin(delta),
        }
    }
}

impl fmt::Display for TypeQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

impl FromStr for TypeQuadruple {
    type Err = PartitionError;

    /// Accepts `"(a,b,g,d)"` in the cardinal lexicon, e.g. `"(continuum,1,0,aleph0)"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| PartitionError::Format(format!("not a type quadruple: {s:?}")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 4 {
            return Err(PartitionError::Format(format!(
                "type quadruple needs 4 entries, got {}",
                parts.len()
            )));
        }
        let card = |p: &str| {
            p.trim()
                .parse::<Cardinal>()
                .map_err(|e| PartitionError::Format(e.to_string()))
        };
        TypeQuadruple::new(
            card(parts[0])?,
            card(parts[1])?,
            card(parts[2])?,
            card(parts[3])?,
        )
    }
}

/// A reported defect in a partition description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two member intervals (possibly of the same block) share a point.
    Overlap {
        block_a: usize,
        block_b: usize,
        member_a: Box<Interval>,
        member_b: Box<Interval>,
        witness: Rational,
    },
    /// A block breaks its own structural invariants.
    Malformed { block: usize, reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Overlap {
                block_a,
                block_b,
                member_a,
                member_b,
                witness,
            } => write!(
                f,
                "blocks {block_a} and {block_b} overlap at {witness} (members {member_a} and {member_b})"
            ),
            Violation::Malformed { block, reason } => {
                write!(f, "block {block} is malformed: {reason}")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PartitionError {
    #[error("invalid partition description ({n} violation(s)): {first}", n = .0.len(), first = .0[0])]
    Invalid(Vec<Violation>),
    #[error("type {0} is not admissible")]
    Inadmissible(Box<TypeQuadruple>),
    #[error("no unbounded open member or complement interval available to carve")]
    NoCarvable,
    #[error(
        "target (gamma'={gamma}, delta'={delta}) violates the carving side conditions for type {current}"
    )]
    BadCarveTarget {
        gamma: Cardinal,
        delta: Cardinal,
        current: Box<TypeQuadruple>,
    },
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("{0}")]
    Format(String),
}

/// A block's covered set, normalized to an arithmetic family of intervals.
/// Harmonic cells enter as their open cell intervals (the tiling is exact, so
/// coverage questions never need the individual half-open members).
#[derive(Clone, Debug)]
pub(crate) struct CoverFamily {
    pub block: usize,
    pub proto: Interval,
    pub stride: Rational,
    pub count: Cardinal,
}

impl CoverFamily {
    fn from_block(block: usize, b: &Block) -> Option<CoverFamily> {
        match b {
            Block::Single(i) => Some(CoverFamily {
                block,
                proto: i.clone(),
                stride: Rational::zero(),
                count: Cardinal::one(),
            }),
            Block::Arith {
                proto,
                stride,
                count,
            } => {
                if count.is_zero() {
                    None
                } else {
                    Some(CoverFamily {
                        block,
                        proto: proto.clone(),
                        stride: stride.clone(),
                        count: count.clone(),
                    })
                }
            }
            Block::HarmonicFill {
                anchor,
                length,
                stride,
                count,
                ..
            } => {
                if count.is_zero() {
                    None
                } else {
                    Some(CoverFamily {
                        block,
                        proto: Interval::open(anchor.clone(), anchor + length),
                        stride: stride.clone(),
                        count: count.clone(),
                    })
                }
            }
        }
    }

    fn is_infinite(&self) -> bool {
        self.count == Cardinal::Aleph0
    }

    fn rightward_infinite(&self) -> bool {
        self.is_infinite() && self.stride.is_positive()
    }

    fn leftward_infinite(&self) -> bool {
        self.is_infinite() && self.stride.is_negative()
    }

    pub fn member(&self, n: &num_bigint::BigInt) -> Interval {
        self.proto
            .translate(&(&self.stride * Rational::from_integer(n.clone())))
    }

    /// Members whose closure touches `[a, b]` (a rational superset window).
    /// The enumeration is exact on index range, conservative on touching.
    pub fn members_touching(&self, a: Option<&Rational>, b: Option<&Rational>) -> Vec<Interval> {
        use num_bigint::BigInt;
        if self.count <= Cardinal::one() {
            let touches = window_touches(&self.proto, a, b);
            return if touches {
                vec![self.proto.clone()]
            } else {
                vec![]
            };
        }
        // proto is bounded here (arith invariant / harmonic cells)
        let lo = self.proto.lo().rational().expect("bounded proto").clone();
        let hi = self.proto.hi().rational().expect("bounded proto").clone();
        let s = &self.stride;
        // n*s ranges over [a - hi, b - lo] for the member to touch [a, b]
        let mut n_min = BigInt::zero();
        let mut n_max: Option<BigInt> = self.count.to_u64().map(|k| BigInt::from(k) - 1);
        let bound_from = |x: &Rational| (x / s).ceil().to_integer();
        let bound_to = |x: &Rational| (x / s).floor().to_integer();
        if s.is_positive() {
            if let Some(a) = a {
                n_min = n_min.max(bound_from(&(a - &hi)));
            }
            if let Some(b) = b {
                let m = bound_to(&(b - &lo));
                n_max = Some(n_max.map_or(m.clone(), |x| x.min(m)));
            }
        } else {
            if let Some(b) = b {
                n_min = n_min.max(bound_from(&(b - &lo)));
            }
            if let Some(a) = a {
                let m = bound_to(&(a - &hi));
                n_max = Some(n_max.map_or(m.clone(), |x| x.min(m)));
            }
        }
        let Some(n_max) = n_max else {
            // both window and family unbounded in the same direction; callers
            // never ask for this, keep it loud
            panic!("unbounded member enumeration");
        };
        let mut out = Vec::new();
        let mut n = n_min;
        while n <= n_max {
            out.push(self.member(&n));
            n += 1;
        }
        out
    }
}

fn window_touches(i: &Interval, a: Option<&Rational>, b: Option<&Rational>) -> bool {
    let above = match (a, i.hi()) {
        (None, _) => true,
        (Some(_), Endpoint::PosInf) => true,
        (Some(a), Endpoint::Rat(h)) => h >= a,
        (Some(_), Endpoint::NegInf) => unreachable!(),
    };
    let below = match (b, i.lo()) {
        (None, _) => true,
        (Some(_), Endpoint::NegInf) => true,
        (Some(b), Endpoint::Rat(l)) => l <= b,
        (Some(_), Endpoint::PosInf) => unreachable!(),
    };
    above && below
}

/// lcm of a set of positive rational periods: the smallest positive rational
/// that is an integer multiple of each.
fn rational_lcm(periods: &[Rational]) -> Rational {
    use num_integer::Integer;
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for p in periods {
        debug_assert!(p.is_positive());
        num = num.lcm(p.numer());
        den = den.gcd(p.denom());
    }
    Rational::new(num, den)
}

/// Shared geometry of a description: families, tail periods and the core
/// bounds beyond which all coverage is purely periodic.
pub(crate) struct Analysis {
    pub families: Vec<CoverFamily>,
    pub right_period: Option<Rational>,
    pub left_period: Option<Rational>,
    /// Beyond this everything on the right is periodic (max finite extent).
    pub right_bound: Option<Rational>,
    pub left_bound: Option<Rational>,
}

impl Analysis {
    fn new(desc: &PartitionDesc) -> Analysis {
        let families: Vec<CoverFamily> = desc
            .blocks
            .iter()
            .enumerate()
            .filter_map(|(i, b)| CoverFamily::from_block(i, b))
            .collect();
        let right: Vec<Rational> = families
            .iter()
            .filter(|f| f.rightward_infinite())
            .map(|f| f.stride.clone())
            .collect();
        let left: Vec<Rational> = families
            .iter()
            .filter(|f| f.leftward_infinite())
            .map(|f| -f.stride.clone())
            .collect();
        let right_period = (!right.is_empty()).then(|| rational_lcm(&right));
        let left_period = (!left.is_empty()).then(|| rational_lcm(&left));

        // finite extents: every finite endpoint of every finite family member
        // range, plus the proto extent of infinite families
        let mut his: Vec<Rational> = Vec::new();
        let mut los: Vec<Rational> = Vec::new();
        for f in &families {
            let proto_lo = f.proto.lo().rational().cloned();
            let proto_hi = f.proto.hi().rational().cloned();
            match (&f.count, f.stride.is_positive()) {
                (Cardinal::Aleph0, true) => {
                    // rightward: start end is finite
                    los.extend(proto_lo);
                    his.extend(proto_hi);
                }
                (Cardinal::Aleph0, false) => {
                    los.extend(proto_lo);
                    his.extend(proto_hi);
                }
                _ => {
                    // finite family: both extreme members
                    let k = f
                        .count
                        .to_u64()
                        .expect("oversized counts are malformed")
                        .max(1);
                    let last = &f.stride * rat_int(k as i64 - 1);
                    if let Some(l) = proto_lo {
                        los.push(l.clone());
                        los.push(&l + &last);
                    }
                    if let Some(h) = proto_hi {
                        his.push(h.clone());
                        his.push(&h + &last);
                    }
                }
            }
        }
        let right_bound = his.iter().cloned().chain(los.iter().cloned()).max();
        let left_bound = his.iter().cloned().chain(los.iter().cloned()).min();
        Analysis {
            families,
            right_period,
            left_period,
            right_bound,
            left_bound,
        }
    }
}

impl PartitionDesc {
    pub fn new(blocks: Vec<Block>) -> Self {
        PartitionDesc { blocks }
    }

    /// Checks that all member intervals across all blocks are pairwise
    /// disjoint. Infinite families are compared over a window two common
    /// periods wide around the non-periodic core; by periodicity any tail
    /// collision reappears there.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations: Vec<Violation> = self
            .blocks
            .iter()
            .enumerate()
            .filter_map(|(i, b)| {
                b.malformed_reason()
                    .map(|reason| Violation::Malformed { block: i, reason })
            })
            .collect();
        if !violations.is_empty() {
            return violations;
        }
        let analysis = Analysis::new(self);
        let window_hi = analysis
            .right_period
            .as_ref()
            .map(|p| analysis.right_bound.clone().unwrap() + p * rat_int(2));
        let window_lo = analysis
            .left_period
            .as_ref()
            .map(|p| analysis.left_bound.clone().unwrap() - p * rat_int(2));
        let mut items: Vec<(usize, Interval)> = Vec::new();
        for f in &analysis.families {
            for m in f.members_touching(window_lo.as_ref(), window_hi.as_ref()) {
                items.push((f.block, m));
            }
        }
        items.sort_by(|a, b| {
            cmp_lower((a.1.lo(), a.1.lo_closed()), (b.1.lo(), b.1.lo_closed())).then(a.0.cmp(&b.0))
        });
        // running scan: any overlap shows up against the max-upper item so far
        let mut reach: Option<&(usize, Interval)> = None;
        for item in &items {
            if let Some(prev) = reach {
                if let Some(common) = prev.1.intersect(&item.1) {
                    violations.push(Violation::Overlap {
                        block_a: prev.0,
                        block_b: item.0,
                        member_a: Box::new(prev.1.clone()),
                        member_b: Box::new(item.1.clone()),
                        witness: common.sample_point(),
                    });
                    if violations.len() >= 64 {
                        return violations;
                    }
                }
                let extends = crate::interval::cmp_upper(
                    (item.1.hi(), item.1.hi_closed()),
                    (prev.1.hi(), prev.1.hi_closed()),
                ) == std::cmp::Ordering::Greater;
                if extends {
                    reach = Some(item);
                }
            } else {
                reach = Some(item);
            }
        }
        violations
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), PartitionError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(PartitionError::Invalid(v))
        }
    }

    /// True iff some block member contains `x`. Decided from the block data
    /// directly, without any sweep.
    pub fn covers(&self, x: &Rational) -> bool {
        self.blocks.iter().any(|b| block_covers(b, x))
    }

    /// The maximal intervals of the uncovered set.
    pub fn complement_components(&self) -> Result<Complement, PartitionError> {
        self.ensure_valid()?;
        Ok(complement::complement(self))
    }

    /// The type quadruple (α, β, γ, δ): counts of singleton, compact,
    /// half-open and open members, fill singletons included in α. Any
    /// nondegenerate uncovered interval forces α = continuum, since the fill
    /// then contributes a singleton per real of that interval.
    pub fn compute_type(&self) -> Result<TypeQuadruple, PartitionError> {
        self.ensure_valid()?;
        let mut explicit = Cardinal::zero();
        let mut beta = Cardinal::zero();
        let mut gamma = Cardinal::zero();
        let mut delta = Cardinal::zero();
        for b in &self.blocks {
            let (kind, count) = match b {
                Block::Single(i) => (i.kind(), Cardinal::one()),
                Block::Arith { proto, count, .. } => (proto.kind(), count.clone()),
                Block::HarmonicFill { count, .. } => {
                    gamma = gamma.add(&Cardinal::Aleph0.mul(count));
                    continue;
                }
            };
            let slot = match kind {
                IntervalKind::Singleton => &mut explicit,
                IntervalKind::Compact => &mut beta,
                IntervalKind::HalfOpen => &mut gamma,
                IntervalKind::Open => &mut delta,
            };
            *slot = slot.add(&count);
        }
        let fill = complement::complement(self).fill_cardinal();
        TypeQuadruple::new(explicit.add(&fill), beta, gamma, delta)
    }

    /// See (8.3): raises γ by carving half-open intervals out of an unbounded
    /// open interval, or trades open members for harmonic fills.
    pub fn apply_83(
        &self,
        gamma_new: Cardinal,
        delta_new: Cardinal,
    ) -> Result<PartitionDesc, PartitionError> {
        transform::apply_83(self, gamma_new, delta_new)
    }

    /// See (8.4): strips every member's noncut endpoints into singleton
    /// members, leaving a partition of type (α+2β+γ, 0, 0, β+γ+δ).
    pub fn apply_84(&self) -> Result<PartitionDesc, PartitionError> {
        transform::apply_84(self)
    }

    /// Reads the partition file format (a JSON document with a `blocks` array).
    pub fn from_json(s: &str) -> Result<PartitionDesc, PartitionError> {
        io::from_json(s)
    }

    /// Writes the partition file format with blocks in canonical order
    /// (sorted by leftmost covered point).
    pub fn to_json(&self) -> String {
        io::to_json(self)
    }
}

fn block_covers(b: &Block, x: &Rational) -> bool {
    match b {
        Block::Single(i) => i.contains(x),
        Block::Arith {
            proto,
            stride,
            count,
        } => {
            if count.is_zero() {
                return false;
            }
            if count.to_u64() == Some(1) || stride.is_zero() {
                return proto.contains(x);
            }
            let lo = proto.lo().rational().expect("bounded proto");
            // candidate indices around (x - lo) / stride
            let approx = ((x - lo) / stride).floor().to_integer();
            for d in [-1i64, 0, 1] {
                let n = &approx + num_bigint::BigInt::from(d);
                if n < num_bigint::BigInt::zero() {
                    continue;
                }
                if let Some(k) = count.to_u64() {
                    if n >= num_bigint::BigInt::from(k) {
                        continue;
                    }
                }
                let member = proto.translate(&(stride * Rational::from_integer(n)));
                if member.contains(x) {
                    return true;
                }
            }
            false
        }
        Block::HarmonicFill {
            anchor,
            length,
            stride,
            count,
            ..
        } => {
            if count.is_zero() {
                return false;
            }
            // covered set of a cell is exactly its open interval
            let cell_contains = |base: &Rational| x > base && *x < base + length;
            if count.to_u64() == Some(1) || stride.is_zero() {
                return cell_contains(anchor);
            }
            let approx = ((x - anchor) / stride).floor().to_integer();
            for d in [-1i64, 0, 1] {
                let n = &approx + num_bigint::BigInt::from(d);
                if n < num_bigint::BigInt::zero() {
                    continue;
                }
                if let Some(k) = count.to_u64() {
                    if n >= num_bigint::BigInt::from(k) {
                        continue;
                    }
                }
                let base = anchor + stride * Rational::from_integer(n);
                if cell_contains(&base) {
                    return true;
                }
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::rat;

    fn iv(s: &str) -> Interval {
        s.parse().unwrap()
    }

    #[test]
    fn shared_closed_point_is_a_violation() {
        let desc = PartitionDesc::new(vec![Block::Single(iv("[0,1]")), Block::Single(iv("[1,2]"))]);
        let v = desc.validate();
        assert_eq!(v.len(), 1);
        match &v[0] {
            Violation::Overlap {
                block_a,
                block_b,
                witness,
                ..
            } => {
                assert_eq!((*block_a, *block_b), (0, 1));
                assert_eq!(witness, &rat_int(1));
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn narrow_stride_is_a_violation() {
        let desc = PartitionDesc::new(vec![Block::Arith {
            proto: iv("[0,1]"),
            stride: rat(1, 2),
            count: Cardinal::fin(3),
        }]);
        assert!(!desc.validate().is_empty());
    }

    #[test]
    fn six_spaced_families_are_disjoint() {
        let desc = PartitionDesc::new(vec![
            Block::Arith {
                proto: iv("[0,1]"),
                stride: rat_int(6),
                count: Cardinal::Aleph0,
            },
            Block::Arith {
                proto: iv("[2,3["),
                stride: rat_int(6),
                count: Cardinal::Aleph0,
            },
            Block::Arith {
                proto: iv("]4,5["),
                stride: rat_int(6),
                count: Cardinal::Aleph0,
            },
        ]);
        assert!(desc.validate().is_empty());
    }

    #[test]
    fn deep_tail_collisions_are_found() {
        // strides 2 and 3 first collide when 2-grid and 3-grid members meet;
        // the protos themselves are disjoint
        let desc = PartitionDesc::new(vec![
            Block::Arith {
                proto: iv("[0,1/2]"),
                stride: rat_int(2),
                count: Cardinal::Aleph0,
            },
            Block::Arith {
                proto: iv("[1,3/2]"),
                stride: rat_int(3),
                count: Cardinal::Aleph0,
            },
        ]);
        // members [4, 9/2] (n=2) and [4, 9/2] (n=1) collide
        assert!(!desc.validate().is_empty());
    }

    #[test]
    fn type_of_empty_description_is_discrete() {
        let desc = PartitionDesc::new(vec![]);
        let t = desc.compute_type().unwrap();
        assert_eq!(
            t,
            TypeQuadruple {
                alpha: Cardinal::Continuum,
                beta: Cardinal::zero(),
                gamma: Cardinal::zero(),
                delta: Cardinal::zero(),
            }
        );
    }

    #[test]
    fn type_of_sparse_blocks_has_continuum_fill() {
        let desc = PartitionDesc::new(vec![
            Block::Single(iv("[0,1]")),
            Block::Single(iv("[2,3[")),
            Block::Single(iv("]4,5[")),
        ]);
        let t = desc.compute_type().unwrap();
        assert_eq!(t.to_string(), "(continuum,1,1,1)");
    }

    #[test]
    fn type_of_explicit_cover() {
        let desc = PartitionDesc::new(vec![
            Block::Single(iv("[0,0]")),
            Block::Single(iv("[1,2]")),
            Block::Single(iv("]-inf,0[")),
            Block::Single(iv("]0,1[")),
            Block::Single(iv("]2,+inf[")),
        ]);
        let t = desc.compute_type().unwrap();
        assert_eq!(t, TypeQuadruple::from_u64(1, 1, 0, 3));
    }

    #[test]
    fn type_of_two_half_open_tails() {
        let desc = PartitionDesc::new(vec![
            Block::Arith {
                proto: iv("[0,1["),
                stride: rat_int(1),
                count: Cardinal::Aleph0,
            },
            Block::Arith {
                proto: iv("[-1,0["),
                stride: rat_int(-1),
                count: Cardinal::Aleph0,
            },
        ]);
        let t = desc.compute_type().unwrap();
        assert_eq!(
            t,
            TypeQuadruple::new(
                Cardinal::zero(),
                Cardinal::zero(),
                Cardinal::Aleph0,
                Cardinal::zero()
            )
            .unwrap()
        );
    }

    #[test]
    fn isolated_uncovered_points_count_into_alpha() {
        let desc = PartitionDesc::new(vec![
            Block::Single(iv("]-inf,0[")),
            Block::Single(iv("]0,+inf[")),
        ]);
        let t = desc.compute_type().unwrap();
        assert_eq!(t, TypeQuadruple::from_u64(1, 0, 0, 2));
    }

    #[test]
    fn type_quadruple_text_round_trip() {
        for s in ["(0,0,0,1)", "(continuum,1,1,1)", "(aleph0,2,0,aleph0)"] {
            let t: TypeQuadruple = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("(1,2,3)".parse::<TypeQuadruple>().is_err());
        assert!("(1,continuum,0,1)".parse::<TypeQuadruple>().is_err());
    }

    #[test]
    fn covers_matches_member_geometry() {
        let desc = PartitionDesc::new(vec![
            Block::Arith {
                proto: iv("[0,1["),
                stride: rat_int(3),
                count: Cardinal::fin(2),
            },
            Block::HarmonicFill {
                anchor: rat_int(7),
                length: rat_int(1),
                side: Side::AccumulateLeft,
                stride: rat_int(2),
                count: Cardinal::Aleph0,
            },
        ]);
        assert!(desc.covers(&rat(1, 2)));
        assert!(desc.covers(&rat(7, 2)));
        assert!(!desc.covers(&rat_int(1)));
        assert!(!desc.covers(&rat_int(6)));
        assert!(!desc.covers(&rat_int(7))); // cell ends are uncovered
        assert!(desc.covers(&rat(15, 2)));
        assert!(desc.covers(&rat(19, 2)));
        assert!(!desc.covers(&rat_int(10)));
    }
}
