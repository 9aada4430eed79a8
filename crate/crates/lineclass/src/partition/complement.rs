//! Exact complement extraction: the maximal intervals of ℝ not covered by
//! any block member, as a finite core list plus eventually periodic tails.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::cardinal::Cardinal;
use crate::interval::{cmp_lower, cmp_upper, Endpoint, Interval, Rational};

use super::{Analysis, PartitionDesc};

/// The complement pattern toward one infinity: beyond `from` (a covered
/// point) the uncovered set repeats with the given period. `gaps` lists the
/// complement inside the first period window adjacent to `from`; every
/// further period is a translate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicTail {
    pub from: Rational,
    pub period: Rational,
    pub gaps: Vec<Interval>,
}

/// Maximal uncovered intervals of a valid description.
///
/// `core` holds every component between the two tail boundaries (including
/// unbounded ones on sides without an infinite family). A side with an
/// infinite family gets a [`PeriodicTail`] instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub core: Vec<Interval>,
    pub left_tail: Option<PeriodicTail>,
    pub right_tail: Option<PeriodicTail>,
}

impl Complement {
    /// True iff some uncovered component has positive length.
    pub fn has_nondegenerate(&self) -> bool {
        let tail_nondeg =
            |t: &Option<PeriodicTail>| t.iter().any(|t| t.gaps.iter().any(|g| !g.is_singleton()));
        self.core.iter().any(|i| !i.is_singleton())
            || tail_nondeg(&self.left_tail)
            || tail_nondeg(&self.right_tail)
    }

    /// How many singleton members the implicit fill contributes: 𝔠 as soon as
    /// any uncovered component is nondegenerate, otherwise the exact count of
    /// isolated uncovered points.
    pub fn fill_cardinal(&self) -> Cardinal {
        if self.has_nondegenerate() {
            return Cardinal::Continuum;
        }
        let mut n = Cardinal::fin(self.core.len() as u64);
        for t in [&self.left_tail, &self.right_tail].into_iter().flatten() {
            if !t.gaps.is_empty() {
                n = n.add(&Cardinal::Aleph0);
            }
        }
        n
    }

    /// Materializes the uncovered components meeting `[a, b]`, clipped to it.
    pub fn components_within(&self, a: &Rational, b: &Rational) -> Vec<Interval> {
        if a > b {
            return Vec::new();
        }
        let window = if a == b {
            Interval::point(a.clone())
        } else {
            Interval::segment(a.clone(), b.clone())
        };
        let mut out: Vec<Interval> = self
            .core
            .iter()
            .filter_map(|c| c.intersect(&window))
            .collect();
        if let Some(t) = &self.right_tail {
            let mut shift = Rational::zero();
            while &t.from + &shift <= *b {
                for g in &t.gaps {
                    if let Some(clipped) = g.translate(&shift).intersect(&window) {
                        out.push(clipped);
                    }
                }
                shift += &t.period;
            }
        }
        if let Some(t) = &self.left_tail {
            let mut shift = Rational::zero();
            while &t.from - &shift >= *a {
                for g in &t.gaps {
                    if let Some(clipped) = g.translate(&-&shift).intersect(&window) {
                        out.push(clipped);
                    }
                }
                shift += &t.period;
            }
        }
        out.sort_by(|x, y| cmp_lower((x.lo(), x.lo_closed()), (y.lo(), y.lo_closed())));
        out
    }
}

/// Merges intervals into the maximal intervals of their union.
pub(crate) fn union_merge(mut items: Vec<Interval>) -> Vec<Interval> {
    items.sort_by(|a, b| cmp_lower((a.lo(), a.lo_closed()), (b.lo(), b.lo_closed())));
    let mut out: Vec<Interval> = Vec::new();
    for it in items {
        if let Some(last) = out.last_mut() {
            let meets = match (last.hi(), it.lo()) {
                (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => true,
                (Endpoint::Rat(h), Endpoint::Rat(l)) => match h.cmp(l) {
                    Ordering::Greater => true,
                    Ordering::Equal => last.hi_closed() || it.lo_closed(),
                    Ordering::Less => false,
                },
                _ => unreachable!("interval invariants"),
            };
            if meets {
                if cmp_upper((it.hi(), it.hi_closed()), (last.hi(), last.hi_closed()))
                    == Ordering::Greater
                {
                    *last = Interval::new(
                        last.lo().clone(),
                        last.lo_closed(),
                        it.hi().clone(),
                        it.hi_closed(),
                    )
                    .expect("merge preserves bound order");
                }
                continue;
            }
        }
        out.push(it);
    }
    out
}

/// The uncovered intervals inside a window, given the merged covered
/// segments. Window bounds may be infinite (open).
fn gaps_in_window(
    lo: (Endpoint, bool),
    hi: (Endpoint, bool),
    covered: &[Interval],
) -> Vec<Interval> {
    let window = match Interval::new(lo.0.clone(), lo.1, hi.0.clone(), hi.1) {
        Ok(w) => w,
        Err(_) => return Vec::new(),
    };
    let clipped: Vec<Interval> = covered
        .iter()
        .filter_map(|c| c.intersect(&window))
        .collect();
    let mut gaps = Vec::new();
    let mut cursor = (lo.0, lo.1);
    for seg in &clipped {
        if let Ok(gap) = Interval::new(
            cursor.0.clone(),
            cursor.1,
            seg.lo().clone(),
            !seg.lo_closed(),
        ) {
            gaps.push(gap);
        }
        cursor = (seg.hi().clone(), !seg.hi_closed());
    }
    if let Ok(gap) = Interval::new(cursor.0, cursor.1, hi.0, hi.1) {
        gaps.push(gap);
    }
    gaps
}

fn covered_point(member: &Interval) -> Rational {
    if member.lo_closed() {
        member
            .lo()
            .rational()
            .expect("closed end is finite")
            .clone()
    } else if member.hi_closed() {
        member
            .hi()
            .rational()
            .expect("closed end is finite")
            .clone()
    } else {
        member.sample_point()
    }
}

fn make_tail(analysis: &Analysis, rightward: bool) -> Option<PeriodicTail> {
    let period = if rightward {
        analysis.right_period.clone()?
    } else {
        analysis.left_period.clone()?
    };
    let bound = if rightward {
        analysis
            .right_bound
            .clone()
            .expect("families have finite anchors")
    } else {
        analysis
            .left_bound
            .clone()
            .expect("families have finite anchors")
    };
    let family = analysis
        .families
        .iter()
        .find(|f| {
            if rightward {
                f.rightward_infinite()
            } else {
                f.leftward_infinite()
            }
        })
        .expect("period implies a family");
    // first member wholly beyond the non-periodic core
    let proto_lo = family.proto.lo().rational().expect("bounded proto");
    let proto_hi = family.proto.hi().rational().expect("bounded proto");
    let n = if rightward {
        ((&bound - proto_lo) / &family.stride).ceil().to_integer()
    } else {
        ((&bound - proto_hi) / &family.stride).ceil().to_integer()
    }
    .max(num_bigint::BigInt::zero());
    let member = family.member(&n);
    let from = covered_point(&member);

    let (win_lo, win_hi) = if rightward {
        (from.clone(), &from + &period)
    } else {
        (&from - &period, from.clone())
    };
    let mut covered = Vec::new();
    for f in &analysis.families {
        covered.extend(f.members_touching(Some(&win_lo), Some(&win_hi)));
    }
    let covered = union_merge(covered);
    let gaps = gaps_in_window(
        (Endpoint::Rat(win_lo), true),
        (Endpoint::Rat(win_hi), true),
        &covered,
    );
    debug_assert!(
        gaps.iter().all(|g| !g.contains(&from)),
        "tail boundary must be covered"
    );
    Some(PeriodicTail { from, period, gaps })
}

/// Computes the complement of a (valid) description.
pub(crate) fn complement(desc: &PartitionDesc) -> Complement {
    let analysis = Analysis::new(desc);
    if analysis.families.is_empty() {
        return Complement {
            core: vec![Interval::line()],
            left_tail: None,
            right_tail: None,
        };
    }
    let right_tail = make_tail(&analysis, true);
    let left_tail = make_tail(&analysis, false);
    let core_lo = left_tail.as_ref().map(|t| t.from.clone());
    let core_hi = right_tail.as_ref().map(|t| t.from.clone());
    let mut covered = Vec::new();
    for f in &analysis.families {
        covered.extend(f.members_touching(core_lo.as_ref(), core_hi.as_ref()));
    }
    let covered = union_merge(covered);
    let lo_bound = match core_lo {
        Some(r) => (Endpoint::Rat(r), true),
        None => (Endpoint::NegInf, false),
    };
    let hi_bound = match core_hi {
        Some(r) => (Endpoint::Rat(r), true),
        None => (Endpoint::PosInf, false),
    };
    let core = gaps_in_window(lo_bound, hi_bound, &covered);
    Complement {
        core,
        left_tail,
        right_tail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::rat_int;
    use crate::partition::Block;

    fn iv(s: &str) -> Interval {
        s.parse().unwrap()
    }

    #[test]
    fn single_block_leaves_two_rays() {
        let desc = PartitionDesc::new(vec![Block::Single(iv("[0,1]"))]);
        let c = desc.complement_components().unwrap();
        assert_eq!(c.core, vec![iv("]-inf,0["), iv("]1,+inf[")]);
        assert!(c.left_tail.is_none() && c.right_tail.is_none());
    }

    #[test]
    fn unit_half_open_tiling_covers_the_right_axis() {
        let desc = PartitionDesc::new(vec![Block::Arith {
            proto: iv("[0,1["),
            stride: rat_int(1),
            count: Cardinal::Aleph0,
        }]);
        let c = desc.complement_components().unwrap();
        assert_eq!(c.core, vec![iv("]-inf,0[")]);
        let t = c.right_tail.as_ref().unwrap();
        assert!(t.gaps.is_empty(), "tail should be fully covered: {t:?}");
        assert_eq!(c.fill_cardinal(), Cardinal::Continuum);
    }

    #[test]
    fn no_blocks_means_the_whole_line() {
        let desc = PartitionDesc::new(vec![]);
        let c = desc.complement_components().unwrap();
        assert_eq!(c.core, vec![Interval::line()]);
    }

    #[test]
    fn open_members_leave_periodic_point_gaps() {
        let desc = PartitionDesc::new(vec![Block::Arith {
            proto: iv("]0,1["),
            stride: rat_int(1),
            count: Cardinal::Aleph0,
        }]);
        let c = desc.complement_components().unwrap();
        let t = c.right_tail.as_ref().unwrap();
        assert_eq!(t.gaps.len(), 1);
        assert!(t.gaps[0].is_singleton());
        // ]-inf,0] core plus one isolated point per period: fill is continuum
        // because of the nondegenerate left ray
        assert_eq!(c.fill_cardinal(), Cardinal::Continuum);
    }

    #[test]
    fn fully_periodic_singleton_gaps_count_aleph0() {
        // cover ]-inf,0] and tile ]0,oo[ with open members: gaps at integers
        let desc = PartitionDesc::new(vec![
            Block::Single(iv("]-inf,0]")),
            Block::Arith {
                proto: iv("]0,1["),
                stride: rat_int(1),
                count: Cardinal::Aleph0,
            },
        ]);
        let c = desc.complement_components().unwrap();
        assert!(c.core.iter().all(|g| g.is_singleton()));
        assert_eq!(c.fill_cardinal(), Cardinal::Aleph0);
    }

    #[test]
    fn components_within_matches_pointwise_coverage() {
        let desc = PartitionDesc::new(vec![
            Block::Single(iv("[0,1]")),
            Block::Arith {
                proto: iv("[2,5/2["),
                stride: rat_int(2),
                count: Cardinal::Aleph0,
            },
            Block::Arith {
                proto: iv("]-2,-1]"),
                stride: rat_int(-2),
                count: Cardinal::Aleph0,
            },
        ]);
        let c = desc.complement_components().unwrap();
        let comps = c.components_within(&rat_int(-20), &rat_int(20));
        for n in -480..=480 {
            let p = crate::interval::rat(n, 24);
            let uncovered = comps.iter().any(|i| i.contains(&p));
            assert_eq!(uncovered, !desc.covers(&p), "at {p}");
        }
    }
}
