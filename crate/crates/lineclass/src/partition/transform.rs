//! The two type transformations on partition descriptions: carving half-open
//! chains out of an unbounded open interval, and stripping noncut endpoints
//! into singletons.

use crate::cardinal::Cardinal;
use crate::interval::{rat_int, Endpoint, Interval, Rational};

use super::{Block, PartitionDesc, PartitionError, Side, TypeQuadruple};

/// How many half-open intervals to carve to move γ up to γ'.
fn carve_count(gamma: &Cardinal, gamma_new: &Cardinal) -> Cardinal {
    match gamma_new {
        Cardinal::Aleph0 => {
            if *gamma == Cardinal::Aleph0 {
                Cardinal::zero()
            } else {
                Cardinal::Aleph0
            }
        }
        Cardinal::Fin(n) => match gamma {
            Cardinal::Fin(m) => Cardinal::Fin(n - m),
            _ => unreachable!("gamma <= gamma_new was checked"),
        },
        Cardinal::Continuum => unreachable!("countability was checked"),
    }
}

enum CarveTarget {
    /// An unbounded open member interval, replaced in place.
    Member(usize, Interval),
    /// An unbounded uncovered component; carved members are appended and the
    /// rest stays implicit fill.
    Fill(Interval),
}

fn find_carve_target(desc: &PartitionDesc) -> Result<CarveTarget, PartitionError> {
    let mut candidates: Vec<CarveTarget> = Vec::new();
    for (i, b) in desc.blocks.iter().enumerate() {
        if let Block::Single(iv) = b {
            if iv.kind() == crate::interval::IntervalKind::Open && !iv.is_bounded() {
                candidates.push(CarveTarget::Member(i, iv.clone()));
            }
        }
    }
    for comp in desc.complement_components()?.core {
        if !comp.is_bounded() {
            candidates.push(CarveTarget::Fill(comp));
        }
    }
    // rightmost first: the target reaching +inf wins, else the left ray
    let rightmost = candidates.into_iter().max_by_key(|c| {
        let iv = match c {
            CarveTarget::Member(_, iv) | CarveTarget::Fill(iv) => iv,
        };
        *iv.hi() == Endpoint::PosInf
    });
    rightmost.ok_or(PartitionError::NoCarvable)
}

/// `[base, base+1[, [base+1, base+2[, …` — finitely many ending in a ray, or
/// a unit-stride family.
fn right_chain(base: Rational, k: &Cardinal) -> Vec<Block> {
    match k {
        Cardinal::Aleph0 => vec![Block::Arith {
            proto: Interval::left_closed(base.clone(), &base + rat_int(1)),
            stride: rat_int(1),
            count: Cardinal::Aleph0,
        }],
        Cardinal::Fin(n) => {
            let n = u64::try_from(n).expect("finite carve count fits u64");
            let mut out = Vec::new();
            for i in 0..n.saturating_sub(1) {
                let a = &base + rat_int(i as i64);
                out.push(Block::Single(Interval::left_closed(
                    a.clone(),
                    &a + rat_int(1),
                )));
            }
            out.push(Block::Single(Interval::ray_right(
                &base + rat_int(n as i64 - 1),
                true,
            )));
            out
        }
        Cardinal::Continuum => unreachable!(),
    }
}

fn carve_member(j: &Interval, k: &Cardinal) -> Vec<Block> {
    match (j.lo(), j.hi()) {
        (Endpoint::NegInf, Endpoint::PosInf) => {
            let mut out = vec![Block::Single(Interval::ray_left(rat_int(0), false))];
            out.extend(right_chain(rat_int(0), k));
            out
        }
        (Endpoint::Rat(g), Endpoint::PosInf) => {
            let mut out = vec![Block::Single(Interval::open(g.clone(), g + rat_int(1)))];
            out.extend(right_chain(g + rat_int(1), k));
            out
        }
        (Endpoint::NegInf, Endpoint::Rat(h)) => match k {
            Cardinal::Aleph0 => vec![
                Block::Single(Interval::open(h - rat_int(1), h.clone())),
                Block::Arith {
                    proto: Interval::right_closed(h - rat_int(2), h - rat_int(1)),
                    stride: rat_int(-1),
                    count: Cardinal::Aleph0,
                },
            ],
            Cardinal::Fin(n) => {
                let n = u64::try_from(n).expect("finite carve count fits u64") as i64;
                let mut out = vec![Block::Single(Interval::ray_left(h - rat_int(n), false))];
                for i in 0..n {
                    let a = h - rat_int(n - i);
                    out.push(Block::Single(Interval::left_closed(
                        a.clone(),
                        &a + rat_int(1),
                    )));
                }
                out
            }
            Cardinal::Continuum => unreachable!(),
        },
        _ => unreachable!("carve target is unbounded"),
    }
}

fn carve_fill(j: &Interval, k: &Cardinal) -> Vec<Block> {
    if *j.hi() == Endpoint::PosInf {
        let base = match j.lo() {
            Endpoint::NegInf => rat_int(0),
            Endpoint::Rat(x) => x + rat_int(1),
            Endpoint::PosInf => unreachable!(),
        };
        match k {
            Cardinal::Aleph0 => vec![Block::Arith {
                proto: Interval::left_closed(base.clone(), &base + rat_int(1)),
                stride: rat_int(1),
                count: Cardinal::Aleph0,
            }],
            Cardinal::Fin(n) => {
                let n = u64::try_from(n).expect("finite carve count fits u64") as i64;
                (0..n)
                    .map(|i| {
                        let a = &base + rat_int(i);
                        Block::Single(Interval::left_closed(a.clone(), &a + rat_int(1)))
                    })
                    .collect()
            }
            Cardinal::Continuum => unreachable!(),
        }
    } else {
        let y = j.hi().rational().expect("left-unbounded component").clone();
        let base = &y - rat_int(1);
        match k {
            Cardinal::Aleph0 => vec![Block::Arith {
                proto: Interval::left_closed(&base - rat_int(1), base.clone()),
                stride: rat_int(-1),
                count: Cardinal::Aleph0,
            }],
            Cardinal::Fin(n) => {
                let n = u64::try_from(n).expect("finite carve count fits u64") as i64;
                (0..n)
                    .map(|i| {
                        let a = &base - rat_int(i + 1);
                        Block::Single(Interval::left_closed(a.clone(), &a + rat_int(1)))
                    })
                    .collect()
            }
            Cardinal::Continuum => unreachable!(),
        }
    }
}

/// An open member slated for keeping or replacement in the γ'=ℵ₀ branch.
#[derive(Clone)]
enum OpenUnit {
    Bounded(Interval),
    RayRight(Rational),
    RayLeft(Rational),
    Line,
}

impl OpenUnit {
    /// Position key for the left-to-right keep order; `None` means -inf.
    fn key(&self) -> Option<Rational> {
        match self {
            OpenUnit::Bounded(iv) => Some(iv.lo().rational().expect("bounded").clone()),
            OpenUnit::RayRight(g) => Some(g.clone()),
            OpenUnit::RayLeft(_) | OpenUnit::Line => None,
        }
    }

    fn keep_block(&self) -> Block {
        match self {
            OpenUnit::Bounded(iv) => Block::Single(iv.clone()),
            OpenUnit::RayRight(g) => Block::Single(Interval::ray_right(g.clone(), false)),
            OpenUnit::RayLeft(h) => Block::Single(Interval::ray_left(h.clone(), false)),
            OpenUnit::Line => Block::Single(Interval::line()),
        }
    }

    /// Re-covers the same point set by countably many half-open members.
    fn replace_blocks(&self) -> Vec<Block> {
        match self {
            OpenUnit::Bounded(iv) => {
                let a = iv.lo().rational().expect("bounded").clone();
                let w = iv.width().expect("bounded");
                vec![Block::HarmonicFill {
                    anchor: a,
                    length: w,
                    side: Side::AccumulateLeft,
                    stride: rat_int(0),
                    count: Cardinal::one(),
                }]
            }
            OpenUnit::RayRight(g) => vec![Block::Arith {
                proto: Interval::right_closed(g.clone(), g + rat_int(1)),
                stride: rat_int(1),
                count: Cardinal::Aleph0,
            }],
            OpenUnit::RayLeft(h) => vec![Block::Arith {
                proto: Interval::left_closed(h - rat_int(1), h.clone()),
                stride: rat_int(-1),
                count: Cardinal::Aleph0,
            }],
            OpenUnit::Line => vec![
                Block::Arith {
                    proto: Interval::right_closed(rat_int(0), rat_int(1)),
                    stride: rat_int(1),
                    count: Cardinal::Aleph0,
                },
                Block::Arith {
                    proto: Interval::right_closed(rat_int(-1), rat_int(0)),
                    stride: rat_int(-1),
                    count: Cardinal::Aleph0,
                },
            ],
        }
    }
}

fn open_unit(iv: &Interval) -> OpenUnit {
    match (iv.lo(), iv.hi()) {
        (Endpoint::NegInf, Endpoint::PosInf) => OpenUnit::Line,
        (Endpoint::Rat(g), Endpoint::PosInf) => OpenUnit::RayRight(g.clone()),
        (Endpoint::NegInf, Endpoint::Rat(h)) => OpenUnit::RayLeft(h.clone()),
        _ => OpenUnit::Bounded(iv.clone()),
    }
}

/// Trades open members for harmonic tilings until only `delta_new` remain,
/// keeping the leftmost ones. Leftward infinite open families cannot be
/// tiled within the block grammar (harmonic cells march rightward), so those
/// descriptions are rebuilt from the target type instead.
fn replace_opens(
    desc: &PartitionDesc,
    delta_new: &Cardinal,
    t: &TypeQuadruple,
) -> Result<PartitionDesc, PartitionError> {
    let leftward_open_family = desc.blocks.iter().any(|b| {
        matches!(b, Block::Arith { proto, stride, count }
            if proto.kind() == crate::interval::IntervalKind::Open
                && num_traits::Signed::is_negative(stride)
                && *count == Cardinal::Aleph0)
    });
    if leftward_open_family {
        let target = TypeQuadruple {
            alpha: t.alpha.clone(),
            beta: t.beta.clone(),
            gamma: Cardinal::Aleph0,
            delta: delta_new.clone(),
        };
        return super::synthesize(&target);
    }

    let mut rest: Vec<Block> = Vec::new();
    let mut fixed: Vec<OpenUnit> = Vec::new();
    // rightward infinite open families: (proto, stride)
    let mut streams: Vec<(Interval, Rational)> = Vec::new();
    for b in &desc.blocks {
        match b {
            Block::Single(iv) if iv.kind() == crate::interval::IntervalKind::Open => {
                fixed.push(open_unit(iv));
            }
            Block::Arith {
                proto,
                stride,
                count,
            } if proto.kind() == crate::interval::IntervalKind::Open && !count.is_zero() => {
                match count.to_u64() {
                    Some(k) => {
                        for n in 0..k {
                            fixed.push(OpenUnit::Bounded(
                                proto.translate(&(stride * rat_int(n as i64))),
                            ));
                        }
                    }
                    None => streams.push((proto.clone(), stride.clone())),
                }
            }
            other => rest.push(other.clone()),
        }
    }
    fixed.sort_by(|a, b| match (a.key(), b.key()) {
        (None, None) => std::cmp::Ordering::Equal,
        (None, Some(_)) => std::cmp::Ordering::Less,
        (Some(_), None) => std::cmp::Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(&y),
    });

    let keep = delta_new.to_u64().expect("delta' is finite in this branch");
    let mut fixed_kept = 0usize;
    let mut stream_kept: Vec<u64> = vec![0; streams.len()];
    for _ in 0..keep {
        // next fixed unit vs. every stream head; None key means leftmost
        let fixed_key = fixed.get(fixed_kept).map(|u| u.key());
        let stream_head = |i: usize| -> Rational {
            let (proto, stride) = &streams[i];
            proto.lo().rational().expect("bounded proto") + stride * rat_int(stream_kept[i] as i64)
        };
        let best_stream = (0..streams.len()).min_by_key(|&i| stream_head(i));
        let take_fixed = match (&fixed_key, best_stream) {
            (Some(None), _) => true,
            (Some(Some(fk)), Some(si)) => *fk <= stream_head(si),
            (Some(Some(_)), None) => true,
            (None, Some(_)) => false,
            (None, None) => {
                unreachable!("delta' < delta guarantees enough open members")
            }
        };
        if take_fixed {
            fixed_kept += 1;
        } else {
            stream_kept[best_stream.unwrap()] += 1;
        }
    }

    let mut blocks = rest;
    for (i, unit) in fixed.iter().enumerate() {
        if i < fixed_kept {
            blocks.push(unit.keep_block());
        } else {
            blocks.extend(unit.replace_blocks());
        }
    }
    for (i, (proto, stride)) in streams.iter().enumerate() {
        let m = stream_kept[i];
        if m > 0 {
            let kept = Block::Arith {
                proto: proto.clone(),
                stride: stride.clone(),
                count: Cardinal::fin(m),
            };
            blocks.push(if m == 1 {
                Block::Single(proto.clone())
            } else {
                kept
            });
        }
        blocks.push(Block::HarmonicFill {
            anchor: proto.lo().rational().expect("bounded").clone() + stride * rat_int(m as i64),
            length: proto.width().expect("bounded"),
            side: Side::AccumulateLeft,
            stride: stride.clone(),
            count: Cardinal::Aleph0,
        });
    }
    Ok(PartitionDesc::new(blocks))
}

pub(crate) fn apply_83(
    desc: &PartitionDesc,
    gamma_new: Cardinal,
    delta_new: Cardinal,
) -> Result<PartitionDesc, PartitionError> {
    desc.ensure_valid()?;
    let t = desc.compute_type()?;
    let countable = gamma_new.is_countable() && delta_new.is_countable();
    let raise_gamma = countable && gamma_new >= t.gamma && delta_new == t.delta;
    let trade_opens = countable && gamma_new == Cardinal::Aleph0 && delta_new < t.delta;
    if raise_gamma {
        let k = carve_count(&t.gamma, &gamma_new);
        if k.is_zero() {
            return Ok(desc.clone());
        }
        match find_carve_target(desc)? {
            CarveTarget::Member(idx, j) => {
                let mut blocks: Vec<Block> = Vec::new();
                for (i, b) in desc.blocks.iter().enumerate() {
                    if i == idx {
                        blocks.extend(carve_member(&j, &k));
                    } else {
                        blocks.push(b.clone());
                    }
                }
                Ok(PartitionDesc::new(blocks))
            }
            CarveTarget::Fill(j) => {
                let mut blocks = desc.blocks.clone();
                blocks.extend(carve_fill(&j, &k));
                Ok(PartitionDesc::new(blocks))
            }
        }
    } else if trade_opens {
        replace_opens(desc, &delta_new, &t)
    } else {
        Err(PartitionError::BadCarveTarget {
            gamma: gamma_new,
            delta: delta_new,
            current: Box::new(t),
        })
    }
}

/// The member intervals replacing `iv` after its noncut endpoints become
/// singletons.
fn strip_parts(iv: &Interval) -> Vec<Interval> {
    use crate::interval::IntervalKind::*;
    match iv.kind() {
        Singleton | Open => vec![iv.clone()],
        Compact => {
            let a = iv.lo().rational().expect("compact").clone();
            let b = iv.hi().rational().expect("compact").clone();
            vec![
                Interval::point(a.clone()),
                Interval::point(b.clone()),
                Interval::open(a, b),
            ]
        }
        HalfOpen => {
            let (point, interior) = if iv.lo_closed() {
                let a = iv.lo().rational().expect("closed end").clone();
                let interior = Interval::new(
                    Endpoint::Rat(a.clone()),
                    false,
                    iv.hi().clone(),
                    iv.hi_closed(),
                )
                .expect("nondegenerate");
                (a, interior)
            } else {
                let b = iv.hi().rational().expect("closed end").clone();
                let interior = Interval::new(
                    iv.lo().clone(),
                    iv.lo_closed(),
                    Endpoint::Rat(b.clone()),
                    false,
                )
                .expect("nondegenerate");
                (b, interior)
            };
            vec![Interval::point(point), interior]
        }
    }
}

pub(crate) fn apply_84(desc: &PartitionDesc) -> Result<PartitionDesc, PartitionError> {
    desc.ensure_valid()?;
    let has_harmonic = desc
        .blocks
        .iter()
        .any(|b| matches!(b, Block::HarmonicFill { count, .. } if !count.is_zero()));
    if has_harmonic {
        // harmonic members accumulate inside a bounded cell; their stripped
        // opens are not expressible in the block grammar, so rebuild from the
        // target type instead
        let t = desc.compute_type()?;
        let target = TypeQuadruple {
            alpha: t.alpha.add(&t.beta).add(&t.beta).add(&t.gamma),
            beta: Cardinal::zero(),
            gamma: Cardinal::zero(),
            delta: t.beta.add(&t.gamma).add(&t.delta),
        };
        return super::synthesize(&target);
    }
    let mut blocks = Vec::new();
    for b in &desc.blocks {
        match b {
            Block::Single(iv) => {
                blocks.extend(strip_parts(iv).into_iter().map(Block::Single));
            }
            Block::Arith {
                proto,
                stride,
                count,
            } => {
                for part in strip_parts(proto) {
                    blocks.push(if *count == Cardinal::one() {
                        Block::Single(part)
                    } else {
                        Block::Arith {
                            proto: part,
                            stride: stride.clone(),
                            count: count.clone(),
                        }
                    });
                }
            }
            Block::HarmonicFill { .. } => {}
        }
    }
    Ok(PartitionDesc::new(blocks))
}
