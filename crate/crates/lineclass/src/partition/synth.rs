//! Constructs a partition description realizing any admissible type.
//!
//! Uncountable types use the 6n-spaced layout with implicit singleton fill;
//! countable types start from the 3n-spaced singles/compacts layout with
//! explicit open gaps (type `(α, β, 0, α+β+1)`) and then adjust γ and δ via
//! the carving transformation.

use crate::cardinal::Cardinal;
use crate::interval::{rat_int, Interval};

use super::{complement, Block, PartitionDesc, PartitionError, TypeQuadruple};

fn fam_block(proto: Interval, stride: i64, count: &Cardinal) -> Option<Block> {
    if count.is_zero() {
        None
    } else if *count == Cardinal::one() {
        Some(Block::Single(proto))
    } else {
        Some(Block::Arith {
            proto,
            stride: rat_int(stride),
            count: count.clone(),
        })
    }
}

/// `β` compacts `[6n, 6n+1]`, `γ` half-opens `[6n+2, 6n+3[`, `δ` opens
/// `]6n+4, 6n+5[`; every uncovered real is a fill singleton, so α = 𝔠.
fn uncountable_layout(t: &TypeQuadruple) -> PartitionDesc {
    let blocks = [
        fam_block(Interval::segment(rat_int(0), rat_int(1)), 6, &t.beta),
        fam_block(Interval::left_closed(rat_int(2), rat_int(3)), 6, &t.gamma),
        fam_block(Interval::open(rat_int(4), rat_int(5)), 6, &t.delta),
    ]
    .into_iter()
    .flatten()
    .collect();
    PartitionDesc::new(blocks)
}

/// Fully covered layout of type `(α, β, 0, α+β+1)`: singles at `3n`,
/// compacts at `[3n+1, 3n+2]`, every gap an explicit open member.
fn countable_base(alpha: &Cardinal, beta: &Cardinal) -> PartitionDesc {
    let covered: Vec<Block> = [
        fam_block(Interval::point(rat_int(0)), 3, alpha),
        fam_block(Interval::segment(rat_int(1), rat_int(2)), 3, beta),
    ]
    .into_iter()
    .flatten()
    .collect();
    let comp = complement::complement(&PartitionDesc::new(covered.clone()));
    let mut blocks = covered;
    for gap in comp.core {
        debug_assert_eq!(gap.kind(), crate::interval::IntervalKind::Open);
        blocks.push(Block::Single(gap));
    }
    for (tail, sign) in [(&comp.right_tail, 1), (&comp.left_tail, -1)] {
        if let Some(tail) = tail {
            for gap in &tail.gaps {
                blocks.push(Block::Arith {
                    proto: gap.clone(),
                    stride: &tail.period * rat_int(sign),
                    count: Cardinal::Aleph0,
                });
            }
        }
    }
    PartitionDesc::new(blocks)
}

/// A valid description whose computed type is `t`, for any admissible `t`.
pub fn synthesize(t: &TypeQuadruple) -> Result<PartitionDesc, PartitionError> {
    if !crate::classify::is_admissible(t) {
        return Err(PartitionError::Inadmissible(Box::new(t.clone())));
    }
    if t.alpha == Cardinal::Continuum {
        Ok(uncountable_layout(t))
    } else {
        countable_base(&t.alpha, &t.beta).apply_83(t.gamma.clone(), t.delta.clone())
    }
}
