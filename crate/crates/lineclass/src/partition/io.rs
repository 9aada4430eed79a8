//! The partition file format: a JSON document with a `blocks` array, each
//! block tagged `"single"`, `"arith"` or `"harmonic"`, with intervals,
//! rationals and cardinals in their textual forms. Output order is
//! canonical: blocks sorted by leftmost covered point.

use serde::{Deserialize, Serialize};

use crate::cardinal::Cardinal;
use crate::interval::{cmp_lower, parse_rational, Endpoint, Interval};

use super::{Block, PartitionDesc, PartitionError, Side};

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum BlockDto {
    Single {
        interval: String,
    },
    Arith {
        proto: String,
        stride: String,
        count: String,
    },
    Harmonic {
        anchor: String,
        length: String,
        side: String,
        stride: String,
        count: String,
    },
}

#[derive(Serialize, Deserialize)]
struct FileDto {
    blocks: Vec<BlockDto>,
}

fn side_to_str(s: Side) -> &'static str {
    match s {
        Side::AccumulateLeft => "accumulate-left",
        Side::AccumulateRight => "accumulate-right",
    }
}

fn side_from_str(s: &str) -> Result<Side, PartitionError> {
    match s {
        "accumulate-left" => Ok(Side::AccumulateLeft),
        "accumulate-right" => Ok(Side::AccumulateRight),
        other => Err(PartitionError::Format(format!(
            "unknown side {other:?} (expected \"accumulate-left\" or \"accumulate-right\")"
        ))),
    }
}

fn to_dto(b: &Block) -> BlockDto {
    match b {
        Block::Single(i) => BlockDto::Single {
            interval: i.to_string(),
        },
        Block::Arith {
            proto,
            stride,
            count,
        } => BlockDto::Arith {
            proto: proto.to_string(),
            stride: stride.to_string(),
            count: count.to_string(),
        },
        Block::HarmonicFill {
            anchor,
            length,
            side,
            stride,
            count,
        } => BlockDto::Harmonic {
            anchor: anchor.to_string(),
            length: length.to_string(),
            side: side_to_str(*side).to_string(),
            stride: stride.to_string(),
            count: count.to_string(),
        },
    }
}

fn from_dto(d: &BlockDto) -> Result<Block, PartitionError> {
    let card = |s: &str| {
        s.parse::<Cardinal>()
            .map_err(|e| PartitionError::Format(e.to_string()))
    };
    match d {
        BlockDto::Single { interval } => Ok(Block::Single(interval.parse::<Interval>()?)),
        BlockDto::Arith {
            proto,
            stride,
            count,
        } => Ok(Block::Arith {
            proto: proto.parse::<Interval>()?,
            stride: parse_rational(stride)?,
            count: card(count)?,
        }),
        BlockDto::Harmonic {
            anchor,
            length,
            side,
            stride,
            count,
        } => Ok(Block::HarmonicFill {
            anchor: parse_rational(anchor)?,
            length: parse_rational(length)?,
            side: side_from_str(side)?,
            stride: parse_rational(stride)?,
            count: card(count)?,
        }),
    }
}

/// Lower bound of a block's covered set, for the canonical order.
fn leftmost(b: &Block) -> (Endpoint, bool) {
    match b {
        Block::Single(i) => (i.lo().clone(), i.lo_closed()),
        Block::Arith {
            proto,
            stride,
            count,
        } => {
            if *count == Cardinal::Aleph0 && num_traits::Signed::is_negative(stride) {
                (Endpoint::NegInf, false)
            } else {
                (proto.lo().clone(), proto.lo_closed())
            }
        }
        Block::HarmonicFill { anchor, .. } => (Endpoint::Rat(anchor.clone()), false),
    }
}

pub(super) fn to_json(desc: &PartitionDesc) -> String {
    let mut order: Vec<usize> = (0..desc.blocks.len()).collect();
    order.sort_by(|&a, &b| {
        let ka = leftmost(&desc.blocks[a]);
        let kb = leftmost(&desc.blocks[b]);
        cmp_lower((&ka.0, ka.1), (&kb.0, kb.1)).then(a.cmp(&b))
    });
    let dto = FileDto {
        blocks: order.iter().map(|&i| to_dto(&desc.blocks[i])).collect(),
    };
    serde_json::to_string_pretty(&dto).expect("block dtos serialize")
}

pub(super) fn from_json(s: &str) -> Result<PartitionDesc, PartitionError> {
    let dto: FileDto =
        serde_json::from_str(s).map_err(|e| PartitionError::Format(e.to_string()))?;
    let blocks = dto
        .blocks
        .iter()
        .map(from_dto)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PartitionDesc::new(blocks))
}
