//! Shared test machinery: a seeded generator of valid partition
//! descriptions (bounded grammar), the sequence test grid, and the
//! numeric oracles the symbolic code is checked against.

#![allow(dead_code)]

use lineclass::cardinal::Cardinal;
use lineclass::interval::{rat, Endpoint, Interval, Rational};
use lineclass::partition::{Block, PartitionDesc, Side};
use lineclass::sinegraph::{f_eval, GSeq};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A positive rational with denominator at most 6, between 1/6 and 3.
fn small_len(rng: &mut ChaCha8Rng) -> Rational {
    let denom = rng.random_range(1..=6i64);
    let numer = rng.random_range(1..=3 * denom);
    rat(numer, denom)
}

fn start_point(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(-36..=36), 6)
}

fn endpoint(r: &Rational) -> Endpoint {
    Endpoint::Rat(r.clone())
}

/// A description that tiles ℝ exactly up to isolated fill points: blocks are
/// chained left to right with no nondegenerate gap, so the type is countable.
fn covered_desc(rng: &mut ChaCha8Rng) -> PartitionDesc {
    let mut blocks: Vec<Block> = Vec::new();
    let mut cursor = start_point(rng);
    // `covered` tracks whether the point at `cursor` already belongs to a member
    let mut covered;
    // weighted toward finite ray enders so all-finite types stay frequent
    match rng.random_range(0..10) {
        0..=3 => {
            blocks.push(Block::Single(Interval::ray_left(cursor.clone(), false)));
            covered = false;
        }
        4..=7 => {
            blocks.push(Block::Single(Interval::ray_left(cursor.clone(), true)));
            covered = true;
        }
        8 => {
            let s = small_len(rng);
            blocks.push(Block::Arith {
                proto: Interval::left_closed(&cursor - &s, cursor.clone()),
                stride: -s,
                count: Cardinal::Aleph0,
            });
            covered = false;
        }
        _ => {
            let s = small_len(rng);
            blocks.push(Block::Arith {
                proto: Interval::right_closed(&cursor - &s, cursor.clone()),
                stride: -s,
                count: Cardinal::Aleph0,
            });
            covered = true;
        }
    }
    for _ in 0..rng.random_range(0..=5usize) {
        match rng.random_range(0..8) {
            0 => {
                if !covered {
                    blocks.push(Block::Single(Interval::point(cursor.clone())));
                    covered = true;
                }
            }
            1..=3 => {
                // one bounded member; an open start over an uncovered cursor
                // leaves an isolated fill point
                let w = small_len(rng);
                let lo_closed = !covered && rng.random_bool(0.8);
                let hi_closed = rng.random_bool(0.5);
                let next = &cursor + &w;
                blocks.push(Block::Single(
                    Interval::new(endpoint(&cursor), lo_closed, endpoint(&next), hi_closed)
                        .expect("cursor < next"),
                ));
                cursor = next;
                covered = hi_closed;
            }
            4 => {
                // a finite run of touching half-open members
                let s = small_len(rng);
                let k = rng.random_range(2..=4u64);
                let ends_covered = covered;
                let proto = if covered {
                    Interval::right_closed(cursor.clone(), &cursor + &s)
                } else {
                    Interval::left_closed(cursor.clone(), &cursor + &s)
                };
                blocks.push(Block::Arith {
                    proto,
                    stride: s.clone(),
                    count: Cardinal::fin(k),
                });
                cursor = &cursor + &(&s * rat(k as i64, 1));
                // right-closed runs end covered, left-closed ones do not
                covered = ends_covered;
            }
            5 => {
                // adjacent harmonic cells; the shared cell boundaries become
                // isolated fill points
                let l = small_len(rng);
                let k = rng.random_range(1..=3u64);
                let side = if rng.random_bool(0.5) {
                    Side::AccumulateLeft
                } else {
                    Side::AccumulateRight
                };
                blocks.push(Block::HarmonicFill {
                    anchor: cursor.clone(),
                    length: l.clone(),
                    side,
                    stride: l.clone(),
                    count: Cardinal::fin(k),
                });
                cursor = &cursor + &(&l * rat(k as i64, 1));
                covered = false;
            }
            6 => {
                let w = small_len(rng);
                let next = &cursor + &w;
                blocks.push(Block::Single(Interval::open(cursor.clone(), next.clone())));
                cursor = next;
                covered = false;
            }
            _ => {
                let w = small_len(rng);
                let next = &cursor + &w;
                blocks.push(Block::Single(if covered {
                    Interval::right_closed(cursor.clone(), next.clone())
                } else {
                    Interval::segment(cursor.clone(), next.clone())
                }));
                cursor = next;
                covered = true;
            }
        }
    }
    match rng.random_range(0..8) {
        0..=4 => {
            blocks.push(Block::Single(Interval::ray_right(cursor.clone(), !covered)));
        }
        5..=6 => {
            let s = small_len(rng);
            let proto = if covered {
                Interval::right_closed(cursor.clone(), &cursor + &s)
            } else {
                Interval::left_closed(cursor.clone(), &cursor + &s)
            };
            blocks.push(Block::Arith {
                proto,
                stride: s,
                count: Cardinal::Aleph0,
            });
        }
        _ => {
            // patterned tail: isolated points every period with open members
            // between them
            let period = small_len(rng);
            if !covered {
                blocks.push(Block::Single(Interval::point(cursor.clone())));
            }
            blocks.push(Block::Arith {
                proto: Interval::open(cursor.clone(), &cursor + &period),
                stride: period.clone(),
                count: Cardinal::Aleph0,
            });
            blocks.push(Block::Arith {
                proto: Interval::point(&cursor + &period),
                stride: period,
                count: Cardinal::Aleph0,
            });
        }
    }
    blocks.shuffle(rng);
    PartitionDesc::new(blocks)
}

fn bounded_interval(rng: &mut ChaCha8Rng, at: &Rational) -> Interval {
    let w = small_len(rng);
    match rng.random_range(0..5) {
        0 => Interval::point(at.clone()),
        1 => Interval::segment(at.clone(), at + &w),
        2 => Interval::left_closed(at.clone(), at + &w),
        3 => Interval::right_closed(at.clone(), at + &w),
        _ => Interval::open(at.clone(), at + &w),
    }
}

fn interval_width(i: &Interval) -> Rational {
    i.width().expect("bounded")
}

/// Scattered blocks with positive gaps; the fill contributes a continuum of
/// singletons, so the type is uncountable.
fn sparse_desc(rng: &mut ChaCha8Rng) -> PartitionDesc {
    let mut blocks: Vec<Block> = Vec::new();
    let mut cursor = start_point(rng);
    if rng.random_bool(0.25) {
        let s = small_len(rng);
        let proto = bounded_interval(rng, &cursor);
        let w = interval_width(&proto);
        let stride = &w + &s;
        blocks.push(Block::Arith {
            proto,
            stride: -stride,
            count: Cardinal::Aleph0,
        });
        cursor = &cursor + &w;
    }
    let n = rng.random_range(1..=6usize);
    for _ in 0..n {
        cursor = &cursor + &small_len(rng);
        match rng.random_range(0..3) {
            0 => {
                let iv = bounded_interval(rng, &cursor);
                cursor = &cursor + &interval_width(&iv);
                blocks.push(Block::Single(iv));
            }
            1 => {
                let proto = bounded_interval(rng, &cursor);
                let w = interval_width(&proto);
                let stride = &w + &small_len(rng);
                let k = rng.random_range(2..=4u64);
                cursor = &cursor + &(&stride * rat(k as i64 - 1, 1)) + &w;
                blocks.push(Block::Arith {
                    proto,
                    stride,
                    count: Cardinal::fin(k),
                });
            }
            _ => {
                let l = small_len(rng);
                let stride = &l + &small_len(rng);
                let k = rng.random_range(1..=3u64);
                blocks.push(Block::HarmonicFill {
                    anchor: cursor.clone(),
                    length: l.clone(),
                    side: if rng.random_bool(0.5) {
                        Side::AccumulateLeft
                    } else {
                        Side::AccumulateRight
                    },
                    stride: stride.clone(),
                    count: Cardinal::fin(k),
                });
                cursor = &cursor + &(&stride * rat(k as i64 - 1, 1)) + &l;
            }
        }
    }
    if rng.random_bool(0.25) {
        cursor = &cursor + &small_len(rng);
        let proto = bounded_interval(rng, &cursor);
        let stride = interval_width(&proto) + &small_len(rng);
        blocks.push(Block::Arith {
            proto,
            stride,
            count: Cardinal::Aleph0,
        });
    }
    blocks.shuffle(rng);
    PartitionDesc::new(blocks)
}

/// A valid random description from the bounded grammar: half tile ℝ
/// (countable types), half are scattered (uncountable types).
pub fn random_desc(rng: &mut ChaCha8Rng) -> PartitionDesc {
    let desc = if rng.random_bool(0.5) {
        covered_desc(rng)
    } else {
        sparse_desc(rng)
    };
    let violations = desc.validate();
    assert!(
        violations.is_empty(),
        "generator must produce valid descriptions, got {violations:?}\n{}",
        desc.to_json()
    );
    desc
}

/// All raw (prefix, tail) pairs with prefix length ≤ 4 over {1,2} and
/// primitive tail of length ≤ 3 containing a 2.
pub fn grid_pairs() -> Vec<(Vec<u8>, Vec<u8>)> {
    let mut prefixes: Vec<Vec<u8>> = vec![vec![]];
    let mut frontier: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..4 {
        let mut next = Vec::new();
        for p in &frontier {
            for s in [1u8, 2] {
                let mut q = p.clone();
                q.push(s);
                next.push(q);
            }
        }
        prefixes.extend(next.iter().cloned());
        frontier = next;
    }
    let tails: Vec<Vec<u8>> = vec![
        vec![2],
        vec![1, 2],
        vec![2, 1],
        vec![1, 1, 2],
        vec![1, 2, 1],
        vec![2, 1, 1],
        vec![1, 2, 2],
        vec![2, 1, 2],
        vec![2, 2, 1],
    ];
    let mut out = Vec::new();
    for p in &prefixes {
        for t in &tails {
            out.push((p.clone(), t.clone()));
        }
    }
    out
}

/// The canonical sequences of the grid, deduplicated, in enumeration order.
pub fn grid_gseqs() -> Vec<GSeq> {
    let mut out: Vec<GSeq> = Vec::new();
    for (p, t) in grid_pairs() {
        let g = GSeq::new(&p, &t).expect("grid tails contain a 2");
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// Independent high-precision sine via its Taylor series, for checking the
/// arc evaluation without going through the same code path.
pub fn taylor_sin(x: f64) -> f64 {
    let mut term = x;
    let mut sum = x;
    let mut k = 1u32;
    while term.abs() > 1e-19 {
        term *= -x * x / ((2 * k) as f64 * (2 * k + 1) as f64);
        sum += term;
        k += 1;
    }
    sum
}

/// Numeric discontinuity oracle: dense one-sided sampling near `p`. An
/// oscillating arc endpoint swings through a range above 1; smooth points
/// stay well below it and converge to the value.
pub fn oscillation_discontinuous(g: &GSeq, p: &Rational) -> bool {
    use num_traits::ToPrimitive;
    let pf = p.to_f64().expect("sample point fits f64");
    let value = f_eval(g, pf);
    for sign in [-1.0f64, 1.0] {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut nearest = value;
        for j in 6..=22 {
            let x = pf + sign * 2.0f64.powi(-j);
            let y = f_eval(g, x);
            lo = lo.min(y);
            hi = hi.max(y);
            nearest = y;
        }
        if hi - lo > 1.0 || (nearest - value).abs() > 0.5 {
            return true;
        }
    }
    false
}
