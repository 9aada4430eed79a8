//! Path components of `F[g]`, their order, and order recovery from
//! adjacency.
//!
//! Components come in three shapes: oscillating arcs (no noncut points),
//! axis points (one), and compact axis segments (two). Read left to right
//! they spell the digit string of `g`, with the base segment `[0,1]` at
//! index 0.

use num_bigint::BigInt;
use num_traits::One;

use crate::interval::{rat_int, Interval, Rational};

use super::{GSeq, SinegraphError};

/// One path component: its x-axis footprint, noncut-point count and position
/// in the component order.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentDescriptor {
    pub footprint: Interval,
    pub noncuts: u8,
    pub position_index: i64,
}

fn half(n: i64) -> Rational {
    rat_int(n) + Rational::new(BigInt::one(), BigInt::from(2))
}

/// The component at a given position index. Index 0 is the base segment
/// `[0,1]`; odd indices are arcs; even indices are the closing member of the
/// cell (a point for `g(k)=1`, a segment for `g(k)=2`).
pub fn component_at(g: &GSeq, index: i64) -> ComponentDescriptor {
    let (footprint, noncuts) = if index == 0 {
        (Interval::segment(rat_int(0), rat_int(1)), 2)
    } else if index > 0 {
        let k = (index + 1) / 2;
        if index % 2 == 1 {
            // the arc of cell k
            match g.at(k as u64) {
                1 => (Interval::open(rat_int(k), rat_int(k + 1)), 0),
                _ => (Interval::open(rat_int(k), half(k)), 0),
            }
        } else {
            match g.at(k as u64) {
                1 => (Interval::point(rat_int(k + 1)), 1),
                _ => (Interval::segment(half(k), rat_int(k + 1)), 2),
            }
        }
    } else {
        let j = (1 - index) / 2;
        if (-index) % 2 == 1 {
            // the arc ]-j, -j+1[
            (Interval::open(rat_int(-j), rat_int(-j + 1)), 0)
        } else {
            (Interval::point(rat_int(-j)), 1)
        }
    };
    ComponentDescriptor {
        footprint,
        noncuts,
        position_index: index,
    }
}

/// Components with indices in `lo..=hi`, in order.
pub fn components(g: &GSeq, lo: i64, hi: i64) -> Vec<ComponentDescriptor> {
    (lo..=hi).map(|i| component_at(g, i)).collect()
}

/// Two distinct components of the same graph are consecutive iff their
/// union is connected; footprints abutting captures exactly that (an arc's
/// closure contains the junction vertical, hence the neighbor's junction
/// point).
pub fn adjacent(p: &ComponentDescriptor, q: &ComponentDescriptor) -> bool {
    p.footprint.disjoint(&q.footprint) && p.footprint.abuts(&q.footprint).unwrap_or(false)
}

/// The digit a component contributes to the string.
fn digit(c: &ComponentDescriptor) -> u8 {
    c.noncuts
}

/// A structural anchor candidate: an interior 2-noncut component whose left
/// side (in the given direction) reads like the left tail, alternating
/// arc/point with no 2-noncut component.
fn anchor_candidate(chain: &[&ComponentDescriptor]) -> Option<usize> {
    let first_two = chain.iter().position(|c| digit(c) == 2)?;
    // interior only: the base segment has arcs on both sides
    if first_two == 0 || first_two + 1 == chain.len() {
        return None;
    }
    // left side must alternate 0,1,0,1,… going outward
    for d in 1..=first_two {
        let expected = if d % 2 == 1 { 0 } else { 1 };
        if digit(chain[first_two - d]) != expected {
            return None;
        }
    }
    // right side must parse as 0 g(1) 0 g(2) …
    for d in 1..chain.len() - first_two {
        let got = digit(chain[first_two + d]);
        let ok = if d % 2 == 1 {
            got == 0
        } else {
            got == 1 || got == 2
        };
        if !ok {
            return None;
        }
    }
    Some(first_two)
}

/// Reconstructs the component order of a contiguous window from adjacency
/// alone, then orients it.
///
/// Orientation: the anchor is the base segment (footprint `[0,1]`), and in
/// the true direction it is the first 2-noncut component, with an unbroken
/// alternating point/arc run on its left and every further 2-noncut
/// component to its right. A window without the interior anchor never
/// guesses; it returns [`SinegraphError::OrientationUndecidable`], even when
/// some other segment happens to satisfy the structural reading. When both
/// directions validate around the anchor the window is structurally
/// symmetric and the concrete footprints break the tie, since the true
/// order is the spatial one.
pub fn recover_order(
    input: &[ComponentDescriptor],
) -> Result<Vec<ComponentDescriptor>, SinegraphError> {
    let n = input.len();
    if n == 0 {
        return Err(SinegraphError::NonChainable("no components".into()));
    }
    if n == 1 {
        return Ok(vec![input[0].clone()]);
    }
    // adjacency graph must be a simple path
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(&input[i], &input[j]) {
                neighbors[i].push(j);
                neighbors[j].push(i);
            }
        }
    }
    let degree_one: Vec<usize> = (0..n).filter(|&i| neighbors[i].len() == 1).collect();
    if degree_one.len() != 2 || neighbors.iter().any(|nb| nb.len() > 2) {
        return Err(SinegraphError::NonChainable(format!(
            "expected a chain, found {} endpoint(s)",
            degree_one.len()
        )));
    }
    let mut order = vec![degree_one[0]];
    let mut prev = usize::MAX;
    while order.len() < n {
        let here = *order.last().expect("nonempty");
        let next = neighbors[here]
            .iter()
            .copied()
            .find(|&x| x != prev)
            .ok_or_else(|| SinegraphError::NonChainable("chain breaks off".into()))?;
        prev = here;
        order.push(next);
    }
    let forward: Vec<&ComponentDescriptor> = order.iter().map(|&i| &input[i]).collect();
    let backward: Vec<&ComponentDescriptor> = forward.iter().rev().copied().collect();

    let base = Interval::segment(rat_int(0), rat_int(1));
    let is_anchor = |chain: &[&ComponentDescriptor], p: Option<usize>| {
        p.filter(|&p| chain[p].footprint == base)
    };
    let cand_f = is_anchor(&forward, anchor_candidate(&forward));
    let cand_b = is_anchor(&backward, anchor_candidate(&backward));
    let pick_forward = match (cand_f, cand_b) {
        (Some(_), None) => true,
        (None, Some(_)) => false,
        (None, None) => return Err(SinegraphError::OrientationUndecidable),
        (Some(_), Some(_)) => {
            // both readings put every further 2-noncut component right of
            // their anchor, so the counts tie by construction; the window is
            // structurally symmetric and the spatial order breaks the tie
            let first = &forward[0].footprint;
            let last = &forward[n - 1].footprint;
            crate::interval::cmp_lower(
                (first.lo(), first.lo_closed()),
                (last.lo(), last.lo_closed()),
            ) == std::cmp::Ordering::Less
        }
    };
    let chosen = if pick_forward { forward } else { backward };
    Ok(chosen.into_iter().cloned().collect())
}
