//! The discontinuity set of `F[g]` — exactly the points where the induced
//! topology is strictly finer than the Euclidean one.

use crate::interval::{rat_int, Interval, Rational};

use super::pieces::{build_pieces, Piece, PieceForm};
use super::{GSeq, SinegraphError};

fn arc_lo(p: &Piece) -> Option<&Rational> {
    match &p.form {
        PieceForm::SineArc { u, .. } | PieceForm::ScaledSineArc { u, .. } => Some(u),
        PieceForm::Const(_) => None,
    }
}

fn arc_hi(p: &Piece) -> Option<&Rational> {
    match &p.form {
        PieceForm::SineArc { v, .. } | PieceForm::ScaledSineArc { v, .. } => Some(v),
        PieceForm::Const(_) => None,
    }
}

/// Is the piecewise function discontinuous at the junction `x`, given the
/// pieces around it? A junction fails iff a one-sided neighbor is a sine arc
/// anchored there (the oscillation has no limit), or a one-sided constant
/// limit disagrees with the value. Exact for the const/arc piece grammar.
fn junction_discontinuous(pieces: &[Piece], x: &Rational) -> bool {
    let value: Option<&Rational> = pieces.iter().find_map(|p| {
        if p.domain.contains(x) {
            match &p.form {
                PieceForm::Const(c) => Some(c),
                _ => None,
            }
        } else {
            None
        }
    });
    let mut left_const: Option<&Rational> = None;
    let mut right_const: Option<&Rational> = None;
    for p in pieces {
        // a piece approaches x from the left iff its closure ends at x and
        // it has points below x
        let ends_at = p.domain.hi().rational() == Some(x) && !p.domain.is_singleton();
        let starts_at = p.domain.lo().rational() == Some(x) && !p.domain.is_singleton();
        if ends_at {
            match &p.form {
                PieceForm::Const(c) => left_const = Some(c),
                _ => {
                    if arc_hi(p) == Some(x) {
                        return true;
                    }
                    // clipped arc interior: smooth, one-sided limit exists
                    left_const = None;
                }
            }
        }
        if starts_at {
            match &p.form {
                PieceForm::Const(c) => right_const = Some(c),
                _ => {
                    if arc_lo(p) == Some(x) {
                        return true;
                    }
                    right_const = None;
                }
            }
        }
    }
    if let (Some(v), Some(c)) = (value, left_const) {
        if v != c {
            return true;
        }
    }
    if let (Some(v), Some(c)) = (value, right_const) {
        if v != c {
            return true;
        }
    }
    false
}

/// The exact discontinuity set of `F[g]` within a bounded window: the left
/// tail integers, 0, every positive integer, and the half points `k + 1/2`
/// where `g(k) = 2`.
pub fn gamma(g: &GSeq, window: &Interval) -> Result<Vec<Rational>, SinegraphError> {
    if !window.is_bounded() {
        return Err(SinegraphError::UnboundedWindow);
    }
    let lo = window.lo().rational().expect("bounded").clone();
    let hi = window.hi().rational().expect("bounded").clone();
    let expanded = Interval::segment(&lo - rat_int(1), &hi + rat_int(1));
    let pieces = build_pieces(g, &expanded)?;
    let mut junctions: Vec<Rational> = Vec::new();
    for p in &pieces {
        for e in [p.domain.lo().rational(), p.domain.hi().rational()]
            .into_iter()
            .flatten()
        {
            if window.contains(e) && !junctions.contains(e) {
                junctions.push(e.clone());
            }
        }
    }
    junctions.sort();
    Ok(junctions
        .into_iter()
        .filter(|x| junction_discontinuous(&pieces, x))
        .collect())
}
