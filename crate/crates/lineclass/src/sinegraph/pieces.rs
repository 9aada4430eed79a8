//! Symbolic pieces of `F[g]` and their numeric evaluation.
//!
//! `F[g]` decomposes into atoms: constant pieces (points and segments on the
//! axis) and oscillating arcs `x ↦ sin(1/((x−u)(v−x)))` on open cells. The
//! atom layout is exact; only point evaluation uses floating point.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::interval::{rat_int, Interval, Rational};

use super::{GSeq, SinegraphError};

#[derive(Clone, Debug, PartialEq)]
pub enum PieceForm {
    /// Constant value on the domain.
    Const(Rational),
    /// `sin(1/((x-u)(v-x)))` on the open cell `]u,v[`.
    SineArc { u: Rational, v: Rational },
    /// `scale * sin(1/((x-u)(v-x)))` on `]u,v[`.
    ScaledSineArc {
        u: Rational,
        v: Rational,
        scale: Rational,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub domain: Interval,
    pub form: PieceForm,
}

/// `sin(1/((x-u)(v-x)))` for `u < x < v`.
pub fn sigma_eval(u: &Rational, v: &Rational, x: f64) -> Result<f64, SinegraphError> {
    let uf = u.to_f64().unwrap_or(f64::NEG_INFINITY);
    let vf = v.to_f64().unwrap_or(f64::INFINITY);
    if !(x > uf && x < vf) {
        return Err(SinegraphError::OutsideArc {
            u: Box::new(u.clone()),
            v: Box::new(v.clone()),
            x,
        });
    }
    Ok((1.0 / ((x - uf) * (vf - x))).sin())
}

fn arc(u: f64, v: f64, x: f64) -> f64 {
    (1.0 / ((x - u) * (v - x))).sin()
}

/// Evaluates `F[g]` at `x`. Total on ℝ; exactly `0.0` on every constant
/// piece including all junction points.
pub fn f_eval(g: &GSeq, x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 {
        let fl = x.floor();
        if x == fl {
            return 0.0;
        }
        return arc(fl, fl + 1.0, x);
    }
    if x <= 1.0 {
        return 0.0;
    }
    let k = x.floor();
    if x == k {
        return 0.0;
    }
    match g.at(k as u64) {
        1 => arc(k, k + 1.0, x),
        _ => {
            let mid = k + 0.5;
            if x < mid {
                arc(k, mid, x)
            } else {
                0.0
            }
        }
    }
}

/// The atoms of `F[g]` for the integer cell starting at `m`, in order.
fn cell_atoms(g: &GSeq, m: i64) -> Vec<Piece> {
    let zero = Rational::zero();
    let const_piece = |domain: Interval| Piece {
        form: PieceForm::Const(zero.clone()),
        domain,
    };
    let arc_piece = |u: Rational, v: Rational| Piece {
        domain: Interval::open(u.clone(), v.clone()),
        form: PieceForm::SineArc { u, v },
    };
    if m < 0 {
        // point member at m (for m <= -1), then the arc ]m, m+1[
        vec![
            const_piece(Interval::point(rat_int(m))),
            arc_piece(rat_int(m), rat_int(m + 1)),
        ]
    } else if m == 0 {
        vec![const_piece(Interval::segment(rat_int(0), rat_int(1)))]
    } else {
        let k = rat_int(m);
        match g.at(m as u64) {
            1 => vec![
                arc_piece(k.clone(), &k + rat_int(1)),
                const_piece(Interval::point(&k + rat_int(1))),
            ],
            _ => {
                let mid = &k + Rational::new(BigInt::one(), BigInt::from(2));
                vec![
                    arc_piece(k.clone(), mid.clone()),
                    const_piece(Interval::segment(mid, &k + rat_int(1))),
                ]
            }
        }
    }
}

/// The pieces of `F[g]` over a bounded window, clipped to it. The returned
/// domains partition the window.
pub fn build_pieces(g: &GSeq, window: &Interval) -> Result<Vec<Piece>, SinegraphError> {
    if !window.is_bounded() {
        return Err(SinegraphError::UnboundedWindow);
    }
    let lo = window.lo().rational().expect("bounded window");
    let hi = window.hi().rational().expect("bounded window");
    let m0 = lo.floor().to_integer().to_i64().expect("window in range") - 1;
    let m1 = hi.ceil().to_integer().to_i64().expect("window in range") + 1;
    let mut out = Vec::new();
    for m in m0..=m1 {
        for atom in cell_atoms(g, m) {
            if let Some(domain) = atom.domain.intersect(window) {
                out.push(Piece {
                    domain,
                    form: atom.form,
                });
            }
        }
    }
    Ok(out)
}

/// Evaluates the locally-connected-at-a-point counterexample function: zero
/// outside `]0,1[`, and `2^{-n} sin(1/((x-2^{-n})(2^{-n+1}-x)))` on each
/// dyadic cell `]2^{-n}, 2^{-n+1}[`.
pub fn remark_eval(x: f64) -> f64 {
    if !(x > 0.0 && x < 1.0) {
        return 0.0;
    }
    let n = (-x.log2()).floor() as i32 + 1;
    let u = 0.5f64.powi(n);
    let v = 0.5f64.powi(n - 1);
    if x <= u || x >= v {
        // a dyadic boundary point
        return 0.0;
    }
    u * arc(u, v, x)
}

/// Lazy right-to-left stream of pieces of the counterexample function over a
/// bounded window.
///
/// The arcs accumulate at 0, so a window whose interior reaches 0 yields an
/// unbounded stream; a window with a positive lower bound enumerates
/// completely, ending after finitely many cells. Pointwise evaluation is
/// always available through [`remark_eval`].
pub struct RemarkPieces {
    window: Interval,
    n: u32,
    arc_pending: bool,
    right_const_pending: bool,
    done: bool,
}

/// The counterexample function over `window` as a piece stream, descending
/// in `x`.
pub fn remark_counterexample(window: &Interval) -> Result<RemarkPieces, SinegraphError> {
    if !window.is_bounded() {
        return Err(SinegraphError::UnboundedWindow);
    }
    Ok(RemarkPieces {
        window: window.clone(),
        n: 1,
        arc_pending: true,
        right_const_pending: true,
        done: false,
    })
}

impl Iterator for RemarkPieces {
    type Item = Piece;

    fn next(&mut self) -> Option<Piece> {
        let zero = Rational::zero();
        if self.done {
            return None;
        }
        if self.right_const_pending {
            self.right_const_pending = false;
            if self
                .window
                .hi()
                .rational()
                .is_some_and(|hi| !hi.is_positive())
            {
                // the whole window sits in the zero region left of the arcs
                self.done = true;
                return Some(Piece {
                    domain: self.window.clone(),
                    form: PieceForm::Const(zero),
                });
            }
            let ray = Interval::ray_right(rat_int(1), true);
            if let Some(domain) = ray.intersect(&self.window) {
                return Some(Piece {
                    domain,
                    form: PieceForm::Const(zero),
                });
            }
        }
        let lo = self.window.lo().rational().expect("bounded window").clone();
        loop {
            let u = Rational::new(BigInt::one(), BigInt::from(2u32).pow(self.n));
            let v = &u * rat_int(2);
            if v <= lo {
                self.done = true;
                return None;
            }
            if self.arc_pending {
                self.arc_pending = false;
                let cell = Interval::open(u.clone(), v.clone());
                if let Some(domain) = cell.intersect(&self.window) {
                    return Some(Piece {
                        domain,
                        form: PieceForm::ScaledSineArc {
                            u: u.clone(),
                            v,
                            scale: u,
                        },
                    });
                }
            }
            self.arc_pending = true;
            self.n += 1;
            if let Some(domain) = Interval::point(u).intersect(&self.window) {
                return Some(Piece {
                    domain,
                    form: PieceForm::Const(zero),
                });
            }
        }
    }
}
