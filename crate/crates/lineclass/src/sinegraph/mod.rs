//! The sine-arc graph family `F[g]`.
//!
//! `g` ranges over eventually periodic sequences over `{1,2}` whose tail
//! contains a 2 (so `g(n) = 2` infinitely often). `F[g]` consists of a
//! left tail of integer points and oscillating arcs, the base segment
//! `[0,1] × {0}`, and per positive integer cell `k` either a full arc plus a
//! point (`g(k)=1`) or a half-cell arc plus a segment (`g(k)=2`). Its path
//! components, read in order, spell a digit string that encodes `g`.

mod components;
mod digits;
mod gamma;
mod gseq;
mod pieces;
mod sample;

pub use components::{adjacent, component_at, components, recover_order, ComponentDescriptor};
pub use digits::{decode, encode, DigitWindow};
pub use gamma::gamma;
pub use gseq::GSeq;
pub use pieces::{
    build_pieces, f_eval, remark_counterexample, remark_eval, sigma_eval, Piece, PieceForm,
    RemarkPieces,
};
pub use sample::{sample_rows, sample_rows_seq};

use crate::interval::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SinegraphError {
    #[error("sequence is not in the admissible family: its tail never takes the value 2")]
    NotInOmega,
    #[error("not a sequence spec: {0:?} (expected \"prefix=<word>;tail=<word>\" over {{1,2}})")]
    ParseGSeq(String),
    #[error("sigma is only defined on ]u,v[; x={x} is outside ]{u},{v}[")]
    OutsideArc {
        u: Box<Rational>,
        v: Box<Rational>,
        x: f64,
    },
    #[error("window must be bounded")]
    UnboundedWindow,
    #[error("step must be a positive rational")]
    BadStep,
    #[error("malformed digit window: {0}")]
    MalformedWindow(String),
    #[error("digit window has no anchor (no token marked with ^)")]
    AnchorMissing,
    #[error("components do not chain into a line: {0}")]
    NonChainable(String),
    #[error("orientation undecidable: the window does not determine the anchor")]
    OrientationUndecidable,
}
