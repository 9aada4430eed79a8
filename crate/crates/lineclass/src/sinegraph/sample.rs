//! Bulk numeric sampling of `F[g]`, the data-parallel hot path.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::interval::{Interval, Rational};
use crate::par;

use super::pieces::f_eval;
use super::{GSeq, SinegraphError};

/// The sample grid `x_j = lo + j*step`, hoisted to one shared denominator so
/// the per-point work is a single integer multiply-add:
/// `x_j = (base + j*inc) / den`.
struct SampleGrid {
    base: BigInt,
    inc: BigInt,
    den: f64,
    count: usize,
}

impl SampleGrid {
    fn new(window: &Interval, step: &Rational) -> Result<SampleGrid, SinegraphError> {
        if !window.is_bounded() {
            return Err(SinegraphError::UnboundedWindow);
        }
        if !step.is_positive() {
            return Err(SinegraphError::BadStep);
        }
        let lo = window.lo().rational().expect("bounded");
        let hi = window.hi().rational().expect("bounded");
        let n = ((hi - lo) / step)
            .floor()
            .to_integer()
            .to_usize()
            .ok_or(SinegraphError::BadStep)?;
        Ok(SampleGrid {
            base: lo.numer() * step.denom(),
            inc: step.numer() * lo.denom(),
            den: (lo.denom() * step.denom()).to_f64().unwrap_or(f64::NAN),
            count: n + 1,
        })
    }

    fn x(&self, j: usize) -> f64 {
        let numer = &self.base + &self.inc * BigInt::from(j);
        numer.to_f64().unwrap_or(f64::NAN) / self.den
    }
}

/// `(x, F[g](x))` rows from the window's lower endpoint in `step`
/// increments, endpoint included when the step lands on it. Runs on the
/// parallel backend when enabled; row order is by `x` either way.
pub fn sample_rows(
    g: &GSeq,
    window: &Interval,
    step: &Rational,
) -> Result<Vec<(f64, f64)>, SinegraphError> {
    let grid = SampleGrid::new(window, step)?;
    Ok(par::indexed_map(grid.count, move |j| {
        let xf = grid.x(j);
        (xf, f_eval(g, xf))
    }))
}

/// Sequential twin of [`sample_rows`], kept for benchmarking the parallel
/// speedup.
pub fn sample_rows_seq(
    g: &GSeq,
    window: &Interval,
    step: &Rational,
) -> Result<Vec<(f64, f64)>, SinegraphError> {
    let grid = SampleGrid::new(window, step)?;
    Ok(par::indexed_map_seq(grid.count, move |j| {
        let xf = grid.x(j);
        (xf, f_eval(g, xf))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{rat, rat_int};

    #[test]
    fn quarter_steps_hit_the_flat_part() {
        let g: GSeq = "prefix=;tail=2".parse().unwrap();
        let rows = sample_rows(&g, &Interval::segment(rat_int(1), rat_int(2)), &rat(1, 4)).unwrap();
        let xs: Vec<f64> = rows.iter().map(|r| r.0).collect();
        assert_eq!(xs, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
        assert_eq!(rows[0].1, 0.0);
        assert_ne!(rows[1].1, 0.0); // inside the arc
        assert_eq!(rows[2].1, 0.0);
        assert_eq!(rows[3].1, 0.0);
        assert_eq!(rows[4].1, 0.0);
    }

    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        let g: GSeq = "prefix=12;tail=112".parse().unwrap();
        let w = Interval::segment(rat_int(-6), rat_int(6));
        let step = rat(1, 64);
        let a = sample_rows(&g, &w, &step).unwrap();
        let b = sample_rows_seq(&g, &w, &step).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.0.to_bits(), y.0.to_bits());
            assert_eq!(x.1.to_bits(), y.1.to_bits());
        }
    }
}
