//! Data-parallel helpers with a sequential fallback.
//!
//! Everything in this crate is pure, so bulk evaluations are embarrassingly
//! parallel. With the `parallel` feature (default) these run on rayon; without
//! it they degrade to plain iteration. Results are index-ordered either way,
//! so output is byte-identical across both modes.

/// Maps `f` over `0..n` and collects in index order.
#[cfg(feature = "parallel")]
pub fn indexed_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n` and collects in index order.
#[cfg(not(feature = "parallel"))]
pub fn indexed_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential variant, kept unconditionally for benchmarking against the
/// parallel path.
pub fn indexed_map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
