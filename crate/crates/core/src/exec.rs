//! Data-parallel helpers. With the `parallel` feature (default) the indexed
//! maps run on rayon; without it they fall back to plain iteration. Callers
//! derive any per-index randomness deterministically from the index, so the
//! two paths produce identical results.

#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    // chunk small tasks so scheduling overhead stays below the work
    // itself, while leaving enough chunks for load balancing
    let min_len = (n / 16).max(1);
    (0..n).into_par_iter().with_min_len(min_len).map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Always-sequential variant, kept available so benchmarks can compare the
/// two execution paths in one binary.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
