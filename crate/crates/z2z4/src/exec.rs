//! Deterministic work partitioning for the exhaustive searches.
//!
//! Every search iterates an index space `0..len`. The space is cut into
//! fixed chunks, each chunk is folded sequentially, and chunk results are
//! merged with an associative operation, so the outcome does not depend on
//! the number of workers. With the `parallel` feature the chunks run on the
//! rayon pool; otherwise they run in order on the calling thread. Callers
//! pass `par = false` to force the sequential path even when the feature is
//! enabled (the reference implementations benched against the parallel ones).

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Folds `map` over chunked subranges of `0..len` and merges the results.
/// `merge` must be associative with `empty` as identity.
pub(crate) fn fold_ranges<T, F, M>(
    par: bool,
    len: u64,
    chunk_len: u64,
    empty: T,
    map: F,
    merge: M,
) -> T
where
    T: Send + Sync + Clone,
    F: Fn(Range<u64>) -> T + Sync,
    M: Fn(T, T) -> T + Send + Sync,
{
    if len == 0 {
        return empty;
    }
    let chunk = chunk_len.max(1);
    let n_chunks = len.div_ceil(chunk);
    let chunk_range = |c: u64| (c * chunk)..((c + 1) * chunk).min(len);
    #[cfg(feature = "parallel")]
    if par {
        return (0..n_chunks)
            .into_par_iter()
            .map(|c| map(chunk_range(c)))
            .reduce(|| empty.clone(), &merge);
    }
    let _ = par;
    let mut acc = empty;
    for c in 0..n_chunks {
        acc = merge(acc, map(chunk_range(c)));
    }
    acc
}

/// Index of the first element of `0..len` satisfying `pred`, identical to a
/// sequential left-to-right scan.
pub(crate) fn find_first<P>(par: bool, len: u64, grain: u64, pred: P) -> Option<u64>
where
    P: Fn(u64) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    if par {
        let chunk = grain.max(1);
        let n_chunks = len.div_ceil(chunk);
        return (0..n_chunks)
            .into_par_iter()
            .find_map_first(|c| {
                let range = (c * chunk)..((c + 1) * chunk).min(len);
                range.into_iter().find(|&i| pred(i))
            });
    }
    let _ = (par, grain);
    (0..len).find(|&i| pred(i))
}
