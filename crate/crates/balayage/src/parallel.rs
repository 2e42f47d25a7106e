//! Deterministic data-parallel map.
//!
//! Work items are split into contiguous chunks, each chunk is evaluated on
//! its own thread, and results are stitched back together in input order.
//! The output is therefore identical for every thread count, including 1.
//! `BAL_THREADS` caps the number of worker threads.

use std::num::NonZeroUsize;

/// Number of worker threads to use: `BAL_THREADS` if set, otherwise the
/// available parallelism, always at least 1.
pub fn thread_cap() -> usize {
    if let Ok(v) = std::env::var("BAL_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

/// Maps `f` over `items`, preserving order.
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = thread_cap().min(items.len().max(1));
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<Vec<R>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        out = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });
    out.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<usize> = (0..1000).collect();
        let doubled = par_map(&items, |&x| 2 * x);
        assert_eq!(doubled, items.iter().map(|x| 2 * x).collect::<Vec<_>>());
    }

    #[test]
    fn empty_input() {
        let items: Vec<u8> = vec![];
        assert!(par_map(&items, |&x| x).is_empty());
    }
}
