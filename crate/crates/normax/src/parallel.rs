//! A minimal fixed-order work pool over scoped threads.

/// Apply `f` to every item on up to `jobs` threads, returning results in
/// input order regardless of scheduling.
pub fn map_ordered<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut pieces: Vec<(usize, Vec<R>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .enumerate()
            .map(|(idx, slice)| {
                let f = &f;
                scope.spawn(move || (idx, slice.iter().map(f).collect::<Vec<R>>()))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    pieces.sort_by_key(|(idx, _)| *idx);
    pieces.into_iter().flat_map(|(_, v)| v).collect()
}

/// Number of worker threads to use when the caller does not say.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}
