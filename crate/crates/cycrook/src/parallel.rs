//! Deterministic parallel mapping for independent verification trials.
//!
//! Work items are distributed across a bounded pool of scoped threads
//! and results are returned in input order, so output is identical to a
//! sequential run. The `CYCROOK_THREADS` environment variable caps the
//! worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

/// Worker cap: CYCROOK_THREADS if set and valid, else the machine's
/// available parallelism.
pub fn worker_count() -> usize {
    if let Ok(v) = std::env::var("CYCROOK_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Maps `f` over the inputs, preserving order. Runs sequentially when
/// a single worker suffices.
pub fn ordered_map<T, U, F>(inputs: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let workers = worker_count().min(inputs.len().max(1));
    if workers <= 1 || inputs.len() <= 1 {
        return inputs.iter().map(|t| f(t)).collect();
    }
    let next = AtomicUsize::new(0);
    let (tx, rx) = std::sync::mpsc::channel::<(usize, U)>();
    let (next_ref, inputs_ref, f_ref) = (&next, &inputs, &f);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            scope.spawn(move || loop {
                let i = next_ref.fetch_add(1, Ordering::Relaxed);
                if i >= inputs_ref.len() {
                    break;
                }
                let out = f_ref(&inputs_ref[i]);
                if tx.send((i, out)).is_err() {
                    break;
                }
            });
        }
    });
    drop(tx);
    let mut slots: Vec<Option<U>> = Vec::with_capacity(inputs.len());
    slots.resize_with(inputs.len(), || None);
    for (i, out) in rx {
        slots[i] = Some(out);
    }
    slots
        .into_iter()
        .map(|s| s.expect("every index claimed by exactly one worker"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let inputs: Vec<u64> = (0..100).collect();
        let out = ordered_map(inputs.clone(), |&x| x * x);
        let expect: Vec<u64> = inputs.iter().map(|&x| x * x).collect();
        assert_eq!(out, expect);
    }

    #[test]
    fn respects_env_cap() {
        // Sanity only: with the cap at 1 the sequential path is taken.
        std::env::set_var("CYCROOK_THREADS", "1");
        let out = ordered_map(vec![1, 2, 3], |&x| x + 1);
        std::env::remove_var("CYCROOK_THREADS");
        assert_eq!(out, vec![2, 3, 4]);
    }
}
