//! Multi-threaded conductor search.
//!
//! Candidate conductors are evaluated in rounds of `threads * chunk`. Each
//! round fills the class-number cache in parallel; the sequential search in
//! the core then runs against the cache, so the answer is exactly the one the
//! single-threaded search would give.

use std::thread;

use num_bigint::BigInt;
use rmarith_core::cmrm::{conductor_problem, rm_conductor_with};
use rmarith_core::{ConductorMatch, Flavor, QuadraticOrder};

use crate::cache::{compute, ClassNumberCache};

const CHUNK: u64 = 64;

/// Least `f'` as in [`rmarith_core::rm_conductor`], scanning with `threads` workers.
pub fn rm_conductor_parallel(
    d: &BigInt,
    f: u64,
    limit: u64,
    threads: usize,
    cache: &mut ClassNumberCache,
) -> rmarith_core::Result<ConductorMatch> {
    let (_, cm_order, rm_field) = conductor_problem(d, f)?;
    let target = cache.class_number(cm_order.discriminant(), Flavor::Wide)?;
    let threads = threads.max(1) as u64;
    let mut next = 1u64;
    while next <= limit {
        let end = limit.min(next + threads * CHUNK - 1);
        let missing: Vec<BigInt> = (next..=end)
            .map(|g| QuadraticOrder::new(rm_field.clone(), BigInt::from(g)).map(|o| o.discriminant().clone()))
            .collect::<rmarith_core::Result<Vec<_>>>()?
            .into_iter()
            .filter(|disc| cache.get(disc).is_none())
            .collect();
        for (disc, pair) in evaluate(&missing, threads as usize) {
            let (n, w) = pair?;
            cache.insert(disc, n, w);
        }
        let hit = (next..=end).any(|g| {
            let disc = &rm_field * BigInt::from(g) * BigInt::from(g);
            cache.get(&disc).is_some_and(|(_, w)| w == target)
        });
        if hit {
            break;
        }
        next = end + 1;
    }
    rm_conductor_with(d, f, limit, |disc| cache.class_number(disc, Flavor::Wide))
}

type Evaluated = (BigInt, rmarith_core::Result<(u64, u64)>);

fn evaluate(discs: &[BigInt], threads: usize) -> Vec<Evaluated> {
    if discs.is_empty() {
        return Vec::new();
    }
    let per = discs.len().div_ceil(threads.max(1));
    thread::scope(|s| {
        let workers: Vec<_> = discs
            .chunks(per)
            .map(|part| s.spawn(move || part.iter().map(|d| (d.clone(), compute(d))).collect::<Vec<_>>()))
            .collect();
        workers
            .into_iter()
            .flat_map(|w| w.join().expect("worker panicked"))
            .collect()
    })
}
