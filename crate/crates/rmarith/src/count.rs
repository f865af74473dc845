//! Counting tables `(T, N(T))` and their log-log slope.

use std::thread;

use num_bigint::BigInt;
use rmarith_core::heights::{count_quantum_points, projective_points_with_x0};

/// `N(P^n(Q), T)`, splitting the enumeration by the first coordinate across `threads` workers.
pub fn count_projective_parallel(n: usize, bound: u64, threads: usize) -> usize {
    let threads = threads.max(1) as u64;
    thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|w| {
                s.spawn(move || {
                    (0..=bound)
                        .filter(|x0| x0 % threads == w)
                        .map(|x0| projective_points_with_x0(n, bound, x0).count())
                        .sum::<usize>()
                })
            })
            .collect();
        workers.into_iter().map(|w| w.join().expect("worker panicked")).sum()
    })
}

pub fn count_quantum(n: usize, bound: u64) -> rmarith_core::Result<usize> {
    count_quantum_points(n, &BigInt::from(bound))
}

/// `T = tmin, 2 tmin, 4 tmin, …` up to `tmax`.
pub fn doubling_bounds(tmin: u64, tmax: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut t = tmin.max(1);
    while t <= tmax {
        out.push(t);
        match t.checked_mul(2) {
            Some(next) => t = next,
            None => break,
        }
    }
    out
}

/// Least-squares slope of `log2 N` against `log2 T`, over rows with `N > 0`.
pub fn loglog_slope(rows: &[(u64, usize)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|(t, n)| *t > 0 && *n > 0)
        .map(|&(t, n)| ((t as f64).log2(), (n as f64).log2()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
