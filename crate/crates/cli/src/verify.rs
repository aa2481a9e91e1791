//! Exhaustive verification of `MMT(G_r) = G_{r+1}` spread over threads.

use std::thread;

use domino_core::rankmaps::VerificationReport;
use domino_core::signed::enumerate_hyperoctahedral;
use domino_core::SignedPermutation;

/// Environment variable overriding the number of verification threads.
pub const WORKERS_ENV: &str = "DOMINO_WORKERS";

pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Checks every element of `H_n` at rank `rank` using `workers` threads.
/// Failures are reported in enumeration order.
pub fn verify_parallel(n: usize, rank: u32, workers: usize) -> VerificationReport {
    let sigmas: Vec<SignedPermutation> = enumerate_hyperoctahedral(n).collect();
    let chunk = sigmas.len().div_ceil(workers.max(1)).max(1);
    let mut report = VerificationReport::new(n, rank);
    thread::scope(|scope| {
        let handles: Vec<_> = sigmas
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut local = VerificationReport::new(n, rank);
                    for s in part {
                        local.record(s);
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            report.merge(h.join().expect("verification worker panicked"));
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use domino_core::rankmaps::verify_all;

    #[test]
    fn parallel_matches_serial() {
        for workers in [1, 3, 8] {
            let p = verify_parallel(3, 1, workers);
            let s = verify_all(3, 1);
            assert_eq!(p.count_checked, s.count_checked);
            assert_eq!(p.count_failed, 0);
        }
        assert_eq!(verify_parallel(0, 2, 4).count_checked, 1);
    }
}
