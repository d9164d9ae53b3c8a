//! Multi-threaded driver for the exact search, with a wall-clock limit.
//!
//! Workers pull root branches from a shared counter. The only shared search
//! state is the incumbent size inside [`Search`], so the optimum does not
//! depend on scheduling; with more than one thread the particular witness may.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use qn_core::solver::{BranchOutcome, Search, SearchConfig, SearchResult};
use qn_core::{CubeDim, Error};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub search: SearchConfig,
    pub time_limit: Option<Duration>,
    pub threads: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            search: SearchConfig::default(),
            time_limit: None,
            threads: 1,
        }
    }
}

pub fn solve(dim: CubeDim, config: &SolveConfig) -> Result<SearchResult, Error> {
    if config.threads == 0 {
        return Err(Error::InvalidParameter {
            name: "threads",
            value: 0,
            expected: "positive",
        });
    }
    if config.time_limit == Some(Duration::ZERO) {
        return Err(Error::InvalidParameter {
            name: "time limit",
            value: 0,
            expected: "positive",
        });
    }
    let search = Search::new(dim, &config.search)?;
    let deadline = config.time_limit.map(|t| Instant::now() + t);
    let halted = AtomicBool::new(false);
    let stop = || halted.load(Ordering::Relaxed) || deadline.is_some_and(|d| Instant::now() >= d);

    let branches = search.branch_count();
    let slots: Mutex<Vec<Option<BranchOutcome>>> = Mutex::new(vec![None; branches]);
    let next = AtomicUsize::new(0);
    let worker = || loop {
        if halted.load(Ordering::Relaxed) {
            break;
        }
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= branches {
            break;
        }
        let outcome = search.run_branch(i, &stop);
        if !outcome.completed {
            halted.store(true, Ordering::Relaxed);
        }
        slots.lock().expect("worker panicked")[i] = Some(outcome);
    };

    let threads = config.threads.min(branches.max(1));
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(worker);
            }
        });
    }

    let outcomes = slots
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(Option::unwrap_or_default)
        .collect();
    search.finish(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: u32) -> CubeDim {
        CubeDim::new(n).unwrap()
    }

    #[test]
    fn optimum_independent_of_threads_and_symmetry() {
        for n in 1..=6 {
            let mut seen = Vec::new();
            for threads in [1, 3] {
                for symmetry in [true, false] {
                    let cfg = SolveConfig {
                        search: SearchConfig {
                            symmetry,
                            ..Default::default()
                        },
                        threads,
                        ..Default::default()
                    };
                    let r = solve(dim(n), &cfg).unwrap();
                    assert!(r.proven_optimal);
                    assert!(r.witness.revalidate());
                    seen.push(r.optimum);
                }
            }
            assert!(seen.windows(2).all(|w| w[0] == w[1]), "n={n}: {seen:?}");
        }
    }

    #[test]
    fn rejects_zero_limits() {
        let cfg = SolveConfig {
            threads: 0,
            ..Default::default()
        };
        assert!(solve(dim(3), &cfg).is_err());
        let cfg = SolveConfig {
            time_limit: Some(Duration::ZERO),
            ..Default::default()
        };
        assert!(solve(dim(3), &cfg).is_err());
    }

    #[test]
    fn tiny_time_limit_still_returns_a_witness() {
        let cfg = SolveConfig {
            time_limit: Some(Duration::from_nanos(1)),
            search: SearchConfig {
                symmetry: false,
                ..Default::default()
            },
            ..Default::default()
        };
        let r = solve(dim(7), &cfg).unwrap();
        assert!(r.witness.revalidate());
    }
}
