//! Exact minimum dominating sets of `Q_n` for small `n`.
//!
//! The search picks the undominated vertex with the fewest remaining
//! candidate dominators and branches over its closed neighborhood. Siblings
//! already tried are excluded from later branches, so each set is reached at
//! most once per root branch. A node is pruned when
//! `chosen + ⌈undominated / max_gain⌉ >= incumbent`, where `max_gain` is the
//! largest number of undominated vertices any allowed vertex still covers
//! (never more than `n + 1`).
//!
//! With symmetry reduction on, a translation puts `(0)` in the set, and a
//! coordinate permutation makes `(1, .., k)` a member of least nonzero weight
//! `k`. The root then splits into one branch per `k`, each excluding all
//! vertices of weight `1 .. k-1`.
//!
//! Root branches are independent apart from the shared incumbent size, which
//! only ever decreases. Callers may run them on separate threads; see
//! [`Search::run_branch`].

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use crate::constructions::greedy_dominating_set;
use crate::cube::{CubeDim, Vertex};
use crate::domination::DominatingSet;
use crate::error::{Error, Result};

pub const MAX_SOLVER_DIM: u32 = 8;
pub const MAX_NAIVE_DIM: u32 = 5;

const CHECK_INTERVAL: u64 = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Only look for sets of at most this size.
    pub upper_bound_seed: Option<usize>,
    pub node_limit: Option<u64>,
    pub symmetry: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            upper_bound_seed: None,
            node_limit: None,
            symmetry: true,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.upper_bound_seed == Some(0) {
            return Err(Error::InvalidParameter {
                name: "upper bound seed",
                value: 0,
                expected: "positive",
            });
        }
        if self.node_limit == Some(0) {
            return Err(Error::InvalidParameter {
                name: "node limit",
                value: 0,
                expected: "positive",
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Size of `witness`; equal to `γ(Q_n)` when `proven_optimal`.
    pub optimum: usize,
    pub witness: DominatingSet,
    pub proven_optimal: bool,
    pub nodes_explored: u64,
}

/// 256-bit vertex set, enough for `n <= 8`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Bits([u64; 4]);

impl Bits {
    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    fn test(&self, i: usize) -> bool {
        (self.0[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    fn and_not(&self, o: &Bits) -> Bits {
        Bits(core::array::from_fn(|k| self.0[k] & !o.0[k]))
    }

    #[inline]
    fn and_count(&self, o: &Bits) -> u32 {
        (0..4).map(|k| (self.0[k] & o.0[k]).count_ones()).sum()
    }

    #[inline]
    fn and_not_count(&self, o: &Bits) -> u32 {
        (0..4).map(|k| (self.0[k] & !o.0[k]).count_ones()).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    fn full(order: usize) -> Bits {
        let mut b = Bits::default();
        for i in 0..order {
            b.set(i);
        }
        b
    }
}

#[derive(Clone, Debug)]
struct RootBranch {
    fixed: Vec<usize>,
    excluded: Bits,
}

/// Outcome of one root branch.
#[derive(Clone, Debug, Default)]
pub struct BranchOutcome {
    /// Best set found inside the branch, if it beat the incumbent at the time.
    pub best: Option<Vec<Vertex>>,
    pub nodes: u64,
    /// False when a stop request or the node limit cut the branch short.
    pub completed: bool,
}

/// A prepared branch-and-bound search.
pub struct Search {
    dim: CubeDim,
    nbhd: Vec<Bits>,
    branches: Vec<RootBranch>,
    incumbent: AtomicUsize,
    fallback: DominatingSet,
    seed: Option<usize>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
}

impl Search {
    pub fn new(dim: CubeDim, config: &SearchConfig) -> Result<Self> {
        config.validate()?;
        if dim.get() > MAX_SOLVER_DIM {
            return Err(Error::InvalidParameter {
                name: "n",
                value: dim.get() as u64,
                expected: "at most 8 for exact search",
            });
        }
        let nbhd = dim
            .vertices()
            .map(|v| {
                let mut b = Bits::default();
                for u in v.closed_neighbors(dim) {
                    b.set(u.index());
                }
                b
            })
            .collect();
        let fallback = greedy_dominating_set(dim)?;
        let mut incumbent = fallback.len();
        if let Some(s) = config.upper_bound_seed {
            incumbent = incumbent.min(s + 1);
        }
        let branches = if config.symmetry {
            symmetric_roots(dim)
        } else {
            plain_roots(dim)
        };
        Ok(Search {
            dim,
            nbhd,
            branches,
            incumbent: AtomicUsize::new(incumbent),
            fallback,
            seed: config.upper_bound_seed,
            node_limit: config.node_limit,
            nodes: AtomicU64::new(0),
        })
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Current incumbent size; the search only accepts strictly smaller sets.
    pub fn incumbent(&self) -> usize {
        self.incumbent.load(Ordering::Relaxed)
    }

    /// Explores root branch `index`. `stop` is polled every 1024 nodes.
    pub fn run_branch(&self, index: usize, stop: &dyn Fn() -> bool) -> BranchOutcome {
        let root = &self.branches[index];
        let mut undom = Bits::full(self.dim.order());
        for &f in &root.fixed {
            undom = undom.and_not(&self.nbhd[f]);
        }
        let mut walker = Walker {
            search: self,
            stop,
            chosen: root.fixed.clone(),
            best: None,
            nodes: 0,
            pending: 0,
            aborted: false,
        };
        walker.dfs(undom, root.excluded);
        self.nodes.fetch_add(walker.pending, Ordering::Relaxed);
        BranchOutcome {
            best: walker
                .best
                .map(|b| b.into_iter().map(|i| Vertex::from_mask(i as u32)).collect()),
            nodes: walker.nodes,
            completed: !walker.aborted,
        }
    }

    /// Combines branch outcomes (in branch order) into a result.
    pub fn finish(self, outcomes: Vec<BranchOutcome>) -> Result<SearchResult> {
        let completed =
            outcomes.len() == self.branches.len() && outcomes.iter().all(|o| o.completed);
        let nodes_explored = outcomes.iter().map(|o| o.nodes).sum();
        let found = outcomes
            .into_iter()
            .filter_map(|o| o.best)
            .min_by_key(|b| b.len());
        let witness = match found {
            Some(vs) => DominatingSet::from_vertices(self.dim, vs)?,
            None => {
                if completed && self.seed.is_some_and(|s| s < self.fallback.len()) {
                    return Err(Error::NoSolutionWithinBound {
                        bound: self.seed.unwrap_or(0),
                    });
                }
                self.fallback
            }
        };
        Ok(SearchResult {
            optimum: witness.len(),
            witness,
            proven_optimal: completed,
            nodes_explored,
        })
    }
}

fn symmetric_roots(dim: CubeDim) -> Vec<RootBranch> {
    let n = dim.get();
    let mut roots = Vec::with_capacity(n as usize + 1);
    // only (0)
    let mut all = Bits::full(dim.order());
    all.0[0] &= !1;
    roots.push(RootBranch {
        fixed: vec![0],
        excluded: all,
    });
    for k in 1..=n {
        let mut excluded = Bits::default();
        for v in dim.vertices().filter(|v| (1..k).contains(&v.weight())) {
            excluded.set(v.index());
        }
        roots.push(RootBranch {
            fixed: vec![0, (1usize << k) - 1],
            excluded,
        });
    }
    roots
}

/// The first level of the plain search: `(0)` is dominated by one of `N[(0)]`,
/// earlier choices excluded from later branches.
fn plain_roots(dim: CubeDim) -> Vec<RootBranch> {
    let mut excluded = Bits::default();
    Vertex::ZERO
        .closed_neighbors(dim)
        .map(|c| {
            let b = RootBranch {
                fixed: vec![c.index()],
                excluded,
            };
            excluded.set(c.index());
            b
        })
        .collect()
}

struct Walker<'a> {
    search: &'a Search,
    stop: &'a dyn Fn() -> bool,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    nodes: u64,
    pending: u64,
    aborted: bool,
}

impl Walker<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= CHECK_INTERVAL {
            let total = self.search.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
            self.pending = 0;
            if (self.stop)() || self.search.node_limit.is_some_and(|l| total >= l) {
                self.aborted = true;
            }
        }
        !self.aborted
    }

    fn dfs(&mut self, undom: Bits, mut excluded: Bits) {
        if !self.tick() {
            return;
        }
        let incumbent = &self.search.incumbent;
        if undom.is_empty() {
            let size = self.chosen.len();
            if size < incumbent.fetch_min(size, Ordering::Relaxed) {
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        let nbhd = &self.search.nbhd;
        let undom_count = undom.count() as usize;

        let mut max_gain = 0u32;
        for (v, nb) in nbhd.iter().enumerate() {
            if !excluded.test(v) {
                max_gain = max_gain.max(nb.and_count(&undom));
            }
        }
        if max_gain == 0 {
            return;
        }
        if self.chosen.len() + undom_count.div_ceil(max_gain as usize)
            >= incumbent.load(Ordering::Relaxed)
        {
            return;
        }

        // fail-first: the undominated vertex with the fewest allowed dominators
        let mut pivot = usize::MAX;
        let mut fewest = u32::MAX;
        for u in undom.ones() {
            let avail = nbhd[u].and_not_count(&excluded);
            if avail < fewest {
                fewest = avail;
                pivot = u;
                if avail <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return;
        }

        let mut cands: Vec<(u32, usize)> = nbhd[pivot]
            .and_not(&excluded)
            .ones()
            .map(|c| (nbhd[c].and_count(&undom), c))
            .collect();
        cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        for (_, c) in cands {
            if self.chosen.len() + 1 >= incumbent.load(Ordering::Relaxed) {
                break;
            }
            self.chosen.push(c);
            self.dfs(undom.and_not(&nbhd[c]), excluded);
            self.chosen.pop();
            if self.aborted {
                return;
            }
            excluded.set(c);
        }
    }
}

/// Runs every root branch in order on the current thread.
pub fn solve_min_dominating_with(
    dim: CubeDim,
    config: &SearchConfig,
    stop: &dyn Fn() -> bool,
) -> Result<SearchResult> {
    let search = Search::new(dim, config)?;
    let mut outcomes = Vec::with_capacity(search.branch_count());
    for i in 0..search.branch_count() {
        let o = search.run_branch(i, stop);
        let done = !o.completed;
        outcomes.push(o);
        if done {
            break;
        }
    }
    search.finish(outcomes)
}

pub fn solve_min_dominating(dim: CubeDim, config: &SearchConfig) -> Result<SearchResult> {
    solve_min_dominating_with(dim, config, &|| false)
}

/// Exhaustive search over subsets in increasing size; the first dominating
/// subset in lexicographic order is returned.
pub fn naive_min_dominating(dim: CubeDim) -> Result<SearchResult> {
    if dim.get() > MAX_NAIVE_DIM {
        return Err(Error::InvalidParameter {
            name: "n",
            value: dim.get() as u64,
            expected: "at most 5 for exhaustive enumeration",
        });
    }
    let order = dim.order();
    let full: u64 = if order == 64 {
        u64::MAX
    } else {
        (1 << order) - 1
    };
    let cover: Vec<u64> = dim
        .vertices()
        .map(|v| {
            v.closed_neighbors(dim)
                .fold(0u64, |m, u| m | 1 << u.index())
        })
        .collect();
    let mut nodes = 0u64;
    for k in 1..=order {
        let mut pick = Vec::with_capacity(k);
        if subsets(&cover, full, k, 0, 0, &mut pick, &mut nodes) {
            let witness = DominatingSet::from_vertices(
                dim,
                pick.iter().map(|&i| Vertex::from_mask(i as u32)),
            )?;
            return Ok(SearchResult {
                optimum: k,
                witness,
                proven_optimal: true,
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("V(Q_n) dominates itself")
}

fn subsets(
    cover: &[u64],
    full: u64,
    k: usize,
    start: usize,
    acc: u64,
    pick: &mut Vec<usize>,
    nodes: &mut u64,
) -> bool {
    if pick.len() == k {
        *nodes += 1;
        return acc == full;
    }
    let need = k - pick.len();
    for i in start..=cover.len() - need {
        pick.push(i);
        if subsets(cover, full, k, i + 1, acc | cover[i], pick, nodes) {
            return true;
        }
        pick.pop();
    }
    false
}
