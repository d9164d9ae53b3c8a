//! Explicit dominating sets: Hamming codes, doubling, greedy.

use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{CubeDim, Vertex, VertexSet};
use crate::domination::DominatingSet;
use crate::error::{Error, Result};

/// Syndrome of a word under the parity-check matrix whose column `i` is the
/// binary expansion of `i`.
fn syndrome(v: Vertex) -> u32 {
    v.coords().fold(0, |acc, c| acc ^ c)
}

/// The Hamming code of length `n = 2^r - 1`, a perfect code for `2 <= r <= 4`.
pub fn hamming_perfect_code(r: u32) -> Result<DominatingSet> {
    if !(2..=4).contains(&r) {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r as u64,
            expected: "2..=4",
        });
    }
    let dim = CubeDim::new((1 << r) - 1)?;
    let code = dim.vertices().filter(|&v| syndrome(v) == 0);
    DominatingSet::from_vertices(dim, code)
}

/// `D ∪ {v ∪ {n+1} : v ∈ D}`, a dominating set of `Q_{n+1}` of size `2|D|`.
pub fn double(d: &DominatingSet) -> Result<DominatingSet> {
    let n = d.dim().get();
    if n >= CubeDim::MAX {
        return Err(Error::DimensionOutOfRange { n: n + 1 });
    }
    let dim = CubeDim::new(n + 1)?;
    let top = 1u32 << n;
    let mut out = VertexSet::new(dim);
    for v in d.iter() {
        out.insert_unchecked(v);
        out.insert_unchecked(Vertex::from_mask(v.mask() | top));
    }
    DominatingSet::new(out)
}

pub const GREEDY_MAX_DIM: u32 = 20;

/// Greedy cover: repeatedly take the vertex whose closed neighborhood holds
/// the most undominated vertices, lowest mask first among ties.
pub fn greedy_dominating_set(dim: CubeDim) -> Result<DominatingSet> {
    if dim.get() > GREEDY_MAX_DIM {
        return Err(Error::InvalidParameter {
            name: "n",
            value: dim.get() as u64,
            expected: "at most 20 for the greedy construction",
        });
    }
    let order = dim.order();
    let mut gain = vec![dim.get() as u8 + 1; order];
    let mut dominated = vec![false; order];
    let mut remaining = order;
    let mut chosen = VertexSet::new(dim);
    let mut best = dim.get() as usize + 1;
    // Gains only ever decrease, so the scan position for the current best
    // gain never has to move backwards.
    let mut cursor = 0usize;
    while remaining > 0 {
        while cursor < order && gain[cursor] as usize != best {
            cursor += 1;
        }
        if cursor == order {
            best -= 1;
            cursor = 0;
            continue;
        }
        let pick = Vertex::from_mask(cursor as u32);
        chosen.insert_unchecked(pick);
        let newly: Vec<Vertex> = pick
            .closed_neighbors(dim)
            .filter(|u| !dominated[u.index()])
            .collect();
        for w in newly {
            dominated[w.index()] = true;
            remaining -= 1;
            for u in w.closed_neighbors(dim) {
                gain[u.index()] -= 1;
            }
        }
    }
    DominatingSet::new(chosen)
}
