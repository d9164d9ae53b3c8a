//! Combinatorics of dominating sets in the binary hypercube `Q_n`
//! (equivalently, binary codes of length `n` with covering radius one).
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`cube`]: vertices as coordinate bitmasks, spheres, neighborhoods and
//!   coordinate-set helpers.
//! * [`domination`]: validated dominating sets and per-vertex excess.
//! * [`congruence`]: the parity and mod-3 congruences that every dominating set
//!   satisfies when `n` is a multiple of 6.
//! * [`surfeit`]: surfeit counting, the two ways of computing the total surfeit,
//!   the `T_i`/`S_i` decomposition and checkers for the supporting lemmas.
//! * [`bounds`]: sphere-covering, van Wee and the improved lower bound, in exact
//!   rational arithmetic.
//! * [`constructions`]: Hamming codes, doubling and a greedy baseline.
//! * [`solver`]: exact branch-and-bound search for small `n` and a naive oracle.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod congruence;
pub mod constructions;
pub mod cube;
pub mod domination;
mod error;
pub mod solver;
pub mod surfeit;

pub use cube::{CoordSet, CubeDim, SetDistance, Vertex, VertexSet};
pub use domination::{CandidateSet, DominatingSet, ExcessProfile};
pub use error::{Error, Result};
