//! Dominating sets and excess.
//!
//! The excess of a vertex `v` with respect to a dominating set `D` is
//! `|N[v] ∩ D| - 1`; summed over the whole cube it equals `(n+1)|D| - 2^n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{CubeDim, Vertex, VertexSet};
use crate::error::{Error, Result};

/// `|N[v] ∩ S|`.
#[inline]
pub(crate) fn cover_count(set: &VertexSet, v: Vertex) -> u32 {
    v.closed_neighbors(set.dim())
        .filter(|&u| set.contains(u))
        .count() as u32
}

/// `N[S] = V(Q_n)`.
pub fn is_dominating(set: &VertexSet) -> bool {
    first_undominated(set).is_none()
}

fn first_undominated(set: &VertexSet) -> Option<Vertex> {
    let dim = set.dim();
    dim.vertices()
        .find(|&v| !v.closed_neighbors(dim).any(|u| set.contains(u)))
}

/// Any vertex set, dominating or not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    members: VertexSet,
}

impl CandidateSet {
    pub fn new(members: VertexSet) -> Self {
        CandidateSet { members }
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(dim: CubeDim, iter: I) -> Result<Self> {
        Ok(Self::new(VertexSet::from_vertices(dim, iter)?))
    }

    pub fn dim(&self) -> CubeDim {
        self.members.dim()
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn is_dominating(&self) -> bool {
        is_dominating(&self.members)
    }

    /// Lowest vertex not covered by any member.
    pub fn first_undominated(&self) -> Option<Vertex> {
        first_undominated(&self.members)
    }

    pub fn into_members(self) -> VertexSet {
        self.members
    }
}

/// A vertex set `D` with `N[D] = V(Q_n)`, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingSet {
    members: VertexSet,
}

impl DominatingSet {
    pub fn new(members: VertexSet) -> Result<Self> {
        match first_undominated(&members) {
            None => Ok(DominatingSet { members }),
            Some(v) => Err(Error::NotDominating {
                first: v.mask(),
                n: members.dim().get() as u8,
            }),
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(dim: CubeDim, iter: I) -> Result<Self> {
        Self::new(VertexSet::from_vertices(dim, iter)?)
    }

    #[inline]
    pub fn dim(&self) -> CubeDim {
        self.members.dim()
    }

    #[inline]
    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter()
    }

    /// Re-runs the domination check.
    pub fn revalidate(&self) -> bool {
        is_dominating(&self.members)
    }

    pub fn into_members(self) -> VertexSet {
        self.members
    }

    /// `|N[v] ∩ D|`.
    pub fn cover_count(&self, v: Vertex) -> u32 {
        cover_count(&self.members, v)
    }

    /// `δ_v = |N[v] ∩ D| - 1`.
    pub fn excess_of_vertex(&self, v: Vertex) -> Result<u32> {
        self.dim().check(v)?;
        Ok(self.cover_count(v) - 1)
    }

    /// `δ_S = Σ_{v ∈ S} δ_v`.
    pub fn excess_of_set(&self, set: &VertexSet) -> Result<u64> {
        if set.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: set.dim().get() as u8,
                right: self.dim().get() as u8,
            });
        }
        Ok(set.iter().map(|v| (self.cover_count(v) - 1) as u64).sum())
    }

    pub fn excess_profile(&self) -> ExcessProfile {
        let dim = self.dim();
        let per_vertex = dim
            .vertices()
            .map(|v| (self.cover_count(v) - 1) as u8)
            .collect();
        ExcessProfile::build(dim, self.len(), per_vertex)
    }
}

impl TryFrom<CandidateSet> for DominatingSet {
    type Error = Error;

    fn try_from(c: CandidateSet) -> Result<Self> {
        DominatingSet::new(c.members)
    }
}

/// Per-vertex excess of a dominating set together with the class sizes
/// `|Vδ^x|` for `0 <= x <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcessProfile {
    dim: CubeDim,
    set_size: usize,
    per_vertex: Vec<u8>,
    histogram: Vec<u64>,
    total: u64,
}

impl ExcessProfile {
    fn build(dim: CubeDim, set_size: usize, per_vertex: Vec<u8>) -> Self {
        let mut histogram = vec![0u64; dim.get() as usize + 1];
        let mut total = 0u64;
        for &x in &per_vertex {
            histogram[x as usize] += 1;
            total += x as u64;
        }
        ExcessProfile {
            dim,
            set_size,
            per_vertex,
            histogram,
            total,
        }
    }

    /// Builds a profile from an externally supplied excess array.
    ///
    /// Nothing ties the array to an actual dominating set; this is how
    /// deliberately inconsistent profiles are fed to the checkers.
    pub fn from_raw(dim: CubeDim, set_size: usize, per_vertex: Vec<u8>) -> Result<Self> {
        if per_vertex.len() != dim.order() {
            return Err(Error::InvalidParameter {
                name: "excess array length",
                value: per_vertex.len() as u64,
                expected: "2^n entries",
            });
        }
        if let Some(&x) = per_vertex.iter().find(|&&x| x as u32 > dim.get()) {
            return Err(Error::InvalidParameter {
                name: "excess value",
                value: x as u64,
                expected: "at most n",
            });
        }
        Ok(Self::build(dim, set_size, per_vertex))
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    /// `|D|`.
    pub fn set_size(&self) -> usize {
        self.set_size
    }

    #[inline]
    pub fn excess(&self, v: Vertex) -> u32 {
        self.per_vertex[v.index()] as u32
    }

    pub fn per_vertex(&self) -> &[u8] {
        &self.per_vertex
    }

    /// `histogram()[x] = |Vδ^x|`.
    pub fn histogram(&self) -> &[u64] {
        &self.histogram
    }

    pub fn class_size(&self, x: u32) -> u64 {
        self.histogram.get(x as usize).copied().unwrap_or(0)
    }

    /// `δ_{V(Q_n)}`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// `(n+1)|D| - 2^n`.
    pub fn expected_total(&self) -> i64 {
        (self.dim.get() as i64 + 1) * self.set_size as i64 - self.dim.order() as i64
    }

    pub fn identity_holds(&self) -> bool {
        self.total as i64 == self.expected_total()
    }

    /// `δ_S` read off the stored array.
    pub fn excess_of_set(&self, set: &VertexSet) -> u64 {
        set.iter().map(|v| self.excess(v) as u64).sum()
    }

    /// `Vδ^x`.
    pub fn class(&self, x: u32) -> VertexSet {
        self.select(|e| e == x)
    }

    /// `C(D)`: vertices with excess at least 2.
    pub fn c_set(&self) -> VertexSet {
        self.select(|e| e >= 2)
    }

    pub fn c_size(&self) -> u64 {
        self.histogram.iter().skip(2).sum()
    }

    fn select(&self, pred: impl Fn(u32) -> bool) -> VertexSet {
        let mut out = VertexSet::new(self.dim);
        for v in self.dim.vertices().filter(|&v| pred(self.excess(v))) {
            out.insert_unchecked(v);
        }
        out
    }
}
