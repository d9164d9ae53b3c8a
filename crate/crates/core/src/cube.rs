//! Vertices of `Q_n`, dense vertex sets and the basic neighborhood operations.
//!
//! A vertex is a subset of the coordinates `{1, .., n}` stored as a bitmask:
//! coordinate `i` lives in bit `i - 1`. The empty vertex is written `(0)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Hypercube dimension, `1 <= n <= 30`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeDim(u8);

impl CubeDim {
    pub const MAX: u32 = 30;

    pub fn new(n: u32) -> Result<Self> {
        if (1..=Self::MAX).contains(&n) {
            Ok(CubeDim(n as u8))
        } else {
            Err(Error::DimensionOutOfRange { n })
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    /// Number of vertices, `2^n`.
    #[inline]
    pub fn order(self) -> usize {
        1usize << self.0
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        (v.0 as u64) < (1u64 << self.0)
    }

    pub fn vertex(self, mask: u32) -> Result<Vertex> {
        let v = Vertex(mask);
        self.check(v)?;
        Ok(v)
    }

    /// Builds a vertex from 1-based coordinates, e.g. `&[2, 3, 5]` for `(2,3,5)`.
    pub fn vertex_from_coords(self, coords: &[u32]) -> Result<Vertex> {
        let mut mask = 0u32;
        for &c in coords {
            self.check_coord(c)?;
            mask |= 1 << (c - 1);
        }
        Ok(Vertex(mask))
    }

    pub(crate) fn check(self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                mask: v.0,
                n: self.0,
            })
        }
    }

    pub(crate) fn check_coord(self, a: u32) -> Result<()> {
        if (1..=self.get()).contains(&a) {
            Ok(())
        } else {
            Err(Error::CoordinateOutOfRange {
                coord: a,
                n: self.0,
            })
        }
    }

    /// All vertices in increasing mask order.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> + Clone {
        (0..self.order() as u32).map(Vertex)
    }

    pub fn distance(self, u: Vertex, v: Vertex) -> Result<u32> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.distance(v))
    }

    /// `N_i[v]`, the vertices at distance exactly `i` from `v`.
    pub fn sphere(self, v: Vertex, i: u32) -> Result<VertexSet> {
        self.check(v)?;
        let iter = self.sphere_iter(v, i)?;
        let mut out = VertexSet::new(self);
        for u in iter {
            out.insert_unchecked(u);
        }
        Ok(out)
    }

    pub fn sphere_iter(self, v: Vertex, i: u32) -> Result<SphereIter> {
        if i > self.get() {
            return Err(Error::RadiusOutOfRange {
                radius: i,
                n: self.0,
            });
        }
        Ok(SphereIter::new(self, v, i))
    }

    /// `N[v] = N_0[v] ∪ N_1[v]`.
    pub fn closed_neighborhood(self, v: Vertex) -> Result<VertexSet> {
        self.check(v)?;
        let mut out = VertexSet::new(self);
        for u in v.closed_neighbors(self) {
            out.insert_unchecked(u);
        }
        Ok(out)
    }
}

impl fmt::Display for CubeDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}", self.0)
    }
}

/// A vertex of `Q_n` as a coordinate bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(u32);

impl Vertex {
    pub const ZERO: Vertex = Vertex(0);

    /// Wraps a mask without checking it against any dimension.
    #[inline]
    pub const fn from_mask(mask: u32) -> Self {
        Vertex(mask)
    }

    #[inline]
    pub const fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Number of coordinates, i.e. distance from `(0)`.
    #[inline]
    pub const fn weight(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub const fn distance(self, other: Vertex) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// Whether 1-based coordinate `a` belongs to the vertex.
    #[inline]
    pub const fn has_coord(self, a: u32) -> bool {
        a >= 1 && a <= 32 && (self.0 >> (a - 1)) & 1 == 1
    }

    /// Toggles coordinate `a` (1-based).
    #[inline]
    pub const fn toggle(self, a: u32) -> Vertex {
        Vertex(self.0 ^ (1 << (a - 1)))
    }

    /// Translation by `other` (symmetric difference).
    #[inline]
    pub const fn translate(self, other: Vertex) -> Vertex {
        Vertex(self.0 ^ other.0)
    }

    /// Coordinates in increasing order.
    pub fn coords(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                Some(b + 1)
            }
        })
    }

    /// The `n` vertices at distance one.
    #[inline]
    pub fn neighbors(self, dim: CubeDim) -> impl Iterator<Item = Vertex> + Clone {
        let m = self.0;
        (0..dim.get()).map(move |b| Vertex(m ^ (1 << b)))
    }

    /// `v` followed by its `n` neighbors.
    #[inline]
    pub fn closed_neighbors(self, dim: CubeDim) -> impl Iterator<Item = Vertex> + Clone {
        core::iter::once(self).chain(self.neighbors(dim))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, c) in self.coords().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Vertices at a fixed distance from a centre, in increasing order of the
/// translation offset.
#[derive(Clone, Debug)]
pub struct SphereIter {
    centre: u32,
    next: Option<u64>,
    limit: u64,
}

impl SphereIter {
    fn new(dim: CubeDim, centre: Vertex, radius: u32) -> Self {
        let limit = 1u64 << dim.get();
        let first = (1u64 << radius) - 1;
        SphereIter {
            centre: centre.0,
            next: if first < limit { Some(first) } else { None },
            limit,
        }
    }
}

impl Iterator for SphereIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        let cur = self.next?;
        // Gosper's hack: next larger word with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < self.limit).then_some(succ)
        };
        Some(Vertex(self.centre ^ cur as u32))
    }
}

/// A set of 1-based coordinates, e.g. the value of `g(S)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CoordSet(u32);

impl CoordSet {
    pub const fn from_mask(mask: u32) -> Self {
        CoordSet(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn contains(self, a: u32) -> bool {
        Vertex(self.0).has_coord(a)
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        Vertex(self.0).coords()
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Result of [`VertexSet::distance_to`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetDistance {
    Exact(u32),
    /// Every member is farther than the cap (or the set is empty).
    Beyond(u32),
}

impl SetDistance {
    /// True when the distance is known to be at least `d`.
    pub fn at_least(self, d: u32) -> bool {
        match self {
            SetDistance::Exact(x) => x >= d,
            SetDistance::Beyond(cap) => cap + 1 >= d,
        }
    }
}

/// Dense bitset over all `2^n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    dim: CubeDim,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(dim: CubeDim) -> Self {
        let words = dim.order().div_ceil(64);
        VertexSet {
            dim,
            words: vec![0; words],
            len: 0,
        }
    }

    /// `V(Q_n)`.
    pub fn full(dim: CubeDim) -> Self {
        let mut s = Self::new(dim);
        let order = dim.order();
        for (k, w) in s.words.iter_mut().enumerate() {
            let lo = k * 64;
            *w = if order - lo >= 64 {
                u64::MAX
            } else {
                (1u64 << (order - lo)) - 1
            };
        }
        s.len = order;
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(dim: CubeDim, iter: I) -> Result<Self> {
        let mut s = Self::new(dim);
        for v in iter {
            s.insert(v)?;
        }
        Ok(s)
    }

    #[inline]
    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        let i = v.index();
        i < self.dim.order() && (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    /// Returns whether the vertex was newly added.
    pub fn insert(&mut self, v: Vertex) -> Result<bool> {
        self.dim.check(v)?;
        Ok(self.insert_unchecked(v))
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, v: Vertex) -> bool {
        let i = v.index();
        let bit = 1u64 << (i & 63);
        let w = &mut self.words[i >> 6];
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if !self.contains(v) {
            return false;
        }
        let i = v.index();
        self.words[i >> 6] &= !(1u64 << (i & 63));
        self.len -= 1;
        true
    }

    /// Members in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros();
                    rest &= rest - 1;
                    Some(Vertex((k * 64) as u32 + b))
                }
            })
        })
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.dim == other.dim
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) -> Result<()> {
        self.same_dim(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.recount();
        Ok(())
    }

    pub fn intersect_with(&mut self, other: &VertexSet) -> Result<()> {
        self.same_dim(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.recount();
        Ok(())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn same_dim(&self, other: &VertexSet) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim.0,
                right: other.dim.0,
            })
        }
    }

    fn recount(&mut self) {
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    /// `N[S]`, the union of closed neighborhoods of the members.
    pub fn closed_neighborhood(&self) -> VertexSet {
        let mut out = self.clone();
        for v in self.iter() {
            for u in v.neighbors(self.dim) {
                out.insert_unchecked(u);
            }
        }
        out
    }

    /// `g(S)`, the union of the members' coordinate sets.
    pub fn coord_union(&self) -> CoordSet {
        CoordSet(self.iter().fold(0, |acc, v| acc | v.mask()))
    }

    /// `S[a]`, the members containing coordinate `a`.
    pub fn filter_by_coord(&self, a: u32) -> Result<VertexSet> {
        self.dim.check_coord(a)?;
        let mut out = VertexSet::new(self.dim);
        for v in self.iter().filter(|v| v.has_coord(a)) {
            out.insert_unchecked(v);
        }
        Ok(out)
    }

    /// Distance from `u` to the nearest member, exact up to `cap`.
    ///
    /// Grows Hamming balls around `u` one radius at a time and stops at the
    /// first hit.
    pub fn distance_to(&self, u: Vertex, cap: u32) -> SetDistance {
        if self.is_empty() {
            return SetDistance::Beyond(cap);
        }
        let top = cap.min(self.dim.get());
        for r in 0..=top {
            if SphereIter::new(self.dim, u, r).any(|w| self.contains(w)) {
                return SetDistance::Exact(r);
            }
        }
        SetDistance::Beyond(cap)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet[{}]", self.dim)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
