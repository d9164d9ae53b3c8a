//! Congruences satisfied by every dominating set of `Q_n` when `6 | n`:
//!
//! * `δ_{N[v]}` is odd for `v ∉ D` and even for `v ∈ D`;
//! * `δ_{N_1[v]} + δ_{N_2[v]} ≡ 0 (mod 3)` for every `v`.
//!
//! The sums are taken over an already computed [`ExcessProfile`], so a clean
//! report also certifies the excess pass that produced it.

use alloc::vec::Vec;

use crate::cube::{CubeDim, Vertex};
use crate::domination::{DominatingSet, ExcessProfile};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityViolation {
    pub vertex: Vertex,
    pub in_d: bool,
    /// `δ_{N[v]}`.
    pub neighborhood_excess: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mod3Violation {
    pub vertex: Vertex,
    /// `δ_{N_1[v]} + δ_{N_2[v]}`.
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub dim: CubeDim,
    pub vertices_checked: usize,
    pub parity_violations: Vec<ParityViolation>,
    pub mod3_violations: Vec<Mod3Violation>,
}

impl CongruenceReport {
    pub fn is_clean(&self) -> bool {
        self.parity_violations.is_empty() && self.mod3_violations.is_empty()
    }
}

pub(crate) fn require_multiple_of_six(check: &'static str, dim: CubeDim) -> Result<()> {
    if dim.get().is_multiple_of(6) {
        Ok(())
    } else {
        Err(Error::Precondition {
            check,
            n: dim.get() as u8,
            requirement: "n divisible by 6",
        })
    }
}

pub(crate) fn same_dim(d: &DominatingSet, profile: &ExcessProfile) -> Result<()> {
    if d.dim() == profile.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: d.dim().get() as u8,
            right: profile.dim().get() as u8,
        })
    }
}

/// `δ_{N_i[v]}`, summing the profile over the sphere of radius `i`.
pub fn sphere_excess(profile: &ExcessProfile, v: Vertex, i: u32) -> Result<u64> {
    Ok(profile
        .dim()
        .sphere_iter(v, i)?
        .map(|u| profile.excess(u) as u64)
        .sum())
}

/// `δ_{N[v]} = δ_v + δ_{N_1[v]}`.
pub fn neighborhood_excess(profile: &ExcessProfile, v: Vertex) -> u64 {
    v.closed_neighbors(profile.dim())
        .map(|u| profile.excess(u) as u64)
        .sum()
}

/// Vertices whose `δ_{N[v]}` has the wrong parity, in increasing mask order.
pub fn check_parity(d: &DominatingSet, profile: &ExcessProfile) -> Result<Vec<ParityViolation>> {
    require_multiple_of_six("parity congruence", d.dim())?;
    same_dim(d, profile)?;
    Ok(d.dim()
        .vertices()
        .filter_map(|v| {
            let in_d = d.contains(v);
            let s = neighborhood_excess(profile, v);
            let expected = if in_d { 0 } else { 1 };
            (s % 2 != expected).then_some(ParityViolation {
                vertex: v,
                in_d,
                neighborhood_excess: s,
            })
        })
        .collect())
}

/// Vertices with `δ_{N_1[v]} + δ_{N_2[v]} ≢ 0 (mod 3)`, in increasing mask order.
pub fn check_mod3(d: &DominatingSet, profile: &ExcessProfile) -> Result<Vec<Mod3Violation>> {
    require_multiple_of_six("mod-3 congruence", d.dim())?;
    same_dim(d, profile)?;
    let mut out = Vec::new();
    for v in d.dim().vertices() {
        let value = sphere_excess(profile, v, 1)? + sphere_excess(profile, v, 2)?;
        if value % 3 != 0 {
            out.push(Mod3Violation { vertex: v, value });
        }
    }
    Ok(out)
}

pub fn check_with_profile(d: &DominatingSet, profile: &ExcessProfile) -> Result<CongruenceReport> {
    Ok(CongruenceReport {
        dim: d.dim(),
        vertices_checked: d.dim().order(),
        parity_violations: check_parity(d, profile)?,
        mod3_violations: check_mod3(d, profile)?,
    })
}

/// Computes the excess profile and runs both congruence checks.
pub fn check(d: &DominatingSet) -> Result<CongruenceReport> {
    require_multiple_of_six("congruence", d.dim())?;
    check_with_profile(d, &d.excess_profile())
}
