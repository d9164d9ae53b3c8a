//! Surfeit and the lemma checkers built on it.
//!
//! For a dominating set `D`, the surfeit of `v ∉ D` is `s(v) = δ_{N[v]} - 1`
//! and `Vζ^x` collects the vertices with `s(v) = x`. The total surfeit
//! `ζ_{V(Q_n)}` can be computed three ways: directly, from the excess class
//! sizes (`ζ_m1`), and from the surfeit class sizes (`ζ_m2`). All three agree on
//! every dominating set.
//!
//! The `check_lemma*` functions evaluate the statements of the supporting
//! lemmas on a concrete dominating set and list counterexamples. They apply
//! only when `6 | n` (and `n >= 12` for the last two). Each report also says how
//! many hypotheses were actually instantiated, so a vacuous pass is visible.

use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::{neighborhood_excess, require_multiple_of_six, same_dim};
use crate::cube::{CubeDim, Vertex, VertexSet};
use crate::domination::{cover_count, DominatingSet, ExcessProfile};
use crate::error::{Error, Result};

const IN_D: i32 = i32::MIN;

/// `s(v) = δ_{N[v]} - 1` for every `v ∉ D`, with the class sizes `|Vζ^s|`.
///
/// `s(v) = -1` is possible when `n` is not a multiple of 6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfeitProfile {
    dim: CubeDim,
    set_size: usize,
    values: Vec<i32>,
    /// `histogram[s + 1] = |Vζ^s|`.
    histogram: Vec<u64>,
}

impl SurfeitProfile {
    pub fn new(d: &DominatingSet, profile: &ExcessProfile) -> Result<Self> {
        same_dim(d, profile)?;
        let dim = d.dim();
        let n = dim.get() as usize;
        let mut histogram = vec![0u64; n * (n + 1) + 1];
        let values = dim
            .vertices()
            .map(|v| {
                if d.contains(v) {
                    IN_D
                } else {
                    let s = neighborhood_excess(profile, v) as i32 - 1;
                    histogram[(s + 1) as usize] += 1;
                    s
                }
            })
            .collect();
        Ok(SurfeitProfile {
            dim,
            set_size: d.len(),
            values,
            histogram,
        })
    }

    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    /// `s(v)`, or `None` for `v ∈ D`.
    #[inline]
    pub fn get(&self, v: Vertex) -> Option<i32> {
        let s = self.values[v.index()];
        (s != IN_D).then_some(s)
    }

    /// `v ∈ Vζ`, i.e. `v ∉ D` and `s(v) >= 1`.
    #[inline]
    pub fn in_vzeta(&self, v: Vertex) -> bool {
        self.values[v.index()] >= 1
    }

    /// `|Vζ^s|`.
    pub fn count(&self, s: i32) -> u64 {
        usize::try_from(s + 1)
            .ok()
            .and_then(|k| self.histogram.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Nonempty classes as `(s, |Vζ^s|)`, increasing in `s`.
    pub fn histogram(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.histogram
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k as i32 - 1, c))
    }

    /// `Σ_s |Vζ^s| = 2^n - |D|`.
    pub fn outside_count(&self) -> u64 {
        self.histogram.iter().sum()
    }

    /// `Σ_s s |Vζ^s|`.
    pub fn weighted_sum(&self) -> i64 {
        self.histogram().map(|(s, c)| s as i64 * c as i64).sum()
    }

    /// Whether some `Vζ^s` with odd `s` is nonempty.
    pub fn has_odd_class(&self) -> bool {
        self.histogram().any(|(s, _)| s.rem_euclid(2) == 1)
    }

    pub fn vzeta(&self) -> VertexSet {
        let mut out = VertexSet::new(self.dim);
        for v in self.dim.vertices().filter(|&v| self.in_vzeta(v)) {
            out.insert_unchecked(v);
        }
        out
    }

    /// `|N[u] ∩ Vζ|`.
    pub fn vzeta_neighbors(&self, u: Vertex) -> u32 {
        u.closed_neighbors(self.dim)
            .filter(|&w| self.in_vzeta(w))
            .count() as u32
    }
}

/// `ζ_S = Σ_{v ∈ S \ D} (δ_{N[v]} - 1)`, computed straight from `D`.
pub fn surfeit_of_set(set: &VertexSet, d: &DominatingSet) -> Result<i64> {
    if set.dim() != d.dim() {
        return Err(Error::DimensionMismatch {
            left: set.dim().get() as u8,
            right: d.dim().get() as u8,
        });
    }
    let dim = d.dim();
    Ok(set
        .iter()
        .filter(|&v| !d.contains(v))
        .map(|v| {
            let nbhd: i64 = v
                .closed_neighbors(dim)
                .map(|u| cover_count(d.members(), u) as i64 - 1)
                .sum();
            nbhd - 1
        })
        .sum())
}

/// `(n-1) δ_V - 2^n + |D| - Σ_x x(x-1) |Vδ^x|`.
pub fn zeta_m1(profile: &ExcessProfile) -> i64 {
    let correction: i64 = profile
        .histogram()
        .iter()
        .enumerate()
        .map(|(x, &c)| (x as i64) * (x as i64 - 1) * c as i64)
        .sum();
    zeta_max(profile) - correction
}

/// `(n-1) δ_V - 2^n + |D|`, the value of `ζ_m1` when `C(D)` is empty.
pub fn zeta_max(profile: &ExcessProfile) -> i64 {
    let n = profile.dim().get() as i64;
    (n - 1) * profile.total() as i64 - profile.dim().order() as i64 + profile.set_size() as i64
}

/// `Σ_{i>=1} 2i |Vζ^{2i}|` when `6 | n` (odd classes are empty there), and the
/// general `Σ_s s |Vζ^s|` otherwise.
pub fn zeta_m2(sprofile: &SurfeitProfile) -> i64 {
    if sprofile.dim().get().is_multiple_of(6) {
        sprofile
            .histogram()
            .filter(|&(s, _)| s >= 2 && s % 2 == 0)
            .map(|(s, c)| s as i64 * c as i64)
            .sum()
    } else {
        sprofile.weighted_sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfeitReport {
    /// `ζ_{V(Q_n)}` summed directly.
    pub zeta_total: i64,
    pub zeta_m1: i64,
    pub zeta_m2: i64,
    pub zeta_max: i64,
    /// `δ_{V(Q_n)}`.
    pub delta_total: u64,
}

impl SurfeitReport {
    pub fn methods_agree(&self) -> bool {
        self.zeta_m1 == self.zeta_total && self.zeta_m2 == self.zeta_total
    }
}

/// Index into [`TPartition`]'s arrays: `T_1 .. T_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TClass {
    T1,
    T2,
    T3,
    T4,
    T5,
}

/// Split of `(N_1[v] ∪ N_2[v]) ∩ Vδ^1` around a centre `v ∈ C(D)`:
///
/// * `T_1`, `T_5`: distance one, outside / inside `D`;
/// * `T_2`, `T_3`, `T_4`: distance two, with 0 / 2 / 1 of the two common
///   neighbors of `u` and `v` in `D`.
///
/// `S_i ⊆ T_i` keeps the `u` with `|N[u] ∩ Vζ| = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPartition {
    pub centre: Vertex,
    pub t: [VertexSet; 5],
    pub s: [VertexSet; 5],
}

impl TPartition {
    pub fn t(&self, class: TClass) -> &VertexSet {
        &self.t[class as usize]
    }

    pub fn s(&self, class: TClass) -> &VertexSet {
        &self.s[class as usize]
    }
}

/// Distance-two `u` from `v`: the number of the two common neighbors in `D`.
#[inline]
fn common_in_d(d: &DominatingSet, u: Vertex, v: Vertex) -> u32 {
    let diff = u.mask() ^ v.mask();
    let low = diff & diff.wrapping_neg();
    let high = diff ^ low;
    d.contains(Vertex::from_mask(v.mask() ^ low)) as u32
        + d.contains(Vertex::from_mask(v.mask() ^ high)) as u32
}

/// Which `T_i(v)` contains `u`, if any.
fn classify(d: &DominatingSet, profile: &ExcessProfile, v: Vertex, u: Vertex) -> Option<TClass> {
    if profile.excess(u) != 1 {
        return None;
    }
    match u.distance(v) {
        1 if d.contains(u) => Some(TClass::T5),
        1 => Some(TClass::T1),
        2 => Some(match common_in_d(d, u, v) {
            0 => TClass::T2,
            2 => TClass::T3,
            _ => TClass::T4,
        }),
        _ => None,
    }
}

pub fn t_partition(
    v: Vertex,
    d: &DominatingSet,
    profile: &ExcessProfile,
    sprofile: &SurfeitProfile,
) -> Result<TPartition> {
    same_dim(d, profile)?;
    let dim = d.dim();
    dim.check(v)?;
    if profile.excess(v) < 2 {
        return Err(Error::NotInC { mask: v.mask() });
    }
    let empty = VertexSet::new(dim);
    let mut t: [VertexSet; 5] = core::array::from_fn(|_| empty.clone());
    let mut s: [VertexSet; 5] = core::array::from_fn(|_| empty.clone());
    let ring = dim.sphere_iter(v, 1)?.chain(dim.sphere_iter(v, 2)?);
    for u in ring {
        if let Some(class) = classify(d, profile, v, u) {
            t[class as usize].insert_unchecked(u);
            if sprofile.vzeta_neighbors(u) == 2 {
                s[class as usize].insert_unchecked(u);
            }
        }
    }
    Ok(TPartition { centre: v, t, s })
}

/// Everything the lemma checkers share for one dominating set.
#[derive(Clone, Debug)]
pub struct Analysis<'a> {
    d: &'a DominatingSet,
    profile: ExcessProfile,
    surfeit: SurfeitProfile,
    c: VertexSet,
    /// `|N[u] ∩ Vζ|` per vertex.
    zeta_neighbors: Vec<u8>,
}

impl<'a> Analysis<'a> {
    pub fn new(d: &'a DominatingSet) -> Self {
        let profile = d.excess_profile();
        Self::with_profile(d, profile).expect("profile computed from the same set")
    }

    pub fn with_profile(d: &'a DominatingSet, profile: ExcessProfile) -> Result<Self> {
        let surfeit = SurfeitProfile::new(d, &profile)?;
        let c = profile.c_set();
        let zeta_neighbors = d
            .dim()
            .vertices()
            .map(|u| surfeit.vzeta_neighbors(u) as u8)
            .collect();
        Ok(Analysis {
            d,
            profile,
            surfeit,
            c,
            zeta_neighbors,
        })
    }

    pub fn dominating_set(&self) -> &DominatingSet {
        self.d
    }

    pub fn excess(&self) -> &ExcessProfile {
        &self.profile
    }

    pub fn surfeit(&self) -> &SurfeitProfile {
        &self.surfeit
    }

    /// `C(D)`.
    pub fn c(&self) -> &VertexSet {
        &self.c
    }

    #[inline]
    fn zn(&self, u: Vertex) -> u32 {
        self.zeta_neighbors[u.index()] as u32
    }

    fn n(&self) -> u32 {
        self.d.dim().get()
    }

    pub fn report(&self) -> Result<SurfeitReport> {
        Ok(SurfeitReport {
            zeta_total: surfeit_of_set(&VertexSet::full(self.d.dim()), self.d)?,
            zeta_m1: zeta_m1(&self.profile),
            zeta_m2: zeta_m2(&self.surfeit),
            zeta_max: zeta_max(&self.profile),
            delta_total: self.profile.total(),
        })
    }

    pub fn t_partition(&self, v: Vertex) -> Result<TPartition> {
        t_partition(v, self.d, &self.profile, &self.surfeit)
    }

    fn vdelta1(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.d
            .dim()
            .vertices()
            .filter(|&u| self.profile.excess(u) == 1)
    }

    /// For `u ∈ Vδ^1` with `d(u, C) >= 3`: `|N[u] ∩ Vζ| >= 3`.
    pub fn lemma1(&self) -> Result<Lemma1Report> {
        require_multiple_of_six("lemma 1", self.d.dim())?;
        let mut report = Lemma1Report::default();
        for u in self.vdelta1() {
            if !self.c.distance_to(u, 2).at_least(3) {
                continue;
            }
            report.checked += 1;
            let z = self.zn(u);
            if z < 3 {
                report.violations.push(Lemma1Violation {
                    vertex: u,
                    zeta_neighbors: z,
                });
            }
        }
        Ok(report)
    }

    /// `|(N_2[v] ∩ Vδ)[a]|` with coordinates taken relative to `v`.
    fn far_count(&self, v: Vertex, bit: u32) -> u32 {
        let dim = self.d.dim();
        (0..dim.get())
            .filter(|&b| b != bit)
            .map(|b| Vertex::from_mask(v.mask() ^ (1 << bit) ^ (1 << b)))
            .filter(|&w| self.profile.excess(w) >= 1)
            .count() as u32
    }

    /// For `u ∈ Vδ^1` with `|N[u] ∩ Vζ| <= 2`: the count is exactly 2 and the
    /// four claims about nearby centres in `C` hold.
    pub fn lemma2(&self) -> Result<Lemma2Report> {
        require_multiple_of_six("lemma 2", self.d.dim())?;
        let dim = self.d.dim();
        let mut report = Lemma2Report::default();
        for u in self.vdelta1() {
            let z = self.zn(u);
            if z > 2 {
                continue;
            }
            report.hypothesis_count += 1;
            let fail = |claim, centre, value| Lemma2Violation {
                vertex: u,
                claim,
                centre,
                value,
            };
            if z != 2 {
                report
                    .violations
                    .push(fail(Lemma2Claim::ExactlyTwo, None, z));
            }
            let u_in_d = self.d.contains(u);
            let mut claim1 = false;
            let centres = dim.sphere_iter(u, 1)?.chain(dim.sphere_iter(u, 2)?);
            for v in centres.filter(|&v| self.c.contains(v)) {
                let v_in_d = self.d.contains(v);
                let class = classify(self.d, &self.profile, v, u);
                let in_t1 = class == Some(TClass::T1);
                let in_t2 = class == Some(TClass::T2);
                if (!v_in_d && (in_t1 || in_t2)) || (v_in_d && in_t2) {
                    claim1 = true;
                }
                if in_t1 && !v_in_d {
                    report.claim2_instances += 1;
                    let busy = v
                        .neighbors(dim)
                        .filter(|&w| self.profile.excess(w) >= 1)
                        .count() as u32;
                    if busy > 3 {
                        report
                            .violations
                            .push(fail(Lemma2Claim::Claim2, Some(v), busy));
                    }
                }
                if in_t2 {
                    // translate so that v = (0) and u = (a,b)
                    let diff = u.mask() ^ v.mask();
                    let (a, b) = (diff.trailing_zeros(), 31 - diff.leading_zeros());
                    let (claim, cap) = if u_in_d {
                        report.claim4_instances += 1;
                        (Lemma2Claim::Claim4, 2)
                    } else {
                        report.claim3_instances += 1;
                        for bit in [a, b] {
                            let single = Vertex::from_mask(v.mask() ^ (1 << bit));
                            if self.profile.excess(single) >= 1 {
                                report.violations.push(fail(
                                    Lemma2Claim::Claim3Singleton,
                                    Some(v),
                                    bit + 1,
                                ));
                            }
                        }
                        (Lemma2Claim::Claim3, 3)
                    };
                    for bit in [a, b] {
                        let k = self.far_count(v, bit);
                        if k > cap {
                            report.violations.push(fail(claim, Some(v), k));
                        }
                    }
                }
            }
            if !claim1 {
                report.violations.push(fail(Lemma2Claim::Claim1, None, 0));
            }
        }
        Ok(report)
    }

    /// For `v ∈ C`: `2|S_1(v) ∪ S_2(v)| <= 3(n - δ_v)` when `v ∉ D`, and
    /// `2|S_2(v)| <= 3(n - δ_v)` when `v ∈ D`.
    pub fn lemma3(&self) -> Result<Lemma3Report> {
        require_multiple_of_six("lemma 3", self.d.dim())?;
        let n = self.n();
        let mut report = Lemma3Report::default();
        for v in self.c.iter() {
            let part = self.t_partition(v)?;
            let in_d = self.d.contains(v);
            let s2 = part.s(TClass::T2).len();
            let size = if in_d {
                s2
            } else {
                s2 + part.s(TClass::T1).len()
            };
            let bound_x2 = 3 * (n - self.profile.excess(v)) as i64;
            report.centres_checked += 1;
            if size > 0 {
                report.nonempty_centres += 1;
            }
            let slack = bound_x2 - 2 * size as i64;
            report.min_slack_x2 = Some(report.min_slack_x2.map_or(slack, |m: i64| m.min(slack)));
            if slack < 0 {
                report.violations.push(Lemma3Violation {
                    centre: v,
                    in_d,
                    size: size as u32,
                    bound_x2,
                });
            }
        }
        Ok(report)
    }

    fn require_lemma45(&self, check: &'static str) -> Result<()> {
        require_multiple_of_six(check, self.d.dim())?;
        if self.n() < 12 {
            return Err(Error::Precondition {
                check,
                n: self.n() as u8,
                requirement: "n >= 12",
            });
        }
        Ok(())
    }

    /// `Σ_{i>=1} (2i+1)|Vζ^{2i}| >= 3δ_V - |Vδ^2| - 4.5|Vδ^{n-3}|
    /// - (n+1)|Vδ^{n-2}| - (2n-0.5)|Vδ^{n-1}| - 3n|Vδ^n|`, doubled.
    pub fn lemma4(&self) -> Result<Lemma4Report> {
        self.require_lemma45("lemma 4")?;
        let n = self.n() as i64;
        let cls = |x: i64| self.profile.class_size(x as u32) as i64;
        let lhs: i64 = self
            .surfeit
            .histogram()
            .filter(|&(s, _)| s >= 2 && s % 2 == 0)
            .map(|(s, c)| (s as i64 + 1) * c as i64)
            .sum();
        let rhs_x2 = 6 * self.profile.total() as i64
            - 2 * cls(2)
            - 9 * cls(n - 3)
            - (2 * n + 2) * cls(n - 2)
            - (4 * n - 1) * cls(n - 1)
            - 6 * n * cls(n);
        let identity_rhs: i64 = self
            .d
            .dim()
            .vertices()
            .map(|u| self.profile.excess(u) as i64 * self.zn(u) as i64)
            .sum();
        let lhs_x2 = 2 * lhs;
        Ok(Lemma4Report {
            lhs_x2,
            rhs_x2,
            slack_x2: lhs_x2 - rhs_x2,
            identity_lhs: lhs,
            identity_rhs,
            vzeta_size: self.surfeit.vzeta().len() as u64,
            violated: lhs_x2 < rhs_x2,
        })
    }

    /// `ζ_m2 - ζ_m1 >= 2δ_V - ζ_max`, doubled.
    pub fn lemma5(&self) -> Result<Lemma5Report> {
        self.require_lemma45("lemma 5")?;
        let m1 = zeta_m1(&self.profile);
        let m2 = zeta_m2(&self.surfeit);
        let zmax = zeta_max(&self.profile);
        let delta = self.profile.total() as i64;
        let lhs = m2 - m1;
        let rhs = 2 * delta - zmax;
        Ok(Lemma5Report {
            lhs_x2: 2 * lhs,
            rhs_x2: 2 * rhs,
            slack_x2: 2 * (lhs - rhs),
            methods_agree: m1 == m2,
            zeta_max_ge_twice_delta: zmax >= 2 * delta,
            violated: lhs < rhs,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma1Violation {
    pub vertex: Vertex,
    pub zeta_neighbors: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lemma1Report {
    /// Number of `u ∈ Vδ^1` with `d(u, C) >= 3`.
    pub checked: usize,
    pub violations: Vec<Lemma1Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Lemma2Claim {
    /// `|N[u] ∩ Vζ|` is below 2.
    ExactlyTwo,
    /// No centre puts `u` in the required `T_1` / `T_2`.
    Claim1,
    /// `|N_1[v] ∩ Vδ| > 3`.
    Claim2,
    /// `(a)` or `(b)` lies in `Vδ`; `value` is the coordinate.
    Claim3Singleton,
    /// `|(N_2[v] ∩ Vδ)[a]| > 3`.
    Claim3,
    /// `|(N_2[v] ∩ Vδ)[a]| > 2`.
    Claim4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma2Violation {
    pub vertex: Vertex,
    pub claim: Lemma2Claim,
    pub centre: Option<Vertex>,
    pub value: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lemma2Report {
    /// Number of `u ∈ Vδ^1` with `|N[u] ∩ Vζ| <= 2`.
    pub hypothesis_count: usize,
    pub claim2_instances: usize,
    pub claim3_instances: usize,
    pub claim4_instances: usize,
    pub violations: Vec<Lemma2Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma3Violation {
    pub centre: Vertex,
    pub in_d: bool,
    pub size: u32,
    pub bound_x2: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lemma3Report {
    /// `|C|`.
    pub centres_checked: usize,
    /// Centres whose relevant `S` sets are nonempty.
    pub nonempty_centres: usize,
    pub min_slack_x2: Option<i64>,
    pub violations: Vec<Lemma3Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma4Report {
    pub lhs_x2: i64,
    pub rhs_x2: i64,
    pub slack_x2: i64,
    /// `Σ_{i>=1} (2i+1)|Vζ^{2i}|`.
    pub identity_lhs: i64,
    /// `Σ_x x Σ_{u ∈ Vδ^x} |N[u] ∩ Vζ|`.
    pub identity_rhs: i64,
    pub vzeta_size: u64,
    pub violated: bool,
}

impl Lemma4Report {
    pub fn identity_holds(&self) -> bool {
        self.identity_lhs == self.identity_rhs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma5Report {
    pub lhs_x2: i64,
    pub rhs_x2: i64,
    pub slack_x2: i64,
    pub methods_agree: bool,
    pub zeta_max_ge_twice_delta: bool,
    pub violated: bool,
}

pub fn check_lemma1(d: &DominatingSet) -> Result<Lemma1Report> {
    require_multiple_of_six("lemma 1", d.dim())?;
    Analysis::new(d).lemma1()
}

pub fn check_lemma2(d: &DominatingSet) -> Result<Lemma2Report> {
    require_multiple_of_six("lemma 2", d.dim())?;
    Analysis::new(d).lemma2()
}

pub fn check_lemma3(d: &DominatingSet) -> Result<Lemma3Report> {
    require_multiple_of_six("lemma 3", d.dim())?;
    Analysis::new(d).lemma3()
}

pub fn check_lemma4(d: &DominatingSet) -> Result<Lemma4Report> {
    require_multiple_of_six("lemma 4", d.dim())?;
    Analysis::new(d).lemma4()
}

pub fn check_lemma5(d: &DominatingSet) -> Result<Lemma5Report> {
    require_multiple_of_six("lemma 5", d.dim())?;
    Analysis::new(d).lemma5()
}
