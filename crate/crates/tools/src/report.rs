//! JSON report document shared by all subcommands.
//!
//! Sections that a command does not produce are left out entirely. Vertices
//! are written in the witness-file bitstring form.

use std::collections::BTreeMap;

use serde::Serialize;

use qn_core::bounds::{Bound, BoundReport};
use qn_core::congruence::CongruenceReport;
use qn_core::solver::SearchResult;
use qn_core::surfeit::{
    Lemma1Report, Lemma2Claim, Lemma2Report, Lemma3Report, Lemma4Report, Lemma5Report,
    SurfeitProfile, SurfeitReport,
};
use qn_core::{CubeDim, ExcessProfile, Vertex};

use crate::witness::vertex_to_bits;

#[derive(Debug, Default, Serialize)]
pub struct ReportDocument {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominating: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_undominated: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excess: Option<ExcessSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surfeit: Option<Check<SurfeitSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub congruence: Option<Check<CongruenceSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverSection>,
    /// Set when the search exhausted every set no larger than `--ub`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_solution_within: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violations_total: Option<usize>,
}

/// A check that either ran or was skipped because its preconditions on `n`
/// did not hold.
#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Check<T> {
    Ran(T),
    Skipped { reason: String },
}

impl<T> Check<T> {
    pub fn skipped(err: impl std::fmt::Display) -> Self {
        Check::Skipped {
            reason: format!("precondition: {err}"),
        }
    }

    pub fn ran(&self) -> Option<&T> {
        match self {
            Check::Ran(t) => Some(t),
            Check::Skipped { .. } => None,
        }
    }
}

fn bits(v: Vertex, dim: CubeDim) -> String {
    vertex_to_bits(v, dim)
}

#[derive(Debug, Serialize)]
pub struct ExcessSection {
    /// `x -> |Vδ^x|`, nonempty classes only.
    pub histogram: BTreeMap<u32, u64>,
    pub total: u64,
    /// `(n+1)|D| - 2^n`.
    pub expected_total: i64,
    pub identity_holds: bool,
    pub c_size: u64,
}

impl From<&ExcessProfile> for ExcessSection {
    fn from(p: &ExcessProfile) -> Self {
        ExcessSection {
            histogram: p
                .histogram()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(x, &c)| (x as u32, c))
                .collect(),
            total: p.total(),
            expected_total: p.expected_total(),
            identity_holds: p.identity_holds(),
            c_size: p.c_size(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ZetaSection {
    pub direct: i64,
    pub m1: i64,
    pub m2: i64,
    pub max: i64,
}

#[derive(Debug, Serialize)]
pub struct SurfeitSection {
    /// `s -> |Vζ^s|`, nonempty classes only.
    pub histogram: BTreeMap<i32, u64>,
    pub zeta: ZetaSection,
    pub delta_total: u64,
    pub methods_agree: bool,
}

impl SurfeitSection {
    pub fn new(sp: &SurfeitProfile, r: &SurfeitReport) -> Self {
        SurfeitSection {
            histogram: sp.histogram().collect(),
            zeta: ZetaSection {
                direct: r.zeta_total,
                m1: r.zeta_m1,
                m2: r.zeta_m2,
                max: r.zeta_max,
            },
            delta_total: r.delta_total,
            methods_agree: r.methods_agree(),
        }
    }

    pub fn violations(&self) -> usize {
        !self.methods_agree as usize
    }
}

#[derive(Debug, Serialize)]
pub struct ParityEntry {
    pub vertex: String,
    pub in_d: bool,
    pub neighborhood_excess: u64,
}

#[derive(Debug, Serialize)]
pub struct Mod3Entry {
    pub vertex: String,
    pub value: u64,
}

#[derive(Debug, Serialize)]
pub struct CongruenceSection {
    pub vertices_checked: usize,
    pub parity_violations: Vec<ParityEntry>,
    pub mod3_violations: Vec<Mod3Entry>,
}

impl CongruenceSection {
    pub fn new(r: &CongruenceReport) -> Self {
        let dim = r.dim;
        CongruenceSection {
            vertices_checked: r.vertices_checked,
            parity_violations: r
                .parity_violations
                .iter()
                .map(|p| ParityEntry {
                    vertex: bits(p.vertex, dim),
                    in_d: p.in_d,
                    neighborhood_excess: p.neighborhood_excess,
                })
                .collect(),
            mod3_violations: r
                .mod3_violations
                .iter()
                .map(|m| Mod3Entry {
                    vertex: bits(m.vertex, dim),
                    value: m.value,
                })
                .collect(),
        }
    }

    pub fn violations(&self) -> usize {
        self.parity_violations.len() + self.mod3_violations.len()
    }
}

#[derive(Debug, Serialize)]
pub struct Violation {
    pub vertex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centre: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<String>,
    pub value: i64,
}

#[derive(Debug, Serialize)]
pub struct LemmaResult {
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack_x2: Option<i64>,
    /// Named counts of how many hypotheses were instantiated.
    pub vacuity: BTreeMap<&'static str, i64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<&'static str, i64>,
}

impl LemmaResult {
    fn new(violations: Vec<Violation>) -> Self {
        LemmaResult {
            violations,
            slack_x2: None,
            vacuity: BTreeMap::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn from_lemma1(r: &Lemma1Report, dim: CubeDim) -> Self {
        let mut out = Self::new(
            r.violations
                .iter()
                .map(|v| Violation {
                    vertex: bits(v.vertex, dim),
                    centre: None,
                    claim: None,
                    value: v.zeta_neighbors as i64,
                })
                .collect(),
        );
        out.vacuity.insert("checked", r.checked as i64);
        out
    }

    pub fn from_lemma2(r: &Lemma2Report, dim: CubeDim) -> Self {
        let claim = |c: Lemma2Claim| {
            match c {
                Lemma2Claim::ExactlyTwo => "exactly_two",
                Lemma2Claim::Claim1 => "claim1",
                Lemma2Claim::Claim2 => "claim2",
                Lemma2Claim::Claim3Singleton => "claim3_singleton",
                Lemma2Claim::Claim3 => "claim3",
                Lemma2Claim::Claim4 => "claim4",
            }
            .to_string()
        };
        let mut out = Self::new(
            r.violations
                .iter()
                .map(|v| Violation {
                    vertex: bits(v.vertex, dim),
                    centre: v.centre.map(|c| bits(c, dim)),
                    claim: Some(claim(v.claim)),
                    value: v.value as i64,
                })
                .collect(),
        );
        out.vacuity.insert("hypothesis", r.hypothesis_count as i64);
        out.vacuity.insert("claim2", r.claim2_instances as i64);
        out.vacuity.insert("claim3", r.claim3_instances as i64);
        out.vacuity.insert("claim4", r.claim4_instances as i64);
        out
    }

    pub fn from_lemma3(r: &Lemma3Report, dim: CubeDim) -> Self {
        let mut out = Self::new(
            r.violations
                .iter()
                .map(|v| Violation {
                    vertex: bits(v.centre, dim),
                    centre: None,
                    claim: Some(if v.in_d { "in_d" } else { "outside_d" }.into()),
                    value: v.size as i64,
                })
                .collect(),
        );
        out.slack_x2 = r.min_slack_x2;
        out.vacuity.insert("centres", r.centres_checked as i64);
        out.vacuity
            .insert("nonempty_centres", r.nonempty_centres as i64);
        out
    }

    pub fn from_lemma4(r: &Lemma4Report) -> Self {
        let mut violations = Vec::new();
        if r.violated {
            violations.push(Violation {
                vertex: String::new(),
                centre: None,
                claim: Some("inequality".into()),
                value: r.slack_x2,
            });
        }
        if !r.identity_holds() {
            violations.push(Violation {
                vertex: String::new(),
                centre: None,
                claim: Some("identity".into()),
                value: r.identity_lhs - r.identity_rhs,
            });
        }
        let mut out = Self::new(violations);
        out.slack_x2 = Some(r.slack_x2);
        out.vacuity.insert("vzeta_size", r.vzeta_size as i64);
        out.details.insert("lhs_x2", r.lhs_x2);
        out.details.insert("rhs_x2", r.rhs_x2);
        out.details.insert("identity_lhs", r.identity_lhs);
        out.details.insert("identity_rhs", r.identity_rhs);
        out
    }

    pub fn from_lemma5(r: &Lemma5Report) -> Self {
        let mut violations = Vec::new();
        if r.violated {
            violations.push(Violation {
                vertex: String::new(),
                centre: None,
                claim: Some("inequality".into()),
                value: r.slack_x2,
            });
        }
        if !r.methods_agree {
            violations.push(Violation {
                vertex: String::new(),
                centre: None,
                claim: Some("zeta_m1_ne_zeta_m2".into()),
                value: 0,
            });
        }
        let mut out = Self::new(violations);
        out.slack_x2 = Some(r.slack_x2);
        out.vacuity.insert("instances", 1);
        out.details.insert("lhs_x2", r.lhs_x2);
        out.details.insert("rhs_x2", r.rhs_x2);
        out.details
            .insert("zeta_max_ge_twice_delta", r.zeta_max_ge_twice_delta as i64);
        out
    }
}

#[derive(Debug, Default, Serialize)]
pub struct LemmaSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma1: Option<Check<LemmaResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma2: Option<Check<LemmaResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma3: Option<Check<LemmaResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma4: Option<Check<LemmaResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma5: Option<Check<LemmaResult>>,
}

impl LemmaSection {
    pub fn all(&self) -> [&Option<Check<LemmaResult>>; 5] {
        [
            &self.lemma1,
            &self.lemma2,
            &self.lemma3,
            &self.lemma4,
            &self.lemma5,
        ]
    }

    pub fn violations(&self) -> usize {
        self.all()
            .into_iter()
            .flatten()
            .filter_map(Check::ran)
            .map(|r| r.violations.len())
            .sum()
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundEntry {
    pub numerator: u64,
    pub denominator: u64,
    pub ceiling: u64,
}

impl From<Bound> for BoundEntry {
    fn from(b: Bound) -> Self {
        BoundEntry {
            numerator: b.numerator,
            denominator: b.denominator,
            ceiling: b.ceiling,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundRow {
    pub n: u32,
    pub sphere: BoundEntry,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vanwee: Option<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<BoundEntry>,
    pub best_lower: u64,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        BoundRow {
            n: r.dim.get(),
            sphere: r.sphere.into(),
            vanwee: r.vanwee.map(Into::into),
            theorem2: r.theorem2.map(Into::into),
            best_lower: r.best_lower,
        }
    }
}

/// Plain-text rendering of a bound table.
pub fn bound_table_text(rows: &[BoundRow]) -> String {
    let cell = |b: Option<BoundEntry>| match b {
        Some(b) => format!("{}/{} -> {}", b.numerator, b.denominator, b.ceiling),
        None => "-".to_string(),
    };
    let mut out = format!(
        "{:>3}  {:>24}  {:>24}  {:>26}  {:>10}\n",
        "n", "sphere", "vanwee", "theorem2", "best"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>3}  {:>24}  {:>24}  {:>26}  {:>10}\n",
            r.n,
            cell(Some(r.sphere)),
            cell(r.vanwee),
            cell(r.theorem2),
            r.best_lower
        ));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct SolverSection {
    pub optimum: usize,
    pub proven_optimal: bool,
    pub nodes_explored: u64,
    pub elapsed_ms: u128,
    pub threads: usize,
    pub symmetry: bool,
    pub witness: Vec<String>,
}

impl SolverSection {
    pub fn new(r: &SearchResult, elapsed_ms: u128, threads: usize, symmetry: bool) -> Self {
        let dim = r.witness.dim();
        SolverSection {
            optimum: r.optimum,
            proven_optimal: r.proven_optimal,
            nodes_explored: r.nodes_explored,
            elapsed_ms,
            threads,
            symmetry,
            witness: r.witness.iter().map(|v| bits(v, dim)).collect(),
        }
    }
}
