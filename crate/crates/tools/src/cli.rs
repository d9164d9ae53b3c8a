//! Argument definitions and command dispatch for the `qn` binary.
//!
//! Every command produces an [`Output`] (exit code plus the document to print)
//! so the commands can be driven from tests without a subprocess.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use qn_core::bounds::bound_table;
use qn_core::constructions::{double, greedy_dominating_set, hamming_perfect_code, GREEDY_MAX_DIM};
use qn_core::solver::SearchConfig;
use qn_core::surfeit::Analysis;
use qn_core::{congruence, CandidateSet, CubeDim, DominatingSet};

use crate::report::{
    bound_table_text, BoundRow, Check, CongruenceSection, ExcessSection, LemmaResult, LemmaSection,
    ReportDocument, SolverSection, SurfeitSection,
};
use crate::solve::{solve, SolveConfig};
use crate::witness::{self, vertex_to_bits, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qn",
    version,
    about = "Dominating sets of hypercubes: verification, analysis, bounds and search"
)]
pub struct Cli {
    /// Write the command's document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest dimension for which full per-vertex profiles are built
    /// (2^n bytes of excess data and 2^n/8 bytes per vertex set).
    #[arg(long, global = true, default_value_t = 24)]
    pub max_dim: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a witness file dominates and report its excess profile.
    Verify { file: PathBuf },
    /// Run a selection of checks on a witness file.
    Analyze {
        file: PathBuf,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "congruence,lemmas,surfeit"
        )]
        checks: Vec<CheckKind>,
    },
    /// Parity and mod-3 congruence checks (n a multiple of 6).
    Congruence { file: PathBuf },
    /// Structural lemma checkers.
    Lemmas {
        file: PathBuf,
        /// Run only these lemmas (1 to 5).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=5))]
        only: Vec<u8>,
    },
    /// Table of lower bounds for a range of dimensions.
    Bounds {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a dominating set and write it as a witness file.
    #[command(subcommand)]
    Construct(Construct),
    /// Exact minimum dominating set search.
    Solve(SolveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Congruence,
    Lemmas,
    Surfeit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Hamming perfect code of length 2^r - 1.
    Hamming {
        #[arg(long)]
        r: u32,
    },
    /// Double a witness into the next dimension.
    Double {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Greedy dominating set.
    Greedy {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub n: u32,
    /// Only look for sets of at most this size.
    #[arg(long)]
    pub ub: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub node_limit: Option<u64>,
    #[arg(long)]
    pub no_symmetry: bool,
    /// Write the best set found as a witness file.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] qn_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub text: String,
}

fn json(doc: &ReportDocument, code: i32) -> Output {
    let mut text = serde_json::to_string_pretty(doc).expect("report serializes");
    text.push('\n');
    Output { code, text }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Runs the command, writes its document to `--out` or stdout, reports
/// errors on stderr and returns the process exit code.
pub fn execute(cli: &Cli) -> i32 {
    match run(cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = write_file(path, &out.text) {
                    eprintln!("qn: {e}");
                    return EXIT_USAGE;
                }
            } else {
                print!("{}", out.text);
            }
            out.code
        }
        Err(e) => {
            eprintln!("qn: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cap = cli.max_dim;
    match &cli.command {
        Command::Verify { file } => cmd_verify(&witness::read(file)?, cap),
        Command::Analyze { file, checks } => cmd_analyze(&witness::read(file)?, checks, &[], cap),
        Command::Congruence { file } => {
            cmd_analyze(&witness::read(file)?, &[CheckKind::Congruence], &[], cap)
        }
        Command::Lemmas { file, only } => {
            cmd_analyze(&witness::read(file)?, &[CheckKind::Lemmas], only, cap)
        }
        Command::Bounds { from, to, format } => cmd_bounds(*from, *to, *format),
        Command::Construct(c) => cmd_construct(c, cap),
        Command::Solve(args) => cmd_solve(args),
    }
}

fn check_cap(dim: CubeDim, cap: u32) -> Result<(), CliError> {
    if dim.get() > cap {
        return Err(CliError::Usage(format!(
            "n={} exceeds --max-dim {cap}; a full profile needs about {} MiB",
            dim.get(),
            (dim.order() as u64 * 2) >> 20
        )));
    }
    Ok(())
}

/// Fills in the header fields and converts to a dominating set. `None` means
/// the set does not dominate and the report already says so.
fn load(
    set: &CandidateSet,
    doc: &mut ReportDocument,
    cap: u32,
) -> Result<Option<DominatingSet>, CliError> {
    check_cap(set.dim(), cap)?;
    doc.dim = Some(set.dim().get());
    doc.set_size = Some(set.members().len());
    let dominating = set.is_dominating();
    doc.dominating = Some(dominating);
    if !dominating {
        doc.first_undominated = set
            .first_undominated()
            .map(|v| vertex_to_bits(v, set.dim()));
        return Ok(None);
    }
    Ok(Some(DominatingSet::new(set.members().clone())?))
}

pub fn cmd_verify(set: &CandidateSet, cap: u32) -> Result<Output, CliError> {
    let mut doc = ReportDocument {
        command: "verify".into(),
        ..Default::default()
    };
    let Some(d) = load(set, &mut doc, cap)? else {
        return Ok(json(&doc, EXIT_DOMAIN));
    };
    let excess = ExcessSection::from(&d.excess_profile());
    let code = if excess.identity_holds {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    };
    doc.excess = Some(excess);
    Ok(json(&doc, code))
}

fn gated<T>(
    r: qn_core::Result<T>,
    f: impl FnOnce(T) -> LemmaResult,
) -> Result<Check<LemmaResult>, CliError> {
    match r {
        Ok(t) => Ok(Check::Ran(f(t))),
        Err(e @ qn_core::Error::Precondition { .. }) => Ok(Check::skipped(e)),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_analyze(
    set: &CandidateSet,
    checks: &[CheckKind],
    only: &[u8],
    cap: u32,
) -> Result<Output, CliError> {
    let command = match checks {
        [CheckKind::Congruence] => "congruence",
        [CheckKind::Lemmas] => "lemmas",
        _ => "analyze",
    };
    let mut doc = ReportDocument {
        command: command.into(),
        ..Default::default()
    };
    let Some(d) = load(set, &mut doc, cap)? else {
        return Ok(json(&doc, EXIT_DOMAIN));
    };
    let dim = d.dim();
    let analysis = Analysis::new(&d);
    let profile = analysis.excess();
    let excess = ExcessSection::from(profile);
    let mut violations = !excess.identity_holds as usize;
    doc.excess = Some(excess);

    if checks.contains(&CheckKind::Surfeit) {
        let section = SurfeitSection::new(analysis.surfeit(), &analysis.report()?);
        violations += section.violations();
        doc.surfeit = Some(Check::Ran(section));
    }
    if checks.contains(&CheckKind::Congruence) {
        doc.congruence = Some(match congruence::check_with_profile(&d, profile) {
            Ok(r) => {
                let section = CongruenceSection::new(&r);
                violations += section.violations();
                Check::Ran(section)
            }
            Err(e @ qn_core::Error::Precondition { .. }) => Check::skipped(e),
            Err(e) => return Err(e.into()),
        });
    }
    if checks.contains(&CheckKind::Lemmas) {
        let want = |k: u8| only.is_empty() || only.contains(&k);
        let mut lemmas = LemmaSection::default();
        if want(1) {
            lemmas.lemma1 = Some(gated(analysis.lemma1(), |r| {
                LemmaResult::from_lemma1(&r, dim)
            })?);
        }
        if want(2) {
            lemmas.lemma2 = Some(gated(analysis.lemma2(), |r| {
                LemmaResult::from_lemma2(&r, dim)
            })?);
        }
        if want(3) {
            lemmas.lemma3 = Some(gated(analysis.lemma3(), |r| {
                LemmaResult::from_lemma3(&r, dim)
            })?);
        }
        if want(4) {
            lemmas.lemma4 = Some(gated(analysis.lemma4(), |r| LemmaResult::from_lemma4(&r))?);
        }
        if want(5) {
            lemmas.lemma5 = Some(gated(analysis.lemma5(), |r| LemmaResult::from_lemma5(&r))?);
        }
        violations += lemmas.violations();
        doc.lemmas = Some(lemmas);
    }
    doc.violations_total = Some(violations);
    Ok(json(
        &doc,
        if violations == 0 {
            EXIT_OK
        } else {
            EXIT_DOMAIN
        },
    ))
}

pub fn cmd_bounds(from: u32, to: u32, format: Format) -> Result<Output, CliError> {
    let rows: Vec<BoundRow> = bound_table(from, to)?.iter().map(BoundRow::from).collect();
    Ok(match format {
        Format::Text => Output {
            code: EXIT_OK,
            text: bound_table_text(&rows),
        },
        Format::Json => json(
            &ReportDocument {
                command: "bounds".into(),
                bounds: Some(rows),
                ..Default::default()
            },
            EXIT_OK,
        ),
    })
}

pub fn cmd_construct(c: &Construct, cap: u32) -> Result<Output, CliError> {
    let (d, note) = match c {
        Construct::Hamming { r } => (hamming_perfect_code(*r)?, format!("hamming r={r}")),
        Construct::Double { input, times } => {
            let set = witness::read(input)?;
            let dim = set.dim();
            if dim.get() + times > cap {
                check_cap(CubeDim::new(dim.get() + times)?, cap)?;
            }
            let mut d = DominatingSet::try_from(set)?;
            for _ in 0..*times {
                d = double(&d)?;
            }
            (d, format!("doubled {times}x from n={}", dim.get()))
        }
        Construct::Greedy { n } => {
            let dim = CubeDim::new(*n)?;
            if *n > GREEDY_MAX_DIM {
                return Err(CliError::Usage(format!(
                    "greedy supports n <= {GREEDY_MAX_DIM}"
                )));
            }
            (greedy_dominating_set(dim)?, format!("greedy n={n}"))
        }
    };
    Ok(Output {
        code: EXIT_OK,
        text: witness::render(d.members(), &[note, format!("size={}", d.len())]),
    })
}

pub fn cmd_solve(args: &SolveArgs) -> Result<Output, CliError> {
    let dim = CubeDim::new(args.n)?;
    let time_limit = match args.time_limit {
        None => None,
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => {
            return Err(CliError::Usage(format!(
                "--time-limit must be positive, got {s}"
            )))
        }
    };
    let cfg = SolveConfig {
        search: SearchConfig {
            upper_bound_seed: args.ub,
            node_limit: args.node_limit,
            symmetry: !args.no_symmetry,
        },
        time_limit,
        threads: args.threads,
    };
    let start = Instant::now();
    let result = match solve(dim, &cfg) {
        Ok(r) => r,
        Err(qn_core::Error::NoSolutionWithinBound { bound }) => {
            let doc = ReportDocument {
                command: "solve".into(),
                dim: Some(dim.get()),
                no_solution_within: Some(bound),
                ..Default::default()
            };
            return Ok(json(&doc, EXIT_DOMAIN));
        }
        Err(e) => return Err(e.into()),
    };
    let elapsed = start.elapsed().as_millis();
    if let Some(path) = &args.witness_out {
        let note = format!(
            "solve n={} size={} proven_optimal={}",
            dim.get(),
            result.optimum,
            result.proven_optimal
        );
        witness::write(path, result.witness.members(), &[note])?;
    }
    let doc = ReportDocument {
        command: "solve".into(),
        dim: Some(dim.get()),
        set_size: Some(result.witness.len()),
        solver: Some(SolverSection::new(
            &result,
            elapsed,
            cfg.threads,
            cfg.search.symmetry,
        )),
        ..Default::default()
    };
    Ok(json(&doc, EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn candidate(text: &str) -> CandidateSet {
        witness::parse(text).unwrap()
    }

    #[test]
    fn verify_perfect_code() {
        let out = cmd_verify(&candidate("# qn-domset v1 n=3\n000\n111\n"), 24).unwrap();
        assert_eq!(out.code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["excess"]["histogram"]["0"], 8);
        assert_eq!(v["excess"]["total"], 0);
        assert!(v.get("surfeit").is_none());
    }

    #[test]
    fn verify_non_dominating() {
        let out = cmd_verify(&candidate("# qn-domset v1 n=2\n00\n"), 24).unwrap();
        assert_eq!(out.code, EXIT_DOMAIN);
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["dominating"], false);
        assert_eq!(v["first_undominated"], "11");
    }

    #[test]
    fn lemmas_skip_below_twelve() {
        let set = CandidateSet::new(hamming_perfect_code(2).unwrap().into_members());
        let out = cmd_analyze(&set, &[CheckKind::Lemmas], &[], 24).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["lemmas"]["lemma4"]["status"], "skipped");
        assert_eq!(v["lemmas"]["lemma1"]["status"], "skipped");
        assert_eq!(out.code, EXIT_OK);
    }

    #[test]
    fn dimension_cap() {
        let set = candidate("# qn-domset v1 n=3\n000\n111\n");
        assert!(matches!(cmd_verify(&set, 2), Err(CliError::Usage(_))));
    }

    #[test]
    fn bounds_text_has_one_row_per_dim() {
        let out = cmd_bounds(10, 13, Format::Text).unwrap();
        assert_eq!(out.text.lines().count(), 5);
        assert!(out.text.contains("348"));
        assert!(cmd_bounds(5, 4, Format::Text).is_err());
    }
}
