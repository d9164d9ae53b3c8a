//! Witness files.
//!
//! ```text
//! # qn-domset v1 n=3
//! # any further '#' line is a comment
//! 000
//! 111
//! ```
//!
//! The header is the first non-blank line. Each vertex is a string of `n`
//! characters over `{0,1}`; the leftmost character is coordinate 1 (bit 0 of
//! the mask). Blank lines are ignored and duplicate vertices are rejected.
//! Writers emit vertices in increasing mask order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use qn_core::{CandidateSet, CubeDim, Vertex, VertexSet};

const MAGIC: &str = "qn-domset v1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("missing header line `# {MAGIC} n=<dim>`")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected {expected} characters, found {found}")]
    BadLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: unexpected character {ch:?}")]
    BadChar { line: usize, ch: char },
    #[error("line {line}: duplicate vertex {vertex}")]
    Duplicate { line: usize, vertex: String },
    #[error(transparent)]
    Dimension(#[from] qn_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// `n` characters, coordinate 1 first.
pub fn vertex_to_bits(v: Vertex, dim: CubeDim) -> String {
    (1..=dim.get())
        .map(|c| if v.has_coord(c) { '1' } else { '0' })
        .collect()
}

pub fn bits_to_vertex(bits: &str, dim: CubeDim) -> Option<Vertex> {
    if bits.len() != dim.get() as usize {
        return None;
    }
    let mut mask = 0u32;
    for (i, ch) in bits.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => mask |= 1 << i,
            _ => return None,
        }
    }
    Some(Vertex::from_mask(mask))
}

fn parse_header(line: usize, text: &str) -> Result<CubeDim, FormatError> {
    let bad = || FormatError::BadHeader {
        line,
        text: text.to_string(),
    };
    let rest = text
        .strip_prefix('#')
        .map(str::trim)
        .and_then(|r| r.strip_prefix(MAGIC))
        .ok_or_else(bad)?;
    let n: u32 = rest
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(bad)?;
    Ok(CubeDim::new(n)?)
}

pub fn parse(text: &str) -> Result<CandidateSet, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, htext) = lines.next().ok_or(FormatError::MissingHeader)?;
    if !htext.starts_with('#') {
        return Err(FormatError::MissingHeader);
    }
    let dim = parse_header(hline, htext)?;
    let n = dim.get() as usize;
    let mut set = VertexSet::new(dim);
    for (line, l) in lines {
        if l.starts_with('#') {
            continue;
        }
        if let Some(ch) = l.chars().find(|c| *c != '0' && *c != '1') {
            return Err(FormatError::BadChar { line, ch });
        }
        if l.len() != n {
            return Err(FormatError::BadLength {
                line,
                expected: n,
                found: l.len(),
            });
        }
        let v = bits_to_vertex(l, dim).expect("validated above");
        if !set.insert(v)? {
            return Err(FormatError::Duplicate {
                line,
                vertex: l.to_string(),
            });
        }
    }
    Ok(CandidateSet::new(set))
}

pub fn read(path: &Path) -> Result<CandidateSet, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn render(set: &VertexSet, comments: &[String]) -> String {
    let dim = set.dim();
    let mut out = format!("# {MAGIC} n={}\n", dim.get());
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for v in set.iter() {
        out.push_str(&vertex_to_bits(v, dim));
        out.push('\n');
    }
    out
}

pub fn write(path: &Path, set: &VertexSet, comments: &[String]) -> Result<(), FormatError> {
    fs::write(path, render(set, comments)).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
