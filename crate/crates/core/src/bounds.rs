//! Lower bounds on `γ(Q_n)` in exact rational arithmetic.
//!
//! All three bounds fit in `u64` for `n <= 30`: the largest numerator is
//! `28 · 2^30 < 2^35`.

use alloc::vec::Vec;
use core::fmt;

use crate::cube::CubeDim;
use crate::error::{Error, Result};

/// A nonnegative rational in lowest terms together with its ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bound {
    pub numerator: u64,
    pub denominator: u64,
    pub ceiling: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Bound {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0);
        let g = gcd(numerator, denominator).max(1);
        let (p, q) = (numerator / g, denominator / g);
        Bound {
            numerator: p,
            denominator: q,
            ceiling: p.div_ceil(q),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.denominator == 1
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} (ceil {})",
            self.numerator, self.denominator, self.ceiling
        )
    }
}

fn require_multiple_of_six(dim: CubeDim, check: &'static str) -> Result<()> {
    crate::congruence::require_multiple_of_six(check, dim)
}

/// `2^n / (n+1)`, from nonnegativity of the total excess.
pub fn sphere_covering_bound(dim: CubeDim) -> Bound {
    Bound::new(dim.order() as u64, dim.get() as u64 + 1)
}

/// `2^n / n`, valid when `6 | n`.
pub fn vanwee_bound(dim: CubeDim) -> Result<Bound> {
    require_multiple_of_six(dim, "van Wee bound")?;
    Ok(Bound::new(dim.order() as u64, dim.get() as u64))
}

/// `(n-2) 2^n / (n^2 - 2n - 2)`, valid when `6 | n`.
pub fn theorem2_bound(dim: CubeDim) -> Result<Bound> {
    require_multiple_of_six(dim, "improved bound")?;
    let n = dim.get() as u64;
    Ok(Bound::new((n - 2) * dim.order() as u64, n * n - 2 * n - 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub dim: CubeDim,
    pub sphere: Bound,
    pub vanwee: Option<Bound>,
    pub theorem2: Option<Bound>,
    /// Largest applicable ceiling.
    pub best_lower: u64,
}

impl BoundReport {
    pub fn for_dim(dim: CubeDim) -> Self {
        let sphere = sphere_covering_bound(dim);
        let vanwee = vanwee_bound(dim).ok();
        let theorem2 = theorem2_bound(dim).ok();
        let best_lower = [Some(sphere), vanwee, theorem2]
            .into_iter()
            .flatten()
            .map(|b| b.ceiling)
            .max()
            .unwrap_or(0);
        BoundReport {
            dim,
            sphere,
            vanwee,
            theorem2,
            best_lower,
        }
    }
}

/// One report per dimension in `from..=to`.
pub fn bound_table(from: u32, to: u32) -> Result<Vec<BoundReport>> {
    if from > to || from < 1 || to > CubeDim::MAX {
        return Err(Error::InvalidRange { from, to });
    }
    (from..=to)
        .map(|n| CubeDim::new(n).map(BoundReport::for_dim))
        .collect()
}
