use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimension outside `1..=30`.
    DimensionOutOfRange {
        n: u32,
    },
    /// A vertex mask with bits at or above `n`.
    VertexOutOfRange {
        mask: u32,
        n: u8,
    },
    /// Two operands built for different dimensions.
    DimensionMismatch {
        left: u8,
        right: u8,
    },
    RadiusOutOfRange {
        radius: u32,
        n: u8,
    },
    CoordinateOutOfRange {
        coord: u32,
        n: u8,
    },
    /// The set leaves at least one vertex undominated; `first` is the lowest.
    NotDominating {
        first: u32,
        n: u8,
    },
    /// A check whose hypotheses on `n` do not hold.
    Precondition {
        check: &'static str,
        n: u8,
        requirement: &'static str,
    },
    /// `t_partition` centre outside `C(D)`.
    NotInC {
        mask: u32,
    },
    InvalidRange {
        from: u32,
        to: u32,
    },
    InvalidParameter {
        name: &'static str,
        value: u64,
        expected: &'static str,
    },
    /// The search exhausted the space below the seeded upper bound.
    NoSolutionWithinBound {
        bound: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionOutOfRange { n } => {
                write!(f, "dimension {n} outside supported range 1..=30")
            }
            Error::VertexOutOfRange { mask, n } => {
                write!(f, "vertex mask {mask:#x} does not fit in dimension {n}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::RadiusOutOfRange { radius, n } => {
                write!(f, "radius {radius} exceeds dimension {n}")
            }
            Error::CoordinateOutOfRange { coord, n } => {
                write!(f, "coordinate {coord} outside 1..={n}")
            }
            Error::NotDominating { first, n } => write!(
                f,
                "set does not dominate Q_{n}: vertex mask {first:#x} is undominated"
            ),
            Error::Precondition {
                check,
                n,
                requirement,
            } => write!(f, "{check} not applicable at n={n}: requires {requirement}"),
            Error::NotInC { mask } => {
                write!(f, "vertex mask {mask:#x} has excess below 2")
            }
            Error::InvalidRange { from, to } => {
                write!(f, "invalid dimension range {from}..={to}")
            }
            Error::InvalidParameter {
                name,
                value,
                expected,
            } => write!(f, "invalid {name} = {value}: expected {expected}"),
            Error::NoSolutionWithinBound { bound } => {
                write!(f, "no dominating set of size at most {bound} exists")
            }
        }
    }
}

impl core::error::Error for Error {}
