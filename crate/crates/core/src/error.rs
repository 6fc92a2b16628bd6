use crate::MAX_DIM;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("side length must be at least 1")]
    ZeroSide,
    #[error("{requested} cells requested but the cap is {cap}")]
    Capacity { requested: u128, cap: u64 },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coordinate {value} on axis {axis} is outside 1..={side}")]
    OutOfRange {
        axis: usize,
        value: usize,
        side: usize,
    },
    #[error("empty box on axis {axis}: lo {lo} > hi {hi}")]
    EmptyBox { axis: usize, lo: usize, hi: usize },
    #[error("{structure} does not support dimension {dim}")]
    UnsupportedDimension { structure: &'static str, dim: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Checks `dim`/`side` and returns `side^dim * copies` if it fits under `cap`.
pub(crate) fn checked_cells(dim: usize, side: usize, copies: u64, cap: u64) -> Result<usize> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if dim > MAX_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    if side == 0 {
        return Err(Error::ZeroSide);
    }
    let mut total: u128 = copies as u128;
    for _ in 0..dim {
        total = total.saturating_mul(side as u128);
    }
    if total > cap as u128 {
        return Err(Error::Capacity {
            requested: total,
            cap,
        });
    }
    Ok((total / copies.max(1) as u128) as usize)
}
