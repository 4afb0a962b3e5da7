use std::fmt;

use super::SweepRecord;
use crate::cloner::{tradeoff_residual, universal_gap};
use crate::error::{invalid, Result};
use crate::Scalar;

/// Gap below which a point counts as lying on the universal frontier.
pub const FRONTIER_TOL: f64 = 1e-9;

/// Position of a fidelity pair relative to the optimal universal cloner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrontierStatus {
    /// Beyond what any universal cloner achieves.
    Outside,
    /// On the universal frontier (the endpoints of the phase-covariant curve).
    Touching,
    Inside,
}

impl fmt::Display for FrontierStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrontierStatus::Outside => "outside",
            FrontierStatus::Touching => "touching",
            FrontierStatus::Inside => "inside",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TradeoffRow<T> {
    /// `(f_a - 1/2)^2 + (f_b - 1/2)^2 - 1/4`.
    pub residual: T,
    /// `f_b` minus the universal frontier at the same `f_a`.
    pub universal_gap: T,
    pub frontier: FrontierStatus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TradeoffReport<T> {
    pub rows: Vec<TradeoffRow<T>>,
    pub max_abs_residual: T,
}

/// Circle residual and universal-frontier classification for every record.
pub fn tradeoff_report<T: Scalar>(records: &[SweepRecord<T>]) -> Result<TradeoffReport<T>> {
    if records.is_empty() {
        return Err(invalid("trade-off report needs at least one record"));
    }
    let tol = T::lit(FRONTIER_TOL);
    let rows: Vec<TradeoffRow<T>> = records
        .iter()
        .map(|record| {
            let pair = record.fidelities();
            let gap = universal_gap(&pair);
            let frontier = if gap.abs() <= tol {
                FrontierStatus::Touching
            } else if gap > T::zero() {
                FrontierStatus::Outside
            } else {
                FrontierStatus::Inside
            };
            TradeoffRow { residual: tradeoff_residual(&pair), universal_gap: gap, frontier }
        })
        .collect();
    let max_abs_residual = rows.iter().map(|r| r.residual.abs()).fold(T::zero(), T::max);
    Ok(TradeoffReport { rows, max_abs_residual })
}
