//! JSON reports. Every report carries a versioned `schema` field.

use serde::Serialize;
use skewlab_core::solution::MinimalFactor;
use skewlab_core::{FiniteSolution, SolutionError};

pub use skewlab_core::report::{AnalysisReport, ANALYSIS_SCHEMA};

pub const SOLUTION_SCHEMA: &str = "skewlab.solution/1";
pub const SUBBRACES_SCHEMA: &str = "skewlab.subbraces/1";
pub const SWEEP_SCHEMA: &str = "skewlab.sweep/1";
pub const WINDOW_SCHEMA: &str = "skewlab.window/1";
pub const CATALOG_SCHEMA: &str = "skewlab.catalog/1";

/// Largest number of retractions followed by [`SolutionReport`].
pub const TOWER_STEPS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub element: usize,
    pub members: Vec<usize>,
    pub exact: bool,
}

impl FactorReport {
    pub fn new(element: usize, f: &MinimalFactor) -> Self {
        FactorReport {
            element,
            members: f.members.to_vec(),
            exact: f.exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub schema: &'static str,
    pub size: usize,
    pub involutive: bool,
    /// Sizes of the iterated retracts, starting with the solution itself.
    pub retract_tower: Vec<usize>,
    pub minimal_factors: Vec<FactorReport>,
    /// Blocks of the decomposition into minimal factors.
    pub atoms: Vec<Vec<usize>>,
    /// Every minimal factor was computed exactly rather than bounded.
    pub exact: bool,
    pub delta_f: Vec<usize>,
}

impl SolutionReport {
    pub fn of_solution(x: &FiniteSolution) -> Result<Self, SolutionError> {
        let minimal_factors: Vec<FactorReport> =
            (0..x.size()).map(|y| FactorReport::new(y, &x.minimal_factor(y))).collect();
        let (atoms, exact) = match x.decomposition_atoms() {
            Ok(p) => (p, true),
            Err(SolutionError::PartialResult(p)) => (p, false),
            Err(e) => return Err(e),
        };
        Ok(SolutionReport {
            schema: SOLUTION_SCHEMA,
            size: x.size(),
            involutive: x.is_involutive(),
            retract_tower: x.retract_tower(TOWER_STEPS)?,
            minimal_factors,
            atoms: atoms.blocks().iter().map(|b| b.to_vec()).collect(),
            exact,
            delta_f: x.delta_f().to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_report() {
        let r = SolutionReport::of_solution(&FiniteSolution::flip(3)).unwrap();
        assert!(r.involutive);
        assert_eq!(r.retract_tower, vec![3, 1]);
        assert_eq!(r.atoms, vec![vec![0], vec![1], vec![2]]);
        assert!(r.exact);
        assert_eq!(r.delta_f, vec![0, 1, 2]);
    }
}
