//! Summary of the invariants of a finite skew brace.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::brace::FiniteSkewBrace;
use crate::set::ElementSet;
use crate::substructures::{enumerate_subbraces, index_add, index_mul};

pub const ANALYSIS_SCHEMA: &str = "skewlab.analysis/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub order: usize,
    pub ker_lambda: usize,
    pub fix: usize,
    pub center_add: usize,
    pub center_mul: usize,
    pub soc: usize,
    pub ann: usize,
    pub b2: usize,
    pub b2_op: usize,
    pub commutator: usize,
    pub two_sided: bool,
    pub trivial: bool,
    pub abelian_type: bool,
    /// Sizes of the distinct `λ`-orbits, ascending.
    pub lambda_orbit_sizes: Vec<usize>,
    /// Sizes of the distinct `θ`-orbits, ascending.
    pub theta_orbit_sizes: Vec<usize>,
    pub subbrace_count: usize,
    /// Additive and multiplicative indices agree for every sub skew brace.
    pub index_equality_verified: bool,
}

impl AnalysisReport {
    pub fn of_brace(b: &FiniteSkewBrace) -> Self {
        let subs = enumerate_subbraces(b);
        let index_equality_verified = subs.iter().all(|s| index_add(s) == index_mul(s));
        AnalysisReport {
            schema: ANALYSIS_SCHEMA.into(),
            order: b.order(),
            ker_lambda: b.ker_lambda().len(),
            fix: b.fix().len(),
            center_add: b.center_add().len(),
            center_mul: b.center_mul().len(),
            soc: b.soc().len(),
            ann: b.ann().len(),
            b2: b.star_span().len(),
            b2_op: b.b2_op().len(),
            commutator: b.commutator_ideal().len(),
            two_sided: b.is_two_sided(),
            trivial: b.is_trivial(),
            abelian_type: b.is_abelian_type(),
            lambda_orbit_sizes: orbit_sizes(b.order(), |x| b.lambda_orbit(x)),
            theta_orbit_sizes: orbit_sizes(b.order(), |x| b.theta_orbit(x)),
            subbrace_count: subs.len(),
            index_equality_verified,
        }
    }
}

fn orbit_sizes(n: usize, orbit: impl Fn(usize) -> ElementSet) -> Vec<usize> {
    let mut covered = ElementSet::empty(n);
    let mut sizes = Vec::new();
    for x in 0..n {
        if !covered.contains(x) {
            let o = orbit(x);
            sizes.push(o.len());
            covered.union_with(&o);
        }
    }
    sizes.sort_unstable();
    sizes
}
