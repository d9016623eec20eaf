//! Tree decompositions and exact treewidth.

mod atoms;
mod decomposition;
mod exact;
mod mis;
mod pmc_dp;

pub use atoms::{clique_minimal_separators, clique_separator_atoms};
pub use decomposition::{decomposition_from_order, heuristic_decomposition, TreeDecomposition};
pub use exact::{treewidth_exact, EXACT_BB_MAX, EXACT_DP_MAX};
pub use mis::{max_independent_set_brute, max_independent_set_td, MIS_BAG_MAX};
pub use pmc_dp::treewidth_via_pmcs;

use crate::clique::max_clique;
use crate::error::Result;
use crate::graph::Graph;
use crate::separators::separator_sets;

/// The quantities compared by the clique/separator treewidth bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub omega: usize,
    pub s_max: usize,
    pub tw: usize,
    /// `omega + 1`, the least `k` with no clique on `k` vertices.
    pub k: usize,
    /// `max(1, s_max)`.
    pub s: usize,
    /// `(k - 1) s^3 - 1`.
    pub bound: u64,
    pub holds: bool,
}

pub fn theorem1_check(g: &Graph) -> Result<Theorem1Report> {
    let (tw, _) = treewidth_exact(g)?;
    let omega = max_clique(g).len();
    let s_max = separator_sets(g).iter().map(|s| s.len()).max().unwrap_or(0);
    let k = omega + 1;
    let s = s_max.max(1);
    let bound = ((k - 1) as u64) * (s as u64).pow(3) - 1;
    Ok(Theorem1Report {
        omega,
        s_max,
        tw,
        k,
        s,
        bound,
        holds: (tw as u64) <= bound,
    })
}
