use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::{full_components, pmc_sets, separator_sets, PMC_SWEEP_MAX};
use crate::vertex_set::VertexSet;

/// Treewidth by dynamic programming over full blocks `(S, C)` (a minimal
/// separator and one of its full components) and potential maximal
/// cliques:
///
/// `tw(S, C) = min over PMCs S ⊊ Ω ⊆ S ∪ C of max(|Ω| - 1, tw(N(D), D))`
/// for the components `D` of `G \ Ω` inside `C`, and `tw(G)` the same
/// minimum over all PMCs and all components. Each connected component is
/// solved separately.
pub fn treewidth_via_pmcs(g: &Graph) -> Result<usize> {
    if g.n() > PMC_SWEEP_MAX {
        return Err(Error::ScaleLimit {
            op: "PMC treewidth",
            n: g.n(),
            max: PMC_SWEEP_MAX,
        });
    }
    let mut best = 0;
    for comp in g.components(VertexSet::EMPTY) {
        let sub = g.induced_subgraph(comp).graph;
        best = best.max(connected(&sub)?);
    }
    Ok(best)
}

fn connected(g: &Graph) -> Result<usize> {
    let pmcs = pmc_sets(g)?;
    // Full blocks keyed by their component; the separator is N(C).
    let mut blocks: Vec<(VertexSet, VertexSet)> = Vec::new();
    for s in separator_sets(g) {
        for c in full_components(g, s) {
            blocks.push((s, c));
        }
    }
    blocks.sort_by_key(|&(s, c)| ((s | c).len(), c));
    let mut value: BTreeMap<VertexSet, usize> = BTreeMap::new();
    let inner = |omega: VertexSet, within: VertexSet, value: &BTreeMap<VertexSet, usize>| -> Option<usize> {
        let mut w = omega.len() - 1;
        for d in g.components(omega) {
            if d.is_subset(within) {
                w = w.max(*value.get(&d)?);
            }
        }
        Some(w)
    };
    for &(s, c) in &blocks {
        let region = s | c;
        let mut best = usize::MAX;
        for &omega in &pmcs {
            if s.is_subset(omega) && s != omega && omega.is_subset(region) {
                if let Some(w) = inner(omega, c, &value) {
                    best = best.min(w);
                }
            }
        }
        if best == usize::MAX {
            return Err(Error::Internal(alloc::format!("block ({s:?}, {c:?}) has no realisation")));
        }
        value.insert(c, best);
    }
    let everything = g.vertices();
    pmcs.iter()
        .filter_map(|&omega| inner(omega, everything, &value))
        .min()
        .ok_or_else(|| Error::Internal("no potential maximal clique realises the graph".into()))
}
