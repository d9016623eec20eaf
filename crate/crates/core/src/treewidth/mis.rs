use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::decomposition::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest bag the independent-set dynamic program will tabulate.
pub const MIS_BAG_MAX: usize = 24;

type Table = BTreeMap<VertexSet, usize>;

/// A maximum independent set by dynamic programming over the bags of a
/// valid decomposition rooted at bag 0. The state of a bag is the
/// independent subset of it taken into the solution.
pub fn max_independent_set_td(g: &Graph, td: &TreeDecomposition) -> Result<VertexSet> {
    td.check(g)?;
    if g.n() == 0 {
        return Ok(VertexSet::EMPTY);
    }
    if let Some(b) = td.bags.iter().find(|b| b.len() > MIS_BAG_MAX) {
        return Err(Error::ScaleLimit {
            op: "independent set dynamic program (bag size)",
            n: b.len(),
            max: MIS_BAG_MAX,
        });
    }
    let adj = td.tree_adjacency();
    let m = td.bags.len();
    // Post-order with parents.
    let mut parent = vec![usize::MAX; m];
    let mut order = Vec::with_capacity(m);
    let mut stack = vec![0usize];
    let mut seen = vec![false; m];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &u in &adj[t] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = t;
                stack.push(u);
            }
        }
    }
    let children: Vec<Vec<usize>> = (0..m)
        .map(|t| adj[t].iter().copied().filter(|&u| parent[u] == t).collect())
        .collect();

    let mut tables: Vec<Table> = vec![Table::new(); m];
    // For each child and each trace on the parent bag, the best child state.
    let mut best_child: Vec<BTreeMap<VertexSet, (usize, VertexSet)>> = vec![BTreeMap::new(); m];
    for &t in order.iter().rev() {
        let bag = td.bags[t];
        for &c in &children[t] {
            let mut best: BTreeMap<VertexSet, (usize, VertexSet)> = BTreeMap::new();
            for (&j, &val) in &tables[c] {
                let key = j & bag;
                let gain = val - key.len();
                let e = best.entry(key).or_insert((gain, j));
                if gain > e.0 {
                    *e = (gain, j);
                }
            }
            best_child[c] = best;
        }
        let mut table = Table::new();
        for i in bag.subsets() {
            if !g.is_independent(i) {
                continue;
            }
            let mut val = i.len();
            let mut ok = true;
            for &c in &children[t] {
                match best_child[c].get(&(i & td.bags[c])) {
                    Some(&(gain, _)) => val += gain,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                table.insert(i, val);
            }
        }
        tables[t] = table;
    }
    let (&root_state, _) = tables[0]
        .iter()
        .max_by_key(|&(s, &v)| (v, core::cmp::Reverse(*s)))
        .ok_or_else(|| Error::Internal("empty root table".into()))?;
    let mut result = VertexSet::EMPTY;
    let mut work = vec![(0usize, root_state)];
    while let Some((t, state)) = work.pop() {
        result |= state;
        for &c in &children[t] {
            let (_, j) = best_child[c][&(state & td.bags[c])];
            work.push((c, j));
        }
    }
    if !g.is_independent(result) {
        return Err(Error::Internal(format!("reconstructed set {result:?} is not independent")));
    }
    Ok(result)
}

/// Maximum independent set by exhaustive branching on the smallest
/// remaining vertex; the reference oracle.
pub fn max_independent_set_brute(g: &Graph) -> VertexSet {
    fn go(g: &Graph, cands: VertexSet, cur: VertexSet, best: &mut VertexSet) {
        if cur.len() + cands.len() <= best.len() {
            return;
        }
        let Some(v) = cands.first() else {
            *best = cur;
            return;
        };
        go(g, cands - g.closed_neighbors(v), cur.with(v), best);
        go(g, cands.without(v), cur, best);
    }
    let mut best = VertexSet::EMPTY;
    go(g, g.vertices(), VertexSet::EMPTY, &mut best);
    best
}
