use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::decomposition::{decomposition_from_order, heuristic_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest graph solved by the subset dynamic program.
pub const EXACT_DP_MAX: usize = 20;
/// Largest graph attempted by branch and bound.
pub const EXACT_BB_MAX: usize = 30;

/// `|Q(S, v)|`: vertices outside `S ∪ {v}` reachable from `v` through `S`,
/// i.e. the degree of `v` when eliminated right after `S`.
#[inline]
fn q(g: &Graph, s: VertexSet, v: usize) -> usize {
    g.open_neighborhood(g.component_of(v, s.with(v))).len()
}

/// Exact treewidth with a decomposition of that width.
///
/// Up to [`EXACT_DP_MAX`] vertices this is the recurrence
/// `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)` over vertex subsets; above
/// it, up to [`EXACT_BB_MAX`], a depth-first search over elimination orders
/// with memoised dead states, one width target at a time.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n > EXACT_BB_MAX {
        return Err(Error::ScaleLimit {
            op: "exact treewidth",
            n,
            max: EXACT_BB_MAX,
        });
    }
    let order = if n <= EXACT_DP_MAX { dp_order(g) } else { bb_order(g) };
    let td = decomposition_from_order(g, &order);
    Ok((td.width(), td))
}

fn dp_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let size = 1usize << n;
    let mut tw = vec![0u8; size];
    let mut choice = vec![0u8; size];
    for bits in 1..size {
        let s = VertexSet::from_bits(bits as u64);
        let mut best = u8::MAX;
        let mut arg = 0;
        for v in s {
            let rest = s.without(v);
            let prev = tw[rest.bits() as usize];
            if prev >= best {
                continue;
            }
            let val = prev.max(q(g, rest, v) as u8);
            if val < best {
                best = val;
                arg = v as u8;
            }
        }
        tw[bits] = best;
        choice[bits] = arg;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = g.vertices();
    while let Some(_) = s.first() {
        let v = choice[s.bits() as usize] as usize;
        order.push(v);
        s.remove(v);
    }
    order.reverse();
    order
}

fn bb_order(g: &Graph) -> Vec<usize> {
    let heuristic = heuristic_decomposition(g);
    let upper = heuristic.width();
    let lower = degeneracy(g);
    for w in lower..upper {
        let mut dead = HashSet::new();
        let mut order = Vec::new();
        if feasible(g, VertexSet::EMPTY, w, &mut dead, &mut order) {
            return order;
        }
    }
    // The heuristic ordering is optimal.
    order_of(g, &heuristic)
}

/// Extends `order` (the elimination of `s`) to all vertices without any
/// elimination degree above `w`.
fn feasible(g: &Graph, s: VertexSet, w: usize, dead: &mut HashSet<u64>, order: &mut Vec<usize>) -> bool {
    let rest = g.vertices() - s;
    if rest.len() <= w + 1 {
        order.extend(rest.iter());
        return true;
    }
    if dead.contains(&s.bits()) {
        return false;
    }
    for v in rest {
        if q(g, s, v) <= w {
            order.push(v);
            if feasible(g, s.with(v), w, dead, order) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(s.bits());
    false
}

fn degeneracy(g: &Graph) -> usize {
    let mut alive = g.vertices();
    let mut best = 0;
    while let Some(v) = alive.iter().min_by_key(|&u| (g.neighbors(u) & alive).len()) {
        best = best.max((g.neighbors(v) & alive).len());
        alive.remove(v);
    }
    best
}

/// Recovers the elimination order that produced a decomposition built by
/// [`decomposition_from_order`]: bag `i` holds the `i`-th vertex and its
/// later neighbours, so the order is the unique vertex new to each bag
/// once later bags are peeled away.
fn order_of(g: &Graph, td: &TreeDecomposition) -> Vec<usize> {
    let mut seen = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(g.n());
    for b in td.bags.iter().rev() {
        let fresh = *b - seen;
        debug_assert_eq!(fresh.len(), 1);
        order.push(fresh.first().unwrap());
        seen |= *b;
    }
    order.reverse();
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn small_widths() {
        assert_eq!(treewidth_exact(&cycle(6)).unwrap().0, 2);
        assert_eq!(treewidth_exact(&Graph::new(1).unwrap()).unwrap().0, 0);
        assert_eq!(treewidth_exact(&Graph::new(0).unwrap()).unwrap().0, 0);
        let mut k5 = Graph::new(5).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                k5.add_edge(u, v).unwrap();
            }
        }
        let (w, td) = treewidth_exact(&k5).unwrap();
        assert_eq!(w, 4);
        td.check(&k5).unwrap();
    }

    #[test]
    fn branch_and_bound_agrees_on_a_long_cycle() {
        let g = cycle(24);
        let (w, td) = treewidth_exact(&g).unwrap();
        assert_eq!(w, 2);
        td.check(&g).unwrap();
    }
}
