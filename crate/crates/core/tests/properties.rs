use proptest::prelude::*;

use wheelworks_core::canon::{canonical_code, canonical_form};
use wheelworks_core::separators::{
    enumerate_pmcs, full_components, is_pmc, lemma5_witness, minimal_fill_in, separator_sets,
};
use wheelworks_core::treewidth::{
    clique_minimal_separators, clique_separator_atoms, max_independent_set_brute, max_independent_set_td,
    theorem1_check, treewidth_exact, treewidth_via_pmcs,
};
use wheelworks_core::{enumerate_holes, max_clique, Graph, Hole, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn components_partition_the_rest(g in graph(14), bits in any::<u64>()) {
        let removed = VertexSet::from_bits(bits) & g.vertices();
        let comps = g.components(removed);
        let mut union = VertexSet::EMPTY;
        for (i, &c) in comps.iter().enumerate() {
            prop_assert!(!c.is_empty() && g.is_connected_set(c));
            prop_assert!(union.is_disjoint(c));
            prop_assert!(g.open_neighborhood(c).is_subset(removed));
            union = union | c;
            if i > 0 {
                prop_assert!(comps[i - 1].first() < c.first());
            }
        }
        prop_assert_eq!(union, g.vertices() - removed);
    }

    #[test]
    fn max_clique_matches_brute_force(g in graph(12)) {
        let best = g.vertices().subsets().filter(|&s| g.is_clique(s)).map(|s| s.len()).max().unwrap();
        let c = max_clique(&g);
        prop_assert!(g.is_clique(c));
        prop_assert_eq!(c.len(), best);
    }

    #[test]
    fn holes_are_exactly_the_induced_long_cycles(g in graph(9)) {
        let mut found = Vec::new();
        for h in enumerate_holes(&g, g.n()) {
            prop_assert!(Hole::new(&g, h.vertices().to_vec()).is_ok());
            found.push(h.set());
        }
        let mut brute: Vec<VertexSet> = g
            .vertices()
            .subsets()
            .filter(|&s| s.len() >= 4 && g.is_connected_set(s) && s.iter().all(|v| (g.neighbors(v) & s).len() == 2))
            .collect();
        found.sort();
        brute.sort();
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn separators_match_the_definition(g in graph(9)) {
        let mut brute: Vec<VertexSet> = g
            .vertices()
            .subsets()
            .filter(|&s| full_components(&g, s).len() >= 2)
            .collect();
        let mut seps = separator_sets(&g);
        brute.sort();
        seps.sort();
        prop_assert_eq!(seps, brute);
    }

    #[test]
    fn pmcs_match_the_characterization(g in graph(8)) {
        let mut found: Vec<VertexSet> = enumerate_pmcs(&g).unwrap().into_iter().map(|p| p.omega).collect();
        let mut brute: Vec<VertexSet> = g.vertices().subsets().filter(|&s| is_pmc(&g, s).is_some()).collect();
        found.sort();
        brute.sort();
        prop_assert_eq!(found, brute);
    }

    #[test]
    fn treewidth_solvers_agree(g in graph(11)) {
        let (tw, td) = treewidth_exact(&g).unwrap();
        prop_assert!(td.check(&g).is_ok());
        prop_assert_eq!(td.width(), tw);
        prop_assert_eq!(treewidth_via_pmcs(&g).unwrap(), tw);
    }

    #[test]
    fn independent_sets_by_decomposition_are_maximum(g in graph(12)) {
        let (_, td) = treewidth_exact(&g).unwrap();
        let s = max_independent_set_td(&g, &td).unwrap();
        prop_assert!(g.is_independent(s));
        prop_assert_eq!(s.len(), max_independent_set_brute(&g).len());
    }

    #[test]
    fn minimal_fill_ins_are_minimal_triangulations(g in graph(11)) {
        let f = minimal_fill_in(&g);
        prop_assert!(f.apply(&g).is_chordal());
        prop_assert!(f.is_minimal(&g));
        prop_assert!(f.edges.iter().all(|&(u, v)| u < v && !g.has_edge(u, v)));
    }

    #[test]
    fn canonical_forms_ignore_labels(
        (g, perm) in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        let (cg, ch) = (canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(cg.rows(), ch.rows());
    }

    #[test]
    fn lemma5_outcomes_revalidate(g in graph(9)) {
        for p in enumerate_pmcs(&g).unwrap() {
            let size = p.omega.len();
            for k in 2..=size {
                for s in (1..).take_while(|&s: &usize| (k - 1) * s.pow(3) < size) {
                    let out = lemma5_witness(&g, &p, k, s).unwrap();
                    prop_assert!(out.validate(&g, k, s).is_ok());
                }
            }
        }
    }

    #[test]
    fn clique_separator_bound_holds(g in graph(12)) {
        let r = theorem1_check(&g).unwrap();
        prop_assert!(r.holds, "{:?}", r);
    }

    #[test]
    fn atoms_cover_the_graph_and_have_no_clique_separator(g in graph(10)) {
        let atoms = clique_separator_atoms(&g);
        let cover = atoms.iter().fold(VertexSet::EMPTY, |acc, a| acc | a.host_vertices());
        prop_assert_eq!(cover, g.vertices());
        let mut tw_max = 0;
        for a in &atoms {
            prop_assert!(clique_minimal_separators(&a.graph).is_empty());
            tw_max = tw_max.max(treewidth_exact(&a.graph).unwrap().0);
        }
        prop_assert_eq!(tw_max, treewidth_exact(&g).unwrap().0);
    }
}
