use proptest::prelude::*;

use wheelworks::io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
use wheelworks_core::{Graph, MAX_VERTICES};

fn graph() -> impl Strategy<Value = Graph> {
    (0..=MAX_VERTICES).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
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

proptest! {
    #[test]
    fn graph6_round_trips(g in graph()) {
        let s = write_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        let h = parse_graph6(&s).unwrap();
        prop_assert_eq!(h.rows(), g.rows());
        prop_assert_eq!(write_graph6(&h), s);
    }

    #[test]
    fn edge_lists_round_trip(g in graph()) {
        let h = parse_edgelist(&write_edgelist(&g)).unwrap();
        prop_assert_eq!(h.rows(), g.rows());
    }

    #[test]
    fn appended_bytes_are_rejected(g in graph(), extra in 63u8..=126) {
        let mut s = write_graph6(&g);
        s.push(extra as char);
        prop_assert!(parse_graph6(&s).is_err());
    }
}
