use containment::enumerate::canonical_code;
use containment::formats::{parse_edge_list, parse_graph6, to_graph6, write_edge_list};
use containment_core::{gen_gnp, GnpParams};
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph6_round_trip(n in 1usize..70, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = gen_gnp(&GnpParams::new(n, p, seed).unwrap());
        let text = to_graph6(&g);
        let h = parse_graph6(&text).unwrap();
        prop_assert_eq!((h.n(), h.m()), (g.n(), g.m()));
        prop_assert!(g.edges().iter().all(|&[a, b]| h.has_edge(a, b)));
        prop_assert_eq!(to_graph6(&h), text);
    }

    #[test]
    fn edge_list_round_trip(n in 1usize..40, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = gen_gnp(&GnpParams::new(n, p, seed).unwrap());
        let h = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(h, g);
    }

    #[test]
    fn canonical_code_ignores_labels(n in 1usize..8, p in 0.0f64..1.0, seed in any::<u64>(), shift in 0usize..8) {
        let g = gen_gnp(&GnpParams::new(n, p, seed).unwrap());
        let relabel: Vec<(usize, usize)> = g.edges().iter().map(|&[a, b]| ((a + shift) % n, (b + shift) % n)).collect();
        let h = containment_core::Graph::from_edges(n, &relabel).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }
}
