use std::collections::BTreeSet;

use plabel_core::generators::make_random_gnp;
use plabel_core::solver::{lambda, solve_list};
use plabel_core::{incidence_graph, is_valid_total, lp1_is_valid, Color, Graph, ListAssignment, TotalLabelling};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=5, 0.2f64..0.9, any::<u64>()).prop_map(|(n, q, seed)| make_random_gnp(n, q, seed).unwrap())
}

fn labelling(g: &Graph, colors: &[Color]) -> TotalLabelling {
    g.elements().zip(colors.iter().cycle()).map(|(x, &c)| (x, c)).collect()
}

fn lists(g: &Graph, raw: &[Vec<Color>]) -> ListAssignment {
    g.elements()
        .zip(raw.iter().cycle())
        .map(|(x, l)| (x, l.iter().copied().collect::<BTreeSet<_>>()))
        .collect()
}

fn raw_lists() -> impl Strategy<Value = Vec<Vec<Color>>> {
    prop::collection::vec(prop::collection::vec(0u32..8, 1..4), 15)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn total_and_incidence_validity_agree(
        g in small_graph(),
        p in 0u32..4,
        colors in prop::collection::vec(0u32..7, 15),
    ) {
        let c = labelling(&g, &colors);
        let map = incidence_graph(&g);
        let image = map.transport_labelling(&c);
        prop_assert_eq!(is_valid_total(&g, p, &c), lp1_is_valid(&map.derived, p, &image));
        prop_assert_eq!(map.transport_labelling_back(&image), c);
    }

    #[test]
    fn shifting_preserves_validity(g in small_graph(), p in 1u32..4, t in 0u32..20) {
        let c = lambda(&g, p).labelling;
        prop_assert!(is_valid_total(&g, p, &c.shifted(t)));
    }

    #[test]
    fn shifting_preserves_list_feasibility(g in small_graph(), p in 0u32..4, raw in raw_lists(), t in 1u32..10) {
        let l = lists(&g, &raw);
        let a = solve_list(&g, p, &l).unwrap().is_labelled();
        let b = solve_list(&g, p, &l.shifted(t)).unwrap().is_labelled();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn restriction_to_a_subgraph_stays_valid(g in small_graph(), p in 1u32..4, pick in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0);
        let span = lambda(&g, p);
        let (u, v) = g.edges()[pick.index(g.m())];
        let h = g.without_edge(u, v);
        prop_assert!(is_valid_total(&h, p, &span.labelling.restricted_to(&h)));
        prop_assert!(lambda(&h, p).lambda <= span.lambda);
    }

    #[test]
    fn larger_lists_stay_feasible(g in small_graph(), p in 0u32..4, raw in raw_lists(), extra in 0u32..8) {
        let l = lists(&g, &raw);
        let wider: ListAssignment = l
            .iter()
            .map(|(x, set)| {
                let mut set = set.clone();
                set.insert(extra);
                (x, set)
            })
            .collect();
        if solve_list(&g, p, &l).unwrap().is_labelled() {
            prop_assert!(solve_list(&g, p, &wider).unwrap().is_labelled());
        }
    }

    #[test]
    fn span_is_monotone_in_p(g in small_graph(), p in 0u32..3) {
        prop_assert!(lambda(&g, p).lambda <= lambda(&g, p + 1).lambda);
    }
}
