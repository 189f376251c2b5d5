use plabel_core::format::{emit_graph, emit_graph6, parse_graph, parse_graph6, GraphFormat};
use plabel_core::generators::{connected_graphs, make_random_gnp};
use plabel_core::Graph;

type Reference = (&'static str, usize, &'static [(usize, usize)]);

// Strings and edge lists produced by networkx 3.4 `to_graph6_bytes`.
const REFERENCE: &[Reference] = &[
    ("DhC", 5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
    ("Ds_", 5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    ("EhEG", 6, &[(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]),
    (
        "D~{",
        5,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    ),
    (
        "IheA@GUAo",
        10,
        &[
            (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 9),
            (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
        ],
    ),
    ("B?", 3, &[]),
    (
        "Kx`~DcxcBLP?",
        12,
        &[
            (0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (0, 9), (0, 11), (1, 2), (1, 5), (1, 6),
            (1, 10), (2, 3), (2, 5), (2, 6), (2, 7), (2, 8), (2, 10), (3, 5), (3, 7), (3, 8),
            (3, 9), (4, 5), (4, 8), (4, 11), (5, 10), (6, 7), (6, 10), (7, 8), (8, 10),
        ],
    ),
];

const CYCLE_70: &str = "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@_??????????G";

#[test]
fn graph6_matches_reference_encoder() {
    for &(text, n, edges) in REFERENCE {
        let g = parse_graph6(text).unwrap();
        assert_eq!(g.n(), n, "{text}");
        assert_eq!(g.edges(), edges, "{text}");
        assert_eq!(emit_graph6(&Graph::new(n, edges.iter().copied()).unwrap()), text);
    }
}

#[test]
fn long_size_prefix() {
    let g = parse_graph6(CYCLE_70).unwrap();
    assert_eq!((g.n(), g.m()), (70, 70));
    assert!(g.vertices().all(|v| g.degree(v) == 2) && g.is_connected());
    assert!(g.has_edge(0, 69));
    assert_eq!(emit_graph6(&g), CYCLE_70);
}

#[test]
fn header_is_accepted() {
    let g = parse_graph(">>graph6<<DhC\n", GraphFormat::Graph6).unwrap();
    assert_eq!(g.m(), 4);
}

#[test]
fn round_trips() {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(connected_graphs).collect();
    graphs.extend((0..40).map(|s| make_random_gnp(1 + s as usize * 3, 0.2, s).unwrap()));
    graphs.push(Graph::empty(0));
    graphs.push(Graph::new(7, [(0, 1)]).unwrap());
    for g in graphs {
        for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            let text = emit_graph(&g, format);
            assert_eq!(parse_graph(&text, format).unwrap(), g, "{format:?}: {text}");
        }
    }
}

#[test]
fn edge_list_errors_carry_line_numbers() {
    let err = parse_graph("0 1\n# fine\n1 x\n", GraphFormat::EdgeList).unwrap_err();
    assert!(err.to_string().starts_with("line 3"), "{err}");
    assert!(parse_graph("0 0\n", GraphFormat::EdgeList).is_err());
    assert!(parse_graph("0 1\n1 0\n", GraphFormat::EdgeList).is_err());
}
