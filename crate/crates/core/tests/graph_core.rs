mod common;

use common::{arb_graph, arb_graph_with_perm, path, petersen};
use proptest::prelude::*;
use regcut::extremal::{build_extremal, ExtremalSpec};
use regcut::graph::*;
use regcut::graph6::{from_graph6, to_graph6};
use regcut::iso::{canonical_form, is_isomorphic};
use regcut::verify::enumerate_connected_regular;

fn extremal(d: usize, c: usize, comp: &[usize]) -> Graph {
    let spec = if comp.is_empty() {
        ExtremalSpec::with_default_composition(d, c).unwrap()
    } else {
        ExtremalSpec::new(d, c, comp.to_vec()).unwrap()
    };
    build_extremal(&spec).unwrap()
}

/// graph6 strings produced by networkx for the same block-by-block labelling.
#[test]
fn graph6_matches_independent_encoder() {
    let cases: &[(usize, usize, &[usize], &str)] = &[
        (3, 1, &[], "I}KGGGB?w"),
        (3, 2, &[], "I}KGGGB?w"),
        (4, 2, &[], "J~wWGGB?wF_"),
        (5, 1, &[], "M}~pwC@?OB_M?N?N_"),
        (5, 2, &[3], "M~~oWCA?_B_M?^?^?"),
        (5, 3, &[3], "M]~v_[@?O@_F?N?N_"),
        (6, 2, &[], "N~~~oK@?OB_M?N?N_Fw"),
        (6, 4, &[], "N~z~o{@?O@_F?N?N_Fw"),
        (7, 3, &[3], "Q]~v~z{?w?_A?F?F?@w?^?B{?Nw"),
        (9, 7, &[3, 4], "U]~vf~}~v|@~?@?@??W?F??{?Bw?Fw?F{?B~??~w"),
        (9, 7, &[7], "U]~vvz}~vn@~?@?@??W?F??{?Bw?Fw?F{?B~??~w"),
    ];
    for &(d, c, comp, expected) in cases {
        let g = extremal(d, c, comp);
        assert_eq!(to_graph6(&g), expected, "d={d} c={c} {comp:?}");
        assert_eq!(from_graph6(expected).unwrap(), g);
    }
    assert_eq!(to_graph6(&cycles_union_complement(&[3, 3]).unwrap()), "EFz_");
    let nx_petersen = from_graph6("IheA@GUAo").unwrap();
    assert!(is_isomorphic(&nx_petersen, &petersen()));
}

#[test]
fn building_blocks() {
    assert_eq!(complete(1).unwrap().order(), 1);
    assert_eq!(complete(3).unwrap().edge_count(), 3);
    assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
    assert!(cycle(2).is_err());
    assert_eq!(matching_complement(2).unwrap().edge_count(), 0);
    assert!(is_isomorphic(&matching_complement(4).unwrap(), &cycle(4).unwrap()));
    assert!(matching_complement(3).is_err());
    assert_eq!(cycles_union_complement(&[3]).unwrap().edge_count(), 0);
    let c4bar = cycles_union_complement(&[4]).unwrap();
    assert_eq!(c4bar.edge_count(), 2);
    assert_eq!(c4bar.regular_degree(), Some(1));
    assert!(cycles_union_complement(&[2, 3]).is_err());
    for n in (2..=12).step_by(2) {
        assert_eq!(matching_complement(n).unwrap().regular_degree(), Some(n - 2));
    }
    for lens in [vec![3, 4], vec![5], vec![3, 3, 3], vec![6, 4]] {
        let total: usize = lens.iter().sum();
        assert_eq!(cycles_union_complement(&lens).unwrap().regular_degree(), Some(total - 3));
    }
}

#[test]
fn join_examples() {
    let k1 = complete(1).unwrap();
    assert_eq!(sequential_join(&[k1.clone(), k1.clone()]).unwrap(), complete(2).unwrap());
    let g = sequential_join(&[complete(2).unwrap(), matching_complement(2).unwrap(), k1.clone()]).unwrap();
    assert_eq!(g.order(), 5);
    assert_eq!(g.degree(0), 3);
    assert_eq!(g.degree(1), 3);
    assert_eq!(sequential_join(&[k1.clone(), k1.clone(), k1]).unwrap(), path(3));
    assert!(sequential_join(&[]).is_err());
}

#[test]
fn connectivity_and_edges_between() {
    assert!(complete(4).unwrap().is_connected());
    assert!(!Graph::empty(2).is_connected());
    assert!(Graph::empty(1).is_connected());
    assert!(Graph::empty(0).is_connected());
    let k4 = complete(4).unwrap();
    assert_eq!(k4.edges_between(&VertexSet::new([0, 1]), &VertexSet::new([2, 3])), 4);
    let c4 = cycle(4).unwrap();
    assert_eq!(c4.edges_between(&VertexSet::new([0, 2]), &VertexSet::new([1, 3])), 4);
    assert_eq!(Graph::empty(2).edges_between(&VertexSet::new([0]), &VertexSet::new([1])), 0);
}

#[test]
fn articulation_examples() {
    let w = path(3).articulation_points().unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!(w[0].vertex, 1);
    assert_eq!(w[0].branch_degrees, vec![1, 1]);
    assert!(cycle(5).unwrap().articulation_points().unwrap().is_empty());
    assert!(Graph::empty(2).articulation_points().is_err());
    let g = extremal(3, 1, &[]);
    assert!(g.articulation_points().unwrap().iter().any(|w| w.branch_degrees == vec![1, 2]));
}

#[test]
fn extremal_symmetry_is_an_isomorphism() {
    assert!(is_isomorphic(&extremal(5, 2, &[]), &extremal(5, 3, &[])));
    for d in 3..=11 {
        for c in 1..d {
            let (Ok(a), Ok(b)) = (
                ExtremalSpec::with_default_composition(d, c),
                ExtremalSpec::with_default_composition(d, d - c),
            ) else {
                continue;
            };
            let (ga, gb) = (build_extremal(&a).unwrap(), build_extremal(&b).unwrap());
            assert!(is_isomorphic(&ga, &gb), "d={d} c={c}");
            assert_eq!(canonical_form(&ga), canonical_form(&gb), "d={d} c={c}");
        }
    }
}

#[test]
fn enumerated_graphs_round_trip_and_are_distinct() {
    for (d, ns) in [(3usize, 4..=12usize), (4, 5..=10)] {
        for n in ns {
            if n * d % 2 == 1 {
                continue;
            }
            let gs = enumerate_connected_regular(n, d).unwrap();
            for g in &gs {
                assert_eq!(from_graph6(&to_graph6(g)).unwrap(), *g);
                assert!(g.is_connected());
                assert_eq!(g.regular_degree(), Some(d));
            }
            if n <= 10 {
                for i in 0..gs.len() {
                    for j in i + 1..gs.len() {
                        assert!(!is_isomorphic(&gs[i], &gs[j]), "n={n} d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn edge_list_round_trip() {
    let g = petersen();
    let text = g.to_edge_list();
    assert!(text.starts_with("n=10"));
    assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    assert!(Graph::from_edge_list("n=3\n0 3\n").is_err());
}

fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = g.components_avoiding(None).len();
    (0..g.order())
        .filter(|&v| g.components_avoiding(Some(v)).len() > base)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn articulation_agrees_with_deletion(g in arb_graph(10)) {
        prop_assume!(g.is_connected());
        let found: Vec<usize> = g.articulation_points().unwrap().iter().map(|w| w.vertex).collect();
        let expected = if g.order() <= 2 { Vec::new() } else { brute_cut_vertices(&g) };
        prop_assert_eq!(found, expected);
        for w in g.articulation_points().unwrap() {
            let covered: usize = w.components.iter().map(|c| c.len()).sum();
            prop_assert_eq!(covered, g.order() - 1);
            prop_assert_eq!(w.branch_degrees.iter().sum::<usize>(), g.degree(w.vertex));
            prop_assert!(w.branch_degrees.iter().all(|&b| b >= 1));
        }
    }

    #[test]
    fn relabelling_preserves_isomorphism_class((g, perm) in arb_graph_with_perm(12)) {
        let h = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &canonical_form(&g)));
    }

    #[test]
    fn isomorphism_agrees_with_canonical_form(a in arb_graph(7), b in arb_graph(7)) {
        prop_assert_eq!(is_isomorphic(&a, &b), canonical_form(&a) == canonical_form(&b));
        prop_assert_eq!(is_isomorphic(&a, &b), is_isomorphic(&b, &a));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn join_orders_and_degrees(sizes in proptest::collection::vec(1usize..5, 1..5)) {
        let parts: Vec<Graph> = sizes.iter().map(|&s| complete(s).unwrap()).collect();
        let g = sequential_join(&parts).unwrap();
        prop_assert_eq!(g.order(), sizes.iter().sum::<usize>());
        let mut v = 0;
        for (i, &s) in sizes.iter().enumerate() {
            let prev = if i > 0 { sizes[i - 1] } else { 0 };
            let next = sizes.get(i + 1).copied().unwrap_or(0);
            for _ in 0..s {
                prop_assert_eq!(g.degree(v), s - 1 + prev + next);
                v += 1;
            }
        }
    }
}
