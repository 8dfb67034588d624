use neutro_core::graph::{generate, vertex_coloring, Family, Graph};
use neutro_core::ngraph::{
    classify_walk, neutro_coloring, neutro_components, neutro_eulerian, neutro_isomorphic, neutro_petersen,
    neutro_tree, Classification, EdgeTag, NeutroGraph, PetersenKind, WalkKind,
};
use proptest::prelude::*;

fn neutro_graph(directed: bool) -> impl Strategy<Value = NeutroGraph> {
    (1usize..=5, 0usize..=3).prop_flat_map(move |(real, indet)| {
        let n = real + indet;
        let slots: Vec<(usize, usize)> = if directed {
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect()
        } else {
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
        };
        prop::collection::vec(0u8..3, slots.len()).prop_map(move |choice| {
            let edges = slots.iter().zip(&choice).filter(|(_, &c)| c > 0).map(|(&(u, v), &c)| {
                (u, v, if c == 1 { EdgeTag::Real } else { EdgeTag::Indeterminate })
            });
            NeutroGraph::new(real, indet, edges, directed).unwrap()
        })
    })
}

fn any_neutro_graph() -> impl Strategy<Value = NeutroGraph> {
    prop_oneof![neutro_graph(false), neutro_graph(true)]
}

/// Permutes vertices within the real block and within the indeterminate block.
fn relabel(g: &NeutroGraph, rotate_real: usize, rotate_indet: usize) -> (NeutroGraph, Vec<usize>) {
    let (r, k) = (g.real_vertices(), g.indet_vertices());
    let map: Vec<usize> = (0..g.order())
        .map(|v| if v < r { (v + rotate_real) % r } else { r + (v - r + rotate_indet) % k.max(1) })
        .collect();
    let edges = g.edges().iter().rev().map(|e| (map[e.u], map[e.v], e.tag));
    (NeutroGraph::new(r, k, edges, g.is_directed()).unwrap(), map)
}

fn edge_tag(g: &NeutroGraph, u: usize, v: usize) -> Option<EdgeTag> {
    g.edges()
        .iter()
        .find(|e| (e.u == u && e.v == v) || (!g.is_directed() && e.u == v && e.v == u))
        .map(|e| e.tag)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn adjacency_round_trip(g in any_neutro_graph()) {
        let a = g.adjacency().unwrap();
        let back = NeutroGraph::from_adjacency(&a, g.indet_vertices(), g.is_directed()).unwrap();
        prop_assert_eq!(back.adjacency().unwrap(), a);
        prop_assert_eq!(back.edges().len(), g.edges().len());
    }

    #[test]
    fn text_round_trip(g in any_neutro_graph()) {
        prop_assert_eq!(NeutroGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn classification_follows_counts(g in any_neutro_graph()) {
        let expected = match (g.indet_vertices() > 0, g.indeterminate_edge_count() > 0) {
            (false, false) => Classification::Plain,
            (true, false) => Classification::VertexNeutrosophic,
            (false, true) => Classification::EdgeNeutrosophic,
            (true, true) => Classification::Strong,
        };
        prop_assert_eq!(g.classify(), expected);
        prop_assert_eq!(g.real_edge_count() + g.indeterminate_edge_count(), g.edges().len());
        prop_assert_eq!(g.strip_indeterminates().indet_vertices(), 0);
        prop_assert_eq!(g.without_indeterminate_edges().indeterminate_edge_count(), 0);
    }

    #[test]
    fn relabeling_is_an_isomorphism(g in any_neutro_graph(), a in 0usize..5, b in 0usize..3) {
        let (h, _) = relabel(&g, a, b);
        let f = neutro_isomorphic(&g, &h).unwrap().expect("relabeling preserves structure");
        for u in 0..g.order() {
            prop_assert_eq!(g.is_indeterminate(u), h.is_indeterminate(f[u]));
            for v in 0..g.order() {
                if u != v {
                    prop_assert_eq!(edge_tag(&g, u, v), edge_tag(&h, f[u], f[v]));
                }
            }
        }
    }

    #[test]
    fn flipping_one_tag_breaks_isomorphism(g in neutro_graph(false)) {
        prop_assume!(!g.edges().is_empty());
        let flipped: Vec<_> = g.edges().iter().enumerate().map(|(i, e)| {
            let tag = match (i, e.tag) {
                (0, EdgeTag::Real) => EdgeTag::Indeterminate,
                (0, EdgeTag::Indeterminate) => EdgeTag::Real,
                (_, t) => t,
            };
            (e.u, e.v, tag)
        }).collect();
        let h = NeutroGraph::new(g.real_vertices(), g.indet_vertices(), flipped, false).unwrap();
        prop_assert!(neutro_isomorphic(&g, &h).unwrap().is_none());
    }

    #[test]
    fn coloring_constrains_only_real_parts(g in neutro_graph(false)) {
        let c = neutro_coloring(&g).unwrap();
        let real = g.real_vertices();
        for e in g.edges() {
            if e.tag == EdgeTag::Real && e.u < real && e.v < real {
                prop_assert_ne!(c.vertex_colors[e.u], c.vertex_colors[e.v]);
            }
        }
        let core_edges = g.edges().iter().filter(|e| e.tag == EdgeTag::Real && e.u < real && e.v < real).map(|e| (e.u, e.v));
        let core = Graph::from_edges(real, core_edges).unwrap();
        prop_assert_eq!(c.chromatic_number, vertex_coloring(&core).unwrap().chromatic_number.max(1));
        for (i, a) in g.edges().iter().enumerate() {
            for (j, b) in g.edges().iter().enumerate().skip(i + 1) {
                let share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
                if share && a.tag == EdgeTag::Real && b.tag == EdgeTag::Real {
                    prop_assert_ne!(c.edge_colors[i], c.edge_colors[j]);
                }
            }
        }
    }

    #[test]
    fn components_partition_vertices(g in any_neutro_graph()) {
        let c = neutro_components(&g);
        let mut all: Vec<usize> = c.components.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
        prop_assert_eq!(c.is_neutro_disconnected, c.neutrosophic_components.len() >= 2);
    }

    #[test]
    fn neutro_euler_refines_euler(g in any_neutro_graph()) {
        let e = neutro_eulerian(&g);
        prop_assert!(!e.is_strong_neutro_eulerian || e.is_neutro_eulerian);
        prop_assert!(!e.is_neutro_eulerian || e.is_eulerian);
        if g.classify() == Classification::Plain {
            prop_assert!(!e.is_neutro_eulerian);
        }
    }

    #[test]
    fn neutro_trees_have_n_minus_one_edges(g in neutro_graph(false)) {
        let t = neutro_tree(&g);
        if t.is_neutro_tree {
            prop_assert_eq!(g.edges().len() + 1, g.order());
            prop_assert!(g.classify() != Classification::Plain);
        }
        if let (Some(r), Some(d)) = (t.radius, t.neutro_diameter) {
            prop_assert!(r <= d);
        }
    }

    #[test]
    fn single_vertex_sequences_are_paths(g in any_neutro_graph(), v in 0usize..8) {
        let v = v % g.order();
        prop_assert_eq!(classify_walk(&g, &[v]).kind, WalkKind::Path);
    }
}

#[test]
fn petersen_variants() {
    let plain = generate(Family::Petersen).unwrap();
    for j in 1..=10 {
        let g = neutro_petersen(PetersenKind::Vertex(j)).unwrap();
        assert_eq!((g.real_vertices(), g.indet_vertices(), g.edges().len()), (10 - j, j, 15));
        assert_eq!(g.classify(), Classification::VertexNeutrosophic);
    }
    for k in 1..=15 {
        let g = neutro_petersen(PetersenKind::Edge(k)).unwrap();
        assert_eq!(g.indeterminate_edge_count(), k);
        assert_eq!(g.underlying().adjacency_matrix(), plain.adjacency_matrix());
    }
    let strong = neutro_petersen(PetersenKind::Strong(2, 3)).unwrap();
    assert_eq!(strong.classify(), Classification::Strong);
    assert!(neutro_petersen(PetersenKind::Vertex(0)).is_err());
    assert!(neutro_petersen(PetersenKind::Edge(16)).is_err());
}

#[test]
fn dotted_walk_through_indeterminate_vertex() {
    use EdgeTag::{Indeterminate as D, Real as R};
    let g = NeutroGraph::new(3, 2, [(0, 1, D), (1, 3, R), (1, 2, R), (3, 4, R), (4, 1, R)], false).unwrap();
    assert_eq!(g.classify(), Classification::Strong);
    let w = classify_walk(&g, &[0, 1, 3, 1, 2]);
    assert_eq!((w.kind, w.neutrosophic), (WalkKind::Walk, true));
    let plain = classify_walk(&g, &[1, 2]);
    assert!(!plain.neutrosophic);
    assert_eq!(classify_walk(&g, &[0, 2]).kind, WalkKind::Invalid);
}
