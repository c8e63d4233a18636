use proptest::prelude::*;

use pig_core::constructors::{brandt, cyclic_group, left_zero, subset_meet_semilattice, symmetric_inverse};
use pig_core::skeletal::{embedded_copy, fibre_subgraph_is_complete, max_skeletal, verify_skeletal};
use pig_core::spectral::{fibre_spectral_report, laplacian_matrix, twin_spectral_report};
use pig_core::{Graph, Semigroup};

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut k = 0;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// A graph where some vertices are cloned into closed twins.
fn arb_twin_graph() -> impl Strategy<Value = Graph> {
    (arb_graph(6), proptest::collection::vec(1usize..=3, 6)).prop_map(|(base, copies)| {
        let origin: Vec<usize> = (0..base.order())
            .flat_map(|v| std::iter::repeat_n(v, copies[v]))
            .collect();
        Graph::from_fn(origin.len(), |a, b| origin[a] == origin[b] || base.has_edge(origin[a], origin[b]))
    })
}

fn small_semigroup() -> impl Strategy<Value = Semigroup> {
    prop_oneof![
        (1usize..=3).prop_map(|n| symmetric_inverse(n).unwrap()),
        (1usize..=3, 1usize..=3).prop_map(|(g, i)| brandt(&cyclic_group(g).unwrap(), i).unwrap()),
        (1usize..=3).prop_map(|n| subset_meet_semilattice(n).unwrap()),
        (1usize..=5).prop_map(|m| cyclic_group(m).unwrap()),
        (1usize..=4).prop_map(|n| left_zero(n).unwrap().adjoin_zero()),
    ]
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(10)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph(9)) {
        prop_assert_eq!(Graph::from_json(&g.to_json().unwrap()).unwrap(), g);
    }

    #[test]
    fn semigroup_json_round_trips(s in small_semigroup()) {
        let text = s.to_json().unwrap();
        let back = Semigroup::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json().unwrap(), text);
    }

    #[test]
    fn laplacian_rows_sum_to_zero(g in arb_graph(8)) {
        let l = laplacian_matrix(&g);
        for i in 0..g.order() {
            prop_assert_eq!(l.row_sum(i), 0.into());
        }
    }

    #[test]
    fn twin_report_passes(g in arb_twin_graph()) {
        prop_assert!(twin_spectral_report(&g).all_pass);
    }

    #[test]
    fn max_skeletal_verifies(g in arb_twin_graph()) {
        let (h, phi) = max_skeletal(&g);
        prop_assert!(verify_skeletal(&g, &h, &phi).unwrap().is_skeletal);
        for v in 0..h.order() {
            prop_assert!(fibre_subgraph_is_complete(&g, &h, &phi, v).unwrap());
        }
        let copy = embedded_copy(&g, &h, &phi).unwrap();
        prop_assert_eq!(copy.subgraph.edges(), h.edges());
        prop_assert!(fibre_spectral_report(&g, &h, &phi).unwrap().all_pass);
    }
}
