use proptest::prelude::*;
use srbetti_core::betti::hochster_betti_graph;
use srbetti_core::complexes::{flag_complex, SimplicialComplex};
use srbetti_core::graphs::{canonical_form, emit_graph6, parse_graph6, Graph};
use srbetti_core::homology::field_homology_dims;
use srbetti_core::linalg::{rank_rational, smith_normal_form, IntegerMatrix};
use srbetti_core::Field;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn permuted(g: &Graph, seed: u64) -> Graph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    g.relabel(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_invariants(g in graph(8), seed in any::<u64>()) {
        let h = permuted(&g, seed);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(
            hochster_betti_graph(&g, Field::Prime(2)).unwrap(),
            hochster_betti_graph(&h, Field::Prime(2)).unwrap()
        );
    }

    #[test]
    fn double_dual_is_identity(facets in proptest::collection::vec(1u64..(1 << 7), 1..6)) {
        let delta = SimplicialComplex::from_facets(7, facets).unwrap();
        if !delta.is_face_mask((1 << 7) - 1) {
            let dual = delta.alexander_dual().unwrap();
            prop_assert_eq!(dual.alexander_dual().unwrap(), delta.clone());
            // Alexander duality: H̃_j(Δ*) ≅ H̃^{n-j-3}(Δ); over a field the dimensions agree.
            let a = field_homology_dims(&delta, Field::Prime(2));
            let b = field_homology_dims(&dual, Field::Prime(2));
            for j in -1..=5isize {
                prop_assert_eq!(a.degree(j), b.degree(7 - j - 3));
            }
        }
    }

    #[test]
    fn smith_rank_is_rational_rank(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 0..7)) {
        let m = IntegerMatrix::from_dense(&rows).unwrap();
        prop_assert_eq!(smith_normal_form(&m).rank, rank_rational(&m));
    }

    #[test]
    fn flag_complexes_have_full_edge_graph(g in graph(9)) {
        let delta = flag_complex(&g);
        let comp = g.complement();
        prop_assert_eq!(delta.faces(1).len(), comp.edge_count());
    }
}
