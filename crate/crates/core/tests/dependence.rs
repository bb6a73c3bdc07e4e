use std::collections::BTreeSet;

use srbetti_core::betti::{char_dependence, hochster_betti_graph};
use srbetti_core::complexes::flag_complex;
use srbetti_core::fixtures;
use srbetti_core::homology::integral_reduced_homology;
use srbetti_core::Field;

#[test]
fn eleven_vertex_witnesses() {
    for name in ["h11", "g1", "g2", "g3", "g4"] {
        let g = fixtures::graph(name).unwrap();
        let r = char_dependence(&g).unwrap();
        assert_eq!(r.primes(), BTreeSet::from([2]), "{name}");
        assert_eq!(r.dependent_indices(), BTreeSet::from([8, 9]), "{name}");
        assert_eq!(r.witnesses.len(), 1, "{name}");
        let w = &r.witnesses[0];
        assert_eq!(w.subset, (0..11).collect::<Vec<_>>());
        assert_eq!((w.degree, w.factors.clone()), (1, vec!["2".to_string()]));
        for f in [Field::Rational, Field::Prime(2)] {
            assert_eq!(r.diagram_over(f), hochster_betti_graph(&g, f).unwrap(), "{name}");
        }
    }
}

#[test]
fn twelve_vertex_plane() {
    let g = fixtures::graph("g12").unwrap();
    let groups = integral_reduced_homology(&flag_complex(&g));
    let shown: Vec<String> = groups.iter().map(|h| h.to_string()).collect();
    assert_eq!(shown, vec!["0", "0", "Z/2", "0"]);
    let r = char_dependence(&g).unwrap();
    assert_eq!(r.primes(), BTreeSet::from([2]));
    assert_eq!(r.diagram_over(Field::Prime(2)), hochster_betti_graph(&g, Field::Prime(2)).unwrap());
}

#[test]
fn disjoint_union_combines_primes() {
    let h = fixtures::graph("h11").unwrap();
    let k2 = srbetti_core::graphs::Graph::complete(2).unwrap();
    let u = h.disjoint_union(&k2).unwrap();
    let r = char_dependence(&u).unwrap();
    assert_eq!(r.primes(), char_dependence(&h).unwrap().primes());
    assert!(char_dependence(&k2.disjoint_union(&srbetti_core::graphs::Graph::cycle(5).unwrap()).unwrap())
        .unwrap()
        .is_independent());
    assert_eq!(r.diagram_over(Field::Prime(2)), hochster_betti_graph(&u, Field::Prime(2)).unwrap());
}
