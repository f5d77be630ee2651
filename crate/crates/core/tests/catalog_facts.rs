use resonantk::catalog::{catalog_graph, nanotube, Cap, CatalogName, OrderExpectation, TauExpectation};
use resonantk::resonance::{
    clar_number, disjoint_hexagon_sets, hexagon_dichotomy_report, is_resonant_pattern,
    resonance_order, sextet_polynomial, Order,
};
use resonantk::rings::{detect_r5_r6, tau};
use resonantk::{parse_graph, write_graph, FullereneGraph};

fn counts_hold(f: &FullereneGraph) {
    let n = f.vertex_count();
    assert_eq!(f.graph().edge_count(), 3 * n / 2);
    assert_eq!(f.faces().len(), n / 2 + 2);
    assert_eq!(f.pentagons().len(), 12);
    assert_eq!(f.hexagons().len(), n / 2 - 10);
}

#[test]
fn expected_facts_reproduce() {
    for name in CatalogName::ALL {
        let e = catalog_graph(name);
        let f = &e.graph;
        counts_hold(f);
        let poly = sextet_polynomial(f);
        if let Some(expected) = &e.expected.sextet {
            assert_eq!(&poly, expected, "{name}");
        }
        assert_eq!(poly.coefficient(1) as usize, f.hexagons().len(), "{name}");
        let t = tau(f);
        match e.expected.tau {
            TauExpectation::Value(v) => assert_eq!(t, Some(v), "{name}"),
            TauExpectation::NoPentagonalRing => assert_eq!(t, None, "{name}"),
            TauExpectation::Unpinned => {}
        }
        let order = resonance_order(f, None).unwrap();
        assert!(e.expected.order.admits(order.order), "{name}: {}", order.order);
        if let Order::Finite(k) = order.order {
            let failing = order.failing_set.unwrap();
            assert_eq!(failing.len(), k + 1);
            assert!(is_resonant_pattern(f, &failing).unwrap().is_none());
        }
    }
}

#[test]
fn fully_resonant_graphs_count_independent_sets() {
    for name in CatalogName::FULLY_RESONANT {
        let f = catalog_graph(name).graph;
        let poly = sextet_polynomial(&f);
        for i in 0..=poly.degree() + 1 {
            assert_eq!(
                poly.coefficient(i) as usize,
                disjoint_hexagon_sets(&f, i).len(),
                "{name} size {i}"
            );
        }
    }
}

#[test]
fn clar_bound() {
    for name in CatalogName::ALL {
        let f = catalog_graph(name).graph;
        assert!(clar_number(&f) <= (f.vertex_count() - 12) / 6, "{name}");
    }
    assert_eq!(clar_number(&catalog_graph(CatalogName::C60).graph), 8);
}

#[test]
fn cyclically_five_edge_connected() {
    for name in CatalogName::ALL {
        let f = catalog_graph(name).graph;
        assert!(f.verify_cyclic_edge_connectivity(4).unwrap(), "{name}");
    }
}

#[test]
fn every_hexagon_is_central_with_non_bipartite_complement() {
    let mut graphs: Vec<_> = CatalogName::ALL
        .iter()
        .map(|&n| catalog_graph(n).graph)
        .collect();
    for k in 1..=3 {
        graphs.push(nanotube(Cap::R5, k).unwrap());
        graphs.push(nanotube(Cap::R6, k).unwrap());
    }
    for f in &graphs {
        for rec in hexagon_dichotomy_report(f) {
            assert!(rec.central && !rec.complement_bipartite);
        }
    }
    assert!(hexagon_dichotomy_report(&catalog_graph(CatalogName::F20).graph).is_empty());
}

#[test]
fn capped_tubes_are_not_two_resonant() {
    for cap in [Cap::R5, Cap::R6] {
        for k in 1..=3 {
            let f = nanotube(cap, k).unwrap();
            counts_hold(&f);
            let order = resonance_order(&f, None).unwrap();
            assert_eq!(order.order, Order::Finite(1), "{cap:?} {k}");
            assert!(!detect_r5_r6(&f).is_empty());
        }
    }
    let f30 = catalog_graph(CatalogName::F30).graph;
    assert!(!detect_r5_r6(&f30).is_empty());
    assert!(matches!(
        catalog_graph(CatalogName::F30).expected.order,
        OrderExpectation::AtMost(1)
    ));
}

#[test]
fn r6_tube_polynomial_differs_from_f48() {
    let tube = nanotube(Cap::R6, 2).unwrap();
    let f48 = catalog_graph(CatalogName::F48);
    assert_ne!(Some(sextet_polynomial(&tube)), f48.expected.sextet);
}

#[test]
fn catalog_text_round_trips() {
    for name in CatalogName::ALL {
        let g = catalog_graph(name).graph.into_graph();
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap().canonical_code(), g.canonical_code());
    }
}
