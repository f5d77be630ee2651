use resonantk::catalog::{catalog_graph, CatalogName};
use resonantk::leapfrog::{
    leapfrog, territory, two_resonance_certificate, CertificateCase, LeapfrogResult, Provenance,
};
use resonantk::matching::alternating_faces;
use resonantk::resonance::{is_resonant_pattern, resonance_order, Order};

const SOURCES: [CatalogName; 4] = [
    CatalogName::F20,
    CatalogName::F24,
    CatalogName::F28,
    CatalogName::F36_1,
];

fn images() -> Vec<(CatalogName, LeapfrogResult)> {
    SOURCES
        .iter()
        .map(|&n| (n, leapfrog(&catalog_graph(n).graph)))
        .collect()
}

#[test]
fn images_are_fullerenes_with_partitioning_heritable_faces() {
    for (name, r) in images() {
        let src = catalog_graph(name).graph;
        assert_eq!(r.image.vertex_count(), 3 * src.vertex_count());
        assert_eq!(r.image.pentagons().len(), 12);
        assert!(r.m0.is_perfect());
        let mut cover = vec![0; r.image.vertex_count()];
        for f in r.heritable_faces() {
            for &v in r.image.face(f).boundary() {
                cover[v] += 1;
            }
            let Provenance::Heritable(orig) = r.provenance[f] else {
                unreachable!()
            };
            assert_eq!(r.image.face(f).size(), src.face(orig).size());
        }
        assert!(cover.iter().all(|&c| c == 1), "{name}");
        let fresh = r.fresh_faces();
        assert_eq!(fresh.len(), r.image.vertex_count() / 3);
        assert!(fresh.iter().all(|&f| r.image.is_hexagon(f)));
        let alternating = alternating_faces(&r.image, &r.m0).unwrap();
        assert!(fresh.iter().all(|f| alternating.contains(f)), "{name}");
        assert!(alternating.len() >= r.image.vertex_count() / 3);
    }
}

#[test]
fn constructive_and_decision_paths_agree_on_pairs() {
    for (name, r) in images() {
        let hs = r.image.hexagons().to_vec();
        let mut cases = [0usize; 4];
        for (i, &a) in hs.iter().enumerate() {
            for &b in &hs[i + 1..] {
                if !r.image.faces_disjoint(a, b) {
                    continue;
                }
                let cert = two_resonance_certificate(&r, a, b)
                    .unwrap_or_else(|e| panic!("{name}: {e}"));
                let m = &cert.matching;
                assert!(m.is_perfect());
                assert!(m.validate(&r.image.graph().to_graph()).is_ok());
                assert!(m.is_alternating(r.image.face(a).boundary()));
                assert!(m.is_alternating(r.image.face(b).boundary()));
                assert!(is_resonant_pattern(&r.image, &[a, b]).unwrap().is_some());
                cases[cert.case as usize] += 1;
            }
        }
        assert!(cases[CertificateCase::M0 as usize] > 0, "{name}");
        if name != CatalogName::F20 {
            assert!(cases[CertificateCase::M1 as usize] > 0, "{name}");
        }
    }
}

#[test]
fn images_are_two_resonant() {
    for (name, r) in images() {
        let order = resonance_order(&r.image, Some(2));
        match order {
            Ok(rep) => assert!(rep.order >= Order::Finite(2), "{name}"),
            Err(e) => assert!(e.is_guard(), "{name}: {e}"),
        }
    }
}

#[test]
fn territory_rings_follow_center_size() {
    for (_, r) in images() {
        for c in r.heritable_faces() {
            let t = territory(&r, c).unwrap();
            assert_eq!(t.ring.len(), r.image.face(c).size());
            assert!(t.ring.iter().all(|&h| !r.provenance[h].is_heritable()));
        }
    }
}
