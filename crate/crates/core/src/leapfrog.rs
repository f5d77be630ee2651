//! The leapfrog transform.
//!
//! Built on arcs: the image has one vertex per arc `(u, v)` of the source,
//! standing for the corner of the face traced along `u -> v` next to edge
//! `uv`. Arc `a` is joined to its reverse arc (the edges of `M⁰`) and to its
//! successor and predecessor on the traced face. Each source face shrinks to
//! a heritable face of the same size; each source vertex becomes a fresh
//! hexagon made of the six arcs at it.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::matching::Matching;
use crate::plane_graph::{EmbeddedGraph, FaceId, FullereneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LeapfrogError {
    #[error("face {0} is not a hexagon")]
    NotHexagon(FaceId),
    #[error("faces {0} and {1} are not disjoint")]
    NotDisjoint(FaceId, FaceId),
    #[error("face {0} is not heritable")]
    NotHeritable(FaceId),
    #[error("no certificate found for faces {0} and {1}")]
    NoCertificate(FaceId, FaceId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "origin", rename_all = "snake_case")]
pub enum Provenance {
    /// Lies inside this face of the source.
    Heritable(FaceId),
    /// Surrounds this vertex of the source.
    Fresh(VertexId),
}

impl Provenance {
    pub fn is_heritable(self) -> bool {
        matches!(self, Provenance::Heritable(_))
    }
}

#[derive(Clone, Debug)]
pub struct LeapfrogResult {
    pub image: FullereneGraph,
    pub m0: Matching,
    /// Indexed by face id of the image.
    pub provenance: Vec<Provenance>,
}

impl LeapfrogResult {
    pub fn heritable_faces(&self) -> Vec<FaceId> {
        (0..self.provenance.len())
            .filter(|&f| self.provenance[f].is_heritable())
            .collect()
    }

    pub fn fresh_faces(&self) -> Vec<FaceId> {
        (0..self.provenance.len())
            .filter(|&f| !self.provenance[f].is_heritable())
            .collect()
    }
}

fn arc_ends(g: &EmbeddedGraph, a: usize) -> (VertexId, VertexId) {
    let u = a / 3;
    (u, g.neighbors(u)[a % 3])
}

pub fn leapfrog(f: &FullereneGraph) -> LeapfrogResult {
    let g = f.graph();
    let arcs = 3 * g.vertex_count();
    let rev = |a: usize| {
        let (u, v) = arc_ends(g, a);
        g.arc_index(v, u)
    };
    let succ = |a: usize| {
        let (u, v) = arc_ends(g, a);
        let (x, y) = g.successor(u, v);
        g.arc_index(x, y)
    };
    let mut pred = vec![0; arcs];
    for a in 0..arcs {
        pred[succ(a)] = a;
    }
    let build = |flip: bool| {
        let rotation = (0..arcs)
            .map(|a| {
                if flip {
                    [rev(a), pred[a], succ(a)]
                } else {
                    [rev(a), succ(a), pred[a]]
                }
            })
            .collect();
        EmbeddedGraph::from_rotation(rotation)
    };
    let graph = build(false)
        .or_else(|_| build(true))
        .expect("one orientation of the arc graph is spherical");
    let image = FullereneGraph::validate(graph).expect("leapfrog of a fullerene is a fullerene");
    let m0_edges: Vec<_> = (0..arcs).filter(|&a| a < rev(a)).map(|a| (a, rev(a))).collect();
    let m0 = Matching::from_edges(arcs, &m0_edges).expect("reverse arcs pair up");
    let provenance = classify(f, &image, &m0);
    LeapfrogResult {
        image,
        m0,
        provenance,
    }
}

fn classify(source: &FullereneGraph, image: &FullereneGraph, m0: &Matching) -> Vec<Provenance> {
    let g = source.graph();
    (0..image.faces().len())
        .map(|id| {
            let face = image.face(id);
            if face.edges().any(|(a, b)| m0.contains(a, b)) {
                let (u, v) = arc_ends(g, face.boundary()[0]);
                let on_all = |c: VertexId| {
                    face.boundary().iter().all(|&a| {
                        let (x, y) = arc_ends(g, a);
                        x == c || y == c
                    })
                };
                Provenance::Fresh(if on_all(u) { u } else { v })
            } else {
                let (u, v) = arc_ends(g, face.boundary()[0]);
                Provenance::Heritable(source.face_of_arc(u, v))
            }
        })
        .collect()
}

/// Provenance for every face of a leapfrog image, indexed by image face id.
pub fn classify_faces(r: &LeapfrogResult) -> &[Provenance] {
    &r.provenance
}

/// A heritable face and the faces around it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Territory {
    pub center: FaceId,
    /// `ring[i]` is across the edge from the `i`-th to the `(i+1)`-th
    /// boundary vertex of the center, starting at its least arc.
    pub ring: Vec<FaceId>,
}

pub fn territory(r: &LeapfrogResult, center: FaceId) -> Result<Territory, LeapfrogError> {
    if center >= r.provenance.len() || !r.provenance[center].is_heritable() {
        return Err(LeapfrogError::NotHeritable(center));
    }
    let face = r.image.face(center);
    let ring = face
        .edges()
        .map(|(a, b)| r.image.face_of_arc(b, a))
        .collect();
    Ok(Territory { center, ring })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateCase {
    /// Both faces fresh: `M⁰` itself.
    M0,
    /// One heritable face: three alternate ring hexagons flipped.
    M1,
    /// Two heritable faces with common ring hexagons.
    M2,
    /// Two heritable faces with no common ring hexagon.
    M3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub case: CertificateCase,
    /// Ring hexagons whose edges were flipped against `M⁰`.
    pub flipped: Vec<FaceId>,
    pub matching: Matching,
}

fn alternate(ring: &[FaceId], parity: usize) -> Vec<FaceId> {
    ring.iter().skip(parity).step_by(2).copied().collect()
}

fn flip(r: &LeapfrogResult, faces: &BTreeSet<FaceId>) -> Option<Matching> {
    let mut edges: BTreeSet<(usize, usize)> = r.m0.edges().into_iter().collect();
    for &h in faces {
        for (a, b) in r.image.face(h).edges() {
            let e = (a.min(b), a.max(b));
            if !edges.remove(&e) {
                edges.insert(e);
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Matching::from_edges(r.image.vertex_count(), &edges)
        .ok()
        .filter(Matching::is_perfect)
}

/// A perfect matching alternating on two disjoint hexagons of a leapfrog
/// image, following the case split by heritable versus fresh faces.
///
/// With one heritable hexagon the odd ring triple is tried before the even
/// one. With two heritable hexagons sharing ring faces, each common face is
/// tried in turn with the triples of both rings that contain it. Every
/// candidate is validated before it is returned.
pub fn two_resonance_certificate(
    r: &LeapfrogResult,
    f1: FaceId,
    f2: FaceId,
) -> Result<Certificate, LeapfrogError> {
    let faces = r.image.faces().len();
    for h in [f1, f2] {
        if h >= faces || !r.image.is_hexagon(h) {
            return Err(LeapfrogError::NotHexagon(h));
        }
    }
    if f1 == f2 || !r.image.faces_disjoint(f1, f2) {
        return Err(LeapfrogError::NotDisjoint(f1, f2));
    }
    let ok = |m: &Matching| {
        m.is_alternating(r.image.face(f1).boundary())
            && m.is_alternating(r.image.face(f2).boundary())
    };
    let heritable = |h: FaceId| r.provenance[h].is_heritable();
    let mut candidates: Vec<(CertificateCase, BTreeSet<FaceId>)> = Vec::new();
    match (heritable(f1), heritable(f2)) {
        (false, false) => candidates.push((CertificateCase::M0, BTreeSet::new())),
        (true, false) | (false, true) => {
            let center = if heritable(f1) { f1 } else { f2 };
            let ring = territory(r, center)?.ring;
            for parity in [1, 0] {
                candidates.push((CertificateCase::M1, alternate(&ring, parity).into_iter().collect()));
            }
        }
        (true, true) => {
            let ring1 = territory(r, f1)?.ring;
            let ring2 = territory(r, f2)?.ring;
            let common: Vec<FaceId> = ring1.iter().copied().filter(|h| ring2.contains(h)).collect();
            let case = if common.is_empty() {
                CertificateCase::M3
            } else {
                CertificateCase::M2
            };
            let pos = |ring: &[FaceId], h: FaceId| ring.iter().position(|&x| x == h).unwrap();
            for &h in &common {
                let mut set: BTreeSet<FaceId> = alternate(&ring1, pos(&ring1, h) % 2).into_iter().collect();
                set.extend(alternate(&ring2, pos(&ring2, h) % 2));
                candidates.push((case, set));
            }
            for p1 in [1, 0] {
                for p2 in [1, 0] {
                    let mut set: BTreeSet<FaceId> = alternate(&ring1, p1).into_iter().collect();
                    set.extend(alternate(&ring2, p2));
                    candidates.push((case, set));
                }
            }
        }
    }
    candidates
        .into_iter()
        .find_map(|(case, set)| {
            let m = flip(r, &set)?;
            ok(&m).then(|| Certificate {
                case,
                flipped: set.into_iter().collect(),
                matching: m,
            })
        })
        .ok_or(LeapfrogError::NoCertificate(f1, f2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_graph, CatalogName};
    use crate::matching::alternating_faces;

    fn lf(name: CatalogName) -> LeapfrogResult {
        leapfrog(&catalog_graph(name).graph)
    }

    #[test]
    fn dodecahedron_leapfrogs_to_c60() {
        let r = lf(CatalogName::F20);
        assert_eq!(r.image.vertex_count(), 60);
        let c60 = catalog_graph(CatalogName::C60).graph;
        assert_eq!(r.image.graph().canonical_code(), c60.graph().canonical_code());
        for &p in r.image.pentagons() {
            assert!(r.provenance[p].is_heritable());
        }
        for &h in r.image.hexagons() {
            assert!(!r.provenance[h].is_heritable());
        }
        let alt = alternating_faces(&r.image, &r.m0).unwrap();
        assert_eq!(alt, r.image.hexagons().to_vec());
    }

    #[test]
    fn f24_counts() {
        let r = lf(CatalogName::F24);
        assert_eq!(r.image.vertex_count(), 72);
        assert_eq!(r.heritable_faces().len(), 14);
        assert_eq!(r.fresh_faces().len(), 24);
        let heritable_hexagons = r
            .heritable_faces()
            .into_iter()
            .filter(|&f| r.image.is_hexagon(f))
            .count();
        assert_eq!(heritable_hexagons, 2);
    }

    #[test]
    fn fresh_faces_surround_distinct_vertices() {
        let r = lf(CatalogName::F28);
        let mut centers: Vec<_> = r
            .fresh_faces()
            .into_iter()
            .map(|f| match r.provenance[f] {
                Provenance::Fresh(v) => v,
                Provenance::Heritable(_) => unreachable!(),
            })
            .collect();
        centers.sort_unstable();
        assert_eq!(centers, (0..28).collect::<Vec<_>>());
    }

    #[test]
    fn territories_are_fresh_rings() {
        let r = lf(CatalogName::F24);
        let heritable = r.heritable_faces();
        for &c in &heritable {
            let t = territory(&r, c).unwrap();
            assert_eq!(t.ring.len(), r.image.face(c).size());
            let distinct: BTreeSet<_> = t.ring.iter().collect();
            assert_eq!(distinct.len(), t.ring.len());
            assert!(t.ring.iter().all(|&h| !r.provenance[h].is_heritable()));
            for i in 0..t.ring.len() {
                assert!(r.image.adjoins(t.ring[i], t.ring[(i + 1) % t.ring.len()]));
            }
        }
        for (i, &a) in heritable.iter().enumerate() {
            for &b in &heritable[..i] {
                let ra = territory(&r, a).unwrap().ring;
                let rb = territory(&r, b).unwrap().ring;
                let shared: Vec<_> = ra.iter().filter(|h| rb.contains(h)).copied().collect();
                assert!(shared.is_empty() || shared.len() == 2);
                if shared.len() == 2 {
                    assert!(r.image.adjoins(shared[0], shared[1]));
                }
            }
        }
        let fresh = r.fresh_faces()[0];
        assert_eq!(territory(&r, fresh), Err(LeapfrogError::NotHeritable(fresh)));
    }

    #[test]
    fn certificate_cases() {
        let r = lf(CatalogName::F20);
        let hs = r.image.hexagons().to_vec();
        let (a, b) = hs
            .iter()
            .flat_map(|&a| hs.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| a != b && r.image.faces_disjoint(a, b))
            .unwrap();
        let c = two_resonance_certificate(&r, a, b).unwrap();
        assert_eq!(c.case, CertificateCase::M0);
        assert_eq!(c.matching, r.m0);

        let r = lf(CatalogName::F24);
        let heritable: Vec<_> = r
            .heritable_faces()
            .into_iter()
            .filter(|&f| r.image.is_hexagon(f))
            .collect();
        let f1 = heritable[0];
        let ring = territory(&r, f1).unwrap().ring;
        let f2 = r
            .fresh_faces()
            .into_iter()
            .find(|&h| !ring.contains(&h) && r.image.faces_disjoint(f1, h))
            .unwrap();
        let c = two_resonance_certificate(&r, f1, f2).unwrap();
        assert_eq!(c.case, CertificateCase::M1);
        assert_eq!(c.flipped.len(), 3);
        assert!(c.matching.validate(&r.image.graph().to_graph()).is_ok());

        let c = two_resonance_certificate(&r, heritable[0], heritable[1]).unwrap();
        assert!(matches!(c.case, CertificateCase::M2 | CertificateCase::M3));
        assert!(c.matching.is_alternating(r.image.face(heritable[1]).boundary()));
        assert_eq!(
            two_resonance_certificate(&r, f1, f1),
            Err(LeapfrogError::NotDisjoint(f1, f1))
        );
    }
}
