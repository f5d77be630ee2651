//! Polygonal rings and pentagonal fragments.
//!
//! A polygonal ring is a cyclic sequence of faces `f0 .. f(l-1)` where
//! consecutive faces share one edge, the shared edges form a matching and
//! non-consecutive faces are disjoint. Its union is an annulus bounded by two
//! cycles; the side statistics below are measured on the disk each cycle
//! bounds away from the ring.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{FaceId, FullereneGraph, VertexId};

/// Longest pentagonal ring possible on a fullerene.
pub const MAX_PENTAGONAL_RING: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("faces {0:?} do not form a polygonal ring")]
    NotARing(Vec<FaceId>),
    #[error("ring {faces:?} violates {identity}")]
    Identity {
        faces: Vec<FaceId>,
        identity: &'static str,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceFilter {
    PentagonsOnly,
    Any,
}

/// One boundary cycle of a ring and the disk it bounds away from the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Side {
    pub cycle: Vec<VertexId>,
    /// Cycle vertices of degree 2 in the ring.
    pub s: usize,
    /// Vertices strictly inside.
    pub r: usize,
    pub n5: usize,
    pub n6: usize,
}

impl Side {
    pub fn face_count(&self) -> usize {
        self.n5 + self.n6
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ring {
    pub faces: Vec<FaceId>,
    /// `shared_edges[i]` is common to `faces[i]` and `faces[i + 1]`.
    pub shared_edges: Vec<(VertexId, VertexId)>,
    /// The side with fewer degree-2 vertices.
    pub inner: Side,
    pub outer: Side,
    pub pentagonal: bool,
}

impl Ring {
    pub fn l(&self) -> usize {
        self.faces.len()
    }

    pub fn s(&self) -> usize {
        self.inner.s
    }

    pub fn s_prime(&self) -> usize {
        self.outer.s
    }

    pub fn r(&self) -> usize {
        self.inner.r
    }

    pub fn n5(&self) -> usize {
        self.inner.n5
    }

    pub fn n6(&self) -> usize {
        self.inner.n6
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RingStats {
    pub l: usize,
    pub s: usize,
    pub s_prime: usize,
    pub r: usize,
    pub n5: usize,
    pub n6: usize,
}

fn shared_edge(f: &FullereneGraph, a: FaceId, b: FaceId) -> Option<(VertexId, VertexId)> {
    f.face(a)
        .edges()
        .find(|&(x, y)| f.face_of_arc(y, x) == b)
        .map(|(x, y)| (x.min(y), x.max(y)))
}

fn touch(e: (VertexId, VertexId), g: (VertexId, VertexId)) -> bool {
    e.0 == g.0 || e.0 == g.1 || e.1 == g.0 || e.1 == g.1
}

type Edge = (VertexId, VertexId);

struct Search<'a> {
    f: &'a FullereneGraph,
    max_len: usize,
    allowed: Vec<bool>,
    found: Vec<(Vec<FaceId>, Vec<Edge>)>,
}

impl Search<'_> {
    fn dfs(&mut self, path: &mut Vec<FaceId>, shared: &mut Vec<(VertexId, VertexId)>) {
        let f = self.f;
        let k = path.len();
        let last = path[k - 1];
        for &g in f.adjacent_faces(last) {
            if g <= path[0] || !self.allowed[g] || path.contains(&g) {
                continue;
            }
            if k >= 2 && path[1..k - 1].iter().any(|&h| !f.faces_disjoint(g, h)) {
                continue;
            }
            let e = shared_edge(f, last, g).expect("adjacent faces share an edge");
            if shared.iter().any(|&x| touch(x, e)) {
                continue;
            }
            if k >= 2 && !f.faces_disjoint(g, path[0]) {
                if path[1] < g && f.adjoins(g, path[0]) {
                    let close = shared_edge(f, g, path[0]).unwrap();
                    if !touch(close, e) && !shared.iter().any(|&x| touch(x, close)) {
                        let mut faces = path.clone();
                        faces.push(g);
                        let mut edges = shared.clone();
                        edges.push(e);
                        edges.push(close);
                        self.found.push((faces, edges));
                    }
                }
                continue;
            }
            if k + 1 < self.max_len {
                path.push(g);
                shared.push(e);
                self.dfs(path, shared);
                path.pop();
                shared.pop();
            }
        }
    }
}

/// Every polygonal ring of length at most `max_len`, each once. A ring is
/// listed from its least face id, in the direction whose second face is
/// smaller than its last.
pub fn find_polygonal_rings(f: &FullereneGraph, max_len: usize, filter: FaceFilter) -> Vec<Ring> {
    let allowed: Vec<bool> = (0..f.faces().len())
        .map(|id| filter == FaceFilter::Any || f.face(id).size() == 5)
        .collect();
    let mut search = Search {
        f,
        max_len,
        allowed,
        found: Vec::new(),
    };
    for f0 in 0..f.faces().len() {
        if search.allowed[f0] && max_len >= 3 {
            search.dfs(&mut vec![f0], &mut Vec::new());
        }
    }
    let mut rings: Vec<Ring> = search
        .found
        .into_iter()
        .filter_map(|(faces, edges)| build_ring(f, faces, edges))
        .collect();
    rings.sort_by(|a, b| (a.l(), &a.faces).cmp(&(b.l(), &b.faces)));
    rings
}

/// Ring through the given faces, checked against the ring conditions.
pub fn ring_from_faces(f: &FullereneGraph, faces: &[FaceId]) -> Result<Ring, RingError> {
    let l = faces.len();
    let bad = || RingError::NotARing(faces.to_vec());
    if l < 3 || faces.iter().any(|&x| x >= f.faces().len()) {
        return Err(bad());
    }
    let mut edges = Vec::with_capacity(l);
    for i in 0..l {
        let (a, b) = (faces[i], faces[(i + 1) % l]);
        edges.push(shared_edge(f, a, b).ok_or_else(bad)?);
        for (j, &c) in faces.iter().enumerate().skip(i + 2) {
            if !(i == 0 && j == l - 1) && !f.faces_disjoint(a, c) {
                return Err(bad());
            }
        }
    }
    for i in 0..l {
        for j in 0..i {
            if touch(edges[i], edges[j]) {
                return Err(bad());
            }
        }
    }
    build_ring(f, faces.to_vec(), edges).ok_or_else(bad)
}

fn boundary_cycles(edges: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let mut adj: std::collections::BTreeMap<VertexId, Vec<VertexId>> = Default::default();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for (&start, ns) in &adj {
        if seen.contains(&start) || ns.len() != 2 {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let (mut prev, mut cur) = (start, ns[0].min(ns[1]));
        while cur != start {
            if !seen.insert(cur) || adj[&cur].len() != 2 {
                return Vec::new();
            }
            cycle.push(cur);
            let next = adj[&cur].iter().copied().find(|&x| x != prev).unwrap();
            (prev, cur) = (cur, next);
        }
        cycles.push(cycle);
    }
    if adj.values().any(|ns| ns.len() != 2) {
        return Vec::new();
    }
    cycles
}

/// Faces reachable from `start` without entering `blocked`.
fn flood(f: &FullereneGraph, start: FaceId, blocked: &[bool]) -> Vec<FaceId> {
    let mut seen = vec![false; blocked.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in f.adjacent_faces(x) {
            if !blocked[y] && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

fn build_ring(
    f: &FullereneGraph,
    faces: Vec<FaceId>,
    shared_edges: Vec<(VertexId, VertexId)>,
) -> Option<Ring> {
    let mut in_ring = vec![false; f.faces().len()];
    for &x in &faces {
        in_ring[x] = true;
    }
    let shared: BTreeSet<_> = shared_edges.iter().copied().collect();
    let mut endpoint = vec![false; f.vertex_count()];
    for &(a, b) in &shared_edges {
        endpoint[a] = true;
        endpoint[b] = true;
    }
    let boundary: Vec<_> = faces
        .iter()
        .flat_map(|&x| f.face(x).edges())
        .map(|(a, b)| (a.min(b), a.max(b)))
        .filter(|e| !shared.contains(e))
        .collect();
    let cycles = boundary_cycles(&boundary);
    if cycles.len() != 2 {
        return None;
    }
    let mut sides = Vec::with_capacity(2);
    for cycle in cycles {
        let (a, b) = (cycle[0], cycle[1]);
        let across = [f.face_of_arc(a, b), f.face_of_arc(b, a)]
            .into_iter()
            .find(|&x| !in_ring[x])?;
        let region = flood(f, across, &in_ring);
        let on_cycle: BTreeSet<_> = cycle.iter().copied().collect();
        let r = f
            .face_vertices(&region)
            .into_iter()
            .filter(|v| !on_cycle.contains(v))
            .count();
        let n5 = region.iter().filter(|&&x| f.face(x).size() == 5).count();
        sides.push(Side {
            s: cycle.iter().filter(|&&v| !endpoint[v]).count(),
            r,
            n5,
            n6: region.len() - n5,
            cycle,
        });
    }
    let outer = sides.pop().unwrap();
    let inner = sides.pop().unwrap();
    let key = |side: &Side| {
        let mut vs = side.cycle.clone();
        vs.sort_unstable();
        (side.s, vs)
    };
    let (inner, outer) = if key(&inner) <= key(&outer) {
        (inner, outer)
    } else {
        (outer, inner)
    };
    let pentagonal = faces.iter().all(|&x| f.face(x).size() == 5);
    Some(Ring {
        faces,
        shared_edges,
        inner,
        outer,
        pentagonal,
    })
}

fn check_side(ring: &Ring, side: &Side) -> Result<(), &'static str> {
    let c = side.cycle.len();
    if side.r % 2 != side.s % 2 {
        return Err("r = s (mod 2)");
    }
    if 2 * side.face_count() != side.s + side.r + 2 {
        return Err("n5 + n6 = (s + r + 2) / 2");
    }
    if 5 * side.n5 + 6 * side.n6 != 3 * side.r + side.s + c {
        return Err("face-size sum = 3r + s + |C|");
    }
    if ring.pentagonal {
        let l = ring.l();
        if c != l + side.s {
            return Err("|C| = l + s");
        }
        if 5 * side.n5 + 6 * side.n6 != 2 * side.s + 3 * side.r + l {
            return Err("5 n5 + 6 n6 = 2s + 3r + l");
        }
        if side.n5 + l != 6 + side.s {
            return Err("n5 = 6 + s - l");
        }
        if 2 * (side.n6 + 5) + side.s != 2 * l + side.r {
            return Err("n6 = l + (r - s) / 2 - 5");
        }
    }
    Ok(())
}

/// Recomputes the ring from its faces and checks the counting identities.
///
/// On both sides the disk identities `n5 + n6 = (s + r + 2) / 2`,
/// `5 n5 + 6 n6 = 3r + s + |C|` and `r = s (mod 2)` must hold. For pentagonal
/// rings also `s + s' = l`, `|C| = l + s`, `5 n5 + 6 n6 = 2s + 3r + l`,
/// `n5 = 6 + s - l` and `n6 = l + (r - s)/2 - 5`.
pub fn ring_stats(f: &FullereneGraph, ring: &Ring) -> Result<RingStats, RingError> {
    let fresh = ring_from_faces(f, &ring.faces)?;
    let fail = |identity| RingError::Identity {
        faces: ring.faces.clone(),
        identity,
    };
    if fresh != *ring {
        return Err(fail("recomputed statistics match"));
    }
    if ring.s() > ring.s_prime() {
        return Err(fail("s <= s'"));
    }
    if ring.s() == 1 || ring.s_prime() == 1 {
        return Err(fail("s != 1 and s' != 1"));
    }
    if ring.pentagonal && ring.s() + ring.s_prime() != ring.l() {
        return Err(fail("s + s' = l"));
    }
    check_side(ring, &ring.inner).map_err(fail)?;
    check_side(ring, &ring.outer).map_err(fail)?;
    Ok(RingStats {
        l: ring.l(),
        s: ring.s(),
        s_prime: ring.s_prime(),
        r: ring.r(),
        n5: ring.n5(),
        n6: ring.n6(),
    })
}

pub fn pentagonal_rings(f: &FullereneGraph) -> Vec<Ring> {
    find_polygonal_rings(f, MAX_PENTAGONAL_RING, FaceFilter::PentagonsOnly)
}

/// Least length of a pentagonal ring.
pub fn tau(f: &FullereneGraph) -> Option<usize> {
    pentagonal_rings(f).iter().map(Ring::l).min()
}

/// Problems with a `tau` value: it must lie in `5..=12` and never be 7.
pub fn tau_findings(tau: Option<usize>) -> Vec<String> {
    match tau {
        None => Vec::new(),
        Some(t) if !(5..=12).contains(&t) => vec![format!("tau = {t} outside 5..=12")],
        Some(7) => vec!["tau = 7".to_string()],
        Some(_) => Vec::new(),
    }
}

/// Least `s` over pentagonal rings of length `l`.
pub fn psi(f: &FullereneGraph, l: usize) -> Option<usize> {
    find_polygonal_rings(f, l, FaceFilter::PentagonsOnly)
        .iter()
        .filter(|r| r.l() == l)
        .map(Ring::s)
        .min()
}

/// `(l, psi_l)` for every length with a pentagonal ring.
pub fn psi_table(f: &FullereneGraph) -> Vec<(usize, usize)> {
    let rings = pentagonal_rings(f);
    let mut table: Vec<(usize, usize)> = Vec::new();
    for ring in &rings {
        match table.iter_mut().find(|(l, _)| *l == ring.l()) {
            Some(entry) => entry.1 = entry.1.min(ring.s()),
            None => table.push((ring.l(), ring.s())),
        }
    }
    table.sort_unstable();
    table
}

/// A length-5 ring has a side that is a single face, or both boundary
/// cycles have length 10 and all five ring faces are hexagons.
pub fn length_five_ring_holds(f: &FullereneGraph, ring: &Ring) -> bool {
    if ring.l() != 5 {
        return true;
    }
    let face_bounded = |side: &Side| side.r == 0 && side.face_count() == 1;
    face_bounded(&ring.inner)
        || face_bounded(&ring.outer)
        || (ring.inner.cycle.len() == 10
            && ring.outer.cycle.len() == 10
            && ring.faces.iter().all(|&x| f.is_hexagon(x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Cap {
    R5,
    R6,
}

/// A pentagonal ring of length 5 or 6 around a single face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapWitness {
    pub kind: Cap,
    pub faces: Vec<FaceId>,
    /// The face the inner cycle bounds.
    pub center: FaceId,
}

pub fn detect_r5_r6(f: &FullereneGraph) -> Vec<CapWitness> {
    find_polygonal_rings(f, 6, FaceFilter::PentagonsOnly)
        .into_iter()
        .filter_map(|ring| {
            let kind = match ring.l() {
                5 => Cap::R5,
                6 => Cap::R6,
                _ => return None,
            };
            if ring.s() != 0 || ring.r() != 0 {
                return None;
            }
            let (a, b) = (ring.inner.cycle[0], ring.inner.cycle[1]);
            let center = [f.face_of_arc(a, b), f.face_of_arc(b, a)]
                .into_iter()
                .find(|x| !ring.faces.contains(x))?;
            Some(CapWitness {
                kind,
                faces: ring.faces,
                center,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Shape {
    Pentagon,
    Turtle,
    Other,
}

/// A connected cluster of edge-adjacent pentagons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fragment {
    pub faces: Vec<FaceId>,
    /// Boundary cycle, empty when the cluster is not a disk.
    pub boundary: Vec<VertexId>,
    /// Boundary vertices lying on a single face of the fragment.
    pub w: Vec<VertexId>,
    pub gamma: usize,
    pub pentagonal: bool,
    pub maximal: bool,
    pub shape: Shape,
}

/// Six pentagons: a head, four body pentagons in a rhombus, and a tail.
const TURTLE: [(usize, usize); 7] = [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)];

fn is_turtle(f: &FullereneGraph, faces: &[FaceId]) -> bool {
    if faces.len() != 6 {
        return false;
    }
    let adj = |i: usize, j: usize| f.adjoins(faces[i], faces[j]);
    let edges = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
        .filter(|&(i, j)| adj(i, j))
        .count();
    if edges != TURTLE.len() {
        return false;
    }
    let mut perm = [0, 1, 2, 3, 4, 5];
    permutations(&mut perm, 0, &mut |p| TURTLE.iter().all(|&(a, b)| adj(p[a], p[b])))
}

fn permutations(p: &mut [usize; 6], k: usize, check: &mut impl FnMut(&[usize; 6]) -> bool) -> bool {
    if k == p.len() {
        return check(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations(p, k + 1, check) {
            return true;
        }
        p.swap(k, i);
    }
    false
}

/// Pentagon clusters. A cluster whose union is a disk is a maximal
/// pentagonal fragment; any other cluster is reported with shape `OTHER`
/// and `maximal = false`.
pub fn pentagon_clusters(f: &FullereneGraph) -> Vec<Fragment> {
    let blocked: Vec<bool> = (0..f.faces().len()).map(|x| f.is_hexagon(x)).collect();
    let mut seen = vec![false; blocked.len()];
    let mut out = Vec::new();
    for &p in f.pentagons() {
        if seen[p] {
            continue;
        }
        let faces = flood(f, p, &blocked);
        for &x in &faces {
            seen[x] = true;
        }
        let in_cluster = |x: FaceId| faces.binary_search(&x).is_ok();
        let gamma = faces
            .iter()
            .map(|&x| {
                f.adjacent_faces(x)
                    .iter()
                    .filter(|&&y| in_cluster(y))
                    .count()
            })
            .min()
            .unwrap_or(0);
        let edges: Vec<_> = faces
            .iter()
            .flat_map(|&x| f.face(x).edges())
            .filter(|&(a, b)| !in_cluster(f.face_of_arc(b, a)))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let cycles = boundary_cycles(&edges);
        let disk = cycles.len() == 1;
        let boundary = if disk { cycles[0].clone() } else { Vec::new() };
        let w = boundary
            .iter()
            .copied()
            .filter(|&v| f.faces_at(v).iter().filter(|&&x| in_cluster(x)).count() == 1)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let shape = if !disk {
            Shape::Other
        } else if faces.len() == 1 {
            Shape::Pentagon
        } else if is_turtle(f, &faces) {
            Shape::Turtle
        } else {
            Shape::Other
        };
        out.push(Fragment {
            faces,
            boundary,
            w,
            gamma,
            pentagonal: true,
            maximal: disk,
            shape,
        });
    }
    out
}

/// The clusters that are disks, i.e. the maximal pentagonal fragments.
pub fn maximal_pentagonal_fragments(f: &FullereneGraph) -> Vec<Fragment> {
    pentagon_clusters(f)
        .into_iter()
        .filter(|fr| fr.maximal)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_graph, CatalogName};

    fn g(name: CatalogName) -> FullereneGraph {
        catalog_graph(name).graph
    }

    #[test]
    fn dodecahedron_rings() {
        let f = g(CatalogName::F20);
        let rings = find_polygonal_rings(&f, 5, FaceFilter::PentagonsOnly);
        assert_eq!(rings.len(), 12);
        for ring in &rings {
            assert_eq!((ring.l(), ring.s(), ring.s_prime()), (5, 0, 5));
            let st = ring_stats(&f, ring).unwrap();
            assert_eq!((st.r, st.n5, st.n6), (0, 1, 0));
        }
        assert_eq!(tau(&f), Some(5));
        assert_eq!(psi(&f, 5), Some(0));
        assert_eq!(detect_r5_r6(&f).len(), 12);
    }

    #[test]
    fn barrel_rings() {
        let f = g(CatalogName::F24);
        assert_eq!(tau(&f), Some(6));
        assert_eq!(psi(&f, 6), Some(0));
        let caps = detect_r5_r6(&f);
        assert_eq!(caps.len(), 2);
        assert!(caps.iter().all(|c| c.kind == Cap::R6 && f.is_hexagon(c.center)));
    }

    #[test]
    fn ring_from_faces_rejects_non_rings() {
        let f = g(CatalogName::F20);
        let ring = &find_polygonal_rings(&f, 5, FaceFilter::Any)[0];
        assert_eq!(ring_from_faces(&f, &ring.faces).unwrap(), *ring);
        let mut bad = ring.faces.clone();
        bad.pop();
        assert!(ring_from_faces(&f, &bad).is_err());
    }

    #[test]
    fn tau_sanity() {
        assert!(tau_findings(Some(7)).len() == 1);
        assert!(tau_findings(Some(13)).len() == 1);
        assert!(tau_findings(Some(8)).is_empty());
        assert!(tau_findings(None).is_empty());
    }

    #[test]
    fn fragments() {
        let c60 = g(CatalogName::C60);
        let frs = maximal_pentagonal_fragments(&c60);
        assert_eq!(frs.len(), 12);
        assert!(frs.iter().all(|x| x.shape == Shape::Pentagon && x.gamma == 0));
        assert!(frs.iter().all(|x| x.boundary.len() == 5 && x.w.len() == 5));

        let f20 = g(CatalogName::F20);
        let all = pentagon_clusters(&f20);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].shape, Shape::Other);
        assert!(!all[0].maximal);
        assert!(maximal_pentagonal_fragments(&f20).is_empty());

        let f36 = g(CatalogName::F36_1);
        let frs = maximal_pentagonal_fragments(&f36);
        assert_eq!(frs.len(), 2);
        assert!(frs.iter().all(|x| x.shape == Shape::Turtle && x.gamma == 1));
    }
}
