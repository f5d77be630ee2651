//! Cubic plane graphs given by rotation systems.
//!
//! An [`EmbeddedGraph`] stores, for every vertex, its three neighbors in
//! clockwise order. Faces are never part of the input: they are traced from
//! the rotation with a fixed convention (see [`EmbeddedGraph::faces`]), so two
//! runs over the same file always produce the same face ids.

mod canon;
mod connectivity;
mod rot;

use thiserror::Error;

use crate::graph::Graph;

pub use canon::CanonicalCode;
pub use rot::{parse_graph, write_graph};

pub type VertexId = usize;
pub type FaceId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("non-cubic vertex {vertex}: {degree} neighbors")]
    NonCubic { vertex: usize, degree: usize },
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("vertex {0} is adjacent to itself")]
    Loop(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} twice")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("asymmetric adjacency: {0} lists {1} but {1} does not list {0}")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("non-spherical embedding: V - E + F = {0}")]
    NonSpherical(i64),
    #[error("face {face} has size {size}, expected 5 or 6")]
    FaceSize { face: FaceId, size: usize },
    #[error("face {0} boundary is not a simple cycle")]
    NonSimpleFace(FaceId),
    #[error("expected 12 pentagonal faces, found {0}")]
    PentagonCount(usize),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
}

/// A connected cubic simple graph with a spherical rotation system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    rotation: Vec<[VertexId; 3]>,
}

impl EmbeddedGraph {
    /// Validates a rotation system (clockwise neighbor triples).
    pub fn from_rotation(rotation: Vec<[VertexId; 3]>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (v, ns) in rotation.iter().enumerate() {
            for (i, &w) in ns.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::UnknownVertex(w));
                }
                if w == v {
                    return Err(GraphError::Loop(v));
                }
                if ns[..i].contains(&w) {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                }
            }
        }
        for (v, ns) in rotation.iter().enumerate() {
            for &w in ns {
                if !rotation[w].contains(&v) {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        let g = EmbeddedGraph { rotation };
        if !g.to_graph().is_connected() {
            return Err(GraphError::Disconnected);
        }
        let faces = g.trace_faces().len() as i64;
        let euler = n as i64 - g.edge_count() as i64 + faces;
        if euler != 2 {
            return Err(GraphError::NonSpherical(euler));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.rotation.len() / 2
    }

    pub fn rotation(&self) -> &[[VertexId; 3]] {
        &self.rotation
    }

    /// Clockwise neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> [VertexId; 3] {
        self.rotation[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Slot of `v` in the rotation at `u`.
    pub(crate) fn slot(&self, u: VertexId, v: VertexId) -> usize {
        self.rotation[u]
            .iter()
            .position(|&w| w == v)
            .expect("arc not in graph")
    }

    /// Dense index of the arc `u -> v` in `0..3n`.
    pub fn arc_index(&self, u: VertexId, v: VertexId) -> usize {
        3 * u + self.slot(u, v)
    }

    /// The neighbor that immediately follows `u` in the clockwise rotation at `v`.
    pub fn next_cw(&self, v: VertexId, u: VertexId) -> VertexId {
        self.rotation[v][(self.slot(v, u) + 1) % 3]
    }

    /// Face-tracing successor of the arc `u -> v`.
    pub fn successor(&self, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
        (v, self.next_cw(v, u))
    }

    pub fn to_graph(&self) -> Graph {
        let edges = self.edges();
        Graph::from_edges(self.vertex_count(), &edges)
    }

    /// The same embedding seen from the other side of the sphere.
    pub fn mirror(&self) -> EmbeddedGraph {
        EmbeddedGraph {
            rotation: self.rotation.iter().map(|&[a, b, c]| [c, b, a]).collect(),
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> EmbeddedGraph {
        let mut rotation = vec![[0; 3]; self.rotation.len()];
        for (v, ns) in self.rotation.iter().enumerate() {
            rotation[perm[v]] = ns.map(|w| perm[w]);
        }
        EmbeddedGraph { rotation }
    }

    fn trace_faces(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; 3 * n];
        let mut out = Vec::new();
        for u in 0..n {
            for slot in 0..3 {
                if seen[3 * u + slot] {
                    continue;
                }
                let (mut a, mut b) = (u, self.rotation[u][slot]);
                let mut boundary = Vec::new();
                loop {
                    let idx = self.arc_index(a, b);
                    if seen[idx] {
                        break;
                    }
                    seen[idx] = true;
                    boundary.push(a);
                    (a, b) = self.successor(a, b);
                }
                out.push(boundary);
            }
        }
        out
    }

    /// Traces all faces. The successor of arc `(u, v)` is `(v, w)` where `w`
    /// follows `u` clockwise at `v`. Each face starts at its lexicographically
    /// least arc and faces are numbered in order of that arc.
    pub fn faces(&self) -> FaceSet {
        let mut traced: Vec<Vec<VertexId>> = self
            .trace_faces()
            .into_iter()
            .map(|b| {
                let len = b.len();
                let start = (0..len)
                    .min_by_key(|&i| (b[i], b[(i + 1) % len]))
                    .unwrap_or(0);
                let mut rotated = b[start..].to_vec();
                rotated.extend_from_slice(&b[..start]);
                rotated
            })
            .collect();
        traced.sort_by_key(|b| (b[0], b[1 % b.len()]));
        let mut arc_face = vec![0; 3 * self.vertex_count()];
        for (id, b) in traced.iter().enumerate() {
            for i in 0..b.len() {
                arc_face[self.arc_index(b[i], b[(i + 1) % b.len()])] = id;
            }
        }
        FaceSet {
            faces: traced.into_iter().map(|boundary| Face { boundary }).collect(),
            arc_face,
        }
    }

    /// Induced subgraph on the vertices outside `removed`.
    pub fn delete_vertices(&self, removed: &[VertexId]) -> Result<Subgraph<'_>, GraphError> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(GraphError::UnknownVertex(v));
            }
            gone[v] = true;
        }
        let retained: Vec<_> = (0..n).filter(|&v| !gone[v]).collect();
        let graph = self.to_graph().induced(&retained);
        Ok(Subgraph {
            parent: self,
            retained,
            graph,
        })
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }
}

/// A face boundary as a cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    boundary: Vec<VertexId>,
}

impl Face {
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn size(&self) -> usize {
        self.boundary.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.boundary.contains(&v)
    }

    /// Boundary edges in traversal order, as `(b[i], b[i+1])`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let len = self.boundary.len();
        (0..len).map(move |i| (self.boundary[i], self.boundary[(i + 1) % len]))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        !self.boundary.iter().any(|&v| other.contains(v))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges()
            .any(|(a, b)| (a == u && b == v) || (a == v && b == u))
    }
}

/// All faces of an embedded graph plus the arc-to-face lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    arc_face: Vec<FaceId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn get(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Face> {
        self.faces.iter()
    }

    /// Face traced by the arc with dense index `arc` (see [`EmbeddedGraph::arc_index`]).
    pub fn face_of_arc_index(&self, arc: usize) -> FaceId {
        self.arc_face[arc]
    }
}

/// A validated fullerene: 12 pentagons, every other face a hexagon.
#[derive(Clone, Debug)]
pub struct FullereneGraph {
    graph: EmbeddedGraph,
    faces: FaceSet,
    pentagons: Vec<FaceId>,
    hexagons: Vec<FaceId>,
    face_adjacency: Vec<Vec<FaceId>>,
    vertex_faces: Vec<[FaceId; 3]>,
}

impl FullereneGraph {
    /// Checks the fullerene face conditions, reporting the first violation.
    pub fn validate(graph: EmbeddedGraph) -> Result<Self, GraphError> {
        let faces = graph.faces();
        let mut pentagons = Vec::new();
        let mut hexagons = Vec::new();
        for (id, face) in faces.iter().enumerate() {
            match face.size() {
                5 => pentagons.push(id),
                6 => hexagons.push(id),
                size => return Err(GraphError::FaceSize { face: id, size }),
            }
            let mut sorted = face.boundary().to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != face.size() {
                return Err(GraphError::NonSimpleFace(id));
            }
        }
        if pentagons.len() != 12 {
            return Err(GraphError::PentagonCount(pentagons.len()));
        }
        let face_adjacency = faces
            .iter()
            .map(|f| {
                f.edges()
                    .map(|(a, b)| faces.face_of_arc_index(graph.arc_index(b, a)))
                    .collect()
            })
            .collect();
        let vertex_faces = (0..graph.vertex_count())
            .map(|v| {
                graph
                    .neighbors(v)
                    .map(|w| faces.face_of_arc_index(graph.arc_index(v, w)))
            })
            .collect();
        Ok(FullereneGraph {
            graph,
            faces,
            pentagons,
            hexagons,
            face_adjacency,
            vertex_faces,
        })
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> EmbeddedGraph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        self.faces.get(id)
    }

    pub fn pentagons(&self) -> &[FaceId] {
        &self.pentagons
    }

    pub fn hexagons(&self) -> &[FaceId] {
        &self.hexagons
    }

    pub fn is_hexagon(&self, id: FaceId) -> bool {
        self.faces.get(id).size() == 6
    }

    /// Faces across each boundary edge of `id`, in boundary order.
    pub fn adjacent_faces(&self, id: FaceId) -> &[FaceId] {
        &self.face_adjacency[id]
    }

    /// True if the two distinct faces share an edge.
    pub fn adjoins(&self, a: FaceId, b: FaceId) -> bool {
        a != b && self.face_adjacency[a].contains(&b)
    }

    pub fn faces_disjoint(&self, a: FaceId, b: FaceId) -> bool {
        self.face(a).is_disjoint(self.face(b))
    }

    /// The three faces around `v`.
    pub fn faces_at(&self, v: VertexId) -> [FaceId; 3] {
        self.vertex_faces[v]
    }

    /// Face to the traced side of the arc `u -> v`.
    pub fn face_of_arc(&self, u: VertexId, v: VertexId) -> FaceId {
        self.faces.face_of_arc_index(self.graph.arc_index(u, v))
    }

    /// Union of the boundaries of `ids`, sorted and deduplicated.
    pub fn face_vertices(&self, ids: &[FaceId]) -> Vec<VertexId> {
        let mut vs: Vec<_> = ids
            .iter()
            .flat_map(|&f| self.face(f).boundary().iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn delete_vertices(&self, removed: &[VertexId]) -> Result<Subgraph<'_>, GraphError> {
        self.graph.delete_vertices(removed)
    }

    /// Brute-force check that no edge cut of at most `k` edges separates two
    /// cycle-bearing components.
    pub fn verify_cyclic_edge_connectivity(&self, k: usize) -> Result<bool, GraphError> {
        connectivity::no_small_cyclic_cut(&self.graph, k)
    }
}

/// The subgraph induced by the vertices a deletion retained.
#[derive(Clone, Debug)]
pub struct Subgraph<'a> {
    parent: &'a EmbeddedGraph,
    retained: Vec<VertexId>,
    graph: Graph,
}

impl<'a> Subgraph<'a> {
    pub fn parent(&self) -> &'a EmbeddedGraph {
        self.parent
    }

    /// Parent ids of the retained vertices, ascending. Local id `i` is `retained()[i]`.
    pub fn retained(&self) -> &[VertexId] {
        &self.retained
    }

    /// The induced graph in local ids.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.retained.len()
    }

    pub fn is_bipartite(&self) -> bool {
        self.graph.two_coloring().is_ok()
    }

    /// An odd cycle in parent ids, if the subgraph is not bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<VertexId>> {
        self.graph
            .two_coloring()
            .err()
            .map(|c| c.into_iter().map(|v| self.retained[v]).collect())
    }
}
