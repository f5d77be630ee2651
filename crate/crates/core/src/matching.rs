//! Matchings in general graphs.
//!
//! Maximum matchings come from Edmonds' blossom algorithm: augmenting paths
//! are grown breadth-first from each free vertex, and odd cycles met along the
//! way are shrunk to their base. Vertices are scanned in ascending id and
//! neighbor lists are sorted, so the result is a pure function of the graph.

use std::collections::VecDeque;
use std::fmt::Write;

use thiserror::Error;

use crate::graph::Graph;
use crate::plane_graph::{Face, FaceId, FullereneGraph, Subgraph, VertexId};

/// Default `|S|` bound for [`tutte_witness`].
pub const DEFAULT_TUTTE_BOUND: usize = 4;
const MAX_TUTTE_BOUND: usize = 6;
const MAX_TUTTE_VERTICES: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("edges {0:?} and {1:?} share a vertex")]
    NotIndependent((usize, usize), (usize, usize)),
    #[error("edge {0}-{1} is not in the host graph")]
    MissingEdge(usize, usize),
    #[error("cycle is not alternating with respect to the matching")]
    NotAlternating,
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("faces {0} and {1} are not disjoint")]
    FacesOverlap(FaceId, FaceId),
    #[error("perfect matching enumeration exceeded cap of {0}")]
    CapExceeded(usize),
    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),
}

impl MatchingError {
    /// Errors raised by a size guard or enumeration cap rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            MatchingError::CapExceeded(_) | MatchingError::GuardExceeded(_)
        )
    }
}

/// A set of pairwise vertex-disjoint edges on a host with `vertex_count` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
}

impl Matching {
    pub fn empty(vertex_count: usize) -> Self {
        Matching {
            mate: vec![None; vertex_count],
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, MatchingError> {
        let mut m = Matching::empty(vertex_count);
        let mut owner: Vec<Option<(usize, usize)>> = vec![None; vertex_count];
        for &(u, v) in edges {
            for x in [u, v] {
                if let Some(prev) = owner[x] {
                    return Err(MatchingError::NotIndependent(prev, (u, v)));
                }
                owner[x] = Some((u, v));
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        Ok(m)
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v]
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.mate[u] == Some(v)
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Covered vertices, ascending.
    pub fn covered(&self) -> Vec<VertexId> {
        (0..self.mate.len())
            .filter(|&v| self.mate[v].is_some())
            .collect()
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect()
    }

    /// Checks that every edge exists in `host`.
    pub fn validate(&self, host: &Graph) -> Result<(), MatchingError> {
        for (u, v) in self.edges() {
            if u >= host.vertex_count() || v >= host.vertex_count() || !host.has_edge(u, v) {
                return Err(MatchingError::MissingEdge(u, v));
            }
        }
        Ok(())
    }

    /// Sorted `u-v` lines, one edge per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u}-{v}").unwrap();
        }
        out
    }

    /// True if the closed walk `cycle` is even and alternates in and off the matching.
    pub fn is_alternating(&self, cycle: &[VertexId]) -> bool {
        alternation_parity(self, cycle).is_some()
    }

    /// Flips an alternating cycle: matched edges leave, unmatched ones enter.
    pub fn symmetric_difference(&self, cycle: &[VertexId]) -> Result<Matching, MatchingError> {
        let parity = alternation_parity(self, cycle).ok_or(MatchingError::NotAlternating)?;
        let k = cycle.len();
        let mut out = self.clone();
        for i in (0..k).filter(|i| i % 2 != parity) {
            let (u, v) = (cycle[i], cycle[(i + 1) % k]);
            out.mate[u] = Some(v);
            out.mate[v] = Some(u);
        }
        Ok(out)
    }

    /// Lifts a matching of `sub` (local ids) into its parent's vertex ids.
    pub fn lift(&self, sub: &Subgraph<'_>) -> Matching {
        let map = sub.retained();
        let mut out = Matching::empty(sub.parent().vertex_count());
        for (u, v) in self.edges() {
            out.mate[map[u]] = Some(map[v]);
            out.mate[map[v]] = Some(map[u]);
        }
        out
    }

    /// Adds the edges `(b0 b1), (b2 b3), ...` of an even face whose vertices are all free.
    pub(crate) fn cover_face(&mut self, face: &Face) {
        let b = face.boundary();
        for pair in b.chunks(2) {
            self.mate[pair[0]] = Some(pair[1]);
            self.mate[pair[1]] = Some(pair[0]);
        }
    }
}

/// Which of the two edge classes of `cycle` is matched (0: edges starting at
/// even positions), or `None` if the cycle does not alternate.
fn alternation_parity(m: &Matching, cycle: &[VertexId]) -> Option<usize> {
    let k = cycle.len();
    if k < 2 || k % 2 == 1 {
        return None;
    }
    let matched = |i: usize| m.contains(cycle[i], cycle[(i + 1) % k]);
    let parity = if matched(0) { 0 } else { 1 };
    (0..k)
        .all(|i| matched(i) == (i % 2 == parity))
        .then_some(parity)
}

/// Maximum-cardinality matching by Edmonds' blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.vertex_count() % 2 == 1 {
        return false;
    }
    maximum_matching(g).is_perfect()
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

const NIL: usize = usize::MAX;

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NIL; n],
            parent: vec![NIL; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Matching {
        for root in 0..self.g.vertex_count() {
            if self.mate[root] != NIL {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                self.augment(end);
            }
        }
        Matching {
            mate: self
                .mate
                .iter()
                .map(|&m| (m != NIL).then_some(m))
                .collect(),
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NIL {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.fill(false);
        self.parent.fill(NIL);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Vertices of the given faces, after checking they are pairwise disjoint.
pub fn disjoint_face_vertices(
    f: &FullereneGraph,
    faces: &[FaceId],
) -> Result<Vec<VertexId>, MatchingError> {
    for (i, &a) in faces.iter().enumerate() {
        for &b in &faces[..i] {
            if a == b || !f.faces_disjoint(a, b) {
                return Err(MatchingError::FacesOverlap(b, a));
            }
        }
    }
    Ok(f.face_vertices(faces))
}

/// True if deleting the (pairwise disjoint) faces leaves a graph with a perfect matching.
pub fn is_central(f: &FullereneGraph, faces: &[FaceId]) -> Result<bool, MatchingError> {
    let removed = disjoint_face_vertices(f, faces)?;
    let sub = f
        .delete_vertices(&removed)
        .expect("face vertices belong to the graph");
    Ok(has_perfect_matching(sub.graph()))
}

/// A set `S` whose deletion leaves more odd components than `|S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteWitness {
    pub s: Vec<VertexId>,
    pub odd_components: Vec<Vec<VertexId>>,
}

fn odd_components_without(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|v| !s.contains(v)).collect();
    g.induced(&keep)
        .components()
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(|c| c.into_iter().map(|v| keep[v]).collect())
        .collect()
}

/// Searches all `S` with `|S| <= bound`, smallest first then lexicographic.
/// Finding nothing does not prove that a perfect matching exists.
pub fn tutte_witness(g: &Graph, bound: usize) -> Result<Option<TutteWitness>, MatchingError> {
    if bound > MAX_TUTTE_BOUND || g.vertex_count() > MAX_TUTTE_VERTICES {
        return Err(MatchingError::GuardExceeded(format!(
            "Tutte search limited to |S| <= {MAX_TUTTE_BOUND} on {MAX_TUTTE_VERTICES} vertices"
        )));
    }
    let n = g.vertex_count();
    for size in 0..=bound.min(n) {
        let mut s: Vec<usize> = (0..size).collect();
        loop {
            let odd = odd_components_without(g, &s);
            if odd.len() > s.len() {
                return Ok(Some(TutteWitness {
                    s,
                    odd_components: odd,
                }));
            }
            // next combination
            let mut i = size;
            while i > 0 && s[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            s[i - 1] += 1;
            for j in i..size {
                s[j] = s[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

/// [`tutte_witness`] on a vertex-deleted subgraph, reported in parent ids.
pub fn tutte_witness_in(
    sub: &Subgraph<'_>,
    bound: usize,
) -> Result<Option<TutteWitness>, MatchingError> {
    let map = sub.retained();
    Ok(tutte_witness(sub.graph(), bound)?.map(|w| TutteWitness {
        s: w.s.iter().map(|&v| map[v]).collect(),
        odd_components: w
            .odd_components
            .iter()
            .map(|c| c.iter().map(|&v| map[v]).collect())
            .collect(),
    }))
}

/// Faces whose boundary alternates with respect to a perfect matching.
pub fn alternating_faces(f: &FullereneGraph, m: &Matching) -> Result<Vec<FaceId>, MatchingError> {
    if m.vertex_count() != f.vertex_count() || !m.is_perfect() {
        return Err(MatchingError::NotPerfect);
    }
    Ok((0..f.faces().len())
        .filter(|&id| m.is_alternating(f.face(id).boundary()))
        .collect())
}

/// Every perfect matching of a graph, each exactly once.
///
/// Backtracks on the least uncovered vertex, trying its neighbors in
/// ascending order. Yields an error (then stops) once more than `cap`
/// matchings have been produced.
pub struct PerfectMatchings<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    // (vertex, index of the neighbor currently matched to it)
    stack: Vec<(usize, usize)>,
    cap: usize,
    produced: usize,
    started: bool,
    done: bool,
}

pub fn perfect_matchings(g: &Graph, cap: usize) -> PerfectMatchings<'_> {
    PerfectMatchings {
        g,
        mate: vec![NIL; g.vertex_count()],
        stack: Vec::new(),
        cap,
        produced: 0,
        started: false,
        done: g.vertex_count() % 2 == 1,
    }
}

impl PerfectMatchings<'_> {
    fn first_free(&self) -> Option<usize> {
        self.mate.iter().position(|&m| m == NIL)
    }

    /// Matches `v` to its first free neighbor at index `>= from`.
    fn place(&mut self, v: usize, from: usize) -> bool {
        let ns = self.g.neighbors(v);
        for (i, &w) in ns.iter().enumerate().skip(from) {
            if self.mate[w] == NIL && w != v {
                self.mate[v] = w;
                self.mate[w] = v;
                self.stack.push((v, i));
                return true;
            }
        }
        false
    }

    /// Undo the top choice and move it to the next candidate; pops exhausted frames.
    fn backtrack(&mut self) -> bool {
        while let Some((v, i)) = self.stack.pop() {
            let w = self.mate[v];
            self.mate[v] = NIL;
            self.mate[w] = NIL;
            if self.place(v, i + 1) {
                return true;
            }
        }
        false
    }

    /// Extends the current partial matching greedily-with-backtracking to a full one.
    fn descend(&mut self) -> bool {
        loop {
            match self.first_free() {
                None => return true,
                Some(v) => {
                    if !self.place(v, 0) && !self.backtrack() {
                        return false;
                    }
                }
            }
        }
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = Result<Matching, MatchingError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.descend()
        } else {
            self.backtrack() && self.descend()
        };
        if !found {
            self.done = true;
            return None;
        }
        self.produced += 1;
        if self.produced > self.cap {
            self.done = true;
            return Some(Err(MatchingError::CapExceeded(self.cap)));
        }
        Some(Ok(Matching {
            mate: self.mate.iter().map(|&m| Some(m)).collect(),
        }))
    }
}

/// Collects [`perfect_matchings`], failing if the cap is exceeded.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<Matching>, MatchingError> {
    perfect_matchings(g, cap).collect()
}
