//! Brute-force cyclic edge connectivity for small cubic graphs.

use super::{EmbeddedGraph, GraphError};
use crate::exec::{self, Execution};

pub(crate) const MAX_VERTICES: usize = 100;
pub(crate) const MAX_CUT: usize = 4;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }
}

/// Number of components of `G - removed` that contain a cycle.
fn cyclic_components(n: usize, edges: &[(usize, usize)], removed: &[usize]) -> usize {
    let mut dsu = Dsu::new(n);
    let mut keep = vec![true; edges.len()];
    for &e in removed {
        keep[e] = false;
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if keep[i] {
            dsu.union(u, v);
        }
    }
    let mut verts = vec![0usize; n];
    let mut edge_count = vec![0usize; n];
    for v in 0..n {
        let r = dsu.find(v);
        verts[r] += 1;
    }
    for (i, &(u, _)) in edges.iter().enumerate() {
        if keep[i] {
            let r = dsu.find(u);
            edge_count[r] += 1;
        }
    }
    (0..n)
        .filter(|&r| verts[r] > 0 && edge_count[r] >= verts[r])
        .count()
}

/// Extends `chosen` to every `size`-subset drawn from `lo..m`, lexicographically,
/// stopping at the first one `hit` accepts.
fn any_subset(
    m: usize,
    size: usize,
    lo: usize,
    chosen: &mut Vec<usize>,
    hit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == size {
        return hit(chosen);
    }
    for e in lo..m {
        chosen.push(e);
        let found = any_subset(m, size, e + 1, chosen, hit);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Bridges of `G - removed`, as edge indices.
fn bridges(adj: &[Vec<(usize, usize)>], removed: &[bool]) -> Vec<usize> {
    #[allow(clippy::too_many_arguments)]
    fn visit(
        v: usize,
        via: usize,
        adj: &[Vec<(usize, usize)>],
        removed: &[bool],
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        out: &mut Vec<usize>,
    ) {
        *time += 1;
        disc[v] = *time;
        low[v] = *time;
        for &(w, e) in &adj[v] {
            if removed[e] || e == via {
                continue;
            }
            if disc[w] == 0 {
                visit(w, e, adj, removed, disc, low, time, out);
                low[v] = low[v].min(low[w]);
                if low[w] > disc[v] {
                    out.push(e);
                }
            } else {
                low[v] = low[v].min(disc[w]);
            }
        }
    }
    let n = adj.len();
    let (mut disc, mut low) = (vec![0; n], vec![0; n]);
    let mut time = 0;
    let mut out = Vec::new();
    for v in 0..n {
        if disc[v] == 0 {
            visit(v, usize::MAX, adj, removed, &mut disc, &mut low, &mut time, &mut out);
        }
    }
    out
}

/// True if no set of at most `k` edges leaves two components with cycles.
///
/// If such a set exists, some set `S` of fewer than `k` edges leaves a
/// bridge whose removal does it, so only bridges of `G - S` are tried.
pub(super) fn no_small_cyclic_cut(g: &EmbeddedGraph, k: usize) -> Result<bool, GraphError> {
    let n = g.vertex_count();
    if n > MAX_VERTICES || k > MAX_CUT {
        return Err(GraphError::GuardExceeded(format!(
            "cyclic connectivity brute force limited to {MAX_VERTICES} vertices and cuts of {MAX_CUT} edges"
        )));
    }
    let edges = g.edges();
    let m = edges.len();
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let cut_with_bridge = |s: &[usize]| {
        let mut removed = vec![false; m];
        for &e in s {
            removed[e] = true;
        }
        bridges(&adj, &removed).into_iter().any(|b| {
            let mut cut = s.to_vec();
            cut.push(b);
            cyclic_components(n, &edges, &cut) >= 2
        })
    };
    if k == 0 {
        return Ok(true);
    }
    if cut_with_bridge(&[]) {
        return Ok(false);
    }
    for size in 1..k.min(m + 1) {
        let witness = exec::find_map_first(Execution::Parallel, m, |first| {
            let mut chosen = vec![first];
            let mut hit = |s: &[usize]| cut_with_bridge(s);
            any_subset(m, size, first + 1, &mut chosen, &mut hit).then_some(())
        });
        if witness.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
