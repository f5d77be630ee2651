//! Plain undirected simple graphs.
//!
//! Matching and bipartiteness routines operate on [`Graph`]; embedded graphs
//! and their vertex-deleted subgraphs convert into it.

use std::collections::VecDeque;

/// An undirected simple graph on vertices `0..n`, neighbor lists kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        if u == v {
            return;
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Induced subgraph on `keep` (given in the order that defines the new ids).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.adj.len()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { adj }
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colors the graph. On failure returns an odd cycle as a vertex sequence.
    pub fn two_coloring(&self) -> Result<Vec<bool>, Vec<usize>> {
        let n = self.adj.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            parent[w] = v;
                            depth[w] = depth[v] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => {
                            return Err(tree_cycle(v, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }
}

/// Closes the non-tree edge `a`-`b` into a cycle through the BFS tree.
fn tree_cycle(a: usize, b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn pentagon_has_odd_cycle_witness() {
        let g = cycle(5);
        let cyc = g.two_coloring().unwrap_err();
        assert_eq!(cyc.len() % 2, 1);
        let mut sorted = cyc.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn even_cycle_and_empty_are_bipartite() {
        assert!(cycle(6).two_coloring().is_ok());
        assert!(Graph::new(0).two_coloring().is_ok());
    }

    #[test]
    fn induced_relabels() {
        let g = cycle(6);
        let h = g.induced(&[1, 2, 3, 5]);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2));
        assert_eq!(h.components(), vec![vec![0, 1, 2], vec![3]]);
    }
}
