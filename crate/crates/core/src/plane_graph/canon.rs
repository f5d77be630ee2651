//! Canonical codes for plane cubic graphs.
//!
//! A code is produced by breadth-first labeling from a directed starting arc,
//! reading each vertex's neighbors around the rotation starting from the
//! neighbor it was reached from. Minimizing over all arcs and both
//! orientations gives a code that is equal for two graphs exactly when they
//! are isomorphic as plane graphs, reflections included.

use std::cmp::Ordering;
use std::fmt;

use sha2::{Digest, Sha256};

use super::EmbeddedGraph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Hex SHA-256 of the code, used as a compact graph identity.
    pub fn digest(&self) -> String {
        Sha256::digest(&self.0)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", &self.digest()[..16])
    }
}

/// Writes the BFS code for one start into `out`, giving up as soon as the
/// prefix exceeds `best`. Returns the comparison against `best`.
#[allow(clippy::too_many_arguments)]
fn bfs_code(
    g: &EmbeddedGraph,
    start: usize,
    first: usize,
    mirrored: bool,
    best: Option<&[u32]>,
    out: &mut Vec<u32>,
    label: &mut [u32],
    entry: &mut [usize],
    order: &mut Vec<usize>,
) -> Ordering {
    const NONE: u32 = u32::MAX;
    out.clear();
    order.clear();
    label.fill(NONE);
    label[start] = 0;
    entry[start] = first;
    order.push(start);
    let mut ord = if best.is_some() {
        Ordering::Equal
    } else {
        Ordering::Less
    };
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        let rot = g.neighbors(x);
        let s = g.slot(x, entry[x]);
        for t in 0..3 {
            let k = if mirrored { (s + 3 - t) % 3 } else { (s + t) % 3 };
            let y = rot[k];
            if label[y] == NONE {
                label[y] = order.len() as u32;
                entry[y] = x;
                order.push(y);
            }
            out.push(label[y]);
            if ord == Ordering::Equal {
                let b = best.unwrap();
                ord = label[y].cmp(&b[out.len() - 1]);
                if ord == Ordering::Greater {
                    return ord;
                }
            }
        }
    }
    ord
}

pub(super) fn canonical_code(g: &EmbeddedGraph) -> CanonicalCode {
    let n = g.vertex_count();
    let mut best: Vec<u32> = Vec::new();
    let mut have_best = false;
    let mut cur = Vec::with_capacity(3 * n);
    let mut label = vec![0u32; n];
    let mut entry = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for mirrored in [false, true] {
        for start in 0..n {
            for first in g.neighbors(start) {
                let ord = bfs_code(
                    g,
                    start,
                    first,
                    mirrored,
                    have_best.then_some(best.as_slice()),
                    &mut cur,
                    &mut label,
                    &mut entry,
                    &mut order,
                );
                if ord == Ordering::Less {
                    std::mem::swap(&mut best, &mut cur);
                    have_best = true;
                }
            }
        }
    }
    let mut bytes = Vec::with_capacity(4 * (best.len() + 1));
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for x in best {
        bytes.extend_from_slice(&x.to_be_bytes());
    }
    CanonicalCode(bytes)
}

#[cfg(test)]
mod tests {
    use crate::catalog::{catalog_graph, CatalogName};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn invariant_under_relabeling_and_mirroring() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for name in [CatalogName::F28, CatalogName::F36_1, CatalogName::C70] {
            let g = catalog_graph(name).graph.into_graph();
            let code = g.canonical_code();
            for _ in 0..5 {
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                perm.shuffle(&mut rng);
                let h = g.relabel(&perm);
                assert_eq!(h.canonical_code(), code);
                assert_eq!(h.mirror().canonical_code(), code);
            }
        }
    }

    #[test]
    fn distinguishes_catalog_entries() {
        let codes: Vec<_> = CatalogName::ALL
            .iter()
            .map(|&n| catalog_graph(n).graph.graph().canonical_code())
            .collect();
        for i in 0..codes.len() {
            for j in 0..i {
                assert_ne!(codes[i], codes[j]);
            }
        }
    }

    #[test]
    fn deterministic() {
        let g = catalog_graph(CatalogName::F24).graph.into_graph();
        assert_eq!(g.canonical_code(), g.canonical_code());
        assert_eq!(g.canonical_code().digest().len(), 64);
    }
}
