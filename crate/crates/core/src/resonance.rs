//! Resonant patterns, k-resonance, sextet polynomials, Clar and Fries numbers.
//!
//! A set of pairwise disjoint hexagons is a resonant pattern when one perfect
//! matching alternates on all of them, which holds exactly when deleting
//! their vertices leaves a graph with a perfect matching. Every independent
//! hexagon set is tested on its own; the per-set tests are independent and
//! run through [`crate::exec`].

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::matching::{
    self, alternating_faces, disjoint_face_vertices, maximum_matching, perfect_matchings,
    Matching, MatchingError,
};
use crate::plane_graph::{FaceId, FullereneGraph, VertexId};

/// Default guard for perfect-matching enumeration.
pub const DEFAULT_PM_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResonanceError {
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("face {0} is not a hexagon")]
    NotHexagon(FaceId),
    #[error("resonance order search stopped at size {0} without a failure")]
    CapExceeded(usize),
}

impl ResonanceError {
    pub fn is_guard(&self) -> bool {
        match self {
            ResonanceError::Matching(e) => e.is_guard(),
            ResonanceError::CapExceeded(_) => true,
            ResonanceError::NotHexagon(_) => false,
        }
    }
}

/// Disjoint hexagons together with a perfect matching alternating on each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonantPattern {
    pub hexagons: Vec<FaceId>,
    pub certificate: Matching,
}

impl ResonantPattern {
    /// Re-checks the certificate against the host.
    pub fn verify(&self, f: &FullereneGraph) -> bool {
        self.certificate.vertex_count() == f.vertex_count()
            && self.certificate.is_perfect()
            && self.certificate.validate(&f.graph().to_graph()).is_ok()
            && self
                .hexagons
                .iter()
                .all(|&h| self.certificate.is_alternating(f.face(h).boundary()))
    }
}

fn check_hexagons(f: &FullereneGraph, hs: &[FaceId]) -> Result<Vec<VertexId>, ResonanceError> {
    if let Some(&bad) = hs.iter().find(|&&h| h >= f.faces().len() || !f.is_hexagon(h)) {
        return Err(ResonanceError::NotHexagon(bad));
    }
    Ok(disjoint_face_vertices(f, hs)?)
}

/// Decides whether `hs` is a resonant pattern, returning a certificate if so.
pub fn is_resonant_pattern(
    f: &FullereneGraph,
    hs: &[FaceId],
) -> Result<Option<ResonantPattern>, ResonanceError> {
    let removed = check_hexagons(f, hs)?;
    let sub = f.delete_vertices(&removed).expect("valid face vertices");
    let m = maximum_matching(sub.graph());
    if !m.is_perfect() {
        return Ok(None);
    }
    let mut certificate = m.lift(&sub);
    for &h in hs {
        certificate.cover_face(f.face(h));
    }
    Ok(Some(ResonantPattern {
        hexagons: hs.to_vec(),
        certificate,
    }))
}

/// Decision-only variant of [`is_resonant_pattern`] for sets already known to be valid.
fn resonant_unchecked(f: &FullereneGraph, hs: &[FaceId]) -> bool {
    let removed = f.face_vertices(hs);
    let sub = f.delete_vertices(&removed).expect("valid face vertices");
    matching::has_perfect_matching(sub.graph())
}

/// The "share a vertex" relation among the hexagons of a fullerene.
#[derive(Clone, Debug)]
pub struct HexagonConflicts {
    hexagons: Vec<FaceId>,
    conflict: Vec<Vec<bool>>,
}

impl HexagonConflicts {
    pub fn new(f: &FullereneGraph) -> Self {
        let hexagons = f.hexagons().to_vec();
        let conflict = hexagons
            .iter()
            .map(|&a| {
                hexagons
                    .iter()
                    .map(|&b| a == b || !f.faces_disjoint(a, b))
                    .collect()
            })
            .collect();
        HexagonConflicts { hexagons, conflict }
    }

    pub fn hexagons(&self) -> &[FaceId] {
        &self.hexagons
    }

    /// Independent sets of size `k + 1` from those of size `k`, in lexicographic order.
    /// Sets hold indices into [`Self::hexagons`].
    fn extend(&self, level: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let h = self.hexagons.len();
        let mut out = Vec::new();
        for set in level {
            let start = set.last().map_or(0, |&x| x + 1);
            for j in start..h {
                if set.iter().all(|&i| !self.conflict[i][j]) {
                    let mut next = set.clone();
                    next.push(j);
                    out.push(next);
                }
            }
        }
        out
    }

    fn to_faces(&self, set: &[usize]) -> Vec<FaceId> {
        set.iter().map(|&i| self.hexagons[i]).collect()
    }

    /// Levels of independent sets by size: `levels()[k]` holds the sets of size `k`.
    pub fn levels(&self) -> Levels<'_> {
        Levels {
            conflicts: self,
            current: Some(vec![Vec::new()]),
        }
    }
}

/// Iterator over successive independent-set levels, starting with `{∅}`.
pub struct Levels<'a> {
    conflicts: &'a HexagonConflicts,
    current: Option<Vec<Vec<usize>>>,
}

impl Iterator for Levels<'_> {
    type Item = Vec<Vec<FaceId>>;

    fn next(&mut self) -> Option<Self::Item> {
        let level = self.current.take()?;
        if level.is_empty() {
            return None;
        }
        let next = self.conflicts.extend(&level);
        let faces = level.iter().map(|s| self.conflicts.to_faces(s)).collect();
        self.current = Some(next);
        Some(faces)
    }
}

/// All sets of `k` pairwise disjoint hexagons, lexicographic in face ids.
pub fn disjoint_hexagon_sets(f: &FullereneGraph, k: usize) -> Vec<Vec<FaceId>> {
    HexagonConflicts::new(f).levels().nth(k).unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(usize),
    /// Every independent hexagon set is resonant.
    All,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::All => f.write_str("ALL"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(k) => s.serialize_u64(*k as u64),
            Order::All => s.serialize_str("ALL"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub order: Order,
    /// Smallest non-resonant independent set, lexicographically first among its size.
    pub failing_set: Option<Vec<FaceId>>,
}

/// The largest `k` such that every set of at most `k` disjoint hexagons is resonant.
///
/// `max_k` bounds the set sizes examined; if sets larger than `max_k` exist
/// and none up to `max_k` failed, the search reports [`ResonanceError::CapExceeded`].
pub fn resonance_order(
    f: &FullereneGraph,
    max_k: Option<usize>,
) -> Result<OrderReport, ResonanceError> {
    resonance_order_with(f, max_k, Execution::default())
}

pub fn resonance_order_with(
    f: &FullereneGraph,
    max_k: Option<usize>,
    exec: Execution,
) -> Result<OrderReport, ResonanceError> {
    let conflicts = HexagonConflicts::new(f);
    for (k, level) in conflicts.levels().enumerate().skip(1) {
        if max_k.is_some_and(|cap| k > cap) {
            return Err(ResonanceError::CapExceeded(k - 1));
        }
        if let Some(i) = exec::position_first(exec, &level, |s| !resonant_unchecked(f, s)) {
            return Ok(OrderReport {
                order: Order::Finite(k - 1),
                failing_set: Some(level[i].clone()),
            });
        }
    }
    Ok(OrderReport {
        order: Order::All,
        failing_set: None,
    })
}

/// `σ(0), σ(1), …` where `σ(i)` counts resonant patterns of `i` hexagons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SextetPolynomial {
    coefficients: Vec<u64>,
}

impl SextetPolynomial {
    /// From ascending coefficients; trailing zeros are dropped.
    pub fn from_ascending(mut coefficients: Vec<u64>) -> Self {
        while coefficients.len() > 1 && coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        SextetPolynomial { coefficients }
    }

    /// From descending coefficients `[a_d, …, a_0]`.
    pub fn from_descending(coefficients: &[u64]) -> Self {
        Self::from_ascending(coefficients.iter().rev().copied().collect())
    }

    pub fn ascending(&self) -> &[u64] {
        &self.coefficients
    }

    /// `[a_d, …, a_0]`, the serialized form.
    pub fn descending(&self) -> Vec<u64> {
        self.coefficients.iter().rev().copied().collect()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * x + c)
    }
}

impl fmt::Display for SextetPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for SextetPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.descending().serialize(s)
    }
}

pub fn sextet_polynomial(f: &FullereneGraph) -> SextetPolynomial {
    sextet_polynomial_with(f, Execution::default())
}

pub fn sextet_polynomial_with(f: &FullereneGraph, exec: Execution) -> SextetPolynomial {
    let conflicts = HexagonConflicts::new(f);
    let mut coefficients = Vec::new();
    for level in conflicts.levels() {
        let count = exec::count(exec, &level, |s| resonant_unchecked(f, s)) as u64;
        coefficients.push(count);
        // subsets of resonant patterns are resonant, so nothing larger can be
        if count == 0 {
            break;
        }
    }
    SextetPolynomial::from_ascending(coefficients)
}

pub fn clar_number(f: &FullereneGraph) -> usize {
    sextet_polynomial(f).degree()
}

/// Maximum number of alternating hexagons over all perfect matchings.
pub fn fries_number(f: &FullereneGraph, cap: usize) -> Result<usize, ResonanceError> {
    Ok(fries_structure(f, cap)?.1)
}

/// A perfect matching attaining the Fries number (first in enumeration order) and that number.
pub fn fries_structure(f: &FullereneGraph, cap: usize) -> Result<(Matching, usize), ResonanceError> {
    let g = f.graph().to_graph();
    let hexagons = f.hexagons();
    let mut best: Option<(Matching, usize)> = None;
    for m in perfect_matchings(&g, cap) {
        let m = m?;
        let count = hexagons
            .iter()
            .filter(|&&h| m.is_alternating(f.face(h).boundary()))
            .count();
        if best.as_ref().is_none_or(|(_, b)| count > *b) {
            best = Some((m, count));
        }
    }
    Ok(best.expect("fullerene graphs have perfect matchings"))
}

/// A vertex whose three neighbors lie on three pairwise disjoint hexagons avoiding it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GStar {
    pub vertex: VertexId,
    pub hexagons: [FaceId; 3],
}

/// First vertex (by id) carrying the forbidden `G*` pattern.
pub fn find_g_star(f: &FullereneGraph) -> Option<GStar> {
    (0..f.vertex_count()).find_map(|v| g_star_at(f, v))
}

/// All vertices carrying the `G*` pattern.
pub fn find_all_g_star(f: &FullereneGraph) -> Vec<GStar> {
    (0..f.vertex_count()).filter_map(|v| g_star_at(f, v)).collect()
}

fn g_star_at(f: &FullereneGraph, v: VertexId) -> Option<GStar> {
    // At each neighbor exactly one of its three faces avoids v.
    let mut hexagons = [0; 3];
    for (slot, w) in f.graph().neighbors(v).into_iter().enumerate() {
        let far = f
            .faces_at(w)
            .into_iter()
            .find(|&face| !f.face(face).contains(v))?;
        if !f.is_hexagon(far) {
            return None;
        }
        hexagons[slot] = far;
    }
    let [a, b, c] = hexagons;
    let disjoint = f.faces_disjoint(a, b) && f.faces_disjoint(a, c) && f.faces_disjoint(b, c);
    disjoint.then(|| {
        hexagons.sort_unstable();
        GStar {
            vertex: v,
            hexagons,
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyRecord {
    pub hexagon: FaceId,
    pub central: bool,
    pub complement_bipartite: bool,
}

/// For each hexagon: is it central, and is its complement bipartite.
pub fn hexagon_dichotomy_report(f: &FullereneGraph) -> Vec<DichotomyRecord> {
    exec::map(Execution::default(), f.hexagons(), |&h| {
        let sub = f
            .delete_vertices(f.face(h).boundary())
            .expect("valid face vertices");
        DichotomyRecord {
            hexagon: h,
            central: matching::has_perfect_matching(sub.graph()),
            complement_bipartite: sub.is_bipartite(),
        }
    })
}

/// The hexagons alternating under a perfect matching.
pub fn alternating_hexagons(f: &FullereneGraph, m: &Matching) -> Result<Vec<FaceId>, ResonanceError> {
    Ok(alternating_faces(f, m)?
        .into_iter()
        .filter(|&id| f.is_hexagon(id))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_graph, CatalogName};

    fn graph(name: CatalogName) -> FullereneGraph {
        catalog_graph(name).graph
    }

    #[test]
    fn empty_set_is_resonant_on_f20() {
        let f = graph(CatalogName::F20);
        let p = is_resonant_pattern(&f, &[]).unwrap().unwrap();
        assert!(p.verify(&f));
        assert_eq!(sextet_polynomial(&f).ascending(), &[1]);
        assert_eq!(clar_number(&f), 0);
        assert!(disjoint_hexagon_sets(&f, 1).is_empty());
        assert_eq!(resonance_order(&f, None).unwrap().order, Order::All);
    }

    #[test]
    fn f24_hexagon_pair() {
        let f = graph(CatalogName::F24);
        let sets = disjoint_hexagon_sets(&f, 2);
        assert_eq!(sets.len(), 1);
        let p = is_resonant_pattern(&f, &sets[0]).unwrap().unwrap();
        assert!(p.verify(&f));
    }

    #[test]
    fn rejects_non_hexagons_and_overlaps() {
        let f = graph(CatalogName::C60);
        let p = f.pentagons()[0];
        assert_eq!(
            is_resonant_pattern(&f, &[p]).unwrap_err(),
            ResonanceError::NotHexagon(p)
        );
        let h = f.hexagons()[0];
        let other = *f
            .hexagons()
            .iter()
            .find(|&&x| x != h && !f.faces_disjoint(h, x))
            .unwrap();
        assert!(matches!(
            is_resonant_pattern(&f, &[h, other]),
            Err(ResonanceError::Matching(MatchingError::FacesOverlap(..)))
        ));
    }

    #[test]
    fn c60_clar_sets() {
        let f = graph(CatalogName::C60);
        assert_eq!(disjoint_hexagon_sets(&f, 8).len(), 5);
        assert!(find_g_star(&f).is_none());
    }

    #[test]
    fn polynomial_display_and_eval() {
        let p = SextetPolynomial::from_descending(&[4, 36, 109, 130, 67, 14, 1]);
        assert_eq!(p.to_string(), "4x^6+36x^5+109x^4+130x^3+67x^2+14x+1");
        assert_eq!(p.degree(), 6);
        // (2x^3+9x^2+7x+1)^2 at x = 1
        assert_eq!(p.eval(1), 19 * 19);
        assert_eq!(SextetPolynomial::from_ascending(vec![1, 2, 0, 0]).degree(), 1);
        assert_eq!(SextetPolynomial::from_ascending(vec![1]).to_string(), "1");
    }

    #[test]
    fn order_serializes_as_int_or_all() {
        assert_eq!(serde_json::to_string(&Order::All).unwrap(), "\"ALL\"");
        assert_eq!(serde_json::to_string(&Order::Finite(2)).unwrap(), "2");
    }

    #[test]
    fn order_cap() {
        let f = graph(CatalogName::C60);
        assert_eq!(
            resonance_order(&f, Some(2)).unwrap_err(),
            ResonanceError::CapExceeded(2)
        );
        let r5 = crate::catalog::nanotube(crate::catalog::Cap::R5, 1).unwrap();
        // the failure at size 2 is found before the cap bites
        assert_eq!(resonance_order(&r5, Some(2)).unwrap().order, Order::Finite(1));
    }

    #[test]
    fn g_star_is_an_obstruction() {
        let f = graph(CatalogName::C70);
        let all = find_all_g_star(&f);
        assert!(!all.is_empty());
        for w in all {
            assert!(is_resonant_pattern(&f, &w.hexagons).unwrap().is_none());
        }
        assert!(find_g_star(&graph(CatalogName::F20)).is_none());
    }

    #[test]
    fn dichotomy_on_f24() {
        let f = graph(CatalogName::F24);
        let report = hexagon_dichotomy_report(&f);
        assert_eq!(report.len(), 2);
        assert!(report.iter().all(|r| r.central && !r.complement_bipartite));
        assert!(hexagon_dichotomy_report(&graph(CatalogName::F20)).is_empty());
    }

    #[test]
    fn fries_small() {
        assert_eq!(fries_number(&graph(CatalogName::F20), DEFAULT_PM_CAP).unwrap(), 0);
        assert_eq!(fries_number(&graph(CatalogName::F40), DEFAULT_PM_CAP).unwrap(), 10);
        assert!(fries_number(&graph(CatalogName::F40), 5).unwrap_err().is_guard());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f = graph(CatalogName::F36_1);
        assert_eq!(
            sextet_polynomial_with(&f, Execution::Sequential),
            sextet_polynomial_with(&f, Execution::Parallel)
        );
        let f = graph(CatalogName::C70);
        assert_eq!(
            resonance_order_with(&f, None, Execution::Sequential).unwrap(),
            resonance_order_with(&f, None, Execution::Parallel).unwrap()
        );
    }
}
