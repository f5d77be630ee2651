//! Named fullerenes and capped nanotubes.
//!
//! F20, F24 and the nanotube families are generated from a layered tube
//! construction. The other entries are frozen rotation systems under
//! `data/`; their identity is pinned by the facts in [`ExpectedFacts`], which
//! the test suite and `catalog verify` recompute from scratch.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::plane_graph::{parse_graph, EmbeddedGraph, FullereneGraph};
use crate::resonance::{Order, SextetPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("invalid nanotube parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    F20,
    F24,
    F28,
    F30,
    F32,
    F36_1,
    F36_2,
    F40,
    F48,
    C60,
    C70,
}

impl CatalogName {
    pub const ALL: [CatalogName; 11] = [
        CatalogName::F20,
        CatalogName::F24,
        CatalogName::F28,
        CatalogName::F30,
        CatalogName::F32,
        CatalogName::F36_1,
        CatalogName::F36_2,
        CatalogName::F40,
        CatalogName::F48,
        CatalogName::C60,
        CatalogName::C70,
    ];

    /// The nine fullerenes every independent hexagon set of which is resonant.
    pub const FULLY_RESONANT: [CatalogName; 9] = [
        CatalogName::F20,
        CatalogName::F24,
        CatalogName::F28,
        CatalogName::F32,
        CatalogName::F36_1,
        CatalogName::F36_2,
        CatalogName::F40,
        CatalogName::F48,
        CatalogName::C60,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::F20 => "F20",
            CatalogName::F24 => "F24",
            CatalogName::F28 => "F28",
            CatalogName::F30 => "F30",
            CatalogName::F32 => "F32",
            CatalogName::F36_1 => "F36_1",
            CatalogName::F36_2 => "F36_2",
            CatalogName::F40 => "F40",
            CatalogName::F48 => "F48",
            CatalogName::C60 => "C60",
            CatalogName::C70 => "C70",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CatalogName::F20 => "dodecahedron",
            CatalogName::F24 => "hexagon-capped barrel: hexagon, 2 rings of 6 pentagons, hexagon",
            CatalogName::F28 => "Td isomer; pentagonal ring of length 8",
            CatalogName::F30 => "C2v isomer containing a hexagon ringed by six pentagons",
            CatalogName::F32 => "isomer with minimum pentagonal ring length 9",
            CatalogName::F36_1 => "two turtles of six pentagons each, no pentagonal ring",
            CatalogName::F36_2 => "isomer with minimum pentagonal ring length 10",
            CatalogName::F40 => "D5d barrel: pentagon, 5 hexagons, 10 pentagons, 5 hexagons, pentagon",
            CatalogName::F48 => "isomer with a pentagonal ring of length 12",
            CatalogName::C60 => "Ih buckminsterfullerene",
            CatalogName::C70 => "D5h isomer",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '^' | '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        let name = match norm.as_str() {
            "F20" | "C20" => CatalogName::F20,
            "F24" | "C24" => CatalogName::F24,
            "F28" | "C28" => CatalogName::F28,
            "F30" | "C30" => CatalogName::F30,
            "F32" | "C32" => CatalogName::F32,
            "F361" => CatalogName::F36_1,
            "F362" => CatalogName::F36_2,
            "F40" | "C40" => CatalogName::F40,
            "F48" | "C48" => CatalogName::F48,
            "C60" | "F60" => CatalogName::C60,
            "C70" | "F70" => CatalogName::C70,
            _ => return Err(CatalogError::UnknownName(s.to_string())),
        };
        Ok(name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauExpectation {
    Value(usize),
    /// The graph has no pentagonal ring at all.
    NoPentagonalRing,
    Unpinned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderExpectation {
    Exactly(Order),
    AtMost(usize),
}

impl OrderExpectation {
    pub fn admits(self, order: Order) -> bool {
        match self {
            OrderExpectation::Exactly(o) => o == order,
            OrderExpectation::AtMost(k) => order <= Order::Finite(k),
        }
    }
}

impl fmt::Display for OrderExpectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderExpectation::Exactly(o) => write!(f, "{o}"),
            OrderExpectation::AtMost(k) => write!(f, "<= {k}"),
        }
    }
}

/// Published facts about a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub sextet: Option<SextetPolynomial>,
    pub tau: TauExpectation,
    pub order: OrderExpectation,
    pub hexagons: usize,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub graph: FullereneGraph,
    pub expected: ExpectedFacts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    /// A pentagon ringed by five pentagons.
    R5,
    /// A hexagon ringed by six pentagons.
    R6,
}

impl Cap {
    fn order(self) -> usize {
        match self {
            Cap::R5 => 5,
            Cap::R6 => 6,
        }
    }
}

impl FromStr for Cap {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "r5" => Ok(Cap::R5),
            "r6" => Ok(Cap::R6),
            _ => Err(CatalogError::InvalidParameter(format!("unknown cap `{s}`"))),
        }
    }
}

/// Two caps of `m` pentagons around an `m`-gon, joined by `rings` rings of
/// `m` hexagons. `m = 5, rings = 0` is the dodecahedron.
///
/// Vertices: the top `m`-cycle, then `rings + 1` zigzag layers of `2m`
/// vertices, then the bottom `m`-cycle. In a layer, even positions reach up
/// and odd positions reach down. Rotations list neighbors clockwise as seen
/// from outside with the top cap up: up, right, down, left.
pub(crate) fn tube(m: usize, rings: usize) -> EmbeddedGraph {
    let layers = rings + 1;
    let top = |i: usize| i % m;
    let x = |j: usize, t: usize| m + 2 * m * j + t % (2 * m);
    let bottom = |i: usize| m + 2 * m * layers + i % m;
    let mut rot = vec![[0; 3]; 4 * m + 2 * m * rings];
    for i in 0..m {
        rot[top(i)] = [top(i + 1), x(0, 2 * i), top(i + m - 1)];
        rot[bottom(i)] = [x(layers - 1, 2 * i + 1), bottom(i + 1), bottom(i + m - 1)];
    }
    for j in 0..layers {
        for i in 0..m {
            let up = if j == 0 { top(i) } else { x(j - 1, 2 * i + 1) };
            rot[x(j, 2 * i)] = [up, x(j, 2 * i + 1), x(j, 2 * i + 2 * m - 1)];
            let down = if j + 1 == layers {
                bottom(i)
            } else {
                x(j + 1, 2 * i)
            };
            rot[x(j, 2 * i + 1)] = [x(j, 2 * i + 2), down, x(j, 2 * i)];
        }
    }
    EmbeddedGraph::from_rotation(rot).expect("tube construction is a valid embedding")
}

/// An R5- or R6-capped nanotube with `hex_rings >= 1` rings of hexagons.
pub fn nanotube(cap: Cap, hex_rings: usize) -> Result<FullereneGraph, CatalogError> {
    if hex_rings == 0 {
        return Err(CatalogError::InvalidParameter(
            "hex_rings must be at least 1 (the capped tube without rings is F20 or F24 in the catalog)"
                .into(),
        ));
    }
    if hex_rings > 1000 {
        return Err(CatalogError::InvalidParameter(format!(
            "hex_rings = {hex_rings} is unreasonably large"
        )));
    }
    Ok(FullereneGraph::validate(tube(cap.order(), hex_rings)).expect("capped tubes are fullerenes"))
}

fn frozen(text: &str) -> EmbeddedGraph {
    parse_graph(text).expect("frozen catalog data parses")
}

fn poly(desc: &[u64]) -> Option<SextetPolynomial> {
    Some(SextetPolynomial::from_descending(desc))
}

pub fn catalog_graph(name: CatalogName) -> CatalogEntry {
    use CatalogName::*;
    use OrderExpectation::*;
    use TauExpectation::*;
    let all = Exactly(Order::All);
    let (graph, sextet, tau, order, hexagons) = match name {
        F20 => (tube(5, 0), poly(&[1]), Value(5), all, 0),
        F24 => (tube(6, 0), poly(&[1, 2, 1]), Value(6), all, 2),
        F28 => (frozen(include_str!("../data/F28.rot")), poly(&[4, 4, 1]), Value(8), all, 4),
        F30 => (frozen(include_str!("../data/F30.rot")), None, Unpinned, AtMost(1), 5),
        F32 => (frozen(include_str!("../data/F32.rot")), poly(&[9, 6, 1]), Value(9), all, 6),
        F36_1 => (
            frozen(include_str!("../data/F36_1.rot")),
            poly(&[2, 16, 20, 8, 1]),
            NoPentagonalRing,
            all,
            8,
        ),
        F36_2 => (
            frozen(include_str!("../data/F36_2.rot")),
            poly(&[1, 8, 18, 8, 1]),
            Value(10),
            all,
            8,
        ),
        F40 => (
            frozen(include_str!("../data/F40.rot")),
            poly(&[25, 50, 35, 10, 1]),
            Value(10),
            all,
            10,
        ),
        F48 => (
            frozen(include_str!("../data/F48.rot")),
            poly(&[4, 36, 109, 130, 67, 14, 1]),
            Value(12),
            all,
            14,
        ),
        C60 => (
            frozen(include_str!("../data/C60.rot")),
            poly(&[5, 320, 1240, 1912, 1510, 660, 160, 20, 1]),
            NoPentagonalRing,
            all,
            20,
        ),
        C70 => (
            frozen(include_str!("../data/C70.rot")),
            None,
            Unpinned,
            Exactly(Order::Finite(2)),
            25,
        ),
    };
    CatalogEntry {
        name,
        graph: FullereneGraph::validate(graph).expect("catalog graphs are fullerenes"),
        expected: ExpectedFacts {
            sextet,
            tau,
            order,
            hexagons,
        },
    }
}

pub fn catalog_graph_by_name(name: &str) -> Result<CatalogEntry, CatalogError> {
    Ok(catalog_graph(name.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tubes_have_expected_sizes() {
        for rings in 1..=3 {
            let r5 = nanotube(Cap::R5, rings).unwrap();
            assert_eq!(r5.vertex_count(), 20 + 10 * rings);
            assert_eq!(r5.hexagons().len(), 5 * rings);
            let r6 = nanotube(Cap::R6, rings).unwrap();
            assert_eq!(r6.vertex_count(), 24 + 12 * rings);
            assert_eq!(r6.hexagons().len(), 2 + 6 * rings);
        }
        assert!(nanotube(Cap::R5, 0).is_err());
    }

    #[test]
    fn every_entry_validates_with_its_hexagon_count() {
        for name in CatalogName::ALL {
            let e = catalog_graph(name);
            assert_eq!(e.graph.hexagons().len(), e.expected.hexagons, "{name}");
            assert_eq!(e.graph.vertex_count(), 2 * e.expected.hexagons + 20, "{name}");
        }
    }

    #[test]
    fn names_parse() {
        assert_eq!("F36^1".parse::<CatalogName>().unwrap(), CatalogName::F36_1);
        assert_eq!("c60".parse::<CatalogName>().unwrap(), CatalogName::C60);
        for name in CatalogName::ALL {
            assert_eq!(name.as_str().parse::<CatalogName>().unwrap(), name);
        }
        assert!(matches!(
            catalog_graph_by_name("F26"),
            Err(CatalogError::UnknownName(_))
        ));
    }

    #[test]
    fn r6_tube_with_two_rings_is_not_catalog_f48() {
        let tube = nanotube(Cap::R6, 2).unwrap();
        let f48 = catalog_graph(CatalogName::F48).graph;
        assert_eq!(tube.vertex_count(), 48);
        assert_ne!(tube.graph().canonical_code(), f48.graph().canonical_code());
    }
}
