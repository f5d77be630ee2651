//! Resonance analysis of fullerene graphs.
//!
//! Graphs are cubic plane graphs given as rotation systems
//! ([`plane_graph`]). On top of them sit general-graph matchings
//! ([`matching`]), resonant patterns and the sextet polynomial
//! ([`resonance`]), the leapfrog transform ([`leapfrog`]), ring and fragment
//! scans ([`rings`]) and a catalog of named fullerenes ([`catalog`]).
//!
//! ```
//! use resonantk::catalog::{catalog_graph, CatalogName};
//! use resonantk::resonance::{resonance_order, sextet_polynomial, Order};
//!
//! let f24 = catalog_graph(CatalogName::F24).graph;
//! assert_eq!(sextet_polynomial(&f24).to_string(), "x^2+2x+1");
//! assert_eq!(resonance_order(&f24, None).unwrap().order, Order::All);
//! ```

pub mod catalog;
pub mod exec;
pub mod graph;
pub mod leapfrog;
pub mod matching;
pub mod plane_graph;
pub mod resonance;
pub mod rings;

pub use exec::Execution;
pub use graph::Graph;
pub use plane_graph::{
    parse_graph, write_graph, CanonicalCode, EmbeddedGraph, Face, FaceId, FullereneGraph,
    GraphError, Subgraph, VertexId,
};
