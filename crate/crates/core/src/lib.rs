//! Zero-sum and almost zero-sum spanning subgraphs of graphs whose edges
//! carry a sign in {-1, +1}.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the coloured host graph, edge subgraphs and the
//!   structural predicates every other module relies on.
//! * [`families`] walks edge-replacement chains inside closed families
//!   (spanning trees, Hamiltonian paths, spanning trees of diameter at most
//!   three) and interpolates between a non-positive and a non-negative member.
//! * [`thresholds`] evaluates the exact Turán-type bounds and the three
//!   sufficient conditions that gate the finders.
//! * [`decompositions`] builds Walecki decompositions of `K_n`.
//! * [`finders`] turns each existence theorem into a constructive search.
//! * [`extremal`] generates the colourings showing the bounds are tight.
//! * [`oracle`] is brute-force ground truth used by the test suites.

pub mod decompositions;
pub mod error;
pub mod extremal;
pub mod families;
pub mod finders;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod sample;
pub mod thresholds;

mod dsu;

pub use error::{Error, Result};
pub use graph::{ColorCensus, ColoredGraph, Edge, EdgeSubgraph, HostClass, Sign};
