//! Local computation of sparse spanning subgraphs on bounded-degree graphs.
//!
//! * [`graph`]: incidence-list graphs and exact structural analyzers.
//! * [`oracle`]: the neighbor-probe access model with counting and transcripts.
//! * [`spanner`]: the rank-Kruskal local algorithm.
//! * [`reference`]: global Kruskal, balanced sparse cuts and the recursive
//!   decomposition behind the sparsity bound.
//! * [`constructions`]: generators, the replacement product with cycle
//!   clouds, edge subdivision and the bridge join.
//! * [`adversary`]: the transcript-embedding harness for the query lower bound.

pub mod adversary;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod graph;
pub mod oracle;
pub mod reference;
pub mod spanner;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{EdgeKey, Girth, Graph, Vertex, VertexSubset};
