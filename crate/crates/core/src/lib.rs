//! Competition graphs of digraphs and multipartite tournaments.
//!
//! A *competition graph* of a digraph `D` is the undirected graph on the same
//! vertex set in which two distinct vertices are adjacent exactly when they
//! have a common out-neighbor in `D`. This crate provides:
//!
//! * compact bitset-backed [`Graph`] and [`Digraph`] types (up to 64 vertices)
//!   with the competition-graph operator and the usual structural queries,
//! * exact canonical forms and isomorphism testing for small graphs,
//! * exhaustive enumeration of the orientations of complete multipartite
//!   graphs (and of all tournaments), with sound pruning for triangle-free
//!   targets and censuses over isomorphism classes,
//! * constructors for the named witness tournaments `D1`..`D27` and the
//!   regular 5-tournament, each validated against its documented
//!   competition graph at construction time,
//! * a decision procedure answering, for a triangle-free graph `G` and each
//!   `k >= 2`, whether `G` is the competition graph of some k-partite
//!   tournament, together with an explicit witness,
//! * a registry of exhaustive self-checks re-deriving the classification
//!   theorems over their finite universes.

pub mod bits;
pub mod canon;
pub mod classifier;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod partition;
pub mod rng;
pub mod verifier;

pub use canon::CanonicalForm;
pub use classifier::{classify, member, synth_witness, ClassificationReport, Verdict};
pub use digraph::Digraph;
pub use enumerate::{census, search_with, tournaments, Census, CompetitionView, Filter, OrientationUniverse, Prune};
pub use error::{ClassifyError, EnumerationError, FamilyError, GraphError, VerifyError};
pub use families::{build_pattern, match_components, named_graph, witness, Component, Witness, WitnessId};
pub use graph::Graph;
pub use partition::{complete_multipartite, PartiteShape, VertexPartition};
pub use verifier::{CheckRegistry, VerificationReport};

/// Hard cap on vertex counts so a neighborhood always fits one machine word.
pub const MAX_VERTICES: usize = 64;
