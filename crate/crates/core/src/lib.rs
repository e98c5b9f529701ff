//! Cycle-matching colourings, decorated colourings and weak clique
//! immersions for graphs with independence number at most 2.
//!
//! Every construction comes with an independent checker, and the small
//! cases are backed by exhaustive oracles in [`oracles`].

pub mod bipartite;
pub mod cmc;
pub mod decorated;
pub mod error;
pub mod factor;
pub mod generators;
pub mod graph;
pub mod immersion;
pub mod io;
pub mod oracles;
pub mod stress;

pub use cmc::{cycle_matching_colouring, validate_cm_colouring, CycleMatchingColouring};
pub use decorated::{critical_colouring, validate_decorated, DecoratedColouring, RegionPartition, Side};
pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSet, Multigraph, Vertex};
pub use immersion::{chi_alpha2, construct_immersion, verify_immersion, Immersion, PairColouring};
