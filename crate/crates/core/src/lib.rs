//! Central vertex-edge join of three graphs.
//!
//! The crate builds the join `G1^C ▷ (G2^V ∪ G3^E)` (the central graph of
//! `G1`, with `V(G1)` joined to every vertex of `G2` and the edge-vertices of
//! `G1` joined to every vertex of `G3`) and computes the same invariants two
//! ways: directly from the constructed graph (BFS distances, a dense
//! eigensolver, vertex and edge sums) and from closed forms in the input
//! parameters. The two routes are compared by [`spectral`] and [`indices`].
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | simple graphs, standard families, line and central graphs |
//! | [`join`] | the join, its order/size, degree and eccentricity formulas |
//! | [`spectral`] | distance matrices, eigenvalues, D-spectrum, D-energy, closed-form spectrum |
//! | [`equienergetic`] | D-equienergetic families over cycle-union partitions |
//! | [`indices`] | eccentricity-based topological indices and the Wiener index |
//! | [`formulas`] | coefficient tables behind every polynomial closed form |

pub mod equienergetic;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod join;
pub mod spectral;

pub use graph::{Graph, GraphError};
pub use join::{cve_join, CveGraph, CveParameters, JoinError};
pub use spectral::{SpectralError, Spectrum};
