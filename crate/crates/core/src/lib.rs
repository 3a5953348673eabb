//! Discrete homotopy (A-theory) invariants of finite simple graphs.
//!
//! The modules follow the objects they compute:
//!
//! - [`graph`]: simple graphs, Cartesian products, discrete cubes and graph
//!   homomorphisms;
//! - [`simplicial`]: facet-list complexes and the graphs `Γ_q(Δ)`;
//! - [`fundamental`]: a presentation of `A_1` from 3- and 4-cycles,
//!   its simplification and abelianization, and loop comparison;
//! - [`cubical`]: the grid model of `A_n`, homotopy certificates, bounded
//!   homotopy search and the cubical set of graph maps `I_1^n -> Γ`;
//! - [`loopspace`]: the path and loop graphs and the map `α`.

pub mod cubical;
pub mod error;
pub mod fundamental;
pub mod graph;
pub mod loopspace;
pub mod simplicial;

pub use cubical::{CubeCell, GridMap, HomotopyCertificate};
pub use error::{Error, Result};
pub use fundamental::{A1Complex, AbelianInvariants, Equivalence, GroupPresentation, LoopWalk, Word};
pub use graph::{Graph, Vertex, VertexMap};
pub use loopspace::{PathVertex, WalkGraph};
pub use simplicial::{GammaMode, SimplicialComplex};
