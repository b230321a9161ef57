//! Combinatorics of ideal right-angled hyperbolic 4-polytopes: face
//! lattices and their counting identities, the 4-regular planar graphs
//! that occur as facets, and the obstructions that single out the 24-cell
//! as the smallest example.

pub mod bounds;
pub mod circuits;
pub mod error;
pub mod exact;
pub mod generator;
pub mod identities;
pub mod lattice;
pub mod octahedrites;
pub mod oracle;
pub mod patterns;
pub mod planar;

pub use error::{BoundsError, CircuitError, IdentityError, LatticeError, OctahedriteError, PatternError, PlanarError};
pub use lattice::{FVector, FaceId, FaceLattice, VertexId};
pub use planar::{FaceCycle, PlanarGraph};
