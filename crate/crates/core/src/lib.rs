//! Plane and projective-plane multiwheels built from odd wheels by edge
//! summation modulo two, with exact certificates for their chromatic,
//! topological and minor properties.

pub mod graph;
pub mod coloring;
pub mod constructors;
pub mod minors;
pub mod report;
pub mod topology;

pub use graph::{Edge, Graph, GraphError, Role, Vertex};
