//! Exact normal surface theory for triangulated 3-manifolds.
//!
//! Triangulations are given by face pairings of tetrahedra. Normal
//! surfaces are integer coordinate vectors which can be enumerated,
//! rebuilt into cell complexes and measured against genus bounds.

pub mod dsu;
pub mod bounds;
pub mod certificates;
pub mod classify;
pub mod coords;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod homology;
pub mod perm;
pub mod polygon;
pub mod skeleton;
pub mod surface;
pub mod tri;
pub mod vista;

pub use error::{Error, Result};
pub use perm::{Perm3, Perm4};
pub use skeleton::Skeleton;
pub use tri::{Gluing, Triangulation, TriangulationBuilder};
