//! Triangulation quivers, their biserial weighted algebras, disk contractions
//! and the classification of the algebras of strict dihedral type.

pub mod algebra;
pub mod builtins;
pub mod classify;
pub mod disks;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod field;
pub mod format;
pub mod homology;
pub mod iso;
pub mod linalg;
pub mod presentation;
pub mod random;
pub mod quiver;
pub mod surface;

pub use error::{GdqError, Result};
pub use exec::Execution;
pub use field::{Field, Scalar};
pub use quiver::{FQuiver, Node, OrbitData, Quiver, TriangulationQuiver, ValidationReport};
