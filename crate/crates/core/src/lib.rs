//! Invariants of quiver Grassmannians Gr_{dim P}(P ⊕ I) for Dynkin quivers:
//! Poincaré polynomials, Genocchi numbers, torus fixed points and cells,
//! orbit counts, and a finite-field point-counting oracle.

pub mod cells;
pub mod counting;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod poincare;
pub mod qpoly;
pub mod quiver;
pub mod rep;
pub mod repfile;
pub mod thin;
pub mod typea;

pub use cells::{CellInfo, Cells, DegreeAssignment, FixedPoint, Flow};
pub use error::{Error, Result};
pub use linalg::{Field, Matrix};
pub use qpoly::IntPoly;
pub use quiver::{DimVector, Quiver};
pub use rep::{hom_ext_dims, HomExt, Rep, Side, SubrepBasis, Summand};
pub use typea::{FlagSpec, Interval, PIConfig};
