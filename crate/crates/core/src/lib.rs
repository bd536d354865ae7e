//! Exact workbench for finite combinatorial-geometry experiments: diameter
//! and kissing graphs over rational point sets, set families and sign-vector
//! geometry, GF(2) hypergraph cocycles, exact coloring/clique solvers,
//! self-stress rank checks, and floating-point search routines for ball
//! partitions and equilateral sets.

pub mod cocycle;
pub mod combin;
pub mod corpus;
pub mod embed;
pub mod error;
pub mod families;
pub mod geom;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod numeric;
pub mod presets;
pub mod rational;
pub mod report;
pub mod rigidity;
pub mod solve;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
