//! Floating-point search routines: ball-partition piece diameters,
//! the log-gap reference bound, binary-cube covering, and equilateral-set
//! search in p-norms.
//!
//! Everything here is double precision with explicit confidence labeling;
//! the exact modules never depend on these results.

pub mod ballpart;
pub mod cube;
pub mod equilateral;

pub use ballpart::{
    larman_tamvakis_reference, simplex_voronoi_piece_diameter, LogBase, LtReference,
    PartitionDiameterReport,
};
pub use cube::{cube_cover_number, far_graph};
pub use equilateral::{equilateral_search, verify_equilateral, EquilateralCandidate, NormSpec};
