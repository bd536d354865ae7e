//! Covering the binary cube by sets of bounded diameter.
//!
//! Squared Euclidean distance on {0,1}^n is Hamming distance, so the minimum
//! number of parts of squared diameter <= s2 is the chromatic number of the
//! "far graph" joining pairs at Hamming distance > s2.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{chromatic_number, SolveOptions, SolveResult};

/// Graph on {0,1}^n with edges between points at squared distance > s2.
pub fn far_graph(n: usize, s2: u32) -> Result<Graph> {
    if n > 14 {
        return Err(Error::InstanceTooLarge(format!(
            "binary cube with 2^{n} vertices"
        )));
    }
    let size = 1usize << n;
    let mut g = Graph::new(size);
    for i in 0..size {
        for j in i + 1..size {
            if (i ^ j).count_ones() > s2 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Minimum number of parts of squared diameter <= s2 covering {0,1}^n.
/// Exact when the solve completes; otherwise a valid upper bound with
/// optimal = false.
pub fn cube_cover_number(n: usize, s2: u32, opts: SolveOptions) -> Result<SolveResult> {
    let g = far_graph(n, s2)?;
    Ok(chromatic_number(&g, opts))
}
