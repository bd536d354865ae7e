//! Self-stress tests for geometric graphs, by exact rank of the rigidity
//! matrix, plus the harness that checks stress-free diameter graphs against
//! the (d+1)-coloring bound.
//!
//! A framework is stress-free when no nonzero edge weights make the weighted
//! edge vectors cancel at every vertex, i.e. when the rigidity matrix has
//! full row rank. This is a yes/no algebraic property of highly non-generic
//! configurations (diameter graphs especially), so the rank is computed
//! exactly; floating-point rank would misclassify borderline cases.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{diameter_graph, PointSet};
use crate::graph::Graph;
use crate::linalg::rational_rank;
use crate::rational::Rational;
use crate::solve::{chromatic_number, SolveOptions, SolveResult};

/// Points plus straight-segment edges (which may cross; only incidences
/// matter here).
#[derive(Debug, Clone)]
pub struct Framework {
    points: PointSet,
    edges: Vec<(usize, usize)>,
}

impl Framework {
    pub fn new(points: PointSet, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = points.len();
        for e in edges.iter_mut() {
            if e.0 == e.1 || e.0 >= n || e.1 >= n {
                return Err(Error::InvalidArgument(format!("bad edge {:?}", e)));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Framework { points, edges })
    }

    pub fn from_graph(points: PointSet, g: &Graph) -> Result<Self> {
        Framework::new(points, g.edges())
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// One row per edge (u,v): block u holds p_u - p_v, block v holds p_v - p_u,
/// zeros elsewhere. Shape |E| x (d*n).
pub fn rigidity_matrix(f: &Framework) -> Vec<Vec<Rational>> {
    let d = f.points.dim();
    let n = f.points.len();
    let mut rows = Vec::with_capacity(f.edges.len());
    for &(u, v) in &f.edges {
        let mut row = vec![Rational::from_integer(0.into()); d * n];
        let pu = f.points.point(u);
        let pv = f.points.point(v);
        for i in 0..d {
            let diff = &pu[i] - &pv[i];
            row[u * d + i] = diff.clone();
            row[v * d + i] = -diff;
        }
        rows.push(row);
    }
    rows
}

#[derive(Debug, Clone, Serialize)]
pub struct StressReport {
    pub edge_count: usize,
    pub rank: usize,
    /// Dimension of the space of self-stresses: |E| - rank.
    pub stress_dim: usize,
    pub stress_free: bool,
    /// Whether the points affinely span their ambient space.
    pub spanning: bool,
}

pub fn stress_report(f: &Framework) -> StressReport {
    let rank = rational_rank(&rigidity_matrix(f));
    let edge_count = f.edges.len();
    StressReport {
        edge_count,
        rank,
        stress_dim: edge_count - rank,
        stress_free: edge_count == rank,
        spanning: f.points.affine_dim() == f.points.dim(),
    }
}

/// Largest edge count a stress-free framework whose points affinely span R^d
/// can have: d*n - C(d+1,2).
pub fn stress_free_edge_bound(d: usize, n: usize) -> isize {
    (d * n) as isize - (d * (d + 1) / 2) as isize
}

#[derive(Debug, Clone, Serialize)]
pub struct HarnessReport {
    pub n: usize,
    pub dim: usize,
    pub diameter_edges: usize,
    pub stress: StressReport,
    /// Chromatic solve of the diameter graph; only run when stress-free.
    pub chi: Option<SolveResult>,
    /// chi <= dim + 1, when both sides are known.
    pub within_bound: Option<bool>,
    /// Graph degeneracy; when <= 2d-2 the 2d-1 coloring bound is certified.
    pub degeneracy: usize,
    pub edge_bound_ok: Option<bool>,
}

/// Build the diameter graph, test stress-freeness, and (when stress-free)
/// compare the chromatic number against d+1. A violation is returned in the
/// report for persistence, never asserted away.
pub fn conjecture_harness(ps: &PointSet, opts: SolveOptions) -> Result<HarnessReport> {
    let d = ps.dim();
    if ps.len() < d + 1 {
        return Err(Error::TooFewPoints {
            need: d + 1,
            got: ps.len(),
        });
    }
    let g = diameter_graph(ps)?;
    let f = Framework::from_graph(ps.clone(), &g)?;
    let stress = stress_report(&f);
    let degeneracy = g.degeneracy();
    let edge_bound_ok = if stress.stress_free && stress.spanning {
        Some(f.edges().len() as isize <= stress_free_edge_bound(d, ps.len()))
    } else {
        None
    };
    let (chi, within_bound) = if stress.stress_free {
        let res = chromatic_number(&g, opts);
        let within = if res.optimal {
            Some(res.value <= d + 1)
        } else {
            // an upper bound within d+1 still certifies the conjecture side
            (res.value <= d + 1).then_some(true)
        };
        (Some(res), within)
    } else {
        (None, None)
    };
    Ok(HarnessReport {
        n: ps.len(),
        dim: d,
        diameter_edges: f.edges().len(),
        stress,
        chi,
        within_bound,
        degeneracy,
        edge_bound_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::{rat, rat_i};

    fn k4_generic() -> Framework {
        // generic-position rational points in the plane
        let ps = PointSet::new(
            2,
            vec![
                vec![rat_i(0), rat_i(0)],
                vec![rat_i(3), rat_i(1)],
                vec![rat_i(1), rat_i(4)],
                vec![rat(7, 2), rat(9, 2)],
            ],
        )
        .unwrap();
        Framework::from_graph(ps, &Graph::complete(4)).unwrap()
    }

    #[test]
    fn single_edge_row() {
        let ps = PointSet::from_integers(2, &[&[0, 0], &[1, 0]]).unwrap();
        let f = Framework::new(ps, vec![(0, 1)]).unwrap();
        let m = rigidity_matrix(&f);
        assert_eq!(m.len(), 1);
        assert_eq!(
            m[0],
            vec![rat_i(-1), rat_i(0), rat_i(1), rat_i(0)]
        );
    }

    #[test]
    fn triangle_is_stress_free() {
        let ps = PointSet::from_integers(2, &[&[0, 0], &[4, 0], &[1, 3]]).unwrap();
        let f = Framework::new(ps, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = stress_report(&f);
        assert_eq!(r.rank, 3);
        assert!(r.stress_free);
        assert!(r.spanning);
    }

    #[test]
    fn k4_has_one_stress() {
        // oracle for the rank: 2n - 3 = 5 for generic planar points, checked
        // independently via nonzero 5x5 minors in the linalg tests; here the
        // framework route must agree
        let f = k4_generic();
        let r = stress_report(&f);
        assert_eq!(r.edge_count, 6);
        assert_eq!(r.rank, 5);
        assert_eq!(r.stress_dim, 1);
        assert!(!r.stress_free);
    }

    #[test]
    fn four_cycle_generic_is_stress_free() {
        let ps = PointSet::new(
            2,
            vec![
                vec![rat_i(0), rat_i(0)],
                vec![rat_i(5), rat_i(1)],
                vec![rat_i(6), rat_i(7)],
                vec![rat(1, 2), rat(9, 2)],
            ],
        )
        .unwrap();
        let f = Framework::new(ps, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let r = stress_report(&f);
        assert!(r.stress_free);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn rank_invariant_under_translation_and_scaling() {
        let f = k4_generic();
        let base = stress_report(&f).rank;
        let translated = {
            let pts: Vec<Vec<Rational>> = f
                .points()
                .points()
                .iter()
                .map(|p| vec![&p[0] + rat_i(10), &p[1] - rat(3, 7)])
                .collect();
            Framework::new(PointSet::new(2, pts).unwrap(), f.edges().to_vec()).unwrap()
        };
        assert_eq!(stress_report(&translated).rank, base);
        let scaled = Framework::new(
            f.points().scaled(&rat(5, 3)),
            f.edges().to_vec(),
        )
        .unwrap();
        assert_eq!(stress_report(&scaled).rank, base);
    }

    #[test]
    fn harness_on_simplex_and_pentagon() {
        // regular tetrahedron: complete diameter graph, chi = d+1, and the
        // edge count 6 = dn - C(d+1,2) sits exactly on the boundary
        let s = presets::tetrahedron();
        let r = conjecture_harness(&s, SolveOptions::default()).unwrap();
        assert!(r.stress.stress_free);
        assert!(r.stress.spanning);
        assert_eq!(r.chi.as_ref().unwrap().value, 4);
        assert_eq!(r.within_bound, Some(true));
        assert_eq!(r.edge_bound_ok, Some(true));
        assert_eq!(r.diameter_edges as isize, stress_free_edge_bound(3, 4));

        // 5-cycle of diameters: stress-free, chi = 3
        let p = presets::pentagon_cycle();
        let r = conjecture_harness(&p, SolveOptions::default()).unwrap();
        assert!(r.stress.stress_free);
        assert_eq!(r.chi.as_ref().unwrap().value, 3);
        assert_eq!(r.within_bound, Some(true));
    }

    #[test]
    fn edge_bound_values() {
        assert_eq!(stress_free_edge_bound(2, 4), 5);
        assert_eq!(stress_free_edge_bound(3, 4), 6);
        assert_eq!(stress_free_edge_bound(2, 10), 17);
    }
}
