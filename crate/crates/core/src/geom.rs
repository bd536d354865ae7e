//! Exact rational geometry: point sets, squared-distance structure, diameter
//! and kissing graphs, clique complexes, two-distance validation, and disc
//! tangency graphs.
//!
//! All comparisons happen on exact squared distances; no square root is ever
//! taken here. A diameter graph is defined by "attains the exact maximum", so
//! inputs need not be normalized to diameter 1.


use fixedbitset::FixedBitSet;
use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::affine_rank;
use crate::rational::{inner_product, squared_distance, Rational};

/// Dimension-d points with exact rational coordinates.
///
/// Points are pairwise distinct by construction; duplicates are an input
/// error, not silently merged, because multiplicity has no meaning for
/// diameter graphs. Ordering is stable: a point keeps its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Rational>>,
    label: Option<String>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(p.len(), dim));
            }
            for (j, q) in points[..i].iter().enumerate() {
                if p == q {
                    return Err(Error::DuplicatePoints(j, i));
                }
            }
        }
        Ok(PointSet {
            dim,
            points,
            label: None,
        })
    }

    pub fn from_integers(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let points = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::rational::rat_i(x)).collect())
            .collect();
        PointSet::new(dim, points)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn sqdist(&self, i: usize, j: usize) -> Rational {
        squared_distance(&self.points[i], &self.points[j]).expect("same dimension by invariant")
    }

    /// Affine dimension of the set (2 = planar, regardless of ambient dim).
    pub fn affine_dim(&self) -> usize {
        affine_rank(&self.points)
    }

    /// Uniformly scale all coordinates by a rational factor.
    pub fn scaled(&self, factor: &Rational) -> PointSet {
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(|x| x * factor).collect())
            .collect();
        PointSet {
            dim: self.dim,
            points,
            label: self.label.clone(),
        }
    }

    /// Apply a permutation: new point i is old point perm[i].
    pub fn permuted(&self, perm: &[usize]) -> PointSet {
        assert_eq!(perm.len(), self.len());
        PointSet {
            dim: self.dim,
            points: perm.iter().map(|&i| self.points[i].clone()).collect(),
            label: self.label.clone(),
        }
    }
}

/// Exact maximum squared distance and the complete sorted list of attaining
/// index pairs.
pub fn diameter(ps: &PointSet) -> Result<(Rational, Vec<(usize, usize)>)> {
    extreme_pairs(ps, true)
}

/// Exact minimum squared distance and its attaining pairs.
pub fn min_distance(ps: &PointSet) -> Result<(Rational, Vec<(usize, usize)>)> {
    extreme_pairs(ps, false)
}

fn extreme_pairs(ps: &PointSet, maximum: bool) -> Result<(Rational, Vec<(usize, usize)>)> {
    if ps.len() < 2 {
        return Err(Error::TooFewPoints {
            need: 2,
            got: ps.len(),
        });
    }
    let mut best: Option<Rational> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let d = ps.sqdist(i, j);
            match &best {
                None => {
                    best = Some(d);
                    pairs = vec![(i, j)];
                }
                Some(b) => {
                    let better = if maximum { d > *b } else { d < *b };
                    if better {
                        best = Some(d);
                        pairs = vec![(i, j)];
                    } else if d == *b {
                        pairs.push((i, j));
                    }
                }
            }
        }
    }
    Ok((best.expect("at least one pair"), pairs))
}

/// Graph whose edges are exactly the pairs attaining the maximum squared
/// distance.
pub fn diameter_graph(ps: &PointSet) -> Result<Graph> {
    let (_, pairs) = diameter(ps)?;
    Ok(Graph::from_edges(ps.len(), &pairs))
}

/// Graph whose edges are exactly the pairs attaining the minimum squared
/// distance.
pub fn kissing_graph(ps: &PointSet) -> Result<Graph> {
    let (_, pairs) = min_distance(ps)?;
    Ok(Graph::from_edges(ps.len(), &pairs))
}

/// Graph whose edges are the pairs at squared distance exactly `r2`.
pub fn unit_distance_graph(ps: &PointSet, r2: &Rational) -> Result<Graph> {
    if !r2.is_positive() {
        return Err(Error::InvalidRadius);
    }
    let mut g = Graph::new(ps.len());
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if ps.sqdist(i, j) == *r2 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Face counts of the clique complex of an equal-length graph.
///
/// `counts[r]` is the number of r-dimensional faces, i.e. (r+1)-cliques.
/// Since every edge carries one squared length, every clique is a regular
/// simplex; a face of dimension above the ambient dimension would be
/// geometrically impossible and is flagged anomalous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCounts {
    pub counts: Vec<u64>,
    pub anomalous: bool,
}

impl FaceCounts {
    /// Faces of dimension r (0-based); 0 beyond the recorded range.
    pub fn faces(&self, r: usize) -> u64 {
        self.counts.get(r).copied().unwrap_or(0)
    }
}

/// Count all cliques of `g`, requiring that every edge of `g` joins points of
/// `ps` at one common squared length.
pub fn face_counts(ps: &PointSet, g: &Graph) -> Result<FaceCounts> {
    let mut shared: Option<Rational> = None;
    for (u, v) in g.edges() {
        let d = ps.sqdist(u, v);
        match &shared {
            None => shared = Some(d),
            Some(s) if *s != d => {
                return Err(Error::MixedEdgeLengths(
                    crate::rational::format_rational(s),
                    crate::rational::format_rational(&d),
                ))
            }
            _ => {}
        }
    }
    let counts = clique_counts(g);
    let anomalous = counts
        .iter()
        .enumerate()
        .any(|(r, &c)| r > ps.dim() && c > 0);
    Ok(FaceCounts { counts, anomalous })
}

/// Number of (r+1)-cliques for each r, by depth-first extension in vertex
/// index order (deterministic regardless of internal scheduling).
pub fn clique_counts(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut counts: Vec<u64> = Vec::new();
    if n == 0 {
        return counts;
    }
    counts.push(n as u64);
    let mut stack_counts: Vec<u64> = Vec::new();
    fn extend(g: &Graph, cand: &FixedBitSet, size: usize, acc: &mut Vec<u64>) {
        for v in cand.ones() {
            let new_size = size + 1;
            if acc.len() < new_size {
                acc.resize(new_size, 0);
            }
            acc[new_size - 1] += 1;
            let mut next = cand.clone();
            next &= g.adj(v);
            // only extend with higher-indexed vertices
            for w in 0..=v {
                next.remove(w);
            }
            if next.count_ones(..) > 0 {
                extend(g, &next, new_size, acc);
            }
        }
    }
    // cliques of size >= 2: for each vertex, extend among higher neighbors
    for v in 0..n {
        let mut cand = FixedBitSet::with_capacity(n);
        for w in g.neighbors(v) {
            if w > v {
                cand.insert(w);
            }
        }
        if cand.count_ones(..) > 0 {
            extend(g, &cand, 1, &mut stack_counts);
        }
    }
    // merge: stack_counts[k-1] counts cliques of size k (size >= 2 entries)
    for (idx, &c) in stack_counts.iter().enumerate() {
        if idx == 0 {
            continue; // size-1 cliques already counted as n
        }
        if counts.len() <= idx {
            counts.resize(idx + 1, 0);
        }
        counts[idx] += c;
    }
    counts
}

/// The two distinct squared distances (small, large) if exactly two occur.
pub fn two_distance_check(ps: &PointSet) -> Result<Option<(Rational, Rational)>> {
    if ps.len() < 2 {
        return Err(Error::TooFewPoints {
            need: 2,
            got: ps.len(),
        });
    }
    let mut seen: Vec<Rational> = Vec::new();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let d = ps.sqdist(i, j);
            if !seen.contains(&d) {
                seen.push(d);
                if seen.len() > 2 {
                    return Ok(None);
                }
            }
        }
    }
    if seen.len() != 2 {
        return Ok(None);
    }
    seen.sort();
    Ok(Some((seen[0].clone(), seen[1].clone())))
}

/// Closed ball (disc) with rational center and positive rational radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disc {
    pub center: Vec<Rational>,
    pub radius: Rational,
}

impl Disc {
    pub fn new(center: Vec<Rational>, radius: Rational) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::InvalidRadius);
        }
        Ok(Disc { center, radius })
    }
}

/// Edge (i,j) iff the squared center distance equals (r_i+r_j)^2 (external
/// tangency) or (r_i-r_j)^2 (internal), tested exactly.
pub fn disc_tangency_graph(discs: &[Disc]) -> Result<Graph> {
    for (i, a) in discs.iter().enumerate() {
        for (j, b) in discs.iter().enumerate().skip(i + 1) {
            if a == b {
                return Err(Error::CoincidentDiscs(i, j));
            }
        }
    }
    let mut g = Graph::new(discs.len());
    for i in 0..discs.len() {
        for j in i + 1..discs.len() {
            let d2 = squared_distance(&discs[i].center, &discs[j].center)?;
            let sum = &discs[i].radius + &discs[j].radius;
            let diff = &discs[i].radius - &discs[j].radius;
            if d2 == &sum * &sum || (!diff.is_zero() && d2 == &diff * &diff) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Do the closed segments [a,b] and [c,d] intersect?
///
/// Works for any ambient dimension as long as the four points are coplanar
/// (affine rank <= 2); the straddle tests are expressed through inner
/// products, so no planar coordinates are ever needed.
pub fn segments_intersect(ps: &PointSet, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
    let (a, b) = e1;
    let (c, d) = e2;
    if a == c || a == d || b == c || b == d {
        return Ok(true);
    }
    let quad = vec![
        ps.point(a).to_vec(),
        ps.point(b).to_vec(),
        ps.point(c).to_vec(),
        ps.point(d).to_vec(),
    ];
    if affine_rank(&quad) > 2 {
        return Err(Error::InvalidArgument(
            "segment intersection requires coplanar endpoints".into(),
        ));
    }
    let straddles = |p: usize, q: usize, x: usize, y: usize| -> Result<Straddle> {
        // component of (x-p) orthogonal to (q-p), scaled to stay rational
        let base = sub(ps.point(q), ps.point(p));
        let bb = inner_product(&base, &base)?;
        let rej = |z: usize| -> Result<(Vec<Rational>, Rational)> {
            let v = sub(ps.point(z), ps.point(p));
            let t = inner_product(&v, &base)?;
            // w = bb*v - t*base  (parallel component removed, scaled by bb)
            let w: Vec<Rational> = v
                .iter()
                .zip(base.iter())
                .map(|(vi, bi)| vi * &bb - &t * bi)
                .collect();
            Ok((w, t))
        };
        let (wx, tx) = rej(x)?;
        let (wy, ty) = rej(y)?;
        let xzero = wx.iter().all(Rational::is_zero);
        let yzero = wy.iter().all(Rational::is_zero);
        if xzero || yzero {
            // collinear case: on-segment iff the projection parameter t/bb is in [0,1]
            let on = |t: &Rational| !t.is_negative() && *t <= bb;
            return Ok(Straddle::Collinear {
                x_on: xzero && on(&tx),
                y_on: yzero && on(&ty),
            });
        }
        let s = inner_product(&wx, &wy)?;
        Ok(if s.is_negative() {
            Straddle::Opposite
        } else {
            Straddle::Same
        })
    };
    let s1 = straddles(a, b, c, d)?;
    let s2 = straddles(c, d, a, b)?;
    Ok(match (s1, s2) {
        (Straddle::Opposite, Straddle::Opposite) => true,
        (Straddle::Collinear { x_on, y_on }, _) if x_on || y_on => true,
        (_, Straddle::Collinear { x_on, y_on }) if x_on || y_on => true,
        _ => false,
    })
}

enum Straddle {
    Opposite,
    Same,
    Collinear { x_on: bool, y_on: bool },
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::rational::{rat, rat_i};

    fn unit_square() -> PointSet {
        PointSet::from_integers(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            PointSet::from_integers(2, &[&[0, 0], &[0, 0]]),
            Err(Error::DuplicatePoints(0, 1))
        ));
        let one = PointSet::from_integers(2, &[&[0, 0]]).unwrap();
        assert!(diameter(&one).is_err());
        assert!(kissing_graph(&one).is_err());
    }

    #[test]
    fn square_diameter_and_kissing() {
        let sq = unit_square();
        let (d2, pairs) = diameter(&sq).unwrap();
        assert_eq!(d2, rat_i(2));
        assert_eq!(pairs, vec![(0, 2), (1, 3)]);
        let dg = diameter_graph(&sq).unwrap();
        assert_eq!(dg.edge_count(), 2); // perfect matching on the diagonals
        let kg = kissing_graph(&sq).unwrap();
        assert_eq!(kg.edge_count(), 4); // the sides form a 4-cycle
        assert!(kg.has_edge(0, 1) && kg.has_edge(1, 2) && kg.has_edge(2, 3) && kg.has_edge(3, 0));
    }

    #[test]
    fn square_unit_distance_graphs() {
        let sq = unit_square();
        let g1 = unit_distance_graph(&sq, &rat_i(1)).unwrap();
        assert_eq!(g1.edge_count(), 4);
        let g2 = unit_distance_graph(&sq, &rat_i(2)).unwrap();
        assert_eq!(g2.edge_count(), 2);
        assert!(unit_distance_graph(&sq, &rat_i(0)).is_err());
        assert!(unit_distance_graph(&sq, &rat(-1, 2)).is_err());
    }

    #[test]
    fn simplex_diameter_graph_is_complete() {
        for d in 2..=4 {
            let s = presets::simplex(d);
            let g = diameter_graph(&s).unwrap();
            assert_eq!(g.edge_count(), d * (d + 1) / 2);
            let k = kissing_graph(&s).unwrap();
            assert_eq!(k.edge_count(), d * (d + 1) / 2);
        }
    }

    #[test]
    fn triangular_lattice_patch_unit_count() {
        // seven-point patch of the triangular lattice, realized with rational
        // coordinates in the plane x+y+z=0; minimal squared distance is 2.
        let patch = presets::triangular_patch();
        // oracle: brute-force count of pairs at the minimal squared distance
        let (min2, pairs) = min_distance(&patch).unwrap();
        assert_eq!(min2, rat_i(2));
        let g = unit_distance_graph(&patch, &rat_i(2)).unwrap();
        assert_eq!(g.edge_count(), pairs.len());
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn face_counts_tetrahedron() {
        let t = presets::tetrahedron();
        let g = diameter_graph(&t).unwrap();
        let fc = face_counts(&t, &g).unwrap();
        assert_eq!(fc.counts, vec![4, 6, 4, 1]);
        assert!(!fc.anomalous);
        assert_eq!(fc.faces(3), 1);
        assert_eq!(fc.faces(9), 0);
    }

    #[test]
    fn face_counts_square_and_mixed_error() {
        let sq = unit_square();
        let dg = diameter_graph(&sq).unwrap();
        let fc = face_counts(&sq, &dg).unwrap();
        assert_eq!(fc.counts, vec![4, 2]);
        // mixing side and diagonal edges must fail
        let mut mixed = Graph::new(4);
        mixed.add_edge(0, 1);
        mixed.add_edge(0, 2);
        assert!(matches!(
            face_counts(&sq, &mixed),
            Err(Error::MixedEdgeLengths(_, _))
        ));
    }

    #[test]
    fn two_distance_examples() {
        let sq = unit_square();
        let td = two_distance_check(&sq).unwrap().unwrap();
        assert_eq!(td, (rat_i(1), rat_i(2)));
        let simplex = presets::simplex(3);
        assert!(two_distance_check(&simplex).unwrap().is_none());
        let three = PointSet::from_integers(1, &[&[0], &[1], &[3]]).unwrap();
        assert!(two_distance_check(&three).unwrap().is_none());
    }

    #[test]
    fn disc_tangency_cases() {
        let d = |x: i64, r: i64| Disc::new(vec![rat_i(x), rat_i(0)], rat_i(r)).unwrap();
        // external tangency at center distance 2
        let g = disc_tangency_graph(&[d(0, 1), d(2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        // distance 3: disjoint
        let g = disc_tangency_graph(&[d(0, 1), d(3, 1)]).unwrap();
        assert_eq!(g.edge_count(), 0);
        // internal tangency: radii 1 and 3, centers 2 apart
        let g = disc_tangency_graph(&[d(0, 1), d(2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        // coincident discs are an input error
        assert!(disc_tangency_graph(&[d(0, 1), d(0, 1)]).is_err());
        assert!(Disc::new(vec![rat_i(0)], rat_i(0)).is_err());
    }

    #[test]
    fn segment_intersection_predicate() {
        let ps = PointSet::from_integers(
            2,
            &[&[0, 0], &[2, 2], &[0, 2], &[2, 0], &[5, 5], &[1, 1], &[3, 3], &[0, 5], &[5, 0]],
        )
        .unwrap();
        // proper crossing
        assert!(segments_intersect(&ps, (0, 1), (2, 3)).unwrap());
        // shared endpoint
        assert!(segments_intersect(&ps, (0, 1), (1, 4)).unwrap());
        // touching: (1,1) lies on the segment (0,2)-(2,0)
        assert!(segments_intersect(&ps, (0, 5), (2, 3)).unwrap());
        // disjoint: (0,0)-(1,1) stays strictly below the line x+y=5
        assert!(!segments_intersect(&ps, (0, 5), (7, 8)).unwrap());
        // collinear overlap: [0,(2,2)] and [(1,1),(3,3)]
        assert!(segments_intersect(&ps, (0, 1), (5, 6)).unwrap());
        // touching at interior point of one segment
        let t = PointSet::from_integers(2, &[&[0, 0], &[4, 0], &[2, 0], &[2, 3]]).unwrap();
        assert!(segments_intersect(&t, (0, 1), (2, 3)).unwrap());
    }

    #[test]
    fn diameter_invariance_under_scaling_and_permutation() {
        let ps = presets::ngon(9).unwrap();
        let g = diameter_graph(&ps).unwrap();
        let scaled = ps.scaled(&rat(3, 7));
        assert_eq!(diameter_graph(&scaled).unwrap(), g);
        let perm: Vec<usize> = (0..ps.len()).rev().collect();
        let pg = diameter_graph(&ps.permuted(&perm)).unwrap();
        // relabel back and compare
        let back: Vec<usize> = perm.clone();
        assert_eq!(pg.relabeled(&back), g);
    }
}
