//! Diameter of one Voronoi piece of the unit-diameter ball, for the
//! partition induced by the vertices of a regular simplex.
//!
//! The piece is cone(regular-simplex cell) intersected with the ball of
//! radius 1/2; pieces are congruent, so one suffices. Its diameter is
//! attained between boundary-sphere points, so the search runs over the
//! spherical cell, parametrized by convex combinations of the cell's extreme
//! rays. Ascent from many starts (all corner pairs plus random interior
//! pairs) gives the value; for d <= 3 a fine mesh bounds how much the true
//! diameter could exceed it. Higher dimensions are labeled heuristic.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct PartitionDiameterReport {
    pub d: usize,
    /// Best piece diameter found (the ball has diameter 1).
    pub piece_diameter: f64,
    pub restarts: usize,
    pub gradient_tolerance: f64,
    /// Upper bound on how far below the true diameter the report can be
    /// (mesh certification, d <= 3 only).
    pub certified_mesh_gap: Option<f64>,
    /// True when no mesh certificate backs the number.
    pub heuristic: bool,
}

/// Unit vertices of a regular d-simplex centered at the origin of R^d.
fn simplex_vertices(d: usize) -> Vec<Vec<f64>> {
    // start from e_i - centroid in R^{d+1}, expressed in an orthonormal
    // basis of the hyperplane x_1 + ... + x_{d+1} = 0
    let m = d + 1;
    // basis via Gram-Schmidt on e_i - e_m
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut v = vec![0.0; m];
        v[i] = 1.0;
        v[m - 1] = -1.0;
        for b in &basis {
            let t: f64 = v.iter().zip(b).map(|(a, c)| a * c).sum();
            for (vj, bj) in v.iter_mut().zip(b) {
                *vj -= t * bj;
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
        basis.push(v);
    }
    (0..m)
        .map(|i| {
            let mut w = vec![-1.0 / m as f64; m];
            w[i] += 1.0;
            let mut coords: Vec<f64> = basis
                .iter()
                .map(|b| w.iter().zip(b).map(|(a, c)| a * c).sum())
                .collect();
            let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
            for x in coords.iter_mut() {
                *x /= norm;
            }
            coords
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solve the (d-1) x d homogeneous system <r, a_i> = 0 for the wall normals
/// of the cell, one wall left out at a time: the extreme rays of the cell.
fn cell_extreme_rays(verts: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let d = verts[0].len();
    let walls: Vec<Vec<f64>> = (1..=d)
        .map(|i| {
            verts[0]
                .iter()
                .zip(&verts[i])
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let mut rays = Vec::with_capacity(d);
    for leave_out in 0..d {
        let rows: Vec<&Vec<f64>> = walls
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != leave_out)
            .map(|(_, w)| w)
            .collect();
        let r = nullspace_vector(&rows, d);
        let mut r = r;
        // orient into the cell and toward the center vertex
        if dot(&r, &walls[leave_out]) < 0.0 {
            for x in r.iter_mut() {
                *x = -*x;
            }
        }
        let n = norm(&r);
        for x in r.iter_mut() {
            *x /= n;
        }
        debug_assert!(dot(&r, &verts[0]) > -1e-9);
        rays.push(r);
    }
    rays
}

/// A nonzero vector orthogonal to all given rows (rows < dim).
fn nullspace_vector(rows: &[&Vec<f64>], dim: usize) -> Vec<f64> {
    let mut m: Vec<Vec<f64>> = rows.iter().map(|r| (*r).clone()).collect();
    let nr = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        if r >= nr {
            break;
        }
        let (best, bestval) = (r..nr)
            .map(|i| (i, m[i][c].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if bestval < 1e-12 {
            continue;
        }
        m.swap(r, best);
        for i in 0..nr {
            if i != r && m[i][c].abs() > 0.0 {
                let f = m[i][c] / m[r][c];
                for j in 0..dim {
                    m[i][j] -= f * m[r][j];
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free = (0..dim)
        .find(|c| !pivot_cols.contains(c))
        .expect("underdetermined system has a free column");
    let mut v = vec![0.0; dim];
    v[free] = 1.0;
    for (row_idx, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -m[row_idx][free] / m[row_idx][pc];
    }
    v
}

/// Point on the piece's spherical boundary from barycentric weights over the
/// extreme rays (radius = half the ball diameter).
fn cell_point(rays: &[Vec<f64>], lambda: &[f64], radius: f64) -> Vec<f64> {
    let d = rays[0].len();
    let mut w = vec![0.0; d];
    for (l, r) in lambda.iter().zip(rays) {
        for (wi, ri) in w.iter_mut().zip(r) {
            *wi += l * ri;
        }
    }
    let n = norm(&w);
    w.iter_mut().for_each(|x| *x *= radius / n);
    w
}

fn project_simplex(v: &mut [f64]) {
    // Euclidean projection onto the probability simplex
    let k = v.len();
    let mut u: Vec<f64> = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut css = 0.0;
    let mut rho = 0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        css += ui;
        let t = (css - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            rho = i + 1;
            theta = t;
        }
    }
    let _ = rho;
    for x in v.iter_mut() {
        *x = (*x - theta).max(0.0);
    }
    let s: f64 = v.iter().sum();
    if s > 0.0 {
        v.iter_mut().for_each(|x| *x /= s);
    } else {
        let kinv = 1.0 / k as f64;
        v.iter_mut().for_each(|x| *x = kinv);
    }
}

/// One alternating projected-gradient ascent run; returns the local maximum
/// of the pairwise distance.
fn ascend(rays: &[Vec<f64>], l0: Vec<f64>, m0: Vec<f64>, radius: f64, grad_tol: f64) -> f64 {
    let k = rays.len();
    let mut lam = l0;
    let mut mu = m0;
    let mut step = 0.5;
    let mut best = {
        let x = cell_point(rays, &lam, radius);
        let y = cell_point(rays, &mu, radius);
        dist(&x, &y)
    };
    for _ in 0..600 {
        let x = cell_point(rays, &lam, radius);
        let y = cell_point(rays, &mu, radius);
        // gradient of |x - y| wrt barycentric weights, through the
        // normalize-and-scale map
        let g_l = point_grad(rays, &lam, &x, &y, radius);
        let g_m = point_grad(rays, &mu, &y, &x, radius);
        let gn = norm(&g_l).max(norm(&g_m));
        if gn < grad_tol {
            break;
        }
        let mut try_l = lam.clone();
        let mut try_m = mu.clone();
        for (t, g) in try_l.iter_mut().zip(&g_l) {
            *t += step * g;
        }
        for (t, g) in try_m.iter_mut().zip(&g_m) {
            *t += step * g;
        }
        project_simplex(&mut try_l);
        project_simplex(&mut try_m);
        let cand = dist(
            &cell_point(rays, &try_l, radius),
            &cell_point(rays, &try_m, radius),
        );
        if cand > best {
            best = cand;
            lam = try_l;
            mu = try_m;
            step *= 1.2;
        } else {
            step *= 0.5;
            if step < 1e-14 {
                break;
            }
        }
        let _ = k;
    }
    best
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Gradient of |x(lambda) - y| with respect to lambda.
fn point_grad(rays: &[Vec<f64>], lambda: &[f64], x: &[f64], y: &[f64], radius: f64) -> Vec<f64> {
    let d = rays[0].len();
    let mut w = vec![0.0; d];
    for (l, r) in lambda.iter().zip(rays) {
        for (wi, ri) in w.iter_mut().zip(r) {
            *wi += l * ri;
        }
    }
    let wn = norm(&w);
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let dn = norm(&diff).max(1e-300);
    rays.iter()
        .map(|r| {
            // d x / d lambda_j = radius * (r/|w| - w <w,r>/|w|^3)
            let wr = dot(&w, r);
            let mut g = 0.0;
            for i in 0..d {
                let dxi = radius * (r[i] / wn - w[i] * wr / (wn * wn * wn));
                g += diff[i] / dn * dxi;
            }
            g
        })
        .collect()
}

/// Barycentric mesh over the (k-1)-simplex with the given resolution.
fn barycentric_grid(k: usize, resolution: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    fn go(k: usize, left: usize, resolution: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<f64>>) {
        if acc.len() == k - 1 {
            let mut v: Vec<f64> = acc
                .iter()
                .map(|&a| a as f64 / resolution as f64)
                .collect();
            v.push(left as f64 / resolution as f64);
            out.push(v);
            return;
        }
        for a in 0..=left {
            acc.push(a);
            go(k, left - a, resolution, acc, out);
            acc.pop();
        }
    }
    go(k, resolution, resolution, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn piece_diameter_with_radius(
    d: usize,
    radius: f64,
    restarts: usize,
    seed: u64,
) -> Result<PartitionDiameterReport> {
    if d < 1 || d > 8 {
        return Err(Error::UnsupportedDimension(d, "1..=8"));
    }
    let grad_tol = 1e-9;
    if d == 1 {
        // two pieces [-r, 0], [0, r]: diameter exactly r
        return Ok(PartitionDiameterReport {
            d,
            piece_diameter: radius,
            restarts: 0,
            gradient_tolerance: grad_tol,
            certified_mesh_gap: Some(0.0),
            heuristic: false,
        });
    }
    let verts = simplex_vertices(d);
    let rays = cell_extreme_rays(&verts);
    let k = rays.len();
    let mut best = 0.0f64;
    // corner pairs first: deterministic, and exact for the low dimensions
    for a in 0..k {
        for b in a..k {
            let mut l0 = vec![0.0; k];
            let mut m0 = vec![0.0; k];
            l0[a] = 1.0;
            m0[b] = 1.0;
            best = best.max(ascend(&rays, l0, m0, radius, grad_tol));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restarts {
        let sample = |rng: &mut ChaCha8Rng| {
            let mut v: Vec<f64> = (0..k).map(|_| -(rng.gen::<f64>().ln())).collect();
            let s: f64 = v.iter().sum();
            v.iter_mut().for_each(|x| *x /= s);
            v
        };
        let l0 = sample(&mut rng);
        let m0 = sample(&mut rng);
        best = best.max(ascend(&rays, l0, m0, radius, grad_tol));
    }
    // mesh certification for low dimensions
    let certified_mesh_gap = if d <= 3 {
        let resolution = if d == 2 { 6000 } else { 110 };
        let grid = barycentric_grid(k, resolution);
        let pts: Vec<Vec<f64>> = grid
            .iter()
            .map(|l| cell_point(&rays, l, radius))
            .collect();
        let mut mesh_best = 0.0f64;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let dd = dist(&pts[i], &pts[j]);
                if dd > mesh_best {
                    mesh_best = dd;
                }
            }
        }
        best = best.max(mesh_best);
        // |x(l) - x(l')| <= 2 * radius * |l - l'|_1 / min|w| and the grid has
        // l1 covering radius at most k / resolution
        let m_min = grid
            .iter()
            .map(|l| {
                let mut w = vec![0.0; d];
                for (li, r) in l.iter().zip(&rays) {
                    for (wi, ri) in w.iter_mut().zip(r) {
                        *wi += li * ri;
                    }
                }
                norm(&w)
            })
            .fold(f64::INFINITY, f64::min)
            - k as f64 / resolution as f64; // Lipschitz slack for off-grid points
        let cov = k as f64 / resolution as f64;
        Some(2.0 * (2.0 * radius * cov / m_min.max(1e-6)))
    } else {
        None
    };
    Ok(PartitionDiameterReport {
        d,
        piece_diameter: best,
        restarts,
        gradient_tolerance: grad_tol,
        certified_mesh_gap,
        heuristic: d > 3,
    })
}

/// Diameter of one piece of the unit-diameter ball partitioned by the
/// Voronoi cells of a regular simplex. Supported for d in 1..=8.
pub fn simplex_voronoi_piece_diameter(d: usize) -> Result<PartitionDiameterReport> {
    piece_diameter_with_radius(d, 0.5, 32, 0x9e3779b97f4a7c15)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LogBase {
    Natural,
    Log2,
}

#[derive(Debug, Clone, Serialize)]
pub struct LtReference {
    pub d: usize,
    pub value: f64,
    pub log_base: LogBase,
    pub note: &'static str,
}

/// Volume-argument reference curve 1 - (3/2) log d / d for the best possible
/// piece diameter. Only the two leading terms are known; the O(1/n) constant
/// is not, and the report says so.
pub fn larman_tamvakis_reference(d: usize, base: LogBase) -> Result<LtReference> {
    if d < 2 {
        return Err(Error::UnsupportedDimension(d, "2.."));
    }
    let log = match base {
        LogBase::Natural => (d as f64).ln(),
        LogBase::Log2 => (d as f64).log2(),
    };
    Ok(LtReference {
        d,
        value: 1.0 - 1.5 * log / d as f64,
        log_base: base,
        note: "two leading terms only; the O(1/n) constant is unknown",
    })
}
