//! Equilateral-set search in l_p norms by damped Gauss-Newton on the
//! pairwise residuals, with seeded multi-start.
//!
//! Failure is reported honestly as a large residual; the verifier recomputes
//! every pairwise distance from scratch and is the only judge of quality.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// l_p norm specification; Inf is the max norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum NormSpec {
    P(f64),
    Inf,
}

impl NormSpec {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_infinite() {
            return Ok(NormSpec::Inf);
        }
        if !(p >= 1.0) {
            return Err(Error::InvalidArgument(format!("p must be >= 1, got {p}")));
        }
        Ok(NormSpec::P(p))
    }

    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            NormSpec::Inf => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
            NormSpec::P(p) => {
                if *p == 2.0 {
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum::<f64>()
                        .sqrt()
                } else if *p == 1.0 {
                    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
                } else {
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| (x - y).abs().powf(*p))
                        .sum::<f64>()
                        .powf(1.0 / *p)
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EquilateralCandidate {
    pub points: Vec<Vec<f64>>,
    /// Target pairwise distance is 1.
    pub max_deviation: f64,
    pub restarts_used: usize,
    pub best_restart: usize,
}

/// Recompute max |dist - 1| over all pairs, independent of the search path.
pub fn verify_equilateral(norm: &NormSpec, points: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            worst = worst.max((norm.distance(&points[i], &points[j]) - 1.0).abs());
        }
    }
    worst
}

/// Subgradient of dist(a,b) with respect to a_k.
fn ddist(norm: &NormSpec, a: &[f64], b: &[f64], k: usize, dist: f64) -> f64 {
    let delta = a[k] - b[k];
    match norm {
        NormSpec::Inf => {
            // first coordinate attaining the max
            let (arg, _) = a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs())
                .enumerate()
                .fold((0usize, -1.0f64), |acc, (i, v)| {
                    if v > acc.1 {
                        (i, v)
                    } else {
                        acc
                    }
                });
            if arg == k {
                delta.signum()
            } else {
                0.0
            }
        }
        NormSpec::P(p) => {
            if dist <= 1e-12 {
                return 0.0;
            }
            if *p == 2.0 {
                delta / dist
            } else if *p == 1.0 {
                if delta == 0.0 {
                    0.0
                } else {
                    delta.signum()
                }
            } else {
                delta.signum() * delta.abs().powf(p - 1.0) / dist.powf(p - 1.0)
            }
        }
    }
}

/// Minimize sum (dist_p(x_i, x_j) - 1)^2 by damped Gauss-Newton.
fn refine(norm: &NormSpec, points: &mut [Vec<f64>], iters: usize) {
    let size = points.len();
    let d = points[0].len();
    let nv = size * d;
    let npairs = size * (size - 1) / 2;
    let mut lambda = 1e-3;
    let mut residuals = vec![0.0; npairs];
    let objective = |pts: &[Vec<f64>]| -> f64 {
        let mut acc = 0.0;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let r = norm.distance(&pts[i], &pts[j]) - 1.0;
                acc += r * r;
            }
        }
        acc
    };
    let mut cur_obj = objective(points);
    for _ in 0..iters {
        if cur_obj < 1e-26 {
            break;
        }
        // Jacobian: rows = pairs, cols = flattened coordinates
        let mut jac = vec![vec![0.0f64; nv]; npairs];
        let mut row = 0;
        for i in 0..size {
            for j in i + 1..size {
                let dist = norm.distance(&points[i], &points[j]);
                residuals[row] = dist - 1.0;
                for k in 0..d {
                    let g = ddist(norm, &points[i], &points[j], k, dist);
                    jac[row][i * d + k] = g;
                    jac[row][j * d + k] = -g;
                }
                row += 1;
            }
        }
        // normal equations with Levenberg damping
        let mut a = vec![vec![0.0f64; nv]; nv];
        let mut b = vec![0.0f64; nv];
        for r in 0..npairs {
            for c1 in 0..nv {
                let jr = jac[r][c1];
                if jr == 0.0 {
                    continue;
                }
                b[c1] -= jr * residuals[r];
                for c2 in 0..nv {
                    a[c1][c2] += jr * jac[r][c2];
                }
            }
        }
        for c in 0..nv {
            a[c][c] += lambda;
        }
        let Some(step) = solve_linear(&mut a, &mut b) else {
            lambda *= 10.0;
            continue;
        };
        let mut cand: Vec<Vec<f64>> = points.to_vec();
        for i in 0..size {
            for k in 0..d {
                cand[i][k] += step[i * d + k];
            }
        }
        let cand_obj = objective(&cand);
        if cand_obj < cur_obj {
            for (p, c) in points.iter_mut().zip(cand) {
                *p = c;
            }
            cur_obj = cand_obj;
            lambda = (lambda * 0.5).max(1e-12);
        } else {
            lambda = (lambda * 4.0).min(1e8);
        }
    }
}

/// In-place Gaussian elimination with partial pivoting; returns None on a
/// singular system.
fn solve_linear(a: &mut [Vec<f64>], b: &mut [f64]) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let (piv, val) = (c..n)
            .map(|r| (r, a[r][c].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if val < 1e-14 {
            return None;
        }
        a.swap(c, piv);
        b.swap(c, piv);
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            if f == 0.0 {
                continue;
            }
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for c in (0..n).rev() {
        let mut acc = b[c];
        for k in c + 1..n {
            acc -= a[c][k] * x[k];
        }
        x[c] = acc / a[c][c];
    }
    Some(x)
}

/// Multi-start search for `target_size` points at pairwise distance 1 in the
/// given norm. Deterministic for a fixed seed and restart count.
pub fn equilateral_search(
    norm: &NormSpec,
    d: usize,
    target_size: usize,
    seed: u64,
    restarts: usize,
) -> Result<EquilateralCandidate> {
    if target_size < 2 {
        return Err(Error::InvalidArgument(
            "equilateral search needs at least 2 points".into(),
        ));
    }
    if d == 0 {
        return Err(Error::UnsupportedDimension(0, "1.."));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<EquilateralCandidate> = None;
    for restart in 0..restarts.max(1) {
        let mut points: Vec<Vec<f64>> = (0..target_size)
            .map(|_| (0..d).map(|_| rng.gen::<f64>() * 1.6 - 0.3).collect())
            .collect();
        refine(norm, &mut points, 220);
        let dev = verify_equilateral(norm, &points);
        let better = match &best {
            None => true,
            Some(b) => dev < b.max_deviation,
        };
        if better {
            best = Some(EquilateralCandidate {
                points,
                max_deviation: dev,
                restarts_used: restarts.max(1),
                best_restart: restart,
            });
        }
    }
    Ok(best.expect("at least one restart"))
}
