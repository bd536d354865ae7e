//! Tensor-power embeddings of sign vectors, with exact integer coordinates.
//!
//! The k-th tensor power sends x to the n^k-entry array of products
//! x_{i1}...x_{ik}; inner products multiply, so squared distances become
//! 2n^k - 2<x,y>^k. For even k, x and -x collapse to one point, and the
//! diameter pairs of the image are exactly the minimum-|inner-product| pairs.
//! No normalization is applied: diameter graphs are scale-invariant, and the
//! full n^k coordinate set keeps every coordinate an integer (the reduced
//! symmetric form would need an irrational scaling).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{all_sign_vectors, balanced_sign_vectors, sign_lex_cmp, SignVector};
use crate::geom::PointSet;
use crate::rational::rat_i;

/// Full tensor power of a sign vector: coords[(i1,..,ik)] = x_{i1}*..*x_{ik},
/// flattened row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorPoint {
    pub n: usize,
    pub k: u32,
    pub coords: Vec<i64>,
}

fn checked_pow(n: usize, k: u32) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..k {
        acc = acc
            .checked_mul(n)
            .filter(|&v| v <= 1 << 24)
            .ok_or_else(|| Error::InstanceTooLarge(format!("tensor dimension {n}^{k}")))?;
    }
    Ok(acc)
}

pub fn tensor_power(x: &SignVector, k: u32) -> Result<TensorPoint> {
    if k < 1 {
        return Err(Error::InvalidArgument("tensor power needs k >= 1".into()));
    }
    let n = x.n;
    let dim = checked_pow(n, k)?;
    let entries = x.to_vec();
    let mut coords = Vec::with_capacity(dim);
    let mut idx = vec![0usize; k as usize];
    loop {
        let mut prod = 1i64;
        for &i in &idx {
            prod *= entries[i];
        }
        coords.push(prod);
        // increment multi-index, last position fastest
        let mut pos = k as usize;
        loop {
            if pos == 0 {
                return Ok(TensorPoint { n, k, coords });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// 2n^k - 2<x,y>^k, cross-checked against the coordinate-wise squared
/// distance of the two tensor points.
pub fn embedded_squared_distance(x: &SignVector, y: &SignVector, k: u32) -> Result<i64> {
    if x.n != y.n {
        return Err(Error::LengthMismatch(x.n, y.n));
    }
    let n = x.n;
    let nk = checked_pow(n, k)? as i64;
    let ip = x.inner(y)?;
    let ipk = ip.pow(k);
    let algebraic = 2 * nk - 2 * ipk;
    let tx = tensor_power(x, k)?;
    let ty = tensor_power(y, k)?;
    let coordinate: i64 = tx
        .coords
        .iter()
        .zip(ty.coords.iter())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    assert_eq!(
        algebraic, coordinate,
        "tensor distance identity must hold exactly"
    );
    Ok(algebraic)
}

fn embed_merged(vectors: &[SignVector], label: &str) -> Result<PointSet> {
    // merge antipodal pairs, keeping the lexicographically smaller vector
    let mut reps: Vec<SignVector> = vectors
        .iter()
        .map(SignVector::antipodal_representative)
        .collect();
    reps.sort_by(sign_lex_cmp);
    reps.dedup();
    let points = reps
        .iter()
        .map(|v| {
            tensor_power(v, 2).map(|t| t.coords.into_iter().map(rat_i).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let n = vectors.first().map(|v| v.n).unwrap_or(0);
    let ps = PointSet::new(n * n, points)?.with_label(label.to_string());
    Ok(ps)
}

/// Tensor-square images of the balanced sign vectors of length n, antipodal
/// duplicates merged. The ambient dimension is n^2; the metrically minimal
/// symmetric embedding would have dimension n(n+1)/2, reported alongside.
pub fn c1_set(n: usize) -> Result<PointSet> {
    let vs = balanced_sign_vectors(n)?;
    embed_merged(&vs, &format!("c1-{n}"))
}

/// Tensor-square images of all 2^n sign vectors, antipodes merged
/// (2^(n-1) points).
pub fn c2_set(n: usize) -> Result<PointSet> {
    if n < 2 {
        return Err(Error::InvalidArgument("c2 needs n >= 2".into()));
    }
    let vs = all_sign_vectors(n);
    embed_merged(&vs, &format!("c2-{n}"))
}

/// Antipodal representatives backing the points of `c1_set`/`c2_set`, in the
/// same order as the resulting point set.
pub fn merged_representatives(vectors: &[SignVector]) -> Vec<SignVector> {
    let mut reps: Vec<SignVector> = vectors
        .iter()
        .map(SignVector::antipodal_representative)
        .collect();
    reps.sort_by(sign_lex_cmp);
    reps.dedup();
    reps
}

/// Dimension of the symmetric (metrically equivalent) embedding space.
pub fn symmetric_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::orthogonality_graph;
    use crate::geom::diameter_graph;

    #[test]
    fn tensor_power_small() {
        let pp = SignVector::new(2, 0b00); // (+1, +1)
        assert_eq!(tensor_power(&pp, 2).unwrap().coords, vec![1, 1, 1, 1]);
        let pm = SignVector::new(2, 0b10); // (+1, -1)
        assert_eq!(tensor_power(&pm, 2).unwrap().coords, vec![1, -1, -1, 1]);
        assert!(tensor_power(&pp, 0).is_err());
    }

    #[test]
    fn tensor_inner_product_law_exhaustive_n4() {
        let vs = all_sign_vectors(4);
        for x in &vs {
            for y in &vs {
                let tx = tensor_power(x, 2).unwrap();
                let ty = tensor_power(y, 2).unwrap();
                let ip2: i64 = tx.coords.iter().zip(&ty.coords).map(|(a, b)| a * b).sum();
                assert_eq!(ip2, x.inner(y).unwrap().pow(2));
            }
        }
    }

    #[test]
    fn embedded_distance_identities() {
        let x = SignVector::new(2, 0b00);
        let y = SignVector::new(2, 0b10);
        // <x,y> = 0, so distance is 2*4 - 0 = 8
        assert_eq!(embedded_squared_distance(&x, &y, 2).unwrap(), 8);
        assert_eq!(embedded_squared_distance(&x, &x, 2).unwrap(), 0);
        // exhaustive for n=4 and k in {2,3}: the assert inside the function
        // cross-checks the coordinate route
        let vs = all_sign_vectors(4);
        for k in [2u32, 3] {
            for x in &vs {
                for y in &vs {
                    let _ = embedded_squared_distance(x, y, k).unwrap();
                }
            }
        }
    }

    #[test]
    fn antipodal_collapse() {
        for v in all_sign_vectors(4) {
            let t = tensor_power(&v, 2).unwrap();
            let tn = tensor_power(&v.negated(), 2).unwrap();
            assert_eq!(t, tn);
        }
    }

    #[test]
    fn c1_c2_sizes() {
        assert_eq!(c1_set(4).unwrap().len(), 3); // 6 balanced vectors in 3 antipodal pairs
        assert_eq!(c1_set(8).unwrap().len(), 35); // 70 / 2
        assert_eq!(c2_set(2).unwrap().len(), 2);
        assert_eq!(c2_set(4).unwrap().len(), 8); // 2^3
        assert_eq!(symmetric_dim(4), 10);
    }

    #[test]
    fn c1_diameter_pairs_are_orthogonal_pairs() {
        // the embedded diameter graph must match the orthogonality graph on
        // the antipodal representatives
        let n = 4;
        let vs = balanced_sign_vectors(n).unwrap();
        let reps = merged_representatives(&vs);
        let expected = orthogonality_graph(&reps).unwrap();
        let ps = c1_set(n).unwrap();
        let got = diameter_graph(&ps).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn c2_diameter_matches_orthogonality_on_reps() {
        let n = 4;
        let vs = all_sign_vectors(n);
        let reps = merged_representatives(&vs);
        let expected = orthogonality_graph(&reps).unwrap();
        let ps = c2_set(n).unwrap();
        let got = diameter_graph(&ps).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn monotone_distance_law() {
        // for fixed n and even k the embedded distance strictly decreases in
        // |<x,y>|
        let vs = all_sign_vectors(6);
        let x = vs[0];
        let mut by_ip: Vec<(i64, i64)> = vs
            .iter()
            .map(|y| {
                (
                    x.inner(y).unwrap().abs(),
                    embedded_squared_distance(&x, y, 2).unwrap(),
                )
            })
            .collect();
        by_ip.sort();
        for w in by_ip.windows(2) {
            if w[0].0 < w[1].0 {
                assert!(w[0].1 > w[1].1);
            } else {
                assert_eq!(w[0].1, w[1].1);
            }
        }
    }
}
