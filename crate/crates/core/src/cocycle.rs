//! GF(2) cocycles of k-uniform hypergraphs: the coboundary operator, cocycle
//! verification, the de Caen-Kreher-Wiseman 4-uniform construction, exact
//! small-n extremal numbers, and sign-vector candidate sets.
//!
//! A (k-1)-dimensional cocycle is a k-uniform hypergraph in which every set
//! of k+1 vertices spans an even number of edges; equivalently, a coboundary
//! of some (k-1)-uniform hypergraph. Edge sets over the space of k-subsets
//! are bit vectors (u128 words suffice at workbench scale).

use std::collections::HashSet;

use serde::Serialize;

use crate::combin::{binomial, k_subsets, mask_elements};
use crate::error::{Error, Result};
use crate::geom::PointSet;
use crate::rational::{rat, rat_i, Rational};

/// k-uniform hypergraph on n labeled vertices; edges are bitmask-encoded
/// k-subsets, stored sorted (set-lexicographic) and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<u64>,
}

impl UniformHypergraph {
    pub fn new(n: usize, k: usize, mut edges: Vec<u64>) -> Result<Self> {
        if n > 63 {
            return Err(Error::InstanceTooLarge(format!("n = {n} > 63")));
        }
        for &e in &edges {
            if e.count_ones() as usize != k {
                return Err(Error::UniformityMismatch {
                    expected: k,
                    got: e.count_ones() as usize,
                });
            }
            if e >> n != 0 {
                return Err(Error::InvalidArgument(format!(
                    "edge {:?} outside vertex range [0,{})",
                    mask_elements(e),
                    n
                )));
            }
        }
        edges.sort_by(|a, b| crate::combin::cmp_masks_lex(*a, *b));
        edges.dedup();
        Ok(UniformHypergraph { n, k, edges })
    }

    pub fn empty(n: usize, k: usize) -> Self {
        UniformHypergraph {
            n,
            k,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize, k: usize) -> Self {
        UniformHypergraph {
            n,
            k,
            edges: k_subsets(n, k),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, mask: u64) -> bool {
        self.edges
            .binary_search_by(|e| crate::combin::cmp_masks_lex(*e, mask))
            .is_ok()
    }

    /// Symmetric difference of edge sets (same n, k).
    pub fn sym_diff(&self, other: &UniformHypergraph) -> Result<UniformHypergraph> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::UniformityMismatch {
                expected: self.k,
                got: other.k,
            });
        }
        let a: HashSet<u64> = self.edges.iter().copied().collect();
        let b: HashSet<u64> = other.edges.iter().copied().collect();
        let edges: Vec<u64> = a.symmetric_difference(&b).copied().collect();
        UniformHypergraph::new(self.n, self.k, edges)
    }
}

/// Coboundary: all k-sets containing an odd number of edges of the
/// (k-1)-uniform input.
pub fn coboundary(h: &UniformHypergraph) -> Result<UniformHypergraph> {
    let k = h.k() + 1;
    if k > h.n() {
        return Err(Error::UniformityMismatch {
            expected: h.n(),
            got: k,
        });
    }
    let edge_set: HashSet<u64> = h.edges().iter().copied().collect();
    let mut result = Vec::new();
    for t in k_subsets(h.n(), k) {
        let mut parity = 0u32;
        // (k-1)-subsets of t: drop one element at a time
        let mut m = t;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if edge_set.contains(&(t & !low)) {
                parity ^= 1;
            }
            m &= m - 1;
        }
        if parity == 1 {
            result.push(t);
        }
    }
    UniformHypergraph::new(h.n(), k, result)
}

/// First (k+1)-set spanning an odd number of edges, in lexicographic order,
/// or None when the hypergraph is a cocycle.
pub fn cocycle_violation(g: &UniformHypergraph) -> Option<u64> {
    let k1 = g.k() + 1;
    if k1 > g.n() {
        return None; // no (k+1)-sets at all
    }
    let edge_set: HashSet<u64> = g.edges().iter().copied().collect();
    for w in k_subsets(g.n(), k1) {
        let mut count = 0u32;
        let mut m = w;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if edge_set.contains(&(w & !low)) {
                count += 1;
            }
            m &= m - 1;
        }
        if count % 2 == 1 {
            return Some(w);
        }
    }
    None
}

pub fn is_cocycle(g: &UniformHypergraph) -> bool {
    cocycle_violation(g).is_none()
}

/// First (k+1)-set whose k-subsets are all edges (a complete
/// sub-hypergraph), or None.
pub fn turan_violation(g: &UniformHypergraph) -> Option<u64> {
    let k1 = g.k() + 1;
    if k1 > g.n() {
        return None;
    }
    let edge_set: HashSet<u64> = g.edges().iter().copied().collect();
    'outer: for w in k_subsets(g.n(), k1) {
        let mut m = w;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if !edge_set.contains(&(w & !low)) {
                continue 'outer;
            }
            m &= m - 1;
        }
        return Some(w);
    }
    None
}

pub fn turan_check(g: &UniformHypergraph) -> bool {
    turan_violation(g).is_none()
}

/// Square matrix with entries in {+1,-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmMatrix {
    pub m: usize,
    pub entries: Vec<Vec<i8>>,
}

impl PmMatrix {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let m = entries.len();
        for row in &entries {
            if row.len() != m {
                return Err(Error::DimensionMismatch(row.len(), m));
            }
            if row.iter().any(|&e| e != 1 && e != -1) {
                return Err(Error::NonPmEntry);
            }
        }
        Ok(PmMatrix { m, entries })
    }

    pub fn all_ones(m: usize) -> Self {
        PmMatrix {
            m,
            entries: vec![vec![1; m]; m],
        }
    }
}

/// The 4-uniform hypergraph on the rows and columns of a +-1 matrix: all
/// quadruples with exactly three rows, all with exactly three columns, and
/// the mixed {2 rows, 2 columns} quadruples whose four matrix entries
/// multiply to -1. (Pure 4-row and 4-column quadruples are excluded.)
pub fn dckw(mat: &PmMatrix) -> Result<UniformHypergraph> {
    let m = mat.m;
    if m < 2 {
        return Err(Error::InvalidArgument("dckw needs m >= 2".into()));
    }
    if 2 * m > 63 {
        return Err(Error::InstanceTooLarge(format!("2m = {} > 63", 2 * m)));
    }
    let n = 2 * m;
    let mut edges = Vec::new();
    let row_bit = |r: usize| 1u64 << r;
    let col_bit = |c: usize| 1u64 << (m + c);
    // 3 rows + 1 column
    for rows in k_subsets(m, 3) {
        for c in 0..m {
            edges.push(rows | col_bit(c));
        }
    }
    // 1 row + 3 columns
    for cols in k_subsets(m, 3) {
        let shifted = cols << m;
        for r in 0..m {
            edges.push(shifted | row_bit(r));
        }
    }
    // 2 rows + 2 columns with minor entry product -1
    for rows in k_subsets(m, 2) {
        let rs = mask_elements(rows);
        for cols in k_subsets(m, 2) {
            let cs = mask_elements(cols);
            let prod = mat.entries[rs[0]][cs[0]] as i32
                * mat.entries[rs[0]][cs[1]] as i32
                * mat.entries[rs[1]][cs[0]] as i32
                * mat.entries[rs[1]][cs[1]] as i32;
            if prod == -1 {
                edges.push(rows | (cols << m));
            }
        }
    }
    UniformHypergraph::new(n, 4, edges)
}

/// Exact expected edge count of the construction over uniform random +-1
/// matrices: 2*m*C(m,3) + C(m,2)^2 / 2.
pub fn expected_dckw_edges(m: usize) -> Result<Rational> {
    if m < 2 {
        return Err(Error::InvalidArgument("needs m >= 2".into()));
    }
    let fixed = rat_i(2 * m as i64) * rat_i(binomial(m, 3) as i64);
    let pairs = rat_i(binomial(m, 2) as i64);
    Ok(fixed + &pairs * &pairs * rat(1, 2))
}

/// Asymptotic density reference for the expected construction size, as a
/// fraction of C(2m, 4).
pub fn expected_dckw_fraction(m: usize) -> Result<Rational> {
    let total = rat_i(binomial(2 * m, 4) as i64);
    Ok(expected_dckw_edges(m)? / total)
}

#[derive(Debug, Clone, Serialize)]
pub struct TuranReport {
    pub n: usize,
    pub k: usize,
    /// Maximum edges over all cocycles.
    pub f_nk: usize,
    /// Maximum edges with no complete (k+1)-vertex sub-hypergraph.
    pub t_nk: usize,
    /// Dimension of the cocycle space, from explicit GF(2) reduction.
    pub cocycle_dim: usize,
    pub f_exhaustive: bool,
    pub t_optimal: bool,
    pub t_nodes: u64,
    /// Density reference for k = 4 (flag-algebra upper bound coefficient).
    pub peled_reference: Option<f64>,
}

const EDGE_SPACE_LIMIT: usize = 128;
const DEFAULT_COCYCLE_DIM_LIMIT: usize = 20;

struct EdgeSpace {
    masks: Vec<u64>,
}

impl EdgeSpace {
    fn new(n: usize, k: usize) -> Result<Self> {
        let masks = k_subsets(n, k);
        if masks.len() > EDGE_SPACE_LIMIT {
            return Err(Error::InstanceTooLarge(format!(
                "edge space C({n},{k}) = {} > {EDGE_SPACE_LIMIT}",
                masks.len()
            )));
        }
        Ok(EdgeSpace { masks })
    }

    fn to_bits(&self, h: &UniformHypergraph) -> u128 {
        let mut bits = 0u128;
        for (i, &m) in self.masks.iter().enumerate() {
            if h.has_edge(m) {
                bits |= 1 << i;
            }
        }
        bits
    }

}

/// GF(2) basis of the cocycle space: coboundaries of the single-(k-1)-set
/// generators, Gaussian-reduced. Returns the basis as edge-space bit vectors.
fn cocycle_basis(n: usize, k: usize, space: &EdgeSpace) -> Result<Vec<u128>> {
    let mut basis: Vec<u128> = Vec::new();
    for s in k_subsets(n, k - 1) {
        let gen = coboundary(&UniformHypergraph::new(n, k - 1, vec![s])?)?;
        let mut v = space.to_bits(&gen);
        for b in &basis {
            let lead = 127 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_by_key(|b| std::cmp::Reverse(*b));
        }
    }
    Ok(basis)
}

/// Exact f(n,k) (max cocycle size, by full enumeration of the cocycle space)
/// and exact T(n,k,k+1) (max K-free size, by branch and bound).
///
/// Only even k is meaningful: for odd k the complete hypergraph is itself a
/// cocycle and both quantities are trivial.
pub fn extremal_numbers(n: usize, k: usize, dim_limit: Option<usize>) -> Result<TuranReport> {
    if k % 2 == 1 {
        return Err(Error::OddUniformityComplete { k });
    }
    if k > n {
        return Err(Error::InvalidArgument(format!("k {k} > n {n}")));
    }
    let space = EdgeSpace::new(n, k)?;
    let basis = cocycle_basis(n, k, &space)?;
    let dim = basis.len();
    let dim_limit = dim_limit.unwrap_or(DEFAULT_COCYCLE_DIM_LIMIT);

    let (f_nk, f_exhaustive) = if dim <= dim_limit {
        // Gray-code walk over the whole space
        let mut cur = 0u128;
        let mut best = 0usize;
        for g in 1u64..(1u64 << dim) {
            let flip = g.trailing_zeros() as usize;
            cur ^= basis[flip];
            best = best.max(cur.count_ones() as usize);
        }
        (best, true)
    } else {
        // too large to enumerate: report the largest generator combination
        // reachable greedily, flagged non-exhaustive
        let mut cur = 0u128;
        for b in &basis {
            if (cur ^ b).count_ones() > cur.count_ones() {
                cur ^= b;
            }
        }
        (cur.count_ones() as usize, false)
    };

    let (t_nk, t_optimal, t_nodes) = turan_max(n, k, &space);

    if f_exhaustive && t_optimal {
        assert!(f_nk <= t_nk, "every even-k cocycle is K-free");
    }
    let peled_reference = if k == 4 {
        Some(0.6916 * binomial(n, 4) as f64)
    } else {
        None
    };
    Ok(TuranReport {
        n,
        k,
        f_nk,
        t_nk,
        cocycle_dim: dim,
        f_exhaustive,
        t_optimal,
        t_nodes,
        peled_reference,
    })
}

/// Branch and bound for the Turán maximum: edges added in lexicographic
/// order, with per-(k+1)-set completeness propagation.
fn turan_max(n: usize, k: usize, space: &EdgeSpace) -> (usize, bool, u64) {
    let edges = &space.masks;
    let m = edges.len();
    let supersets: Vec<Vec<usize>> = {
        let k1sets = k_subsets(n, k + 1);
        // for each edge, the indices (into k1sets) of its supersets
        let mut per_edge = vec![Vec::new(); m];
        for (wi, &w) in k1sets.iter().enumerate() {
            for (ei, &e) in edges.iter().enumerate() {
                if w & e == e {
                    per_edge[ei].push(wi);
                }
            }
        }
        per_edge
    };
    let num_constraints = binomial(n, k + 1) as usize;
    let mut counts = vec![0usize; num_constraints];
    let mut best = 0usize;
    let mut nodes = 0u64;
    const NODE_CAP: u64 = 200_000_000;
    fn dfs(
        i: usize,
        chosen: usize,
        m: usize,
        k: usize,
        supersets: &[Vec<usize>],
        counts: &mut [usize],
        best: &mut usize,
        nodes: &mut u64,
        cap: u64,
    ) -> bool {
        *nodes += 1;
        if *nodes > cap {
            return false;
        }
        if chosen + (m - i) <= *best {
            return true;
        }
        if i == m {
            *best = (*best).max(chosen);
            return true;
        }
        // include edge i if no constraint becomes complete
        if supersets[i].iter().all(|&w| counts[w] < k + 1 - 1) {
            for &w in &supersets[i] {
                counts[w] += 1;
            }
            let ok = dfs(i + 1, chosen + 1, m, k, supersets, counts, best, nodes, cap);
            for &w in &supersets[i] {
                counts[w] -= 1;
            }
            if !ok {
                return false;
            }
        }
        dfs(i + 1, chosen, m, k, supersets, counts, best, nodes, cap)
    }
    let complete = dfs(
        0,
        0,
        m,
        k,
        &supersets,
        &mut counts,
        &mut best,
        &mut nodes,
        NODE_CAP,
    );
    (best, complete, nodes)
}

/// Sign assignment on the (k-1)-subsets of [n], aligned with the
/// lexicographic subset order.
#[derive(Debug, Clone)]
pub struct SignAssignment {
    pub n: usize,
    pub k: usize,
    /// One sign per (k-1)-subset, in lexicographic subset order.
    pub values: Vec<i8>,
}

/// Product sign on each k-subset: f(T) = prod of g(S) over the (k-1)-subsets
/// S of T. Certifies that the -1 support of f equals the coboundary of the
/// -1 support of g.
pub fn cocycle_sign_set(g: &SignAssignment) -> Result<Vec<i8>> {
    let subs = k_subsets(g.n, g.k - 1);
    if subs.len() != g.values.len() {
        return Err(Error::LengthMismatch(subs.len(), g.values.len()));
    }
    if g.values.iter().any(|&v| v != 1 && v != -1) {
        return Err(Error::NonPmEntry);
    }
    let mut sign_of: std::collections::HashMap<u64, i8> = std::collections::HashMap::new();
    for (s, &v) in subs.iter().zip(g.values.iter()) {
        sign_of.insert(*s, v);
    }
    let tsets = k_subsets(g.n, g.k);
    let mut signs = Vec::with_capacity(tsets.len());
    for &t in &tsets {
        let mut prod = 1i8;
        let mut m = t;
        while m != 0 {
            let low = m & m.wrapping_neg();
            prod *= sign_of[&(t & !low)];
            m &= m - 1;
        }
        signs.push(prod);
    }
    // parity certificate
    let neg_support: Vec<u64> = subs
        .iter()
        .zip(g.values.iter())
        .filter(|&(_, &v)| v == -1)
        .map(|(&s, _)| s)
        .collect();
    let h = UniformHypergraph::new(g.n, g.k - 1, neg_support)?;
    let delta = coboundary(&h)?;
    for (&t, &sgn) in tsets.iter().zip(signs.iter()) {
        let in_delta = delta.has_edge(t);
        assert_eq!(
            in_delta,
            sgn == -1,
            "product signs must match coboundary parity"
        );
    }
    Ok(signs)
}

/// All 3-cocycles on n vertices as +-1 points indexed by the 4-subsets of
/// [n]: coordinate -1 exactly on the cocycle's edges. 2^C(n-1,3) points of
/// dimension C(n,4).
pub fn cocycle_candidate_points(n: usize) -> Result<PointSet> {
    let k = 4usize;
    if n < k {
        return Err(Error::InvalidArgument(format!("need n >= 4, got {n}")));
    }
    if n > 6 {
        // 2^C(n-1,3) points: already over a million at n = 7
        return Err(Error::InstanceTooLarge(format!(
            "2^C({},3) = 2^{} candidate points",
            n - 1,
            binomial(n - 1, 3)
        )));
    }
    let space = EdgeSpace::new(n, k)?;
    let basis = cocycle_basis(n, k, &space)?;
    let dim = basis.len();
    let ncoords = space.masks.len();
    let mut points = Vec::with_capacity(1 << dim);
    // enumerate in Gray order but store canonical +-1 rows
    let mut cur = 0u128;
    let push = |points: &mut Vec<Vec<Rational>>, bits: u128| {
        let row: Vec<Rational> = (0..ncoords)
            .map(|i| if bits >> i & 1 == 1 { rat_i(-1) } else { rat_i(1) })
            .collect();
        points.push(row);
    };
    push(&mut points, cur);
    for g in 1u64..(1u64 << dim) {
        cur ^= basis[g.trailing_zeros() as usize];
        push(&mut points, cur);
    }
    Ok(PointSet::new(ncoords, points)?.with_label(format!("cocycle-points-{n}")))
}

/// The cocycle behind a candidate point (for cross-checks): -1 coordinates
/// are the edges.
pub fn point_to_hypergraph(n: usize, coords: &[Rational]) -> Result<UniformHypergraph> {
    let space = EdgeSpace::new(n, 4)?;
    if coords.len() != space.masks.len() {
        return Err(Error::LengthMismatch(coords.len(), space.masks.len()));
    }
    let minus_one = rat_i(-1);
    let edges: Vec<u64> = space
        .masks
        .iter()
        .zip(coords.iter())
        .filter(|&(_, c)| *c == minus_one)
        .map(|(&m, _)| m)
        .collect();
    UniformHypergraph::new(n, 4, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coboundary_basics() {
        // empty H -> empty G
        let h = UniformHypergraph::empty(6, 3);
        assert_eq!(coboundary(&h).unwrap().edge_count(), 0);
        // single triple: exactly its supersets
        let h = UniformHypergraph::new(6, 3, vec![0b111]).unwrap();
        let g = coboundary(&h).unwrap();
        assert_eq!(g.edge_count(), 3);
        for &e in g.edges() {
            assert_eq!(e & 0b111, 0b111);
        }
    }

    #[test]
    fn coboundary_matches_parity_oracle() {
        // two triples sharing a pair, vs direct per-set parity counting
        let h = UniformHypergraph::new(6, 3, vec![0b000111, 0b001011]).unwrap();
        let g = coboundary(&h).unwrap();
        for t in k_subsets(6, 4) {
            let count = h
                .edges()
                .iter()
                .filter(|&&s| t & s == s)
                .count();
            assert_eq!(g.has_edge(t), count % 2 == 1, "set {:?}", mask_elements(t));
        }
    }

    #[test]
    fn cocycle_checks() {
        // complete 4-uniform on 5 vertices: the 5-set spans 5 edges (odd)
        let complete = UniformHypergraph::complete(5, 4);
        assert_eq!(cocycle_violation(&complete), Some(0b11111));
        // remove one edge: 4 is even
        let minus_one =
            UniformHypergraph::new(5, 4, complete.edges()[1..].to_vec()).unwrap();
        assert!(is_cocycle(&minus_one));
        // odd k: the complete hypergraph is a cocycle
        for n in 4..=7 {
            assert!(is_cocycle(&UniformHypergraph::complete(n, 3)));
        }
    }

    #[test]
    fn turan_checks() {
        let complete = UniformHypergraph::complete(5, 4);
        assert!(turan_violation(&complete).is_some());
        assert!(turan_check(&UniformHypergraph::empty(5, 4)));
        // a maximal cocycle stays K-free
        let minus_one =
            UniformHypergraph::new(5, 4, complete.edges()[1..].to_vec()).unwrap();
        assert!(turan_check(&minus_one));
    }

    #[test]
    fn dckw_all_ones_and_single_flip() {
        // all-ones 4x4: all minors multiply to +1, so only the 3+1 types
        let g = dckw(&PmMatrix::all_ones(4)).unwrap();
        assert_eq!(g.edge_count(), 32);
        // single -1 at (0,0): mixed quadruples through row 0 and column 0
        // with the other row and column distinct: 3*3 = 9 more edges
        let mut entries = vec![vec![1i8; 4]; 4];
        entries[0][0] = -1;
        let g = dckw(&PmMatrix::new(entries).unwrap()).unwrap();
        // oracle: direct enumeration
        assert_eq!(g.edge_count(), 41);
        assert!(is_cocycle(&g));
    }

    #[test]
    fn dckw_expected_edges() {
        assert_eq!(expected_dckw_edges(4).unwrap(), rat_i(50));
        assert_eq!(expected_dckw_edges(2).unwrap(), rat(1, 2));
        // fraction approaches 11/16
        let frac = expected_dckw_fraction(64).unwrap();
        let target = rat(11, 16);
        let diff = crate::rational::to_f64(&(&frac - &target));
        assert!(diff.abs() < 0.02, "fraction {diff} off 11/16");
        // m = 4 sanity: 50 / 70 = 5/7
        assert_eq!(expected_dckw_fraction(4).unwrap(), rat(5, 7));
    }

    #[test]
    fn extremal_small_cases() {
        let r5 = extremal_numbers(5, 4, None).unwrap();
        assert_eq!(r5.f_nk, 4);
        assert_eq!(r5.t_nk, 4);
        assert!(r5.f_exhaustive && r5.t_optimal);
        assert_eq!(r5.cocycle_dim, binomial(4, 3) as usize);
        // odd uniformity is rejected with the completeness message
        let err = extremal_numbers(6, 3, None).unwrap_err();
        assert!(err.to_string().contains("cocycle"));
    }

    #[test]
    fn extremal_f_equals_t_at_n6() {
        let r = extremal_numbers(6, 4, None).unwrap();
        assert!(r.f_exhaustive && r.t_optimal);
        assert_eq!(r.cocycle_dim, 10);
        assert_eq!(r.f_nk, r.t_nk);
    }

    #[test]
    fn sign_set_products() {
        // g identically +1 -> f identically +1
        let n = 6;
        let count = k_subsets(n, 3).len();
        let g = SignAssignment {
            n,
            k: 4,
            values: vec![1; count],
        };
        assert!(cocycle_sign_set(&g).unwrap().iter().all(|&s| s == 1));
        // g = -1 exactly on {0,1,2}: f(T) = -1 iff T contains {0,1,2}
        let subs = k_subsets(n, 3);
        let values: Vec<i8> = subs.iter().map(|&s| if s == 0b111 { -1 } else { 1 }).collect();
        let g = SignAssignment { n, k: 4, values };
        let f = cocycle_sign_set(&g).unwrap();
        for (t, s) in k_subsets(n, 4).iter().zip(f.iter()) {
            assert_eq!(*s == -1, t & 0b111 == 0b111);
        }
    }

    #[test]
    fn candidate_points_shapes() {
        let p5 = cocycle_candidate_points(5).unwrap();
        assert_eq!(p5.len(), 16);
        assert_eq!(p5.dim(), 5);
        let p6 = cocycle_candidate_points(6).unwrap();
        assert_eq!(p6.len(), 1024);
        assert_eq!(p6.dim(), 15);
        assert!(cocycle_candidate_points(7).is_err());
        // every candidate's -1 support is a cocycle
        for i in 0..p5.len() {
            let h = point_to_hypergraph(5, p5.point(i)).unwrap();
            assert!(is_cocycle(&h));
        }
    }

    #[test]
    fn coboundary_linearity() {
        let h1 = UniformHypergraph::new(7, 3, vec![0b0000111, 0b0011001]).unwrap();
        let h2 = UniformHypergraph::new(7, 3, vec![0b0011001, 0b1100001]).unwrap();
        let lhs = coboundary(&h1.sym_diff(&h2).unwrap()).unwrap();
        let rhs = coboundary(&h1).unwrap().sym_diff(&coboundary(&h2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
