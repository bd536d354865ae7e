//! Set families over [n] and sign-vector families: intersection conditions,
//! exact cover search, orthogonality graphs, and restricted pair counting.
//!
//! Elements are 1-based in the element-sum convention, so the sum of {1,2}
//! is 3. Pair counts are over ordered pairs (A,B) with A != B.

use std::cmp::Ordering;

use serde::Serialize;

use crate::combin::{cmp_masks_lex, k_subsets, mask_elements};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{self, SolveOptions, SolveResult};

/// Subset of {1,..,n} stored as a bitmask (bit i-1 = element i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub fn size(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Sum of the (1-based) elements.
    pub fn elem_sum(&self) -> u64 {
        mask_elements(self.0).iter().map(|&i| (i + 1) as u64).sum()
    }

    pub fn elements(&self) -> Vec<usize> {
        mask_elements(self.0).iter().map(|&i| i + 1).collect()
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset(self.0 & other.0)
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        // lexicographic on sorted element lists; shorter prefix wins
        let a = mask_elements(self.0);
        let b = mask_elements(other.0);
        a.cmp(&b)
    }
}

/// Duplicate-free, lexicographically sorted family of subsets of [n].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new(n: usize, mut members: Vec<Subset>) -> Result<Self> {
        if n > 63 {
            return Err(Error::InstanceTooLarge(format!("ground set {n} > 63")));
        }
        for m in &members {
            if m.0 >> n != 0 {
                return Err(Error::InvalidArgument(format!(
                    "subset {:?} outside ground set [{}]",
                    m.elements(),
                    n
                )));
            }
        }
        members.sort();
        members.dedup();
        Ok(SetFamily { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn member(&self, i: usize) -> Subset {
        self.members[i]
    }
}

/// First pair (in member order) meeting in fewer than t elements, if any.
pub fn intersection_violation(fam: &SetFamily, t: usize) -> Option<(Subset, Subset)> {
    let ms = fam.members();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if ms[i].intersection(&ms[j]).size() < t {
                return Some((ms[i], ms[j]));
            }
        }
    }
    None
}

pub fn is_t_intersecting(fam: &SetFamily, t: usize) -> bool {
    intersection_violation(fam, t).is_none()
}

/// Partition of a t-intersecting family into at most `parts` classes, each
/// (t+1)-intersecting, by exact backtracking (classes are filled in
/// first-use order, which prunes class-permutation symmetry). `None` means
/// the full search proved no such partition exists.
pub fn larman_cover(fam: &SetFamily, t: usize, parts: usize) -> Result<Option<Vec<Vec<usize>>>> {
    if let Some((a, b)) = intersection_violation(fam, t) {
        return Err(Error::NotIntersecting {
            t,
            a: format!("{:?}", a.elements()),
            b: format!("{:?}", b.elements()),
        });
    }
    let ms = fam.members();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    fn go(
        ms: &[Subset],
        t1: usize,
        parts: usize,
        i: usize,
        classes: &mut Vec<Vec<usize>>,
    ) -> bool {
        if i == ms.len() {
            return true;
        }
        for c in 0..classes.len() {
            let fits = classes[c]
                .iter()
                .all(|&j| ms[j].intersection(&ms[i]).size() >= t1);
            if fits {
                classes[c].push(i);
                if go(ms, t1, parts, i + 1, classes) {
                    return true;
                }
                classes[c].pop();
            }
        }
        if classes.len() < parts {
            classes.push(vec![i]);
            if go(ms, t1, parts, i + 1, classes) {
                return true;
            }
            classes.pop();
        }
        false
    }
    if go(ms, t + 1, parts, 0, &mut classes) {
        Ok(Some(classes))
    } else {
        Ok(None)
    }
}

/// Vector in {+1,-1}^n; bit i set means entry i is -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    pub n: usize,
    pub bits: u64,
}

impl SignVector {
    pub fn new(n: usize, bits: u64) -> Self {
        assert!(n <= 63 && bits >> n == 0);
        SignVector { n, bits }
    }

    pub fn entry(&self, i: usize) -> i64 {
        if self.bits >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn to_vec(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.entry(i)).collect()
    }

    /// <x, y> = n - 2 * popcount(x XOR y).
    pub fn inner(&self, other: &SignVector) -> Result<i64> {
        if self.n != other.n {
            return Err(Error::LengthMismatch(self.n, other.n));
        }
        Ok(self.n as i64 - 2 * (self.bits ^ other.bits).count_ones() as i64)
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            n: self.n,
            bits: !self.bits & ((1u64 << self.n) - 1),
        }
    }

    /// Lexicographically smaller of x and -x (entrywise order with -1 < +1).
    pub fn antipodal_representative(&self) -> SignVector {
        let neg = self.negated();
        if sign_lex_cmp(self, &neg) == Ordering::Less {
            *self
        } else {
            neg
        }
    }
}

/// Entrywise lexicographic order with -1 before +1: equivalent to comparing
/// the sets of (-1)-positions lexicographically.
pub fn sign_lex_cmp(a: &SignVector, b: &SignVector) -> Ordering {
    assert_eq!(a.n, b.n);
    if a.bits == b.bits {
        return Ordering::Equal;
    }
    cmp_masks_lex(a.bits, b.bits)
}

/// All vectors with exactly n/2 entries equal to -1, in lexicographic order
/// (first vector has its -1s in the lowest positions). Requires 4 | n.
pub fn balanced_sign_vectors(n: usize) -> Result<Vec<SignVector>> {
    if n == 0 || n % 4 != 0 {
        return Err(Error::NotDivisibleBy4(n));
    }
    Ok(k_subsets(n, n / 2)
        .into_iter()
        .map(|m| SignVector::new(n, m))
        .collect())
}

/// All 2^n sign vectors in lexicographic order.
pub fn all_sign_vectors(n: usize) -> Vec<SignVector> {
    assert!(n <= 24, "2^n vectors would be enormous");
    let mut v: Vec<SignVector> = (0..1u64 << n).map(|b| SignVector::new(n, b)).collect();
    v.sort_by(sign_lex_cmp);
    v
}

/// Edge iff the exact inner product is zero.
pub fn orthogonality_graph(vs: &[SignVector]) -> Result<Graph> {
    let mut g = Graph::new(vs.len());
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i].inner(&vs[j])? == 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Independence experiment on the orthogonality graph of all 2^n sign
/// vectors, with the classical 1.203^-n density threshold as the reference.
#[derive(Debug, Clone, Serialize)]
pub struct FwReport {
    pub n: usize,
    pub vertex_count: usize,
    pub alpha: SolveResult,
    /// alpha / 2^n.
    pub ratio: f64,
    /// Reference density 1.203^-n: above it, two orthogonal vectors must
    /// appear (asymptotically; no assertion is made at desk sizes).
    pub reference: f64,
}

pub fn fw_independence_experiment(n: usize, opts: SolveOptions) -> Result<FwReport> {
    if n == 0 || n > 13 {
        return Err(Error::InstanceTooLarge(format!(
            "orthogonality graph on 2^{n} vertices"
        )));
    }
    let vs = all_sign_vectors(n);
    let g = orthogonality_graph(&vs)?;
    let alpha = solve::max_independent_set(&g, opts);
    let ratio = alpha.value as f64 / vs.len() as f64;
    let reference = 1.203f64.powi(-(n as i32));
    Ok(FwReport {
        n,
        vertex_count: vs.len(),
        alpha,
        ratio,
        reference,
    })
}

/// Count of ordered pairs (A,B), A != B, with |A∩B| = inter_size and, when
/// requested, an exact element-sum on the intersection.
#[derive(Debug, Clone, Serialize)]
pub struct PairCountReport {
    pub f_size: usize,
    pub g_size: usize,
    pub inter_size: usize,
    pub sum_target: Option<u64>,
    pub pairs: u64,
    /// pairs / (|F| * |G|).
    pub density: f64,
}

pub fn pair_count(
    f: &SetFamily,
    g: &SetFamily,
    inter_size: usize,
    sum_target: Option<u64>,
) -> Result<PairCountReport> {
    if f.n() != g.n() {
        return Err(Error::LengthMismatch(f.n(), g.n()));
    }
    let mut pairs = 0u64;
    for a in f.members() {
        for b in g.members() {
            if a == b {
                continue;
            }
            let c = a.intersection(b);
            if c.size() != inter_size {
                continue;
            }
            if let Some(s) = sum_target {
                if c.elem_sum() != s {
                    continue;
                }
            }
            pairs += 1;
        }
    }
    let total = (f.len() as u64) * (g.len() as u64);
    Ok(PairCountReport {
        f_size: f.len(),
        g_size: g.len(),
        inter_size,
        sum_target,
        pairs,
        density: if total == 0 {
            0.0
        } else {
            pairs as f64 / total as f64
        },
    })
}

/// All subsets of [n] with the exact cardinality and element-sum.
pub fn sum_restricted_family(n: usize, size: usize, sum: u64) -> Result<SetFamily> {
    if size > n {
        return Err(Error::InvalidArgument(format!("size {size} > n {n}")));
    }
    let members: Vec<Subset> = k_subsets(n, size)
        .into_iter()
        .map(Subset)
        .filter(|s| s.elem_sum() == sum)
        .collect();
    SetFamily::new(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, sets: &[&[usize]]) -> SetFamily {
        let members = sets
            .iter()
            .map(|els| {
                let mut m = 0u64;
                for &e in els.iter() {
                    m |= 1 << (e - 1);
                }
                Subset(m)
            })
            .collect();
        SetFamily::new(n, members).unwrap()
    }

    #[test]
    fn intersecting_checks() {
        let tri = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(is_t_intersecting(&tri, 1));
        let split = fam(4, &[&[1, 2], &[3, 4]]);
        let (a, b) = intersection_violation(&split, 1).unwrap();
        assert_eq!(a.elements(), vec![1, 2]);
        assert_eq!(b.elements(), vec![3, 4]);
        // any two 3-subsets of [5] intersect
        let all3: Vec<Subset> = k_subsets(5, 3).into_iter().map(Subset).collect();
        let f = SetFamily::new(5, all3).unwrap();
        assert!(is_t_intersecting(&f, 1));
    }

    #[test]
    fn larman_cover_examples() {
        let tri = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let classes = larman_cover(&tri, 1, 3).unwrap().unwrap();
        assert_eq!(classes.len(), 3); // distinct 2-sets pairwise meet in 1 element only
        // star over [6]: all pairs meet exactly in {1}
        let star = fam(6, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6]]);
        let classes = larman_cover(&star, 1, 6).unwrap().unwrap();
        assert_eq!(classes.len(), 5);
        // 2-intersecting classes of distinct 2-sets are singletons, so
        // parts below the family size must fail exhaustively
        assert!(larman_cover(&star, 1, 4).unwrap().is_none());
        // precondition violation
        let split = fam(4, &[&[1, 2], &[3, 4]]);
        assert!(larman_cover(&split, 1, 4).is_err());
    }

    #[test]
    fn larman_cover_classes_validate() {
        // all 2-subsets of [5] containing 1, plus a set meeting each of them
        let f = fam(5, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3, 4, 5]]);
        let classes = larman_cover(&f, 1, 5).unwrap().unwrap();
        let mut seen = vec![false; f.len()];
        for class in &classes {
            for &i in class {
                assert!(!seen[i]);
                seen[i] = true;
            }
            let sub = SetFamily::new(5, class.iter().map(|&i| f.member(i)).collect()).unwrap();
            assert!(is_t_intersecting(&sub, 2));
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn balanced_vectors() {
        assert_eq!(balanced_sign_vectors(4).unwrap().len(), 6);
        assert_eq!(balanced_sign_vectors(8).unwrap().len(), 70);
        assert!(balanced_sign_vectors(6).is_err());
        let first = balanced_sign_vectors(4).unwrap()[0];
        assert_eq!(first.to_vec(), vec![-1, -1, 1, 1]);
    }

    #[test]
    fn orthogonality_structure() {
        // n=2: all four vectors, orthogonal iff they differ in exactly one slot
        let vs = all_sign_vectors(2);
        let g = orthogonality_graph(&vs).unwrap();
        assert_eq!(g.edge_count(), 4);
        // odd length: no orthogonal pairs
        let vs3 = all_sign_vectors(3);
        assert_eq!(orthogonality_graph(&vs3).unwrap().edge_count(), 0);
        // n=4: 6-regular, 48 edges
        let vs4 = all_sign_vectors(4);
        let g4 = orthogonality_graph(&vs4).unwrap();
        assert_eq!(g4.edge_count(), 48);
        for v in 0..16 {
            assert_eq!(g4.degree(v), 6);
        }
    }

    #[test]
    fn fw_experiment_small() {
        // n=2: the orthogonality graph is a 4-cycle, alpha = 2
        let r = fw_independence_experiment(2, SolveOptions::default()).unwrap();
        assert_eq!(r.alpha.value, 2);
        assert!((r.ratio - 0.5).abs() < 1e-12);
        // n=4: exact solver must agree with the exhaustive oracle
        let vs = all_sign_vectors(4);
        let g = orthogonality_graph(&vs).unwrap();
        let oracle = crate::solve::exhaustive::alpha(&g);
        let r4 = fw_independence_experiment(4, SolveOptions::default()).unwrap();
        assert_eq!(r4.alpha.value, oracle);
        assert!(r4.alpha.optimal);
        assert!(r4.reference > 0.0);
    }

    #[test]
    fn pair_count_examples() {
        let all2: Vec<Subset> = k_subsets(4, 2).into_iter().map(Subset).collect();
        let f = SetFamily::new(4, all2).unwrap();
        // hand enumeration: 12 unordered pairs of 2-sets sharing one element
        let r = pair_count(&f, &f, 1, None).unwrap();
        assert_eq!(r.pairs, 24);
        // distinct 2-sets cannot share two elements
        assert_eq!(pair_count(&f, &f, 2, None).unwrap().pairs, 0);
        // sum-restricted: {1,4} and {2,3} are the only 2-sets of [4] with sum 5
        let g = sum_restricted_family(4, 2, 5).unwrap();
        assert_eq!(g.len(), 2);
        let r = pair_count(&g, &g, 0, Some(0)).unwrap();
        assert_eq!(r.pairs, 2);
    }

    #[test]
    fn sum_restricted_edge_cases() {
        let f = sum_restricted_family(4, 2, 3).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.member(0).elements(), vec![1, 2]);
        let empty_set = sum_restricted_family(4, 0, 0).unwrap();
        assert_eq!(empty_set.len(), 1);
        assert_eq!(empty_set.member(0).size(), 0);
        let none = sum_restricted_family(4, 2, 100).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn subset_sum_convention() {
        let s = Subset(0b11); // {1,2}
        assert_eq!(s.elem_sum(), 3);
        assert_eq!(s.size(), 2);
    }

    #[test]
    fn pair_count_total_over_sizes() {
        let all2: Vec<Subset> = k_subsets(4, 2).into_iter().map(Subset).collect();
        let f = SetFamily::new(4, all2).unwrap();
        let total: u64 = (0..=4)
            .map(|s| pair_count(&f, &f, s, None).unwrap().pairs)
            .sum();
        // |F|^2 minus the diagonal
        assert_eq!(total, (f.len() * f.len() - f.len()) as u64);
    }
}
