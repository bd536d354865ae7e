//! Small combinatorics helpers shared by the set-family and hypergraph code.
//!
//! Subsets of `[n]` (n <= 63) are bitmasks. The canonical order on equal-size
//! subsets is lexicographic on the sorted element lists, which on masks is:
//! the set owning the lowest differing bit comes first.

use std::cmp::Ordering;

/// Compare two same-size masks in set-lexicographic order.
pub fn cmp_masks_lex(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = a ^ b;
    let low = d & d.wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// All k-subsets of {0,..,n-1} as masks, in set-lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 63);
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut m = 0u64;
        for &i in &idx {
            m |= 1 << i;
        }
        out.push(m);
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Elements of a mask, ascending.
pub fn mask_elements(mask: u64) -> Vec<usize> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        v.push(i);
        m &= m - 1;
    }
    v
}

/// Binomial coefficient as u64 (panics on overflow; fine at workbench scale).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}
