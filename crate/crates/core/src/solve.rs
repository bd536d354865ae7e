//! Exact combinatorial solvers on graphs: chromatic number, maximum clique,
//! maximum independent set, and the direction-safe partition lower bound.
//!
//! Branching orders are fixed (highest saturation first, ties by smallest
//! index) so values and witnesses are reproducible run to run. When a node
//! limit cuts a search short the result says so explicitly and its value is a
//! bound in the documented direction, never a guess.

use std::time::Instant;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{diameter_graph, PointSet};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub node_limit: Option<u64>,
}

impl SolveOptions {
    pub fn with_node_limit(limit: u64) -> Self {
        SolveOptions {
            node_limit: Some(limit),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data")]
pub enum Witness {
    /// Proper coloring, one color index per vertex.
    Coloring(Vec<u32>),
    /// Vertex set (clique or independent set), ascending.
    Vertices(Vec<usize>),
}

/// Outcome of one exact solve.
///
/// If `optimal` is false, `value` is still a valid bound: an upper bound for
/// chromatic number (a proper coloring was found), a lower bound for clique
/// and independent-set sizes (a witness set was found).
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Witness,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub wall_ms: f64,
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    limit: Option<u64>,
    complete: bool,
}

impl<'a> CliqueSearch<'a> {
    /// Greedy coloring of the candidate list; returns (vertex, bound) with
    /// bounds non-decreasing. `bound` = color index + 1 is an upper bound on
    /// the clique size inside the candidates up to that vertex.
    fn color_order(&self, cand: &[usize]) -> Vec<(usize, usize)> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            let mut placed = false;
            for class in classes.iter_mut() {
                if class.iter().all(|&u| !self.g.has_edge(u, v)) {
                    class.push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![v]);
            }
        }
        let mut out = Vec::with_capacity(cand.len());
        for (ci, class) in classes.iter().enumerate() {
            for &v in class {
                out.push((v, ci + 1));
            }
        }
        out
    }

    fn expand(&mut self, r: &mut Vec<usize>, cand: &[usize]) {
        self.nodes += 1;
        if let Some(l) = self.limit {
            if self.nodes > l {
                self.complete = false;
                return;
            }
        }
        let order = self.color_order(cand);
        let mut live: Vec<usize> = order.iter().map(|&(v, _)| v).collect();
        for i in (0..order.len()).rev() {
            let (v, bound) = order[i];
            if r.len() + bound <= self.best.len() {
                return;
            }
            r.push(v);
            let next: Vec<usize> = live[..i]
                .iter()
                .copied()
                .filter(|&u| self.g.has_edge(u, v))
                .collect();
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, &next);
            }
            r.pop();
            live.truncate(i);
            if !self.complete {
                return;
            }
        }
    }
}

/// Exact maximum clique (branch and bound with greedy coloring bounds).
pub fn max_clique(g: &Graph, opts: SolveOptions) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    let mut search = CliqueSearch {
        g,
        best: Vec::new(),
        nodes: 0,
        limit: opts.node_limit,
        complete: true,
    };
    if n > 0 {
        let all: Vec<usize> = (0..n).collect();
        let mut r = Vec::new();
        search.expand(&mut r, &all);
        if search.best.is_empty() {
            search.best = vec![0];
        }
    }
    let mut best = search.best;
    best.sort_unstable();
    assert!(is_clique(g, &best), "witness must validate");
    SolveResult {
        value: best.len(),
        witness: Witness::Vertices(best),
        optimal: search.complete,
        nodes_explored: search.nodes,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Exact maximum independent set, via the complement graph.
pub fn max_independent_set(g: &Graph, opts: SolveOptions) -> SolveResult {
    let start = Instant::now();
    let mut res = max_clique(&g.complement(), opts);
    if let Witness::Vertices(v) = &res.witness {
        assert!(is_independent_set(g, v), "witness must validate");
    }
    res.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    res
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub fn is_independent_set(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

pub fn is_proper_coloring(g: &Graph, colors: &[u32]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// DSATUR greedy coloring; returns (color count, coloring).
pub fn dsatur_greedy(g: &Graph) -> (usize, Vec<u32>) {
    let n = g.n();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut used = 0u32;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| (saturation(g, &colors, v), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex exists");
        let c = smallest_free_color(g, &colors, v);
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    (used as usize, colors.into_iter().map(|c| c.unwrap()).collect())
}

fn saturation(g: &Graph, colors: &[Option<u32>], v: usize) -> usize {
    let mut seen = FixedBitSet::with_capacity(g.n() + 1);
    for u in g.neighbors(v) {
        if let Some(c) = colors[u] {
            seen.insert(c as usize);
        }
    }
    seen.count_ones(..)
}

fn smallest_free_color(g: &Graph, colors: &[Option<u32>], v: usize) -> u32 {
    let mut c = 0u32;
    'outer: loop {
        for u in g.neighbors(v) {
            if colors[u] == Some(c) {
                c += 1;
                continue 'outer;
            }
        }
        return c;
    }
}

struct ChromaticSearch<'a> {
    g: &'a Graph,
    best_k: usize,
    best: Vec<u32>,
    lb: usize,
    nodes: u64,
    limit: Option<u64>,
    complete: bool,
}

impl<'a> ChromaticSearch<'a> {
    fn bnb(&mut self, colors: &mut Vec<Option<u32>>, used: u32, colored: usize) {
        if !self.complete || self.best_k == self.lb {
            return;
        }
        self.nodes += 1;
        if let Some(l) = self.limit {
            if self.nodes > l {
                self.complete = false;
                return;
            }
        }
        let n = self.g.n();
        if colored == n {
            let k = used as usize;
            if k < self.best_k {
                self.best_k = k;
                self.best = colors.iter().map(|c| c.unwrap()).collect();
            }
            return;
        }
        // highest saturation first, ties broken by smallest index
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| (saturation(self.g, colors, v), std::cmp::Reverse(v)))
            .expect("uncolored vertex exists");
        let cap = (used + 1).min(self.best_k as u32 - 1);
        for c in 0..cap {
            let clash = self.g.neighbors(v).any(|u| colors[u] == Some(c));
            if clash {
                continue;
            }
            colors[v] = Some(c);
            self.bnb(colors, used.max(c + 1), colored + 1);
            colors[v] = None;
            if !self.complete {
                return;
            }
        }
    }
}

/// Exact chromatic number: greedy upper bound, clique lower bound, then
/// branch and bound on color classes.
pub fn chromatic_number(g: &Graph, opts: SolveOptions) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    if n == 0 {
        return SolveResult {
            value: 0,
            witness: Witness::Coloring(Vec::new()),
            optimal: true,
            nodes_explored: 0,
            wall_ms: 0.0,
        };
    }
    // clique lower bound: budgeted so huge instances still return quickly
    let clique_budget = SolveOptions {
        node_limit: Some(opts.node_limit.unwrap_or(u64::MAX).min(200_000)),
    };
    let clique = max_clique(g, clique_budget);
    let lb = clique.value;
    let (greedy_k, greedy) = dsatur_greedy(g);
    let mut search = ChromaticSearch {
        g,
        best_k: greedy_k,
        best: greedy,
        lb,
        nodes: clique.nodes_explored,
        limit: opts.node_limit,
        complete: true,
    };
    if greedy_k > lb {
        let mut colors: Vec<Option<u32>> = vec![None; n];
        search.bnb(&mut colors, 0, 0);
    }
    assert!(is_proper_coloring(g, &search.best), "witness must validate");
    // exact if the tree was exhausted or the clique bound was met
    let optimal = search.best_k == lb || search.complete;
    SolveResult {
        value: search.best_k,
        witness: Witness::Coloring(search.best),
        optimal,
        nodes_explored: search.nodes,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Greedy partition of the vertices into cliques; its size is a certified
/// upper bound on the independence number.
pub fn greedy_clique_cover_size(g: &Graph) -> usize {
    let n = g.n();
    let mut covered = FixedBitSet::with_capacity(n);
    let mut count = 0;
    for v in 0..n {
        if covered.contains(v) {
            continue;
        }
        let mut clique = vec![v];
        covered.insert(v);
        for u in v + 1..n {
            if !covered.contains(u) && clique.iter().all(|&w| g.has_edge(w, u)) {
                clique.push(u);
                covered.insert(u);
            }
        }
        count += 1;
    }
    count
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionBound {
    /// Certified lower bound on the number of parts (chromatic number).
    pub lower: usize,
    /// Upper bound on the independence number used in n/alpha.
    pub alpha_upper: usize,
    /// Whether alpha_upper is the exact independence number.
    pub alpha_exact: bool,
    /// Lower bound on the clique number (witnessed).
    pub omega_lower: usize,
    pub nodes_explored: u64,
}

/// max(omega, ceil(n / alpha)) with safe directions: a witnessed clique gives
/// the omega side, and when the independence solve is cut short the alpha
/// side falls back to a greedy clique-cover upper bound.
pub fn partition_lower_bound(g: &Graph, opts: SolveOptions) -> PartitionBound {
    let n = g.n();
    let omega = max_clique(g, opts);
    let alpha = max_independent_set(g, opts);
    let (alpha_upper, alpha_exact) = if alpha.optimal {
        (alpha.value, true)
    } else {
        (greedy_clique_cover_size(g), false)
    };
    let ratio = if alpha_upper == 0 {
        0
    } else {
        n.div_ceil(alpha_upper)
    };
    PartitionBound {
        lower: omega.value.max(ratio),
        alpha_upper,
        alpha_exact,
        omega_lower: omega.value,
        nodes_explored: omega.nodes_explored + alpha.nodes_explored,
    }
}

/// Minimum number of smaller-diameter parts for a finite set: the chromatic
/// number of its diameter graph (a part of smaller diameter is exactly an
/// independent set there).
pub fn borsuk_number(ps: &PointSet, opts: SolveOptions) -> Result<SolveResult> {
    if ps.len() < 2 {
        return Err(Error::TooFewPoints {
            need: 2,
            got: ps.len(),
        });
    }
    let g = diameter_graph(ps)?;
    Ok(chromatic_number(&g, opts))
}

pub mod exhaustive {
    //! Brute-force reference implementations, independent of the branch and
    //! bound path. Used by the verify suites and as test oracles; only
    //! sensible for small n.

    use super::Graph;

    /// Exact chromatic number by direct k-colorability search.
    pub fn chromatic(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            if colorable(g, k) {
                return k;
            }
        }
        unreachable!("n colors always suffice")
    }

    fn colorable(g: &Graph, k: usize) -> bool {
        fn go(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize, used: usize) -> bool {
            if v == g.n() {
                return true;
            }
            // allow one fresh color beyond those used: breaks color symmetry
            let cap = k.min(used + 1);
            for c in 0..cap {
                if g.neighbors(v).all(|u| u >= v || colors[u] != c) {
                    colors[v] = c;
                    if go(g, k, colors, v + 1, used.max(c + 1)) {
                        return true;
                    }
                }
            }
            false
        }
        let mut colors = vec![usize::MAX; g.n()];
        go(g, k, &mut colors, 0, 0)
    }

    /// Exact independence number by subset recursion.
    pub fn alpha(g: &Graph) -> usize {
        fn go(g: &Graph, v: usize, chosen: &mut Vec<usize>, best: &mut usize) {
            if v == g.n() {
                *best = (*best).max(chosen.len());
                return;
            }
            if chosen.len() + (g.n() - v) <= *best {
                return;
            }
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                go(g, v + 1, chosen, best);
                chosen.pop();
            }
            go(g, v + 1, chosen, best);
        }
        let mut best = 0;
        go(g, 0, &mut Vec::new(), &mut best);
        best
    }

    /// Exact clique number.
    pub fn omega(g: &Graph) -> usize {
        alpha(&g.complement())
    }
}
