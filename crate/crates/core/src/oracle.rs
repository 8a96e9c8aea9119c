//! Brute-force ground truth at desk scale: exact girth, roundtrip APSP,
//! d∞, incremental SCCs, exhaustive second paths, and test-instance
//! generators. Shares only sssp/Tarjan with the main modules.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{sssp, tarjan_scc, Direction, Graph, INF};
use crate::rng::RandomStream;

/// Exact roundtrip distances d(u,v) + d(v,u) for all pairs.
#[derive(Clone, Debug)]
pub struct RoundtripMatrix {
    pub n: usize,
    d: Vec<u64>,
}

impl RoundtripMatrix {
    /// Roundtrip distance between `u` and `v`.
    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.d[u * self.n + v]
    }

    /// Largest finite roundtrip distance, or 0 if none.
    pub fn max_finite(&self) -> u64 {
        self.d.iter().copied().filter(|&x| x != INF).max().unwrap_or(0)
    }
}

/// Exact roundtrip APSP by n forward plus n reverse sssp runs.
pub fn exact_roundtrip_apsp(g: &Graph) -> RoundtripMatrix {
    assert!(g.n <= 512, "oracle size bound exceeded");
    let fwd: Vec<_> = (0..g.n).map(|v| sssp(g, v, Direction::Out, None)).collect();
    let rev: Vec<_> = (0..g.n).map(|v| sssp(g, v, Direction::In, None)).collect();
    let mut d = vec![INF; g.n * g.n];
    for u in 0..g.n {
        for v in 0..g.n {
            debug_assert_eq!(fwd[u].dist[v], rev[v].dist[u]);
            d[u * g.n + v] = fwd[u].dist[v].saturating_add(fwd[v].dist[u]);
        }
    }
    RoundtripMatrix { n: g.n, d }
}

/// Exact girth with a witness vertex cycle, or None when acyclic.
pub fn exact_girth(g: &Graph) -> Option<(u64, Vec<usize>)> {
    assert!(g.n <= 512, "oracle size bound exceeded");
    let mut best: Option<(u64, Vec<usize>)> = None;
    for v in 0..g.n {
        let t = sssp(g, v, Direction::Out, None);
        for &e in &g.inc[v] {
            let p = g.edges[e].src;
            if t.dist[p] == INF {
                continue;
            }
            let len = t.dist[p].saturating_add(g.edges[e].len);
            if best.as_ref().is_none_or(|(b, _)| len < *b) {
                let (verts, _) = t.path(g, p).unwrap();
                best = Some((len, verts));
            }
        }
    }
    best
}

/// Smallest ℓ such that u and v share an SCC of the ≤ℓ subgraph, else ∞.
pub fn brute_d_infty(g: &Graph, u: usize, v: usize) -> u64 {
    assert!(g.n <= 128, "oracle size bound exceeded");
    let mut lens: Vec<u64> = g.edges.iter().map(|e| e.len).collect();
    lens.sort_unstable();
    lens.dedup();
    let pred = |cap: u64| -> bool {
        let triples: Vec<_> = g
            .edges
            .iter()
            .filter(|e| e.len <= cap)
            .map(|e| (e.src, e.dst, e.len))
            .collect();
        let sub = Graph::from_edges(g.n, &triples);
        let part = tarjan_scc(&sub);
        if u != v {
            return part.cluster_of[u] == part.cluster_of[v];
        }
        part.clusters[part.cluster_of[u]].members.len() >= 2
            || sub.edges.iter().any(|e| e.src == u && e.dst == u)
    };
    if lens.is_empty() || !pred(*lens.last().unwrap()) {
        return INF;
    }
    // Binary search the smallest feasible distinct length.
    let (mut lo, mut hi) = (0usize, lens.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if pred(lens[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lens[lo]
}

/// Per-edge minimal prefix (1-based) at which it lies in an SCC, by
/// recomputing Tarjan per prefix; Err(edge) if some edge never does.
pub fn incremental_scc_times(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, usize> {
    assert!(edges.len() <= 300, "oracle size bound exceeded");
    let mut times = vec![0usize; edges.len()];
    for i in 1..=edges.len() {
        let triples: Vec<_> = edges[..i].iter().map(|&(u, v)| (u, v, 1)).collect();
        let g = Graph::from_edges(n, &triples);
        let part = tarjan_scc(&g);
        for (j, &(u, v)) in edges[..i].iter().enumerate() {
            if times[j] == 0 && part.cluster_of[u] == part.cluster_of[v] {
                times[j] = i;
            }
        }
    }
    match times.iter().position(|&t| t == 0) {
        Some(bad) => Err(bad),
        None => Ok(times),
    }
}

/// Length of the shortest simple s→t path differing from `shortest`,
/// by exhaustive DFS; ∞ when no second path exists.
pub fn enumerate_second_simple_path(g: &Graph, s: usize, t: usize, shortest: &[usize]) -> u64 {
    assert!(g.n <= 22, "oracle size bound exceeded");
    let mut on_path = vec![false; g.n];
    let mut path = vec![s];
    let mut best = INF;
    on_path[s] = true;
    dfs_paths(g, t, shortest, &mut path, &mut on_path, 0, &mut best);
    best
}

fn dfs_paths(
    g: &Graph,
    t: usize,
    shortest: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    len: u64,
    best: &mut u64,
) {
    let cur = *path.last().unwrap();
    if cur == t {
        if len < *best && path.as_slice() != shortest {
            *best = len;
        }
        return;
    }
    for &e in &g.out[cur] {
        let u = g.edges[e].dst;
        let nl = len.saturating_add(g.edges[e].len);
        if on_path[u] || nl > *best {
            continue;
        }
        on_path[u] = true;
        path.push(u);
        dfs_paths(g, t, shortest, path, on_path, nl, best);
        path.pop();
        on_path[u] = false;
    }
}

/// Layered triangle-detection instance: n copies per vertex, every cycle
/// length a multiple of n, girth n exactly when g has a triangle.
pub fn hardness_instance(g: &Graph) -> Graph {
    assert!(g.unit_lengths(), "base graph must be unweighted");
    let n = g.n;
    // Copy i ∈ 1..=n of vertex v gets id v·n + (i−1).
    let id = |v: usize, i: usize| v * n + (i - 1);
    let mut h = Graph::new(n * n);
    for e in &g.edges {
        let (u, v) = (e.src, e.dst);
        h.add_edge(id(u, n), id(v, 1), 1);
        if n >= 2 {
            h.add_edge(id(u, 1), id(v, 2), 1);
        }
        if n >= 3 {
            h.add_edge(id(u, 2), id(v, 3), 1);
        }
    }
    for v in 0..n {
        for i in 3..n {
            h.add_edge(id(v, i), id(v, i + 1), 1);
        }
    }
    h
}

/// Random loop-free digraph with m distinct directed pairs.
pub fn random_digraph(n: usize, m: usize, max_len: u64, rng: &mut RandomStream) -> Graph {
    assert!(n >= 1 && max_len >= 1);
    assert!(m <= n * (n - 1), "infeasible edge count");
    let mut g = Graph::new(n);
    let mut used = BTreeSet::new();
    while used.len() < m {
        let u = rng.below(n as u64) as usize;
        let v = rng.below(n as u64) as usize;
        if u == v || !used.insert((u, v)) {
            continue;
        }
        let len = 1 + rng.below(max_len);
        g.add_edge(u, v, len);
    }
    g
}

/// Random Hamiltonian cycle plus `extra` distinct loop-free edges.
pub fn random_strongly_connected(n: usize, extra: usize, max_len: u64, rng: &mut RandomStream) -> Graph {
    assert!(n >= 1 && max_len >= 1);
    let cycle_edges = if n >= 2 { n } else { 0 };
    assert!(extra <= n.saturating_mul(n - 1) - cycle_edges, "infeasible edge count");
    let mut g = Graph::new(n);
    let mut used = BTreeSet::new();
    let perm = rng.permutation(n);
    if n >= 2 {
        for i in 0..n {
            let (u, v) = (perm[i], perm[(i + 1) % n]);
            used.insert((u, v));
            g.add_edge(u, v, 1 + rng.below(max_len));
        }
    }
    let mut added = 0;
    while added < extra {
        let u = rng.below(n as u64) as usize;
        let v = rng.below(n as u64) as usize;
        if u == v || !used.insert((u, v)) {
            continue;
        }
        g.add_edge(u, v, 1 + rng.below(max_len));
        added += 1;
    }
    g
}
