//! Exponentially-seeded clustering: the multi-source assignment rule and
//! the sequential ball-growing variant. Sampled shifts live on a 2^-20
//! fixed-point grid so all distance comparisons stay exact.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::graph::{dist_add, Cluster, Direction, DistanceTree, Graph, VertexPartition, INF};
use crate::rng::RandomStream;

/// Fractional bits of the shift grid.
pub const SHIFT_BITS: u32 = 20;
/// One raw distance unit in grid units.
pub const SHIFT_ONE: u64 = 1 << SHIFT_BITS;

/// Rounds a nonnegative real onto the shift grid, saturating.
pub fn quantize_shift(x: f64) -> u64 {
    libm::round(x * SHIFT_ONE as f64) as u64
}

/// Edge length in grid units, saturating.
fn scaled(len: u64) -> u64 {
    if len >> (64 - SHIFT_BITS) != 0 {
        u64::MAX
    } else {
        len << SHIFT_BITS
    }
}

/// Inverse-CDF exponential sample: −ln(u)/beta with u uniform in (0,1].
pub fn sample_exponential(rng: &mut RandomStream, beta: f64) -> f64 {
    assert!(beta > 0.0, "beta must be positive");
    -libm::log(rng.unit()) / beta
}

/// β = ln(n)/r, reading n as at least 2 so β stays positive.
fn beta_for(n: usize, r: f64) -> f64 {
    assert!(r > 0.0, "radius must be positive");
    libm::log(n.max(2) as f64) / r
}

/// Output of a clustering pass.
#[derive(Clone, Debug)]
pub struct ClusterResult {
    pub partition: VertexPartition,
    /// (seed, sampled shift in grid units), in processing order.
    pub shifts: Vec<(usize, u64)>,
    /// Index of the residual cluster in the partition, when nonempty.
    pub residual: Option<usize>,
}

impl ClusterResult {
    /// Members of the residual cluster (empty slice when none).
    pub fn residual_members(&self) -> &[usize] {
        match self.residual {
            Some(i) => &self.partition.clusters[i].members,
            None => &[],
        }
    }
}

/// Clusters from out-distances: each vertex joins the seed minimizing
/// −x_v + d(v,u) unless that minimum is positive.
pub fn cluster_out(g: &Graph, seeds: &[usize], r: f64, rng: &mut RandomStream) -> ClusterResult {
    cluster_directed(g, seeds, r, rng, Direction::Out)
}

/// Symmetric to `cluster_out` on the reverse graph.
pub fn cluster_in(g: &Graph, seeds: &[usize], r: f64, rng: &mut RandomStream) -> ClusterResult {
    cluster_directed(g, seeds, r, rng, Direction::In)
}

fn cluster_directed(g: &Graph, seeds: &[usize], r: f64, rng: &mut RandomStream, direction: Direction) -> ClusterResult {
    let beta = beta_for(g.n, r);
    let mut s = seeds.to_vec();
    s.sort_unstable();
    s.dedup();
    let shifts: Vec<(usize, u64)> =
        s.iter().map(|&v| (v, quantize_shift(sample_exponential(rng, beta)))).collect();
    cluster_quantized(g, direction, &shifts)
}

/// Test hook: forced shifts (raw units), quantized onto the grid.
pub fn cluster_with_shifts(g: &Graph, direction: Direction, forced: &[(usize, f64)]) -> ClusterResult {
    let mut shifts: Vec<(usize, u64)> = forced.iter().map(|&(v, x)| (v, quantize_shift(x))).collect();
    shifts.sort_unstable_by_key(|&(v, _)| v);
    cluster_quantized(g, direction, &shifts)
}

/// Multi-source Dijkstra with per-seed offsets (max_x − x_v) and global
/// cutoff max_x; label order (key, root id) realizes the argmin rule with
/// lowest-seed-id tie-break.
fn cluster_quantized(g: &Graph, direction: Direction, shifts: &[(usize, u64)]) -> ClusterResult {
    for w in shifts.windows(2) {
        assert!(w[0].0 < w[1].0, "duplicate seed");
    }
    let max_x = shifts.iter().map(|&(_, x)| x).max().unwrap_or(0);
    let mut key = vec![INF; g.n];
    let mut root = vec![usize::MAX; g.n];
    let mut parent: Vec<Option<usize>> = vec![None; g.n];
    let mut heap = BinaryHeap::new();
    for &(v, x) in shifts {
        assert!(v < g.n, "seed out of range");
        let k = max_x - x;
        if (k, v) < (key[v], root[v]) {
            key[v] = k;
            root[v] = v;
            heap.push(Reverse((k, v, v)));
        }
    }
    while let Some(Reverse((k, rt, v))) = heap.pop() {
        if (k, rt) != (key[v], root[v]) {
            continue;
        }
        let adj = match direction {
            Direction::Out => &g.out[v],
            Direction::In => &g.inc[v],
        };
        for &e in adj {
            let u = match direction {
                Direction::Out => g.edges[e].dst,
                Direction::In => g.edges[e].src,
            };
            let nk = dist_add(k, scaled(g.edges[e].len));
            if nk <= max_x && (nk, rt) < (key[u], root[u]) {
                key[u] = nk;
                root[u] = rt;
                parent[u] = Some(e);
                heap.push(Reverse((nk, rt, u)));
            }
        }
    }
    // Gather members per winning seed, then the residual.
    let mut members_of: Vec<Vec<usize>> = vec![Vec::new(); g.n];
    let mut rest = Vec::new();
    for u in 0..g.n {
        if root[u] == usize::MAX {
            rest.push(u);
        } else {
            members_of[root[u]].push(u);
        }
    }
    let mut clusters = Vec::new();
    let mut cluster_of = vec![usize::MAX; g.n];
    for &(v, x) in shifts {
        let members = core::mem::take(&mut members_of[v]);
        if members.is_empty() {
            continue;
        }
        let offset = max_x - x;
        let mut dist = vec![INF; g.n];
        let mut per_parent: Vec<Option<usize>> = vec![None; g.n];
        for &u in &members {
            cluster_of[u] = clusters.len();
            debug_assert_eq!((key[u] - offset) % SHIFT_ONE, 0);
            dist[u] = (key[u] - offset) >> SHIFT_BITS;
            per_parent[u] = parent[u];
        }
        let tree = DistanceTree { root: v, direction, dist, parent: per_parent };
        clusters.push(Cluster { members, root: Some(v), tree: Some(tree) });
    }
    let residual = if rest.is_empty() {
        None
    } else {
        for &u in &rest {
            cluster_of[u] = clusters.len();
        }
        clusters.push(Cluster { members: rest, root: None, tree: None });
        Some(clusters.len() - 1)
    };
    ClusterResult { partition: VertexPartition { cluster_of, clusters }, shifts: shifts.to_vec(), residual }
}

/// Sequential variant: grow an out-ball of radius x_i around each surviving
/// order element in the shrinking graph.
pub fn sequential_cluster_out(g: &Graph, order: &[usize], r: f64, rng: &mut RandomStream) -> ClusterResult {
    let beta = beta_for(g.n, r);
    sequential_core(g, Direction::Out, order, &mut |rng_needed: &mut RandomStream| {
        quantize_shift(sample_exponential(rng_needed, beta))
    }, rng)
}

/// Symmetric to `sequential_cluster_out` with in-balls.
pub fn sequential_cluster_in(g: &Graph, order: &[usize], r: f64, rng: &mut RandomStream) -> ClusterResult {
    let beta = beta_for(g.n, r);
    sequential_core(g, Direction::In, order, &mut |rng_needed: &mut RandomStream| {
        quantize_shift(sample_exponential(rng_needed, beta))
    }, rng)
}

/// Test hook: forced shifts consumed in survivor order.
pub fn sequential_cluster_with_shifts(g: &Graph, direction: Direction, order: &[usize], xs: &[f64]) -> ClusterResult {
    let mut next = 0usize;
    let mut rng = RandomStream::new(0);
    sequential_core(g, direction, order, &mut |_: &mut RandomStream| {
        assert!(next < xs.len(), "ran out of forced shifts");
        let x = quantize_shift(xs[next]);
        next += 1;
        x
    }, &mut rng)
}

fn sequential_core(
    g: &Graph,
    direction: Direction,
    order: &[usize],
    shift_for: &mut dyn FnMut(&mut RandomStream) -> u64,
    rng: &mut RandomStream,
) -> ClusterResult {
    let mut alive = vec![true; g.n];
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut cluster_of = vec![usize::MAX; g.n];
    let mut shifts = Vec::new();
    for &v in order {
        assert!(v < g.n, "order vertex out of range");
        if !alive[v] {
            continue;
        }
        let x = shift_for(rng);
        shifts.push((v, x));
        // Cutoff ball inside the surviving subgraph; floor(x) is exact
        // against integer distances.
        let cutoff = x >> SHIFT_BITS;
        let mut dist = vec![INF; g.n];
        let mut parent: Vec<Option<usize>> = vec![None; g.n];
        let mut heap = BinaryHeap::new();
        dist[v] = 0;
        heap.push(Reverse((0u64, v)));
        while let Some(Reverse((d, w))) = heap.pop() {
            if d > dist[w] {
                continue;
            }
            let adj = match direction {
                Direction::Out => &g.out[w],
                Direction::In => &g.inc[w],
            };
            for &e in adj {
                let u = match direction {
                    Direction::Out => g.edges[e].dst,
                    Direction::In => g.edges[e].src,
                };
                let nd = dist_add(d, g.edges[e].len);
                if alive[u] && nd <= cutoff && nd < dist[u] {
                    dist[u] = nd;
                    parent[u] = Some(e);
                    heap.push(Reverse((nd, u)));
                }
            }
        }
        let members: Vec<usize> = (0..g.n).filter(|&u| dist[u] != INF).collect();
        for &u in &members {
            alive[u] = false;
            cluster_of[u] = clusters.len();
        }
        clusters.push(Cluster {
            members,
            root: Some(v),
            tree: Some(DistanceTree { root: v, direction, dist, parent }),
        });
    }
    let rest: Vec<usize> = (0..g.n).filter(|&u| alive[u]).collect();
    let residual = if rest.is_empty() {
        None
    } else {
        for &u in &rest {
            cluster_of[u] = clusters.len();
        }
        clusters.push(Cluster { members: rest, root: None, tree: None });
        Some(clusters.len() - 1)
    };
    ClusterResult { partition: VertexPartition { cluster_of, clusters }, shifts, residual }
}
