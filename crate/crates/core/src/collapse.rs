//! Weight-range collapse: collapse times, the L∞-roundtrip spanner with its
//! collapse forest, interval collapse, and the per-scale graph family.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{tarjan_scc, Graph, INF};

/// Union-find with path halving; roots are linked explicitly so merged
/// classes can be pointed at freshly created forest nodes.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn push(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn link(&mut self, child: usize, root: usize) {
        let c = self.find(child);
        self.parent[c] = root;
    }
}

/// For every edge of the sequence, the smallest 1-based prefix index at which
/// the edge is present and its endpoints share a strongly connected component
/// of the prefix graph; `Err` names the first edge whose endpoints never do.
pub fn find_collapse_times(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, usize> {
    let mut times = vec![0usize; edges.len()];
    let mut work: Vec<(usize, usize, usize)> = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        assert!(u < n && v < n, "edge endpoint out of range");
        if u == v {
            // A self-loop is a cycle by itself, so it collapses on arrival.
            times[i] = i + 1;
        } else {
            work.push((u, v, i + 1));
        }
    }
    if !work.is_empty() {
        let mut dsu = Dsu::new(n);
        collapse_range(&mut dsu, work, 1, edges.len(), &mut times);
    }
    match times.iter().position(|&t| t == 0) {
        Some(bad) => Err(bad),
        None => Ok(times),
    }
}

/// One node of the divide and conquer over the position range [lo, hi].
/// Invariant: items carry positions ≤ hi and their endpoints are in distinct
/// union-find classes, the classes being exactly the co-SCC classes of the
/// prefix ending at lo − 1.
fn collapse_range(
    dsu: &mut Dsu,
    items: Vec<(usize, usize, usize)>,
    lo: usize,
    hi: usize,
    times: &mut [usize],
) {
    if items.is_empty() {
        return;
    }
    let mid = if lo == hi { hi } else { (lo + hi) / 2 };
    let part = prefix_components(dsu, &items, mid);
    if lo == hi {
        for (i, &(.., pos)) in items.iter().enumerate() {
            if part.as_ref().map_or(false, |(cls, of)| cls[of[2 * i]] == cls[of[2 * i + 1]]) {
                times[pos - 1] = lo;
            }
        }
        return;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &item) in items.iter().enumerate() {
        let (u, v, pos) = item;
        let merged = part.as_ref().map_or(false, |(cls, of)| cls[of[2 * i]] == cls[of[2 * i + 1]]);
        if merged {
            if pos <= mid {
                left.push(item);
            } else {
                // Endpoints already share a component when the edge arrives.
                times[pos - 1] = pos;
            }
            let (cls, of) = part.as_ref().unwrap();
            groups.entry(cls[of[2 * i]]).or_default().push(dsu.find(u));
            groups.entry(cls[of[2 * i]]).or_default().push(dsu.find(v));
        } else {
            right.push(item);
        }
    }
    collapse_range(dsu, left, lo, mid, times);
    // Contract the prefix components before descending into later positions.
    for (_, members) in groups {
        let root = dsu.find(members[0]);
        for &r in &members[1..] {
            dsu.link(r, root);
        }
    }
    collapse_range(dsu, right, mid + 1, hi, times);
}

/// SCC labels of the graph formed by items with position ≤ mid, over current
/// union-find roots; also returns per-endpoint local ids (2 per item).
#[allow(clippy::type_complexity)]
fn prefix_components(
    dsu: &mut Dsu,
    items: &[(usize, usize, usize)],
    mid: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut roots: Vec<usize> = Vec::with_capacity(2 * items.len());
    for &(u, v, _) in items {
        roots.push(dsu.find(u));
        roots.push(dsu.find(v));
    }
    let mut sorted = roots.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let of: Vec<usize> = roots.iter().map(|r| sorted.binary_search(r).unwrap()).collect();
    let mut local = Graph::new(sorted.len());
    let mut any = false;
    for (i, &(.., pos)) in items.iter().enumerate() {
        debug_assert_ne!(of[2 * i], of[2 * i + 1], "items must straddle distinct classes");
        if pos <= mid {
            local.add_edge(of[2 * i], of[2 * i + 1], 1);
            any = true;
        }
    }
    if !any {
        return None;
    }
    Some((tarjan_scc(&local).cluster_of, of))
}

/// Hierarchy of cycle collapses: leaves are original vertices (label 0) and
/// each internal node is a super-vertex labelled with the length of the edge
/// whose arrival merged its children.
#[derive(Clone, Debug)]
pub struct CollapseForest {
    pub parent: Vec<Option<usize>>,
    pub label: Vec<u64>,
    /// Nodes below this id are original vertices.
    pub leaves: usize,
    depth: Vec<usize>,
    up: Vec<Vec<usize>>,
}

impl CollapseForest {
    fn new(n: usize) -> Self {
        CollapseForest { parent: vec![None; n], label: vec![0; n], leaves: n, depth: Vec::new(), up: Vec::new() }
    }

    fn push(&mut self, label: u64) -> usize {
        let id = self.parent.len();
        self.parent.push(None);
        self.label.push(label);
        id
    }

    /// Freezes the forest and builds the ancestor tables for LCA queries.
    fn finish(&mut self) {
        let k = self.parent.len();
        self.depth = vec![0; k];
        for v in (0..k).rev() {
            // Parents are created after their children, hence carry larger ids.
            if let Some(p) = self.parent[v] {
                debug_assert!(p > v);
                self.depth[v] = self.depth[p] + 1;
            }
        }
        let max_depth = self.depth.iter().copied().max().unwrap_or(0);
        let mut levels = 1;
        while (1usize << levels) <= max_depth.max(1) {
            levels += 1;
        }
        let mut up = Vec::with_capacity(levels);
        let base: Vec<usize> = (0..k).map(|v| self.parent[v].unwrap_or(v)).collect();
        up.push(base);
        for j in 1..levels {
            let prev = &up[j - 1];
            up.push((0..k).map(|v| prev[prev[v]]).collect());
        }
        self.up = up;
    }

    /// Number of forest nodes, original and merged.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Topmost ancestor of `v`.
    pub fn root_of(&self, v: usize) -> usize {
        let mut r = v;
        for table in self.up.iter().rev() {
            r = table[r];
        }
        debug_assert!(self.parent[r].is_none());
        r
    }

    fn lca(&self, u: usize, v: usize) -> Option<usize> {
        let (mut a, mut b) = if self.depth[u] >= self.depth[v] { (u, v) } else { (v, u) };
        let mut gap = self.depth[a] - self.depth[b];
        for (j, table) in self.up.iter().enumerate() {
            if gap & (1 << j) != 0 {
                a = table[a];
                gap ^= 1 << j;
            }
        }
        if a == b {
            return Some(a);
        }
        for table in self.up.iter().rev() {
            if table[a] != table[b] {
                a = table[a];
                b = table[b];
            }
        }
        if self.up[0][a] == self.up[0][b] && self.parent[a].is_some() {
            Some(self.up[0][a])
        } else {
            None
        }
    }

    /// Smallest max-edge-length of a cycle through both `u` and `v`, read off
    /// the forest: the LCA label for distinct vertices, the nearest proper
    /// ancestor label when `u == v`, and ∞ when no common cycle exists.
    pub fn d_infty_query(&self, u: usize, v: usize) -> u64 {
        assert!(u < self.leaves && v < self.leaves, "queries take original vertices");
        if u == v {
            return match self.parent[u] {
                Some(p) => self.label[p],
                None => INF,
            };
        }
        match self.lca(u, v) {
            Some(w) => self.label[w],
            None => INF,
        }
    }
}

/// A sparse edge set preserving every minimum-max-edge cycle, together with
/// the collapse forest answering `d_infty_query`; returns original edge ids.
pub fn linf_spanner(g: &Graph) -> (Vec<usize>, CollapseForest) {
    let part = tarjan_scc(g);
    let mut order: Vec<usize> = (0..g.m())
        .filter(|&e| part.cluster_of[g.edges[e].src] == part.cluster_of[g.edges[e].dst])
        .collect();
    order.sort_by_key(|&e| (g.edges[e].len, e));

    let mut seq: Vec<(usize, usize)> = Vec::new();
    let mut seq_edge: Vec<usize> = Vec::new();
    let mut seq_rank: Vec<usize> = Vec::new();
    for (i, &e) in order.iter().enumerate() {
        if g.edges[e].src != g.edges[e].dst {
            seq.push((g.edges[e].src, g.edges[e].dst));
            seq_edge.push(e);
            seq_rank.push(i + 1);
        }
    }
    let sub_times = find_collapse_times(g.n, &seq).expect("edges inside components always collapse");
    let mut step_edges: Vec<Vec<usize>> = vec![Vec::new(); order.len() + 1];
    for (j, &t) in sub_times.iter().enumerate() {
        step_edges[seq_rank[t - 1]].push(seq_edge[j]);
    }

    let mut forest = CollapseForest::new(g.n);
    let mut dsu = Dsu::new(g.n);
    let mut chosen = vec![false; g.m()];
    for (i, &eid) in order.iter().enumerate() {
        let rank = i + 1;
        let edge = &g.edges[eid];
        if edge.src == edge.dst {
            let r = dsu.find(edge.src);
            if r < g.n {
                // First cycle through this vertex: record the loop itself.
                let w = forest.push(edge.len);
                debug_assert_eq!(dsu.push(), w);
                forest.parent[r] = Some(w);
                dsu.link(r, w);
                chosen[eid] = true;
            }
            continue;
        }
        if step_edges[rank].is_empty() {
            continue;
        }
        merge_step(g, &order[..rank], &step_edges[rank], edge.len, &mut forest, &mut dsu, &mut chosen);
    }
    let f: Vec<usize> = (0..g.m()).filter(|&e| chosen[e]).collect();
    assert!(f.len() <= 4 * g.n, "spanner exceeds the linear size bound");
    forest.finish();
    (f, forest)
}

/// Contracts the components formed by the edges collapsing at one rank,
/// adding BFS in- and out-trees (over all edges of rank ≤ current) to the
/// spanner and a labelled super-vertex per component to the forest.
fn merge_step(
    g: &Graph,
    available: &[usize],
    step: &[usize],
    label: u64,
    forest: &mut CollapseForest,
    dsu: &mut Dsu,
    chosen: &mut [bool],
) {
    // Edges whose endpoints already share a super-vertex project to loops
    // and form trivial components; they need no tree and no new node.
    let mut roots: Vec<(usize, usize)> = Vec::with_capacity(step.len());
    for &e in step {
        let pair = (dsu.find(g.edges[e].src), dsu.find(g.edges[e].dst));
        if pair.0 != pair.1 {
            roots.push(pair);
        }
    }
    if roots.is_empty() {
        return;
    }
    let mut sorted: Vec<usize> = roots.iter().flat_map(|&(a, b)| [a, b]).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut local = Graph::new(sorted.len());
    for &(ra, rb) in &roots {
        let a = sorted.binary_search(&ra).unwrap();
        let b = sorted.binary_search(&rb).unwrap();
        local.add_edge(a, b, 1);
    }
    let part = tarjan_scc(&local);
    for cluster in &part.clusters {
        if cluster.members.len() < 2 {
            continue;
        }
        let members: Vec<usize> = cluster.members.iter().map(|&l| sorted[l]).collect();
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &r) in members.iter().enumerate() {
            index.insert(r, i);
        }
        let mut out_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); members.len()];
        let mut in_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); members.len()];
        for &e in available {
            let edge = &g.edges[e];
            if edge.src == edge.dst {
                continue;
            }
            let (ra, rb) = (dsu.find(edge.src), dsu.find(edge.dst));
            if ra == rb {
                continue;
            }
            if let (Some(&a), Some(&b)) = (index.get(&ra), index.get(&rb)) {
                out_adj[a].push((b, e));
                in_adj[b].push((a, e));
            }
        }
        let z = index[members.iter().min().unwrap()];
        for adj in [&out_adj, &in_adj] {
            let mut seen = vec![false; members.len()];
            let mut queue = vec![z];
            seen[z] = true;
            while let Some(v) = queue.pop() {
                for &(w, e) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        chosen[e] = true;
                        queue.push(w);
                    }
                }
            }
            assert!(seen.iter().all(|&s| s), "collapsing component must be spanned");
        }
        let w = forest.push(label);
        debug_assert_eq!(dsu.push(), w);
        for &r in &members {
            forest.parent[r] = Some(w);
            dsu.link(r, w);
        }
    }
}

/// `g` collapsed to `[x_l, x_r]`: cycles of edges ≤ x_l contract to single
/// vertices, edges longer than x_r or outside every ≤ x_r component drop,
/// and so do vertices left isolated. Returns the graph (edge origins kept)
/// and the original-vertex → collapsed-vertex map.
pub fn collapse_to_interval(g: &Graph, x_l: f64, x_r: f64) -> (Graph, Vec<Option<usize>>) {
    assert!(x_l > 0.0 && x_l < x_r, "interval must satisfy 0 < x_L < x_R");
    collapse_core(g, libm::floor(x_l) as u64, libm::floor(x_r) as u64)
}

fn collapse_core(g: &Graph, merge_max: u64, keep_max: u64) -> (Graph, Vec<Option<usize>>) {
    let merge_part = length_components(g, merge_max);
    let keep_part = length_components(g, keep_max);
    let mut kept: Vec<usize> = Vec::new();
    for (e, edge) in g.edges.iter().enumerate() {
        if edge.len > keep_max || keep_part[edge.src] != keep_part[edge.dst] {
            continue;
        }
        let survives = if edge.src == edge.dst {
            edge.len > merge_max
        } else {
            merge_part[edge.src] != merge_part[edge.dst]
        };
        if survives {
            kept.push(e);
        }
    }
    project(g, &kept, &merge_part)
}

/// SCC labels of the subgraph of edges with length ≤ bound.
fn length_components(g: &Graph, bound: u64) -> Vec<usize> {
    let triples: Vec<_> = g
        .edges
        .iter()
        .filter(|e| e.len <= bound)
        .map(|e| (e.src, e.dst, 1))
        .collect();
    tarjan_scc(&Graph::from_edges(g.n, &triples)).cluster_of
}

/// Rebuilds the kept edges over the contraction classes, dropping isolated
/// classes and remembering original ids and vertices.
fn project(g: &Graph, kept: &[usize], class_of: &[usize]) -> (Graph, Vec<Option<usize>>) {
    let mut active: Vec<usize> = kept
        .iter()
        .flat_map(|&e| [class_of[g.edges[e].src], class_of[g.edges[e].dst]])
        .collect();
    active.sort_unstable();
    active.dedup();
    let mut out = Graph::new(active.len());
    let mut origin = Vec::with_capacity(kept.len());
    for &e in kept {
        let a = active.binary_search(&class_of[g.edges[e].src]).unwrap();
        let b = active.binary_search(&class_of[g.edges[e].dst]).unwrap();
        out.add_edge(a, b, g.edges[e].len);
        origin.push(g.origin_of(e));
    }
    out.origin = Some(origin);
    let map = (0..g.n).map(|v| active.binary_search(&class_of[v]).ok()).collect();
    (out, map)
}

/// One dyadic scale: `g` collapsed to `[2^t / n, 2^t]`.
#[derive(Clone, Debug)]
pub struct ScaleGraph {
    pub t: i32,
    pub graph: Graph,
    pub vertex_map: Vec<Option<usize>>,
}

/// All nonempty dyadic collapses of `g`, built from a fresh spanner forest.
pub fn build_scale_graphs(g: &Graph) -> Vec<ScaleGraph> {
    let (_, forest) = linf_spanner(g);
    scale_graphs_with_forest(g, &forest)
}

/// All nonempty dyadic collapses, reusing an existing collapse forest: each
/// edge joins exactly the scales t with 2^t/n < d∞(endpoints) ≤ 2^t.
pub fn scale_graphs_with_forest(g: &Graph, forest: &CollapseForest) -> Vec<ScaleGraph> {
    if g.n == 0 {
        return Vec::new();
    }
    let n = g.n as u128;
    let mut by_scale: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (e, edge) in g.edges.iter().enumerate() {
        let d = forest.d_infty_query(edge.src, edge.dst);
        if d == 0 || d == INF {
            continue;
        }
        let mut t = ceil_log2(d);
        let mut scales = 0usize;
        while t < 128 && (1u128 << t) < d as u128 * n {
            by_scale.entry(t as i32).or_default().push(e);
            scales += 1;
            t += 1;
        }
        assert!(scales <= ceil_log2(g.n as u64) as usize + 1, "edge joins too many scales");
    }
    let mut result = Vec::with_capacity(by_scale.len());
    for (t, ids) in by_scale {
        let merge_max = ((1u128 << t) / n).min(u64::MAX as u128) as u64;
        let classes = length_components(g, merge_max);
        let (graph, vertex_map) = project(g, &ids, &classes);
        for (e, edge) in graph.edges.iter().enumerate() {
            // Qualified non-loop edges always straddle distinct merge classes.
            let orig = &g.edges[graph.origin_of(e)];
            debug_assert!(edge.src != edge.dst || orig.src == orig.dst);
        }
        result.push(ScaleGraph { t, graph, vertex_map });
    }
    result
}

/// ⌈log₂ x⌉ for x ≥ 1.
fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}
