//! Directed multigraph with nonnegative integer edge lengths, plus the
//! shortest-path, ball, SCC, and contraction primitives everything else
//! builds on.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

/// Sentinel for an unreachable distance.
pub const INF: u64 = u64::MAX;

/// Adds two distances, saturating at `INF`.
#[inline]
pub fn dist_add(a: u64, b: u64) -> u64 {
    a.saturating_add(b)
}

/// A directed edge with a nonnegative integer length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub len: u64,
}

/// Directed multigraph; parallel edges and self-loops are permitted.
#[derive(Clone, Debug)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<Edge>,
    /// Forward adjacency: edge ids leaving each vertex.
    pub out: Vec<Vec<usize>>,
    /// Reverse adjacency: edge ids entering each vertex.
    pub inc: Vec<Vec<usize>>,
    /// For derived graphs, maps each edge id back to an ancestor edge id.
    pub origin: Option<Vec<usize>>,
}

/// Parse failure, naming the 1-based offending line where applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    BadHeader { line: usize },
    BadEdge { line: usize },
    NegativeLength { line: usize },
    VertexOutOfRange { line: usize },
    ZeroSelfLoop { line: usize },
    EdgeCountMismatch { expected: usize, found: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::BadHeader { line } => write!(f, "line {line}: malformed header, expected \"n m\""),
            ParseError::BadEdge { line } => write!(f, "line {line}: malformed edge, expected \"u v w\""),
            ParseError::NegativeLength { line } => write!(f, "line {line}: negative edge length"),
            ParseError::VertexOutOfRange { line } => write!(f, "line {line}: vertex id out of range"),
            ParseError::ZeroSelfLoop { line } => write!(f, "line {line}: self-loop of length 0"),
            ParseError::EdgeCountMismatch { expected, found } => {
                write!(f, "edge count mismatch: header declares {expected}, found {found}")
            }
        }
    }
}

impl Graph {
    /// Creates a graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph { n, edges: Vec::new(), out: vec![Vec::new(); n], inc: vec![Vec::new(); n], origin: None }
    }

    /// Builds a graph from `(src, dst, len)` triples.
    pub fn from_edges(n: usize, triples: &[(usize, usize, u64)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v, l) in triples {
            g.add_edge(u, v, l);
        }
        g
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, src: usize, dst: usize, len: u64) -> usize {
        assert!(src < self.n && dst < self.n, "edge endpoint out of range");
        let id = self.edges.len();
        self.edges.push(Edge { src, dst, len });
        self.out[src].push(id);
        self.inc[dst].push(id);
        id
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// True when every edge has length 1.
    pub fn unit_lengths(&self) -> bool {
        self.edges.iter().all(|e| e.len == 1)
    }

    /// Maps a local edge id to the ancestor id recorded in `origin`, if any.
    #[inline]
    pub fn origin_of(&self, edge: usize) -> usize {
        match &self.origin {
            Some(map) => map[edge],
            None => edge,
        }
    }

    /// Parses the edge-list format: header "n m", then m lines "u v w".
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut g: Option<Graph> = None;
        let mut declared = 0usize;
        let mut found = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() {
                continue;
            }
            let mut tok = s.split_whitespace();
            match g {
                None => {
                    let n = parse_count(tok.next(), line, true)?;
                    let m = parse_count(tok.next(), line, true)?;
                    if tok.next().is_some() {
                        return Err(ParseError::BadHeader { line });
                    }
                    declared = m;
                    g = Some(Graph::new(n));
                }
                Some(ref mut g) => {
                    let u = parse_count(tok.next(), line, false)?;
                    let v = parse_count(tok.next(), line, false)?;
                    let w = parse_length(tok.next(), line)?;
                    if tok.next().is_some() {
                        return Err(ParseError::BadEdge { line });
                    }
                    if u >= g.n || v >= g.n {
                        return Err(ParseError::VertexOutOfRange { line });
                    }
                    if u == v && w == 0 {
                        return Err(ParseError::ZeroSelfLoop { line });
                    }
                    found += 1;
                    if found > declared {
                        return Err(ParseError::EdgeCountMismatch { expected: declared, found });
                    }
                    g.add_edge(u, v, w);
                }
            }
        }
        let g = g.ok_or(ParseError::BadHeader { line: 1 })?;
        if found != declared {
            return Err(ParseError::EdgeCountMismatch { expected: declared, found });
        }
        Ok(g)
    }

    /// Serializes back to the edge-list format in stable edge-id order.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            s.push_str(&format!("{} {} {}\n", e.src, e.dst, e.len));
        }
        s
    }

    /// Subgraph induced by `verts`; returns it with the new→old vertex map.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut map = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::new(map.len());
        let mut origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            let (u, v) = (local[e.src], local[e.dst]);
            if u != usize::MAX && v != usize::MAX {
                g.add_edge(u, v, e.len);
                origin.push(self.origin_of(id));
            }
        }
        g.origin = Some(origin);
        (g, map)
    }
}

fn parse_count(tok: Option<&str>, line: usize, header: bool) -> Result<usize, ParseError> {
    let err = || if header { ParseError::BadHeader { line } } else { ParseError::BadEdge { line } };
    let t = tok.ok_or_else(err)?;
    t.parse::<usize>().map_err(|_| err())
}

fn parse_length(tok: Option<&str>, line: usize) -> Result<u64, ParseError> {
    let t = tok.ok_or(ParseError::BadEdge { line })?;
    match t.parse::<u64>() {
        Ok(w) => Ok(w),
        Err(_) => {
            if t.strip_prefix('-').is_some_and(|r| r.parse::<u64>().is_ok()) {
                Err(ParseError::NegativeLength { line })
            } else {
                Err(ParseError::BadEdge { line })
            }
        }
    }
}

/// Orientation of a shortest-path computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// Single-source shortest-path tree; `In` trees hold distances to the root.
#[derive(Clone, Debug)]
pub struct DistanceTree {
    pub root: usize,
    pub direction: Direction,
    pub dist: Vec<u64>,
    pub parent: Vec<Option<usize>>,
}

impl DistanceTree {
    /// Root-to-v (out) or v-to-root (in) path as (vertices, edge ids).
    pub fn path(&self, g: &Graph, v: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.dist[v] == INF {
            return None;
        }
        let mut verts = vec![v];
        let mut edges = Vec::new();
        let mut cur = v;
        while let Some(e) = self.parent[cur] {
            edges.push(e);
            cur = match self.direction {
                Direction::Out => g.edges[e].src,
                Direction::In => g.edges[e].dst,
            };
            verts.push(cur);
        }
        if self.direction == Direction::Out {
            verts.reverse();
            edges.reverse();
        }
        Some((verts, edges))
    }
}

/// Dijkstra from `source`; `cutoff` leaves vertices beyond it unreached.
pub fn sssp(g: &Graph, source: usize, direction: Direction, cutoff: Option<u64>) -> DistanceTree {
    assert!(source < g.n, "source out of range");
    let bound = cutoff.unwrap_or(INF);
    let mut dist = vec![INF; g.n];
    let mut parent = vec![None; g.n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0;
    // Min-heap on (dist, vertex).
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
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
            let nd = dist_add(d, g.edges[e].len);
            if nd <= bound && nd < dist[u] {
                dist[u] = nd;
                parent[u] = Some(e);
                heap.push(Reverse((nd, u)));
            }
        }
    }
    DistanceTree { root: source, direction, dist, parent }
}

/// {u : d(v,u) ≤ r}, sorted.
pub fn out_ball(g: &Graph, v: usize, r: u64) -> Vec<usize> {
    let t = sssp(g, v, Direction::Out, Some(r));
    (0..g.n).filter(|&u| t.dist[u] != INF).collect()
}

/// {u : d(u,v) ≤ r}, sorted.
pub fn in_ball(g: &Graph, v: usize, r: u64) -> Vec<usize> {
    let t = sssp(g, v, Direction::In, Some(r));
    (0..g.n).filter(|&u| t.dist[u] != INF).collect()
}

/// A roundtrip-metric cluster with its certifying out- and in-trees.
#[derive(Clone, Debug)]
pub struct Ball {
    pub root: usize,
    /// Sorted member vertex ids.
    pub members: Vec<usize>,
    /// Distances root→member, parallel to `members`.
    pub out_dist: Vec<u64>,
    /// Distances member→root, parallel to `members`.
    pub in_dist: Vec<u64>,
    /// Out-tree parent edge per member (`None` at the root).
    pub out_parent: Vec<Option<usize>>,
    /// In-tree parent edge per member (`None` at the root).
    pub in_parent: Vec<Option<usize>>,
    pub radius: u64,
    pub scale: Option<i32>,
    pub failed: bool,
}

impl Ball {
    /// Index of `v` in `members`, if present.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.members.binary_search(&v).ok()
    }

    /// True when `v` is a member.
    pub fn contains(&self, v: usize) -> bool {
        self.index_of(v).is_some()
    }

    /// Roundtrip distance root⇄member for member index `i`.
    pub fn roundtrip(&self, i: usize) -> u64 {
        dist_add(self.out_dist[i], self.in_dist[i])
    }
}

/// Ball of roundtrip radius `r` around `v`: exactly two cutoff sssp calls.
pub fn roundtrip_ball(g: &Graph, v: usize, r: u64) -> Ball {
    let t_out = sssp(g, v, Direction::Out, Some(r));
    let t_in = sssp(g, v, Direction::In, Some(r));
    let mut members = Vec::new();
    for u in 0..g.n {
        if dist_add(t_out.dist[u], t_in.dist[u]) <= r {
            members.push(u);
        }
    }
    let out_dist = members.iter().map(|&u| t_out.dist[u]).collect();
    let in_dist = members.iter().map(|&u| t_in.dist[u]).collect();
    let out_parent = members.iter().map(|&u| t_out.parent[u]).collect();
    let in_parent = members.iter().map(|&u| t_in.parent[u]).collect();
    Ball { root: v, members, out_dist, in_dist, out_parent, in_parent, radius: r, scale: None, failed: false }
}

/// One cluster of a vertex partition.
#[derive(Clone, Debug)]
pub struct Cluster {
    /// Sorted member vertex ids.
    pub members: Vec<usize>,
    pub root: Option<usize>,
    pub tree: Option<DistanceTree>,
}

/// Disjoint clusters covering all vertices.
#[derive(Clone, Debug)]
pub struct VertexPartition {
    pub cluster_of: Vec<usize>,
    pub clusters: Vec<Cluster>,
}

impl VertexPartition {
    /// Checks disjointness and coverage of [0, n).
    pub fn is_partition_of(&self, n: usize) -> bool {
        if self.cluster_of.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for (i, c) in self.clusters.iter().enumerate() {
            for &v in &c.members {
                if v >= n || seen[v] || self.cluster_of[v] != i {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.iter().all(|&b| b)
    }
}

/// Strongly connected components, iteratively (Tarjan).
pub fn tarjan_scc(g: &Graph) -> VertexPartition {
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; g.n];
    let mut low = vec![0usize; g.n];
    let mut on_stack = vec![false; g.n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut cluster_of = vec![UNSET; g.n];
    // Explicit DFS frames: (vertex, next out-edge position).
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for start in 0..g.n {
        if index[start] != UNSET {
            continue;
        }
        frames.push((start, 0));
        index[start] = next;
        low[start] = next;
        next += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some(&mut (v, ref mut ptr)) = frames.last_mut() {
            if *ptr < g.out[v].len() {
                let e = g.out[v][*ptr];
                *ptr += 1;
                let u = g.edges[e].dst;
                if index[u] == UNSET {
                    index[u] = next;
                    low[u] = next;
                    next += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    frames.push((u, 0));
                } else if on_stack[u] && index[u] < low[v] {
                    low[v] = index[u];
                }
            } else {
                frames.pop();
                if let Some(&mut (p, _)) = frames.last_mut() {
                    if low[v] < low[p] {
                        low[p] = low[v];
                    }
                }
                if low[v] == index[v] {
                    let cid = comps.len();
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        cluster_of[w] = cid;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    comps.push(members);
                }
            }
        }
    }
    let clusters = comps.into_iter().map(|members| Cluster { members, root: None, tree: None }).collect();
    VertexPartition { cluster_of, clusters }
}

/// Contracts each cluster to one vertex; intra-cluster edges are dropped.
pub fn contract(g: &Graph, part: &VertexPartition) -> (Graph, Vec<usize>) {
    let mut cg = Graph::new(part.clusters.len());
    let mut origin = Vec::new();
    for (id, e) in g.edges.iter().enumerate() {
        let (cu, cv) = (part.cluster_of[e.src], part.cluster_of[e.dst]);
        if cu != cv {
            cg.add_edge(cu, cv, e.len);
            origin.push(g.origin_of(id));
        }
    }
    cg.origin = Some(origin);
    (cg, part.cluster_of.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    }

    #[test]
    fn parse_two_cycle() {
        let g = Graph::parse("2 2\n0 1 1\n1 0 1").unwrap();
        assert_eq!(g.n, 2);
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges[0], Edge { src: 0, dst: 1, len: 1 });
        assert_eq!(g.edges[1], Edge { src: 1, dst: 0, len: 1 });
    }

    #[test]
    fn parse_triangle_roundtrips_through_serialization() {
        let text = "3 3\n0 1 1\n1 2 1\n2 0 1\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.to_edge_list(), text);
    }

    #[test]
    fn parse_edge_count_mismatch() {
        let err = Graph::parse("2 1\n0 1 1\n1 0 1").unwrap_err();
        assert_eq!(err, ParseError::EdgeCountMismatch { expected: 1, found: 2 });
        let err = Graph::parse("2 3\n0 1 1\n1 0 1").unwrap_err();
        assert_eq!(err, ParseError::EdgeCountMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn parse_errors_name_lines() {
        assert_eq!(Graph::parse("2 1\n0 1 -4").unwrap_err(), ParseError::NegativeLength { line: 2 });
        assert_eq!(Graph::parse("2 1\n0 2 1").unwrap_err(), ParseError::VertexOutOfRange { line: 2 });
        assert_eq!(Graph::parse("2 1\n0 x 1").unwrap_err(), ParseError::BadEdge { line: 2 });
        assert_eq!(Graph::parse("1 1\n0 0 0").unwrap_err(), ParseError::ZeroSelfLoop { line: 2 });
        assert_eq!(Graph::parse("").unwrap_err(), ParseError::BadHeader { line: 1 });
        assert_eq!(Graph::parse("2\n0 1 1").unwrap_err(), ParseError::BadHeader { line: 1 });
    }

    #[test]
    fn parse_skips_blank_lines() {
        let g = Graph::parse("\n2 2\n\n0 1 1\n1 0 3\n\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges[1].len, 3);
    }

    #[test]
    fn parse_allows_positive_self_loop() {
        let g = Graph::parse("1 1\n0 0 5").unwrap();
        assert_eq!(g.edges[0], Edge { src: 0, dst: 0, len: 5 });
    }

    #[test]
    fn sssp_triangle_both_directions() {
        let g = triangle();
        let t = sssp(&g, 0, Direction::Out, None);
        assert_eq!(t.dist, vec![0, 1, 2]);
        let t = sssp(&g, 0, Direction::In, None);
        assert_eq!(t.dist, vec![0, 2, 1]);
    }

    #[test]
    fn sssp_cutoff_leaves_far_vertices_unreached() {
        let g = Graph::from_edges(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)]);
        let t = sssp(&g, 0, Direction::Out, Some(2));
        assert_eq!(t.dist, vec![0, 1, 2, INF, INF]);
        assert_eq!(t.parent[3], None);
    }

    #[test]
    fn sssp_path_reconstruction() {
        let g = triangle();
        let t = sssp(&g, 0, Direction::Out, None);
        assert_eq!(t.path(&g, 2), Some((vec![0, 1, 2], vec![0, 1])));
        let t = sssp(&g, 0, Direction::In, None);
        assert_eq!(t.path(&g, 2), Some((vec![2, 0], vec![2])));
    }

    #[test]
    fn balls_on_triangle() {
        let g = triangle();
        assert_eq!(out_ball(&g, 0, 1), vec![0, 1]);
        assert_eq!(out_ball(&g, 0, 0), vec![0]);
    }

    #[test]
    fn balls_on_weighted_two_cycle() {
        let g = Graph::from_edges(2, &[(0, 1, 3), (1, 0, 5)]);
        assert_eq!(out_ball(&g, 0, 4), vec![0, 1]);
        assert_eq!(in_ball(&g, 0, 4), vec![0]);
    }

    #[test]
    fn roundtrip_ball_on_triangle() {
        let g = triangle();
        let b = roundtrip_ball(&g, 0, 3);
        assert_eq!(b.members, vec![0, 1, 2]);
        let b = roundtrip_ball(&g, 0, 2);
        assert_eq!(b.members, vec![0]);
    }

    #[test]
    fn roundtrip_ball_weighted_two_cycle() {
        let g = Graph::from_edges(2, &[(0, 1, 3), (1, 0, 5)]);
        let b = roundtrip_ball(&g, 0, 8);
        assert_eq!(b.members, vec![0, 1]);
        assert_eq!(b.radius, 8);
        for i in 0..b.members.len() {
            assert!(b.roundtrip(i) <= 2 * b.radius);
        }
        let b = roundtrip_ball(&g, 0, 7);
        assert_eq!(b.members, vec![0]);
    }

    #[test]
    fn roundtrip_ball_trees_certify_members() {
        let g = Graph::from_edges(4, &[(0, 1, 2), (1, 0, 2), (1, 2, 1), (2, 1, 1), (0, 3, 9), (3, 0, 9)]);
        let b = roundtrip_ball(&g, 0, 6);
        assert_eq!(b.members, vec![0, 1, 2]);
        let i = b.index_of(2).unwrap();
        assert_eq!(b.out_dist[i], 3);
        assert_eq!(b.in_dist[i], 3);
        // Parent edges of members stay inside the member set.
        for (i, &v) in b.members.iter().enumerate() {
            if let Some(e) = b.out_parent[i] {
                assert_eq!(g.edges[e].dst, v);
                assert!(b.contains(g.edges[e].src));
            }
            if let Some(e) = b.in_parent[i] {
                assert_eq!(g.edges[e].src, v);
                assert!(b.contains(g.edges[e].dst));
            }
        }
    }

    #[test]
    fn tarjan_on_dag_gives_singletons() {
        let g = Graph::from_edges(3, &[(0, 1, 1), (1, 2, 1)]);
        let p = tarjan_scc(&g);
        assert_eq!(p.clusters.len(), 3);
        assert!(p.is_partition_of(3));
        for c in &p.clusters {
            assert_eq!(c.members.len(), 1);
        }
    }

    #[test]
    fn tarjan_on_triangle_single_component() {
        let p = tarjan_scc(&triangle());
        assert_eq!(p.clusters.len(), 1);
        assert_eq!(p.clusters[0].members, vec![0, 1, 2]);
    }

    #[test]
    fn tarjan_triangle_with_pendant() {
        let g = Graph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)]);
        let p = tarjan_scc(&g);
        let mut comps: Vec<Vec<usize>> = p.clusters.iter().map(|c| c.members.clone()).collect();
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn contract_two_cycle_to_point() {
        let g = Graph::parse("2 2\n0 1 1\n1 0 1").unwrap();
        let part = VertexPartition {
            cluster_of: vec![0, 0],
            clusters: vec![Cluster { members: vec![0, 1], root: None, tree: None }],
        };
        let (cg, map) = contract(&g, &part);
        assert_eq!(cg.n, 1);
        assert_eq!(cg.m(), 0);
        assert_eq!(map, vec![0, 0]);
    }

    #[test]
    fn contract_triangle_two_clusters() {
        let g = triangle();
        let part = VertexPartition {
            cluster_of: vec![0, 0, 1],
            clusters: vec![
                Cluster { members: vec![0, 1], root: None, tree: None },
                Cluster { members: vec![2], root: None, tree: None },
            ],
        };
        let (cg, _) = contract(&g, &part);
        assert_eq!(cg.n, 2);
        assert_eq!(cg.edges.len(), 2);
        assert_eq!((cg.edges[0].src, cg.edges[0].dst), (0, 1));
        assert_eq!((cg.edges[1].src, cg.edges[1].dst), (1, 0));
        assert_eq!(cg.origin, Some(vec![1, 2]));
    }

    #[test]
    fn contract_identity_is_isomorphic() {
        let g = triangle();
        let part = tarjan_scc(&Graph::new(3));
        let (cg, map) = contract(&g, &part);
        assert_eq!(cg.n, 3);
        let edges: Vec<_> = cg.edges.iter().map(|e| (map[e.src], map[e.dst], e.len)).collect();
        let orig: Vec<_> = g.edges.iter().map(|e| (map[e.src], map[e.dst], e.len)).collect();
        assert_eq!(edges, orig);
    }

    #[test]
    fn induced_subgraph_maps_edges_back() {
        let g = Graph::from_edges(4, &[(0, 1, 1), (1, 2, 2), (2, 0, 3), (2, 3, 4)]);
        let (s, map) = g.induced(&[0, 2, 3]);
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(s.n, 3);
        assert_eq!(s.m(), 2);
        assert_eq!(s.edges[0], Edge { src: 1, dst: 0, len: 3 });
        assert_eq!(s.origin, Some(vec![2, 3]));
    }
}
