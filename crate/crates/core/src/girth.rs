//! Top-level pipelines: weight-independent roundtrip spanners, multiplicative
//! girth estimation over cover balls, and the additive estimators (sampled
//! and deterministic via detour graphs).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::collapse::{linf_spanner, scale_graphs_with_forest, CollapseForest, ScaleGraph};
use crate::cover::{fast_roundtrip_cover, Cover};
use crate::graph::{dist_add, sssp, tarjan_scc, Direction, DistanceTree, Graph, INF};
use crate::rng::RandomStream;

/// How a witness cycle was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Ball,
    SampledBfs,
    Detour,
    BaseCase,
}

/// A simple cycle in the original graph certifying a girth estimate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    /// Edge ids; edge i runs vertices[i] → vertices[(i+1) % len].
    pub edges: Vec<usize>,
    pub length: u64,
    pub provenance: Provenance,
}

impl CycleWitness {
    /// Rotates the cycle so the smallest vertex comes first.
    fn canonical(mut self) -> Self {
        if let Some(p) = (0..self.vertices.len()).min_by_key(|&i| self.vertices[i]) {
            self.vertices.rotate_left(p);
            self.edges.rotate_left(p);
        }
        self
    }

    /// True when the cycle is simple, lies in `g`, and the length adds up.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.vertices.is_empty() || self.vertices.len() != self.edges.len() {
            return false;
        }
        let distinct: BTreeSet<usize> = self.vertices.iter().copied().collect();
        if distinct.len() != self.vertices.len() {
            return false;
        }
        let mut total = 0u64;
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.m() {
                return false;
            }
            let edge = &g.edges[e];
            let nxt = self.vertices[(i + 1) % self.vertices.len()];
            if edge.src != self.vertices[i] || edge.dst != nxt {
                return false;
            }
            total = dist_add(total, edge.len);
        }
        total == self.length
    }
}

fn better(best: &mut Option<CycleWitness>, cand: CycleWitness) {
    if best.as_ref().is_none_or(|b| cand.length < b.length) {
        *best = Some(cand);
    }
}

/// Rewrites a witness from a derived graph back to its parent coordinates.
fn lift(w: CycleWitness, sub: &Graph, vmap: Option<&[usize]>) -> CycleWitness {
    CycleWitness {
        vertices: w.vertices.iter().map(|&v| vmap.map_or(v, |m| m[v])).collect(),
        edges: w.edges.iter().map(|&e| sub.origin_of(e)).collect(),
        length: w.length,
        provenance: w.provenance,
    }
    .canonical()
}

/// Minimum simple cycle inside a closed walk, found by excising repeats.
fn reduce_closed_walk(g: &Graph, start: usize, walk: &[usize], provenance: Provenance) -> CycleWitness {
    let mut pos = vec![usize::MAX; g.n];
    let mut stack: Vec<(usize, usize)> = vec![(start, usize::MAX)];
    pos[start] = 0;
    let mut best: Option<CycleWitness> = None;
    for &e in walk {
        let edge = &g.edges[e];
        debug_assert_eq!(edge.src, stack.last().unwrap().0, "walk edges must chain");
        let nxt = edge.dst;
        if pos[nxt] != usize::MAX {
            let p = pos[nxt];
            let mut vs = Vec::new();
            let mut es = Vec::new();
            let mut len = 0u64;
            for idx in p..stack.len() {
                vs.push(stack[idx].0);
                if idx > p {
                    es.push(stack[idx].1);
                    len = dist_add(len, g.edges[stack[idx].1].len);
                }
            }
            es.push(e);
            len = dist_add(len, edge.len);
            better(&mut best, CycleWitness { vertices: vs, edges: es, length: len, provenance }.canonical());
            while stack.len() > p + 1 {
                pos[stack.pop().unwrap().0] = usize::MAX;
            }
        } else {
            pos[nxt] = stack.len();
            stack.push((nxt, e));
        }
    }
    debug_assert_eq!(stack.len(), 1, "walk must close at its start");
    best.expect("a closed walk contains a cycle")
}

/// Exact shortest cycle through `v`: one sssp plus the best closing in-edge.
pub fn shortest_cycle_through(g: &Graph, v: usize) -> Option<CycleWitness> {
    let t = sssp(g, v, Direction::Out, None);
    let mut best: Option<(u64, usize)> = None;
    for &e in &g.inc[v] {
        let p = g.edges[e].src;
        if t.dist[p] == INF {
            continue;
        }
        let len = dist_add(t.dist[p], g.edges[e].len);
        if best.is_none_or(|(b, _)| len < b) {
            best = Some((len, e));
        }
    }
    let (len, e) = best?;
    let (vertices, mut edges) = t.path(g, g.edges[e].src).unwrap();
    edges.push(e);
    Some(CycleWitness { vertices, edges, length: len, provenance: Provenance::SampledBfs }.canonical())
}

/// One scale graph with the cover computed on it.
#[derive(Clone, Debug)]
pub struct ScaleCover {
    pub scale: ScaleGraph,
    pub cover: Cover,
}

/// Weight-independent roundtrip spanner F with its construction trace.
#[derive(Clone, Debug)]
pub struct SpannerResult {
    /// Sorted original edge ids.
    pub edges: Vec<usize>,
    /// The cycle-skeleton subset F₀.
    pub f0: Vec<usize>,
    pub forest: CollapseForest,
    pub scales: Vec<ScaleCover>,
    pub k: f64,
    pub c: f64,
    pub seed: u64,
}

/// F₀ plus, per scale, shortest path trees to and from every ball root.
pub fn fast_roundtrip_spanner(g: &Graph, k: f64, c: f64, rng: &RandomStream) -> SpannerResult {
    assert!(k >= 1.0 && c >= 1.0, "degenerate spanner parameters");
    let (f0, forest) = linf_spanner(g);
    let mut f: BTreeSet<usize> = f0.iter().copied().collect();
    let mut scales = Vec::new();
    for (idx, sg) in scale_graphs_with_forest(g, &forest).into_iter().enumerate() {
        let big_r = if sg.t < 64 { 1u64 << sg.t } else { u64::MAX };
        let cover = fast_roundtrip_cover(&sg.graph, k, big_r, c, &rng.substream(idx as u64));
        for ball in cover.balls.iter().filter(|b| !b.failed) {
            // Member parent edges alone can chain through non-members, so
            // re-run the two certifying ssps and take whole trees.
            for dir in [Direction::Out, Direction::In] {
                let tree = sssp(&sg.graph, ball.root, dir, Some(ball.radius));
                for &pe in tree.parent.iter().flatten() {
                    f.insert(sg.graph.origin_of(pe));
                }
            }
        }
        scales.push(ScaleCover { scale: sg, cover });
    }
    SpannerResult { edges: f.into_iter().collect(), f0, forest, scales, k, c, seed: rng.seed() }
}

/// Girth estimate out of an existing spanner: exact roundtrip probes in (V,F)
/// between representatives of each ball's root and closest member.
pub fn girth_from_spanner(g: &Graph, sp: &SpannerResult) -> Option<CycleWitness> {
    let mut best: Option<CycleWitness> = None;
    let mut loop_edge: Option<usize> = None;
    for (id, e) in g.edges.iter().enumerate() {
        if e.src == e.dst && loop_edge.is_none_or(|b| e.len < g.edges[b].len) {
            loop_edge = Some(id);
        }
    }
    if let Some(id) = loop_edge {
        let w = CycleWitness {
            vertices: vec![g.edges[id].src],
            edges: vec![id],
            length: g.edges[id].len,
            provenance: Provenance::BaseCase,
        };
        better(&mut best, w);
    }
    // A zero-labelled forest node certifies a zero-length cycle, which no
    // scale graph retains.
    if let Some(u) = (0..g.n).find(|&v| sp.forest.parent[v].is_some_and(|p| sp.forest.label[p] == 0)) {
        let mut z = Graph::new(g.n);
        let mut origin = Vec::new();
        for (id, e) in g.edges.iter().enumerate() {
            if e.len == 0 {
                z.add_edge(e.src, e.dst, 0);
                origin.push(id);
            }
        }
        z.origin = Some(origin);
        let mut w = shortest_cycle_through(&z, u).expect("zero-label nodes certify a zero cycle");
        w.provenance = Provenance::BaseCase;
        better(&mut best, lift(w, &z, None));
    }
    let mut spanner_graph = Graph::new(g.n);
    let mut origin = Vec::new();
    for &e in &sp.edges {
        let edge = &g.edges[e];
        spanner_graph.add_edge(edge.src, edge.dst, edge.len);
        origin.push(e);
    }
    spanner_graph.origin = Some(origin);
    let mut pairs: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for sc in &sp.scales {
        // Smallest original vertex projecting onto each scale vertex.
        let mut rep = vec![usize::MAX; sc.scale.graph.n];
        for v in 0..g.n {
            if let Some(sv) = sc.scale.vertex_map[v] {
                if rep[sv] == usize::MAX {
                    rep[sv] = v;
                }
            }
        }
        for ball in sc.cover.balls.iter().filter(|b| !b.failed && b.members.len() >= 2) {
            let mut pick: Option<(u64, usize)> = None;
            for (i, &m) in ball.members.iter().enumerate() {
                if m == ball.root {
                    continue;
                }
                let rt = ball.roundtrip(i);
                if pick.is_none_or(|(b, _)| rt < b) {
                    pick = Some((rt, m));
                }
            }
            if let Some((_, m)) = pick {
                pairs.entry(rep[ball.root]).or_default().insert(rep[m]);
            }
        }
    }
    for (&x, targets) in &pairs {
        let t_out = sssp(&spanner_graph, x, Direction::Out, None);
        let t_in = sssp(&spanner_graph, x, Direction::In, None);
        for &y in targets {
            if dist_add(t_out.dist[y], t_in.dist[y]) == INF {
                continue;
            }
            let (_, out_edges) = t_out.path(&spanner_graph, y).unwrap();
            let (_, in_edges) = t_in.path(&spanner_graph, y).unwrap();
            let walk: Vec<usize> = out_edges.into_iter().chain(in_edges).collect();
            let w = reduce_closed_walk(&spanner_graph, x, &walk, Provenance::Ball);
            better(&mut best, lift(w, &spanner_graph, None));
        }
    }
    best
}

/// Multiplicative girth estimate; None on acyclic input.
pub fn girth_multiplicative(g: &Graph, k: f64, c: f64, rng: &RandomStream) -> Option<CycleWitness> {
    let sp = fast_roundtrip_spanner(g, k, c, rng);
    girth_from_spanner(g, &sp)
}

/// Additive estimate on unit lengths: multiplicative route and sampled
/// shortest-cycle probes, best of both.
pub fn girth_additive_randomized(g: &Graph, a: f64, c: f64, rng: &RandomStream) -> Option<CycleWitness> {
    assert!(g.unit_lengths(), "additive estimation expects unit lengths");
    assert!(a > 0.0 && a < 1.0 && c >= 1.0, "degenerate parameters");
    if g.n == 0 {
        return None;
    }
    let nf = g.n as f64;
    let k = libm::ceil(libm::log(nf)).max(1.0);
    let mut best = girth_multiplicative(g, k, c, &rng.substream(0));
    let ln = libm::log(nf);
    let samples = libm::ceil(c * libm::pow(nf, 1.0 - a) * ln * ln) as usize;
    let mut smp = rng.substream(1);
    for _ in 0..samples {
        let v = smp.below(g.n as u64) as usize;
        if let Some(w) = shortest_cycle_through(g, v) {
            better(&mut best, w);
        }
    }
    best
}

/// Base graph plus a doubled guard spine over P; the spine is the unique
/// shortest source→target path, and any second path witnesses a cycle
/// through P.
#[derive(Clone, Debug)]
pub struct DetourGraph {
    pub graph: Graph,
    /// P as ⟨v_d, …, v_0⟩: path[idx] = v_{d−idx}.
    pub path: Vec<usize>,
    pub d: usize,
    /// The 2d+1 spine edge ids in source→target order.
    pub spine: Vec<usize>,
    /// Base edge behind each derived edge, when one exists.
    origin: Vec<Option<usize>>,
    /// Base edge ids along P.
    p_edges: Vec<usize>,
    base_n: usize,
}

impl DetourGraph {
    /// Outbound spine node u_i.
    pub fn u(&self, i: usize) -> usize {
        self.base_n + 2 * i
    }

    /// Inbound spine node u′_i.
    pub fn u_prime(&self, i: usize) -> usize {
        self.base_n + 2 * i + 1
    }

    pub fn source(&self) -> usize {
        self.u(0)
    }

    pub fn target(&self) -> usize {
        self.u_prime(self.d)
    }
}

/// Builds the guarded graph for a d-edge path; Err(i) if P breaks at index i.
pub fn build_detour_graph(g: &Graph, path: &[usize]) -> Result<DetourGraph, usize> {
    assert!(g.unit_lengths(), "detour construction expects unit lengths");
    assert!(path.len() >= 2, "the guarded path needs at least one edge");
    let d = path.len() - 1;
    let mut seen = BTreeSet::new();
    for (i, &v) in path.iter().enumerate() {
        if v >= g.n || !seen.insert(v) {
            return Err(i);
        }
    }
    let mut p_edges = Vec::with_capacity(d);
    for t in 0..d {
        match g.out[path[t]].iter().copied().find(|&e| g.edges[e].dst == path[t + 1]) {
            Some(e) => p_edges.push(e),
            None => return Err(t),
        }
    }
    let mut gp = Graph::new(g.n + 2 * (d + 1));
    let mut origin: Vec<Option<usize>> = Vec::new();
    for (id, e) in g.edges.iter().enumerate() {
        gp.add_edge(e.src, e.dst, 1);
        origin.push(Some(id));
    }
    let u = |i: usize| g.n + 2 * i;
    let up = |i: usize| g.n + 2 * i + 1;
    let mut spine = Vec::with_capacity(2 * d + 1);
    for i in 0..=d {
        spine.push(gp.add_edge(u(i), up(i), 1));
        origin.push(None);
        if i < d {
            spine.push(gp.add_edge(up(i), u(i + 1), 1));
            origin.push(None);
        }
    }
    for i in 0..=d {
        let vi = path[d - i];
        let exit = (4 * d - 3 * i) as u64;
        gp.add_edge(u(i), vi, exit);
        origin.push(None);
        for &e in &g.out[vi] {
            gp.add_edge(u(i), g.edges[e].dst, exit);
            origin.push(Some(e));
        }
        let entry = (3 * i) as u64;
        for &e in &g.inc[vi] {
            gp.add_edge(g.edges[e].src, up(i), entry);
            origin.push(Some(e));
        }
    }
    let dg = DetourGraph { graph: gp, path: path.to_vec(), d, spine, origin, p_edges, base_n: g.n };
    let t = sssp(&dg.graph, dg.source(), Direction::Out, None);
    assert_eq!(t.dist[dg.target()], 2 * d as u64 + 1, "the spine must be the shortest route");
    Ok(dg)
}

/// A non-spine source→target path in a detour graph.
#[derive(Clone, Debug)]
pub struct SecondPath {
    pub length: u64,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Exact second shortest simple source→target path: every simple alternative
/// omits a spine edge, so take the best shortest path over spine removals.
pub fn second_shortest_path(dg: &DetourGraph) -> Option<SecondPath> {
    let mut best: Option<SecondPath> = None;
    for &skip in &dg.spine {
        let mut h = Graph::new(dg.graph.n);
        let mut origin = Vec::new();
        for (id, e) in dg.graph.edges.iter().enumerate() {
            if id != skip {
                h.add_edge(e.src, e.dst, e.len);
                origin.push(id);
            }
        }
        h.origin = Some(origin);
        let t = sssp(&h, dg.source(), Direction::Out, None);
        let len = t.dist[dg.target()];
        if len == INF {
            continue;
        }
        if best.as_ref().is_none_or(|b| len < b.length) {
            let (vertices, edges) = t.path(&h, dg.target()).unwrap();
            let edges = edges.into_iter().map(|e| h.origin_of(e)).collect();
            best = Some(SecondPath { length: len, vertices, edges });
        }
    }
    if let Some(b) = &best {
        debug_assert!(b.length >= 4 * dg.d as u64, "alternatives cost at least one deviation");
    }
    best
}

/// Recovers the best cycle witnessed by a second path's deviations.
pub fn extract_cycle(dg: &DetourGraph, sp: &SecondPath) -> CycleWitness {
    let mut best: Option<CycleWitness> = None;
    let mut t = 0;
    while t < sp.edges.len() {
        let e = sp.edges[t];
        let (src, dst) = (dg.graph.edges[e].src, dg.graph.edges[e].dst);
        if src < dg.base_n || dst >= dg.base_n {
            t += 1;
            continue;
        }
        let off = src - dg.base_n;
        assert_eq!(off % 2, 0, "deviations leave from the outbound spine");
        let i = off / 2;
        let vi = dg.path[dg.d - i];
        // Closed walk: (v_i,x) · Q′ · (y,v_j) · P(v_j,v_i), in base edges.
        let mut walk: Vec<usize> = Vec::new();
        match dg.origin[e] {
            Some(be) => walk.push(be),
            None => assert_eq!(dst, vi, "the direct exit lands on its own path vertex"),
        }
        let mut t2 = t + 1;
        while t2 < sp.edges.len() && dg.graph.edges[sp.edges[t2]].dst < dg.base_n {
            walk.push(dg.origin[sp.edges[t2]].expect("segment edges are base edges"));
            t2 += 1;
        }
        assert!(t2 < sp.edges.len(), "deviations re-enter the spine");
        let entry = sp.edges[t2];
        let eoff = dg.graph.edges[entry].dst - dg.base_n;
        assert_eq!(eoff % 2, 1, "re-entry hits the inbound spine");
        let j = (eoff - 1) / 2;
        assert!(i <= j, "deviations run forward");
        walk.push(dg.origin[entry].expect("entry edges carry their base edge"));
        walk.extend_from_slice(&dg.p_edges[dg.d - j..dg.d - i]);
        // Base copies share ids with g, so the reduction reads dg.graph.
        let w = reduce_closed_walk(&dg.graph, vi, &walk, Provenance::Detour);
        assert!(w.length <= dg.d as u64 + sp.length, "recovered cycle exceeds its bound");
        better(&mut best, w);
        t = t2 + 1;
    }
    best.expect("a second path deviates somewhere")
}

fn farthest(t: &DistanceTree) -> (u64, usize) {
    let mut best = (0u64, t.root);
    for (v, &dv) in t.dist.iter().enumerate() {
        if dv != INF && dv > best.0 {
            best = (dv, v);
        }
    }
    best
}

/// Deterministic additive estimate on unit lengths via detour graphs.
pub fn girth_additive_deterministic(g: &Graph, a: f64, epsilon: f64) -> Option<CycleWitness> {
    assert!(g.unit_lengths(), "additive estimation expects unit lengths");
    assert!(a > 0.0 && a < 1.0, "exponent out of range");
    assert!(epsilon > 0.0 && epsilon < 1.0, "epsilon out of range");
    if g.n == 0 {
        return None;
    }
    if let Some(id) = (0..g.m()).find(|&e| g.edges[e].src == g.edges[e].dst) {
        let w = CycleWitness {
            vertices: vec![g.edges[id].src],
            edges: vec![id],
            length: g.edges[id].len,
            provenance: Provenance::BaseCase,
        };
        return Some(w);
    }
    let nf = g.n as f64;
    let d = (libm::ceil(epsilon * libm::pow(nf, a)) as usize).max(1);
    let cap = libm::ceil(libm::pow(nf, 1.0 - a) / epsilon) as usize;
    let mut alive = vec![true; g.n];
    let mut best: Option<CycleWitness> = None;
    let mut spent = 0usize;
    'rounds: loop {
        if spent >= cap {
            break;
        }
        let keep: Vec<usize> = (0..g.n).filter(|&v| alive[v]).collect();
        if keep.is_empty() {
            break;
        }
        let (work, wmap) = g.induced(&keep);
        let part = tarjan_scc(&work);
        let mut comps: Vec<Vec<usize>> = part
            .clusters
            .iter()
            .filter(|cl| cl.members.len() >= 2)
            .map(|cl| cl.members.iter().map(|&v| wmap[v]).collect())
            .collect();
        if comps.is_empty() {
            break;
        }
        comps.sort_by_key(|m| *m.iter().min().unwrap());
        for orig in comps {
            if spent >= cap {
                break 'rounds;
            }
            spent += 1;
            // induced() sorts, so local 0 is the lowest original id.
            let (s, smap) = g.induced(&orig);
            let t_out = sssp(&s, 0, Direction::Out, None);
            let t_in = sssp(&s, 0, Direction::In, None);
            let (ecc_out, far_out) = farthest(&t_out);
            let (ecc_in, far_in) = farthest(&t_in);
            let outward = ecc_out >= ecc_in;
            let (tree, ecc, far) = if outward { (&t_out, ecc_out, far_out) } else { (&t_in, ecc_in, far_in) };
            if (ecc as usize) < d {
                let mut w = shortest_cycle_through(&s, 0)
                    .expect("every vertex of a nontrivial component lies on a cycle");
                w.provenance = Provenance::BaseCase;
                better(&mut best, lift(w, &s, Some(&smap)));
                for &v in &smap {
                    alive[v] = false;
                }
                continue;
            }
            let (verts, _) = tree.path(&s, far).unwrap();
            // Terminal segment: the d+1 path vertices farthest from the root.
            let seg: Vec<usize> =
                if outward { verts[verts.len() - 1 - d..].to_vec() } else { verts[..=d].to_vec() };
            let dg = build_detour_graph(&s, &seg).expect("tree segments are paths");
            if let Some(second) = second_shortest_path(&dg) {
                let w = lift(extract_cycle(&dg, &second), &s, Some(&smap));
                better(&mut best, w);
                if second.length <= 16 * d as u64 {
                    return best;
                }
            }
            for &v in &seg {
                alive[smap[v]] = false;
            }
        }
    }
    best
}
