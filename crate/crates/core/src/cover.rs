//! Roundtrip covers: single probabilistic passes, their high-probability
//! union, and SCC computation via covers.

use alloc::vec;
use alloc::vec::Vec;

use crate::cluster::{cluster_in, cluster_out, SHIFT_BITS, SHIFT_ONE};
use crate::estimate::estimate_balls;
use crate::graph::{
    dist_add, in_ball, out_ball, roundtrip_ball, sssp, Ball, Cluster, Direction, Graph,
    VertexPartition,
};
use crate::rng::RandomStream;

/// A collection of balls targeting the (k,R)-roundtrip-cover contract.
#[derive(Clone, Debug)]
pub struct Cover {
    pub k: f64,
    pub big_r: u64,
    pub c: f64,
    pub seed: u64,
    pub passes: u32,
    pub balls: Vec<Ball>,
    /// Pass index per ball, parallel to `balls`.
    pub ball_pass: Vec<u32>,
    /// Ball indices containing each vertex.
    pub membership: Vec<Vec<usize>>,
}

impl Cover {
    /// True when some ball contains both u and v.
    pub fn covers_pair(&self, u: usize, v: usize) -> bool {
        let (a, b) = (&self.membership[u], &self.membership[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

fn ceil_grid(x: f64) -> u64 {
    libm::ceil(x * SHIFT_ONE as f64) as u64
}

fn floor_grid(x: f64) -> u64 {
    libm::floor(x * SHIFT_ONE as f64) as u64
}

fn sorted_intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    k
}

fn complement(sorted: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - sorted.len());
    let mut it = sorted.iter().peekable();
    for v in 0..n {
        if it.peek() == Some(&&v) {
            it.next();
        } else {
            out.push(v);
        }
    }
    out
}

/// Maps a ball of a derived graph back to original vertex and edge ids.
fn map_ball(b: Ball, g: &Graph, vmap: &[usize]) -> Ball {
    Ball {
        root: vmap[b.root],
        members: b.members.iter().map(|&v| vmap[v]).collect(),
        out_dist: b.out_dist,
        in_dist: b.in_dist,
        out_parent: b.out_parent.iter().map(|p| p.map(|e| g.origin_of(e))).collect(),
        in_parent: b.in_parent.iter().map(|p| p.map(|e| g.origin_of(e))).collect(),
        radius: b.radius,
        scale: b.scale,
        failed: b.failed,
    }
}

/// Whole-vertex-set ball rooted at `root`, emitted by the failure branches.
fn failure_ball(g: &Graph, vmap: &[usize], root: usize) -> Ball {
    let t_out = sssp(g, root, Direction::Out, None);
    let t_in = sssp(g, root, Direction::In, None);
    let members: Vec<usize> = (0..g.n).collect();
    let radius = members
        .iter()
        .map(|&v| dist_add(t_out.dist[v], t_in.dist[v]))
        .max()
        .unwrap_or(0);
    let b = Ball {
        root,
        members,
        out_dist: (0..g.n).map(|v| t_out.dist[v]).collect(),
        in_dist: (0..g.n).map(|v| t_in.dist[v]).collect(),
        out_parent: (0..g.n).map(|v| t_out.parent[v]).collect(),
        in_parent: (0..g.n).map(|v| t_in.parent[v]).collect(),
        radius,
        scale: None,
        failed: true,
    };
    map_ball(b, g, vmap)
}

/// One cover pass: partitions V into balls, flagging failure branches.
pub fn probabilistic_cover(g: &Graph, r: f64, c: f64, rng: &mut RandomStream) -> Vec<Ball> {
    assert!(r > 0.0 && c >= 1.0);
    let mut out = Vec::new();
    if g.n == 0 {
        return out;
    }
    // Every recursion step shrinks |V| by a factor ≥ 8/7.
    let limit = libm::ceil(libm::log(g.n.max(2) as f64) / libm::log(8.0 / 7.0)) as usize;
    let vmap: Vec<usize> = (0..g.n).collect();
    cover_worker(g, &vmap, r, c, rng, &mut out, 0, limit);
    out
}

#[allow(clippy::too_many_arguments)]
fn cover_worker(
    g: &Graph,
    vmap: &[usize],
    r: f64,
    c: f64,
    rng: &mut RandomStream,
    out: &mut Vec<Ball>,
    depth: usize,
    limit: usize,
) {
    if g.n == 0 {
        return;
    }
    assert!(depth <= limit, "recursion depth exceeded");
    let n = g.n;
    let est = estimate_balls(g, c * r, 0.125, rng);
    let s_out: Vec<usize> = (0..n).filter(|&v| 4 * est.out_count[v] >= 3 * est.t).collect();
    let s_in: Vec<usize> = (0..n).filter(|&v| 4 * est.in_count[v] >= 3 * est.t).collect();
    let mut inter = s_out.iter().copied().filter(|v| s_in.binary_search(v).is_ok());
    if let Some(u) = inter.next() {
        let cr = libm::floor(c * r) as u64;
        let ob = out_ball(g, u, cr);
        let ib = in_ball(g, u, cr);
        if 4 * sorted_intersection_size(&ob, &ib) < n {
            out.push(failure_ball(g, vmap, u));
            return;
        }
        let lo = ceil_grid(2.0 * c * r);
        let hi = floor_grid(2.0 * (c + 1.0) * r);
        assert!(lo <= hi, "degenerate radius interval");
        let r_b = rng.range(lo, hi) >> SHIFT_BITS;
        let ball = roundtrip_ball(g, u, r_b);
        let rest = complement(&ball.members, n);
        out.push(map_ball(ball, g, vmap));
        if !rest.is_empty() {
            let (sub, submap) = g.induced(&rest);
            let sub_vmap: Vec<usize> = submap.iter().map(|&lv| vmap[lv]).collect();
            cover_worker(&sub, &sub_vmap, r, c, rng, out, depth + 1, limit);
        }
        return;
    }
    let cres = if 2 * s_out.len() <= n {
        cluster_out(g, &complement(&s_out, n), r, rng)
    } else {
        cluster_in(g, &complement(&s_in, n), r, rng)
    };
    let max_size = cres.partition.clusters.iter().map(|cl| cl.members.len()).max().unwrap_or(0);
    if 8 * max_size > 7 * n {
        out.push(failure_ball(g, vmap, 0));
        return;
    }
    for cl in &cres.partition.clusters {
        let (sub, submap) = g.induced(&cl.members);
        let sub_vmap: Vec<usize> = submap.iter().map(|&lv| vmap[lv]).collect();
        cover_worker(&sub, &sub_vmap, r, c, rng, out, depth + 1, limit);
    }
}

/// Union of independent cover passes at r = 6·R·k·ln n.
pub fn fast_roundtrip_cover(g: &Graph, k: f64, big_r: u64, c: f64, rng: &RandomStream) -> Cover {
    assert!(k >= 1.0 && big_r > 0 && c >= 1.0);
    let n = g.n;
    let mut cover = Cover {
        k,
        big_r,
        c,
        seed: rng.seed(),
        passes: 0,
        balls: Vec::new(),
        ball_pass: Vec::new(),
        membership: vec![Vec::new(); n],
    };
    if n == 0 {
        return cover;
    }
    let r = 6.0 * big_r as f64 * k * libm::log(n.max(2) as f64);
    let root_pow = libm::ceil(libm::pow(n as f64, 1.0 / k) - 1e-9).max(1.0);
    let ln_ceil = libm::ceil(libm::log(n as f64) - 1e-9).max(1.0);
    let passes = libm::ceil(c * root_pow * ln_ceil - 1e-9) as u32;
    cover.passes = passes;
    for i in 0..passes {
        let mut sub = rng.substream(i as u64);
        let balls = probabilistic_cover(g, r, c, &mut sub);
        for b in balls {
            for &v in &b.members {
                cover.membership[v].push(cover.balls.len());
            }
            cover.balls.push(b);
            cover.ball_pass.push(i);
        }
    }
    cover
}

/// SCCs as the union-find closure of co-ball membership over non-failure
/// balls of a cover at k = ln n.
pub fn scc_via_cover(g: &Graph, big_r: u64, rng: &RandomStream) -> VertexPartition {
    let n = g.n;
    if n == 0 {
        return VertexPartition { cluster_of: Vec::new(), clusters: Vec::new() };
    }
    let k = libm::log(n as f64).max(1.0);
    let cover = fast_roundtrip_cover(g, k, big_r, 2.0, rng);
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut Vec<usize>, v: usize) -> usize {
        let mut r = v;
        while uf[r] != r {
            r = uf[r];
        }
        let mut cur = v;
        while uf[cur] != r {
            let next = uf[cur];
            uf[cur] = r;
            cur = next;
        }
        r
    }
    for b in cover.balls.iter().filter(|b| !b.failed) {
        for w in b.members.windows(2) {
            let (a, z) = (find(&mut uf, w[0]), find(&mut uf, w[1]));
            if a != z {
                let lo = a.min(z);
                uf[a] = lo;
                uf[z] = lo;
            }
        }
    }
    // Classes ordered by smallest member.
    let mut cluster_of = vec![usize::MAX; n];
    let mut clusters: Vec<Cluster> = Vec::new();
    for v in 0..n {
        let root = find(&mut uf, v);
        if cluster_of[root] == usize::MAX {
            cluster_of[root] = clusters.len();
            clusters.push(Cluster { members: Vec::new(), root: None, tree: None });
        }
        cluster_of[v] = cluster_of[root];
        clusters[cluster_of[root]].members.push(v);
    }
    VertexPartition { cluster_of, clusters }
}
