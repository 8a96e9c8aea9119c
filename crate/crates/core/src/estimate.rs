//! Sampling-based estimation of in/out ball-size fractions at a radius.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{sssp, Direction, Graph, INF};
use crate::rng::RandomStream;

/// Estimated ball-size fractions; counts are exact multiples of 1/t.
#[derive(Clone, Debug)]
pub struct BallSizeEstimate {
    pub r: f64,
    pub epsilon: f64,
    pub t: u64,
    /// Per vertex u: number of samples v with d(u,v) ≤ r.
    pub out_count: Vec<u64>,
    /// Per vertex u: number of samples v with d(v,u) ≤ r.
    pub in_count: Vec<u64>,
}

impl BallSizeEstimate {
    /// s_out[u] as a real fraction.
    pub fn s_out(&self, u: usize) -> f64 {
        self.out_count[u] as f64 / self.t as f64
    }

    /// s_in[u] as a real fraction.
    pub fn s_in(&self, u: usize) -> f64 {
        self.in_count[u] as f64 / self.t as f64
    }
}

/// t = ⌈20·ln(n)/ε²⌉ samples with replacement (at least one), shared by
/// both directions; 2·(distinct samples) ≤ 2t sssp runs.
pub fn estimate_balls(g: &Graph, r: f64, epsilon: f64, rng: &mut RandomStream) -> BallSizeEstimate {
    assert!(r >= 0.0 && epsilon > 0.0 && epsilon < 1.0);
    assert!(g.n > 0, "estimate on empty graph");
    let t_real = 20.0 * libm::log(g.n as f64) / (epsilon * epsilon);
    let t = (libm::ceil(t_real) as u64).max(1);
    let mut mult = vec![0u64; g.n];
    for _ in 0..t {
        mult[rng.below(g.n as u64) as usize] += 1;
    }
    // floor(r) is an exact cutoff against integer distances.
    let cutoff = libm::floor(r) as u64;
    let mut out_count = vec![0u64; g.n];
    let mut in_count = vec![0u64; g.n];
    for s in 0..g.n {
        if mult[s] == 0 {
            continue;
        }
        let to_s = sssp(g, s, Direction::In, Some(cutoff));
        let from_s = sssp(g, s, Direction::Out, Some(cutoff));
        for u in 0..g.n {
            if to_s.dist[u] != INF {
                out_count[u] += mult[s];
            }
            if from_s.dist[u] != INF {
                in_count[u] += mult[s];
            }
        }
    }
    BallSizeEstimate { r, epsilon, t, out_count, in_count }
}
