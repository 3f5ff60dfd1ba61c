//! Generators for the graph families used throughout: the W(m, l)
//! ring construction, cycles, hypercubes and complete bipartite graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of the W(m, l) construction: a ring of 4l blocks whose
/// sizes follow the pattern 1, m, m, 1 and where consecutive blocks are
/// completely joined. The result is (m+1)-regular of order 2l(m+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WGraphSpec {
    pub m: usize,
    pub ell: usize,
}

fn block_size(i: usize, m: usize) -> usize {
    if i % 4 == 0 || i % 4 == 3 {
        1
    } else {
        m
    }
}

/// Builds W(m, l). Vertex (i, j) with 0 <= i < 4l and 1 <= j <= f(i)
/// maps to a dense index in row-major (i, j) order, so the layout is
/// stable across runs.
pub fn build_w_graph(spec: &WGraphSpec) -> Result<Graph> {
    if spec.m < 2 {
        return Err(Error::SpecOutOfRange(format!("m = {} < 2", spec.m)));
    }
    if spec.ell < 3 {
        return Err(Error::SpecOutOfRange(format!("ell = {} < 3", spec.ell)));
    }
    let ring = 4 * spec.ell;
    let mut offset = Vec::with_capacity(ring + 1);
    let mut total = 0;
    for i in 0..ring {
        offset.push(total);
        total += block_size(i, spec.m);
    }
    offset.push(total);

    let mut edges = Vec::new();
    for i in 0..ring {
        let next = (i + 1) % ring;
        for j in 0..block_size(i, spec.m) {
            for k in 0..block_size(next, spec.m) {
                edges.push((offset[i] + j, offset[next] + k));
            }
        }
    }
    Graph::from_edge_list(total, &edges)
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::SpecOutOfRange(format!("cycle length {n} < 3")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn build_hypercube(d: usize) -> Result<Graph> {
    if !(1..=16).contains(&d) {
        return Err(Error::SpecOutOfRange(format!(
            "hypercube dimension {d} outside 1..=16"
        )));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn build_complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(Error::SpecOutOfRange(format!(
            "complete bipartite sides ({p}, {q}) must be at least 1"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..p {
        for v in 0..q {
            edges.push((u, p + v));
        }
    }
    Graph::from_edge_list(p + q, &edges)
}
