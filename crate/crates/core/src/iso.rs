//! Graph isomorphism for small graphs by backtracking with degree and
//! distance-profile pruning. Intended for the occasional candidate hit,
//! not bulk canonicalization.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::all_pairs_distances;

pub const DEFAULT_ISO_CAP: usize = 64;

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_with_cap(g1, g2, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_with_cap(g1: &Graph, g2: &Graph, cap: usize) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > cap {
            return Err(Error::OrderTooLarge(g.order(), cap));
        }
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let n = g1.order();
    let mut deg1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut deg2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if deg1 != deg2 {
        return Ok(false);
    }
    // per-vertex invariant: degree plus the sorted multiset of distances
    let profile = |g: &Graph| -> Vec<Vec<u16>> {
        let dm = all_pairs_distances(g);
        (0..n)
            .map(|v| {
                let mut row: Vec<u16> = (0..n).map(|w| dm.dist(v, w)).collect();
                row.sort_unstable();
                row
            })
            .collect()
    };
    let prof1 = profile(g1);
    let prof2 = profile(g2);
    let mut sorted1 = prof1.clone();
    let mut sorted2 = prof2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return Ok(false);
    }

    // map vertices of g1 in an order that keeps the mapped set connected
    // where possible, so adjacency constraints bite early
    let mut order = Vec::with_capacity(n);
    let mut picked = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| {
                (
                    g1.neighbors(v).iter().filter(|&&w| picked[w]).count(),
                    g1.degree(v),
                )
            })
            .unwrap();
        picked[next] = true;
        order.push(next);
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(
        g1, g2, &prof1, &prof2, &order, 0, &mut mapping, &mut used,
    ))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    prof1: &[Vec<u16>],
    prof2: &[Vec<u16>],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'candidates: for w in 0..g2.order() {
        if used[w] || g2.degree(w) != g1.degree(v) || prof1[v] != prof2[w] {
            continue;
        }
        for &u in g1.neighbors(v) {
            if mapping[u] != usize::MAX && !g2.has_edge(mapping[u], w) {
                continue 'candidates;
            }
        }
        // non-edges to already-mapped vertices must stay non-edges
        for u in 0..g1.order() {
            if mapping[u] != usize::MAX && !g1.has_edge(u, v) && g2.has_edge(mapping[u], w) {
                continue 'candidates;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if extend(g1, g2, prof1, prof2, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}
