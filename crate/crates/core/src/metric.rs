//! Exact unweighted metric: all-pairs BFS distances, distance spheres
//! and the half-sets W_uv.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel for disconnected pairs. Finite distances never reach it
/// since orders are capped well below `u16::MAX`.
pub const UNREACHABLE: u16 = u16::MAX;

#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u16>,
    ecc: Vec<u16>,
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut ecc = vec![0u16; n];
    let mut queue = std::collections::VecDeque::new();
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        let mut max = 0;
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == UNREACHABLE {
                    row[v] = du + 1;
                    max = max.max(du + 1);
                    queue.push_back(v);
                }
            }
        }
        ecc[src] = max;
    }
    DistanceMatrix { order: n, dist, ecc }
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u16 {
        self.dist[u * self.order + v]
    }

    /// Maximum finite distance from `u`.
    pub fn eccentricity(&self, u: usize) -> u16 {
        self.ecc[u]
    }

    pub fn diameter(&self) -> u16 {
        self.ecc.iter().copied().max().unwrap_or(0)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                order: self.order,
            })
        }
    }

    /// N_i(u): the vertices at distance exactly `i` from `u`.
    pub fn sphere(&self, u: usize, i: u16) -> Result<Vec<usize>> {
        self.check(u)?;
        Ok((0..self.order).filter(|&v| self.dist(u, v) == i).collect())
    }

    /// W_uv: the vertices strictly closer to `u` than to `v`.
    pub fn half_set(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok((0..self.order)
            .filter(|&z| self.dist(u, z) < self.dist(v, z))
            .collect())
    }

    /// Whether `c` lies on some shortest `a`-`b` path.
    pub fn lies_on_shortest_path(&self, a: usize, b: usize, c: usize) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        self.check(c)?;
        let (ac, cb, ab) = (self.dist(a, c), self.dist(c, b), self.dist(a, b));
        if ac == UNREACHABLE || cb == UNREACHABLE || ab == UNREACHABLE {
            return Ok(false);
        }
        Ok(ac + cb == ab)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_complete_bipartite, build_cycle, build_w_graph, WGraphSpec};

    #[test]
    fn c6_distances_and_spheres() {
        let c6 = build_cycle(6).unwrap();
        let dm = all_pairs_distances(&c6);
        assert_eq!(dm.dist(0, 3), 3);
        assert_eq!(dm.sphere(0, 0).unwrap(), vec![0]);
        assert_eq!(dm.sphere(0, 3).unwrap(), vec![3]);
        assert!(dm.sphere(0, 4).unwrap().is_empty());
    }

    #[test]
    fn k33_distances() {
        let g = build_complete_bipartite(3, 3).unwrap();
        let dm = all_pairs_distances(&g);
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert!(dm.dist(u, v) == 1 || dm.dist(u, v) == 2);
                }
            }
        }
    }

    #[test]
    fn w23_diameter() {
        let g = build_w_graph(&WGraphSpec { m: 2, ell: 3 }).unwrap();
        let dm = all_pairs_distances(&g);
        // antipodal ring positions are 6 apart and nothing shortcuts the ring
        assert_eq!(dm.diameter(), 6);
    }

    #[test]
    fn half_sets_on_p3_and_c4() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let dm = all_pairs_distances(&p3);
        assert_eq!(dm.half_set(0, 1).unwrap(), vec![0]);
        assert_eq!(dm.half_set(1, 0).unwrap(), vec![1, 2]);

        let c4 = build_cycle(4).unwrap();
        let dm = all_pairs_distances(&c4);
        assert_eq!(dm.half_set(0, 1).unwrap(), vec![0, 3]);
        assert_eq!(dm.half_set(1, 0).unwrap(), vec![1, 2]);
        assert_eq!(dm.half_set(0, 0), Err(Error::SameVertex(0)));
    }

    #[test]
    fn shortest_path_membership_on_c6() {
        let c6 = build_cycle(6).unwrap();
        let dm = all_pairs_distances(&c6);
        assert!(dm.lies_on_shortest_path(0, 3, 1).unwrap());
        // the other arc is also shortest
        assert!(dm.lies_on_shortest_path(0, 3, 4).unwrap());
        assert!(!dm.lies_on_shortest_path(0, 2, 4).unwrap());
    }

    #[test]
    fn unreachable_pairs() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.dist(0, 2), UNREACHABLE);
        assert!(!dm.lies_on_shortest_path(0, 2, 1).unwrap());
    }
}
