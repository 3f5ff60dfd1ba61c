//! Immutable simple undirected graphs over dense vertex indices.

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are the indices `0..order`.
/// Adjacency lists are sorted and deduplicated; the structure is
/// immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse to one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::SpecOutOfRange("order must be at least 1".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, order: n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut size = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            size += list.len();
        }
        Ok(Graph { adj, size: size / 2 })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_index(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                order: self.order(),
            })
        }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_reach(0) == self.order()
    }

    fn bfs_reach(&self, start: usize) -> usize {
        let mut seen = vec![false; self.order()];
        let mut queue = std::collections::VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }

    /// Connected components of the graph with `excluded` vertices removed,
    /// each component as a sorted vertex list, ordered by smallest member.
    pub fn components_excluding(&self, excluded: &[usize]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut blocked = vec![false; n];
        for &v in excluded {
            blocked[v] = true;
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if blocked[start] || seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = std::collections::VecDeque::new();
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !blocked[v] && !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-coloring if one exists, component by component.
    /// Returns `None` when some component contains an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// The unique 2-coloring of a connected bipartite graph as two sorted
    /// vertex sets, the one containing vertex 0 first. `None` if not bipartite.
    pub fn bipartition(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let Some(color) = self.two_coloring() else {
            return Ok(None);
        };
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (v, &c) in color.iter().enumerate() {
            if c == color[0] {
                first.push(v);
            } else {
                second.push(v);
            }
        }
        Ok(Some((first, second)))
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.adj.iter().all(|l| l.len() == 2) && self.is_connected()
    }

    /// The subgraph induced by `vertices`, together with the map from
    /// new dense indices back to the original ones (sorted order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut back = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            back[old] = new;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut size = 0;
        for (new, &old) in keep.iter().enumerate() {
            for &w in &self.adj[old] {
                if back[w] != usize::MAX {
                    adj[new].push(back[w]);
                }
            }
            adj[new].sort_unstable();
            size += adj[new].len();
        }
        (
            Graph {
                adj,
                size: size / 2,
            },
            keep,
        )
    }

    /// Relabels vertices through `perm`, where `perm[v]` is the new index of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.order(), &edges).expect("relabeling preserves validity")
    }
}
