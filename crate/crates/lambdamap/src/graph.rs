//! Undirected multigraphs (loops and parallel edges allowed), bridge
//! detection, and isomorphism testing for small graphs.

use crate::map::MapError;

/// An undirected multigraph on vertices `0..vertex_count`.
///
/// Edges are stored as an explicit list so that parallel edges stay distinct;
/// a loop is an edge `(u, u)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UndirectedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, MapError> {
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(MapError::UnknownVertex(u.max(v)));
            }
        }
        Ok(UndirectedGraph {
            vertex_count,
            edges: edges.to_vec(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of `u`, with loops contributing 2.
    pub fn degree(&self, u: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == u) as usize + (b == u) as usize)
            .sum()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        // neighbor lists as (other endpoint, edge id); loops appear twice
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(w, _) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// The cut edges of a connected graph, as sorted edge indices.
    ///
    /// Loops are never bridges, and neither edge of a parallel pair is.
    pub fn bridges(&self) -> Result<Vec<usize>, MapError> {
        if !self.is_connected() {
            return Err(MapError::DisconnectedGraph);
        }
        let adj = self.adjacency();
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut out = Vec::new();
        if n == 0 {
            return Ok(out);
        }
        // iterative low-link DFS; the entering edge id (not the parent vertex)
        // is skipped, so parallel edges are handled correctly
        let mut timer = 1usize;
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)]; // (vertex, in-edge, next neighbor idx)
        disc[0] = 0;
        low[0] = 0;
        while let Some(&(u, in_edge, idx)) = stack.last() {
            if idx < adj[u].len() {
                stack.last_mut().unwrap().2 += 1;
                let (w, id) = adj[u][idx];
                if id == in_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, id, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push(in_edge);
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Isomorphism test by backtracking over degree-compatible vertex images.
    /// Intended for the small graphs arising here (≤ a few dozen vertices).
    pub fn is_isomorphic_to(&self, other: &UndirectedGraph) -> bool {
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return false;
        }
        let n = self.vertex_count;
        let mut deg_a: Vec<usize> = (0..n).map(|u| self.degree(u)).collect();
        let mut deg_b: Vec<usize> = (0..n).map(|u| other.degree(u)).collect();
        {
            let mut sa = deg_a.clone();
            let mut sb = deg_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return false;
            }
        }
        let pairs_a = self.pair_multiset();
        let pairs_b = other.pair_multiset();
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_mapping(0, &mut mapping, &mut used, &mut deg_a, &mut deg_b, &pairs_a, &pairs_b)
    }

    fn pair_multiset(&self) -> std::collections::HashMap<(usize, usize), usize> {
        let mut m = std::collections::HashMap::new();
        for &(u, v) in &self.edges {
            let key = (u.min(v), u.max(v));
            *m.entry(key).or_insert(0) += 1;
        }
        m
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_mapping(
        &self,
        u: usize,
        mapping: &mut [usize],
        used: &mut [bool],
        deg_a: &[usize],
        deg_b: &[usize],
        pairs_a: &std::collections::HashMap<(usize, usize), usize>,
        pairs_b: &std::collections::HashMap<(usize, usize), usize>,
    ) -> bool {
        if u == self.vertex_count {
            return true;
        }
        'cand: for img in 0..self.vertex_count {
            if used[img] || deg_a[u] != deg_b[img] {
                continue;
            }
            // all edges between u and already-mapped vertices must be matched
            for w in 0..u {
                let key_a = (u.min(w), u.max(w));
                let key_b = (img.min(mapping[w]), img.max(mapping[w]));
                if pairs_a.get(&key_a) != pairs_b.get(&key_b) {
                    continue 'cand;
                }
            }
            let key_a = (u, u);
            let key_b = (img, img);
            if pairs_a.get(&key_a) != pairs_b.get(&key_b) {
                continue;
            }
            mapping[u] = img;
            used[img] = true;
            if self.extend_mapping(u + 1, mapping, used, deg_a, deg_b, pairs_a, pairs_b) {
                return true;
            }
            mapping[u] = usize::MAX;
            used[img] = false;
        }
        false
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        UndirectedGraph::new(10, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force bridge oracle: delete each edge and retest connectivity.
    pub(crate) fn bridges_bruteforce(g: &UndirectedGraph) -> Vec<usize> {
        let mut out = Vec::new();
        for id in 0..g.edge_count() {
            let mut edges = g.edges().to_vec();
            edges.remove(id);
            let h = UndirectedGraph::new(g.vertex_count(), &edges).unwrap();
            if !h.is_connected() {
                out.push(id);
            }
        }
        out
    }

    #[test]
    fn path_graph_bridges() {
        let g = UndirectedGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.bridges().unwrap(), vec![0, 1]);
    }

    #[test]
    fn triangle_has_no_bridges() {
        let g = UndirectedGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.bridges().unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn parallel_edges_and_loops_are_not_bridges() {
        let g = UndirectedGraph::new(3, &[(0, 1), (0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.bridges().unwrap(), vec![2]);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = UndirectedGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.bridges(), Err(MapError::DisconnectedGraph)));
    }

    #[test]
    fn bridges_match_bruteforce_on_small_graphs() {
        let samples = [
            UndirectedGraph::new(1, &[]).unwrap(),
            UndirectedGraph::new(2, &[(0, 1)]).unwrap(),
            UndirectedGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (1, 1)]).unwrap(),
            UndirectedGraph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
            UndirectedGraph::petersen(),
        ];
        for g in &samples {
            assert_eq!(g.bridges().unwrap(), bridges_bruteforce(g), "graph: {g:?}");
        }
    }

    #[test]
    fn petersen_is_petersen() {
        let p = UndirectedGraph::petersen();
        assert!(p.is_isomorphic_to(&p));
        // relabeled copy
        let relabel: Vec<usize> = vec![3, 7, 1, 9, 0, 4, 8, 2, 6, 5];
        let edges: Vec<(usize, usize)> = p.edges().iter().map(|&(u, v)| (relabel[u], relabel[v])).collect();
        let q = UndirectedGraph::new(10, &edges).unwrap();
        assert!(p.is_isomorphic_to(&q));
        // K5 with loops is not
        let mut k5 = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                k5.push((u, v));
            }
            k5.push((u, u));
        }
        let r = UndirectedGraph::new(10, &k5).unwrap();
        assert!(!p.is_isomorphic_to(&r));
    }
}
