//! Immutable simple graphs on labeled vertices `[0, n)`.
//!
//! Adjacency is kept twice: as fixed-width bitsets (membership tests and set
//! ops) and as sorted lists (sparse iteration). Graphs are immutable after
//! construction, so sharing across threads is safe.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bitset::VertexSet;
use crate::error::GraphError;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    adj_list: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                m += 1;
            }
        }
        let adj_list = adj
            .iter()
            .map(|row| row.iter().map(|v| v as u32).collect())
            .collect();
        Ok(Graph { n, m, adj, adj_list })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Perfect matching {0,1}, {2,3}, ... Requires n even.
    pub fn perfect_matching(n: usize) -> Graph {
        assert!(n % 2 == 0);
        let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star with the given center joined to all other vertices.
    pub fn star(n: usize, center: usize) -> Graph {
        let edges: Vec<_> = (0..n).filter(|&v| v != center).map(|v| (center, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj_list[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbors_list(&self, v: usize) -> &[u32] {
        &self.adj_list[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj_list[u] {
                let v = v as usize;
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices ordered by non-increasing degree, ties broken by ascending index.
    pub fn degree_sequence_order(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.n as u32).collect();
        order.sort_by_key(|&v| (Reverse(self.degree(v as usize)), v));
        order
    }

    /// N[W]: the members of `w` together with all of their neighbors.
    pub fn closed_neighborhood(&self, w: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in w {
            out.insert(v);
            for &u in &self.adj_list[v] {
                out.insert(u as usize);
            }
        }
        out
    }

    pub fn closed_neighborhood_of_slice(&self, w: &[u32]) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for &v in w {
            out.insert(v as usize);
            for &u in &self.adj_list[v as usize] {
                out.insert(u as usize);
            }
        }
        out
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Greedy independent set inside `candidates`, optionally restricted to
    /// vertices whose (global) degree is at most `degree_cap`.
    ///
    /// Repeatedly takes the vertex of minimum degree in the surviving induced
    /// subgraph (ties by index) and deletes its closed neighborhood. This
    /// achieves the |I| >= n'/(1 + avg-degree) bound used by Lemma 1.
    pub fn greedy_independent_set(
        &self,
        candidates: &VertexSet,
        degree_cap: Option<usize>,
    ) -> VertexSet {
        let mut alive = candidates.clone();
        if let Some(cap) = degree_cap {
            for v in candidates {
                if self.degree(v) > cap {
                    alive.remove(v);
                }
            }
        }
        // Induced degrees, updated as closed neighborhoods are deleted.
        let mut deg: Vec<u32> = vec![0; self.n];
        for v in &alive {
            deg[v] = self.adj_list[v]
                .iter()
                .filter(|&&u| alive.contains(u as usize))
                .count() as u32;
        }
        let mut heap: BinaryHeap<Reverse<(u32, u32)>> = alive
            .iter()
            .map(|v| Reverse((deg[v], v as u32)))
            .collect();
        let mut chosen = VertexSet::new(self.n);
        while let Some(Reverse((d, v))) = heap.pop() {
            let v = v as usize;
            if !alive.contains(v) || deg[v] != d {
                continue; // stale entry
            }
            chosen.insert(v);
            alive.remove(v);
            let mut removed = vec![v];
            for &u in &self.adj_list[v] {
                if alive.remove(u as usize) {
                    removed.push(u as usize);
                }
            }
            for u in removed {
                for &w in &self.adj_list[u] {
                    let w = w as usize;
                    if alive.contains(w) {
                        deg[w] -= 1;
                        heap.push(Reverse((deg[w], w as u32)));
                    }
                }
            }
        }
        debug_assert!(self.is_independent(&chosen));
        debug_assert!(chosen.iter().all(|v| candidates.contains(v)));
        chosen
    }

    /// Exact maximum independent set size, by branch and bound. Intended for
    /// the small instances of the constructions module.
    pub fn independence_number(&self) -> usize {
        fn branch(g: &Graph, mut cand: VertexSet, current: usize, best: &mut usize) {
            if current + cand.len() <= *best {
                return;
            }
            let v = match cand.first() {
                Some(v) => v,
                None => {
                    *best = (*best).max(current);
                    return;
                }
            };
            // Branch 1: take v.
            let mut with_v = cand.clone();
            with_v.remove(v);
            with_v.difference_with(g.neighbors(v));
            branch(g, with_v, current + 1, best);
            // Branch 2: skip v.
            cand.remove(v);
            branch(g, cand, current, best);
        }
        let mut best = 0;
        branch(self, VertexSet::full(self.n), 0, &mut best);
        best
    }

    /// Vertex sets of the connected components of the subgraph induced on
    /// `within`, each listed in ascending order; components ordered by their
    /// minimum vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in within {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for &u in &self.adj_list[v] {
                    let u = u as usize;
                    if within.contains(u) && seen.insert(u) {
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_on_ingestion() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(g.m(), 2);
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.m() * 2, (0..4).map(|v| g.degree(v)).sum::<usize>());
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        ));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn degree_order_star() {
        // Star S_{1,4} centered at 0: order starts with 0, then 1,2,3,4.
        let g = Graph::star(5, 0);
        assert_eq!(g.degree_sequence_order(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn degree_order_edgeless_and_path() {
        assert_eq!(Graph::empty(3).degree_sequence_order(), vec![0, 1, 2]);
        // Path 0-1-2-3: degrees (1,2,2,1) -> order (1,2,0,3).
        assert_eq!(Graph::path(4).degree_sequence_order(), vec![1, 2, 0, 3]);
    }

    #[test]
    fn closed_neighborhoods() {
        let tri = Graph::complete(3);
        assert!(tri
            .closed_neighborhood(&VertexSet::new(3))
            .is_empty());
        assert_eq!(
            tri.closed_neighborhood(&VertexSet::from_members(3, [0])).to_vec(),
            vec![0, 1, 2]
        );
        let p = Graph::path(4);
        assert_eq!(
            p.closed_neighborhood(&VertexSet::from_members(4, [0, 3])).to_vec(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn greedy_independent_sets() {
        let g = Graph::empty(7);
        assert_eq!(g.greedy_independent_set(&VertexSet::full(7), None).len(), 7);

        let tri = Graph::complete(3);
        assert_eq!(tri.greedy_independent_set(&VertexSet::full(3), None).len(), 1);

        // C_6: greedy by hand picks {0, 2, 4}.
        let c6 = Graph::cycle(6);
        let ind = c6.greedy_independent_set(&VertexSet::full(6), None);
        assert_eq!(ind.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn greedy_respects_degree_cap() {
        let g = Graph::star(6, 0); // center has degree 5
        let ind = g.greedy_independent_set(&VertexSet::full(6), Some(2));
        assert!(!ind.contains(0));
        assert_eq!(ind.len(), 5);
    }

    #[test]
    fn independence_number_exact() {
        assert_eq!(Graph::cycle(6).independence_number(), 3);
        assert_eq!(Graph::complete(5).independence_number(), 1);
        assert_eq!(Graph::empty(4).independence_number(), 4);
        assert_eq!(Graph::cycle(5).independence_number(), 2);
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3)]).unwrap();
        let comps = g.components_within(&VertexSet::full(6));
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4], vec![5]]);
    }
}
