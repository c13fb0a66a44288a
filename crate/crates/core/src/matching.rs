//! Bipartite graphs and Hopcroft–Karp maximum matching.
//!
//! The stage-4 graph P can have on the order of n^2 edges, so adjacency is
//! stored as one right-side bitset per left vertex and the layered search
//! walks words rather than edge lists.

use crate::bitset::VertexSet;
use crate::error::GraphError;

#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left_size: usize,
    right_size: usize,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl BipartiteGraph {
    pub fn new(left_size: usize, right_size: usize) -> BipartiteGraph {
        BipartiteGraph {
            left_size,
            right_size,
            rows: (0..left_size).map(|_| VertexSet::new(right_size)).collect(),
            edge_count: 0,
        }
    }

    pub fn from_edges(
        left_size: usize,
        right_size: usize,
        edges: &[(usize, usize)],
    ) -> Result<BipartiteGraph, GraphError> {
        let mut g = BipartiteGraph::new(left_size, right_size);
        for &(l, r) in edges {
            if l >= left_size {
                return Err(GraphError::VertexOutOfRange { vertex: l, n: left_size });
            }
            if r >= right_size {
                return Err(GraphError::VertexOutOfRange { vertex: r, n: right_size });
            }
            if !g.add_edge(l, r) {
                return Err(GraphError::DuplicateEdge(l, r));
            }
        }
        Ok(g)
    }

    /// Adds an edge, returning false if it was already present.
    pub fn add_edge(&mut self, l: usize, r: usize) -> bool {
        let added = self.rows[l].insert(r);
        if added {
            self.edge_count += 1;
        }
        added
    }

    /// Installs a whole adjacency row at once (used when rows are computed as
    /// set differences).
    pub fn set_row(&mut self, l: usize, row: VertexSet) {
        assert_eq!(row.universe(), self.right_size);
        self.edge_count -= self.rows[l].len();
        self.edge_count += row.len();
        self.rows[l] = row;
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.rows[l].contains(r)
    }

    pub fn row(&self, l: usize) -> &VertexSet {
        &self.rows[l]
    }

    pub fn left_degree(&self, l: usize) -> usize {
        self.rows[l].len()
    }

    pub fn right_degree(&self, r: usize) -> usize {
        (0..self.left_size).filter(|&l| self.rows[l].contains(r)).count()
    }
}

const UNMATCHED: usize = usize::MAX;

/// Maximum matching via Hopcroft–Karp layered augmentation, O(E * sqrt(V)).
///
/// Returns the matched pairs sorted by left index. A perfect matching is
/// detected by the caller comparing the size against the side sizes.
pub fn maximum_bipartite_matching(p: &BipartiteGraph) -> Vec<(usize, usize)> {
    let (nl, nr) = (p.left_size, p.right_size);
    let mut match_l = vec![UNMATCHED; nl];
    let mut match_r = vec![UNMATCHED; nr];

    // Greedy initialization: match each left vertex to its first free neighbor.
    let mut free_r = VertexSet::full(nr);
    for l in 0..nl {
        let mut probe = p.rows[l].clone();
        probe.intersect_with(&free_r);
        if let Some(r) = probe.first() {
            match_l[l] = r;
            match_r[r] = l;
            free_r.remove(r);
        }
    }

    let mut dist = vec![usize::MAX; nl];
    loop {
        // BFS: layer the left vertices starting from the free ones.
        let mut queue: Vec<usize> = Vec::new();
        for l in 0..nl {
            if match_l[l] == UNMATCHED {
                dist[l] = 0;
                queue.push(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found_free = false;
        let mut head = 0;
        while head < queue.len() {
            let l = queue[head];
            head += 1;
            for r in p.rows[l].iter() {
                let l2 = match_r[r];
                if l2 == UNMATCHED {
                    found_free = true;
                } else if dist[l2] == usize::MAX {
                    dist[l2] = dist[l] + 1;
                    queue.push(l2);
                }
            }
        }
        if !found_free {
            break;
        }
        // DFS phase along layered edges.
        fn try_augment(
            p: &BipartiteGraph,
            l: usize,
            match_l: &mut [usize],
            match_r: &mut [usize],
            dist: &mut [usize],
        ) -> bool {
            for r in p.rows[l].iter() {
                let l2 = match_r[r];
                if l2 == UNMATCHED
                    || (dist[l2] == dist[l] + 1 && try_augment(p, l2, match_l, match_r, dist))
                {
                    match_l[l] = r;
                    match_r[r] = l;
                    return true;
                }
            }
            dist[l] = usize::MAX;
            false
        }
        let mut progressed = false;
        for l in 0..nl {
            if match_l[l] == UNMATCHED && dist[l] == 0 {
                progressed |= try_augment(p, l, &mut match_l, &mut match_r, &mut dist);
            }
        }
        if !progressed {
            break;
        }
    }

    (0..nl)
        .filter(|&l| match_l[l] != UNMATCHED)
        .map(|l| (l, match_l[l]))
        .collect()
}

/// Exhaustive maximum matching size, for oracle comparison on tiny instances.
pub fn brute_force_matching_size(p: &BipartiteGraph) -> usize {
    fn rec(p: &BipartiteGraph, l: usize, used: u64) -> usize {
        if l == p.left_size() {
            return 0;
        }
        let mut best = rec(p, l + 1, used); // leave l unmatched
        for r in p.row(l).iter() {
            if used >> r & 1 == 0 {
                best = best.max(1 + rec(p, l + 1, used | 1 << r));
            }
        }
        best
    }
    assert!(p.right_size() <= 64);
    rec(p, 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matching_is_valid(p: &BipartiteGraph, m: &[(usize, usize)]) {
        let mut seen_l = std::collections::HashSet::new();
        let mut seen_r = std::collections::HashSet::new();
        for &(l, r) in m {
            assert!(p.has_edge(l, r));
            assert!(seen_l.insert(l));
            assert!(seen_r.insert(r));
        }
    }

    #[test]
    fn complete_3x3_is_perfect() {
        let mut p = BipartiteGraph::new(3, 3);
        for l in 0..3 {
            for r in 0..3 {
                p.add_edge(l, r);
            }
        }
        let m = maximum_bipartite_matching(&p);
        matching_is_valid(&p, &m);
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn pigeonhole_2x1() {
        let p = BipartiteGraph::from_edges(2, 1, &[(0, 0), (1, 0)]).unwrap();
        let m = maximum_bipartite_matching(&p);
        matching_is_valid(&p, &m);
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn shifted_cycle_4x4() {
        // left i -> right i and (i+1) mod 4; the identity matching is perfect.
        let edges: Vec<_> = (0..4).flat_map(|i| [(i, i), (i, (i + 1) % 4)]).collect();
        let p = BipartiteGraph::from_edges(4, 4, &edges).unwrap();
        let m = maximum_bipartite_matching(&p);
        matching_is_valid(&p, &m);
        assert_eq!(m.len(), 4);
    }

    #[test]
    fn duplicate_edge_rejected() {
        assert!(matches!(
            BipartiteGraph::from_edges(2, 2, &[(0, 0), (0, 0)]),
            Err(GraphError::DuplicateEdge(0, 0))
        ));
    }
}
