//! Canonical forms for graphs on at most 9 vertices.
//!
//! The canonical key is the minimum upper-triangle bit encoding over all
//! vertex orderings consistent with an iterated degree refinement. The
//! refinement classes are isomorphism-invariant, so the restricted minimum is
//! a true canonical form while pruning most of the n! orderings.

/// Adjacency-row representation of a tiny labeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    pub n: usize,
    pub rows: Vec<u16>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 9);
        SmallGraph { n, rows: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SmallGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_graph(&self) -> crate::graph::Graph {
        crate::graph::Graph::from_edges(self.n, &self.edges()).unwrap()
    }
}

/// Iterated neighbor-color refinement; returns one color id per vertex, with
/// ids ordered by the (isomorphism-invariant) class signatures.
fn refine_colors(g: &SmallGraph) -> Vec<usize> {
    let n = g.n;
    let mut colors: Vec<usize> = (0..n).map(|v| g.rows[v].count_ones() as usize).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<usize> = (0..n)
                .filter(|&u| g.has_edge(v, u))
                .map(|u| colors[u])
                .collect();
            neigh.sort_unstable();
            sigs.push((colors[v], neigh));
        }
        let mut uniq: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let new_colors: Vec<usize> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap())
            .collect();
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

fn encode(g: &SmallGraph, perm: &[usize]) -> u64 {
    // perm[new_label] = original vertex
    let mut key = 0u64;
    let mut bit = 0;
    for i in 0..g.n {
        for j in i + 1..g.n {
            if g.has_edge(perm[i], perm[j]) {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

/// Canonical key of the isomorphism class of `g`.
pub fn canonical_key(g: &SmallGraph) -> u64 {
    let n = g.n;
    if n == 0 {
        return 0;
    }
    let colors = refine_colors(g);
    // Vertices grouped by color id; orderings must list color classes in order.
    let num_colors = colors.iter().max().unwrap() + 1;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); num_colors];
    for v in 0..n {
        classes[colors[v]].push(v);
    }
    let class_of_position: Vec<usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(c, members)| std::iter::repeat(c).take(members.len()))
        .collect();

    let mut best = u64::MAX;
    let mut perm = vec![0usize; n];
    let mut used = vec![false; n];
    fn rec(
        g: &SmallGraph,
        classes: &[Vec<usize>],
        class_of_position: &[usize],
        pos: usize,
        perm: &mut [usize],
        used: &mut [bool],
        best: &mut u64,
    ) {
        if pos == g.n {
            *best = (*best).min(encode(g, perm));
            return;
        }
        for &v in &classes[class_of_position[pos]] {
            if !used[v] {
                used[v] = true;
                perm[pos] = v;
                rec(g, classes, class_of_position, pos + 1, perm, used, best);
                used[v] = false;
            }
        }
    }
    rec(g, &classes, &class_of_position, 0, &mut perm, &mut used, &mut best);
    best
}

/// All isomorphism classes of graphs on `n` labeled vertices with exactly `m`
/// edges, grown level by level from the edgeless graph. Output is sorted by
/// canonical key, so the sweep order is deterministic.
pub fn nonisomorphic_graphs(n: usize, m: usize) -> Vec<SmallGraph> {
    assert!(n <= 9);
    let mut level: Vec<(u64, SmallGraph)> = vec![(0, SmallGraph::empty(n))];
    for _ in 0..m {
        let mut next: std::collections::BTreeMap<u64, SmallGraph> = Default::default();
        for (_, g) in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut g2 = g.clone();
                        g2.add_edge(u, v);
                        let key = canonical_key(&g2);
                        next.entry(key).or_insert(g2);
                    }
                }
            }
        }
        level = next.into_iter().collect();
        if level.is_empty() {
            break;
        }
    }
    level.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_paths_share_a_key() {
        let a = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = SmallGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(canonical_key(&a), canonical_key(&b));
        let star = SmallGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_key(&a), canonical_key(&star));
    }

    #[test]
    fn graph_counts_match_oeis() {
        // Unlabeled graphs on 4 vertices by edge count: 1,1,2,3,2,1,1 (OEIS A008406 row).
        let counts: Vec<usize> = (0..=6).map(|m| nonisomorphic_graphs(4, m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 2, 1, 1]);
        // 5 vertices, 5 edges: 6 classes.
        assert_eq!(nonisomorphic_graphs(5, 5).len(), 6);
    }

    #[test]
    fn regular_graphs_canonicalize() {
        let c5 = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let c5b = SmallGraph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_key(&c5), canonical_key(&c5b));
    }
}
