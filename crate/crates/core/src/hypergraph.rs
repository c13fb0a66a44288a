//! 3-uniform hypergraphs: links, 3-colorability of links, the
//! clique-block counter-example and the dense two-apex host, with exact
//! small-scale verification.

use crate::error::HypergraphError;
use crate::graph::Graph;

pub const COLORING_LIMIT: usize = 40;
pub const SPANNING_SEARCH_LIMIT: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    /// Builds from triples; members are sorted, duplicates rejected.
    pub fn from_edges(n: usize, edges: &[[usize; 3]]) -> Result<Hypergraph3, HypergraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &e in edges {
            let mut e = e;
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(HypergraphError::MalformedEdge(e));
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: bad, n });
            }
            normalized.push(e);
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge(w[0]));
        }
        Ok(Hypergraph3 { n, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn has_edge(&self, mut e: [usize; 3]) -> bool {
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }
}

/// The link of `v`: a graph on the remaining n - 1 vertices (re-indexed) with
/// an edge {x, y} exactly when {v, x, y} is a hyperedge.
#[derive(Clone, Debug)]
pub struct LinkGraph {
    pub graph: Graph,
    /// link index -> original vertex index
    pub index_map: Vec<usize>,
}

pub fn link(hg: &Hypergraph3, v: usize) -> Result<LinkGraph, HypergraphError> {
    if v >= hg.n() {
        return Err(HypergraphError::VertexOutOfRange { vertex: v, n: hg.n() });
    }
    let index_map: Vec<usize> = (0..hg.n()).filter(|&u| u != v).collect();
    let to_link = |u: usize| if u < v { u } else { u - 1 };
    let mut edges = Vec::new();
    for e in hg.edges() {
        if let Some(p) = e.iter().position(|&u| u == v) {
            let others: Vec<usize> = (0..3).filter(|&q| q != p).map(|q| e[q]).collect();
            edges.push((to_link(others[0]), to_link(others[1])));
        }
    }
    Ok(LinkGraph {
        graph: Graph::from_edges(hg.n() - 1, &edges).unwrap(),
        index_map,
    })
}

/// s disjoint complete 3-uniform blocks on 5 vertices each, plus an apex x
/// contained in the single edge {x, 0, 1}. n = 5s + 1, 10s + 1 edges.
pub fn counterexample_h(s: usize) -> Result<Hypergraph3, HypergraphError> {
    if s < 2 {
        return Err(HypergraphError::ParameterOutOfRange(format!(
            "need s >= 2, got {s}"
        )));
    }
    let n = 5 * s + 1;
    let mut edges = Vec::new();
    for block in 0..s {
        let base = 5 * block;
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    edges.push([base + a, base + b, base + c]);
                }
            }
        }
    }
    edges.push([0, 1, n - 1]);
    Hypergraph3::from_edges(n, &edges)
}

/// The dense host: U of n - 2 vertices split into three nearly equal parts
/// (larger parts first), all 3-subsets of U, plus every cross-part pair
/// completed through each of the two apexes x = n - 2 and y = n - 1.
pub fn construction_t(n: usize) -> Result<Hypergraph3, HypergraphError> {
    if n < 8 {
        return Err(HypergraphError::ParameterOutOfRange(format!(
            "need n >= 8, got {n}"
        )));
    }
    let u = n - 2;
    let q = u / 3;
    let r = u % 3;
    let sizes = [q + usize::from(r > 0), q + usize::from(r > 1), q];
    let mut part = vec![0usize; u];
    let mut start = 0;
    for (p, &s) in sizes.iter().enumerate() {
        for v in start..start + s {
            part[v] = p;
        }
        start += s;
    }
    let mut edges = Vec::new();
    for a in 0..u {
        for b in a + 1..u {
            for c in b + 1..u {
                edges.push([a, b, c]);
            }
        }
    }
    let (x, y) = (n - 2, n - 1);
    for a in 0..u {
        for b in a + 1..u {
            if part[a] != part[b] {
                edges.push([x, a, b]);
                edges.push([y, a, b]);
            }
        }
    }
    Hypergraph3::from_edges(n, &edges)
}

fn contains_k4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !(g.has_edge(a, c) && g.has_edge(b, c)) {
                    continue;
                }
                for d in c + 1..n {
                    if g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Exact proper-3-coloring decision. A K_4 short-circuits to false; otherwise
/// backtracking over vertices in descending degree order.
pub fn is_3_colorable(g: &Graph) -> Result<bool, HypergraphError> {
    if g.n() > COLORING_LIMIT {
        return Err(HypergraphError::InstanceTooLarge { n: g.n(), limit: COLORING_LIMIT });
    }
    if contains_k4(g) {
        return Ok(false);
    }
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];
    fn rec(g: &Graph, order: &[usize], depth: usize, color: &mut [usize], used_colors: usize) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        // symmetry breaking: at most one fresh color per level
        let limit = (used_colors + 1).min(3);
        'next_color: for c in 0..limit {
            for &u in g.neighbors_list(v) {
                if color[u as usize] == c {
                    continue 'next_color;
                }
            }
            color[v] = c;
            let grown = used_colors.max(c + 1);
            if rec(g, order, depth + 1, color, grown) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }
    Ok(rec(g, &order, 0, &mut color, 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// The pigeonhole count rules out any spanning embedding of H into T.
    NoSpanningCopy,
    Inconclusive,
}

/// Pigeonhole check: in a spanning embedding, the link of an H-vertex embeds
/// into the link of its image, so every H-vertex with a non-3-colorable link
/// must land on a T-vertex with a non-3-colorable link. With
/// a = #{3-colorable links in T} and b = #{non-3-colorable links in H},
/// b > n - a rules the embedding out.
pub fn local_obstruction_check(
    t: &Hypergraph3,
    h: &Hypergraph3,
) -> Result<ObstructionVerdict, HypergraphError> {
    if t.n() != h.n() {
        return Err(HypergraphError::SizeMismatch(t.n(), h.n()));
    }
    let n = t.n();
    let mut a = 0;
    for v in 0..n {
        if is_3_colorable(&link(t, v)?.graph)? {
            a += 1;
        }
    }
    let mut b = 0;
    for v in 0..n {
        if !is_3_colorable(&link(h, v)?.graph)? {
            b += 1;
        }
    }
    if b > n - a {
        Ok(ObstructionVerdict::NoSpanningCopy)
    } else {
        Ok(ObstructionVerdict::Inconclusive)
    }
}

/// True iff some vertex has a link with exactly one edge, which forces the
/// extremal number of the link family to zero.
pub fn links_extremal_zero(h: &Hypergraph3) -> bool {
    (0..h.n()).any(|v| {
        link(h, v).map(|l| l.graph.m() == 1).unwrap_or(false)
    })
}

/// Exhaustive spanning-subhypergraph search at desk scale: a bijection taking
/// every H-edge to a T-edge, or none.
pub fn exact_spanning_copy(
    t: &Hypergraph3,
    h: &Hypergraph3,
) -> Result<Option<Vec<usize>>, HypergraphError> {
    if t.n() != h.n() {
        return Err(HypergraphError::SizeMismatch(t.n(), h.n()));
    }
    let n = t.n();
    if n > SPANNING_SEARCH_LIMIT {
        return Err(HypergraphError::InstanceTooLarge { n, limit: SPANNING_SEARCH_LIMIT });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        t: &Hypergraph3,
        h: &Hypergraph3,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let w = order[depth];
        'candidates: for v in 0..t.n() {
            if used[v] {
                continue;
            }
            image[w] = v;
            for e in h.edges() {
                if e.contains(&w) && e.iter().all(|&u| image[u] != usize::MAX) {
                    let mapped = [image[e[0]], image[e[1]], image[e[2]]];
                    if !t.has_edge(mapped) {
                        image[w] = usize::MAX;
                        continue 'candidates;
                    }
                }
            }
            used[v] = true;
            if rec(t, h, order, depth + 1, image, used) {
                return true;
            }
            used[v] = false;
            image[w] = usize::MAX;
        }
        false
    }
    if rec(t, h, &order, 0, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}
