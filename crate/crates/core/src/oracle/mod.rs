//! Ground-truth brute-force engines for desk-scale verification.

mod canon;

pub use canon::{canonical_key, nonisomorphic_graphs, SmallGraph};

use crate::error::OracleError;
use crate::graph::Graph;
use crate::packing::PackingMap;

/// Default vertex-count ceiling for the exact packing search.
pub const EXACT_PACK_LIMIT: usize = 16;
/// Ceiling for the exhaustive extremal-number sweep.
pub const BRUTE_EX_LIMIT: usize = 9;
/// Ceiling for extremal-class enumeration.
pub const ENUMERATE_LIMIT: usize = 8;
/// Ceiling for the Hamilton-cycle decision.
pub const HAMILTONIAN_LIMIT: usize = 20;

/// Exhaustive packing decision: a bijection f with no G-edge on an H-edge, or
/// none. Complete backtracking over placements of H-vertices in descending
/// H-degree order (most-constrained-first), pruning as soon as a G-edge lands
/// on an H-edge.
pub fn exact_pack(g: &Graph, h: &Graph) -> Result<Option<PackingMap>, OracleError> {
    exact_pack_with_limit(g, h, EXACT_PACK_LIMIT)
}

/// Same search with a caller-chosen ceiling (the "forced" escape hatch).
pub fn exact_pack_with_limit(
    g: &Graph,
    h: &Graph,
    limit: usize,
) -> Result<Option<PackingMap>, OracleError> {
    if g.n() != h.n() {
        return Err(OracleError::SizeMismatch { g_n: g.n(), h_n: h.n() });
    }
    let n = g.n();
    if n > limit {
        return Err(OracleError::InstanceTooLarge { n, limit });
    }
    if n == 0 {
        return Ok(Some(PackingMap::new(Vec::new())));
    }
    let mut h_order: Vec<usize> = (0..n).collect();
    h_order.sort_by_key(|&w| (std::cmp::Reverse(h.degree(w)), w));

    // place[w] = G-vertex hosting H-vertex w, usize::MAX if unplaced.
    let mut place = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        h: &Graph,
        h_order: &[usize],
        depth: usize,
        place: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == h_order.len() {
            return true;
        }
        let w = h_order[depth];
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            // No G-edge may land on an H-edge: for every placed H-neighbor w'
            // of w at G-vertex v', the pair (v, v') must be a G-non-edge.
            let ok = h
                .neighbors_list(w)
                .iter()
                .all(|&w2| place[w2 as usize] == usize::MAX || !g.has_edge(v, place[w2 as usize]));
            if !ok {
                continue;
            }
            place[w] = v;
            used[v] = true;
            if rec(g, h, h_order, depth + 1, place, used) {
                return true;
            }
            place[w] = usize::MAX;
            used[v] = false;
        }
        false
    }
    if rec(g, h, &h_order, 0, &mut place, &mut used) {
        let mut forward = vec![0u32; n];
        for w in 0..n {
            forward[place[w]] = w as u32;
        }
        let map = PackingMap::new(forward);
        debug_assert_eq!(crate::packing::verify_packing(g, h, &map), Ok(true));
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Result of the exhaustive extremal-number sweep.
#[derive(Clone, Debug)]
pub struct ExSearchResult {
    pub n: usize,
    /// ex(n, H): the maximum edge count avoiding a spanning copy of H.
    pub ex_value: usize,
    /// A witness with ex_value edges and no spanning H.
    pub witness: Graph,
    /// Minimum missing-edge count m* with ex = C(n,2) - m*.
    pub min_missing: usize,
}

/// Exact ex(n, H) by iterating the missing-edge count m = 0, 1, 2, ... over
/// isomorphism classes and testing packability of each class against H.
pub fn brute_ex(n: usize, h: &Graph) -> Result<ExSearchResult, OracleError> {
    if n != h.n() {
        return Err(OracleError::SizeMismatch { g_n: n, h_n: h.n() });
    }
    if n > BRUTE_EX_LIMIT {
        return Err(OracleError::InstanceTooLarge { n, limit: BRUTE_EX_LIMIT });
    }
    if h.min_degree() == 0 {
        return Err(OracleError::EdgelessTarget);
    }
    let total = n * (n - 1) / 2;
    for m in 0..=total {
        for candidate in nonisomorphic_graphs(n, m) {
            let missing = candidate.to_graph();
            if exact_pack(&missing, h)?.is_none() {
                return Ok(ExSearchResult {
                    n,
                    ex_value: total - m,
                    witness: missing.complement(),
                    min_missing: m,
                });
            }
        }
    }
    unreachable!("a complete missing graph leaves an empty complement, which cannot host H");
}

/// All isomorphism classes of n-vertex graphs with ex(n, H) edges and no
/// spanning copy of H, ordered by the canonical key of their missing-edge
/// complement.
pub fn enumerate_extremal(n: usize, h: &Graph) -> Result<Vec<Graph>, OracleError> {
    if n > ENUMERATE_LIMIT {
        return Err(OracleError::InstanceTooLarge { n, limit: ENUMERATE_LIMIT });
    }
    let base = brute_ex(n, h)?;
    let mut out = Vec::new();
    for candidate in nonisomorphic_graphs(n, base.min_missing) {
        let missing = candidate.to_graph();
        if exact_pack(&missing, h)?.is_none() {
            out.push(missing.complement());
        }
    }
    Ok(out)
}

/// Exact Hamilton-cycle decision by backtracking.
pub fn is_hamiltonian(g: &Graph) -> Result<bool, OracleError> {
    let n = g.n();
    if n > HAMILTONIAN_LIMIT {
        return Err(OracleError::InstanceTooLarge { n, limit: HAMILTONIAN_LIMIT });
    }
    if n < 3 {
        return Ok(false);
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    fn rec(g: &Graph, current: usize, visited: u32, count: usize) -> bool {
        if count == g.n() {
            return g.has_edge(current, 0);
        }
        for &u in g.neighbors_list(current) {
            let u = u as usize;
            if visited >> u & 1 == 0 && rec(g, u, visited | 1 << u, count + 1) {
                return true;
            }
        }
        false
    }
    Ok(rec(g, 0, 1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_missing(n: usize, leaves: usize) -> Graph {
        // S_{1,leaves} centered at 0 on n vertices, as a missing-edge graph.
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn exact_pack_star_vs_cycle() {
        // Missing S_{1,4} on 6 vertices: complement is Ore's extremal graph,
        // so C_6 does not pack.
        let g = star_missing(6, 4);
        assert!(exact_pack(&g, &Graph::cycle(6)).unwrap().is_none());
        // 3 missing star edges are within the n - delta - 1 = 3 bound: packable.
        let g3 = star_missing(6, 3);
        let map = exact_pack(&g3, &Graph::cycle(6)).unwrap().unwrap();
        assert!(crate::packing::verify_packing(&g3, &Graph::cycle(6), &map).unwrap());
    }

    #[test]
    fn exact_pack_edgeless_is_identity_friendly() {
        let g = Graph::empty(5);
        let h = Graph::cycle(5);
        assert!(exact_pack(&g, &h).unwrap().is_some());
    }

    #[test]
    fn exact_pack_size_limits() {
        let g = Graph::empty(17);
        let h = Graph::perfect_matching(18);
        assert!(matches!(
            exact_pack(&g, &Graph::empty(17)),
            Err(OracleError::InstanceTooLarge { n: 17, limit: 16 })
        ));
        assert!(matches!(
            exact_pack(&g, &h),
            Err(OracleError::SizeMismatch { .. })
        ));
        assert!(exact_pack_with_limit(&g, &Graph::path(17), 17).is_ok());
    }

    #[test]
    fn brute_ex_small_cycles_and_matchings() {
        // Ore at n = 4: ex(4, C_4) = C(3,2) + 1 = 4.
        let r = brute_ex(4, &Graph::cycle(4)).unwrap();
        assert_eq!((r.ex_value, r.min_missing), (4, 2));
        assert_eq!(r.witness.m(), 4);
        // Perfect matching on 4 vertices: ex = 3, min_missing = 3.
        let r = brute_ex(4, &Graph::perfect_matching(4)).unwrap();
        assert_eq!((r.ex_value, r.min_missing), (3, 3));
        // K_2: any edge is a copy.
        let r = brute_ex(2, &Graph::complete(2)).unwrap();
        assert_eq!(r.ex_value, 0);
    }

    #[test]
    fn brute_ex_witness_is_consistent() {
        let h = Graph::cycle(5);
        let r = brute_ex(5, &h).unwrap();
        assert_eq!(r.ex_value, r.witness.m());
        assert_eq!(r.ex_value, 5 * 4 / 2 - r.min_missing);
        // The witness's missing-edge form must fail to pack with h.
        assert!(exact_pack(&r.witness.complement(), &h).unwrap().is_none());
    }

    #[test]
    fn hamiltonicity() {
        assert!(is_hamiltonian(&Graph::cycle(5)).unwrap());
        // K_4 minus one edge is Hamiltonian.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_hamiltonian(&g).unwrap());
        // Ore's extremal graph K_6 - S_{1,4} is not.
        let ore = star_missing(6, 4).complement();
        assert!(!is_hamiltonian(&ore).unwrap());
        assert!(!is_hamiltonian(&Graph::path(5)).unwrap());
    }

    #[test]
    fn enumerate_matching_witnesses_at_4() {
        // h = perfect matching on 4 vertices: witnesses with 3 edges include K_{1,3}.
        let h = Graph::perfect_matching(4);
        let classes = enumerate_extremal(4, &h).unwrap();
        assert!(!classes.is_empty());
        let star_key = canonical_key(&SmallGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]));
        let found_star = classes.iter().any(|g| {
            let sg = SmallGraph::from_edges(4, &g.edges());
            canonical_key(&sg) == star_key
        });
        assert!(found_star);
    }
}
