//! Random and deterministic instance generators for the experiment harness
//! and the CLI.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::ExperimentError;
use crate::graph::Graph;

/// Generators for the missing-edges graph G. Every model keeps its edge count
/// within n - 2, so any target of minimum degree 1 stays admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GModel {
    Edgeless,
    /// A perfect matching on the even prefix (n/2 rounded down edges).
    HalfMatching,
    /// A random forest: each vertex v >= 1 attaches to a uniform earlier
    /// vertex with probability 1/2, capped at n - 2 edges.
    RandomForest,
    /// Exactly m distinct uniform edges.
    RandomEdges(usize),
    /// A few star centers sharing a budget of n - 2 edges to random leaves.
    StarPlusNoise { hubs: usize },
}

impl GModel {
    pub fn sample<R: Rng>(&self, n: usize, rng: &mut R) -> Result<Graph, ExperimentError> {
        match *self {
            GModel::Edgeless => Ok(Graph::empty(n)),
            GModel::HalfMatching => {
                let edges: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
                Ok(Graph::from_edges(n, &edges).unwrap())
            }
            GModel::RandomForest => {
                if n < 2 {
                    return Err(ExperimentError::BadParameters(format!(
                        "forest model needs n >= 2, got {n}"
                    )));
                }
                let budget = n - 2;
                let mut edges = Vec::new();
                for v in 1..n {
                    if edges.len() == budget {
                        break;
                    }
                    if rng.random::<bool>() {
                        edges.push((rng.random_range(0..v), v));
                    }
                }
                Ok(Graph::from_edges(n, &edges).unwrap())
            }
            GModel::RandomEdges(m) => {
                let total = n * n.saturating_sub(1) / 2;
                if m > total {
                    return Err(ExperimentError::BadParameters(format!(
                        "{m} edges requested but only {total} pairs exist at n = {n}"
                    )));
                }
                let mut edges = std::collections::BTreeSet::new();
                while edges.len() < m {
                    let u = rng.random_range(0..n);
                    let v = rng.random_range(0..n);
                    if u != v {
                        edges.insert((u.min(v), u.max(v)));
                    }
                }
                let edges: Vec<_> = edges.into_iter().collect();
                Ok(Graph::from_edges(n, &edges).unwrap())
            }
            GModel::StarPlusNoise { hubs } => {
                if hubs == 0 || hubs >= n {
                    return Err(ExperimentError::BadParameters(format!(
                        "need 1 <= hubs < n, got hubs = {hubs}, n = {n}"
                    )));
                }
                let budget = n.saturating_sub(2);
                let mut edges = std::collections::BTreeSet::new();
                let mut attempts = 0;
                while edges.len() < budget && attempts < 4 * budget + 16 {
                    attempts += 1;
                    let hub = rng.random_range(0..hubs);
                    let leaf = rng.random_range(0..n);
                    if leaf != hub {
                        edges.insert((hub.min(leaf), hub.max(leaf)));
                    }
                }
                let edges: Vec<_> = edges.into_iter().collect();
                Ok(Graph::from_edges(n, &edges).unwrap())
            }
        }
    }
}

impl FromStr for GModel {
    type Err = ExperimentError;

    /// Specs: `edgeless`, `matching`, `forest`, `random:<m>`, `stars:<hubs>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExperimentError::UnknownModelSpec(s.to_string());
        match s.split_once(':') {
            None => match s {
                "edgeless" => Ok(GModel::Edgeless),
                "matching" => Ok(GModel::HalfMatching),
                "forest" => Ok(GModel::RandomForest),
                _ => Err(bad()),
            },
            Some(("random", m)) => m.parse().map(GModel::RandomEdges).map_err(|_| bad()),
            Some(("stars", h)) => {
                h.parse().map(|hubs| GModel::StarPlusNoise { hubs }).map_err(|_| bad())
            }
            Some(_) => Err(bad()),
        }
    }
}

impl fmt::Display for GModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GModel::Edgeless => write!(f, "edgeless"),
            GModel::HalfMatching => write!(f, "matching"),
            GModel::RandomForest => write!(f, "forest"),
            GModel::RandomEdges(m) => write!(f, "random:{m}"),
            GModel::StarPlusNoise { hubs } => write!(f, "stars:{hubs}"),
        }
    }
}

/// Deterministic families for the spanning target H.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HModel {
    /// Perfect matching; n must be even.
    PerfectMatching,
    /// Vertex-disjoint triangles; when 3 does not divide n, the last 4 or 5
    /// vertices form a path instead.
    TrianglesPlusPath,
    /// Disjoint cliques of the given size; n must be a multiple of it.
    CliqueUnion { clique_size: usize },
}

impl HModel {
    pub fn build(&self, n: usize) -> Result<Graph, ExperimentError> {
        match *self {
            HModel::PerfectMatching => {
                if n == 0 || n % 2 != 0 {
                    return Err(ExperimentError::BadParameters(format!(
                        "perfect matching needs even n >= 2, got {n}"
                    )));
                }
                Ok(Graph::perfect_matching(n))
            }
            HModel::TrianglesPlusPath => {
                if n < 3 {
                    return Err(ExperimentError::BadParameters(format!(
                        "triangle cover needs n >= 3, got {n}"
                    )));
                }
                // leave a path on 0 (n divisible by 3), 4, or 5 tail vertices
                let tail = match n % 3 {
                    0 => 0,
                    1 => 4,
                    _ => 5,
                };
                let triangles = (n - tail) / 3;
                let mut edges = Vec::new();
                for t in 0..triangles {
                    let b = 3 * t;
                    edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
                }
                for v in 3 * triangles..n - 1 {
                    edges.push((v, v + 1));
                }
                Ok(Graph::from_edges(n, &edges).unwrap())
            }
            HModel::CliqueUnion { clique_size } => {
                if clique_size < 2 || n == 0 || n % clique_size != 0 {
                    return Err(ExperimentError::BadParameters(format!(
                        "clique union needs clique_size >= 2 dividing n, got {clique_size} and {n}"
                    )));
                }
                let mut edges = Vec::new();
                for block in 0..n / clique_size {
                    let b = block * clique_size;
                    for u in 0..clique_size {
                        for v in u + 1..clique_size {
                            edges.push((b + u, b + v));
                        }
                    }
                }
                Ok(Graph::from_edges(n, &edges).unwrap())
            }
        }
    }
}

impl FromStr for HModel {
    type Err = ExperimentError;

    /// Specs: `matching`, `triangles`, `cliques:<size>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExperimentError::UnknownModelSpec(s.to_string());
        match s.split_once(':') {
            None => match s {
                "matching" => Ok(HModel::PerfectMatching),
                "triangles" => Ok(HModel::TrianglesPlusPath),
                _ => Err(bad()),
            },
            Some(("cliques", c)) => {
                c.parse().map(|clique_size| HModel::CliqueUnion { clique_size }).map_err(|_| bad())
            }
            Some(_) => Err(bad()),
        }
    }
}

impl fmt::Display for HModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HModel::PerfectMatching => write!(f, "matching"),
            HModel::TrianglesPlusPath => write!(f, "triangles"),
            HModel::CliqueUnion { clique_size } => write!(f, "cliques:{clique_size}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn g_models_respect_the_edge_budget() {
        for model in [
            GModel::Edgeless,
            GModel::HalfMatching,
            GModel::RandomForest,
            GModel::RandomEdges(50),
            GModel::StarPlusNoise { hubs: 3 },
        ] {
            for n in [52, 101, 400] {
                let g = model.sample(n, &mut rng(7)).unwrap();
                assert!(g.m() <= n - 2, "{model} gave {} edges at n = {n}", g.m());
            }
        }
    }

    #[test]
    fn random_edges_exact_count() {
        let g = GModel::RandomEdges(30).sample(100, &mut rng(1)).unwrap();
        assert_eq!(g.m(), 30);
        assert!(GModel::RandomEdges(7).sample(4, &mut rng(1)).is_err());
    }

    #[test]
    fn forest_is_acyclic() {
        let g = GModel::RandomForest.sample(200, &mut rng(3)).unwrap();
        // a forest on c components has n - c edges
        let comps = g.components_within(&crate::bitset::VertexSet::full(200));
        assert_eq!(g.m(), 200 - comps.len());
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let a = GModel::RandomEdges(40).sample(100, &mut rng(9)).unwrap();
        let b = GModel::RandomEdges(40).sample(100, &mut rng(9)).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn triangle_cover_shapes() {
        let t = HModel::TrianglesPlusPath.build(9).unwrap();
        assert_eq!((t.m(), t.min_degree(), t.max_degree()), (9, 2, 2));
        // n = 10: two triangles and a path on the last four vertices.
        let t = HModel::TrianglesPlusPath.build(10).unwrap();
        assert_eq!((t.min_degree(), t.max_degree()), (1, 2));
        assert_eq!(t.m(), 2 * 3 + 3);
        // n = 11: two triangles and a path on five.
        let t = HModel::TrianglesPlusPath.build(11).unwrap();
        assert_eq!(t.m(), 2 * 3 + 4);
        assert_eq!(t.min_degree(), 1);
    }

    #[test]
    fn clique_union_shapes() {
        let h = HModel::CliqueUnion { clique_size: 4 }.build(12).unwrap();
        assert_eq!((h.m(), h.min_degree(), h.max_degree()), (18, 3, 3));
        assert!(HModel::CliqueUnion { clique_size: 4 }.build(10).is_err());
        assert!(HModel::PerfectMatching.build(7).is_err());
    }

    #[test]
    fn spec_round_trips() {
        for s in ["edgeless", "matching", "forest", "random:12", "stars:4"] {
            let m: GModel = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        for s in ["matching", "triangles", "cliques:5"] {
            let m: HModel = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert!("nope".parse::<GModel>().is_err());
        assert!("random:x".parse::<GModel>().is_err());
        assert!("cliques:".parse::<HModel>().is_err());
    }
}
