//! Stage machinery: Lemma 1 independent sets, Lemma 2 reservoir sampling,
//! and the four matching stages.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::matching::{maximum_bipartite_matching, BipartiteGraph};

use super::config::{derive_seed, PackingConfig};
use super::trace::{StageTrace, TraceEvent};
use super::{PackingMap, PackingOutcome, Violation};

const UNMATCHED: u32 = u32::MAX;

/// Degree cap encoding "degree strictly below `threshold`" for integer degrees.
fn strict_cap(threshold: f64) -> usize {
    (threshold.ceil() as usize).saturating_sub(1)
}

/// S_1: an independent set of non-neighbors of v_1, all with degree below
/// 2*sqrt(n), of size at least delta.
///
/// Follows the two-case split of Lemma 1: when the non-neighbors of v_1 are
/// plentiful a capped greedy set suffices; otherwise one vertex per component
/// of the non-neighbor subgraph is taken.
pub fn build_s1(
    g: &Graph,
    order: &[u32],
    delta: usize,
    _cfg: &PackingConfig,
) -> Result<VertexSet, Violation> {
    let n = g.n();
    let v1 = order[0] as usize;
    let mut nonneighbors = VertexSet::full(n);
    nonneighbors.difference_with(g.neighbors(v1));
    nonneighbors.remove(v1);
    let cap = strict_cap(2.0 * (n as f64).sqrt());

    let s1 = if n - g.degree(v1) - 1 >= 6 * delta {
        g.greedy_independent_set(&nonneighbors, Some(cap))
    } else {
        let mut s = VertexSet::new(n);
        for comp in g.components_within(&nonneighbors) {
            if let Some(&v) = comp.iter().find(|&&v| g.degree(v) <= cap) {
                s.insert(v);
            }
        }
        s
    };
    if s1.len() < delta {
        return Err(Violation::new(
            "S1",
            format!("|S_1| = {} below delta = {delta}; n is outside the theorem's regime", s1.len()),
        ));
    }
    debug_assert!(g.is_independent(&s1));
    debug_assert!(s1.is_disjoint(g.neighbors(v1)) && !s1.contains(v1));
    Ok(s1)
}

/// S_i for i >= 2: an independent set avoiding N[v_i] and N[B_1], members of
/// degree at most the small-degree cap.
pub fn build_si(g: &Graph, v_i: usize, b1: &[u32], cfg: &PackingConfig) -> VertexSet {
    let b1_closed = g.closed_neighborhood_of_slice(b1);
    build_si_with_closure(g, v_i, &b1_closed, cfg)
}

fn build_si_with_closure(
    g: &Graph,
    v_i: usize,
    b1_closed: &VertexSet,
    cfg: &PackingConfig,
) -> VertexSet {
    let n = g.n();
    let mut cand = VertexSet::full(n);
    cand.difference_with(g.neighbors(v_i));
    cand.remove(v_i);
    cand.difference_with(b1_closed);
    g.greedy_independent_set(&cand, Some(cfg.small_degree_cap))
}

/// One reservoir sample B_2..B_{i_max} with its Lemma 2 checks, no retries.
pub struct ReservoirProbe {
    /// B_i at index i - 2.
    pub b_sets: Vec<VertexSet>,
    /// D_i = B_i minus the earlier closed neighborhoods, at index i - 2.
    pub d_sets: Vec<VertexSet>,
    /// |C_i| <= c_bound_coeff * sqrt(n) for every i in 2..=n.
    pub cond_a: bool,
    /// |D_i| >= d_bound_coeff * sqrt(n) for every i in the checked range.
    pub cond_b: bool,
    pub max_c: usize,
    /// Smallest |D_i| over the checked range, if the range is non-empty.
    pub min_d_checked: Option<usize>,
    /// (i, d(v_i), |C_i|) for every i whose degree reached the probe threshold.
    pub high_degree_c: Vec<(usize, usize, usize)>,
}

fn sample_once(
    g: &Graph,
    order: &[u32],
    s_sets: &[VertexSet],
    cfg: &PackingConfig,
    seed: u64,
    c_probe_threshold: Option<f64>,
) -> ReservoirProbe {
    let n = g.n();
    let sqrt_n = (n as f64).sqrt();
    let p = (n as f64).powf(cfg.sample_prob_exponent);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let b_sets: Vec<VertexSet> = s_sets
        .iter()
        .map(|s| {
            let mut b = VertexSet::new(n);
            for v in s {
                if rng.random::<f64>() < p {
                    b.insert(v);
                }
            }
            b
        })
        .collect();
    let i_max = b_sets.len() + 1; // B_i exists for i in 2..=i_max

    // Condition (a): C_i = (union of B_j, j < i) ∩ N(v_i) stays small, all i.
    let c_cap = cfg.c_bound_coeff * sqrt_n;
    let mut union_b = VertexSet::new(n);
    let mut cond_a = true;
    let mut max_c = 0usize;
    let mut high_degree_c = Vec::new();
    for i in 2..=n {
        if i >= 3 && i - 1 <= i_max {
            union_b.union_with(&b_sets[i - 3]);
        }
        let v_i = order[i - 1] as usize;
        let c_i = g
            .neighbors_list(v_i)
            .iter()
            .filter(|&&u| union_b.contains(u as usize))
            .count();
        max_c = max_c.max(c_i);
        if c_i as f64 > c_cap {
            cond_a = false;
        }
        if let Some(thresh) = c_probe_threshold {
            let d_vi = g.degree(v_i);
            if d_vi as f64 >= thresh {
                high_degree_c.push((i, d_vi, c_i));
            }
        }
    }

    // Condition (b): D_i = B_i minus earlier closed neighborhoods stays large
    // for i up to ceil(d_range_coeff * sqrt(n)).
    let d_range = (cfg.d_range_coeff * sqrt_n).ceil() as usize;
    let d_floor = cfg.d_bound_coeff * sqrt_n;
    let mut nbj_union = VertexSet::new(n);
    let mut d_sets = Vec::with_capacity(b_sets.len());
    let mut cond_b = d_range <= i_max;
    let mut min_d_checked = None;
    for i in 2..=i_max {
        if i >= 3 {
            for v in &b_sets[i - 3] {
                nbj_union.insert(v);
                for &u in g.neighbors_list(v) {
                    nbj_union.insert(u as usize);
                }
            }
        }
        let mut d_i = b_sets[i - 2].clone();
        d_i.difference_with(&nbj_union);
        if i <= d_range {
            min_d_checked = Some(min_d_checked.map_or(d_i.len(), |m: usize| m.min(d_i.len())));
            if (d_i.len() as f64) < d_floor {
                cond_b = false;
            }
        }
        d_sets.push(d_i);
    }

    ReservoirProbe {
        b_sets,
        d_sets,
        cond_a,
        cond_b,
        max_c,
        min_d_checked,
        high_degree_c,
    }
}

/// Experiment entry point: builds the ordering, S_1/B_1 and the lazy S_i
/// family for `g`, then draws a single reservoir sample (no retries) and
/// reports the Lemma 2 conjunct outcomes.
///
/// `c_probe_threshold`, when set, collects (i, d(v_i), |C_i|) for every i with
/// degree at least the threshold.
pub fn reservoir_probe(
    g: &Graph,
    delta: usize,
    cfg: &PackingConfig,
    seed: u64,
    c_probe_threshold: Option<f64>,
) -> Result<ReservoirProbe, Violation> {
    let n = g.n();
    let order = g.degree_sequence_order();
    let s1 = build_s1(g, &order, delta, cfg)?;
    let b1: Vec<u32> = s1.iter().take(delta).map(|v| v as u32).collect();
    let (k, d_range) = stage_ranges(g, &order, cfg);
    let i_max = k.max(d_range).max(1);
    let b1_closed = g.closed_neighborhood_of_slice(&b1);
    let s_floor = cfg.s_size_coeff * n as f64;
    let mut s_sets = Vec::new();
    for i in 2..=i_max {
        let v_i = order[i - 1] as usize;
        let s_i = build_si_with_closure(g, v_i, &b1_closed, cfg);
        if (s_i.len() as f64) < s_floor {
            return Err(Violation::new(
                "Si",
                format!("|S_{i}| = {} below n * s_size_coeff = {s_floor:.2}", s_i.len()),
            ));
        }
        s_sets.push(s_i);
    }
    Ok(sample_once(g, &order, &s_sets, cfg, seed, c_probe_threshold))
}

/// k = number of order positions with degree >= high_degree_coeff * sqrt(n),
/// and the inclusive end of the D-check range.
fn stage_ranges(g: &Graph, order: &[u32], cfg: &PackingConfig) -> (usize, usize) {
    let sqrt_n = (g.n() as f64).sqrt();
    let high = cfg.high_degree_coeff * sqrt_n;
    let k = order
        .iter()
        .take_while(|&&v| g.degree(v as usize) as f64 >= high)
        .count();
    let d_range = (cfg.d_range_coeff * sqrt_n).ceil() as usize;
    (k, d_range)
}

struct Engine<'a> {
    h: &'a Graph,
    forward: Vec<u32>,
    backward: Vec<u32>,
    unmatched_h: VertexSet,
    matched: usize,
    trace: StageTrace,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let n = g.n();
        Engine {
            h,
            forward: vec![UNMATCHED; n],
            backward: vec![UNMATCHED; n],
            unmatched_h: VertexSet::full(n),
            matched: 0,
            trace: StageTrace::new(),
        }
    }

    #[inline]
    fn is_matched(&self, v: usize) -> bool {
        self.forward[v] != UNMATCHED
    }

    fn bind(&mut self, stage: u8, v: usize, w: usize) {
        debug_assert_eq!(self.forward[v], UNMATCHED);
        debug_assert_eq!(self.backward[w], UNMATCHED);
        self.forward[v] = w as u32;
        self.backward[w] = v as u32;
        self.unmatched_h.remove(w);
        self.matched += 1;
        self.trace.push(TraceEvent::Matched {
            stage,
            g_vertex: v as u32,
            h_vertex: w as u32,
        });
    }

    /// Union of H-neighborhoods of the matches of the given G-vertices.
    fn forbidden_targets(&self, g_vertices: &[usize]) -> VertexSet {
        let mut forbidden = VertexSet::new(self.h.n());
        for &u in g_vertices {
            let w = self.forward[u] as usize;
            forbidden.union_with(self.h.neighbors(w));
        }
        forbidden
    }

    fn violation(self, stage: &str, reason: String) -> PackingOutcome {
        PackingOutcome::GuaranteeViolation {
            violation: Violation { stage: stage.into(), reason },
            trace: self.trace,
        }
    }
}

pub(super) fn run(g: &Graph, h: &Graph, cfg: &PackingConfig) -> PackingOutcome {
    let n = g.n();
    let delta = h.min_degree();
    let max_deg_h = h.max_degree();
    let order = g.degree_sequence_order();
    let mut pos = vec![0usize; n]; // rank of each vertex in the degree order
    for (idx, &v) in order.iter().enumerate() {
        pos[v as usize] = idx;
    }

    let mut eng = Engine::new(g, h);
    eng.trace.push(TraceEvent::Ordered {
        v1: order[0],
        max_degree: g.degree(order[0] as usize) as u32,
    });

    // Lemma 1 sets.
    let s1 = match build_s1(g, &order, delta, cfg) {
        Ok(s) => s,
        Err(v) => return eng.violation(&v.stage.clone(), v.reason),
    };
    eng.trace.push(TraceEvent::S1Built { size: s1.len() as u32 });
    let b1: Vec<u32> = s1.iter().take(delta).map(|v| v as u32).collect();

    let (k, d_range) = stage_ranges(g, &order, cfg);
    let i_max = k.max(d_range).max(1);
    let b1_closed = g.closed_neighborhood_of_slice(&b1);
    let s_floor = cfg.s_size_coeff * n as f64;
    let mut s_sets: Vec<VertexSet> = Vec::new();
    for i in 2..=i_max {
        let v_i = order[i - 1] as usize;
        let s_i = build_si_with_closure(g, v_i, &b1_closed, cfg);
        eng.trace.push(TraceEvent::SiBuilt { i: i as u32, size: s_i.len() as u32 });
        if (s_i.len() as f64) < s_floor {
            return eng.violation(
                "Si",
                format!("|S_{i}| = {} below n * s_size_coeff = {s_floor:.2}", s_i.len()),
            );
        }
        s_sets.push(s_i);
    }
    // D_i ⊆ B_i ⊆ S_i: an empty S_i in the checked range fails (b) outright.
    if let Some(i) = (2..=d_range.min(i_max)).find(|&i| s_sets[i - 2].is_empty()) {
        return eng.violation("Lemma2", format!("S_{i} is empty; |D_{i}| cannot reach its bound"));
    }

    // Lemma 2: bounded resampling with derived seeds.
    let mut reservoirs = None;
    for attempt in 0..cfg.max_resamples {
        let seed = derive_seed(cfg.seed, attempt as u64);
        let probe = sample_once(g, &order, &s_sets, cfg, seed, None);
        eng.trace.push(TraceEvent::Sampled {
            attempt: attempt as u32,
            cond_a: probe.cond_a,
            cond_b: probe.cond_b,
            max_c: probe.max_c as u32,
            min_d_checked: probe.min_d_checked.unwrap_or(0) as u32,
        });
        if probe.cond_a && probe.cond_b {
            reservoirs = Some(probe);
            break;
        }
    }
    let reservoirs = match reservoirs {
        Some(r) => r,
        None => {
            return eng.violation(
                "Lemma2",
                format!("no sample satisfied both bounds after {} attempts", cfg.max_resamples),
            )
        }
    };

    // Stage 1: max-degree G-vertex onto a min-degree H-vertex; B_1 onto N_H(w).
    eng.trace.push(TraceEvent::StageStart { stage: 1 });
    let v1 = order[0] as usize;
    let w = (0..n).find(|&w| h.degree(w) == delta).expect("delta is attained");
    eng.bind(1, v1, w);
    let w_neighbors: Vec<usize> = h.neighbors(w).iter().collect();
    debug_assert_eq!(w_neighbors.len(), delta);
    for (&b, &t) in b1.iter().zip(w_neighbors.iter()) {
        eng.bind(1, b as usize, t);
    }
    debug_assert_eq!(eng.matched, delta + 1);

    // Stage 2: high-degree vertices v_2..v_k.
    eng.trace.push(TraceEvent::StageStart { stage: 2 });
    for i in 2..=k {
        let v_i = order[i - 1] as usize;
        if eng.is_matched(v_i) {
            return eng.violation(
                "Stage2-target",
                format!("v_{i} (vertex {v_i}) was already matched before its iteration"),
            );
        }
        let mut x = Vec::new();
        let mut y = Vec::new();
        for &u in g.neighbors_list(v_i) {
            let u = u as usize;
            if eng.is_matched(u) {
                if pos[u] < i - 1 {
                    x.push(u);
                } else {
                    y.push(u);
                }
            }
        }
        let mut constrained = x.clone();
        constrained.extend_from_slice(&y);
        let forbidden = eng.forbidden_targets(&constrained);
        let target = match eng.unmatched_h.first_not_in(Some(&forbidden)) {
            Some(t) => t,
            None => {
                return eng.violation(
                    "Stage2-target",
                    format!("no unmatched H-vertex avoids the {} constrained matches at i = {i}", constrained.len()),
                )
            }
        };
        eng.bind(2, v_i, target);
        let r: Vec<usize> = h
            .neighbors(target)
            .iter()
            .filter(|&q| eng.unmatched_h.contains(q))
            .collect();
        let d_i = &reservoirs.d_sets[i - 2];
        if d_i.len() < r.len() {
            return eng.violation(
                "Stage2-D",
                format!("|D_{i}| = {} below |R| = {} at i = {i}", d_i.len(), r.len()),
            );
        }
        let donors: Vec<usize> = d_i.iter().take(r.len()).collect();
        for (&d, &q) in donors.iter().zip(r.iter()) {
            debug_assert!(!eng.is_matched(d));
            eng.bind(2, d, q);
        }
        eng.trace.push(TraceEvent::Stage2Iteration {
            i: i as u32,
            x_len: x.len() as u32,
            y_len: y.len() as u32,
            r_len: r.len() as u32,
            d_len: d_i.len() as u32,
        });
        // Invariant 3, counted from stage 1's delta+1 pairs:
        // matched <= (delta+1) + (i-1)(Delta(H)+1).
        let inv3 = (delta + 1) + (i - 1) * (max_deg_h + 1);
        eng.trace.push(TraceEvent::Checkpoint {
            i: i as u32,
            matched: eng.matched as u32,
            bound: inv3 as u32,
        });
        debug_assert!(eng.matched <= inv3);
    }

    // Stage 3: match the non-independent remainder K one vertex at a time.
    eng.trace.push(TraceEvent::StageStart { stage: 3 });
    let mut unmatched_g = VertexSet::new(n);
    for v in 0..n {
        if !eng.is_matched(v) {
            unmatched_g.insert(v);
        }
    }
    let j_set = g.greedy_independent_set(&unmatched_g, None);
    let mut k_set = unmatched_g.clone();
    k_set.difference_with(&j_set);
    eng.trace.push(TraceEvent::Stage3Sets {
        j_len: j_set.len() as u32,
        k_len: k_set.len() as u32,
    });
    if j_set.len() * 4 < n {
        return eng.violation(
            "Stage3-J",
            format!("|J| = {} below n/4 = {}", j_set.len(), n as f64 / 4.0),
        );
    }
    for v in k_set.iter().collect::<Vec<_>>() {
        let constrained: Vec<usize> = g
            .neighbors_list(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| eng.is_matched(u))
            .collect();
        let forbidden = eng.forbidden_targets(&constrained);
        let target = match eng.unmatched_h.first_not_in(Some(&forbidden)) {
            Some(t) => t,
            None => {
                return eng.violation(
                    "Stage3-target",
                    format!("no unmatched H-vertex is eligible for K-vertex {v}"),
                )
            }
        };
        eng.bind(3, v, target);
    }

    // Stage 4: perfect matching of the independent remainder J against Q.
    eng.trace.push(TraceEvent::StageStart { stage: 4 });
    let j_list: Vec<usize> = (0..n).filter(|&v| !eng.is_matched(v)).collect();
    debug_assert_eq!(j_list.len(), eng.unmatched_h.len());
    let mut p = BipartiteGraph::new(j_list.len(), n);
    let mut min_left_degree = usize::MAX;
    for (l, &v) in j_list.iter().enumerate() {
        let constrained: Vec<usize> = g
            .neighbors_list(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| eng.is_matched(u))
            .collect();
        let forbidden = eng.forbidden_targets(&constrained);
        let mut allowed = eng.unmatched_h.clone();
        allowed.difference_with(&forbidden);
        min_left_degree = min_left_degree.min(allowed.len());
        p.set_row(l, allowed);
    }
    let matching = maximum_bipartite_matching(&p);
    eng.trace.push(TraceEvent::Stage4Graph {
        size: j_list.len() as u32,
        min_left_degree: if j_list.is_empty() { 0 } else { min_left_degree as u32 },
        matching: matching.len() as u32,
    });
    if matching.len() < j_list.len() {
        return eng.violation(
            "Stage4-Hall",
            format!("maximum matching has size {} < |J| = {}", matching.len(), j_list.len()),
        );
    }
    for (l, q) in matching {
        eng.bind(4, j_list[l], q);
    }
    debug_assert_eq!(eng.matched, n);

    let map = PackingMap::new(eng.forward.clone());
    match super::verify_packing(g, h, &map) {
        Ok(true) => PackingOutcome::Success { map, trace: eng.trace },
        Ok(false) => {
            debug_assert!(false, "engine produced a non-packing bijection");
            eng.violation("verify", "constructed bijection failed the packing check".into())
        }
        Err(e) => {
            debug_assert!(false, "engine produced a non-bijection: {e}");
            eng.violation("verify", format!("constructed map is invalid: {e}"))
        }
    }
}
