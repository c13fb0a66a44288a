//! Per-run audit log of the packing engine.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    StageStart {
        stage: u8,
    },
    Ordered {
        v1: u32,
        max_degree: u32,
    },
    S1Built {
        size: u32,
    },
    SiBuilt {
        i: u32,
        size: u32,
    },
    /// One reservoir sampling attempt with the Lemma 2 checks.
    Sampled {
        attempt: u32,
        cond_a: bool,
        cond_b: bool,
        max_c: u32,
        min_d_checked: u32,
    },
    Matched {
        stage: u8,
        g_vertex: u32,
        h_vertex: u32,
    },
    Stage2Iteration {
        i: u32,
        x_len: u32,
        y_len: u32,
        r_len: u32,
        d_len: u32,
    },
    /// Stage-2 invariant 3: matched <= bound after iteration i.
    Checkpoint {
        i: u32,
        matched: u32,
        bound: u32,
    },
    Stage3Sets {
        j_len: u32,
        k_len: u32,
    },
    Stage4Graph {
        size: u32,
        min_left_degree: u32,
        matching: u32,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct StageTrace {
    pub events: Vec<TraceEvent>,
}

impl StageTrace {
    pub fn new() -> Self {
        StageTrace::default()
    }

    pub fn push(&mut self, e: TraceEvent) {
        self.events.push(e);
    }

    pub fn matched_pairs(&self) -> Vec<(u32, u32)> {
        self.events
            .iter()
            .filter_map(|e| match e {
                TraceEvent::Matched { g_vertex, h_vertex, .. } => Some((*g_vertex, *h_vertex)),
                _ => None,
            })
            .collect()
    }

    pub fn resample_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, TraceEvent::Sampled { .. }))
            .count()
            .saturating_sub(1)
    }

    /// Every matched G-vertex (and H-vertex) appears exactly once.
    pub fn matched_once(&self) -> bool {
        let pairs = self.matched_pairs();
        let mut g: Vec<u32> = pairs.iter().map(|p| p.0).collect();
        let mut h: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        g.sort_unstable();
        h.sort_unstable();
        g.windows(2).all(|w| w[0] != w[1]) && h.windows(2).all(|w| w[0] != w[1])
    }

    /// All stage-2 checkpoints satisfy their recorded bound.
    pub fn checkpoints_hold(&self) -> bool {
        self.events.iter().all(|e| match e {
            TraceEvent::Checkpoint { matched, bound, .. } => matched <= bound,
            _ => true,
        })
    }
}
