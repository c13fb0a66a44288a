//! The four-stage randomized packing procedure.
//!
//! Given G (the missing-edges graph) and a spanning target H on the same
//! vertex count, builds a bijection f with no G-edge mapped onto an H-edge,
//! or reports which guarantee of the procedure failed. A run is deterministic
//! given (G, H, config) including the seed.

mod config;
mod engine;
mod trace;

pub use config::{derive_seed, PackingConfig};
pub use engine::{build_s1, build_si, reservoir_probe, ReservoirProbe};
pub use trace::{StageTrace, TraceEvent};

use serde::Serialize;

use crate::error::{InputError, OracleError};
use crate::graph::Graph;

/// A bijection from V(G) indices to V(H) indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingMap {
    forward: Vec<u32>,
}

impl PackingMap {
    pub fn new(forward: Vec<u32>) -> Self {
        PackingMap { forward }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    #[inline]
    pub fn map(&self, v: usize) -> usize {
        self.forward[v] as usize
    }

    pub fn forward(&self) -> &[u32] {
        &self.forward
    }

    pub fn is_bijection(&self) -> bool {
        let n = self.forward.len();
        let mut seen = vec![false; n];
        for &w in &self.forward {
            let w = w as usize;
            if w >= n || seen[w] {
                return false;
            }
            seen[w] = true;
        }
        true
    }
}

/// A failed guarantee: which stage bound broke and why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub stage: String,
    pub reason: String,
}

impl Violation {
    pub fn new(stage: &str, reason: impl Into<String>) -> Self {
        Violation { stage: stage.into(), reason: reason.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PackingOutcome {
    Success {
        map: PackingMap,
        trace: StageTrace,
    },
    GuaranteeViolation {
        violation: Violation,
        trace: StageTrace,
    },
}

impl PackingOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, PackingOutcome::Success { .. })
    }

    pub fn trace(&self) -> &StageTrace {
        match self {
            PackingOutcome::Success { trace, .. } => trace,
            PackingOutcome::GuaranteeViolation { trace, .. } => trace,
        }
    }

    pub fn violation_stage(&self) -> Option<&str> {
        match self {
            PackingOutcome::Success { .. } => None,
            PackingOutcome::GuaranteeViolation { violation, .. } => Some(&violation.stage),
        }
    }
}

/// Accepts exactly the hypotheses of the packing theorem:
/// equal orders, no isolated vertex in H, max degree of H within
/// sqrt(n)/maxdeg_divisor, and at most n - delta - 1 missing edges.
pub fn check_inputs(g: &Graph, h: &Graph, cfg: &PackingConfig) -> Result<(), InputError> {
    cfg.validate().map_err(InputError::Config)?;
    if g.n() != h.n() {
        return Err(InputError::SizeMismatch { g_n: g.n(), h_n: h.n() });
    }
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| h.degree(v) == 0) {
        return Err(InputError::IsolatedVertexInH(v));
    }
    let bound = (n as f64).sqrt() / cfg.maxdeg_divisor;
    let max_deg = h.max_degree();
    if max_deg as f64 > bound {
        return Err(InputError::MaxDegreeExceeded {
            max_deg,
            divisor: cfg.maxdeg_divisor,
            bound,
        });
    }
    let delta = h.min_degree();
    let edge_bound = n - delta - 1;
    if g.m() > edge_bound {
        return Err(InputError::TooManyMissingEdges { edges: g.m(), bound: edge_bound });
    }
    Ok(())
}

/// True iff no G-edge maps onto an H-edge under `f`.
pub fn verify_packing(g: &Graph, h: &Graph, f: &PackingMap) -> Result<bool, OracleError> {
    if f.len() != g.n() || g.n() != h.n() || !f.is_bijection() {
        return Err(OracleError::NotABijection);
    }
    for (u, v) in g.edges() {
        if h.has_edge(f.map(u), f.map(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the full procedure. Input-hypothesis failures surface as `Err`;
/// in-procedure bound failures surface as `GuaranteeViolation` outcomes.
/// A `Success` is always re-verified before being returned.
pub fn pack(g: &Graph, h: &Graph, cfg: &PackingConfig) -> Result<PackingOutcome, InputError> {
    check_inputs(g, h, cfg)?;
    Ok(engine::run(g, h, cfg))
}
