use thiserror::Error;

/// Rejections of a graph under construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

/// Violations of the hypotheses of the packing theorem, detected up front.
#[derive(Debug, Error, PartialEq)]
pub enum InputError {
    #[error("size mismatch: |V(G)| = {g_n} but |V(H)| = {h_n}")]
    SizeMismatch { g_n: usize, h_n: usize },
    #[error("H has an isolated vertex ({0}); minimum degree must be positive")]
    IsolatedVertexInH(usize),
    #[error("max degree of H is {max_deg}, above the bound sqrt(n)/{divisor} = {bound}")]
    MaxDegreeExceeded {
        max_deg: usize,
        divisor: f64,
        bound: f64,
    },
    #[error("G has {edges} edges, above the bound n - delta - 1 = {bound}")]
    TooManyMissingEdges { edges: usize, bound: usize },
    #[error("invalid config: {0}")]
    Config(String),
}

/// Exact-search requests beyond desk scale.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance with n = {n} exceeds the exact-search limit {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("size mismatch: |V(G)| = {g_n} but |V(H)| = {h_n}")]
    SizeMismatch { g_n: usize, h_n: usize },
    #[error("H must have minimum degree at least 1")]
    EdgelessTarget,
    #[error("mapping is not a bijection")]
    NotABijection,
}

/// Out-of-range parameters for the explicit constructions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("hyperedge {0:?} does not have 3 distinct members")]
    MalformedEdge([usize; 3]),
    #[error("duplicate hyperedge {0:?}")]
    DuplicateEdge([usize; 3]),
    #[error("size mismatch: {0} vs {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("instance with n = {n} exceeds the exact-search limit {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
}

/// Errors from the experiment harness.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExperimentError {
    #[error("unknown generator model spec: {0}")]
    UnknownModelSpec(String),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("model incompatible with n: {0}")]
    BadParameters(String),
    #[error("empty parameter list: {0}")]
    EmptyList(&'static str),
}

/// Parse errors for the text file formats, with 1-based line numbers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}
