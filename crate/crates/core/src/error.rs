use thiserror::Error;

/// Errors surfaced by pattern construction, validity checks, and diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid pattern spec: {0}")]
    InvalidSpec(String),
    #[error("malformed pattern: {0}")]
    MalformedPattern(String),
    #[error("interior vertex {vertex} has odd degree {degree}")]
    OddVertexDegree { vertex: usize, degree: usize },
    #[error("Kawasaki's condition fails at the vertex star (alternating angle sum {sum:.3e} rad)")]
    KawasakiViolated { sum: f64 },
    #[error("assignment covers {got} creases, pattern has {want}")]
    AssignmentLength { got: usize, want: usize },
    #[error("assignment is not locally flat-foldable")]
    NotLocallyFlatFoldable,
    #[error("vertex degree {degree} exceeds the search bound {bound}")]
    DegreeOverLimit { degree: usize, bound: usize },
    #[error("state space too large: {creases} creases exceeds the bound {bound}")]
    StateSpaceOverflow { creases: usize, bound: usize },
    #[error("instance too large: {faces} faces exceeds the bound {bound}")]
    SizeOverLimit { faces: usize, bound: usize },
    #[error("face-adjacency graph is not bipartite (odd cycle through face {face})")]
    NotBipartite { face: usize },
    #[error("operation requires a {expected} pattern, got {got}")]
    WrongFamily { expected: &'static str, got: String },
    #[error("distributions are defined over different state universes")]
    MismatchedUniverse,
    #[error("coloring is not a proper anchored 3-coloring: {0}")]
    ImproperColoring(String),
    #[error("the face-flip chain on this pattern is reducible")]
    ReducibleChain,
    #[error("chain did not reach the target total-variation bound within {0} steps")]
    MixingCapExceeded(usize),
    #[error("conditioning event has probability zero (n={n}, j={j}, r={r})")]
    ImpossiblePrefix { n: usize, j: usize, r: i64 },
    #[error("no locally flat-foldable completion exists for the requested extension")]
    NoCompletion,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
