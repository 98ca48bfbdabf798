use thiserror::Error;

/// Errors surfaced by the exact kernel and the verification layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("undefined root set: zero polynomial")]
    ZeroPolynomial,

    #[error("ambiguous refinement: interval does not isolate a simple root")]
    AmbiguousRefinement,

    #[error("modulus {0} is not prime")]
    NonPrimeModulus(String),

    #[error("precision cap of {cap} bits exhausted while {context}")]
    PrecisionExhausted { cap: u32, context: String },

    #[error("embedding ambiguity: primitive-element candidates not separated")]
    EmbeddingAmbiguity,

    #[error("degenerate root: power sum has a zero characteristic root")]
    DegenerateRoot,

    #[error("not in normalized form: {0}")]
    NotNormalized(String),

    #[error("progression residue {r} out of range [0, {s})")]
    ResidueOutOfRange { r: i64, s: i64 },

    #[error("multiple branches collide: polynomial is not squarefree in y")]
    NotSquarefree,

    #[error("k_max {k_max} below starting index {v}")]
    KMaxBelowStart { k_max: i64, v: i64 },

    #[error("branch inconsistent: residual order failed to drop")]
    BranchInconsistent,

    #[error("Theorem 2 hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("no decaying variables: dominant root is 1")]
    NoDecayingVariables,

    #[error("multiple zero; implicit solve impossible")]
    MultipleZero,

    #[error("insufficient series depth K_needed={needed}, have {have}")]
    InsufficientSeriesDepth { needed: usize, have: usize },

    #[error("real branch undefined on progression: leading value {0} has no real root of requested parity")]
    RealBranchUndefined(String),

    #[error("t must lie in (0,1), got {0}")]
    InvalidT(String),

    #[error("epsilon violates theorem precondition: {0}")]
    EpsilonOutOfRange(String),

    #[error("t too large or construction inconsistent: error ratio increasing at top of range")]
    RatioIncreasing,

    #[error("branch not separable at n={n}")]
    BranchNotSeparable { n: i64 },

    #[error("S too small: {0} is not an S-unit")]
    STooSmall(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
