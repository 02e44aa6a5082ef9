use thiserror::Error;

/// Errors shared by all toolkit operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has no root vertex")]
    MissingRoot,

    #[error("graph is not connected")]
    Disconnected,

    #[error("radius {radius} out of range: must be in [{min}, {max}]")]
    RadiusOutOfRange {
        radius: usize,
        min: usize,
        max: usize,
    },

    #[error("radii must be strictly increasing")]
    NonMonotoneRadii,

    #[error("eps must be positive and finite, got {0}")]
    BadEps(f64),

    #[error("k = {k} violates k > 1 + 1/eps = {bound} required for eps = {eps}")]
    KTooSmall { k: usize, eps: f64, bound: f64 },

    #[error("k must be a positive integer")]
    BadK,

    #[error("tree degree {0} unsupported (need 3..=10)")]
    BadDegree(usize),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("vertex name `{0}` is not valid for this family")]
    BadFamilyVertex(String),

    #[error("power computation overflowed while planning subdivision level {0}")]
    PlanOverflow(usize),

    #[error("subdivision scan for level {0} exceeded {1} iterations")]
    PlanScanExceeded(usize, u64),

    #[error(
        "comparison of h_{i}(n) = {lhs} with n^(1+eps) = {rhs} at n = {n} \
         falls within 1e-9 relative distance of equality; rejecting eps = {eps}"
    )]
    BoundaryAmbiguity {
        i: usize,
        n: u64,
        lhs: f64,
        rhs: f64,
        eps: f64,
    },

    #[error("operation requires an explicit element list, but enumeration was truncated")]
    ElementsRequired,

    #[error("permutation moves the center vertex `{0}`")]
    MovesCenter(String),

    #[error("permutation size {got} does not match vertex count {want}")]
    SizeMismatch { got: usize, want: usize },

    #[error("mapping is not a bijection on the vertex set")]
    NotBijection,

    #[error("target #{0} is not an automorphism of the graph")]
    NotAutomorphism(usize),

    #[error("target #{0} is the identity")]
    TrivialTarget(usize),

    #[error("coloring must be total on the vertex set")]
    PartialColoring,

    #[error("vertex `{0}` is frozen and may not be recolored")]
    FrozenVertex(String),

    #[error("free set contains frozen vertex `{0}`")]
    FrozenInFree(String),

    #[error("label {0} out of range for {1} labels")]
    LabelOutOfRange(u32, u32),

    #[error("need d >= 2 labels, got {0}")]
    BadLabelCount(u32),

    #[error("fixroot pattern needs truncation radius >= k + 3 = {needed}, have {have}")]
    FixrootRadius { needed: usize, have: usize },

    #[error("coloring does not contain the frozen fixroot pattern for k = {0}")]
    PatternAbsent(usize),

    #[error("root stabilizer enumeration exceeded cap {0}; graph too symmetric for breaking")]
    StabilizerTooLarge(u64),

    #[error("candidate guard exceeded at d = {d}: {required} labelings > {guard}")]
    GuardExceeded { d: u32, required: u128, guard: u128 },

    #[error("malformed graph JSON: {0}")]
    GraphJson(String),

    #[error("malformed coloring JSON: {0}")]
    ColoringJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
