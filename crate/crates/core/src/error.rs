use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown diagram `{0}`")]
    UnknownDiagram(String),
    #[error("unknown simple type `{0}`")]
    UnknownType(String),
    #[error("node {node} out of range for {diagram} (rank {rank})")]
    NodeOutOfRange {
        diagram: String,
        node: usize,
        rank: usize,
    },
    #[error("weight has {got} coordinates but {diagram} has rank {rank}")]
    RankMismatch {
        diagram: String,
        rank: usize,
        got: usize,
    },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {weight:?} is not dominant for the parabolic at node {node}")]
    NotParabolicDominant { weight: Vec<i64>, node: usize },
    #[error("dominance chase exceeded {0} reflections")]
    IterationCap(usize),
    #[error("malformed character expression: {0}")]
    MalformedExpr(String),
    #[error("incompatible diagrams `{0}` and `{1}`")]
    IncompatibleDiagrams(String, String),
    #[error("box has {cells} cells, above the cap of {cap}")]
    BoxTooLarge { cells: usize, cap: usize },
    #[error("degree slice is infinite; supply a letter bound")]
    InfiniteSlice,
    #[error("unsupported case m = {0} (expected 1, 2, 4 or 8)")]
    UnsupportedCase(u32),
    #[error("module `{name}` is not defined for m = {m}")]
    ModuleCaseMismatch { name: String, m: u32 },
    #[error("unknown module `{0}`")]
    UnknownModule(String),
    #[error("orbit {0} is not valid here")]
    InvalidOrbit(u32),
    #[error("no regularity data for orbit {p} at m = {m}")]
    NoOrbitData { m: u32, p: u32 },
    #[error("cohomological index {0} outside {{2, 3, 4}}")]
    InvalidIndex(u32),
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("negative primitive Betti number at degree {0}")]
    NegativePrimitive(usize),
    #[error("polynomial is not palindromic of degree {0}")]
    NotPalindromic(usize),
    #[error("unknown quiver vertex `{0}`")]
    UnknownVertex(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}
