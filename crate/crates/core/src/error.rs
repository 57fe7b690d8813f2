use thiserror::Error;

/// Errors raised by the ideal-monoid engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("bad vertex index {0}")]
    BadVertexIndex(usize),
    #[error("({0},{1}) is not a path of the quiver")]
    InvalidPathPair(usize, usize),
    #[error("operands belong to different quivers")]
    QuiverMismatch,
    #[error("vertex {0} is not a split vertex (not a sink or source of degree >= 2)")]
    NotSplitVertex(usize),
    #[error("component index {index} out of range 1..={count}")]
    BadComponentIndex { index: usize, count: usize },
    #[error("enumeration budget of {0} exceeded")]
    EnumerationBudgetExceeded(usize),
    #[error("quiver is not admissible; offending vertices {0:?}")]
    NotAdmissible(Vec<usize>),
    #[error("bad function value: {0}")]
    BadValue(String),
    #[error("subbimodule is not indecomposable ({0} summands)")]
    NotIndecomposable(usize),
    #[error("no unique generator for the column at vertex {0}")]
    NoUniqueGenerator(usize),
    #[error("function {0:?} is not special")]
    NotSpecial(Vec<usize>),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quiver is not an orientation of a linearly labelled type A diagram")]
    NotTypeA,
    #[error("pair ({i},{j}) with k={k} matches no counting case")]
    CaseNotCovered { i: usize, j: usize, k: usize },
    #[error("budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("subgraph is not the support of any special function")]
    NotSpecialSubtree,
    #[error("generator mismatch: {0}")]
    GeneratorMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
