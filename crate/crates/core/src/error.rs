use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// What went wrong on a single line of a graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseIssue {
    OddLabel(u64),
    LabelTooSmall(u64),
    UnknownVertex(String),
    DuplicateVertex(String),
    DuplicateEdge(String, String),
    SelfLoop(String),
    Syntax(String),
}

impl fmt::Display for ParseIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseIssue::OddLabel(m) => write!(f, "odd label {m} (labels must be even)"),
            ParseIssue::LabelTooSmall(m) => write!(f, "label {m} is smaller than 2"),
            ParseIssue::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            ParseIssue::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            ParseIssue::DuplicateEdge(u, v) => write!(f, "duplicate edge `{u}`-`{v}`"),
            ParseIssue::SelfLoop(v) => write!(f, "self-loop at `{v}`"),
            ParseIssue::Syntax(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {issue}")]
    Parse { line: usize, issue: ParseIssue },
    #[error("vertex set {0:?} is not a clique")]
    NotAClique(Vec<String>),
    #[error("graph is not right-angled (edge `{0}`-`{1}` has label {2})")]
    NotRightAngled(String, String, u64),
    #[error("graph is not triangle-free (triangle {0}, {1}, {2})")]
    NotTriangleFree(String, String, String),
    #[error("vertices `{0}` and `{1}` are not adjacent")]
    NotAdjacent(String, String),
    #[error("{0:?} is not a subset of {1:?}")]
    NotASubset(Vec<String>, Vec<String>),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("no linear recurrence of order <= {bound} fits the {terms} given terms")]
    NoRecurrence { bound: usize, terms: usize },
    #[error("need at least {needed} terms to fit a recurrence, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("rational function is not a power series (denominator vanishes at 0)")]
    NotPowerSeries,
    #[error("rational function has non-integral expansion")]
    NonIntegralSeries,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("`{overlap}` is not a suffix of `{left}` and a prefix of `{right}`")]
    InvalidOverlap { left: String, overlap: String, right: String },
    #[error("element {index} of the sequence (`{word}`) is not a forbidden word")]
    NotForbidden { index: usize, word: String },
    #[error("sequence violates {0}")]
    ConditionViolated(String),
    #[error("chain invariant fails: {0}")]
    ChainInvariant(String),
    #[error("oracle budget of {budget} words exhausted")]
    BudgetExhausted { budget: usize },
    #[error("label {0} is not supported by this method")]
    UnsupportedLabel(u64),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
