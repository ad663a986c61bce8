use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("symbol `{symbol}` is not in the alphabet {{{alphabet}}}")]
    UnknownSymbol { symbol: String, alphabet: String },
    #[error("parameter list must contain at least one word")]
    EmptyParamList,
    #[error("parameter word {0} is empty")]
    EmptyParamWord(usize),
    #[error("empty pattern: occurrence counting of the empty word is not defined")]
    EmptyPattern,
    #[error("length {n} out of range for a word of length {len}")]
    OutOfRange { n: usize, len: usize },
    #[error("parameter lists are over different alphabets")]
    AlphabetMismatch,
    #[error("de Bruijn graph would have {vertices} vertices, cap is {cap}")]
    DimensionCap { vertices: u128, cap: usize },
    #[error("start word has length {got}, graph dimension is {expected}")]
    BadStartLength { expected: usize, got: usize },
    #[error("not a walk: no edge {from} -> {to}")]
    NotAWalk { from: usize, to: usize },
    #[error("walk must contain at least one vertex")]
    EmptyWalk,
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("not a path: vertex {0} repeats")]
    NotAPath(usize),
    #[error("not a cycle: {0}")]
    NotACycle(&'static str),
    #[error("composition undefined: cycle root {0} cannot be spliced")]
    Undefined(usize),
    #[error("not a trace: {0}")]
    NotATrace(NotATrace),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("inconsistent linear system: {0}")]
    BadSystem(String),
    #[error("witness index must be at least 1")]
    WitnessIndex,
}

/// Why a candidate set is rejected as a trace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotATrace {
    #[error("no path in the set")]
    NoPath,
    #[error("more than one path in the set")]
    TwoPaths,
    #[error("element is neither a path nor a cycle")]
    NotPathOrCycle,
    #[error("cycle rooted at {0} has no occurrence to attach to")]
    Unattachable(usize),
    #[error("no ordering attaches every cycle at exactly one vertex")]
    Overlap,
}

pub type Result<T> = std::result::Result<T, Error>;
