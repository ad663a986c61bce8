//! Decision procedures for Word-MIX languages.
//!
//! `M(w_1, ..., w_k)` is the set of words in which every parameter word
//! `w_i` occurs equally often as a (possibly overlapping) subword. This
//! crate decides whether such a language is infinite, returning a pumpable
//! witness family when it is, and whether two such languages are equal,
//! returning a distinguishing word when they are not.
//!
//! The procedures work on the de Bruijn graph `D^N` (`N` the longest
//! parameter word), where words correspond to walks. Walks are summarized
//! by their trace (the path and the set of cycles left by a left-to-right
//! decomposition), and the questions about a trace compile to small
//! integer-linear feasibility problems solved exactly.
//!
//! ```
//! use wmix::{decide_finiteness, witness_family, Alphabet, Caps, FinitenessVerdict, ParamList};
//!
//! let ab = Alphabet::parse("ab").unwrap();
//! let p = ParamList::parse(&ab, "ab,ba,a").unwrap();
//! let report = decide_finiteness(&p, &Caps::default()).unwrap();
//! let FinitenessVerdict::Infinite(cert) = report.verdict else { unreachable!() };
//! let first = witness_family(&cert, &p, 1).unwrap();
//! assert_eq!(ab.render(&first), "babab");
//! ```

pub mod cli;
pub mod debruijn;
pub mod decide;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod linarith;
pub mod oracle;
pub mod traces;
pub mod words;

pub use debruijn::{DeBruijnGraph, OccTable};
pub use decide::{
    decide_equivalence, decide_finiteness, witness_family, Caps, EquivalenceVerdict,
    FinitenessCertificate, FinitenessVerdict,
};
pub use decomp::{comp, dec, Cycle, Decomposition, Path};
pub use error::{Error, NotATrace, Result};
pub use graph::{DenseGraph, Digraph, Vertex, Walk};
pub use traces::{enumerate_traces, is_trace, mtrace, trace, MultiTrace, OrderedTrace, Trace, TraceLimits};
pub use words::{diff, is_member, occ_vector, Alphabet, OccVector, ParamList, Word};
