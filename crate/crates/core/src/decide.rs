//! Top-level decision procedures: finiteness and equivalence of Word-MIX
//! languages, each returning a machine-checkable certificate.
//!
//! Both procedures stream the traces of `D^N` in canonical order. A
//! language is infinite iff some trace admits positive multiplicities
//! balancing every count (balance) together with a non-zero combination of
//! its cycles that keeps them balanced (pumping). Two languages differ iff
//! some short word separates them or some trace admits multiplicities under
//! which exactly one of the two equality chains holds.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::debruijn::{DeBruijnGraph, OccTable, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::graph::Walk;
use crate::linarith::{
    build_balance_system, build_psi_branches, build_pumping_system, homogeneous_nontrivial,
    ilp_feasible, Feasibility, TraceVectors, DEFAULT_NODE_BUDGET,
};
use crate::traces::{enumerate_traces, OrderedTrace, TraceLimits};
use crate::words::{is_member, ParamList, Word};

/// Resource limits shared by both procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest admissible `|A|^N`.
    pub max_vertices: usize,
    pub traces: TraceLimits,
    /// Projection-step budget per integer feasibility query.
    pub solver_budget: u64,
    /// Check the traces of one enumeration level concurrently.
    pub parallel: bool,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: DEFAULT_VERTEX_CAP,
            traces: TraceLimits::default(),
            solver_budget: DEFAULT_NODE_BUDGET,
            parallel: true,
        }
    }
}

/// Evidence that `M(p)` is infinite: an ordered trace of `D^dim` with
/// balancing multiplicities `x ≥ 1` and pumping multiplicities `y ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessCertificate {
    pub dim: usize,
    pub trace: OrderedTrace,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinitenessVerdict {
    Infinite(FinitenessCertificate),
    /// Every trace was examined; none satisfies both conditions.
    Finite { traces: usize },
    /// A cap or budget was hit before a decision.
    Unknown { cap: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equal { traces: usize },
    /// `witness` belongs to exactly one of the two languages.
    NotEqual { witness: Word, in_first: bool },
    Unknown { cap: String },
}

/// Counters reported next to a verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    /// Dimension of the de Bruijn graph searched.
    pub dim: usize,
    /// Traces up to and including the deciding one, in enumeration order.
    pub traces_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessReport {
    pub verdict: FinitenessVerdict,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub verdict: EquivalenceVerdict,
    pub stats: Stats,
}

enum Check<T> {
    Found(T),
    Rejected,
    Budget(String),
}

/// Runs `check` over one level and returns the first hit in level order,
/// whatever the evaluation order was. Budget failures are remembered.
fn first_hit<T: Send, F>(
    traces: &[(crate::traces::TraceKey, OrderedTrace)],
    parallel: bool,
    budget_note: &Mutex<Option<String>>,
    check: F,
) -> Option<(usize, T)>
where
    F: Fn(&OrderedTrace) -> Check<T> + Sync + Send,
{
    let hit_budget = AtomicBool::new(false);
    let run = |(i, (_, t)): (usize, &(crate::traces::TraceKey, OrderedTrace))| match check(t) {
        Check::Found(v) => Some((i, v)),
        Check::Rejected => None,
        Check::Budget(msg) => {
            if !hit_budget.swap(true, Ordering::Relaxed) {
                budget_note.lock().expect("budget note").get_or_insert(msg);
            }
            None
        }
    };
    if parallel {
        traces.par_iter().enumerate().find_map_first(run)
    } else {
        traces.iter().enumerate().find_map(run)
    }
}

/// From a set of satisfying traces found in any order, the one reported:
/// the least in canonical enumeration order.
pub fn canonical_certificate<T>(found: impl IntoIterator<Item = (usize, T)>) -> Option<(usize, T)> {
    found.into_iter().min_by_key(|(i, _)| *i)
}

fn check_finiteness(
    g: &DeBruijnGraph,
    table: &OccTable,
    p: &ParamList,
    trace: &OrderedTrace,
    budget: u64,
) -> Check<FinitenessCertificate> {
    if trace.cycle_count() == 0 {
        return Check::Rejected;
    }
    let v = TraceVectors::with_table(g, table, trace, p);
    let Some(y) = homogeneous_nontrivial(&build_pumping_system(&v)).witness_u64() else {
        return Check::Rejected;
    };
    let x = match ilp_feasible(&build_balance_system(&v), budget) {
        Ok(Feasibility::Infeasible) => return Check::Rejected,
        Ok(f) => match f.witness_u64() {
            Some(x) => x,
            None => return Check::Budget("balance witness exceeds 64 bits".into()),
        },
        Err(e) => return Check::Budget(e.to_string()),
    };
    Check::Found(FinitenessCertificate { dim: g.dim(), trace: trace.clone(), x, y })
}

/// Decides whether `M(p)` is infinite.
///
/// Traces of `D^N`, `N = max |w_i|`, are checked level by level; the first
/// trace satisfying both the pumping and the balance condition ends the
/// search. The verdict is `Finite` only when enumeration completed without
/// hitting a cap.
pub fn decide_finiteness(p: &ParamList, caps: &Caps) -> Result<FinitenessReport> {
    let g = DeBruijnGraph::build_capped(p.alphabet(), p.max_len(), caps.max_vertices)?;
    let table = OccTable::new(&g, p);
    let mut stats = Stats { dim: g.dim(), traces_checked: 0 };
    let mut traces = match enumerate_traces(&g, caps.traces) {
        Ok(t) => t,
        Err(e @ Error::CapExceeded(_)) => {
            return Ok(FinitenessReport { verdict: FinitenessVerdict::Unknown { cap: e.to_string() }, stats })
        }
        Err(e) => return Err(e),
    };
    let budget_note = Mutex::new(None);
    while let Some(level) = traces.next_level() {
        let level = match level {
            Ok(level) => level,
            Err(e) => {
                let verdict = FinitenessVerdict::Unknown { cap: e.to_string() };
                return Ok(FinitenessReport { verdict, stats });
            }
        };
        let hit = first_hit(&level.traces, caps.parallel, &budget_note, |t| {
            check_finiteness(&g, &table, p, t, caps.solver_budget)
        });
        if let Some((i, cert)) = hit {
            stats.traces_checked += i + 1;
            return Ok(FinitenessReport { verdict: FinitenessVerdict::Infinite(cert), stats });
        }
        stats.traces_checked += level.traces.len();
    }
    let verdict = match budget_note.into_inner().expect("budget note") {
        Some(cap) => FinitenessVerdict::Unknown { cap },
        None => FinitenessVerdict::Finite { traces: stats.traces_checked },
    };
    Ok(FinitenessReport { verdict, stats })
}

impl FinitenessCertificate {
    fn graph(&self, p: &ParamList) -> DeBruijnGraph {
        DeBruijnGraph::build_capped(p.alphabet(), self.dim, usize::MAX).expect("certificate dimension is positive")
    }

    /// Exponents `x_i + (n − 1) · y_i` of the `n`-th family member.
    pub fn exponents(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 {
            return Err(Error::WitnessIndex);
        }
        Ok(self.x.iter().zip(&self.y).map(|(x, y)| x + (n - 1) * y).collect())
    }

    /// Re-checks the certificate from scratch: the trace is a trace, `x`
    /// satisfies the balance system, `y` is a non-zero solution of the
    /// pumping system, and the first two family members are members.
    pub fn verify(&self, p: &ParamList) -> bool {
        let g = self.graph(p);
        let mut parts: Vec<Walk> = vec![self.trace.path.walk().clone()];
        parts.extend(self.trace.cycles.iter().map(|c| c.walk().clone()));
        if crate::traces::is_trace(&g, &parts).is_err() {
            return false;
        }
        let m = self.trace.cycle_count();
        if self.x.len() != m || self.y.len() != m || self.x.contains(&0) || self.y.iter().all(|&y| y == 0) {
            return false;
        }
        let v = TraceVectors::new(&g, &self.trace, p);
        let x: Vec<num_bigint::BigInt> = self.x.iter().map(|&x| x.into()).collect();
        let y: Vec<i64> = self.y.iter().map(|&y| y as i64).collect();
        let pumping = build_pumping_system(&v);
        let pumped = pumping.rows.iter().all(|r| r.iter().zip(&y).map(|(a, b)| a * b).sum::<i64>() == 0);
        pumped
            && build_balance_system(&v).satisfied_by(&x)
            && (1..=2).all(|n| witness_family(self, p, n).is_ok_and(|w| is_member(&w, p)))
    }

    pub fn to_json(&self, p: &ParamList) -> Value {
        let g = self.graph(p);
        let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
        json!({
            "trace": {
                "dim": self.dim,
                "path": labels(self.trace.path.vertices()),
                "cycles": self.trace.cycles.iter().map(|c| labels(c.vertices())).collect::<Vec<_>>(),
            },
            "x": self.x,
            "y": self.y,
        })
    }

    /// One-line rendering: `(ba,ab) + (ba,ab,ba) x=(1) y=(1)`.
    pub fn render(&self, p: &ParamList) -> String {
        let g = self.graph(p);
        let tuple = |vs: &[usize]| format!("({})", vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(","));
        let mut out = tuple(self.trace.path.vertices());
        for c in &self.trace.cycles {
            out.push_str(" + ");
            out.push_str(&tuple(c.vertices()));
        }
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        out.push_str(&format!(" x=({}) y=({})", list(&self.x), list(&self.y)));
        out
    }
}

/// The `n`-th word (`n ≥ 1`) of the pumped family of a certificate: the
/// word read along `comp(π, (γ_1^{x_1 + (n−1)y_1}, ...))`, starting with
/// the label of the path's first vertex. Every member lies in `M(p)` and
/// lengths strictly increase with `n`.
pub fn witness_family(cert: &FinitenessCertificate, p: &ParamList, n: u64) -> Result<Word> {
    let exps = cert.exponents(n)?;
    let walk = cert.trace.compose(&exps)?;
    cert.graph(p).word_of_walk(&walk)
}

/// Word read along `comp(π, (γ_i^{x_i}))` in `g`.
pub fn word_of_trace(g: &DeBruijnGraph, trace: &OrderedTrace, x: &[u64]) -> Result<Word> {
    g.word_of_walk(&trace.compose(x)?)
}

fn short_word_separator(p1: &ParamList, p2: &ParamList, below: usize) -> Option<(Word, bool)> {
    (0..below).flat_map(|len| p1.alphabet().words_of_length(len)).find_map(|w| {
        let a = is_member(&w, p1);
        (a != is_member(&w, p2)).then_some((w, a))
    })
}

fn check_equivalence(
    g: &DeBruijnGraph,
    tables: (&OccTable, &OccTable),
    lists: (&ParamList, &ParamList),
    trace: &OrderedTrace,
    budget: u64,
) -> Check<(Word, bool)> {
    let v1 = TraceVectors::with_table(g, tables.0, trace, lists.0);
    let v2 = TraceVectors::with_table(g, tables.1, trace, lists.1);
    let mut note = None;
    for branch in build_psi_branches(&v1, &v2) {
        match ilp_feasible(&branch, budget) {
            Ok(Feasibility::Infeasible) => {}
            Ok(f) => {
                let Some(x) = f.witness_u64() else {
                    note.get_or_insert_with(|| "separating multiplicities exceed 64 bits".to_string());
                    continue;
                };
                let w = word_of_trace(g, trace, &x).expect("ordered traces compose");
                let in_first = is_member(&w, lists.0);
                assert_ne!(in_first, is_member(&w, lists.1), "separating word failed re-validation");
                return Check::Found((w, in_first));
            }
            Err(e) => {
                note.get_or_insert(e.to_string());
            }
        }
    }
    match note {
        Some(msg) => Check::Budget(msg),
        None => Check::Rejected,
    }
}

/// Decides whether `M(p1) = M(p2)`.
///
/// Words shorter than `N` are compared directly. Longer words are covered
/// trace by trace: for each trace of `D^N` the negated equivalence
/// condition is split into integer-linear branches, and a feasible branch
/// yields a separating word. Unlike [`decide_finiteness`], an `Equal`
/// verdict requires exhausting every trace.
pub fn decide_equivalence(p1: &ParamList, p2: &ParamList, caps: &Caps) -> Result<EquivalenceReport> {
    if p1.alphabet() != p2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let dim = p1.max_len().max(p2.max_len());
    let mut stats = Stats { dim, traces_checked: 0 };
    let unknown = |cap: String, stats| Ok(EquivalenceReport { verdict: EquivalenceVerdict::Unknown { cap }, stats });
    let g = match DeBruijnGraph::build_capped(p1.alphabet(), dim, caps.max_vertices) {
        Ok(g) => g,
        Err(e @ Error::DimensionCap { .. }) => return unknown(e.to_string(), stats),
        Err(e) => return Err(e),
    };
    if let Some((witness, in_first)) = short_word_separator(p1, p2, dim) {
        return Ok(EquivalenceReport { verdict: EquivalenceVerdict::NotEqual { witness, in_first }, stats });
    }
    let tables = (OccTable::new(&g, p1), OccTable::new(&g, p2));
    let mut traces = match enumerate_traces(&g, caps.traces) {
        Ok(t) => t,
        Err(e @ Error::CapExceeded(_)) => return unknown(e.to_string(), stats),
        Err(e) => return Err(e),
    };
    let budget_note = Mutex::new(None);
    while let Some(level) = traces.next_level() {
        let level = match level {
            Ok(level) => level,
            Err(e) => return unknown(e.to_string(), stats),
        };
        let hit = first_hit(&level.traces, caps.parallel, &budget_note, |t| {
            check_equivalence(&g, (&tables.0, &tables.1), (p1, p2), t, caps.solver_budget)
        });
        if let Some((i, (witness, in_first))) = hit {
            stats.traces_checked += i + 1;
            let verdict = EquivalenceVerdict::NotEqual { witness, in_first };
            return Ok(EquivalenceReport { verdict, stats });
        }
        stats.traces_checked += level.traces.len();
    }
    match budget_note.into_inner().expect("budget note") {
        Some(cap) => unknown(cap, stats),
        None => Ok(EquivalenceReport { verdict: EquivalenceVerdict::Equal { traces: stats.traces_checked }, stats }),
    }
}

fn stats_json(stats: &Stats, elapsed_ms: Option<u128>) -> Value {
    let mut s = json!({ "dim": stats.dim, "traces_checked": stats.traces_checked });
    if let Some(ms) = elapsed_ms {
        s["elapsed_ms"] = json!(ms);
    }
    s
}

impl FinitenessReport {
    /// Verdict in the JSON schema shared with the command line.
    /// `elapsed_ms` is included only when given.
    pub fn to_json(&self, p: &ParamList, elapsed_ms: Option<u128>) -> Value {
        let (verdict, certificate) = match &self.verdict {
            FinitenessVerdict::Infinite(c) => ("infinite", c.to_json(p)),
            FinitenessVerdict::Finite { .. } => ("finite", Value::Null),
            FinitenessVerdict::Unknown { cap } => ("unknown", json!({ "cap": cap })),
        };
        json!({ "verdict": verdict, "certificate": certificate, "stats": stats_json(&self.stats, elapsed_ms) })
    }
}

impl EquivalenceReport {
    pub fn to_json(&self, p: &ParamList, elapsed_ms: Option<u128>) -> Value {
        let (verdict, certificate) = match &self.verdict {
            EquivalenceVerdict::Equal { .. } => ("equal", Value::Null),
            EquivalenceVerdict::NotEqual { witness, in_first } => (
                "not_equal",
                json!({
                    "witness_word": p.alphabet().render(witness),
                    "member_of": if *in_first { "first" } else { "second" },
                }),
            ),
            EquivalenceVerdict::Unknown { cap } => ("unknown", json!({ "cap": cap })),
        };
        json!({ "verdict": verdict, "certificate": certificate, "stats": stats_json(&self.stats, elapsed_ms) })
    }
}
