//! Command-line front end.
//!
//! Exit codes: 0 when the answer is positive (infinite, equal, member) or
//! the command just reports data, 1 when it is negative (finite, not equal,
//! non-member), 2 when a cap or budget prevented a decision, and 64 on a
//! usage error.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::debruijn::{DeBruijnGraph, DEFAULT_VERTEX_CAP};
use crate::decide::{
    decide_equivalence, decide_finiteness, witness_family, Caps, EquivalenceVerdict, FinitenessVerdict,
};
use crate::error::Error;
use crate::graph::Digraph;
use crate::linarith::{build_balance_system, build_pumping_system, TraceVectors, DEFAULT_NODE_BUDGET};
use crate::oracle::{census, enumerate_members, DEFAULT_ORACLE_BUDGET};
use crate::traces::TraceLimits;
use crate::words::{occ_vector, Alphabet, ParamList};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "wmix",
    version,
    about = "Decide finiteness and equivalence of Word-MIX languages",
    after_help = "Words are comma-separated lists over the alphabet. Single-character alphabets are written \
                  as one string (`ab`); multi-character ones in comma form (`x1,x2`), with symbols of a word \
                  separated by `.`. The empty word is written as `ε` or an empty string.\n\n\
                  `finite` stops at the first trace certifying infiniteness; `equiv` must examine every trace \
                  before answering `equal`."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Alphabet: `ab` or `x1,x2,...`.
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report wall-clock time (adds `elapsed_ms` to JSON output).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Print the linear systems behind a certificate.
    #[arg(long, global = true)]
    pub dump_systems: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    pub max_vertices: usize,
    #[arg(long, global = true, default_value_t = TraceLimits::default().max_traces)]
    pub max_traces: usize,
    #[arg(long, global = true, default_value_t = TraceLimits::default().max_cycles)]
    pub max_cycles: usize,
    /// Projection steps allowed per integer feasibility query.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    pub solver_budget: u64,
    /// Check traces on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether M(list) is infinite.
    Finite { list: String },
    /// Decide whether M(first) = M(second).
    Equiv { first: String, second: String },
    /// Test membership of a word in M(list).
    Member { list: String, word: String },
    /// Print the n-th word (n ≥ 1) of the pumped witness family.
    Witness {
        list: String,
        #[arg(long)]
        n: u64,
    },
    /// List members up to a length by exhaustive scan.
    Enumerate {
        list: String,
        #[arg(long)]
        maxlen: usize,
        /// Print per-length counts as CSV instead.
        #[arg(long)]
        census: bool,
    },
    /// Describe the de Bruijn graph of a dimension.
    Graph {
        #[arg(long)]
        dim: usize,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
        /// Show the walk read by this word instead.
        #[arg(long)]
        word: Option<String>,
    },
}

impl GlobalArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_vertices: self.max_vertices,
            traces: TraceLimits { max_cycles: self.max_cycles, max_traces: self.max_traces },
            solver_budget: self.solver_budget,
            parallel: !self.sequential,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimensionCap { .. } | Error::CapExceeded(_) | Error::BudgetExceeded(_) => EXIT_UNKNOWN,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_UNKNOWN, message: format!("output error: {e}") }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "wmix: {}", f.message);
            f.code
        }
    }
}

fn alphabet(g: &GlobalArgs) -> std::result::Result<Alphabet, Failure> {
    let spec = g.alphabet.as_deref().ok_or_else(|| Failure {
        code: EXIT_USAGE,
        message: "--alphabet is required".into(),
    })?;
    Ok(Alphabet::parse(spec)?)
}

fn emit(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("JSON values serialize"))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let g = &cli.global;
    let a = alphabet(g)?;
    let started = Instant::now();
    let elapsed = || g.timing.then(|| started.elapsed().as_millis());
    match &cli.command {
        Command::Finite { list } => finite(g, &ParamList::parse(&a, list)?, out, elapsed),
        Command::Equiv { first, second } => {
            let (p1, p2) = (ParamList::parse(&a, first)?, ParamList::parse(&a, second)?);
            let report = decide_equivalence(&p1, &p2, &g.caps())?;
            if g.json {
                emit(out, &report.to_json(&p1, elapsed()))?;
            }
            let code = match &report.verdict {
                EquivalenceVerdict::Equal { traces } => {
                    if !g.json {
                        writeln!(out, "equal (N={}, all {traces} traces exhausted)", report.stats.dim)?;
                    }
                    EXIT_YES
                }
                EquivalenceVerdict::NotEqual { witness, in_first } => {
                    assert_ne!(
                        crate::is_member(witness, &p1),
                        crate::is_member(witness, &p2),
                        "distinguishing word failed re-validation"
                    );
                    if !g.json {
                        let (yes, no) = if *in_first { ("first", "second") } else { ("second", "first") };
                        writeln!(out, "not equal: {} is in the {yes} language, not the {no}", a.render(witness))?;
                        writeln!(out, "counts first: {}", occ_vector(witness, &p1))?;
                        writeln!(out, "counts second: {}", occ_vector(witness, &p2))?;
                    }
                    EXIT_NO
                }
                EquivalenceVerdict::Unknown { cap } => {
                    if !g.json {
                        writeln!(out, "unknown: {cap}")?;
                    }
                    EXIT_UNKNOWN
                }
            };
            report_time(g, out, elapsed())?;
            Ok(code)
        }
        Command::Member { list, word } => {
            let p = ParamList::parse(&a, list)?;
            let w = a.word(word)?;
            let counts = occ_vector(&w, &p);
            let member = crate::is_member(&w, &p);
            if g.json {
                emit(out, &json!({ "member": member, "counts": counts.0 }))?;
            } else {
                let verdict = if member { "member" } else { "not a member" };
                writeln!(out, "{verdict}: counts {counts}")?;
            }
            Ok(if member { EXIT_YES } else { EXIT_NO })
        }
        Command::Witness { list, n } => {
            let p = ParamList::parse(&a, list)?;
            if *n == 0 {
                return Err(Error::WitnessIndex.into());
            }
            let report = decide_finiteness(&p, &g.caps())?;
            match report.verdict {
                FinitenessVerdict::Infinite(cert) => {
                    assert!(cert.verify(&p), "certificate failed re-validation");
                    let w = witness_family(&cert, &p, *n)?;
                    assert!(crate::is_member(&w, &p), "witness failed re-validation");
                    if g.json {
                        emit(out, &json!({ "n": n, "word": a.render(&w), "length": w.len() }))?;
                    } else {
                        writeln!(out, "{}", a.render(&w))?;
                    }
                    Ok(EXIT_YES)
                }
                FinitenessVerdict::Finite { .. } => {
                    writeln!(out, "finite: no witness family")?;
                    Ok(EXIT_NO)
                }
                FinitenessVerdict::Unknown { cap } => {
                    writeln!(out, "unknown: {cap}")?;
                    Ok(EXIT_UNKNOWN)
                }
            }
        }
        Command::Enumerate { list, maxlen, census: as_census } => {
            let p = ParamList::parse(&a, list)?;
            if *as_census {
                let c = census(&p, *maxlen, DEFAULT_ORACLE_BUDGET)?;
                if g.json {
                    emit(out, &json!({ "counts": c.counts }))?;
                } else {
                    write!(out, "{}", c.to_csv())?;
                }
            } else {
                let members = enumerate_members(&p, *maxlen, DEFAULT_ORACLE_BUDGET)?;
                let rendered: Vec<String> = members.iter().map(|w| a.render(w)).collect();
                if g.json {
                    emit(out, &json!({ "members": rendered }))?;
                } else {
                    for w in rendered {
                        writeln!(out, "{w}")?;
                    }
                }
            }
            Ok(EXIT_YES)
        }
        Command::Graph { dim, dot, word } => {
            let d = DeBruijnGraph::build_capped(&a, *dim, g.max_vertices)?;
            if let Some(text) = word {
                let w = a.word(text)?;
                if w.len() < *dim {
                    return Err(Error::BadStartLength { expected: *dim, got: w.len() }.into());
                }
                let (start, rest) = w.as_slice().split_at(*dim);
                let walk = d.walk_of_word(&start.to_vec().into(), &rest.to_vec().into())?;
                let labels: Vec<String> = walk.vertices().iter().map(|&v| d.label(v)).collect();
                if g.json {
                    emit(out, &json!({ "walk": labels }))?;
                } else {
                    writeln!(out, "{}", labels.join(" -> "))?;
                }
            } else if *dot {
                write!(out, "{}", d.to_dot())?;
            } else {
                let n = d.vertex_count();
                if g.json {
                    let edges: Vec<[String; 2]> = (0..n)
                        .flat_map(|v| d.successors(v).into_iter().map(move |u| (v, u)))
                        .map(|(v, u)| [d.label(v), d.label(u)])
                        .collect();
                    let vertices: Vec<String> = (0..n).map(|v| d.label(v)).collect();
                    emit(out, &json!({ "dim": dim, "vertices": vertices, "edges": edges }))?;
                } else {
                    writeln!(out, "D^{dim} over {a}: {n} vertices, {} edges", d.edge_count())?;
                    for v in 0..n {
                        let succ: Vec<String> = d.successors(v).into_iter().map(|u| d.label(u)).collect();
                        writeln!(out, "{} -> {}", d.label(v), succ.join(" "))?;
                    }
                }
            }
            Ok(EXIT_YES)
        }
    }
}

fn report_time(g: &GlobalArgs, out: &mut dyn Write, elapsed: Option<u128>) -> std::io::Result<()> {
    match elapsed {
        Some(ms) if !g.json => writeln!(out, "elapsed: {ms} ms"),
        _ => Ok(()),
    }
}

fn finite(g: &GlobalArgs, p: &ParamList, out: &mut dyn Write, elapsed: impl Fn() -> Option<u128>) -> Outcome {
    let report = decide_finiteness(p, &g.caps())?;
    let a = p.alphabet();
    let code = match &report.verdict {
        FinitenessVerdict::Infinite(cert) => {
            assert!(cert.verify(p), "certificate failed re-validation");
            let graph = DeBruijnGraph::build_capped(a, cert.dim, usize::MAX)?;
            let vectors = TraceVectors::new(&graph, &cert.trace, p);
            if g.json {
                let mut v = report.to_json(p, elapsed());
                if g.dump_systems {
                    v["systems"] = json!({
                        "balance": build_balance_system(&vectors),
                        "pumping": build_pumping_system(&vectors),
                    });
                }
                emit(out, &v)?;
            } else {
                writeln!(out, "infinite (N={}, {} traces checked)", report.stats.dim, report.stats.traces_checked)?;
                writeln!(out, "certificate: {}", cert.render(p))?;
                let family: Vec<String> =
                    (1..=3).map(|n| witness_family(cert, p, n).map(|w| a.render(&w))).collect::<Result<_, _>>()?;
                writeln!(out, "witnesses: {}, ...", family.join(", "))?;
                if g.dump_systems {
                    writeln!(out, "balance system:\n{}", build_balance_system(&vectors))?;
                    let pumping = build_pumping_system(&vectors);
                    writeln!(out, "pumping matrix ({} columns):", pumping.cols)?;
                    for row in &pumping.rows {
                        writeln!(out, "  {row:?}")?;
                    }
                }
            }
            EXIT_YES
        }
        FinitenessVerdict::Finite { traces } => {
            if g.json {
                emit(out, &report.to_json(p, elapsed()))?;
            } else {
                writeln!(out, "finite (N={}, all traces exhausted)", report.stats.dim)?;
                writeln!(out, "traces checked: {traces}")?;
            }
            EXIT_NO
        }
        FinitenessVerdict::Unknown { cap } => {
            if g.json {
                emit(out, &report.to_json(p, elapsed()))?;
            } else {
                writeln!(out, "unknown (N={}): {cap}", report.stats.dim)?;
            }
            EXIT_UNKNOWN
        }
    };
    report_time(g, out, elapsed())?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("wmix").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn finite_and_infinite() {
        let (code, out, _) = call(&["finite", "--alphabet", "ab", "ab,ba,a"]);
        assert_eq!(code, EXIT_YES);
        assert!(out.contains("(ba,ab) + (ba,ab,ba) x=(1) y=(1)"), "{out}");
        let (code, out, _) = call(&["finite", "--alphabet", "ab", "ab,ba,a,b"]);
        assert_eq!(code, EXIT_NO);
        assert!(out.starts_with("finite (N=2, all traces exhausted)"), "{out}");
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["finite", "ab,ba,a"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
        let (code, _, err) = call(&["member", "--alphabet", "ab", "ab,c", "a"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("`c`"));
    }

    #[test]
    fn member_and_equiv() {
        assert_eq!(call(&["member", "--alphabet", "ab", "ab,ba,a", "babab"]).0, EXIT_YES);
        assert_eq!(call(&["member", "--alphabet", "ab", "ab,ba,a", "bab"]).0, EXIT_YES);
        assert_eq!(call(&["member", "--alphabet", "ab", "ab,ba,a", "aa"]).0, EXIT_NO);
        let (code, out, _) = call(&["equiv", "--alphabet", "ab", "ab,ba,a", "--", "ab,ba,a,b"]);
        assert_eq!(code, EXIT_NO);
        assert!(out.starts_with("not equal"));
        assert_eq!(call(&["equiv", "--alphabet", "ab", "a,b", "b,a"]).0, EXIT_YES);
    }

    #[test]
    fn json_is_deterministic() {
        let args = ["finite", "--alphabet", "01", "00,11,000,111", "--json"];
        let (_, first, _) = call(&args);
        let (_, second, _) = call(&[&args[..], &["--sequential"]].concat());
        assert_eq!(first, second);
        let v: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["verdict"], "infinite");
        assert!(v["stats"].get("elapsed_ms").is_none());
    }

    #[test]
    fn graph_and_enumerate() {
        let (_, dot, _) = call(&["graph", "--alphabet", "ab", "--dim", "2", "--dot"]);
        assert!(dot.starts_with("digraph"));
        let (_, walk, _) = call(&["graph", "--alphabet", "ab", "--dim", "2", "--word", "babab"]);
        assert_eq!(walk.trim(), "ba -> ab -> ba -> ab");
        let (_, csv, _) = call(&["enumerate", "--alphabet", "ab", "ab,ba,a,b", "--maxlen", "4", "--census"]);
        assert_eq!(csv, "length,count\n0,1\n1,0\n2,0\n3,0\n4,0\n");
        let (_, members, _) = call(&["witness", "--alphabet", "ab", "ab,ba,a", "--n", "3"]);
        assert_eq!(members.trim(), "babababab");
    }
}
