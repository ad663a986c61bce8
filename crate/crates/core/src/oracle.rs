//! Exhaustive ground-truth engines: member enumeration by direct counting,
//! traces of all short walks, and per-length census.
//!
//! These deliberately avoid the optimized code paths (no occurrence tables,
//! no de Bruijn arithmetic, no shared decomposition routine) so that they
//! can falsify the main implementation rather than echo it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::decomp::{Cycle, Path};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex};
use crate::traces::Trace;
use crate::words::{ParamList, Symbol, Word};

/// Default bound on the number of words or walks an oracle will visit.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

fn naive_count(w: &[Symbol], v: &[Symbol]) -> usize {
    if v.len() > w.len() {
        return 0;
    }
    (0..=w.len() - v.len()).filter(|&i| &w[i..i + v.len()] == v).count()
}

fn naive_member(w: &[Symbol], p: &ParamList) -> bool {
    let mut counts = p.words().iter().map(|v| naive_count(w, v.as_slice()));
    let first = counts.next().unwrap_or(0);
    counts.all(|c| c == first)
}

fn word_budget(q: usize, maxlen: usize, budget: u128) -> Result<()> {
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=maxlen {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(q as u128);
    }
    if total > budget {
        return Err(Error::BudgetExceeded(format!("{total} words up to length {maxlen}, budget {budget}")));
    }
    Ok(())
}

fn words_of(q: usize, len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    let total = (q as u128).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut syms = vec![0; len];
        for slot in syms.iter_mut().rev() {
            *slot = (code % q as u128) as Symbol;
            code /= q as u128;
        }
        syms
    })
}

/// Members of `M(p)` of length at most `maxlen`, in length-lexicographic
/// order, found by scanning every word.
pub fn enumerate_members(p: &ParamList, maxlen: usize, budget: u128) -> Result<Vec<Word>> {
    let q = p.alphabet().len();
    word_budget(q, maxlen, budget)?;
    let strata: Vec<Vec<Word>> = (0..=maxlen)
        .into_par_iter()
        .map(|len| words_of(q, len).filter(|w| naive_member(w, p)).map(Word::new).collect())
        .collect();
    Ok(strata.into_iter().flatten().collect())
}

/// `counts[ℓ] = |M(p) ∩ A^ℓ|` for `ℓ = 0..=maxlen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub counts: Vec<u64>,
}

impl Census {
    /// `length,count` rows under a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (len, c) in self.counts.iter().enumerate() {
            let _ = writeln!(out, "{len},{c}");
        }
        out
    }
}

pub fn census(p: &ParamList, maxlen: usize, budget: u128) -> Result<Census> {
    let q = p.alphabet().len();
    word_budget(q, maxlen, budget)?;
    let counts = (0..=maxlen)
        .into_par_iter()
        .map(|len| words_of(q, len).filter(|w| naive_member(w, p)).count() as u64)
        .collect();
    Ok(Census { counts })
}

/// Path and cycle support of a walk, recomputed from the definition.
fn naive_trace(walk: &[Vertex]) -> Trace {
    let mut path: Vec<Vertex> = vec![walk[0]];
    let mut cycles = BTreeSet::new();
    for &v in &walk[1..] {
        match path.iter().position(|&u| u == v) {
            Some(j) => {
                let mut c = path.split_off(j);
                c.push(v);
                path.push(v);
                cycles.insert(Cycle::from_vec_unchecked(c));
            }
            None => path.push(v),
        }
    }
    Trace { path: Path::from_vec_unchecked(path), cycles }
}

/// `{trace(ω) : ω a walk starting in `starts` with at most `maxlen` edges}`,
/// by visiting every such walk.
pub fn enumerate_walk_traces<G: Digraph + ?Sized>(
    g: &G,
    starts: &[Vertex],
    maxlen: usize,
    budget: u128,
) -> Result<BTreeSet<Trace>> {
    fn visit<G: Digraph + ?Sized>(
        g: &G,
        walk: &mut Vec<Vertex>,
        left: usize,
        out: &mut BTreeSet<Trace>,
        visited: &mut u128,
        budget: u128,
    ) -> Result<()> {
        *visited += 1;
        if *visited > budget {
            return Err(Error::BudgetExceeded(format!("more than {budget} walks")));
        }
        out.insert(naive_trace(walk));
        if left == 0 {
            return Ok(());
        }
        let last = *walk.last().expect("non-empty walk");
        for next in (0..g.vertex_count()).filter(|&u| g.has_edge(last, u)) {
            walk.push(next);
            visit(g, walk, left - 1, out, visited, budget)?;
            walk.pop();
        }
        Ok(())
    }

    let mut out = BTreeSet::new();
    let mut visited = 0;
    for &s in starts {
        if s >= g.vertex_count() {
            return Err(Error::BadVertex(s));
        }
        visit(g, &mut vec![s], maxlen, &mut out, &mut visited, budget)?;
    }
    Ok(out)
}
