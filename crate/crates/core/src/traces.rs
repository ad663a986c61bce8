//! Multi-traces and traces of walks, the trace-validity test, and
//! enumeration of all traces of a finite graph.
//!
//! A trace is one path plus a set of rooted cycles. It is valid when the
//! cycles can be ordered `γ_1, ..., γ_m` so that splicing `γ_m` into the
//! path, then `γ_{m-1}` into the result, and so on, attaches every cycle
//! at a single vertex: the prefix up to its splice point meets the cycle
//! only in the root. Every ordering found is re-checked by decomposing the
//! composed walk, so an accepted trace always comes with a realizing walk.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::decomp::{self, Cycle, Path};
use crate::error::{Error, NotATrace, Result};
use crate::graph::{Digraph, Vertex, Walk};

/// Path ↦ 1 and every cycle ↦ its number of occurrences in `dec(ω)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiTrace {
    pub path: Path,
    pub cycles: BTreeMap<Cycle, usize>,
}

impl MultiTrace {
    pub fn support(&self) -> Trace {
        Trace { path: self.path.clone(), cycles: self.cycles.keys().cloned().collect() }
    }
}

/// The support of a multi-trace: one path and a set of cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trace {
    pub path: Path,
    pub cycles: BTreeSet<Cycle>,
}

/// A trace together with a cycle order witnessing its validity:
/// `comp(path, cycles)` is defined and decomposes back to this trace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedTrace {
    pub path: Path,
    pub cycles: Vec<Cycle>,
}

impl OrderedTrace {
    pub fn to_trace(&self) -> Trace {
        Trace { path: self.path.clone(), cycles: self.cycles.iter().cloned().collect() }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// `comp(π, (γ_1^{x_1}, ..., γ_m^{x_m}))`.
    pub fn compose(&self, multiplicities: &[u64]) -> Result<Walk> {
        assert_eq!(multiplicities.len(), self.cycles.len(), "one multiplicity per cycle");
        let mut seq = Vec::new();
        for (cycle, &x) in self.cycles.iter().zip(multiplicities) {
            seq.extend(std::iter::repeat_n(cycle.clone(), x as usize));
        }
        decomp::comp_unchecked(self.path.walk(), &seq)
    }

    /// The walk composed with every cycle once.
    pub fn walk(&self) -> Walk {
        self.compose(&vec![1; self.cycles.len()]).expect("ordered traces compose")
    }
}

pub fn mtrace<G: Digraph + ?Sized>(g: &G, walk: &Walk) -> Result<MultiTrace> {
    let d = decomp::dec(g, walk)?;
    Ok(multi_trace_of(d))
}

fn multi_trace_of(d: decomp::Decomposition) -> MultiTrace {
    let mut cycles = BTreeMap::new();
    for c in d.cycles {
        *cycles.entry(c).or_insert(0) += 1;
    }
    MultiTrace { path: d.path, cycles }
}

pub fn trace<G: Digraph + ?Sized>(g: &G, walk: &Walk) -> Result<Trace> {
    Ok(mtrace(g, walk)?.support())
}

pub(crate) fn trace_unchecked(walk: &Walk) -> Trace {
    multi_trace_of(decomp::dec_unchecked(walk)).support()
}

/// Splices `cycle` into `walk` if it attaches at exactly one vertex.
fn attach(walk: &[Vertex], cycle: &Cycle) -> Option<Vec<Vertex>> {
    let at = decomp::splice_point(walk, cycle.root()).ok()?;
    let cycle_vs = cycle.vertex_set();
    if walk[..at].iter().any(|v| cycle_vs.contains(v)) {
        return None;
    }
    let mut out = Vec::with_capacity(walk.len() + cycle.len());
    out.extend_from_slice(&walk[..at]);
    out.extend_from_slice(cycle.vertices());
    out.extend_from_slice(&walk[at + 1..]);
    Some(out)
}

fn realizes(walk: &[Vertex], path: &Path, cycles: &[&Cycle]) -> bool {
    let t = trace_unchecked(&Walk::from_vec_unchecked(walk.to_vec()));
    t.path == *path && t.cycles.len() == cycles.len() && cycles.iter().all(|c| t.cycles.contains(*c))
}

/// Backtracking search for an attachment order. Returns cycle indices in
/// splice order (the first entry is spliced into the bare path).
fn order_search(path: &Path, cycles: &[&Cycle]) -> Option<Vec<usize>> {
    struct Search<'a> {
        path: &'a Path,
        cycles: &'a [&'a Cycle],
        failed: HashSet<(Vec<bool>, Vec<Vertex>)>,
    }

    impl Search<'_> {
        fn go(&mut self, walk: &[Vertex], used: &mut Vec<bool>, order: &mut Vec<usize>) -> bool {
            if order.len() == self.cycles.len() {
                return realizes(walk, self.path, self.cycles);
            }
            let key = (used.clone(), walk.to_vec());
            if self.failed.contains(&key) {
                return false;
            }
            for i in 0..self.cycles.len() {
                if used[i] {
                    continue;
                }
                if let Some(next) = attach(walk, self.cycles[i]) {
                    used[i] = true;
                    order.push(i);
                    if self.go(&next, used, order) {
                        return true;
                    }
                    order.pop();
                    used[i] = false;
                }
            }
            self.failed.insert(key);
            false
        }
    }

    let mut search = Search { path, cycles, failed: HashSet::new() };
    let mut used = vec![false; cycles.len()];
    let mut order = Vec::with_capacity(cycles.len());
    search.go(path.vertices(), &mut used, &mut order).then_some(order)
}

/// Decides whether `candidates` (paths and cycles of `g`) form the trace of
/// some walk, returning a witnessing order.
pub fn is_trace<G: Digraph + ?Sized>(g: &G, candidates: &[Walk]) -> Result<OrderedTrace> {
    let mut path: Option<Path> = None;
    let mut cycles: BTreeSet<Cycle> = BTreeSet::new();
    for walk in candidates {
        crate::graph::check_walk(g, walk.vertices())?;
        if let Ok(p) = Path::from_walk(walk.clone()) {
            match &path {
                Some(existing) if *existing != p => return Err(Error::NotATrace(NotATrace::TwoPaths)),
                _ => path = Some(p),
            }
        } else if let Ok(c) = Cycle::from_walk(walk.clone()) {
            cycles.insert(c);
        } else {
            return Err(Error::NotATrace(NotATrace::NotPathOrCycle));
        }
    }
    let path = path.ok_or(Error::NotATrace(NotATrace::NoPath))?;
    let mut reachable: BTreeSet<Vertex> = path.vertices().iter().copied().collect();
    for c in &cycles {
        reachable.extend(c.vertex_set());
    }
    let cycles: Vec<&Cycle> = cycles.iter().collect();
    for c in &cycles {
        let others = cycles.iter().filter(|o| *o != c).any(|o| o.vertex_set().contains(&c.root()));
        if !path.vertices().contains(&c.root()) && !others {
            return Err(Error::NotATrace(NotATrace::Unattachable(c.root())));
        }
    }
    let order = order_search(&path, &cycles).ok_or(Error::NotATrace(NotATrace::Overlap))?;
    Ok(OrderedTrace { path, cycles: order.iter().rev().map(|&i| cycles[i].clone()).collect() })
}

/// All simple paths (including single vertices) in lexicographic order.
pub fn enumerate_paths<G: Digraph + ?Sized>(g: &G, cap: usize) -> Result<Vec<Path>> {
    let (paths, truncated) = collect_paths(g, cap);
    if truncated {
        return Err(Error::CapExceeded(format!("more than {cap} paths")));
    }
    Ok(paths)
}

/// The first `cap` paths, and whether more exist.
fn collect_paths<G: Digraph + ?Sized>(g: &G, cap: usize) -> (Vec<Path>, bool) {
    fn dfs<G: Digraph + ?Sized>(
        g: &G,
        stack: &mut Vec<Vertex>,
        on: &mut [bool],
        out: &mut Vec<Path>,
        cap: usize,
    ) -> std::result::Result<(), ()> {
        if out.len() >= cap {
            return Err(());
        }
        out.push(Path::from_vec_unchecked(stack.clone()));
        for w in g.successors(*stack.last().unwrap()) {
            if !on[w] {
                on[w] = true;
                stack.push(w);
                dfs(g, stack, on, out, cap)?;
                stack.pop();
                on[w] = false;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        on[v] = true;
        if dfs(g, &mut vec![v], &mut on, &mut out, cap).is_err() {
            return (out, true);
        }
        on[v] = false;
    }
    (out, false)
}

/// Default cap on the number of rooted cycles collected.
pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// All rooted simple cycles, ordered by root and then lexicographically.
/// Rotations of the same cycle are distinct entries.
pub fn enumerate_cycles<G: Digraph + ?Sized>(g: &G) -> Result<Vec<Cycle>> {
    enumerate_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn enumerate_cycles_capped<G: Digraph + ?Sized>(g: &G, cap: usize) -> Result<Vec<Cycle>> {
    fn dfs<G: Digraph + ?Sized>(
        g: &G,
        root: Vertex,
        stack: &mut Vec<Vertex>,
        on: &mut [bool],
        out: &mut Vec<Cycle>,
        cap: usize,
    ) -> Result<()> {
        for w in g.successors(*stack.last().unwrap()) {
            if w == root {
                if out.len() >= cap {
                    return Err(Error::CapExceeded(format!("more than {cap} cycles")));
                }
                let mut c = stack.clone();
                c.push(root);
                out.push(Cycle::from_vec_unchecked(c));
            } else if !on[w] {
                on[w] = true;
                stack.push(w);
                dfs(g, root, stack, on, out, cap)?;
                stack.pop();
                on[w] = false;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        on[v] = true;
        dfs(g, v, &mut vec![v], &mut on, &mut out, cap)?;
        on[v] = false;
    }
    Ok(out)
}

/// Limits on trace enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceLimits {
    /// Most cycles allowed in one trace.
    pub max_cycles: usize,
    /// Most traces produced in total.
    pub max_traces: usize,
}

impl Default for TraceLimits {
    fn default() -> Self {
        TraceLimits { max_cycles: 12, max_traces: 1_000_000 }
    }
}

/// Canonical identity of a trace: path index and sorted cycle indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceKey {
    pub path: usize,
    pub cycles: Vec<usize>,
}

#[derive(Debug, Clone)]
struct Entry {
    key: TraceKey,
    /// Cycle indices `γ_1, ..., γ_m` (splice order reversed).
    order: Vec<usize>,
    walk: Vec<Vertex>,
}

/// One level of the enumeration: every trace with exactly `size` cycles,
/// in canonical order.
#[derive(Debug, Clone)]
pub struct TraceLevel {
    pub size: usize,
    pub traces: Vec<(TraceKey, OrderedTrace)>,
}

/// Enumerates every trace of a graph exactly once.
///
/// Traces come level by level (number of cycles ascending); within a level
/// they are sorted by path index, then by sorted cycle indices, where paths
/// and cycles are indexed in the order of [`enumerate_paths`] and
/// [`enumerate_cycles`]. Removing the last-spliced cycle of a trace leaves
/// a trace, so level `s + 1` is generated from level `s`, and enumeration
/// is exhausted at the first empty level.
pub struct TraceEnumerator {
    paths: Vec<Path>,
    cycles: Vec<Cycle>,
    cycle_sets: Vec<BTreeSet<Vertex>>,
    limits: TraceLimits,
    current: Option<Vec<Entry>>,
    produced: usize,
    paths_truncated: bool,
    state: EnumState,
    pending: std::vec::IntoIter<(TraceKey, OrderedTrace)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum EnumState {
    Running,
    Capped(String),
    Done,
}

impl TraceEnumerator {
    pub fn new<G: Digraph + ?Sized>(g: &G, limits: TraceLimits) -> Result<Self> {
        let (paths, truncated) = collect_paths(g, limits.max_traces);
        let cycles = enumerate_cycles(g)?;
        let cycle_sets = cycles.iter().map(Cycle::vertex_set).collect();
        Ok(TraceEnumerator {
            paths,
            cycles,
            cycle_sets,
            limits,
            current: None,
            produced: 0,
            paths_truncated: truncated,
            state: EnumState::Running,
            pending: Vec::new().into_iter(),
        })
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Number of traces handed out so far.
    pub fn produced(&self) -> usize {
        self.produced
    }

    fn materialize(&self, e: &Entry) -> OrderedTrace {
        OrderedTrace {
            path: self.paths[e.key.path].clone(),
            cycles: e.order.iter().map(|&i| self.cycles[i].clone()).collect(),
        }
    }

    fn level_zero(&self) -> Vec<Entry> {
        self.paths
            .iter()
            .enumerate()
            .map(|(i, p)| Entry {
                key: TraceKey { path: i, cycles: Vec::new() },
                order: Vec::new(),
                walk: p.vertices().to_vec(),
            })
            .collect()
    }

    /// Builds level `s + 1` from level `s`. With `first_only`, stops after
    /// the first trace found.
    fn grow(&self, level: &[Entry], first_only: bool) -> Vec<Entry> {
        let mut seen: HashSet<TraceKey> = HashSet::new();
        let mut next = Vec::new();
        for e in level {
            let mut present: BTreeSet<Vertex> = e.walk.iter().copied().collect();
            present.extend(e.key.cycles.iter().flat_map(|&i| self.cycle_sets[i].iter().copied()));
            for (ci, cycle) in self.cycles.iter().enumerate() {
                if e.key.cycles.binary_search(&ci).is_ok() || !present.contains(&cycle.root()) {
                    continue;
                }
                let mut ids = e.key.cycles.clone();
                let pos = ids.binary_search(&ci).unwrap_err();
                ids.insert(pos, ci);
                let key = TraceKey { path: e.key.path, cycles: ids };
                if !seen.insert(key.clone()) {
                    continue;
                }
                if let Some(entry) = self.extend(e, ci, key) {
                    next.push(entry);
                    if first_only {
                        return next;
                    }
                }
            }
        }
        next.sort_by(|a, b| a.key.cmp(&b.key));
        next
    }

    fn extend(&self, base: &Entry, ci: usize, key: TraceKey) -> Option<Entry> {
        let path = &self.paths[key.path];
        let members: Vec<&Cycle> = key.cycles.iter().map(|&i| &self.cycles[i]).collect();
        if let Some(walk) = attach(&base.walk, &self.cycles[ci]) {
            if realizes(&walk, path, &members) {
                let mut order = vec![ci];
                order.extend_from_slice(&base.order);
                return Some(Entry { key, order, walk });
            }
        }
        let splice_order = order_search(path, &members)?;
        let mut walk = path.vertices().to_vec();
        for &i in &splice_order {
            walk = attach(&walk, members[i]).expect("order_search returns attachable orders");
        }
        let order = splice_order.iter().rev().map(|&i| key.cycles[i]).collect();
        Some(Entry { key, order, walk })
    }

    /// Produces the next level, or `None` once every trace was produced.
    /// A level that would overrun `max_traces` is truncated; the following
    /// call then reports [`Error::CapExceeded`].
    pub fn next_level(&mut self) -> Option<Result<TraceLevel>> {
        match &self.state {
            EnumState::Done => return None,
            EnumState::Capped(msg) => {
                let msg = msg.clone();
                self.state = EnumState::Done;
                return Some(Err(Error::CapExceeded(msg)));
            }
            EnumState::Running => {}
        }
        let (size, entries) = match self.current.take() {
            None => (0, self.level_zero()),
            Some(prev) => {
                let size = prev.first().map_or(0, |e| e.key.cycles.len()) + 1;
                if size > self.limits.max_cycles {
                    let more = self.grow(&prev, true);
                    self.state = EnumState::Done;
                    if more.is_empty() {
                        return None;
                    }
                    return Some(Err(Error::CapExceeded(format!(
                        "traces with more than {} cycles exist",
                        self.limits.max_cycles
                    ))));
                }
                (size, self.grow(&prev, false))
            }
        };
        if entries.is_empty() && !self.paths_truncated {
            self.state = EnumState::Done;
            return None;
        }
        let room = self.limits.max_traces - self.produced;
        let mut traces: Vec<(TraceKey, OrderedTrace)> = entries
            .iter()
            .take(room)
            .map(|e| (e.key.clone(), self.materialize(e)))
            .collect();
        if entries.len() > room || self.paths_truncated {
            self.state =
                EnumState::Capped(format!("more than {} traces", self.limits.max_traces));
        } else {
            self.current = Some(entries);
        }
        traces.shrink_to_fit();
        self.produced += traces.len();
        Some(Ok(TraceLevel { size, traces }))
    }
}

impl Iterator for TraceEnumerator {
    type Item = Result<OrderedTrace>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some((_, t)) = self.pending.next() {
                return Some(Ok(t));
            }
            match self.next_level()? {
                Ok(level) => self.pending = level.traces.into_iter(),
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

/// Streams every trace of `g` in canonical order; see [`TraceEnumerator`].
pub fn enumerate_traces<G: Digraph + ?Sized>(g: &G, limits: TraceLimits) -> Result<TraceEnumerator> {
    TraceEnumerator::new(g, limits)
}

/// Cycle lookup used when reading candidate sets back.
pub fn cycle_index(cycles: &[Cycle]) -> HashMap<Cycle, usize> {
    cycles.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::debruijn::DeBruijnGraph;
    use crate::graph::DenseGraph;
    use crate::words::Alphabet;

    fn d2() -> DeBruijnGraph {
        DeBruijnGraph::build(&Alphabet::parse("ab").unwrap(), 2).unwrap()
    }

    // aa = 0, ab = 1, ba = 2, bb = 3
    fn w(vs: &[Vertex]) -> Walk {
        Walk::from_vec_unchecked(vs.to_vec())
    }

    #[test]
    fn k4_multi_trace() {
        let g = DenseGraph::complete(4, true);
        let mt = mtrace(&g, &w(&[0, 1, 2, 1, 2, 3, 2, 3, 1, 3])).unwrap();
        assert_eq!(mt.path.vertices(), &[0, 1, 3]);
        let cycles: Vec<(Vec<Vertex>, usize)> =
            mt.cycles.iter().map(|(c, &n)| (c.vertices().to_vec(), n)).collect();
        assert_eq!(cycles, vec![(vec![1, 2, 1], 1), (vec![1, 2, 3, 1], 1), (vec![2, 3, 2], 1)]);
    }

    #[test]
    fn multi_trace_counts_repeats() {
        let g = d2();
        let mt = mtrace(&g, &w(&[2, 1, 2, 1, 2])).unwrap();
        assert_eq!(mt.path.vertices(), &[2]);
        assert_eq!(mt.cycles.get(&Cycle::from_vec_unchecked(vec![2, 1, 2])), Some(&2));
        let single = mtrace(&g, &w(&[3])).unwrap();
        assert!(single.cycles.is_empty());
    }

    #[test]
    fn traces_forget_multiplicity() {
        let g = d2();
        let t1 = trace(&g, &w(&[2, 1, 2, 1])).unwrap();
        assert_eq!(t1.path.vertices(), &[2, 1]);
        assert_eq!(t1.cycles.iter().map(|c| c.vertices().to_vec()).collect::<Vec<_>>(), vec![vec![2, 1, 2]]);
        assert_eq!(trace(&g, &w(&[2, 1, 2, 1, 2, 1])).unwrap(), t1);
    }

    /// Five-vertex graph shaped like the validity illustrations:
    /// path v1 v2 v3, cycles v2 v4 v2, v4 v5 v4, a loop on v5, v1 v2 v1.
    fn fig_graph() -> DenseGraph {
        let edges = [(0, 1), (1, 2), (1, 3), (3, 1), (3, 4), (4, 3), (4, 4), (1, 0)];
        DenseGraph::from_edges(5, &edges).unwrap()
    }

    #[test]
    fn validity_illustrations() {
        let g = fig_graph();
        let path = w(&[0, 1, 2]);
        let ok = is_trace(&g, &[path.clone(), w(&[3, 4, 3]), w(&[1, 3, 1])]).unwrap();
        assert_eq!(ok.cycles.last().unwrap().vertices(), &[1, 3, 1]);
        let loose = is_trace(&g, &[path.clone(), w(&[4, 4]), w(&[1, 3, 1])]);
        assert!(matches!(loose, Err(Error::NotATrace(_))));
        assert!(is_trace(&g, &[path.clone(), w(&[0, 1, 0])]).is_ok());
        assert_eq!(
            is_trace(&g, &[path.clone(), w(&[1, 0, 1])]),
            Err(Error::NotATrace(NotATrace::Overlap))
        );
    }

    #[test]
    fn candidate_shape_errors() {
        let g = fig_graph();
        assert_eq!(is_trace(&g, &[w(&[1, 3, 1])]), Err(Error::NotATrace(NotATrace::NoPath)));
        assert_eq!(
            is_trace(&g, &[w(&[0, 1]), w(&[1, 2])]),
            Err(Error::NotATrace(NotATrace::TwoPaths))
        );
        assert_eq!(
            is_trace(&g, &[w(&[0, 1, 0, 1])]),
            Err(Error::NotATrace(NotATrace::NotPathOrCycle))
        );
    }

    #[test]
    fn rooted_cycle_counts() {
        assert_eq!(enumerate_cycles(&d2()).unwrap().len(), 14);
        assert_eq!(enumerate_cycles(&DenseGraph::complete(3, false)).unwrap().len(), 12);
        let one = DenseGraph::complete(1, true);
        assert_eq!(enumerate_cycles(&one).unwrap(), vec![Cycle::from_vec_unchecked(vec![0, 0])]);
    }

    #[test]
    fn unary_graph_has_two_traces() {
        let g = DeBruijnGraph::build(&Alphabet::parse("a").unwrap(), 1).unwrap();
        let all: Vec<OrderedTrace> =
            enumerate_traces(&g, TraceLimits::default()).unwrap().map(Result::unwrap).collect();
        assert_eq!(all.len(), 2);
        assert!(all[0].cycles.is_empty());
        assert_eq!(all[1].cycles[0].vertices(), &[0, 0]);
    }

    #[test]
    fn caps_are_reported() {
        let limits = TraceLimits { max_cycles: 1, max_traces: 1_000_000 };
        let res: Vec<_> = enumerate_traces(&d2(), limits).unwrap().collect();
        assert!(matches!(res.last(), Some(Err(Error::CapExceeded(_)))));
        let limits = TraceLimits { max_cycles: 12, max_traces: 5 };
        let res: Vec<_> = enumerate_traces(&d2(), limits).unwrap().collect();
        assert_eq!(res.len(), 6);
        assert!(matches!(res[5], Err(Error::CapExceeded(_))));
    }

    #[test]
    fn ordered_trace_composes_with_multiplicities() {
        let g = d2();
        let t = is_trace(&g, &[w(&[2, 1]), w(&[2, 1, 2])]).unwrap();
        assert_eq!(t.walk().vertices(), &[2, 1, 2, 1]);
        assert_eq!(t.compose(&[3]).unwrap().vertices(), &[2, 1, 2, 1, 2, 1, 2, 1]);
        assert_eq!(trace(&g, &t.compose(&[3]).unwrap()).unwrap(), t.to_trace());
    }
}
