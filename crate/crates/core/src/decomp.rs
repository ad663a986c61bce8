//! Left-to-right path–cycle decomposition of walks (`dec`) and its inverse
//! splicing operation (`comp`).
//!
//! `dec` reads a walk edge by edge, keeping a current path; whenever the
//! next vertex already lies on the path, the closed stretch is cut out as a
//! rooted cycle. `comp` splices cycles back, last cycle first, each at the
//! first occurrence of its root whose prefix is still a path.

use std::collections::{BTreeSet, HashMap};

use crate::debruijn::{self, DeBruijnGraph};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex, Walk};
use crate::words::{OccVector, ParamList};

/// A walk whose vertices are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Walk);

impl Path {
    pub fn new<G: Digraph + ?Sized>(g: &G, vertices: Vec<Vertex>) -> Result<Self> {
        let walk = Walk::new(g, vertices)?;
        Path::from_walk(walk)
    }

    pub fn from_walk(walk: Walk) -> Result<Self> {
        if let Some(v) = first_repeat(walk.vertices()) {
            return Err(Error::NotAPath(v));
        }
        Ok(Path(walk))
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        Path(Walk::from_vec_unchecked(vertices))
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.0.vertices()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn source(&self) -> Vertex {
        self.0.source()
    }
}

/// A rooted cycle `(v, v_1, ..., v_n, v)`: a loop whose proper prefix is a
/// path. Rotations are distinct cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Walk);

impl Cycle {
    pub fn new<G: Digraph + ?Sized>(g: &G, vertices: Vec<Vertex>) -> Result<Self> {
        let walk = Walk::new(g, vertices)?;
        Cycle::from_walk(walk)
    }

    pub fn from_walk(walk: Walk) -> Result<Self> {
        if walk.is_empty() {
            return Err(Error::NotACycle("empty walk"));
        }
        if walk.source() != walk.target() {
            return Err(Error::NotACycle("source and target differ"));
        }
        let vs = walk.vertices();
        if first_repeat(&vs[..vs.len() - 1]).is_some() {
            return Err(Error::NotACycle("interior repeats a vertex"));
        }
        Ok(Cycle(walk))
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        Cycle(Walk::from_vec_unchecked(vertices))
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.0.vertices()
    }

    pub fn root(&self) -> Vertex {
        self.0.source()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct vertices (the closing root is not repeated).
    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.0.vertex_set()
    }
}

/// An ordered sequence of cycles `Γ`.
pub type CycleSeq = Vec<Cycle>;

/// Number of positions `i` with `Γ(i) = γ`.
pub fn multiplicity(seq: &[Cycle], cycle: &Cycle) -> usize {
    seq.iter().filter(|c| *c == cycle).count()
}

/// Output of [`dec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub path: Path,
    pub cycles: CycleSeq,
}

fn first_repeat(vs: &[Vertex]) -> Option<Vertex> {
    let mut seen = BTreeSet::new();
    vs.iter().copied().find(|&v| !seen.insert(v))
}

/// Decomposes a walk into a path and the sequence of cycles cut out of it,
/// in the order they close.
pub fn dec<G: Digraph + ?Sized>(g: &G, walk: &Walk) -> Result<Decomposition> {
    crate::graph::check_walk(g, walk.vertices())?;
    Ok(dec_unchecked(walk))
}

pub(crate) fn dec_unchecked(walk: &Walk) -> Decomposition {
    let vs = walk.vertices();
    let mut path: Vec<Vertex> = vec![vs[0]];
    let mut position: HashMap<Vertex, usize> = HashMap::from([(vs[0], 0)]);
    let mut cycles = Vec::new();
    for &next in &vs[1..] {
        match position.get(&next) {
            None => {
                position.insert(next, path.len());
                path.push(next);
            }
            Some(&j) => {
                let mut cycle: Vec<Vertex> = path[j..].to_vec();
                cycle.push(next);
                for v in path.drain(j + 1..) {
                    position.remove(&v);
                }
                cycles.push(Cycle::from_vec_unchecked(cycle));
            }
        }
    }
    Decomposition { path: Path::from_vec_unchecked(path), cycles }
}

/// Position at which a cycle rooted at `root` is spliced into `walk`: the
/// first occurrence of `root` whose prefix (inclusive) is duplicate-free.
/// Only the first occurrence can qualify.
pub(crate) fn splice_point(walk: &[Vertex], root: Vertex) -> Result<usize> {
    let mut seen = BTreeSet::new();
    for (i, &v) in walk.iter().enumerate() {
        if v == root {
            return Ok(i);
        }
        if !seen.insert(v) {
            break;
        }
    }
    Err(Error::Undefined(root))
}

/// Splices `cycle` into `walk` at its splice point.
pub(crate) fn splice(walk: &[Vertex], cycle: &Cycle) -> Result<Vec<Vertex>> {
    let at = splice_point(walk, cycle.root())?;
    let mut out = Vec::with_capacity(walk.len() + cycle.len());
    out.extend_from_slice(&walk[..at]);
    out.extend_from_slice(cycle.vertices());
    out.extend_from_slice(&walk[at + 1..]);
    Ok(out)
}

/// Inverse of [`dec`]: splices the cycles of `seq` into `walk`, processing
/// the sequence from its last element to its first.
pub fn comp<G: Digraph + ?Sized>(g: &G, walk: &Walk, seq: &[Cycle]) -> Result<Walk> {
    crate::graph::check_walk(g, walk.vertices())?;
    for c in seq {
        crate::graph::check_walk(g, c.vertices())?;
    }
    comp_unchecked(walk, seq)
}

pub(crate) fn comp_unchecked(walk: &Walk, seq: &[Cycle]) -> Result<Walk> {
    let mut current = walk.vertices().to_vec();
    for cycle in seq.iter().rev() {
        current = splice(&current, cycle)?;
    }
    Ok(Walk::from_vec_unchecked(current))
}

/// `V(ω)`.
pub fn vertices_of(walk: &Walk) -> BTreeSet<Vertex> {
    walk.vertex_set()
}

/// Checks that splicing `cycle` into `walk` adds exactly `Φ(cycle)` to the
/// walk's occurrence vector.
pub fn insert_occ_additivity(
    g: &DeBruijnGraph,
    walk: &Walk,
    cycle: &Cycle,
    p: &ParamList,
) -> Result<bool> {
    let spliced = Walk::from_vec_unchecked(splice(walk.vertices(), cycle)?);
    let lhs = debruijn::walk_occ(g, &spliced, p);
    let rhs: OccVector = debruijn::walk_occ(g, walk, p) + &debruijn::walk_occ(g, cycle.walk(), p);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DenseGraph;
    use crate::words::Alphabet;

    fn k4() -> DenseGraph {
        DenseGraph::complete(4, true)
    }

    /// Vertices written 1..=4 as in the worked example.
    fn k4_seq(labels: &[Vertex]) -> Vec<Vertex> {
        labels.iter().map(|v| v - 1).collect()
    }

    fn k4_walk() -> Walk {
        Walk::new(&k4(), k4_seq(&[1, 2, 3, 2, 3, 4, 3, 4, 2, 4])).unwrap()
    }

    #[test]
    fn k4_example() {
        let g = k4();
        let d = dec(&g, &k4_walk()).unwrap();
        assert_eq!(d.path.vertices(), k4_seq(&[1, 2, 4]));
        let cycles: Vec<&[Vertex]> = d.cycles.iter().map(Cycle::vertices).collect();
        assert_eq!(cycles, vec![&k4_seq(&[2, 3, 2])[..], &k4_seq(&[3, 4, 3]), &k4_seq(&[2, 3, 4, 2])]);
        let lens: usize = d.path.len() + d.cycles.iter().map(Cycle::len).sum::<usize>();
        assert_eq!(lens, 9);
        assert_eq!(comp(&g, d.path.walk(), &d.cycles).unwrap(), k4_walk());
    }

    #[test]
    fn single_vertex_walk() {
        let g = k4();
        let d = dec(&g, &Walk::single(3)).unwrap();
        assert_eq!(d.path.vertices(), &[3]);
        assert!(d.cycles.is_empty());
        assert_eq!(comp(&g, &Walk::single(3), &[]).unwrap(), Walk::single(3));
    }

    #[test]
    fn debruijn_alternating_walk() {
        let a = Alphabet::parse("ab").unwrap();
        let g = DeBruijnGraph::build(&a, 2).unwrap();
        // ab = 1, ba = 2
        let walk = Walk::new(&g, vec![2, 1, 2, 1]).unwrap();
        let d = dec(&g, &walk).unwrap();
        assert_eq!(d.path.vertices(), &[2, 1]);
        assert_eq!(d.cycles, vec![Cycle::new(&g, vec![2, 1, 2]).unwrap()]);
        assert_eq!(comp(&g, d.path.walk(), &d.cycles).unwrap(), walk);
        let p = ParamList::parse(&a, "ab,ba,a").unwrap();
        assert!(insert_occ_additivity(&g, d.path.walk(), &d.cycles[0], &p).unwrap());
        assert!(insert_occ_additivity(&g, &Walk::single(2), &d.cycles[0], &p).unwrap());
    }

    #[test]
    fn comp_undefined_when_root_missing() {
        let g = k4();
        let c = Cycle::new(&g, vec![2, 3, 2]).unwrap();
        assert_eq!(comp(&g, &Walk::new(&g, vec![0, 1]).unwrap(), &[c]), Err(Error::Undefined(2)));
    }

    #[test]
    fn vertex_sets() {
        let g = k4();
        assert_eq!(vertices_of(&Walk::new(&g, vec![0, 1, 2, 1]).unwrap()), BTreeSet::from([0, 1, 2]));
        assert_eq!(vertices_of(&Walk::single(2)), BTreeSet::from([2]));
        assert_eq!(vertices_of(&k4_walk()), BTreeSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn path_and_cycle_validation() {
        let g = k4();
        assert_eq!(Path::new(&g, vec![1, 2, 1]), Err(Error::NotAPath(1)));
        assert!(Cycle::new(&g, vec![1]).is_err());
        assert!(Cycle::new(&g, vec![1, 2, 1, 2, 1]).is_err());
        assert!(Cycle::new(&g, vec![1, 1]).is_ok());
        let c = Cycle::new(&g, vec![1, 2, 1]).unwrap();
        assert_eq!(multiplicity(&[c.clone(), c.clone()], &c), 2);
    }
}
