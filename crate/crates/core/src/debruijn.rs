//! The `N`-dimensional de Bruijn graph over an alphabet, conversions
//! between words and walks, and occurrence vectors of walks.
//!
//! Vertex `i` is the length-`N` word whose base-`|A|` digits (most
//! significant first) are the symbol indices; an edge `av -> vb` shifts one
//! symbol out on the left and one in on the right.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Vertex, Walk};
use crate::words::{self, Alphabet, OccVector, ParamList, Symbol, Word};

/// Default bound on `|A|^N`.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeBruijnGraph {
    alphabet: Alphabet,
    dim: usize,
    vertex_count: usize,
}

impl DeBruijnGraph {
    pub fn build(alphabet: &Alphabet, dim: usize) -> Result<Self> {
        Self::build_capped(alphabet, dim, DEFAULT_VERTEX_CAP)
    }

    pub fn build_capped(alphabet: &Alphabet, dim: usize, cap: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::OutOfRange { n: 0, len: 1 });
        }
        let q = alphabet.len() as u128;
        let vertices = q.checked_pow(dim as u32).unwrap_or(u128::MAX);
        if vertices > cap as u128 {
            return Err(Error::DimensionCap { vertices, cap });
        }
        Ok(DeBruijnGraph { alphabet: alphabet.clone(), dim, vertex_count: vertices as usize })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count * self.alphabet.len()
    }

    fn q(&self) -> usize {
        self.alphabet.len()
    }

    /// Successor of `v` after appending symbol `s`.
    pub fn shift(&self, v: Vertex, s: Symbol) -> Vertex {
        (v * self.q()) % self.vertex_count + s as usize
    }

    pub fn vertex_of(&self, word: &Word) -> Result<Vertex> {
        if word.len() != self.dim {
            return Err(Error::BadStartLength { expected: self.dim, got: word.len() });
        }
        Ok(word.as_slice().iter().fold(0, |acc, &s| acc * self.q() + s as usize))
    }

    pub fn word_of_vertex(&self, v: Vertex) -> Word {
        let mut syms = vec![0 as Symbol; self.dim];
        let mut code = v;
        for slot in syms.iter_mut().rev() {
            *slot = (code % self.q()) as Symbol;
            code /= self.q();
        }
        Word::new(syms)
    }

    pub fn label(&self, v: Vertex) -> String {
        self.alphabet.render(&self.word_of_vertex(v))
    }

    /// The walk induced by reading `w` from start vertex word `start`.
    pub fn walk_of_word(&self, start: &Word, w: &Word) -> Result<Walk> {
        let mut v = self.vertex_of(start)?;
        let mut out = Vec::with_capacity(w.len() + 1);
        out.push(v);
        for &s in w.as_slice() {
            v = self.shift(v, s);
            out.push(v);
        }
        Ok(Walk::from_vec_unchecked(out))
    }

    /// `v_1 · suff_1(v_2) ⋯ suff_1(v_n)`.
    pub fn word_of_walk(&self, walk: &Walk) -> Result<Word> {
        crate::graph::check_walk(self, walk.vertices())?;
        let mut word = self.word_of_vertex(walk.source());
        for &v in &walk.vertices()[1..] {
            word.push((v % self.q()) as Symbol);
        }
        Ok(word)
    }

    /// Graphviz rendering, one directed edge per vertex pair.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph debruijn {\n");
        for v in 0..self.vertex_count {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", self.label(v));
        }
        for v in 0..self.vertex_count {
            for w in self.successors(v) {
                let _ = writeln!(out, "  v{v} -> v{w};");
            }
        }
        out.push_str("}\n");
        out
    }
}

impl Digraph for DeBruijnGraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn has_edge(&self, from: Vertex, to: Vertex) -> bool {
        from < self.vertex_count
            && to < self.vertex_count
            && (from * self.q()) % self.vertex_count == to - to % self.q()
    }

    fn successors(&self, v: Vertex) -> Vec<Vertex> {
        (0..self.q()).map(|s| self.shift(v, s as Symbol)).collect()
    }
}

/// Per-vertex suffix indicators for one parameter list, so that walk
/// occurrence vectors are sums of table rows.
#[derive(Debug, Clone)]
pub struct OccTable {
    k: usize,
    rows: Vec<OccVector>,
}

impl OccTable {
    pub fn new(g: &DeBruijnGraph, p: &ParamList) -> Self {
        let rows = (0..g.vertex_count())
            .map(|v| words::suffix_indicator(&g.word_of_vertex(v), p))
            .collect();
        OccTable { k: p.k(), rows }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn row(&self, v: Vertex) -> &OccVector {
        &self.rows[v]
    }

    /// Sum of suffix indicators over every vertex except the first.
    pub fn walk_occ(&self, walk: &Walk) -> OccVector {
        let mut acc = OccVector::zero(self.k);
        for &v in &walk.vertices()[1..] {
            acc += &self.rows[v];
        }
        acc
    }
}

/// Occurrence vector of a walk: `Σ_{i≥1} σ(v_i)`; the zero vector for the
/// empty walk.
pub fn walk_occ(g: &DeBruijnGraph, walk: &Walk, p: &ParamList) -> OccVector {
    let mut acc = OccVector::zero(p.k());
    for &v in &walk.vertices()[1..] {
        acc += &words::suffix_indicator(&g.word_of_vertex(v), p);
    }
    acc
}

/// Checks `Φ(vw) = Φ(v) + Φ(walk(v, w))` for `|v| = N` where `N` is the
/// graph dimension.
pub fn occ_additivity_check(g: &DeBruijnGraph, v: &Word, w: &Word, p: &ParamList) -> Result<bool> {
    let walk = g.walk_of_word(v, w)?;
    let lhs = words::occ_vector(&v.concat(w), p);
    let rhs = words::occ_vector(v, p) + &walk_occ(g, &walk, p);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn d2() -> DeBruijnGraph {
        DeBruijnGraph::build(&ab(), 2).unwrap()
    }

    fn walk_of(g: &DeBruijnGraph, labels: &[&str]) -> Walk {
        let vs = labels.iter().map(|l| g.vertex_of(&g.alphabet().word(l).unwrap()).unwrap()).collect();
        Walk::new(g, vs).unwrap()
    }

    #[test]
    fn binary_dimension_two() {
        let g = d2();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 8);
        let labels: Vec<String> = (0..4).map(|v| g.label(v)).collect();
        assert_eq!(labels, ["aa", "ab", "ba", "bb"]);
        let edges: usize = (0..4).map(|v| g.successors(v).len()).sum();
        assert_eq!(edges, 8);
    }

    #[test]
    fn unary_and_three_dim() {
        let g = DeBruijnGraph::build(&Alphabet::parse("a").unwrap(), 3).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.has_edge(0, 0));
        let g = DeBruijnGraph::build(&Alphabet::parse("01").unwrap(), 3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        let mut edges = 0;
        for u in 0..8 {
            for v in 0..8 {
                if g.has_edge(u, v) {
                    edges += 1;
                    let (_, su) = words::pref_suff(&g.word_of_vertex(u), 2).unwrap();
                    let (pv, _) = words::pref_suff(&g.word_of_vertex(v), 2).unwrap();
                    assert_eq!(su, pv);
                }
            }
        }
        assert_eq!(edges, 16);
        for v in 0..8 {
            let indeg = (0..8).filter(|&u| g.has_edge(u, v)).count();
            assert_eq!(indeg, 2);
        }
    }

    #[test]
    fn vertex_cap() {
        let err = DeBruijnGraph::build(&ab(), 13).unwrap_err();
        assert_eq!(err, Error::DimensionCap { vertices: 8192, cap: DEFAULT_VERTEX_CAP });
        assert!(DeBruijnGraph::build(&ab(), 12).is_ok());
    }

    #[test]
    fn word_walk_conversions() {
        let g = d2();
        let a = ab();
        let walk = g.walk_of_word(&a.word("ba").unwrap(), &a.word("aabba").unwrap()).unwrap();
        assert_eq!(walk, walk_of(&g, &["ba", "aa", "aa", "ab", "bb", "ba"]));
        assert_eq!(a.render(&g.word_of_walk(&walk).unwrap()), "baaabba");
        let empty = g.walk_of_word(&a.word("ab").unwrap(), &Word::default()).unwrap();
        assert!(empty.is_empty());
        assert_eq!(a.render(&g.word_of_walk(&empty).unwrap()), "ab");
        let alt = walk_of(&g, &["ba", "ab", "ba", "ab"]);
        assert_eq!(a.render(&g.word_of_walk(&alt).unwrap()), "babab");
        assert_eq!(
            g.walk_of_word(&a.word("b").unwrap(), &Word::default()),
            Err(Error::BadStartLength { expected: 2, got: 1 })
        );
    }

    #[test]
    fn walk_occurrence_vectors() {
        let g = d2();
        let p = ParamList::parse(&ab(), "ab,ba,a").unwrap();
        assert_eq!(walk_occ(&g, &walk_of(&g, &["ba", "ab", "ba"]), &p).0, vec![1, 1, 1]);
        assert_eq!(walk_occ(&g, &walk_of(&g, &["ba", "ab"]), &p).0, vec![1, 0, 0]);
        assert_eq!(walk_occ(&g, &walk_of(&g, &["ba"]), &p).0, vec![0, 0, 0]);
        let table = OccTable::new(&g, &p);
        let w = walk_of(&g, &["ba", "aa", "aa", "ab", "bb", "ba"]);
        assert_eq!(table.walk_occ(&w), walk_occ(&g, &w, &p));
    }

    #[test]
    fn additivity_identity() {
        let g = d2();
        let a = ab();
        let p = ParamList::parse(&a, "ab,ba,a").unwrap();
        let v = a.word("ba").unwrap();
        assert!(occ_additivity_check(&g, &v, &a.word("aabba").unwrap(), &p).unwrap());
        assert!(occ_additivity_check(&g, &v, &Word::default(), &p).unwrap());
    }

    #[test]
    fn dot_export_lists_every_edge() {
        let dot = d2().to_dot();
        assert_eq!(dot.matches("->").count(), 8);
        assert!(dot.contains("label=\"ab\""));
    }
}
