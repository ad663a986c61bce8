//! Compilation of trace conditions into linear systems.

use crate::debruijn::{DeBruijnGraph, OccTable};
use crate::traces::OrderedTrace;
use crate::words::{self, OccVector, ParamList};

use super::{IntMatrix, LinearSystem};

/// Occurrence data of one ordered trace for one parameter list: the
/// constant part `Φ(from(π)) + Φ(π)` and one column `Φ(γ_i)` per cycle.
/// The occurrence vector of `comp(π, (γ_1^{x_1}, ...))` prefixed by
/// `from(π)` is `constants + Σ x_i · columns[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceVectors {
    pub constants: OccVector,
    pub columns: Vec<OccVector>,
}

impl TraceVectors {
    pub fn new(g: &DeBruijnGraph, trace: &OrderedTrace, p: &ParamList) -> Self {
        Self::with_table(g, &OccTable::new(g, p), trace, p)
    }

    pub fn with_table(g: &DeBruijnGraph, table: &OccTable, trace: &OrderedTrace, p: &ParamList) -> Self {
        assert!(p.max_len() <= g.dim(), "graph dimension below the longest parameter word");
        let start = g.word_of_vertex(trace.path.source());
        let constants = words::occ_vector(&start, p) + &table.walk_occ(trace.path.walk());
        let columns = trace.cycles.iter().map(|c| table.walk_occ(c.walk())).collect();
        TraceVectors { constants, columns }
    }

    pub fn k(&self) -> usize {
        self.constants.len()
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    /// Coefficients of `θ^{w_a} − θ^{w_b}` and its constant part.
    fn difference(&self, a: usize, b: usize) -> (Vec<i64>, i64) {
        let coeffs = self.columns.iter().map(|c| c.0[a] as i64 - c.0[b] as i64).collect();
        (coeffs, self.constants.0[a] as i64 - self.constants.0[b] as i64)
    }

    /// Rows `θ^{w_1} = θ^{w_j}` for `j = 2..k` over `x`.
    fn push_equality_chain(&self, system: &mut LinearSystem) {
        for j in 1..self.k() {
            let (coeffs, constant) = self.difference(0, j);
            system.push_eq(coeffs, -constant);
        }
    }
}

/// Positive multiplicities making every count equal:
/// `diff(constants + Σ x_i · columns[i]) = 0`, `x ≥ 1`.
pub fn build_balance_system(v: &TraceVectors) -> LinearSystem {
    let mut system = LinearSystem::new(v.m(), 1);
    v.push_equality_chain(&mut system);
    system
}

/// Homogeneous rows `Σ y_i (columns[i]_1 − columns[i]_j) = 0`, `j = 2..k`.
pub fn build_pumping_system(v: &TraceVectors) -> IntMatrix {
    IntMatrix::new(v.m(), (1..v.k()).map(|j| v.difference(0, j).0).collect())
}

/// The negated equivalence condition over one trace, as a disjunction of
/// systems over the shared multiplicities `x ≥ 1`:
/// `(E_1 ∧ ¬E_2) ∨ (¬E_1 ∧ E_2)`, where `E_j` says all counts of list `j`
/// agree and each `¬E_j` is split into one strict inequality per adjacent
/// pair and direction.
pub fn build_psi_branches(v1: &TraceVectors, v2: &TraceVectors) -> Vec<LinearSystem> {
    assert_eq!(v1.m(), v2.m(), "both lists must be evaluated on the same trace");
    let mut out = Vec::new();
    for (holds, fails) in [(v1, v2), (v2, v1)] {
        for j in 0..fails.k().saturating_sub(1) {
            let (coeffs, constant) = fails.difference(j, j + 1);
            let negated: Vec<i64> = coeffs.iter().map(|c| -c).collect();
            // θ_j − θ_{j+1} > 0
            let mut above = LinearSystem::new(v1.m(), 1);
            holds.push_equality_chain(&mut above);
            above.push_gt(coeffs, -constant);
            out.push(above);
            // θ_{j+1} − θ_j > 0
            let mut below = LinearSystem::new(v1.m(), 1);
            holds.push_equality_chain(&mut below);
            below.push_gt(negated, constant);
            out.push(below);
        }
    }
    out
}
