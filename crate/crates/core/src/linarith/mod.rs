//! Exact integer-linear feasibility.
//!
//! The existential questions asked by the decision procedures (is there a
//! positive multiplicity vector balancing the occurrence counts? is there a
//! non-zero one pumping them?) and the branches of the negated equivalence
//! condition are compiled straight into [`LinearSystem`]s and decided here.
//! Everything is exact: coefficients are integers, the pumping relaxation is
//! solved over `BigRational`, integer questions go through exact projection,
//! and witnesses are re-checked before they are returned.

mod omega;
mod simplex;
mod systems;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use simplex::LpOutcome;
pub use systems::{build_balance_system, build_psi_branches, build_pumping_system, TraceVectors};

/// Default budget of projection steps for [`ilp_feasible`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eq,
    /// `a·x ≥ rhs`
    Ge,
    /// `a·x ≤ rhs`
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    fn holds(&self, x: &[BigInt]) -> bool {
        let lhs: BigInt = self.coeffs.iter().zip(x).map(|(&a, v)| BigInt::from(a) * v).sum();
        let rhs = BigInt::from(self.rhs);
        match self.relation {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

/// Integer constraints over `vars` unknowns, each bounded below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSystem {
    pub vars: usize,
    pub lower: Vec<i64>,
    pub rows: Vec<Constraint>,
}

impl LinearSystem {
    /// A system with no constraints and every variable `≥ lower`.
    pub fn new(vars: usize, lower: i64) -> Self {
        LinearSystem { vars, lower: vec![lower; vars], rows: Vec::new() }
    }

    pub fn with_lower(lower: Vec<i64>) -> Self {
        LinearSystem { vars: lower.len(), lower, rows: Vec::new() }
    }

    pub fn push(&mut self, coeffs: Vec<i64>, relation: Relation, rhs: i64) {
        assert_eq!(coeffs.len(), self.vars, "row width must match the variable count");
        self.rows.push(Constraint { coeffs, relation, rhs });
    }

    pub fn push_eq(&mut self, coeffs: Vec<i64>, rhs: i64) {
        self.push(coeffs, Relation::Eq, rhs);
    }

    /// `a·x > rhs`, stored as `a·x ≥ rhs + 1`.
    pub fn push_gt(&mut self, coeffs: Vec<i64>, rhs: i64) {
        self.push(coeffs, Relation::Ge, rhs + 1);
    }

    /// `a·x < rhs`, stored as `a·x ≤ rhs − 1`.
    pub fn push_lt(&mut self, coeffs: Vec<i64>, rhs: i64) {
        self.push(coeffs, Relation::Le, rhs - 1);
    }

    pub fn validate(&self) -> Result<()> {
        if self.lower.len() != self.vars {
            return Err(Error::BadSystem(format!(
                "{} lower bounds for {} variables",
                self.lower.len(),
                self.vars
            )));
        }
        if let Some(r) = self.rows.iter().find(|r| r.coeffs.len() != self.vars) {
            return Err(Error::BadSystem(format!("row of width {} for {} variables", r.coeffs.len(), self.vars)));
        }
        Ok(())
    }

    /// Exact check of an assignment against every constraint and bound.
    pub fn satisfied_by(&self, x: &[BigInt]) -> bool {
        x.len() == self.vars
            && x.iter().zip(&self.lower).all(|(v, &l)| *v >= BigInt::from(l))
            && self.rows.iter().all(|r| r.holds(x))
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let terms: Vec<String> = r
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, c)| format!("{c}·x{}", i + 1))
                .collect();
            let lhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            let op = match r.relation {
                Relation::Eq => "=",
                Relation::Ge => "≥",
                Relation::Le => "≤",
            };
            writeln!(f, "{lhs} {op} {}", r.rhs)?;
        }
        let bounds: Vec<String> =
            self.lower.iter().enumerate().map(|(i, l)| format!("x{} ≥ {l}", i + 1)).collect();
        write!(f, "{}", bounds.join(", "))
    }
}

/// Dense integer matrix given by rows over a fixed number of columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<i64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { cols, rows }
    }

    fn apply(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(y).map(|(&a, v)| BigInt::from(a) * v).sum())
            .collect()
    }
}

/// Outcome of a feasibility query. A witness is only ever constructed
/// after it has been checked against the constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<BigInt>),
    Infeasible,
}

impl Feasibility {
    fn checked(system: &LinearSystem, x: Vec<BigInt>) -> Self {
        assert!(system.satisfied_by(&x), "solver produced an invalid witness");
        Feasibility::Feasible(x)
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[BigInt]> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible => None,
        }
    }

    /// Witness as machine integers; `None` when infeasible or when a value
    /// is negative or too large.
    pub fn witness_u64(&self) -> Option<Vec<u64>> {
        self.witness()?.iter().map(ToPrimitive::to_u64).collect()
    }
}

/// Decides `∃ y ∈ ℕ^m, y ≠ 0, A y = 0`.
///
/// Solves `A y = 0, Σ y = 1, y ≥ 0` over the rationals and clears
/// denominators; by homogeneity rational and integer feasibility coincide.
pub fn homogeneous_nontrivial(a: &IntMatrix) -> Feasibility {
    let m = a.cols;
    if m == 0 {
        return Feasibility::Infeasible;
    }
    let mut rows: Vec<Vec<BigRational>> =
        a.rows.iter().map(|r| r.iter().map(|&v| simplex::rat(v)).collect()).collect();
    let mut rhs = vec![BigRational::zero(); rows.len()];
    rows.push(vec![BigRational::one(); m]);
    rhs.push(BigRational::one());
    let cost = vec![BigRational::zero(); m];
    let z = match simplex::solve(&rows, &rhs, &cost) {
        LpOutcome::Optimal(z) => z,
        LpOutcome::Infeasible => return Feasibility::Infeasible,
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    };
    let lcm = z.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut y: Vec<BigInt> = z.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = y.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() {
        for v in y.iter_mut() {
            *v /= &g;
        }
    }
    assert!(
        y.iter().any(|v| !v.is_zero()) && y.iter().all(|v| !v.is_negative()),
        "homogeneous witness must be non-negative and non-zero"
    );
    assert!(a.apply(&y).iter().all(Zero::is_zero), "homogeneous witness must solve A y = 0");
    Feasibility::Feasible(y)
}

/// Decides `∃ x ∈ ℤ^n, x ≥ lower`, satisfying every row of `system`.
///
/// Runs the Omega test: exact integer projection with no a-priori box on
/// the variables. Each projection step counts against `node_budget`;
/// running out is reported as [`Error::BudgetExceeded`], never as
/// infeasibility.
pub fn ilp_feasible(system: &LinearSystem, node_budget: u64) -> Result<Feasibility> {
    system.validate()?;
    let n = system.vars;
    let mut problem = omega::Problem { vars: n, eqs: Vec::new(), geqs: Vec::new() };
    for r in &system.rows {
        let coeffs: Vec<BigInt> = r.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let rhs = BigInt::from(r.rhs);
        match r.relation {
            Relation::Eq => problem.eqs.push(omega::Row { coeffs, constant: -rhs }),
            Relation::Ge => problem.geqs.push(omega::Row { coeffs, constant: -rhs }),
            Relation::Le => problem.geqs.push(omega::Row { coeffs: coeffs.into_iter().map(|c| -c).collect(), constant: rhs }),
        }
    }
    for (i, &l) in system.lower.iter().enumerate() {
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs[i] = BigInt::one();
        problem.geqs.push(omega::Row { coeffs, constant: BigInt::from(-l) });
    }
    Ok(match omega::Omega::new(node_budget).solve(problem)? {
        Some(x) => Feasibility::checked(system, x),
        None => Feasibility::Infeasible,
    })
}
