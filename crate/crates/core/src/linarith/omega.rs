//! Integer feasibility by exact projection (the Omega test).
//!
//! Equalities are eliminated by substitution, shrinking coefficients with
//! the symmetric-remainder trick when no unit coefficient is available.
//! Inequalities are projected one variable at a time: exactly when a unit
//! coefficient makes the real and integer shadows coincide, and otherwise
//! through the real shadow (necessary), the dark shadow (sufficient) and
//! finitely many splinter problems covering the gap. Witnesses are rebuilt
//! while unwinding the eliminations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ coeffs·x + constant`, compared with zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Row {
    pub coeffs: Vec<BigInt>,
    pub constant: BigInt,
}

impl Row {
    fn value_without(&self, x: &[BigInt], skip: usize) -> BigInt {
        let mut v = self.constant.clone();
        for (i, (a, xi)) in self.coeffs.iter().zip(x).enumerate() {
            if i != skip && !a.is_zero() {
                v += a * xi;
            }
        }
        v
    }

    fn gcd(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// `p·self + q·other`.
    fn combine(&self, p: &BigInt, other: &Row, q: &BigInt) -> Row {
        Row {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| p * a + q * b).collect(),
            constant: p * &self.constant + q * &other.constant,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Problem {
    pub vars: usize,
    /// Rows required to equal zero.
    pub eqs: Vec<Row>,
    /// Rows required to be non-negative.
    pub geqs: Vec<Row>,
}

/// `a − m·⌊a/m + 1/2⌋`, the remainder of least absolute value.
fn mod_hat(a: &BigInt, m: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    a - m * (&two * a + m).div_floor(&(&two * m))
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Rewrites every row so that `x_k` disappears, using `def`, whose `x_k`
/// coefficient is `±1`.
fn substitute(p: &mut Problem, def: &Row, k: usize) {
    let unit = def.coeffs[k].clone();
    for row in p.eqs.iter_mut().chain(p.geqs.iter_mut()) {
        if !row.coeffs[k].is_zero() {
            let factor = -(&row.coeffs[k] * &unit);
            *row = row.combine(&BigInt::one(), def, &factor);
        }
    }
}

/// Value of `x_k` forced by `def` (unit coefficient on `x_k`).
fn solve_for(def: &Row, k: usize, x: &[BigInt]) -> BigInt {
    -(&def.coeffs[k] * def.value_without(x, k))
}

/// Divides rows by the gcd of their coefficients, merges parallel
/// inequalities, turns tight opposite pairs into equalities and detects
/// trivially contradictory rows. `None` means infeasible.
fn normalize(p: Problem) -> Option<Problem> {
    let mut eqs = Vec::with_capacity(p.eqs.len());
    for mut row in p.eqs {
        let g = row.gcd();
        if g.is_zero() {
            if !row.constant.is_zero() {
                return None;
            }
            continue;
        }
        if !row.constant.is_multiple_of(&g) {
            return None;
        }
        if !g.is_one() {
            row.coeffs.iter_mut().for_each(|a| *a /= &g);
            row.constant /= &g;
        }
        eqs.push(row);
    }
    let mut tightest: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    for row in p.geqs {
        let g = row.gcd();
        if g.is_zero() {
            if row.constant.is_negative() {
                return None;
            }
            continue;
        }
        let coeffs: Vec<BigInt> = row.coeffs.iter().map(|a| a / &g).collect();
        let constant = row.constant.div_floor(&g);
        tightest
            .entry(coeffs)
            .and_modify(|c| {
                if constant < *c {
                    *c = constant.clone();
                }
            })
            .or_insert(constant);
    }
    let mut geqs = Vec::with_capacity(tightest.len());
    let mut paired: Vec<Vec<BigInt>> = Vec::new();
    for (coeffs, constant) in &tightest {
        let negated: Vec<BigInt> = coeffs.iter().map(|a| -a).collect();
        if let Some(other) = tightest.get(&negated) {
            let width = constant + other;
            if width.is_negative() {
                return None;
            }
            if width.is_zero() {
                if coeffs > &negated {
                    eqs.push(Row { coeffs: coeffs.clone(), constant: constant.clone() });
                }
                paired.push(coeffs.clone());
                continue;
            }
        }
        geqs.push(Row { coeffs: coeffs.clone(), constant: constant.clone() });
    }
    if !paired.is_empty() {
        geqs.retain(|r| !paired.contains(&r.coeffs));
    }
    Some(Problem { vars: p.vars, eqs, geqs })
}

pub(crate) struct Omega {
    budget: u64,
    nodes: u64,
}

impl Omega {
    pub fn new(budget: u64) -> Self {
        Omega { budget, nodes: 0 }
    }

    /// An integer point satisfying every row, or `None` if there is none.
    pub fn solve(&mut self, p: Problem) -> Result<Option<Vec<BigInt>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!("{} projection steps", self.budget)));
        }
        let Some(p) = normalize(p) else { return Ok(None) };
        if p.eqs.is_empty() {
            self.inequalities(p)
        } else {
            self.equalities(p)
        }
    }

    fn equalities(&mut self, mut p: Problem) -> Result<Option<Vec<BigInt>>> {
        let (ei, k) = p
            .eqs
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(move |(k, _)| (i, k)))
            .min_by_key(|&(i, k)| p.eqs[i].coeffs[k].abs())
            .expect("normalized equalities have a non-zero coefficient");
        let a = p.eqs[ei].coeffs[k].clone();
        if a.abs().is_one() {
            let def = p.eqs.remove(ei);
            substitute(&mut p, &def, k);
            return Ok(self.solve(p)?.map(|mut x| {
                x[k] = solve_for(&def, k, &x);
                x
            }));
        }
        // m·σ = Σ mod̂(a_i, m)·x_i + mod̂(c, m) holds for every solution of
        // the chosen equality; its x_k coefficient is ±1.
        let m = a.abs() + BigInt::one();
        let sigma = p.vars;
        p.vars += 1;
        for row in p.eqs.iter_mut().chain(p.geqs.iter_mut()) {
            row.coeffs.push(BigInt::zero());
        }
        let e = &p.eqs[ei];
        let mut coeffs: Vec<BigInt> = e.coeffs[..sigma].iter().map(|c| mod_hat(c, &m)).collect();
        coeffs.push(-m.clone());
        let def = Row { coeffs, constant: mod_hat(&e.constant, &m) };
        substitute(&mut p, &def, k);
        Ok(self.solve(p)?.map(|mut x| {
            x[k] = solve_for(&def, k, &x);
            x.truncate(sigma);
            x
        }))
    }

    fn inequalities(&mut self, mut p: Problem) -> Result<Option<Vec<BigInt>>> {
        if p.geqs.is_empty() {
            return Ok(Some(vec![BigInt::zero(); p.vars]));
        }
        let mut bounds = vec![(0usize, 0usize, true, true); p.vars];
        for row in &p.geqs {
            for (j, a) in row.coeffs.iter().enumerate() {
                let entry = &mut bounds[j];
                if a.is_positive() {
                    entry.0 += 1;
                    entry.2 &= a.is_one();
                } else if a.is_negative() {
                    entry.1 += 1;
                    entry.3 &= (-a).is_one();
                }
            }
        }
        let active = |j: &usize| bounds[*j].0 + bounds[*j].1 > 0;

        if let Some(j) = (0..p.vars).filter(active).find(|&j| bounds[j].0 == 0 || bounds[j].1 == 0) {
            // x_j is unbounded on one side: its rows can always be met.
            let (touching, rest): (Vec<Row>, Vec<Row>) = p.geqs.into_iter().partition(|r| !r.coeffs[j].is_zero());
            p.geqs = rest;
            return Ok(self.solve(p)?.map(|mut x| {
                x[j] = if bounds[j].0 > 0 { lowest(&touching, j, &x) } else { highest(&touching, j, &x) };
                x
            }));
        }

        let j = (0..p.vars)
            .filter(active)
            .min_by_key(|&j| {
                let (lo, hi, unit_lo, unit_hi) = bounds[j];
                (!(unit_lo || unit_hi), lo * hi)
            })
            .expect("some variable is active");
        let exact = bounds[j].2 || bounds[j].3;
        let mut others = Vec::new();
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        for row in &p.geqs {
            match row.coeffs[j].sign() {
                num_bigint::Sign::Plus => lowers.push(row.clone()),
                num_bigint::Sign::Minus => uppers.push(row.clone()),
                num_bigint::Sign::NoSign => others.push(row.clone()),
            }
        }
        let shadow = |dark: bool| {
            let mut rows = others.clone();
            for l in &lowers {
                for u in &uppers {
                    let (b, a) = (l.coeffs[j].clone(), -&u.coeffs[j]);
                    let mut r = l.combine(&a, u, &b);
                    if dark {
                        r.constant -= (&a - 1) * (&b - 1);
                    }
                    rows.push(r);
                }
            }
            Problem { vars: p.vars, eqs: Vec::new(), geqs: rows }
        };

        if exact {
            return Ok(self.solve(shadow(false))?.map(|mut x| {
                x[j] = lowest(&lowers, j, &x);
                x
            }));
        }
        if self.solve(shadow(false))?.is_none() {
            return Ok(None);
        }
        if let Some(mut x) = self.solve(shadow(true))? {
            x[j] = lowest(&lowers, j, &x);
            return Ok(Some(x));
        }
        // Integer points missed by the dark shadow lie close to a lower
        // bound: b·x_j = β + i for small i.
        let a_max = uppers.iter().map(|u| -&u.coeffs[j]).max().expect("x_j has upper bounds");
        for l in &lowers {
            let b = &l.coeffs[j];
            let limit = (&a_max * b - &a_max - b).div_floor(&a_max);
            let mut i = BigInt::zero();
            while i <= limit {
                let mut splinter = p.clone();
                splinter.eqs.push(Row { coeffs: l.coeffs.clone(), constant: &l.constant - &i });
                if let Some(x) = self.solve(splinter)? {
                    return Ok(Some(x));
                }
                i += 1;
            }
        }
        Ok(None)
    }
}

/// Least `x_j` meeting every lower-bound row `b·x_j + R ≥ 0`.
fn lowest(rows: &[Row], j: usize, x: &[BigInt]) -> BigInt {
    rows.iter()
        .map(|r| ceil_div(&-r.value_without(x, j), &r.coeffs[j]))
        .max()
        .expect("at least one bound")
}

/// Greatest `x_j` meeting every upper-bound row `−a·x_j + R ≥ 0`.
fn highest(rows: &[Row], j: usize, x: &[BigInt]) -> BigInt {
    rows.iter()
        .map(|r| r.value_without(x, j).div_floor(&-&r.coeffs[j]))
        .min()
        .expect("at least one bound")
}
