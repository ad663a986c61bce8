//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use wmix::linarith::{IntMatrix, LinearSystem, Relation};
use wmix::{Alphabet, Digraph, ParamList, Walk, Word};

/// Overlapping occurrences of `v` in `w` by sliding a window.
pub fn naive_count(w: &str, v: &str) -> usize {
    let (w, v) = (w.as_bytes(), v.as_bytes());
    if v.len() > w.len() {
        return 0;
    }
    w.windows(v.len()).filter(|win| *win == v).count()
}

/// Membership by counting each parameter word in the rendered text.
pub fn naive_member(w: &str, words: &[&str]) -> bool {
    let w = if w == "ε" { "" } else { w };
    let counts: Vec<usize> = words.iter().map(|v| naive_count(w, v)).collect();
    counts.windows(2).all(|p| p[0] == p[1])
}

pub fn list(alphabet: &str, words: &str) -> ParamList {
    ParamList::parse(&Alphabet::parse(alphabet).unwrap(), words).unwrap()
}

pub fn render_all(a: &Alphabet, ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| a.render(w)).collect()
}

/// All words over a single-character alphabet of length exactly `len`.
pub fn strings_of_length(alphabet: &str, len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|p| alphabet.chars().map(move |c| format!("{p}{c}"))).collect();
    }
    out
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &str, len: usize) -> String {
    let syms: Vec<char> = alphabet.chars().collect();
    (0..len).map(|_| syms[rng.gen_range(0..syms.len())]).collect()
}

/// A uniformly stepped random walk with `len` edges.
pub fn random_walk<G: Digraph, R: Rng>(g: &G, rng: &mut R, len: usize) -> Walk {
    let mut v = rng.gen_range(0..g.vertex_count());
    let mut vs = vec![v];
    for _ in 0..len {
        let succ = g.successors(v);
        v = succ[rng.gen_range(0..succ.len())];
        vs.push(v);
    }
    Walk::new(g, vs).unwrap()
}

pub fn random_system<R: Rng>(rng: &mut R) -> LinearSystem {
    let vars = rng.gen_range(1..=4);
    let lower = (0..vars).map(|_| rng.gen_range(-1..=1)).collect();
    let mut s = LinearSystem::with_lower(lower);
    for _ in 0..rng.gen_range(1..=4) {
        let coeffs = (0..vars).map(|_| rng.gen_range(-3..=3)).collect();
        let relation = [Relation::Eq, Relation::Ge, Relation::Le][rng.gen_range(0..3)];
        s.push(coeffs, relation, rng.gen_range(-3..=3));
    }
    s
}

pub fn random_matrix<R: Rng>(rng: &mut R) -> IntMatrix {
    let cols = rng.gen_range(1..=4);
    let rows = (0..rng.gen_range(1..=4)).map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    IntMatrix::new(cols, rows)
}

/// Checks a candidate solution with plain integer arithmetic.
pub fn evaluates(s: &LinearSystem, x: &[i128]) -> bool {
    x.len() == s.vars
        && x.iter().zip(&s.lower).all(|(v, l)| *v >= *l as i128)
        && s.rows.iter().all(|r| {
            let lhs: i128 = r.coeffs.iter().zip(x).map(|(a, v)| *a as i128 * v).sum();
            let rhs = r.rhs as i128;
            match r.relation {
                Relation::Eq => lhs == rhs,
                Relation::Ge => lhs >= rhs,
                Relation::Le => lhs <= rhs,
            }
        })
}

/// `t ∈ [0, 1]` with `‖p − t·b‖∞ ≤ r`, decided with exact fractions.
fn in_tube(p: &[i64], b: &[i64], r: i64) -> bool {
    // lo = lo_n / lo_d, hi = hi_n / hi_d, denominators positive
    let (mut lo_n, mut lo_d, mut hi_n, mut hi_d) = (0i128, 1i128, 1i128, 1i128);
    for (&pi, &bi) in p.iter().zip(b) {
        let (pi, bi, r) = (pi as i128, bi as i128, r as i128);
        if bi == 0 {
            if pi.abs() > r {
                return false;
            }
            continue;
        }
        let (mut a_n, mut b_n, d) = (pi - r, pi + r, bi);
        let d = if d < 0 {
            (a_n, b_n) = (-b_n, -a_n);
            -d
        } else {
            d
        };
        if a_n * lo_d > lo_n * d {
            (lo_n, lo_d) = (a_n, d);
        }
        if b_n * hi_d < hi_n * d {
            (hi_n, hi_d) = (b_n, d);
        }
    }
    lo_n * hi_d <= hi_n * lo_d
}

/// Reachability of `target` from the origin by adding columns, staying in
/// the tube of radius `m·Δ` around the segment `[0, target]`. By the
/// Steinitz lemma some ordering of any solution's columns stays inside, and
/// the tube is finite, so the search is complete.
fn tube_reachable(cols: &[Vec<i64>], target: &[i64]) -> bool {
    let m = target.len() as i64;
    let delta = cols.iter().flatten().map(|v| v.abs()).max().unwrap_or(0);
    if delta == 0 {
        return target.iter().all(|&t| t == 0);
    }
    let r = m * delta;
    let origin = vec![0; target.len()];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([origin.clone()]);
    let mut queue = VecDeque::from([origin]);
    while let Some(p) = queue.pop_front() {
        if p == target {
            return true;
        }
        for c in cols {
            let q: Vec<i64> = p.iter().zip(c).map(|(a, b)| a + b).collect();
            if in_tube(&q, target, r) && seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    false
}

/// `∃ x ∈ ℤ^n, x ≥ lower`, satisfying every row.
pub fn steinitz_feasible(s: &LinearSystem) -> bool {
    let m = s.rows.len();
    if m == 0 {
        return true;
    }
    let target: Vec<i64> = s
        .rows
        .iter()
        .map(|r| r.rhs - r.coeffs.iter().zip(&s.lower).map(|(a, l)| a * l).sum::<i64>())
        .collect();
    let mut cols: Vec<Vec<i64>> = (0..s.vars).map(|j| s.rows.iter().map(|r| r.coeffs[j]).collect()).collect();
    for (i, r) in s.rows.iter().enumerate() {
        let sign = match r.relation {
            Relation::Eq => continue,
            Relation::Ge => -1,
            Relation::Le => 1,
        };
        let mut e = vec![0; m];
        e[i] = sign;
        cols.push(e);
    }
    cols.retain(|c| c.iter().any(|&v| v != 0));
    tube_reachable(&cols, &target)
}

/// `∃ y ∈ ℕ^n, y ≠ 0, A y = 0`: some non-empty column sequence returns to
/// the origin inside the ball of radius `m·Δ`.
pub fn steinitz_homogeneous(a: &IntMatrix) -> bool {
    let m = a.rows.len();
    let cols: Vec<Vec<i64>> = (0..a.cols).map(|j| a.rows.iter().map(|r| r[j]).collect()).collect();
    if cols.is_empty() {
        return false;
    }
    if m == 0 || cols.iter().any(|c| c.iter().all(|&v| v == 0)) {
        return true;
    }
    let r = m as i64 * cols.iter().flatten().map(|v| v.abs()).max().unwrap();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for c in &cols {
        if seen.insert(c.clone()) {
            queue.push_back(c.clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        if p.iter().all(|&v| v == 0) {
            return true;
        }
        for c in &cols {
            let q: Vec<i64> = p.iter().zip(c).map(|(a, b)| a + b).collect();
            if q.iter().all(|v| v.abs() <= r) && seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    false
}
