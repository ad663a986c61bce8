//! Exact integer feasibility: the solver behind the decision procedures.

use wmix::linarith::{homogeneous_nontrivial, ilp_feasible, IntMatrix, LinearSystem, Relation, DEFAULT_NODE_BUDGET};

fn main() -> wmix::Result<()> {
    // 2x + 3y = 7 with x, y ≥ 0
    let mut s = LinearSystem::new(2, 0);
    s.push_eq(vec![2, 3], 7);
    println!("{s}\n=> {:?}\n", ilp_feasible(&s, DEFAULT_NODE_BUDGET)?);

    // 1 ≤ 3x − 3y ≤ 2 has real but no integer solutions
    let mut s = LinearSystem::new(2, 0);
    s.push(vec![3, -3], Relation::Ge, 1);
    s.push(vec![3, -3], Relation::Le, 2);
    println!("{s}\n=> {:?}\n", ilp_feasible(&s, DEFAULT_NODE_BUDGET)?);

    // y ≥ 0, y ≠ 0 with y1 = 3 y2 and y2 = 3 y3
    let a = IntMatrix::new(3, vec![vec![1, -3, 0], vec![0, 1, -3]]);
    println!("kernel witness: {:?}", homogeneous_nontrivial(&a));
    Ok(())
}
