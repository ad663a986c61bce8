//! Compare two Word-MIX languages and print a separating word if they differ.

use wmix::words::occ_vector;
use wmix::{decide_equivalence, Alphabet, Caps, EquivalenceVerdict, ParamList};

fn main() -> wmix::Result<()> {
    let a = Alphabet::parse("ab")?;
    for (first, second) in [("ab,ba,a", "ab,ba,a,b"), ("ab,ba", "ba,ab"), ("a,b", "ab,ba")] {
        let (p1, p2) = (ParamList::parse(&a, first)?, ParamList::parse(&a, second)?);
        let report = decide_equivalence(&p1, &p2, &Caps::default())?;
        match report.verdict {
            EquivalenceVerdict::Equal { traces } => println!("M({first}) = M({second})  [{traces} traces]"),
            EquivalenceVerdict::NotEqual { witness, in_first } => {
                let side = if in_first { "first" } else { "second" };
                println!(
                    "M({first}) ≠ M({second}): {:?} only in the {side} (counts {} vs {})",
                    a.render(&witness),
                    occ_vector(&witness, &p1),
                    occ_vector(&witness, &p2)
                );
            }
            EquivalenceVerdict::Unknown { cap } => println!("M({first}) ? M({second}): {cap}"),
        }
    }
    Ok(())
}
