//! Count members of a language by length with the exhaustive oracle.

use wmix::oracle::{census, enumerate_members, DEFAULT_ORACLE_BUDGET};
use wmix::{Alphabet, ParamList};

fn main() -> wmix::Result<()> {
    let a = Alphabet::parse("ab")?;
    for list in ["ab,ba", "ab,ba,a", "ab,ba,a,b"] {
        let p = ParamList::parse(&a, list)?;
        let c = census(&p, 10, DEFAULT_ORACLE_BUDGET)?;
        println!("M({list}) counts by length: {:?}", c.counts);
    }
    let p = ParamList::parse(&a, "ab,ba,a")?;
    let members: Vec<String> = enumerate_members(&p, 7, DEFAULT_ORACLE_BUDGET)?.iter().map(|w| a.render(w)).collect();
    println!("M(ab,ba,a) up to length 7: {}", members.join(" "));
    Ok(())
}
