//! Test words for membership and show their occurrence counts.

use wmix::words::{diff, occ_vector};
use wmix::{is_member, Alphabet, ParamList};

fn main() -> wmix::Result<()> {
    let a = Alphabet::parse("ab")?;
    let p = ParamList::parse(&a, "ab,ba,a")?;
    for text in ["ε", "a", "aba", "babab", "abba", "bbabb"] {
        let w = a.word(text)?;
        let v = occ_vector(&w, &p);
        println!("{text:>6}: counts {v}, diff {}, member {}", diff(&v), is_member(&w, &p));
    }
    Ok(())
}
