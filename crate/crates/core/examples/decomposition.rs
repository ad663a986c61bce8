//! Split a walk into a path and cycles, then splice it back together.

use wmix::{comp, dec, DeBruijnGraph, Alphabet};

fn main() -> wmix::Result<()> {
    let a = Alphabet::parse("ab")?;
    let g = DeBruijnGraph::build(&a, 2)?;
    let walk = g.walk_of_word(&a.word("ab")?, &a.word("aabbabab")?)?;
    let show = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");

    println!("walk:   {}", show(walk.vertices()));
    let d = dec(&g, &walk)?;
    println!("path:   {}", show(d.path.vertices()));
    for (i, c) in d.cycles.iter().enumerate() {
        println!("cycle {}: {}", i + 1, show(c.vertices()));
    }
    let back = comp(&g, d.path.walk(), &d.cycles)?;
    assert_eq!(back, walk);
    println!("comp(dec(walk)) = walk");
    Ok(())
}
