//! Build a de Bruijn graph, read a word as a walk and count occurrences
//! along it.

use wmix::debruijn::walk_occ;
use wmix::words::occ_vector;
use wmix::{Alphabet, DeBruijnGraph, Digraph, ParamList};

fn main() -> wmix::Result<()> {
    let a = Alphabet::parse("01")?;
    let g = DeBruijnGraph::build(&a, 3)?;
    println!("D^3 over {a}: {} vertices, {} edges", g.vertex_count(), g.edge_count());

    let p = ParamList::parse(&a, "00,11,000,111")?;
    let w = a.word("0001110")?;
    let (start, rest) = w.as_slice().split_at(3);
    let walk = g.walk_of_word(&start.to_vec().into(), &rest.to_vec().into())?;
    let labels: Vec<String> = walk.vertices().iter().map(|&v| g.label(v)).collect();
    println!("walk of {}: {}", a.render(&w), labels.join(" -> "));
    println!("occurrences in the word:          {}", occ_vector(&w, &p));
    println!("occurrences gained along the walk: {}", walk_occ(&g, &walk, &p));

    if std::env::args().any(|s| s == "--dot") {
        print!("{}", DeBruijnGraph::build(&a, 2)?.to_dot());
    }
    Ok(())
}
