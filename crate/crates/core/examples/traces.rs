//! Enumerate the traces of a de Bruijn graph level by level.

use wmix::{enumerate_traces, Alphabet, DeBruijnGraph, TraceLimits};

fn main() -> wmix::Result<()> {
    let a = Alphabet::parse("ab")?;
    let g = DeBruijnGraph::build(&a, 2)?;
    let mut it = enumerate_traces(&g, TraceLimits::default())?;
    println!("{} paths, {} cycles", it.paths().len(), it.cycles().len());
    let mut total = 0;
    while let Some(level) = it.next_level() {
        let level = level?;
        total += level.traces.len();
        println!("{:>2} cycles: {:>4} traces", level.size, level.traces.len());
        if let Some((key, t)) = level.traces.first() {
            let walk: Vec<String> = t.walk().vertices().iter().map(|&v| g.label(v)).collect();
            println!("           first {key:?}: {}", walk.join(" "));
        }
    }
    println!("total: {total}");
    Ok(())
}
