//! Decide whether a Word-MIX language is infinite and pump its witnesses.
//!
//! `cargo run --example finiteness -- ab ab,ba,a`

use wmix::{decide_finiteness, is_member, witness_family, Alphabet, Caps, FinitenessVerdict, ParamList};

fn main() -> wmix::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (alphabet, list) = match args.as_slice() {
        [a, l] => (a.as_str(), l.as_str()),
        _ => ("ab", "ab,ba,a"),
    };
    let a = Alphabet::parse(alphabet)?;
    let p = ParamList::parse(&a, list)?;
    let report = decide_finiteness(&p, &Caps::default())?;
    println!("M({}) over {a}, {} traces checked", p.render(), report.stats.traces_checked);
    match report.verdict {
        FinitenessVerdict::Infinite(cert) => {
            println!("infinite: {}", cert.render(&p));
            for n in 1..=4 {
                let w = witness_family(&cert, &p, n)?;
                assert!(is_member(&w, &p));
                println!("  n={n}: {}", a.render(&w));
            }
        }
        FinitenessVerdict::Finite { traces } => println!("finite: all {traces} traces rejected"),
        FinitenessVerdict::Unknown { cap } => println!("unknown: {cap}"),
    }
    Ok(())
}
