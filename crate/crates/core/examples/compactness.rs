//! Finite subcovers on the unit interval and a certified failure on the whole line.

use gts_lab::carrier::{qf, IntervalSet};
use gts_lab::gts::{Adverb, AffineChain, Compactness, LineFamily, LineGts};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let i = LineGts::i_rom();
    let cover: Vec<IntervalSet> = (0..8).map(|k| IntervalSet::open(qf(k - 1, 7), qf(k + 1, 7))).collect();
    let r = i.compactness(&i.carrier(), &LineFamily::Explicit(cover), Adverb::Admissible)?;
    if let Compactness::FiniteSubcover(sub) = r {
        let parts: Vec<String> = sub.iter().map(|s| s.to_string()).collect();
        println!("unit interval: finite subcover {}", parts.join(", "));
    }

    let x = LineGts::rom();
    let chain = LineFamily::Chain(AffineChain::symmetric());
    match x.compactness(&x.carrier(), &chain, Adverb::Absolute)? {
        Compactness::NoFiniteSubcover(cert) => println!("line, absolute: no finite subcover, certificate confirms {}", cert.confirm()),
        other => println!("line, absolute: {other:?}"),
    }
    println!("line, admissible: {:?}", x.compactness(&x.carrier(), &chain, Adverb::Admissible));
    Ok(())
}
