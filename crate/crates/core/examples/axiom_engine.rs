//! Check explicit families against the axioms, then repair them by generation.

use gts_lab::carrier::AtomSet;
use gts_lab::gts::axioms::generate;
use gts_lab::gts::{Family, FiniteGts};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;
    let s = |atoms: &[usize]| AtomSet::from_atoms(atoms.iter().copied());
    let seed = vec![Family::from_sets([s(&[0]), s(&[1])]), Family::from_sets([s(&[1, 2])])];
    let raw = FiniteGts::explicit(n, seed.iter().copied())?;
    match raw.check_axioms() {
        Ok(()) => println!("raw families already form a gts"),
        Err(v) => println!("raw families rejected: {v} (confirmed: {})", v.confirm(&raw, None)),
    }
    let g = generate(n, &seed);
    println!("generated: {g}");
    println!("  axioms: {:?}", g.check_axioms());
    println!("  opens: {:?}", g.op().iter().map(|o| o.to_string()).collect::<Vec<_>>());
    println!("  small: {}, topological: {}", g.is_small(), g.is_topological());
    let small = g.smallify();
    println!("smallified: {small}, axioms {:?}", small.check_axioms());
    println!("topologized opens: {:?}", g.topologize().op().iter().map(|o| o.to_string()).collect::<Vec<_>>());
    Ok(())
}
