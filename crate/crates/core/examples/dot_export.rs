//! Graphviz output for an open-set lattice, a specialization order and a quotient lattice.

use gts_lab::carrier::{AtomSet, Carrier};
use gts_lab::gts::FiniteGts;
use gts_lab::lab::dot;
use gts_lab::ring::RingTag;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = Carrier::finite(["a", "b", "c"])?;
    let g = FiniteGts::topological(3, [0b000, 0b001, 0b011, 0b111].map(AtomSet))?;
    print!("{}", dot::open_lattice("chain opens", &x, &g));
    print!("{}", dot::specialization("chain order", &x, &g));
    print!("{}", dot::quotient_lattice(RingTag::RomClosed));
    Ok(())
}
