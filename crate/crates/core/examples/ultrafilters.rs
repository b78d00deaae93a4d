//! Ultrafilters of a finite ring and the point classes of the interval rings.

use gts_lab::carrier::{parse_interval_set, q};
use gts_lab::filters::{enumerate_ultrafilters, maximal_completion, FilterInRing, LineWallman, WallmanSpace};
use gts_lab::gts::FiniteGts;
use gts_lab::ring::RingTag;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // closed sets of the Sierpinski space on {0, 1} with 0 open
    let g = FiniteGts::topological(2, [0b00, 0b01, 0b11].map(gts_lab::carrier::AtomSet))?;
    let ring = g.closed_ring();
    println!("ultrafilters: {:?}", enumerate_ultrafilters(&ring)?);
    let w = WallmanSpace::new(&ring)?;
    for x in 0..g.n() {
        println!("  w({x}) = {:?}", w.embed(&ring, x));
    }
    let f = FilterInRing::new(&ring, vec![ring.full()])?;
    println!("completion of the trivial filter: {:?}", maximal_completion(&ring, &f).map(|m| m.len()));

    for tag in RingTag::ALL {
        let lw = LineWallman::new(tag)?;
        println!("{tag}: classes {:?}, {} free points, compact {}", lw.classes(), lw.free_points().len(), lw.is_compact_certified());
    }
    let lw = LineWallman::new(RingTag::RomClosed)?;
    let a = parse_interval_set("[1,inf)")?;
    println!("points in the class of {a}: {:?}", lw.class_points(&a, &[q(0), q(2)]));
    Ok(())
}
