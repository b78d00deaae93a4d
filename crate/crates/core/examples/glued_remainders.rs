//! Two-point compactification of the line by gluing, and the same built from a finite partition.

use gts_lab::carrier::{parse_interval_set as iv, IntervalSet};
use gts_lab::compactify::{compare, finite_remainder, two_point_glue, TotalSet};
use gts_lab::gts::LineGts;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = LineGts::rom();
    let g = two_point_glue(&x)?;
    println!("quotient lattice classes: {}", g.lattice.len());
    println!("psi: {:?}", g.psi);
    let line = TotalSet::line(IntervalSet::full());
    println!("line open: strong {}, wallmanian {}", g.strong.is_open(&line), g.wallmanian.is_open(&line));
    println!("closure law on [0,inf): {}", g.closure_law(&iv("[0,inf)")?));
    println!("wallmanian vs strong: {:?}", compare(&g.wallmanian, &g.strong, 4)?.verdict);

    let fr = finite_remainder(&x, &[iv("(-inf,-1)")?, iv("(1,inf)")?], &iv("[-1,1]")?)?;
    println!("finite remainder vs glue: {:?}", compare(&fr.strong, &g.strong, 4)?.verdict);
    Ok(())
}
