//! One-point compactifications of the line models and of a bounded-interval variant.

use gts_lab::carrier::IntervalSet;
use gts_lab::compactify::line::{alexandroff_report, bounded_interval_compactification};
use gts_lab::compactify::{alexandroff_strict, compare, TotalSet};
use gts_lab::gts::LineGts;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for x in [LineGts::rom(), LineGts::c0()] {
        let b = alexandroff_strict(&x)?;
        println!("{:?}: {:?}", x.kind(), alexandroff_report(&b));
        match b.additivity().finitely {
            Ok(()) => println!("  finitely additive"),
            Err((u, v)) => println!("  not finitely additive: Ex({u} u {v}) is larger than Ex({u}) u Ex({v})"),
        }
    }
    let y = bounded_interval_compactification();
    let alex = alexandroff_strict(y.base())?;
    let cmp = compare(&alex, &y, 4)?;
    println!("bounded-interval bundle vs one-point: {:?}", cmp.verdict);
    if let Some((v, open_in_first)) = &cmp.witness {
        println!("  witness: {} open only in the {}", y.show(v), if *open_in_first { "one-point bundle" } else { "bounded-interval bundle" });
    }
    println!("  line open in bounded-interval bundle: {}", y.is_open(&TotalSet::line(IntervalSet::full())));
    Ok(())
}
