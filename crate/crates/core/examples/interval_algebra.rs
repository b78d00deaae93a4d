//! Exact Boolean algebra on finite unions of rational intervals.

use gts_lab::carrier::{parse_interval_set, qf, IntervalSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_interval_set("(-inf,0] u [1/2,3)")?;
    let b = parse_interval_set("(-1,1]")?;
    println!("a        = {a}");
    println!("b        = {b}");
    println!("a u b    = {}", a.union(&b));
    println!("a n b    = {}", a.intersect(&b));
    println!("a - b    = {}", a.difference(&b));
    println!("a xor b  = {}", a.symmetric_difference(&b));
    println!("R - a    = {}", a.complement());
    println!("closure(a) = {}, closed: {}", a.closure(), a.is_closed());

    // De Morgan, checked extensionally at the cut points and between them
    let lhs = a.union(&b).complement();
    let rhs = a.complement().intersect(&b.complement());
    let cuts: Vec<_> = lhs.endpoints().into_iter().chain(rhs.endpoints()).collect();
    let agree = IntervalSet::probes(&cuts).iter().all(|p| lhs.contains_point(p) == rhs.contains_point(p));
    println!("De Morgan holds: {} (normal forms equal: {})", agree, lhs == rhs);
    println!("components of a u b: {}", a.union(&b).component_count());
    println!("1/3 in a: {}, 5/2 in a: {}", a.contains_point(&qf(1, 3)), a.contains_point(&qf(5, 2)));
    Ok(())
}
