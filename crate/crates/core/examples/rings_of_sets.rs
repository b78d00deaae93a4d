//! Enumerate the complete rings on a three-point carrier and classify each as a closed base.

use gts_lab::lab::enumerate_complete_rings;
use gts_lab::ring::{RingTag, WallmanFailure};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rings = enumerate_complete_rings(3)?;
    println!("{} complete rings on 3 points", rings.len());
    for (i, r) in rings.iter().enumerate() {
        let members: Vec<String> = r.members().iter().map(|m| m.to_string()).collect();
        let verdict = match r.wallman_failure() {
            None => "wallman base".to_string(),
            Some(WallmanFailure::NotClosedBase { closed, point }) => format!("not a closed base: {closed} / point {point}"),
            Some(other) => format!("{other:?}"),
        };
        println!("{i:>2}  {:<42} disjunctive={:<5} {verdict}", members.join(" "), r.is_disjunctive().is_ok());
    }
    for tag in RingTag::ALL {
        println!("{tag}: wallman failure {:?}", tag.wallman_failure());
    }
    Ok(())
}
