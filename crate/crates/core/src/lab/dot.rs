//! Graphviz output for finite lattices and specialization orders.

use std::fmt::Write;

use crate::carrier::{AtomSet, Carrier};
use crate::compactify::QuotientLattice;
use crate::gts::FiniteGts;
use crate::ring::RingTag;

fn covers(sets: &[AtomSet]) -> Vec<(usize, usize)> {
    let below = |a: AtomSet, b: AtomSet| a != b && a.is_subset_of(b);
    let mut out = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if below(a, b) && !sets.iter().any(|&c| below(a, c) && below(c, b)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of a family of subsets ordered by inclusion, edges pointing upwards.
pub fn hasse(name: &str, carrier: &Carrier, sets: &[AtomSet]) -> String {
    let mut sets = sets.to_vec();
    sets.sort();
    sets.dedup();
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (i, &s) in sets.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(&carrier.show(s)));
    }
    for (i, j) in covers(&sets) {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

/// Opens of the generated topology.
pub fn open_lattice(name: &str, carrier: &Carrier, g: &FiniteGts) -> String {
    hasse(name, carrier, &g.topology())
}

pub fn closed_lattice(name: &str, carrier: &Carrier, g: &FiniteGts) -> String {
    hasse(name, carrier, &g.closed_sets())
}

/// `x -> y` when `x` lies in the closure of `{y}`, reflexive pairs and transitive edges dropped.
pub fn specialization(name: &str, carrier: &Carrier, g: &FiniteGts) -> String {
    let n = g.n();
    let le = |x: usize, y: usize| g.closure(AtomSet::singleton(y)).contains(x);
    let mut out = format!("digraph {} {{\n", quote(name));
    for i in 0..n {
        let _ = writeln!(out, "  p{i} [label={}];", quote(&carrier.show(AtomSet::singleton(i))));
    }
    for x in 0..n {
        for y in 0..n {
            if x == y || !le(x, y) {
                continue;
            }
            let skip = (0..n).any(|z| z != x && z != y && le(x, z) && le(z, y) && !(le(z, x) && le(y, z)));
            if !skip {
                let _ = writeln!(out, "  p{x} -> p{y};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The lattice of closed sets of an interval ring modulo compact differences.
pub fn quotient_lattice(tag: RingTag) -> String {
    let q = QuotientLattice::for_ring(tag);
    let k = q.len();
    let le = |a: usize, b: usize| a != b && q.meet(a, b) == a;
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(&format!("{tag} quotient")));
    for (i, r) in q.reps().iter().enumerate() {
        let _ = writeln!(out, "  c{i} [label={}];", quote(&format!("[{r}]")));
    }
    for a in 0..k {
        for b in 0..k {
            if le(a, b) && !(0..k).any(|c| le(a, c) && le(c, b)) {
                let _ = writeln!(out, "  c{a} -> c{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(dot: &str) -> usize {
        dot.matches("->").count()
    }

    #[test]
    fn boolean_square() {
        let x = Carrier::indexed(2);
        let d = open_lattice("d", &x, &FiniteGts::discrete(2));
        assert_eq!(d.matches("label=").count(), 4);
        assert_eq!(edges(&d), 4);
        assert!(d.starts_with("digraph \"d\""));
    }

    #[test]
    fn sierpinski_specialization() {
        let x = Carrier::indexed(2);
        let g = FiniteGts::topological(2, [AtomSet::EMPTY, AtomSet::singleton(1), AtomSet::full(2)]).unwrap();
        let d = specialization("s", &x, &g);
        assert_eq!(edges(&d), 1);
        assert!(d.contains("p0 -> p1"));
        assert_eq!(edges(&specialization("t", &x, &FiniteGts::indiscrete(2))), 2);
    }

    #[test]
    fn quotient_is_connected() {
        for tag in [RingTag::RomClosed, RingTag::C0Rom, RingTag::BoundedRom] {
            let d = quotient_lattice(tag);
            let nodes = d.matches("label=").count();
            assert!(nodes == 1 || edges(&d) >= nodes - 1, "{d}");
        }
    }
}
