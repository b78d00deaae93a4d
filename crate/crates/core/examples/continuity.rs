//! Continuity notions for finite maps and line maps, and Wallman extensions.

use gts_lab::carrier::q;
use gts_lab::gts::{FiniteGts, LineGts, Space};
use gts_lab::morphisms::{continuity, hierarchy_facts, wallman_extension, ContinuityKind, Extension, FiniteMap, GtsMap, PlMap};

fn show(e: &Extension) -> String {
    match e {
        Extension::Finite(t) => format!("extends, Wallman points map by {t:?}"),
        Extension::Line(ends) => ends.iter().map(|(a, b)| format!("{a} -> {b}")).collect::<Vec<_>>().join(", "),
        Extension::NoExtension(w) => format!("no extension: {w}"),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (x, y) = (Space::Finite(FiniteGts::discrete(3)), Space::Finite(FiniteGts::discrete(2)));
    let f = GtsMap::Finite(FiniteMap::new(vec![0, 1, 1], 2)?);
    let h = hierarchy_facts(&f, &x, &y)?;
    println!("{f}: strict {:?} weak {:?} w {:?} W {:?}", h.strict, h.weak, h.small_w, h.big_w);
    println!("  {}", show(&wallman_extension(&f, &x, &y)?));

    let id = GtsMap::PiecewiseLinear(PlMap::identity());
    let (rom, rom_top, c0) = (Space::Line(LineGts::rom()), Space::Line(LineGts::rom_topological()), Space::Line(LineGts::c0()));
    for kind in [ContinuityKind::Strict, ContinuityKind::SmallW, ContinuityKind::BigW] {
        match continuity(&id, &rom, &rom_top, kind) {
            Ok(c) => println!("identity rom -> rom-top, {}: {}", kind.name(), c.is_ok()),
            Err(e) => println!("identity rom -> rom-top, {}: not decidable here ({e})", kind.name()),
        }
    }
    println!("identity c0 -> rom: {}", show(&wallman_extension(&id, &c0, &rom)?));
    let ramp = GtsMap::PiecewiseLinear(PlMap::ramp(q(0), q(1))?);
    println!("ramp rom -> rom strict: {:?}", continuity(&ramp, &rom, &rom, ContinuityKind::Strict)?.is_ok());
    println!("ramp on free points: {}", show(&wallman_extension(&ramp, &rom, &rom)?));
    Ok(())
}
