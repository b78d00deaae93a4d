//! Products of finite spaces, their projections, and an evaluation embedding.

use gts_lab::carrier::AtomSet;
use gts_lab::gts::FiniteGts;
use gts_lab::morphisms::FiniteMap;
use gts_lab::products::{evaluation_embedding, product, ProductMode, ProductSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sierpinski = FiniteGts::topological(2, [0b00, 0b01, 0b11].map(AtomSet))?;
    let discrete = FiniteGts::discrete(2);
    for mode in [ProductMode::Gts, ProductMode::GtsPt] {
        let p = product(&ProductSpec::new(vec![sierpinski.clone(), discrete.clone()], mode))?;
        let opens: Vec<String> = p.gts().topology().iter().map(|o| o.to_string()).collect();
        println!("{mode:?}: {} points, opens {}", p.n(), opens.join(" "));
        println!("  tychonoff topologization: {}", p.topologization_is_tychonoff());
        println!("  cylinder over {{0}} in factor 0: {}", p.cylinder(0, AtomSet::singleton(0)));
    }
    let x = FiniteGts::discrete(2);
    let family = vec![(FiniteMap::identity(2), discrete.clone()), (FiniteMap::new(vec![0, 0], 2)?, sierpinski)];
    let e = evaluation_embedding(&x, &family)?;
    println!("evaluation map {:?}: continuous {:?}, embedding {:?}", e.map.table(), e.strictly_continuous.is_ok(), e.embedding.is_ok());
    Ok(())
}
