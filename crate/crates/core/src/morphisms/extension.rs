//! Extending maps over dense supersets and over Wallman spaces.

use crate::carrier::AtomSet;
use crate::filters::{maximal_completion, FilterInRing, LineWallman, WallmanPoint, WallmanSpace};
use crate::gts::{relabel, End, FiniteGts, LineGts, Space};
use crate::ring::RingTag;

use super::continuity::{continuity, ContinuityKind};
use super::maps::{FiniteMap, GtsMap, PlMap};
use super::{MorphismError, Witness};

/// The separation condition on a closed base and, independently, a continuous extension
/// found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaimanovReport {
    pub condition: bool,
    /// Disjoint base members whose pulled-back closures meet.
    pub failing_pair: Option<(AtomSet, AtomSet)>,
    /// A continuous extension as a table on all atoms of the superset.
    pub extension: Option<Vec<usize>>,
}

impl TaimanovReport {
    /// The condition holds exactly when an extension exists.
    pub fn agrees(&self) -> bool {
        self.condition == self.extension.is_some()
    }
}

fn lift(x_mask: AtomSet, s: AtomSet) -> AtomSet {
    let atoms: Vec<usize> = x_mask.atoms().collect();
    AtomSet::from_atoms(s.atoms().map(|i| atoms[i]))
}

/// `f` is defined on the atoms of `x_mask` (in increasing order), a dense subset of `t`, and
/// maps into the compact Hausdorff space `y` with closed base `base`.
pub fn taimanov_check(
    t: &FiniteGts,
    x_mask: AtomSet,
    f: &FiniteMap,
    y: &FiniteGts,
    base: &[AtomSet],
) -> Result<TaimanovReport, MorphismError> {
    let unmet = |s: &str| Err(MorphismError::PreconditionUnmet(s.into()));
    if f.domain() != x_mask.len() || f.codomain() != y.n() {
        return Err(MorphismError::InvalidMap(format!("{f} does not fit the subset {x_mask}")));
    }
    if !y.is_weakly_hausdorff() {
        return unmet("codomain is not Hausdorff");
    }
    if t.closure(x_mask) != t.full() {
        return unmet("subset is not dense");
    }
    let sub = t.trace_subspace(x_mask).topologize();
    let ty = y.topology();
    if ty.iter().any(|&v| !sub.is_open(f.preimage(v))) {
        return unmet("map is not continuous on the subset");
    }
    for &a in base {
        for &b in base {
            if !base.contains(&a.intersect(b)) {
                return Err(MorphismError::BaseNotIntersectionStable(format!("{a} ∩ {b}")));
            }
        }
    }
    let closed = y.topologize().closed_sets();
    for &c in &closed {
        let meet = base.iter().filter(|b| c.is_subset_of(**b)).fold(y.full(), |m, &b| m.intersect(b));
        if meet != c {
            return unmet("base does not generate the closed sets");
        }
    }
    let mut failing_pair = None;
    'pairs: for &a in base {
        for &b in base {
            if a.is_disjoint(b) {
                let ca = t.closure(lift(x_mask, f.preimage(a)));
                let cb = t.closure(lift(x_mask, f.preimage(b)));
                if !ca.is_disjoint(cb) {
                    failing_pair = Some((a, b));
                    break 'pairs;
                }
            }
        }
    }
    let free: Vec<usize> = (0..t.n()).filter(|&i| !x_mask.contains(i)).collect();
    let (m, _) = relabel(x_mask);
    debug_assert_eq!(m, f.domain());
    let combos = (y.n() as u64).checked_pow(free.len() as u32).unwrap_or(u64::MAX);
    if combos > 1 << 20 {
        return Err(MorphismError::SearchSpaceTooLarge(format!("{combos} candidate extensions")));
    }
    let tt = t.topology();
    let mut table = vec![0; t.n()];
    for (i, x) in x_mask.atoms().enumerate() {
        table[x] = f.apply(i);
    }
    let mut extension = None;
    for code in 0..combos {
        let mut c = code;
        for &i in &free {
            table[i] = (c % y.n() as u64) as usize;
            c /= y.n() as u64;
        }
        let g = FiniteMap::new(table.clone(), y.n()).expect("in range");
        if ty.iter().all(|&v| tt.binary_search(&g.preimage(v)).is_ok()) {
            extension = Some(table.clone());
            break;
        }
    }
    Ok(TaimanovReport { condition: failing_pair.is_none(), failing_pair, extension })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Images of the Wallman points of the domain, by index.
    Finite(Vec<usize>),
    /// Images of the free Wallman points of the domain.
    Line(Vec<(WallmanPoint, WallmanPoint)>),
    NoExtension(Witness),
}

pub fn wallman_extension(f: &GtsMap, x: &Space, y: &Space) -> Result<Extension, MorphismError> {
    match (f, x, y) {
        (GtsMap::Finite(m), Space::Finite(gx), Space::Finite(gy)) => wallman_extension_finite(m, gx, gy),
        (GtsMap::PiecewiseLinear(p), Space::Line(lx), Space::Line(ly)) => wallman_extension_line(p, lx, ly),
        _ => Err(MorphismError::BackendUnsupported("map and spaces do not match".into())),
    }
}

fn w_witness(f: &GtsMap, x: &Space, y: &Space) -> Result<Witness, MorphismError> {
    Ok(match continuity(f, x, y, ContinuityKind::SmallW)? {
        Err(w) => w,
        Ok(()) => Witness::Note("extension fails although the map is w-continuous".into()),
    })
}

struct FiniteWallman {
    ring: crate::ring::FiniteRing,
    space: WallmanSpace,
}

fn finite_wallman(g: &FiniteGts) -> Result<FiniteWallman, MorphismError> {
    if !g.is_weakly_normal() {
        return Err(MorphismError::PreconditionUnmet("space is not weakly normal".into()));
    }
    let ring = g.closed_ring();
    let space = WallmanSpace::new(&ring).map_err(|e| MorphismError::PreconditionUnmet(e.to_string()))?;
    Ok(FiniteWallman { ring, space })
}

fn weakly_continuous(table: &[usize], wx: &WallmanSpace, wy: &WallmanSpace) -> bool {
    let (gx, gy) = (wx.gts().topology(), wy.gts().topology());
    let m = FiniteMap::new(table.to_vec(), wy.len()).expect("in range");
    gy.iter().all(|&v| gx.binary_search(&m.preimage(v)).is_ok())
}

fn extends(table: &[usize], m: &FiniteMap, x: &FiniteWallman, y: &FiniteWallman) -> bool {
    (0..m.domain()).all(|i| match (x.space.embed(&x.ring, i), y.space.embed(&y.ring, m.apply(i))) {
        (Ok(p), Ok(q)) => table[p] == q,
        _ => false,
    })
}

fn wallman_extension_finite(m: &FiniteMap, gx: &FiniteGts, gy: &FiniteGts) -> Result<Extension, MorphismError> {
    let (x, y) = (finite_wallman(gx)?, finite_wallman(gy)?);
    let mut table = Vec::new();
    for &mp in x.space.points() {
        // push the ultrafilter at `mp` forward and complete it in the codomain ring
        let image = m.image(mp);
        let gens: Vec<AtomSet> = y.ring.members().iter().copied().filter(|b| image.is_subset_of(*b)).collect();
        let filter = FilterInRing::new(&y.ring, gens).map_err(|e| MorphismError::PreconditionUnmet(e.to_string()))?;
        let completion = match maximal_completion(&y.ring, &filter) {
            Ok(c) => c,
            Err(_) => return Ok(Extension::NoExtension(w_witness(&GtsMap::Finite(m.clone()), &Space::Finite(gx.clone()), &Space::Finite(gy.clone()))?)),
        };
        let target = y.space.points().iter().position(|&mq| {
            let principal: Vec<AtomSet> = y.ring.members().iter().copied().filter(|a| mq.is_subset_of(*a)).collect();
            principal == completion
        });
        match target {
            Some(q) => table.push(q),
            None => return Ok(Extension::NoExtension(w_witness(&GtsMap::Finite(m.clone()), &Space::Finite(gx.clone()), &Space::Finite(gy.clone()))?)),
        }
    }
    if extends(&table, m, &x, &y) && weakly_continuous(&table, &x.space, &y.space) {
        Ok(Extension::Finite(table))
    } else {
        Ok(Extension::NoExtension(w_witness(&GtsMap::Finite(m.clone()), &Space::Finite(gx.clone()), &Space::Finite(gy.clone()))?))
    }
}

/// Whether some weakly continuous map between the Wallman spaces extends `m`, by trying all.
pub fn wallman_extension_exists(m: &FiniteMap, gx: &FiniteGts, gy: &FiniteGts) -> Result<bool, MorphismError> {
    let (x, y) = (finite_wallman(gx)?, finite_wallman(gy)?);
    let (kx, ky) = (x.space.len(), y.space.len());
    let combos = (ky as u64).checked_pow(kx as u32).unwrap_or(u64::MAX);
    if combos > 1 << 20 {
        return Err(MorphismError::SearchSpaceTooLarge(format!("{combos} candidate extensions")));
    }
    for code in 0..combos {
        let mut c = code;
        let table: Vec<usize> = (0..kx)
            .map(|_| {
                let v = (c % ky as u64) as usize;
                c /= ky as u64;
                v
            })
            .collect();
        if extends(&table, m, &x, &y) && weakly_continuous(&table, &x.space, &y.space) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn line_tag(l: &LineGts) -> Result<RingTag, MorphismError> {
    l.smallify().closed_ring().ok_or_else(|| MorphismError::PreconditionUnmet(format!("{l} has no free Wallman points")))
}

fn free_point_at(tag: RingTag, e: End) -> WallmanPoint {
    match (tag, e) {
        (RingTag::RomClosed, End::Minus) => WallmanPoint::MinusInfinity,
        (RingTag::RomClosed, End::Plus) => WallmanPoint::PlusInfinity,
        _ => WallmanPoint::Free,
    }
}

fn ends_of(p: &WallmanPoint) -> Vec<End> {
    match p {
        WallmanPoint::MinusInfinity => vec![End::Minus],
        WallmanPoint::PlusInfinity => vec![End::Plus],
        _ => vec![End::Minus, End::Plus],
    }
}

fn wallman_extension_line(f: &PlMap, x: &LineGts, y: &LineGts) -> Result<Extension, MorphismError> {
    let (tx, ty) = (line_tag(x)?, line_tag(y)?);
    let map = GtsMap::PiecewiseLinear(f.clone());
    if let Err(w) = continuity(&map, &Space::Line(x.clone()), &Space::Line(y.clone()), ContinuityKind::SmallW)? {
        return Ok(Extension::NoExtension(w));
    }
    let wx = LineWallman::new(tx).map_err(|e| MorphismError::PreconditionUnmet(e.to_string()))?;
    let mut out = Vec::new();
    for p in wx.free_points() {
        let images: Vec<WallmanPoint> = ends_of(&p)
            .into_iter()
            .map(|e| match f.limit_toward(e) {
                Some(c) => WallmanPoint::Fixed(c),
                None => free_point_at(ty, f.escapes_toward(e).expect("unbounded")),
            })
            .collect();
        if images.iter().any(|i| *i != images[0]) {
            return Ok(Extension::NoExtension(Witness::Note(format!("{p} would need to map to both {} and {}", images[0], images[1]))));
        }
        out.push((p, images[0].clone()));
    }
    Ok(Extension::Line(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::parse_interval_set as iv;

    fn s(b: u64) -> AtomSet {
        AtomSet(b)
    }

    #[test]
    fn taimanov_cases() {
        let d2 = FiniteGts::discrete(2);
        let base = d2.closed_sets();
        let same = taimanov_check(&d2, s(3), &FiniteMap::identity(2), &d2, &base).unwrap();
        assert!(same.condition && same.agrees());
        // a point whose only neighbourhood is everything cannot choose a side
        let t = FiniteGts::topological(3, [s(0), s(1), s(2), s(3), s(7)]).unwrap();
        let r = taimanov_check(&t, s(3), &FiniteMap::identity(2), &d2, &base).unwrap();
        assert!(!r.condition && r.extension.is_none());
        let trivial = taimanov_check(&t, s(3), &FiniteMap::constant(2, 1, 0).unwrap(), &FiniteGts::discrete(1), &[s(0), s(1)]).unwrap();
        assert!(trivial.condition && trivial.agrees());
        let unstable = taimanov_check(&d2, s(3), &FiniteMap::identity(2), &d2, &[s(0), s(1), s(2), s(3), s(3)]);
        assert!(unstable.is_ok());
        assert!(matches!(
            taimanov_check(&FiniteGts::discrete(3), s(7), &FiniteMap::identity(3), &FiniteGts::discrete(3), &[s(3), s(6), s(7)]),
            Err(MorphismError::BaseNotIntersectionStable(_))
        ));
    }

    #[test]
    fn wallman_identity() {
        let d = Space::Finite(FiniteGts::discrete(3));
        let id = GtsMap::Finite(FiniteMap::identity(3));
        assert_eq!(wallman_extension(&id, &d, &d).unwrap(), Extension::Finite(vec![0, 1, 2]));
    }

    #[test]
    fn wallman_line_directions() {
        let id = GtsMap::PiecewiseLinear(PlMap::identity());
        let (c0, rom) = (Space::Line(LineGts::c0()), Space::Line(LineGts::rom()));
        assert_eq!(
            wallman_extension(&id, &c0, &rom).unwrap(),
            Extension::NoExtension(Witness::LineFamily(vec![iv("(-inf,1)").unwrap(), iv("(-1,inf)").unwrap()]))
        );
        assert_eq!(
            wallman_extension(&id, &rom, &c0).unwrap(),
            Extension::Line(vec![
                (WallmanPoint::MinusInfinity, WallmanPoint::Free),
                (WallmanPoint::PlusInfinity, WallmanPoint::Free)
            ])
        );
    }
}
