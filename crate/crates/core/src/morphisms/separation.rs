//! Functional separation by strictly continuous maps into a unit interval.

use rayon::prelude::*;

use crate::carrier::{q, AtomSet, IntervalSet, SubsetValue, Q};
use crate::gts::{LineGts, LineKind, Space};

use super::continuity::{continuity, ContinuityKind};
use super::maps::{GtsMap, PlMap};
use super::{Check, MorphismError, Witness};

/// Which unit interval the separating map lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalModel {
    /// `[0, 1]` with the rom structure.
    Rom,
    /// `[0, 1]` with every family of rom-opens admissible.
    StAnalog,
}

impl IntervalModel {
    pub fn parse(s: &str) -> Result<Self, MorphismError> {
        match s {
            "rom" | "i-rom" => Ok(Self::Rom),
            "st" | "st-analog" | "i-st" => Ok(Self::StAnalog),
            other => Err(MorphismError::BadModelTag(other.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Rom => "rom",
            Self::StAnalog => "st-analog",
        }
    }

    pub fn line(self) -> LineGts {
        match self {
            Self::Rom => LineGts::i_rom(),
            Self::StAnalog => LineGts::windowed(LineKind::RomTopological, q(0), q(1)).expect("unit window"),
        }
    }
}

/// Checks that `f` is strictly continuous into the model and sends `a` to 0 and `b` to 1.
pub fn ig_separation(
    f: &GtsMap,
    x: &Space,
    a: &SubsetValue,
    b: &SubsetValue,
    model: IntervalModel,
) -> Result<Check, MorphismError> {
    let y = Space::Line(model.line());
    if let Err(w) = continuity(f, x, &y, ContinuityKind::Strict)? {
        return Ok(Err(w));
    }
    for (set, value) in [(a, q(0)), (b, q(1))] {
        let ok = match (f, set) {
            (GtsMap::Values(v), SubsetValue::Finite { set, .. }) => set.atoms().all(|i| v.get(i) == Some(&value)),
            (GtsMap::PiecewiseLinear(p), SubsetValue::Line(s)) => s.is_subset_of(&p.preimage(&IntervalSet::point(value.clone()))),
            _ => return Err(MorphismError::BackendUnsupported("map and subsets do not match".into())),
        };
        if !ok {
            return Ok(Err(Witness::Note(format!("{set} is not sent to {value}"))));
        }
    }
    Ok(Ok(()))
}

fn dyadic(k: i64, depth: u32) -> Q {
    Q::new(k.into(), (1i64 << depth).into())
}

/// Looks for a separating map with dyadic values (finite carriers) or a dyadic ramp (line).
/// Not finding one proves nothing.
pub fn search_separation(
    x: &Space,
    a: &SubsetValue,
    b: &SubsetValue,
    model: IntervalModel,
    depth: u32,
) -> Result<Option<GtsMap>, MorphismError> {
    match (x, a, b) {
        (Space::Finite(g), SubsetValue::Finite { set: sa, .. }, SubsetValue::Finite { set: sb, .. }) => {
            if !sa.is_disjoint(*sb) {
                return Ok(None);
            }
            let n = g.n();
            let free: Vec<usize> = (0..n).filter(|&i| !sa.contains(i) && !sb.contains(i)).collect();
            // keep the candidate count bounded by lowering the resolution
            let mut d = depth.min(20);
            while d > 0 && ((1u64 << d) + 1).saturating_pow(free.len() as u32) > 1 << 20 {
                d -= 1;
            }
            let levels = (1u64 << d) + 1;
            let count = levels.saturating_pow(free.len() as u32);
            let build = |code: u64| {
                let mut v = vec![q(0); n];
                for i in sb.atoms() {
                    v[i] = q(1);
                }
                let mut c = code;
                for &i in &free {
                    v[i] = dyadic((c % levels) as i64, d);
                    c /= levels;
                }
                GtsMap::Values(v)
            };
            let found = (0..count).into_par_iter().find_first(|&code| {
                matches!(ig_separation(&build(code), x, a, b, model), Ok(Ok(())))
            });
            Ok(found.map(build))
        }
        (Space::Line(_), SubsetValue::Line(sa), SubsetValue::Line(sb)) => {
            if !sa.is_disjoint(sb) {
                return Ok(None);
            }
            let ends: Vec<Q> = sa.endpoints().into_iter().chain(sb.endpoints()).collect();
            let lo = ends.iter().min().cloned().unwrap_or_else(|| q(0)) - q(1);
            let hi = ends.iter().max().cloned().unwrap_or_else(|| q(0)) + q(1);
            let d = depth.min(10);
            let step = dyadic(1, d);
            let mut grid = Vec::new();
            let mut t = lo.clone();
            while t <= hi && grid.len() < 257 {
                grid.push(t.clone());
                t += &step;
            }
            let mut candidates = vec![PlMap::constant(q(0)), PlMap::constant(q(1))];
            for i in 0..grid.len() {
                for j in i + 1..grid.len() {
                    candidates.push(PlMap::ramp(grid[i].clone(), grid[j].clone()).expect("ordered"));
                    candidates.push(PlMap::ramp_down(grid[i].clone(), grid[j].clone()).expect("ordered"));
                }
            }
            let found = candidates.into_par_iter().find_first(|p| {
                // containments first, they are cheap
                sa.is_subset_of(&p.preimage(&IntervalSet::point(q(0))))
                    && sb.is_subset_of(&p.preimage(&IntervalSet::point(q(1))))
                    && matches!(ig_separation(&GtsMap::PiecewiseLinear(p.clone()), x, a, b, model), Ok(Ok(())))
            });
            Ok(found.map(GtsMap::PiecewiseLinear))
        }
        _ => Err(MorphismError::BackendUnsupported("space and subsets do not match".into())),
    }
}

/// Every closed set and outside point of a finite gts are separated by a map the search finds.
pub fn is_ig_completely_regular(x: &Space, model: IntervalModel, depth: u32) -> Result<Check, MorphismError> {
    let Space::Finite(g) = x else {
        return Err(MorphismError::BackendUnsupported("complete regularity is searched on finite carriers".into()));
    };
    let n = g.n();
    for c in g.closed_sets() {
        for p in 0..n {
            if c.contains(p) {
                continue;
            }
            let a = SubsetValue::Finite { n, set: c };
            let b = SubsetValue::Finite { n, set: AtomSet::singleton(p) };
            if search_separation(x, &a, &b, model, depth)?.is_none() {
                return Ok(Err(Witness::Note(format!("no separating map found for {c} and point {p}"))));
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::parse_interval_set as iv;
    use crate::gts::FiniteGts;

    #[test]
    fn trivial_and_clamp() {
        let x = Space::Finite(FiniteGts::discrete(2));
        let empty = SubsetValue::Finite { n: 2, set: AtomSet::EMPTY };
        let zero = GtsMap::Values(vec![q(0), q(0)]);
        assert_eq!(ig_separation(&zero, &x, &empty, &empty, IntervalModel::Rom).unwrap(), Ok(()));
        let line = Space::Line(LineGts::rom());
        let (a, b) = (SubsetValue::Line(iv("(-inf,0]").unwrap()), SubsetValue::Line(iv("[1,inf)").unwrap()));
        let clamp = GtsMap::PiecewiseLinear(PlMap::clamp01());
        assert_eq!(ig_separation(&clamp, &line, &a, &b, IntervalModel::Rom).unwrap(), Ok(()));
        assert!(matches!(IntervalModel::parse("ut"), Err(MorphismError::BadModelTag(_))));
    }

    #[test]
    fn discrete_is_tychonoff_at_depth_one() {
        let x = Space::Finite(FiniteGts::discrete(3));
        assert_eq!(is_ig_completely_regular(&x, IntervalModel::Rom, 1).unwrap(), Ok(()));
        assert_eq!(is_ig_completely_regular(&x, IntervalModel::StAnalog, 1).unwrap(), Ok(()));
    }

    #[test]
    fn line_search_finds_a_ramp() {
        let line = Space::Line(LineGts::rom());
        let (a, b) = (SubsetValue::Line(iv("(-inf,0]").unwrap()), SubsetValue::Line(iv("[1,inf)").unwrap()));
        let f = search_separation(&line, &a, &b, IntervalModel::Rom, 2).unwrap().expect("ramp");
        assert_eq!(ig_separation(&f, &line, &a, &b, IntervalModel::Rom).unwrap(), Ok(()));
    }
}
