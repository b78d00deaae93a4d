//! The axiom engine: rules G0–G8 for explicit families and the generation fixpoint.
//!
//! G0 opens are the members of admissible families; G1 opens contain the empty set and the
//! carrier and are closed under finite unions and intersections; G2 every essentially finite
//! family of opens is admissible; G3 unions of admissible families are open; G4 subfamilies
//! with open union stay admissible; G5 coarsenings stay admissible; G6 composition; G7 gluing;
//! G8 traces on opens stay admissible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::carrier::AtomSet;

use super::{CovBackend, Family, FiniteGts, MAX_EXPLICIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    G0,
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    G8,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A violated rule together with the families or sets that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Declared opens differ from the members of the admissible families.
    OpMismatch { set: AtomSet },
    MissingEmpty,
    MissingCarrier,
    UnionNotOpen { a: AtomSet, b: AtomSet },
    IntersectionNotOpen { a: AtomSet, b: AtomSet },
    /// A family of opens (essentially finite, as every finite family is) that is not admissible.
    NotAdmissible { family: Family },
    FamilyUnionNotOpen { family: Family },
    Subfamily { from: Family, sub: Family },
    Coarsening { from: Family, to: Family },
    Composition { from: Family, member: AtomSet, cover: Family, to: Family },
    Gluing { cover: Family, set: AtomSet },
    Trace { from: Family, with: AtomSet, to: Family },
}

impl Violation {
    pub fn rule(&self) -> Rule {
        match self {
            Violation::OpMismatch { .. } => Rule::G0,
            Violation::MissingEmpty
            | Violation::MissingCarrier
            | Violation::UnionNotOpen { .. }
            | Violation::IntersectionNotOpen { .. } => Rule::G1,
            Violation::NotAdmissible { .. } => Rule::G2,
            Violation::FamilyUnionNotOpen { .. } => Rule::G3,
            Violation::Subfamily { .. } => Rule::G4,
            Violation::Coarsening { .. } => Rule::G5,
            Violation::Composition { .. } => Rule::G6,
            Violation::Gluing { .. } => Rule::G7,
            Violation::Trace { .. } => Rule::G8,
        }
    }

    /// Re-checks the witness against a candidate, independently of the search that found it.
    pub fn confirm(&self, g: &FiniteGts, declared_op: Option<&[AtomSet]>) -> bool {
        let n = g.n();
        let cov = g.cov_families();
        let op: BTreeSet<AtomSet> = cov.iter().flat_map(|f| f.members()).collect();
        let adm = |f: &Family| cov.contains(f);
        match self {
            Violation::OpMismatch { set } => {
                declared_op.is_some_and(|d| d.contains(set) != op.contains(set))
            }
            Violation::MissingEmpty => !op.contains(&AtomSet::EMPTY),
            Violation::MissingCarrier => !op.contains(&AtomSet::full(n)),
            Violation::UnionNotOpen { a, b } => op.contains(a) && op.contains(b) && !op.contains(&a.union(*b)),
            Violation::IntersectionNotOpen { a, b } => {
                op.contains(a) && op.contains(b) && !op.contains(&a.intersect(*b))
            }
            Violation::NotAdmissible { family } => family.members().all(|u| op.contains(&u)) && !adm(family),
            Violation::FamilyUnionNotOpen { family } => adm(family) && !op.contains(&family.union_set()),
            Violation::Subfamily { from, sub } => {
                adm(from) && sub.is_subfamily_of(*from) && op.contains(&sub.union_set()) && !adm(sub)
            }
            Violation::Coarsening { from, to } => {
                adm(from)
                    && from.union_set() == to.union_set()
                    && to.members().all(|v| op.contains(&v))
                    && from.members().all(|u| to.members().any(|v| u.is_subset_of(v)))
                    && !adm(to)
            }
            Violation::Composition { from, member, cover, to } => {
                adm(from)
                    && from.contains(*member)
                    && adm(cover)
                    && cover.union_set() == *member
                    && *to == Family(from.remove(*member).0 | cover.0)
                    && !adm(to)
            }
            Violation::Gluing { cover, set } => {
                adm(cover)
                    && set.is_subset_of(cover.union_set())
                    && cover.members().all(|u| op.contains(&set.intersect(u)))
                    && !op.contains(set)
            }
            Violation::Trace { from, with, to } => {
                adm(from) && op.contains(with) && *to == from.trace(*with) && !adm(to)
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.rule())?;
        match self {
            Violation::OpMismatch { set } => write!(f, "declared opens disagree on {set}"),
            Violation::MissingEmpty => write!(f, "the empty set is not open"),
            Violation::MissingCarrier => write!(f, "the carrier is not open"),
            Violation::UnionNotOpen { a, b } => write!(f, "Op not ∪-closed: {a} ∪ {b}"),
            Violation::IntersectionNotOpen { a, b } => write!(f, "Op not ∩-closed: {a} ∩ {b}"),
            Violation::NotAdmissible { family } => write!(f, "family of opens {family} is not admissible"),
            Violation::FamilyUnionNotOpen { family } => write!(f, "union of admissible {family} is not open"),
            Violation::Subfamily { from, sub } => write!(f, "subfamily {sub} of {from} has open union but is not admissible"),
            Violation::Coarsening { from, to } => write!(f, "coarsening {to} of {from} is not admissible"),
            Violation::Composition { from, member, cover, to } => {
                write!(f, "replacing {member} in {from} by {cover} gives {to}, not admissible")
            }
            Violation::Gluing { cover, set } => write!(f, "{set} has open traces on {cover} but is not open"),
            Violation::Trace { from, with, to } => write!(f, "trace {to} of {from} on {with} is not admissible"),
        }
    }
}

/// Above this many admissible families the single-step rules G4–G8 are skipped in favour of
/// G2, which on a finite carrier entails all of them.
const LITERAL_BUDGET: usize = 4096;

impl FiniteGts {
    /// Checks G0–G8. Implicit backends are axiom-correct by construction and pass trivially.
    pub fn check_axioms(&self) -> Result<(), Violation> {
        self.check_axioms_declared(None)
    }

    /// As [`FiniteGts::check_axioms`], also comparing against separately declared opens.
    pub fn check_axioms_declared(&self, declared_op: Option<&[AtomSet]>) -> Result<(), Violation> {
        let cov = match self.cov() {
            CovBackend::Explicit(c) => c,
            _ => return Ok(()),
        };
        let n = self.n();
        let op: BTreeSet<AtomSet> = self.op().iter().copied().collect();
        if let Some(d) = declared_op {
            let d: BTreeSet<AtomSet> = d.iter().copied().collect();
            if let Some(&set) = d.symmetric_difference(&op).next() {
                return Err(Violation::OpMismatch { set });
            }
        }
        let opv: Vec<AtomSet> = op.iter().copied().collect();
        for (i, &a) in opv.iter().enumerate() {
            for &b in &opv[i + 1..] {
                if !op.contains(&a.union(b)) {
                    return Err(Violation::UnionNotOpen { a, b });
                }
            }
        }
        for (i, &a) in opv.iter().enumerate() {
            for &b in &opv[i + 1..] {
                if !op.contains(&a.intersect(b)) {
                    return Err(Violation::IntersectionNotOpen { a, b });
                }
            }
        }
        if !op.contains(&AtomSet::EMPTY) {
            return Err(Violation::MissingEmpty);
        }
        if !op.contains(&AtomSet::full(n)) {
            return Err(Violation::MissingCarrier);
        }
        for &family in cov {
            if !op.contains(&family.union_set()) {
                return Err(Violation::FamilyUnionNotOpen { family });
            }
        }
        if cov.len() <= LITERAL_BUDGET {
            single_step_rules(&op, cov)?;
        }
        let all = Family::from_sets(opv.iter().copied());
        for family in all.subfamilies() {
            if !cov.contains(&family) {
                return Err(Violation::NotAdmissible { family });
            }
        }
        Ok(())
    }
}

/// G4–G8 checked one step at a time; a multi-step derivation that leaves the families
/// must leave them at some single step.
fn single_step_rules(op: &BTreeSet<AtomSet>, cov: &BTreeSet<Family>) -> Result<(), Violation> {
    for &from in cov {
        for sub in from.subfamilies() {
            if op.contains(&sub.union_set()) && !cov.contains(&sub) {
                return Err(Violation::Subfamily { from, sub });
            }
        }
    }
    for &from in cov {
        let total = from.union_set();
        for u in from.members() {
            for &v in op {
                if u.is_subset_of(v) && v.is_subset_of(total) && u != v {
                    let to = from.remove(u).insert(v);
                    if !cov.contains(&to) {
                        return Err(Violation::Coarsening { from, to });
                    }
                }
            }
        }
    }
    let mut by_union: BTreeMap<AtomSet, Vec<Family>> = BTreeMap::new();
    for &c in cov {
        by_union.entry(c.union_set()).or_default().push(c);
    }
    for &from in cov {
        for member in from.members() {
            for &cover in by_union.get(&member).map(Vec::as_slice).unwrap_or(&[]) {
                let to = Family(from.remove(member).0 | cover.0);
                if !cov.contains(&to) {
                    return Err(Violation::Composition { from, member, cover, to });
                }
            }
        }
    }
    for &cover in cov {
        let total = cover.union_set();
        for set in total.subsets() {
            if !op.contains(&set) && cover.members().all(|u| op.contains(&set.intersect(u))) {
                return Err(Violation::Gluing { cover, set });
            }
        }
    }
    for &from in cov {
        for &with in op {
            let to = from.trace(with);
            if !cov.contains(&to) {
                return Err(Violation::Trace { from, with, to });
            }
        }
    }
    Ok(())
}

/// Least generalized topology containing the seed families, computed as a fixpoint that
/// alternates closure of the opens with closure of the admissible families.
pub fn generate(n: usize, seed: &[Family]) -> FiniteGts {
    assert!(n <= MAX_EXPLICIT, "explicit generation needs at most {MAX_EXPLICIT} atoms");
    let full = AtomSet::full(n);
    let mut cov: BTreeSet<Family> = seed.iter().copied().collect();
    let mut op: BTreeSet<AtomSet> = [AtomSet::EMPTY, full].into_iter().collect();
    loop {
        let before = (op.len(), cov.len());
        // G0 and G3: members and unions of admissible families are open.
        for f in &cov {
            op.extend(f.members());
            op.insert(f.union_set());
        }
        // G1: finite unions and intersections.
        let closed = crate::ring::close_lattice(op.iter().copied());
        op.extend(closed);
        // G7: gluing along admissible families.
        let mut glued = Vec::new();
        for f in &cov {
            for w in f.union_set().subsets() {
                if !op.contains(&w) && f.members().all(|u| op.contains(&w.intersect(u))) {
                    glued.push(w);
                }
            }
        }
        op.extend(glued);
        // G2: every family of opens is essentially finite here, hence admissible; this
        // subsumes the family rules G4, G5, G6 and G8 whose outputs are families of opens.
        let all = Family::from_sets(op.iter().copied());
        cov.extend(all.subfamilies());
        if (op.len(), cov.len()) == before {
            break;
        }
    }
    FiniteGts::explicit(n, cov).expect("bounded carrier")
}

/// Generation at the level of opens for carriers too large for explicit families:
/// on a finite carrier the generated opens are the topology generated by the seed opens.
pub fn generate_opens(n: usize, seed_opens: impl IntoIterator<Item = AtomSet>) -> FiniteGts {
    let full = AtomSet::full(n);
    let sub: BTreeSet<AtomSet> = seed_opens.into_iter().collect();
    // finite intersections of the subbase form a base
    let mut base: BTreeSet<AtomSet> = BTreeSet::new();
    base.insert(full);
    for s in &sub {
        let snapshot: Vec<AtomSet> = base.iter().copied().collect();
        for b in snapshot {
            base.insert(b.intersect(*s));
        }
    }
    let base: Vec<AtomSet> = base.into_iter().collect();
    let mut opens: BTreeSet<AtomSet> = [AtomSet::EMPTY].into_iter().collect();
    let mut frontier = vec![AtomSet::EMPTY];
    while let Some(u) = frontier.pop() {
        for &b in &base {
            let v = u.union(b);
            if opens.insert(v) {
                frontier.push(v);
            }
        }
    }
    FiniteGts::topological(n, opens).expect("generated opens form a topology")
}
