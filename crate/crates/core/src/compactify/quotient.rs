//! The quotient of a closed-set lattice by "differs only by a compact piece".

use crate::carrier::{q, Bound, IntervalSet};
use crate::ring::RingTag;

/// Whether a line set contains a closed member of the ring that is not compact.
pub fn contains_noncompact_member(tag: RingTag, s: &IntervalSet) -> bool {
    match tag {
        RingTag::RomClosed => s.unbounded_below() || s.unbounded_above(),
        RingTag::C0Rom => s.unbounded_below() && s.unbounded_above(),
        RingTag::BoundedRom => false,
    }
}

/// `A ∼ B` on an interval ring.
pub fn sim(tag: RingTag, a: &IntervalSet, b: &IntervalSet) -> bool {
    !contains_noncompact_member(tag, &a.symmetric_difference(b))
}

/// A finite distributive lattice given by class representatives and operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientLattice<S> {
    reps: Vec<S>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

/// The operations on a sample do not respect the partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotWellDefined<S> {
    pub a: S,
    pub b: S,
}

impl<S: Clone + PartialEq> QuotientLattice<S> {
    /// Partitions `sample` by `sim` and reads the operation tables off representatives,
    /// checking on every sample pair that the tables do not depend on the representative.
    pub fn build(
        sample: &[S],
        sim: impl Fn(&S, &S) -> bool,
        meet: impl Fn(&S, &S) -> S,
        join: impl Fn(&S, &S) -> S,
    ) -> Result<Self, NotWellDefined<S>> {
        let mut reps: Vec<S> = Vec::new();
        for s in sample {
            if !reps.iter().any(|r| sim(r, s)) {
                reps.push(s.clone());
            }
        }
        let class = |x: &S, reps: &[S]| reps.iter().position(|r| sim(r, x));
        let mut extended = reps.clone();
        // results of operations may fall into classes the sample missed
        loop {
            let before = extended.len();
            let snapshot = extended.clone();
            for a in &snapshot {
                for b in &snapshot {
                    for c in [meet(a, b), join(a, b)] {
                        if class(&c, &extended).is_none() {
                            extended.push(c);
                        }
                    }
                }
            }
            if extended.len() == before {
                break;
            }
        }
        let reps = extended;
        let k = reps.len();
        let table = |op: &dyn Fn(&S, &S) -> S| -> Vec<Vec<usize>> {
            (0..k).map(|i| (0..k).map(|j| class(&op(&reps[i], &reps[j]), &reps).expect("closed")).collect()).collect()
        };
        let mt = table(&meet);
        let jt = table(&join);
        for a in sample {
            for b in sample {
                let (ca, cb) = (class(a, &reps).expect("sampled"), class(b, &reps).expect("sampled"));
                if class(&meet(a, b), &reps) != Some(mt[ca][cb]) || class(&join(a, b), &reps) != Some(jt[ca][cb]) {
                    return Err(NotWellDefined { a: a.clone(), b: b.clone() });
                }
            }
        }
        Ok(QuotientLattice { reps, meet: mt, join: jt })
    }
}

impl<S> QuotientLattice<S> {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[S] {
        &self.reps
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(a, b))).expect("bounded lattice")
    }

    pub fn top(&self) -> usize {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq(b, a))).expect("bounded lattice")
    }

    pub fn is_distributive(&self) -> bool {
        let k = self.len();
        (0..k).all(|a| {
            (0..k).all(|b| (0..k).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))))
        })
    }

    /// Ultrafilters of the lattice, by brute force over sets of classes.
    pub fn ultrafilters(&self) -> Vec<Vec<usize>> {
        let k = self.len();
        assert!(k <= 16, "lattice too large for brute force");
        let bot = self.bottom();
        let mut filters: Vec<u32> = Vec::new();
        for mask in 1u32..(1 << k) {
            let has = |i: usize| mask >> i & 1 == 1;
            if has(bot) {
                continue;
            }
            let up = (0..k).all(|a| !has(a) || (0..k).all(|b| !self.leq(a, b) || has(b)));
            let cap = (0..k).all(|a| (0..k).all(|b| !(has(a) && has(b)) || has(self.meet(a, b))));
            if up && cap {
                filters.push(mask);
            }
        }
        filters
            .iter()
            .copied()
            .filter(|&f| !filters.iter().any(|&g| g != f && f & !g == 0))
            .map(|f| (0..k).filter(|i| f >> i & 1 == 1).collect())
            .collect()
    }
}

impl QuotientLattice<IntervalSet> {
    /// The lattice for an interval ring, built on its canonical sample.
    pub fn for_ring(tag: RingTag) -> Self {
        let sample = canonical_closed_sample(tag);
        Self::build(&sample, |a, b| sim(tag, a, b), |a, b| a.intersect(b), |a, b| a.union(b)).expect("interval rings")
    }

    pub fn class_of_line(&self, tag: RingTag, a: &IntervalSet) -> Option<usize> {
        self.reps.iter().position(|r| sim(tag, r, a))
    }
}

/// Closed sets of each shape that the ring contains.
pub fn canonical_closed_sample(tag: RingTag) -> Vec<IntervalSet> {
    let c = |lo: Bound, hi: Bound| IntervalSet::closed(lo, hi);
    let all = vec![
        IntervalSet::empty(),
        IntervalSet::full(),
        IntervalSet::point(q(0)),
        c(q(0).into(), q(1).into()),
        c(q(0).into(), q(1).into()).union(&c(q(2).into(), q(3).into())),
        c(Bound::NegInf, q(0).into()),
        c(q(0).into(), Bound::PosInf),
        c(Bound::NegInf, q(0).into()).union(&c(q(1).into(), Bound::PosInf)),
        c(Bound::NegInf, q(-1).into()).union(&c(q(0).into(), q(1).into())),
        c(q(0).into(), q(1).into()).union(&c(q(2).into(), Bound::PosInf)),
    ];
    all.into_iter().filter(|a| tag.contains(a)).collect()
}
