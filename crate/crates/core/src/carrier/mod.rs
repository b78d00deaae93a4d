//! Exact set algebra over finite carriers and the rational line.

pub mod finite;
pub mod interval;
pub mod literal;

use std::fmt;

use thiserror::Error;

pub use finite::AtomSet;
pub use interval::{q, qf, Bound, Interval, IntervalSet, Q};
pub use literal::{parse_interval_set, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierError {
    #[error("malformed interval: {0}")]
    MalformedInterval(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("probe `{0}` is not a rational number")]
    NonRationalProbe(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
}

/// The ambient set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Carrier {
    Finite(Vec<String>),
    Line,
}

impl Carrier {
    pub fn finite<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, CarrierError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(CarrierError::DuplicateAtom(a.clone()));
            }
        }
        if names.len() > finite::MAX_ATOMS {
            return Err(CarrierError::CarrierMismatch(format!("{} atoms exceed {}", names.len(), finite::MAX_ATOMS)));
        }
        Ok(Carrier::Finite(names))
    }

    /// Finite carrier with atoms named `0..n`.
    pub fn indexed(n: usize) -> Self {
        Carrier::Finite((0..n).map(|i| i.to_string()).collect())
    }

    pub fn size(&self) -> Option<usize> {
        match self {
            Carrier::Finite(v) => Some(v.len()),
            Carrier::Line => None,
        }
    }

    pub fn atom(&self, name: &str) -> Result<usize, CarrierError> {
        match self {
            Carrier::Finite(v) => v
                .iter()
                .position(|a| a == name)
                .ok_or_else(|| CarrierError::UnknownAtom(name.to_string())),
            Carrier::Line => Err(CarrierError::CarrierMismatch("line carrier has no atoms".into())),
        }
    }

    pub fn empty(&self) -> SubsetValue {
        match self {
            Carrier::Finite(v) => SubsetValue::Finite { n: v.len(), set: AtomSet::EMPTY },
            Carrier::Line => SubsetValue::Line(IntervalSet::empty()),
        }
    }

    pub fn full(&self) -> SubsetValue {
        match self {
            Carrier::Finite(v) => SubsetValue::Finite { n: v.len(), set: AtomSet::full(v.len()) },
            Carrier::Line => SubsetValue::Line(IntervalSet::full()),
        }
    }

    /// Parses `{a,b}` for finite carriers or an interval literal for the line.
    pub fn parse_subset(&self, s: &str) -> Result<SubsetValue, CarrierError> {
        match self {
            Carrier::Line => Ok(SubsetValue::Line(parse_interval_set(s)?)),
            Carrier::Finite(v) => {
                let t = s.trim();
                let body = t
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| CarrierError::MalformedInterval(format!("expected {{..}}, got `{t}`")))?;
                let mut set = AtomSet::EMPTY;
                for name in body.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                    set = set.union(AtomSet::singleton(self.atom(name)?));
                }
                Ok(SubsetValue::Finite { n: v.len(), set })
            }
        }
    }

    /// Prints a finite subset with atom names.
    pub fn show(&self, set: AtomSet) -> String {
        match self {
            Carrier::Finite(v) => {
                let names: Vec<&str> = set.atoms().filter(|&i| i < v.len()).map(|i| v[i].as_str()).collect();
                format!("{{{}}}", names.join(","))
            }
            Carrier::Line => set.to_string(),
        }
    }
}

/// A subset of either backend.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubsetValue {
    Finite { n: usize, set: AtomSet },
    Line(IntervalSet),
}

/// A probe point for membership queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Atom(usize),
    Rational(Q),
}

impl SubsetValue {
    fn zip<T>(
        &self,
        other: &Self,
        fin: impl FnOnce(usize, AtomSet, AtomSet) -> T,
        line: impl FnOnce(&IntervalSet, &IntervalSet) -> T,
    ) -> Result<T, CarrierError> {
        match (self, other) {
            (SubsetValue::Finite { n, set: a }, SubsetValue::Finite { n: m, set: b }) if n == m => Ok(fin(*n, *a, *b)),
            (SubsetValue::Line(a), SubsetValue::Line(b)) => Ok(line(a, b)),
            _ => Err(CarrierError::CarrierMismatch(format!("{self} vs {other}"))),
        }
    }

    pub fn union(&self, o: &Self) -> Result<Self, CarrierError> {
        self.zip(o, |n, a, b| SubsetValue::Finite { n, set: a.union(b) }, |a, b| SubsetValue::Line(a.union(b)))
    }

    pub fn intersect(&self, o: &Self) -> Result<Self, CarrierError> {
        self.zip(o, |n, a, b| SubsetValue::Finite { n, set: a.intersect(b) }, |a, b| SubsetValue::Line(a.intersect(b)))
    }

    pub fn difference(&self, o: &Self) -> Result<Self, CarrierError> {
        self.zip(o, |n, a, b| SubsetValue::Finite { n, set: a.difference(b) }, |a, b| SubsetValue::Line(a.difference(b)))
    }

    pub fn symmetric_difference(&self, o: &Self) -> Result<Self, CarrierError> {
        self.zip(
            o,
            |n, a, b| SubsetValue::Finite { n, set: a.symmetric_difference(b) },
            |a, b| SubsetValue::Line(a.symmetric_difference(b)),
        )
    }

    pub fn complement(&self) -> Self {
        match self {
            SubsetValue::Finite { n, set } => SubsetValue::Finite { n: *n, set: set.complement(*n) },
            SubsetValue::Line(a) => SubsetValue::Line(a.complement()),
        }
    }

    pub fn is_subset_of(&self, o: &Self) -> Result<bool, CarrierError> {
        self.zip(o, |_, a, b| a.is_subset_of(b), |a, b| a.is_subset_of(b))
    }

    pub fn is_empty(&self) -> bool {
        match self {
            SubsetValue::Finite { set, .. } => set.is_empty(),
            SubsetValue::Line(a) => a.is_empty(),
        }
    }

    pub fn is_full(&self) -> bool {
        match self {
            SubsetValue::Finite { n, set } => *set == AtomSet::full(*n),
            SubsetValue::Line(a) => a.is_full(),
        }
    }

    /// Finite subsets are always bounded.
    pub fn is_bounded(&self) -> bool {
        match self {
            SubsetValue::Finite { .. } => true,
            SubsetValue::Line(a) => a.is_bounded(),
        }
    }

    /// Connected components on the line; atoms count as components on finite carriers.
    pub fn component_count(&self) -> usize {
        match self {
            SubsetValue::Finite { set, .. } => set.len(),
            SubsetValue::Line(a) => a.component_count(),
        }
    }

    pub fn contains_point(&self, p: &Point) -> Result<bool, CarrierError> {
        match (self, p) {
            (SubsetValue::Finite { n, set }, Point::Atom(i)) if i < n => Ok(set.contains(*i)),
            (SubsetValue::Line(a), Point::Rational(v)) => Ok(a.contains_point(v)),
            _ => Err(CarrierError::CarrierMismatch(format!("probe {p:?} against {self}"))),
        }
    }

    /// Membership for a textual probe; on the line the probe must be rational.
    pub fn contains_probe(&self, probe: &str) -> Result<bool, CarrierError> {
        match self {
            SubsetValue::Line(a) => Ok(a.contains_point(&parse_rational(probe)?)),
            SubsetValue::Finite { .. } => {
                let i: usize = probe.trim().parse().map_err(|_| CarrierError::UnknownAtom(probe.to_string()))?;
                self.contains_point(&Point::Atom(i))
            }
        }
    }
}

impl fmt::Display for SubsetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetValue::Finite { set, .. } => write!(f, "{set}"),
            SubsetValue::Line(a) => write!(f, "{a}"),
        }
    }
}
