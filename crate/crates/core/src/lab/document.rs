//! The space document format: a TOML file with one array of tables per kind of object.
//!
//! ```toml
//! [[carrier]]
//! name = "X"
//! atoms = ["a", "b"]
//!
//! [[ring]]
//! name = "R"
//! carrier = "X"
//! members = ["{}", "{a}", "{a,b}"]
//!
//! [[gts]]
//! name = "S"
//! kind = "small"            # small | topological | explicit | discrete | indiscrete | line | product
//! ring = "R"
//!
//! [[gts]]
//! name = "L"
//! kind = "line"
//! model = "rom"             # rom | c0 | rom-top, optional window = ["0", "1"]
//!
//! [[map]]
//! name = "f"
//! from = "S"
//! to = "S"
//! table = ["b", "b"]        # or values = ["0", "1/2"], or pieces = [{ domain, slope, intercept }]
//!
//! [[bundle]]
//! name = "B"
//! kind = "alexandroff"      # alexandroff | wallman | glue | finite-remainder | bounded-intervals
//! space = "L"
//!
//! [[suite]]
//! id = "prop-1.8"
//! max_size = 3
//! ```
//!
//! Finite subsets are written `{a,b}` with atom names, line subsets as interval literals.
//! Printing canonicalizes: subsets sorted by bit pattern, interval sets normalized.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::carrier::{parse_interval_set, parse_rational, AtomSet, Carrier, Interval, Q};
use crate::compactify::{
    alexandroff_strict, bounded_interval_compactification, finite::wallman_bundle, finite_remainder, two_point_glue,
    wallman_strict_line, FiniteBundle, Glue, LineBundle,
};
use crate::gts::{Family, FiniteGts, GtsError, LineGts, LineKind, Space, Violation};
use crate::morphisms::{FiniteMap, GtsMap, Piece, PlMap};
use crate::products::{product, ProductMode, ProductSpec};
use crate::ring::FiniteRing;

use super::LabError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, rename = "carrier", skip_serializing_if = "Vec::is_empty")]
    pub carriers: Vec<CarrierDecl>,
    #[serde(default, rename = "ring", skip_serializing_if = "Vec::is_empty")]
    pub rings: Vec<RingDecl>,
    #[serde(default, rename = "gts", skip_serializing_if = "Vec::is_empty")]
    pub spaces: Vec<GtsDecl>,
    #[serde(default, rename = "map", skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<MapDecl>,
    #[serde(default, rename = "bundle", skip_serializing_if = "Vec::is_empty")]
    pub bundles: Vec<BundleDecl>,
    #[serde(default, rename = "suite", skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<SuiteDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierDecl {
    pub name: String,
    pub atoms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDecl {
    pub name: String,
    pub carrier: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GtsDecl {
    pub name: String,
    #[serde(flatten)]
    pub body: GtsBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GtsBody {
    Small {
        ring: String,
    },
    Topological {
        carrier: String,
        opens: Vec<String>,
    },
    Explicit {
        carrier: String,
        families: Vec<Vec<String>>,
    },
    Discrete {
        carrier: String,
    },
    Indiscrete {
        carrier: String,
    },
    Line {
        model: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        window: Option<[String; 2]>,
    },
    /// Factors must be declared earlier; the carrier gets the gts's name and atoms `a.b`.
    Product {
        factors: Vec<String>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        partial: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDecl {
    pub domain: String,
    pub slope: String,
    pub intercept: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDecl {
    pub name: String,
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces: Option<Vec<PieceDecl>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BundleKind {
    Alexandroff,
    Wallman,
    Glue,
    FiniteRemainder,
    BoundedIntervals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDecl {
    pub name: String,
    pub kind: BundleKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub core: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteDecl {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
}

fn doc_err(what: impl std::fmt::Display) -> LabError {
    LabError::Document(what.to_string())
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, LabError> {
        toml::from_str(text).map_err(|e| doc_err(e.message()))
    }

    /// Canonical text; parsing it back gives the canonical document.
    pub fn print(&self) -> Result<String, LabError> {
        toml::to_string(&self.canonical()?).map_err(doc_err)
    }

    fn carrier(&self, name: &str) -> Result<Carrier, LabError> {
        if let Some(c) = self.carriers.iter().find(|c| c.name == name) {
            return Carrier::finite(c.atoms.iter().cloned()).map_err(doc_err);
        }
        // product carriers are named after their gts
        let res = self.resolve()?;
        res.carriers.get(name).cloned().ok_or_else(|| LabError::UnknownName(name.into()))
    }

    /// Same objects with every subset list sorted by bit pattern and every literal normalized.
    pub fn canonical(&self) -> Result<Document, LabError> {
        let mut out = self.clone();
        let sets = |doc: &Document, carrier: &str, v: &[String]| -> Result<Vec<String>, LabError> {
            let c = doc.carrier(carrier)?;
            let mut parsed = v.iter().map(|s| finite_set(&c, s)).collect::<Result<Vec<_>, _>>()?;
            parsed.sort();
            parsed.dedup();
            Ok(parsed.into_iter().map(|s| c.show(s)).collect())
        };
        for r in &mut out.rings {
            r.members = sets(self, &r.carrier, &r.members)?;
        }
        for g in &mut out.spaces {
            match &mut g.body {
                GtsBody::Topological { carrier, opens } => *opens = sets(self, carrier, opens)?,
                GtsBody::Explicit { carrier, families } => {
                    let c = self.carrier(carrier)?;
                    let mut fams: Vec<Family> = Vec::new();
                    for f in families.iter() {
                        let members = f.iter().map(|s| finite_set(&c, s)).collect::<Result<Vec<_>, _>>()?;
                        fams.push(Family::from_sets(members));
                    }
                    fams.sort();
                    fams.dedup();
                    *families = fams.iter().map(|f| f.members().map(|s| c.show(s)).collect()).collect();
                }
                GtsBody::Line { window: Some(w), .. } => {
                    for s in w.iter_mut() {
                        *s = parse_rational(s).map_err(doc_err)?.to_string();
                    }
                }
                _ => {}
            }
        }
        for m in &mut out.maps {
            if let Some(v) = &mut m.values {
                for s in v.iter_mut() {
                    *s = parse_rational(s).map_err(doc_err)?.to_string();
                }
            }
            if let Some(ps) = &mut m.pieces {
                for p in ps.iter_mut() {
                    p.domain = parse_interval_set(&p.domain).map_err(doc_err)?.to_string();
                    p.slope = parse_rational(&p.slope).map_err(doc_err)?.to_string();
                    p.intercept = parse_rational(&p.intercept).map_err(doc_err)?.to_string();
                }
            }
        }
        for b in &mut out.bundles {
            if let Some(parts) = &mut b.parts {
                for s in parts.iter_mut() {
                    *s = parse_interval_set(s).map_err(doc_err)?.to_string();
                }
            }
            if let Some(c) = &mut b.core {
                *c = parse_interval_set(c).map_err(doc_err)?.to_string();
            }
        }
        Ok(out)
    }

    /// Builds every declared object. Explicit gtses are built without checking their axioms.
    pub fn resolve(&self) -> Result<Resolved, LabError> {
        let mut res = Resolved::default();
        for c in &self.carriers {
            let carrier = Carrier::finite(c.atoms.iter().cloned()).map_err(|e| doc_err(format!("{}: {e}", c.name)))?;
            if res.carriers.insert(c.name.clone(), carrier).is_some() {
                return Err(doc_err(format!("duplicate carrier {}", c.name)));
            }
        }
        for r in &self.rings {
            let c = res.carrier(&r.carrier)?;
            let n = c.size().unwrap_or(0);
            let members = r.members.iter().map(|s| finite_set(&c, s)).collect::<Result<Vec<_>, _>>()?;
            let ring = FiniteRing::new(n, members).map_err(|e| doc_err(format!("ring {}: {e}", r.name)))?;
            res.rings.insert(r.name.clone(), (r.carrier.clone(), ring));
        }
        for g in &self.spaces {
            let ctx = |e: &dyn std::fmt::Display| doc_err(format!("gts {}: {e}", g.name));
            let (carrier, space) = match &g.body {
                GtsBody::Small { ring } => {
                    let (carrier, r) = res.rings.get(ring).ok_or_else(|| LabError::UnknownName(ring.clone()))?;
                    (Some(carrier.clone()), Space::Finite(FiniteGts::from_ring(r).map_err(|e| ctx(&e))?))
                }
                GtsBody::Topological { carrier, opens } => {
                    let c = res.carrier(carrier)?;
                    let op = opens.iter().map(|s| finite_set(&c, s)).collect::<Result<Vec<_>, _>>()?;
                    let g = FiniteGts::topological(c.size().unwrap_or(0), op).map_err(|e| ctx(&e))?;
                    (Some(carrier.clone()), Space::Finite(g))
                }
                GtsBody::Explicit { carrier, families } => {
                    let c = res.carrier(carrier)?;
                    let mut fams = Vec::new();
                    for f in families {
                        let members = f.iter().map(|s| finite_set(&c, s)).collect::<Result<Vec<_>, _>>()?;
                        fams.push(Family::from_sets(members));
                    }
                    let g = FiniteGts::explicit(c.size().unwrap_or(0), fams).map_err(|e| ctx(&e))?;
                    (Some(carrier.clone()), Space::Finite(g))
                }
                GtsBody::Discrete { carrier } => {
                    let n = res.carrier(carrier)?.size().unwrap_or(0);
                    (Some(carrier.clone()), Space::Finite(FiniteGts::discrete(n)))
                }
                GtsBody::Indiscrete { carrier } => {
                    let n = res.carrier(carrier)?.size().unwrap_or(0);
                    (Some(carrier.clone()), Space::Finite(FiniteGts::indiscrete(n)))
                }
                GtsBody::Line { model, window } => {
                    let kind = LineKind::parse(model).ok_or_else(|| ctx(&format!("unknown line model {model}")))?;
                    let l = match window {
                        None => LineGts::new(kind),
                        Some([a, b]) => {
                            let a = parse_rational(a).map_err(|e| ctx(&e))?;
                            let b = parse_rational(b).map_err(|e| ctx(&e))?;
                            LineGts::windowed(kind, a, b).map_err(|e: GtsError| ctx(&e))?
                        }
                    };
                    (None, Space::Line(l))
                }
                GtsBody::Product { factors, partial } => {
                    let mut gs = Vec::new();
                    let mut names: Vec<Vec<String>> = Vec::new();
                    for f in factors {
                        let entry = res.spaces.get(f).ok_or_else(|| LabError::UnknownName(f.clone()))?;
                        let Space::Finite(g) = &entry.space else {
                            return Err(ctx(&format!("factor {f} is not finite")));
                        };
                        let c = res.carrier(entry.carrier.as_deref().unwrap_or(""))?;
                        let Carrier::Finite(atoms) = c else { unreachable!("finite gts on a finite carrier") };
                        gs.push(g.clone());
                        names.push(atoms);
                    }
                    let mode = if *partial { ProductMode::GtsPt } else { ProductMode::Gts };
                    let p = product(&ProductSpec::new(gs, mode)).map_err(|e| ctx(&e))?;
                    let atoms: Vec<String> = (0..p.n())
                        .map(|i| {
                            let parts: Vec<&str> =
                                p.coords(i).iter().enumerate().map(|(j, &c)| names[j][c].as_str()).collect();
                            parts.join(".")
                        })
                        .collect();
                    let carrier = Carrier::finite(atoms).map_err(|e| ctx(&e))?;
                    res.carriers.insert(g.name.clone(), carrier);
                    (Some(g.name.clone()), Space::Finite(p.gts().clone()))
                }
            };
            if res.spaces.insert(g.name.clone(), SpaceEntry { carrier, space }).is_some() {
                return Err(doc_err(format!("duplicate gts {}", g.name)));
            }
        }
        for m in &self.maps {
            let ctx = |e: &dyn std::fmt::Display| doc_err(format!("map {}: {e}", m.name));
            let from = res.space(&m.from)?.clone();
            let to = res.space(&m.to)?.clone();
            let map = match (&m.table, &m.values, &m.pieces) {
                (Some(t), None, None) => {
                    let (Some(cf), Some(ct)) = (&from.carrier, &to.carrier) else {
                        return Err(ctx(&"tables need finite spaces on both sides"));
                    };
                    let (cf, ct) = (res.carrier(cf)?, res.carrier(ct)?);
                    if Some(t.len()) != cf.size() {
                        return Err(ctx(&format!("table has {} entries for {} atoms", t.len(), cf.size().unwrap_or(0))));
                    }
                    let table = t.iter().map(|a| ct.atom(a).map_err(|e| ctx(&e))).collect::<Result<Vec<_>, _>>()?;
                    GtsMap::Finite(FiniteMap::new(table, ct.size().unwrap_or(0)).map_err(|e| ctx(&e))?)
                }
                (None, Some(v), None) => {
                    let vals = v.iter().map(|s| parse_rational(s).map_err(|e| ctx(&e))).collect::<Result<Vec<Q>, _>>()?;
                    GtsMap::Values(vals)
                }
                (None, None, Some(ps)) => {
                    let mut pieces = Vec::new();
                    for p in ps {
                        let d = parse_interval_set(&p.domain).map_err(|e| ctx(&e))?;
                        let [iv]: [Interval; 1] =
                            d.parts().to_vec().try_into().map_err(|_| ctx(&format!("{} is not one interval", p.domain)))?;
                        pieces.push(Piece {
                            domain: iv,
                            slope: parse_rational(&p.slope).map_err(|e| ctx(&e))?,
                            intercept: parse_rational(&p.intercept).map_err(|e| ctx(&e))?,
                        });
                    }
                    GtsMap::PiecewiseLinear(PlMap::new(pieces).map_err(|e| ctx(&e))?)
                }
                _ => return Err(ctx(&"exactly one of table, values, pieces is required")),
            };
            res.maps.insert(m.name.clone(), MapEntry { from: m.from.clone(), to: m.to.clone(), map });
        }
        for b in &self.bundles {
            let ctx = |e: &dyn std::fmt::Display| doc_err(format!("bundle {}: {e}", b.name));
            let space = match &b.space {
                Some(s) => Some(res.space(s)?.space.clone()),
                None => None,
            };
            let line = || match &space {
                Some(Space::Line(l)) => Ok(l.clone()),
                _ => Err(ctx(&"needs a line space")),
            };
            let entry = match b.kind {
                BundleKind::Alexandroff => BundleEntry::Line(alexandroff_strict(&line()?).map_err(|e| ctx(&e))?),
                BundleKind::BoundedIntervals => BundleEntry::Line(bounded_interval_compactification()),
                BundleKind::Wallman => match &space {
                    Some(Space::Finite(g)) => BundleEntry::Finite(wallman_bundle(g).map_err(|e| ctx(&e))?),
                    _ => BundleEntry::Line(wallman_strict_line(&line()?).map_err(|e| ctx(&e))?),
                },
                BundleKind::Glue => BundleEntry::Glued(Box::new(two_point_glue(&line()?).map_err(|e| ctx(&e))?)),
                BundleKind::FiniteRemainder => {
                    let parts = b.parts.as_ref().ok_or_else(|| ctx(&"parts are required"))?;
                    let parts = parts.iter().map(|s| parse_interval_set(s).map_err(|e| ctx(&e))).collect::<Result<Vec<_>, _>>()?;
                    let core = parse_interval_set(b.core.as_deref().ok_or_else(|| ctx(&"core is required"))?).map_err(|e| ctx(&e))?;
                    BundleEntry::Glued(Box::new(finite_remainder(&line()?, &parts, &core).map_err(|e| ctx(&e))?))
                }
            };
            res.bundles.insert(b.name.clone(), entry);
        }
        res.suites = self.suites.iter().map(|s| (s.id.clone(), s.max_size)).collect();
        Ok(res)
    }
}

fn finite_set(c: &Carrier, s: &str) -> Result<AtomSet, LabError> {
    match c.parse_subset(s).map_err(doc_err)? {
        crate::carrier::SubsetValue::Finite { set, .. } => Ok(set),
        crate::carrier::SubsetValue::Line(_) => Err(doc_err(format!("{s} is not a finite subset"))),
    }
}

#[derive(Clone, Debug)]
pub struct SpaceEntry {
    /// Finite spaces name their carrier.
    pub carrier: Option<String>,
    pub space: Space,
}

#[derive(Clone, Debug)]
pub struct MapEntry {
    pub from: String,
    pub to: String,
    pub map: GtsMap,
}

#[derive(Clone, Debug)]
pub enum BundleEntry {
    Line(LineBundle),
    Glued(Box<Glue>),
    Finite(FiniteBundle),
}

#[derive(Clone, Debug, Default)]
pub struct Resolved {
    pub carriers: BTreeMap<String, Carrier>,
    pub rings: BTreeMap<String, (String, FiniteRing)>,
    pub spaces: BTreeMap<String, SpaceEntry>,
    pub maps: BTreeMap<String, MapEntry>,
    pub bundles: BTreeMap<String, BundleEntry>,
    pub suites: Vec<(String, Option<usize>)>,
}

impl Resolved {
    pub fn carrier(&self, name: &str) -> Result<Carrier, LabError> {
        self.carriers.get(name).cloned().ok_or_else(|| LabError::UnknownName(name.into()))
    }

    pub fn space(&self, name: &str) -> Result<&SpaceEntry, LabError> {
        self.spaces.get(name).ok_or_else(|| LabError::UnknownName(name.into()))
    }
}

/// An explicit gts whose families break a rule, with the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub object: String,
    pub violation: Violation,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    /// One line per object, in name order.
    pub summary: Vec<String>,
    pub rejections: Vec<Rejection>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.rejections.is_empty()
    }
}

/// Resolves a document and runs the axiom engine on every explicit gts.
pub fn check_document(doc: &Document) -> Result<CheckReport, LabError> {
    let res = doc.resolve()?;
    let mut report = CheckReport::default();
    for (name, c) in &res.carriers {
        report.summary.push(format!("carrier {name}: {} atoms", c.size().unwrap_or(0)));
    }
    for (name, (_, r)) in &res.rings {
        report.summary.push(format!(
            "ring {name}: {} members, complete {}, wallman base {}",
            r.len(),
            r.is_complete(),
            r.is_wallman_base()
        ));
    }
    for (name, e) in &res.spaces {
        match &e.space {
            Space::Finite(g) => {
                report.summary.push(format!("gts {name}: {} atoms, {} opens", g.n(), g.op().len()));
                if let Err(violation) = g.check_axioms() {
                    report.rejections.push(Rejection { object: name.clone(), violation });
                }
            }
            Space::Line(l) => report.summary.push(format!("gts {name}: {l}")),
        }
    }
    for (name, m) in &res.maps {
        report.summary.push(format!("map {name}: {} -> {}", m.from, m.to));
    }
    for (name, b) in &res.bundles {
        let line = match b {
            BundleEntry::Line(l) => format!("{} remainder points", l.remainder().len()),
            BundleEntry::Glued(g) => format!("{} remainder points, glued", g.strong.remainder().len()),
            BundleEntry::Finite(f) => format!("{} remainder points", f.k()),
        };
        report.summary.push(format!("bundle {name}: {line}"));
    }
    Ok(report)
}

/// The opens of a line bundle, one per shape of the base.
pub fn describe_line_bundle(b: &LineBundle) -> Vec<String> {
    let mut out = vec![
        format!("base {}", b.base()),
        format!("layer {:?}", b.layer()),
    ];
    for p in b.remainder() {
        let ends: Vec<String> = p.ends.iter().map(|e| e.to_string()).collect();
        out.push(format!("point {} at {}", p.name, ends.join(" ")));
    }
    for v in b.total_representatives() {
        if b.is_open(&v) {
            out.push(format!("open {}", b.show(&v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
[[carrier]]
name = "X"
atoms = ["a", "b"]

[[ring]]
name = "R"
carrier = "X"
members = ["{a,b}", "{}", "{a}"]

[[gts]]
name = "S"
kind = "small"
ring = "R"

[[gts]]
name = "L"
kind = "line"
model = "rom"

[[gts]]
name = "P"
kind = "product"
factors = ["S", "S"]

[[map]]
name = "f"
from = "S"
to = "S"
table = ["b", "b"]

[[map]]
name = "g"
from = "L"
to = "L"
pieces = [{ domain = "(-inf,0)", slope = "0", intercept = "0" }, { domain = "[0, inf)", slope = "2/4", intercept = "0" }]

[[bundle]]
name = "A"
kind = "alexandroff"
space = "L"

[[suite]]
id = "prop-1.8"
max_size = 2
"#;

    #[test]
    fn round_trip() {
        let doc = Document::parse(SAMPLE).unwrap();
        let text = doc.print().unwrap();
        let again = Document::parse(&text).unwrap();
        assert_eq!(again, doc.canonical().unwrap());
        assert_eq!(again.print().unwrap(), text);
        assert!(text.contains(r#"members = ["{}", "{a}", "{a,b}"]"#));
        assert!(text.contains(r#"slope = "1/2""#));
    }

    #[test]
    fn resolves_and_checks() {
        let doc = Document::parse(SAMPLE).unwrap();
        let res = doc.resolve().unwrap();
        assert_eq!(res.carrier("P").unwrap().atom("b.a").unwrap(), 1);
        let report = check_document(&doc).unwrap();
        assert!(report.passed());
        assert!(matches!(res.bundles["A"], BundleEntry::Line(_)));
    }

    #[test]
    fn explicit_rejections() {
        let text = r#"
[[carrier]]
name = "X"
atoms = ["a", "b"]

[[gts]]
name = "bad"
kind = "explicit"
carrier = "X"
families = [["{a}"], ["{b}"]]
"#;
        let doc = Document::parse(text).unwrap();
        let report = check_document(&doc).unwrap();
        assert_eq!(report.rejections.len(), 1);
        assert_eq!(report.rejections[0].violation.rule(), crate::gts::Rule::G1);
    }

    #[test]
    fn malformed_input() {
        assert!(Document::parse("[[gts]]\nname = 1").is_err());
        assert!(Document::parse("[[carrier]]\nname = \"X\"\natoms = [\"a\"]\nextra = 1").is_err());
        let dangling = Document::parse("[[gts]]\nname = \"S\"\nkind = \"small\"\nring = \"R\"").unwrap();
        assert_eq!(dangling.resolve().unwrap_err(), LabError::UnknownName("R".into()));
    }
}
