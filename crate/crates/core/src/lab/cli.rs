//! Command-line surface. The binary only parses arguments and calls [`run`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::carrier::{parse_interval_set, Carrier, IntervalSet};
use crate::compactify::finite::wallman_bundle;
use crate::compactify::line::alexandroff_report;
use crate::compactify::{alexandroff_strict, finite_remainder, two_point_glue, wallman_strict_line, Glue, LineBundle};
use crate::filters::{LineWallman, PointClass, WallmanSpace};
use crate::gts::{FiniteGts, LineGts, LineKind, Space};
use crate::ring::RingTag;

use super::document::{describe_line_bundle, Document, Resolved};
use super::{check_document, dot, enumerate_complete_rings, run_suite, LabError, SuiteConfig, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Finite,
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Alexandroff,
    Wallman,
    Glue,
    FiniteRemainder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Open,
    Closed,
    Specialization,
}

#[derive(Debug, Parser)]
#[command(name = "gtslab", version, about = "Exact workbench for generalized topological spaces")]
pub struct Cli {
    /// Largest carrier enumerated by `enumerate` and `verify`.
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub backend: Option<Backend>,
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: Format,
    /// Worker threads for suites; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for sampled line instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a space document and run the axiom engine on it.
    Check {
        /// TOML space document.
        file: PathBuf,
    },
    /// List every complete ring of subsets of an n-point carrier.
    Enumerate {
        #[arg(long)]
        size: usize,
    },
    /// Wallman space of a line model, or of a finite gts named in `--file`.
    Wallman {
        /// `rom-line`, `c0-line`, a ring tag, or a gts name from `--file`.
        space: String,
        /// TOML space document; selects the finite backend.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Build a compactification.
    Compactify {
        #[arg(value_enum)]
        construction: Construction,
        /// A line model (`rom-line`, `c0-line`) or a finite gts named in `--file`.
        space: String,
        /// TOML space document; selects the finite backend.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Open piece of a finite-remainder partition; repeat once per piece.
        #[arg(long = "part")]
        parts: Vec<String>,
        /// Compact core of a finite-remainder partition.
        #[arg(long)]
        core: Option<String>,
    },
    /// Run a theorem suite, or `all`.
    Verify {
        /// Suite id (prop-1.8, prop-2.5, prop-5.12, thm-5.16, prop-7.12, thm-8.10, prop-4.9) or `all`.
        suite: String,
        /// Flip the verdict of the first instance to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Graphviz output: a quotient lattice (`quotient:<ring tag>`) or a finite gts from `--file`.
    ExportDot {
        /// `quotient:<ring tag>` or a gts name from `--file`.
        object: String,
        /// TOML space document holding the named gts.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "open")]
        order: Order,
    },
}

/// Output sink: aligned `key: value` blocks for people, one JSON object per line for scripts.
pub struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl<'a> Out<'a> {
    pub fn new(format: Format, w: &'a mut dyn Write) -> Self {
        Out { format, w }
    }

    fn record(&mut self, kind: &str, fields: &[(&str, Value)]) {
        match self.format {
            Format::Machine => {
                let mut m = Map::new();
                m.insert("kind".into(), Value::String(kind.into()));
                for (k, v) in fields {
                    m.insert((*k).into(), v.clone());
                }
                let _ = writeln!(self.w, "{}", Value::Object(m));
            }
            Format::Human => {
                let _ = writeln!(self.w, "{kind}");
                let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in fields {
                    let text = match v {
                        Value::String(s) => s.clone(),
                        Value::Array(items) => items
                            .iter()
                            .map(|i| i.as_str().map(str::to_string).unwrap_or_else(|| i.to_string()))
                            .collect::<Vec<_>>()
                            .join("\n    "),
                        other => other.to_string(),
                    };
                    if matches!(v, Value::Array(_)) {
                        let _ = writeln!(self.w, "  {k}:\n    {text}");
                    } else {
                        let _ = writeln!(self.w, "  {k:width$}  {text}");
                    }
                }
            }
        }
    }

    fn raw(&mut self, text: &str) {
        match self.format {
            Format::Machine => self.record("dot", &[("dot", text.into())]),
            Format::Human => {
                let _ = write!(self.w, "{text}");
            }
        }
    }
}

fn strings(items: impl IntoIterator<Item = String>) -> Value {
    Value::Array(items.into_iter().map(Value::String).collect())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lab(#[from] LabError),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Runs one command, writing records to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut o = Out::new(cli.format, out);
    match dispatch(cli, &mut o) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, o: &mut Out) -> Result<i32, CliError> {
    match &cli.command {
        Command::Check { file } => check(file, o),
        Command::Enumerate { size } => enumerate(*size, cli.max_size, o),
        Command::Wallman { space, file } => wallman(cli, space, file.as_ref(), o),
        Command::Compactify { construction, space, file, parts, core } => {
            compactify(cli, *construction, space, file.as_ref(), parts, core.as_deref(), o)
        }
        Command::Verify { suite, inject_fault } => verify(cli, suite, *inject_fault, o),
        Command::ExportDot { object, file, order } => export_dot(object, file.as_ref(), *order, o),
    }
}

fn load(file: &PathBuf) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    Ok(Document::parse(&text)?)
}

fn check(file: &PathBuf, o: &mut Out) -> Result<i32, CliError> {
    let report = check_document(&load(file)?)?;
    o.record("summary", &[("objects", strings(report.summary.clone()))]);
    for r in &report.rejections {
        o.record("rejected", &[("object", r.object.clone().into()), ("violation", r.violation.to_string().into())]);
    }
    o.record("verdict", &[("passed", report.passed().into())]);
    Ok(if report.passed() { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}

fn enumerate(size: usize, max: Option<usize>, o: &mut Out) -> Result<i32, CliError> {
    if let Some(max) = max {
        if size > max {
            return usage(format!("--size {size} exceeds --max-size {max}"));
        }
    }
    let rings = enumerate_complete_rings(size)?;
    let x = Carrier::indexed(size);
    for (i, r) in rings.iter().enumerate() {
        let members: Vec<String> = r.members().iter().map(|&m| x.show(m)).collect();
        o.record("ring", &[("index", i.into()), ("members", members.join(" ").into())]);
    }
    o.record("count", &[("size", size.into()), ("rings", rings.len().into())]);
    Ok(EXIT_PASS)
}

fn line_model(name: &str) -> Result<LineGts, CliError> {
    match LineKind::parse(name) {
        Some(k) => Ok(LineGts::new(k)),
        None => usage(format!("unknown line model `{name}`; expected rom-line, c0-line or rom-top")),
    }
}

/// Picks the backend: explicit flag, else finite when a document is given.
fn backend(cli: &Cli, file: Option<&PathBuf>) -> Backend {
    cli.backend.unwrap_or(if file.is_some() { Backend::Finite } else { Backend::Line })
}

fn finite_space(file: Option<&PathBuf>, name: &str) -> Result<(Carrier, FiniteGts), CliError> {
    let Some(file) = file else {
        return usage("the finite backend needs --file");
    };
    let res: Resolved = load(file)?.resolve()?;
    let entry = res.space(name)?;
    match (&entry.space, &entry.carrier) {
        (Space::Finite(g), Some(c)) => Ok((res.carrier(c)?, g.clone())),
        (Space::Finite(g), None) => Ok((Carrier::indexed(g.n()), g.clone())),
        (Space::Line(_), _) => usage(format!("`{name}` is a line model")),
    }
}

fn wallman(cli: &Cli, space: &str, file: Option<&PathBuf>, o: &mut Out) -> Result<i32, CliError> {
    match backend(cli, file) {
        Backend::Line => {
            let tag = match RingTag::parse(space) {
                Ok(t) => t,
                Err(_) => match line_model(space)?.kind() {
                    LineKind::C0 => RingTag::C0Rom,
                    _ => RingTag::RomClosed,
                },
            };
            let w = LineWallman::new(tag).map_err(|e| CliError::Usage(e.to_string()))?;
            let classes: Vec<String> = w
                .classes()
                .iter()
                .map(|c| match c {
                    PointClass::FixedRational => "fixed at each rational".to_string(),
                    PointClass::FixedIrrational => "fixed at each irrational".to_string(),
                    PointClass::End(p) => format!("free {p}"),
                })
                .collect();
            o.record(
                "wallman",
                &[
                    ("ring", tag.to_string().into()),
                    ("free points", w.free_points().len().into()),
                    ("compact", w.is_compact_certified().into()),
                    ("classes", strings(classes)),
                ],
            );
        }
        Backend::Finite => {
            let (x, g) = finite_space(file, space)?;
            let ring = g.closed_ring();
            let w = WallmanSpace::new(&ring).map_err(|e| CliError::Usage(e.to_string()))?;
            let points: Vec<String> = w.points().iter().map(|&m| format!("at {}", x.show(m))).collect();
            let embedding: Vec<String> = (0..g.n())
                .map(|i| {
                    let target = w.embed(&ring, i).map(|j| j.to_string()).unwrap_or_else(|e| e.to_string());
                    format!("{} -> {target}", x.show(crate::carrier::AtomSet::singleton(i)))
                })
                .collect();
            o.record(
                "wallman",
                &[
                    ("space", space.into()),
                    ("points", strings(points)),
                    ("closed base size", w.closed_base().len().into()),
                    ("embedding", strings(embedding)),
                    ("total", (0..g.n()).all(|i| w.embed(&ring, i).is_ok()).into()),
                    ("injective", w.injectivity_failure(&ring).is_none().into()),
                    ("dense", w.image_is_dense(&ring).into()),
                ],
            );
        }
    }
    Ok(EXIT_PASS)
}

fn bundle_record(o: &mut Out, name: &str, b: &LineBundle) {
    let add = b.additivity();
    let finitely = match &add.finitely {
        Ok(()) => "true".to_string(),
        Err((u, v)) => format!("false, U={u}, V={v}"),
    };
    let admissibly = match &add.admissibly {
        Ok(()) => "true".to_string(),
        Err(w) => format!("false, {w}"),
    };
    o.record(
        name,
        &[
            ("bundle", b.to_string().into()),
            ("strict", b.is_strict_compactification().into()),
            ("weakly hausdorff", b.is_weakly_hausdorff().into()),
            ("finitely additive", finitely.into()),
            ("admissibly additive", admissibly.into()),
            ("cov_w is a gts", b.cov_w_is_gts().into()),
            ("description", strings(describe_line_bundle(b))),
        ],
    );
}

fn glue_records(o: &mut Out, g: &Glue) {
    o.record(
        "glue",
        &[
            ("ring", g.tag().to_string().into()),
            ("lattice classes", g.lattice.len().into()),
            ("psi", strings(g.psi.iter().map(|(s, c)| format!("{s} -> [{}]", g.lattice.reps()[*c])))),
            ("psi correlated", g.is_psi_correlated().into()),
            ("strong layer valid", g.strong_is_valid().into()),
            ("ultrafilters match remainder", g.ultrafilters_match_remainder().into()),
        ],
    );
    bundle_record(o, "strong", &g.strong);
    bundle_record(o, "wallmanian", &g.wallmanian);
}

fn parse_set(s: &str) -> Result<IntervalSet, CliError> {
    parse_interval_set(s).map_err(|e| CliError::Usage(format!("{s}: {e}")))
}

fn compactify(
    cli: &Cli,
    construction: Construction,
    space: &str,
    file: Option<&PathBuf>,
    parts: &[String],
    core: Option<&str>,
    o: &mut Out,
) -> Result<i32, CliError> {
    let fail = |e: crate::compactify::CompactifyError| CliError::Usage(e.to_string());
    if construction == Construction::Wallman && backend(cli, file) == Backend::Finite {
        let (x, g) = finite_space(file, space)?;
        let b = wallman_bundle(&g).map_err(fail)?;
        let opens: Vec<String> = b.tau().iter().map(|&u| x.show(u)).collect();
        o.record(
            "finite bundle",
            &[("space", space.into()), ("added points", b.k().into()), ("opens", strings(opens))],
        );
        return Ok(EXIT_PASS);
    }
    if backend(cli, file) == Backend::Finite {
        return usage("this construction works on line models only");
    }
    let line = line_model(space)?;
    match construction {
        Construction::Alexandroff => {
            let b = alexandroff_strict(&line).map_err(fail)?;
            let r = alexandroff_report(&b);
            bundle_record(o, "alexandroff", &b);
            o.record(
                "checks",
                &[
                    ("strict one point", r.strict_one_point.into()),
                    ("weakly hausdorff", r.weakly_hausdorff.into()),
                    ("strongest layer", r.strongest_layer.into()),
                ],
            );
        }
        Construction::Wallman => bundle_record(o, "wallman", &wallman_strict_line(&line).map_err(fail)?),
        Construction::Glue => glue_records(o, &two_point_glue(&line).map_err(fail)?),
        Construction::FiniteRemainder => {
            let (parts, core) = if parts.is_empty() {
                (vec![parse_set("(-inf,-1)")?, parse_set("(1,inf)")?], parse_set("[-1,1]")?)
            } else {
                let Some(core) = core else {
                    return usage("--core is required with --part");
                };
                (parts.iter().map(|p| parse_set(p)).collect::<Result<_, _>>()?, parse_set(core)?)
            };
            glue_records(o, &finite_remainder(&line, &parts, &core).map_err(fail)?);
        }
    }
    Ok(EXIT_PASS)
}

fn verify(cli: &Cli, suite: &str, inject_fault: bool, o: &mut Out) -> Result<i32, CliError> {
    let ids: Vec<&str> = if suite == "all" {
        SUITES
            .iter()
            .map(|(id, _)| *id)
            .filter(|id| match cli.backend {
                Some(Backend::Line) => *id == "prop-7.12",
                Some(Backend::Finite) => *id != "prop-7.12",
                None => true,
            })
            .collect()
    } else {
        vec![suite]
    };
    let config = SuiteConfig { max_size: cli.max_size.unwrap_or(3), jobs: cli.jobs, seed: cli.seed, inject_fault };
    let mut code = EXIT_PASS;
    for id in ids {
        let report = run_suite(id, &config)?;
        for c in &report.counterexamples {
            o.record(
                "counterexample",
                &[
                    ("suite", id.into()),
                    ("instance", c.key.clone().into()),
                    ("detail", c.detail.clone().into()),
                    ("document", c.document.clone().map(Value::String).unwrap_or(Value::Null)),
                ],
            );
        }
        o.record(
            "suite",
            &[
                ("id", id.into()),
                ("instances", report.instances.into()),
                ("counterexamples", report.counterexamples.len().into()),
                ("verdict", if report.passed() { "pass" } else { "fail" }.into()),
            ],
        );
        if !report.passed() {
            code = EXIT_COUNTEREXAMPLE;
        }
    }
    Ok(code)
}

fn export_dot(object: &str, file: Option<&PathBuf>, order: Order, o: &mut Out) -> Result<i32, CliError> {
    if let Some(tag) = object.strip_prefix("quotient:") {
        let tag = RingTag::parse(tag).map_err(|e| CliError::Usage(e.to_string()))?;
        o.raw(&dot::quotient_lattice(tag));
        return Ok(EXIT_PASS);
    }
    let (x, g) = finite_space(file, object)?;
    let text = match order {
        Order::Open => dot::open_lattice(object, &x, &g),
        Order::Closed => dot::closed_lattice(object, &x, &g),
        Order::Specialization => dot::specialization(object, &x, &g),
    };
    o.raw(&text);
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("gtslab").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn enumerate_counts() {
        let (code, text) = run_args(&["--format", "machine", "enumerate", "--size", "2"]);
        assert_eq!(code, 0);
        assert!(text.lines().last().unwrap().contains("\"rings\":4"), "{text}");
        assert_eq!(run_args(&["--max-size", "2", "enumerate", "--size", "3"]).0, 2);
        assert_eq!(run_args(&["enumerate", "--size", "5"]).0, 2);
    }

    #[test]
    fn alexandroff_rom_line() {
        let (code, text) = run_args(&["compactify", "alexandroff", "rom-line"]);
        assert_eq!(code, 0);
        assert!(text.contains("finitely additive"), "{text}");
        assert!(text.contains("false, U=(-inf,0)"), "{text}");
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run_args(&["--max-size", "2", "verify", "prop-1.8"]).0, 0);
        assert_eq!(run_args(&["--max-size", "2", "verify", "prop-1.8", "--inject-fault"]).0, 1);
        assert_eq!(run_args(&["verify", "prop-0.0"]).0, 2);
    }

    #[test]
    fn quotient_dot() {
        let (code, text) = run_args(&["export-dot", "quotient:RomClosed"]);
        assert_eq!(code, 0);
        assert_eq!(text.matches("label=").count(), 4);
    }
}
