//! The `crslab` command line.
//!
//! [`run`] takes its arguments and streams explicitly, so the binary is a
//! one-line wrapper and tests can drive it in-process. Exit codes: 0 on
//! success, 1 on a negative verdict for commands that assert a positive one,
//! 2 on usage or input errors, 3 when a size cap is exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{
    bounds_b, bounds_c, composite_size_bounds_b, composite_size_bounds_c, enumerate_minimal,
    tightness_b, tightness_c, BoundsReport, DEFAULT_ENUMERATION_CAP,
};
use crate::families::{
    compose, example_graph, member_composite, null_base, CompositeGraph, Family, FamilyGraph,
    LatticeShape, NamedGraph,
};
use crate::graph::{Graph, VertexLabel};
use crate::io::{read_input, to_json_lines, write_composite, write_graph, Format, Input};
use crate::resolving::{
    check_crs, is_completeness_resolvable_with, metric_dimension_with, perfect_metric_basis_with,
    CrsCertificate, SearchOptions, DEFAULT_ORDER_CAP,
};
use crate::suites::{run_suite, SuiteOptions};

pub const ORDER_CAP_ENV: &str = "CRSLAB_ORDER_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "crslab",
    version,
    about = "Completeness-resolvable graphs: construct, verify, enumerate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph and print it.
    Construct {
        #[arg(long)]
        family: NamedGraph,
        #[arg(long)]
        k: usize,
        /// Join the lattice graph with its natural base graph.
        #[arg(long)]
        compose: bool,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Check a CRS candidate or family membership.
    Verify(VerifyArgs),
    /// List minimal lattice graphs as JSON lines.
    Enumerate {
        #[arg(long)]
        minimal: Family,
        #[arg(long)]
        k: usize,
        /// Base graph on [k] for family B; the null base when omitted.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Edge-count bounds for minimal graphs, with tightness for a lattice.
    Bounds {
        family: Family,
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        base: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// Report whether this minimal lattice graph attains the bounds.
        #[arg(long)]
        lattice: Option<String>,
        /// Bounds on the whole composite instead of the lattice part.
        #[arg(long)]
        composite: bool,
    },
    /// Decide whether a graph is completeness-resolvable.
    Classify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        order_cap: Option<usize>,
    },
    /// Metric dimension, a basis, and whether a basis is also a CRS.
    Dim {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        order_cap: Option<usize>,
    },
    /// Run acceptance criteria: `all`, a number, or a criterion name.
    Suite {
        #[arg(long, default_value = "all")]
        name: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyTarget {
    /// Comma-separated vertices of W, e.g. `b1,b2` or `(1,2),(2,1)`.
    #[arg(long)]
    w: Option<String>,
    #[arg(long)]
    membership: Option<Family>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    target: VerifyTarget,
}

/// Parses and runs one command line, returning the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut ctx = Context { stdin, out };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_cap_exceeded() => EXIT_CAP,
        Error::NotMinimal | Error::NotMember(_) => EXIT_NEGATIVE,
        _ => EXIT_USAGE,
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Context<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        let mut text = String::new();
        if path == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        } else {
            text =
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        }
        Ok(text)
    }

    fn input(&mut self, path: &str) -> Result<Input> {
        read_input(&self.read(path)?)
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| Error::Parse(format!("output: {e}")))
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = serde_json::to_string(value).expect("report serializes");
        self.line(&text)
    }
}

fn order_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(ORDER_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{ORDER_CAP_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidParameter("--jobs must be positive".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Splits a vertex list at commas outside parentheses and brackets.
pub fn parse_vertex_list(s: &str) -> Result<Vec<VertexLabel>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
        .into_iter()
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// A composite from any accepted input: the compact composite form, a
/// labeled graph on `[k] ⊔ [m]^k`, or, for 𝒞, a bare lattice graph on
/// `[3]^k` taken with the null base.
fn composite_input(input: Input, family: Family) -> Result<CompositeGraph> {
    let c = match input {
        Input::Composite(c) => c,
        Input::Graph(g) if g.vertices().iter().any(|v| v.as_base().is_some()) => {
            CompositeGraph::decompose(&g)?
        }
        Input::Graph(g) => {
            let shape = LatticeShape::of_graph(&g)?;
            if family == Family::B {
                return Err(Error::WrongVertexSet(
                    "family B needs a composite with its base graph".into(),
                ));
            }
            compose(&null_base(shape.k())?, &g, shape.k(), shape.m())?
        }
    };
    if c.m() != family.m() {
        return Err(Error::WrongVertexSet(format!(
            "family {family} lives on [{}]^k, the input is on [{}]^{}",
            family.m(),
            c.m(),
            c.k()
        )));
    }
    Ok(c)
}

/// A base graph on `[k]`, given with base labels or as a plain graph on
/// `0..k` or `1..=k`.
fn base_input(input: Input) -> Result<Graph> {
    let g = match input {
        Input::Composite(c) => return Ok(c.base().clone()),
        Input::Graph(g) => g,
    };
    if g.vertices().iter().all(|v| v.as_base().is_some()) {
        crate::families::check_base(&g, g.order())?;
        return Ok(g);
    }
    let offset = match g.vertices().first() {
        Some(VertexLabel::Plain(0)) => 1,
        Some(VertexLabel::Plain(1)) => 0,
        _ => return Err(Error::WrongVertexSet("base graph must be on [k]".into())),
    };
    let relabeled = g.relabeled(|v| match v {
        VertexLabel::Plain(i) => VertexLabel::Base(i + offset),
        other => other.clone(),
    })?;
    crate::families::check_base(&relabeled, relabeled.order())?;
    Ok(relabeled)
}

fn lattice_input(input: Input) -> Graph {
    match input {
        Input::Composite(c) => c.lattice().clone(),
        Input::Graph(g) => g,
    }
}

#[derive(Serialize)]
struct DimReport {
    dimension: usize,
    basis: Vec<VertexLabel>,
    diameter: u32,
    perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    perfect_basis: Option<CrsCertificate>,
}

fn dispatch(command: Command, ctx: &mut Context<'_>) -> Result<i32> {
    match command {
        Command::Construct {
            family,
            k,
            compose,
            format,
        } => {
            let text = match example_graph(family, k)? {
                FamilyGraph::Composite(c) => write_composite(&c, format),
                g @ FamilyGraph::Lattice(_) if compose => {
                    write_composite(&g.into_composite(family)?, format)
                }
                FamilyGraph::Lattice(g) => write_graph(&g, format),
            };
            ctx.line(text.trim_end())?;
            Ok(EXIT_OK)
        }
        Command::Verify(VerifyArgs { graph, target }) => {
            let input = ctx.input(&graph)?;
            if let Some(family) = target.membership {
                let report = member_composite(&composite_input(input, family)?)?;
                ctx.json(&report)?;
                return Ok(if report.member {
                    EXIT_OK
                } else {
                    EXIT_NEGATIVE
                });
            }
            let w = parse_vertex_list(target.w.as_deref().unwrap_or_default())?;
            match check_crs(&input.graph(), &w)? {
                Ok(cert) => {
                    ctx.json(&cert)?;
                    Ok(EXIT_OK)
                }
                Err(failure) => {
                    ctx.json(&failure)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Enumerate {
            minimal,
            k,
            base,
            jobs,
            cap,
        } => {
            let base = base
                .map(|b| ctx.input(&b).and_then(base_input))
                .transpose()?;
            let found = with_jobs(jobs, || enumerate_minimal(minimal, k, base.as_ref(), cap))??;
            let text = to_json_lines(&found);
            ctx.out
                .write_all(text.as_bytes())
                .map_err(|e| Error::Parse(e.to_string()))?;
            Ok(EXIT_OK)
        }
        Command::Bounds {
            family,
            base,
            k,
            lattice,
            composite,
        } => {
            let base = match (&base, family) {
                (Some(path), _) => Some(ctx.input(path).and_then(base_input)?),
                (None, Family::B) => Some(null_base(k.expect("clap requires --k"))?),
                (None, Family::C) => None,
            };
            let k = base
                .as_ref()
                .map(Graph::order)
                .or(k)
                .expect("clap requires --base or --k");
            let report: BoundsReport = match (family, lattice) {
                (Family::B, Some(path)) => {
                    let h2 = lattice_input(ctx.input(&path)?);
                    tightness_b(base.as_ref().expect("set above"), &h2)?
                }
                (Family::C, Some(path)) => tightness_c(&lattice_input(ctx.input(&path)?))?,
                (Family::B, None) if composite => {
                    composite_size_bounds_b(base.as_ref().expect("set above"))?.into()
                }
                (Family::B, None) => bounds_b(base.as_ref().expect("set above"))?.into(),
                (Family::C, None) if composite => composite_size_bounds_c(k)?.into(),
                (Family::C, None) => bounds_c(k)?.into(),
            };
            ctx.json(&report)?;
            Ok(EXIT_OK)
        }
        Command::Classify {
            graph,
            order_cap: cap,
        } => {
            let opts = SearchOptions {
                order_cap: order_cap(cap)?,
                ..SearchOptions::default()
            };
            let g = ctx.input(&graph)?.graph();
            ctx.json(&is_completeness_resolvable_with(&g, &opts)?)?;
            Ok(EXIT_OK)
        }
        Command::Dim {
            graph,
            order_cap: cap,
        } => {
            let opts = SearchOptions {
                order_cap: order_cap(cap)?,
                ..SearchOptions::default()
            };
            let g = ctx.input(&graph)?.graph();
            let basis = metric_dimension_with(&g, &opts)?;
            let perfect_basis = perfect_metric_basis_with(&g, &opts)?;
            ctx.json(&DimReport {
                dimension: basis.dimension,
                basis: basis.basis,
                diameter: g.diameter()?,
                perfect: perfect_basis.is_some(),
                perfect_basis,
            })?;
            Ok(EXIT_OK)
        }
        Command::Suite { name, jobs, seed } => {
            let opts = SuiteOptions {
                seed: seed.unwrap_or(SuiteOptions::default().seed),
            };
            let results = with_jobs(jobs, || run_suite(&name, &opts))??;
            let mut all = true;
            for r in &results {
                all &= r.passed;
                ctx.line(&r.to_string())?;
            }
            Ok(if all { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("crslab").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn vertex_lists() {
        let w = parse_vertex_list("b1, (1,2),[2,1],7").unwrap();
        assert_eq!(
            w,
            vec![
                VertexLabel::Base(1),
                VertexLabel::lattice(&[1, 2]),
                VertexLabel::lattice(&[2, 1]),
                VertexLabel::Plain(7)
            ]
        );
        assert!(parse_vertex_list("(1,x)").is_err());
    }

    #[test]
    fn construct_then_verify_via_stdin() {
        let (code, t2, _) = call(&["construct", "--family", "T", "--k", "2"], "");
        assert_eq!(code, 0);
        let (code, report, _) = call(&["verify", "--membership", "C", "--graph", "-"], &t2);
        assert_eq!(code, 0);
        assert!(report.contains("\"member\":true"));
    }

    #[test]
    fn bounds_json() {
        let (code, out, _) = call(&["bounds", "C", "--k", "3"], "");
        assert_eq!((code, out.trim()), (0, r#"{"lower":14,"upper":39}"#));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["construct", "--family", "nope", "--k", "2"], "").0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["classify", "--graph", "-"], "not a graph").0,
            EXIT_USAGE
        );
        let (code, _, err) = call(&["enumerate", "--minimal", "C", "--k", "3"], "");
        assert_eq!(code, EXIT_CAP, "{err}");
        let (_, k4, _) = call(
            &["construct", "--family", "Gamma", "--k", "2", "--compose"],
            "",
        );
        assert_eq!(
            call(&["classify", "--graph", "-", "--order-cap", "4"], &k4).0,
            EXIT_CAP
        );
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }
}
