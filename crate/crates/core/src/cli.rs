//! The `chm` command line. [`run`] takes the argument list and output
//! streams so that it can be driven from tests.
//!
//! Exit codes: 0 on success, 1 on malformed input or usage, 2 when a
//! resource guard stops the computation.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bitset::ElementSet;
use crate::connectivity::{classify_with_limits, ConnectivityPair, TaxonomyReport};
use crate::dot::export_dot;
use crate::enumeration::{enumerate, EnumerationOptions, Kind};
use crate::error::{ChainmailError, Result};
use crate::exterior::exterior_with_limits;
use crate::generators::{fixture_names, named_fixture};
use crate::io::{write_catalog, PosetDocument};
use crate::limits::{Limits, MAX_N_ENV};
use crate::poset::FinitePoset;

#[derive(Debug, Parser)]
#[command(name = "chm", version, about = "Chainmails, exteriors and connectivity lattices")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the poset axioms and report basic structure.
    Validate(Source),
    /// Classify the connectivity pair (L, C); C defaults to the empty set.
    Classify(Source),
    /// Build the exterior: the totally mail-disconnected sets in the
    /// domination order.
    Exterior(Source),
    /// Count posets, connected chainmails or lattices up to isomorphism.
    Enumerate(EnumerateArgs),
    /// List the named fixtures.
    Fixtures,
    /// Write the Hasse diagram in DOT.
    ExportDot(Source),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON poset file, or `-` for standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Named fixture (see `chm fixtures`).
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Posets,
    Chainmails,
    Lattices,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Posets => Kind::Posets,
            KindArg::Chainmails => Kind::Chainmails,
            KindArg::Lattices => Kind::Lattices,
        }
    }
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "chainmails")]
    kind: KindArg,
    /// Write the canonical forms as JSON lines to this file.
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Allow sizes up to 10.
    #[arg(long)]
    deep: bool,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Report the elapsed time on standard error.
    #[arg(long)]
    timing: bool,
}

struct Loaded {
    poset: FinitePoset,
    c: Option<ElementSet>,
    labels: Option<Vec<String>>,
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_limit() {
                2
            } else {
                1
            }
        }
    }
}

/// Fixture-sized limits, with `CHM_MAX_N` overriding the element cap.
fn cli_limits() -> Result<Limits> {
    let mut limits = Limits::generous();
    if std::env::var_os(MAX_N_ENV).is_some() {
        limits.max_elements = Limits::from_env()?.max_elements;
    }
    Ok(limits)
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let limits = cli_limits()?;
    match &cli.command {
        Command::Validate(src) => {
            let l = load(src, &limits)?;
            let p = &l.poset;
            let value = json!({
                "valid": true,
                "n": p.len(),
                "covers": p.covers().len(),
                "components": p.order_connected_components().len(),
                "chainmail": p.is_chainmail(),
                "complete_lattice": p.is_complete_lattice(),
                "distributive": p.is_distributive().ok(),
            });
            emit(out, cli.pretty, &value)
        }
        Command::Classify(src) => {
            let pair = load_pair(src, &limits)?;
            let report = classify_with_limits(&pair, &limits)?;
            if cli.pretty {
                write_report(out, &report)
            } else {
                emit(out, false, &report)
            }
        }
        Command::Exterior(src) => {
            let l = load(src, &limits)?;
            let ext = exterior_with_limits(&l.poset, &limits)?;
            let order = ext.order();
            let value = json!({
                "base_n": l.poset.len(),
                "n": ext.len(),
                "complete": order.is_complete_lattice(),
                "sets": ext.sets(),
                "leq": order.strict_pairs(),
            });
            emit(out, cli.pretty, &value)
        }
        Command::Enumerate(args) => {
            let options = EnumerationOptions {
                threads: args.threads.map(usize::from),
                catalog: args.catalog.is_some(),
                deep: args.deep,
            };
            let result = enumerate(args.kind.into(), args.n, &options)?;
            if let (Some(path), Some(catalog)) = (&args.catalog, &result.catalog) {
                write_catalog(BufWriter::new(File::create(path)?), catalog)?;
            }
            if args.timing {
                writeln!(err, "elapsed: {:.3}s", result.elapsed.as_secs_f64())?;
            }
            if cli.pretty {
                writeln!(out, "{:?} on {} elements: {}", result.kind, result.n, result.count)?;
                Ok(())
            } else {
                emit(out, false, &result)
            }
        }
        Command::Fixtures => {
            let mut rows = Vec::new();
            for name in fixture_names() {
                let f = named_fixture(name)?;
                rows.push(json!({
                    "name": name,
                    "kind": if f.pair().is_some() { "pair" } else { "poset" },
                    "size": f.poset().len(),
                    "description": f.description,
                }));
            }
            if cli.pretty {
                for r in &rows {
                    writeln!(
                        out,
                        "{:<6} {:<5} {:>4}  {}",
                        r["name"].as_str().unwrap_or(""),
                        r["kind"].as_str().unwrap_or(""),
                        r["size"].as_u64().unwrap_or(0),
                        r["description"].as_str().unwrap_or("")
                    )?;
                }
                Ok(())
            } else {
                emit(out, false, &rows)
            }
        }
        Command::ExportDot(src) => {
            let l = load(src, &limits)?;
            out.write_all(export_dot(&l.poset, l.c.as_ref(), l.labels.as_deref()).as_bytes())?;
            Ok(())
        }
    }
}

fn load(src: &Source, limits: &Limits) -> Result<Loaded> {
    if let Some(name) = &src.fixture {
        let f = named_fixture(name)?;
        limits.check_elements(f.poset().len())?;
        return Ok(Loaded {
            poset: f.poset().clone(),
            c: f.pair().map(|p| p.c().clone()),
            labels: Some(f.labels),
        });
    }
    let path = src.input.as_ref().expect("clap requires a source");
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)?.read_to_string(&mut text)?;
    }
    let doc = PosetDocument::parse(&text)?;
    let poset = doc.poset(limits)?;
    if let Some(labels) = &doc.labels {
        if labels.len() != poset.len() {
            return Err(ChainmailError::Input(format!(
                "{} labels for {} elements",
                labels.len(),
                poset.len()
            )));
        }
    }
    Ok(Loaded {
        poset,
        c: doc.connected_set()?,
        labels: doc.labels,
    })
}

fn load_pair(src: &Source, limits: &Limits) -> Result<ConnectivityPair> {
    let l = load(src, limits)?;
    ConnectivityPair::new(l.poset, l.c.unwrap_or_default())
}

fn emit<T: Serialize>(out: &mut dyn Write, pretty: bool, value: &T) -> Result<()> {
    let text = if pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_report(out: &mut dyn Write, r: &TaxonomyReport) -> Result<()> {
    let yes = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "size       {}", r.size)?;
    writeln!(out, "connected  {:?}", r.connected)?;
    writeln!(out)?;
    let conditions = [
        ("CL0", r.cl0),
        ("CL1", r.cl1),
        ("CL1'", r.cl1_prime),
        ("CL1.5", r.cl1_half),
        ("CL2", r.cl2),
        ("CL3", r.cl3),
        ("preconnectivity", r.preconnectivity),
        ("connectivity", r.connectivity),
    ];
    for (name, v) in conditions {
        writeln!(out, "{name:<16} {}", yes(v))?;
    }
    writeln!(out)?;
    let classes = [
        ("kernel", r.kernel),
        ("typical", r.typical),
        ("well-founded", r.well_founded),
        ("saturated", r.saturated),
        ("separated", r.separated),
        ("Serra", r.serra),
        ("absolute", r.absolute),
        ("degenerate", r.degenerate),
    ];
    for (name, v) in classes {
        writeln!(out, "{name:<16} {}", yes(v))?;
    }
    let verdict: Vec<&str> = classes.iter().filter(|(_, v)| *v).map(|(n, _)| *n).collect();
    writeln!(out)?;
    if verdict.is_empty() {
        writeln!(out, "verdict: none of the named classes")?;
    } else {
        writeln!(out, "verdict: {}", verdict.join(", "))?;
    }
    for (flag, w) in &r.witnesses {
        writeln!(out, "witness {flag:<16} {}", serde_json::to_string(w)?)?;
    }
    Ok(())
}
