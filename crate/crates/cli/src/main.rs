mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use resonantk::catalog::{self, CatalogName, TauExpectation};
use resonantk::leapfrog::leapfrog;
use resonantk::matching::MatchingError;
use resonantk::resonance::{
    clar_number, find_all_g_star, fries_number, resonance_order, sextet_polynomial,
    ResonanceError, DEFAULT_PM_CAP,
};
use resonantk::rings::{find_polygonal_rings, pentagon_clusters, tau, FaceFilter};
use resonantk::{parse_graph, write_graph, FullereneGraph, GraphError};
use serde_json::{json, Value};

use report::{sorted, AnalysisReport, Options};

const PM_CAP_VAR: &str = "RESONANTK_PM_CAP";

/// Resonance analysis of fullerene graphs given as rotation systems.
#[derive(Parser)]
#[command(name = "resonantk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that files are fullerene rotation systems.
    Validate { files: Vec<PathBuf> },
    /// Full report for one or more graphs.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Also compute the Fries number (enumerates perfect matchings).
        #[arg(long)]
        fries: bool,
        #[command(flatten)]
        cap: PmCap,
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// k-resonance order and the first failing hexagon set.
    Order {
        file: PathBuf,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Sextet polynomial.
    Sextet {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Clar number.
    Clar { file: PathBuf },
    /// Fries number.
    Fries {
        file: PathBuf,
        #[command(flatten)]
        cap: PmCap,
    },
    /// Leapfrog transform.
    Leapfrog {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Write the canonical matching as `u-v` lines.
        #[arg(long)]
        emit_matching: Option<PathBuf>,
        /// Write face provenance as JSON.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Polygonal rings with their statistics.
    Rings {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Only rings made of pentagons.
        #[arg(long)]
        pentagonal: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pentagon clusters and maximal pentagonal fragments.
    Fragments {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Vertices adjacent to three pairwise disjoint hexagons.
    Gstar {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Built-in graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Capped nanotube.
    Nanotube {
        #[arg(long, value_enum)]
        cap: CapArg,
        #[arg(long)]
        rings: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recompute every expected fact.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum CapArg {
    R5,
    R6,
}

#[derive(Args)]
struct PmCap {
    /// Perfect-matching enumeration cap (default: $RESONANTK_PM_CAP or 1000000).
    #[arg(long)]
    pm_cap: Option<usize>,
}

impl PmCap {
    fn resolve(&self) -> Result<usize> {
        if let Some(cap) = self.pm_cap {
            return Ok(cap);
        }
        match std::env::var(PM_CAP_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .with_context(|| format!("{PM_CAP_VAR} must be a nonnegative integer, got `{v}`")),
            Err(_) => Ok(DEFAULT_PM_CAP),
        }
    }
}

fn load(path: &Path) -> Result<FullereneGraph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let g = parse_graph(&text).with_context(|| format!("{}", path.display()))?;
    FullereneGraph::validate(g).with_context(|| format!("{}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(v: Value) {
    println!("{}", serde_json::to_string_pretty(&sorted(v)).unwrap());
}

#[cfg(feature = "parallel")]
fn analyze_all(files: &[PathBuf], opts: Options) -> Vec<Result<AnalysisReport>> {
    use rayon::prelude::*;
    files
        .par_iter()
        .map(|p| AnalysisReport::build(&load(p)?, opts))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn analyze_all(files: &[PathBuf], opts: Options) -> Vec<Result<AnalysisReport>> {
    files
        .iter()
        .map(|p| AnalysisReport::build(&load(p)?, opts))
        .collect()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate { files } => {
            for p in &files {
                let f = load(p)?;
                println!(
                    "{}: ok, {} vertices, {} hexagons",
                    p.display(),
                    f.vertex_count(),
                    f.hexagons().len()
                );
            }
        }
        Command::Analyze {
            files,
            json,
            fries,
            cap,
            max_k,
        } => {
            let opts = Options {
                fries,
                pm_cap: cap.resolve()?,
                max_k,
            };
            let mut reports = Vec::with_capacity(files.len());
            for (path, r) in files.iter().zip(analyze_all(&files, opts)) {
                reports.push((path, r?));
            }
            if json {
                let values: Vec<Value> = reports.iter().map(|(_, r)| r.to_json()).collect();
                let out = if values.len() == 1 {
                    values.into_iter().next().unwrap()
                } else {
                    Value::Array(values)
                };
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                for (i, (path, r)) in reports.iter().enumerate() {
                    if i > 0 {
                        println!();
                    }
                    println!("{}", path.display());
                    print!("{}", r.render_text());
                }
            }
        }
        Command::Order { file, max_k, json } => {
            let rep = resonance_order(&load(&file)?, max_k)?;
            if json {
                print_json(serde_json::to_value(&rep)?);
            } else {
                println!("{}", rep.order);
                if let Some(set) = rep.failing_set {
                    println!("failing set: {set:?}");
                }
            }
        }
        Command::Sextet { file, json } => {
            let p = sextet_polynomial(&load(&file)?);
            if json {
                print_json(json!({ "coefficients": p.descending(), "polynomial": p.to_string() }));
            } else {
                println!("{p}");
            }
        }
        Command::Clar { file } => println!("{}", clar_number(&load(&file)?)),
        Command::Fries { file, cap } => {
            println!("{}", fries_number(&load(&file)?, cap.resolve()?)?)
        }
        Command::Leapfrog {
            input,
            output,
            emit_matching,
            provenance,
        } => {
            let r = leapfrog(&load(&input)?);
            write_out(Some(&output), &write_graph(r.image.graph()))?;
            if let Some(p) = emit_matching {
                write_out(Some(&p), &r.m0.to_lines())?;
            }
            if let Some(p) = provenance {
                let faces: Vec<Value> = r
                    .provenance
                    .iter()
                    .enumerate()
                    .map(|(id, prov)| {
                        let mut v = serde_json::to_value(prov).unwrap();
                        v["face"] = json!(id);
                        v
                    })
                    .collect();
                let text = serde_json::to_string_pretty(&sorted(Value::Array(faces)))?;
                write_out(Some(&p), &(text + "\n"))?;
            }
        }
        Command::Rings {
            file,
            max_len,
            pentagonal,
            json,
        } => {
            let f = load(&file)?;
            let filter = if pentagonal {
                FaceFilter::PentagonsOnly
            } else {
                FaceFilter::Any
            };
            let rings = find_polygonal_rings(&f, max_len, filter);
            if json {
                print_json(serde_json::to_value(&rings)?);
            } else {
                for r in &rings {
                    println!(
                        "l={} s={} s'={} r={} n5={} n6={} faces={:?}",
                        r.l(),
                        r.s(),
                        r.s_prime(),
                        r.r(),
                        r.n5(),
                        r.n6(),
                        r.faces
                    );
                }
            }
        }
        Command::Fragments { file, json } => {
            let clusters = pentagon_clusters(&load(&file)?);
            if json {
                print_json(serde_json::to_value(&clusters)?);
            } else {
                for c in &clusters {
                    println!(
                        "{:?} faces={:?} gamma={} |W|={} maximal={}",
                        c.shape,
                        c.faces,
                        c.gamma,
                        c.w.len(),
                        c.maximal
                    );
                }
            }
        }
        Command::Gstar { file, json } => {
            let all = find_all_g_star(&load(&file)?);
            if json {
                print_json(serde_json::to_value(&all)?);
            } else if all.is_empty() {
                println!("none");
            } else {
                for w in &all {
                    println!("vertex {} hexagons {:?}", w.vertex, w.hexagons);
                }
            }
        }
        Command::Catalog { action } => catalog_command(action)?,
        Command::Nanotube { cap, rings, output } => {
            let cap = match cap {
                CapArg::R5 => catalog::Cap::R5,
                CapArg::R6 => catalog::Cap::R6,
            };
            let f = catalog::nanotube(cap, rings)?;
            write_out(output.as_deref(), &write_graph(f.graph()))?;
        }
    }
    Ok(())
}

fn catalog_command(action: CatalogAction) -> Result<()> {
    match action {
        CatalogAction::List => {
            for name in CatalogName::ALL {
                let e = catalog::catalog_graph(name);
                println!(
                    "{:<6} {:>3} vertices  {}",
                    name.as_str(),
                    e.graph.vertex_count(),
                    name.description()
                );
            }
        }
        CatalogAction::Emit { name, output } => {
            let e = catalog::catalog_graph_by_name(&name)?;
            let text = format!(
                "# {}: {}\n{}",
                e.name,
                e.name.description(),
                write_graph(e.graph.graph())
            );
            write_out(output.as_deref(), &text)?;
        }
        CatalogAction::Verify => {
            let mut failures = 0;
            for name in CatalogName::ALL {
                let problems = verify_entry(name);
                if problems.is_empty() {
                    println!("{name}: ok");
                } else {
                    failures += 1;
                    println!("{name}: MISMATCH {}", problems.join("; "));
                }
            }
            if failures > 0 {
                bail!("{failures} catalog entries do not match their expected facts");
            }
        }
    }
    Ok(())
}

fn verify_entry(name: CatalogName) -> Vec<String> {
    let e = catalog::catalog_graph(name);
    let f = &e.graph;
    let mut problems = Vec::new();
    if f.hexagons().len() != e.expected.hexagons {
        problems.push(format!("hexagons {}", f.hexagons().len()));
    }
    let poly = sextet_polynomial(f);
    if let Some(expected) = &e.expected.sextet {
        if &poly != expected {
            problems.push(format!("sextet {poly} != {expected}"));
        }
    }
    let t = tau(f);
    let tau_ok = match e.expected.tau {
        TauExpectation::Value(v) => t == Some(v),
        TauExpectation::NoPentagonalRing => t.is_none(),
        TauExpectation::Unpinned => true,
    };
    if !tau_ok {
        problems.push(format!("tau {t:?}"));
    }
    match resonance_order(f, None) {
        Ok(rep) if e.expected.order.admits(rep.order) => {}
        Ok(rep) => problems.push(format!("order {} (expected {})", rep.order, e.expected.order)),
        Err(err) => problems.push(format!("order: {err}")),
    }
    problems
}

/// 2 for size guards and enumeration caps, 1 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    let guard = err.chain().any(|c| {
        c.downcast_ref::<ResonanceError>().is_some_and(ResonanceError::is_guard)
            || c.downcast_ref::<MatchingError>().is_some_and(MatchingError::is_guard)
            || matches!(c.downcast_ref::<GraphError>(), Some(GraphError::GuardExceeded(_)))
    });
    if guard {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
