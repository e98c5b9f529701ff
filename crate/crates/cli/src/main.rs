use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kimmerse::cmc::brute_force_chi_prime_r;
use kimmerse::generators::{gen_family, FAMILIES};
use kimmerse::io::{emit_dot, emit_edge_list, parse_edge_list};
use kimmerse::oracles::{brute_alpha, brute_chi, brute_immersion_exists};
use kimmerse::stress::run_campaign;
use kimmerse::{
    chi_alpha2, construct_immersion, cycle_matching_colouring, validate_cm_colouring, verify_immersion, Immersion,
    Multigraph,
};

#[derive(Parser)]
#[command(
    name = "kimmerse",
    version,
    about = "Cycle-matching colourings and weak clique immersions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Chi,
    Alpha,
    Immersion,
    ChiPrime,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle-matching edge colouring with at most Δ colours.
    Colour {
        /// Edge-list file; stdin when omitted or "-".
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Weak K_χ immersion of a graph with independence number at most 2.
    Immerse {
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Checks an immersion certificate against a graph.
    Verify {
        graph: PathBuf,
        /// Immersion JSON as produced by `immerse`; stdin when omitted or "-".
        #[arg(long)]
        immersion: Option<PathBuf>,
        /// Required clique size; defaults to χ when α ≤ 2, else the corner count.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Writes a generated instance to stdout.
    Gen {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge list when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Exhaustive reference values for small graphs.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        graph: Option<PathBuf>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Seeded construction-and-verification campaign.
    Stress {
        #[arg(long, default_value_t = 40)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Directory receiving one edge-list file per counterexample.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Multigraph> {
    Ok(parse_edge_list(&read_input(path)?)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn immersion_dot(g: &Multigraph, imm: &Immersion) -> String {
    let mut owner = vec![None; g.m()];
    for p in &imm.paths {
        for &e in &p.edges {
            owner[e] = Some(p.ends);
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        if imm.corners.contains(&v) {
            let _ = writeln!(out, "  {v} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match owner[e] {
            Some([a, b]) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{e}: {a}-{b}\", penwidth=2];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\", style=dotted];");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Returns whether everything that was checked passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Colour { graph, r } => {
            let g = read_graph(graph.as_deref())?;
            let col = cycle_matching_colouring(&g, r)?;
            let report = validate_cm_colouring(&g, &col, r);
            eprintln!(
                "colour: n = {}, m = {}, Δ = {}, palette = {}",
                g.n(),
                g.m(),
                g.max_degree(),
                col.palette
            );
            let ok = report.valid && col.palette <= g.max_degree().max(1);
            print_json(&json!({
                "r": r,
                "palette": col.palette,
                "colouring": col.as_map(),
                "report": report,
            }));
            Ok(ok)
        }
        Command::Immerse { graph, format } => {
            let g = read_graph(graph.as_deref())?;
            let (chi, _) = chi_alpha2(&g)?;
            let imm = construct_immersion(&g)?;
            let cert = verify_immersion(&g, &imm, chi);
            eprintln!(
                "immerse: χ = {chi}, {} corners, total length {}",
                imm.t(),
                cert.total_length
            );
            if !cert.accepted {
                print_json(
                    &json!({ "error": "constructed immersion rejected", "kind": "contract", "certificate": cert }),
                );
                return Ok(false);
            }
            match format {
                Format::Json => print_json(&json!({ "chi": chi, "immersion": imm, "certificate": cert })),
                Format::Dot => print!("{}", immersion_dot(&g, &imm)),
            }
            Ok(true)
        }
        Command::Verify { graph, immersion, t } => {
            let g = read_graph(Some(&graph))?;
            let text = read_input(immersion.as_deref())?;
            let value: Value = serde_json::from_str(&text).context("parsing immersion JSON")?;
            let body = value.get("immersion").cloned().unwrap_or(value);
            let imm: Immersion = serde_json::from_value(body).context("decoding immersion")?;
            let t = match t {
                Some(t) => t,
                None if g.alpha_at_most_2() => chi_alpha2(&g)?.0,
                None => imm.t(),
            };
            let cert = verify_immersion(&g, &imm, t);
            match &cert.violation {
                None => eprintln!("verify: accepted K_{t}"),
                Some(v) => eprintln!("verify: rejected: {v}"),
            }
            print_json(&json!(cert));
            Ok(cert.accepted)
        }
        Command::Gen {
            family,
            n,
            density,
            seed,
            format,
        } => {
            let g = gen_family(&family, n, density, seed).map_err(|e| match e {
                kimmerse::Error::UnknownFamily(_) => {
                    anyhow::Error::new(e).context(format!("known families: {}", FAMILIES.join(", ")))
                }
                e => e.into(),
            })?;
            eprintln!("gen: family = {family}, n = {n}, density = {density}, seed = {seed}");
            match format {
                None => print!("{}", emit_edge_list(&g)),
                Some(Format::Dot) => print!("{}", emit_dot(&g)),
                Some(Format::Json) => print_json(&json!({
                    "family": family,
                    "n": g.n(),
                    "density": density,
                    "seed": seed,
                    "edges": g.edges(),
                })),
            }
            Ok(true)
        }
        Command::Oracle { kind, graph, t, r } => {
            let g = read_graph(graph.as_deref())?;
            let out = match kind {
                OracleKind::Chi => json!({ "chi": brute_chi(&g)? }),
                OracleKind::Alpha => json!({ "alpha": brute_alpha(&g)? }),
                OracleKind::ChiPrime => json!({ "r": r, "chi_prime_r": brute_force_chi_prime_r(&g, r)? }),
                OracleKind::Immersion => {
                    let t = match t {
                        Some(t) => t,
                        None => brute_chi(&g)?,
                    };
                    json!({ "t": t, "exists": brute_immersion_exists(&g, t)? })
                }
            };
            print_json(&out);
            Ok(true)
        }
        Command::Stress { n, count, seed, dump } => {
            eprintln!("stress: n ≤ {n}, count = {count}, seed = {seed}");
            let report = run_campaign(n, count, seed);
            if let Some(dir) = &dump {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for f in &report.failures {
                    let path = dir.join(format!("seed{}-index{}.txt", seed, f.instance.index));
                    std::fs::write(&path, &f.graph).with_context(|| format!("writing {}", path.display()))?;
                }
            }
            let summary = format!("{}/{} verified", report.verified, report.total);
            eprintln!("{summary}");
            let ok = report.passed();
            print_json(&json!({ "summary": summary, "report": report }));
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let kind = e
                .chain()
                .find_map(|c| c.downcast_ref::<kimmerse::Error>())
                .map_or("input", |k| k.kind());
            print_json(&json!({ "error": format!("{e:#}"), "kind": kind }));
            ExitCode::from(2)
        }
    }
}
