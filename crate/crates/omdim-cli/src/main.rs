//! `omdim` — outer multiset dimension toolkit.
//!
//! Exit codes: 0 on success (and when every checked claim held), 1 when a
//! scan found counterexamples or a checked set does not resolve, 2 on
//! input errors.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use omdim::{
    all_pairs_distances, cartesian_product, decide_dim2, decode_graph6, encode_graph6,
    format_dot, format_edge_list, generate, is_multiset_distance_irregular,
    is_outer_multiset_resolving, is_transmission_irregular, is_vector_resolving,
    lexicographic_product, multiset_representation, outer_multiset_dimension, parse_edge_list,
    scan_verify, transmission_profile, Claim, Dim2Decision, Graph, LexFactor, NamedFamily,
    ScanSource, SolveOptions, ALL_CLAIMS,
};

#[derive(Parser)]
#[command(
    name = "omdim",
    version,
    about = "Outer multiset dimension of connected graphs",
    long_about = "Computes outer multiset dimensions, recognises dimension-2 graphs, \
generates graph families and products, and verifies structural claims over \
exhaustive small-graph enumerations.\n\nGraph inputs are paths to .g6 (graph6) \
or edge-list files ('n m' header then one 'u v' pair per line, 0-based), or '-' \
for standard input."
)]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact outer multiset dimension with a witnessing basis
    Dim {
        input: String,
        /// Disable the path / regular-diameter-2 shortcuts (same result,
        /// search route only)
        #[arg(long)]
        no_fast_paths: bool,
    },
    /// Check whether a vertex set is outer multiset resolving
    CheckSet {
        input: String,
        /// Comma-separated vertex indices, e.g. 0,3,5
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        /// Check the classical vector (metric) resolving property instead
        #[arg(long)]
        vector: bool,
    },
    /// Decide whether the dimension is 1, 2, or greater than 2
    IsDim2 { input: String },
    /// Generate a named family: path N | cycle N | complete N |
    /// multipartite R1 R2 ... | petersen | grid S T | hypercube D
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        out: OutFormat,
    },
    /// Cartesian or lexicographic product of two graphs; factors are
    /// input files or family specs like complete:3, grid:3,2, empty:2
    /// (empty is valid only as the second factor of lex)
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        out: OutFormat,
    },
    /// Transmission profile and irregularity report
    Irregular { input: String },
    /// Verify claims over all connected labelled graphs up to --n-max
    /// (or over a graph6 corpus); exits 1 when counterexamples are found.
    /// Claims: t1 (dimension n-1 iff regular diameter <= 2), alg1
    /// (dim-2 decision vs solver), lem1 (basis distance <= 2), lem2
    /// (layer sizes), incl (transmission => multiset irregularity), t4
    /// (lexicographic layer bound, factors up to order 4)
    Scan {
        /// Comma-separated claim tags; default all
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Enumeration cap (2..=7; 7 takes a while)
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Verify the corpus file (one graph6 line per graph) instead of
        /// enumerating
        #[arg(long)]
        corpus: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Cartesian,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    Edges,
    Dot,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(fs::read_to_string(input)?)
    }
}

/// Edge lists always contain whitespace or digits below the graph6
/// character range, so the first content line tells the formats apart.
fn parse_graph_text(text: &str, forced_graph6: bool) -> Result<Graph, CliError> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| CliError("empty input".into()))?
        .trim();
    let looks_graph6 =
        forced_graph6 || first.bytes().all(|b| (63..=126).contains(&b)) || first.starts_with(">>");
    if looks_graph6 {
        Ok(decode_graph6(first)?)
    } else {
        Ok(parse_edge_list(text)?)
    }
}

fn load_graph(input: &str) -> Result<Graph, CliError> {
    let forced = Path::new(input).extension().is_some_and(|e| e == "g6");
    parse_graph_text(&read_input(input)?, forced)
}

fn parse_family(name: &str, params: &[usize]) -> Result<NamedFamily, CliError> {
    let arity_error = |want: &str| {
        CliError(format!(
            "family {name} expects {want}, got {} parameter(s)",
            params.len()
        ))
    };
    match name {
        "path" | "cycle" | "complete" | "empty" | "hypercube" => {
            let [p] = params else {
                return Err(arity_error("1 parameter"));
            };
            Ok(match name {
                "path" => NamedFamily::Path(*p),
                "cycle" => NamedFamily::Cycle(*p),
                "complete" => NamedFamily::Complete(*p),
                "empty" => NamedFamily::Empty(*p),
                _ => NamedFamily::Hypercube(*p as u32),
            })
        }
        "grid" => {
            let [s, t] = params else {
                return Err(arity_error("2 parameters"));
            };
            Ok(NamedFamily::Grid(*s, *t))
        }
        "multipartite" => {
            if params.is_empty() {
                return Err(arity_error("at least 1 part size"));
            }
            Ok(NamedFamily::CompleteMultipartite(params.to_vec()))
        }
        "petersen" => {
            if !params.is_empty() {
                return Err(arity_error("no parameters"));
            }
            Ok(NamedFamily::Petersen)
        }
        other => Err(CliError(format!("unknown family {other:?}"))),
    }
}

/// A product factor: an input file, `-`, or a family spec like
/// `complete:3` / `grid:3,2` / `petersen`.
fn parse_factor(spec: &str) -> Result<FactorSpec, CliError> {
    let as_family = |name: &str, params: &str| -> Result<NamedFamily, CliError> {
        let params: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| CliError(format!("invalid family parameter {p:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        parse_family(name, &params)
    };
    if let Some((name, params)) = spec.split_once(':') {
        if !Path::new(spec).exists() {
            return Ok(FactorSpec::Family(as_family(name, params)?));
        }
    } else if spec == "petersen" && !Path::new(spec).exists() {
        return Ok(FactorSpec::Family(NamedFamily::Petersen));
    }
    Ok(FactorSpec::File(load_graph(spec)?))
}

enum FactorSpec {
    File(Graph),
    Family(NamedFamily),
}

impl FactorSpec {
    fn into_graph(self) -> Result<Graph, CliError> {
        match self {
            FactorSpec::File(g) => Ok(g),
            FactorSpec::Family(f) => Ok(generate(&f)?),
        }
    }

    fn into_lex_factor(self) -> Result<LexFactor, CliError> {
        match self {
            FactorSpec::File(g) => Ok(LexFactor::Graph(g)),
            FactorSpec::Family(NamedFamily::Empty(k)) => {
                if k == 0 {
                    return Err(CliError("empty factor needs at least one vertex".into()));
                }
                Ok(LexFactor::Edgeless(k))
            }
            FactorSpec::Family(f) => Ok(LexFactor::Graph(generate(&f)?)),
        }
    }
}

fn print_graph(g: &Graph, out: OutFormat, as_json: bool) {
    if as_json {
        let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
        println!(
            "{}",
            json!({
                "n": g.order(),
                "m": g.edge_count(),
                "graph6": encode_graph6(g),
                "edges": edges,
            })
        );
        return;
    }
    match out {
        OutFormat::Graph6 => println!("{}", encode_graph6(g)),
        OutFormat::Edges => print!("{}", format_edge_list(g)),
        OutFormat::Dot => print!("{}", format_dot(g)),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Dim {
            input,
            no_fast_paths,
        } => {
            let g = load_graph(input)?;
            let result = outer_multiset_dimension(
                &g,
                SolveOptions {
                    use_fast_paths: !no_fast_paths,
                },
            );
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "dimension": result.dimension,
                        "basis": result.basis,
                        "method": result.method.as_str(),
                    })
                );
            } else {
                println!("dimension: {}", result.dimension);
                println!("basis: {:?}", result.basis);
                println!("method: {}", result.method.as_str());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckSet { input, set, vector } => {
            let g = load_graph(input)?;
            let n = g.order();
            if let Some(&v) = set.iter().find(|&&v| v >= n) {
                return Err(CliError(format!(
                    "vertex {v} out of range for order {n}"
                )));
            }
            let dm = all_pairs_distances(&g);
            let resolving = if *vector {
                is_vector_resolving(&dm, set)
            } else {
                is_outer_multiset_resolving(&dm, set)
            };
            let mode = if *vector { "vector" } else { "multiset" };
            if cli.json {
                println!(
                    "{}",
                    json!({ "set": set, "mode": mode, "resolving": resolving })
                );
            } else {
                println!(
                    "{mode} resolving: {}",
                    if resolving { "yes" } else { "no" }
                );
            }
            Ok(if resolving {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::IsDim2 { input } => {
            let g = load_graph(input)?;
            let decision = decide_dim2(&g);
            if cli.json {
                let value = match &decision {
                    Dim2Decision::DimensionOne => json!({ "result": "dim_is_1" }),
                    Dim2Decision::DimensionTwo { basis } => {
                        json!({ "result": "dim_is_2", "basis": [basis.0, basis.1] })
                    }
                    Dim2Decision::GreaterThanTwo => json!({ "result": "dim_gt_2" }),
                };
                println!("{value}");
            } else {
                match decision {
                    Dim2Decision::DimensionOne => println!("dimension is 1 (path)"),
                    Dim2Decision::DimensionTwo { basis } => {
                        println!("dimension is 2, basis {:?}", [basis.0, basis.1])
                    }
                    Dim2Decision::GreaterThanTwo => println!("dimension is greater than 2"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            family,
            params,
            out,
        } => {
            let g = generate(&parse_family(family, params)?)?;
            print_graph(&g, *out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { kind, a, b, out } => {
            let left = parse_factor(a)?.into_graph()?;
            let product = match kind {
                ProductKind::Cartesian => {
                    let right = parse_factor(b)?.into_graph()?;
                    cartesian_product(&left, &right)
                }
                ProductKind::Lex => {
                    let right = parse_factor(b)?.into_lex_factor()?;
                    lexicographic_product(&left, &right)
                }
            };
            print_graph(&product, *out, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Irregular { input } => {
            let g = load_graph(input)?;
            let dm = all_pairs_distances(&g);
            let profile = transmission_profile(&dm);
            let transmission = is_transmission_irregular(&dm);
            let multiset = is_multiset_distance_irregular(&dm);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "transmissions": profile.transmissions(),
                        "transmission_irregular": transmission,
                        "multiset_distance_irregular": multiset,
                    })
                );
            } else {
                for v in 0..g.order() {
                    let others: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
                    let rep = multiset_representation(&dm, v, &others)
                        .expect("vertices are in range");
                    println!(
                        "vertex {v}: transmission {}, m(v) = {rep}",
                        profile.transmission(v)
                    );
                }
                println!("transmission irregular: {transmission}");
                println!("multiset distance irregular: {multiset}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            claims,
            n_max,
            corpus,
        } => {
            let claims: Vec<Claim> = if claims.is_empty() {
                ALL_CLAIMS.to_vec()
            } else {
                claims
                    .iter()
                    .map(|tag| {
                        Claim::from_tag(tag)
                            .ok_or_else(|| CliError(format!("unknown claim tag {tag:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let source = match corpus {
                Some(path) => ScanSource::Corpus(
                    read_input(path)?.lines().map(str::to_owned).collect(),
                ),
                None => ScanSource::Enumeration { max_order: *n_max },
            };
            let report = scan_verify(&claims, &source)?;
            if cli.json {
                let ces: Vec<_> = report
                    .counterexamples
                    .iter()
                    .map(|ce| {
                        json!({
                            "graph6": ce.graph6,
                            "claim": ce.claim.tag(),
                            "details": ce.details,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "graphs_checked": report.graphs_checked,
                        "counterexamples": ces,
                        "elapsed_ms": report.elapsed.as_millis() as u64,
                    })
                );
            } else {
                println!(
                    "checked {} graphs in {:.2?}",
                    report.graphs_checked, report.elapsed
                );
                for claim in &claims {
                    let hits = report
                        .counterexamples
                        .iter()
                        .filter(|ce| ce.claim == *claim)
                        .count();
                    println!(
                        "claim {:>4} ({}): {}",
                        claim.tag(),
                        claim.description(),
                        if hits == 0 {
                            "ok".to_string()
                        } else {
                            format!("{hits} counterexample(s)")
                        }
                    );
                }
                for ce in &report.counterexamples {
                    println!("  {} {} — {}", ce.claim.tag(), ce.graph6, ce.details);
                }
            }
            Ok(if report.all_claims_held() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
