use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use srgec::cert::{check_certificate, read_certificate, write_certificate};
use srgec::classify::{batch_run, classify, graph_files, load_graphs, sidecar, ClassifyConfig, Outcome, Strategy};
use srgec::factor::{exact_chromatic_index, ExactOutcome, SearchConfig, DEFAULT_NODE_BUDGET};
use srgec::families::{Family, VertexPartition};
use srgec::graph6::to_graph6;
use srgec::spectra::{srg_spectrum, BoundReport};
use srgec::{Error, Graph, SrgParams};

/// Strongly regular graphs: construction, spectra and chromatic index.
#[derive(Parser)]
#[command(name = "srgec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and write it as graph6, with its known
    /// partition (if any) in FILE.partition.
    Gen {
        family: FamilyName,
        /// Family parameters: `m`, `m t`, `v` or `l m`.
        #[arg(required = true, num_args = 1..=2)]
        params: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Describe the graphs in a graph6 file.
    Info { file: PathBuf },
    /// Spectrum and bound predicates of a parameter set.
    Spectrum {
        /// `n,k,lambda,mu`
        #[arg(long, value_parser = parse_params)]
        params: SrgParams,
    },
    /// Classify a graph and print (or write) its certificate.
    Factorize {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Independent heuristic workers.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide edge-colorability with exactly C colors by exhaustive search.
    Exact {
        file: PathBuf,
        #[arg(long)]
        colors: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Check a certificate against a graph.
    Verify { graph: PathBuf, cert: PathBuf },
    /// Classify every .g6 file in a directory, writing FILE.cert beside each.
    Batch {
        dir: PathBuf,
        /// Files processed concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, env = "SRGEC_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = SearchConfig::default().max_restarts)]
    max_restarts: u64,
    #[arg(long, default_value_t = SearchConfig::default().time_budget_ms)]
    budget_ms: u64,
}

impl SearchArgs {
    fn config(&self, width: usize) -> SearchConfig {
        SearchConfig {
            seed: self.seed,
            max_restarts: self.max_restarts,
            time_budget_ms: self.budget_ms,
            parallel_width: width,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Triangular,
    Lattice,
    Latinsq,
    BlockgraphSts,
    Cliques,
    Multipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Heuristic,
    Constructive,
}

fn parse_params(s: &str) -> Result<SrgParams, String> {
    let v: Vec<u64> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        })
        .collect::<Result<_, _>>()?;
    match v[..] {
        [n, k, l, m] => Ok(SrgParams::new(n, k, l, m)),
        _ => Err("expected four comma-separated integers n,k,lambda,mu".into()),
    }
}

fn family(name: FamilyName, p: &[usize]) -> anyhow::Result<Family> {
    use FamilyName::*;
    Ok(match (name, p) {
        (Triangular, &[m]) => Family::Triangular(m),
        (Lattice, &[m]) => Family::Lattice(m),
        (Latinsq, &[m, t]) => Family::LatinSquare(m, t),
        (BlockgraphSts, &[v]) => Family::BlockGraphSts(v),
        (Cliques, &[l, m]) => Family::Cliques(l, m),
        (Multipartite, &[l, m]) => Family::Multipartite(l, m),
        (Latinsq | Cliques | Multipartite, _) => bail!("this family takes two parameters"),
        _ => bail!("this family takes one parameter"),
    })
}

fn single_graph(path: &Path) -> anyhow::Result<(Graph, Option<VertexPartition>)> {
    let (mut graphs, structure) = load_graphs(path).with_context(|| format!("reading {}", path.display()))?;
    if graphs.len() != 1 {
        bail!("{} holds {} graphs; expected exactly one", path.display(), graphs.len());
    }
    Ok((graphs.remove(0), structure))
}

fn gen(name: FamilyName, params: &[usize], output: &Path) -> anyhow::Result<ExitCode> {
    let fam = family(name, params)?;
    let (g, structure) = fam.build()?;
    fs::write(output, format!("{}\n", to_graph6(&g)?))?;
    let side = sidecar(output, ".partition");
    match &structure {
        Some(p) => fs::write(&side, p.to_text())?,
        None if side.exists() => fs::remove_file(&side)?,
        None => {}
    }
    let srg = g
        .recognize_srg()
        .map_or_else(|| "not strongly regular".to_string(), |p| format!("srg {p}"));
    println!("{fam}: n={} edges={} {srg}", g.order(), g.size());
    Ok(ExitCode::SUCCESS)
}

fn info(path: &Path) -> anyhow::Result<ExitCode> {
    let (graphs, structure) = load_graphs(path).with_context(|| format!("reading {}", path.display()))?;
    for (i, g) in graphs.iter().enumerate() {
        if graphs.len() > 1 {
            println!("graph: {i}");
        }
        println!("graph6: {}", to_graph6(g)?);
        println!("n: {}", g.order());
        println!("edges: {}", g.size());
        match g.regular_degree() {
            Some(k) => println!("regular: {k}"),
            None => println!("regular: no"),
        }
        println!("connected: {}", if g.is_connected() { "yes" } else { "no" });
        match g.recognize_srg() {
            Some(p) => {
                println!("srg: {p}");
                if let Ok(s) = srg_spectrum(&p) {
                    println!("eigenvalues: {}^1 {}^{} {}^{}", s.k, s.r, s.f, s.s, s.g);
                }
            }
            None => println!("srg: no"),
        }
        if let Some(p) = &structure {
            let fits = if p.check_kind(g) {
                ""
            } else {
                " (does not fit this graph)"
            };
            println!("partition: {} with {} classes{fits}", p.kind.as_str(), p.classes.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn factorize(
    path: &Path,
    search: &SearchArgs,
    jobs: usize,
    method: MethodArg,
    output: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let (g, structure) = single_graph(path)?;
    let cfg = ClassifyConfig {
        search: search.config(jobs),
        strategy: match method {
            MethodArg::Auto => Strategy::Auto,
            MethodArg::Heuristic => Strategy::Heuristic,
            MethodArg::Constructive => Strategy::Constructive,
        },
        ..ClassifyConfig::default()
    };
    let result = classify(&g, structure.as_ref(), &cfg)?;
    match result.outcome {
        Outcome::Certified(cert) => {
            let text = write_certificate(&cert);
            match output {
                Some(out) => fs::write(out, text)?,
                None => print!("{text}"),
            }
            eprintln!("class {} via {} in {} ms", cert.class(), cert.method, result.wall_ms);
            Ok(ExitCode::SUCCESS)
        }
        Outcome::Inconclusive(why) => {
            eprintln!("inconclusive: {why}");
            Ok(ExitCode::from(1))
        }
        Outcome::Refused(r) => {
            eprintln!("refused: {r}");
            Ok(ExitCode::from(1))
        }
    }
}

fn exact(path: &Path, colors: usize, node_budget: u64) -> anyhow::Result<ExitCode> {
    let (g, _) = single_graph(path)?;
    Ok(match exact_chromatic_index(&g, colors, node_budget)? {
        ExactOutcome::Colorable { nodes, .. } => {
            println!("colorable colors={colors} nodes={nodes}");
            ExitCode::SUCCESS
        }
        ExactOutcome::NotColorable { nodes } => {
            println!("notcolorable colors={colors} nodes={nodes}");
            ExitCode::SUCCESS
        }
        ExactOutcome::BudgetExceeded { nodes } => {
            println!("budget-exceeded colors={colors} nodes={nodes}");
            ExitCode::from(1)
        }
    })
}

fn verify(graph: &Path, cert_path: &Path) -> anyhow::Result<ExitCode> {
    let (g, _) = single_graph(graph)?;
    let text = fs::read_to_string(cert_path).with_context(|| format!("reading {}", cert_path.display()))?;
    let cert = read_certificate(&text).with_context(|| format!("parsing {}", cert_path.display()))?;
    Ok(match check_certificate(&g, &cert) {
        Ok(()) => {
            println!("valid: class {} certificate ({})", cert.class(), cert.method);
            ExitCode::SUCCESS
        }
        Err(e @ (Error::InvalidCertificate(_) | Error::GraphMismatch)) => {
            println!("invalid: {e}");
            ExitCode::from(1)
        }
        Err(e) => return Err(e.into()),
    })
}

fn batch(dir: &Path, jobs: usize, search: &SearchArgs) -> anyhow::Result<ExitCode> {
    let files = graph_files(dir).with_context(|| format!("listing {}", dir.display()))?;
    let cfg = ClassifyConfig {
        search: search.config(1),
        ..ClassifyConfig::default()
    };
    let summary = batch_run(&files, &cfg, jobs)?;
    print!("{}", summary.to_text());
    Ok(if summary.failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { family, params, output } => gen(family, &params, &output),
        Command::Info { file } => info(&file),
        Command::Spectrum { params } => {
            print!("{}", BoundReport::new(params).to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Factorize {
            file,
            search,
            jobs,
            method,
            output,
        } => factorize(&file, &search, jobs, method, output.as_deref()),
        Command::Exact {
            file,
            colors,
            node_budget,
        } => exact(&file, colors, node_budget),
        Command::Verify { graph, cert } => verify(&graph, &cert),
        Command::Batch { dir, jobs, search } => batch(&dir, jobs, &search),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
