use std::fs;
use std::io::{self, Read};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use licci_core::harness;
use licci_core::monomial::variable_names_in;
use licci_core::{
    alexander_dual, betti_table, classify, depolarize_suspension, from_json, hu_decide, invariants, minimal_primes,
    taylor_oracle, to_json, verify_direct_link, BettiDoc, BettiReportDoc, FieldSpec, Graph, GraphDoc, GraphKind, Ideal,
    IdealDoc, Ring, VerdictDoc, DEFAULT_SEED,
};

/// Exit status when a report or task fails without an error.
const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "licci",
    version,
    about = "Betti tables, linkage and licci decisions for monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an ideal from a graph.
    Construct {
        #[arg(value_enum)]
        builder: Builder,
        /// A builder such as `cycle:5`, `star:3+1`, `edges:4:1-2,2-3`, or a
        /// graph document (file or `-`).
        graph: String,
        /// Path length in vertices (`path`), or suspension parameter.
        #[arg(short, long)]
        t: Option<usize>,
        /// Print the ideal as text instead of a document.
        #[arg(long)]
        text: bool,
    },
    /// Graded Betti table of S/I with derived invariants.
    Betti {
        ideal: String,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Use the Taylor complex instead of Hochster's formula.
        #[arg(long)]
        oracle: bool,
        /// Print the table in Macaulay layout instead of a document.
        #[arg(long)]
        table: bool,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Licci verdict with the deciding rule and iteration trace.
    Licci {
        ideal: String,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Decide by the Huneke-Ulrich iteration alone (Artinian input).
        #[arg(long)]
        artinian_only: bool,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Alexander dual and minimal primes of a squarefree ideal.
    Dual {
        ideal: String,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Check that a monomial regular sequence directly links two ideals.
    Link {
        first: String,
        second: String,
        /// Comma-separated monomials, e.g. `x1^2, x2^3`.
        #[arg(long)]
        regseq: String,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Run the verification tasks (all when none are named).
    VerifyPaper {
        /// Task ids (`T3`) or names (`cycle-licci`).
        tasks: Vec<String>,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Builder {
    Edge,
    Path,
    Complementary,
    Suspension,
    Depolarize,
}

fn read_source(arg: &str) -> Result<Option<String>> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(Some(s));
    }
    if Path::new(arg).is_file() {
        return Ok(Some(fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?));
    }
    Ok(None)
}

/// Raw ideal input: a document or text, still without a ring.
enum IdealSource {
    Doc(IdealDoc),
    Text(String),
}

fn ideal_source(arg: &str) -> Result<IdealSource> {
    let content = read_source(arg)?.unwrap_or_else(|| arg.to_string());
    if content.trim_start().starts_with('{') {
        Ok(IdealSource::Doc(from_json(&content)?))
    } else {
        Ok(IdealSource::Text(content))
    }
}

/// Text inputs share one ring: `--vars` when given, otherwise every name
/// appearing in the texts.
fn shared_ring(texts: &[&str], vars: &Option<Vec<String>>) -> Result<Ring> {
    if let Some(v) = vars {
        return Ok(Ring::try_new(v.iter().map(|s| s.trim().to_string()))?);
    }
    let joined: Vec<&str> = texts
        .iter()
        .map(|t| t.trim().trim_start_matches('(').trim_end_matches(')'))
        .collect();
    let names = variable_names_in(&joined.join(", "))?;
    if names.is_empty() {
        bail!("cannot infer variables from the input; pass --vars");
    }
    Ok(Ring::try_new(names)?)
}

fn load_ideals(args: &[&str], vars: &Option<Vec<String>>) -> Result<Vec<Ideal>> {
    let sources = args.iter().map(|a| ideal_source(a)).collect::<Result<Vec<_>>>()?;
    let texts: Vec<&str> = sources
        .iter()
        .filter_map(|s| match s {
            IdealSource::Text(t) => Some(t.as_str()),
            IdealSource::Doc(_) => None,
        })
        .collect();
    let ring = if texts.is_empty() {
        None
    } else {
        Some(shared_ring(&texts, vars)?)
    };
    sources
        .into_iter()
        .map(|s| match s {
            IdealSource::Doc(d) => Ok(d.to_ideal()?),
            IdealSource::Text(t) => Ok(Ideal::parse(&t, ring.as_ref().expect("ring for text input"))?),
        })
        .collect()
}

fn load_ideal(arg: &str, vars: &Option<Vec<String>>) -> Result<Ideal> {
    Ok(load_ideals(&[arg], vars)?.remove(0))
}

fn load_graph(arg: &str) -> Result<Graph> {
    if let Ok(kind) = arg.parse::<GraphKind>() {
        return Ok(Graph::build(&kind)?);
    }
    match read_source(arg)? {
        Some(content) => Ok(from_json::<GraphDoc>(&content)?.to_graph()?),
        None => bail!("`{arg}` is neither a graph builder nor a readable file"),
    }
}

fn need_t(t: Option<usize>, builder: &str) -> Result<usize> {
    t.with_context(|| format!("`{builder}` needs --t"))
}

fn construct(builder: Builder, graph: &str, t: Option<usize>) -> Result<Ideal> {
    let g = load_graph(graph)?;
    Ok(match builder {
        Builder::Edge => g.edge_ideal(),
        Builder::Path => g.path_ideal(need_t(t, "path")?)?,
        Builder::Complementary => g.complementary_edge_ideal()?,
        Builder::Suspension => {
            let t = need_t(t, "suspension")?;
            g.suspension(t)?.path_ideal(t)?
        }
        Builder::Depolarize => depolarize_suspension(&g, need_t(t, "depolarize")?)?,
    })
}

fn status_exit(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED_CHECK)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct {
            builder,
            graph,
            t,
            text,
        } => {
            let ideal = construct(builder, &graph, t)?;
            if text {
                println!("{ideal}");
            } else {
                print!("{}", to_json(&IdealDoc::from_ideal(&ideal)));
            }
        }
        Command::Betti {
            ideal,
            field,
            oracle,
            table,
            vars,
        } => {
            let ideal = load_ideal(&ideal, &vars)?;
            let betti = if oracle {
                taylor_oracle(&ideal, field)?
            } else {
                betti_table(&ideal, field)?
            };
            if table {
                print!("{betti}");
            } else {
                let doc = BettiReportDoc {
                    table: BettiDoc::from_table(&betti),
                    invariants: invariants(&betti, &ideal)?,
                };
                print!("{}", to_json(&doc));
            }
        }
        Command::Licci {
            ideal,
            field,
            artinian_only,
            vars,
        } => {
            let ideal = load_ideal(&ideal, &vars)?;
            let verdict = if artinian_only {
                hu_decide(&ideal)?
            } else {
                classify(&ideal, field)?
            };
            print!("{}", to_json(&VerdictDoc::from_verdict(&verdict)));
        }
        Command::Dual { ideal, vars } => {
            let ideal = load_ideal(&ideal, &vars)?;
            let dual = alexander_dual(&ideal)?;
            let ring = ideal.ring();
            let primes: Vec<Vec<&str>> = minimal_primes(&ideal)?
                .iter()
                .map(|p| p.iter().map(|&v| ring.name(v)).collect())
                .collect();
            let doc = json!({ "dual": IdealDoc::from_ideal(&dual), "minimal_primes": primes });
            print!("{}", to_json(&doc));
        }
        Command::Link {
            first,
            second,
            regseq,
            vars,
        } => {
            let ideals = load_ideals(&[&first, &second], &vars)?;
            let ring = ideals[0].ring().clone();
            let mut seq = Vec::new();
            for piece in regseq.split(',').filter(|p| !p.trim().is_empty()) {
                let m = Ideal::parse(piece, &ring)?;
                match m.gens() {
                    [g] if !m.is_unit() => seq.push(g.clone()),
                    _ => bail!("`{}` is not a nonconstant monomial", piece.trim()),
                }
            }
            let report = verify_direct_link(&ideals[0], &ideals[1], &seq)?;
            print!("{}", to_json(&report));
            return Ok(status_exit(report.pass()));
        }
        Command::VerifyPaper {
            tasks,
            list,
            seed,
            json,
        } => {
            if list {
                for t in harness::list() {
                    println!("{} {}: {}", t.id, t.name, t.citation);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let summary = harness::verify(&tasks, seed)?;
            if json {
                print!("{}", to_json(&summary));
            } else {
                print!("{summary}");
            }
            return Ok(status_exit(summary.pass()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
