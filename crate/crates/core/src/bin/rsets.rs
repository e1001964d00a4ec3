use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rsets::algebra::{complex_chains, homology_all, normalized_chains};
use rsets::complex::{clique_complex, order_complex};
use rsets::hom::hom_poset;
use rsets::io::{core_to_json, homology_to_json, map_to_json, poset_to_json, read_map, read_rset, rset_to_json, sing_to_json};
use rsets::maps::{enumerate_rmaps, find_isomorphism};
use rsets::rset::{exponential, product};
use rsets::strong::{beat_points, core, is_minimal, strong_equivalent_rsets, strongly_homotopic, FoldPolicy, HomotopyMethod};
use rsets::{corpus, sing_truncated, verify, Guards, Homology, Result};

#[derive(Parser)]
#[command(name = "rsets", version, about = "Hom complexes, singular complexes and strong homotopy of finite r-sets")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized fold policies and generated corpora.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on |Y|^|X| for exponentials.
    #[arg(long, global = true, default_value_t = Guards::default().max_exp_vertices)]
    max_exp_vertices: u64,
    /// Cap on partial assignments visited by one search.
    #[arg(long, global = true, default_value_t = Guards::default().max_visits)]
    max_visits: u64,
    /// Cap on materialized poset elements.
    #[arg(long, global = true, default_value_t = Guards::default().max_poset_elements)]
    max_poset_elements: u64,
    /// Cap on materialized simplices.
    #[arg(long, global = true, default_value_t = Guards::default().max_cells)]
    max_cells: u64,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

impl RunConfig {
    fn guards(&self) -> Guards {
        Guards {
            max_exp_vertices: self.max_exp_vertices,
            max_visits: self.max_visits,
            max_poset_elements: self.max_poset_elements,
            max_cells: self.max_cells,
            ..Guards::default()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    HomPoset,
    Path,
}

#[derive(Subcommand)]
enum Command {
    /// Summary of an r-set file.
    Info { x: PathBuf },
    /// The product X × Y as an r-set file.
    Product { x: PathBuf, y: PathBuf },
    /// The exponential Y^X as an r-set file.
    Exp { y: PathBuf, x: PathBuf },
    /// All maps X -> Y.
    Maps { x: PathBuf, y: PathBuf },
    /// An isomorphism X -> Y, if any.
    Iso { x: PathBuf, y: PathBuf },
    /// The poset Hom(X, Y).
    Hom { x: PathBuf, y: PathBuf },
    /// Sing(X, Y) up to the given dimension.
    Sing {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Integer homology of a Hom complex, a truncated Sing or a clique complex.
    Homology {
        #[command(flatten)]
        source: HomologySource,
        /// Truncation dimension for --sing.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Beat points with their witnesses.
    Beats { x: PathBuf },
    /// A core and the folds that produced it.
    Core { x: PathBuf },
    /// Whether X and Y are strongly homotopy equivalent.
    Seq { x: PathBuf, y: PathBuf },
    /// Whether two maps X -> Y are strongly homotopic.
    Homotopic {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Path)]
        method: Method,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
        /// `default` for the built-in corpus, or a directory of r-set files.
        #[arg(long, default_value = "default")]
        corpus: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct HomologySource {
    /// Order complex of Hom(X, Y).
    #[arg(long, num_args = 2, value_names = ["X", "Y"])]
    hom: Option<Vec<PathBuf>>,
    /// Normalized chains of Sing(X, Y) truncated at --dim.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], requires = "dim")]
    sing: Option<Vec<PathBuf>>,
    /// Clique complex of X.
    #[arg(long, value_name = "X")]
    clique: Option<PathBuf>,
}

/// Rendered output and whether the answer was affirmative.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn outcome(text: impl Into<String>, json: Value) -> Outcome {
    Outcome {
        text: text.into(),
        json,
        ok: true,
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn load(p: &Path) -> Result<rsets::RSet> {
    read_rset(p)
}

fn homology_text(h: &Homology) -> String {
    h.to_string().trim_end().to_string()
}

fn run(cmd: Command, cfg: &RunConfig) -> Result<Outcome> {
    let guards = cfg.guards();
    Ok(match cmd {
        Command::Info { x } => {
            let x = load(&x)?;
            let loops = (0..x.len()).filter(|&v| x.has_loop(v)).count();
            let beats = beat_points(&x).len();
            let minimal = is_minimal(&x);
            outcome(
                format!(
                    "arity: {}\nvertices: {}\ntuples: {}\nlooped vertices: {loops}\nbeat points: {beats}\nminimal: {minimal}",
                    x.arity(),
                    x.len(),
                    x.relation_len()
                ),
                json!({ "arity": x.arity(), "vertices": x.len(), "tuples": x.relation_len(),
                        "looped_vertices": loops, "beat_points": beats, "minimal": minimal }),
            )
        }
        Command::Product { x, y } => {
            let p = rset_to_json(&product(&load(&x)?, &load(&y)?)?);
            outcome(p.to_string(), p)
        }
        Command::Exp { y, x } => {
            let e = rset_to_json(&exponential(&load(&y)?, &load(&x)?, &guards)?);
            outcome(e.to_string(), e)
        }
        Command::Maps { x, y } => {
            let (x, y) = (load(&x)?, load(&y)?);
            let maps = enumerate_rmaps(&x, &y, &guards)?;
            let lines: Vec<String> = maps
                .iter()
                .map(|f| {
                    let pairs: Vec<String> = f.named(&x, &y).iter().map(|(a, b)| format!("{a}->{b}")).collect();
                    pairs.join(" ")
                })
                .collect();
            let json = Value::Array(maps.iter().map(|f| map_to_json(f, &x, &y)).collect());
            outcome(format!("{} maps\n{}", maps.len(), lines.join("\n")).trim_end(), json)
        }
        Command::Iso { x, y } => {
            let (x, y) = (load(&x)?, load(&y)?);
            match find_isomorphism(&x, &y) {
                Some(f) => outcome(
                    format!("isomorphic\n{}", pretty(&map_to_json(&f, &x, &y))),
                    json!({ "isomorphic": true, "map": map_to_json(&f, &x, &y) }),
                ),
                None => Outcome {
                    text: "not isomorphic".into(),
                    json: json!({ "isomorphic": false }),
                    ok: false,
                },
            }
        }
        Command::Hom { x, y } => {
            let (x, y) = (load(&x)?, load(&y)?);
            let p = poset_to_json(&hom_poset(&x, &y, &guards)?, &x, &y);
            outcome(pretty(&p), p)
        }
        Command::Sing { x, y, dim } => {
            let s = sing_to_json(&sing_truncated(&load(&x)?, &load(&y)?, dim, &guards)?);
            outcome(pretty(&s), s)
        }
        Command::Homology { source: args, dim } => {
            let chains = if let Some(p) = args.hom {
                let poset = hom_poset(&load(&p[0])?, &load(&p[1])?, &guards)?;
                complex_chains(&order_complex(&poset, &guards)?)
            } else if let Some(p) = args.sing {
                let dim = dim.expect("required by clap");
                normalized_chains(&sing_truncated(&load(&p[0])?, &load(&p[1])?, dim, &guards)?)
            } else {
                let x = load(args.clique.as_ref().expect("one source is required"))?;
                complex_chains(&clique_complex(&x, &guards)?)
            };
            let h: Homology = homology_all(&chains);
            outcome(homology_text(&h), homology_to_json(&h))
        }
        Command::Beats { x } => {
            let x = load(&x)?;
            let beats = beat_points(&x);
            let lines: Vec<String> = beats
                .iter()
                .map(|b| format!("{} (witness {})", x.name(b.point), x.name(b.witness)))
                .collect();
            let json = Value::Array(
                beats
                    .iter()
                    .map(|b| json!({ "point": x.name(b.point), "witness": x.name(b.witness) }))
                    .collect(),
            );
            let text = if beats.is_empty() { "minimal: no beat points".to_string() } else { lines.join("\n") };
            outcome(text, json)
        }
        Command::Core { x } => {
            let policy = cfg.seed.map_or(FoldPolicy::First, FoldPolicy::Random);
            let c = core(&load(&x)?, policy)?;
            let mut text: Vec<String> = c.folds.iter().map(|(p, w)| format!("fold {p} onto {w}")).collect();
            text.push(format!(
                "core: {} vertices after {} folds\n{}",
                c.core.len(),
                c.folds.len(),
                rset_to_json(&c.core)
            ));
            outcome(text.join("\n"), core_to_json(&c))
        }
        Command::Seq { x, y } => {
            let equivalent = strong_equivalent_rsets(&load(&x)?, &load(&y)?)?;
            Outcome {
                text: equivalent.to_string(),
                json: json!({ "equivalent": equivalent }),
                ok: equivalent,
            }
        }
        Command::Homotopic { x, y, f, g, method } => {
            let (x, y) = (load(&x)?, load(&y)?);
            let (f, g) = (read_map(&f, &x, &y)?, read_map(&g, &x, &y)?);
            let method = match method {
                Method::HomPoset => HomotopyMethod::HomPoset,
                Method::Path => HomotopyMethod::Path,
            };
            let v = strongly_homotopic(&x, &y, &f, &g, method, &guards)?;
            let steps: Option<Vec<Value>> =
                v.path.as_ref().map(|p| p.steps.iter().map(|h| map_to_json(h, &x, &y)).collect());
            let mut text = v.homotopic.to_string();
            if let Some(p) = &v.path {
                text.push_str(&format!("\npath of length {}", p.len()));
                for h in &p.steps {
                    text.push_str(&format!("\n{}", serde_json::to_string(&map_to_json(h, &x, &y)).unwrap()));
                }
            }
            Outcome {
                text,
                json: json!({ "homotopic": v.homotopic, "path": steps }),
                ok: v.homotopic,
            }
        }
        Command::Verify { suite, corpus } => {
            let corpus = corpus::resolve(&corpus)?;
            let report = verify::run(&suite, &corpus, cfg.seed.unwrap_or(0), &guards)?;
            let cases: Vec<Value> = report
                .cases
                .iter()
                .map(|c| {
                    let (status, detail) = match &c.outcome {
                        verify::Outcome::Pass => ("PASS", None),
                        verify::Outcome::Fail(d) => ("FAIL", Some(d.clone())),
                        verify::Outcome::Skip(d) => ("SKIP", Some(d.clone())),
                    };
                    json!({ "case": c.name, "status": status, "detail": detail })
                })
                .collect();
            Outcome {
                text: report.to_string().trim_end().to_string(),
                json: json!({ "suite": report.suite, "passed": report.passed(), "failed": report.failed(),
                              "skipped": report.skipped(), "cases": cases }),
                ok: report.failed() == 0,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, &cli.run) {
        Ok(out) => {
            let mut rendered = match cli.run.format {
                Format::Text => out.text,
                Format::Json => pretty(&out.json),
            };
            rendered.push('\n');
            let written = match &cli.run.output {
                Some(path) => std::fs::write(path, rendered),
                None => {
                    print!("{rendered}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
