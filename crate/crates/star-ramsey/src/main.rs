use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use star_ramsey::family::ell_profile;
use star_ramsey::formulas::{
    ramsey_classical, ramsey_general, ramsey_uniform, star_critical_classical,
    star_critical_uniform,
};
use star_ramsey::oracle::{
    brute_force_ramsey, brute_force_star_critical, OracleResult, OracleValue, SearchConfig,
};
use star_ramsey::selfcheck::{run_all, CheckReport};
use star_ramsey::verifier::{find_star, StarWitness};
use star_ramsey::{
    lower_bound_coloring, star_critical_lower_coloring, ColoredGraph, Error, StarFamily,
};

#[derive(Parser)]
#[command(
    name = "star-ramsey",
    version,
    about = "Multicolor star Ramsey numbers: formulas, extremal colorings, verification, and an exhaustive-search oracle"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate closed-form Ramsey and star-critical values.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Build extremal star-free colorings.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
    },
    /// Check a coloring for a forced star.
    Verify {
        #[command(flatten)]
        family: FamilySpec,
        /// Path to a coloring in the graph JSON format.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Recompute values by exhaustive search.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
    /// Run the internal cross-validation grids.
    Selfcheck {
        #[arg(long, value_enum, default_value_t = Grid::Small)]
        grid: Grid,
    },
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Uniform target: every color subset demands a star of size m.
    Uniform(Mst),
    /// Arbitrary family from a JSON file.
    General {
        #[arg(long)]
        family: PathBuf,
    },
    /// Classical multicolor star values for targets m1,m2,…
    Classical {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u64>,
    },
    /// Uniform star-critical value.
    #[command(name = "star-critical")]
    StarCritical(Mst),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Star-free coloring one vertex below the Ramsey value.
    Lower {
        #[command(flatten)]
        family: FamilySpec,
        /// Also write the coloring JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Star-free coloring of the star-critical host.
    #[command(name = "star-critical")]
    StarCritical {
        #[command(flatten)]
        mst: Mst,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Smallest order with no avoidance coloring.
    Ramsey {
        #[command(flatten)]
        family: FamilySpec,
        /// Node budget for the search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Smallest spoke count that still forces a star.
    #[command(name = "star-critical")]
    StarCritical {
        #[command(flatten)]
        mst: Mst,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct Mst {
    /// Uniform star size.
    #[arg(long)]
    m: u64,
    /// Color subset size.
    #[arg(long)]
    s: usize,
    /// Color count.
    #[arg(long)]
    t: usize,
}

/// Either a family file or uniform (m, s, t) parameters.
#[derive(Args)]
struct FamilySpec {
    /// Path to a family JSON file.
    #[arg(long, conflicts_with_all = ["m", "s", "t"])]
    family: Option<PathBuf>,
    /// Uniform star size.
    #[arg(long)]
    m: Option<u64>,
    /// Color subset size.
    #[arg(long)]
    s: Option<usize>,
    /// Color count.
    #[arg(long)]
    t: Option<usize>,
}

impl FamilySpec {
    fn resolve(&self) -> Result<StarFamily, Error> {
        match (&self.family, self.m, self.s, self.t) {
            (Some(path), None, None, None) => load_family(path),
            (None, Some(m), Some(s), Some(t)) => StarFamily::uniform(m, s, t),
            _ => Err(Error::InvalidInput(
                "provide either --family PATH or all of --m, --s, --t".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Grid {
    Small,
    Full,
}

/// The one answer shape every formula command emits.
#[derive(Serialize)]
struct AnswerJson {
    r: u128,
    rstar: Option<u128>,
    branch: String,
    ell: Option<Vec<u64>>,
    a: Option<u64>,
    k: Option<usize>,
}

#[derive(Serialize)]
struct VerifyJson {
    ok: bool,
    witness: Option<StarWitness>,
}

#[derive(Serialize)]
struct SelfcheckJson {
    ok: bool,
    grid: &'static str,
    checks: Vec<CheckReport>,
}

#[derive(Serialize)]
struct ErrorJson {
    error: &'static str,
    detail: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if err.use_stderr() => {
            let obj = ErrorJson {
                error: "invalid_input",
                detail: err.to_string(),
            };
            println!("{}", serde_json::to_string(&obj).expect("error json"));
            return ExitCode::from(2);
        }
        Err(err) => {
            // --help / --version
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    init_thread_pool();
    match run(&cli) {
        Ok(violation) => {
            if violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let obj = ErrorJson {
                error: e.code(),
                detail: e.to_string(),
            };
            println!("{}", serde_json::to_string(&obj).expect("error json"));
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn init_thread_pool() {
    if let Ok(raw) = std::env::var("RAMSEY_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn init_thread_pool() {}

/// Runs one command; `Ok(true)` means "mathematical violation found" (exit 1).
fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Formula { which } => {
            let answer = formula_answer(which)?;
            emit_answer(cli.format, &answer);
            Ok(false)
        }
        Command::Construct { which } => {
            let (graph, out) = match which {
                ConstructCmd::Lower { family, out } => {
                    (lower_bound_coloring(&family.resolve()?)?, out)
                }
                ConstructCmd::StarCritical { mst, out } => {
                    (star_critical_lower_coloring(mst.m, mst.s, mst.t)?, out)
                }
            };
            let json = serde_json::to_string(&graph)?;
            if let Some(path) = out {
                std::fs::write(path, format!("{json}\n"))?;
            }
            match cli.format {
                Format::Json => println!("{json}"),
                Format::Table => {
                    print_kv("n", &graph.n().to_string());
                    print_kv("t", &graph.t().to_string());
                    print_kv("edges", &graph.present_edges().count().to_string());
                    print_kv("missing", &graph.missing_count().to_string());
                    if let Some(path) = out {
                        print_kv("written", &path.display().to_string());
                    }
                }
            }
            Ok(false)
        }
        Command::Verify { family, coloring } => {
            let family = family.resolve()?;
            let graph = load_graph(coloring)?;
            let witness = find_star(&graph, &family)?;
            let ok = witness.is_none();
            let report = VerifyJson { ok, witness };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                Format::Table => {
                    print_kv("ok", &ok.to_string());
                    if let Some(w) = &report.witness {
                        print_kv("center", &w.center.to_string());
                        print_kv("colors", &format!("{:?}", w.colors.colors()));
                        print_kv("leaves", &format!("{:?}", w.leaves));
                    }
                }
            }
            Ok(!ok)
        }
        Command::Oracle { which } => {
            let result = match which {
                OracleCmd::Ramsey { family, budget } => {
                    brute_force_ramsey(&family.resolve()?, &config(*budget))?
                }
                OracleCmd::StarCritical { mst, budget } => {
                    brute_force_star_critical(mst.m, mst.s, mst.t, &config(*budget))?
                }
            };
            emit_oracle(cli.format, &result)?;
            Ok(false)
        }
        Command::Selfcheck { grid } => {
            let full = *grid == Grid::Full;
            let checks = run_all(full, &SearchConfig::default())?;
            let ok = checks.iter().all(CheckReport::ok);
            let report = SelfcheckJson {
                ok,
                grid: if full { "full" } else { "small" },
                checks,
            };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                Format::Table => {
                    for check in &report.checks {
                        println!(
                            "{:<28} {:>5} points  {}",
                            check.name,
                            check.points,
                            if check.ok() { "PASS" } else { "FAIL" }
                        );
                        for d in &check.disagreements {
                            println!("    {d}");
                        }
                    }
                    print_kv("ok", &ok.to_string());
                }
            }
            Ok(!ok)
        }
    }
}

fn formula_answer(which: &FormulaCmd) -> Result<AnswerJson, Error> {
    Ok(match which {
        FormulaCmd::Uniform(mst) => {
            let r = ramsey_uniform(mst.m, mst.s, mst.t)?;
            let sc = star_critical_uniform(mst.m, mst.s, mst.t)?;
            let profile = ell_profile(&StarFamily::uniform(mst.m, mst.s, mst.t)?)?;
            AnswerJson {
                r: r.r,
                rstar: Some(sc.rstar),
                branch: r.branch.to_string(),
                ell: Some(profile.ell.clone()),
                a: Some(profile.a),
                k: Some(profile.k),
            }
        }
        FormulaCmd::General { family } => {
            let f = load_family(family)?;
            let r = ramsey_general(&f)?;
            let profile = r.ell.clone().expect("general answers carry the profile");
            AnswerJson {
                r: r.r,
                rstar: None,
                branch: r.branch.to_string(),
                ell: Some(profile.ell),
                a: Some(profile.a),
                k: Some(profile.k),
            }
        }
        FormulaCmd::Classical { m } => {
            let r = ramsey_classical(m)?;
            let sc = star_critical_classical(m)?;
            AnswerJson {
                r: r.r,
                rstar: Some(sc.rstar),
                branch: r.branch.to_string(),
                ell: None,
                a: None,
                k: None,
            }
        }
        FormulaCmd::StarCritical(mst) => {
            let sc = star_critical_uniform(mst.m, mst.s, mst.t)?;
            AnswerJson {
                r: sc.r,
                rstar: Some(sc.rstar),
                branch: sc.branch.to_string(),
                ell: None,
                a: None,
                k: None,
            }
        }
    })
}

fn config(budget: Option<u64>) -> SearchConfig {
    SearchConfig {
        node_budget: budget.unwrap_or(1_000_000_000),
        ..SearchConfig::default()
    }
}

fn emit_answer(format: Format, answer: &AnswerJson) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(answer).expect("answer serializes")
        ),
        Format::Table => {
            print_kv("r", &answer.r.to_string());
            if let Some(rstar) = answer.rstar {
                print_kv("rstar", &rstar.to_string());
            }
            print_kv("branch", &answer.branch);
            if let Some(ell) = &answer.ell {
                print_kv("ell", &format!("{ell:?}"));
            }
            if let Some(a) = answer.a {
                print_kv("a", &a.to_string());
            }
            if let Some(k) = answer.k {
                print_kv("k", &k.to_string());
            }
        }
    }
}

fn emit_oracle(format: Format, result: &OracleResult) -> Result<(), Error> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(result)?),
        Format::Table => {
            match result.value {
                OracleValue::Value(v) => print_kv("value", &v.to_string()),
                OracleValue::BudgetExhausted => print_kv("value", "budget_exhausted"),
            }
            print_kv("nodes_explored", &result.nodes_explored.to_string());
            match &result.witness_coloring {
                Some(g) => print_kv("witness_order", &g.n().to_string()),
                None => print_kv("witness_order", "-"),
            }
        }
    }
    Ok(())
}

fn print_kv(key: &str, value: &str) {
    println!("{key:<16} {value}");
}

fn load_family(path: &Path) -> Result<StarFamily, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn load_graph(path: &Path) -> Result<ColoredGraph, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}
