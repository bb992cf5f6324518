use clap::{Parser, Subcommand, ValueEnum};
use reductive::report::{self, Record, Report, RunAll};
use reductive::solver::{ReproduceConfig, SolverConfig, Status};
use reductive::{algebra, catalog, field, Error};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "reductive", version, about = "Reductive complements, witnesses and section loops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    algebra: Option<String>,
    #[arg(long, global = true)]
    prop: Option<String>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Random samples per check.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Numeric tolerance for loop and exponential checks.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Case-split depth bound of the solver.
    #[arg(long, global = true, default_value_t = 12)]
    case_depth: usize,
    /// Print details of matching records too.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List algebras, or the subalgebras of `--algebra`.
    List,
    /// Reproduce the verdicts of one or more propositions.
    VerifyProp { props: Vec<String> },
    /// Check every conjugacy witness and exponential identity.
    VerifyWitnesses {
        /// Parameter samples per parametric witness.
        #[arg(long, default_value_t = 5)]
        per_witness: usize,
        #[arg(long, default_value_t = 7)]
        k: u32,
    },
    /// Killing class of an element of `--algebra`.
    Classify { element: Option<String> },
    /// Closed-form exponential against the series.
    ExpCheck {
        #[arg(long, default_value_t = 5.0)]
        max_norm: f64,
    },
    /// Loop identities on every section construction.
    LoopCheck,
    /// Every suite in one report.
    ReportAll,
    /// Structure constants of `--algebra` in the text format.
    CatalogDump,
}

fn records(cli: &Cli) -> reductive::Result<Option<Vec<Record>>> {
    let tol = |d: f64| cli.tol.unwrap_or(d);
    let props_cfg = ReproduceConfig { seed: cli.seed, solver: SolverConfig { max_depth: cli.case_depth }, ..Default::default() };
    Ok(Some(match &cli.command {
        Command::List | Command::CatalogDump => return Ok(None),
        Command::VerifyProp { props } => {
            let mut sel: Vec<String> = props.clone();
            sel.extend(cli.prop.clone());
            if sel.is_empty() {
                sel = catalog::PROPOSITIONS.iter().map(|s| s.to_string()).collect();
            }
            let names: Vec<&str> = sel.iter().map(String::as_str).collect();
            report::prop_records(&names, &props_cfg)?
        }
        Command::VerifyWitnesses { per_witness, k } => report::witness_records(cli.seed, *per_witness, *k),
        Command::Classify { element: None } => report::classify_records(),
        Command::Classify { element: Some(e) } => {
            let name = cli.algebra.as_deref().ok_or_else(|| Error::Precondition("classify needs --algebra".into()))?;
            let alg = catalog::load_algebra(name)?;
            let c = alg.classify(&alg.parse_element(e, &[])?)?;
            let k = field::fmt_q(&c.killing);
            vec![Record {
                suite: "classify".into(),
                case_id: format!("{name}:{e}"),
                verdict: format!("{} (k = {k})", c.kind),
                expected: String::new(),
                status: Status::Match,
                details: vec![],
            }]
        }
        Command::ExpCheck { max_norm } => report::exp_records(cli.seed, cli.samples, *max_norm, tol(1e-10)),
        Command::LoopCheck => report::loop_records(cli.seed, cli.samples, tol(1e-8)),
        Command::ReportAll => {
            let mut cfg = RunAll::new(cli.seed);
            cfg.samples = cli.samples;
            cfg.props = props_cfg;
            if let Some(t) = cli.tol {
                cfg.tol.loops = t;
                cfg.tol.exp = t;
            }
            report::report_all(&cfg)?.records
        }
    }))
}

fn plain(cli: &Cli) -> reductive::Result<String> {
    match cli.command {
        Command::List => match &cli.algebra {
            None => Ok(catalog::ALGEBRAS.iter().map(|a| format!("{a}\n")).collect()),
            Some(a) => {
                catalog::load_algebra(a)?;
                let subs = catalog::subalgebras(a);
                let mut s: String = subs
                    .iter()
                    .map(|d| {
                        let p = if d.params.is_empty() { String::new() } else { format!("({})", d.params.join(", ")) };
                        format!("{}{p}  <{}>\n", d.id, d.basis.join(", "))
                    })
                    .collect();
                s += &format!("{} subalgebras\n", subs.len());
                Ok(s)
            }
        },
        _ => {
            let name = cli.algebra.as_deref().ok_or_else(|| Error::Precondition("catalog-dump needs --algebra".into()))?;
            Ok(algebra::to_text(&catalog::load_algebra(name)?))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = records(&cli).and_then(|r| match r {
        Some(records) => {
            let rep = Report { seed: cli.seed, records };
            let text = match cli.format {
                Format::Text => rep.to_text(cli.verbose),
                Format::Json => rep.to_json()?,
            };
            emit(&cli, &text)?;
            Ok(rep.exit_code())
        }
        None => {
            emit(&cli, &plain(&cli)?)?;
            Ok(0)
        }
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
