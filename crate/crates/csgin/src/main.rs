use clap::{Args, Parser, Subcommand};
use csgin::exec::{self, Options, OrderSpec};
use csgin::input::{self, FieldSpec, InputError};
use csgin::report::Report;
use csgin::{thread_count, verify};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "csgin",
    about = "Multigraded Groebner bases, generic initial ideals, and Hilbert-series invariants",
    version
)]
struct Cli {
    /// Coefficient field: Q, Fp, or Fp:<prime>.
    #[arg(long, global = true)]
    field: Option<String>,

    /// Term order for initial ideals and gins.
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,

    /// Seeds for generic coordinate changes.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    seed: Vec<u64>,

    /// Write the report to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Compact single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timings in the report (breaks byte-for-byte
    /// reproducibility of the output).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealArgs {
    /// JSON file: {"blocks": [..], "generators": ["..."], "field": "..."}.
    #[arg(long)]
    ideal: PathBuf,

    /// Verify the expected identities and report verdicts.
    #[arg(long)]
    check: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generic initial ideal of a multigraded ideal, with CS and CS*
    /// classification.
    Gin(IdealArgs),

    /// Binomial edge ideal of a graph: combinatorial gin, minimal primes,
    /// regularity.
    Edge {
        /// Graph file: JSON {"n": .., "edges": [[i,j],..]} or text lines
        /// "i j".
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        check: bool,
    },

    /// Multigraded closure of a space of linear forms: homogenization,
    /// contraction, matroid multidegree, gin.
    Closure {
        /// JSON file: {"blocks": [..], "basis": [[..],..], "field": "..."}.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        check: bool,
    },

    /// Multiview ideal of a tuple of projections, computed by two routes.
    Multiview {
        /// JSON file: {"n": .., "cameras": [[[..],..],..]}.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        check: bool,
    },

    /// Hilbert-series invariants of an ideal: K-polynomial, C-polynomial,
    /// multidegrees.
    Multidegree {
        #[arg(long)]
        ideal: PathBuf,
    },

    /// Local-cohomology comparison of S/I and S/gin(I) for a squarefree
    /// Cartwright-Sturmfels monomial ideal.
    Conjecture {
        #[arg(long)]
        ideal: PathBuf,
    },

    /// Run the entire verification suite.
    VerifyAll,
}

fn options(cli: &Cli, check: bool) -> Result<Options, InputError> {
    let field = match &cli.field {
        Some(s) => Some(FieldSpec::parse(s)?),
        None => None,
    };
    if cli.seed.is_empty() {
        return Err(InputError::invalid("at least one seed is required"));
    }
    Ok(Options {
        field,
        order: OrderSpec::parse(&cli.order)?,
        seeds: cli.seed.clone(),
        check,
        timing: cli.timing,
    })
}

fn command_echo(cli: &Cli) -> String {
    match &cli.command {
        Command::Gin(a) => format!(
            "gin --ideal {}{}",
            a.ideal.display(),
            if a.check { " --check" } else { "" }
        ),
        Command::Edge { graph, check } => format!(
            "edge --graph {}{}",
            graph.display(),
            if *check { " --check" } else { "" }
        ),
        Command::Closure { input, check } => format!(
            "closure --input {}{}",
            input.display(),
            if *check { " --check" } else { "" }
        ),
        Command::Multiview { input, check } => format!(
            "multiview --input {}{}",
            input.display(),
            if *check { " --check" } else { "" }
        ),
        Command::Multidegree { ideal } => format!("multidegree --ideal {}", ideal.display()),
        Command::Conjecture { ideal } => format!("conjecture --ideal {}", ideal.display()),
        Command::VerifyAll => "verify-all".to_string(),
    }
}

fn run(cli: &Cli) -> Result<Report, InputError> {
    let echo = command_echo(cli);
    match &cli.command {
        Command::Gin(a) => {
            let opts = options(cli, a.check)?;
            let (ideal, digest) = input::load_json(&a.ideal)?;
            exec::gin_command(&ideal, digest, echo, &opts)
        }
        Command::Edge { graph, check } => {
            let opts = options(cli, *check)?;
            let (g, digest) = input::load_graph(graph)?;
            exec::edge_command(&g, digest, echo, &opts)
        }
        Command::Closure { input: path, check } => {
            let opts = options(cli, *check)?;
            let (closure, digest) = input::load_json(path)?;
            exec::closure_command(&closure, digest, echo, &opts)
        }
        Command::Multiview { input: path, check } => {
            let opts = options(cli, *check)?;
            let (mv, digest) = input::load_json(path)?;
            exec::multiview_command(&mv, digest, echo, &opts)
        }
        Command::Multidegree { ideal } => {
            let opts = options(cli, false)?;
            let (parsed, digest) = input::load_json(ideal)?;
            exec::multidegree_command(&parsed, digest, echo, &opts)
        }
        Command::Conjecture { ideal } => {
            let opts = options(cli, false)?;
            let (parsed, digest) = input::load_json(ideal)?;
            exec::conjecture_command(&parsed, digest, echo, &opts)
        }
        Command::VerifyAll => {
            let opts = options(cli, true)?;
            let mut report = Report::new(echo, "-");
            report.field = FieldSpec::default().label();
            report.order = opts.order.label().to_string();
            report.seeds = opts.seeds.clone();
            let (results, verdicts) = verify::verify_all_results(&opts.seeds, thread_count());
            report.results = results;
            report.verdicts = verdicts;
            if let Some(fail) = report.verdicts.iter().find(|v| !v.pass) {
                report.counterexample = Some(serde_json::json!({
                    "item": fail.check,
                    "detail": fail.detail,
                }));
            }
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let rendered = report.render(cli.json);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, rendered + "\n") {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => println!("{rendered}"),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
