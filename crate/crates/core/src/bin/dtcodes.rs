//! Command-line interface: machine-readable output on stdout, human summaries
//! on stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dtcodes::awe::{self, ThresholdCalculator, DEFAULT_HORIZON};
use dtcodes::classify::{classify_with, ClassifyOptions};
use dtcodes::equivalence::EquivalenceOptions;
use dtcodes::search::{run_search, Family, Reduction, SearchConfig, SearchMode, DEFAULT_MAX_WORK};
use dtcodes::verify::{run_suite, Outcome, Suite};
use dtcodes::{Budget, CirculantSpec, Error, Field, GeneratorCode, ToeplitzTriple};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "dtcodes", version, about = "Double Toeplitz and double circulant codes over F2, F3 and F4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code and report a property of it.
    Code(CodeArgs),
    /// Average weight enumerator and guaranteed-length thresholds.
    Awe(AweArgs),
    /// Exhaustive search over a family of codes.
    Search(SearchArgs),
    /// Classify the optimal double Toeplitz codes of one length.
    Classify(ClassifyArgs),
    /// Re-derive reference tables and compare.
    VerifyTables(VerifyArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("family").required(true).args(["dt", "dc", "nc"])))]
#[command(group(clap::ArgGroup::new("action").required(true).args(["minwt", "wenum", "dual", "fsd"])))]
struct CodeArgs {
    #[arg(long)]
    q: u32,
    /// Double Toeplitz triple "t;(a_1,...);(b_1,...)".
    #[arg(long)]
    dt: Option<String>,
    /// First row of a double circulant code, "(r_1,...,r_m)".
    #[arg(long)]
    dc: Option<String>,
    /// First row of a double negacirculant code.
    #[arg(long)]
    nc: Option<String>,
    /// Print the minimum weight.
    #[arg(long)]
    minwt: bool,
    /// Print the weight enumerator as a JSON array.
    #[arg(long)]
    wenum: bool,
    /// Print a generator matrix of the dual code.
    #[arg(long)]
    dual: bool,
    /// Print whether the code is formally self-dual.
    #[arg(long)]
    fsd: bool,
    /// Largest dimension enumerated exhaustively.
    #[arg(long)]
    max_k: Option<usize>,
}

#[derive(Args)]
struct AweArgs {
    #[arg(long)]
    q: u32,
    /// Evaluate the closed form at this length.
    #[arg(long, conflicts_with_all = ["threshold", "table"])]
    n: Option<usize>,
    /// Also sum the enumerators of every code and compare.
    #[arg(long, requires = "n")]
    verify: bool,
    /// Print the guaranteed length for minimum weight --d.
    #[arg(long, requires = "d", conflicts_with = "table")]
    threshold: bool,
    #[arg(long)]
    d: Option<usize>,
    /// Print thresholds for --dmin..=--dmax as CSV.
    #[arg(long, requires_all = ["dmin", "dmax"])]
    table: bool,
    #[arg(long)]
    dmin: Option<usize>,
    #[arg(long)]
    dmax: Option<usize>,
    /// Lengths past the threshold that must also satisfy the bound.
    #[arg(long, default_value_t = DEFAULT_HORIZON)]
    horizon: usize,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    /// Symmetry filter: none, swap (F2) or scalar (F3, F4); defaults to the
    /// one for the field.
    #[arg(long)]
    reduction: Option<Reduction>,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "DTCODES_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Cap on candidates times codewords per candidate.
    #[arg(long, default_value_t = DEFAULT_MAX_WORK)]
    max_work: u128,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    run: RunArgs,
    /// dt, dc or nc.
    #[arg(long, default_value = "dt")]
    family: Family,
    /// find-optimal, collect-at or at-least.
    #[arg(long, default_value = "find-optimal")]
    mode: String,
    /// Minimum weight for collect-at and at-least.
    #[arg(long)]
    d: Option<usize>,
    /// Resume from and record progress in this file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Emit one JSON object per class instead of the full report.
    #[arg(long)]
    jsonl: bool,
    /// Also allow the Frobenius automorphism of F4 (diagnostic).
    #[arg(long)]
    semimonomial: bool,
    /// Equivalence search node cap.
    #[arg(long)]
    node_cap: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// awe-oracle, thresholds, classification-small, generators or all.
    #[arg(long)]
    suite: String,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } | Error::Undecided(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn field(q: u32) -> Result<Field, Error> {
    Field::new(q)
}

fn budget(max_k: Option<usize>) -> Budget {
    max_k.map(Budget::with_max_k).unwrap_or_default()
}

fn named(arg: &str, e: Error) -> Error {
    match e {
        Error::Parse { what, input } => Error::Parse {
            what,
            input: format!("{input} (in {arg})"),
        },
        Error::ParseElement { token, q } => Error::Parse {
            what: if q == 4 { "element of F4 (0, 1, w or v)" } else { "field element" },
            input: format!("{token} (in {arg})"),
        },
        other => other,
    }
}

fn build_code(args: &CodeArgs) -> Result<GeneratorCode, Error> {
    let f = field(args.q)?;
    if let Some(t) = &args.dt {
        return Ok(ToeplitzTriple::parse(f, t).map_err(|e| named("--dt", e))?.code());
    }
    let (flag, prefix, row) = match (&args.dc, &args.nc) {
        (Some(r), _) => ("--dc", "C:", r),
        (_, Some(r)) => ("--nc", "N:", r),
        _ => unreachable!("clap requires a family"),
    };
    let spec = CirculantSpec::parse(f, &format!("{prefix}{}", row.trim())).map_err(|e| named(flag, e))?;
    Ok(spec.code())
}

fn cmd_code(args: CodeArgs) -> CmdResult {
    let code = build_code(&args)?;
    let budget = budget(args.max_k);
    let desc = format!("[{}, {}] code over {}", code.n(), code.k(), code.field());
    if args.minwt {
        let d = code.minimum_weight_within(&budget)?;
        println!("{d}");
        eprintln!("{desc} has minimum weight {d}");
    } else if args.wenum {
        let we = code.weight_enumerator_within(&budget)?;
        println!("{}", we.to_json());
        eprintln!("{desc}: weight enumerator over {} codewords", we.total());
    } else if args.dual {
        let dual = code.dual_code();
        let rows: Vec<String> = dual.to_text().lines().map(str::to_string).collect();
        println!("{}", json!({ "n": dual.n(), "k": dual.k(), "rows": rows }));
        eprintln!("dual of the {desc}");
    } else {
        let fsd = code.is_formally_self_dual_within(&budget)?;
        println!("{fsd}");
        eprintln!("{desc} is {}formally self-dual", if fsd { "" } else { "not " });
    }
    Ok(())
}

fn cmd_awe(args: AweArgs) -> CmdResult {
    let f = field(args.q)?;
    if let Some(n) = args.n {
        let we = awe::average_weight_enumerator(f, n)?;
        println!("{}", we.to_json());
        if args.verify {
            let brute = awe::average_weight_enumerator_bruteforce(f, n)?;
            if brute != we {
                return Err(Failure::Verify(format!(
                    "closed form differs from the sum over all codes: {}",
                    brute.to_json()
                )));
            }
            eprintln!("closed form matches the sum over all {}^{} codes", f.q(), n - 1);
        }
        return Ok(());
    }
    let mut calc = ThresholdCalculator::new(f);
    if args.threshold {
        let d = args.d.expect("clap requires --d");
        let t = calc.threshold(d, args.horizon)?;
        println!("{}", t.n);
        report_isolated(&t);
        return Ok(());
    }
    if args.table {
        let (dmin, dmax) = (args.dmin.unwrap(), args.dmax.unwrap());
        if dmin == 0 || dmin > dmax {
            return Err(Error::InvalidArgument(format!("empty or invalid range {dmin}..={dmax}")).into());
        }
        println!("d,n_{}(d)", f.q());
        for d in dmin..=dmax {
            let t = calc.threshold(d, args.horizon)?;
            println!("{d},{}", t.n);
            report_isolated(&t);
        }
        return Ok(());
    }
    Err(Error::InvalidArgument("awe needs one of --n, --threshold or --table".into()).into())
}

fn report_isolated(t: &awe::LengthThreshold) {
    if !t.is_monotone() {
        eprintln!(
            "note: for d = {} the bound also holds at lengths {:?} below the threshold",
            t.d, t.isolated_passes
        );
    }
}

fn parse_mode(mode: &str, d: Option<usize>) -> Result<SearchMode, Error> {
    let need_d = || d.ok_or_else(|| Error::InvalidArgument(format!("--mode {mode} needs --d")));
    match mode {
        "find-optimal" => Ok(SearchMode::FindOptimal),
        "collect-at" => Ok(SearchMode::CollectAt(need_d()?)),
        "at-least" => Ok(SearchMode::AtLeast(need_d()?)),
        _ => Err(Error::Parse {
            what: "mode (find-optimal, collect-at or at-least)",
            input: format!("{mode} (in --mode)"),
        }),
    }
}

fn cmd_search(args: SearchArgs) -> CmdResult {
    let f = field(args.run.q)?;
    let mut config = SearchConfig::new(f, args.run.n, args.family)
        .mode(parse_mode(&args.mode, args.d)?)
        .workers(args.run.workers);
    if let Some(r) = args.run.reduction {
        config = config.reduction(r);
    }
    config.max_work = args.run.max_work;
    let report = run_search(&config, args.checkpoint.as_deref())?;
    for hit in &report.hits {
        println!("{}", serde_json::to_string(&hit.record()).expect("record serializes"));
    }
    match report.optimal_d {
        Some(d) => eprintln!(
            "{} search over {} at n = {}: optimal minimum weight {d}, {} candidates",
            args.family,
            f,
            args.run.n,
            report.hits.len()
        ),
        None => eprintln!("{} search over {} at n = {}: {} candidates", args.family, f, args.run.n, report.hits.len()),
    }
    Ok(())
}

fn cmd_classify(args: ClassifyArgs) -> CmdResult {
    let f = field(args.run.q)?;
    let mut equivalence = EquivalenceOptions {
        semimonomial: args.semimonomial,
        ..Default::default()
    };
    if let Some(cap) = args.node_cap {
        equivalence.node_cap = cap;
    }
    let opts = ClassifyOptions {
        reduction: args.run.reduction,
        workers: args.run.workers,
        max_work: args.run.max_work,
        equivalence,
    };
    let report = classify_with(f, args.run.n, &opts)?;
    if args.jsonl {
        print!("{}", report.json_lines());
    } else {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    }
    eprintln!(
        "{} n = {}: d = {}, DT-only {}, DC {}, NC {}",
        f, report.n, report.d_opt, report.n_dt, report.n_dc, report.n_nc
    );
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse().map_err(|e| named("--suite", e))?]
    };
    let mut summary = Vec::new();
    let mut first_failure = None;
    for suite in suites {
        let report = run_suite(suite)?;
        for check in &report.checks {
            eprintln!("{suite}: {check}");
        }
        if first_failure.is_none() {
            first_failure = report.first_failure().map(|c| format!("{suite}: {}: {}", c.name, c.detail));
        }
        summary.push(json!({
            "suite": suite.name(),
            "passed": report.count(Outcome::Pass),
            "failed": report.count(Outcome::Fail),
            "skipped": report.count(Outcome::Skipped),
        }));
    }
    println!("{}", serde_json::Value::Array(summary));
    match first_failure {
        Some(f) => Err(Failure::Verify(f)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Code(a) => cmd_code(a),
        Command::Awe(a) => cmd_awe(a),
        Command::Search(a) => cmd_search(a),
        Command::Classify(a) => cmd_classify(a),
        Command::VerifyTables(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
