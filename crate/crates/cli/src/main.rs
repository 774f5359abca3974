mod commands;
mod load;
mod manifold;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use skein_core::catdata::format::{to_json, write_datum};
use skein_core::catdata::{validate_category, validate_objects, Pivotal};
use skein_core::coend::DEFAULT_BUDGET;
use skein_core::exactla::Field;
use skein_core::{Error, Result};

use commands::Opts;
use load::{is_builtin, load, Session, Source, BUILTINS};
use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "skein",
    version,
    about = "Exact skein modules, traces and coends of pivotal categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Ground field: rational, or a prime such as 7 or F7.
    #[arg(long, global = true, default_value = "rational")]
    field: String,
    /// Run over two prime fields, e.g. 7,13, and compare dimensions (builtin categories only).
    #[arg(long, global = true)]
    two_prime: Option<String>,
    /// Subcategory S: admissibility, ideal, seed or coend generators, by command.
    #[arg(long, global = true)]
    subcat_s: Option<String>,
    /// Subcategory T: coend scope or acting objects.
    #[arg(long, global = true)]
    subcat_t: Option<String>,
    /// disc | annulus | sphere | surface(g,n[,labels]) | interval(V,W)
    #[arg(long, global = true)]
    manifold: Option<String>,
    /// Boundary labels, object pair or object list, by command.
    #[arg(long, global = true)]
    labels: Option<String>,
    /// Write machine-readable records (one JSON object per line) or, for build, the category file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Size budget for coend presentations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Jsonl,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Check the strict pivotal axioms of a category.
    Validate { input: String },
    /// Dimension and presentation of a skein module.
    Skein { input: String },
    /// Traces and left/right/two-sided modified traces on an ideal.
    Traces { input: String },
    /// Cylinder coend over generators versus its closure.
    Coend { input: String },
    /// Hom spaces of the horizontal trace.
    Htr { input: String },
    /// Tensor ideal generated by a set of objects.
    Closure { input: String },
    /// Trace pairing on the family X(lambda, mu) over the exterior algebra on a, b, c.
    Example59 {
        /// Samples lambda:mu separated by commas.
        #[arg(long)]
        samples: Option<String>,
    },
    /// Write a builtin category to --out.
    Build { name: String },
}

impl Command {
    fn input(&self) -> Option<&str> {
        match self {
            Command::Validate { input }
            | Command::Skein { input }
            | Command::Traces { input }
            | Command::Coend { input }
            | Command::Htr { input }
            | Command::Closure { input } => Some(input),
            Command::Build { name } => Some(name),
            Command::Example59 { .. } => None,
        }
    }
}

fn validate<C: Pivotal>(s: &Session<C>, report: skein_core::catdata::ValidationReport) -> Report {
    let mut r = Report::new("pivotal axioms");
    r.row("field", s.cat.field());
    r.row("objects", s.names(&s.listed));
    r.row("checks", report.checks);
    r.row("result", &report);
    if let Some(f) = &report.failure {
        r.fail(format!("{}: {}", f.axiom, f.witness));
    }
    r.record(json!({
        "command": "validate",
        "field": s.cat.field().to_string(),
        "checks": report.checks,
        "passed": report.passed(),
        "failure": report.failure.as_ref().map(|f| json!({ "axiom": f.axiom, "witness": f.witness })),
    }));
    r
}

fn dispatch<C: Pivotal>(s: &Session<C>, cmd: &Command, o: &Opts) -> Result<Report> {
    match cmd {
        Command::Skein { .. } => commands::skein(s, o),
        Command::Traces { .. } => commands::traces(s, o),
        Command::Coend { .. } => commands::coend(s, o),
        Command::Htr { .. } => commands::htr(s, o),
        Command::Closure { .. } => commands::closure(s, o),
        Command::Validate { .. } | Command::Build { .. } | Command::Example59 { .. } => {
            unreachable!("handled before dispatch")
        }
    }
}

fn run_once(cmd: &Command, field: Field, common: &Common) -> Result<Report> {
    let opts = Opts {
        s: common.subcat_s.clone(),
        t: common.subcat_t.clone(),
        manifold: common.manifold.clone(),
        labels: common.labels.clone(),
        budget: common.budget,
    };
    if let Command::Example59 { samples } = cmd {
        return commands::example59(field, samples.as_deref());
    }
    let source = load(cmd.input().expect("category input"), field)?;
    match (cmd, source) {
        (Command::Build { name }, source) => {
            let datum = match source {
                Source::Datum(d) => d,
                Source::Exterior(c, objs) => c.to_datum(name, &objs)?,
            };
            let path = common
                .out
                .as_ref()
                .ok_or_else(|| Error::Invalid("build needs --out".into()))?;
            write_datum(path, &datum)?;
            let mut r = Report::new(format!("category {}", datum.name));
            r.row("field", datum.field);
            r.row("objects", datum.objects.join(", "));
            r.row("written", path.display());
            r.record(
                json!({ "command": "build", "name": datum.name, "bytes": to_json(&datum).len() }),
            );
            Ok(r)
        }
        (Command::Validate { .. }, Source::Datum(d)) => {
            Ok(validate(&Session::datum(&d), validate_category(&d)?))
        }
        (Command::Validate { .. }, Source::Exterior(c, objs)) => Ok(validate(
            &Session::exterior(&c, &objs),
            validate_objects(&c, &objs),
        )),
        (_, Source::Datum(d)) => dispatch(&Session::datum(&d), cmd, &opts),
        (_, Source::Exterior(c, objs)) => dispatch(&Session::exterior(&c, &objs), cmd, &opts),
    }
}

fn fields(common: &Common, cmd: &Command) -> Result<Vec<Field>> {
    let Some(pair) = &common.two_prime else {
        return Ok(vec![common.field.parse()?]);
    };
    if let Some(input) = cmd.input() {
        if !is_builtin(input) {
            return Err(Error::Invalid(format!(
                "--two-prime needs a builtin category ({BUILTINS})"
            )));
        }
    }
    let fs: Vec<Field> = pair.split(',').map(str::parse).collect::<Result<_>>()?;
    match fs.as_slice() {
        [Field::Prime(p), Field::Prime(q)] if p != q => Ok(fs),
        _ => Err(Error::Invalid(format!(
            "--two-prime expects two distinct primes, got '{pair}'"
        ))),
    }
}

/// Compares the dimensions recorded over each field.
fn agreement(reports: &[Report], fields: &[Field]) -> Report {
    let mut r = Report::new("two-prime comparison");
    let (a, b) = (&reports[0].dims, &reports[1].dims);
    let mismatches: Vec<String> = a
        .iter()
        .zip(b)
        .filter(|(x, y)| x != y)
        .map(|((k, d1), (_, d2))| format!("{k}: {d1} vs {d2}"))
        .collect();
    r.row("fields", format!("{} / {}", fields[0], fields[1]));
    if a.len() != b.len() {
        r.fail("reports differ in shape");
    } else if mismatches.is_empty() {
        r.row("dimensions", "agree");
    } else {
        r.fail(format!("dimension disagreement: {}", mismatches.join("; ")));
    }
    r.record(json!({ "command": "two-prime", "agree": !r.failed, "mismatches": mismatches }));
    r
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotFunctorial(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> Result<Vec<Report>> {
        let fs = fields(&cli.common, &cli.command)?;
        let mut reports = fs
            .iter()
            .map(|&f| run_once(&cli.command, f, &cli.common))
            .collect::<Result<Vec<_>>>()?;
        if reports.len() == 2 {
            let cmp = agreement(&reports, &fs);
            reports.push(cmp);
        }
        Ok(reports)
    };
    let reports = match run() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let lines: String = reports.iter().map(Report::lines).collect();
    match cli.common.format {
        Format::Table => reports.iter().for_each(|r| print!("{}", r.table())),
        Format::Jsonl => print!("{lines}"),
    }
    if let (Some(path), false) = (
        &cli.common.out,
        matches!(cli.command, Command::Build { .. }),
    ) {
        if let Err(e) = std::fs::write(path, &lines) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if reports.iter().any(|r| r.failed) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
