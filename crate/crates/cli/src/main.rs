use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tannaka::error::Error;
use tannaka::examples::{example, EXAMPLE_NAMES};
use tannaka::fusion::verify_all;
use tannaka::hopf::check_hopf;
use tannaka::io::{read_file, write_file, Document};
use tannaka::reconstruct::reconstruct_hopf;
use tannaka::repcat::{gamma_roundtrip, skeletalize, verify_irreps};
use tannaka::report::{CheckRecord, Report};

/// Failures shown per record in text reports.
const TEXT_FAILURE_LIMIT: usize = 100;

#[derive(Parser)]
#[command(
    name = "tannaka",
    version,
    about = "Exact Hopf algebra reconstruction and verification"
)]
struct Cli {
    /// Report format written to standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    report: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the algebra, bialgebra and antipode axioms of a hopf document.
    CheckHopf { file: PathBuf },
    /// Check pentagon and rigidity of a fusion document, and the tensorator
    /// and duality of a fiber document when given.
    CheckCategory { fusion: PathBuf, fiber: Option<PathBuf> },
    /// Build End(F) from fusion and fiber documents and write it as a hopf document.
    Reconstruct {
        fusion: PathBuf,
        fiber: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Skeletalize the module category: writes the fusion document to OUTPUT
    /// and the fiber document next to it with `.fiber` before the extension.
    Repcat {
        hopf: PathBuf,
        modules: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Skeletalize, reconstruct, and check that γ is a Hopf isomorphism.
    Roundtrip { hopf: PathBuf, modules: PathBuf },
    /// Write a shipped example.
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXAMPLE_NAMES))]
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckHopf { .. } => "check-hopf",
            Command::CheckCategory { .. } => "check-category",
            Command::Reconstruct { .. } => "reconstruct",
            Command::Repcat { .. } => "repcat",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Example { .. } => "example",
        }
    }
}

#[derive(Serialize)]
struct Output<'a> {
    command: &'a str,
    passed: bool,
    checks: &'a [CheckRecord],
    failure_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    written: Vec<String>,
    timing_ms: f64,
}

/// Errors that mean the input is well formed but violates an axiom.
fn is_axiom_failure(e: &Error) -> bool {
    !matches!(
        e,
        Error::Parse { .. } | Error::Schema { .. } | Error::Shape(_) | Error::Io(_) | Error::InvalidGroup(_)
    )
}

struct Run {
    report: Report,
    written: Vec<PathBuf>,
}

impl Run {
    fn new(report: Report) -> Self {
        Run {
            report,
            written: Vec::new(),
        }
    }
}

fn fiber_path(out: &Path) -> PathBuf {
    match (out.file_stem(), out.extension()) {
        (Some(stem), Some(ext)) => {
            let mut name = stem.to_os_string();
            name.push(".fiber.");
            name.push(ext);
            out.with_file_name(name)
        }
        _ => {
            let mut s = out.as_os_str().to_os_string();
            s.push(".fiber");
            PathBuf::from(s)
        }
    }
}

fn execute(cmd: &Command) -> Result<Run, Error> {
    match cmd {
        Command::CheckHopf { file } => {
            let h = read_file(file)?.into_hopf()?;
            Ok(Run::new(check_hopf(&h)?))
        }
        Command::CheckCategory { fusion, fiber } => {
            let k = read_file(fusion)?.into_fusion()?;
            let phi = fiber.as_ref().map(|f| read_file(f)?.into_fiber()).transpose()?;
            Ok(Run::new(verify_all(&k, phi.as_ref())?))
        }
        Command::Reconstruct { fusion, fiber, output } => {
            let k = read_file(fusion)?.into_fusion()?;
            let phi = read_file(fiber)?.into_fiber()?;
            let mut report = verify_all(&k, Some(&phi))?;
            if !report.passed() {
                return Ok(Run::new(report));
            }
            let rec = reconstruct_hopf(&k, &phi)?;
            report.extend(rec.report);
            let labels = rec
                .basis
                .iter()
                .map(|l| format!("{}[{},{}]", k.simples[l.simple], l.row, l.col))
                .collect();
            write_file(
                output,
                &Document::Hopf {
                    hopf: rec.hopf,
                    labels: Some(labels),
                },
            )?;
            Ok(Run {
                report,
                written: vec![output.clone()],
            })
        }
        Command::Repcat { hopf, modules, output } => {
            let h = read_file(hopf)?.into_hopf()?;
            let mods = read_file(modules)?.into_modules()?;
            let mut report = verify_irreps(&h, &mods)?;
            if !report.passed() {
                return Ok(Run::new(report));
            }
            let (k, phi) = skeletalize(&h, &mods)?;
            report.extend(verify_all(&k, Some(&phi))?);
            let fiber_out = fiber_path(output);
            write_file(output, &Document::Fusion(k))?;
            write_file(&fiber_out, &Document::Fiber(phi))?;
            Ok(Run {
                report,
                written: vec![output.clone(), fiber_out],
            })
        }
        Command::Roundtrip { hopf, modules } => {
            let h = read_file(hopf)?.into_hopf()?;
            let mods = read_file(modules)?.into_modules()?;
            let mut report = verify_irreps(&h, &mods)?;
            if !report.passed() {
                return Ok(Run::new(report));
            }
            report.extend(gamma_roundtrip(&h, &mods)?.report);
            Ok(Run::new(report))
        }
        Command::Example { name, output } => {
            let doc = example(name).ok_or_else(|| Error::Schema {
                field: "name".into(),
                message: format!("unknown example {name:?}"),
            })?;
            write_file(output, &doc)?;
            Ok(Run {
                report: Report::new(),
                written: vec![output.clone()],
            })
        }
    }
}

fn print_text(command: &str, out: &Output, report: &Report) {
    println!("{command}: {}", if out.passed { "PASS" } else { "FAIL" });
    if let Some(e) = &out.error {
        println!("error: {e}");
    }
    for c in &report.checks {
        println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        if let Some(n) = &c.note {
            println!("  note: {n}");
        }
        for f in c.failures.iter().take(TEXT_FAILURE_LIMIT) {
            println!("  at {:?}: lhs = {}, rhs = {}", f.indices, f.lhs, f.rhs);
        }
        if c.failures.len() > TEXT_FAILURE_LIMIT {
            println!("  ... {} more", c.failures.len() - TEXT_FAILURE_LIMIT);
        }
    }
    for w in &out.written {
        println!("wrote {w}");
    }
    println!("time: {:.1} ms", out.timing_ms);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = cli.command.name();
    let start = Instant::now();
    let (report, written, error, code) = match execute(&cli.command) {
        Ok(run) => {
            let code = if run.report.passed() { 0 } else { 1 };
            (run.report, run.written, None, code)
        }
        Err(e) => {
            let code = if is_axiom_failure(&e) { 1 } else { 2 };
            let report = match &e {
                Error::ReconstructionAxiomFailure(r) | Error::SkeletalizationFailure(r) => (**r).clone(),
                _ => Report::new(),
            };
            if code == 2 {
                eprintln!("error: {e}");
            }
            (report, Vec::new(), Some(e.to_string()), code)
        }
    };
    let out = Output {
        command,
        passed: code == 0,
        checks: &report.checks,
        failure_count: report.checks.iter().map(|c| c.failures.len()).sum(),
        error,
        written: written.iter().map(|p| p.display().to_string()).collect(),
        timing_ms: start.elapsed().as_secs_f64() * 1000.0,
    };
    match cli.report {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).expect("reports serialize")),
        Format::Text => print_text(command, &out, &report),
    }
    ExitCode::from(code)
}
