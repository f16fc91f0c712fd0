mod args;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gvm_core::scan::{self, ScanRow};
use gvm_core::{build_datum, ehw, jantzen, rootdata::scalar_parameter_weight, tables, Rational};

use args::{Cli, Command, CrosscheckArgs, DatumArgs, DatumCommand, Format, ScanArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(gvm_core::Error),
    Disagreement(usize),
}

impl From<gvm_core::Error> for CliError {
    fn from(e: gvm_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(gvm_core::Error::Invariant(_)) => 3,
            CliError::Core(_) => 1,
            CliError::Disagreement(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Disagreement(n) => write!(f, "{n} disagreement(s)"),
        }
    }
}

fn threads() -> usize {
    std::env::var("GVM_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

fn json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize") + "\n"
}

fn classify(a: &args::ClassifyArgs) -> Result<String, CliError> {
    let datum = build_datum(a.case.case()?)?;
    let v = jantzen::classify_scalar(&datum, &a.c)?;
    let line = ehw::special_line(&datum, &scalar_parameter_weight(&datum, &a.c))?;
    Ok(match a.format {
        Format::Json => json(&render::classify_json(&datum, &a.c, &line, &v)),
        Format::Pretty => render::classify_pretty(&datum, &a.c, &line, &v),
        Format::Tsv => {
            let row = scan::scan_point(&datum, &a.c)?;
            render::scan_tsv(&datum.case().to_string(), &[row], true)
        }
    })
}

fn window_points(
    datum: &gvm_core::ParabolicRootDatum,
    window: &Option<args::Window>,
    step: &Rational,
) -> Result<Vec<Rational>, CliError> {
    let (lo, hi) = match window {
        Some(w) => (w.0.clone(), w.1.clone()),
        None => scan::default_window(datum)?,
    };
    Ok(scan::lattice(&lo, &hi, step)?)
}

fn scan_cmd(a: &ScanArgs) -> Result<String, CliError> {
    let datum = build_datum(a.case.case()?)?;
    let pts = window_points(&datum, &a.window, &a.step)?;
    let rows = scan::scan(&datum, &pts, threads())?;
    let case = datum.case().to_string();
    Ok(match a.format {
        Format::Tsv => render::scan_tsv(&case, &rows, true),
        Format::Json => json(&render::scan_json(&case, &rows)),
        Format::Pretty => {
            let mut s = render::scan_tsv(&case, &rows, true);
            s.push_str(&render::summary_line(&datum, &rows));
            s.push('\n');
            s
        }
    })
}

fn table_cmd(a: &args::TableArgs) -> Result<String, CliError> {
    let t = tables::table(a.table, a.a.clone())?;
    Ok(match a.format {
        Format::Pretty => render::table_pretty(&t),
        Format::Tsv => render::table_tsv(&t),
        Format::Json => json(&render::table_json(&t)),
    })
}

fn crosscheck(a: &CrosscheckArgs) -> Result<String, CliError> {
    let mut out = String::new();
    let mut failures = 0;
    let mut report = Vec::new();
    for case in a.cases()? {
        let datum = build_datum(case)?;
        let pts = window_points(&datum, &a.window, &a.step)?;
        let rows = scan::scan(&datum, &pts, threads())?;
        let bad: Vec<&ScanRow> = rows.iter().filter(|r| !r.agree || !r.thm26_consistent()).collect();
        failures += bad.len();
        let reducible = rows.iter().filter(|r| r.verdict == jantzen::Verdict::Reducible).count();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        match a.format {
            Format::Json => {
                let mismatches: Vec<serde_json::Value> = bad
                    .iter()
                    .map(|r| {
                        let v = jantzen::classify_scalar(&datum, &r.c)?;
                        let line = ehw::special_line(&datum, &scalar_parameter_weight(&datum, &r.c))?;
                        Ok(render::classify_json(&datum, &r.c, &line, &v))
                    })
                    .collect::<Result<_, CliError>>()?;
                report.push(serde_json::json!({
                    "case": case,
                    "status": status,
                    "points": rows.len(),
                    "reducible": reducible,
                    "mismatches": mismatches,
                }));
            }
            _ => {
                out.push_str(&format!(
                    "{status}\t{case}\tpoints={}\treducible={}\tmismatches={}\n",
                    rows.len(),
                    reducible,
                    bad.len()
                ));
                if !bad.is_empty() {
                    let owned: Vec<ScanRow> = bad.iter().map(|r| (*r).clone()).collect();
                    out.push_str(&render::scan_tsv(&case.to_string(), &owned, true));
                    for r in &owned {
                        let v = jantzen::classify_scalar(&datum, &r.c)?;
                        let line = ehw::special_line(&datum, &scalar_parameter_weight(&datum, &r.c))?;
                        out.push_str(&render::classify_pretty(&datum, &r.c, &line, &v));
                    }
                }
            }
        }
    }
    if a.format == Format::Json {
        out = json(&serde_json::Value::Array(report));
    }
    if failures > 0 {
        print!("{out}");
        return Err(CliError::Disagreement(failures));
    }
    Ok(out)
}

fn datum_cmd(a: &DatumArgs) -> Result<String, CliError> {
    let datum = build_datum(a.case.case()?)?;
    datum.verify()?;
    Ok(match a.format {
        Format::Json | Format::Tsv => json(&render::datum_json(&datum)),
        Format::Pretty => render::datum_pretty(&datum),
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Scan(a) => scan_cmd(a),
        Command::Table(a) => table_cmd(a),
        Command::Crosscheck(a) => crosscheck(a),
        Command::DatumDump(a) | Command::Datum { command: DatumCommand::Dump(a) } => datum_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
