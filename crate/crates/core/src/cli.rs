//! Command-line front end. [`run`] holds all the logic so it can be driven
//! in-process by tests; the binary only forwards process arguments and
//! standard streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use crate::algebra::{Amplitude, BasisLabel, Dimension, GateMatrix, StateVector};
use crate::circuit::Circuit;
use crate::dsl;
use crate::gates::GateKind;
use crate::verify::{self, SuiteConfig, VerificationReport};

/// Amplitudes with modulus below this are not printed by `simulate`.
pub const PRINT_THRESHOLD: f64 = 1e-12;
/// How close an output must be to `1·|label⟩` to be reported as a label.
pub const LABEL_TOLERANCE: f64 = 1e-10;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    UsageError = 2,
}

impl From<ExitStatus> for std::process::ExitCode {
    fn from(s: ExitStatus) -> Self {
        std::process::ExitCode::from(s as u8)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qudit-swap",
    version,
    about = "Build, simulate and verify qudit SWAP circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the identity suite over a range of dimensions.
    Verify {
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        d_min: i64,
        #[arg(long, default_value_t = 16, allow_negative_numbers = true)]
        d_max: i64,
        /// Dense-path tolerance (exact checks always use 0).
        #[arg(long, default_value_t = verify::DENSE_TOLERANCE)]
        tolerance: f64,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = verify::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical matrix of a gate.
    Matrix {
        #[arg(long)]
        gate: GateKind,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Run a circuit file on a basis label or an amplitude file.
    #[command(group(ArgGroup::new("source").required(true).args(["input", "state"])))]
    Simulate {
        #[arg(long)]
        circuit: PathBuf,
        /// Comma-separated basis label, wire 1 first, e.g. "1,2".
        #[arg(long)]
        input: Option<String>,
        /// File with one `re,im` amplitude per line in basis order.
        #[arg(long)]
        state: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Parse a circuit file and print its canonical form.
    Parse {
        #[arg(long)]
        circuit: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return ExitStatus::Success;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return ExitStatus::UsageError;
        }
    };
    let result = match cli.command {
        Command::Verify {
            d_min,
            d_max,
            tolerance,
            seed,
            trials,
            json,
        } => cmd_verify(
            d_min,
            d_max,
            SuiteConfig {
                tolerance,
                seed,
                trials,
            },
            json,
            out,
        ),
        Command::Matrix { gate, d, format } => cmd_matrix(gate, d, format, out),
        Command::Simulate {
            circuit,
            input,
            state,
            json,
        } => cmd_simulate(&circuit, input.as_deref(), state.as_deref(), json, out),
        Command::Parse { circuit } => cmd_parse(&circuit, out),
    };
    match result {
        Ok(status) => status,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            ExitStatus::UsageError
        }
    }
}

type CmdResult = Result<ExitStatus, String>;

fn io_err(e: std::io::Error) -> String {
    format!("write failed: {e}")
}

fn cmd_verify(
    d_min: i64,
    d_max: i64,
    config: SuiteConfig,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    if !(config.tolerance.is_finite() && config.tolerance >= 0.0) {
        return Err(format!(
            "tolerance must be a nonnegative number, got {}",
            config.tolerance
        ));
    }
    let reports = verify::verify_all_with(d_min, d_max, &config).map_err(|e| e.to_string())?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    if json {
        let doc = json!({
            "reports": reports,
            "total": reports.len(),
            "passed": reports.len() - failed,
            "failed": failed,
        });
        writeln!(out, "{doc}").map_err(io_err)?;
    } else {
        for r in &reports {
            writeln!(out, "{}", report_line(r)).map_err(io_err)?;
        }
        writeln!(
            out,
            "{}/{} checks passed for d in {d_min}..={d_max}",
            reports.len() - failed,
            reports.len()
        )
        .map_err(io_err)?;
    }
    Ok(if failed == 0 {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailed
    })
}

fn report_line(r: &VerificationReport) -> String {
    format!(
        "{} {:<18} d={:<3} max_dev={:.3e} tol={:.1e}",
        if r.passed { "PASS" } else { "FAIL" },
        r.identity,
        r.d,
        r.max_dev,
        r.tolerance
    )
}

fn cmd_matrix(gate: GateKind, d: i64, format: MatrixFormat, out: &mut dyn Write) -> CmdResult {
    let dim = Dimension::new(d).map_err(|e| e.to_string())?;
    dim.register_size(gate.arity()).map_err(|e| e.to_string())?;
    let m = gate.matrix(dim);
    let text = match format {
        MatrixFormat::Csv => matrix_csv(&m),
        MatrixFormat::Json => matrix_json(&m),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(ExitStatus::Success)
}

/// One line per row, entries `re,im` separated by `;`, shortest round-trip
/// decimals.
pub fn matrix_csv(m: &GateMatrix) -> String {
    let mut text = String::new();
    for r in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|c| {
                let a = m.entry(r, c);
                format!("{},{}", a.re, a.im)
            })
            .collect();
        text.push_str(&row.join(";"));
        text.push('\n');
    }
    text
}

/// Array of rows, each an array of `[re, im]` pairs.
pub fn matrix_json(m: &GateMatrix) -> String {
    let rows: Vec<Vec<[f64; 2]>> = (0..m.dim())
        .map(|r| {
            (0..m.dim())
                .map(|c| {
                    let a = m.entry(r, c);
                    [a.re, a.im]
                })
                .collect()
        })
        .collect();
    format!("{}\n", serde_json::to_string(&rows).expect("finite floats"))
}

fn load_circuit(path: &Path) -> Result<Circuit, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    dsl::parse(&text)
        .map_err(|e| format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message))
}

fn cmd_parse(path: &Path, out: &mut dyn Write) -> CmdResult {
    let circuit = load_circuit(path)?;
    out.write_all(dsl::render(&circuit).as_bytes())
        .map_err(io_err)?;
    Ok(ExitStatus::Success)
}

fn parse_label(text: &str, d: Dimension, n: usize) -> Result<BasisLabel, String> {
    let digits = text
        .split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| {
                format!(
                    "input label `{text}`: `{}` is not a nonnegative integer",
                    t.trim()
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if digits.len() != n {
        return Err(format!(
            "input label `{text}` has {} digit(s) but the circuit has {n} wire(s)",
            digits.len()
        ));
    }
    BasisLabel::new(d, digits).map_err(|e| format!("input label `{text}`: {e}"))
}

/// Reads one `re,im` amplitude per line; blank lines and `#` comments are skipped.
pub fn parse_state_file(text: &str, d: Dimension, n: usize) -> Result<StateVector, String> {
    let mut amps = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        let [re, im] = parts[..] else {
            return Err(format!("state line {}: expected `re,im`", i + 1));
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| format!("state line {}: `{s}` is not a number", i + 1))
        };
        amps.push(Complex64::new(parse(re)?, parse(im)?));
    }
    StateVector::from_amplitudes(d, n, amps).map_err(|e| format!("state file: {e}"))
}

fn cmd_simulate(
    circuit_path: &Path,
    input: Option<&str>,
    state_path: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let circuit = load_circuit(circuit_path)?;
    let (d, n) = (circuit.dimension(), circuit.wires());
    d.register_size(n).map_err(|e| e.to_string())?;
    let state = match (input, state_path) {
        (Some(label), _) => {
            StateVector::basis(&parse_label(label, d, n)?).map_err(|e| e.to_string())?
        }
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_state_file(&text, d, n)?
        }
        (None, None) => return Err("one of --input or --state is required".into()),
    };
    let result = circuit.simulate(&state).map_err(|e| e.to_string())?;
    let label = input.and(result.as_basis_label(LABEL_TOLERANCE));

    let shown: Vec<(usize, Amplitude)> = result
        .amplitudes()
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, a)| a.norm() >= PRINT_THRESHOLD)
        .collect();
    let label_of = |j: usize| BasisLabel::from_flat(d, n, j).expect("index within register");

    if json {
        let amplitudes: Vec<_> = shown
            .iter()
            .map(|&(j, a)| json!({"index": j, "label": label_of(j).digits(), "re": a.re, "im": a.im}))
            .collect();
        let doc = json!({
            "d": d.get(),
            "wires": n,
            "label": label.as_ref().map(|l| l.to_string()),
            "amplitudes": amplitudes,
        });
        writeln!(out, "{doc}").map_err(io_err)?;
    } else if let Some(label) = label {
        writeln!(out, "{label}").map_err(io_err)?;
    } else {
        for (j, a) in shown {
            writeln!(out, "{j} {} {} {}", label_of(j), a.re, a.im).map_err(io_err)?;
        }
    }
    Ok(ExitStatus::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (ExitStatus, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qudit-swap").chain(args.iter().copied());
        let status = run(argv, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn matrix_csv_cnot() {
        let (status, out, _) =
            run_args(&["matrix", "--gate", "CXT", "--d", "2", "--format", "csv"]);
        assert_eq!(status, ExitStatus::Success);
        assert_eq!(
            out,
            "1,0;0,0;0,0;0,0\n0,0;1,0;0,0;0,0\n0,0;0,0;0,0;1,0\n0,0;0,0;1,0;0,0\n"
        );
    }

    #[test]
    fn matrix_cz_qubit_default_format() {
        let (status, out, _) = run_args(&["matrix", "--gate", "CZ", "--d", "2"]);
        assert_eq!(status, ExitStatus::Success);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows[3], "0,0;0,0;0,0;-1,0");
        assert_eq!(rows[0], "1,0;0,0;0,0;0,0");
    }

    #[test]
    fn matrix_json_round_trips_bits() {
        let (status, out, _) =
            run_args(&["matrix", "--gate", "QFT", "--d", "3", "--format", "json"]);
        assert_eq!(status, ExitStatus::Success);
        let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(&out).unwrap();
        let q = crate::gates::qft(Dimension::new(3).unwrap());
        for (r, row) in rows.iter().enumerate() {
            for (c, [re, im]) in row.iter().enumerate() {
                assert_eq!(Complex64::new(*re, *im), q.entry(r, c));
            }
        }
    }

    #[test]
    fn matrix_errors_are_usage_errors() {
        assert_eq!(
            run_args(&["matrix", "--gate", "FOO", "--d", "3"]).0,
            ExitStatus::UsageError
        );
        assert_eq!(
            run_args(&["matrix", "--gate", "QFT", "--d", "1"]).0,
            ExitStatus::UsageError
        );
        assert_eq!(
            run_args(&["matrix", "--gate", "CXT", "--d", "65"]).0,
            ExitStatus::UsageError
        );
    }

    #[test]
    fn verify_bad_range_is_usage_error() {
        let (status, _, err) = run_args(&["verify", "--d-min", "1", "--d-max", "4"]);
        assert_eq!(status, ExitStatus::UsageError);
        assert!(err.contains("invalid dimension range"), "{err}");
        assert_eq!(
            run_args(&["verify", "--d-min", "5", "--d-max", "3"]).0,
            ExitStatus::UsageError
        );
        assert_eq!(
            run_args(&[
                "verify",
                "--d-min",
                "2",
                "--d-max",
                "2",
                "--tolerance",
                "-1"
            ])
            .0,
            ExitStatus::UsageError
        );
    }

    #[test]
    fn verify_single_dimension_json() {
        let (status, out, _) = run_args(&["verify", "--d-min", "3", "--d-max", "3", "--json"]);
        assert_eq!(status, ExitStatus::Success);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        let reports = doc["reports"].as_array().unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r["d"] == 3 && r["passed"] == true));
        assert_eq!(doc["failed"], 0);
    }

    #[test]
    fn zero_tolerance_fails_dense_checks() {
        let (status, out, _) =
            run_args(&["verify", "--d-min", "3", "--d-max", "3", "--tolerance", "0"]);
        assert_eq!(status, ExitStatus::VerificationFailed);
        assert!(out.lines().any(|l| l.starts_with("FAIL")));
    }

    #[test]
    fn help_is_not_an_error() {
        let (status, out, _) = run_args(&["--help"]);
        assert_eq!(status, ExitStatus::Success);
        assert!(out.contains("verify"));
        assert_eq!(run_args(&[]).0, ExitStatus::UsageError);
    }

    #[test]
    fn state_file_parsing() {
        let d = Dimension::new(2).unwrap();
        let s = parse_state_file("# bell-ish\n0.5,0\n0.5, 0\n\n0.5,0\n-0.5,0\n", d, 2).unwrap();
        assert_eq!(s.amplitudes()[3], Complex64::new(-0.5, 0.0));
        assert!(parse_state_file("1,0\n", d, 2).is_err());
        assert!(parse_state_file("1 0\n0,0\n0,0\n0,0\n", d, 2).is_err());
        assert!(parse_state_file("1,x\n0,0\n0,0\n0,0\n", d, 2).is_err());
    }

    #[test]
    fn label_parsing() {
        let d = Dimension::new(3).unwrap();
        assert_eq!(parse_label("1, 2", d, 2).unwrap().digits(), &[1, 2]);
        assert!(parse_label("1,3", d, 2).is_err());
        assert!(parse_label("1", d, 2).is_err());
        assert!(parse_label("a,1", d, 2).is_err());
    }
}
