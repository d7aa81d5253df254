//! The `vrank` command line: enumeration, bijections, orbit tables and
//! congruence checks over the core library.
//!
//! Exit codes are `0` on success, `1` when a verification fails and `2` for
//! usage or parse errors.

pub mod selftest;
pub mod tables;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vrank_core::families::{self, DEFAULT_CEILING};
use vrank_core::oracle;
use vrank_core::orbits::build_orbits_with_ceiling;
use vrank_core::{Error, FamilyId, Pipeline, VTuple};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = if matches!(e, Error::Verification(_)) {
            1
        } else {
            2
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "vrank",
    version,
    about = "Partition bijections and V-rank orbits for mod 3 congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every element of a family slice.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u32,
    },
    /// Apply a family bijection or its inverse.
    Bijection {
        #[arg(long)]
        family: String,
        #[arg(long, conflicts_with = "inverse", required_unless_present = "inverse")]
        forward: Option<String>,
        #[arg(long)]
        inverse: Option<String>,
    },
    /// Decompose a weight slice into Ô-orbits.
    Orbits {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u32,
    },
    /// Check the congruence c(3n+2) ≡ 0 (mod 3).
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u32,
    },
    /// Print generating-function coefficients as `n,c` lines.
    Series {
        #[arg(long)]
        family: String,
        #[arg(long)]
        terms: usize,
    },
    /// Run the worked-example anchor suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Md,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Series,
    Enumerate,
    Orbits,
    All,
}

/// Largest weight checked against exhaustive enumeration by `--method series`.
const SERIES_VALIDATION_LIMIT: u32 = 12;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome::ok(e.render().to_string());
        }
        Err(e) => {
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            return Outcome::usage(first.trim_start_matches("error: "));
        }
    };
    let result = match cli.command {
        Command::Enumerate {
            family,
            n,
            format,
            ceiling,
        } => enumerate(&family, n, format, ceiling),
        Command::Bijection {
            family,
            forward,
            inverse,
        } => bijection(&family, forward, inverse),
        Command::Orbits {
            family,
            n,
            format,
            ceiling,
        } => orbits(&family, n, format, ceiling),
        Command::Verify {
            family,
            max_n,
            method,
            ceiling,
        } => verify(&family, max_n, method, ceiling),
        Command::Series { family, terms } => series(&family, terms),
        Command::Selftest => return selftest(),
    };
    result.unwrap_or_else(|e| e)
}

type CmdResult = Result<Outcome, Outcome>;

fn fail(e: Error) -> Outcome {
    Outcome::from_error(&e)
}

fn family(id: &str) -> Result<FamilyId, Outcome> {
    id.parse().map_err(fail)
}

fn pipeline(id: &str) -> Result<Pipeline, Outcome> {
    Pipeline::from_name(id).map_err(fail)
}

fn line(v: &Value) -> String {
    format!("{v}\n")
}

fn enumerate(id: &str, n: u32, format: ListFormat, ceiling: u32) -> CmdResult {
    let f = family(id)?;
    let elements = families::enumerate_with_ceiling(&f, n, ceiling).map_err(fail)?;
    let texts: Vec<String> = elements.iter().map(ToString::to_string).collect();
    let out = match format {
        ListFormat::Text => texts.iter().map(|t| format!("{t}\n")).collect(),
        ListFormat::Csv => {
            let mut s = String::from("index,element\n");
            for (i, t) in texts.iter().enumerate() {
                let _ = writeln!(s, "{i},{t}");
            }
            s
        }
        ListFormat::Json => line(&json!({
            "family": f.to_string(),
            "n": n,
            "count": texts.len(),
            "elements": texts,
        })),
    };
    Ok(Outcome::ok(out))
}

fn bijection(id: &str, forward: Option<String>, inverse: Option<String>) -> CmdResult {
    let p = pipeline(id)?;
    let out = match (forward, inverse) {
        (Some(x), None) => {
            let element = p.domain().parse_member(&x).map_err(fail)?;
            p.forward(&element).map_err(fail)?.to_string()
        }
        (None, Some(t)) => {
            let tuple = VTuple::parse(p.spec(), &t).map_err(fail)?;
            p.inverse(&tuple).map_err(fail)?.to_string()
        }
        _ => {
            return Err(Outcome::usage(
                "exactly one of --forward or --inverse is required",
            ))
        }
    };
    Ok(Outcome::ok(out + "\n"))
}

fn orbits(id: &str, n: u32, format: TableFormat, ceiling: u32) -> CmdResult {
    let p = pipeline(id)?;
    let d = build_orbits_with_ceiling(p, n, ceiling).map_err(fail)?;
    Ok(Outcome::ok(match format {
        TableFormat::Md => d.to_markdown(),
        TableFormat::Json => line(&d.to_json()),
    }))
}

fn series(id: &str, terms: usize) -> CmdResult {
    if terms == 0 {
        return Err(Outcome::usage("--terms must be at least 1"));
    }
    let f = family(id)?;
    let s = oracle::family_series(&f, terms - 1).map_err(fail)?;
    Ok(Outcome::ok(s.to_csv()))
}

fn verify(id: &str, max_n: u32, method: Method, ceiling: u32) -> CmdResult {
    let f = family(id)?;
    if !matches!(id.trim(), "pd" | "a" | "pod2" | "op2") {
        return Err(Outcome::usage(format!(
            "verify does not support family `{id}`"
        )));
    }
    let orbit_pipeline = Pipeline::from_name(id).ok();
    if method == Method::Orbits && orbit_pipeline.is_none() {
        return Err(Outcome::usage(format!(
            "family `{id}` has no orbit construction"
        )));
    }
    if method == Method::Enumerate && max_n > ceiling {
        return Err(fail(Error::CeilingExceeded { n: max_n, ceiling }));
    }
    let mut reports = Vec::new();
    let mut failed = false;
    let capped = max_n.min(ceiling);

    if matches!(method, Method::Series | Method::All) {
        let s = oracle::family_series(&f, max_n as usize).map_err(fail)?;
        oracle::validate_against_enumeration(&f, &s, SERIES_VALIDATION_LIMIT.min(max_n))
            .map_err(fail)?;
        let report = oracle::scan_congruence(&f.to_string(), &s, 3, 2, max_n as usize);
        failed |= !report.violations.is_empty();
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["method"] = json!("series");
        reports.push(v);

        if method == Method::All {
            let mut mismatches = Vec::new();
            for n in 0..=capped {
                let counted = families::count_with_ceiling(&f, n, ceiling).map_err(fail)?;
                let c = s.coefficient(n as usize);
                if c.to_string() != counted.to_string() {
                    mismatches.push(json!({ "n": n, "series": c.to_string(), "count": counted }));
                }
            }
            failed |= !mismatches.is_empty();
            reports.push(json!({
                "method": "crosscheck",
                "family": f.to_string(),
                "bound": capped,
                "mismatches": mismatches,
            }));
        }
    }

    if matches!(method, Method::Enumerate | Method::All) {
        let mut violations = Vec::new();
        for n in (2..=capped).step_by(3) {
            let counted = families::count_with_ceiling(&f, n, ceiling).map_err(fail)?;
            if counted % 3 != 0 {
                violations.push(
                    json!({ "n": (n - 2) / 3, "index": n, "coefficient": counted.to_string() }),
                );
            }
        }
        failed |= !violations.is_empty();
        reports.push(json!({
            "method": "enumerate",
            "family": f.to_string(),
            "residueClass": "3n+2",
            "bound": capped,
            "violations": violations,
        }));
    }

    if let (Some(p), true) = (
        orbit_pipeline,
        matches!(method, Method::Orbits | Method::All),
    ) {
        let mut slices = Vec::new();
        let mut failures = Vec::new();
        for n in (2..=capped).step_by(3) {
            match build_orbits_with_ceiling(p, n, ceiling) {
                Ok(d) => slices.push(json!({
                    "n": n,
                    "elements": d.element_count(),
                    "orbits": d.orbits.len(),
                })),
                Err(e @ Error::Verification(_)) => {
                    failures.push(json!({ "n": n, "error": e.to_string() }))
                }
                Err(e) => return Err(fail(e)),
            }
        }
        failed |= !failures.is_empty();
        reports.push(json!({
            "method": "orbits",
            "family": f.to_string(),
            "bound": capped,
            "slices": slices,
            "failures": failures,
        }));
    }

    let stdout: String = reports.iter().map(line).collect();
    Ok(Outcome {
        code: i32::from(failed),
        stdout,
        stderr: String::new(),
    })
}

fn selftest() -> Outcome {
    let mut out = String::new();
    let mut failures = 0;
    for (name, check) in selftest::ANCHORS {
        match check() {
            Ok(()) => {
                let _ = writeln!(out, "PASS {name}");
            }
            Err(reason) => {
                failures += 1;
                let _ = writeln!(out, "FAIL {name}: {reason}");
            }
        }
    }
    let _ = writeln!(
        out,
        "{} of {} anchors passed",
        selftest::ANCHORS.len() - failures,
        selftest::ANCHORS.len()
    );
    Outcome {
        code: i32::from(failures > 0),
        stdout: out,
        stderr: String::new(),
    }
}
