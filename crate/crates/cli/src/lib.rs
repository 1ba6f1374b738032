//! Command-line front-end for `abacus-core`.
//!
//! [`run`] takes the argument vector and returns the exit status together with
//! everything destined for standard output and standard error, so the binary
//! is a thin shell and the whole interface is testable in-process.
//!
//! Exit status: 0 on success, 1 when a verification suite fails, 2 on a usage
//! error. Diagnostics are a single line on standard error.

pub mod args;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::io::Read;
use std::time::Instant;

use abacus_core::abacus::BeadSet;
use abacus_core::alpha::build_alpha;
use abacus_core::core_quotient::{s_core, s_quotient};
use abacus_core::simul_cores::{enumerate_cores, kappa};
use abacus_core::{Abacus, Partition};
use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use args::{AlphaArgs, Cli, Command, Format, PairArgs, PartitionArgs, RenderArgs, VerifyArgs};

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn success(stdout: String) -> Self {
        Output { code: EXIT_SUCCESS, stdout, stderr: String::new() }
    }

    fn usage(message: impl AsRef<str>) -> Self {
        Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}\n", message.as_ref()) }
    }
}

/// Parses `argv` (program name first) and executes the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return clap_failure(&e),
    };
    let result = match cli.command {
        Command::Core(a) => core(a),
        Command::Quotient(a) => quotient(a),
        Command::Kappa(a) => kappa_cmd(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Alpha(a) => alpha(a),
        Command::Render(a) => render_cmd(a),
        Command::Verify(a) => return verify_cmd(a),
    };
    match result {
        Ok(stdout) => Output::success(stdout),
        Err(message) => Output::usage(message),
    }
}

fn clap_failure(e: &clap::Error) -> Output {
    let text = e.render().to_string();
    if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
        return Output::success(text);
    }
    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
        return Output::usage("no command given; try --help");
    }
    // First paragraph only, folded onto one line.
    let line = text.lines().take_while(|l| !l.trim().is_empty()).map(str::trim).collect::<Vec<_>>().join(" ");
    let line = line.strip_prefix("error: ").unwrap_or(&line);
    Output::usage(line)
}

type CmdResult = Result<String, String>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("command outputs always serialize");
    out.push('\n');
    out
}

fn text_or_json(format: Option<Format>, verb: &str) -> Result<Format, String> {
    match format.unwrap_or(Format::Json) {
        Format::Svg => Err(format!("{verb} has no svg output; use ascii or json")),
        other => Ok(other),
    }
}

fn core(a: PartitionArgs) -> CmdResult {
    let format = text_or_json(a.format, "core")?;
    let c = s_core(&a.partition, a.s);
    Ok(match format {
        Format::Json => to_json(&c),
        _ => format!("{c}\n"),
    })
}

fn quotient(a: PartitionArgs) -> CmdResult {
    let format = text_or_json(a.format, "quotient")?;
    let q = s_quotient(&a.partition, a.s);
    Ok(match format {
        Format::Json => to_json(&q),
        _ => {
            let parts: Vec<String> = q.parts().iter().map(ToString::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
    })
}

#[derive(Serialize)]
struct KappaOutput<'a> {
    partition: &'a Partition,
    size: usize,
}

fn kappa_cmd(a: PairArgs) -> CmdResult {
    let format = text_or_json(a.format, "kappa")?;
    let k = kappa(a.s, a.t).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => to_json(&KappaOutput { partition: &k, size: k.size() }),
        _ => format!("{k} size {}\n", k.size()),
    })
}

fn enumerate(a: PairArgs) -> CmdResult {
    let format = text_or_json(a.format, "enumerate")?;
    let cores = enumerate_cores(a.s, a.t).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => to_json(&cores.collect::<Vec<_>>()),
        _ => cores.map(|c| format!("{c}\n")).collect(),
    })
}

fn draw(abacus: &Abacus, format: Option<Format>) -> String {
    let mut out = match format.unwrap_or(Format::Ascii) {
        Format::Ascii => render::ascii(abacus),
        Format::Svg => render::svg(abacus),
        Format::Json => render::json(abacus),
    };
    out.push('\n');
    out
}

fn alpha_abacus(s: usize) -> Result<Abacus, String> {
    render::check_runners(s)?;
    Ok(build_alpha(s).map_err(|e| e.to_string())?.abacus().clone())
}

fn alpha(a: AlphaArgs) -> CmdResult {
    Ok(draw(&alpha_abacus(a.s)?, a.format))
}

fn render_cmd(a: RenderArgs) -> CmdResult {
    let abacus = match (&a.input, a.s, &a.partition) {
        (Some(path), _, _) => {
            let mut text = String::new();
            if path.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text)
            } else {
                std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
            }
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            render::parse_json(&text)?
        }
        (None, Some(s), Some(p)) => {
            render::check_runners(s)?;
            BeadSet::minimal(p).normalize(s).to_abacus(s, None).map_err(|e| e.to_string())?
        }
        (None, Some(s), None) => alpha_abacus(s)?,
        (None, None, _) => return Err("render needs --s or --input".into()),
    };
    Ok(draw(&abacus, a.format))
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    reports: &'a [verify::Report],
}

fn verify_cmd(a: VerifyArgs) -> Output {
    let format = match a.format.unwrap_or(Format::Ascii) {
        Format::Svg => return Output::usage("verify has no svg output; use ascii or json"),
        other => other,
    };
    let suites = verify::expand(a.theorem);
    if a.r.is_some() && !suites.contains(&args::Theorem::Amlev) {
        return Output::usage(format!("--r only applies to --theorem amlev, not {}", verify::name(a.theorem)));
    }
    if let Some(r) = a.r {
        if r < 3 || r % 2 == 0 {
            return Output::usage(format!("--r must be an odd integer at least 3, got {r}"));
        }
    }

    let s_max = usize::from(a.s_max);
    let mut reports = Vec::with_capacity(suites.len());
    for theorem in suites {
        let start = Instant::now();
        let mut report = match verify::run_suite(theorem, s_max, a.r) {
            Ok(report) => report,
            Err(message) => return Output::usage(message),
        };
        if a.timing {
            report.elapsed_ms = Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
        }
        reports.push(report);
    }

    let passed = reports.iter().all(|r| r.passed);
    let stdout = match format {
        Format::Json => to_json(&VerifyOutput { passed, reports: &reports }),
        _ => verify::render_text(&reports),
    };
    if passed {
        Output::success(stdout)
    } else {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.theorem).collect();
        Output { code: EXIT_FAILURE, stdout, stderr: format!("verification failed: {}\n", failed.join(", ")) }
    }
}
