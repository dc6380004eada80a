//! Front end for the `verify` binary.

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{
    run_suite, sample_case, IdentityCase, IdentityId, Sampler, Status, VerificationReport,
};
use crate::limits::{limit_check, LimitReport, LimitSpec, LimitTarget};
use crate::qcore::rational::{int, rat};
use crate::qcore::ParamPoint;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityFilter {
    All,
    One(IdentityId),
}

fn parse_filter(s: &str) -> std::result::Result<IdentityFilter, String> {
    if s == "all" {
        return Ok(IdentityFilter::All);
    }
    s.parse::<IdentityId>()
        .map(IdentityFilter::One)
        .map_err(|_| {
            let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.name()).collect();
            format!(
                "unknown identity `{s}`; expected `all` or one of: {}",
                names.join(", ")
            )
        })
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "verify",
    about = "Exact checks of basic hypergeometric identities"
)]
pub struct RunConfig {
    /// Identity to check, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_filter)]
    pub identity: IdentityFilter,

    /// Series truncation order.
    #[arg(long, default_value_t = 40)]
    pub order: usize,

    /// Largest termination index for terminating identities.
    #[arg(long = "n-max", default_value_t = 30)]
    pub n_max: usize,

    /// Check a single termination index instead of 0..=n-max.
    #[arg(long)]
    pub n: Option<usize>,

    /// Sampled points per identity (and per n).
    #[arg(long, default_value_t = 20)]
    pub trials: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Bound on sampled numerators and denominators.
    #[arg(long = "max-denominator", default_value_t = 9)]
    pub max_denominator: u32,

    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Same as `--format json`.
    #[arg(long)]
    pub json: bool,

    /// Working precision of the q → 1 limit checks.
    #[arg(long, env = "QVERIFY_PRECISION_DIGITS", default_value_t = 50)]
    pub precision_digits: u32,

    /// Explicit point such as `a=1/4,c=1/9,q=1/4`; replaces sampling.
    #[arg(long)]
    pub point: Option<String>,

    /// Run the q → 1 limit checks instead of the identity checks.
    #[arg(long)]
    pub limits: bool,

    /// List identity ids and exit.
    #[arg(long)]
    pub list: bool,
}

impl RunConfig {
    pub fn output_format(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            self.format
        }
    }

    fn selected(&self) -> Vec<IdentityId> {
        match self.identity {
            IdentityFilter::One(id) => vec![id],
            IdentityFilter::All => IdentityId::ALL.to_vec(),
        }
    }

    fn termination_indices(&self, id: IdentityId) -> Vec<Option<usize>> {
        match (id.is_terminating(), self.n) {
            (false, _) => vec![None],
            (true, Some(n)) => vec![Some(n)],
            (true, None) => (0..=self.n_max).map(Some).collect(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunOutput {
    pub reports: Vec<VerificationReport>,
    pub limits: Vec<LimitReport>,
}

impl RunOutput {
    /// Exit code for this outcome; informational identities never count.
    pub fn exit_code(&self) -> i32 {
        let gating_ok = self
            .reports
            .iter()
            .filter(|r| r.identity.is_gating())
            .all(VerificationReport::passed);
        if gating_ok && self.limits.iter().all(|l| l.passed) {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// The `(α, β)` pairs exercised by `--limits`.
pub fn limit_pairs() -> Vec<(crate::Rational, crate::Rational)> {
    vec![
        (int(1), rat(1, 2)),
        (rat(1, 3), rat(1, 5)),
        (int(1), int(1)),
    ]
}

pub fn run(config: &RunConfig) -> Result<RunOutput> {
    if config.limits {
        let specs: Vec<LimitSpec> = LimitTarget::ALL
            .into_iter()
            .flat_map(|t| {
                limit_pairs()
                    .into_iter()
                    .map(move |(a, b)| LimitSpec::new(t, a, b))
            })
            .map(|spec| LimitSpec {
                precision_digits: config.precision_digits,
                ..spec
            })
            .collect();
        let limits = specs
            .par_iter()
            .map(limit_check)
            .collect::<Result<Vec<_>>>()?;
        return Ok(RunOutput {
            reports: Vec::new(),
            limits,
        });
    }

    if let Some(text) = &config.point {
        let IdentityFilter::One(id) = config.identity else {
            return Err(Error::Invalid("--point needs a specific --identity".into()));
        };
        let point = ParamPoint::parse(text)?;
        let cases = config
            .termination_indices(id)
            .into_iter()
            .map(|n| IdentityCase::new(id, point.clone(), n, config.order))
            .collect::<Result<Vec<_>>>()?;
        return Ok(RunOutput {
            reports: run_suite(&cases),
            limits: Vec::new(),
        });
    }

    let sampler = Sampler::new(config.seed, config.max_denominator);
    let tasks: Vec<(IdentityId, Option<usize>, usize)> = config
        .selected()
        .into_iter()
        .flat_map(|id| {
            config
                .termination_indices(id)
                .into_iter()
                .flat_map(move |n| (0..config.trials).map(move |t| (id, n, t)))
        })
        .collect();
    let reports = tasks
        .par_iter()
        .map(|&(id, n, trial)| sample_case(id, n, config.order, &sampler, trial).map(|(_, r)| r))
        .collect::<Result<Vec<_>>>()?;
    Ok(RunOutput {
        reports,
        limits: Vec::new(),
    })
}

pub fn render_json(output: &RunOutput) -> String {
    serde_json::to_string_pretty(output).expect("reports serialize")
}

pub fn render_text(output: &RunOutput) -> String {
    let mut out = String::new();
    for r in &output.reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    for l in &output.limits {
        out.push_str(&format!(
            "{:5} {:12} alpha={} beta={} final error {:.3e} (tolerance {:.0e}), monotone tail: {}\n",
            if l.passed { "PASS" } else { "FAIL" },
            l.target.name(),
            l.alpha,
            l.beta,
            l.final_error,
            l.tolerance,
            l.monotone_tail
        ));
    }
    out
}

fn summary(output: &RunOutput) -> String {
    let count = |s: Status, gating: bool| {
        output
            .reports
            .iter()
            .filter(|r| r.status == s && r.identity.is_gating() == gating)
            .count()
    };
    let mut text = format!(
        "{} pass, {} fail, {} error",
        count(Status::Pass, true),
        count(Status::Fail, true),
        count(Status::Error, true)
    );
    let informational = output.reports.len()
        - count(Status::Pass, true)
        - count(Status::Fail, true)
        - count(Status::Error, true);
    if informational > 0 {
        text.push_str(&format!(" (+{informational} informational, not gating)"));
    }
    if !output.limits.is_empty() {
        let passed = output.limits.iter().filter(|l| l.passed).count();
        text.push_str(&format!("; limits {passed}/{} pass", output.limits.len()));
    }
    text
}

/// Parses `argv`, runs, writes to stdout/stderr and returns the exit code.
pub fn main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(err) => {
            let _ = err.print();
            if !err.use_stderr() {
                return EXIT_PASS;
            }
            if !err.to_string().contains("Usage:") {
                eprintln!("\n{}", RunConfig::command().render_usage());
            }
            return EXIT_CONFIG;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if config.list {
        for id in IdentityId::ALL {
            let _ = writeln!(out, "{:14}{}", id.name(), id.description());
        }
        return EXIT_PASS;
    }
    match run(&config) {
        Ok(output) => {
            let body = match config.output_format() {
                OutputFormat::Json => render_json(&output) + "\n",
                OutputFormat::Text => render_text(&output),
            };
            let _ = out.write_all(body.as_bytes());
            eprintln!("{}", summary(&output));
            output.exit_code()
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_CONFIG
        }
    }
}
