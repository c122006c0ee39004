mod explore;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qident_core::identities::{self, Expectation, Params};
use qident_core::{CheckResult, Profile, Status};
use serde_json::json;

/// Exact verification of q-series and partition identities.
#[derive(Parser)]
#[command(name = "qident", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registry ids with their equation tags.
    List {
        #[arg(long)]
        json: bool,
        /// Substring matched against id, tag and title.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Check one identity.
    Verify {
        id: String,
        #[arg(long = "L")]
        l: Option<i64>,
        /// Truncation order N (series are compared modulo q^{N+1}).
        #[arg(long)]
        trunc: Option<i64>,
        /// Number of random rational points, for checks that take them.
        #[arg(long)]
        points: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Any other parameter, as name=value. Repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, i64)>,
    },
    /// Run every identity at the parameters of a profile.
    Suite {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        /// Write the results as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads; 0 uses one per core.
        #[arg(long, env = "QIDENT_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        filter: Option<String>,
    },
    /// Print partition and weight tables as CSV.
    Explore {
        #[command(subcommand)]
        what: explore::Explore,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Profile {
        match p {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Full => Profile::Full,
        }
    }
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s}"))?;
    let v = v.trim().parse().map_err(|e| format!("{s}: {e}"))?;
    Ok((k.trim().to_string(), v))
}

const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        // a closed pipe (e.g. `| head`) is not an error
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    match cli.command {
        Command::List { json, filter } => list(json, filter.as_deref()),
        Command::Verify { id, l, trunc, points, seed, params } => {
            let mut given: Params = params.into_iter().collect();
            for (name, v) in [("L", l), ("N", trunc), ("points", points)] {
                if let Some(v) = v {
                    given.insert(name.to_string(), v);
                }
            }
            verify(&id, &given, seed)
        }
        Command::Suite { profile, json, jobs, seed, filter } => suite(profile.into(), json, jobs, seed, filter.as_deref()),
        Command::Explore { what } => explore::run(what).map(|()| ExitCode::SUCCESS),
    }
}

fn list(as_json: bool, filter: Option<&str>) -> io::Result<ExitCode> {
    let mut out = io::stdout().lock();
    let ds = identities::filtered(filter.unwrap_or(""));
    if as_json {
        let items: Vec<_> = ds
            .iter()
            .map(|d| {
                let params: Vec<_> = d
                    .params
                    .iter()
                    .map(|p| json!({"name": p.name, "min": p.min, "max": p.max, "default": p.default, "full": p.full}))
                    .collect();
                json!({
                    "id": d.id,
                    "tag": d.tag,
                    "title": d.title,
                    "strategy": d.strategy,
                    "expect": d.expect,
                    "params": params,
                })
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&items).expect("json"))?;
    } else {
        for d in ds {
            let expect = if d.expect == Expectation::Fail { "  [expected to fail]" } else { "" };
            writeln!(out, "{} ({})  {}{expect}", d.id, d.tag, d.title)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_params(p: &Params) -> String {
    let items: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    items.join(" ")
}

fn report_line(r: &CheckResult) -> String {
    let note = if r.as_expected() { "" } else { "  UNEXPECTED" };
    format!("{:5} {} [{}] {} ms{note}", r.status.to_string().to_uppercase(), r.id, render_params(&r.params), r.millis)
}

fn verify(id: &str, given: &Params, seed: u64) -> io::Result<ExitCode> {
    let r = match identities::check(id, given, seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(USAGE));
        }
    };
    let mut out = io::stdout().lock();
    writeln!(out, "{}", report_line(&r))?;
    if let Some(w) = &r.witness {
        writeln!(out, "  witness: {w}")?;
    }
    Ok(match r.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
        Status::Error => ExitCode::from(USAGE),
    })
}

fn suite(profile: Profile, json_path: Option<PathBuf>, jobs: usize, seed: u64, filter: Option<&str>) -> io::Result<ExitCode> {
    let results = identities::run_suite(profile, jobs, seed, filter);
    if let Some(path) = &json_path {
        let text = serde_json::to_string_pretty(&results).expect("json");
        if let Err(e) = fs::write(path, text + "\n") {
            eprintln!("error: writing {}: {e}", path.display());
            return Ok(ExitCode::from(USAGE));
        }
    }
    let mut out = io::stdout().lock();
    for r in &results {
        writeln!(out, "{}", report_line(r))?;
        if !r.as_expected() {
            if let Some(w) = &r.witness {
                writeln!(out, "  witness: {w}")?;
            }
        }
    }
    let unexpected = results.iter().filter(|r| !r.as_expected()).count();
    writeln!(out, "{} checks, {} as expected, {unexpected} unexpected", results.len(), results.len() - unexpected)?;
    Ok(if identities::suite_ok(&results) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
