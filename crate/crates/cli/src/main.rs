//! `idforge`: list catalog identities, verify them over parameter grids, and
//! evaluate single sides.
//!
//! Exit codes: 0 all cells pass, 1 some cell failed (or aborted), 2 usage
//! error.

mod params;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use idforge_core::catalog::{self, Bindings, Mutation, SideKind, StatusFlag, StructuralParams};
use idforge_core::report::{self, Format, RenderOptions};
use idforge_core::verifier::{self, GridSpec, Mode, Selector, DEFAULT_TERM_BUDGET};
use idforge_core::{Assignment, Error};

use params::{parse_params, ParsedParams};

const BUDGET_ENV: &str = "IDFORGE_TERM_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "idforge", version, about = "Exact verification of binomial-type identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One line per catalog identity: name, parameters, variables, status, anchor.
    List,
    /// Verify identities over a grid of structural parameters.
    Verify(VerifyArgs),
    /// Expand or evaluate one side of an identity.
    Eval(EvalArgs),
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("selector").required(true).args(["identity", "all"]))]
struct VerifyArgs {
    /// Identity to verify (repeatable).
    #[arg(long, value_name = "NAME")]
    identity: Vec<String>,
    /// Verify every catalog identity.
    #[arg(long)]
    all: bool,
    /// Parameter values: n=0..4, s=3, nvec=(2,1) or nvec=(1,0),(2,1). Repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long, default_value = "symbolic", value_parser = ["symbolic", "numeric"])]
    mode: String,
    /// Random points per cell in numeric mode.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; the report does not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    #[arg(long, default_value = "json", value_parser = ["json", "tsv", "text"])]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<String>,
    /// Stop at the first failing cell.
    #[arg(long)]
    fail_fast: bool,
    /// Cap the default range of size parameters (n, m, |nvec|, ...).
    #[arg(long, value_name = "N")]
    max_n: Option<i64>,
    /// Write null durations so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Negative control: break every left side (shift_upper | drop_last_term).
    #[arg(long, hide = true)]
    mutate: Option<String>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, value_name = "NAME")]
    identity: String,
    #[arg(long, value_parser = ["lhs", "rhs"])]
    side: String,
    /// Structural parameters (n=2) and optionally every variable (x=1/2).
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

/// A diagnostic plus its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownIdentity(_)
            | Error::Schema { .. }
            | Error::InvalidGrid(_)
            | Error::Parse { .. }
            | Error::DegenerateMutation(_)
            | Error::IndexOutOfDomain { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => cmd_list(),
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("idforge: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_list() -> Result<u8, Failure> {
    let mut out = String::new();
    for id in catalog::list_identities() {
        let flag = match id.status {
            StatusFlag::Normal => "normal",
            StatusFlag::KnownDiscrepant => "known_discrepant",
        };
        out.push_str(&format!(
            "{:<26} {:<34} {:<14} {:<16} {}\n",
            id.name,
            id.schema_summary(),
            id.vars_summary,
            flag,
            id.anchor
        ));
    }
    print!("{out}");
    Ok(0)
}

fn term_budget() -> Result<usize, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| usage(format!("{BUDGET_ENV}={v} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_TERM_BUDGET),
    }
}

fn structural_bindings(parsed: &ParsedParams) -> Result<Bindings, Failure> {
    let mut out = Bindings::new();
    for (name, value) in parsed {
        let vals = value
            .structural()
            .ok_or_else(|| usage(format!("`{name}` takes integers or vectors, not a fraction")))?;
        out.insert(name.clone(), vals);
    }
    Ok(out)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let parsed = parse_params(&args.params).map_err(usage)?;
    let mutation = args
        .mutate
        .as_deref()
        .map(str::parse::<Mutation>)
        .transpose()
        .map_err(usage)?;
    let mode: Mode = args.mode.parse().map_err(usage)?;
    let format: Format = args.format.parse().map_err(usage)?;
    if mode == Mode::Numeric && args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    if let Some(m) = args.max_n {
        if m < 0 {
            return Err(usage(format!("--max-n {m} must be nonnegative")));
        }
    }
    let selector = if args.all { Selector::All } else { Selector::Names(args.identity.clone()) };
    let grid = GridSpec {
        selector,
        bindings: structural_bindings(&parsed)?,
        max_n: args.max_n,
        mode,
        trials: args.trials,
        seed: args.seed,
        jobs: args.jobs as usize,
        budget: term_budget()?,
        fail_fast: args.fail_fast,
        mutation,
    };
    let results = verifier::run_suite(&grid)?;
    let text = report::render(&results, format, &RenderOptions { seed: args.seed, timing: !args.no_timing });
    match &args.output {
        Some(path) => fs::write(path, &text).map_err(|e| usage(format!("cannot write {path}: {e}")))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    let pass = verifier::aggregate_pass(&results);
    if format != Format::Text {
        let failed = results.iter().filter(|r| r.is_failure()).count();
        eprintln!("idforge: {} cells, {failed} failed", results.len());
    }
    Ok(if pass { 0 } else { 1 })
}

fn cmd_eval(args: EvalArgs) -> Result<u8, Failure> {
    let id = catalog::find(&args.identity)?;
    let side: SideKind = args.side.parse().map_err(usage)?;
    let parsed = parse_params(&args.params).map_err(usage)?;

    let mut structural = StructuralParams::new();
    let mut rest = Vec::new();
    for (name, value) in &parsed {
        if id.schema.iter().any(|d| d.name == name) {
            let vals = value
                .structural()
                .filter(|v| v.len() == 1)
                .ok_or_else(|| usage(format!("`{name}` needs a single integer or vector for eval")))?;
            structural.set(name, vals.into_iter().next().expect("one value"));
        } else {
            rest.push((name, value));
        }
    }
    let params = id.validate(&structural)?;
    let vars = id.symbolic_vars(&params)?;

    let mut point = Assignment::new();
    for (name, value) in rest {
        if !vars.contains(name) {
            return Err(usage(format!("`{name}` is neither a parameter nor a variable of {}", id.name)));
        }
        let r = value.rational().ok_or_else(|| usage(format!("`{name}` needs a single rational value")))?;
        point.insert(name.clone(), r);
    }

    if point.is_empty() {
        println!("{}", id.build_side(&params, side)?);
    } else if point.len() == vars.len() {
        if point.get("q").is_some_and(|q| q.is_zero()) {
            return Err(usage("q must be nonzero"));
        }
        println!("{}", id.eval_side(&params, side, &point)?);
    } else {
        let missing: Vec<_> = vars.iter().filter(|v| !point.contains_key(*v)).cloned().collect();
        return Err(usage(format!("partial assignment; also assign {}", missing.join(", "))));
    }
    Ok(0)
}
