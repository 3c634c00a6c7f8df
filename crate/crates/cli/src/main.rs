//! `lagorb`: list the catalog of homogeneous Lagrangian orbits, verify
//! rows against the expected dimensions and stabilizers, and run the
//! minimizing flow on catalog rows or ad-hoc representations.
//!
//! Exit codes: 0 pass, 1 verification or convergence failure, 2 usage
//! or data error.

use std::collections::VecDeque;
use std::path::PathBuf;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lagorb::classification::{
    build_rep, case_spec, case_table, verify_case, CaseResult, CaseSpec, MatrixAvailability,
    ReportRecord, VerifyOpts,
};
use lagorb::momentmap::{kempf_ness_flow, FlowOpts};
use lagorb::representations::spin::{spin_rep, Chirality};
use lagorb::representations::{
    defining_rep, dual_rep, sym_power, wedge_power, Representation,
};
use lagorb::{algebra::CompactAlgebra, Error};

#[derive(Parser)]
#[command(
    name = "lagorb",
    version,
    about = "Certify homogeneous Lagrangian orbits in complex projective space"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Cmd {
    /// Show the 21-row catalog with availability flags
    List {
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Matrix data file for the 27-dimensional e6 action
        #[arg(long)]
        e6_data: Option<PathBuf>,
    },
    /// Verify one row (--row) or the whole catalog (--all)
    Verify {
        #[arg(long)]
        row: Option<usize>,
        #[arg(long, conflicts_with = "row")]
        all: bool,
        /// Parameter for the series rows (defaults to the smallest admissible value)
        #[arg(long)]
        n: Option<usize>,
        /// Acceptance threshold on the moment map norm at the candidate point
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Override the recorded flow seed
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        e6_data: Option<PathBuf>,
        /// Worker threads for --all
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the minimizing flow on a row's space or an ad-hoc recipe
    Flow {
        #[arg(long)]
        row: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Ad-hoc space, e.g. "su(2)", "su(6):wedge^3", "su(3):sym^2",
        /// "su(4):dual", "sp(3)", "so(7)", "spin(12)+", "g2"
        #[arg(long, conflicts_with = "row")]
        recipe: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Declare success when the final moment map norm is below this
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        max_iters: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        e6_data: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cmd: Cmd) -> lagorb::Result<i32> {
    match cmd {
        Cmd::List { format, e6_data } => cmd_list(format, e6_data.as_deref()),
        Cmd::Verify { row, all, n, tol, seed, format, e6_data, jobs } => {
            cmd_verify(row, all, n, tol, seed, format, e6_data, jobs)
        }
        Cmd::Flow { row, n, recipe, seed, tol, max_iters, format, e6_data } => {
            cmd_flow(row, n, recipe, seed, tol, max_iters, format, e6_data)
        }
    }
}

fn availability_label(spec: &CaseSpec, e6_supplied: bool) -> &'static str {
    match spec.availability {
        MatrixAvailability::Always => "yes",
        MatrixAvailability::WithDataFile => {
            if e6_supplied {
                "yes (data file)"
            } else {
                "needs data file"
            }
        }
        MatrixAvailability::Never => "no",
    }
}

fn cmd_list(format: Format, e6_data: Option<&std::path::Path>) -> lagorb::Result<i32> {
    let table = case_table();
    match format {
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|spec| {
                    let n = spec.default_params.first().copied().unwrap_or(0);
                    json!({
                        "row": spec.row,
                        "group": spec.group_name(n),
                        "rep": spec.rep_name(n),
                        "parametric": spec.parametric,
                        "min_param": if spec.parametric { Some(spec.min_param) } else { None },
                        "proj_dim": spec.expected_proj_dim(n),
                        "isotropy": spec.expected_isotropy_name(n),
                        "isotropy_dim": spec.expected_isotropy_dim(n),
                        "component_group": spec.component_group(n),
                        "invariant_degree": spec.invariant_degree(n),
                        "point_recipe": spec.point_recipe.label(),
                        "matrices": availability_label(spec, e6_data.is_some()),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).map_err(json_err)?);
        }
        Format::Md => {
            println!(
                "| Row | Group | Representation | dim P(V) | Stabilizer | dim | Components | Degree | Point | Matrices |"
            );
            println!("|----:|-------|----------------|---------:|-----------|----:|-----------|-------:|-------|----------|");
            for spec in &table {
                let n = spec.default_params.first().copied().unwrap_or(0);
                println!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    spec.row,
                    spec.group_name(n),
                    spec.rep_name(n),
                    spec.expected_proj_dim(n),
                    spec.expected_isotropy_name(n),
                    spec.expected_isotropy_dim(n),
                    spec.component_group(n),
                    spec.invariant_degree(n),
                    spec.point_recipe.label(),
                    availability_label(spec, e6_data.is_some()),
                );
            }
        }
    }
    Ok(0)
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Internal(format!("json encoding: {e}"))
}

/// Pop rows off a shared queue from `jobs` workers; results are re-sorted
/// by row, so the report order does not depend on scheduling.
fn verify_pool(
    rows: Vec<usize>,
    opts: &VerifyOpts,
    jobs: usize,
) -> Vec<(usize, lagorb::Result<CaseResult>)> {
    let queue: Mutex<VecDeque<usize>> = Mutex::new(rows.into_iter().collect());
    let done: Mutex<Vec<(usize, lagorb::Result<CaseResult>)>> = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1) {
            s.spawn(|| loop {
                let next = queue.lock().unwrap().pop_front();
                match next {
                    Some(row) => {
                        let result = verify_case(row, None, opts);
                        done.lock().unwrap().push((row, result));
                    }
                    None => break,
                }
            });
        }
    });
    let mut out = done.into_inner().unwrap();
    out.sort_by_key(|(row, _)| *row);
    out
}

fn render_records(records: &[ReportRecord], format: Format) -> lagorb::Result<()> {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(records).map_err(json_err)?);
        }
        Format::Md => {
            println!(
                "| Row | Group | Representation | n | Point | dim P(V) | Orbit | Isotropy | Expected | Identified | mu_norm | Pass | s |"
            );
            println!("|----:|-------|----------------|--:|-------|---------:|------:|---------:|---------:|------------|--------:|------|--:|");
            for r in records {
                let dash = || "-".to_string();
                println!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.row,
                    r.group,
                    r.rep,
                    r.n.map_or_else(dash, |v| v.to_string()),
                    r.point_recipe,
                    r.expected_dim,
                    r.orbit_dim.map_or_else(dash, |v| v.to_string()),
                    r.isotropy_dim.map_or_else(dash, |v| v.to_string()),
                    r.expected_isotropy_dim,
                    r.identified.clone().unwrap_or_else(dash),
                    r.mu_norm.map_or_else(dash, |v| format!("{v:.2e}")),
                    r.pass.map_or_else(dash, |v| if v { "yes".into() } else { "NO".into() }),
                    r.seconds.map_or_else(dash, |v| format!("{v:.2}")),
                );
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    row: Option<usize>,
    all: bool,
    n: Option<usize>,
    tol: f64,
    seed: Option<u64>,
    format: Format,
    e6_data: Option<PathBuf>,
    jobs: usize,
) -> lagorb::Result<i32> {
    if tol <= 0.0 {
        return Err(Error::Case("tolerance must be positive".into()));
    }
    let opts = VerifyOpts { mu_tol: tol, seed, e6_data, ..VerifyOpts::default() };

    if let Some(row) = row {
        let result = verify_case(row, n, &opts)?;
        let pass = result.pass;
        render_records(&[ReportRecord::from_result(&result)], format)?;
        return Ok(if pass { 0 } else { 1 });
    }
    if !all {
        return Err(Error::Case("pass --row K or --all".into()));
    }
    if n.is_some() {
        return Err(Error::Case("--n applies to a single --row, not --all".into()));
    }

    // Rows without matrices are reported as metadata only, not failures.
    let mut metadata = Vec::new();
    let mut runnable = Vec::new();
    for spec in case_table() {
        let skip = match spec.availability {
            MatrixAvailability::Never => true,
            MatrixAvailability::WithDataFile => opts.e6_data.is_none(),
            MatrixAvailability::Always => false,
        };
        if skip {
            metadata.push(ReportRecord::metadata_only(&spec));
        } else {
            runnable.push(spec.row);
        }
    }

    let results = verify_pool(runnable, &opts, jobs);
    let mut records = metadata;
    let mut all_pass = true;
    for (row, result) in results {
        let r = result.map_err(|e| Error::Case(format!("row {row}: {e}")))?;
        all_pass &= r.pass;
        records.push(ReportRecord::from_result(&r));
    }
    records.sort_by_key(|r| r.row);
    render_records(&records, format)?;
    Ok(if all_pass { 0 } else { 1 })
}

/// Parse an ad-hoc space description: an algebra name, optionally
/// followed by ":defining", ":dual", ":sym^k" or ":wedge^k".
fn build_recipe(recipe: &str) -> lagorb::Result<Representation> {
    let bad = |msg: &str| Error::Case(format!("recipe {recipe:?}: {msg}"));
    let (alg_part, op_part) = match recipe.split_once(':') {
        Some((a, o)) => (a.trim(), Some(o.trim())),
        None => (recipe.trim(), None),
    };

    if let Some(rest) = alg_part.strip_prefix("spin(") {
        if op_part.is_some() {
            return Err(bad("spin spaces take no construction suffix"));
        }
        let rest = rest.strip_suffix(')').map(|r| (r, Chirality::Full));
        let rest = rest.or_else(|| {
            alg_part
                .strip_prefix("spin(")
                .and_then(|r| r.strip_suffix(")+"))
                .map(|r| (r, Chirality::Even))
        });
        let rest = rest.or_else(|| {
            alg_part
                .strip_prefix("spin(")
                .and_then(|r| r.strip_suffix(")-"))
                .map(|r| (r, Chirality::Odd))
        });
        let (digits, chirality) = rest.ok_or_else(|| bad("expected spin(N), spin(N)+ or spin(N)-"))?;
        let n: usize = digits.parse().map_err(|_| bad("bad spin size"))?;
        return spin_rep(n, chirality);
    }

    let base = if alg_part == "g2" {
        if op_part.is_some() {
            return Err(bad("g2 takes no construction suffix"));
        }
        return lagorb::representations::g2_rep();
    } else {
        let (name, num) = alg_part
            .split_once('(')
            .and_then(|(name, rest)| rest.strip_suffix(')').map(|d| (name, d)))
            .ok_or_else(|| bad("expected e.g. su(3), so(7), sp(2), spin(9), g2"))?;
        let n: usize = num.parse().map_err(|_| bad("bad size"))?;
        let alg = match name {
            "su" => CompactAlgebra::su(n)?,
            "so" => CompactAlgebra::so(n)?,
            "sp" => CompactAlgebra::sp(n)?,
            _ => return Err(bad("unknown algebra family")),
        };
        defining_rep(&std::sync::Arc::new(alg))
    };

    match op_part {
        None | Some("defining") => Ok(base),
        Some("dual") => Ok(dual_rep(&base)),
        Some(op) => {
            if let Some(k) = op.strip_prefix("sym^") {
                let k: usize = k.parse().map_err(|_| bad("bad power"))?;
                sym_power(&base, k)
            } else if let Some(k) = op.strip_prefix("wedge^") {
                let k: usize = k.parse().map_err(|_| bad("bad power"))?;
                wedge_power(&base, k)
            } else {
                Err(bad("unknown construction (use defining, dual, sym^k, wedge^k)"))
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_flow(
    row: Option<usize>,
    n: Option<usize>,
    recipe: Option<String>,
    seed: Option<u64>,
    tol: f64,
    max_iters: Option<usize>,
    format: Format,
    e6_data: Option<PathBuf>,
) -> lagorb::Result<i32> {
    if tol <= 0.0 {
        return Err(Error::Case("tolerance must be positive".into()));
    }
    let (rep, default_seed) = match (row, recipe) {
        (Some(row), None) => {
            let spec = case_spec(row)?;
            let n = spec.resolve_param(n)?;
            (build_rep(&spec, n, e6_data.as_deref())?, spec.flow_seed)
        }
        (None, Some(recipe)) => {
            if n.is_some() {
                return Err(Error::Case("--n applies to --row, not --recipe".into()));
            }
            (build_recipe(&recipe)?, 1)
        }
        _ => return Err(Error::Case("pass exactly one of --row or --recipe".into())),
    };
    rep.validate()?;

    let mut opts = FlowOpts { seed: seed.unwrap_or(default_seed), ..FlowOpts::default() };
    if let Some(m) = max_iters {
        opts.max_iters = m;
    }
    let res = kempf_ness_flow(&rep, &opts)?;
    let pass = res.mu_norm < tol;

    match format {
        Format::Json => {
            let out = json!({
                "label": rep.label,
                "space_dim": rep.dim,
                "algebra": rep.algebra.name,
                "algebra_dim": rep.algebra.dim,
                "seed": opts.seed,
                "iterations": res.iterations,
                "restarts": res.restarts,
                "converged": res.converged,
                "grad_norm": res.grad_norm,
                "mu_norm": res.mu_norm,
                "mu_norm_sq": res.mu_norm * res.mu_norm,
                "pass": pass,
                "norm_history": res.norm_history,
            });
            println!("{}", serde_json::to_string_pretty(&out).map_err(json_err)?);
        }
        Format::Md => {
            println!("flow on {} (dim {}, algebra {})", rep.label, rep.dim, rep.algebra.name);
            println!(
                "seed {} | iterations {} | restarts {} | converged {}",
                opts.seed, res.iterations, res.restarts, res.converged
            );
            println!(
                "final |mu| = {:.3e}   |mu|^2 = {:.6}   |grad| = {:.3e}   {}",
                res.mu_norm,
                res.mu_norm * res.mu_norm,
                res.grad_norm,
                if pass { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(if pass { 0 } else { 1 })
}
