//! `qszego`: exact verification runs over the identity, limit, conjecture and
//! Hankel suites.
//!
//! Exit status is 0 when every identity holds and every negative control fails
//! somewhere, 1 when a check fails, 2 on a usage or configuration error.

mod expr;
mod grid;
mod plan;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qszego::conjectures::Conjecture;
use rayon::prelude::*;

use grid::{parse_range, parse_values, Grid};
use plan::{Axes, Job};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "qszego",
    version,
    about = "Exact checks for Rogers-Szego identities, limits, divisibility scans and Hankel determinants"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; 0 picks one per core. Row order does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for the randomized `props` suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Render values as readable polynomials instead of canonical JSON terms.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Gf,
    Rs,
    Norm,
    Closed,
    Cheb,
    Limits,
    Props,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run an identity suite; with no --id, every id of the suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        id: Vec<String>,
        /// Range `a..b` (inclusive) for n.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Axes as `n=a..b,m=a..b,k=a..b,r=a..b`.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Truncation order for generating functions.
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Number of random instances for `props`.
        #[arg(long, default_value_t = 64)]
        cases: usize,
    },
    /// Divisibility scan of one conjecture.
    Scan {
        #[arg(long)]
        conjecture: String,
        /// Axes as `n=a..b,m=a..b,p=...` (or `k=...` for the power-of-two bases).
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// Primes, e.g. `3,5,7`.
        #[arg(long)]
        p: Option<String>,
        /// Exponents of the base `q^{2^k}`.
        #[arg(long)]
        k: Option<String>,
    },
    /// Direct determinant, tau-product and closed form of one Hankel family.
    Hankel {
        #[arg(long)]
        family: String,
        /// Order, or a range of orders.
        #[arg(long)]
        n: String,
        /// Value substituted for s after evaluation, e.g. `q^3` or `-q^(1/2)`.
        #[arg(long, allow_hyphen_values = true)]
        s_val: Option<String>,
        /// Value of t for the h and H families.
        #[arg(long, allow_hyphen_values = true)]
        t_val: Option<String>,
    },
    /// Limit theorems over a grid; same as `verify limits`.
    Limits {
        #[arg(long)]
        id: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Print every id accepted by each suite.
    List,
}

fn axes(n: &Option<String>, m: &Option<String>, grid: &Option<String>) -> Result<Axes, String> {
    let mut axes = match grid {
        Some(g) => Axes::from_grid(&Grid::parse(g, &["n", "m", "k", "r"])?)?,
        None => Axes::default(),
    };
    if let Some(n) = n {
        axes.n = Some(parse_range(n)?);
    }
    if let Some(m) = m {
        axes.m = Some(parse_range(m)?);
    }
    Ok(axes)
}

fn plan(cli: &Cli) -> Result<(String, Vec<Job>), String> {
    Ok(match &cli.cmd {
        Cmd::Verify {
            suite,
            id,
            n,
            m,
            grid,
            order,
            cases,
        } => {
            let axes = axes(n, m, grid)?;
            let jobs = match suite {
                Suite::Gf => plan::gf(id, *order)?,
                Suite::Rs => plan::rs(id, &axes)?,
                Suite::Norm => plan::norm(id, &axes)?,
                Suite::Closed => plan::closed(id, &axes)?,
                Suite::Cheb => plan::cheb(id, &axes)?,
                Suite::Limits => plan::limits(id, &axes)?,
                Suite::Props => plan::props(cli.seed, *cases),
            };
            let name = suite
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            (name, jobs)
        }
        Cmd::Scan {
            conjecture,
            grid,
            n,
            m,
            p,
            k,
        } => {
            let c = Conjecture::from_id(conjecture).map_err(|e| e.to_string())?;
            let axis = plan::scan_axis(c);
            let (mut ns, mut ms, mut values) = plan::scan_defaults(c);
            if let Some(g) = grid {
                let g = Grid::parse(g, &["n", "m", axis])?;
                ns = g.range("n")?.unwrap_or(ns);
                ms = g.range("m")?.unwrap_or(ms);
                values = g.values(axis)?.unwrap_or(values);
            }
            if let Some(n) = n {
                ns = parse_range(n)?;
            }
            if let Some(m) = m {
                ms = parse_range(m)?;
            }
            match (axis, p, k) {
                ("p", _, Some(_)) => {
                    return Err(format!("`{conjecture}` is scanned over p, not k"))
                }
                ("k", Some(_), _) => {
                    return Err(format!("`{conjecture}` is scanned over k, not p"))
                }
                (_, Some(v), _) | (_, _, Some(v)) => values = parse_values(v)?,
                _ => {}
            }
            ("scan".to_string(), plan::scan(c, ns, ms, &values)?)
        }
        Cmd::Hankel {
            family,
            n,
            s_val,
            t_val,
        } => {
            let s = s_val.as_deref().map(expr::parse).transpose()?;
            let t = t_val.as_deref().map(expr::parse).transpose()?;
            (
                "hankel".to_string(),
                plan::hankel(family, parse_range(n)?, s, t)?,
            )
        }
        Cmd::Limits { id, grid } => (
            "limits".to_string(),
            plan::limits(id, &axes(&None, &None, grid)?)?,
        ),
        Cmd::List => unreachable!("handled before planning"),
    })
}

fn list() {
    use qszego::cheb::{Bridge, Factorization};
    use qszego::limits::LimitId;
    use qszego::normalized::{ClosedForm, GeneralCheck, NormExpansion, Specialization};
    use qszego::series::GfIdentity;
    use qszego::suite;

    let line = |suite: &str, ids: Vec<&str>| println!("{suite}: {}", ids.join(" "));
    line("gf", GfIdentity::ALL.iter().map(|g| g.id()).collect());
    line("rs", suite::RS_IDS.to_vec());
    line(
        "norm",
        NormExpansion::ALL
            .iter()
            .map(|e| e.id())
            .chain(GeneralCheck::ALL.iter().map(|g| g.id()))
            .chain(Specialization::ALL.iter().map(|s| s.id()))
            .collect(),
    );
    line(
        "closed",
        ClosedForm::ALL
            .iter()
            .map(|c| c.id())
            .chain(["f-at-q-cubed"])
            .collect(),
    );
    line(
        "cheb",
        Factorization::ALL
            .iter()
            .map(|f| f.id())
            .chain(Bridge::ALL.iter().map(|b| b.id()))
            .chain([
                "T-closed-sum",
                "U-closed-sum",
                "T-boundary",
                "U-boundary",
                "V-boundary",
            ])
            .collect(),
    );
    line("limits", LimitId::ALL.iter().map(|l| l.id()).collect());
    line("scan", Conjecture::ALL.iter().map(|c| c.id()).collect());
    line("hankel", suite::HANKEL_FAMILIES.to_vec());
}

fn run_jobs(jobs: &[Job], threads: usize) -> Result<Vec<qszego::suite::Row>, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())?;
    let results: Vec<_> = pool.install(|| jobs.par_iter().map(|job| job()).collect());
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if matches!(cli.cmd, Cmd::List) {
        list();
        return ExitCode::SUCCESS;
    }
    let usage = |msg: String| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };
    let (suite, jobs) = match plan(&cli) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let rows = match run_jobs(&jobs, cli.jobs) {
        Ok(rows) => rows,
        Err(e) => return usage(e),
    };
    let report = Report { suite, rows };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            report.write(cli.format, cli.pretty, &mut w)?;
            w.flush()
        }),
        None => report.write(cli.format, cli.pretty, &mut io::stdout().lock()),
    };
    if let Err(e) = written {
        return usage(format!("cannot write report: {e}"));
    }
    let failed = report.failures();
    eprintln!(
        "{}: {} rows, {} failed",
        report.suite,
        report.rows.len(),
        failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
