//! `qhowe`: batch front end for enumeration, generator actions and the
//! verification suites. Every command writes one JSON report; the exit
//! status is 0 exactly when the report passes.

mod config;
mod notation;
mod report;
mod suites;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use qhowe_core::coord::{act_coord, act_rescaled, words_to_vector, CoordFlavor, CoordWord, Straightener, Strategy};
use qhowe_core::fock::{apply_generator, GeneratorSymbol, ModuleVector, Side};
use qhowe_core::indexsets::{enumerate_matrices, Flavor, Parity};
use qhowe_core::oracle::DEFAULT_PRIMES;
use serde::Serialize;

use config::{Basis, CalibrationStore, Command, JobConfig, Suite};
use report::Report;

#[derive(Parser)]
#[command(name = "qhowe", version, about = "Exact checks of quantum Howe dualities on Fock spaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Compare the report with this golden file; a mismatch fails the run.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    /// Rewrite the golden file from this run instead of comparing.
    #[arg(long, global = true, requires = "golden")]
    update_golden: bool,
    /// Directory holding the persisted oracle calibration.
    #[arg(long, global = true, env = "QHOWE_CACHE_DIR", default_value = ".qhowe")]
    cache_dir: PathBuf,
}

#[derive(Args, Clone)]
struct SpaceArgs {
    /// A, Bjj, Bji, Bij, Bii, Cjj, Cji, Cij or Cii.
    #[arg(long)]
    flavor: Flavor,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Refuse spaces with more labels than this.
    #[arg(long, default_value_t = 5000)]
    max_basis: u128,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the label set of a space.
    Enumerate(SpaceArgs),
    /// Apply one generator to one basis vector.
    Act {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_parser = ["left", "right"])]
        side: String,
        /// Generator name such as E1, f0, t0, d2^-1.
        #[arg(long)]
        generator: String,
        /// JSON rows or, for B/C, an E-sum such as `3E00`.
        #[arg(long)]
        label: String,
        #[arg(long, value_enum, default_value = "fock")]
        basis: Basis,
    },
    /// Expand a coordinate word in the monomial basis.
    Straighten {
        /// A, or a B flavor with equal parities (Bjj, Bii).
        #[arg(long)]
        flavor: Flavor,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Letters such as `t[2,2] t[1,1]` or `t[-1,0]`.
        #[arg(long)]
        word: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Sample primes for the oracle, each > 5.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PRIMES)]
        primes: Vec<u64>,
        /// Degree bound for interpolation.
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Recalibrate the oracle orientation and persist it.
        #[arg(long)]
        calibrate: bool,
    },
}

fn job_of(cmd: &Cmd) -> JobConfig {
    let (command, s, primes, degree_bound, calibrate) = match cmd {
        Cmd::Enumerate(s) => (Command::Enumerate, s.clone(), Vec::new(), None, false),
        Cmd::Straighten { flavor, m, n, word } => (
            Command::Straighten { word: word.clone() },
            SpaceArgs {
                flavor: *flavor,
                m: *m,
                n: *n,
                d: word.matches('[').count(),
                max_basis: u128::MAX,
            },
            Vec::new(),
            None,
            false,
        ),
        Cmd::Act {
            space,
            side,
            generator,
            label,
            basis,
        } => (
            Command::Act {
                side: side.clone(),
                generator: generator.clone(),
                label: label.clone(),
                basis: *basis,
            },
            space.clone(),
            Vec::new(),
            None,
            false,
        ),
        Cmd::Verify {
            space,
            suite,
            primes,
            degree_bound,
            calibrate,
        } => (Command::Verify { suite: *suite }, space.clone(), primes.clone(), *degree_bound, *calibrate),
    };
    JobConfig {
        command,
        flavor: s.flavor,
        m: s.m,
        n: s.n,
        d: s.d,
        primes,
        degree_bound,
        max_basis: s.max_basis,
        calibrate,
    }
}

#[derive(Serialize)]
struct LabelEntry {
    label: String,
    rows: Vec<Vec<u32>>,
}

fn enumerate(job: &JobConfig, report: &mut Report) -> Result<()> {
    let labels = enumerate_matrices(job.flavor, job.m, job.n, job.d)?;
    report.detail("count", labels.len())?;
    let entries: Vec<LabelEntry> = labels
        .iter()
        .map(|a| LabelEntry {
            label: a.label(),
            rows: a.rows_vec(),
        })
        .collect();
    report.detail("labels", entries)
}

fn act(job: &JobConfig, side: &str, generator: &str, label: &str, basis: Basis, report: &mut Report) -> Result<()> {
    let space = job.space();
    let side = if side == "left" { Side::Left } else { Side::Right };
    let g = GeneratorSymbol::parse(side, GeneratorSymbol::family_for(&space, side), generator)?;
    g.check(&space)?;
    let a = notation::parse_label(job.flavor, job.m, job.n, label)?;
    let v = ModuleVector::basis_vector(&a);
    let (out, prefix) = match basis {
        Basis::Fock => (apply_generator(&g, &v)?, ""),
        Basis::Coord => (act_coord(&g, &v)?, if job.flavor == Flavor::A { "t" } else { "t~" }),
        Basis::Rescaled => (act_rescaled(&g, &a)?, "<A>"),
    };
    report.detail("input", a.label())?;
    report.detail("generator", g.to_string())?;
    report.detail("display", notation::render(&out, prefix))?;
    report.detail("result", &out)
}

fn straighten(job: &JobConfig, word: &str, report: &mut Report) -> Result<()> {
    let space = job.space();
    let (flavor, sum) = match job.flavor {
        Flavor::A => (CoordFlavor::A, None),
        Flavor::B(Parity::Jmath, Parity::Jmath) => (CoordFlavor::Bj, Some(())),
        Flavor::B(Parity::Imath, Parity::Imath) => (CoordFlavor::Bi, Some(())),
        other => bail!("no coordinate algebra for flavor {other}"),
    };
    let w = CoordWord::parse(flavor, job.m, job.n, word)?;
    let straightener = Straightener::new(Strategy::Leftmost);
    let reduced = match sum {
        None => straightener.normal_order(&w.letters),
        Some(()) => straightener.reduce_b(&w.letters)?,
    };
    let v = words_to_vector(&reduced, &space)?;
    report.detail("input", w.to_string())?;
    let prefix = if job.flavor == Flavor::A { "t" } else { "t~" };
    report.detail("display", notation::render(&v, prefix))?;
    report.detail("result", &v)
}

fn run(cli: &Cli) -> Result<bool> {
    let job = job_of(&cli.command);
    job.validate()?;
    let mut report = Report::new(&job);
    match &job.command {
        Command::Enumerate => enumerate(&job, &mut report)?,
        Command::Straighten { word } => straighten(&job, word, &mut report)?,
        Command::Act {
            side,
            generator,
            label,
            basis,
        } => act(&job, side, generator, label, *basis, &mut report)?,
        Command::Verify { suite } => {
            let store = CalibrationStore::in_dir(&cli.cache_dir);
            suites::run(*suite, &job, &store, &mut report)?;
        }
    }
    let report = report.finish();
    let text = report.to_text()?;
    match &cli.output {
        Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    let mut ok = report.pass;
    if let Some(golden) = &cli.golden {
        if cli.update_golden {
            fs::write(golden, &text).with_context(|| format!("writing {}", golden.display()))?;
        } else {
            let expected = fs::read_to_string(golden).with_context(|| format!("reading {}", golden.display()))?;
            if expected != text {
                eprintln!("report differs from golden file {}", golden.display());
                ok = false;
            }
        }
    }
    let status = if report.pass { "pass" } else { "FAIL" };
    eprintln!("{} {}: {status}", report.command, job.space());
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
