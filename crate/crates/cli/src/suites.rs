//! The verification suites behind `qhowe verify`.

use anyhow::{bail, Result};
use qhowe_core::coord::{coproduct_check, intertwiner_check, Straightener, Strategy};
use qhowe_core::decomp::{verify_decomposition, verify_double_centralizer, verify_t0_spectrum};
use qhowe_core::fock::{check_c_intertwining, check_commuting_actions, check_relations, GenFamily, GeneratorSymbol, Side};
use qhowe_core::indexsets::Flavor;
use qhowe_core::oracle::{Calibration, Oracle};

use crate::config::{CalibrationStore, JobConfig, Suite};
use crate::report::{CheckEntry, Report};

const RELATIONS: &str = "defining relations of U_q(gl) as operator identities";
const COMMUTING: &str = "the left and right actions commute";
const INTERTWINER: &str = "<A> -> [A^T] intertwines the coordinate and Fock actions";
const COPRODUCT: &str = "closed coordinate formulas agree with the coproduct route";
const C_TO_B: &str = "[A] -> [A+E00] identifies the type C space with the type B space";
const ORACLE: &str = "finite-field convolution reproduces the closed generator formulas";
const SPECTRUM: &str = "prod_k (t0 - [k+1]) = 0 with squarefree minimal polynomial";
const DECOMPOSITION: &str = "multiplicity-free decomposition into simple bimodules";
const CENTRALIZER: &str = "double centralizer: commutant = image = sum of squared dimensions";

/// Whether `suite` applies to the flavor; `all` skips inapplicable suites
/// with a note instead of failing.
fn applies(suite: Suite, job: &JobConfig) -> Option<&'static str> {
    let space = job.space();
    match suite {
        Suite::Relations if job.flavor != Flavor::A => Some("the relation suite covers type A only"),
        Suite::Spectrum
            if GeneratorSymbol::family_for(&space, Side::Left) != GenFamily::Imath
                && GeneratorSymbol::family_for(&space, Side::Right) != GenFamily::Imath =>
        {
            Some("the spectral suite needs an imath side")
        }
        Suite::Oracle if matches!(job.flavor, Flavor::C(..)) => Some("the oracle realizes type A and B label sets"),
        _ => None,
    }
}

pub fn run(suite: Suite, job: &JobConfig, store: &CalibrationStore, report: &mut Report) -> Result<()> {
    if suite == Suite::All {
        for s in [
            Suite::Relations,
            Suite::Commuting,
            Suite::Intertwiner,
            Suite::Oracle,
            Suite::Spectrum,
            Suite::Decomposition,
        ] {
            match applies(s, job) {
                Some(why) => report.notes.push(format!("skipped {}: {why}", suite_name(s))),
                None => run_one(s, job, store, report)?,
            }
        }
        return Ok(());
    }
    if let Some(why) = applies(suite, job) {
        bail!("{why}");
    }
    run_one(suite, job, store, report)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Relations => "relations",
        Suite::Commuting => "commuting",
        Suite::Intertwiner => "intertwiner",
        Suite::Oracle => "oracle",
        Suite::Spectrum => "spectrum",
        Suite::Decomposition => "decomposition",
        Suite::All => "all",
    }
}

fn run_one(suite: Suite, job: &JobConfig, store: &CalibrationStore, report: &mut Report) -> Result<()> {
    let space = job.space();
    match suite {
        Suite::Relations => {
            for side in [Side::Left, Side::Right] {
                for mut r in check_relations(&space, side)? {
                    r.name = format!("{} ({side:?})", r.name).to_lowercase();
                    report.checks.push(CheckEntry::from_report(r, RELATIONS));
                }
            }
        }
        Suite::Commuting => report.checks.push(CheckEntry::from_report(check_commuting_actions(&space)?, COMMUTING)),
        Suite::Intertwiner => {
            if let Flavor::C(..) = job.flavor {
                report.checks.push(CheckEntry::from_report(check_c_intertwining(&space)?, C_TO_B));
            } else {
                report.checks.push(CheckEntry::from_report(intertwiner_check(&space)?, INTERTWINER));
                let straightener = Straightener::cached(Strategy::Leftmost);
                report
                    .checks
                    .push(CheckEntry::from_report(coproduct_check(&space, &straightener)?, COPRODUCT));
            }
        }
        Suite::Oracle => run_oracle(job, store, report)?,
        Suite::Spectrum => {
            let mut spectra = Vec::new();
            for side in [Side::Left, Side::Right] {
                if GeneratorSymbol::family_for(&space, side) == GenFamily::Imath {
                    let s = verify_t0_spectrum(&space, side)?;
                    let name = format!("t0 spectrum ({side:?})").to_lowercase();
                    report.checks.push(CheckEntry::flag(&name, SPECTRUM, &s.space, s.pass));
                    spectra.push(s);
                }
            }
            report.detail("spectrum", spectra)?;
        }
        Suite::Decomposition => {
            let d = verify_decomposition(&space)?;
            let c = &d.checks;
            let flags = [
                ("line counts", c.counts),
                ("dimension accounting", c.dims),
                ("highest weights match labels", c.weights),
                ("multiplicity free", c.multiplicity_free),
                ("one-sided multiplicities", c.hw_multiplicities),
                ("t0 spectrum", c.t0_spectrum != Some(false)),
            ];
            for (name, ok) in flags {
                report.checks.push(CheckEntry::flag(name, DECOMPOSITION, &d.space, ok));
            }
            report.notes.push(format!("{} summands", d.summands.len()));
            report.notes.extend(d.notes.iter().cloned());
            report.detail("decomposition", &d)?;
            let z = verify_double_centralizer(&space)?;
            report.checks.push(CheckEntry::flag("double centralizer", CENTRALIZER, &z.space, z.pass));
            report.detail("double_centralizer", &z)?;
        }
        Suite::All => unreachable!("expanded by run"),
    }
    Ok(())
}

fn run_oracle(job: &JobConfig, store: &CalibrationStore, report: &mut Report) -> Result<()> {
    let mut oracle = Oracle::new(&job.primes)?;
    if let Some(b) = job.degree_bound {
        oracle = oracle.with_degree_bound(b);
    }
    let calibration: Calibration = match (store.load()?, job.calibrate) {
        (_, true) => {
            let cal = oracle.calibrate()?;
            store.save(&cal)?;
            cal
        }
        (Some(cal), false) => cal,
        (None, false) => bail!(
            "the oracle is uncalibrated (no {}); rerun with --calibrate",
            store.path().display()
        ),
    };
    report.notes.push(format!("orientation {} (calibrated on {})", calibration.orientation, calibration.space));
    let space = job.space();
    for (orientation, r) in oracle.compare_generators(&space)? {
        if orientation == calibration.orientation {
            report.checks.push(CheckEntry::from_report(r, ORACLE));
        }
    }
    report.detail("calibration", &calibration)?;
    Ok(())
}
