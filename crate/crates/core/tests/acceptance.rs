//! End-to-end acceptance run: one PASS/FAIL line per criterion, exact
//! arithmetic throughout. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qhowe_core::coord::intertwiner_check;
use qhowe_core::decomp::{expected_labels, verify_decomposition, verify_double_centralizer, verify_t0_spectrum};
use qhowe_core::fock::{
    check_c_intertwining, check_commuting_actions, check_relations, normalization_exponent, GenFamily, GeneratorSymbol,
    Side, SpaceDescriptor,
};
use qhowe_core::indexsets::{c_shift, enumerate_matrices, Flavor, IndexMatrix};
use qhowe_core::oracle::{refinement_check, Oracle, DEFAULT_PRIMES};

const B_FLAVORS: [&str; 4] = ["Bjj", "Bji", "Bij", "Bii"];
const C_FLAVORS: [&str; 4] = ["Cjj", "Cji", "Cij", "Cii"];

fn space(flavor: &str, m: usize, n: usize, d: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(flavor.parse::<Flavor>().expect("flavor code"), m, n, d)
}

/// Tally of one criterion; the first few failures are kept for the log.
#[derive(Default)]
struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }
}

fn relations() -> Outcome {
    let mut out = Outcome::default();
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 0..=3 {
                let s = space("A", m, n, d);
                for side in [Side::Left, Side::Right] {
                    match check_relations(&s, side) {
                        Ok(reports) => {
                            for r in reports {
                                out.record(r.pass(), || format!("{}: {} on {s}", r.name, side));
                            }
                        }
                        Err(e) => out.error(format!("{s}: {e}")),
                    }
                }
            }
        }
    }
    out
}

fn commuting() -> Outcome {
    let mut out = Outcome::default();
    let mut spaces = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 0..=3 {
                spaces.push(space("A", m, n, d));
            }
        }
    }
    for f in B_FLAVORS {
        for m in 1..=2 {
            for n in 1..=2 {
                for d in 0..=2 {
                    spaces.push(space(f, m, n, d));
                }
            }
        }
    }
    for s in spaces {
        match check_commuting_actions(&s) {
            Ok(r) => out.record(r.pass(), || format!("{s}: {:?}", r.failures.first())),
            Err(e) => out.error(format!("{s}: {e}")),
        }
    }
    out
}

fn intertwiner() -> Outcome {
    let mut out = Outcome::default();
    let mut spaces = Vec::new();
    for m in 1..=2 {
        for n in 1..=2 {
            for d in 0..=3 {
                spaces.push(space("A", m, n, d));
            }
        }
    }
    for f in B_FLAVORS {
        for d in 0..=2 {
            spaces.push(space(f, 1, 1, d));
        }
        spaces.push(space(f, 1, 2, 1));
    }
    for s in spaces {
        match intertwiner_check(&s) {
            Ok(r) => out.record(r.pass(), || format!("{s}: {:?}", r.failures.first())),
            Err(e) => out.error(format!("{s}: {e}")),
        }
    }
    out
}

fn oracle() -> Outcome {
    let mut out = Outcome::default();
    let oracle = match Oracle::new(&DEFAULT_PRIMES) {
        Ok(o) => o,
        Err(e) => {
            out.error(e.to_string());
            return out;
        }
    };
    let orientation = match oracle.calibrate() {
        Ok(c) => c.orientation,
        Err(e) => {
            out.error(format!("calibration: {e}"));
            return out;
        }
    };
    for s in [space("A", 2, 2, 2), space("Bjj", 1, 1, 1), space("Bii", 1, 1, 1)] {
        match oracle.compare_generators(&s) {
            Ok(reports) => {
                for (o, r) in reports.into_iter().filter(|(o, _)| *o == orientation) {
                    out.record(r.pass() && r.checked > 0, || format!("{s} under {o}: {:?}", r.failures.first()));
                }
            }
            Err(e) => out.error(format!("{s}: {e}")),
        }
    }
    let small = match Oracle::new(&[7, 11]) {
        Ok(o) => o,
        Err(e) => {
            out.error(e.to_string());
            return out;
        }
    };
    let mut instances: Vec<(IndexMatrix, Vec<u32>, Vec<usize>)> = Vec::new();
    if let Ok(labels) = enumerate_matrices(Flavor::A, 2, 1, 2) {
        instances.extend(labels.into_iter().map(|xi| (xi, vec![1, 1], vec![2])));
    }
    if let Ok(xi) = IndexMatrix::from_rows(Flavor::A, &[vec![1, 0], vec![1, 0]]) {
        instances.push((xi, vec![1, 1, 0], vec![2, 1]));
    }
    for (xi, fine, blocks) in instances {
        match refinement_check(&small, &xi, &fine, &blocks) {
            Ok(r) => out.record(r.pass() && r.checked > 0, || format!("refinement of {xi}: {:?}", r.failures.first())),
            Err(e) => out.error(format!("refinement of {xi}: {e}")),
        }
    }
    out
}

fn spectrum() -> Outcome {
    let mut out = Outcome::default();
    for f in B_FLAVORS.iter().chain(&C_FLAVORS) {
        for m in 1..=2 {
            for n in 1..=2 {
                for d in 0..=2 {
                    let s = space(f, m, n, d);
                    for side in [Side::Left, Side::Right] {
                        if GeneratorSymbol::family_for(&s, side) != GenFamily::Imath {
                            continue;
                        }
                        match verify_t0_spectrum(&s, side) {
                            Ok(r) => out.record(r.pass && r.annihilates && r.squarefree, || format!("{s} {side}")),
                            Err(e) => out.error(format!("{s} {side}: {e}")),
                        }
                    }
                }
            }
        }
    }
    out
}

const DECOMPOSITION_CASES: [(&str, usize); 3] = [("A", 10), ("Bjj", 5), ("Bii", 2)];

fn decomposition_space(flavor: &str) -> SpaceDescriptor {
    if flavor == "A" {
        space("A", 2, 2, 2)
    } else {
        space(flavor, 1, 1, 1)
    }
}

fn decomposition() -> Outcome {
    let mut out = Outcome::default();
    for (flavor, dim) in DECOMPOSITION_CASES {
        let s = decomposition_space(flavor);
        match verify_decomposition(&s) {
            Ok(r) => {
                let labels = expected_labels(&s).len();
                let sum: u64 = r.summands.iter().map(|x| x.left_dim * x.right_dim).sum();
                out.record(r.dimension == dim && sum == dim as u64, || format!("{s}: dimension {} vs Σ {sum}", r.dimension));
                out.record(r.joint_lines == labels && r.summands.len() == labels, || {
                    format!("{s}: {} lines for {labels} labels", r.joint_lines)
                });
                out.record(r.checks.weights && r.checks.multiplicity_free, || format!("{s}: weights"));
                out.record(r.pass, || format!("{s}: report {:?}", r.checks));
            }
            Err(e) => out.error(format!("{s}: {e}")),
        }
    }
    out
}

fn centralizer() -> Outcome {
    let mut out = Outcome::default();
    for (flavor, _) in DECOMPOSITION_CASES {
        let s = decomposition_space(flavor);
        match verify_double_centralizer(&s) {
            Ok(r) => out.record(
                r.pass
                    && r.commutant_of_right as u64 == r.left_accounting
                    && r.commutant_of_left as u64 == r.right_accounting,
                || format!("{r:?}"),
            ),
            Err(e) => out.error(format!("{s}: {e}")),
        }
    }
    out
}

fn type_c() -> Outcome {
    let mut out = Outcome::default();
    for f in C_FLAVORS {
        for d in 0..=2 {
            let s = space(f, 1, 1, d);
            let basis = match s.basis() {
                Ok(b) => b,
                Err(e) => {
                    out.error(format!("{s}: {e}"));
                    continue;
                }
            };
            for a in basis {
                let same = match (c_shift(&a), normalization_exponent(&a)) {
                    (Ok(b), Ok(ec)) => normalization_exponent(&b).ok() == Some(ec),
                    _ => false,
                };
                out.record(same, || format!("exponent identity at {a}"));
            }
            match check_c_intertwining(&s) {
                Ok(r) => out.record(r.pass(), || format!("{s}: {:?}", r.failures.first())),
                Err(e) => out.error(format!("{s}: {e}")),
            }
        }
    }
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("relations", relations),
        ("commuting actions", commuting),
        ("intertwiners", intertwiner),
        ("finite-field oracle", oracle),
        ("t0 spectrum", spectrum),
        ("decomposition", decomposition),
        ("double centralizer", centralizer),
        ("type C identification", type_c),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let pass = outcome.failures.is_empty() && outcome.checked > 0;
        all &= pass;
        println!(
            "criterion {} ({name}): {} [{} cases, {} failures, {:.1}s]",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            outcome.checked,
            outcome.failures.len(),
            start.elapsed().as_secs_f64()
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
