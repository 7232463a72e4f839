use rayon::prelude::*;
use serde::Serialize;

use super::actions::{apply_generator, apply_symbols};
use super::generators::{GenFamily, GenKind, GeneratorSymbol, Side};
use super::vector::{ModuleVector, SpaceDescriptor};
use super::FockError;
use crate::indexsets::{c_shift, Flavor, IndexMatrix};
use crate::ring::{quantum_integer, LaurentScalar};

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub space: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str, space: &SpaceDescriptor) -> Self {
        Self {
            name: name.into(),
            space: space.to_string(),
            ..Default::default()
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 50 {
            self.failures.push(describe());
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        for f in other.failures {
            if self.failures.len() < 50 {
                self.failures.push(f);
            }
        }
    }
}

/// g(h[A]) = h(g[A]) for every left g, right h and basis label A.
pub fn check_commuting_actions(space: &SpaceDescriptor) -> Result<CheckReport, FockError> {
    let basis = space.basis()?;
    let lefts = GeneratorSymbol::all_for(space, Side::Left);
    let rights = GeneratorSymbol::all_for(space, Side::Right);
    let parts: Vec<Result<CheckReport, FockError>> = basis
        .par_iter()
        .map(|a| {
            let mut rep = CheckReport::new("commuting", space);
            let v = ModuleVector::basis_vector(a);
            for g in &lefts {
                let gv = apply_generator(g, &v)?;
                for h in &rights {
                    let lhs = apply_generator(g, &apply_generator(h, &v)?)?;
                    let rhs = apply_generator(h, &gv)?;
                    rep.record(lhs == rhs, || format!("{g} vs {h} on {a:?}"));
                }
            }
            Ok(rep)
        })
        .collect();
    let mut rep = CheckReport::new("commuting", space);
    for p in parts {
        rep.merge(p?);
    }
    Ok(rep)
}

fn sym(side: Side, kind: GenKind, i: i32) -> GeneratorSymbol {
    GeneratorSymbol::new(side, GenFamily::A, kind, i)
}

/// Evaluates Σ c·word on v.
fn eval(terms: &[(LaurentScalar, Vec<GeneratorSymbol>)], v: &ModuleVector) -> Result<ModuleVector, FockError> {
    let mut out = ModuleVector::zero(v.space());
    for (c, w) in terms {
        out.add_scaled(&apply_symbols(w, v)?, c);
    }
    Ok(out)
}

/// The defining relations of U_q(gl) on one side of a type-A space, in seven
/// families, each checked on every basis vector.
pub fn check_relations(space: &SpaceDescriptor, side: Side) -> Result<Vec<CheckReport>, FockError> {
    if space.flavor != Flavor::A {
        return Err(FockError::FamilyMismatch {
            symbol: "U_q(gl) relations".into(),
            space: space.to_string(),
        });
    }
    let r = GeneratorSymbol::side_rank(space, side) as i32;
    let basis = space.basis()?;
    let one = LaurentScalar::one;
    let neg = || LaurentScalar::from_int(-1);
    let names = [
        "D D^-1 = 1",
        "diagonal generators commute",
        "D E D^-1 = q^(δ_ai - δ_a,i+1) E",
        "D F D^-1 = q^(δ_a,i+1 - δ_ai) F",
        "E F - F E = δ (K - K^-1)/(q - q^-1)",
        "distant E, F commute",
        "Serre relations",
    ];
    let mut reports: Vec<CheckReport> = names.iter().map(|n| CheckReport::new(n, space)).collect();
    let (e, f, d, dinv) = (GenKind::E, GenKind::F, GenKind::D, GenKind::DInv);
    for a in &basis {
        let v = ModuleVector::basis_vector(a);
        let zero_on = |terms: Vec<(LaurentScalar, Vec<GeneratorSymbol>)>| -> Result<bool, FockError> {
            Ok(eval(&terms, &v)?.is_zero())
        };
        for x in 1..=r {
            for (p, q) in [(d, dinv), (dinv, d)] {
                let ok = zero_on(vec![(one(), vec![sym(side, p, x), sym(side, q, x)]), (neg(), vec![])])?;
                reports[0].record(ok, || format!("D{x} on {a:?}"));
            }
            for y in 1..=r {
                for p in [d, dinv] {
                    for q in [d, dinv] {
                        let ok = zero_on(vec![
                            (one(), vec![sym(side, p, x), sym(side, q, y)]),
                            (neg(), vec![sym(side, q, y), sym(side, p, x)]),
                        ])?;
                        reports[1].record(ok, || format!("D{x},D{y} on {a:?}"));
                    }
                }
            }
            for i in 1..r {
                let de = i64::from(x == i) - i64::from(x == i + 1);
                for (kind, exp, slot) in [(e, de, 2usize), (f, -de, 3usize)] {
                    let ok = zero_on(vec![
                        (one(), vec![sym(side, d, x), sym(side, kind, i), sym(side, dinv, x)]),
                        (-LaurentScalar::q_pow(exp), vec![sym(side, kind, i)]),
                    ])?;
                    reports[slot].record(ok, || format!("D{x} {kind:?}{i} on {a:?}"));
                }
            }
        }
        for i in 1..r {
            for j in 1..r {
                let mut lhs = eval(
                    &[
                        (one(), vec![sym(side, e, i), sym(side, f, j)]),
                        (neg(), vec![sym(side, f, j), sym(side, e, i)]),
                    ],
                    &v,
                )?;
                if i == j {
                    let w = weight(a, side, i) - weight(a, side, i + 1);
                    lhs = lhs.sub(&v.scale(&quantum_integer(w)));
                }
                reports[4].record(lhs.is_zero(), || format!("[E{i},F{j}] on {a:?}"));
                if (i - j).abs() > 1 {
                    for k in [e, f] {
                        let ok = zero_on(vec![
                            (one(), vec![sym(side, k, i), sym(side, k, j)]),
                            (neg(), vec![sym(side, k, j), sym(side, k, i)]),
                        ])?;
                        reports[5].record(ok, || format!("{k:?}{i},{k:?}{j} on {a:?}"));
                    }
                }
                if (i - j).abs() == 1 {
                    for k in [e, f] {
                        let (xi, xj) = (sym(side, k, i), sym(side, k, j));
                        let ok = zero_on(vec![
                            (one(), vec![xi, xi, xj]),
                            (one(), vec![xj, xi, xi]),
                            (-quantum_integer(2), vec![xi, xj, xi]),
                        ])?;
                        reports[6].record(ok, || format!("Serre {k:?}{i},{k:?}{j} on {a:?}"));
                    }
                }
            }
        }
    }
    Ok(reports)
}

fn weight(a: &IndexMatrix, side: Side, i: i32) -> i64 {
    i64::from(match side {
        Side::Left => a.ro(i),
        Side::Right => a.co(i),
    })
}

/// [A] ↦ [A + E00] intertwines every generator between a C space and the
/// matching B space; the C side is evaluated through its own exponent
/// bookkeeping, the B side directly.
pub fn check_c_intertwining(space: &SpaceDescriptor) -> Result<CheckReport, FockError> {
    let Flavor::C(b, c) = space.flavor else {
        return Err(FockError::FamilyMismatch {
            symbol: "type C intertwining".into(),
            space: space.to_string(),
        });
    };
    let bspace = SpaceDescriptor::new(Flavor::B(b, c), space.m, space.n, space.d);
    let mut rep = CheckReport::new("type C/B identification", space);
    let shift = |v: &ModuleVector| -> Result<ModuleVector, FockError> {
        let mut out = ModuleVector::zero(bspace);
        for (a, x) in v.terms() {
            out.add_term(c_shift(a)?, x);
        }
        Ok(out)
    };
    for side in [Side::Left, Side::Right] {
        for g in GeneratorSymbol::all_for(space, side) {
            for a in space.basis()? {
                let v = ModuleVector::basis_vector(&a);
                let lhs = shift(&apply_generator(&g, &v)?)?;
                let rhs = apply_generator(&g, &shift(&v)?)?;
                rep.record(lhs == rhs, || format!("{g} on {a:?}"));
            }
        }
    }
    Ok(rep)
}
