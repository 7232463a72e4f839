use rayon::prelude::*;

use super::actions::{act_coord, act_rescaled};
use super::coproduct::act_coproduct;
use super::straighten::Straightener;
use super::CoordError;
use crate::fock::{apply_generator, CheckReport, GeneratorSymbol, ModuleVector, Side, SpaceDescriptor};
use crate::indexsets::transpose;

fn generators(target: &SpaceDescriptor) -> Vec<GeneratorSymbol> {
    let mut gens = GeneratorSymbol::all_for(target, Side::Left);
    gens.extend(GeneratorSymbol::all_for(target, Side::Right));
    gens
}

/// ⟨A⟩ ↦ [Aᵀ] intertwines every generator from the coordinate space `space`
/// to the Fock space with the sides swapped.
pub fn intertwiner_check(space: &SpaceDescriptor) -> Result<CheckReport, CoordError> {
    let target = space.transpose();
    let gens = generators(&target);
    let basis = space.basis()?;
    let parts: Vec<CheckReport> = basis
        .par_iter()
        .map(|a| -> Result<CheckReport, CoordError> {
            let mut report = CheckReport::new("intertwiner", space);
            let image = ModuleVector::basis_vector(&transpose(a));
            for g in &gens {
                let coord = act_rescaled(g, a)?.map_labels(target, transpose);
                let fock = apply_generator(g, &image)?;
                report.record(coord == fock, || {
                    format!("{g} on <{a}>: coordinate {} vs Fock {}", coord.pretty("[A]"), fock.pretty("[A]"))
                });
            }
            Ok(report)
        })
        .collect::<Result<_, _>>()?;
    let mut report = CheckReport::new("intertwiner", space);
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

/// The closed formulas on the monomial basis agree with the coproduct route
/// (letter actions spread by the coproduct, then straightened).
pub fn coproduct_check(space: &SpaceDescriptor, straightener: &Straightener) -> Result<CheckReport, CoordError> {
    let gens = generators(&space.transpose());
    let mut report = CheckReport::new("closed formulas vs coproduct", space);
    for a in space.basis()? {
        for g in &gens {
            let closed = act_coord(g, &ModuleVector::basis_vector(&a))?;
            let route = act_coproduct(g, &a, straightener)?;
            report.record(closed == route, || {
                format!("{g} on t({a}): closed {} vs coproduct {}", closed.pretty("t"), route.pretty("t"))
            });
        }
    }
    Ok(report)
}
