use serde::Serialize;

use super::centralizer::{centralizer_dimension, image_dimension};
use super::highest::{
    match_label, pieces_with, prescribed_weights, specialize_label, HighestWeightDatum, SideOperators, SideWeight,
    TConvention,
};
use super::matrix::{IndexedBasis, DEFAULT_MATRIX_CAP};
use super::spectrum::{verify_t0_spectrum, SpectrumReport};
use super::weyl::label_dimension;
use super::DecompError;
use crate::fock::{GenFamily, GeneratorSymbol, Side, SpaceDescriptor};
use crate::indexsets::{enumerate_bipartitions, partitions, Partition};
use crate::ring::RationalScalar;

/// How a highest weight line was attached to its label.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    /// The d-weights alone single out the label.
    DWeights,
    /// Several labels share the d-weights; the t-eigenvalues single one out.
    TEigenvalues,
    /// Neither suffices; the label follows from the count of lines per weight.
    Counting,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SummandReport {
    pub lambda: String,
    pub left_dim: u64,
    pub right_dim: u64,
    pub left_weights: Vec<i64>,
    pub right_weights: Vec<i64>,
    pub left_t: Vec<String>,
    pub right_t: Vec<String>,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DecompositionChecks {
    /// Joint lines, left lines and right lines all equal the number of labels.
    pub counts: bool,
    /// dim = Σ_λ left_dim · right_dim.
    pub dims: bool,
    /// The lines match the labels bijectively through their d-weights.
    pub weights: bool,
    /// Every joint highest weight space is one-dimensional.
    pub multiplicity_free: bool,
    /// The one-sided highest weight spaces have the dimension of the module
    /// on the other side.
    pub hw_multiplicities: bool,
    /// Measured t-eigenvalues agree with the printed prescription (None when
    /// no side carries t-elements). Reported, not required.
    pub t_printed: Option<bool>,
    /// Measured t-eigenvalues agree with the observed convention.
    pub t_observed: Option<bool>,
    /// The q → 1 reading of each measured highest weight gives back its label.
    pub specialization: bool,
    pub t0_spectrum: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DecompositionReport {
    pub space: String,
    pub dimension: usize,
    pub expected_lines: usize,
    pub joint_lines: usize,
    pub left_lines: usize,
    pub right_lines: usize,
    pub accounted_dimension: u64,
    pub summands: Vec<SummandReport>,
    pub checks: DecompositionChecks,
    pub spectra: Vec<SpectrumReport>,
    pub notes: Vec<String>,
    pub pass: bool,
}

/// A label (λ⁺, λ⁻); type A labels have λ⁻ empty.
pub type Label = (Partition, Partition);

fn show_partition(p: &[u32]) -> String {
    let v: Vec<String> = p.iter().map(u32::to_string).collect();
    format!("({})", v.join(","))
}

fn show_label(family: GenFamily, l: &Label) -> String {
    match family {
        GenFamily::A => show_partition(&l.0),
        _ => format!("({},{})", show_partition(&l.0), show_partition(&l.1)),
    }
}

/// The index set of the decomposition: Par_{min(m,n)}(d) for type A and
/// Par^𝔟_m(d) ∩ Par^𝔠_n(d) for the ı/ȷ flavors.
pub fn expected_labels(space: &SpaceDescriptor) -> Vec<Label> {
    let d = space.d;
    match (space.flavor.row_parity(), space.flavor.col_parity()) {
        (Some(b), Some(c)) => {
            let right = enumerate_bipartitions(c, space.n, d);
            enumerate_bipartitions(b, space.m, d)
                .into_iter()
                .filter(|l| right.iter().any(|r| r.plus == l.plus && r.minus == l.minus))
                .map(|l| (l.plus, l.minus))
                .collect()
        }
        _ => partitions(d as u32, space.m.min(space.n))
            .into_iter()
            .map(|p| (p, Vec::new()))
            .collect(),
    }
}

fn d_match(w: &SideWeight, d: usize, l: &Label) -> bool {
    prescribed_weights(w.family, w.rank, d, &l.0, &l.1, TConvention::Observed).0 == w.d_weights
}

fn full_match(w: &SideWeight, d: usize, l: &Label, convention: TConvention) -> bool {
    match_label(w, d, &l.0, &l.1, convention)
}

/// Maximum bipartite matching of lines to labels; returns label index per line.
fn bipartite(edges: &[Vec<usize>], nlabels: usize) -> Vec<Option<usize>> {
    fn augment(u: usize, edges: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &edges[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, edges, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; nlabels];
    for u in 0..edges.len() {
        let mut seen = vec![false; nlabels];
        augment(u, edges, &mut seen, &mut owner);
    }
    let mut out = vec![None; edges.len()];
    for (v, u) in owner.iter().enumerate() {
        if let Some(u) = u {
            out[*u] = Some(v);
        }
    }
    out
}

fn show_t(w: &SideWeight) -> Vec<String> {
    w.t_eigenvalues.iter().map(RationalScalar::to_string).collect()
}

/// Checks the multiplicity-free decomposition of a Fock space: counts of
/// highest weight lines, dimension accounting by Weyl's formula, and the
/// weights of the lines against their labels.
pub fn verify_decomposition(space: &SpaceDescriptor) -> Result<DecompositionReport, DecompError> {
    let basis = IndexedBasis::new(space, DEFAULT_MATRIX_CAP)?;
    let left = SideOperators::new(&basis, Side::Left)?;
    let right = SideOperators::new(&basis, Side::Right)?;
    let joint = pieces_with(&basis, &[&left, &right])?;
    let left_pieces = pieces_with(&basis, &[&left])?;
    let right_pieces = pieces_with(&basis, &[&right])?;
    let labels = expected_labels(space);
    let d = space.d;
    let (lf, rf) = (left.family, right.family);
    let mut notes = Vec::new();

    let dims: Vec<(u64, u64)> = labels
        .iter()
        .map(|l| Ok((label_dimension(lf, space.m, &l.0, &l.1)?, label_dimension(rf, space.n, &l.0, &l.1)?)))
        .collect::<Result<_, DecompError>>()?;
    let accounted: u64 = dims.iter().map(|(a, b)| a * b).sum();

    let sides = |p: &HighestWeightDatum| (p.weights[0].clone(), p.weights[1].clone());
    let has_t = lf != GenFamily::A || rf != GenFamily::A;
    let mut edges = Vec::new();
    let mut evidence = Vec::new();
    for p in &joint {
        let (lw, rw) = sides(p);
        let by_d: Vec<usize> = (0..labels.len())
            .filter(|&i| d_match(&lw, d, &labels[i]) && d_match(&rw, d, &labels[i]))
            .collect();
        let by_t: Vec<usize> = by_d
            .iter()
            .copied()
            .filter(|&i| {
                full_match(&lw, d, &labels[i], TConvention::Observed)
                    && full_match(&rw, d, &labels[i], TConvention::Observed)
            })
            .collect();
        let (ev, chosen) = if by_d.len() == 1 {
            (Evidence::DWeights, by_d)
        } else if by_t.len() == 1 {
            (Evidence::TEigenvalues, by_t)
        } else if by_t.is_empty() {
            (Evidence::Counting, by_d)
        } else {
            (Evidence::Counting, by_t)
        };
        edges.push(chosen);
        evidence.push(ev);
    }
    let assignment = bipartite(&edges, labels.len());
    let weights_ok = joint.len() == labels.len() && assignment.iter().all(Option::is_some);

    let mut summands = Vec::new();
    let mut t_printed = has_t.then_some(true);
    let mut t_observed = has_t.then_some(true);
    let mut spec_ok = true;
    for (k, p) in joint.iter().enumerate() {
        let Some(i) = assignment[k] else { continue };
        let (lw, rw) = sides(p);
        let l = &labels[i];
        for w in [&lw, &rw] {
            if w.family != GenFamily::A {
                let printed = full_match(w, d, l, TConvention::Printed);
                let observed = full_match(w, d, l, TConvention::Observed);
                t_printed = t_printed.map(|x| x && printed);
                t_observed = t_observed.map(|x| x && observed);
                if !printed {
                    notes.push(format!(
                        "{} t-eigenvalues [{}] of {} differ from the printed prescription",
                        w.side,
                        show_t(w).join(", "),
                        show_label(w.family, l)
                    ));
                }
            }
            spec_ok &= specialize_label(w, TConvention::Observed).as_ref() == Some(l);
        }
        summands.push(SummandReport {
            lambda: show_label(lf, l),
            left_dim: dims[i].0,
            right_dim: dims[i].1,
            left_weights: lw.d_weights.clone(),
            right_weights: rw.d_weights.clone(),
            left_t: show_t(&lw),
            right_t: show_t(&rw),
            evidence: evidence[k],
        });
    }

    // A one-sided highest weight space of label λ is v_λ ⊗ (module on the
    // other side), so its dimension is that module's classical dimension.
    let mut hw_ok = true;
    for (pieces, side) in [(&left_pieces, Side::Left), (&right_pieces, Side::Right)] {
        for p in pieces.iter() {
            let w = &p.weights[0];
            let cands: Vec<usize> = (0..labels.len())
                .filter(|&i| full_match(w, d, &labels[i], TConvention::Observed))
                .collect();
            if let [i] = cands[..] {
                let other = if side == Side::Left { dims[i].1 } else { dims[i].0 };
                if p.multiplicity() as u64 != other {
                    hw_ok = false;
                    notes.push(format!(
                        "{side} highest weight space of {} has dimension {}, expected {other}",
                        show_label(lf, &labels[i]),
                        p.multiplicity()
                    ));
                }
            } else if cands.is_empty() {
                hw_ok = false;
                notes.push(format!(
                    "{side} highest weight {:?} [{}] matches no label",
                    w.d_weights,
                    show_t(w).join(", ")
                ));
            } else {
                notes.push(format!("{side} highest weight {:?} matches several labels", w.d_weights));
            }
        }
    }

    let mut spectra = Vec::new();
    for side in [Side::Left, Side::Right] {
        if GeneratorSymbol::family_for(space, side) == GenFamily::Imath {
            spectra.push(verify_t0_spectrum(space, side)?);
        }
    }
    let t0_spectrum = (!spectra.is_empty()).then(|| spectra.iter().all(|s| s.pass));

    let checks = DecompositionChecks {
        counts: joint.len() == labels.len()
            && left_pieces.len() == labels.len()
            && right_pieces.len() == labels.len(),
        dims: accounted == basis.len() as u64,
        weights: weights_ok,
        multiplicity_free: joint.iter().all(|p| p.multiplicity() == 1),
        hw_multiplicities: hw_ok,
        t_printed,
        t_observed,
        specialization: spec_ok,
        t0_spectrum,
    };
    let pass = checks.counts
        && checks.dims
        && checks.weights
        && checks.multiplicity_free
        && checks.hw_multiplicities
        && checks.t0_spectrum != Some(false);
    Ok(DecompositionReport {
        space: space.to_string(),
        dimension: basis.len(),
        expected_lines: labels.len(),
        joint_lines: joint.len(),
        left_lines: left_pieces.len(),
        right_lines: right_pieces.len(),
        accounted_dimension: accounted,
        summands,
        checks,
        spectra,
        notes,
        pass,
    })
}

/// Commutant dimensions against the generated algebras and the Σ_λ dim²
/// accounting.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CentralizerReport {
    pub space: String,
    /// dim of the commutant of the right action.
    pub commutant_of_right: usize,
    /// dim of the image of the left algebra.
    pub left_image: usize,
    /// Σ_λ (left classical dimension)².
    pub left_accounting: u64,
    pub commutant_of_left: usize,
    pub right_image: usize,
    pub right_accounting: u64,
    pub pass: bool,
}

/// Double centralizer at finite scale: the commutant of each side equals the
/// image of the other, and both equal Σ_λ dim(L_λ)².
pub fn verify_double_centralizer(space: &SpaceDescriptor) -> Result<CentralizerReport, DecompError> {
    let labels = expected_labels(space);
    let lf = GeneratorSymbol::family_for(space, Side::Left);
    let rf = GeneratorSymbol::family_for(space, Side::Right);
    let mut left_accounting = 0u64;
    let mut right_accounting = 0u64;
    for l in &labels {
        let a = label_dimension(lf, space.m, &l.0, &l.1)?;
        let b = label_dimension(rf, space.n, &l.0, &l.1)?;
        left_accounting += a * a;
        right_accounting += b * b;
    }
    let commutant_of_right = centralizer_dimension(space, Side::Left)?;
    let commutant_of_left = centralizer_dimension(space, Side::Right)?;
    let left_image = image_dimension(space, Side::Left)?;
    let right_image = image_dimension(space, Side::Right)?;
    let pass = commutant_of_right == left_image
        && left_image as u64 == left_accounting
        && commutant_of_left == right_image
        && right_image as u64 == right_accounting;
    Ok(CentralizerReport {
        space: space.to_string(),
        commutant_of_right,
        left_image,
        left_accounting,
        commutant_of_left,
        right_image,
        right_accounting,
        pass,
    })
}
