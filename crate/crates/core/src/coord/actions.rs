use super::CoordError;
use crate::fock::{GenFamily, GenKind, GeneratorSymbol, ModuleVector, Side, SpaceDescriptor};
use crate::indexsets::{sharp_entry, Flavor, IndexMatrix};
use crate::ring::{quantum_double_factorial, quantum_factorial, quantum_integer, LaurentScalar, RationalScalar};

type Terms = Vec<(LaurentScalar, IndexMatrix)>;

fn qi(n: i64) -> LaurentScalar {
    quantum_integer(n)
}

/// Checks that `g` acts on the coordinate space of `a`: left generators act
/// on column indices, right generators on row indices.
fn check(g: &GeneratorSymbol, space: &SpaceDescriptor) -> Result<(), CoordError> {
    g.check(&space.transpose())
        .map_err(|_| CoordError::Incompatible(format!("{g} on V{space}")))
}

/// Weight exponent of a diagonal generator from the weight `w` of the acted
/// index (column sums for left, row sums for right).
fn diag_exponent(g: &GeneratorSymbol, w: impl Fn(i32) -> i64) -> i64 {
    let jmath = g.family == GenFamily::Jmath;
    let d = |j: i32| if jmath && j == 0 { (w(0) - 1) / 2 } else { w(j) };
    let i = g.index;
    let e = match g.kind {
        GenKind::D | GenKind::DInv => d(i),
        _ if jmath && i == 0 => 2 * d(0) - d(1),
        _ => d(i) - d(i + 1),
    };
    if matches!(g.kind, GenKind::DInv | GenKind::KInv) {
        -e
    } else {
        e
    }
}

fn push(out: &mut Terms, c: LaurentScalar, target: Option<IndexMatrix>) {
    if let Some(t) = target {
        if !c.is_zero() {
            out.push((c, t));
        }
    }
}

/// Closed-form action of `g` on a monomial basis element t^(A) (type A) or
/// t̃^(A) (type B).
fn act_basis(g: &GeneratorSymbol, a: &IndexMatrix) -> Result<Terms, CoordError> {
    let x = |i: i32, j: i32| i64::from(a.get(i, j));
    let sharp = |i: i32, j: i32| -> Result<i64, CoordError> { Ok(i64::from(sharp_entry(a, i, j)?)) };
    let i = g.index;
    let rows: Vec<i32> = a.rows().collect();
    let cols: Vec<i32> = a.cols().collect();
    let b = a.flavor() != Flavor::A;
    let d0 = |k: i32| i64::from(k == 0);
    let mut out = Terms::new();
    match (g.side, g.kind) {
        (Side::Left, GenKind::E) => {
            for &j in &rows {
                if x(j, i + 1) > 0 {
                    let e: i64 = rows.iter().filter(|&&k| k > j).map(|&k| x(k, i + 1) - x(k, i)).sum();
                    push(&mut out, qi(x(j, i + 1)).shift(e), a.moved(&[(j, i, 1), (j, i + 1, -1)]));
                }
            }
        }
        (Side::Left, GenKind::F) => {
            for &j in &rows {
                let e: i64 = rows.iter().filter(|&&k| k < j).map(|&k| x(k, i) - x(k, i + 1)).sum();
                let target = a.moved(&[(j, i + 1, 1), (j, i, -1)]);
                if !b {
                    if x(j, i) > 0 {
                        push(&mut out, qi(x(j, i)).shift(e), target);
                    }
                } else if j <= 0 {
                    if sharp(j, i)? > 0 {
                        push(&mut out, qi(x(j, i) - d0(i) * d0(j)).shift(e), target);
                    }
                } else if x(j, i) > 0 {
                    push(&mut out, qi(x(j, i)).shift(e - d0(i)), target);
                }
            }
        }
        (Side::Right, GenKind::E) => {
            for &j in &cols {
                let e: i64 = cols.iter().filter(|&&k| k >= j).map(|&k| x(i + 1, k) - x(i, k)).sum::<i64>() + 1;
                let target = a.moved(&[(i + 1, j, 1), (i, j, -1)]);
                if !b {
                    if x(i, j) > 0 {
                        push(&mut out, qi(x(i, j)).shift(e), target);
                    }
                } else if j <= 0 {
                    if sharp(i, j)? > 0 {
                        push(&mut out, qi(x(i, j) - d0(i) * d0(j)).shift(e + d0(i)), target);
                    }
                } else if x(i, j) > 0 {
                    push(&mut out, qi(x(i, j)).shift(e), target);
                }
            }
        }
        (Side::Right, GenKind::F) => {
            for &j in &cols {
                if x(i + 1, j) > 0 {
                    let e: i64 = cols.iter().filter(|&&k| k <= j).map(|&k| x(i, k) - x(i + 1, k)).sum::<i64>() + 1;
                    push(&mut out, qi(x(i + 1, j)).shift(e), a.moved(&[(i, j, 1), (i + 1, j, -1)]));
                }
            }
        }
        (Side::Left, GenKind::T0) => {
            let diag: i64 = rows.iter().filter(|&&j| j > 0).map(|&j| x(j, 1) - x(j, -1)).sum::<i64>() + x(0, 1);
            push(&mut out, LaurentScalar::q_pow(diag), Some(a.clone()));
            for &j in &rows {
                if x(j, 1) > 0 {
                    let e: i64 = rows.iter().filter(|&&k| k > j).map(|&k| x(k, 1) - x(k, -1)).sum::<i64>() - x(j, 0)
                        + i64::from(j < 0);
                    push(&mut out, qi(x(j, 1)).shift(e), a.moved(&[(j, -1, 1), (j, 1, -1)]));
                }
            }
        }
        (Side::Right, GenKind::T0) => {
            let diag: i64 = cols.iter().filter(|&&j| j > 0).map(|&j| x(1, j) - x(-1, j)).sum::<i64>() + x(1, 0);
            push(&mut out, LaurentScalar::q_pow(diag), Some(a.clone()));
            for &j in &cols {
                if x(1, j) > 0 {
                    let e: i64 = cols.iter().filter(|&&k| k > j).map(|&k| x(1, k) - x(-1, k)).sum::<i64>() - x(0, j)
                        + i64::from(j < 0);
                    push(&mut out, qi(x(1, j)).shift(e), a.moved(&[(-1, j, 1), (1, j, -1)]));
                }
            }
        }
        (Side::Left, _) => {
            let e = diag_exponent(g, |j| i64::from(a.co(j)));
            push(&mut out, LaurentScalar::q_pow(e), Some(a.clone()));
        }
        (Side::Right, _) => {
            let e = diag_exponent(g, |j| i64::from(a.ro(j)));
            push(&mut out, LaurentScalar::q_pow(e), Some(a.clone()));
        }
    }
    Ok(out)
}

/// Action of `g` on a vector in the monomial basis {t^(A)} / {t̃^(A)}.
pub fn act_coord(g: &GeneratorSymbol, v: &ModuleVector) -> Result<ModuleVector, CoordError> {
    let space = v.space();
    check(g, &space)?;
    let mut out = ModuleVector::zero(space);
    for (a, c) in v.terms() {
        for (k, t) in act_basis(g, a)? {
            out.add_term(t, &(&k * c));
        }
    }
    Ok(out)
}

/// Factor c with ⟨A⟩ = c·t^(A): q^{Σ_i ro_i(ro_i+1)/2} / Π[a_ij]! for type A;
/// for type B the center contributes q^{(ro_0-1)(ro_0+1)/4} and [a_00-1]!!.
pub fn rescale(a: &IndexMatrix) -> Result<RationalScalar, CoordError> {
    let ro = |i: i32| i64::from(a.ro(i));
    let mut exp2 = 0i64; // twice the exponent for type A, four times the center part for B
    let mut denom = LaurentScalar::one();
    if a.flavor() == Flavor::A {
        for i in a.rows() {
            exp2 += 2 * ro(i) * (ro(i) + 1);
        }
        for i in a.rows() {
            for j in a.cols() {
                denom = &denom * &quantum_factorial(i64::from(a.get(i, j)))?;
            }
        }
    } else {
        exp2 += (ro(0) - 1) * (ro(0) + 1);
        for i in a.rows().filter(|&i| i > 0) {
            exp2 += 2 * ro(i) * (ro(i) + 1);
        }
        denom = quantum_double_factorial(i64::from(a.get(0, 0)) - 1)?;
        for i in a.rows().filter(|&i| i >= 0) {
            for j in a.cols() {
                if (i, j) > (0, 0) {
                    denom = &denom * &quantum_factorial(i64::from(a.get(i, j)))?;
                }
            }
        }
    }
    if exp2 % 4 != 0 {
        return Err(CoordError::NonIntegralExponent(a.label()));
    }
    let num = RationalScalar::q_pow(exp2 / 4);
    Ok(num.checked_div(&RationalScalar::from_laurent(&denom))?)
}

/// Action of `g` on the rescaled basis vector ⟨A⟩, expanded in ⟨·⟩.
pub fn act_rescaled(g: &GeneratorSymbol, a: &IndexMatrix) -> Result<ModuleVector, CoordError> {
    let t = act_coord(g, &ModuleVector::basis_vector(a))?;
    from_monomial_basis(&t, &rescale(a)?)
}

/// Re-expresses `scale`·v (v in the monomial basis) in the rescaled basis.
pub(crate) fn from_monomial_basis(v: &ModuleVector, scale: &RationalScalar) -> Result<ModuleVector, CoordError> {
    let mut out = ModuleVector::zero(v.space());
    for (b, c) in v.terms() {
        let coeff = scale.mul_laurent(c).checked_div(&rescale(b)?)?;
        let laurent = coeff.to_laurent().ok_or_else(|| CoordError::NonLaurent(coeff.to_string()))?;
        out.add_term(b.clone(), &laurent);
    }
    Ok(out)
}
