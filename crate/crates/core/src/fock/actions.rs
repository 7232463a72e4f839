use super::generators::{swap_raising, GenKind, GeneratorExpr, GeneratorSymbol, GeneratorWord, Side};
use super::vector::{ModuleVector, SpaceDescriptor};
use super::FockError;
use crate::indexsets::{c_shift, c_unshift, transpose, Flavor, IndexMatrix};
use crate::ring::{quantum_integer, LaurentScalar};

/// Σ_{i≥k, j<l} a_ij a_kl over the full index range.
fn inversion_sum(a: &IndexMatrix) -> i64 {
    let rows: Vec<i32> = a.rows().collect();
    let cols: Vec<i32> = a.cols().collect();
    // suffix[r][c] = Σ_{k ≤ rows[r], l > cols[c]} a_kl, built incrementally.
    let nr = rows.len();
    let nc = cols.len();
    let mut acc = vec![vec![0i64; nc + 1]; nr + 1];
    for r in 0..nr {
        for c in (0..nc).rev() {
            acc[r + 1][c] = acc[r][c] + acc[r + 1][c + 1] - acc[r][c + 1]
                + i64::from(a.get(rows[r], cols[c]));
        }
    }
    let mut total = 0i64;
    for (r, &i) in rows.iter().enumerate() {
        for (c, &j) in cols.iter().enumerate() {
            let x = i64::from(a.get(i, j));
            if x != 0 {
                total += x * acc[r + 1][c + 1];
            }
        }
    }
    total
}

/// Exponent e with [A] = q^e χ_A for the matrix's flavor.
pub fn normalization_exponent(a: &IndexMatrix) -> Result<i64, FockError> {
    let s = inversion_sum(a);
    let lower_left: i64 = a
        .rows()
        .filter(|&i| i >= 0)
        .flat_map(|i| a.cols().filter(|&j| j < 0).map(move |j| (i, j)))
        .map(|(i, j)| i64::from(a.get(i, j)))
        .sum();
    let twice = match a.flavor() {
        Flavor::A => return Ok(s),
        Flavor::B(..) => s - lower_left,
        Flavor::C(..) => s + lower_left,
    };
    if twice % 2 != 0 {
        return Err(FockError::NonIntegralExponent(format!("{a:?}")));
    }
    Ok(twice / 2)
}

type Terms = Vec<(IndexMatrix, LaurentScalar)>;

fn qi(n: i64) -> LaurentScalar {
    quantum_integer(n)
}

fn entry(a: &IndexMatrix, i: i32, j: i32) -> i64 {
    i64::from(a.get(i, j))
}

/// Raising generator on rows (i, i+1): moves one unit from row i+1 to row i.
fn left_e(a: &IndexMatrix, i: i32) -> Terms {
    let cols: Vec<i32> = a.cols().collect();
    let mut out = Vec::new();
    for &j in &cols {
        if a.get(i + 1, j) == 0 {
            continue;
        }
        let exp: i64 = cols
            .iter()
            .filter(|&&k| k > j)
            .map(|&k| entry(a, i + 1, k) - entry(a, i, k))
            .sum();
        if let Some(t) = a.moved(&[(i, j, 1), (i + 1, j, -1)]) {
            out.push((t, qi(entry(a, i, j) + 1).shift(exp)));
        }
    }
    out
}

/// Lowering generator on rows (i, i+1): moves one unit from row i to row i+1.
fn left_f(a: &IndexMatrix, i: i32) -> Terms {
    let symmetric = a.flavor().is_symmetric();
    let cols: Vec<i32> = a.cols().collect();
    let mut out = Vec::new();
    for &j in &cols {
        let available = if symmetric && (i, j) == (0, 0) {
            (a.get(0, 0).saturating_sub(1)) / 2
        } else {
            a.get(i, j)
        };
        if available == 0 {
            continue;
        }
        let mut exp: i64 = cols
            .iter()
            .filter(|&&k| k < j)
            .map(|&k| entry(a, i, k) - entry(a, i + 1, k))
            .sum();
        if symmetric && j > 0 && i == 0 {
            exp -= 1;
        }
        if let Some(t) = a.moved(&[(i + 1, j, 1), (i, j, -1)]) {
            out.push((t, qi(entry(a, i + 1, j) + 1).shift(exp)));
        }
    }
    out
}

/// The ı generator t0 acting on rows 1 and -1.
fn left_t0(a: &IndexMatrix) -> Terms {
    let cols: Vec<i32> = a.cols().collect();
    let diag: i64 = cols
        .iter()
        .map(|&j| if j >= 0 { entry(a, 1, j) } else { -entry(a, 1, j) })
        .sum();
    let mut out = vec![(a.clone(), LaurentScalar::q_pow(diag))];
    for &j in &cols {
        if a.get(1, j) == 0 {
            continue;
        }
        let mut exp: i64 = cols
            .iter()
            .filter(|&&k| k > j)
            .map(|&k| entry(a, 1, k) - entry(a, -1, k))
            .sum();
        exp -= entry(a, 0, j);
        if j < 0 {
            exp += 1;
        }
        let coeff = qi(entry(a, -1, j) + 1 - i64::from(j == 0)).shift(exp);
        if let Some(t) = a.moved(&[(-1, j, 1), (1, j, -1)]) {
            out.push((t, coeff));
        }
    }
    out
}

/// Exponent of q by which a diagonal generator acts, reading row sums.
fn left_diag_exponent(a: &IndexMatrix, g: &GeneratorSymbol) -> i64 {
    let ro = |i: i32| i64::from(a.ro(i));
    let jmath = matches!(g.family, super::generators::GenFamily::Jmath);
    // weight of d_j: (ro_0 - 1)/2 at j = 0 for ȷ, ro_j otherwise.
    let d = |j: i32| if jmath && j == 0 { (ro(0) - 1) / 2 } else { ro(j) };
    let i = g.index;
    match g.kind {
        GenKind::D => d(i),
        GenKind::DInv => -d(i),
        GenKind::K | GenKind::KInv => {
            let w = if jmath && i == 0 { 2 * d(0) - d(1) } else { d(i) - d(i + 1) };
            if g.kind == GenKind::K {
                w
            } else {
                -w
            }
        }
        _ => unreachable!("not diagonal"),
    }
}

/// Left action of one generator on a basis label of type A or B.
fn left_on_basis(g: &GeneratorSymbol, a: &IndexMatrix) -> Terms {
    match g.kind {
        GenKind::E => left_e(a, g.index),
        GenKind::F => left_f(a, g.index),
        GenKind::T0 => left_t0(a),
        _ => vec![(a.clone(), LaurentScalar::q_pow(left_diag_exponent(a, g)))],
    }
}

/// Action of g on [a]; right actions are left actions on the transpose with
/// raising and lowering exchanged.
pub fn act_on_basis(g: &GeneratorSymbol, a: &IndexMatrix) -> Result<Terms, FockError> {
    g.check(&SpaceDescriptor::of(a))?;
    if let Flavor::C(..) = a.flavor() {
        let shifted = c_shift(a)?;
        let mut out = Vec::new();
        for (t, c) in act_on_basis(g, &shifted)? {
            out.push((c_unshift(&t)?, c));
        }
        return Ok(out);
    }
    Ok(match g.side {
        Side::Left => left_on_basis(g, a),
        Side::Right => {
            let mirrored = GeneratorSymbol {
                side: Side::Left,
                kind: swap_raising(g.kind),
                ..*g
            };
            left_on_basis(&mirrored, &transpose(a))
                .into_iter()
                .map(|(t, c)| (transpose(&t), c))
                .collect()
        }
    })
}

pub fn apply_generator(g: &GeneratorSymbol, v: &ModuleVector) -> Result<ModuleVector, FockError> {
    let space = v.space();
    g.check(&space)?;
    let mut out = ModuleVector::zero(space);
    for (a, c) in v.terms() {
        for (t, x) in act_on_basis(g, a)? {
            out.add_term(t, &(&x * c));
        }
    }
    Ok(out)
}

/// Applies the bare product of symbols (coefficient ignored).
pub fn apply_symbols(symbols: &[GeneratorSymbol], v: &ModuleVector) -> Result<ModuleVector, FockError> {
    let mut cur = v.clone();
    let side = symbols.first().map(|g| g.side);
    if symbols.iter().any(|g| Some(g.side) != side || g.family != symbols[0].family) {
        return Err(FockError::MixedWord);
    }
    match side {
        None => {}
        Some(Side::Left) => {
            for g in symbols.iter().rev() {
                cur = apply_generator(g, &cur)?;
            }
        }
        Some(Side::Right) => {
            for g in symbols {
                cur = apply_generator(g, &cur)?;
            }
        }
    }
    Ok(cur)
}

/// Left words act right-to-left, right words left-to-right, so that both act
/// as the algebra element the word spells.
pub fn apply_word(w: &GeneratorWord, v: &ModuleVector) -> Result<ModuleVector, FockError> {
    let c = w
        .coeff
        .to_laurent()
        .ok_or_else(|| FockError::NonLaurentCoefficient(w.coeff.to_string()))?;
    Ok(apply_symbols(&w.symbols, v)?.scale(&c))
}

pub fn apply_expr(e: &GeneratorExpr, v: &ModuleVector) -> Result<ModuleVector, FockError> {
    e.signature()?;
    let mut out = ModuleVector::zero(v.space());
    for w in &e.terms {
        out = out.add(&apply_word(w, v)?);
    }
    Ok(out)
}
