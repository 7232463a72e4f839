use super::DecompError;
use crate::fock::{GenFamily, GenKind, GeneratorExpr, GeneratorSymbol, GeneratorWord, Side};
use crate::ring::{LaurentScalar, RationalScalar};

fn sym(side: Side, family: GenFamily, kind: GenKind, index: i32) -> GeneratorExpr {
    GeneratorExpr::symbol(GeneratorSymbol::new(side, family, kind, index))
}

fn scaled(e: GeneratorExpr, c: LaurentScalar) -> GeneratorExpr {
    e.scale(&RationalScalar::from_laurent(&c))
}

/// [x, y]_a = xy − q^a yx.
fn bracket(x: &GeneratorExpr, y: &GeneratorExpr, a: i64) -> GeneratorExpr {
    x.mul(y).add(scaled(y.mul(x), -LaurentScalar::q_pow(a)))
}

/// k_i (or its inverse) written in the d's: k_0 = d_0² d_1⁻¹ for ȷ and
/// k_i = d_i d_{i+1}⁻¹ otherwise.
fn k_in_d(side: Side, family: GenFamily, i: i32, inverse: bool) -> GeneratorExpr {
    let (up, down) = if inverse {
        (GenKind::DInv, GenKind::D)
    } else {
        (GenKind::D, GenKind::DInv)
    };
    let mut out = sym(side, family, up, i);
    if family == GenFamily::Jmath && i == 0 {
        out = out.mul(&sym(side, family, up, 0));
    }
    out.mul(&sym(side, family, down, i + 1))
}

/// Rewrites every k^{±1} of an expression in terms of the d's.
fn expand_k(e: &GeneratorExpr) -> GeneratorExpr {
    let mut out = GeneratorExpr::default();
    for w in &e.terms {
        let mut acc = GeneratorExpr::single(GeneratorWord::with_coeff(w.coeff.clone(), vec![]));
        for g in &w.symbols {
            let piece = match g.kind {
                GenKind::K => k_in_d(g.side, g.family, g.index, false),
                GenKind::KInv => k_in_d(g.side, g.family, g.index, true),
                _ => GeneratorExpr::symbol(*g),
            };
            acc = acc.mul(&piece);
        }
        out = out.add(acc);
    }
    out.simplify()
}

/// Image of one generator under the braid automorphism T_i of the ı or ȷ
/// quantum group.
fn braid_on_symbol(i: i32, g: &GeneratorSymbol) -> GeneratorExpr {
    let (side, family) = (g.side, g.family);
    let j = g.index;
    let s = |k: GenKind, idx: i32| sym(side, family, k, idx);
    match g.kind {
        GenKind::E if j == i => scaled(s(GenKind::F, i).mul(&k_in_d(side, family, i, false)), -LaurentScalar::one()),
        GenKind::E if (j - i).abs() == 1 => bracket(&s(GenKind::E, i), &s(GenKind::E, j), -1),
        GenKind::F if j == i => scaled(k_in_d(side, family, i, true).mul(&s(GenKind::E, i)), -LaurentScalar::one()),
        GenKind::F if (j - i).abs() == 1 => bracket(&s(GenKind::F, j), &s(GenKind::F, i), 1),
        GenKind::D | GenKind::DInv => {
            let swapped = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            s(g.kind, swapped)
        }
        GenKind::K | GenKind::KInv => {
            let expanded = expand_k(&GeneratorExpr::symbol(*g));
            braid_automorphism(i as usize, &expanded)
        }
        GenKind::T0 if i == 1 => {
            let t0 = s(GenKind::T0, 0);
            let inner = bracket(&t0, &s(GenKind::F, 1), 1);
            bracket(&s(GenKind::E, 1), &inner, -1).add(t0.mul(&k_in_d(side, family, 1, false)))
        }
        _ => GeneratorExpr::symbol(*g),
    }
}

/// Applies T_i symbol by symbol to a formal sum of words.
pub fn braid_automorphism(i: usize, e: &GeneratorExpr) -> GeneratorExpr {
    let mut out = GeneratorExpr::default();
    for w in &e.terms {
        let mut acc = GeneratorExpr::single(GeneratorWord::with_coeff(w.coeff.clone(), vec![]));
        for g in &w.symbols {
            acc = acc.mul(&braid_on_symbol(i as i32, g));
        }
        out = out.add(acc);
    }
    out.simplify()
}

fn t0_expr(side: Side, family: GenFamily) -> Result<GeneratorExpr, DecompError> {
    match family {
        GenFamily::Imath => Ok(sym(side, family, GenKind::T0, 0)),
        GenFamily::Jmath => {
            let e0 = sym(side, family, GenKind::E, 0);
            let f0 = sym(side, family, GenKind::F, 0);
            let q = LaurentScalar::q();
            let denom = RationalScalar::from_laurent(&(&q - &q.bar()));
            let inv = RationalScalar::one().checked_div(&denom)?;
            let k = k_in_d(side, family, 0, false).scale(&inv.neg());
            let kinv = k_in_d(side, family, 0, true).scale(&inv);
            Ok(bracket(&e0, &f0, 1).add(k).add(kinv).simplify())
        }
        GenFamily::A => Err(DecompError::NoTElement("U_q(gl)".into())),
    }
}

/// t_i = T_i ⋯ T_1(t_0) for the ı or ȷ quantum group of the given rank,
/// with k's written in the d's.
pub fn build_t_element(side: Side, family: GenFamily, rank: usize, i: usize) -> Result<GeneratorExpr, DecompError> {
    if i >= rank {
        return Err(DecompError::TIndex { index: i, rank });
    }
    let mut e = t0_expr(side, family)?;
    for k in 1..=i {
        e = braid_automorphism(k, &e);
    }
    Ok(e)
}

/// t_0, …, t_{rank−1}.
pub fn t_elements(side: Side, family: GenFamily, rank: usize) -> Result<Vec<GeneratorExpr>, DecompError> {
    (0..rank).map(|i| build_t_element(side, family, rank, i)).collect()
}
