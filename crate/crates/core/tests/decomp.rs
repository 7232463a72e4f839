use qhowe_core::decomp::{
    build_t_element, centralizer_dimension, classical_dimension, expected_labels, highest_weight_pieces,
    image_dimension, joint_highest_weight_vectors, label_dimension, operator_matrix, specialize_label, t_elements,
    verify_decomposition, verify_double_centralizer, verify_t0_spectrum, DecompError, OperatorMatrix, TConvention,
};
use qhowe_core::fock::{apply_generator, GenFamily, GenKind, GeneratorExpr, GeneratorSymbol, GeneratorWord, ModuleVector, Side, SpaceDescriptor};
use qhowe_core::indexsets::{count_matrices, Flavor};
use qhowe_core::ring::{quantum_integer, LaurentScalar, RationalScalar};

fn space(flavor: &str, m: usize, n: usize, d: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(flavor.parse::<Flavor>().unwrap(), m, n, d)
}

fn sym(side: Side, family: GenFamily, kind: GenKind, i: i32) -> GeneratorExpr {
    GeneratorExpr::symbol(GeneratorSymbol::new(side, family, kind, i))
}

fn matrix(e: &GeneratorExpr, s: &SpaceDescriptor) -> OperatorMatrix {
    operator_matrix(e, s).unwrap()
}

fn lin(terms: &[(&OperatorMatrix, RationalScalar)]) -> Vec<Vec<RationalScalar>> {
    let n = terms[0].0.dim();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    terms
                        .iter()
                        .fold(RationalScalar::zero(), |acc, (m, k)| acc.add(&m.entry(r, c).mul(k)))
                })
                .collect()
        })
        .collect()
}

/// [x, y]_a = xy − q^a yx on matrices.
fn bracket(x: &OperatorMatrix, y: &OperatorMatrix, a: i64) -> OperatorMatrix {
    let xy = x.compose(y);
    let yx = y.compose(x);
    let entries = lin(&[(&xy, RationalScalar::one()), (&yx, RationalScalar::q_pow(a).neg())]);
    OperatorMatrix::from_entries(x.space, String::new(), entries)
}

fn partitions_upto(total: u32, max_parts: usize, max_part: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    if max_parts == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=total.min(max_part)).rev() {
        for mut rest in partitions_upto(total - first, max_parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn identity_word_gives_identity_matrix() {
    let id = GeneratorExpr::single(GeneratorWord::new(vec![]));
    for s in [space("A", 2, 2, 2), space("Bjj", 1, 1, 1), space("Cii", 1, 1, 2)] {
        assert!(matrix(&id, &s).is_identity());
    }
}

#[test]
fn d1_is_diagonal_in_row_sums() {
    let s = space("A", 2, 1, 1);
    let m = matrix(&sym(Side::Left, GenFamily::A, GenKind::D, 1), &s);
    let expected: Vec<i64> = s.basis().unwrap().iter().map(|a| i64::from(a.ro(1))).collect();
    assert_eq!(m.dim(), 2);
    assert_eq!(m.diagonal_exponents(), Some(expected));
}

#[test]
fn matrices_match_apply_generator() {
    for s in [space("A", 2, 2, 2), space("Bji", 1, 2, 1), space("Cjj", 1, 1, 1)] {
        let basis = s.basis().unwrap();
        for side in [Side::Left, Side::Right] {
            for g in GeneratorSymbol::all_for(&s, side) {
                let m = matrix(&GeneratorExpr::symbol(g), &s);
                for (c, a) in basis.iter().enumerate() {
                    let image = apply_generator(&g, &ModuleVector::basis_vector(a)).unwrap();
                    for (r, b) in basis.iter().enumerate() {
                        assert_eq!(*m.entry(r, c), RationalScalar::from_laurent(&image.coeff(b)), "{g} at ({b}, {a})");
                    }
                }
            }
        }
    }
}

#[test]
fn matrix_cap_is_enforced() {
    let s = space("Bjj", 2, 2, 3);
    let e = sym(Side::Left, GenFamily::Jmath, GenKind::D, 1);
    assert!(matches!(operator_matrix(&e, &s), Err(DecompError::CapExceeded { .. })));
}

#[test]
fn t0_matrix_on_the_smallest_imath_space() {
    let s = space("Bii", 1, 1, 1);
    let t0 = matrix(&sym(Side::Left, GenFamily::Imath, GenKind::T0, 0), &s);
    assert_eq!(t0.dim(), 2);
    let mut product = OperatorMatrix::identity(s, 2);
    for k in -1..=1 {
        product = product.compose(&t0.shifted(&RationalScalar::from_laurent(&quantum_integer(k + 1))));
    }
    assert!(product.is_zero());
}

#[test]
fn one_dimensional_type_a_space() {
    for d in 0..=3 {
        let lines = joint_highest_weight_vectors(&space("A", 1, 1, d), Side::Left).unwrap();
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].multiplicity(), 1);
        assert_eq!(lines[0].side(Side::Left).unwrap().d_weights, vec![d as i64]);
    }
}

#[test]
fn jmath_space_has_two_left_lines() {
    let lines = joint_highest_weight_vectors(&space("Bjj", 1, 1, 1), Side::Left).unwrap();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines.iter().map(|l| l.multiplicity()).sum::<usize>(), 3);
    let joint = highest_weight_pieces(&space("Bjj", 1, 1, 1), &[Side::Left, Side::Right]).unwrap();
    assert_eq!(joint.len(), 2);
    assert!(joint.iter().all(|l| l.multiplicity() == 1));
}

#[test]
fn type_a_lines_are_labelled_by_partitions() {
    let s = space("A", 2, 2, 2);
    let joint = highest_weight_pieces(&s, &[Side::Left, Side::Right]).unwrap();
    let mut labels: Vec<Vec<u32>> = joint
        .iter()
        .map(|l| specialize_label(l.side(Side::Left).unwrap(), TConvention::Observed).unwrap().0)
        .collect();
    labels.sort();
    assert_eq!(labels, vec![vec![1, 1], vec![2]]);
    let left = joint_highest_weight_vectors(&s, Side::Left).unwrap();
    let mut mult: Vec<(Vec<i64>, usize)> = left
        .iter()
        .map(|l| (l.side(Side::Left).unwrap().d_weights.clone(), l.multiplicity()))
        .collect();
    mult.sort();
    assert_eq!(mult, vec![(vec![1, 1], 1), (vec![2, 0], 3)]);
}

#[test]
fn highest_weight_vectors_are_killed_by_raising_operators() {
    for s in [space("A", 2, 2, 2), space("Bjj", 1, 1, 1), space("Bii", 1, 2, 1)] {
        for side in [Side::Left, Side::Right] {
            let raising = match side {
                Side::Left => GenKind::E,
                Side::Right => GenKind::F,
            };
            for line in joint_highest_weight_vectors(&s, side).unwrap() {
                for v in &line.vectors {
                    for g in GeneratorSymbol::all_for(&s, side).into_iter().filter(|g| g.kind == raising) {
                        let m = matrix(&GeneratorExpr::symbol(g), &s);
                        let basis = s.basis().unwrap();
                        let mut col = vec![RationalScalar::zero(); basis.len()];
                        for (a, c) in v {
                            col[basis.iter().position(|b| b == a).unwrap()] = c.clone();
                        }
                        assert!(m.apply(&col).iter().all(RationalScalar::is_zero), "{g} on {s}");
                    }
                }
            }
        }
    }
}

#[test]
fn imath_t_elements() {
    let t0 = build_t_element(Side::Left, GenFamily::Imath, 1, 0).unwrap();
    assert_eq!(t0, sym(Side::Left, GenFamily::Imath, GenKind::T0, 0));
    let t1 = build_t_element(Side::Left, GenFamily::Imath, 2, 1).unwrap();
    assert_eq!(t1.terms.len(), 5);
    assert_eq!(
        build_t_element(Side::Left, GenFamily::Imath, 2, 2),
        Err(DecompError::TIndex { index: 2, rank: 2 })
    );
    assert_eq!(t_elements(Side::Right, GenFamily::Imath, 3).unwrap().len(), 3);
    assert!(build_t_element(Side::Left, GenFamily::A, 2, 0).is_err());
}

#[test]
fn imath_t1_matches_matrix_evaluation() {
    let s = space("Bii", 2, 2, 1);
    let g = |k, i| matrix(&sym(Side::Left, GenFamily::Imath, k, i), &s);
    let inner = bracket(&g(GenKind::T0, 0), &g(GenKind::F, 1), 1);
    let outer = bracket(&g(GenKind::E, 1), &inner, -1);
    let t0k1 = g(GenKind::T0, 0).compose(&g(GenKind::K, 1));
    let expected = lin(&[(&outer, RationalScalar::one()), (&t0k1, RationalScalar::one())]);
    let t1 = build_t_element(Side::Left, GenFamily::Imath, 2, 1).unwrap();
    assert_eq!(matrix(&t1, &s).rows(), expected.as_slice());
}

#[test]
fn jmath_t0_matches_matrix_evaluation() {
    let t0 = build_t_element(Side::Left, GenFamily::Jmath, 1, 0).unwrap();
    assert_eq!(t0.terms.len(), 4);
    for s in [space("Bjj", 1, 1, 1), space("Bji", 1, 1, 2)] {
        let g = |k, i| matrix(&sym(Side::Left, GenFamily::Jmath, k, i), &s);
        let ef = bracket(&g(GenKind::E, 0), &g(GenKind::F, 0), 1);
        let q = LaurentScalar::q();
        let inv = RationalScalar::one()
            .checked_div(&RationalScalar::from_laurent(&(&q - &q.bar())))
            .unwrap();
        let expected = lin(&[(&ef, RationalScalar::one()), (&g(GenKind::K, 0), inv.neg()), (&g(GenKind::KInv, 0), inv)]);
        assert_eq!(matrix(&t0, &s).rows(), expected.as_slice(), "{s}");
    }
}

#[test]
fn t0_spectra() {
    for (s, side) in [
        (space("Bii", 1, 1, 1), Side::Left),
        (space("Bii", 1, 1, 2), Side::Left),
        (space("Bji", 1, 1, 1), Side::Right),
        (space("Bii", 2, 2, 2), Side::Right),
    ] {
        let r = verify_t0_spectrum(&s, side).unwrap();
        let d = s.d as i64;
        assert_eq!(r.factors, (-d..=d).map(|k| k + 1).collect::<Vec<_>>());
        assert!(r.annihilates && r.squarefree && r.pass, "{s}");
        assert!(r.eigenvalues.iter().all(|n| r.factors.contains(n)));
    }
    assert!(verify_t0_spectrum(&space("Bjj", 1, 1, 1), Side::Left).is_err());
}

#[test]
fn commutant_examples() {
    let s = space("A", 2, 1, 1);
    assert_eq!(centralizer_dimension(&s, Side::Left).unwrap(), 4);
    assert_eq!(image_dimension(&s, Side::Left).unwrap(), 4);
    for d in 0..=3 {
        let s = space("A", 1, 1, d);
        assert_eq!(centralizer_dimension(&s, Side::Left).unwrap(), 1);
        assert_eq!(centralizer_dimension(&s, Side::Right).unwrap(), 1);
    }
    assert_eq!(centralizer_dimension(&space("Bjj", 1, 1, 1), Side::Left).unwrap(), 5);
}

#[test]
fn commutants_agree_with_classical_accounting() {
    for s in [space("A", 2, 2, 2), space("Bjj", 1, 1, 1), space("Bii", 1, 1, 1), space("Bij", 1, 2, 1), space("A", 3, 2, 2)] {
        let r = verify_double_centralizer(&s).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.commutant_of_right as u64, r.left_accounting);
        assert_eq!(r.commutant_of_left as u64, r.right_accounting);
    }
}

#[test]
fn weyl_dimensions() {
    assert_eq!(classical_dimension(&[vec![1, 0]]).unwrap(), 2);
    assert_eq!(classical_dimension(&[vec![1, 1]]).unwrap(), 1);
    assert_eq!(classical_dimension(&[vec![1, 0], vec![0]]).unwrap(), 2);
    assert_eq!(classical_dimension(&[vec![2, 0, 0]]).unwrap(), 6);
    assert_eq!(classical_dimension(&[vec![2, 1, 0]]).unwrap(), 8);
    assert!(matches!(classical_dimension(&[vec![0, 1]]), Err(DecompError::NonDominant(_))));
    assert_eq!(label_dimension(GenFamily::Jmath, 1, &[1], &[]).unwrap(), 2);
    assert_eq!(label_dimension(GenFamily::Imath, 1, &[1], &[]).unwrap(), 1);
    assert!(label_dimension(GenFamily::A, 1, &[1, 1], &[]).is_err());
}

#[test]
fn decomposition_examples() {
    for (s, dim, summands) in [(space("A", 2, 2, 2), 10, 2), (space("Bjj", 1, 1, 1), 5, 2), (space("Bii", 1, 1, 1), 2, 2)] {
        let r = verify_decomposition(&s).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.dimension, dim);
        assert_eq!(r.accounted_dimension, dim as u64);
        assert_eq!(r.summands.len(), summands);
        assert_eq!(r.joint_lines, summands);
        assert_eq!(r.left_lines, summands);
        assert_eq!(r.right_lines, summands);
    }
    let r = verify_decomposition(&space("A", 2, 2, 2)).unwrap();
    let mut dims: Vec<(String, u64, u64)> = r.summands.iter().map(|x| (x.lambda.clone(), x.left_dim, x.right_dim)).collect();
    dims.sort();
    assert_eq!(dims, vec![("(1,1)".to_string(), 1, 1), ("(2)".to_string(), 3, 3)]);
}

#[test]
fn type_a_index_set_is_bounded_partitions() {
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 0..=4 {
                let got: Vec<Vec<u32>> = expected_labels(&space("A", m, n, d)).into_iter().map(|l| l.0).collect();
                let mut got_sorted = got.clone();
                got_sorted.sort();
                let mut want = partitions_upto(d as u32, m.min(n), d as u32);
                want.sort();
                assert_eq!(got_sorted, want, "A({m}|{n},{d})");
            }
        }
    }
    for (m, n, d) in [(2, 2, 2), (2, 3, 3), (3, 2, 2)] {
        let r = verify_decomposition(&space("A", m, n, d)).unwrap();
        assert!(r.pass);
        let mut got: Vec<String> = r.summands.iter().map(|x| x.lambda.clone()).collect();
        got.sort();
        let mut want: Vec<String> = partitions_upto(d as u32, m.min(n), d as u32)
            .iter()
            .map(|p| format!("({})", p.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn raising_operators_shift_weights_by_roots() {
    for s in [space("A", 3, 2, 2), space("Bjj", 2, 1, 1), space("Bii", 2, 2, 1), space("Bji", 1, 2, 1)] {
        if count_matrices(s.flavor, s.m, s.n, s.d) > 120 {
            continue;
        }
        for side in [Side::Left, Side::Right] {
            let family = GeneratorSymbol::family_for(&s, side);
            let gens = GeneratorSymbol::all_for(&s, side);
            let ds: Vec<(i32, Vec<i64>)> = gens
                .iter()
                .filter(|g| g.kind == GenKind::D)
                .map(|g| (g.index, matrix(&GeneratorExpr::symbol(*g), &s).diagonal_exponents().unwrap()))
                .collect();
            let weight = |pos: usize| -> Vec<i64> { ds.iter().map(|(_, w)| w[pos]).collect() };
            let sign = if side == Side::Left { 1 } else { -1 };
            for e in gens.iter().filter(|g| g.kind == GenKind::E) {
                let root: Vec<i64> = ds
                    .iter()
                    .map(|(j, _)| {
                        if *j == e.index {
                            sign
                        } else if *j == e.index + 1 {
                            -sign
                        } else {
                            0
                        }
                    })
                    .collect();
                let m = matrix(&GeneratorExpr::symbol(*e), &s);
                for r in 0..m.dim() {
                    for c in 0..m.dim() {
                        if !m.entry(r, c).is_zero() {
                            let shift: Vec<i64> = weight(r).iter().zip(weight(c)).map(|(a, b)| a - b).collect();
                            assert_eq!(shift, root, "{family:?} {e} on {s}");
                        }
                    }
                }
            }
        }
    }
}
