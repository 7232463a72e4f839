use proptest::prelude::*;
use qhowe_core::fock::{
    apply_generator, apply_symbols, apply_word, check_c_intertwining, check_commuting_actions, check_relations,
    normalization_exponent, FockError, GenFamily, GenKind, GeneratorSymbol, GeneratorWord, ModuleVector, Side,
    SpaceDescriptor,
};
use qhowe_core::indexsets::{c_shift, col_sums, enumerate_matrices, row_sums, Flavor, IndexMatrix};
use qhowe_core::ring::{quantum_integer, LaurentScalar};

fn fl(s: &str) -> Flavor {
    s.parse().unwrap()
}

fn mat(flavor: &str, rows: &[&[u32]]) -> IndexMatrix {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    IndexMatrix::from_rows(fl(flavor), &rows).unwrap()
}

fn space(flavor: &str, m: usize, n: usize, d: usize) -> SpaceDescriptor {
    SpaceDescriptor::new(fl(flavor), m, n, d)
}

fn gen(side: Side, family: GenFamily, name: &str) -> GeneratorSymbol {
    GeneratorSymbol::parse(side, family, name).unwrap()
}

fn basis(a: &IndexMatrix) -> ModuleVector {
    ModuleVector::basis_vector(a)
}

#[test]
fn normalization_exponent_examples() {
    assert_eq!(normalization_exponent(&mat("A", &[&[2, 0], &[0, 1]])).unwrap(), 0);
    // (i,j,k,l) = (2,1,1,2) is the only contributing quadruple.
    assert_eq!(normalization_exponent(&mat("A", &[&[0, 1], &[1, 0]])).unwrap(), 1);
    for a in enumerate_matrices(Flavor::A, 2, 2, 3).unwrap() {
        if a.is_diagonal() {
            assert_eq!(normalization_exponent(&a).unwrap(), 0);
        }
    }
}

#[test]
fn type_c_exponent_matches_shifted_type_b() {
    for f in ["Cjj", "Cji", "Cij", "Cii"] {
        for d in 0..=2 {
            for a in enumerate_matrices(fl(f), 1, 1, d).unwrap() {
                let b = c_shift(&a).unwrap();
                assert_eq!(normalization_exponent(&b).unwrap(), normalization_exponent(&a).unwrap(), "{a}");
            }
        }
    }
}

#[test]
fn left_d1_scales_by_row_weight() {
    let a = mat("A", &[&[1, 0], &[0, 1]]);
    let v = apply_generator(&gen(Side::Left, GenFamily::A, "D1"), &basis(&a)).unwrap();
    assert_eq!(v, basis(&a).scale(&LaurentScalar::q()));
}

#[test]
fn left_e1_two_term_example() {
    let a = mat("A", &[&[0, 0], &[1, 1]]);
    let v = apply_generator(&gen(Side::Left, GenFamily::A, "E1"), &basis(&a)).unwrap();
    let mut expected = basis(&mat("A", &[&[0, 1], &[1, 0]]));
    expected.add_term(mat("A", &[&[1, 0], &[0, 1]]), &LaurentScalar::q());
    assert_eq!(v, expected);
}

#[test]
fn left_f0_on_center_label() {
    let a = mat("Bjj", &[&[0, 0, 0], &[0, 3, 0], &[0, 0, 0]]);
    let v = apply_generator(&gen(Side::Left, GenFamily::Jmath, "f0"), &basis(&a)).unwrap();
    let target = mat("Bjj", &[&[0, 1, 0], &[0, 1, 0], &[0, 1, 0]]);
    assert_eq!(target.label(), "E00+E10^θ");
    assert_eq!(v, basis(&target));
}

#[test]
fn diagonal_jmath_generators() {
    // d0 acts by q^{(ro_0 - 1)/2}, d1 by q^{ro_1}, k0 = d0^2 d1^-1.
    let a = mat("Bjj", &[&[0, 1, 0], &[0, 1, 0], &[0, 1, 0]]);
    let v = basis(&a);
    let act = |name: &str| apply_generator(&gen(Side::Left, GenFamily::Jmath, name), &v).unwrap();
    assert_eq!(act("d0"), v.clone());
    assert_eq!(act("d1"), v.scale(&LaurentScalar::q()));
    assert_eq!(act("k0"), v.scale(&LaurentScalar::q_pow(-1)));
    assert_eq!(act("k0^-1"), v.scale(&LaurentScalar::q_pow(1)));
}

#[test]
fn empty_word_is_identity() {
    for a in enumerate_matrices(Flavor::A, 2, 2, 2).unwrap() {
        assert_eq!(apply_symbols(&[], &basis(&a)).unwrap(), basis(&a));
    }
}

#[test]
fn commutator_of_e_and_f_is_the_weight_scalar() {
    let e = gen(Side::Left, GenFamily::A, "E1");
    let f = gen(Side::Left, GenFamily::A, "F1");
    for a in enumerate_matrices(Flavor::A, 2, 2, 2).unwrap() {
        let v = basis(&a);
        let ef = apply_word(&GeneratorWord::new(vec![e, f]), &v).unwrap();
        let fe = apply_word(&GeneratorWord::new(vec![f, e]), &v).unwrap();
        let w = i64::from(a.ro(1)) - i64::from(a.ro(2));
        assert_eq!(ef.sub(&fe), v.scale(&quantum_integer(w)), "{a}");
    }
}

#[test]
fn words_compose_in_algebra_order() {
    // Left words act right-to-left: E1 F1 applies F1 first.
    let e = gen(Side::Left, GenFamily::A, "E1");
    let f = gen(Side::Left, GenFamily::A, "F1");
    let a = mat("A", &[&[2, 0], &[0, 0]]);
    let v = basis(&a);
    let manual = apply_generator(&e, &apply_generator(&f, &v).unwrap()).unwrap();
    assert_eq!(apply_symbols(&[e, f], &v).unwrap(), manual);
    // Right words act left-to-right.
    let re = gen(Side::Right, GenFamily::A, "E1");
    let rf = gen(Side::Right, GenFamily::A, "F1");
    let manual = apply_generator(&rf, &apply_generator(&re, &v).unwrap()).unwrap();
    assert_eq!(apply_symbols(&[re, rf], &v).unwrap(), manual);
}

#[test]
fn mixed_words_and_wrong_generators_are_rejected() {
    let a = mat("A", &[&[1, 0], &[0, 1]]);
    let l = gen(Side::Left, GenFamily::A, "E1");
    let r = gen(Side::Right, GenFamily::A, "E1");
    assert_eq!(apply_symbols(&[l, r], &basis(&a)), Err(FockError::MixedWord));
    let far = gen(Side::Left, GenFamily::A, "E2");
    assert!(matches!(apply_generator(&far, &basis(&a)), Err(FockError::IndexOutOfRange(_))));
    let wrong = gen(Side::Left, GenFamily::Jmath, "e0");
    assert!(matches!(apply_generator(&wrong, &basis(&a)), Err(FockError::FamilyMismatch { .. })));
    assert!(GeneratorSymbol::parse(Side::Left, GenFamily::A, "X1").is_err());
    let t0 = gen(Side::Left, GenFamily::Imath, "t0");
    assert!(t0.check(&space("Bji", 1, 1, 1)).is_err());
    assert!(t0.check(&space("Bji", 1, 1, 1).transpose()).is_ok());
}

#[test]
fn generator_names_round_trip() {
    for s in [space("A", 3, 2, 1), space("Bji", 2, 2, 1), space("Cii", 2, 1, 1)] {
        for side in [Side::Left, Side::Right] {
            for g in GeneratorSymbol::all_for(&s, side) {
                let back = GeneratorSymbol::parse(side, g.family, &g.to_string()).unwrap();
                assert_eq!(back, g);
                g.check(&s).unwrap();
            }
        }
    }
}

/// Row weight change of a left raising/lowering generator: +1 at the source
/// row and -1 at the target row, mirrored through 0 for B/C. Right
/// generators move the column weight by the negative root.
fn shift_of(flavor: Flavor, rank: usize, kind: GenKind, i: i32) -> Vec<i64> {
    let (up, down) = match kind {
        GenKind::E => (i, i + 1),
        GenKind::F => (i + 1, i),
        _ => unreachable!(),
    };
    if flavor == Flavor::A {
        let mut v = vec![0i64; rank];
        v[(up - 1) as usize] += 1;
        v[(down - 1) as usize] -= 1;
        return v;
    }
    let r = rank as i32;
    let mut v = vec![0i64; 2 * rank + 1];
    for (x, s) in [(up, 1), (-up, 1), (down, -1), (-down, -1)] {
        v[(x + r) as usize] += s;
    }
    v
}

#[test]
fn raising_and_lowering_shift_weights_by_roots() {
    let spaces = [
        space("A", 3, 2, 2),
        space("A", 2, 3, 2),
        space("Bjj", 2, 2, 1),
        space("Bji", 2, 1, 2),
        space("Bij", 1, 2, 2),
        space("Bii", 2, 2, 2),
        space("Cjj", 2, 1, 2),
        space("Cii", 2, 2, 2),
    ];
    for s in spaces {
        for side in [Side::Left, Side::Right] {
            let rank = GeneratorSymbol::side_rank(&s, side);
            for g in GeneratorSymbol::all_for(&s, side) {
                if !matches!(g.kind, GenKind::E | GenKind::F) {
                    continue;
                }
                let mut delta = shift_of(s.flavor, rank, g.kind, g.index);
                if side == Side::Right {
                    delta.iter_mut().for_each(|x| *x = -*x);
                }
                for a in s.basis().unwrap() {
                    let (w, fixed) = match side {
                        Side::Left => (row_sums(&a), col_sums(&a)),
                        Side::Right => (col_sums(&a), row_sums(&a)),
                    };
                    for (b, _) in apply_generator(&g, &basis(&a)).unwrap().terms() {
                        let (wb, fixed_b) = match side {
                            Side::Left => (row_sums(b), col_sums(b)),
                            Side::Right => (col_sums(b), row_sums(b)),
                        };
                        assert_eq!(fixed_b.parts, fixed.parts);
                        let diff: Vec<i64> =
                            wb.parts.iter().zip(&w.parts).map(|(x, y)| i64::from(*x) - i64::from(*y)).collect();
                        assert_eq!(diff, delta, "{g} on {a} in {s}");
                    }
                }
            }
        }
    }
}

#[test]
fn diagonal_generators_commute_and_invert() {
    for s in [space("A", 2, 2, 2), space("Bjj", 1, 2, 2), space("Bii", 2, 1, 2)] {
        for side in [Side::Left, Side::Right] {
            let diag: Vec<GeneratorSymbol> = GeneratorSymbol::all_for(&s, side)
                .into_iter()
                .filter(|g| matches!(g.kind, GenKind::D | GenKind::DInv | GenKind::K | GenKind::KInv))
                .collect();
            for a in s.basis().unwrap() {
                let v = basis(&a);
                for g in &diag {
                    for h in &diag {
                        assert_eq!(apply_symbols(&[*g, *h], &v).unwrap(), apply_symbols(&[*h, *g], &v).unwrap());
                    }
                    let inv = GeneratorSymbol {
                        kind: match g.kind {
                            GenKind::D => GenKind::DInv,
                            GenKind::DInv => GenKind::D,
                            GenKind::K => GenKind::KInv,
                            _ => GenKind::K,
                        },
                        ..*g
                    };
                    assert_eq!(apply_symbols(&[*g, inv], &v).unwrap(), v);
                }
            }
        }
    }
}

#[test]
fn commuting_actions_examples() {
    for s in [space("A", 2, 2, 2), space("Bjj", 1, 1, 1), space("Bii", 1, 1, 2)] {
        let r = check_commuting_actions(&s).unwrap();
        assert!(r.pass(), "{:?}", r.failures);
        assert!(r.checked > 0);
    }
}

#[test]
fn commuting_actions_include_t0_against_t0() {
    let s = space("Bii", 1, 1, 2);
    let l = gen(Side::Left, GenFamily::Imath, "t0");
    let r = gen(Side::Right, GenFamily::Imath, "t0");
    for a in s.basis().unwrap() {
        let v = basis(&a);
        let lr = apply_generator(&l, &apply_generator(&r, &v).unwrap()).unwrap();
        let rl = apply_generator(&r, &apply_generator(&l, &v).unwrap()).unwrap();
        assert_eq!(lr, rl);
    }
}

#[test]
fn relations_hold_on_a_small_space() {
    for side in [Side::Left, Side::Right] {
        let reports = check_relations(&space("A", 3, 3, 2), side).unwrap();
        assert_eq!(reports.len(), 7);
        for r in reports {
            assert!(r.pass(), "{}: {:?}", r.name, r.failures);
        }
    }
    assert!(check_relations(&space("Bjj", 1, 1, 1), Side::Left).is_err());
}

#[test]
fn c_spaces_match_b_spaces() {
    for f in ["Cjj", "Cji", "Cij", "Cii"] {
        let r = check_c_intertwining(&space(f, 1, 1, 2)).unwrap();
        assert!(r.pass(), "{f}: {:?}", r.failures);
    }
    assert!(check_c_intertwining(&space("Bjj", 1, 1, 1)).is_err());
}

#[test]
fn vector_serialization_round_trip() {
    let a = mat("A", &[&[0, 0], &[1, 1]]);
    let v = apply_generator(&gen(Side::Left, GenFamily::A, "E1"), &basis(&a)).unwrap();
    let text = serde_json::to_string(&v).unwrap();
    assert!(text.contains(r#""coeff":"q""#), "{text}");
    let back: ModuleVector = serde_json::from_str(&text).unwrap();
    assert_eq!(back, v);
}

proptest! {
    #[test]
    fn linear_combinations_never_store_zero(cs in prop::collection::vec(-3i64..=3, 10)) {
        let s = space("A", 2, 2, 2);
        let mut v = ModuleVector::zero(s);
        for (a, c) in s.basis().unwrap().into_iter().zip(&cs) {
            v.add_term(a, &LaurentScalar::from_int(*c));
        }
        prop_assert!(v.terms().all(|(_, c)| !c.is_zero()));
        prop_assert_eq!(v.len(), cs.iter().filter(|&&c| c != 0).count());
        prop_assert!(v.sub(&v).is_zero());
    }

    #[test]
    fn generators_act_linearly(cs in prop::collection::vec(-3i64..=3, 5), gi in 0usize..20) {
        let s = space("Bjj", 1, 1, 1);
        let gens: Vec<GeneratorSymbol> = [Side::Left, Side::Right]
            .iter()
            .flat_map(|&side| GeneratorSymbol::all_for(&s, side))
            .collect();
        let g = gens[gi % gens.len()];
        let mut v = ModuleVector::zero(s);
        let mut expected = ModuleVector::zero(s);
        for (a, c) in s.basis().unwrap().into_iter().zip(&cs) {
            let c = LaurentScalar::from_int(*c);
            expected.add_scaled(&apply_generator(&g, &basis(&a)).unwrap(), &c);
            v.add_term(a, &c);
        }
        prop_assert_eq!(apply_generator(&g, &v).unwrap(), expected);
    }
}
