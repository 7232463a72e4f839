use proptest::prelude::*;
use qhowe_core::indexsets::{
    c_shift, c_unshift, col_sums, count_matrices, enumerate_bipartitions, enumerate_matrices, enumerate_matrices_capped,
    partitions, row_sums, sharp_entry, transpose, Flavor, IndexError, IndexMatrix, Parity,
};

const B_FLAVORS: [&str; 4] = ["Bjj", "Bji", "Bij", "Bii"];
const C_FLAVORS: [&str; 4] = ["Cjj", "Cji", "Cij", "Cii"];

fn fl(s: &str) -> Flavor {
    s.parse().unwrap()
}

fn mat(flavor: &str, rows: &[&[u32]]) -> IndexMatrix {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    IndexMatrix::from_rows(fl(flavor), &rows).unwrap()
}

/// Brute force over the fundamental domain (i, j) ≥ (0, 0), mirrored, with
/// the defining constraints written out directly.
fn brute_force_symmetric(flavor: Flavor, m: usize, n: usize, d: usize) -> usize {
    let (mi, ni) = (m as i32, n as i32);
    let cells: Vec<(i32, i32)> = (0..=mi)
        .flat_map(|i| (-ni..=ni).map(move |j| (i, j)))
        .filter(|&c| c >= (0, 0))
        .collect();
    let (is_b, row_i, col_i) = match flavor {
        Flavor::B(b, c) => (true, b == Parity::Imath, c == Parity::Imath),
        Flavor::C(b, c) => (false, b == Parity::Imath, c == Parity::Imath),
        Flavor::A => unreachable!(),
    };
    let target = if is_b { 2 * d + 1 } else { 2 * d };
    let mut count = 0;
    let mut vals = vec![0usize; cells.len()];
    loop {
        let total: usize = cells
            .iter()
            .zip(&vals)
            .map(|(&c, &v)| if c == (0, 0) { v } else { 2 * v })
            .sum();
        let center = vals[0];
        let mut ok = total == target;
        ok &= if is_b { center % 2 == 1 } else { center.is_multiple_of(2) };
        for (&(i, j), &v) in cells.iter().zip(&vals) {
            if v > 0 && (i, j) != (0, 0) && ((row_i && i == 0) || (col_i && j == 0)) {
                ok = false;
            }
        }
        if (row_i || col_i) && center != usize::from(is_b) {
            ok = false;
        }
        count += usize::from(ok);
        let mut k = 0;
        loop {
            if k == vals.len() {
                return count;
            }
            vals[k] += 1;
            if vals[k] <= if k == 0 { target } else { target / 2 } {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn enumeration_examples() {
    let a = enumerate_matrices(Flavor::A, 1, 1, 3).unwrap();
    assert_eq!(a, vec![mat("A", &[&[3]])]);
    assert_eq!(enumerate_matrices(fl("Bii"), 1, 1, 1).unwrap().len(), 2);
    assert_eq!(enumerate_matrices(fl("Bjj"), 1, 1, 1).unwrap().len(), 5);
}

#[test]
fn jj_labels_for_d1_are_the_center_or_one_pair() {
    let labels = enumerate_matrices(fl("Bjj"), 1, 1, 1).unwrap();
    assert_eq!(labels.iter().filter(|a| a.get(0, 0) == 3).count(), 1);
    assert_eq!(labels.iter().filter(|a| a.get(0, 0) == 1).count(), 4);
}

#[test]
fn type_a_counts_are_multiset_numbers() {
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 2), (2, 3), (1, 6), (6, 1)] {
        for d in 0..=4 {
            let expected = binomial((m * n + d - 1) as u64, d as u64);
            let list = enumerate_matrices(Flavor::A, m, n, d).unwrap();
            assert_eq!(list.len() as u64, expected, "A({m}|{n},{d})");
            assert_eq!(count_matrices(Flavor::A, m, n, d), expected as u128);
        }
    }
}

#[test]
fn symmetric_counts_match_brute_force() {
    for f in B_FLAVORS.iter().chain(&C_FLAVORS) {
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            for d in 0..=2 {
                let flavor = fl(f);
                let list = enumerate_matrices(flavor, m, n, d).unwrap();
                assert_eq!(list.len(), brute_force_symmetric(flavor, m, n, d), "{f}({m}|{n},{d})");
                assert_eq!(count_matrices(flavor, m, n, d), list.len() as u128);
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_duplicate_free_and_valid() {
    for f in ["A", "Bjj", "Bji", "Bij", "Bii", "Cjj", "Cii"] {
        let list = enumerate_matrices(fl(f), 2, 2, 2).unwrap();
        assert!(list.windows(2).all(|w| w[0].entries() < w[1].entries()), "{f} not strictly sorted");
        for a in &list {
            a.validate().unwrap();
        }
    }
}

#[test]
fn enumeration_cap_is_enforced() {
    let err = enumerate_matrices_capped(Flavor::A, 3, 3, 3, 10).unwrap_err();
    assert!(matches!(err, IndexError::CapExceeded { count: 165, cap: 10 }));
}

#[test]
fn symmetric_invariants_hold_on_every_label() {
    for f in B_FLAVORS {
        for d in 0..=2 {
            for a in enumerate_matrices(fl(f), 2, 1, d).unwrap() {
                assert_eq!(a.total(), 2 * d as u64 + 1);
                assert_eq!(a.get(0, 0) % 2, 1);
                for i in a.rows() {
                    for j in a.cols() {
                        assert_eq!(a.get(i, j), a.get(-i, -j));
                    }
                }
            }
        }
    }
    for f in C_FLAVORS {
        for a in enumerate_matrices(fl(f), 1, 2, 2).unwrap() {
            assert_eq!(a.total(), 4);
        }
    }
}

#[test]
fn validator_rejects_symmetry_breaking_mutations() {
    for f in ["Bjj", "Bii", "Cjj", "Cij"] {
        for a in enumerate_matrices(fl(f), 1, 1, 1).unwrap() {
            for i in a.rows() {
                for j in a.cols() {
                    if (i, j) == (0, 0) {
                        continue;
                    }
                    let mut rows = a.rows_vec();
                    rows[(i + 1) as usize][(j + 1) as usize] += 1;
                    assert!(IndexMatrix::from_rows(a.flavor(), &rows).is_err(), "{f}: +1 at ({i},{j}) of {a}");
                }
            }
        }
    }
}

#[test]
fn row_and_col_sum_examples() {
    let a = mat("A", &[&[1, 0], &[0, 1]]);
    assert_eq!(row_sums(&a).parts, vec![1, 1]);
    assert_eq!(col_sums(&a).parts, vec![1, 1]);
    let b = mat("Bjj", &[&[0, 0, 0], &[0, 3, 0], &[0, 0, 0]]);
    assert_eq!(row_sums(&b).parts, vec![0, 3, 0]);
    let c = mat("Bjj", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(c.label(), "E00+E11^θ");
    assert_eq!(row_sums(&c).parts, vec![1, 1, 1]);
}

#[test]
fn sharp_entry_examples() {
    let b = mat("Bjj", &[&[0, 0, 0], &[0, 3, 0], &[0, 0, 0]]);
    assert_eq!(sharp_entry(&b, 0, 0).unwrap(), 1);
    let c = mat("Bjj", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(sharp_entry(&c, 0, 0).unwrap(), 0);
    assert_eq!(sharp_entry(&c, 1, 1).unwrap(), 1);
    assert!(sharp_entry(&mat("A", &[&[1]]), 0, 0).is_err());
}

#[test]
fn transpose_examples() {
    let a = mat("A", &[&[0, 1], &[0, 0]]);
    assert_eq!(transpose(&a), mat("A", &[&[0, 0], &[1, 0]]));
    let b = mat("Bii", &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    assert_eq!(b.label(), "E00+E1,-1^θ");
    assert_eq!(transpose(&b), b);
    let mixed = mat("Bji", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_eq!(transpose(&mixed).flavor(), fl("Bij"));
}

#[test]
fn transpose_is_an_involution_swapping_sums() {
    for f in ["A", "Bjj", "Bji", "Bij", "Bii", "Cji"] {
        for a in enumerate_matrices(fl(f), 2, 1, 2).unwrap() {
            let t = transpose(&a);
            t.validate().unwrap();
            assert_eq!(transpose(&t), a);
            assert_eq!(row_sums(&t).parts, col_sums(&a).parts);
        }
    }
}

#[test]
fn c_shift_examples() {
    let zero = mat("Cjj", &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    assert_eq!(c_shift(&zero).unwrap().label(), "E00");
    let e11 = mat("Cjj", &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
    assert_eq!(c_shift(&e11).unwrap().label(), "E00+E11^θ");
    assert!(c_shift(&mat("Bjj", &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]])).is_err());
}

#[test]
fn c_shift_is_injective_and_preserves_sums_off_center() {
    for f in C_FLAVORS {
        for d in 0..=2 {
            let list = enumerate_matrices(fl(f), 1, 1, d).unwrap();
            let mut images: Vec<IndexMatrix> = list.iter().map(|a| c_shift(a).unwrap()).collect();
            for (a, b) in list.iter().zip(&images) {
                assert_eq!(b.get(0, 0), a.get(0, 0) + 1);
                for i in a.rows().filter(|&i| i != 0) {
                    assert_eq!(a.ro(i), b.ro(i));
                    assert_eq!(a.co(i), b.co(i));
                }
                assert_eq!(&c_unshift(b).unwrap(), a);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), list.len());
        }
    }
}

#[test]
fn bipartition_examples() {
    for p in [Parity::Jmath, Parity::Imath] {
        let l = enumerate_bipartitions(p, 1, 1);
        let shapes: Vec<(Vec<u32>, Vec<u32>)> = l.iter().map(|b| (b.plus.clone(), b.minus.clone())).collect();
        assert_eq!(shapes.len(), 2);
        assert!(shapes.contains(&(vec![1], vec![])));
        assert!(shapes.contains(&(vec![], vec![1])));
    }
    assert_eq!(enumerate_bipartitions(Parity::Jmath, 1, 0).len(), 1);
}

#[test]
fn bipartitions_respect_part_bounds() {
    for n in 1..=3 {
        for d in 0..=4u32 {
            let j = enumerate_bipartitions(Parity::Jmath, n, d as usize);
            let i = enumerate_bipartitions(Parity::Imath, n, d as usize);
            // Par^ȷ_n(d) = ⊔_l Par_{n+1}(d-l) × Par_n(l), Par^ı_n(d) = ⊔_l Par_n(d-l) × Par_n(l).
            let count = |a: usize, b: usize| -> usize {
                (0..=d).map(|l| partitions(d - l, a).len() * partitions(l, b).len()).sum()
            };
            assert_eq!(j.len(), count(n + 1, n));
            assert_eq!(i.len(), count(n, n));
            for b in j.iter().chain(&i) {
                assert_eq!(b.size(), d);
            }
        }
    }
}

#[test]
fn partitions_are_decreasing_and_complete() {
    assert_eq!(partitions(4, 4).len(), 5);
    assert_eq!(partitions(4, 2).len(), 3);
    assert_eq!(partitions(0, 3), vec![Vec::<u32>::new()]);
    for p in partitions(6, 3) {
        assert!(p.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(p.iter().sum::<u32>(), 6);
    }
}

#[test]
fn serialization_round_trip() {
    let b = mat("Bji", &[&[0, 0, 0], &[1, 1, 1], &[0, 0, 0]]);
    let text = serde_json::to_string(&b).unwrap();
    assert_eq!(text, r#"{"flavor":"Bji","m":1,"n":1,"d":1,"rows":[[0,0,0],[1,1,1],[0,0,0]]}"#);
    let back: IndexMatrix = serde_json::from_str(&text).unwrap();
    assert_eq!(back, b);
}

proptest! {
    #[test]
    fn sampled_labels_satisfy_sum_identities(f in prop::sample::select(vec!["A", "Bjj", "Bji", "Bij", "Bii", "Cjj", "Cii"]),
                                            m in 1usize..3, n in 1usize..3, d in 0usize..3, pick in any::<prop::sample::Index>()) {
        let list = enumerate_matrices(fl(f), m, n, d).unwrap();
        let a = pick.get(&list);
        prop_assert_eq!(row_sums(&transpose(a)).parts, col_sums(a).parts);
        let rs: u32 = row_sums(a).parts.iter().sum();
        prop_assert_eq!(u64::from(rs), a.total());
    }
}
