use num_bigint::BigInt;
use proptest::prelude::*;
use qhowe_core::ring::{
    bar, quantum_double_factorial, quantum_factorial, quantum_integer, rank, solve_linear, IntPoly, LaurentScalar,
    RationalScalar, RingError,
};

fn lp(s: &str) -> LaurentScalar {
    s.parse().unwrap()
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
}

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..5).prop_map(|ts| LaurentScalar::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentScalar> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

#[test]
fn quantum_integer_examples() {
    assert!(quantum_integer(0).is_zero());
    assert!(quantum_integer(1).is_one());
    assert_eq!(quantum_integer(3), lp("q^-2 + 1 + q^2"));
    assert_eq!(quantum_integer(-2), -quantum_integer(2));
}

#[test]
fn factorial_examples() {
    assert!(quantum_factorial(0).unwrap().is_one());
    assert_eq!(quantum_factorial(2).unwrap(), lp("q^-1 + q"));
    // (q^2 + 1 + q^-2)(q + q^-1), expanded by hand.
    assert_eq!(quantum_factorial(3).unwrap(), lp("q^-3 + 2*q^-1 + 2*q + q^3"));
    assert_eq!(quantum_factorial(-1), Err(RingError::NegativeFactorial(-1)));
}

#[test]
fn double_factorial_examples() {
    assert!(quantum_double_factorial(0).unwrap().is_one());
    assert_eq!(quantum_double_factorial(2).unwrap(), lp("q^-1 + q"));
    // [4][2] = (q^3 + q + q^-1 + q^-3)(q + q^-1)
    assert_eq!(quantum_double_factorial(4).unwrap(), lp("q^-4 + 2*q^-2 + 2 + 2*q^2 + q^4"));
    assert_eq!(quantum_double_factorial(3), Err(RingError::OddDoubleFactorial(3)));
}

#[test]
fn bar_examples() {
    assert_eq!(bar(&lp("q^2")), lp("q^-2"));
    assert_eq!(bar(&quantum_integer(3)), quantum_integer(3));
    assert_eq!(bar(&lp("q + 2*q^3")), lp("q^-1 + 2*q^-3"));
}

#[test]
fn text_form_is_sorted_and_parses_back() {
    let x = lp("q^2 + 1 + q^-2");
    assert_eq!(x.to_string(), "q^-2 + 1 + q^2");
    assert_eq!(lp("-3*q^-1 + q - 2").to_string(), "-3*q^-1 - 2 + q");
    assert!("q^^2".parse::<LaurentScalar>().is_err());
}

#[test]
fn quantum_integer_shapes_are_recognized() {
    let (c, s, n) = quantum_integer(3).shift(2).scale(&BigInt::from(-2)).as_quantum_integer().unwrap();
    assert_eq!((c, s, n), (BigInt::from(-2), 2, 3));
    assert_eq!(lp("1 + q").as_quantum_integer(), None);
    assert_eq!(lp("q^-1 + 2*q").as_quantum_integer(), None);
    assert_eq!(LaurentScalar::zero().as_quantum_integer(), None);
}

#[test]
fn solve_identity() {
    let one = RationalScalar::one;
    let zero = RationalScalar::zero;
    let system = vec![vec![one(), zero()], vec![zero(), one()]];
    let sol = solve_linear(&system, &[one(), zero()]).unwrap();
    assert!(sol.solvable);
    assert_eq!(sol.rank, 2);
    assert_eq!(sol.particular.unwrap(), vec![one(), zero()]);
    assert!(sol.kernel.is_empty());
}

#[test]
fn solve_one_by_two() {
    let system = vec![vec![RationalScalar::q_pow(1), RationalScalar::q_pow(2)]];
    let sol = solve_linear(&system, &[RationalScalar::zero()]).unwrap();
    assert_eq!(sol.rank, 1);
    assert_eq!(sol.kernel.len(), 1);
    // The kernel line is spanned by (q, -1): k = c·(q, -1) for some c.
    let k = &sol.kernel[0];
    let c = k[1].neg();
    assert_eq!(k[0], c.mul(&RationalScalar::q_pow(1)));
}

#[test]
fn solve_fixture_built_from_known_solution() {
    // A over Z[q] and a chosen x; b = A x is multiplied out here, then solved.
    let r = |s: &str| RationalScalar::from_laurent(&lp(s));
    let a = vec![
        vec![r("1 + q"), r("q^2"), r("2")],
        vec![r("q"), r("1"), r("-1 + q^3")],
        vec![r("3"), r("q - 1"), r("q^2")],
    ];
    let x = vec![r("q"), r("-2"), r("1 + q^2")];
    let b: Vec<RationalScalar> = a
        .iter()
        .map(|row| row.iter().zip(&x).fold(RationalScalar::zero(), |acc, (u, v)| acc.add(&u.mul(v))))
        .collect();
    let sol = solve_linear(&a, &b).unwrap();
    assert_eq!(sol.rank, 3);
    assert_eq!(sol.particular.unwrap(), x);
}

#[test]
fn solve_rejects_mismatched_rhs() {
    let system = vec![vec![RationalScalar::one()]];
    assert!(matches!(solve_linear(&system, &[]), Err(RingError::DimensionMismatch { .. })));
}

#[test]
fn inconsistent_system_is_flagged() {
    let one = RationalScalar::one;
    let system = vec![vec![one(), one()], vec![one(), one()]];
    let sol = solve_linear(&system, &[one(), RationalScalar::zero()]).unwrap();
    assert!(!sol.solvable);
    assert_eq!(sol.rank, 1);
}

#[test]
fn rational_normal_form() {
    // (q^2 - 1)/(q - 1) reduces to q + 1 over 1.
    let x = RationalScalar::new(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
    assert_eq!(x, RationalScalar::new(poly(&[1, 1]), poly(&[1])).unwrap());
    // The denominator's leading coefficient is positive.
    let y = RationalScalar::new(poly(&[1]), poly(&[0, -2])).unwrap();
    assert!(y.denominator().lc().unwrap() > &BigInt::from(0));
    assert!(RationalScalar::new(poly(&[1]), IntPoly::zero()).is_err());
}

proptest! {
    #[test]
    fn quantum_integer_identity(n in 1i64..40) {
        let lhs = &quantum_integer(n) * &lp("q - q^-1");
        let rhs = &LaurentScalar::q_pow(n) - &LaurentScalar::q_pow(-n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn canonical_form_has_no_zero_terms(a in laurent(), b in laurent()) {
        let s = &a - &b;
        prop_assert!(s.terms().all(|(_, c)| *c != BigInt::from(0)));
        prop_assert_eq!(&s + &b, a);
    }

    #[test]
    fn bar_is_an_involutive_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!(bar(&bar(&a)), a.clone());
        prop_assert_eq!(bar(&(&a * &b)), &bar(&a) * &bar(&b));
        prop_assert_eq!(bar(&(&a + &b)), &bar(&a) + &bar(&b));
    }

    #[test]
    fn text_and_machine_round_trip(a in laurent()) {
        prop_assert_eq!(lp(&a.to_string()), a.clone());
        prop_assert_eq!(LaurentScalar::from_machine(&a.to_machine()).unwrap(), a);
    }

    #[test]
    fn rational_inverse(a in nonzero_laurent(), b in nonzero_laurent()) {
        let x = RationalScalar::from_laurent(&a).checked_div(&RationalScalar::from_laurent(&b)).unwrap();
        let y = RationalScalar::from_laurent(&b).checked_div(&RationalScalar::from_laurent(&a)).unwrap();
        prop_assert!(x.mul(&y).is_one());
    }

    #[test]
    fn reduction_is_idempotent(a in nonzero_laurent(), b in nonzero_laurent()) {
        let x = RationalScalar::from_laurent(&a).checked_div(&RationalScalar::from_laurent(&b)).unwrap();
        let again = RationalScalar::new(x.numerator().clone(), x.denominator().clone()).unwrap();
        prop_assert_eq!(again, x.clone());
        prop_assert_eq!(RationalScalar::from_laurent(&a).to_laurent(), Some(a));
    }

    #[test]
    fn solve_linear_rank_nullity_and_substitution(
        entries in prop::collection::vec(prop::collection::vec(laurent(), 3), 1..4),
        x in prop::collection::vec(laurent(), 3),
    ) {
        let a: Vec<Vec<RationalScalar>> = entries
            .iter()
            .map(|r| r.iter().map(RationalScalar::from_laurent).collect())
            .collect();
        let x: Vec<RationalScalar> = x.iter().map(RationalScalar::from_laurent).collect();
        let apply = |v: &[RationalScalar]| -> Vec<RationalScalar> {
            a.iter()
                .map(|row| row.iter().zip(v).fold(RationalScalar::zero(), |acc, (u, w)| acc.add(&u.mul(w))))
                .collect()
        };
        let b = apply(&x);
        let sol = solve_linear(&a, &b).unwrap();
        prop_assert!(sol.solvable);
        prop_assert_eq!(sol.rank + sol.kernel.len(), 3);
        prop_assert_eq!(sol.rank, rank(&a).unwrap());
        prop_assert_eq!(apply(sol.particular.as_ref().unwrap()), b);
        for k in &sol.kernel {
            prop_assert!(apply(k).iter().all(RationalScalar::is_zero));
        }
    }
}
