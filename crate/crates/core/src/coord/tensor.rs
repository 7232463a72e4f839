use std::collections::BTreeMap;

use super::coproduct::{embed_generator, Positions, UElement, ULetter};
use super::straighten::{fold_letter, swap_pair};
use super::word::Letter;
use super::CoordError;
use crate::fock::{CheckReport, GenFamily, GenKind, GeneratorSymbol, Side, SpaceDescriptor};
use crate::indexsets::{Flavor, Parity};
use crate::ring::LaurentScalar;

type Tensor = BTreeMap<Vec<i32>, LaurentScalar>;

fn add(t: &mut Tensor, k: Vec<i32>, c: LaurentScalar) {
    let e = t.entry(k.clone()).or_insert_with(LaurentScalar::zero);
    *e = &*e + &c;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// One letter on V^{⊗d} for the natural representation E_s v_{p_{s+1}} = v_{p_s},
/// F_s v_{p_s} = v_{p_{s+1}}, D_s v_p = q^{δ} v_p, spread by the coproduct.
fn letter_on_tensor(pos: &Positions, u: ULetter, t: &Tensor) -> Tensor {
    let p = &pos.0;
    let kw = |s: usize, x: i32| i64::from(p[s] == x) - i64::from(p[s + 1] == x);
    let mut out = Tensor::new();
    for (v, c) in t {
        match u {
            ULetter::D(s, k) => {
                let e = v.iter().filter(|&&x| x == p[s]).count() as i64 * i64::from(k);
                add(&mut out, v.clone(), c.shift(e));
            }
            ULetter::E(s) => {
                for i in 0..v.len() {
                    if v[i] == p[s + 1] {
                        let e: i64 = -v[i + 1..].iter().map(|&x| kw(s, x)).sum::<i64>();
                        let mut w = v.clone();
                        w[i] = p[s];
                        add(&mut out, w, c.shift(e));
                    }
                }
            }
            ULetter::F(s) => {
                for i in 0..v.len() {
                    if v[i] == p[s] {
                        let e: i64 = v[..i].iter().map(|&x| kw(s, x)).sum();
                        let mut w = v.clone();
                        w[i] = p[s + 1];
                        add(&mut out, w, c.shift(e));
                    }
                }
            }
        }
    }
    out
}

fn element_on_tensor(pos: &Positions, x: &UElement, t: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (c, letters) in x {
        let mut cur = t.clone();
        for &u in letters.iter().rev() {
            cur = letter_on_tensor(pos, u, &cur);
        }
        for (k, v) in cur {
            add(&mut out, k, &v * c);
        }
    }
    out
}

/// ⟨t_{i1 j1} ... t_{ik jk}, x⟩: the coefficient of v_{i1}⊗...⊗v_{ik} in
/// x·(v_{j1}⊗...⊗v_{jk}).
pub fn matrix_coefficient(word: &[Letter], pos: &Positions, x: &UElement) -> LaurentScalar {
    let input: Tensor = [(word.iter().map(|l| l.1).collect(), LaurentScalar::one())].into();
    let out = element_on_tensor(pos, x, &input);
    let key: Vec<i32> = word.iter().map(|l| l.0).collect();
    out.get(&key).cloned().unwrap_or_else(LaurentScalar::zero)
}

fn functional(terms: &[(LaurentScalar, Vec<Letter>)], pos: &Positions, x: &UElement) -> LaurentScalar {
    terms
        .iter()
        .map(|(c, w)| c * &matrix_coefficient(w, pos, x))
        .fold(LaurentScalar::zero(), |a, b| &a + &b)
}

fn words_over<T: Clone>(alphabet: &[T], max_len: usize) -> Vec<Vec<T>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in alphabet {
                let mut v: Vec<T> = w.clone();
                v.push(a.clone());
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Every quantum commutation relation between two letters of rank `n`
/// vanishes as a matrix coefficient on V⊗V against all words of length
/// ≤ `max_len` in E_s, F_s, D_s^{±1}.
pub fn straightening_relation_check(n: usize, max_len: usize) -> CheckReport {
    let pos = Positions::for_family(GenFamily::A, n);
    let mut alphabet = Vec::new();
    for s in 0..n {
        if s + 1 < n {
            alphabet.push(ULetter::E(s));
            alphabet.push(ULetter::F(s));
        }
        alphabet.push(ULetter::D(s, 1));
        alphabet.push(ULetter::D(s, -1));
    }
    let letters: Vec<Letter> = (1..=n as i32).flat_map(|i| (1..=n as i32).map(move |j| (i, j))).collect();
    let mut relations = Vec::new();
    for &y in &letters {
        for &x in &letters {
            if y > x {
                let mut terms = vec![(LaurentScalar::one(), vec![y, x])];
                for (c, u, v) in swap_pair(y, x) {
                    terms.push((-c, vec![u, v]));
                }
                relations.push(((y, x), terms));
            }
        }
    }
    let mut report = CheckReport::new("straightening relations on V⊗V", &SpaceDescriptor::new(Flavor::A, n, n, 2));
    for w in words_over(&alphabet, max_len) {
        let x: UElement = vec![(LaurentScalar::one(), w.clone())];
        for ((y, z), terms) in &relations {
            let val = functional(terms, &pos, &x);
            report.record(val.is_zero(), || format!("t{y:?} t{z:?} against {w:?}: {val}"));
        }
    }
    report
}

/// The coalgebra relations ε̃·t_x = ε̃·(folded form), followed by any word
/// of `degree - 1` letters, vanish on every word of length ≤ `max_len` in
/// the ıquantum group generators.
pub fn coideal_relation_check(parity: Parity, rank: usize, degree: usize, max_len: usize) -> Result<CheckReport, CoordError> {
    let flavor = Flavor::B(parity, parity);
    let space = SpaceDescriptor::new(flavor, rank, rank, degree);
    let family = match parity {
        Parity::Jmath => GenFamily::Jmath,
        Parity::Imath => GenFamily::Imath,
    };
    let pos = Positions::for_family(family, rank);
    let gens: Vec<GeneratorSymbol> = GeneratorSymbol::all_for(&space, Side::Left)
        .into_iter()
        .filter(|g| matches!(g.kind, GenKind::E | GenKind::F | GenKind::T0 | GenKind::D))
        .collect();
    let elems: Vec<UElement> = gens.iter().map(|g| embed_generator(g, rank).1).collect();
    let letters: Vec<Letter> = pos.0.iter().flat_map(|&i| pos.0.iter().map(move |&j| (i, j))).collect();
    let mut relations = Vec::new();
    for &x in letters.iter().filter(|&&x| x < (0, 0)) {
        let mut terms = vec![(LaurentScalar::one(), vec![x])];
        for (w, c) in fold_letter(x).terms() {
            terms.push((-c.clone(), w.clone()));
        }
        relations.push((x, terms));
    }
    let mut report = CheckReport::new("coalgebra relations on the tensor power", &space);
    let suffixes = words_over(&letters, degree.saturating_sub(1))
        .into_iter()
        .filter(|w| w.len() + 1 == degree.max(1));
    let suffixes: Vec<Vec<Letter>> = suffixes.collect();
    for word in words_over(&(0..gens.len()).collect::<Vec<_>>(), max_len) {
        let mut x: UElement = vec![(LaurentScalar::one(), Vec::new())];
        for &g in &word {
            x = x
                .iter()
                .flat_map(|(c, l)| {
                    elems[g].iter().map(move |(c2, l2)| {
                        let mut v = l.clone();
                        v.extend(l2.iter().copied());
                        (c * c2, v)
                    })
                })
                .collect();
        }
        for (lead, terms) in &relations {
            for suffix in &suffixes {
                let full: Vec<(LaurentScalar, Vec<Letter>)> = terms
                    .iter()
                    .map(|(c, w)| {
                        let mut v = w.clone();
                        v.extend(suffix.iter().copied());
                        (c.clone(), v)
                    })
                    .collect();
                let val = functional(&full, &pos, &x);
                report.record(val.is_zero(), || {
                    let names: Vec<String> = word.iter().map(|&g| gens[g].to_string()).collect();
                    format!("relation at t{lead:?}, suffix {suffix:?}, against {}: {val}", names.join(" "))
                });
            }
        }
    }
    Ok(report)
}
