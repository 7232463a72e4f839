use super::labels::{fd_word, lex_word, words_to_vector};
use super::straighten::Straightener;
use super::word::{Letter, WordSum};
use super::CoordError;
use crate::fock::{GenFamily, GenKind, GeneratorSymbol, ModuleVector, Side};
use crate::indexsets::{Flavor, IndexMatrix};
use crate::ring::LaurentScalar;

/// Chevalley letter of U(gl) acting on a chain of positions; slot s sits
/// between positions s and s+1 (E raises toward the smaller position).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ULetter {
    E(usize),
    F(usize),
    D(usize, i32),
}

/// Σ c·(l_1 l_2 ... l_k) in the ambient quantum group.
pub type UElement = Vec<(LaurentScalar, Vec<ULetter>)>;

/// Ordered index positions acted on: 1..=r (A), -r..=r (ȷ), nonzero -r..=r (ı).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positions(pub Vec<i32>);

impl Positions {
    pub fn for_family(family: GenFamily, rank: usize) -> Self {
        let r = rank as i32;
        Positions(match family {
            GenFamily::A => (1..=r).collect(),
            GenFamily::Jmath => (-r..=r).collect(),
            GenFamily::Imath => (-r..=r).filter(|&p| p != 0).collect(),
        })
    }

    pub fn slot(&self, p: i32) -> Option<usize> {
        self.0.iter().position(|&x| x == p)
    }
}

/// The ambient-group element of a generator: type A letters directly; ȷ and ı
/// generators through their embeddings (e_i = E + K^-1 F, t_0 = E_0 + qF_0K_0^-1 + K_0^-1, ...).
pub fn embed_generator(g: &GeneratorSymbol, rank: usize) -> (Positions, UElement) {
    use ULetter::{D, E, F};
    let one = LaurentScalar::one;
    let r = rank as i32;
    let i = g.index;
    let pos = Positions::for_family(g.family, rank);
    let inv = matches!(g.kind, GenKind::DInv | GenKind::KInv);
    let sign = if inv { -1 } else { 1 };
    let diag = |v: Vec<(i32, i32)>| -> UElement { vec![(one(), v.into_iter().map(|(s, k)| D(s as usize, k * sign)).collect())] };
    let elem = match g.family {
        GenFamily::A => {
            let s = i - 1;
            match g.kind {
                GenKind::E => vec![(one(), vec![E(s as usize)])],
                GenKind::F => vec![(one(), vec![F(s as usize)])],
                GenKind::D | GenKind::DInv => diag(vec![(s, 1)]),
                GenKind::K | GenKind::KInv => diag(vec![(s, 1), (s + 1, -1)]),
                GenKind::T0 => Vec::new(),
            }
        }
        GenFamily::Jmath => {
            let s = |p: i32| p + r;
            match g.kind {
                GenKind::E => vec![
                    (one(), vec![E(s(i) as usize)]),
                    (one(), vec![D(s(i) as usize, -1), D(s(i + 1) as usize, 1), F(s(-i - 1) as usize)]),
                ],
                GenKind::F => vec![
                    (one(), vec![E(s(-i - 1) as usize)]),
                    (one(), vec![F(s(i) as usize), D(s(-i - 1) as usize, -1), D(s(-i) as usize, 1)]),
                ],
                GenKind::D | GenKind::DInv if i == 0 => diag(vec![(s(0), 1)]),
                GenKind::D | GenKind::DInv => diag(vec![(s(i), 1), (s(-i), 1)]),
                GenKind::K | GenKind::KInv => diag(vec![(s(i), 1), (s(i + 1), -1), (s(-i - 1), -1), (s(-i), 1)]),
                GenKind::T0 => Vec::new(),
            }
        }
        GenFamily::Imath => {
            // E_a of U(gl_2n) sits at slot a + r - 1; D at half-position h has slot h + r - 1/2.
            let s = |a: i32| (a + r - 1) as usize;
            let k_inv = |a: i32| vec![D(s(a), -1), D(s(a) + 1, 1)];
            match g.kind {
                GenKind::E => {
                    let mut w = k_inv(i);
                    w.push(F(s(-i)));
                    vec![(one(), vec![E(s(i))]), (one(), w)]
                }
                GenKind::F => {
                    let mut w = vec![F(s(i))];
                    w.extend(k_inv(-i));
                    vec![(one(), vec![E(s(-i))]), (one(), w)]
                }
                GenKind::T0 => {
                    let mut w = vec![F(s(0))];
                    w.extend(k_inv(0));
                    vec![(one(), vec![E(s(0))]), (LaurentScalar::q(), w), (one(), k_inv(0))]
                }
                GenKind::D | GenKind::DInv => diag(vec![(i + r - 1, 1), (r - i, 1)]),
                GenKind::K | GenKind::KInv => {
                    diag(vec![(i + r - 1, 1), (r - i, 1), (i + r, -1), (r - i - 1, -1)])
                }
            }
        }
    };
    (pos, elem)
}

/// Which index of t_{ij} a side acts on: left on columns, right on rows.
fn acted(side: Side, l: Letter) -> i32 {
    match side {
        Side::Left => l.1,
        Side::Right => l.0,
    }
}

fn replace(side: Side, l: Letter, p: i32) -> Letter {
    match side {
        Side::Left => (l.0, p),
        Side::Right => (p, l.1),
    }
}

/// Exponent of K_s on one letter: +1 at position s, -1 at position s+1.
fn k_weight(pos: &Positions, s: usize, p: i32) -> i64 {
    i64::from(pos.0[s] == p) - i64::from(pos.0[s + 1] == p)
}

/// One Chevalley letter acting on a single t-letter: left E_s sends column
/// pos[s+1] to pos[s]; right E_s sends row pos[s] to pos[s+1]; F reverses.
fn letter_on_letter(side: Side, pos: &Positions, u: ULetter, l: Letter) -> Option<Letter> {
    let p = acted(side, l);
    let (from, to) = match (side, u) {
        (Side::Left, ULetter::E(s)) | (Side::Right, ULetter::F(s)) => (pos.0[s + 1], pos.0[s]),
        (Side::Left, ULetter::F(s)) | (Side::Right, ULetter::E(s)) => (pos.0[s], pos.0[s + 1]),
        (_, ULetter::D(..)) => return Some(l),
    };
    (p == from).then(|| replace(side, l, to))
}

/// A letter acting on a word through the iterated coproduct
/// Δ(E) = E⊗K^-1 + 1⊗E, Δ(F) = F⊗1 + K⊗F, Δ(D) = D⊗D.
fn letter_on_word(side: Side, pos: &Positions, u: ULetter, w: &[Letter]) -> WordSum {
    let mut out = WordSum::zero();
    match u {
        ULetter::D(s, k) => {
            let e: i64 = w.iter().filter(|&&l| acted(side, l) == pos.0[s]).count() as i64 * i64::from(k);
            out.add_term(w.to_vec(), &LaurentScalar::q_pow(e));
        }
        ULetter::E(s) | ULetter::F(s) => {
            let raising = matches!(u, ULetter::E(_));
            for c in 0..w.len() {
                let Some(moved) = letter_on_letter(side, pos, u, w[c]) else {
                    continue;
                };
                let twist: i64 = if raising {
                    -w[c + 1..].iter().map(|&l| k_weight(pos, s, acted(side, l))).sum::<i64>()
                } else {
                    w[..c].iter().map(|&l| k_weight(pos, s, acted(side, l))).sum::<i64>()
                };
                let mut nw = w.to_vec();
                nw[c] = moved;
                out.add_term(nw, &LaurentScalar::q_pow(twist));
            }
        }
    }
    out
}

/// x·w (left) or w·x (right) for an ambient element x and word w.
pub(crate) fn element_on_words(side: Side, pos: &Positions, x: &UElement, w: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (c, letters) in x {
        let mut cur = w.clone();
        let order: Box<dyn Iterator<Item = &ULetter>> = match side {
            Side::Left => Box::new(letters.iter().rev()),
            Side::Right => Box::new(letters.iter()),
        };
        for &u in order {
            let mut next = WordSum::zero();
            for (word, k) in cur.terms() {
                next.add_scaled(&letter_on_word(side, pos, u, word), k);
            }
            cur = next;
        }
        out.add_scaled(&cur, c);
    }
    out
}

/// Action of `g` on the monomial basis element of `a`, computed from the
/// letter actions and the coproduct, then straightened back into the basis.
pub fn act_coproduct(g: &GeneratorSymbol, a: &IndexMatrix, straightener: &Straightener) -> Result<ModuleVector, CoordError> {
    let space = crate::fock::SpaceDescriptor::of(a);
    g.check(&space.transpose())
        .map_err(|_| CoordError::Incompatible(format!("{g} on V{space}")))?;
    let rank = match g.side {
        Side::Left => a.n(),
        Side::Right => a.m(),
    };
    let (pos, x) = embed_generator(g, rank);
    let word = if a.flavor() == Flavor::A { lex_word(a) } else { fd_word(a)? };
    for &l in &word {
        if pos.slot(acted(g.side, l)).is_none() {
            return Err(CoordError::ForbiddenLetter(l.0, l.1));
        }
    }
    let image = element_on_words(g.side, &pos, &x, &WordSum::single(word));
    let mut reduced = WordSum::zero();
    for (w, c) in image.terms() {
        let r = if a.flavor() == Flavor::A {
            straightener.normal_order(w)
        } else {
            straightener.reduce_b(w)?
        };
        reduced.add_scaled(&r, c);
    }
    words_to_vector(&reduced, &space)
}
