use std::collections::HashMap;
use std::sync::RwLock;

use super::word::{Letter, WordSum};
use super::CoordError;
use crate::ring::LaurentScalar;

const MAX_DEPTH: usize = 10_000;

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

fn q_minus_q_inv() -> LaurentScalar {
    &LaurentScalar::q() - &LaurentScalar::q_pow(-1)
}

/// Rewrites y·x with y > x (lexicographic) as Σ c·u·v with u ≤ v:
/// same row or same column gives q^-1·x·y; crossing pairs commute; the
/// nested pair picks up the correction -(q - q^-1)·t_{c,b}·t_{a,d}.
pub(crate) fn swap_pair(y: Letter, x: Letter) -> Vec<(LaurentScalar, Letter, Letter)> {
    let ((a, b), (c, d)) = (y, x);
    if a == c || b == d {
        vec![(LaurentScalar::q_pow(-1), x, y)]
    } else if b < d {
        vec![(LaurentScalar::one(), x, y)]
    } else {
        vec![(LaurentScalar::one(), x, y), (-q_minus_q_inv(), (c, b), (a, d))]
    }
}

/// Rewrites ε̃·t_{ij} into letters of the fundamental domain (i,j) ≥ (0,0).
pub(crate) fn fold_letter(x: Letter) -> WordSum {
    let (i, j) = x;
    let mut out = WordSum::zero();
    if x >= (0, 0) {
        out.add_term(vec![x], &LaurentScalar::one());
    } else if i == 0 {
        out.add_term(vec![(0, -j)], &LaurentScalar::q_pow(-1));
    } else if j < 0 {
        out.add_term(vec![(-i, -j)], &LaurentScalar::one());
        out.add_term(vec![(-i, j)], &-q_minus_q_inv());
    } else if j > 0 {
        out.add_term(vec![(-i, -j)], &LaurentScalar::one());
    } else {
        out.add_term(vec![(-i, 0)], &LaurentScalar::q_pow(-1));
    }
    out
}

type OrderCache = RwLock<HashMap<Vec<Letter>, WordSum>>;
type FoldCache = RwLock<HashMap<(Vec<Letter>, Letter), WordSum>>;

/// Straightening engine. A cached instance memoizes reduced words; a cache
/// hit returns exactly what a fresh computation would.
pub struct Straightener {
    strategy: Strategy,
    order_cache: Option<OrderCache>,
    fold_cache: Option<FoldCache>,
}

impl Default for Straightener {
    fn default() -> Self {
        Self::new(Strategy::Leftmost)
    }
}

impl Straightener {
    pub fn new(strategy: Strategy) -> Self {
        Self {
            strategy,
            order_cache: None,
            fold_cache: None,
        }
    }

    pub fn cached(strategy: Strategy) -> Self {
        Self {
            strategy,
            order_cache: Some(RwLock::new(HashMap::new())),
            fold_cache: Some(RwLock::new(HashMap::new())),
        }
    }

    /// Expresses a word of the coordinate algebra in the ordered monomials.
    pub fn normal_order(&self, w: &[Letter]) -> WordSum {
        if let Some(cache) = &self.order_cache {
            if let Some(hit) = cache.read().expect("cache lock").get(w) {
                return hit.clone();
            }
        }
        let descent = |p: &usize| w[*p] > w[*p + 1];
        let pos = match self.strategy {
            Strategy::Leftmost => (0..w.len().saturating_sub(1)).find(descent),
            Strategy::Rightmost => (0..w.len().saturating_sub(1)).rev().find(descent),
        };
        let result = match pos {
            None => WordSum::single(w.to_vec()),
            Some(p) => {
                let mut out = WordSum::zero();
                for (c, u, v) in swap_pair(w[p], w[p + 1]) {
                    let mut next = w.to_vec();
                    next[p] = u;
                    next[p + 1] = v;
                    out.add_scaled(&self.normal_order(&next), &c);
                }
                out
            }
        };
        if let Some(cache) = &self.order_cache {
            cache.write().expect("cache lock").insert(w.to_vec(), result.clone());
        }
        result
    }

    /// Expresses ε̃·w in the basis of ordered fundamental-domain words: each
    /// new letter is appended to reduced words of one degree less, sliding it
    /// past the last letter with the quantum commutation relations.
    pub fn reduce_b(&self, w: &[Letter]) -> Result<WordSum, CoordError> {
        let mut acc = WordSum::single(Vec::new());
        for &x in w {
            let mut next = WordSum::zero();
            for (b, c) in acc.terms() {
                next.add_scaled(&self.append(b, x, 0)?, c);
            }
            acc = next;
        }
        Ok(acc)
    }

    fn append(&self, b: &[Letter], x: Letter, depth: usize) -> Result<WordSum, CoordError> {
        if depth > MAX_DEPTH {
            return Err(CoordError::NoTermination(MAX_DEPTH));
        }
        let Some(&y) = b.last() else {
            return Ok(fold_letter(x));
        };
        if x >= y {
            let mut w = b.to_vec();
            w.push(x);
            return Ok(WordSum::single(w));
        }
        let key = (b.to_vec(), x);
        if let Some(cache) = &self.fold_cache {
            if let Some(hit) = cache.read().expect("cache lock").get(&key) {
                return Ok(hit.clone());
            }
        }
        let prefix = &b[..b.len() - 1];
        let mut out = WordSum::zero();
        for (c, u, v) in swap_pair(y, x) {
            for (bb, cc) in self.append(prefix, u, depth + 1)?.terms() {
                out.add_scaled(&self.append(bb, v, depth + 1)?, &(&c * cc));
            }
        }
        if let Some(cache) = &self.fold_cache {
            cache.write().expect("cache lock").insert(key, out.clone());
        }
        Ok(out)
    }
}

/// Normal ordering with the leftmost strategy and no cache.
pub fn normal_order(w: &[Letter]) -> WordSum {
    Straightener::default().normal_order(w)
}

/// Reduction into the coalgebra basis with no cache.
pub fn reduce_b(w: &[Letter]) -> Result<WordSum, CoordError> {
    Straightener::default().reduce_b(w)
}
