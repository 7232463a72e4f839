use serde::{Deserialize, Serialize};

use super::field::{kernel, rank, rref};
use super::OracleError;
use crate::indexsets::{enumerate_matrices, row_sums, Flavor, IndexMatrix, Parity};

/// Ambient geometry: plain vector space, orthogonal (odd dimension) or
/// symplectic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FlagKind {
    A,
    B(Parity),
    C(Parity),
}

impl FlagKind {
    pub fn row_kind(flavor: Flavor) -> FlagKind {
        match flavor {
            Flavor::A => FlagKind::A,
            Flavor::B(b, _) => FlagKind::B(b),
            Flavor::C(b, _) => FlagKind::C(b),
        }
    }

    pub fn col_kind(flavor: Flavor) -> FlagKind {
        Self::row_kind(flavor.transpose())
    }

    pub fn ambient_dim(self, d: usize) -> usize {
        match self {
            FlagKind::A => d,
            FlagKind::B(_) => 2 * d + 1,
            FlagKind::C(_) => 2 * d,
        }
    }

    /// Square flavor whose diagonal labels index the flag types.
    pub fn square_flavor(self) -> Flavor {
        match self {
            FlagKind::A => Flavor::A,
            FlagKind::B(p) => Flavor::B(p, p),
            FlagKind::C(p) => Flavor::C(p, p),
        }
    }

    /// Flavor of invariants of pairs (row kind, column kind).
    pub fn pair_flavor(rows: FlagKind, cols: FlagKind) -> Result<Flavor, OracleError> {
        match (rows, cols) {
            (FlagKind::A, FlagKind::A) => Ok(Flavor::A),
            (FlagKind::B(b), FlagKind::B(c)) => Ok(Flavor::B(b, c)),
            (FlagKind::C(b), FlagKind::C(c)) => Ok(Flavor::C(b, c)),
            _ => Err(OracleError::Mismatch("flags of different geometries".into())),
        }
    }

    /// Bilinear form value (x, y) over F_p. B: (v_i, v_j) = δ_{i,-j} on the
    /// basis v_{-d..d}; C: (v_i, v_j) = sign(i) δ_{i,-j} on v_{-d+1/2..d-1/2}.
    pub fn pair(self, d: usize, p: u64, x: &[u64], y: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            let (b, negative) = match self {
                FlagKind::A => return 0,
                FlagKind::B(_) => (2 * d - a, false),
                FlagKind::C(_) => (2 * d - 1 - a, a < d),
            };
            let term = xa * y[b] % p;
            acc = if negative { (acc + p - term) % p } else { (acc + term) % p };
        }
        acc
    }

    /// All flag types (compositions) for this kind with the given step count.
    pub fn compositions(self, steps: usize, d: usize) -> Result<Vec<Vec<u32>>, OracleError> {
        let labels = enumerate_matrices(self.square_flavor(), steps, steps, d)?;
        Ok(labels
            .iter()
            .filter(|a| a.is_diagonal())
            .map(|a| row_sums(a).parts)
            .collect())
    }
}

/// Subspace of F_p^D in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceRep {
    pub p: u64,
    pub ambient: usize,
    pub rows: Vec<Vec<u64>>,
}

impl SubspaceRep {
    pub fn from_rows(rows: Vec<Vec<u64>>, ambient: usize, p: u64) -> Self {
        Self {
            p,
            ambient,
            rows: rref(rows, p),
        }
    }

    pub fn zero(ambient: usize, p: u64) -> Self {
        Self {
            p,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn whole(ambient: usize, p: u64) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| u64::from(i == j)).collect())
            .collect();
        Self { p, ambient, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn intersection_dim(&self, other: &SubspaceRep) -> usize {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        self.dim() + other.dim() - rank(&all, self.p)
    }

    pub fn contains(&self, other: &SubspaceRep) -> bool {
        self.intersection_dim(other) == other.dim()
    }

    /// Orthogonal complement for the form of `kind`.
    pub fn perp(&self, kind: FlagKind, d: usize) -> SubspaceRep {
        let p = self.p;
        let dim = self.ambient;
        // Row i of the constraint matrix is v ↦ (s_i, v).
        let constraints: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|s| {
                (0..dim)
                    .map(|b| {
                        let e: Vec<u64> = (0..dim).map(|k| u64::from(k == b)).collect();
                        kind.pair(d, p, s, &e)
                    })
                    .collect()
            })
            .collect();
        if constraints.is_empty() {
            return SubspaceRep::whole(dim, p);
        }
        SubspaceRep {
            p,
            ambient: dim,
            rows: kernel(&constraints, dim, p),
        }
    }

    pub fn is_isotropic(&self, kind: FlagKind, d: usize) -> bool {
        self.rows.iter().all(|x| {
            self.rows
                .iter()
                .all(|y| kind.pair(d, self.p, x, y) == 0)
        })
    }
}

/// A partial flag 0 = S_0 ⊆ S_1 ⊆ ... ⊆ S_M = F_p^D of a given type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagRep {
    pub kind: FlagKind,
    pub d: usize,
    pub parts: Vec<u32>,
    pub chain: Vec<SubspaceRep>,
}

impl FlagRep {
    pub fn p(&self) -> u64 {
        self.chain[0].p
    }

    pub fn steps(&self) -> usize {
        match self.kind {
            FlagKind::A => self.parts.len(),
            _ => self.parts.len() / 2,
        }
    }

    /// Structural validity: increasing chain of the declared dimensions and,
    /// for B/C, S_{M-r} = S_r^⊥.
    pub fn is_valid(&self) -> bool {
        let mut dim = 0usize;
        for (r, s) in self.chain.iter().enumerate() {
            if r > 0 {
                dim += self.parts[r - 1] as usize;
                if !s.contains(&self.chain[r - 1]) {
                    return false;
                }
            }
            if s.dim() != dim {
                return false;
            }
        }
        if self.kind == FlagKind::A {
            return true;
        }
        let mtot = self.parts.len();
        (0..=mtot).all(|r| self.chain[mtot - r] == self.chain[r].perp(self.kind, self.d))
    }
}

/// All k-dimensional subspaces of F_p^dim (as RREF row lists) whose rows
/// satisfy `keep` incrementally.
fn subspaces<F>(dim: usize, k: usize, p: u64, keep: &F) -> Vec<Vec<Vec<u64>>>
where
    F: Fn(&[Vec<u64>], &[u64]) -> bool,
{
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(dim, k, 0, &mut pivots, &mut |piv| {
        fill_rows(dim, p, piv, &mut Vec::new(), keep, &mut out);
    });
    out
}

fn choose_pivots(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..dim {
        if dim - c < k - cur.len() {
            break;
        }
        cur.push(c);
        choose_pivots(dim, k, c + 1, cur, f);
        cur.pop();
    }
}

fn fill_rows<F>(dim: usize, p: u64, pivots: &[usize], rows: &mut Vec<Vec<u64>>, keep: &F, out: &mut Vec<Vec<Vec<u64>>>)
where
    F: Fn(&[Vec<u64>], &[u64]) -> bool,
{
    let r = rows.len();
    if r == pivots.len() {
        out.push(rows.clone());
        return;
    }
    let pc = pivots[r];
    let free: Vec<usize> = (pc + 1..dim).filter(|c| !pivots.contains(c)).collect();
    let mut row = vec![0u64; dim];
    row[pc] = 1;
    let total = (p as u128).pow(free.len() as u32);
    for code in 0..total {
        let mut x = code;
        for &c in &free {
            row[c] = (x % p as u128) as u64;
            x /= p as u128;
        }
        if keep(rows, &row) {
            rows.push(row.clone());
            fill_rows(dim, p, pivots, rows, keep, out);
            rows.pop();
        }
    }
}

/// All flags of one type.
pub fn enumerate_flags_of_type(
    kind: FlagKind,
    parts: &[u32],
    d: usize,
    p: u64,
    cap: usize,
) -> Result<Vec<FlagRep>, OracleError> {
    super::check_prime(p)?;
    let ambient = kind.ambient_dim(d);
    let total: usize = parts.iter().map(|&x| x as usize).sum();
    if total != ambient {
        return Err(OracleError::Mismatch(format!(
            "composition {parts:?} does not sum to ambient dimension {ambient}"
        )));
    }
    // Dimensions of the free part of the chain: all of it for A, the
    // isotropic half for B/C.
    let free_len = match kind {
        FlagKind::A => parts.len().saturating_sub(1),
        _ => parts.len() / 2,
    };
    let mut dims = Vec::with_capacity(free_len);
    let mut acc = 0usize;
    for &x in parts.iter().take(free_len) {
        acc += x as usize;
        dims.push(acc);
    }
    let free_chains: Vec<Vec<SubspaceRep>> = match dims.last() {
        None => vec![Vec::new()],
        Some(&k) => {
            let tops = match kind {
                FlagKind::A => subspaces(ambient, k, p, &|_, _| true),
                _ => subspaces(ambient, k, p, &|prev: &[Vec<u64>], row: &[u64]| {
                    kind.pair(d, p, row, row) == 0 && prev.iter().all(|x| kind.pair(d, p, x, row) == 0)
                }),
            };
            let mut chains = Vec::new();
            for top in tops {
                let top = SubspaceRep::from_rows(top, ambient, p);
                for mut lower in nested_chains(&top, &dims[..dims.len() - 1], p) {
                    lower.push(top.clone());
                    chains.push(lower);
                    if chains.len() > cap {
                        return Err(OracleError::CapExceeded(cap));
                    }
                }
            }
            chains
        }
    };
    let mut out = Vec::with_capacity(free_chains.len());
    for free_chain in free_chains {
        let mut chain = vec![SubspaceRep::zero(ambient, p)];
        chain.extend(free_chain.iter().cloned());
        if kind != FlagKind::A {
            for s in free_chain.iter().rev() {
                chain.push(s.perp(kind, d));
            }
        }
        if !parts.is_empty() {
            chain.push(SubspaceRep::whole(ambient, p));
        }
        out.push(FlagRep {
            kind,
            d,
            parts: parts.to_vec(),
            chain,
        });
    }
    Ok(out)
}

/// Chains S_1 ⊆ ... ⊆ S_k ⊆ top with the given dimensions (last ≤ dim top).
fn nested_chains(top: &SubspaceRep, dims: &[usize], p: u64) -> Vec<Vec<SubspaceRep>> {
    let Some((&k, rest)) = dims.split_last() else {
        return vec![Vec::new()];
    };
    let ambient = top.ambient;
    let mut out = Vec::new();
    for coords in subspaces(top.dim(), k, p, &|_, _| true) {
        let rows: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; ambient];
                for (coef, basis) in c.iter().zip(&top.rows) {
                    for (x, y) in v.iter_mut().zip(basis) {
                        *x = (*x + coef * y) % p;
                    }
                }
                v
            })
            .collect();
        let sub = SubspaceRep::from_rows(rows, ambient, p);
        for mut lower in nested_chains(&sub, rest, p) {
            lower.push(sub.clone());
            out.push(lower);
        }
    }
    out
}

/// All flags of the given kind and step count, over every type.
pub fn enumerate_flags(kind: FlagKind, steps: usize, d: usize, p: u64, cap: usize) -> Result<Vec<FlagRep>, OracleError> {
    let mut out = Vec::new();
    for parts in kind.compositions(steps, d)? {
        out.extend(enumerate_flags_of_type(kind, &parts, d, p, cap)?);
        if out.len() > cap {
            return Err(OracleError::CapExceeded(cap));
        }
    }
    Ok(out)
}

/// Matrix invariant a_rs = c(r,s) - c(r-1,s) - c(r,s-1) + c(r-1,s-1) with
/// c(r,s) = dim(S_r ∩ S'_s).
pub fn orbit_invariant(f: &FlagRep, g: &FlagRep) -> Result<IndexMatrix, OracleError> {
    if f.p() != g.p() || f.chain[0].ambient != g.chain[0].ambient {
        return Err(OracleError::Mismatch("flags over different spaces".into()));
    }
    let flavor = FlagKind::pair_flavor(f.kind, g.kind)?;
    let (mr, mc) = (f.parts.len(), g.parts.len());
    let mut c = vec![vec![0i64; mc + 1]; mr + 1];
    for (r, s_r) in f.chain.iter().enumerate().skip(1) {
        for (s, t_s) in g.chain.iter().enumerate().skip(1) {
            c[r][s] = s_r.intersection_dim(t_s) as i64;
        }
    }
    let rows: Vec<Vec<u32>> = (1..=mr)
        .map(|r| {
            (1..=mc)
                .map(|s| (c[r][s] - c[r - 1][s] - c[r][s - 1] + c[r - 1][s - 1]) as u32)
                .collect()
        })
        .collect();
    Ok(IndexMatrix::from_rows(flavor, &rows)?)
}

/// A flag pair together with its matrix invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDatum {
    pub first: FlagRep,
    pub second: FlagRep,
    pub invariant: IndexMatrix,
}

impl OrbitDatum {
    pub fn new(first: FlagRep, second: FlagRep) -> Result<Self, OracleError> {
        let invariant = orbit_invariant(&first, &second)?;
        Ok(Self { first, second, invariant })
    }
}
