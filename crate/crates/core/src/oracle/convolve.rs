use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::flags::{enumerate_flags_of_type, orbit_invariant, FlagKind, FlagRep};
use super::OracleError;
use crate::indexsets::{col_sums, enumerate_matrices, row_sums, IndexMatrix};

pub const DEFAULT_FLAG_CAP: usize = 250_000;

type CacheKey = (FlagKind, Vec<u32>, usize, u64);

/// Flag enumerations memoized per (kind, type, d, p). A cache hit returns the
/// same list a fresh enumeration would.
pub struct FlagCache {
    cap: usize,
    map: Mutex<HashMap<CacheKey, Arc<Vec<FlagRep>>>>,
}

impl Default for FlagCache {
    fn default() -> Self {
        Self::new(DEFAULT_FLAG_CAP)
    }
}

impl FlagCache {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            map: Mutex::new(HashMap::new()),
        }
    }

    pub fn flags(&self, kind: FlagKind, parts: &[u32], d: usize, p: u64) -> Result<Arc<Vec<FlagRep>>, OracleError> {
        let key = (kind, parts.to_vec(), d, p);
        if let Some(v) = self.map.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(enumerate_flags_of_type(kind, parts, d, p, self.cap)?);
        self.map
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert_with(|| v.clone());
        Ok(v)
    }
}

/// Shape compatibility of a triple: rows(first) = rows(third),
/// cols(first) = rows(second), cols(second) = cols(third).
fn check_triple(first: &IndexMatrix, second: &IndexMatrix, third: &IndexMatrix) -> Result<(), OracleError> {
    let ok = row_sums(first) == row_sums(third)
        && col_sums(first) == row_sums(second)
        && col_sums(second) == col_sums(third)
        && first.d() == second.d()
        && second.d() == third.d();
    if ok {
        Ok(())
    } else {
        Err(OracleError::Mismatch(format!(
            "incompatible triple {first:?}, {second:?}, {third:?}"
        )))
    }
}

/// Number of flags f with (f1, f) in the first orbit and (f, f2) in the
/// second, for a given pair (f1, f2).
pub fn count_between(first: &IndexMatrix, second: &IndexMatrix, f1: &FlagRep, f2: &FlagRep, cache: &FlagCache) -> Result<u64, OracleError> {
    let mid_kind = FlagKind::col_kind(first.flavor());
    let mids = cache.flags(mid_kind, &col_sums(first).parts, first.d(), f1.p())?;
    let mut count = 0u64;
    for f in mids.iter() {
        if orbit_invariant(f1, f)? == *first && orbit_invariant(f, f2)? == *second {
            count += 1;
        }
    }
    Ok(count)
}

/// A pair of flags in the orbit of `label`, the first being the first flag
/// of its type in enumeration order.
pub fn orbit_representative(label: &IndexMatrix, p: u64, cache: &FlagCache) -> Result<(FlagRep, FlagRep), OracleError> {
    let f1s = cache.flags(FlagKind::row_kind(label.flavor()), &row_sums(label).parts, label.d(), p)?;
    let f1 = f1s.first().ok_or_else(|| OracleError::EmptyOrbit(format!("{label:?}")))?;
    let f2s = cache.flags(FlagKind::col_kind(label.flavor()), &col_sums(label).parts, label.d(), p)?;
    for f2 in f2s.iter() {
        if orbit_invariant(f1, f2)? == *label {
            return Ok((f1.clone(), f2.clone()));
        }
    }
    Err(OracleError::EmptyOrbit(format!("{label:?}")))
}

/// κ_{first, second, third; p}: fibre count of the convolution product.
pub fn convolve_count(first: &IndexMatrix, second: &IndexMatrix, third: &IndexMatrix, p: u64, cache: &FlagCache) -> Result<u64, OracleError> {
    super::check_prime(p)?;
    check_triple(first, second, third)?;
    let (f1, f2) = orbit_representative(third, p, cache)?;
    count_between(first, second, &f1, &f2, cache)
}

/// All structure constants κ_{first, second, C; p} for C running over the
/// labels with matching row and column sums, sharing one enumeration pass.
pub fn structure_counts(first: &IndexMatrix, second: &IndexMatrix, p: u64, cache: &FlagCache) -> Result<BTreeMap<IndexMatrix, u64>, OracleError> {
    super::check_prime(p)?;
    if col_sums(first) != row_sums(second) || first.d() != second.d() {
        return Err(OracleError::Mismatch(format!("cannot multiply {first:?} by {second:?}")));
    }
    let d = first.d();
    let row_kind = FlagKind::row_kind(first.flavor());
    let mid_kind = FlagKind::col_kind(first.flavor());
    let col_kind = FlagKind::col_kind(second.flavor());
    let target = FlagKind::pair_flavor(row_kind, col_kind)?;
    let ro = row_sums(first);
    let co = col_sums(second);
    let f1s = cache.flags(row_kind, &ro.parts, d, p)?;
    let f1 = f1s.first().ok_or_else(|| OracleError::EmptyOrbit("no flag of first type".into()))?;
    let mids = cache.flags(mid_kind, &col_sums(first).parts, d, p)?;
    let mut fibre = Vec::new();
    for f in mids.iter() {
        if orbit_invariant(f1, f)? == *first {
            fibre.push(f);
        }
    }
    let mut reps: BTreeMap<IndexMatrix, FlagRep> = BTreeMap::new();
    for f2 in cache.flags(col_kind, &co.parts, d, p)?.iter() {
        reps.entry(orbit_invariant(f1, f2)?).or_insert_with(|| f2.clone());
    }
    let mut out = BTreeMap::new();
    for c in enumerate_matrices(target, first.m(), second.n(), d)? {
        if row_sums(&c) != ro || col_sums(&c) != co {
            continue;
        }
        let f2 = reps.get(&c).ok_or_else(|| OracleError::EmptyOrbit(format!("{c:?}")))?;
        let mut count = 0u64;
        for f in &fibre {
            if orbit_invariant(f, f2)? == *second {
                count += 1;
            }
        }
        out.insert(c, count);
    }
    if reps.len() != out.len() {
        return Err(OracleError::Mismatch("orbit invariants outside the label set".into()));
    }
    Ok(out)
}
