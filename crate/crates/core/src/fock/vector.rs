use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::indexsets::{enumerate_matrices, Flavor, IndexError, IndexMatrix};
use crate::ring::LaurentScalar;

/// The label set a vector lives over: (flavor, m, n, d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub flavor: Flavor,
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

impl SpaceDescriptor {
    pub fn new(flavor: Flavor, m: usize, n: usize, d: usize) -> Self {
        Self { flavor, m, n, d }
    }

    pub fn of(a: &IndexMatrix) -> Self {
        Self::new(a.flavor(), a.m(), a.n(), a.d())
    }

    pub fn basis(&self) -> Result<Vec<IndexMatrix>, IndexError> {
        enumerate_matrices(self.flavor, self.m, self.n, self.d)
    }

    pub fn contains(&self, a: &IndexMatrix) -> bool {
        SpaceDescriptor::of(a) == *self && a.validate().is_ok()
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.flavor.transpose(), self.n, self.m, self.d)
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}|{},{})", self.flavor, self.m, self.n, self.d)
    }
}

/// Finite Z[q,q^-1]-combination of basis labels of one space.
/// Invariant: no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    space: SpaceDescriptor,
    terms: BTreeMap<IndexMatrix, LaurentScalar>,
}

impl ModuleVector {
    pub fn zero(space: SpaceDescriptor) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_vector(a: &IndexMatrix) -> Self {
        let mut v = Self::zero(SpaceDescriptor::of(a));
        v.terms.insert(a.clone(), LaurentScalar::one());
        v
    }

    pub fn space(&self) -> SpaceDescriptor {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexMatrix, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &IndexMatrix) -> LaurentScalar {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    /// Adds c·[a]. Labels must belong to the vector's space.
    pub fn add_term(&mut self, a: IndexMatrix, c: &LaurentScalar) {
        debug_assert_eq!(SpaceDescriptor::of(&a), self.space, "label outside space");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &LaurentScalar) {
        for (a, x) in &other.terms {
            self.add_term(a.clone(), &(x * c));
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::one());
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentScalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &LaurentScalar) -> ModuleVector {
        let mut out = ModuleVector::zero(self.space);
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map given on basis labels.
    pub fn map_labels<F>(&self, target: SpaceDescriptor, mut f: F) -> ModuleVector
    where
        F: FnMut(&IndexMatrix) -> IndexMatrix,
    {
        let mut out = ModuleVector::zero(target);
        for (a, c) in &self.terms {
            out.add_term(f(a), c);
        }
        out
    }

    /// Human-readable expansion, e.g. `(q^-1 + q) * [E00+E01^θ]`.
    pub fn pretty(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| {
                let cs = if c.num_terms() == 1 {
                    c.to_string()
                } else {
                    format!("({c})")
                };
                format!("{cs} * {prefix}({})", a.label())
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.space, self.pretty(""))
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    matrix: IndexMatrix,
    coeff: LaurentScalar,
}

#[derive(Serialize, Deserialize)]
struct VectorWire {
    space: SpaceDescriptor,
    terms: Vec<TermWire>,
}

impl Serialize for ModuleVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VectorWire {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| TermWire {
                    matrix: a.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuleVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = VectorWire::deserialize(d)?;
        let mut v = ModuleVector::zero(w.space);
        for t in w.terms {
            if !w.space.contains(&t.matrix) {
                return Err(serde::de::Error::custom("label outside declared space"));
            }
            v.add_term(t.matrix, &t.coeff);
        }
        Ok(v)
    }
}
