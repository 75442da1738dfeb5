use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::BasisIndex;
use crate::scalar::Scalar;

/// Coordinate of the ambient space in which spans are measured.
///
/// Derived ordering: every `Base` key precedes every `Cell` key, which precede
/// every `Band` key; within a variant, fields compare lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoordinateKey {
    Base(BasisIndex),
    Cell {
        row: usize,
        col: usize,
        index: BasisIndex,
    },
    Band {
        offset: i64,
        index: BasisIndex,
    },
}

impl fmt::Display for CoordinateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateKey::Base(i) => write!(f, "{i}"),
            CoordinateKey::Cell { row, col, index } => write!(f, "e[{row},{col}]({index})"),
            CoordinateKey::Band { offset, index } => write!(f, "E[{offset}]({index})"),
        }
    }
}

/// Finitely supported vector with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVector {
    entries: BTreeMap<CoordinateKey, Scalar>,
}

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (CoordinateKey, Scalar)>>(entries: I) -> Self {
        let mut v = Self::new();
        for (k, c) in entries {
            v.add_entry(k, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &CoordinateKey) -> Option<&Scalar> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CoordinateKey, &Scalar)> + '_ {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CoordinateKey> + '_ {
        self.entries.keys()
    }

    /// Smallest coordinate with a nonzero value.
    pub fn leading(&self) -> Option<(&CoordinateKey, &Scalar)> {
        self.entries.iter().next()
    }

    pub fn add_entry(&mut self, key: CoordinateKey, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.entries.remove(&key);
                }
            }
            None => {
                self.entries.insert(key, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVector) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.entries {
            self.add_entry(k.clone(), &(c * v));
        }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_entry(k.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVector {
        if c.is_zero() {
            return Self::new();
        }
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }
}

/// Incrementally row-reduced basis of a subspace.
///
/// Each stored vector is keyed by its pivot, its smallest coordinate, where it
/// has value one. No stored vector has a nonzero entry at another vector's
/// pivot.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    rows: BTreeMap<CoordinateKey, SparseVector>,
}

impl SpanBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Stored vectors in pivot order.
    pub fn vectors(&self) -> impl Iterator<Item = (&CoordinateKey, &SparseVector)> + '_ {
        self.rows.iter()
    }

    /// Residual of `v` modulo the span: zero exactly when `v` lies in it.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        // Stored rows vanish on every other pivot, so subtracting one row never
        // changes `v` at the remaining pivots and one pass suffices.
        let hits: Vec<(CoordinateKey, Scalar)> = v
            .iter()
            .filter(|(k, _)| self.rows.contains_key(*k))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        let mut out = v.clone();
        for (k, c) in hits {
            out.axpy(&-&c, &self.rows[&k]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let pivot = pivot.clone();
        let r = r.scale(&lead.inverse().expect("leading entry is nonzero"));
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                row.axpy(&-&c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }
}
