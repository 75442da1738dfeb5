use std::collections::BTreeMap;
use std::fmt;

use super::BasisIndex;
use crate::scalar::Scalar;

/// A finite linear combination of basis elements.
///
/// No stored coefficient is zero, so structural equality is equality of
/// elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisIndex, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * idx`, or zero when `c` is zero.
    pub fn monomial(idx: BasisIndex, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(idx, c);
        }
        AlgebraElement { terms }
    }

    /// Builds an element from arbitrary terms, summing repeats and dropping
    /// zeros.
    pub fn from_terms<I: IntoIterator<Item = (BasisIndex, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (idx, c) in terms {
            out.add_term(idx, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &BasisIndex) -> Option<&Scalar> {
        self.terms.get(idx)
    }

    /// Largest degree among the support, zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(BasisIndex::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, idx: BasisIndex, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &AlgebraElement) {
        if c.is_zero() {
            return;
        }
        for (idx, v) in &other.terms {
            self.add_term(idx.clone(), &(c * v));
        }
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        for (idx, v) in &other.terms {
            self.add_term(idx.clone(), v);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (idx, v) in &other.terms {
            out.add_term(idx.clone(), &-v);
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coefficients(|v| v * c)
    }

    fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
        }
    }

    /// Relabels every index. `f` must be injective.
    pub(crate) fn map_indices(&self, f: impl Fn(&BasisIndex) -> BasisIndex) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(k, v)| (f(k), v.clone())).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{idx}")?;
            } else {
                write!(f, "{c}*{idx}")?;
            }
        }
        Ok(())
    }
}
