//! Finite-dimensional Lie algebras and PBW normal forms in their universal
//! enveloping algebras.

use super::{AlgebraElement, BasisIndex};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A Lie algebra on generators `x_0, .., x_{d-1}` given by bracket constants
/// `[x_i, x_j] = sum_k c_{ij}^k x_k`, with a fixed PBW order on generators.
///
/// Construction rejects constants that are not alternating or that violate the
/// Jacobi identity, so every value of this type is a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    /// `constants[(i * d + j) * d + k] = c_{ij}^k`, original numbering.
    constants: Vec<Scalar>,
    /// PBW position -> original generator.
    order: Vec<usize>,
    /// original generator -> PBW position.
    position: Vec<usize>,
    /// `[x_a, x_b]` for PBW positions `a, b`, as (position, coefficient) terms.
    ranked: Vec<Vec<(u32, Scalar)>>,
}

impl LieAlgebra {
    /// `order` lists the original generators from smallest to largest in the
    /// PBW order; `None` keeps index order.
    pub fn new(
        field: Field,
        dim: usize,
        constants: Vec<Scalar>,
        order: Option<Vec<usize>>,
    ) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::TableShape {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        if let Some(c) = constants.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field.to_string(),
                found: c.field().to_string(),
            });
        }
        let order = order.unwrap_or_else(|| (0..dim).collect());
        let mut position = vec![usize::MAX; dim];
        if order.len() != dim {
            return Err(Error::InvalidOrder { dim });
        }
        for (p, &g) in order.iter().enumerate() {
            if g >= dim || position[g] != usize::MAX {
                return Err(Error::InvalidOrder { dim });
            }
            position[g] = p;
        }
        let c = |i: usize, j: usize, k: usize| &constants[(i * dim + j) * dim + k];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let alternating = if i == j {
                        c(i, i, k).is_zero()
                    } else {
                        (c(i, j, k) + c(j, i, k)).is_zero()
                    };
                    if !alternating {
                        return Err(Error::NotAlternating { i, j });
                    }
                }
            }
        }
        let mut ranked = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let (i, j) = (order[a], order[b]);
                ranked.push(
                    (0..dim)
                        .filter(|&k| !c(i, j, k).is_zero())
                        .map(|k| (position[k] as u32, c(i, j, k).clone()))
                        .collect(),
                );
            }
        }
        let lie = LieAlgebra {
            field,
            dim,
            constants,
            order,
            position,
            ranked,
        };
        lie.check_jacobi()?;
        Ok(lie)
    }

    /// The abelian Lie algebra of dimension `dim`.
    pub fn abelian(field: Field, dim: usize) -> Self {
        Self::new(field, dim, vec![field.zero(); dim * dim * dim], None)
            .expect("zero bracket is a Lie bracket")
    }

    /// `sl_2` with basis `e = x_0, h = x_1, f = x_2`:
    /// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`, PBW order `e < h < f`.
    pub fn sl2(field: Field) -> Self {
        let mut t = vec![field.zero(); 27];
        let mut set = |i: usize, j: usize, k: usize, v: i64| {
            t[(i * 3 + j) * 3 + k] = field.from_i64(v);
            t[(j * 3 + i) * 3 + k] = field.from_i64(-v);
        };
        set(0, 2, 1, 1);
        set(1, 0, 0, 2);
        set(1, 2, 2, -2);
        Self::new(field, 3, t, None).expect("sl2 satisfies Jacobi")
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut total = AlgebraElement::zero();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_basis(a, b);
                        let x = AlgebraElement::monomial(BasisIndex::Slot(c), self.field.one());
                        total.add_assign(&self.bracket_unchecked(&inner, &x));
                    }
                    if !total.is_zero() {
                        return Err(Error::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Original generator indices from smallest to largest PBW position.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// `[x_i, x_j]` as an element over slots `e_k = x_k`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> AlgebraElement {
        AlgebraElement::from_terms(
            (0..self.dim).map(|k| (BasisIndex::Slot(k), self.constant(i, j, k).clone())),
        )
    }

    /// The Lie bracket of two elements written over slots.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        for (idx, c) in x.terms().chain(y.terms()) {
            match idx {
                BasisIndex::Slot(s) if *s < self.dim => {}
                _ => {
                    return Err(Error::InvalidIndex {
                        index: format!("{idx:?}"),
                        algebra: format!("Lie algebra of dimension {}", self.dim),
                    })
                }
            }
            if c.field() != self.field {
                return Err(Error::FieldMismatch {
                    expected: self.field.to_string(),
                    found: c.field().to_string(),
                });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                if let (BasisIndex::Slot(i), BasisIndex::Slot(j)) = (a, b) {
                    out.add_scaled(&(ca * cb), &self.bracket_basis(*i, *j));
                }
            }
        }
        out
    }

    /// The generator `x_g` (original numbering) inside the enveloping algebra.
    pub fn pbw_generator(&self, g: usize) -> AlgebraElement {
        AlgebraElement::monomial(
            BasisIndex::Pbw(vec![self.position[g] as u32]),
            self.field.one(),
        )
    }

    /// Image of a Lie algebra element (over slots) in the enveloping algebra.
    pub fn embed(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (idx, c) in x.terms() {
            match idx {
                BasisIndex::Slot(s) if *s < self.dim => out.add_scaled(c, &self.pbw_generator(*s)),
                _ => {
                    return Err(Error::InvalidIndex {
                        index: format!("{idx:?}"),
                        algebra: format!("Lie algebra of dimension {}", self.dim),
                    })
                }
            }
        }
        Ok(out)
    }

    /// PBW normal form of the product `x_{w_1} x_{w_2} .. x_{w_n}` of
    /// generators given in original numbering.
    pub fn straighten(&self, word: &[usize]) -> Result<AlgebraElement> {
        if let Some(&g) = word.iter().find(|&&g| g >= self.dim) {
            return Err(Error::InvalidIndex {
                index: format!("generator {g}"),
                algebra: format!("Lie algebra of dimension {}", self.dim),
            });
        }
        let mut acc = AlgebraElement::monomial(BasisIndex::Pbw(Vec::new()), self.field.one());
        for &g in word {
            acc = self.mul_generator(&acc, self.position[g] as u32);
        }
        Ok(acc)
    }

    /// Product of two sorted PBW monomials (positions).
    pub(crate) fn mul_monomials(&self, a: &[u32], b: &[u32]) -> AlgebraElement {
        let mut acc = AlgebraElement::monomial(BasisIndex::Pbw(a.to_vec()), self.field.one());
        for &g in b {
            acc = self.mul_generator(&acc, g);
        }
        acc
    }

    fn mul_generator(&self, x: &AlgebraElement, g: u32) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (idx, c) in x.terms() {
            if let BasisIndex::Pbw(m) = idx {
                out.add_scaled(c, &self.monomial_times_generator(m, g));
            }
        }
        out
    }

    /// `m * x_g` for a sorted monomial `m`. Writing `m = m' x_j` with `j > g`,
    /// `m' x_j x_g = (m' x_g) x_j + m' [x_j, x_g]`; both summands have either
    /// a shorter prefix or lower degree, so the recursion terminates.
    fn monomial_times_generator(&self, m: &[u32], g: u32) -> AlgebraElement {
        match m.last() {
            Some(&j) if j > g => {
                let prefix = &m[..m.len() - 1];
                let mut out = self.mul_generator(&self.monomial_times_generator(prefix, g), j);
                for (k, c) in &self.ranked[j as usize * self.dim + g as usize] {
                    out.add_scaled(c, &self.monomial_times_generator(prefix, *k));
                }
                out
            }
            _ => {
                let mut w = m.to_vec();
                w.push(g);
                AlgebraElement::monomial(BasisIndex::Pbw(w), self.field.one())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pbw(lie: &LieAlgebra, w: &[u32]) -> AlgebraElement {
        AlgebraElement::monomial(BasisIndex::Pbw(w.to_vec()), lie.field().one())
    }

    #[test]
    fn abelian_sorts() {
        let lie = LieAlgebra::abelian(Field::Rational, 2);
        assert_eq!(lie.straighten(&[1, 0]).unwrap(), pbw(&lie, &[0, 1]));
    }

    #[test]
    fn sl2_fe() {
        let lie = LieAlgebra::sl2(Field::Rational);
        // f e = e f - h
        let expected = pbw(&lie, &[0, 2]).sub(&pbw(&lie, &[1]));
        assert_eq!(lie.straighten(&[2, 0]).unwrap(), expected);
    }

    #[test]
    fn custom_order_reindexes() {
        // order f < h < e: positions are f=0, h=1, e=2
        let q = Field::Rational;
        let std = LieAlgebra::sl2(q);
        let mut t = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    t.push(std.constant(i, j, k).clone());
                }
            }
        }
        let lie = LieAlgebra::new(q, 3, t, Some(vec![2, 1, 0])).unwrap();
        // e f = f e + h  with f at position 0, e at position 2
        let expected = pbw(&lie, &[0, 2]).add(&pbw(&lie, &[1]));
        assert_eq!(lie.straighten(&[0, 2]).unwrap(), expected);
        assert!(LieAlgebra::new(q, 3, vec![q.zero(); 27], Some(vec![0, 0, 1])).is_err());
    }

    #[test]
    fn rejects_non_alternating() {
        let q = Field::Rational;
        let mut t = vec![q.zero(); 8];
        // c_{01}^0 = 1 with c_{10}^0 = 0
        t[2] = q.one();
        assert_eq!(
            LieAlgebra::new(q, 2, t, None),
            Err(Error::NotAlternating { i: 0, j: 1 })
        );
    }

    #[test]
    fn rejects_jacobi_violation() {
        // [x0,x1] = x1, [x1,x2] = x0: the Jacobiator of (x0,x1,x2) is x0
        let q = Field::Rational;
        let mut t = vec![q.zero(); 27];
        let mut set = |i: usize, j: usize, k: usize| {
            t[(i * 3 + j) * 3 + k] = q.one();
            t[(j * 3 + i) * 3 + k] = q.from_i64(-1);
        };
        set(0, 1, 1);
        set(1, 2, 0);
        assert_eq!(
            LieAlgebra::new(q, 3, t, None),
            Err(Error::Jacobi { i: 0, j: 1, k: 2 })
        );
    }

    #[test]
    fn bracket_validates_indices() {
        let lie = LieAlgebra::sl2(Field::Rational);
        let bad = AlgebraElement::monomial(BasisIndex::Slot(5), Field::Rational.one());
        assert!(lie.bracket(&bad, &bad).is_err());
        let e = AlgebraElement::monomial(BasisIndex::Slot(0), Field::Rational.one());
        let f = AlgebraElement::monomial(BasisIndex::Slot(2), Field::Rational.one());
        assert_eq!(lie.bracket(&e, &f).unwrap(), lie.bracket_basis(0, 2));
    }
}
