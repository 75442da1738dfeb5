//! Basis-indexed associative algebras over an exact field.
//!
//! Every algebra exposes a basis of [`BasisIndex`] values and a bilinear
//! product computed basis element by basis element. Elements are finitely
//! supported maps from basis indices to scalars ([`AlgebraElement`]).

mod element;
mod index;
mod lie;
mod structure;

use std::fmt;

pub use element::AlgebraElement;
pub use index::BasisIndex;
pub use lie::LieAlgebra;
pub use structure::StructureConstants;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// The kinds of base algebra the crate can multiply in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Finite-dimensional algebra given by a multiplication table.
    StructureConstants(StructureConstants),
    /// Commutative polynomials in `variables` variables. Zero variables gives
    /// the ground field itself.
    Polynomial { variables: usize },
    /// Free associative algebra on `generators` letters.
    FreeAssociative { generators: usize },
    /// Universal enveloping algebra of a finite-dimensional Lie algebra, in
    /// PBW normal form.
    Enveloping(LieAlgebra),
    /// 2x2 matrices over a unital inner algebra.
    MatrixExtension(Box<BaseAlgebra>),
}

/// A base algebra together with its coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseAlgebra {
    field: Field,
    kind: AlgebraKind,
}

impl BaseAlgebra {
    pub fn polynomial(field: Field, variables: usize) -> Self {
        BaseAlgebra {
            field,
            kind: AlgebraKind::Polynomial { variables },
        }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field(field: Field) -> Self {
        Self::polynomial(field, 0)
    }

    pub fn free_associative(field: Field, generators: usize) -> Self {
        BaseAlgebra {
            field,
            kind: AlgebraKind::FreeAssociative { generators },
        }
    }

    pub fn structure_constants(table: StructureConstants) -> Self {
        BaseAlgebra {
            field: table.field(),
            kind: AlgebraKind::StructureConstants(table),
        }
    }

    pub fn enveloping(lie: LieAlgebra) -> Self {
        BaseAlgebra {
            field: lie.field(),
            kind: AlgebraKind::Enveloping(lie),
        }
    }

    /// `M_2(inner)`. Fails when `inner` has no unit.
    pub fn matrix_extend(inner: BaseAlgebra) -> Result<Self> {
        inner.one()?;
        Ok(BaseAlgebra {
            field: inner.field,
            kind: AlgebraKind::MatrixExtension(Box::new(inner)),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.field.from_i64(n)
    }

    /// The basis element `idx` with coefficient one.
    pub fn basis_element(&self, idx: BasisIndex) -> Result<AlgebraElement> {
        self.validate(&idx)?;
        Ok(AlgebraElement::monomial(idx, self.field.one()))
    }

    pub fn is_unital(&self) -> bool {
        self.one().is_ok()
    }

    pub fn one(&self) -> Result<AlgebraElement> {
        let f = self.field;
        match &self.kind {
            AlgebraKind::StructureConstants(sc) => sc.unit().cloned().ok_or(Error::NoUnit),
            AlgebraKind::Polynomial { variables } => Ok(AlgebraElement::monomial(
                BasisIndex::Exponents(vec![0; *variables]),
                f.one(),
            )),
            AlgebraKind::FreeAssociative { .. } => Ok(AlgebraElement::monomial(
                BasisIndex::Word(Vec::new()),
                f.one(),
            )),
            AlgebraKind::Enveloping(_) => Ok(AlgebraElement::monomial(
                BasisIndex::Pbw(Vec::new()),
                f.one(),
            )),
            AlgebraKind::MatrixExtension(inner) => {
                let unit = inner.one()?;
                let mut out = AlgebraElement::zero();
                for d in 1..=2 {
                    out.add_assign(&embed_matrix(d, d, &unit));
                }
                Ok(out)
            }
        }
    }

    /// The Lie generators `x_0, .., x_{d-1}` of an enveloping algebra, in
    /// their original numbering.
    pub fn lie_generators(&self) -> Option<Vec<AlgebraElement>> {
        match &self.kind {
            AlgebraKind::Enveloping(lie) => {
                Some((0..lie.dim()).map(|g| lie.pbw_generator(g)).collect())
            }
            _ => None,
        }
    }

    /// The element `e_{row,col}(a)` of `M_2(inner)`.
    pub fn matrix_unit(&self, row: u8, col: u8, a: &AlgebraElement) -> Result<AlgebraElement> {
        match &self.kind {
            AlgebraKind::MatrixExtension(inner)
                if (1..=2).contains(&row) && (1..=2).contains(&col) =>
            {
                inner.check(a)?;
                Ok(embed_matrix(row, col, a))
            }
            _ => Err(Error::InvalidIndex {
                index: format!("E{row}{col}"),
                algebra: self.to_string(),
            }),
        }
    }

    /// Checks that `idx` names a basis element of this algebra.
    pub fn validate(&self, idx: &BasisIndex) -> Result<()> {
        let ok = match (&self.kind, idx) {
            (AlgebraKind::StructureConstants(sc), BasisIndex::Slot(s)) => *s < sc.dim(),
            (AlgebraKind::Polynomial { variables }, BasisIndex::Exponents(e)) => {
                e.len() == *variables
            }
            (AlgebraKind::FreeAssociative { generators }, BasisIndex::Word(w)) => {
                w.iter().all(|&g| (g as usize) < *generators)
            }
            (AlgebraKind::Enveloping(lie), BasisIndex::Pbw(w)) => {
                w.iter().all(|&g| (g as usize) < lie.dim()) && w.windows(2).all(|p| p[0] <= p[1])
            }
            (AlgebraKind::MatrixExtension(inner), BasisIndex::Matrix { row, col, inner: i }) => {
                return if (1..=2).contains(row) && (1..=2).contains(col) {
                    inner.validate(i)
                } else {
                    Err(self.invalid(idx))
                };
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.invalid(idx))
        }
    }

    fn invalid(&self, idx: &BasisIndex) -> Error {
        Error::InvalidIndex {
            index: format!("{idx:?}"),
            algebra: self.to_string(),
        }
    }

    /// Checks every index and coefficient of `x` against this algebra.
    pub fn check(&self, x: &AlgebraElement) -> Result<()> {
        for (idx, c) in x.terms() {
            self.validate(idx)?;
            if c.field() != self.field {
                return Err(Error::FieldMismatch {
                    expected: self.field.to_string(),
                    found: c.field().to_string(),
                });
            }
        }
        Ok(())
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: &BasisIndex, j: &BasisIndex) -> Result<AlgebraElement> {
        self.validate(i)?;
        self.validate(j)?;
        Ok(self.mul_basis_unchecked(i, j))
    }

    fn mul_basis_unchecked(&self, i: &BasisIndex, j: &BasisIndex) -> AlgebraElement {
        let one = || self.field.one();
        match (&self.kind, i, j) {
            (AlgebraKind::StructureConstants(sc), BasisIndex::Slot(a), BasisIndex::Slot(b)) => {
                sc.product(*a, *b).clone()
            }
            (
                AlgebraKind::Polynomial { .. },
                BasisIndex::Exponents(a),
                BasisIndex::Exponents(b),
            ) => {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                AlgebraElement::monomial(BasisIndex::Exponents(e), one())
            }
            (AlgebraKind::FreeAssociative { .. }, BasisIndex::Word(a), BasisIndex::Word(b)) => {
                let w = a.iter().chain(b).copied().collect();
                AlgebraElement::monomial(BasisIndex::Word(w), one())
            }
            (AlgebraKind::Enveloping(lie), BasisIndex::Pbw(a), BasisIndex::Pbw(b)) => {
                lie.mul_monomials(a, b)
            }
            (
                AlgebraKind::MatrixExtension(inner),
                BasisIndex::Matrix {
                    row: r,
                    col: s,
                    inner: a,
                },
                BasisIndex::Matrix {
                    row: t,
                    col: u,
                    inner: b,
                },
            ) => {
                if s != t {
                    AlgebraElement::zero()
                } else {
                    embed_matrix(*r, *u, &inner.mul_basis_unchecked(a, b))
                }
            }
            _ => unreachable!("indices validated before multiplication"),
        }
    }

    /// Bilinear product `x * y`.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = AlgebraElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let c = a * b;
                out.add_scaled(&c, &self.mul_basis_unchecked(i, j));
            }
        }
        Ok(out)
    }

    /// `x * y - y * x`.
    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let xy = self.mul(x, y)?;
        let yx = self.mul(y, x)?;
        Ok(xy.sub(&yx))
    }

    /// All basis indices of degree at most `max_degree`, in basis order.
    /// Structure-constant algebras return every slot.
    pub fn sample_basis(&self, max_degree: usize) -> Vec<BasisIndex> {
        let mut out = match &self.kind {
            AlgebraKind::StructureConstants(sc) => (0..sc.dim()).map(BasisIndex::Slot).collect(),
            AlgebraKind::Polynomial { variables } => exponent_vectors(*variables, max_degree)
                .into_iter()
                .map(BasisIndex::Exponents)
                .collect(),
            AlgebraKind::FreeAssociative { generators } => {
                let mut words = vec![Vec::new()];
                let mut layer = vec![Vec::new()];
                for _ in 0..max_degree {
                    layer = layer
                        .iter()
                        .flat_map(|w: &Vec<u32>| {
                            (0..*generators as u32).map(move |g| {
                                let mut w = w.clone();
                                w.push(g);
                                w
                            })
                        })
                        .collect();
                    words.extend(layer.iter().cloned());
                }
                words.into_iter().map(BasisIndex::Word).collect()
            }
            AlgebraKind::Enveloping(lie) => exponent_vectors(lie.dim(), max_degree)
                .into_iter()
                .map(|e| {
                    let w = e
                        .iter()
                        .enumerate()
                        .flat_map(|(g, &k)| std::iter::repeat_n(g as u32, k as usize))
                        .collect();
                    BasisIndex::Pbw(w)
                })
                .collect(),
            AlgebraKind::MatrixExtension(inner) => {
                let inner_basis = inner.sample_basis(max_degree);
                let mut v = Vec::new();
                for row in 1..=2 {
                    for col in 1..=2 {
                        for i in &inner_basis {
                            v.push(BasisIndex::Matrix {
                                row,
                                col,
                                inner: Box::new(i.clone()),
                            });
                        }
                    }
                }
                v
            }
        };
        out.sort();
        out
    }
}

fn embed_matrix(row: u8, col: u8, a: &AlgebraElement) -> AlgebraElement {
    a.map_indices(|i| BasisIndex::Matrix {
        row,
        col,
        inner: Box::new(i.clone()),
    })
}

fn exponent_vectors(vars: usize, max_degree: usize) -> Vec<Vec<u32>> {
    fn go(vars: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == vars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            go(vars, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, max_degree as u32, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for BaseAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AlgebraKind::StructureConstants(sc) => {
                write!(f, "StructureConstants(d={}) over {}", sc.dim(), self.field)
            }
            AlgebraKind::Polynomial { variables: 0 } => write!(f, "{}", self.field),
            AlgebraKind::Polynomial { variables } => {
                write!(f, "Polynomial({variables}) over {}", self.field)
            }
            AlgebraKind::FreeAssociative { generators } => {
                write!(f, "FreeAssociative({generators}) over {}", self.field)
            }
            AlgebraKind::Enveloping(lie) => {
                write!(f, "U(L), dim L = {}, over {}", lie.dim(), self.field)
            }
            AlgebraKind::MatrixExtension(inner) => write!(f, "M_2({inner})"),
        }
    }
}
