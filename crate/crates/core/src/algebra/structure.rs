use super::{AlgebraElement, BasisIndex};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Multiplication table of a finite-dimensional algebra with basis
/// `e_0, .., e_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    field: Field,
    dim: usize,
    /// `products[i * dim + j] = e_i * e_j`
    products: Vec<AlgebraElement>,
    unit: Option<AlgebraElement>,
}

impl StructureConstants {
    /// `table[(i * d + j) * d + k]` is the coefficient of `e_k` in `e_i e_j`.
    /// A declared `unit` (coordinates in the slot basis) must satisfy the unit
    /// law on every slot.
    pub fn new(
        field: Field,
        dim: usize,
        table: Vec<Scalar>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        if table.len() != dim * dim * dim {
            return Err(Error::TableShape {
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        check_field(field, &table)?;
        let products = table
            .chunks(dim.max(1))
            .take(dim * dim)
            .map(slot_vector)
            .collect();
        let unit = match unit {
            None => None,
            Some(u) => {
                if u.len() != dim {
                    return Err(Error::TableShape {
                        expected: dim,
                        found: u.len(),
                    });
                }
                check_field(field, &u)?;
                Some(slot_vector(&u))
            }
        };
        let sc = StructureConstants {
            field,
            dim,
            products,
            unit,
        };
        if let Some(u) = &sc.unit {
            for s in 0..dim {
                let e = AlgebraElement::monomial(BasisIndex::Slot(s), field.one());
                if sc.mul(u, &e) != e || sc.mul(&e, u) != e {
                    return Err(Error::UnitLaw { slot: s });
                }
            }
        }
        Ok(sc)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&AlgebraElement> {
        self.unit.as_ref()
    }

    pub(crate) fn product(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.products[i * self.dim + j]
    }

    fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                if let (BasisIndex::Slot(i), BasisIndex::Slot(j)) = (a, b) {
                    out.add_scaled(&(ca * cb), self.product(*i, *j));
                }
            }
        }
        out
    }

    /// The unitization `F·1 ⊕ A`: the new unit is slot `d`, existing slots keep
    /// their numbers. A table that already declares a unit is returned as is.
    pub fn adjoin_unit(&self) -> StructureConstants {
        if self.unit.is_some() {
            return self.clone();
        }
        let d = self.dim + 1;
        let unit_slot = self.dim;
        let unit = AlgebraElement::monomial(BasisIndex::Slot(unit_slot), self.field.one());
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                products.push(if i == unit_slot {
                    AlgebraElement::monomial(BasisIndex::Slot(j), self.field.one())
                } else if j == unit_slot {
                    AlgebraElement::monomial(BasisIndex::Slot(i), self.field.one())
                } else {
                    self.product(i, j).clone()
                });
            }
        }
        StructureConstants {
            field: self.field,
            dim: d,
            products,
            unit: Some(unit),
        }
    }
}

fn check_field(field: Field, values: &[Scalar]) -> Result<()> {
    match values.iter().find(|c| c.field() != field) {
        Some(c) => Err(Error::FieldMismatch {
            expected: field.to_string(),
            found: c.field().to_string(),
        }),
        None => Ok(()),
    }
}

fn slot_vector(coords: &[Scalar]) -> AlgebraElement {
    AlgebraElement::from_terms(
        coords
            .iter()
            .enumerate()
            .map(|(k, c)| (BasisIndex::Slot(k), c.clone())),
    )
}
