//! Exact sparse row reduction and growth functions `g(V, n) = dim V^n`.

mod basis;
mod growth;
mod table;

pub use basis::{CoordinateKey, SpanBasis, SparseVector};
pub use growth::{
    assoc_filtration, assoc_growth, brute_force_span, filtration_with, lie_filtration, lie_growth,
    Ambient, Associative, AssociativeAmbient, Commutator, Derived, Filtration, LieAmbient, Ring,
    BRUTE_FORCE_CAP,
};
pub use table::{asym_leq, GrowthKind, GrowthTable};

use crate::algebra::{AlgebraElement, BaseAlgebra, LieAlgebra};
use crate::error::Result;

/// Coordinates of a base-algebra element: one `Base` key per term.
pub fn base_coordinates(x: &AlgebraElement) -> SparseVector {
    SparseVector::from_entries(
        x.terms()
            .map(|(i, c)| (CoordinateKey::Base(i.clone()), c.clone())),
    )
}

impl Ring for BaseAlgebra {
    type Element = AlgebraElement;

    fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        BaseAlgebra::mul(self, x, y)
    }

    fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        x.sub(y)
    }

    fn coordinates(&self, x: &AlgebraElement) -> SparseVector {
        base_coordinates(x)
    }
}

/// A Lie algebra given by structure constants, under its own bracket.
impl Ambient for LieAlgebra {
    type Element = AlgebraElement;

    fn product(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.bracket(x, y)
    }

    fn coordinates(&self, x: &AlgebraElement) -> SparseVector {
        base_coordinates(x)
    }
}

impl LieAmbient for LieAlgebra {}
