use std::collections::HashSet;

use rayon::prelude::*;

use super::{GrowthKind, GrowthTable, SpanBasis, SparseVector};
use crate::error::{Error, Result};

/// A space with a bilinear product and linear coordinates.
pub trait Ambient: Sync {
    type Element: Clone + Send + Sync;

    fn product(&self, x: &Self::Element, y: &Self::Element) -> Result<Self::Element>;

    /// Injective linear coordinates of an element.
    fn coordinates(&self, x: &Self::Element) -> SparseVector;
}

/// Ambients whose product is associative: length-`n` products of generators
/// all rebracket to left-normed ones.
pub trait AssociativeAmbient: Ambient {}

/// Ambients whose product is a Lie bracket.
pub trait LieAmbient: Ambient {}

/// An associative algebra: the common shape of base algebras and the banded
/// calculus.
pub trait Ring: Sync {
    type Element: Clone + Send + Sync;

    fn mul(&self, x: &Self::Element, y: &Self::Element) -> Result<Self::Element>;
    fn sub(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn coordinates(&self, x: &Self::Element) -> SparseVector;
}

/// A ring with its own product.
pub struct Associative<'a, R>(pub &'a R);

/// A ring under the commutator `[x, y] = xy - yx`.
pub struct Commutator<'a, R>(pub &'a R);

impl<R: Ring> Ambient for Associative<'_, R> {
    type Element = R::Element;

    fn product(&self, x: &R::Element, y: &R::Element) -> Result<R::Element> {
        self.0.mul(x, y)
    }

    fn coordinates(&self, x: &R::Element) -> SparseVector {
        self.0.coordinates(x)
    }
}

impl<R: Ring> AssociativeAmbient for Associative<'_, R> {}

impl<R: Ring> Ambient for Commutator<'_, R> {
    type Element = R::Element;

    fn product(&self, x: &R::Element, y: &R::Element) -> Result<R::Element> {
        let xy = self.0.mul(x, y)?;
        let yx = self.0.mul(y, x)?;
        Ok(self.0.sub(&xy, &yx))
    }

    fn coordinates(&self, x: &R::Element) -> SparseVector {
        self.0.coordinates(x)
    }
}

impl<R: Ring> LieAmbient for Commutator<'_, R> {}

/// An element of the spanning set together with the generator sequence whose
/// left-normed product produced it.
#[derive(Clone, Debug)]
pub struct Derived<E> {
    pub element: E,
    pub word: Vec<usize>,
}

/// The filtration `V^1 ⊆ V^2 ⊆ ..` of a generating set, with the spanning
/// elements that raised the dimension at each step.
#[derive(Clone, Debug)]
pub struct Filtration<E> {
    pub table: GrowthTable,
    /// `layers[n - 1]`: products of length `n` that are new modulo `V^{n-1}`.
    /// Together the first `n` layers form a basis of `V^n`.
    pub layers: Vec<Vec<Derived<E>>>,
    /// Reduced basis of `V^{n_max}`.
    pub basis: SpanBasis,
}

impl<E> Filtration<E> {
    /// Reduced basis of `V^n`, rebuilt from the first `n` layers.
    pub fn basis_at<A: Ambient<Element = E>>(&self, ambient: &A, n: usize) -> SpanBasis {
        let mut b = SpanBasis::new();
        for layer in self.layers.iter().take(n) {
            for d in layer {
                b.insert(&ambient.coordinates(&d.element));
            }
        }
        b
    }

    /// Every basis element of `V^{n_max}`, in the order found.
    pub fn elements(&self) -> impl Iterator<Item = &Derived<E>> + '_ {
        self.layers.iter().flatten()
    }
}

/// Computes the filtration generated by `gens` under the ambient product.
///
/// Uses `V^n = V^{n-1} + F_{n-1} V`, where `F_{n-1}` are the elements that
/// grew the span at step `n - 1`; this needs only left-normed products, valid
/// for associative products and (by the left-normed spanning property) for Lie
/// brackets. `visit` sees every candidate product of step `n`, grown or not.
/// Products are formed in parallel and inserted in a fixed order, so the result
/// does not depend on the thread count.
pub fn filtration_with<A: Ambient>(
    ambient: &A,
    gens: &[A::Element],
    n_max: usize,
    kind: GrowthKind,
    mut visit: impl FnMut(usize, &Derived<A::Element>),
) -> Result<Filtration<A::Element>> {
    if n_max < 1 {
        return Err(Error::InvalidLength(n_max));
    }
    let mut basis = SpanBasis::new();
    let mut layers = Vec::with_capacity(n_max);
    let mut dims = Vec::with_capacity(n_max);

    let mut layer = Vec::new();
    for (g, x) in gens.iter().enumerate() {
        let d = Derived {
            element: x.clone(),
            word: vec![g],
        };
        visit(1, &d);
        if basis.insert(&ambient.coordinates(x)) {
            layer.push(d);
        }
    }
    dims.push(basis.dim() as u64);
    layers.push(layer);

    for n in 2..=n_max {
        let frontier = layers.last().expect("at least one layer");
        let pairs: Vec<(usize, usize)> = (0..frontier.len())
            .flat_map(|f| (0..gens.len()).map(move |g| (f, g)))
            .collect();
        let candidates: Vec<(Derived<A::Element>, SparseVector)> = pairs
            .par_iter()
            .map(|&(f, g)| {
                let src: &Derived<A::Element> = &frontier[f];
                let element = ambient.product(&src.element, &gens[g])?;
                let coords = ambient.coordinates(&element);
                let mut word = src.word.clone();
                word.push(g);
                Ok((Derived { element, word }, coords))
            })
            .collect::<Result<_>>()?;
        let mut layer = Vec::new();
        for (d, coords) in candidates {
            visit(n, &d);
            if basis.insert(&coords) {
                layer.push(d);
            }
        }
        dims.push(basis.dim() as u64);
        layers.push(layer);
    }
    let table = GrowthTable::new(kind, dims);
    debug_assert!(table.is_monotone());
    Ok(Filtration {
        table,
        layers,
        basis,
    })
}

pub fn assoc_filtration<A: AssociativeAmbient>(
    ambient: &A,
    gens: &[A::Element],
    n_max: usize,
) -> Result<Filtration<A::Element>> {
    filtration_with(ambient, gens, n_max, GrowthKind::Associative, |_, _| {})
}

pub fn lie_filtration<A: LieAmbient>(
    ambient: &A,
    gens: &[A::Element],
    n_max: usize,
) -> Result<Filtration<A::Element>> {
    filtration_with(ambient, gens, n_max, GrowthKind::Lie, |_, _| {})
}

/// `g(V, n)` for `n = 1..=n_max` in an associative ambient.
pub fn assoc_growth<A: AssociativeAmbient>(
    ambient: &A,
    gens: &[A::Element],
    n_max: usize,
) -> Result<GrowthTable> {
    Ok(assoc_filtration(ambient, gens, n_max)?.table)
}

/// Dimension of the span of all bracket arrangements of at most `n`
/// generators, for `n = 1..=n_max`.
pub fn lie_growth<A: LieAmbient>(
    ambient: &A,
    gens: &[A::Element],
    n_max: usize,
) -> Result<GrowthTable> {
    Ok(lie_filtration(ambient, gens, n_max)?.table)
}

/// Default cap on `n` for [`brute_force_span`].
pub const BRUTE_FORCE_CAP: usize = 6;

/// Dimension of the span of every full binary bracketing of every sequence of
/// at most `n` generators. Cost grows like Catalan numbers; meant for tests.
pub fn brute_force_span<A: Ambient>(
    ambient: &A,
    gens: &[A::Element],
    n: usize,
    cap: usize,
) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidLength(n));
    }
    if n > cap {
        return Err(Error::BruteForceCap { n, cap });
    }
    // products[k - 1]: distinct values of all bracketings of length k
    let mut products: Vec<Vec<A::Element>> = Vec::with_capacity(n);
    let mut span = SpanBasis::new();
    for k in 1..=n {
        let mut seen: HashSet<SparseVector> = HashSet::new();
        let mut level = Vec::new();
        let keep =
            |x: A::Element, seen: &mut HashSet<SparseVector>, level: &mut Vec<A::Element>| {
                let c = ambient.coordinates(&x);
                if seen.insert(c) {
                    level.push(x);
                }
            };
        if k == 1 {
            for g in gens {
                keep(g.clone(), &mut seen, &mut level);
            }
        } else {
            for left in 1..k {
                for x in &products[left - 1] {
                    for y in &products[k - left - 1] {
                        keep(ambient.product(x, y)?, &mut seen, &mut level);
                    }
                }
            }
        }
        for x in &level {
            span.insert(&ambient.coordinates(x));
        }
        products.push(level);
    }
    Ok(span.dim())
}
