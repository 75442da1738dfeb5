//! Infinite `N x N` matrices over a base algebra that are a finite sum of
//! bands and matrix units.
//!
//! For `k >= 0`, `E_k(a) = sum_{i>=1} e_{i,i+k}(a)`; for `k <= -1`,
//! `E_k(a) = sum_{i>=1} e_{i-k,i}(a)`. Either way `E_k(a)` places `a` at every
//! position `(i, j)` with `j - i = k` and `i, j >= 1`. A [`BandedElement`]
//! stores the eventual value of each diagonal (its band) and the finitely many
//! positions where the entry deviates from it (its cells). Since a nonzero band
//! has infinitely many nonzero entries, this representation is unique once
//! zero values are dropped.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgebraElement, BaseAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::span::{CoordinateKey, Ring, SparseVector};

/// Position `(row, col)` of a matrix unit, both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellKey {
    pub row: usize,
    pub col: usize,
}

impl CellKey {
    pub fn new(row: i64, col: i64) -> Result<Self> {
        if row < 1 || col < 1 {
            return Err(Error::InvalidCell { row, col });
        }
        Ok(CellKey {
            row: row as usize,
            col: col as usize,
        })
    }
}

/// `sum e_{i,j}(cells[i,j]) + sum E_k(bands[k])` in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BandedElement {
    cells: BTreeMap<CellKey, AlgebraElement>,
    bands: BTreeMap<i64, AlgebraElement>,
}

impl BandedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The matrix unit `e_{i,j}(a)`.
    pub fn cell(i: i64, j: i64, a: AlgebraElement) -> Result<Self> {
        let key = CellKey::new(i, j)?;
        Ok(Self::canonicalize([(key, a)].into(), BTreeMap::new()))
    }

    /// The band `E_k(a)`.
    pub fn band(k: i64, a: AlgebraElement) -> Self {
        Self::canonicalize(BTreeMap::new(), [(k, a)].into())
    }

    /// Drops zero cell values and zero band coefficients.
    pub fn canonicalize(
        mut cells: BTreeMap<CellKey, AlgebraElement>,
        mut bands: BTreeMap<i64, AlgebraElement>,
    ) -> Self {
        cells.retain(|_, a| !a.is_zero());
        bands.retain(|_, a| !a.is_zero());
        BandedElement { cells, bands }
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_empty() && self.bands.is_empty()
    }

    pub fn cells(&self) -> &BTreeMap<CellKey, AlgebraElement> {
        &self.cells
    }

    pub fn bands(&self) -> &BTreeMap<i64, AlgebraElement> {
        &self.bands
    }

    /// Largest `|k|` over the bands, zero without bands.
    pub fn max_offset(&self) -> u64 {
        self.bands
            .keys()
            .map(|k| k.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &BandedElement) -> BandedElement {
        let mut acc = Accumulator::from(self.clone());
        acc.absorb(other);
        acc.finish()
    }

    pub fn sub(&self, other: &BandedElement) -> BandedElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> BandedElement {
        BandedElement {
            cells: self.cells.iter().map(|(k, a)| (*k, a.neg())).collect(),
            bands: self.bands.iter().map(|(k, a)| (*k, a.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BandedElement {
        Self::canonicalize(
            self.cells.iter().map(|(k, a)| (*k, a.scale(c))).collect(),
            self.bands.iter().map(|(k, a)| (*k, a.scale(c))).collect(),
        )
    }

    /// The entry at `(i, j)`: cell value plus band value on diagonal `j - i`.
    pub fn entry(&self, i: usize, j: usize) -> AlgebraElement {
        let mut out = self
            .cells
            .get(&CellKey { row: i, col: j })
            .cloned()
            .unwrap_or_default();
        if let Some(b) = self.bands.get(&(j as i64 - i as i64)) {
            out.add_assign(b);
        }
        out
    }

    /// The upper-left `m x m` block, `m >= 1`.
    pub fn truncate(&self, m: usize) -> Vec<Vec<AlgebraElement>> {
        (1..=m)
            .map(|i| (1..=m).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// One `Band` coordinate per band term and one `Cell` coordinate per cell
    /// term. Linear and injective on canonical elements.
    pub fn coordinates(&self) -> SparseVector {
        let cells = self.cells.iter().flat_map(|(k, a)| {
            a.terms().map(move |(i, c)| {
                (
                    CoordinateKey::Cell {
                        row: k.row,
                        col: k.col,
                        index: i.clone(),
                    },
                    c.clone(),
                )
            })
        });
        let bands = self.bands.iter().flat_map(|(k, a)| {
            a.terms().map(move |(i, c)| {
                (
                    CoordinateKey::Band {
                        offset: *k,
                        index: i.clone(),
                    },
                    c.clone(),
                )
            })
        });
        SparseVector::from_entries(cells.chain(bands))
    }
}

impl fmt::Display for BandedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in &self.bands {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "E[{k}]({a})")?;
        }
        for (k, a) in &self.cells {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "e[{},{}]({a})", k.row, k.col)?;
        }
        Ok(())
    }
}

/// Sums of cells and bands before zero values are dropped.
#[derive(Default)]
struct Accumulator {
    cells: BTreeMap<CellKey, AlgebraElement>,
    bands: BTreeMap<i64, AlgebraElement>,
}

impl From<BandedElement> for Accumulator {
    fn from(x: BandedElement) -> Self {
        Accumulator {
            cells: x.cells,
            bands: x.bands,
        }
    }
}

impl Accumulator {
    fn cell(&mut self, row: usize, col: usize, a: &AlgebraElement) {
        self.cells
            .entry(CellKey { row, col })
            .or_default()
            .add_assign(a);
    }

    fn band(&mut self, k: i64, a: &AlgebraElement) {
        self.bands.entry(k).or_default().add_assign(a);
    }

    fn absorb(&mut self, x: &BandedElement) {
        for (k, a) in &x.cells {
            self.cell(k.row, k.col, a);
        }
        for (k, a) in &x.bands {
            self.band(*k, a);
        }
    }

    fn finish(self) -> BandedElement {
        BandedElement::canonicalize(self.cells, self.bands)
    }
}

/// Deliberate multiplication defects for exercising failure paths.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Omit the finite correction in `E_{-q}(a) E_p(b)`.
    DropCorrection,
}

/// The subalgebra of `M_{N x N}(A)` spanned by bands and matrix units over a
/// base algebra `A`.
#[derive(Clone, Copy, Debug)]
pub struct BandedCalculus<'a> {
    base: &'a BaseAlgebra,
    fault: Option<Fault>,
}

impl<'a> BandedCalculus<'a> {
    pub fn new(base: &'a BaseAlgebra) -> Self {
        BandedCalculus { base, fault: None }
    }

    #[doc(hidden)]
    pub fn with_fault(base: &'a BaseAlgebra, fault: Fault) -> Self {
        BandedCalculus {
            base,
            fault: Some(fault),
        }
    }

    pub fn base(&self) -> &'a BaseAlgebra {
        self.base
    }

    /// `E_0(1)`, the identity matrix.
    pub fn identity(&self) -> Result<BandedElement> {
        Ok(BandedElement::band(0, self.base.one()?))
    }

    /// Exact product.
    ///
    /// With `p, q >= 0`:
    /// - `E_p(a) E_q(b) = E_{p+q}(ab)`, `E_{-p}(a) E_{-q}(b) = E_{-p-q}(ab)`,
    ///   `E_p(a) E_{-q}(b) = E_{p-q}(ab)`;
    /// - `E_{-q}(a) E_p(b) = E_{p-q}(ab) - sum_{i=1}^{q} e_{i,i+p-q}(ab)` when
    ///   `p >= q`, and `E_{p-q}(ab) - sum_{i=1}^{p} e_{i+q-p,i}(ab)` when `p < q`;
    /// - `e_{i,j}(a) E_k(b) = e_{i,j+k}(ab)` if `j + k >= 1`, else zero;
    /// - `E_k(a) e_{i,j}(b) = e_{i-k,j}(ab)` if `i - k >= 1`, else zero;
    /// - `e_{i,j}(a) e_{k,l}(b) = [j = k] e_{i,l}(ab)`.
    pub fn mul(&self, x: &BandedElement, y: &BandedElement) -> Result<BandedElement> {
        let mut acc = Accumulator::default();
        for (s, a) in &x.bands {
            for (t, b) in &y.bands {
                let ab = self.base.mul(a, b)?;
                acc.band(s + t, &ab);
                if *s < 0 && *t > 0 && self.fault != Some(Fault::DropCorrection) {
                    let (q, p) = (s.unsigned_abs() as usize, *t as usize);
                    let minus = ab.neg();
                    if p >= q {
                        for i in 1..=q {
                            acc.cell(i, i + p - q, &minus);
                        }
                    } else {
                        for i in 1..=p {
                            acc.cell(i + q - p, i, &minus);
                        }
                    }
                }
            }
            for (k, b) in &y.cells {
                let row = k.row as i64 - s;
                if row >= 1 {
                    acc.cell(row as usize, k.col, &self.base.mul(a, b)?);
                }
            }
        }
        for (k, a) in &x.cells {
            for (t, b) in &y.bands {
                let col = k.col as i64 + t;
                if col >= 1 {
                    acc.cell(k.row, col as usize, &self.base.mul(a, b)?);
                }
            }
            for (l, b) in y.cells.range(
                CellKey { row: k.col, col: 0 }..CellKey {
                    row: k.col + 1,
                    col: 0,
                },
            ) {
                acc.cell(k.row, l.col, &self.base.mul(a, b)?);
            }
        }
        Ok(acc.finish())
    }

    /// `[x, y] = xy - yx`.
    pub fn bracket(&self, x: &BandedElement, y: &BandedElement) -> Result<BandedElement> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }
}

impl Ring for BandedCalculus<'_> {
    type Element = BandedElement;

    fn mul(&self, x: &BandedElement, y: &BandedElement) -> Result<BandedElement> {
        BandedCalculus::mul(self, x, y)
    }

    fn sub(&self, x: &BandedElement, y: &BandedElement) -> BandedElement {
        x.sub(y)
    }

    fn coordinates(&self, x: &BandedElement) -> SparseVector {
        x.coordinates()
    }
}
