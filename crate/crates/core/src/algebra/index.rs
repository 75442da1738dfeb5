use std::cmp::Ordering;
use std::fmt;

/// Identifier of a basis element of a base algebra.
///
/// Indices are ordered by kind, then by degree, then lexicographically on
/// their contents. Matrix indices compare by inner degree, then position
/// `(row, col)`, then inner index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisIndex {
    /// Slot `e_i` of a structure-constant algebra.
    Slot(usize),
    /// Exponent vector of a commutative monomial.
    Exponents(Vec<u32>),
    /// Word over the generators of a free associative algebra.
    Word(Vec<u32>),
    /// Weakly increasing word in PBW generator positions.
    Pbw(Vec<u32>),
    /// `((row, col), inner)` in `M_2(inner algebra)`.
    Matrix {
        row: u8,
        col: u8,
        inner: Box<BasisIndex>,
    },
}

impl BasisIndex {
    pub fn degree(&self) -> usize {
        match self {
            BasisIndex::Slot(_) => 0,
            BasisIndex::Exponents(e) => e.iter().map(|&k| k as usize).sum(),
            BasisIndex::Word(w) | BasisIndex::Pbw(w) => w.len(),
            BasisIndex::Matrix { inner, .. } => inner.degree(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            BasisIndex::Slot(_) => 0,
            BasisIndex::Exponents(_) => 1,
            BasisIndex::Word(_) => 2,
            BasisIndex::Pbw(_) => 3,
            BasisIndex::Matrix { .. } => 4,
        }
    }
}

impl Ord for BasisIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| match (self, other) {
                (BasisIndex::Slot(a), BasisIndex::Slot(b)) => a.cmp(b),
                (BasisIndex::Exponents(a), BasisIndex::Exponents(b))
                | (BasisIndex::Word(a), BasisIndex::Word(b))
                | (BasisIndex::Pbw(a), BasisIndex::Pbw(b)) => a.cmp(b),
                (
                    BasisIndex::Matrix {
                        row: r1,
                        col: c1,
                        inner: i1,
                    },
                    BasisIndex::Matrix {
                        row: r2,
                        col: c2,
                        inner: i2,
                    },
                ) => (r1, c1).cmp(&(r2, c2)).then_with(|| i1.cmp(i2)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for BasisIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[u32]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    for (k, g) in w.iter().enumerate() {
        if k > 0 {
            write!(f, "*")?;
        }
        write!(f, "x{g}")?;
    }
    Ok(())
}

/// Slots print as `e3`, exponent vectors as `(2,0,1)`, words and PBW
/// monomials as `x0*x1` (`1` when empty), matrix indices as `E12[inner]`.
///
/// PBW words print generator positions in the PBW order.
impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Slot(s) => write!(f, "e{s}"),
            BasisIndex::Exponents(e) => {
                write!(f, "(")?;
                for (k, x) in e.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            BasisIndex::Word(w) | BasisIndex::Pbw(w) => write_word(f, w),
            BasisIndex::Matrix { row, col, inner } => write!(f, "E{row}{col}[{inner}]"),
        }
    }
}
