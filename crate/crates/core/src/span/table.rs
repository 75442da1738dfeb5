use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthKind {
    Associative,
    Lie,
}

/// Values `g(V, n)` for `n = 1..=n_max`, optionally with an upper bound per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    kind: GrowthKind,
    dims: Vec<u64>,
    bound: Option<Vec<u64>>,
}

impl GrowthTable {
    /// `dims[k]` is the value at `n = k + 1`.
    pub fn new(kind: GrowthKind, dims: Vec<u64>) -> Self {
        GrowthTable {
            kind,
            dims,
            bound: None,
        }
    }

    /// Tabulates a closed form, for comparisons and tests.
    pub fn from_fn(kind: GrowthKind, n_max: usize, f: impl Fn(u64) -> u64) -> Self {
        Self::new(kind, (1..=n_max as u64).map(f).collect())
    }

    pub fn kind(&self) -> GrowthKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.dims.len()
    }

    pub fn get(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|k| self.dims.get(k).copied())
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn bound(&self) -> Option<&[u64]> {
        self.bound.as_deref()
    }

    pub fn with_bound(mut self, f: impl Fn(u64) -> u64) -> Self {
        self.bound = Some((1..=self.dims.len() as u64).map(f).collect());
        self
    }

    pub fn is_monotone(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] <= w[1])
    }

    /// Rows `n` whose value exceeds the bound column.
    pub fn bound_violations(&self) -> Vec<usize> {
        match &self.bound {
            None => Vec::new(),
            Some(b) => (1..=self.dims.len())
                .filter(|&n| self.dims[n - 1] > b[n - 1])
                .collect(),
        }
    }

    /// CSV with header `n,dim` or `n,dim,bound`.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        match &self.bound {
            None => {
                s.push_str("n,dim\n");
                for (k, d) in self.dims.iter().enumerate() {
                    let _ = writeln!(s, "{},{}", k + 1, d);
                }
            }
            Some(b) => {
                s.push_str("n,dim,bound\n");
                for (k, (d, b)) in self.dims.iter().zip(b).enumerate() {
                    let _ = writeln!(s, "{},{},{}", k + 1, d, b);
                }
            }
        }
        s
    }
}

/// Smallest `C <= c_max` with `f(n) <= C g(C n)` for every `n` in `range`.
///
/// This is a finite-range witness for `f ⪯ g`, not a proof of it. The table
/// `g` must extend to `c_max * max(range)`.
pub fn asym_leq(
    f: &GrowthTable,
    g: &GrowthTable,
    c_max: u64,
    range: RangeInclusive<usize>,
) -> Result<Option<u64>> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo == 0 {
        return Err(Error::InvalidLength(0));
    }
    if f.n_max() < hi {
        return Err(Error::InsufficientTable {
            needed: hi,
            have: f.n_max(),
        });
    }
    let needed = c_max as usize * hi;
    if g.n_max() < needed {
        return Err(Error::InsufficientTable {
            needed,
            have: g.n_max(),
        });
    }
    Ok((1..=c_max).find(|&c| {
        (lo..=hi).all(|n| {
            let gv = g.get(c as usize * n).expect("table length checked");
            f.get(n).expect("table length checked") as u128 <= c as u128 * gv as u128
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let t = GrowthTable::new(GrowthKind::Associative, vec![2, 3]);
        assert_eq!(t.to_csv(), "n,dim\n1,2\n2,3\n");
        let t = t.with_bound(|n| 4 * n);
        assert_eq!(t.to_csv(), "n,dim,bound\n1,2,4\n2,3,8\n");
        assert!(t.bound_violations().is_empty());
    }

    #[test]
    fn equal_tables_witness_one() {
        let g = GrowthTable::from_fn(GrowthKind::Associative, 20, |n| n + 1);
        assert_eq!(asym_leq(&g, &g, 1, 1..=10).unwrap(), Some(1));
        assert_eq!(asym_leq(&g, &g, 2, 1..=10).unwrap(), Some(1));
    }

    #[test]
    fn exponential_against_linear_witness() {
        let f = GrowthTable::from_fn(GrowthKind::Associative, 8, |n| (1 << (n + 1)) - 2);
        let g = GrowthTable::from_fn(GrowthKind::Associative, 80, |n| n + 1);
        // f(8) = 510 <= C (8C + 1) first holds at C = 8
        assert_eq!(asym_leq(&f, &g, 10, 1..=8).unwrap(), Some(8));
        assert_eq!(asym_leq(&f, &g, 7, 1..=8).unwrap(), None);
        // the other direction holds with C = 1
        let g8 = GrowthTable::from_fn(GrowthKind::Associative, 8, |n| n + 1);
        let f8 = GrowthTable::from_fn(GrowthKind::Associative, 80, |n| (1 << (n.min(60) + 1)) - 2);
        assert_eq!(asym_leq(&g8, &f8, 10, 1..=8).unwrap(), Some(1));
    }

    #[test]
    fn short_table_rejected() {
        let f = GrowthTable::from_fn(GrowthKind::Associative, 8, |n| n);
        assert_eq!(
            asym_leq(&f, &f, 2, 1..=8),
            Err(Error::InsufficientTable {
                needed: 16,
                have: 8
            })
        );
    }
}
