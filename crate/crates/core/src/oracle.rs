//! Independent check of banded multiplication: multiply finite truncations as
//! ordinary matrices and compare a window of the result.

use rand::Rng;

use crate::algebra::{AlgebraElement, BaseAlgebra};
use crate::banded::{BandedCalculus, BandedElement};
use crate::error::{Error, Result};

/// Dense square matrix over the base algebra, row-major.
pub type Matrix = Vec<Vec<AlgebraElement>>;

/// Ordinary product of two dense matrices of equal size.
pub fn dense_product(base: &BaseAlgebra, x: &Matrix, y: &Matrix) -> Result<Matrix> {
    let m = x.len();
    let mut out = vec![vec![AlgebraElement::zero(); m]; m];
    for i in 0..m {
        for l in 0..m {
            if x[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !y[l][j].is_zero() {
                    let p = base.mul(&x[i][l], &y[l][j])?;
                    out[i][j].add_assign(&p);
                }
            }
        }
    }
    Ok(out)
}

/// Upper-left `m x m` block.
pub fn window(x: &Matrix, m: usize) -> Matrix {
    x.iter()
        .take(m)
        .map(|row| row.iter().take(m).cloned().collect())
        .collect()
}

/// Smallest truncation size whose product agrees with the true product on the
/// `window x window` block.
///
/// Entry `(i, j)` of `xy` sums `x[i][l] y[l][j]`. For `i <= window`, `x[i][l]`
/// vanishes past `window + max band offset of x` and past the last cell column
/// of `x`; symmetrically for `y[l][j]`. The smaller of the two bounds limits
/// `l`. The common choice `window + |offsets of x| + |offsets of y| + 1` is
/// always at least this large when cells sit inside it.
pub fn required_truncation(x: &BandedElement, y: &BandedElement, window: usize) -> usize {
    let up = x
        .bands()
        .keys()
        .copied()
        .filter(|k| *k > 0)
        .max()
        .unwrap_or(0) as usize;
    let down = y
        .bands()
        .keys()
        .copied()
        .filter(|k| *k < 0)
        .map(|k| k.unsigned_abs())
        .max()
        .unwrap_or(0) as usize;
    let x_cols = x.cells().keys().map(|k| k.col).max().unwrap_or(0);
    let y_rows = y.cells().keys().map(|k| k.row).max().unwrap_or(0);
    let bx = (window + up).max(x_cols);
    let by = (window + down).max(y_rows);
    bx.min(by).max(window)
}

/// A disagreement between the banded product and the truncation oracle.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub x: BandedElement,
    pub y: BandedElement,
    /// Window of the product of truncations.
    pub expected: Matrix,
    /// Truncation of the banded product.
    pub actual: Matrix,
}

/// Compares `truncate(x * y, window)` with `window(truncate(x, input) *
/// truncate(y, input), window)`.
pub fn check_product(
    calc: &BandedCalculus<'_>,
    x: &BandedElement,
    y: &BandedElement,
    window_size: usize,
    input: usize,
) -> Result<Option<Mismatch>> {
    let needed = required_truncation(x, y, window_size);
    if input < needed {
        return Err(Error::OracleTruncation {
            window: window_size,
            input,
            needed,
        });
    }
    let expected = window(
        &dense_product(calc.base(), &x.truncate(input), &y.truncate(input))?,
        window_size,
    );
    let actual = calc.mul(x, y)?.truncate(window_size);
    if expected == actual {
        Ok(None)
    } else {
        Ok(Some(Mismatch {
            x: x.clone(),
            y: y.clone(),
            expected,
            actual,
        }))
    }
}

/// Shape of randomly drawn banded elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomShape {
    /// Band offsets are drawn from `[-max_offset, max_offset]`.
    pub max_offset: i64,
    /// Cells are drawn from `[1, cell_range]^2`.
    pub cell_range: usize,
    /// Coefficients use basis elements of degree at most this.
    pub max_degree: usize,
    /// At most this many bands and this many cells.
    pub max_parts: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            max_offset: 3,
            cell_range: 4,
            max_degree: 2,
            max_parts: 3,
        }
    }
}

/// A random element with up to `max_terms` terms of degree at most
/// `max_degree` and small integer coefficients; may be zero.
pub fn random_element<R: Rng>(
    rng: &mut R,
    base: &BaseAlgebra,
    max_degree: usize,
    max_terms: usize,
) -> AlgebraElement {
    let basis = base.sample_basis(max_degree);
    let mut out = AlgebraElement::zero();
    if basis.is_empty() {
        return out;
    }
    for _ in 0..rng.gen_range(0..=max_terms) {
        let idx = basis[rng.gen_range(0..basis.len())].clone();
        out.add_term(idx, &base.scalar(rng.gen_range(-3..=3)));
    }
    out
}

pub fn random_banded<R: Rng>(
    rng: &mut R,
    base: &BaseAlgebra,
    shape: &RandomShape,
) -> BandedElement {
    let mut x = BandedElement::zero();
    for _ in 0..rng.gen_range(0..=shape.max_parts) {
        let k = rng.gen_range(-shape.max_offset..=shape.max_offset);
        x = x.add(&BandedElement::band(
            k,
            random_element(rng, base, shape.max_degree, 2),
        ));
    }
    for _ in 0..rng.gen_range(0..=shape.max_parts) {
        let i = rng.gen_range(1..=shape.cell_range) as i64;
        let j = rng.gen_range(1..=shape.cell_range) as i64;
        let a = random_element(rng, base, shape.max_degree, 2);
        x = x.add(&BandedElement::cell(i, j, a).expect("cell indices start at 1"));
    }
    x
}

/// Outcome of a batch of randomized oracle comparisons.
#[derive(Clone, Debug)]
pub struct OracleRun {
    pub trials: usize,
    pub agreed: usize,
    /// First disagreement and its trial number (1-based).
    pub first_mismatch: Option<(usize, Mismatch)>,
}

impl OracleRun {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Runs `trials` comparisons on random pairs drawn from `rng`.
pub fn run_trials<R: Rng>(
    rng: &mut R,
    calc: &BandedCalculus<'_>,
    shape: &RandomShape,
    trials: usize,
    window_size: usize,
    input: usize,
) -> Result<OracleRun> {
    let mut run = OracleRun {
        trials,
        agreed: 0,
        first_mismatch: None,
    };
    for t in 1..=trials {
        let x = random_banded(rng, calc.base(), shape);
        let y = random_banded(rng, calc.base(), shape);
        match check_product(calc, &x, &y, window_size, input)? {
            None => run.agreed += 1,
            Some(m) => {
                if run.first_mismatch.is_none() {
                    run.first_mismatch = Some((t, m));
                }
            }
        }
    }
    Ok(run)
}

/// Renders a matrix one row per line, entries separated by ` | `.
pub fn render_matrix(m: &Matrix) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" | ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::banded::Fault;
    use crate::scalar::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_pair_agrees() {
        let base = BaseAlgebra::polynomial(Field::Rational, 1);
        let calc = BandedCalculus::new(&base);
        let z = BandedElement::zero();
        assert!(check_product(&calc, &z, &z, 8, 16).unwrap().is_none());
    }

    #[test]
    fn undersized_truncation_rejected() {
        let base = BaseAlgebra::polynomial(Field::Rational, 1);
        let calc = BandedCalculus::new(&base);
        let one = base.one().unwrap();
        let x = BandedElement::band(3, one.clone());
        let y = BandedElement::band(-3, one);
        assert!(matches!(
            check_product(&calc, &x, &y, 8, 9),
            Err(Error::OracleTruncation { needed: 11, .. })
        ));
        assert!(check_product(&calc, &x, &y, 8, 11).unwrap().is_none());
    }

    #[test]
    fn detects_dropped_correction() {
        let base = BaseAlgebra::polynomial(Field::Rational, 1);
        let calc = BandedCalculus::with_fault(&base, Fault::DropCorrection);
        let one = base.one().unwrap();
        let m = check_product(
            &calc,
            &BandedElement::band(-1, one.clone()),
            &BandedElement::band(1, one),
            4,
            8,
        )
        .unwrap()
        .expect("fault must be visible");
        assert!(m.expected[0][0].is_zero());
        assert!(!m.actual[0][0].is_zero());
    }

    #[test]
    fn seeded_runs_repeat() {
        let base = BaseAlgebra::polynomial(Field::Rational, 1);
        let shape = RandomShape::default();
        let a = random_banded(&mut ChaCha8Rng::seed_from_u64(7), &base, &shape);
        let b = random_banded(&mut ChaCha8Rng::seed_from_u64(7), &base, &shape);
        assert_eq!(a, b);
    }
}
