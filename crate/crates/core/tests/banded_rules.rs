mod common;

use bandgrowth::algebra::{AlgebraElement, BaseAlgebra, BasisIndex};
use bandgrowth::banded::{BandedCalculus, BandedElement};
use bandgrowth::oracle::{check_product, required_truncation};
use common::*;

fn word(fa: &BaseAlgebra, w: &[u32]) -> AlgebraElement {
    gen(fa, BasisIndex::Word(w.to_vec()))
}

/// Entry `(i, j)` of `E_s(a) E_t(b)`: the sum over `l >= 1` of
/// `[l = i + s][j = l + t] ab`.
fn band_product_entry(s: i64, t: i64, ab: &AlgebraElement, i: usize, j: usize) -> AlgebraElement {
    let l = i as i64 + s;
    if l >= 1 && j as i64 == l + t {
        ab.clone()
    } else {
        AlgebraElement::zero()
    }
}

#[test]
fn four_band_rules_small_offsets() {
    let fa = BaseAlgebra::free_associative(Q, 2);
    let calc = BandedCalculus::new(&fa);
    let (a, b) = (word(&fa, &[0]), word(&fa, &[1]));
    let ab = word(&fa, &[0, 1]);
    for p in 0..=5i64 {
        for q in 0..=5i64 {
            for (s, t) in [(p, q), (-p, -q), (p, -q), (-q, p)] {
                let x = BandedElement::band(s, a.clone());
                let y = BandedElement::band(t, b.clone());
                let w = 2 * (p + q) as usize + 4;
                let product = calc.mul(&x, &y).unwrap();
                let m = product.truncate(w);
                for i in 1..=w {
                    for j in 1..=w {
                        assert_eq!(
                            m[i - 1][j - 1],
                            band_product_entry(s, t, &ab, i, j),
                            "E_{s} E_{t} at ({i},{j})"
                        );
                    }
                }
                let input = required_truncation(&x, &y, w);
                assert!(
                    check_product(&calc, &x, &y, w, input).unwrap().is_none(),
                    "E_{s} E_{t}"
                );
            }
        }
    }
}

#[test]
fn lower_times_upper_band() {
    let p1 = BaseAlgebra::polynomial(Q, 1);
    let calc = BandedCalculus::new(&p1);
    let one = p1.one().unwrap();
    // E_{-1}(1) E_1(1) = E_0(1) - e_{1,1}(1)
    let prod = calc
        .mul(
            &BandedElement::band(-1, one.clone()),
            &BandedElement::band(1, one.clone()),
        )
        .unwrap();
    let expected =
        BandedElement::band(0, one.clone()).sub(&BandedElement::cell(1, 1, one.clone()).unwrap());
    assert_eq!(prod, expected);
    // E_1(1) E_{-1}(1) = E_0(1)
    let prod = calc
        .mul(
            &BandedElement::band(1, one.clone()),
            &BandedElement::band(-1, one.clone()),
        )
        .unwrap();
    assert_eq!(prod, BandedElement::band(0, one));
}

#[test]
fn cells_against_bands() {
    let fa = BaseAlgebra::free_associative(Q, 2);
    let calc = BandedCalculus::new(&fa);
    let (a, b) = (word(&fa, &[0]), word(&fa, &[1]));
    let ab = word(&fa, &[0, 1]);
    for k in -3..=3i64 {
        for (i, j) in [(1i64, 1i64), (2, 3), (4, 1)] {
            let cell = BandedElement::cell(i, j, a.clone()).unwrap();
            let band = BandedElement::band(k, b.clone());
            let right = calc.mul(&cell, &band).unwrap();
            let expected = if j + k >= 1 {
                BandedElement::cell(i, j + k, ab.clone()).unwrap()
            } else {
                BandedElement::zero()
            };
            assert_eq!(right, expected, "e_{i},{j} E_{k}");
            let cell_b = BandedElement::cell(i, j, b.clone()).unwrap();
            let band_a = BandedElement::band(k, a.clone());
            let left = calc.mul(&band_a, &cell_b).unwrap();
            let expected = if i - k >= 1 {
                BandedElement::cell(i - k, j, ab.clone()).unwrap()
            } else {
                BandedElement::zero()
            };
            assert_eq!(left, expected, "E_{k} e_{i},{j}");
        }
    }
    let e12 = BandedElement::cell(1, 2, a.clone()).unwrap();
    let e23 = BandedElement::cell(2, 3, b.clone()).unwrap();
    assert_eq!(
        calc.mul(&e12, &e23).unwrap(),
        BandedElement::cell(1, 3, ab).unwrap()
    );
    assert!(calc.mul(&e23, &e12).unwrap().is_zero());
}

#[test]
fn noncommuting_coefficients_keep_order() {
    let fa = BaseAlgebra::free_associative(Q, 2);
    let calc = BandedCalculus::new(&fa);
    let (a, b) = (word(&fa, &[0]), word(&fa, &[1]));
    let x = BandedElement::band(-2, a);
    let y = BandedElement::band(1, b);
    let prod = calc.mul(&x, &y).unwrap();
    // E_{-2}(a) E_1(b) = E_{-1}(ab) - e_{2,1}(ab)
    let ab = word(&fa, &[0, 1]);
    assert_eq!(
        prod,
        BandedElement::band(-1, ab.clone()).sub(&BandedElement::cell(2, 1, ab).unwrap())
    );
}
