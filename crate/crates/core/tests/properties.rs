mod common;

use bandgrowth::algebra::{AlgebraElement, BaseAlgebra, BasisIndex, LieAlgebra};
use bandgrowth::banded::{BandedCalculus, BandedElement};
use bandgrowth::oracle::{random_banded, random_element, RandomShape};
use bandgrowth::scalar::{Field, Scalar};
use bandgrowth::span::{CoordinateKey, SpanBasis, SparseVector};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn algebras(field: Field) -> Vec<BaseAlgebra> {
    let p1 = BaseAlgebra::polynomial(field, 1);
    vec![
        BaseAlgebra::ground_field(field),
        BaseAlgebra::polynomial(field, 2),
        BaseAlgebra::free_associative(field, 2),
        BaseAlgebra::structure_constants(matrix_units_table(field)),
        BaseAlgebra::enveloping(LieAlgebra::sl2(field)),
        BaseAlgebra::enveloping(cross_product_lie(
            field,
            [[1, 0, 0], [0, -1, 1], [0, 1, 0]],
            Some(vec![2, 0, 1]),
        )),
        BaseAlgebra::matrix_extend(p1).unwrap(),
    ]
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    let num = rng.gen_range(-50..=50);
    let den = rng.gen_range(1..=20);
    field.from_ratio(num, den).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn base_products_associate(seed in any::<u64>(), prime in any::<bool>()) {
        let field = if prime { f1009() } else { Q };
        let mut r = rng(seed);
        for alg in algebras(field) {
            let x = random_element(&mut r, &alg, 2, 3);
            let y = random_element(&mut r, &alg, 2, 3);
            let z = random_element(&mut r, &alg, 2, 3);
            let left = alg.mul(&alg.mul(&x, &y).unwrap(), &z).unwrap();
            let right = alg.mul(&x, &alg.mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right, "{}", alg);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unit_is_two_sided(seed in any::<u64>()) {
        let mut r = rng(seed);
        for alg in algebras(Q) {
            let one = alg.one().unwrap();
            let x = random_element(&mut r, &alg, 3, 4);
            prop_assert_eq!(&alg.mul(&one, &x).unwrap(), &x);
            prop_assert_eq!(&alg.mul(&x, &one).unwrap(), &x);
        }
    }

    #[test]
    fn products_are_bilinear(seed in any::<u64>()) {
        let mut r = rng(seed);
        for alg in algebras(Q) {
            let x = random_element(&mut r, &alg, 2, 3);
            let y = random_element(&mut r, &alg, 2, 3);
            let z = random_element(&mut r, &alg, 2, 3);
            let c = random_scalar(&mut r, Q);
            let lhs = alg.mul(&x, &y.add(&z.scale(&c))).unwrap();
            let rhs = alg.mul(&x, &y).unwrap().add(&alg.mul(&x, &z).unwrap().scale(&c));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn pbw_normal_form_is_confluent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lies = [
            LieAlgebra::sl2(Q),
            LieAlgebra::new(Q, 3, (0..27).map(|t| LieAlgebra::sl2(Q).constant(t / 9, (t / 3) % 3, t % 3).clone()).collect(), Some(vec![2, 1, 0])).unwrap(),
            cross_product_lie(Q, random_symmetric(&mut r), None),
            cross_product_lie(f1009(), random_symmetric(&mut r), Some(vec![1, 2, 0])),
        ];
        for lie in &lies {
            let len = r.gen_range(0..=6);
            let word: Vec<usize> = (0..len).map(|_| r.gen_range(0..3)).collect();
            let expected = rewrite_randomly(&mut r, lie, &word);
            prop_assert_eq!(lie.straighten(&word).unwrap(), expected, "word {:?}", word);
        }
    }

    #[test]
    fn lie_bracket_satisfies_jacobi(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lie = cross_product_lie(Q, random_symmetric(&mut r), None);
        let el = |r: &mut ChaCha8Rng| AlgebraElement::from_terms((0..3).map(|k| (BasisIndex::Slot(k), Q.from_i64(r.gen_range(-3..=3)))));
        let (x, y, z) = (el(&mut r), el(&mut r), el(&mut r));
        let b = |u: &AlgebraElement, v: &AlgebraElement| lie.bracket(u, v).unwrap();
        let sum = b(&b(&x, &y), &z).add(&b(&b(&y, &z), &x)).add(&b(&b(&z, &x), &y));
        prop_assert!(sum.is_zero());
        // bracket of generators matches the commutator of their images in U(L)
        let u = BaseAlgebra::enveloping(lie.clone());
        prop_assert_eq!(lie.embed(&b(&x, &y)).unwrap(), u.commutator(&lie.embed(&x).unwrap(), &lie.embed(&y).unwrap()).unwrap());
    }

    #[test]
    fn commutator_in_banded_calculus_satisfies_jacobi(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = BaseAlgebra::free_associative(Q, 2);
        let calc = BandedCalculus::new(&base);
        let shape = RandomShape { max_degree: 1, max_parts: 2, ..RandomShape::default() };
        let x = random_banded(&mut r, &base, &shape);
        let y = random_banded(&mut r, &base, &shape);
        let z = random_banded(&mut r, &base, &shape);
        let b = |u: &BandedElement, v: &BandedElement| calc.bracket(u, v).unwrap();
        let sum = b(&b(&x, &y), &z).add(&b(&b(&y, &z), &x)).add(&b(&b(&z, &x), &y));
        prop_assert!(sum.is_zero(), "{}", sum);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn banded_products_associate(seed in any::<u64>(), free in any::<bool>()) {
        let mut r = rng(seed);
        let base = if free { BaseAlgebra::free_associative(Q, 2) } else { BaseAlgebra::polynomial(f1009(), 1) };
        let calc = BandedCalculus::new(&base);
        let shape = RandomShape { max_degree: 1, ..RandomShape::default() };
        let x = random_banded(&mut r, &base, &shape);
        let y = random_banded(&mut r, &base, &shape);
        let z = random_banded(&mut r, &base, &shape);
        let left = calc.mul(&calc.mul(&x, &y).unwrap(), &z).unwrap();
        let right = calc.mul(&x, &calc.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn banded_products_are_bilinear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = BaseAlgebra::free_associative(Q, 2);
        let calc = BandedCalculus::new(&base);
        let shape = RandomShape::default();
        let x = random_banded(&mut r, &base, &shape);
        let y = random_banded(&mut r, &base, &shape);
        let z = random_banded(&mut r, &base, &shape);
        let c = random_scalar(&mut r, Q);
        let yz = y.add(&z.scale(&c));
        prop_assert_eq!(
            calc.mul(&x, &yz).unwrap(),
            calc.mul(&x, &y).unwrap().add(&calc.mul(&x, &z).unwrap().scale(&c))
        );
        prop_assert_eq!(
            calc.mul(&yz, &x).unwrap(),
            calc.mul(&y, &x).unwrap().add(&calc.mul(&z, &x).unwrap().scale(&c))
        );
    }

    #[test]
    fn identity_is_neutral(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = BaseAlgebra::polynomial(Q, 2);
        let calc = BandedCalculus::new(&base);
        let one = calc.identity().unwrap();
        let x = random_banded(&mut r, &base, &RandomShape::default());
        prop_assert_eq!(&calc.mul(&one, &x).unwrap(), &x);
        prop_assert_eq!(&calc.mul(&x, &one).unwrap(), &x);
    }

    #[test]
    fn canonical_form_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = BaseAlgebra::polynomial(Q, 1);
        let x = random_banded(&mut r, &base, &RandomShape::default());
        let again = BandedElement::canonicalize(x.cells().clone(), x.bands().clone());
        prop_assert_eq!(&again, &x);
        prop_assert!(x.cells().values().chain(x.bands().values()).all(|a| !a.is_zero()));
        // x - x is the canonical zero
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn coordinates_are_linear_and_injective(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = BaseAlgebra::polynomial(Q, 1);
        let shape = RandomShape::default();
        let x = random_banded(&mut r, &base, &shape);
        let y = random_banded(&mut r, &base, &shape);
        let c = random_scalar(&mut r, Q);
        prop_assert_eq!(x.add(&y.scale(&c)).coordinates(), x.coordinates().add(&y.coordinates().scale(&c)));
        prop_assert_eq!(x.coordinates().is_zero(), x.is_zero());
        prop_assert_eq!(x.coordinates() == y.coordinates(), x == y);
    }

    #[test]
    fn truncation_matches_entries(seed in any::<u64>()) {
        let mut r = rng(seed);
        let base = BaseAlgebra::polynomial(Q, 1);
        let x = random_banded(&mut r, &base, &RandomShape::default());
        let m = x.truncate(7);
        for i in 1..=7 {
            for j in 1..=7 {
                prop_assert_eq!(&m[i - 1][j - 1], &x.entry(i, j));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_field_axioms(seed in any::<u64>(), prime in any::<bool>()) {
        let f = if prime { Field::prime(1_000_000_007).unwrap() } else { Q };
        let mut r = rng(seed);
        let (a, b, c) = (random_scalar(&mut r, f), random_scalar(&mut r, f), random_scalar(&mut r, f));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        match a.inverse() {
            Some(inv) => prop_assert!((&a * &inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }
}

/// Rank of a dense matrix over F_p by plain Gaussian elimination.
fn dense_rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow(m[rank][c], p - 2, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = row[c] * inv % p;
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn span_dimension_matches_dense_rank(rows in prop::collection::vec(prop::collection::vec(0u64..5, 6), 0..9)) {
        // small entries so dependencies are common
        let p = 1009;
        let f = Field::prime(p).unwrap();
        let key = |k: usize| CoordinateKey::Base(BasisIndex::Slot(k));
        let mut basis = SpanBasis::new();
        for (n, row) in rows.iter().enumerate() {
            let v = SparseVector::from_entries(row.iter().enumerate().map(|(k, &x)| (key(k), f.from_i64(x as i64))));
            let before = dense_rank(&rows[..n], p);
            let after = dense_rank(&rows[..=n], p);
            prop_assert_eq!(basis.contains(&v), before == after);
            prop_assert_eq!(basis.insert(&v), before != after);
            prop_assert_eq!(basis.dim(), after);
            prop_assert!(basis.reduce(&v).is_zero());
        }
    }
}
