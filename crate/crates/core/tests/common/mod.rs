#![allow(dead_code)]

use std::collections::BTreeMap;

use bandgrowth::algebra::{
    AlgebraElement, BaseAlgebra, BasisIndex, LieAlgebra, StructureConstants,
};
use bandgrowth::scalar::{Field, Scalar};
use rand::Rng;

pub const Q: Field = Field::Rational;

pub fn f1009() -> Field {
    Field::prime(1009).unwrap()
}

pub fn gen(alg: &BaseAlgebra, idx: BasisIndex) -> AlgebraElement {
    alg.basis_element(idx).unwrap()
}

pub fn poly_var(alg: &BaseAlgebra, vars: usize, v: usize) -> AlgebraElement {
    let mut e = vec![0; vars];
    e[v] = 1;
    gen(alg, BasisIndex::Exponents(e))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

/// 3-dimensional Lie algebra `[x_i, x_j] = sum_{k,l} eps_{ijk} n_{kl} x_l`.
/// For symmetric `n` this satisfies the Jacobi identity.
pub fn cross_product_lie(field: Field, n: [[i64; 3]; 3], order: Option<Vec<usize>>) -> LieAlgebra {
    let eps = |i: usize, j: usize, k: usize| -> i64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    };
    let mut c = Vec::with_capacity(27);
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                let v: i64 = n
                    .iter()
                    .enumerate()
                    .map(|(k, row)| eps(i, j, k) * row[l])
                    .sum();
                c.push(field.from_i64(v));
            }
        }
    }
    LieAlgebra::new(field, 3, c, order).unwrap()
}

pub fn random_symmetric<R: Rng>(rng: &mut R) -> [[i64; 3]; 3] {
    let mut n = [[0i64; 3]; 3];
    for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)] {
        let v = rng.gen_range(-2..=2);
        n[i][j] = v;
        n[j][i] = v;
    }
    n
}

/// 2x2 matrices over the field as a structure-constant algebra on slots
/// `e_{2r+c}` for the matrix unit at `(r, c)`.
pub fn matrix_units_table(field: Field) -> StructureConstants {
    let mut t = vec![field.zero(); 64];
    for r in 0..2 {
        for c in 0..2 {
            for s in 0..2 {
                // E_{rc} E_{cs} = E_{rs}
                t[((2 * r + c) * 4 + 2 * c + s) * 4 + 2 * r + s] = field.one();
            }
        }
    }
    let unit = vec![field.one(), field.zero(), field.zero(), field.one()];
    StructureConstants::new(field, 4, t, Some(unit)).unwrap()
}

/// Normal form of a word of generators by rewriting a randomly chosen
/// out-of-order adjacent pair `x_j x_i -> x_i x_j + [x_j, x_i]` until every
/// word is ordered. Independent of the straightening order.
pub fn rewrite_randomly<R: Rng>(rng: &mut R, lie: &LieAlgebra, word: &[usize]) -> AlgebraElement {
    let f = lie.field();
    let mut pos = vec![0; lie.dim()];
    for (p, &g) in lie.order().iter().enumerate() {
        pos[g] = p;
    }
    let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    terms.insert(word.to_vec(), f.one());
    loop {
        let unsorted: Vec<Vec<usize>> = terms
            .keys()
            .filter(|w| w.windows(2).any(|p| pos[p[0]] > pos[p[1]]))
            .cloned()
            .collect();
        if unsorted.is_empty() {
            break;
        }
        let w = unsorted[rng.gen_range(0..unsorted.len())].clone();
        let c = terms.remove(&w).unwrap();
        let spots: Vec<usize> = (0..w.len() - 1)
            .filter(|&t| pos[w[t]] > pos[w[t + 1]])
            .collect();
        let t = spots[rng.gen_range(0..spots.len())];
        let (j, i) = (w[t], w[t + 1]);
        let mut swapped = w.clone();
        swapped.swap(t, t + 1);
        add(&mut terms, swapped, c.clone());
        for k in 0..lie.dim() {
            let ck = lie.constant(j, i, k);
            if !ck.is_zero() {
                let mut shorter = w[..t].to_vec();
                shorter.push(k);
                shorter.extend_from_slice(&w[t + 2..]);
                add(&mut terms, shorter, &c * ck);
            }
        }
    }
    AlgebraElement::from_terms(terms.into_iter().map(|(w, c)| {
        let mut p: Vec<u32> = w.iter().map(|&g| pos[g] as u32).collect();
        p.sort();
        (BasisIndex::Pbw(p), c)
    }))
}

fn add(terms: &mut BTreeMap<Vec<usize>, Scalar>, w: Vec<usize>, c: Scalar) {
    let sum = match terms.remove(&w) {
        Some(old) => &old + &c,
        None => c,
    };
    if !sum.is_zero() {
        terms.insert(w, sum);
    }
}
