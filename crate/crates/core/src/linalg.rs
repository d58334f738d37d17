//! Exact determinants and ranks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::{Field, Scalar};

/// Fraction-free Bareiss elimination.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of sparse rows over `field` by Gaussian elimination.
pub fn rank(field: Field, rows: &[BTreeMap<usize, Scalar>]) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, Scalar> =
            row.iter().map(|(&k, v)| (k, field.normalize(v.clone()))).filter(|(_, v)| !v.is_zero()).collect();
        while let Some((&lead, lv)) = r.iter().next() {
            let lv = lv.clone();
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = field.mul(&lv, &field.inv(&p[&lead]).expect("pivot nonzero"));
                    for (k, v) in p {
                        let e = r.entry(*k).or_insert_with(Scalar::zero);
                        *e = field.sub(e, &field.mul(&factor, v));
                    }
                    r.retain(|_, v| !v.is_zero());
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}
