//! Small exact linear algebra over `Ratio<i64>`.

use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

pub(crate) type Q = Ratio<i64>;

/// Inverse of a square integer matrix by Gauss-Jordan elimination.
/// Returns `None` when the matrix is singular.
pub(crate) fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for j in 0..n {
                let (x, y) = (a[col][j], inv[col][j]);
                a[r][j] -= f * x;
                inv[r][j] -= f * y;
            }
        }
    }
    Some(inv)
}

/// `m · v` for a rational matrix and an integer vector.
pub(crate) fn mul_vec(m: &[Vec<Q>], v: &[i64]) -> Vec<Q> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Q::zero(), |acc, (a, &b)| acc + *a * Q::from_integer(b))
        })
        .collect()
}

/// Least common multiple of the denominators of `v`.
pub(crate) fn common_denominator(v: &[Q]) -> i64 {
    v.iter().fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn inverse_of_a2_cartan() {
        let inv = inverse(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(inv[0][0], Q::new(2, 3));
        assert_eq!(inv[0][1], Q::new(1, 3));
        assert_eq!(inv[1][1], Q::new(2, 3));
    }

    #[test]
    fn singular_matrix() {
        assert!(inverse(&[vec![1, 2], vec![2, 4]]).is_none());
    }
}
