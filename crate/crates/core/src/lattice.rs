//! Integer row reduction: Hermite normal form and lattice kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form of an integer matrix, together with the
/// unimodular transform `U` such that `U · A = H`.
///
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`.
/// Zero rows of `H` are moved to the bottom.
pub fn hermite_with_transform(a: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // gcd-eliminate this column below pivot_row
        loop {
            let nonzero: Vec<usize> = (pivot_row..rows).filter(|&r| !h[r][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero
                .iter()
                .min_by(|&&x, &&y| h[x][col].abs().cmp(&h[y][col].abs()).then(x.cmp(&y)))
                .expect("nonempty");
            h.swap(pivot_row, best);
            u.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                sub_row(&mut h, r, pivot_row, &q);
                sub_row(&mut u, r, pivot_row, &q);
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            negate_row(&mut h, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        for r in 0..pivot_row {
            let q = h[r][col].div_floor(&h[pivot_row][col]);
            if !q.is_zero() {
                sub_row(&mut h, r, pivot_row, &q);
                sub_row(&mut u, r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

fn sub_row(m: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(src) {
        *t -= q * s;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], r: usize) {
    for x in m[r].iter_mut() {
        *x = -x.clone();
    }
}

pub fn hermite_normal_form(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (mut h, _) = hermite_with_transform(a);
    h.retain(|row| row.iter().any(|x| !x.is_zero()));
    h
}

/// Basis of the saturated lattice `{ r ∈ Z^m : r · A = 0 }` for an `m × n`
/// matrix `A`, put in Hermite normal form so the choice is canonical.
pub fn left_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (h, u) = hermite_with_transform(a);
    let basis: Vec<Vec<BigInt>> = h
        .iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(Zero::is_zero))
        .map(|(_, urow)| urow)
        .collect();
    if basis.is_empty() {
        return basis;
    }
    hermite_normal_form(&basis)
}

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul_row(r: &[BigInt], a: &[Vec<BigInt>]) -> Vec<BigInt> {
        let cols = a[0].len();
        (0..cols)
            .map(|j| r.iter().zip(a).map(|(x, row)| x * &row[j]).sum())
            .collect()
    }

    #[test]
    fn hnf_of_small_matrix() {
        let a = to_big(&[vec![2, 4], vec![4, 2]]);
        assert_eq!(hermite_normal_form(&a), to_big(&[vec![2, 4], vec![0, 6]]));
        let a = to_big(&[vec![2, 4], vec![3, 6], vec![1, 1]]);
        assert_eq!(hermite_normal_form(&a), to_big(&[vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn kernel_of_weight_column() {
        let a = to_big(&[vec![2], vec![3], vec![10], vec![15]]);
        let k = left_kernel(&a);
        assert_eq!(k.len(), 3);
        for r in &k {
            assert!(mul_row(r, &a).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kernel_is_saturated() {
        // rows x^2, y^2, xy: the relation is x^2 * y^2 = (xy)^2
        let a = to_big(&[vec![2, 0], vec![0, 2], vec![1, 1]]);
        let k = left_kernel(&a);
        assert_eq!(k, to_big(&[vec![1, 1, -2]]));
        assert_eq!(gcd_all(&k[0]), BigInt::from(1));
    }

    #[test]
    fn full_rank_has_empty_kernel() {
        let a = to_big(&[vec![1, 0], vec![0, 1]]);
        assert!(left_kernel(&a).is_empty());
    }
}
