//! Exact linear algebra over rationals: determinants (fraction-free Bareiss
//! after clearing denominators) and rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Determinant of a square rational matrix.
///
/// Denominators are cleared row by row, the integer determinant is computed
/// by Bareiss elimination, and the scale is divided back out.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    for row in m {
        assert_eq!(row.len(), n, "determinant: matrix not square");
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut lcm = BigInt::one();
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
        scale *= &lcm;
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
    }
    let det = bareiss(&mut a);
    Rational::new(det, scale)
}

/// Bareiss fraction-free elimination; consumes the matrix.
fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        // Pivot search.
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division not exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Rank of an arbitrary rational matrix by Gaussian elimination.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        let pv = a[rank][col].clone();
        for j in col..cols {
            let v = a[rank][j].clone() / pv.clone();
            a[rank][j] = v;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..cols {
                    let v = a[r][j].clone() - factor.clone() * a[rank][j].clone();
                    a[r][j] = v;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Submatrix determinant for given (0-based) row/column index lists.
pub fn minor(m: &[Vec<Rational>], rows: &[usize], cols: &[usize]) -> Rational {
    assert_eq!(rows.len(), cols.len(), "minor: |rows| != |cols|");
    let sub: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    determinant(&sub)
}

/// m1 * m2 for square rational matrices.
pub fn mat_mul(m1: &[Vec<Rational>], m2: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m1.len();
    let p = m2[0].len();
    let k_dim = m2.len();
    let mut out = vec![vec![Rational::zero(); p]; n];
    for i in 0..n {
        for (k, m2k) in m2.iter().enumerate().take(k_dim) {
            if m1[i][k].is_zero() {
                continue;
            }
            for j in 0..p {
                if !m2k[j].is_zero() {
                    out[i][j] += &m1[i][k] * &m2k[j];
                }
            }
        }
    }
    out
}

/// Returns true if every entry is zero.
pub fn is_zero_matrix(m: &[Vec<Rational>]) -> bool {
    m.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

/// Identity matrix.
pub fn identity(n: usize) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn small_determinants() {
        let m = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ];
        assert_eq!(determinant(&m), rat_int(-2));

        let m = vec![
            vec![rat(1, 2), rat_int(0), rat_int(1)],
            vec![rat_int(0), rat(1, 3), rat_int(0)],
            vec![rat_int(1), rat_int(0), rat_int(1)],
        ];
        // det = 1/3 * (1/2 - 1) = -1/6
        assert_eq!(determinant(&m), rat(-1, 6));

        assert_eq!(determinant(&[]), rat_int(1));
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ];
        assert_eq!(determinant(&m), rat_int(-1));
    }

    #[test]
    fn ranks() {
        let m = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
            vec![rat_int(0), rat_int(1), rat_int(0)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&identity(4)), 4);
        assert_eq!(rank(&vec![vec![Rational::zero(); 3]; 2]), 0);
    }

    #[test]
    fn minors_and_products() {
        let m = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(4), rat_int(5), rat_int(6)],
            vec![rat_int(7), rat_int(8), rat_int(10)],
        ];
        assert_eq!(minor(&m, &[0, 1], &[1, 2]), rat_int(-3));
        let prod = mat_mul(&m, &identity(3));
        assert_eq!(prod, m);
    }
}
