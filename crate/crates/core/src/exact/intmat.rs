//! Integer and rational matrix routines: determinants, ranks, echelon forms,
//! and lattice kernels. Row operations read and write two rows of one matrix,
//! so they index by column.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_rat(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

/// Fraction-free (Bareiss) determinant.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    det(&to_big(m))
}

/// Reduced row echelon form over Q; returns the nonzero rows and pivot columns.
pub fn rref(mut rows: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    rref(rows.to_vec()).1.len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(&to_rat(rows))
}

/// Unimodular elimination of column `c` among rows `r..`: afterwards row `r`
/// holds the gcd (possibly zero) and rows below are zero in that column.
fn gcd_eliminate(rows: &mut [Vec<BigInt>], r: usize, c: usize) {
    for i in r + 1..rows.len() {
        if rows[i][c].is_zero() {
            continue;
        }
        let a = rows[r][c].clone();
        let b = rows[i][c].clone();
        let eg = a.extended_gcd(&b);
        let (g, x, y) = (eg.gcd, eg.x, eg.y);
        let (ag, bg) = (&a / &g, &b / &g);
        let ncols = rows[r].len();
        for j in 0..ncols {
            let p = rows[r][j].clone();
            let q = rows[i][j].clone();
            rows[r][j] = &x * &p + &y * &q;
            rows[i][j] = &ag * &q - &bg * &p;
        }
    }
}

/// A Z-basis of `{x ∈ Z^n : A x = 0}` (rows of the returned matrix).
pub fn integer_kernel(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let d = a.len();
    let n = a.first().map_or(0, Vec::len);
    // [A^T | I]
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..d).map(|k| BigInt::from(a[k][i])).collect();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..d {
        if r >= n {
            break;
        }
        gcd_eliminate(&mut m, r, c);
        if !m[r][c].is_zero() {
            r += 1;
        }
    }
    m[r..].iter().map(|row| row[d..].to_vec()).collect()
}

/// Hermite normal form of a lattice basis, with pivots taken from the last
/// column leftwards. Pivots are positive and entries of earlier rows in a
/// pivot column are reduced into `[0, pivot)`.
pub fn hnf_from_right(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in (0..ncols).rev() {
        if r >= rows.len() {
            break;
        }
        if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            rows.swap(r, p);
        } else {
            continue;
        }
        gcd_eliminate(&mut rows, r, c);
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let piv = rows[r][c].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&piv);
            if !q.is_zero() {
                for j in 0..ncols {
                    let t = &q * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// gcd of all k×k minors of an m×k or k×m integer matrix given by rows.
pub fn gcd_of_maximal_minors(rows: &[Vec<i64>]) -> BigInt {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let (k, transpose) = if m <= n { (m, false) } else { (n, true) };
    let big = m.max(n);
    let mut g = BigInt::zero();
    for combo in combinations(big, k) {
        let sub: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                combo
                    .iter()
                    .map(|&j| {
                        let v = if transpose { rows[j][i] } else { rows[i][j] };
                        BigInt::from(v)
                    })
                    .collect()
            })
            .collect();
        g = g.gcd(&det(&sub));
    }
    g
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn big_to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

/// Solve a square rational system; `None` if singular.
pub fn solve_square(m: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let aug: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (red, piv) = rref(aug);
    if piv.len() != n || piv.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_vec(a: &[Vec<i64>], x: &[BigInt]) -> Vec<BigInt> {
        a.iter()
            .map(|r| r.iter().zip(x).map(|(p, q)| BigInt::from(*p) * q).sum())
            .collect()
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 3], vec![0, 4, 1], vec![5, 2, -2]];
        // 2(4·-2 - 1·2) - (-1)(0·-2 - 1·5) + 3(0·2 - 4·5)
        assert_eq!(det_i64(&m), BigInt::from(2 * (-10) + (-5) + 3 * (-20)));
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
    }

    #[test]
    fn kernel_of_twisted_cubic_like_matrix() {
        let a = vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]];
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for row in &k {
            assert!(mat_vec(&a, row).iter().all(Zero::is_zero));
        }
        let h = hnf_from_right(k);
        let expect: Vec<Vec<BigInt>> = vec![vec![3, -4, 0, 1], vec![2, -3, 1, 0]]
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        assert_eq!(h, expect);
    }

    #[test]
    fn minors_gcd() {
        let b = vec![vec![1, 2], vec![-1, 1], vec![-1, -1], vec![1, -1], vec![0, -1]];
        assert_eq!(gcd_of_maximal_minors(&b), BigInt::one());
        let c = vec![vec![2, 0], vec![0, 2], vec![2, 2]];
        assert_eq!(gcd_of_maximal_minors(&c), BigInt::from(4));
    }
}
