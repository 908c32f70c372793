//! Small dense linear algebra over generic rings: division-free determinant,
//! Pfaffian by perfect matchings, exact rank, and conversions to nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::scalar::{Coefficient, Ring};

/// Row-major square matrix over an arbitrary commutative ring.
pub type Square<R> = Vec<Vec<R>>;

fn check_square<R>(a: &Square<R>) -> usize {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix is not square");
    n
}

/// Determinant by Laplace expansion memoised over the set of used columns.
/// Uses only ring operations, so it is valid over nilpotent form rings.
/// Cost `O(n·2ⁿ)`; intended for `n ≤ 16`.
pub fn det<R: Ring>(a: &Square<R>) -> R {
    let n = check_square(a);
    assert!(n <= 20, "division-free determinant limited to n ≤ 20");
    let full = (1usize << n) - 1;
    let mut g: Vec<Option<R>> = vec![None; 1 << n];
    g[full] = Some(R::one());
    // process masks by decreasing popcount so successors are filled first
    let mut masks: Vec<usize> = (0..full).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    for mask in masks {
        let r = mask.count_ones() as usize;
        let mut acc = R::zero();
        for c in (0..n).filter(|c| mask >> c & 1 == 0) {
            let Some(sub) = &g[mask | 1 << c] else { continue };
            if a[r][c].is_zero() || sub.is_zero() {
                continue;
            }
            let term = a[r][c].clone() * sub.clone();
            if (mask >> c >> 1).count_ones() % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        g[mask] = Some(acc);
    }
    g[0].take().unwrap()
}

/// Pfaffian of an antisymmetric matrix of even size, expanded along the
/// first row: `Pf(A) = Σ_j (−1)^{j+1} a_{0j} Pf(A without rows/cols 0, j)`.
/// The caller guarantees antisymmetry.
pub fn pfaffian<R: Ring>(a: &Square<R>) -> R {
    let n = check_square(a);
    if n % 2 == 1 {
        return R::zero();
    }
    let idx: Vec<usize> = (0..n).collect();
    pf_rec(a, &idx)
}

fn pf_rec<R: Ring>(a: &Square<R>, idx: &[usize]) -> R {
    if idx.is_empty() {
        return R::one();
    }
    let i = idx[0];
    let mut acc = R::zero();
    for (k, &j) in idx.iter().enumerate().skip(1) {
        if a[i][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != i && x != j).collect();
        let term = a[i][j].clone() * pf_rec(a, &rest);
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn is_antisymmetric<R: Ring>(a: &Square<R>) -> bool {
    let n = check_square(a);
    (0..n).all(|i| (0..n).all(|j| a[i][j] == -a[j][i].clone()))
}

/// Matrix product; skips zero entries, which dominate the sparse operator
/// matrices used throughout.
pub fn mat_mul<R: Ring>(a: &Square<R>, b: &Square<R>) -> Square<R> {
    let n = a.len();
    let mut out = vec![vec![R::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += aik.clone() * bkj.clone();
                }
            }
        }
    }
    out
}

pub fn identity<R: Ring>(n: usize) -> Square<R> {
    (0..n).map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()).collect()
}

/// Rank of a list of row vectors by exact Gaussian elimination.
pub fn exact_rank<C: Coefficient>(rows: &[Vec<C>]) -> usize {
    assert!(C::EXACT, "exact_rank requires an exact coefficient field");
    let mut m: Vec<Vec<C>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        let inv = m[rank][col].recip().expect("nonzero pivot in a field");
        let pivot_row: Vec<C> = m[rank].iter().map(|x| x.clone() * inv.clone()).collect();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Inverse by Gauss–Jordan elimination with largest-magnitude pivoting;
/// `None` when singular (exactly, or below `1e-300` in float mode).
pub fn inverse<C: Coefficient>(a: &Square<C>) -> Option<Square<C>> {
    let n = check_square(a);
    let mut m: Vec<Vec<C>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { C::one() } else { C::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| m[x][col].magnitude().total_cmp(&m[y][col].magnitude()))?;
        if m[piv][col].is_zero() || (!C::EXACT && m[piv][col].magnitude() < 1e-300) {
            return None;
        }
        m.swap(col, piv);
        let inv = m[col][col].recip()?;
        let pivot_row: Vec<C> = m[col].iter().map(|x| x.clone() * inv.clone()).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        m[col] = pivot_row;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn to_dmatrix<C: Coefficient>(a: &Square<C>) -> DMatrix<Complex64> {
    let n = a.len();
    DMatrix::from_fn(n, n, |i, j| a[i][j].to_complex())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    fn m(rows: &[&[i128]]) -> Square<GaussRat> {
        rows.iter().map(|r| r.iter().map(|&x| GaussRat::int(x)).collect()).collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), GaussRat::int(-2));
        assert_eq!(det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), GaussRat::int(6));
        assert_eq!(det(&identity::<GaussRat>(5)), GaussRat::int(1));
    }

    #[test]
    fn det_matches_permutation_sum() {
        let a = m(&[&[1, -2, 0, 3], &[4, 1, 2, -1], &[0, 5, -3, 2], &[2, 1, 1, 1]]);
        let mut expect = GaussRat::int(0);
        let perms = permutations(4);
        for p in perms {
            let inv = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut t = GaussRat::int(if inv % 2 == 0 { 1 } else { -1 });
            for (r, &c) in p.iter().enumerate() {
                t = t * a[r][c].clone();
            }
            expect = expect + t;
        }
        assert_eq!(det(&a), expect);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn pfaffian_squares_to_det() {
        let a = m(&[&[0, 1, -2, 3], &[-1, 0, 4, 5], &[2, -4, 0, 6], &[-3, -5, -6, 0]]);
        assert!(is_antisymmetric(&a));
        let pf = pfaffian(&a);
        // af − be + cd with a..f the upper-triangular entries
        assert_eq!(pf, GaussRat::int(1 * 6 - (-2) * 5 + 3 * 4));
        assert_eq!(pf.clone() * pf, det(&a));
        assert_eq!(pfaffian(&m(&[&[0, 7], &[-7, 0]])), GaussRat::int(7));
    }

    #[test]
    fn rank() {
        let rows = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(exact_rank(&rows), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }
}
