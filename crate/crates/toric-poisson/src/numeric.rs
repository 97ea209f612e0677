//! Small floating-point kernels: symmetric eigenvalues, Pfaffians, numerical
//! rank, and central finite differences. Sized for the 2n x 2n matrices this
//! crate produces (n <= 4 or so), favoring determinism over speed.

use num_complex::Complex64;

/// Interleaves complex chart coordinates as `[x1, y1, x2, y2, ...]`.
pub fn to_real(w: &[Complex64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * w.len());
    for z in w {
        out.push(z.re);
        out.push(z.im);
    }
    out
}

/// Inverse of [`to_real`].
pub fn to_complex(xy: &[f64]) -> Vec<Complex64> {
    assert!(xy.len() % 2 == 0);
    xy.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(mat: &[Vec<f64>]) -> Vec<f64> {
    let n = mat.len();
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-300 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig
}

/// Singular values of a real matrix `m`, via the eigenvalues of `m mᵀ`.
pub fn singular_values(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut mmt = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            mmt[i][j] = (0..m[0].len()).map(|k| m[i][k] * m[j][k]).sum();
        }
    }
    symmetric_eigenvalues(&mmt).into_iter().map(|e| e.max(0.0).sqrt()).collect()
}

/// Numerical rank: count of singular values above `rel_tol` times the largest.
pub fn numerical_rank(m: &[Vec<f64>], rel_tol: f64) -> usize {
    let sv = singular_values(m);
    let max = sv.first().copied().unwrap_or(0.0);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Pfaffian of an antisymmetric matrix of even size, by expansion along the
/// first remaining row. Exact combinatorics, fine for sizes up to 8.
pub fn pfaffian(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    assert!(n % 2 == 0, "pfaffian needs even size");
    let idx: Vec<usize> = (0..n).collect();
    pfaffian_rec(m, &idx)
}

fn pfaffian_rec(m: &[Vec<f64>], idx: &[usize]) -> f64 {
    if idx.is_empty() {
        return 1.0;
    }
    let i0 = idx[0];
    let mut acc = 0.0;
    let mut sign = 1.0;
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let rest: Vec<usize> =
            idx.iter().copied().filter(|&k| k != i0 && k != j).collect();
        acc += sign * m[i0][j] * pfaffian_rec(m, &rest);
        let _ = pos;
        sign = -sign;
    }
    acc
}

/// Central finite difference of a scalar function along coordinate `dir`.
pub fn central_diff<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], dir: usize, step: f64) -> f64 {
    let mut plus = x.to_vec();
    let mut minus = x.to_vec();
    plus[dir] += step;
    minus[dir] -= step;
    (f(&plus) - f(&minus)) / (2.0 * step)
}

/// Frobenius norm.
pub fn frobenius(m: &[Vec<f64>]) -> f64 {
    m.iter().flat_map(|row| row.iter().map(|v| v * v)).sum::<f64>().sqrt()
}

/// Max absolute entry.
pub fn max_abs(m: &[Vec<f64>]) -> f64 {
    m.iter().flat_map(|row| row.iter().map(|v| v.abs())).fold(0.0, f64::max)
}

pub fn vec_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Matrix product helper for dense `Vec<Vec<f64>>`.
pub fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![0.0; m]; n];
    for i in 0..n {
        for j in 0..m {
            out[i][j] = (0..k).map(|t| a[i][t] * b[t][j]).sum();
        }
    }
    out
}

pub fn mat_transpose(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let m = a[0].len();
    let mut out = vec![vec![0.0; n]; m];
    for i in 0..n {
        for j in 0..m {
            out[j][i] = a[i][j];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = vec![vec![3.0, 0.0], vec![0.0, 1.0]];
        let e = symmetric_eigenvalues(&m);
        assert!((e[0] - 3.0).abs() < 1e-12 && (e[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_of_symmetric_2x2() {
        // eigenvalues of [[2,1],[1,2]] are 3 and 1
        let m = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let e = symmetric_eigenvalues(&m);
        assert!((e[0] - 3.0).abs() < 1e-12 && (e[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pfaffian_2x2_and_4x4() {
        let m = vec![vec![0.0, 5.0], vec![-5.0, 0.0]];
        assert_eq!(pfaffian(&m), 5.0);
        // pf = a01*a23 - a02*a13 + a03*a12
        let a = vec![
            vec![0.0, 1.0, 2.0, 3.0],
            vec![-1.0, 0.0, 4.0, 5.0],
            vec![-2.0, -4.0, 0.0, 6.0],
            vec![-3.0, -5.0, -6.0, 0.0],
        ];
        assert!((pfaffian(&a) - (1.0 * 6.0 - 2.0 * 5.0 + 3.0 * 4.0)).abs() < 1e-14);
    }

    #[test]
    fn rank_of_rotation_block() {
        let m = vec![
            vec![0.0, 1.0, 0.0, 0.0],
            vec![-1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
        ];
        assert_eq!(numerical_rank(&m, 1e-9), 2);
        assert_eq!(numerical_rank(&vec![vec![0.0; 4]; 4], 1e-9), 0);
    }

    #[test]
    fn central_diff_of_quadratic() {
        let f = |x: &[f64]| x[0] * x[0] + 3.0 * x[1];
        assert!((central_diff(f, &[2.0, 0.0], 0, 1e-5) - 4.0).abs() < 1e-9);
        assert!((central_diff(f, &[2.0, 0.0], 1, 1e-5) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn real_complex_roundtrip() {
        let xy = vec![1.0, 2.0, -0.5, 0.25];
        assert_eq!(to_real(&to_complex(&xy)), xy);
    }
}
