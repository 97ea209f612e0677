//! Exact integer and rational linear algebra: Hermite and Smith normal forms,
//! unimodularity tests, primitive vectors, saturated kernel lattices, and the
//! rational solvers the polytope and chart constructions are built on.
//!
//! Everything here is arbitrary precision. Floating point lives in
//! [`crate::numeric`] and [`crate::verify`], never in this module.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact integer scalar used throughout the lattice layer.
pub type Int = BigInt;
/// Exact rational scalar; `BigRational` keeps values in lowest terms.
pub type Rat = BigRational;
/// A point or covector with exact rational entries.
pub type RatVector = Vec<Rat>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is rank deficient: rank {rank} < {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("matrix is empty")]
    Empty,
}

/// Dense integer matrix with exact entries, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Builds a matrix from rows of `i64`s; handy in tests and builders.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Int::from(v));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Stacks column vectors into a matrix.
    pub fn from_cols(cols: &[Vec<Int>]) -> Self {
        let c = cols.len();
        let r = cols[0].len();
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<Int>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev; // exact division in Bareiss
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

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| int_to_f64(self.get(i, j))).collect())
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn int_to_f64(v: &Int) -> f64 {
    // BigInt -> f64 via string round trip is exact for the magnitudes here
    v.to_string().parse::<f64>().unwrap()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    int_to_f64(r.numer()) / int_to_f64(r.denom())
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u * m = h`. The form is
/// canonical: pivots are positive, entries above a pivot lie in `[0, pivot)`,
/// zero rows sink to the bottom. Canonicality keeps golden outputs stable.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean elimination below the pivot: repeatedly reduce by the
        // smallest nonzero entry until a single nonzero remains in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !h.get(r, col).is_zero() {
                    best = match best {
                        None => Some(r),
                        Some(b) if h.get(r, col).abs() < h.get(b, col).abs() => Some(r),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            if b != pivot_row {
                swap_rows(&mut h, pivot_row, b);
                swap_rows(&mut u, pivot_row, b);
            }
            let mut done = true;
            let pivot = h.get(pivot_row, col).clone();
            for r in pivot_row + 1..rows {
                if !h.get(r, col).is_zero() {
                    let q = h.get(r, col).div_floor(&pivot);
                    if !q.is_zero() {
                        row_axpy(&mut h, r, pivot_row, &-q.clone());
                        row_axpy(&mut u, r, pivot_row, &-q);
                    }
                    if !h.get(r, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.get(pivot_row, col).is_zero() {
            continue; // no pivot in this column
        }
        if h.get(pivot_row, col).is_negative() {
            negate_row(&mut h, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        let pivot = h.get(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.get(r, col).div_floor(&pivot);
            if !q.is_zero() {
                row_axpy(&mut h, r, pivot_row, &-q.clone());
                row_axpy(&mut u, r, pivot_row, &-q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for j in 0..m.cols() {
        let va = m.get(a, j).clone();
        let vb = m.get(b, j).clone();
        m.set(a, j, vb);
        m.set(b, j, va);
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        let v = -m.get(r, j).clone();
        m.set(r, j, v);
    }
}

/// row[target] += q * row[source]
fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, q: &Int) {
    for j in 0..m.cols() {
        let v = m.get(target, j) + q * m.get(source, j);
        m.set(target, j, v);
    }
}

/// Number of nonzero rows of a matrix in (any) row echelon form.
fn nonzero_rows(h: &IntMatrix) -> usize {
    (0..h.rows())
        .filter(|&i| (0..h.cols()).any(|j| !h.get(i, j).is_zero()))
        .count()
}

/// Whether `n` column vectors of length `n` form a basis of `Z^n`.
pub fn is_unimodular_basis(vectors: &[Vec<Int>]) -> Result<bool, LatticeError> {
    if vectors.is_empty() {
        return Err(LatticeError::Empty);
    }
    let n = vectors[0].len();
    if vectors.len() != n {
        return Err(LatticeError::DimensionMismatch { expected: n, got: vectors.len() });
    }
    for v in vectors {
        if v.len() != n {
            return Err(LatticeError::DimensionMismatch { expected: n, got: v.len() });
        }
    }
    let det = IntMatrix::from_cols(vectors).det();
    Ok(det.abs().is_one())
}

/// The primitive lattice vector positively spanning the ray through `direction`.
pub fn primitive_generator(direction: &[Rat]) -> Result<Vec<Int>, LatticeError> {
    if direction.iter().all(|r| r.is_zero()) {
        return Err(LatticeError::ZeroVector);
    }
    let mut lcm = Int::one();
    for r in direction {
        lcm = lcm.lcm(r.denom());
    }
    let scaled: Vec<Int> = direction.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut gcd = Int::zero();
    for v in &scaled {
        gcd = gcd.gcd(v);
    }
    Ok(scaled.iter().map(|v| v / &gcd).collect())
}

/// Basis of the saturated integer kernel lattice `ker(p) ∩ Z^d`.
///
/// Requires `p` to have full row rank. The basis comes out of the unimodular
/// transform of a Hermite reduction, so it always spans the saturation, and is
/// itself put in Hermite-canonical order for reproducibility.
pub fn integer_kernel_basis(p: &IntMatrix) -> Result<Vec<Vec<Int>>, LatticeError> {
    let n = p.rows();
    let d = p.cols();
    let (h, u) = hermite_normal_form(&p.transpose());
    let rank = nonzero_rows(&h);
    if rank < n {
        return Err(LatticeError::RankDeficient { rank, expected: n });
    }
    if rank == d {
        return Ok(Vec::new());
    }
    // rows of u past the rank satisfy row * p^T = 0, i.e. p * row^T = 0
    let kernel_rows: Vec<Vec<Int>> = (rank..d).map(|i| u.row(i)).collect();
    let (canon, _) = hermite_normal_form(&IntMatrix::from_rows(kernel_rows));
    Ok((0..canon.rows()).map(|i| canon.row(i)).collect())
}

/// Elementary divisors (Smith normal form diagonal), positive, in
/// divisibility order, zeros dropped.
pub fn smith_divisors(m: &IntMatrix) -> Vec<Int> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Int>> = (0..rows).map(|i| m.row(i)).collect();
    let mut t = 0usize;
    let mut divisors = Vec::new();

    while t < rows.min(cols) {
        // locate the entry of smallest nonzero magnitude in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() {
                    pivot = match pivot {
                        None => Some((i, j)),
                        Some((pi, pj)) if a[i][j].abs() < a[pi][pj].abs() => Some((i, j)),
                        keep => keep,
                    };
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let v = &a[i][j] - &q * &a[t][j];
                    a[i][j] = v;
                }
            }
            if !a[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for row in a.iter_mut().skip(t) {
                    let v = &row[j] - &q * &row[t];
                    row[j] = v;
                }
            }
            if !a[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue; // smaller remainders appeared; pick a new pivot
        }
        // divisibility: fold in any entry the pivot does not divide
        let mut fixed = false;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    for jj in t..cols {
                        let v = &a[t][jj] + &a[i][jj];
                        a[t][jj] = v;
                    }
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    divisors
}

/// Solves `a x = b` exactly over the rationals; `None` if `a` is singular.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        let p = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &p;
        }
        for r in 0..n {
            if r != k && !m[r][k].is_zero() {
                let f = m[r][k].clone();
                for j in k..=n {
                    m[r][j] = &m[r][j] - &f * &m[k][j];
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse of a square rational matrix; `None` if singular.
pub fn invert_rational(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rat> = (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
        cols.push(solve_rational(a, &e)?);
    }
    // cols[j] solves a x = e_j, so it is the j-th column of the inverse
    let mut inv = vec![vec![Rat::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            inv[i][j] = v.clone();
        }
    }
    Some(inv)
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: Int = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Formats a rational as `"p"` or `"p/q"`, always in lowest terms.
pub fn format_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_i64(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
