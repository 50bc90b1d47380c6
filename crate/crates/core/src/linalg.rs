//! Dense integer matrices, Smith normal form with unimodular transforms,
//! and linear congruences `A·x ≡ b (mod m)` for arbitrary `m ≥ 2`.
//!
//! Everything here is generic over the integer scalar. The solver layer uses
//! [`num_bigint::BigInt`] (see [`crate::IntMatrix`]) because the transforms
//! can grow well past the size of the 0/1 input; fixed-width scalars are fine
//! for small matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_traits::Signed;

/// Integer scalar usable by the Smith normal form.
pub trait Scalar: Integer + Signed + Clone + fmt::Debug {}

impl<T: Integer + Signed + Clone + fmt::Debug> Scalar for T {}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &T) {
        for j in 0..self.cols {
            let delta = self[(src, j)].clone() * factor.clone();
            self[(dst, j)] = self[(dst, j)].clone() + delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &T) {
        for i in 0..self.rows {
            let delta = self[(i, src)].clone() * factor.clone();
            self[(i, dst)] = self[(i, dst)].clone() + delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:?}", self.data[i * self.cols + j]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `left · A · right = diag(diagonal)` with `left`, `right` unimodular,
/// the diagonal non-negative, each entry dividing the next, zeros last.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub diagonal: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: Scalar> SmithForm<T> {
    /// Number of nonzero invariant factors (rank over the rationals).
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The nonzero invariant factors.
    pub fn invariant_factors(&self) -> &[T] {
        &self.diagonal[..self.rank()]
    }
}

pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut left = Matrix::identity(rows);
    let mut right = Matrix::identity(cols);
    let steps = rows.min(cols);

    'pivots: for t in 0..steps {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivots;
            };
            d.swap_rows(t, pi);
            left.swap_rows(t, pi);
            d.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in (t + 1)..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row(i, t, &q);
                left.add_row(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in (t + 1)..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col(j, t, &q);
                right.add_col(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // every trailing entry must be a multiple of the pivot
            let offender = ((t + 1)..rows)
                .find(|&i| ((t + 1)..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            if let Some(i) = offender {
                d.add_row(t, i, &T::one());
                left.add_row(t, i, &T::one());
                continue;
            }
            break;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..steps).map(|i| d[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        left,
        right,
    }
}

/// Solutions of `A·x ≡ b (mod m)` described through a Smith form of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence<T> {
    /// One solution, entries in `[0, m)`, or `None` when infeasible.
    pub particular: Option<Vec<T>>,
    /// Generators of the solution module of `A·x ≡ 0`, entries in `[0, m)`.
    pub kernel: Vec<Vec<T>>,
    /// `gcd(d_i, m)` for each nonzero invariant factor `d_i`.
    pub factor_gcds: Vec<T>,
    /// Number of free coordinates (columns beyond the rank).
    pub free: usize,
}

fn mod_inverse<T: Scalar>(a: &T, m: &T) -> Option<T> {
    if m.is_one() {
        return Some(T::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Solves `A·x ≡ b (mod m)` given the Smith form of `A`.
///
/// With `y = right⁻¹·x` the system becomes `d_i·y_i ≡ (left·b)_i`, which is
/// solvable iff `gcd(d_i, m)` divides the right-hand side (rows past the
/// rank need it to vanish mod `m`).
pub fn solve_congruence<T: Scalar>(snf: &SmithForm<T>, b: &[T], m: &T) -> Congruence<T> {
    let rows = snf.left.rows();
    let cols = snf.right.rows();
    assert_eq!(b.len(), rows, "right-hand side length");
    let k = snf.rank();
    let c: Vec<T> = snf
        .left
        .mul_vec(b)
        .into_iter()
        .map(|x| x.mod_floor(m))
        .collect();

    let factor_gcds: Vec<T> = snf.diagonal[..k].iter().map(|d| d.gcd(m)).collect();
    let feasible =
        (0..k).all(|i| c[i].is_multiple_of(&factor_gcds[i])) && (k..rows).all(|i| c[i].is_zero());

    let reduce = |y: Vec<T>| -> Vec<T> {
        snf.right
            .mul_vec(&y)
            .into_iter()
            .map(|x| x.mod_floor(m))
            .collect()
    };

    let particular = feasible.then(|| {
        let mut y = vec![T::zero(); cols];
        for i in 0..k {
            let g = &factor_gcds[i];
            let modulus = m.clone() / g.clone();
            let scaled_d = snf.diagonal[i].clone() / g.clone();
            let scaled_c = c[i].clone() / g.clone();
            let inv = mod_inverse(&scaled_d, &modulus).expect("coprime after scaling");
            y[i] = (scaled_c * inv).mod_floor(&modulus);
        }
        reduce(y)
    });

    let mut kernel = Vec::new();
    for (i, g) in factor_gcds.iter().enumerate() {
        if !g.is_one() {
            let mut y = vec![T::zero(); cols];
            y[i] = m.clone() / g.clone();
            kernel.push(reduce(y));
        }
    }
    for j in k..cols {
        let mut y = vec![T::zero(); cols];
        y[j] = T::one();
        kernel.push(reduce(y));
    }

    Congruence {
        particular,
        kernel,
        factor_gcds,
        free: cols - k,
    }
}
