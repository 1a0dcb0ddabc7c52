//! Field-generic dense linear algebra: determinants, linear solves and
//! Schur complements.
//!
//! Exact determinants use fraction-free Bareiss elimination, which keeps
//! the intermediate entries equal to minors of the input and so bounds
//! coefficient growth on the rapidly growing moment matrices. The float
//! path uses Gaussian elimination with largest-modulus partial pivoting.
//! Schur complements never form `A^{-1}`; they call [`Mat::solve`]
//! column-by-column.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over a scalar field.
#[derive(Clone, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> std::fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Scalar> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() * c.clone()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    /// Copy of the `[r0..r1) x [c0..c1)` block.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        assert!(r1 <= self.rows && c1 <= self.cols && r0 <= r1 && c0 <= c1);
        Mat::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Assemble from a rectangular grid of blocks. Block row heights and
    /// column widths must be consistent across the grid.
    pub fn from_blocks(grid: &[Vec<Mat<F>>]) -> Self {
        assert!(!grid.is_empty() && !grid[0].is_empty(), "empty block grid");
        let heights: Vec<usize> = grid.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for (bi, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), widths.len(), "ragged block grid");
            for (bj, b) in row.iter().enumerate() {
                assert_eq!(b.rows, heights[bi], "block height mismatch");
                assert_eq!(b.cols, widths[bj], "block width mismatch");
            }
        }
        let total_r: usize = heights.iter().sum();
        let total_c: usize = widths.iter().sum();
        let mut out = Mat::zeros(total_r, total_c);
        let mut roff = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut coff = 0;
            for b in row {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out[(roff + i, coff + j)] = b[(i, j)].clone();
                    }
                }
                coff += b.cols;
            }
            roff += heights[bi];
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Pivot row in column `col`, scanning rows `from..rows`. Exact
    /// fields take the first nonzero entry, floats the largest modulus.
    fn pick_pivot(&self, col: usize, from: usize) -> Option<usize> {
        if F::EXACT {
            (from..self.rows).find(|&r| !self[(r, col)].is_zero())
        } else {
            let mut best: Option<(usize, f64)> = None;
            for r in from..self.rows {
                let m = self[(r, col)].magnitude();
                if m > 0.0 && best.is_none_or(|(_, bm)| m > bm) {
                    best = Some((r, m));
                }
            }
            best.map(|(r, _)| r)
        }
    }

    /// Determinant. Fraction-free Bareiss over exact fields, pivoted
    /// Gaussian elimination over floats. Returns zero for singular input.
    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        if F::EXACT {
            self.det_bareiss()
        } else {
            self.det_gauss()
        }
    }

    fn det_bareiss(&self) -> F {
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = F::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match m.pick_pivot(k, k + 1) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = !sign;
                    }
                    None => return F::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)].clone() * m[(i, j)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    // Exact division: the quotient is a minor of the input.
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, k)] = F::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    fn det_gauss(&self) -> F {
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for k in 0..n {
            match m.pick_pivot(k, k) {
                Some(r) => {
                    if r != k {
                        m.swap_rows(k, r);
                        det = -det;
                    }
                }
                None => return F::zero(),
            }
            let pivot = m[(k, k)].clone();
            det = det * pivot.clone();
            for i in k + 1..n {
                let factor = m[(i, k)].clone() / pivot.clone();
                for j in k + 1..n {
                    let v = m[(i, j)].clone() - factor.clone() * m[(k, j)].clone();
                    m[(i, j)] = v;
                }
                m[(i, k)] = F::zero();
            }
        }
        det
    }

    /// Solve `A x = b` for every column of `b`.
    pub fn solve(&self, rhs: &Mat<F>) -> Result<Mat<F>> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "solve needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.rows != rhs.rows {
            return Err(Error::Shape(format!(
                "solve: lhs has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for k in 0..n {
            let piv = a.pick_pivot(k, k).ok_or(Error::SingularMatrix)?;
            a.swap_rows(k, piv);
            b.swap_rows(k, piv);
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let factor = a[(i, k)].clone() / pivot.clone();
                for j in k + 1..n {
                    let v = a[(i, j)].clone() - factor.clone() * a[(k, j)].clone();
                    a[(i, j)] = v;
                }
                a[(i, k)] = F::zero();
                for j in 0..b.cols {
                    let v = b[(i, j)].clone() - factor.clone() * b[(k, j)].clone();
                    b[(i, j)] = v;
                }
            }
        }
        // Back substitution.
        let mut x = Mat::<F>::zeros(n, b.cols);
        for j in 0..b.cols {
            for i in (0..n).rev() {
                let mut acc = b[(i, j)].clone();
                for k in i + 1..n {
                    acc = acc - a[(i, k)].clone() * x[(k, j)].clone();
                }
                x[(i, j)] = acc / a[(i, i)].clone();
            }
        }
        Ok(x)
    }

    /// Schur complement with respect to the trailing block, after the
    /// split `M = [[A, B], [C, D]]` with `A` the leading `k x k` block:
    /// returns `D - C A^{-1} B`. The input need not be square.
    pub fn schur_complement(&self, k: usize) -> Result<Mat<F>> {
        if k > self.rows || k > self.cols {
            return Err(Error::Shape(format!(
                "leading block size {} exceeds matrix {}x{}",
                k, self.rows, self.cols
            )));
        }
        let a = self.block(0, k, 0, k);
        let b = self.block(0, k, k, self.cols);
        let c = self.block(k, self.rows, 0, k);
        let d = self.block(k, self.rows, k, self.cols);
        let x = a.solve(&b).map_err(|e| match e {
            Error::SingularMatrix => Error::SingularPivot,
            other => other,
        })?;
        Ok(d.sub(&c.matmul(&x)))
    }

    /// Row-pivoted triangular factorization `P A = L U` with `L` unit
    /// lower triangular. Returns `(perm, l, u)` where `perm[i]` is the
    /// source row of output row `i`.
    pub fn lu(&self) -> Result<(Vec<usize>, Mat<F>, Mat<F>)> {
        if !self.is_square() {
            return Err(Error::Shape("lu needs a square matrix".into()));
        }
        let n = self.rows;
        let mut u = self.clone();
        let mut l = Mat::<F>::identity(n);
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let piv = u.pick_pivot(k, k).ok_or(Error::SingularMatrix)?;
            if piv != k {
                u.swap_rows(k, piv);
                perm.swap(k, piv);
                for j in 0..k {
                    let tmp = l[(k, j)].clone();
                    l[(k, j)] = l[(piv, j)].clone();
                    l[(piv, j)] = tmp;
                }
            }
            let pivot = u[(k, k)].clone();
            for i in k + 1..n {
                let factor = u[(i, k)].clone() / pivot.clone();
                l[(i, k)] = factor.clone();
                for j in k..n {
                    let v = u[(i, j)].clone() - factor.clone() * u[(k, j)].clone();
                    u[(i, j)] = v;
                }
                u[(i, k)] = F::zero();
            }
        }
        Ok((perm, l, u))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| self[(i, j)].render()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Cf64, Rat};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_fraction(n, d)
    }

    fn rmat(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_fn(rows.len(), rows[0].len(), |i, j| {
            Rat::from_int(rows[i][j])
        })
    }

    #[test]
    fn det_identity_and_small() {
        assert_eq!(rmat(&[&[1, 0], &[0, 1]]).det(), Rat::from_int(1));
        assert_eq!(rmat(&[&[2, 1], &[1, 1]]).det(), Rat::from_int(1));
    }

    #[test]
    fn det_vandermonde_nodes_012() {
        let m = rmat(&[&[1, 0, 0], &[1, 1, 1], &[1, 2, 4]]);
        // (1-0)(2-0)(2-1) = 2
        assert_eq!(m.det(), Rat::from_int(2));
    }

    #[test]
    fn det_needs_row_swap() {
        let m = rmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), Rat::from_int(-1));
    }

    #[test]
    fn solve_identity_and_diagonal() {
        let b = Mat::from_fn(2, 1, |i, _| rat(i as i64 + 3, 1));
        let x = Mat::<Rat>::identity(2).solve(&b).unwrap();
        assert_eq!(x, b);

        let a = rmat(&[&[2, 0], &[0, 4]]);
        let b = Mat::from_fn(2, 1, |_, _| Rat::from_int(1));
        let x = a.solve(&b).unwrap();
        assert_eq!(x[(0, 0)], rat(1, 2));
        assert_eq!(x[(1, 0)], rat(1, 4));
    }

    #[test]
    fn solve_multiplies_back() {
        let a = Mat::from_rows(vec![
            vec![rat(1, 1), rat(1, 2)],
            vec![rat(1, 2), rat(1, 2)],
        ]);
        let b = Mat::from_rows(vec![vec![rat(1, 1)], vec![rat(0, 1)]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x[(0, 0)], rat(2, 1));
        assert_eq!(x[(1, 0)], rat(-2, 1));
        assert_eq!(a.matmul(&x), b);
    }

    #[test]
    fn solve_singular_errors() {
        let a = rmat(&[&[1, 2], &[2, 4]]);
        let b = Mat::<Rat>::identity(2);
        assert_eq!(a.solve(&b), Err(Error::SingularMatrix));
    }

    #[test]
    fn schur_examples() {
        let m = rmat(&[&[2, 1], &[1, 1]]);
        let s = m.schur_complement(1).unwrap();
        assert_eq!(s[(0, 0)], rat(1, 2));

        let m = rmat(&[&[1, 0, 5], &[0, 1, 7], &[3, 4, 0]]);
        let s = m.schur_complement(2).unwrap();
        assert_eq!(s[(0, 0)], Rat::from_int(-43));
    }

    #[test]
    fn schur_block_triangular_keeps_d() {
        let m = rmat(&[&[3, 1, 5], &[1, 2, 7], &[0, 0, 9]]);
        let s = m.schur_complement(2).unwrap();
        assert_eq!(s[(0, 0)], Rat::from_int(9));
    }

    #[test]
    fn schur_singular_pivot() {
        let m = rmat(&[&[0, 0, 1], &[0, 0, 2], &[1, 2, 3]]);
        assert_eq!(m.schur_complement(2), Err(Error::SingularPivot));
    }

    #[test]
    fn lu_reconstructs() {
        let m = rmat(&[&[0, 2, 1], &[1, 1, 1], &[2, 0, 5]]);
        let (perm, l, u) = m.lu().unwrap();
        let pm = Mat::from_fn(3, 3, |i, j| {
            if perm[i] == j {
                Rat::from_int(1)
            } else {
                Rat::from_int(0)
            }
        });
        assert_eq!(l.matmul(&u), pm.matmul(&m));
    }

    #[test]
    fn float_det_matches_exact_on_integers() {
        let entries = [[3i64, 1, 4], [1, 5, 9], [2, 6, 5]];
        let exact = Mat::from_fn(3, 3, |i, j| Rat::from_int(entries[i][j]));
        let float = Mat::from_fn(3, 3, |i, j| Cf64::from_int(entries[i][j]));
        assert!(float.det().approx_eq(&exact.det().to_complex(), 1e-10));
    }

    #[test]
    fn empty_det_is_one() {
        let m: Mat<Rat> = Mat::zeros(0, 0);
        assert_eq!(m.det(), Rat::from_int(1));
    }

    #[test]
    fn block_assembly_round_trip() {
        let m = rmat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let grid = vec![
            vec![m.block(0, 2, 0, 1), m.block(0, 2, 1, 3)],
            vec![m.block(2, 3, 0, 1), m.block(2, 3, 1, 3)],
        ];
        assert_eq!(Mat::from_blocks(&grid), m);
    }
}
