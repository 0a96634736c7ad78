//! Exact integer lattice algebra: Smith and Hermite normal forms, kernels,
//! images and the torsion of cokernels.

use std::fmt;

use num_traits::Zero;

use crate::scalar::ExactInt;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<I> {
    rows: usize,
    cols: usize,
    data: Vec<I>,
}

impl<I: ExactInt> Matrix<I> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![I::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = I::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<I>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| I::from_small(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<I>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
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

    pub fn row(&self, i: usize) -> &[I] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<I> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<I>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<I>) -> Matrix<I> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a.clone() * other[(k, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() + p;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[I]) -> Vec<I> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(I::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> I {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return I::one();
        }
        let mut a = self.clone();
        let mut sign = I::one();
        let mut prev = I::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return I::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &I) {
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * k.clone();
            self[(dst, j)] = self[(dst, j)].clone() + v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &I) {
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * k.clone();
            self[(i, dst)] = self[(i, dst)].clone() + v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }
}

impl<I> std::ops::Index<(usize, usize)> for Matrix<I> {
    type Output = I;
    fn index(&self, (i, j): (usize, usize)) -> &I {
        &self.data[i * self.cols + j]
    }
}

impl<I> std::ops::IndexMut<(usize, usize)> for Matrix<I> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut I {
        &mut self.data[i * self.cols + j]
    }
}

impl<I: ExactInt> fmt::Display for Matrix<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` in Smith form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith<I> {
    pub d: Matrix<I>,
    pub u: Matrix<I>,
    pub v: Matrix<I>,
    /// Inverse of `u`, kept for image computations.
    pub u_inv: Matrix<I>,
}

impl<I: ExactInt> Smith<I> {
    pub fn diagonal(&self) -> Vec<I> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form. Pivots are chosen as the entry of least nonzero
/// absolute value in the remaining block, ties broken in row-major order.
pub fn smith_normal_form<I: ExactInt>(m: &Matrix<I>) -> Smith<I> {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = Matrix::identity(rows);
    let mut u_inv = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| x.abs() < d[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Smith { d, u, v, u_inv };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = d[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    let nq = -q.clone();
                    d.add_row(i, t, &nq);
                    u.add_row(i, t, &nq);
                    u_inv.add_col(t, i, &q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = d[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    let nq = -q;
                    d.add_col(j, t, &nq);
                    v.add_col(j, t, &nq);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = I::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    u_inv.add_col(i, t, &-one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    Smith { d, u, v, u_inv }
}

pub fn elementary_divisors<I: ExactInt>(m: &Matrix<I>) -> Vec<I> {
    smith_normal_form(m).diagonal()
}

/// Nontrivial torsion of `Z^rows / M Z^cols`: elementary divisors other than 0 and 1.
pub fn quotient_torsion<I: ExactInt>(m: &Matrix<I>) -> Vec<I> {
    elementary_divisors(m)
        .into_iter()
        .filter(|x| !x.is_zero() && !x.is_one())
        .collect()
}

pub fn rank<I: ExactInt>(m: &Matrix<I>) -> usize {
    smith_normal_form(m).rank()
}

/// Basis of the column lattice `M Z^cols`, in Hermite normal form.
pub fn image_basis<I: ExactInt>(m: &Matrix<I>) -> Vec<Vec<I>> {
    let s = smith_normal_form(m);
    let gens: Vec<Vec<I>> = s
        .diagonal()
        .into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| s.u_inv.column(i).into_iter().map(|c| c * x.clone()).collect())
        .collect();
    hermite_basis(&gens)
}

/// Basis of the integer kernel `{x : M x = 0}`, in Hermite normal form.
pub fn kernel_basis<I: ExactInt>(m: &Matrix<I>) -> Vec<Vec<I>> {
    let s = smith_normal_form(m);
    let r = s.rank();
    let gens: Vec<Vec<I>> = (r..m.cols).map(|j| s.v.column(j)).collect();
    hermite_basis(&gens)
}

/// Row-style Hermite normal form of the lattice spanned by `gens`:
/// pivots positive, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_basis<I: ExactInt>(gens: &[Vec<I>]) -> Vec<Vec<I>> {
    let Some(n) = gens.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<I>> = gens.to_vec();
    let mut out: Vec<Vec<I>> = Vec::new();
    for c in 0..n {
        loop {
            let Some(k) = (0..rows.len())
                .filter(|&k| !rows[k][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()))
            else {
                break;
            };
            let p = rows[k][c].clone();
            let mut done = true;
            for i in 0..rows.len() {
                if i == k || rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&p);
                let pr = rows[k].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x = x.clone() - q.clone() * y.clone();
                }
                done &= rows[i][c].is_zero();
            }
            if done {
                let mut pr = rows.swap_remove(k);
                if pr[c].is_negative() {
                    pr.iter_mut().for_each(|x| *x = -x.clone());
                }
                out.push(pr);
                break;
            }
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    for k in 0..out.len() {
        let c = out[k].iter().position(|x| !x.is_zero()).expect("nonzero row");
        let p = out[k][c].clone();
        for i in 0..k {
            let q = out[i][c].div_floor(&p);
            if !q.is_zero() {
                let pr = out[k].clone();
                for (x, y) in out[i].iter_mut().zip(&pr) {
                    *x = x.clone() - q.clone() * y.clone();
                }
            }
        }
    }
    out
}

/// A sublattice of `Z^n` held by its Hermite basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice<I> {
    dim: usize,
    basis: Vec<Vec<I>>,
}

impl<I: ExactInt> Lattice<I> {
    pub fn spanned_by(dim: usize, gens: &[Vec<I>]) -> Self {
        Lattice {
            dim,
            basis: hermite_basis(gens),
        }
    }

    pub fn full(dim: usize) -> Self {
        let id = Matrix::<I>::identity(dim);
        Lattice {
            dim,
            basis: id.to_rows(),
        }
    }

    pub fn basis(&self) -> &[Vec<I>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &[I]) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let c = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if v[..c].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x = x.clone() - q.clone() * y.clone();
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

impl Lattice<i64> {
    /// Calls `f` on every lattice vector in `[0, bound]^dim`, stopping early
    /// when `f` returns false. Returns whether the walk completed.
    pub fn all_in_box(&self, bound: i64, mut f: impl FnMut(&[i64]) -> bool) -> bool {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|x| *x != 0).expect("nonzero row"))
            .collect();
        let mut v = vec![0; self.dim];
        self.box_walk(0, &pivots, bound, &mut v, &mut f)
    }

    fn box_walk(
        &self,
        i: usize,
        pivots: &[usize],
        bound: i64,
        v: &mut Vec<i64>,
        f: &mut impl FnMut(&[i64]) -> bool,
    ) -> bool {
        let settled = pivots.get(i).copied().unwrap_or(self.dim);
        let from = if i == 0 { 0 } else { pivots[i - 1] };
        if v[from..settled].iter().any(|x| !(0..=bound).contains(x)) {
            return true;
        }
        if i == self.basis.len() {
            return f(v);
        }
        let row = &self.basis[i];
        let d = row[pivots[i]];
        // pivots are positive, so the admissible multiples form an interval
        let lo = -v[pivots[i]].div_euclid(d);
        let hi = (bound - v[pivots[i]]).div_euclid(d);
        for a in lo..=hi {
            for (x, y) in v.iter_mut().zip(row) {
                *x += a * y;
            }
            let go = self.box_walk(i + 1, pivots, bound, v, f);
            for (x, y) in v.iter_mut().zip(row) {
                *x -= a * y;
            }
            if !go {
                return false;
            }
        }
        true
    }
}
