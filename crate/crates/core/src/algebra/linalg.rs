//! Dense matrices over a [`Ring`] and elimination over a (possibly skew) field.
//!
//! Row reduction only multiplies rows on the left, so every routine taking a
//! [`Field`] is correct over division rings: ranks are left row ranks, and
//! kernels are right kernels `{x : M x = 0}` with `x` scaled on the right.

use super::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<T: Clone>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &cols)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

pub fn zero<R: Ring>(r: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::from_vec(rows, cols, vec![r.zero(); rows * cols])
}

pub fn identity<R: Ring>(r: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { r.one() } else { r.zero() })
}

pub fn diagonal<R: Ring>(r: &R, d: &[R::Elem]) -> Matrix<R::Elem> {
    let n = d.len();
    Matrix::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { r.zero() })
}

pub fn block_diag<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| {
        if i < a.rows && j < a.cols {
            a.get(i, j).clone()
        } else if i >= a.rows && j >= a.cols {
            b.get(i - a.rows, j - a.cols).clone()
        } else {
            r.zero()
        }
    })
}

pub fn is_zero<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> bool {
    a.data.iter().all(|x| r.is_zero(x))
}

pub fn add<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "shape mismatch in add");
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a
            .data
            .iter()
            .zip(&b.data)
            .map(|(x, y)| r.add(x, y))
            .collect(),
    }
}

pub fn sub<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "shape mismatch in sub");
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a
            .data
            .iter()
            .zip(&b.data)
            .map(|(x, y)| r.sub(x, y))
            .collect(),
    }
}

pub fn mul<R: Ring>(r: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "shape mismatch in mul");
    let mut out = zero(r, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if r.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if r.is_zero(y) {
                    continue;
                }
                let t = r.mul(x, y);
                let idx = i * out.cols + j;
                out.data[idx] = r.add(&out.data[idx], &t);
            }
        }
    }
    out
}

/// `c * A` (scalar on the left of every entry).
pub fn scale_left<R: Ring>(r: &R, c: &R::Elem, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| r.mul(c, x))
}

/// `A * c` (scalar on the right of every entry).
pub fn scale_right<R: Ring>(r: &R, a: &Matrix<R::Elem>, c: &R::Elem) -> Matrix<R::Elem> {
    a.map(|x| r.mul(x, c))
}

pub fn pow<R: Ring>(r: &R, a: &Matrix<R::Elem>, mut e: u64) -> Matrix<R::Elem> {
    assert!(a.is_square());
    let mut acc = identity(r, a.rows);
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(r, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(r, &base, &base);
        }
    }
    acc
}

/// Row vector times matrix.
pub fn vec_mul<R: Ring>(r: &R, v: &[R::Elem], a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    assert_eq!(v.len(), a.rows);
    (0..a.cols)
        .map(|j| {
            let mut acc = r.zero();
            for (i, x) in v.iter().enumerate() {
                if !r.is_zero(x) {
                    acc = r.add(&acc, &r.mul(x, a.get(i, j)));
                }
            }
            acc
        })
        .collect()
}

/// Matrix times column vector.
pub fn mul_vec<R: Ring>(r: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(v.len(), a.cols);
    (0..a.rows)
        .map(|i| {
            let mut acc = r.zero();
            for (j, x) in v.iter().enumerate() {
                if !r.is_zero(x) {
                    acc = r.add(&acc, &r.mul(a.get(i, j), x));
                }
            }
            acc
        })
        .collect()
}

/// Reduced row echelon form of `M` with the left transformation `T`
/// satisfying `T * M = form`. Pivot entries are normalized to one.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub rank: usize,
    pub form: Matrix<E>,
    pub pivots: Vec<usize>,
    pub transform: Matrix<E>,
}

pub fn echelon<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let mut t = identity(f, m.rows);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(pr) = (row..a.rows).find(|&i| !f.is_zero(a.get(i, col))) else {
            continue;
        };
        swap_rows(&mut a, row, pr);
        swap_rows(&mut t, row, pr);
        let inv = f.inv(a.get(row, col)).expect("nonzero pivot is invertible");
        scale_row(f, &mut a, row, &inv);
        scale_row(f, &mut t, row, &inv);
        for i in 0..a.rows {
            if i == row {
                continue;
            }
            let c = a.get(i, col).clone();
            if f.is_zero(&c) {
                continue;
            }
            axpy_row(f, &mut a, i, row, &c);
            axpy_row(f, &mut t, i, row, &c);
        }
        pivots.push(col);
        row += 1;
    }
    Echelon {
        rank: pivots.len(),
        form: a,
        pivots,
        transform: t,
    }
}

fn swap_rows<E: Clone>(m: &mut Matrix<E>, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..m.cols {
        m.data.swap(i * m.cols + c, j * m.cols + c);
    }
}

fn scale_row<F: Field>(f: &F, m: &mut Matrix<F::Elem>, i: usize, c: &F::Elem) {
    for k in 0..m.cols {
        let idx = i * m.cols + k;
        m.data[idx] = f.mul(c, &m.data[idx]);
    }
}

/// `row_i <- row_i - c * row_j`.
fn axpy_row<F: Field>(f: &F, m: &mut Matrix<F::Elem>, i: usize, j: usize, c: &F::Elem) {
    for k in 0..m.cols {
        let y = &m.data[j * m.cols + k];
        if f.is_zero(y) {
            continue;
        }
        let t = f.mul(c, y);
        let idx = i * m.cols + k;
        m.data[idx] = f.sub(&m.data[idx], &t);
    }
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    echelon(f, m).rank
}

/// Basis of `{x : M x = 0}`, one vector per non-pivot column.
pub fn right_kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let e = echelon(f, m);
    kernel_from_echelon(f, &e, m.cols)
}

pub(crate) fn kernel_from_echelon<F: Field>(
    f: &F,
    e: &Echelon<F::Elem>,
    cols: usize,
) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::new();
    for j in 0..cols {
        if e.pivots.contains(&j) {
            continue;
        }
        let mut x = vec![f.zero(); cols];
        x[j] = f.one();
        for (r, &pc) in e.pivots.iter().enumerate() {
            x[pc] = f.neg(e.form.get(r, j));
        }
        out.push(x);
    }
    out
}

/// Two-sided inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let e = echelon(f, m);
    (e.rank == m.rows).then_some(e.transform)
}

/// Characteristic polynomial `det(x I - A)` by Berkowitz's division-free
/// algorithm; valid over any commutative ring. Coefficients low to high.
pub fn charpoly<R: Ring>(r: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    assert!(a.is_square());
    let n = a.rows;
    // c holds det(xI - A_k) for the leading k x k block, highest degree first
    let mut c = vec![r.one()];
    for k in 0..n {
        // A_{k+1} = [[A_k, col], [row, a_kk]]
        let akk = a.get(k, k).clone();
        let col: Vec<R::Elem> = (0..k).map(|i| a.get(i, k).clone()).collect();
        let row: Vec<R::Elem> = (0..k).map(|j| a.get(k, j).clone()).collect();
        // Toeplitz column: 1, -a_kk, -row*col, -row*A*col, ...
        let mut t = vec![r.one(), r.neg(&akk)];
        let mut v = col.clone();
        for _ in 0..k {
            let dot = row
                .iter()
                .zip(&v)
                .fold(r.zero(), |acc, (x, y)| r.add(&acc, &r.mul(x, y)));
            t.push(r.neg(&dot));
            v = (0..k)
                .map(|i| (0..k).fold(r.zero(), |acc, j| r.add(&acc, &r.mul(a.get(i, j), &v[j]))))
                .collect();
        }
        let mut next = vec![r.zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = r.zero();
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    acc = r.add(&acc, &r.mul(&t[i - j], cj));
                }
            }
            *slot = acc;
        }
        c = next;
    }
    c.reverse();
    c
}
