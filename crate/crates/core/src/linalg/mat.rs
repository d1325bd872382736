use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::scalar::{FieldSpec, Scalar};

/// Exact dense matrix over a [`FieldSpec`], stored row-major.
///
/// Linear maps use the row-vector convention throughout the crate: an
/// `r x c` matrix `M` is the map `k^r -> k^c`, `v |-> v M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(bad) = data.iter().find(|s| !field.is_valid(s)) {
            return Err(Error::InvalidField(format!("{bad:?} is not an element of {field}")));
        }
        Ok(Mat { field, rows, cols, data })
    }

    pub(crate) fn raw(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        debug_assert_eq!(data.len(), rows * cols);
        Mat { field, rows, cols, data }
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::ONE;
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { field, rows, cols, data }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Mat {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat { field, rows: n, cols, data }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect())
    }

    pub fn row_vector(field: FieldSpec, v: Vec<Scalar>) -> Mat {
        let n = v.len();
        Mat { field, rows: 1, cols: n, data: v }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = vec![Scalar::ZERO; self.rows * other.cols];
        for r in 0..self.rows {
            let orow = &mut out[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for (c, o) in orow.iter_mut().enumerate() {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        *o = f.add(o, &f.mul(a, b));
                    }
                }
            }
        }
        Mat::raw(f, self.rows, other.cols, out)
    }

    /// `v M` for a row vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let f = self.field;
        let mut out = vec![Scalar::ZERO; self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = self.get(k, c);
                if !b.is_zero() {
                    *o = f.add(o, &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat::raw(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Mat::raw(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let f = self.field;
        Mat::raw(f, self.rows, self.cols, self.data.iter().map(|a| f.mul(a, s)).collect())
    }

    pub fn neg(&self) -> Mat {
        let f = self.field;
        Mat::raw(f, self.rows, self.cols, self.data.iter().map(|a| f.neg(a)).collect())
    }

    /// Linear combination `sum coeffs[i] * mats[i]`; `shape` is used when the list is empty.
    pub fn combination(field: FieldSpec, shape: (usize, usize), coeffs: &[Scalar], mats: &[Mat]) -> Mat {
        let mut data = vec![Scalar::ZERO; shape.0 * shape.1];
        for (c, m) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            for (o, a) in data.iter_mut().zip(&m.data) {
                if !a.is_zero() {
                    *o = field.add(o, &field.mul(c, a));
                }
            }
        }
        Mat::raw(field, shape.0, shape.1, data)
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat::raw(self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn vstack_all(field: FieldSpec, cols: usize, mats: &[Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in mats {
            assert_eq!(m.cols, cols);
            rows += m.rows;
            data.extend(m.data.iter().cloned());
        }
        Mat::raw(field, rows, cols, data)
    }

    pub fn hstack_all(field: FieldSpec, rows: usize, mats: &[Mat]) -> Mat {
        let cols: usize = mats.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in mats {
            assert_eq!(m.rows, rows);
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, off + c, m.get(r, c).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Mat::raw(self.field, idx.len(), self.cols, data)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        Mat::from_fn(self.field, self.rows + other.rows, self.cols + other.cols, |r, c| {
            if r < self.rows && c < self.cols {
                self.get(r, c).clone()
            } else if r >= self.rows && c >= self.cols {
                other.get(r - self.rows, c - self.cols).clone()
            } else {
                Scalar::ZERO
            }
        })
    }

    pub fn direct_sum_all(field: FieldSpec, mats: &[Mat]) -> Mat {
        let rows = mats.iter().map(|m| m.rows).sum();
        let cols = mats.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in mats {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r0 + r, c0 + c, m.get(r, c).clone());
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Kronecker product; with row vectors, `kron(v, w) kron(A, B) = kron(vA, wB)`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = self.field;
        Mat::from_fn(f, self.rows * other.rows, self.cols * other.cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                return Scalar::ZERO;
            }
            f.mul(a, other.get(r % other.rows, c % other.cols))
        })
    }

    /// Reduced row echelon form and the strictly increasing pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(src) = (pr..rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if src != pr {
                for k in 0..cols {
                    self.data.swap(src * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv(self.get(pr, c)).expect("nonzero pivot");
            if !inv.is_one() {
                for k in c..cols {
                    let v = f.mul(self.get(pr, k), &inv);
                    self.set(pr, k, v);
                }
            }
            let pivot_row: Vec<Scalar> = self.row(pr)[c..].to_vec();
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for (k, pv) in pivot_row.iter().enumerate() {
                    if pv.is_zero() {
                        continue;
                    }
                    let idx = r * cols + c + k;
                    self.data[idx] = f.sub(&self.data[idx], &f.mul(&factor, pv));
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows form a basis of the right null space `{v : M v^T = 0}`.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Scalar::ONE);
            for (pi, &pc) in pivots.iter().enumerate() {
                let v = r.get(pi, fc);
                if !v.is_zero() {
                    out.set(i, pc, f.neg(v));
                }
            }
        }
        out
    }

    /// Rows form a basis of `{v : v M = 0}`.
    pub fn left_kernel(&self) -> Mat {
        self.transpose().kernel_basis()
    }

    /// Reduced basis of the row space, i.e. the image of `v |-> v M`.
    pub fn image_basis(&self) -> Mat {
        let (r, p) = self.rref();
        r.select_rows(&(0..p.len()).collect::<Vec<_>>())
    }

    /// Some `X` with `A X = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>> {
        if self.rows != b.rows {
            return Err(Error::Shape(format!("solve: {}x{} against {}x{}", self.rows, self.cols, b.rows, b.cols)));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (pi, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, r.get(pi, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Some `X` with `X A = b`.
    pub fn solve_left(&self, b: &Mat) -> Result<Option<Mat>> {
        Ok(self.transpose().solve(&b.transpose())?.map(|x| x.transpose()))
    }

    pub fn invert(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Mat::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(Scalar::ZERO, |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Flattens row-major into a `1 x (rows*cols)` row vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn unflatten(field: FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> Mat {
        Mat::raw(field, rows, cols, v.to_vec())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
