use crate::linalg::mat::Mat;
use crate::linalg::scalar::{FieldSpec, Scalar};

/// A subspace of `k^n` held by its reduced row echelon basis.
///
/// With an RREF basis the coordinates of a member vector are simply its
/// entries at the pivot columns, and the non-pivot columns index a
/// canonical complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `m`.
    pub fn row_space(m: &Mat) -> Subspace {
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { basis, pivots }
    }

    pub fn zero(field: FieldSpec, n: usize) -> Subspace {
        Subspace { basis: Mat::zeros(field, 0, n), pivots: vec![] }
    }

    pub fn full(field: FieldSpec, n: usize) -> Subspace {
        Subspace { basis: Mat::identity(field, n), pivots: (0..n).collect() }
    }

    pub fn span(field: FieldSpec, n: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace::row_space(&Mat::from_rows(field, n, vectors.to_vec()))
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *o = f.sub(o, &f.mul(&c, b));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_all(&self, m: &Mat) -> bool {
        m.row_iter().all(|r| self.contains(r))
    }

    /// Coordinates with respect to the RREF basis.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Coordinates of every row of `m`; panics if a row lies outside.
    pub fn coords_of_rows(&self, m: &Mat) -> Mat {
        let rows = m.row_iter().map(|r| self.coords(r).expect("vector outside subspace")).collect();
        Mat::from_rows(self.field(), self.dim(), rows)
    }

    pub fn try_coords_of_rows(&self, m: &Mat) -> Option<Mat> {
        let rows: Option<Vec<_>> = m.row_iter().map(|r| self.coords(r)).collect();
        Some(Mat::from_rows(self.field(), self.dim(), rows?))
    }

    /// Columns not hit by a pivot; their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// The projection `k^n -> k^n / self` in complement coordinates.
    pub fn quotient_map(&self) -> Mat {
        let comp = self.complement_indices();
        let n = self.ambient();
        let f = self.field();
        let mut m = Mat::zeros(f, n, comp.len());
        for j in 0..n {
            let mut e = vec![Scalar::ZERO; n];
            e[j] = Scalar::ONE;
            let red = self.reduce(&e);
            for (c, &ci) in comp.iter().enumerate() {
                m.set(j, c, red[ci].clone());
            }
        }
        m
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = a B1 = b B2  <=>  (a, -b) in left kernel of [B1; B2]
        let stacked = self.basis.vstack(&other.basis);
        let k = stacked.left_kernel();
        let a = k.block(0, 0, k.rows(), self.dim());
        Subspace::row_space(&a.mul(&self.basis))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        other.contains_all(&self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn coords_and_quotient() {
        let s = Subspace::row_space(&Mat::from_i64(Q, &[&[1, 1, 0], &[2, 2, 0]]));
        assert_eq!(s.dim(), 1);
        let v = vec![Q.from_i64(3), Q.from_i64(3), Q.from_i64(0)];
        assert_eq!(s.coords(&v), Some(vec![Q.from_i64(3)]));
        let q = s.quotient_map();
        assert_eq!(q.shape(), (3, 2));
        assert!(q.apply(&v).iter().all(Scalar::is_zero));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::row_space(&Mat::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0]]));
        let b = Subspace::row_space(&Mat::from_i64(Q, &[&[0, 1, 0], &[0, 0, 1]]));
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[Q.from_i64(0), Q.from_i64(5), Q.from_i64(0)]));
    }
}
