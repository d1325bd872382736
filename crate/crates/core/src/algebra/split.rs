//! Radicals and idempotent splitting for algebras of matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat, Poly, Scalar, Subspace};

/// Kernel of the trace form `(x, y) |-> tr(x y)` on the span of `basis`;
/// rows are coefficient vectors relative to `basis`.
///
/// For a faithful representation this is the radical over the rationals
/// and over GF(p) when p exceeds the representation dimension.
pub(crate) fn trace_radical(field: FieldSpec, basis: &[Mat]) -> Mat {
    let n = basis.len();
    let mut t = Mat::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let v = trace_of_product(field, &basis[i], &basis[j]);
            t.set(i, j, v.clone());
            t.set(j, i, v);
        }
    }
    t.kernel_basis()
}

fn trace_of_product(field: FieldSpec, a: &Mat, b: &Mat) -> Scalar {
    let mut acc = Scalar::ZERO;
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            let y = b.get(k, i);
            if !y.is_zero() {
                acc = field.add(&acc, &field.mul(x, y));
            }
        }
    }
    acc
}

/// Random combinations tried once basis elements, their sums and products
/// fail to split a corner.
const RANDOM_SEEDS: usize = 400;

struct MatrixAlgebra {
    field: FieldSpec,
    basis: Vec<Mat>,
    radical: Vec<Mat>,
}

impl MatrixAlgebra {
    fn flat_span(&self, mats: &[Mat]) -> Subspace {
        let n = self.basis.first().map(|m| m.rows() * m.cols()).unwrap_or(0);
        Subspace::span(self.field, n, &mats.iter().map(Mat::flatten).collect::<Vec<_>>())
    }

    fn unflatten_rows(&self, s: &Subspace) -> Vec<Mat> {
        let (r, c) = self.basis[0].shape();
        s.basis().row_iter().map(|v| Mat::unflatten(self.field, r, c, v)).collect()
    }

    /// Basis of `f A f` and its radical `f rad f` as flattened matrices.
    fn corner(&self, f: &Mat) -> (Vec<Mat>, Subspace) {
        let cb: Vec<Mat> = self.basis.iter().map(|b| f.mul(b).mul(f)).collect();
        let cr: Vec<Mat> = self.radical.iter().map(|b| f.mul(b).mul(f)).collect();
        let cs = self.flat_span(&cb);
        (self.unflatten_rows(&cs), self.flat_span(&cr))
    }

    /// Elements of the corner that are central modulo its radical. They act
    /// by a scalar on every simple block of the top.
    fn central(&self, corner: &[Mat], rad: &Subspace) -> Vec<Mat> {
        let n = corner.len();
        let width = rad.ambient();
        let rows: Vec<Vec<Scalar>> =
            corner.iter().map(|a| corner.iter().flat_map(|b| rad.reduce(&a.mul(b).sub(&b.mul(a)).flatten())).collect()).collect();
        let k = Mat::from_rows(self.field, n * width, rows).left_kernel();
        k.row_iter().map(|c| Mat::combination(self.field, corner[0].shape(), c, corner)).collect()
    }

    /// Elements acting as matrix units on a section `upper / lower` on
    /// which the corner induces the full matrix algebra.
    fn section_units(&self, corner: &[Mat], f: &Mat, upper: &Subspace, lower: &Subspace) -> Vec<Mat> {
        let field = self.field;
        let v1 = Subspace::row_space(&lower.basis().mul(f));
        let v2 = Subspace::row_space(&upper.basis().mul(f));
        let w = v2.dim().saturating_sub(v1.dim());
        if w < 2 || w * w > corner.len() {
            return vec![];
        }
        let q = v1.quotient_map();
        // lifts of a basis of the section
        let mut lifts = Vec::new();
        let mut seen = Subspace::zero(field, q.cols());
        for r in v2.basis().row_iter() {
            let img = Mat::row_vector(field, r.to_vec()).mul(&q);
            if !seen.contains(img.row(0)) {
                seen = seen.sum(&Subspace::row_space(&img));
                lifts.push(r.to_vec());
            }
        }
        let lifts = Mat::from_rows(field, f.cols(), lifts);
        let Some(to_lifts) = seen.coords_of_rows(&lifts.mul(&q)).invert() else {
            return vec![];
        };
        let actions: Vec<Vec<Scalar>> =
            corner.iter().map(|c| seen.coords_of_rows(&lifts.mul(c).mul(&q)).mul(&to_lifts).flatten()).collect();
        let a = Mat::from_rows(field, w * w, actions);
        if a.rank() < w * w {
            return vec![];
        }
        (0..w)
            .filter_map(|i| {
                let mut unit = Mat::zeros(field, w, w);
                unit.set(i, i, Scalar::ONE);
                let x = a.solve_left(&Mat::row_vector(field, unit.flatten())).ok()??;
                Some(Mat::combination(field, f.shape(), x.row(0), corner))
            })
            .collect()
    }

    fn eval(&self, p: &Poly, a: &Mat, unit: &Mat) -> Mat {
        let f = self.field;
        let mut acc = Mat::zeros(f, a.rows(), a.cols());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(a).add(&unit.scale(c));
        }
        acc
    }

    /// Minimal polynomial of `a` inside the corner with unit `unit`.
    fn min_poly(&self, a: &Mat, unit: &Mat) -> Poly {
        let f = self.field;
        let mut powers = vec![unit.flatten()];
        let mut cur = unit.clone();
        loop {
            cur = cur.mul(a);
            powers.push(cur.flatten());
            let m = Mat::from_rows(f, powers[0].len(), powers.clone());
            let k = m.left_kernel();
            if k.rows() > 0 {
                return Poly::new(f, k.row(0).to_vec()).monic();
            }
        }
    }

    /// An idempotent `e` with `0 != e != unit` in the subalgebra generated
    /// by `a`, if the minimal polynomial of `a` has a rational root and
    /// another coprime factor.
    fn split_with(&self, a: &Mat, unit: &Mat) -> Option<Mat> {
        let mu = self.min_poly(a, unit);
        for root in mu.roots() {
            let m = mu.multiplicity(&root);
            let lin = Poly::linear(self.field, &root).pow(m);
            let (g, rem) = mu.divrem(&lin);
            debug_assert!(rem.is_zero());
            if g.degree().unwrap_or(0) == 0 {
                continue;
            }
            let (one, _s, t) = Poly::ext_gcd(&lin, &g);
            debug_assert_eq!(one.degree(), Some(0));
            let e = self.eval(&t.mul(&g), a, unit);
            if !e.is_zero() && &e != unit {
                return Some(e);
            }
        }
        None
    }
}

/// Complete orthogonal primitive idempotents of the algebra spanned by
/// `basis`, a linearly independent set of matrices closed under products
/// and containing `identity` in its span.
///
/// `sections` yields pairs `(upper, lower)` of row spaces invariant under
/// the algebra with `lower ⊆ upper`; they help split tops that are full
/// matrix algebras and are only requested when needed.
pub(crate) fn matrix_idempotents(
    field: FieldSpec,
    basis: &[Mat],
    identity: &Mat,
    sections: impl Fn() -> Vec<(Subspace, Subspace)>,
) -> Result<Vec<Mat>> {
    let p = field.characteristic();
    let rep_dim = identity.rows();
    if p != 0 && (p as usize) <= rep_dim {
        return Err(Error::UnsupportedField(format!("GF({p}) needs p > {rep_dim} to split idempotents")));
    }
    if basis.is_empty() || rep_dim == 0 {
        return Ok(vec![]);
    }
    let rad_coeffs = trace_radical(field, basis);
    let radical: Vec<Mat> = rad_coeffs.row_iter().map(|c| Mat::combination(field, identity.shape(), c, basis)).collect();
    let alg = MatrixAlgebra { field, basis: basis.to_vec(), radical };
    let mut done = Vec::new();
    let mut work = vec![identity.clone()];
    let mut cached: Option<Vec<(Subspace, Subspace)>> = None;
    while let Some(f) = work.pop() {
        let (corner, rad) = alg.corner(&f);
        let top = corner.len() - rad.dim();
        if top == 0 {
            continue;
        }
        if top == 1 {
            done.push(f);
            continue;
        }
        let mut seeds = alg.central(&corner, &rad);
        for (upper, lower) in cached.get_or_insert_with(&sections).iter() {
            seeds.extend(alg.section_units(&corner, &f, upper, lower));
        }
        seeds.extend(corner.iter().cloned());
        for i in 0..corner.len() {
            for j in i + 1..corner.len() {
                seeds.push(corner[i].add(&corner[j]));
            }
        }
        for a in &corner {
            for b in &corner {
                seeds.push(a.mul(b));
            }
        }
        // elements factoring through another piece have small rank in the top
        for g in done.iter().chain(&work) {
            let left: Vec<Mat> = alg.basis.iter().map(|b| f.mul(b).mul(g)).filter(|m| !m.is_zero()).collect();
            let right: Vec<Mat> = alg.basis.iter().map(|b| g.mul(b).mul(&f)).filter(|m| !m.is_zero()).collect();
            for l in &left {
                for r in &right {
                    seeds.push(l.mul(r));
                }
            }
        }
        // fixed seed keeps the output reproducible
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let found = seeds.iter().find_map(|s| alg.split_with(s, &f)).or_else(|| {
            (0..RANDOM_SEEDS).find_map(|_| {
                let c: Vec<Scalar> = corner.iter().map(|_| field.from_i64(rng.random_range(-3..=3))).collect();
                alg.split_with(&Mat::combination(field, f.shape(), &c, &corner), &f)
            })
        });
        let Some(e) = found else {
            return Err(Error::NonSplit(format!("a corner with {top}-dimensional top has no split element over {field}")));
        };
        let rest = f.sub(&e);
        // pushed in reverse so the first split part is processed first
        work.push(rest);
        work.push(e);
    }
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn upper_triangular_two_by_two() {
        let e11 = Mat::from_i64(Q, &[&[1, 0], &[0, 0]]);
        let e22 = Mat::from_i64(Q, &[&[0, 0], &[0, 1]]);
        let e12 = Mat::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let basis = vec![e11.clone(), e12.clone(), e22.clone()];
        let rad = trace_radical(Q, &basis);
        assert_eq!(rad.rows(), 1);
        let ids = matrix_idempotents(Q, &basis, &Mat::identity(Q, 2), Vec::new).unwrap();
        assert_eq!(ids.len(), 2);
        for (i, a) in ids.iter().enumerate() {
            for (j, b) in ids.iter().enumerate() {
                let p = a.mul(b);
                if i == j {
                    assert_eq!(&p, a);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
        assert!(ids[0].add(&ids[1]).is_identity());
    }

    #[test]
    fn full_matrix_algebra_splits() {
        let mut basis = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                basis.push(Mat::from_fn(Q, 2, 2, |r, c| if r == i && c == j { Scalar::ONE } else { Scalar::ZERO }));
            }
        }
        let ids = matrix_idempotents(Q, &basis, &Mat::identity(Q, 2), Vec::new).unwrap();
        assert_eq!(ids.len(), 2);
        assert!(ids.iter().all(|e| e.rank() == 1));
    }

    #[test]
    fn scrambled_matrix_algebra_splits() {
        // M_2(Q) in a skewed basis
        let i = Mat::from_i64(Q, &[&[0, 1], &[-1, 0]]);
        let j = Mat::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let one = Mat::identity(Q, 2);
        let basis = vec![one.clone(), i.clone(), j.add(&i.scale(&Scalar::int(2))), i.mul(&j).add(&one.scale(&Scalar::int(3)))];
        let ids = matrix_idempotents(Q, &basis, &one, Vec::new).unwrap();
        assert_eq!(ids.len(), 2);
        assert!(ids.iter().all(|e| e.rank() == 1 && e.mul(e) == *e));
    }

    #[test]
    fn complex_numbers_do_not_split_over_rationals() {
        let one = Mat::identity(Q, 2);
        let i = Mat::from_i64(Q, &[&[0, 1], &[-1, 0]]);
        let err = matrix_idempotents(Q, &[one.clone(), i], &one, Vec::new).unwrap_err();
        assert!(matches!(err, Error::NonSplit(_)));
    }
}
