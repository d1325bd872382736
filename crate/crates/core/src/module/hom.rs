use super::{ModuleHom, RightModule};
use crate::error::Result;
use crate::linalg::{Mat, Scalar, Subspace};

/// A basis of a space of module maps, with coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: RightModule,
    target: RightModule,
    basis: Vec<Mat>,
    space: Subspace,
    /// Rows express the reduced basis of `space` in terms of `basis`.
    change: Mat,
}

impl HomSpace {
    /// Wraps independent maps `source -> target`.
    pub(crate) fn from_basis(source: &RightModule, target: &RightModule, basis: Vec<Mat>) -> HomSpace {
        let f = source.field();
        let n = source.dim() * target.dim();
        let flat = Mat::from_rows(f, n, basis.iter().map(Mat::flatten).collect());
        let space = Subspace::row_space(&flat);
        debug_assert_eq!(space.dim(), basis.len());
        // flat = C * reduced, so reduced = C^{-1} flat
        let c = space.coords_of_rows(&flat);
        let change = c.invert().expect("independent hom basis");
        HomSpace { source: source.clone(), target: target.clone(), basis, space, change }
    }

    pub fn source(&self) -> &RightModule {
        &self.source
    }

    pub fn target(&self) -> &RightModule {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn homs(&self) -> Vec<ModuleHom> {
        self.basis.iter().map(|m| ModuleHom::raw(&self.source, &self.target, m.clone())).collect()
    }

    pub fn hom(&self, i: usize) -> ModuleHom {
        ModuleHom::raw(&self.source, &self.target, self.basis[i].clone())
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.space.contains(&m.flatten())
    }

    /// Coordinates relative to `basis()`.
    pub fn coords(&self, m: &Mat) -> Option<Vec<Scalar>> {
        let c = self.space.coords(&m.flatten())?;
        Some(self.change.apply(&c))
    }

    /// Coordinates of a map known to lie in the space.
    pub fn coords_of(&self, m: &Mat) -> Vec<Scalar> {
        self.coords(m).expect("map outside the hom space")
    }

    pub fn element(&self, c: &[Scalar]) -> Mat {
        Mat::combination(self.source.field(), (self.source.dim(), self.target.dim()), c, &self.basis)
    }

    /// A basis with the given maps first, extended by basis vectors.
    pub fn with_leading(&self, first: &[Mat]) -> HomSpace {
        let f = self.source.field();
        let n = self.source.dim() * self.target.dim();
        let mut chosen: Vec<Mat> = Vec::new();
        let mut span = Subspace::zero(f, n);
        for m in first.iter().chain(self.basis.iter()) {
            let v = m.flatten();
            if !span.contains(&v) {
                span = span.sum(&Subspace::span(f, n, &[v]));
                chosen.push(m.clone());
            }
        }
        HomSpace::from_basis(&self.source, &self.target, chosen)
    }
}

/// Basis of `Hom_A(X, Y)`.
///
/// The intertwining conditions are imposed one algebra generator at a
/// time, shrinking the solution space as it goes.
pub fn hom_basis(x: &RightModule, y: &RightModule) -> Result<HomSpace> {
    x.same_algebra(y)?;
    let f = x.field();
    let (dx, dy) = (x.dim(), y.dim());
    let n = dx * dy;
    if n == 0 {
        return Ok(HomSpace::from_basis(x, y, vec![]));
    }
    let mut current: Option<Mat> = None;
    for &g in x.algebra().generators() {
        let mx = x.action(g);
        let my = y.action(g);
        let residues: Vec<Vec<Scalar>> = match &current {
            None => (0..n).map(|idx| unit_residue(mx, my, idx / dy, idx % dy)).collect(),
            Some(k) => k
                .row_iter()
                .map(|row| {
                    let fm = Mat::unflatten(f, dx, dy, row);
                    mx.mul(&fm).sub(&fm.mul(my)).flatten()
                })
                .collect(),
        };
        let rows = residues.len();
        let r = Mat::from_rows(f, n, residues);
        let coeffs = r.left_kernel();
        current = Some(match &current {
            None => coeffs,
            Some(k) => coeffs.mul(k),
        });
        debug_assert!(current.as_ref().unwrap().rows() <= rows);
        if current.as_ref().unwrap().rows() == 0 {
            break;
        }
    }
    let k = current.unwrap_or_else(|| Mat::identity(f, n));
    let space = Subspace::row_space(&k);
    let basis = space.basis().row_iter().map(|r| Mat::unflatten(f, dx, dy, r)).collect();
    Ok(HomSpace::from_basis(x, y, basis))
}

/// `Mx E_ab - E_ab My` flattened.
fn unit_residue(mx: &Mat, my: &Mat, a: usize, b: usize) -> Vec<Scalar> {
    let f = mx.field();
    let (dx, dy) = (mx.rows(), my.rows());
    let mut out = vec![Scalar::ZERO; dx * dy];
    for r in 0..dx {
        let v = mx.get(r, a);
        if !v.is_zero() {
            out[r * dy + b] = f.add(&out[r * dy + b], v);
        }
    }
    for c in 0..dy {
        let v = my.get(b, c);
        if !v.is_zero() {
            out[a * dy + c] = f.sub(&out[a * dy + c], v);
        }
    }
    out
}
