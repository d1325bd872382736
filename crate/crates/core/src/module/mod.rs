//! Finite-dimensional right modules given by action matrices, and the maps
//! between them.

mod ar;
mod decompose;
mod hom;
mod homological;

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat, Scalar, Subspace};

pub use ar::ArSequence;
pub use decompose::Decomposition;
pub use decompose::{find_isomorphism, iso_indecomposable};
pub use hom::{hom_basis, HomSpace};
pub use homological::*;

/// A right module: basis element `b_i` acts by `m |-> m action[i]`.
#[derive(Clone)]
pub struct RightModule {
    algebra: Algebra,
    dim: usize,
    action: Arc<Vec<Mat>>,
}

impl PartialEq for RightModule {
    fn eq(&self, other: &RightModule) -> bool {
        self.dim == other.dim && self.algebra == other.algebra && self.action == other.action
    }
}

impl Eq for RightModule {}

impl fmt::Debug for RightModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RightModule(dim {})", self.dim)
    }
}

impl RightModule {
    /// Validated constructor.
    pub fn new(algebra: &Algebra, dim: usize, action: Vec<Mat>) -> Result<RightModule> {
        if action.len() != algebra.dim() || action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Shape(format!("a {dim}-dimensional module needs {} square action matrices", algebra.dim())));
        }
        if action.iter().any(|m| m.field() != algebra.field()) {
            return Err(Error::InvalidField("action matrices over the wrong field".into()));
        }
        let m = RightModule::raw(algebra, dim, action);
        m.check()?;
        Ok(m)
    }

    /// A module from the action of some basis elements; the rest follows
    /// from products, with the unit acting as the identity.
    pub fn from_partial_action(algebra: &Algebra, dim: usize, given: &[(usize, Mat)]) -> Result<RightModule> {
        let f = algebra.field();
        let n = algebra.dim();
        if given.iter().any(|(i, m)| *i >= n || m.shape() != (dim, dim)) {
            return Err(Error::Shape(format!("action matrices must be {dim} x {dim} on basis elements")));
        }
        let mut known: Vec<(Vec<Scalar>, Mat)> = vec![(algebra.unit().to_vec(), Mat::identity(f, dim))];
        known.extend(given.iter().map(|(i, m)| (algebra.basis_vector(*i), m.clone())));
        let mut span = Subspace::span(f, n, &known.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>());
        let mut frontier = known.clone();
        while span.dim() < n && !frontier.is_empty() {
            let mut next = Vec::new();
            for (u, mu) in &frontier {
                for (i, mi) in given {
                    let v = algebra.mul(u, &algebra.basis_vector(*i));
                    if !span.contains(&v) {
                        span = span.sum(&Subspace::span(f, n, std::slice::from_ref(&v)));
                        next.push((v, mu.mul(mi)));
                    }
                }
            }
            known.extend(next.iter().cloned());
            frontier = next;
        }
        if span.dim() < n {
            return Err(Error::Semantic("the given elements do not generate the algebra".into()));
        }
        let vecs: Vec<Mat> = known.iter().map(|(_, m)| m.clone()).collect();
        let elems = Mat::from_rows(f, n, known.iter().map(|(v, _)| v.clone()).collect());
        let mut action = Vec::with_capacity(n);
        for i in 0..n {
            let target = Mat::row_vector(f, algebra.basis_vector(i));
            let c = elems.solve_left(&target)?.ok_or_else(|| Error::Invariant("basis element outside the generated span".into()))?;
            action.push(Mat::combination(f, (dim, dim), c.row(0), &vecs));
        }
        let m = RightModule::new(algebra, dim, action)?;
        // the products used must agree with the given matrices
        for (i, mi) in given {
            if m.action(*i) != mi {
                return Err(Error::Semantic("action matrices are inconsistent with the relations".into()));
            }
        }
        Ok(m)
    }

    pub(crate) fn raw(algebra: &Algebra, dim: usize, action: Vec<Mat>) -> RightModule {
        RightModule { algebra: algebra.clone(), dim, action: Arc::new(action) }
    }

    pub fn zero(algebra: &Algebra) -> RightModule {
        let f = algebra.field();
        RightModule::raw(algebra, 0, vec![Mat::zeros(f, 0, 0); algebra.dim()])
    }

    /// The algebra as a right module over itself.
    pub fn regular(algebra: &Algebra) -> RightModule {
        RightModule::raw(algebra, algebra.dim(), algebra.right_basis_mult().to_vec())
    }

    /// Multiplicativity on all basis pairs and the unit law.
    pub fn check(&self) -> Result<()> {
        let a = &self.algebra;
        let n = a.dim();
        if !self.act_element(a.unit()).is_identity() {
            return Err(Error::Invariant("unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act_element(&a.basis_product(i, j));
                if lhs != rhs {
                    return Err(Error::Invariant(format!("action is not multiplicative on ({}, {})", a.label(i), a.label(j))));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Matrix of `m |-> m a` for an algebra element `a`.
    pub fn act_element(&self, a: &[Scalar]) -> Mat {
        Mat::combination(self.field(), (self.dim, self.dim), a, &self.action)
    }

    pub fn act(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.act_element(a).apply(v)
    }

    pub(crate) fn same_algebra(&self, other: &RightModule) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn direct_sum(&self, other: &RightModule) -> Result<RightModule> {
        self.same_algebra(other)?;
        let action = self.action.iter().zip(other.action.iter()).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(RightModule::raw(&self.algebra, self.dim + other.dim, action))
    }

    pub fn direct_sum_all(algebra: &Algebra, mods: &[RightModule]) -> Result<RightModule> {
        let f = algebra.field();
        for m in mods {
            if m.algebra != *algebra {
                return Err(Error::AlgebraMismatch);
            }
        }
        let dim = mods.iter().map(|m| m.dim).sum();
        let action = (0..algebra.dim())
            .map(|i| Mat::direct_sum_all(f, &mods.iter().map(|m| m.action[i].clone()).collect::<Vec<_>>()))
            .map(|m| if m.rows() == dim { m } else { Mat::zeros(f, dim, dim) })
            .collect();
        Ok(RightModule::raw(algebra, dim, action))
    }

    /// `X ⊕ ... ⊕ X`, `k` copies.
    pub fn power(&self, k: usize) -> RightModule {
        RightModule::direct_sum_all(&self.algebra, &vec![self.clone(); k]).unwrap()
    }

    /// The k-dual, a module over the opposite algebra.
    pub fn dual(&self) -> RightModule {
        let op = self.algebra.opposite();
        RightModule::raw(&op, self.dim, self.action.iter().map(Mat::transpose).collect())
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let gens = self.algebra.generators();
        let mut span = Subspace::span(self.field(), self.dim, vectors);
        loop {
            let before = span.dim();
            let mut rows: Vec<Vec<Scalar>> = span.basis().row_iter().map(|r| r.to_vec()).collect();
            for r in span.basis().row_iter() {
                for &g in gens {
                    rows.push(self.action[g].apply(r));
                }
            }
            span = Subspace::span(self.field(), self.dim, &rows);
            if span.dim() == before {
                return span;
            }
        }
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis().row_iter().all(|r| self.action.iter().all(|m| s.contains(&m.apply(r))))
    }

    /// Submodule on the rows of `basis` (which must be independent and
    /// invariant), with its inclusion.
    pub fn submodule(&self, basis: &Mat) -> Result<(RightModule, ModuleHom)> {
        let sub = Subspace::row_space(basis);
        if sub.dim() != basis.rows() {
            return Err(Error::Invariant("submodule basis is dependent".into()));
        }
        let mut action = Vec::with_capacity(self.action.len());
        for m in self.action.iter() {
            let img = basis.mul(m);
            let c = basis.solve_left(&img)?.ok_or_else(|| Error::Invariant("subspace is not a submodule".into()))?;
            action.push(c);
        }
        let s = RightModule::raw(&self.algebra, basis.rows(), action);
        let incl = ModuleHom::raw(&s, self, basis.clone());
        Ok((s, incl))
    }

    /// Submodule on a subspace given in reduced form.
    pub fn submodule_on(&self, s: &Subspace) -> (RightModule, ModuleHom) {
        let basis = s.basis().clone();
        let action = self.action.iter().map(|m| s.coords_of_rows(&basis.mul(m))).collect();
        let sub = RightModule::raw(&self.algebra, s.dim(), action);
        let incl = ModuleHom::raw(&sub, self, basis);
        (sub, incl)
    }

    /// Quotient by a submodule, with the projection.
    pub fn quotient(&self, s: &Subspace) -> (RightModule, ModuleHom) {
        let comp = s.complement_indices();
        let q = s.quotient_map();
        let action = self.action.iter().map(|m| m.select_rows(&comp).mul(&q)).collect();
        let quo = RightModule::raw(&self.algebra, comp.len(), action);
        let proj = ModuleHom::raw(self, &quo, q);
        (quo, proj)
    }

    /// `X rad(A)` as a subspace.
    pub fn radical_subspace(&self) -> Result<Subspace> {
        let rad = self.algebra.radical()?;
        let rows: Vec<Vec<Scalar>> = rad
            .basis()
            .row_iter()
            .flat_map(|r| {
                let m = self.act_element(r);
                (0..self.dim).map(move |i| m.row(i).to_vec()).collect::<Vec<_>>()
            })
            .collect();
        Ok(Subspace::span(self.field(), self.dim, &rows))
    }

    /// `{x : x rad(A) = 0}`
    pub fn socle_subspace(&self) -> Result<Subspace> {
        let rad = self.algebra.radical()?;
        let f = self.field();
        let mats: Vec<Mat> = rad.basis().row_iter().map(|r| self.act_element(r)).collect();
        if mats.is_empty() {
            return Ok(Subspace::full(f, self.dim));
        }
        let stacked = Mat::hstack_all(f, self.dim, &mats);
        Ok(Subspace::row_space(&stacked.left_kernel()))
    }

    pub fn top_dim(&self) -> Result<usize> {
        Ok(self.dim - self.radical_subspace()?.dim())
    }

    pub fn socle_dim(&self) -> Result<usize> {
        Ok(self.socle_subspace()?.dim())
    }

    /// `dim X e_i` over the primitive idempotents of the algebra.
    pub fn dimension_vector(&self) -> Result<Vec<usize>> {
        Ok(self.algebra.primitive_idempotents()?.iter().map(|e| self.act_element(e.element()).rank()).collect())
    }

    /// Restriction of scalars along an algebra map given by the images of
    /// the basis of `algebra` as elements of `self.algebra()`.
    pub fn restrict(&self, algebra: &Algebra, images: &[Vec<Scalar>]) -> Result<RightModule> {
        RightModule::new(algebra, self.dim, images.iter().map(|v| self.act_element(v)).collect())
    }
}

/// A module homomorphism `source -> target`, a `dim(source) x dim(target)`
/// matrix applied to row vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleHom {
    source: RightModule,
    target: RightModule,
    matrix: Mat,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom({} -> {}) {:?}", self.source.dim, self.target.dim, self.matrix)
    }
}

impl ModuleHom {
    pub fn new(source: &RightModule, target: &RightModule, matrix: Mat) -> Result<ModuleHom> {
        source.same_algebra(target)?;
        if matrix.shape() != (source.dim, target.dim) {
            return Err(Error::Shape(format!(
                "map {}x{} between modules of dims {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.dim,
                target.dim
            )));
        }
        let h = ModuleHom::raw(source, target, matrix);
        if !h.intertwines() {
            return Err(Error::Invariant("matrix does not intertwine the actions".into()));
        }
        Ok(h)
    }

    pub(crate) fn raw(source: &RightModule, target: &RightModule, matrix: Mat) -> ModuleHom {
        ModuleHom { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn zero(source: &RightModule, target: &RightModule) -> ModuleHom {
        ModuleHom::raw(source, target, Mat::zeros(source.field(), source.dim, target.dim))
    }

    pub fn identity(m: &RightModule) -> ModuleHom {
        ModuleHom::raw(m, m, Mat::identity(m.field(), m.dim))
    }

    /// `M_s(b_i) F = F M_t(b_i)` for every basis element.
    pub fn intertwines(&self) -> bool {
        self.source.action.iter().zip(self.target.action.iter()).all(|(s, t)| s.mul(&self.matrix) == self.matrix.mul(t))
    }

    pub fn source(&self) -> &RightModule {
        &self.source
    }

    pub fn target(&self) -> &RightModule {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// `next ∘ self`
    pub fn then(&self, next: &ModuleHom) -> Result<ModuleHom> {
        if self.target.dim != next.source.dim || self.target.algebra != next.source.algebra {
            return Err(Error::Shape("maps are not composable".into()));
        }
        Ok(ModuleHom::raw(&self.source, &next.target, self.matrix.mul(&next.matrix)))
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::raw(&self.source, &self.target, self.matrix.add(&other.matrix))
    }

    pub fn scale(&self, s: &Scalar) -> ModuleHom {
        ModuleHom::raw(&self.source, &self.target, self.matrix.scale(s))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.dim
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.dim
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim == self.target.dim && self.is_mono()
    }

    pub fn inverse(&self) -> Option<ModuleHom> {
        self.matrix.invert().map(|m| ModuleHom::raw(&self.target, &self.source, m))
    }

    pub fn image_subspace(&self) -> Subspace {
        Subspace::row_space(&self.matrix)
    }

    pub fn kernel_subspace(&self) -> Subspace {
        Subspace::row_space(&self.matrix.left_kernel())
    }

    pub fn kernel(&self) -> (RightModule, ModuleHom) {
        self.source.submodule_on(&self.kernel_subspace())
    }

    pub fn cokernel(&self) -> (RightModule, ModuleHom) {
        self.target.quotient(&self.image_subspace())
    }

    /// `(Im f, source -> Im f, Im f -> target)`
    pub fn image(&self) -> (RightModule, ModuleHom, ModuleHom) {
        let s = self.image_subspace();
        let (im, incl) = self.target.submodule_on(&s);
        let epi = ModuleHom::raw(&self.source, &im, s.coords_of_rows(&self.matrix));
        (im, epi, incl)
    }

    /// `D f : D target -> D source`
    pub fn dual(&self) -> ModuleHom {
        ModuleHom::raw(&self.target.dual(), &self.source.dual(), self.matrix.transpose())
    }

    /// `h` with `h ∘ self = g` (for `self` and `g` out of the same module),
    /// searched among maps `self.target -> g.target`.
    pub fn extend_along(&self, g: &ModuleHom) -> Result<Option<ModuleHom>> {
        let hs = hom_basis(&self.target, &g.target)?;
        let imgs: Vec<Mat> = hs.basis().iter().map(|h| self.matrix.mul(h)).collect();
        Ok(solve_combination(&imgs, &g.matrix).map(|c| hs.element(&c)).map(|m| ModuleHom::raw(&self.target, &g.target, m)))
    }

    /// `h` with `self ∘ h = g` (for `self` and `g` into the same module).
    pub fn lift_along(&self, g: &ModuleHom) -> Result<Option<ModuleHom>> {
        let hs = hom_basis(&g.source, &self.source)?;
        let imgs: Vec<Mat> = hs.basis().iter().map(|h| h.mul(&self.matrix)).collect();
        Ok(solve_combination(&imgs, &g.matrix).map(|c| hs.element(&c)).map(|m| ModuleHom::raw(&g.source, &self.source, m)))
    }
}

/// Coefficients `c` with `sum c_i mats[i] = target`.
pub(crate) fn solve_combination(mats: &[Mat], target: &Mat) -> Option<Vec<Scalar>> {
    let f = target.field();
    let n = target.rows() * target.cols();
    if mats.is_empty() {
        return if target.is_zero() { Some(vec![]) } else { None };
    }
    let a = Mat::from_rows(f, n, mats.iter().map(Mat::flatten).collect());
    let b = Mat::row_vector(f, target.flatten());
    a.solve_left(&b).ok().flatten().map(|x| x.row(0).to_vec())
}

#[cfg(test)]
pub(crate) mod tests;
