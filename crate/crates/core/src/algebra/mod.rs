//! Finite-dimensional associative unital algebras given by structure
//! constants.

mod quiver;
mod split;

use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat, Scalar, Subspace};

pub use quiver::{Arrow, Path, QuiverPresentation, Relation};
pub(crate) use split::{matrix_idempotents, trace_radical};

/// A named idempotent, typically a vertex or a generator block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub element: Vec<Scalar>,
}

/// An idempotent element `e = e^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    element: Vec<Scalar>,
}

impl Idempotent {
    pub fn new(algebra: &Algebra, element: Vec<Scalar>) -> Result<Idempotent> {
        if element.len() != algebra.dim() {
            return Err(Error::Shape("idempotent has the wrong length".into()));
        }
        if algebra.mul(&element, &element) != element {
            return Err(Error::Precondition("element is not idempotent".into()));
        }
        Ok(Idempotent { element })
    }

    pub fn element(&self) -> &[Scalar] {
        &self.element
    }

    pub fn into_element(self) -> Vec<Scalar> {
        self.element
    }
}

/// Cached data of an indecomposable projective `e A`.
pub(crate) struct ProjData {
    /// Index into `primitive_idempotents()`.
    pub idem: usize,
    /// Rows span `e A` inside `A`.
    pub basis: Mat,
    pub action: Arc<Vec<Mat>>,
}

enum OppLink {
    Strong(Algebra),
    Weak(Weak<Inner>),
}

struct Inner {
    field: FieldSpec,
    dim: usize,
    /// `right[j]` is right multiplication by `b_j` on coefficient vectors.
    right: Vec<Mat>,
    unit: Vec<Scalar>,
    labels: Vec<String>,
    blocks: Vec<Block>,
    paths: Option<Vec<Path>>,
    left: OnceLock<Vec<Mat>>,
    generators: OnceLock<Vec<usize>>,
    opposite: OnceLock<OppLink>,
    radical: OnceLock<Result<Subspace>>,
    primitives: OnceLock<Result<Vec<Idempotent>>>,
    projectives: OnceLock<Result<Vec<ProjData>>>,
    injectives: OnceLock<Result<Vec<Arc<Vec<Mat>>>>>,
}

/// A finite-dimensional associative unital algebra. Cloning is cheap.
#[derive(Clone)]
pub struct Algebra(Arc<Inner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.dim == other.0.dim && self.0.unit == other.0.unit && self.0.right == other.0.right)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim(), self.field())
    }
}

impl Algebra {
    /// Builds an algebra from `c[i][j][k]`, the coefficient of `b_k` in
    /// `b_i b_j`. Associativity and the unit law are checked.
    pub fn from_structure_constants(
        field: FieldSpec,
        c: &[Vec<Vec<Scalar>>],
        unit: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Algebra> {
        let n = c.len();
        if unit.len() != n || c.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape("structure constants must be dim x dim x dim".into()));
        }
        let right = (0..n).map(|j| Mat::from_fn(field, n, n, |i, k| c[i][j][k].clone())).collect();
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("b{i}")).collect());
        let a = Algebra::assemble(field, right, unit, labels, vec![], None);
        a.check_axioms()?;
        Ok(a)
    }

    pub(crate) fn assemble(
        field: FieldSpec,
        right: Vec<Mat>,
        unit: Vec<Scalar>,
        labels: Vec<String>,
        blocks: Vec<Block>,
        paths: Option<Vec<Path>>,
    ) -> Algebra {
        Algebra(Arc::new(Inner {
            field,
            dim: unit.len(),
            right,
            unit,
            labels,
            blocks,
            paths,
            left: OnceLock::new(),
            generators: OnceLock::new(),
            opposite: OnceLock::new(),
            radical: OnceLock::new(),
            primitives: OnceLock::new(),
            projectives: OnceLock::new(),
            injectives: OnceLock::new(),
        }))
    }

    /// Same algebra with labeled idempotent blocks attached.
    pub fn with_blocks(&self, blocks: Vec<Block>) -> Result<Algebra> {
        for b in &blocks {
            Idempotent::new(self, b.element.clone())?;
        }
        Ok(Algebra::assemble(self.field(), self.0.right.clone(), self.0.unit.clone(), self.0.labels.clone(), blocks, self.0.paths.clone()))
    }

    /// Associativity on all basis triples and the two-sided unit law.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        let r = &self.0.right;
        for i in 0..n {
            for j in 0..n {
                let bij = self.basis_product(i, j);
                for (l, rl) in r.iter().enumerate() {
                    let lhs = rl.apply(&bij);
                    let rhs = self.mul(&self.basis_vector(i), &self.basis_product(j, l));
                    if lhs != rhs {
                        return Err(Error::Invariant(format!(
                            "associativity fails on ({}, {}, {})",
                            self.label(i),
                            self.label(j),
                            self.label(l)
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let b = self.basis_vector(i);
            if self.mul(&self.0.unit, &b) != b || self.mul(&b, &self.0.unit) != b {
                return Err(Error::Invariant(format!("unit does not fix {}", self.label(i))));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.0.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn blocks(&self) -> &[Block] {
        &self.0.blocks
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.0.blocks.iter().find(|b| b.name == name)
    }

    /// Residue paths when the algebra came from a quiver.
    pub fn paths(&self) -> Option<&[Path]> {
        self.0.paths.as_deref()
    }

    pub(crate) fn projective_cache(&self) -> &OnceLock<Result<Vec<ProjData>>> {
        &self.0.projectives
    }

    pub(crate) fn injective_cache(&self) -> &OnceLock<Result<Vec<Arc<Vec<Mat>>>>> {
        &self.0.injectives
    }

    pub fn ptr_eq(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.dim()];
        v[i] = Scalar::ONE;
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![Scalar::ZERO; self.dim()]
    }

    /// `c[i][j][k]`
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.0.right[j].get(i, k)
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.basis_product(i, j)).collect()).collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.0.right[j].row(i).to_vec()
    }

    /// Right multiplication by `b_j`.
    pub fn right_basis_mult(&self) -> &[Mat] {
        &self.0.right
    }

    /// Left multiplication by `b_j`: row `i` holds `b_j b_i`.
    pub fn left_basis_mult(&self) -> &[Mat] {
        self.0.left.get_or_init(|| {
            let n = self.dim();
            (0..n).map(|j| Mat::from_rows(self.field(), n, (0..n).map(|i| self.basis_product(j, i)).collect())).collect()
        })
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = self.zero_vector();
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let xr = self.0.right[j].apply(x);
            for (o, v) in out.iter_mut().zip(xr) {
                if !v.is_zero() {
                    *o = f.add(o, &f.mul(&v, yj));
                }
            }
        }
        out
    }

    /// Matrix of `x |-> x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Mat {
        Mat::combination(self.field(), (self.dim(), self.dim()), a, &self.0.right)
    }

    /// Matrix of `x |-> a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Mat {
        Mat::combination(self.field(), (self.dim(), self.dim()), a, self.left_basis_mult())
    }

    /// Basis elements generating the algebra as a unital algebra, chosen
    /// greedily in basis order.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| {
            let n = self.dim();
            let f = self.field();
            let mut gens: Vec<usize> = Vec::new();
            let mut span = Subspace::span(f, n, std::slice::from_ref(&self.0.unit));
            let mut order: Vec<usize> = (0..n).filter(|&i| self.0.blocks.iter().any(|b| b.element == self.basis_vector(i))).collect();
            let rest: Vec<usize> = (0..n).filter(|i| !order.contains(i)).collect();
            order.extend(rest);
            for i in order {
                if span.dim() == n {
                    break;
                }
                if span.contains(&self.basis_vector(i)) {
                    continue;
                }
                gens.push(i);
                span = span.sum(&Subspace::span(f, n, &[self.basis_vector(i)]));
                loop {
                    let mut rows: Vec<Vec<Scalar>> = span.basis().row_iter().map(|r| r.to_vec()).collect();
                    let before = span.dim();
                    for r in span.basis().row_iter() {
                        for &g in &gens {
                            rows.push(self.0.right[g].apply(r));
                        }
                    }
                    span = Subspace::span(f, n, &rows);
                    if span.dim() == before {
                        break;
                    }
                }
            }
            gens
        })
    }

    /// The opposite algebra, `b_i * b_j = b_j b_i`. Repeated calls return the
    /// same handle, and the opposite of the opposite is `self`.
    pub fn opposite(&self) -> Algebra {
        let link = self.0.opposite.get_or_init(|| {
            let op = Algebra::assemble(
                self.field(),
                self.left_basis_mult().to_vec(),
                self.0.unit.clone(),
                self.0.labels.clone(),
                self.0.blocks.clone(),
                self.0.paths.as_ref().map(|ps| ps.iter().map(Path::reversed).collect()),
            );
            let _ = op.0.opposite.set(OppLink::Weak(Arc::downgrade(&self.0)));
            OppLink::Strong(op)
        });
        match link {
            OppLink::Strong(a) => a.clone(),
            OppLink::Weak(w) => match w.upgrade() {
                Some(inner) => Algebra(inner),
                None => Algebra::assemble(
                    self.field(),
                    self.left_basis_mult().to_vec(),
                    self.0.unit.clone(),
                    self.0.labels.clone(),
                    self.0.blocks.clone(),
                    None,
                ),
            },
        }
    }

    fn check_radical_field(&self, rep_dim: usize) -> Result<()> {
        let p = self.field().characteristic();
        if p != 0 && (p as usize) <= rep_dim {
            return Err(Error::UnsupportedField(format!("GF({p}) needs p > {rep_dim} for the trace form radical")));
        }
        Ok(())
    }

    /// Jacobson radical as a subspace of coefficient vectors.
    pub fn radical(&self) -> Result<Subspace> {
        self.0
            .radical
            .get_or_init(|| {
                let n = self.dim();
                self.check_radical_field(n)?;
                let rad = Subspace::row_space(&trace_radical(self.field(), &self.0.right));
                self.verify_radical(&rad)?;
                Ok(rad)
            })
            .clone()
    }

    fn verify_radical(&self, rad: &Subspace) -> Result<()> {
        let n = self.dim();
        let f = self.field();
        for r in rad.basis().row_iter() {
            for j in 0..n {
                let b = self.basis_vector(j);
                if !rad.contains(&self.mul(r, &b)) || !rad.contains(&self.mul(&b, r)) {
                    return Err(Error::Invariant("radical is not a two-sided ideal".into()));
                }
            }
        }
        let mut power = rad.clone();
        let mut steps = 0;
        while power.dim() > 0 {
            let rows: Vec<Vec<Scalar>> =
                power.basis().row_iter().flat_map(|p| rad.basis().row_iter().map(move |r| (p, r))).map(|(p, r)| self.mul(p, r)).collect();
            power = Subspace::span(f, n, &rows);
            steps += 1;
            if steps > n {
                return Err(Error::Invariant("radical is not nilpotent".into()));
            }
        }
        let q = self.quotient(rad);
        if trace_radical(f, q.right_basis_mult()).rows() != 0 {
            return Err(Error::Invariant("quotient by the radical is not semisimple".into()));
        }
        Ok(())
    }

    /// Quotient by a two-sided ideal, with the basis elements indexing a
    /// complement of the ideal as basis.
    pub fn quotient(&self, ideal: &Subspace) -> Algebra {
        let comp = ideal.complement_indices();
        let qm = ideal.quotient_map();
        let f = self.field();
        let k = comp.len();
        let right =
            comp.iter().map(|&j| Mat::from_rows(f, k, comp.iter().map(|&i| qm.apply(&self.basis_product(i, j))).collect())).collect();
        let unit = qm.apply(&self.0.unit);
        let labels = comp.iter().map(|&i| self.0.labels[i].clone()).collect();
        let blocks = self
            .0
            .blocks
            .iter()
            .map(|b| Block { name: b.name.clone(), element: qm.apply(&b.element) })
            .filter(|b| b.element.iter().any(|v| !v.is_zero()))
            .collect();
        Algebra::assemble(f, right, unit, labels, blocks, None)
    }

    /// Subalgebra (with its own unit) spanned by the given independent
    /// vectors; products must stay in the span.
    pub fn subalgebra(&self, basis: &Mat, unit: &[Scalar], labels: Vec<String>) -> Result<Algebra> {
        let f = self.field();
        let k = basis.rows();
        let sub = Subspace::row_space(basis);
        if sub.dim() != k {
            return Err(Error::Invariant("subalgebra basis is dependent".into()));
        }
        // coordinates relative to the given rows
        let change =
            sub.try_coords_of_rows(basis).and_then(|m| m.invert()).ok_or_else(|| Error::Invariant("subalgebra basis change".into()))?;
        let coords = |v: &[Scalar]| -> Result<Vec<Scalar>> {
            let c = sub.coords(v).ok_or_else(|| Error::Invariant("product leaves the subalgebra".into()))?;
            Ok(change.apply(&c))
        };
        let mut right = Vec::with_capacity(k);
        for j in 0..k {
            let mut rows = Vec::with_capacity(k);
            for i in 0..k {
                rows.push(coords(&self.mul(basis.row(i), basis.row(j)))?);
            }
            right.push(Mat::from_rows(f, k, rows));
        }
        let u = coords(unit)?;
        let blocks = self
            .0
            .blocks
            .iter()
            .filter_map(|b| sub.coords(&b.element).map(|c| Block { name: b.name.clone(), element: change.apply(&c) }))
            .filter(|b| b.element.iter().any(|v| !v.is_zero()))
            .collect();
        let a = Algebra::assemble(f, right, u, labels, blocks, None);
        a.check_axioms()?;
        Ok(a)
    }

    /// Whether `e A e` modulo its radical is one-dimensional.
    pub fn is_local_idempotent(&self, e: &[Scalar]) -> Result<bool> {
        let rad = self.radical()?;
        let f = self.field();
        let n = self.dim();
        let ee = |x: &[Scalar]| self.mul(&self.mul(e, x), e);
        let corner = Subspace::span(f, n, &(0..n).map(|i| ee(&self.basis_vector(i))).collect::<Vec<_>>());
        let crad = Subspace::span(f, n, &rad.basis().row_iter().map(ee).collect::<Vec<_>>());
        Ok(corner.dim() == crad.dim() + 1)
    }

    /// A complete set of orthogonal primitive idempotents. Labeled blocks
    /// are used when they already form such a set.
    pub fn primitive_idempotents(&self) -> Result<Vec<Idempotent>> {
        self.0
            .primitives
            .get_or_init(|| {
                if self.dim() == 0 {
                    return Ok(vec![]);
                }
                if let Some(bs) = self.blocks_are_primitive()? {
                    return Ok(bs);
                }
                self.check_radical_field(self.dim())?;
                let id = Mat::identity(self.field(), self.dim());
                let mats = matrix_idempotents(self.field(), &self.0.right, &id, Vec::new)?;
                Ok(mats.into_iter().map(|m| Idempotent { element: m.apply(&self.0.unit) }).collect())
            })
            .clone()
    }

    fn blocks_are_primitive(&self) -> Result<Option<Vec<Idempotent>>> {
        let bs = &self.0.blocks;
        if bs.is_empty() {
            return Ok(None);
        }
        let f = self.field();
        let mut sum = self.zero_vector();
        for (i, a) in bs.iter().enumerate() {
            for (j, b) in bs.iter().enumerate() {
                let p = self.mul(&a.element, &b.element);
                let expect = if i == j { a.element.clone() } else { self.zero_vector() };
                if p != expect {
                    return Ok(None);
                }
            }
            sum = sum.iter().zip(&a.element).map(|(x, y)| f.add(x, y)).collect();
        }
        if sum != self.0.unit {
            return Ok(None);
        }
        for b in bs {
            if !self.is_local_idempotent(&b.element)? {
                return Ok(None);
            }
        }
        Ok(Some(bs.iter().map(|b| Idempotent { element: b.element.clone() }).collect()))
    }

    /// Name of the `i`-th primitive idempotent: the block name when blocks
    /// are used, otherwise its index.
    pub fn vertex_name(&self, i: usize) -> String {
        match (self.primitive_idempotents(), self.0.blocks.get(i)) {
            (Ok(p), Some(b)) if p[i].element == b.element => b.name.clone(),
            _ => format!("{}", i + 1),
        }
    }

    /// Basis element indices forming a basis of `e A`.
    pub fn right_ideal_basis(&self, e: &[Scalar]) -> Mat {
        let n = self.dim();
        let rows: Vec<Vec<Scalar>> = (0..n).map(|i| self.mul(e, &self.basis_vector(i))).collect();
        Subspace::span(self.field(), n, &rows).basis().clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    pub(crate) fn dual_numbers() -> Algebra {
        // basis {1, x}
        let z = Scalar::ZERO;
        let o = Scalar::ONE;
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        Algebra::from_structure_constants(Q, &c, vec![o, z], Some(vec!["1".into(), "x".into()])).unwrap()
    }

    #[test]
    fn dual_numbers_radical_is_x() {
        let a = dual_numbers();
        let r = a.radical().unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[Scalar::ZERO, Scalar::ONE]));
        assert_eq!(a.primitive_idempotents().unwrap().len(), 1);
    }

    #[test]
    fn opposite_is_involutive_and_cached() {
        let a = dual_numbers();
        let op = a.opposite();
        assert!(op.opposite().ptr_eq(&a));
        assert!(a.opposite().ptr_eq(&op));
        assert_eq!(op.structure_constants(), a.structure_constants());
    }

    #[test]
    fn product_field_splits() {
        // k x k with diagonal structure constants
        let z = Scalar::ZERO;
        let o = Scalar::ONE;
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), o.clone()]],
        ];
        let a = Algebra::from_structure_constants(Q, &c, vec![o.clone(), o.clone()], None).unwrap();
        assert_eq!(a.radical().unwrap().dim(), 0);
        let mut ids: Vec<Vec<Scalar>> = a.primitive_idempotents().unwrap().into_iter().map(|e| e.into_element()).collect();
        ids.sort_by_key(|v| v[0].is_zero());
        assert_eq!(ids, vec![vec![o.clone(), z.clone()], vec![z, o]]);
    }

    #[test]
    fn non_associative_rejected() {
        let o = Scalar::ONE;
        let z = Scalar::ZERO;
        // b1 b1 = b0 with b0 the unit but b1 not consistent
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        assert!(Algebra::from_structure_constants(Q, &c, vec![z, o], None).is_err());
    }

    #[test]
    fn small_prime_rejected_for_radical() {
        let f = FieldSpec::prime(2).unwrap();
        let o = Scalar::ONE;
        let z = Scalar::ZERO;
        let c = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        let a = Algebra::from_structure_constants(f, &c, vec![o, z], None).unwrap();
        assert!(matches!(a.radical(), Err(Error::UnsupportedField(_))));
    }
}
