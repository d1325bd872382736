//! Subcategories `add(N)` of a module category and the passage to modules
//! over `Γ = End(N)`.
//!
//! `Γ` multiplies by composition, `γ1 * γ2 = γ1 ∘ γ2`, so `Hom(N, X)` is a
//! right `Γ`-module by precomposition and `Hom(X, N)` is a right module over
//! the opposite algebra.

use crate::algebra::{Algebra, Block};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar, Subspace};
use crate::module::{hom_basis, injective_hull, iso_indecomposable, projective_cover, HomSpace, ModuleHom, RightModule};

/// `add(N_1 ⊕ ... ⊕ N_r)` with `Γ = End(N)`.
#[derive(Clone, Debug)]
pub struct AddSubcategory {
    base: Algebra,
    names: Vec<String>,
    generators: Vec<RightModule>,
    sum: RightModule,
    gamma: Algebra,
    /// `homs[s][t]` spans `Hom(N_s, N_t)`; the identity comes first when `s = t`.
    homs: Vec<Vec<HomSpace>>,
    offsets: Vec<Vec<usize>>,
    /// `(s, t, k)` for every basis element of `Γ`.
    index: Vec<(usize, usize, usize)>,
}

/// A module of the form `Hom(N, X)` or `Hom(X, N)` with its component
/// hom spaces, one per generator.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: RightModule,
    pub parts: Vec<HomSpace>,
    pub offsets: Vec<usize>,
}

impl HomModule {
    /// The Λ-map represented by a vector, as a map out of (or into) `N_s`.
    pub fn component(&self, v: &[Scalar], s: usize) -> Mat {
        let o = self.offsets[s];
        self.parts[s].element(&v[o..o + self.parts[s].dim()])
    }

    /// Coordinates of a map in component `s`.
    pub fn vector_of(&self, s: usize, m: &Mat) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.module.dim()];
        let c = self.parts[s].coords_of(m);
        v[self.offsets[s]..self.offsets[s] + c.len()].clone_from_slice(&c);
        v
    }
}

/// An approximation `source -> X` (or `X -> source`) with the generator
/// behind every indecomposable summand of `source`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleHom,
    pub copies: Vec<usize>,
}

impl AddSubcategory {
    /// Builds `add(N)` from named indecomposable, pairwise non-isomorphic
    /// generators.
    pub fn new(base: &Algebra, gens: Vec<(String, RightModule)>) -> Result<AddSubcategory> {
        if gens.is_empty() {
            return Err(Error::Membership("a subcategory needs at least one generator".into()));
        }
        for (name, g) in &gens {
            if g.algebra() != base {
                return Err(Error::AlgebraMismatch);
            }
            if !g.is_indecomposable()? {
                return Err(Error::Membership(format!("generator {name} is not indecomposable")));
            }
        }
        for i in 0..gens.len() {
            for j in 0..i {
                if iso_indecomposable(&gens[j].1, &gens[i].1)?.is_some() {
                    return Err(Error::Membership(format!("generators {} and {} are isomorphic", gens[j].0, gens[i].0)));
                }
            }
        }
        let f = base.field();
        let (names, generators): (Vec<String>, Vec<RightModule>) = gens.into_iter().unzip();
        let r = generators.len();
        let mut homs = Vec::with_capacity(r);
        for s in 0..r {
            let mut row = Vec::with_capacity(r);
            for t in 0..r {
                let h = hom_basis(&generators[s], &generators[t])?;
                row.push(if s == t { h.with_leading(&[Mat::identity(f, generators[s].dim())]) } else { h });
            }
            homs.push(row);
        }
        let mut offsets = vec![vec![0; r]; r];
        let mut index = Vec::new();
        for s in 0..r {
            for t in 0..r {
                offsets[s][t] = index.len();
                index.extend((0..homs[s][t].dim()).map(|k| (s, t, k)));
            }
        }
        let dim = index.len();
        // b_i * b_j = b_i ∘ b_j: first b_j : N_u -> N_v, then b_i : N_s -> N_t with v = s
        let mut right = vec![Mat::zeros(f, dim, dim); dim];
        for (j, &(u, v, kj)) in index.iter().enumerate() {
            let hj = &homs[u][v].basis()[kj];
            let mut m = Mat::zeros(f, dim, dim);
            for (i, &(s, t, ki)) in index.iter().enumerate() {
                if s != v {
                    continue;
                }
                let prod = hj.mul(&homs[s][t].basis()[ki]);
                let c = homs[u][t].coords_of(&prod);
                for (k, x) in c.into_iter().enumerate() {
                    m.set(i, offsets[u][t] + k, x);
                }
            }
            right[j] = m;
        }
        let mut unit = vec![Scalar::ZERO; dim];
        let mut blocks = Vec::with_capacity(r);
        for s in 0..r {
            unit[offsets[s][s]] = Scalar::ONE;
            let mut e = vec![Scalar::ZERO; dim];
            e[offsets[s][s]] = Scalar::ONE;
            blocks.push(Block { name: names[s].clone(), element: e });
        }
        let labels = index
            .iter()
            .map(|&(s, t, k)| if s == t && k == 0 { format!("1_{}", names[s]) } else { format!("{}>{}#{}", names[s], names[t], k) })
            .collect();
        let gamma = Algebra::assemble(f, right, unit, labels, blocks, None);
        gamma.check_axioms()?;
        let sum = RightModule::direct_sum_all(base, &generators)?;
        Ok(AddSubcategory { base: base.clone(), names, generators, sum, gamma, homs, offsets, index })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn gamma(&self) -> &Algebra {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[RightModule] {
        &self.generators
    }

    pub fn generator(&self, s: usize) -> &RightModule {
        &self.generators[s]
    }

    /// `N`, the direct sum of the generators.
    pub fn sum(&self) -> &RightModule {
        &self.sum
    }

    /// Basis of `Hom(N_s, N_t)` used for `Γ`.
    pub fn hom_block(&self, s: usize, t: usize) -> &HomSpace {
        &self.homs[s][t]
    }

    /// `(s, t, k)`: basis element `i` of `Γ` is the `k`-th basis map `N_s -> N_t`.
    pub fn basis_index(&self, i: usize) -> (usize, usize, usize) {
        self.index[i]
    }

    /// The element of `Γ` given by a map `N_s -> N_t`.
    pub fn element_of(&self, s: usize, t: usize, h: &Mat) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.gamma.dim()];
        let c = self.homs[s][t].coords_of(h);
        let o = self.offsets[s][t];
        v[o..o + c.len()].clone_from_slice(&c);
        v
    }

    /// The `(s, t)` component of an element of `Γ`, a map `N_s -> N_t`.
    pub fn component(&self, g: &[Scalar], s: usize, t: usize) -> Mat {
        let o = self.offsets[s][t];
        self.homs[s][t].element(&g[o..o + self.homs[s][t].dim()])
    }

    /// The identity of `N_s` as an idempotent of `Γ`.
    pub fn idempotent(&self, s: usize) -> Vec<Scalar> {
        self.gamma.block(&self.names[s]).expect("generator block").element.clone()
    }

    /// Sum of the idempotents of the named generators.
    pub fn idempotent_of(&self, names: &[&str]) -> Result<Vec<Scalar>> {
        let f = self.gamma.field();
        let mut e = vec![Scalar::ZERO; self.gamma.dim()];
        for n in names {
            let s = self.position(n).ok_or_else(|| Error::Semantic(format!("unknown generator {n}")))?;
            let b = self.idempotent(s);
            e = e.iter().zip(&b).map(|(x, y)| f.add(x, y)).collect();
        }
        Ok(e)
    }

    /// Generators that are projective (resp. injective) Λ-modules.
    pub fn projective_generators(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (s, g) in self.generators.iter().enumerate() {
            if crate::module::is_projective(g)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    pub fn injective_generators(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (s, g) in self.generators.iter().enumerate() {
            if crate::module::is_injective(g)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Generator index of each indecomposable summand of `x`, or `None` if
    /// some summand lies outside `add(N)`.
    pub fn contains(&self, x: &RightModule) -> Result<Option<Vec<usize>>> {
        x.same_algebra(&self.sum)?;
        let d = x.decompose()?;
        let mut out = Vec::new();
        for (m, k) in &d.summands {
            match self.find_generator(m)? {
                Some(s) => out.extend(std::iter::repeat_n(s, *k)),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// The generator isomorphic to an indecomposable module.
    pub fn find_generator(&self, m: &RightModule) -> Result<Option<usize>> {
        for (s, g) in self.generators.iter().enumerate() {
            if iso_indecomposable(g, m)?.is_some() {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// `Hom(N, X)` as a right `Γ`-module.
    pub fn yoneda(&self, x: &RightModule) -> Result<HomModule> {
        let f = self.base.field();
        let parts: Vec<HomSpace> = self.generators.iter().map(|g| hom_basis(g, x)).collect::<Result<_>>()?;
        let offsets = running(&parts);
        let dim: usize = parts.iter().map(HomSpace::dim).sum();
        let action = self
            .index
            .iter()
            .map(|&(s, t, k)| {
                // Φ in Hom(N_t, X) goes to G Φ in Hom(N_s, X)
                let g = &self.homs[s][t].basis()[k];
                let mut m = Mat::zeros(f, dim, dim);
                for (r, phi) in parts[t].basis().iter().enumerate() {
                    let c = parts[s].coords_of(&g.mul(phi));
                    for (q, v) in c.into_iter().enumerate() {
                        m.set(offsets[t] + r, offsets[s] + q, v);
                    }
                }
                m
            })
            .collect();
        let module = RightModule::raw(&self.gamma, dim, action);
        debug_assert!(module.check().is_ok());
        Ok(HomModule { module, parts, offsets })
    }

    /// `Hom(N, f)` between given Yoneda modules.
    pub fn yoneda_map(&self, f: &ModuleHom, x: &HomModule, y: &HomModule) -> ModuleHom {
        let fld = self.base.field();
        let mut m = Mat::zeros(fld, x.module.dim(), y.module.dim());
        for s in 0..self.len() {
            for (r, phi) in x.parts[s].basis().iter().enumerate() {
                let c = y.parts[s].coords_of(&phi.mul(f.matrix()));
                for (q, v) in c.into_iter().enumerate() {
                    m.set(x.offsets[s] + r, y.offsets[s] + q, v);
                }
            }
        }
        ModuleHom::raw(&x.module, &y.module, m)
    }

    /// `Hom(X, N)` as a right module over the opposite of `Γ`.
    pub fn co_yoneda(&self, x: &RightModule) -> Result<HomModule> {
        let f = self.base.field();
        let parts: Vec<HomSpace> = self.generators.iter().map(|g| hom_basis(x, g)).collect::<Result<_>>()?;
        let offsets = running(&parts);
        let dim: usize = parts.iter().map(HomSpace::dim).sum();
        let action = self
            .index
            .iter()
            .map(|&(s, t, k)| {
                // Ψ in Hom(X, N_s) goes to Ψ G in Hom(X, N_t)
                let g = &self.homs[s][t].basis()[k];
                let mut m = Mat::zeros(f, dim, dim);
                for (r, psi) in parts[s].basis().iter().enumerate() {
                    let c = parts[t].coords_of(&psi.mul(g));
                    for (q, v) in c.into_iter().enumerate() {
                        m.set(offsets[s] + r, offsets[t] + q, v);
                    }
                }
                m
            })
            .collect();
        let module = RightModule::raw(&self.gamma.opposite(), dim, action);
        debug_assert!(module.check().is_ok());
        Ok(HomModule { module, parts, offsets })
    }

    /// `Hom(f, N) : Hom(Y, N) -> Hom(X, N)` for `f : X -> Y`.
    pub fn co_yoneda_map(&self, f: &ModuleHom, x: &HomModule, y: &HomModule) -> ModuleHom {
        let fld = self.base.field();
        let mut m = Mat::zeros(fld, y.module.dim(), x.module.dim());
        for s in 0..self.len() {
            for (r, psi) in y.parts[s].basis().iter().enumerate() {
                let c = x.parts[s].coords_of(&f.matrix().mul(psi));
                for (q, v) in c.into_iter().enumerate() {
                    m.set(y.offsets[s] + r, x.offsets[s] + q, v);
                }
            }
        }
        ModuleHom::raw(&y.module, &x.module, m)
    }

    /// The finitely presented functor with presentation `f : b1 -> b0`,
    /// `coker Hom(N, f)`.
    pub fn fp_functor(&self, f: &ModuleHom) -> Result<RightModule> {
        for m in [f.source(), f.target()] {
            if self.contains(m)?.is_none() {
                return Err(Error::Membership("presentation leaves the subcategory".into()));
            }
        }
        let ys = self.yoneda(f.source())?;
        let yt = self.yoneda(f.target())?;
        Ok(self.yoneda_map(f, &ys, &yt).cokernel().0)
    }

    /// `Hom(N, z)` modulo maps factoring through projectives.
    pub fn stable_representable(&self, z: &RightModule) -> Result<RightModule> {
        let y = self.yoneda(z)?;
        let cover = projective_cover(z)?;
        let mut rows = Vec::new();
        for (s, g) in self.generators.iter().enumerate() {
            for h in hom_basis(g, &cover.module)?.basis() {
                rows.push(y.vector_of(s, &h.mul(cover.map.matrix())));
            }
        }
        let sub = Subspace::span(self.base.field(), y.module.dim(), &rows);
        Ok(y.module.quotient(&sub).0)
    }

    /// `Hom(z, N)` modulo maps factoring through injectives.
    pub fn costable_representable(&self, z: &RightModule) -> Result<RightModule> {
        let y = self.co_yoneda(z)?;
        let hull = injective_hull(z)?;
        let mut rows = Vec::new();
        for (s, g) in self.generators.iter().enumerate() {
            for h in hom_basis(&hull.module, g)?.basis() {
                rows.push(y.vector_of(s, &hull.map.matrix().mul(h)));
            }
        }
        let sub = Subspace::span(self.base.field(), y.module.dim(), &rows);
        Ok(y.module.quotient(&sub).0)
    }

    /// `⊕ N_s^{dim Hom(N_s, X)} -> X` built from hom bases.
    pub fn right_approximation(&self, x: &RightModule) -> Result<Approximation> {
        let mut copies = Vec::new();
        let mut maps = Vec::new();
        for (s, g) in self.generators.iter().enumerate() {
            for h in hom_basis(g, x)?.basis() {
                copies.push(s);
                maps.push(h.clone());
            }
        }
        self.assemble_right(x, copies, maps)
    }

    fn assemble_right(&self, x: &RightModule, copies: Vec<usize>, maps: Vec<Mat>) -> Result<Approximation> {
        let parts: Vec<RightModule> = copies.iter().map(|&s| self.generators[s].clone()).collect();
        let src = RightModule::direct_sum_all(&self.base, &parts)?;
        let m = Mat::vstack_all(self.base.field(), x.dim(), &maps);
        Ok(Approximation { map: ModuleHom::raw(&src, x, m), copies })
    }

    /// Whether maps `N_{c} -> X` (one per copy) approximate `X`.
    fn right_approximates(&self, x: &RightModule, copies: &[usize], maps: &[Mat], targets: &[HomSpace]) -> bool {
        let f = self.base.field();
        (0..self.len()).all(|j| {
            let want = targets[j].dim();
            if want == 0 {
                return true;
            }
            let mut rows = Vec::new();
            for (c, phi) in copies.iter().zip(maps) {
                for h in self.homs[j][*c].basis() {
                    rows.push(h.mul(phi).flatten());
                }
            }
            Subspace::span(f, self.generators[j].dim() * x.dim(), &rows).dim() == want
        })
    }

    fn left_approximates(&self, x: &RightModule, copies: &[usize], maps: &[Mat], targets: &[HomSpace]) -> bool {
        let f = self.base.field();
        (0..self.len()).all(|j| {
            let want = targets[j].dim();
            if want == 0 {
                return true;
            }
            let mut rows = Vec::new();
            for (c, psi) in copies.iter().zip(maps) {
                for h in self.homs[*c][j].basis() {
                    rows.push(psi.mul(h).flatten());
                }
            }
            Subspace::span(f, x.dim() * self.generators[j].dim(), &rows).dim() == want
        })
    }

    /// Right approximation with redundant copies removed greedily in order.
    pub fn minimal_right_approximation(&self, x: &RightModule) -> Result<Approximation> {
        let targets: Vec<HomSpace> = self.generators.iter().map(|g| hom_basis(g, x)).collect::<Result<_>>()?;
        let mut copies = Vec::new();
        let mut maps = Vec::new();
        for (s, h) in targets.iter().enumerate() {
            for m in h.basis() {
                copies.push(s);
                maps.push(m.clone());
            }
        }
        let mut i = 0;
        while i < copies.len() {
            let mut c2 = copies.clone();
            let mut m2 = maps.clone();
            c2.remove(i);
            m2.remove(i);
            if self.right_approximates(x, &c2, &m2, &targets) {
                copies = c2;
                maps = m2;
            } else {
                i += 1;
            }
        }
        self.assemble_right(x, copies, maps)
    }

    /// `X -> ⊕ N_s^{dim Hom(X, N_s)}` built from hom bases.
    pub fn left_approximation(&self, x: &RightModule) -> Result<Approximation> {
        let mut copies = Vec::new();
        let mut maps = Vec::new();
        for (s, g) in self.generators.iter().enumerate() {
            for h in hom_basis(x, g)?.basis() {
                copies.push(s);
                maps.push(h.clone());
            }
        }
        self.assemble_left(x, copies, maps)
    }

    fn assemble_left(&self, x: &RightModule, copies: Vec<usize>, maps: Vec<Mat>) -> Result<Approximation> {
        let parts: Vec<RightModule> = copies.iter().map(|&s| self.generators[s].clone()).collect();
        let tgt = RightModule::direct_sum_all(&self.base, &parts)?;
        let m = Mat::hstack_all(self.base.field(), x.dim(), &maps);
        Ok(Approximation { map: ModuleHom::raw(x, &tgt, m), copies })
    }

    pub fn minimal_left_approximation(&self, x: &RightModule) -> Result<Approximation> {
        let targets: Vec<HomSpace> = self.generators.iter().map(|g| hom_basis(x, g)).collect::<Result<_>>()?;
        let mut copies = Vec::new();
        let mut maps = Vec::new();
        for (s, h) in targets.iter().enumerate() {
            for m in h.basis() {
                copies.push(s);
                maps.push(m.clone());
            }
        }
        let mut i = 0;
        while i < copies.len() {
            let mut c2 = copies.clone();
            let mut m2 = maps.clone();
            c2.remove(i);
            m2.remove(i);
            if self.left_approximates(x, &c2, &m2, &targets) {
                copies = c2;
                maps = m2;
            } else {
                i += 1;
            }
        }
        self.assemble_left(x, copies, maps)
    }

    /// Every map `N_j -> X` factors through `a`.
    pub fn certify_right(&self, a: &ModuleHom) -> Result<bool> {
        for g in &self.generators {
            for h in hom_basis(g, a.target())?.homs() {
                if a.lift_along(&h)?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every map `X -> N_j` factors through `a`.
    pub fn certify_left(&self, a: &ModuleHom) -> Result<bool> {
        for g in &self.generators {
            for h in hom_basis(a.source(), g)?.homs() {
                if a.extend_along(&h)?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn running(parts: &[HomSpace]) -> Vec<usize> {
    let mut acc = 0;
    parts
        .iter()
        .map(|p| {
            let o = acc;
            acc += p.dim();
            o
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::{a2, a3_rad2, dual_numbers};
    use crate::module::{find_isomorphism, injective, projective, simple};

    fn all_a2() -> (Algebra, AddSubcategory) {
        let a = a2();
        let gens = vec![
            ("P1".to_string(), projective(&a, 0).unwrap()),
            ("P2".to_string(), projective(&a, 1).unwrap()),
            ("S1".to_string(), simple(&a, 0).unwrap()),
        ];
        let b = AddSubcategory::new(&a, gens).unwrap();
        (a, b)
    }

    #[test]
    fn gamma_dimensions() {
        let a = dual_numbers();
        let r = RightModule::regular(&a);
        let s = simple(&a, 0).unwrap();
        let b = AddSubcategory::new(&a, vec![("R".into(), r.clone())]).unwrap();
        assert_eq!(b.gamma().dim(), 2);
        let b = AddSubcategory::new(&a, vec![("S".into(), s.clone())]).unwrap();
        assert_eq!(b.gamma().dim(), 1);
        assert!(AddSubcategory::new(&a, vec![("R".into(), r.power(2))]).is_err());
        let (_, b) = all_a2();
        assert_eq!(b.gamma().dim(), 5);
        assert_eq!(b.gamma().primitive_idempotents().unwrap().len(), 3);
    }

    #[test]
    fn yoneda_of_n_is_regular() {
        let (a, b) = all_a2();
        let y = b.yoneda(b.sum()).unwrap();
        let reg = RightModule::regular(b.gamma());
        assert!(find_isomorphism(&y.module, &reg).unwrap().is_some());
        // the non-projective simple sees P1 and itself
        assert_eq!(b.yoneda(&simple(&a, 0).unwrap()).unwrap().module.dim(), 2);
        assert_eq!(b.yoneda(&simple(&a, 1).unwrap()).unwrap().module.dim(), 1);
        assert!(b.yoneda(&RightModule::zero(&a)).unwrap().module.is_zero());
    }

    #[test]
    fn approximations_of_the_simple() {
        let a = dual_numbers();
        let r = RightModule::regular(&a);
        let s = simple(&a, 0).unwrap();
        let b = AddSubcategory::new(&a, vec![("R".into(), r.clone())]).unwrap();
        let ap = b.minimal_right_approximation(&s).unwrap();
        assert_eq!(ap.map.source().dim(), 2);
        assert!(ap.map.is_epi() && b.certify_right(&ap.map).unwrap());
        let al = b.minimal_left_approximation(&s).unwrap();
        assert_eq!(al.map.target().dim(), 2);
        assert!(al.map.is_mono() && b.certify_left(&al.map).unwrap());
        let z = b.minimal_right_approximation(&RightModule::zero(&a)).unwrap();
        assert!(z.map.source().is_zero());
        let id = b.minimal_right_approximation(&r).unwrap();
        assert!(id.map.is_iso());
    }

    #[test]
    fn membership() {
        let a = a3_rad2();
        let gens = vec![
            ("P1".into(), projective(&a, 0).unwrap()),
            ("P2".into(), projective(&a, 1).unwrap()),
            ("S3".into(), simple(&a, 2).unwrap()),
            ("S1".into(), simple(&a, 0).unwrap()),
        ];
        let b = AddSubcategory::new(&a, gens).unwrap();
        assert!(b.contains(&simple(&a, 1).unwrap()).unwrap().is_none());
        assert_eq!(b.contains(b.sum()).unwrap().unwrap().len(), 4);
        assert_eq!(b.contains(&RightModule::zero(&a)).unwrap(), Some(vec![]));
        assert_eq!(b.contains(&injective(&a, 0).unwrap()).unwrap(), Some(vec![3]));
    }

    #[test]
    fn fp_functor_examples() {
        let a = dual_numbers();
        let r = RightModule::regular(&a);
        let s = simple(&a, 0).unwrap();
        let b = AddSubcategory::new(&a, vec![("R".into(), r.clone()), ("S".into(), s)]).unwrap();
        let x = ModuleHom::new(&r, &r, a.left_mult(&a.basis_vector(1))).unwrap();
        assert_eq!(b.fp_functor(&x).unwrap().dim(), 2);
        assert!(b.fp_functor(&ModuleHom::identity(&r)).unwrap().is_zero());
        assert_eq!(b.fp_functor(&ModuleHom::zero(&r, &r)).unwrap().dim(), 3);
    }

    #[test]
    fn yoneda_is_full_on_generators() {
        let (_, b) = all_a2();
        let ys: Vec<HomModule> = b.generators().iter().map(|g| b.yoneda(g).unwrap()).collect();
        for (s, x) in b.generators().iter().enumerate() {
            for (t, y) in b.generators().iter().enumerate() {
                let lhs = hom_basis(&ys[s].module, &ys[t].module).unwrap().dim();
                assert_eq!(lhs, hom_basis(x, y).unwrap().dim());
            }
        }
    }
}
