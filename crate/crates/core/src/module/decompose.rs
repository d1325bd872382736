use super::{hom_basis, ModuleHom, RightModule};
use crate::algebra::matrix_idempotents;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};

/// `X ≅ ⊕ summand_i^{mult_i}` with an explicit isomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<(RightModule, usize)>,
    /// From the direct sum (copies in summand order) onto the module.
    pub iso: ModuleHom,
    /// Embedding of every copy, in the same order as the rows of `iso`.
    pub embeddings: Vec<(usize, ModuleHom)>,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].1 == 1
    }

    pub fn count(&self) -> usize {
        self.summands.iter().map(|(_, m)| m).sum()
    }

    /// Every summand as a list with repetitions.
    pub fn flat(&self) -> Vec<RightModule> {
        self.summands.iter().flat_map(|(m, k)| std::iter::repeat_n(m.clone(), *k)).collect()
    }
}

/// Sort key used for deterministic summand order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    dim: usize,
    dimvec: Vec<usize>,
    end_dim: usize,
    top: usize,
    socle: usize,
}

fn key(m: &RightModule) -> Result<Key> {
    Ok(Key { dim: m.dim(), dimvec: m.dimension_vector()?, end_dim: hom_basis(m, m)?.dim(), top: m.top_dim()?, socle: m.socle_dim()? })
}

impl RightModule {
    /// Primitive idempotents of `End(X)` as matrices on `X`.
    pub fn endomorphism_idempotents(&self) -> Result<Vec<Mat>> {
        let end = hom_basis(self, self)?;
        let id = Mat::identity(self.field(), self.dim());
        matrix_idempotents(self.field(), end.basis(), &id, || self.vertex_sections().unwrap_or_default())
    }

    /// Top and socle of `X` at each vertex, as sections `(upper, lower)`.
    fn vertex_sections(&self) -> Result<Vec<(Subspace, Subspace)>> {
        let f = self.field();
        let rad = self.radical_subspace()?;
        let soc = self.socle_subspace()?;
        let mut out = Vec::new();
        for e in self.algebra().primitive_idempotents()? {
            let at = Subspace::row_space(&self.act_element(e.element()));
            out.push((at.clone(), rad.intersection(&at)));
            out.push((soc.intersection(&at), Subspace::zero(f, self.dim())));
        }
        Ok(out)
    }

    /// Whether the endomorphism algebra is local.
    pub fn is_indecomposable(&self) -> Result<bool> {
        Ok(self.dim() > 0 && self.endomorphism_idempotents()?.len() == 1)
    }

    /// Krull–Schmidt decomposition, summands sorted by invariants and then
    /// by discovery order.
    pub fn decompose(&self) -> Result<Decomposition> {
        let f = self.field();
        if self.dim() == 0 {
            return Ok(Decomposition { summands: vec![], iso: ModuleHom::identity(self), embeddings: vec![] });
        }
        let idems = self.endomorphism_idempotents()?;
        // (representative, key, embeddings of copies into self)
        let mut classes: Vec<(RightModule, Key, Vec<ModuleHom>)> = Vec::new();
        for e in idems {
            let s = Subspace::row_space(&e);
            let (piece, incl) = self.submodule_on(&s);
            let k = key(&piece)?;
            let mut placed = false;
            for (rep, rk, copies) in classes.iter_mut() {
                if *rk != k {
                    continue;
                }
                if let Some(phi) = iso_indecomposable(rep, &piece)? {
                    copies.push(phi.then(&incl)?);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push((piece.clone(), k, vec![ModuleHom::identity(&piece).then(&incl)?]));
            }
        }
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| classes[a].1.cmp(&classes[b].1).then(a.cmp(&b)));
        let mut summands = Vec::new();
        let mut embeddings = Vec::new();
        let mut rows = Vec::new();
        for (pos, &ci) in order.iter().enumerate() {
            let (rep, _, copies) = &classes[ci];
            summands.push((rep.clone(), copies.len()));
            for c in copies {
                rows.push(c.matrix().clone());
                embeddings.push((pos, c.clone()));
            }
        }
        let iso_m = Mat::vstack_all(f, self.dim(), &rows);
        let parts: Vec<RightModule> = summands.iter().flat_map(|(m, k)| std::iter::repeat_n(m.clone(), *k)).collect();
        let sum = RightModule::direct_sum_all(self.algebra(), &parts)?;
        let iso = ModuleHom::raw(&sum, self, iso_m);
        if !iso.is_iso() {
            return Err(Error::Invariant("decomposition map is not an isomorphism".into()));
        }
        Ok(Decomposition { summands, iso, embeddings })
    }
}

/// An isomorphism between indecomposables, if one exists.
///
/// With `End(X)` local some composite `g ∘ f` of basis maps is invertible
/// exactly when `X ≅ Y`.
pub fn iso_indecomposable(x: &RightModule, y: &RightModule) -> Result<Option<ModuleHom>> {
    if x.dim() != y.dim() {
        return Ok(None);
    }
    if x.dim() == 0 {
        return Ok(Some(ModuleHom::zero(x, y)));
    }
    let fwd = hom_basis(x, y)?;
    if fwd.dim() == 0 {
        return Ok(None);
    }
    for f in fwd.basis() {
        if f.is_invertible() {
            return Ok(Some(ModuleHom::raw(x, y, f.clone())));
        }
    }
    let back = hom_basis(y, x)?;
    for f in fwd.basis() {
        for g in back.basis() {
            if f.mul(g).is_invertible() {
                return Ok(Some(ModuleHom::raw(x, y, f.clone())));
            }
        }
    }
    Ok(None)
}

/// An isomorphism `X -> Y`, if one exists.
pub fn find_isomorphism(x: &RightModule, y: &RightModule) -> Result<Option<ModuleHom>> {
    x.same_algebra(y)?;
    if x.dim() != y.dim() {
        return Ok(None);
    }
    if x.dim() == 0 {
        return Ok(Some(ModuleHom::zero(x, y)));
    }
    let dx = x.decompose()?;
    let dy = y.decompose()?;
    if dx.count() != dy.count() || dx.summands.len() != dy.summands.len() {
        return Ok(None);
    }
    // match summand classes
    let mut matched: Vec<Option<(usize, ModuleHom)>> = vec![None; dx.summands.len()];
    let mut used = vec![false; dy.summands.len()];
    for (i, (sx, kx)) in dx.summands.iter().enumerate() {
        for (j, (sy, ky)) in dy.summands.iter().enumerate() {
            if used[j] || kx != ky {
                continue;
            }
            if let Some(phi) = iso_indecomposable(sx, sy)? {
                matched[i] = Some((j, phi));
                used[j] = true;
                break;
            }
        }
        if matched[i].is_none() {
            return Ok(None);
        }
    }
    let f = x.field();
    let mut ycopies: Vec<Vec<&ModuleHom>> = vec![Vec::new(); dy.summands.len()];
    for (j, e) in &dy.embeddings {
        ycopies[*j].push(e);
    }
    let mut next = vec![0usize; dy.summands.len()];
    let mut rows = Vec::new();
    for (i, _) in &dx.embeddings {
        let (j, phi) = matched[*i].as_ref().unwrap();
        let e = ycopies[*j][next[*j]];
        next[*j] += 1;
        rows.push(phi.matrix().mul(e.matrix()));
    }
    let b = Mat::vstack_all(f, y.dim(), &rows);
    let inv = dx.iso.matrix().invert().ok_or_else(|| Error::Invariant("decomposition iso".into()))?;
    let m = inv.mul(&b);
    let h = ModuleHom::raw(x, y, m);
    debug_assert!(h.intertwines() && h.is_iso());
    Ok(Some(h))
}
