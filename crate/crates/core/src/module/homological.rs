use std::sync::Arc;

use super::decompose::iso_indecomposable;
use super::{hom_basis, HomSpace, ModuleHom, RightModule};
use crate::algebra::{Algebra, ProjData};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar, Subspace};

fn projective_data(alg: &Algebra) -> Result<&[ProjData]> {
    alg.projective_cache()
        .get_or_init(|| {
            let prims = alg.primitive_idempotents()?;
            let regular = RightModule::regular(alg);
            let mut out: Vec<ProjData> = Vec::new();
            let mut mods: Vec<RightModule> = Vec::new();
            for (idx, e) in prims.iter().enumerate() {
                let basis = alg.right_ideal_basis(e.element());
                let (p, _) = regular.submodule(&basis)?;
                let mut seen = false;
                for q in &mods {
                    if iso_indecomposable(q, &p)?.is_some() {
                        seen = true;
                        break;
                    }
                }
                if seen {
                    continue;
                }
                mods.push(p.clone());
                out.push(ProjData { idem: idx, basis, action: p.action.clone() });
            }
            Ok(out)
        })
        .as_ref()
        .map(|v| v.as_slice())
        .map_err(Clone::clone)
}

/// Number of isomorphism classes of simple modules.
pub fn vertex_count(alg: &Algebra) -> Result<usize> {
    Ok(projective_data(alg)?.len())
}

/// Name of a vertex: its block label or its index.
pub fn vertex_name(alg: &Algebra, v: usize) -> Result<String> {
    Ok(alg.vertex_name(projective_data(alg)?[v].idem))
}

/// The primitive idempotent attached to a vertex.
pub fn vertex_idempotent(alg: &Algebra, v: usize) -> Result<Vec<Scalar>> {
    let d = &projective_data(alg)?[v];
    Ok(alg.primitive_idempotents()?[d.idem].element().to_vec())
}

/// Indecomposable projective `e_v A`.
pub fn projective(alg: &Algebra, v: usize) -> Result<RightModule> {
    let d = &projective_data(alg)?[v];
    Ok(RightModule { algebra: alg.clone(), dim: d.basis.rows(), action: d.action.clone() })
}

pub fn projectives(alg: &Algebra) -> Result<Vec<RightModule>> {
    (0..vertex_count(alg)?).map(|v| projective(alg, v)).collect()
}

/// Simple top of `e_v A`.
pub fn simple(alg: &Algebra, v: usize) -> Result<RightModule> {
    let p = projective(alg, v)?;
    let rad = p.radical_subspace()?;
    Ok(p.quotient(&rad).0)
}

pub fn simples(alg: &Algebra) -> Result<Vec<RightModule>> {
    (0..vertex_count(alg)?).map(|v| simple(alg, v)).collect()
}

/// Indecomposable injective with socle the simple at `v`: `D(A e_v)`.
pub fn injective(alg: &Algebra, v: usize) -> Result<RightModule> {
    let cache = alg
        .injective_cache()
        .get_or_init(|| {
            let op = alg.opposite();
            let reg = RightModule::regular(&op);
            let mut out = Vec::new();
            for d in projective_data(alg)? {
                let e = alg.primitive_idempotents()?[d.idem].element().to_vec();
                let basis = op.right_ideal_basis(&e);
                let (p, _) = reg.submodule(&basis)?;
                out.push(Arc::new(p.dual().action.as_ref().clone()));
            }
            Ok(out)
        })
        .as_ref()
        .map_err(Clone::clone)?;
    let action = cache[v].clone();
    Ok(RightModule { algebra: alg.clone(), dim: action.first().map_or(0, |m| m.rows()), action })
}

pub fn injectives(alg: &Algebra) -> Result<Vec<RightModule>> {
    (0..vertex_count(alg)?).map(|v| injective(alg, v)).collect()
}

/// A cover `P -> X` or a hull `X -> I`, with the vertex of every
/// indecomposable summand of `P` (resp. `I`) in order.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: RightModule,
    pub map: ModuleHom,
    pub summands: Vec<usize>,
}

/// Projective cover built from the top: generators are picked in each
/// `X e_v` outside the radical plus the part already covered.
pub fn projective_cover(x: &RightModule) -> Result<Cover> {
    let alg = x.algebra();
    let f = x.field();
    let data = projective_data(alg)?;
    let prims = alg.primitive_idempotents()?;
    let mut covered = x.radical_subspace()?;
    let mut picks: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (v, d) in data.iter().enumerate() {
        let xe = x.act_element(prims[d.idem].element()).image_basis();
        for row in xe.row_iter() {
            if covered.contains(row) {
                continue;
            }
            picks.push((v, row.to_vec()));
            covered = covered.sum(&x.generated(&[row.to_vec()]));
        }
    }
    if covered.dim() != x.dim() {
        return Err(Error::Invariant("projective cover does not reach the module".into()));
    }
    let mut parts = Vec::new();
    let mut blocks = Vec::new();
    for (v, elt) in &picks {
        parts.push(projective(alg, *v)?);
        let w = Mat::from_rows(f, x.dim(), (0..alg.dim()).map(|k| x.action(k).apply(elt)).collect());
        blocks.push(data[*v].basis.mul(&w));
    }
    let p = RightModule::direct_sum_all(alg, &parts)?;
    let m = Mat::vstack_all(f, x.dim(), &blocks);
    let map = ModuleHom::raw(&p, x, m);
    debug_assert!(map.intertwines());
    Ok(Cover { module: p, map, summands: picks.into_iter().map(|(v, _)| v).collect() })
}

/// Injective hull, dual to the projective cover over the opposite algebra.
pub fn injective_hull(x: &RightModule) -> Result<Cover> {
    let c = projective_cover(&x.dual())?;
    let i = c.module.dual();
    let map = ModuleHom::raw(x, &i, c.map.matrix().transpose());
    debug_assert!(map.intertwines());
    Ok(Cover { module: i, map, summands: c.summands })
}

pub fn is_projective(x: &RightModule) -> Result<bool> {
    Ok(projective_cover(x)?.module.dim() == x.dim())
}

pub fn is_injective(x: &RightModule) -> Result<bool> {
    Ok(injective_hull(x)?.module.dim() == x.dim())
}

/// `P1 -> P0 -> X -> 0` with both covers minimal.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: Cover,
    pub p1: Cover,
    /// `P1 -> P0`
    pub d: ModuleHom,
    /// `ker(P0 -> X) -> P0`
    pub kernel: ModuleHom,
}

pub fn min_proj_presentation(x: &RightModule) -> Result<Presentation> {
    let p0 = projective_cover(x)?;
    let (k, incl) = p0.map.kernel();
    let p1 = projective_cover(&k)?;
    let d = p1.map.then(&incl)?;
    Ok(Presentation { p0, p1, d, kernel: incl })
}

/// A minimal projective resolution `P_len -> ... -> P_0 -> X`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub covers: Vec<Cover>,
    /// `diffs[k-1] : P_k -> P_{k-1}`
    pub diffs: Vec<ModuleHom>,
}

impl Resolution {
    pub fn new(x: &RightModule, len: usize) -> Result<Resolution> {
        let mut covers = vec![projective_cover(x)?];
        let mut diffs = Vec::new();
        for _ in 0..len {
            let last = covers.last().unwrap();
            let (k, incl) = last.map.kernel();
            let c = projective_cover(&k)?;
            diffs.push(c.map.then(&incl)?);
            covers.push(c);
        }
        Ok(Resolution { covers, diffs })
    }

    pub fn term(&self, k: usize) -> &RightModule {
        &self.covers[k].module
    }
}

/// `Ext^i(X, Y)` with cocycle representatives `P_i -> Y`.
#[derive(Clone, Debug)]
pub struct Ext {
    pub dim: usize,
    pub representatives: Vec<Mat>,
}

pub fn ext(x: &RightModule, y: &RightModule, i: usize) -> Result<Ext> {
    x.same_algebra(y)?;
    let res = Resolution::new(x, i + 1)?;
    ext_from_resolution(&res, y, i)
}

pub fn ext_from_resolution(res: &Resolution, y: &RightModule, i: usize) -> Result<Ext> {
    let f = y.field();
    let hi = hom_basis(res.term(i), y)?;
    if hi.dim() == 0 {
        return Ok(Ext { dim: 0, representatives: vec![] });
    }
    // cocycles: psi with d_{i+1} psi = 0
    let d_next = res.diffs[i].matrix();
    let imgs: Vec<Vec<Scalar>> = hi.basis().iter().map(|p| d_next.mul(p).flatten()).collect();
    let width = d_next.rows() * y.dim();
    let z = Mat::from_rows(f, width, imgs).left_kernel();
    let cocycles = Subspace::row_space(&z);
    let boundaries = if i == 0 {
        Subspace::zero(f, hi.dim())
    } else {
        let d = res.diffs[i - 1].matrix();
        let hprev = hom_basis(res.term(i - 1), y)?;
        let rows: Vec<Vec<Scalar>> = hprev.basis().iter().map(|p| hi.coords_of(&d.mul(p))).collect();
        Subspace::span(f, hi.dim(), &rows)
    };
    let mut reps = Vec::new();
    let mut span = boundaries.clone();
    for r in cocycles.basis().row_iter() {
        if !span.contains(r) {
            span = span.sum(&Subspace::span(f, hi.dim(), &[r.to_vec()]));
            reps.push(hi.element(r));
        }
    }
    Ok(Ext { dim: cocycles.dim() - boundaries.dim(), representatives: reps })
}

/// Kernel of the cover, without splitting off projective summands.
pub fn syzygy_unstripped(x: &RightModule, m: usize) -> Result<RightModule> {
    let mut cur = x.clone();
    for _ in 0..m {
        cur = projective_cover(&cur)?.map.kernel().0;
    }
    Ok(cur)
}

pub fn cosyzygy_unstripped(x: &RightModule, m: usize) -> Result<RightModule> {
    let mut cur = x.clone();
    for _ in 0..m {
        cur = injective_hull(&cur)?.map.cokernel().0;
    }
    Ok(cur)
}

fn strip(x: &RightModule, drop: impl Fn(&RightModule) -> Result<bool>) -> Result<RightModule> {
    if x.dim() == 0 {
        return Ok(x.clone());
    }
    let d = x.decompose()?;
    let mut keep = Vec::new();
    let mut dropped = false;
    for (m, k) in &d.summands {
        if drop(m)? {
            dropped = true;
        } else {
            keep.extend(std::iter::repeat_n(m.clone(), *k));
        }
    }
    if !dropped {
        return Ok(x.clone());
    }
    RightModule::direct_sum_all(x.algebra(), &keep)
}

pub fn strip_projectives(x: &RightModule) -> Result<RightModule> {
    strip(x, is_projective)
}

pub fn strip_injectives(x: &RightModule) -> Result<RightModule> {
    strip(x, is_injective)
}

/// `Ω^m X` without projective summands.
pub fn syzygy(x: &RightModule, m: usize) -> Result<RightModule> {
    let mut cur = strip_projectives(x)?;
    for _ in 0..m {
        cur = strip_projectives(&syzygy_unstripped(&cur, 1)?)?;
    }
    Ok(cur)
}

/// `Ω^{-m} X` without injective summands.
pub fn cosyzygy(x: &RightModule, m: usize) -> Result<RightModule> {
    let mut cur = strip_injectives(x)?;
    for _ in 0..m {
        cur = strip_injectives(&cosyzygy_unstripped(&cur, 1)?)?;
    }
    Ok(cur)
}

/// `X* = Hom_A(X, A)` as a module over the opposite algebra, acting by
/// left multiplication on values.
pub fn star(x: &RightModule) -> Result<(RightModule, HomSpace)> {
    let alg = x.algebra();
    let reg = RightModule::regular(alg);
    let hs = hom_basis(x, &reg)?;
    let op = alg.opposite();
    let f = alg.field();
    let action = alg
        .left_basis_mult()
        .iter()
        .map(|l| Mat::from_rows(f, hs.dim(), hs.basis().iter().map(|p| hs.coords_of(&p.mul(l))).collect()))
        .collect();
    Ok((RightModule::raw(&op, hs.dim(), action), hs))
}

/// `g* : Y* -> X*` for `g : X -> Y`, given both hom spaces.
pub fn star_map(g: &ModuleHom, xs: &(RightModule, HomSpace), ys: &(RightModule, HomSpace)) -> ModuleHom {
    let f = g.source().field();
    let rows = ys.1.basis().iter().map(|p| xs.1.coords_of(&g.matrix().mul(p))).collect();
    ModuleHom::raw(&ys.0, &xs.0, Mat::from_rows(f, xs.1.dim(), rows))
}

/// Auslander–Bridger transpose, a module over the opposite algebra.
pub fn transpose(x: &RightModule) -> Result<RightModule> {
    let pres = min_proj_presentation(x)?;
    let s0 = star(&pres.p0.module)?;
    let s1 = star(&pres.p1.module)?;
    let ds = star_map(&pres.d, &s1, &s0);
    Ok(ds.cokernel().0)
}

/// `τ = D Tr`
pub fn ar_translate(x: &RightModule) -> Result<RightModule> {
    Ok(transpose(x)?.dual())
}

/// `τ⁻ = Tr D`
pub fn ar_translate_inverse(y: &RightModule) -> Result<RightModule> {
    transpose(&y.dual())
}

/// A stable hom space: `Hom(X, Y)` modulo a subspace of maps factoring
/// through projectives (or injectives).
#[derive(Clone, Debug)]
pub struct StableHom {
    pub dim: usize,
    pub hom: HomSpace,
    /// Coordinates (in `hom`) of the maps that factor.
    pub factoring: Subspace,
    /// Representatives of a basis of the quotient.
    pub basis: Vec<Mat>,
}

fn stable_quotient(hom: HomSpace, rows: Vec<Vec<Scalar>>) -> StableHom {
    let f = hom.source().field();
    let factoring = Subspace::span(f, hom.dim(), &rows);
    let basis = factoring.complement_indices().into_iter().map(|i| hom.basis()[i].clone()).collect::<Vec<_>>();
    StableHom { dim: hom.dim() - factoring.dim(), hom, factoring, basis }
}

/// `Hom(X, Y)` modulo maps factoring through a projective.
pub fn stable_hom_proj(x: &RightModule, y: &RightModule) -> Result<StableHom> {
    let hom = hom_basis(x, y)?;
    let cover = projective_cover(y)?;
    let through = hom_basis(x, &cover.module)?;
    let rows = through.basis().iter().map(|h| hom.coords_of(&h.mul(cover.map.matrix()))).collect();
    Ok(stable_quotient(hom, rows))
}

/// `Hom(X, Y)` modulo maps factoring through an injective.
pub fn stable_hom_inj(x: &RightModule, y: &RightModule) -> Result<StableHom> {
    let hom = hom_basis(x, y)?;
    let hull = injective_hull(x)?;
    let through = hom_basis(&hull.module, y)?;
    let rows = through.basis().iter().map(|h| hom.coords_of(&hull.map.matrix().mul(h))).collect();
    Ok(stable_quotient(hom, rows))
}
