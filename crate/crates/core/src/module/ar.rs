use super::homological::{ar_translate, projective_cover};
use super::{hom_basis, ModuleHom, RightModule};
use crate::algebra::trace_radical;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};

/// An almost split sequence `0 -> τC -> E -> C -> 0`.
#[derive(Clone, Debug)]
pub struct ArSequence {
    pub left: RightModule,
    pub middle: RightModule,
    pub right: RightModule,
    pub mono: ModuleHom,
    pub epi: ModuleHom,
}

impl ArSequence {
    /// The sequence ending at an indecomposable non-projective `c`, as the
    /// pushout of `0 -> ΩC -> P(C) -> C -> 0` along a socle element of
    /// `Ext¹(C, τC)` over `End(C)`.
    pub fn ending_at(c: &RightModule) -> Result<ArSequence> {
        let f = c.field();
        let tau = ar_translate(c)?;
        if tau.dim() == 0 {
            return Err(Error::Precondition("no almost split sequence ends at a projective".into()));
        }
        let cover = projective_cover(c)?;
        let (k, kincl) = cover.map.kernel();
        let ksub = kincl.image_subspace();
        let hk = hom_basis(&k, &tau)?;
        let hp = hom_basis(&cover.module, &tau)?;
        let bounds = Subspace::span(f, hk.dim(), &hp.basis().iter().map(|h| hk.coords_of(&kincl.matrix().mul(h))).collect::<Vec<_>>());
        // rad End(C) through the trace form on C
        let end = hom_basis(c, c)?;
        let rad_rows = trace_radical(f, end.basis());
        let mut restricted = Vec::new();
        for r in rad_rows.row_iter() {
            let rm = ModuleHom::raw(c, c, end.element(r));
            let g = cover.map.then(&rm)?;
            let lift = cover.map.lift_along(&g)?.ok_or_else(|| Error::Invariant("endomorphism does not lift to the cover".into()))?;
            restricted.push(ksub.coords_of_rows(&kincl.matrix().mul(lift.matrix())));
        }
        // classes killed by the radical action
        let qmap = bounds.quotient_map();
        let qdim = qmap.cols();
        let images: Vec<Mat> = restricted
            .iter()
            .map(|rp| {
                let rows = hk.basis().iter().map(|phi| qmap.apply(&hk.coords_of(&rp.mul(phi)))).collect();
                Mat::from_rows(f, qdim, rows)
            })
            .collect();
        let stacked = if images.is_empty() { Mat::zeros(f, hk.dim(), 0) } else { Mat::hstack_all(f, hk.dim(), &images) };
        let sol = stacked.left_kernel();
        let phi_c = sol
            .row_iter()
            .find(|r| !bounds.contains(r))
            .ok_or_else(|| Error::Invariant("Ext¹(C, τC) has no socle element".into()))?
            .to_vec();
        let phi = hk.element(&phi_c);
        let rel = kincl.matrix().hstack(&phi.neg());
        let pk = cover.module.direct_sum(&tau)?;
        let (e, proj) = pk.quotient(&Subspace::row_space(&rel));
        let (np, nt) = (cover.module.dim(), tau.dim());
        let sel_t: Vec<usize> = (np..np + nt).collect();
        let mono = ModuleHom::raw(&tau, &e, proj.matrix().select_rows(&sel_t));
        let to_c = cover.map.matrix().vstack(&Mat::zeros(f, nt, c.dim()));
        let s = Subspace::row_space(&rel);
        let epi_m = e_lift(&proj, &s, &to_c)?;
        let epi = ModuleHom::raw(&e, c, epi_m);
        debug_assert!(mono.intertwines() && epi.intertwines());
        if e.dim() != c.dim() + tau.dim() || !mono.is_mono() || !epi.is_epi() {
            return Err(Error::Invariant("pushout is not a short exact sequence".into()));
        }
        Ok(ArSequence { left: tau, middle: e, right: c.clone(), mono, epi })
    }
}

/// The map out of a quotient induced by `g`, which vanishes on `s`.
fn e_lift(proj: &ModuleHom, s: &Subspace, g: &Mat) -> Result<Mat> {
    // quotient coordinates are the complement indices of `s`
    let comp = s.complement_indices();
    let m = g.select_rows(&comp);
    if proj.matrix().mul(&m) != *g {
        return Err(Error::Invariant("map does not factor through the quotient".into()));
    }
    Ok(m)
}
