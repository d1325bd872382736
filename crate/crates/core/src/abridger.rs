//! Auslander–Bridger sequences of `Γ`-modules for `Γ = End(N)`, and their
//! comparison with the right-defining sequence of the recollement cut out
//! by the projective generators.

use crate::approx::{AddSubcategory, HomModule};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{ext, find_isomorphism, projective_cover, projectives, star, transpose, HomSpace, ModuleHom, RightModule};
use crate::recollement::{compare_sequences, Adjunction, FourTermSequence, Functor, Recollement, SequenceIso};

/// `X*` over the opposite algebra and `X**` back over the algebra of `X`,
/// with the evaluation `X -> X**`.
#[derive(Clone, Debug)]
pub struct DoubleStar {
    pub star: RightModule,
    pub star_hom: HomSpace,
    pub double: RightModule,
    pub double_hom: HomSpace,
    pub evaluation: ModuleHom,
}

pub fn double_star_with_evaluation(x: &RightModule) -> Result<DoubleStar> {
    let f = x.field();
    let (s1, h1) = star(x)?;
    let (s2, h2) = star(&s1)?;
    if s2.algebra() != x.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    // x goes to φ -> φ(x)
    let rows = (0..x.dim())
        .map(|a| {
            let ev = Mat::from_rows(f, x.algebra().dim(), h1.basis().iter().map(|p| p.row(a).to_vec()).collect());
            h2.coords_of(&ev)
        })
        .collect();
    let evaluation = ModuleHom::raw(x, &s2, Mat::from_rows(f, h2.dim(), rows));
    debug_assert!(evaluation.intertwines());
    Ok(DoubleStar { star: s1, star_hom: h1, double: s2, double_hom: h2, evaluation })
}

/// A subcategory containing the projectives and injectives, with the
/// recollement `(mod Γ/ΓeΓ, mod Γ, mod eΓe)` for `e` the projective block.
#[derive(Clone, Debug)]
pub struct AbContext {
    sub: AddSubcategory,
    rec: Recollement,
    /// `Hom(N, N_s)` for every generator.
    yon: Vec<RightModule>,
    /// Projective `Γ`-modules, for second syzygy witnesses.
    gamma_proj: AddSubcategory,
}

/// The data of the construction: presentation `Y(b0) -> Y(b1) -> X`, the
/// sequence `b0 -> b1 -> b2 -> b3` and its image under Yoneda.
#[derive(Clone, Debug)]
pub struct AbData {
    /// Generator index of every summand of `b0..b3`.
    pub copies: [Vec<usize>; 4],
    pub b: [RightModule; 4],
    pub alpha: ModuleHom,
    pub beta: ModuleHom,
    pub gamma: ModuleHom,
    pub yoneda: [HomModule; 4],
    pub f_star: ModuleHom,
    pub g_star: ModuleHom,
    pub h_star: ModuleHom,
    /// `Y(b1) -> X`
    pub cover: ModuleHom,
    /// `X** = Ker h*` with its inclusion into `Y(b2)`.
    pub double_star: RightModule,
    pub evaluation: ModuleHom,
    /// `dim Ker g* / Im f*` and `dim Ker h* / Im g*`.
    pub ext_dims: (usize, usize),
    pub sequence: FourTermSequence,
}

/// The two sides of the second syzygy test.
#[derive(Clone, Debug)]
pub struct SyzygyWitness {
    pub member: bool,
    /// `0 -> X -> P0 -> P1` when found.
    pub copresentation: Option<(ModuleHom, ModuleHom)>,
}

impl AbContext {
    pub fn new(sub: AddSubcategory) -> Result<AbContext> {
        let base = sub.base().clone();
        for (what, mods) in [("projective", crate::module::projectives(&base)?), ("injective", crate::module::injectives(&base)?)] {
            for m in &mods {
                if sub.find_generator(m)?.is_none() {
                    return Err(Error::Precondition(format!("subcategory misses an indecomposable {what}")));
                }
            }
        }
        let pg = sub.projective_generators()?;
        let names: Vec<&str> = pg.iter().map(|&s| sub.name(s)).collect();
        let e = sub.idempotent_of(&names)?;
        let rec = Recollement::new(sub.gamma(), &e)?;
        let yon = sub.generators().iter().map(|g| sub.yoneda(g).map(|h| h.module)).collect::<Result<_>>()?;
        let gp = projectives(sub.gamma())?.into_iter().enumerate().map(|(i, p)| (format!("Q{i}"), p)).collect();
        let gamma_proj = AddSubcategory::new(sub.gamma(), gp)?;
        Ok(AbContext { sub, rec, yon, gamma_proj })
    }

    pub fn subcategory(&self) -> &AddSubcategory {
        &self.sub
    }

    pub fn recollement(&self) -> &Recollement {
        &self.rec
    }

    fn object(&self, copies: &[usize]) -> Result<RightModule> {
        let parts: Vec<RightModule> = copies.iter().map(|&s| self.sub.generator(s).clone()).collect();
        RightModule::direct_sum_all(self.sub.base(), &parts)
    }

    fn generator_of(&self, p: &RightModule) -> Result<usize> {
        for (s, y) in self.yon.iter().enumerate() {
            if y.dim() == p.dim() && find_isomorphism(y, p)?.is_some() {
                return Ok(s);
            }
        }
        Err(Error::Invariant("projective Γ-module outside the image of Yoneda".into()))
    }

    /// `Y(b) -> X` onto with `b` read off a projective cover.
    fn covering(&self, x: &RightModule) -> Result<(Vec<usize>, RightModule, HomModule, ModuleHom)> {
        let cover = projective_cover(x)?;
        let mut copies = Vec::new();
        for (m, k) in &cover.module.decompose()?.summands {
            let s = self.generator_of(m)?;
            copies.extend(std::iter::repeat_n(s, *k));
        }
        copies.sort_unstable();
        let b = self.object(&copies)?;
        let yb = self.sub.yoneda(&b)?;
        let iso = find_isomorphism(&yb.module, &cover.module)?.ok_or_else(|| Error::Invariant("cover is not a Yoneda module".into()))?;
        let map = iso.then(&cover.map)?;
        Ok((copies, b, yb, map))
    }

    /// The Λ-map behind a `Γ`-map of Yoneda modules.
    fn preimage(&self, g: &ModuleHom, x: &RightModule, y: &RightModule, yx: &HomModule, yy: &HomModule) -> Result<ModuleHom> {
        let hs = crate::module::hom_basis(x, y)?;
        let imgs: Vec<Mat> = hs.homs().iter().map(|h| self.sub.yoneda_map(h, yx, yy).matrix().clone()).collect();
        let c = crate::module::solve_combination(&imgs, g.matrix())
            .ok_or_else(|| Error::Invariant("map of representables has no preimage".into()))?;
        Ok(ModuleHom::raw(x, y, hs.element(&c)))
    }

    /// Minimal left approximation of the cokernel of `m`, composed with the
    /// projection.
    fn next_term(&self, m: &ModuleHom) -> Result<(Vec<usize>, RightModule, ModuleHom)> {
        let (_, pi) = m.cokernel();
        let a = self.sub.minimal_left_approximation(pi.target())?;
        let b = a.map.target().clone();
        Ok((a.copies, b, pi.then(&a.map)?))
    }

    pub fn ab_sequence(&self, x: &RightModule) -> Result<AbData> {
        if x.algebra() != self.sub.gamma() {
            return Err(Error::AlgebraMismatch);
        }
        let (c1, b1, y1, cover) = self.covering(x)?;
        let (k, kincl) = cover.kernel();
        let (c0, b0, y0, d) = if k.is_zero() {
            let b0 = self.object(&[])?;
            let y0 = self.sub.yoneda(&b0)?;
            let d = ModuleHom::zero(&y0.module, &y1.module);
            (vec![], b0, y0, d)
        } else {
            let (c0, b0, y0, kc) = self.covering(&k)?;
            (c0, b0, y0, kc.then(&kincl)?)
        };
        let alpha = self.preimage(&d, &b0, &b1, &y0, &y1)?;
        let (c2, b2, beta) = self.next_term(&alpha)?;
        let (c3, b3, gamma) = self.next_term(&beta)?;
        let y2 = self.sub.yoneda(&b2)?;
        let y3 = self.sub.yoneda(&b3)?;
        let f_star = self.sub.yoneda_map(&alpha, &y0, &y1);
        let g_star = self.sub.yoneda_map(&beta, &y1, &y2);
        let h_star = self.sub.yoneda_map(&gamma, &y2, &y3);
        debug_assert_eq!(f_star.matrix(), d.matrix());
        let (xss, incl) = h_star.kernel();
        let g_res = incl.lift_along(&g_star)?.ok_or_else(|| Error::Invariant("g* does not land in Ker h*".into()))?;
        let evaluation = cover.extend_along(&g_res)?.ok_or_else(|| Error::Invariant("g* does not vanish on Im f*".into()))?;
        let ext1 = g_star.kernel().0.dim() - f_star.rank();
        let ext2 = xss.dim() - g_star.rank();
        let (_, ki) = evaluation.kernel();
        let (_, cp) = evaluation.cokernel();
        let sequence = FourTermSequence::new(ki, evaluation.clone(), cp);
        Ok(AbData {
            copies: [c0, c1, c2, c3],
            b: [b0, b1, b2, b3],
            alpha,
            beta,
            gamma,
            yoneda: [y0, y1, y2, y3],
            f_star,
            g_star,
            h_star,
            cover,
            double_star: xss,
            evaluation,
            ext_dims: (ext1, ext2),
            sequence,
        })
    }

    /// `dim Ext^i(Tr X, Γ^op)` for `i = 1, 2` from resolutions.
    pub fn ext_of_transpose(&self, x: &RightModule) -> Result<(usize, usize)> {
        let t = transpose(x)?;
        let reg = RightModule::regular(t.algebra());
        Ok((ext(&t, &reg, 1)?.dim, ext(&t, &reg, 2)?.dim))
    }

    /// Isomorphism between the Auslander–Bridger sequence of `x` and its
    /// right-defining sequence, extending the identity of `x`.
    pub fn compare_with_right_defining(&self, x: &RightModule) -> Result<Comparison> {
        let ab = self.ab_sequence(x)?;
        let rd = self.rec.right_defining_sequence(x)?;
        let iso = compare_sequences(&ab.sequence, &rd)?;
        Ok(Comparison { ab_dims: ab.sequence.dims(), rd_dims: rd.dims(), ab_exact: ab.sequence.is_exact(), rd_exact: rd.is_exact(), iso })
    }

    pub fn second_syzygy_membership(&self, x: &RightModule) -> Result<SyzygyWitness> {
        let member = self.rec.unit(Adjunction::QQRho, x)?.is_iso();
        let a0 = self.gamma_proj.minimal_left_approximation(x)?;
        let copresentation = if a0.map.is_mono() {
            let (_, pi) = a0.map.cokernel();
            let a1 = self.gamma_proj.minimal_left_approximation(pi.target())?;
            a1.map.is_mono().then(|| Ok::<_, Error>((a0.map.clone(), pi.then(&a1.map)?))).transpose()?
        } else {
            None
        };
        Ok(SyzygyWitness { member, copresentation })
    }

    /// `q(ε)` is an isomorphism.
    pub fn evaluation_iso_on_projectives(&self, data: &AbData) -> Result<bool> {
        Ok(self.rec.map(Functor::Q, &data.evaluation)?.is_iso())
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub ab_dims: [usize; 4],
    pub rd_dims: [usize; 4],
    pub ab_exact: bool,
    pub rd_exact: bool,
    pub iso: Option<SequenceIso>,
}

impl Comparison {
    pub fn pass(&self) -> bool {
        self.ab_exact && self.rd_exact && self.iso.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::higher_ar::enumerate_indecomposables;
    use crate::module::tests::{a2, dual_numbers};
    use crate::module::{projective, simple};

    fn dual_ctx() -> AbContext {
        let a = dual_numbers();
        let gens = vec![("R".to_string(), RightModule::regular(&a)), ("S".to_string(), simple(&a, 0).unwrap())];
        AbContext::new(AddSubcategory::new(&a, gens).unwrap()).unwrap()
    }

    fn a2_ctx() -> AbContext {
        let a = a2();
        let gens = vec![
            ("P1".to_string(), projective(&a, 0).unwrap()),
            ("P2".to_string(), projective(&a, 1).unwrap()),
            ("S1".to_string(), simple(&a, 0).unwrap()),
        ];
        AbContext::new(AddSubcategory::new(&a, gens).unwrap()).unwrap()
    }

    #[test]
    fn star_of_regular() {
        let ctx = dual_ctx();
        let g = ctx.subcategory().gamma();
        let reg = RightModule::regular(g);
        let ds = double_star_with_evaluation(&reg).unwrap();
        assert!(find_isomorphism(&ds.star, &RightModule::regular(&g.opposite())).unwrap().is_some());
        assert!(ds.evaluation.is_iso());
    }

    #[test]
    fn missing_injectives_rejected() {
        let a = a2();
        let gens = vec![("P1".to_string(), projective(&a, 0).unwrap()), ("P2".to_string(), projective(&a, 1).unwrap())];
        assert!(AbContext::new(AddSubcategory::new(&a, gens).unwrap()).is_err());
    }

    fn exhaustive(ctx: &AbContext) {
        let g = ctx.subcategory().gamma();
        for x in enumerate_indecomposables(g, None).unwrap().indecs {
            let data = ctx.ab_sequence(&x).unwrap();
            assert!(data.sequence.is_exact());
            assert!(data.evaluation.intertwines());
            assert_eq!(data.ext_dims, ctx.ext_of_transpose(&x).unwrap());
            let [k, _, _, c] = &data.sequence.objects;
            assert!(ctx.recollement().killed_by_e(k) && ctx.recollement().killed_by_e(c));
            assert!(ctx.evaluation_iso_on_projectives(&data).unwrap());
            let ds = double_star_with_evaluation(&x).unwrap();
            assert_eq!(ds.double.dim(), data.double_star.dim());
            let cmp = ctx.compare_with_right_defining(&x).unwrap();
            assert!(cmp.pass(), "{cmp:?}");
            let w = ctx.second_syzygy_membership(&x).unwrap();
            assert_eq!(w.member, data.evaluation.is_iso());
            assert_eq!(w.member, w.copresentation.is_some());
        }
    }

    #[test]
    fn dual_numbers_context() {
        let ctx = dual_ctx();
        exhaustive(&ctx);
        // the simple on the S block
        let g = ctx.subcategory().gamma();
        let s = ctx.subcategory().position("S").unwrap();
        let top = enumerate_indecomposables(g, None)
            .unwrap()
            .indecs
            .into_iter()
            .find(|m| m.dim() == 1 && !m.act_element(&ctx.subcategory().idempotent(s)).is_zero())
            .unwrap();
        let data = ctx.ab_sequence(&top).unwrap();
        assert!(!data.evaluation.is_iso());
        assert!(!ctx.second_syzygy_membership(&top).unwrap().member);
    }

    #[test]
    fn a2_context() {
        exhaustive(&a2_ctx());
    }

    #[test]
    fn representables_are_reflexive() {
        let ctx = dual_ctx();
        for y in &ctx.yon {
            let data = ctx.ab_sequence(y).unwrap();
            assert!(data.evaluation.is_iso());
            assert_eq!(data.sequence.dims()[0], 0);
            assert_eq!(data.sequence.dims()[3], 0);
            assert!(ctx.second_syzygy_membership(y).unwrap().member);
        }
    }

    #[test]
    fn images_of_q_rho_are_second_syzygies() {
        let ctx = a2_ctx();
        let rec = ctx.recollement();
        for y in enumerate_indecomposables(rec.corner(), None).unwrap().indecs {
            let x = rec.module(Functor::QRho, &y).unwrap();
            assert!(ctx.second_syzygy_membership(&x).unwrap().member);
        }
    }
}
