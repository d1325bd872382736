use serde::Serialize;

use super::cluster::{is_n_cluster_tilting, ClusterReport};
use super::nexact::{chain_map_from_bottom, complete_n_exact_from_epi, complete_n_exact_from_mono, ApproxChoice, NExactSequence};
use super::IndecUniverse;
use crate::approx::AddSubcategory;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::module::{
    ar_translate, ar_translate_inverse, cosyzygy, ext, find_isomorphism, injective_hull, is_injective, is_projective, projective_cover,
    stable_hom_inj, stable_hom_proj, syzygy, ModuleHom, RightModule,
};

/// `τ_n = τ Ω^{n-1}`
pub fn tau_n(x: &RightModule, n: usize) -> Result<RightModule> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    ar_translate(&syzygy(x, n - 1)?)
}

/// `τ_n⁻ = τ⁻ Ω^{-(n-1)}`
pub fn tau_n_minus(y: &RightModule, n: usize) -> Result<RightModule> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    ar_translate_inverse(&cosyzygy(y, n - 1)?)
}

/// An n-cluster-tilting candidate `B` inside a complete list of
/// indecomposables.
#[derive(Clone, Debug)]
pub struct ClusterContext {
    pub universe: IndecUniverse,
    pub sub: AddSubcategory,
    pub n: usize,
    pub report: ClusterReport,
    projective: Vec<bool>,
    injective: Vec<bool>,
}

/// `σ_n x` (or `σ_n⁻ y`) with the sequence and defect behind it.
#[derive(Clone, Debug)]
pub struct SigmaValue {
    pub generator: usize,
    pub sequence: NExactSequence,
    pub defect: RightModule,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityRow {
    pub x: String,
    pub y: String,
    /// `dim Hom-under(τ_n⁻ y, x)`
    pub under: usize,
    /// `dim Ext^n(x, y)`
    pub ext: usize,
    /// `dim Hom-over(y, τ_n x)`
    pub over: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityTable {
    pub n: usize,
    pub rows: Vec<DualityRow>,
    pub pass: bool,
}

impl DualityTable {
    pub fn entry(&self, x: &str, y: &str) -> Option<&DualityRow> {
        self.rows.iter().find(|r| r.x == x && r.y == y)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaTauRow {
    pub generator: String,
    /// `"sigma"` or `"sigma_minus"`
    pub direction: String,
    pub sigma: String,
    pub tau_dim: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaTauReport {
    pub rows: Vec<SigmaTauRow>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectFormulaRow {
    pub generator: String,
    /// `dim D δ^{*n}(x)`
    pub lhs: usize,
    /// `dim δ_{*n}(σ_n x)`
    pub rhs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectFormulaReport {
    pub rows: Vec<DefectFormulaRow>,
    pub dims_match: bool,
    pub module_iso: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyRow {
    pub generator: String,
    pub variant: String,
    pub dims: Vec<usize>,
    pub contravariant_iso: bool,
    pub covariant_iso: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyReport {
    pub rows: Vec<HomotopyRow>,
    pub pass: bool,
}

impl ClusterContext {
    pub fn new(universe: IndecUniverse, sub: AddSubcategory, n: usize) -> Result<ClusterContext> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        if universe.algebra != *sub.base() {
            return Err(Error::AlgebraMismatch);
        }
        for g in sub.generators() {
            if universe.find(g)?.is_none() {
                return Err(Error::Precondition("a generator is missing from the universe".into()));
            }
        }
        let report = is_n_cluster_tilting(&universe, &sub, n)?;
        let projective = sub.generators().iter().map(is_projective).collect::<Result<_>>()?;
        let injective = sub.generators().iter().map(is_injective).collect::<Result<_>>()?;
        Ok(ClusterContext { universe, sub, n, report, projective, injective })
    }

    fn require_certified(&self) -> Result<()> {
        if self.report.pass {
            Ok(())
        } else {
            Err(Error::ClusterTilting(format!("not {}-cluster-tilting", self.n)))
        }
    }

    pub fn is_projective(&self, s: usize) -> bool {
        self.projective[s]
    }

    pub fn is_injective(&self, s: usize) -> bool {
        self.injective[s]
    }

    fn name(&self, s: usize) -> String {
        self.sub.name(s).to_string()
    }

    /// The n-exact sequence through the projective cover of `N_x`.
    pub fn cover_sequence(&self, x: usize, choice: ApproxChoice) -> Result<NExactSequence> {
        let c = projective_cover(self.sub.generator(x))?;
        complete_n_exact_from_epi(&self.sub, &c.map, self.n, choice)
    }

    /// The n-exact sequence through the injective hull of `N_y`.
    pub fn hull_sequence(&self, y: usize, choice: ApproxChoice) -> Result<NExactSequence> {
        let h = injective_hull(self.sub.generator(y))?;
        complete_n_exact_from_mono(&self.sub, &h.map, self.n, choice)
    }

    /// `σ_n x` by matching the covariant defect of the sequence through the
    /// projective cover against costable representables.
    pub fn sigma_n(&self, x: usize) -> Result<SigmaValue> {
        self.require_certified()?;
        if self.projective[x] {
            return Err(Error::Precondition(format!("{} is projective", self.name(x))));
        }
        let sequence = self.cover_sequence(x, ApproxChoice::Minimal)?;
        let defect = sequence.defects(&self.sub)?.covariant;
        let mut hits = Vec::new();
        for z in (0..self.sub.len()).filter(|&z| !self.injective[z]) {
            let c = self.sub.costable_representable(self.sub.generator(z))?;
            if c.dim() == defect.dim() && find_isomorphism(&c, &defect)?.is_some() {
                hits.push(z);
            }
        }
        match hits.as_slice() {
            [z] => Ok(SigmaValue { generator: *z, sequence, defect }),
            _ => Err(Error::Invariant(format!("{} generators match the defect of {}", hits.len(), self.name(x)))),
        }
    }

    /// `σ_n⁻ y` through the injective hull and stable representables.
    pub fn sigma_n_minus(&self, y: usize) -> Result<SigmaValue> {
        self.require_certified()?;
        if self.injective[y] {
            return Err(Error::Precondition(format!("{} is injective", self.name(y))));
        }
        let sequence = self.hull_sequence(y, ApproxChoice::Minimal)?;
        let defect = sequence.defects(&self.sub)?.contravariant;
        let mut hits = Vec::new();
        for z in (0..self.sub.len()).filter(|&z| !self.projective[z]) {
            let c = self.sub.stable_representable(self.sub.generator(z))?;
            if c.dim() == defect.dim() && find_isomorphism(&c, &defect)?.is_some() {
                hits.push(z);
            }
        }
        match hits.as_slice() {
            [z] => Ok(SigmaValue { generator: *z, sequence, defect }),
            _ => Err(Error::Invariant(format!("{} generators match the defect of {}", hits.len(), self.name(y)))),
        }
    }

    pub fn verify_sigma_equals_tau(&self) -> Result<SigmaTauReport> {
        let mut rows = Vec::new();
        for x in 0..self.sub.len() {
            if !self.projective[x] {
                let s = self.sigma_n(x)?;
                let t = tau_n(self.sub.generator(x), self.n)?;
                let ok = find_isomorphism(self.sub.generator(s.generator), &t)?.is_some();
                rows.push(SigmaTauRow {
                    generator: self.name(x),
                    direction: "sigma".into(),
                    sigma: self.name(s.generator),
                    tau_dim: t.dim(),
                    pass: ok,
                });
            }
            if !self.injective[x] {
                let s = self.sigma_n_minus(x)?;
                let t = tau_n_minus(self.sub.generator(x), self.n)?;
                let ok = find_isomorphism(self.sub.generator(s.generator), &t)?.is_some();
                rows.push(SigmaTauRow {
                    generator: self.name(x),
                    direction: "sigma_minus".into(),
                    sigma: self.name(s.generator),
                    tau_dim: t.dim(),
                    pass: ok,
                });
            }
        }
        let pass = rows.iter().all(|r| r.pass);
        Ok(SigmaTauReport { rows, pass })
    }

    /// `dim Hom-under(τ_n⁻ y, x) = dim Ext^n(x, y) = dim Hom-over(y, τ_n x)`
    /// over all ordered pairs of generators.
    pub fn verify_n_ar_duality(&self) -> Result<DualityTable> {
        self.require_certified()?;
        let gens = self.sub.generators();
        let taus = gens.iter().map(|g| tau_n(g, self.n)).collect::<Result<Vec<_>>>()?;
        let taus_minus = gens.iter().map(|g| tau_n_minus(g, self.n)).collect::<Result<Vec<_>>>()?;
        let mut rows = Vec::new();
        for (i, x) in gens.iter().enumerate() {
            for (j, y) in gens.iter().enumerate() {
                let under = stable_hom_proj(&taus_minus[j], x)?.dim;
                let e = ext(x, y, self.n)?.dim;
                let over = stable_hom_inj(y, &taus[i])?.dim;
                rows.push(DualityRow { x: self.name(i), y: self.name(j), under, ext: e, over, pass: under == e && e == over });
            }
        }
        let pass = rows.iter().all(|r| r.pass);
        Ok(DualityTable { n: self.n, rows, pass })
    }

    /// `σ_n` on a map `N_s -> N_t` of non-projective generators, as a map
    /// `N_{σs} -> N_{σt}`, through a chain map of cover sequences.
    fn sigma_on_map(&self, s: &SigmaValue, t: &SigmaValue, g: &ModuleHom, same: bool) -> Result<Mat> {
        let (zs, zt) = (self.sub.generator(s.generator), self.sub.generator(t.generator));
        let top_s = s.sequence.top();
        let top_t = t.sequence.top();
        let phi = if same && g.matrix().is_identity() {
            ModuleHom::identity(top_s)
        } else {
            let chain = chain_map_from_bottom(&s.sequence, &t.sequence, g)?
                .ok_or_else(|| Error::Invariant("no chain map between n-exact sequences".into()))?;
            chain[self.n + 1].clone()
        };
        let (inc, _) = self.split_summand(zs, top_s)?;
        let (_, proj) = self.split_summand(zt, top_t)?;
        Ok(inc.matrix().mul(phi.matrix()).mul(proj.matrix()))
    }

    /// A split inclusion `z -> m` and projection `m -> z`.
    fn split_summand(&self, z: &RightModule, m: &RightModule) -> Result<(ModuleHom, ModuleHom)> {
        let d = m.decompose()?;
        for (k, (idx, emb)) in d.embeddings.iter().enumerate() {
            let (summand, _) = &d.summands[*idx];
            if let Some(iso) = find_isomorphism(z, summand)? {
                let inv = d.iso.inverse().expect("decomposition is an isomorphism");
                let off: usize = d.embeddings[..k].iter().map(|(_, e)| e.source().dim()).sum();
                let cols: Vec<usize> = (off..off + summand.dim()).collect();
                let to_summand = ModuleHom::raw(m, summand, inv.matrix().select_cols(&cols));
                let back = iso.inverse().expect("isomorphism");
                return Ok((iso.then(emb)?, to_summand.then(&back)?));
            }
        }
        Err(Error::Invariant("expected summand not found".into()))
    }

    /// `D δ^{*n} ≅ δ_{*n} ∘ σ_n`, comparing the dual of the contravariant
    /// defect with the covariant defect pulled back along `σ_n`.
    pub fn verify_higher_defect_formula(&self, delta: &NExactSequence) -> Result<DefectFormulaReport> {
        self.require_certified()?;
        let sub = &self.sub;
        let gamma = sub.gamma();
        let f = gamma.field();
        let defects = delta.defects(sub)?;
        let lhs = defects.contravariant.dual();
        let m = &defects.covariant;
        let np: Vec<usize> = (0..sub.len()).filter(|&s| !self.projective[s]).collect();
        let sig: Vec<SigmaValue> = np.iter().map(|&s| self.sigma_n(s)).collect::<Result<_>>()?;
        let comps: Vec<Subspace> = sig.iter().map(|v| Subspace::row_space(&m.act_element(&sub.idempotent(v.generator)))).collect();
        let offsets: Vec<usize> = comps
            .iter()
            .scan(0, |acc, c| {
                let o = *acc;
                *acc += c.dim();
                Some(o)
            })
            .collect();
        let dim: usize = comps.iter().map(Subspace::dim).sum();
        let mut action = Vec::with_capacity(gamma.dim());
        for i in 0..gamma.dim() {
            let (s, t, k) = sub.basis_index(i);
            let mut a = Mat::zeros(f, dim, dim);
            if let (Some(ps), Some(pt)) = (np.iter().position(|&v| v == s), np.iter().position(|&v| v == t)) {
                let g = ModuleHom::raw(sub.generator(s), sub.generator(t), sub.hom_block(s, t).basis()[k].clone());
                let sg = self.sigma_on_map(&sig[ps], &sig[pt], &g, s == t)?;
                let el = sub.element_of(sig[ps].generator, sig[pt].generator, &sg);
                let block = comps[pt].coords_of_rows(&comps[ps].basis().mul(&m.act_element(&el)));
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        a.set(offsets[ps] + r, offsets[pt] + c, block.get(r, c).clone());
                    }
                }
            }
            action.push(a);
        }
        let mut rows = Vec::new();
        for s in 0..sub.len() {
            let l = lhs.act_element(&sub.idempotent(s)).rank();
            let r = np.iter().position(|&v| v == s).map_or(0, |p| comps[p].dim());
            rows.push(DefectFormulaRow { generator: self.name(s), lhs: l, rhs: r });
        }
        let dims_match = rows.iter().all(|r| r.lhs == r.rhs);
        let module_iso = match RightModule::new(lhs.algebra(), dim, action) {
            Ok(rhs) => find_isomorphism(&lhs, &rhs)?.is_some(),
            Err(_) => false,
        };
        Ok(DefectFormulaReport { rows, dims_match, module_iso, pass: dims_match && module_iso })
    }

    /// Completes the cover epimorphism of every non-projective generator
    /// minimally, with full approximations and with contractible padding,
    /// and compares the defects.
    pub fn verify_homotopy_invariance(&self) -> Result<HomotopyReport> {
        self.require_certified()?;
        let mut rows = Vec::new();
        for x in (0..self.sub.len()).filter(|&x| !self.projective[x]) {
            let min = self.cover_sequence(x, ApproxChoice::Minimal)?;
            let dm = min.defects(&self.sub)?;
            let mut variants = vec![("full".to_string(), self.cover_sequence(x, ApproxChoice::Full)?)];
            for j in 0..=self.n {
                for (s, g) in self.sub.generators().iter().enumerate() {
                    variants.push((format!("pad {} at {}", self.sub.name(s), j), min.pad(j, g)?));
                }
            }
            for (variant, seq) in variants {
                let ok = seq.certify(&self.sub)?.pass;
                let d = seq.defects(&self.sub)?;
                let ci = ok && find_isomorphism(&dm.contravariant, &d.contravariant)?.is_some();
                let co = ok && find_isomorphism(&dm.covariant, &d.covariant)?.is_some();
                rows.push(HomotopyRow { generator: self.name(x), variant, dims: seq.dims(), contravariant_iso: ci, covariant_iso: co });
            }
        }
        let pass = rows.iter().all(|r| r.contravariant_iso && r.covariant_iso);
        Ok(HomotopyReport { rows, pass })
    }
}
