use serde::Serialize;

use crate::approx::AddSubcategory;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{ModuleHom, RightModule};

/// How intermediate terms are chosen while completing a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ApproxChoice {
    Minimal,
    /// One copy of `N_s` per basis map, never minimized.
    Full,
}

/// `0 -> b_{n+1} -> b_n -> ... -> b_0 -> 0` with `terms[i] = b_i` and
/// `maps[i] : b_{i+1} -> b_i`.
#[derive(Clone, Debug)]
pub struct NExactSequence {
    pub n: usize,
    pub terms: Vec<RightModule>,
    pub maps: Vec<ModuleHom>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub complex: bool,
    pub in_subcategory: bool,
    /// Exactness of `0 -> B(-, b_{n+1}) -> ... -> B(-, b_0)` at `b_{n+1}, ..., b_1`.
    pub contravariant: Vec<bool>,
    /// Exactness of `0 -> B(b_0, -) -> ... -> B(b_{n+1}, -)` at `b_0, ..., b_n`.
    pub covariant: Vec<bool>,
    pub pass: bool,
}

/// The two defects of an n-exact sequence.
#[derive(Clone, Debug)]
pub struct DefectPair {
    /// `δ^{*n}`, a `Γ`-module.
    pub contravariant: RightModule,
    /// `δ_{*n}`, a module over the opposite of `Γ`.
    pub covariant: RightModule,
}

fn exact_at(incoming: &ModuleHom, outgoing: &ModuleHom) -> bool {
    incoming.matrix().mul(outgoing.matrix()).is_zero() && incoming.rank() + outgoing.rank() == incoming.target().dim()
}

impl NExactSequence {
    pub fn b0(&self) -> &RightModule {
        &self.terms[0]
    }

    pub fn top(&self) -> &RightModule {
        &self.terms[self.n + 1]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(RightModule::dim).collect()
    }

    /// Both Hom complexes over the generators of `b`.
    pub fn certify(&self, b: &AddSubcategory) -> Result<ExactnessReport> {
        let n = self.n;
        let complex = (0..n).all(|i| self.maps[i + 1].matrix().mul(self.maps[i].matrix()).is_zero());
        let mut in_subcategory = true;
        for t in &self.terms {
            in_subcategory &= b.contains(t)?.is_some();
        }
        let ys = self.terms.iter().map(|t| b.yoneda(t)).collect::<Result<Vec<_>>>()?;
        let cs = self.terms.iter().map(|t| b.co_yoneda(t)).collect::<Result<Vec<_>>>()?;
        let ym: Vec<ModuleHom> = (0..=n).map(|i| b.yoneda_map(&self.maps[i], &ys[i + 1], &ys[i])).collect();
        let cm: Vec<ModuleHom> = (0..=n).map(|i| b.co_yoneda_map(&self.maps[i], &cs[i + 1], &cs[i])).collect();
        let mut contravariant = vec![ym[n].is_mono()];
        for i in (1..=n).rev() {
            contravariant.push(exact_at(&ym[i], &ym[i - 1]));
        }
        let mut covariant = vec![cm[0].is_mono()];
        for i in 1..=n {
            covariant.push(exact_at(&cm[i - 1], &cm[i]));
        }
        let pass = complex && in_subcategory && contravariant.iter().chain(&covariant).all(|&x| x);
        Ok(ExactnessReport { complex, in_subcategory, contravariant, covariant, pass })
    }

    pub fn defects(&self, b: &AddSubcategory) -> Result<DefectPair> {
        let n = self.n;
        let y1 = b.yoneda(&self.terms[1])?;
        let y0 = b.yoneda(&self.terms[0])?;
        let c_top = b.co_yoneda(&self.terms[n + 1])?;
        let c_n = b.co_yoneda(&self.terms[n])?;
        Ok(DefectPair {
            contravariant: b.yoneda_map(&self.maps[0], &y1, &y0).cokernel().0,
            covariant: b.co_yoneda_map(&self.maps[n], &c_top, &c_n).cokernel().0,
        })
    }

    /// Adds the contractible complex `g --id--> g` in degrees `j+1, j`.
    pub fn pad(&self, j: usize, g: &RightModule) -> Result<NExactSequence> {
        if j > self.n {
            return Err(Error::Precondition(format!("no degree {} in a {}-exact sequence", j + 1, self.n)));
        }
        let f = g.field();
        let mut terms = self.terms.clone();
        terms[j] = terms[j].direct_sum(g)?;
        terms[j + 1] = terms[j + 1].direct_sum(g)?;
        let mut maps = Vec::with_capacity(self.maps.len());
        for (i, d) in self.maps.iter().enumerate() {
            let m = d.matrix();
            let m = if i == j {
                m.direct_sum(&Mat::identity(f, g.dim()))
            } else if i == j + 1 {
                m.hstack(&Mat::zeros(f, m.rows(), g.dim()))
            } else if i + 1 == j {
                m.vstack(&Mat::zeros(f, g.dim(), m.cols()))
            } else {
                m.clone()
            };
            maps.push(ModuleHom::raw(&terms[i + 1], &terms[i], m));
        }
        Ok(NExactSequence { n: self.n, terms, maps })
    }
}

fn approximate_from_right(b: &AddSubcategory, x: &RightModule, choice: ApproxChoice) -> Result<ModuleHom> {
    Ok(match choice {
        ApproxChoice::Minimal => b.minimal_right_approximation(x)?.map,
        ApproxChoice::Full => b.right_approximation(x)?.map,
    })
}

fn approximate_from_left(b: &AddSubcategory, x: &RightModule, choice: ApproxChoice) -> Result<ModuleHom> {
    Ok(match choice {
        ApproxChoice::Minimal => b.minimal_left_approximation(x)?.map,
        ApproxChoice::Full => b.left_approximation(x)?.map,
    })
}

/// Embeds an epimorphism `b_1 -> b_0` of `B` into an n-exact sequence by
/// taking kernels and right approximations.
pub fn complete_n_exact_from_epi(b: &AddSubcategory, f: &ModuleHom, n: usize, choice: ApproxChoice) -> Result<NExactSequence> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if !f.is_epi() {
        return Err(Error::Precondition("map is not an epimorphism".into()));
    }
    for m in [f.source(), f.target()] {
        if b.contains(m)?.is_none() {
            return Err(Error::Membership("end terms must lie in the subcategory".into()));
        }
    }
    let mut terms = vec![f.target().clone(), f.source().clone()];
    let mut maps = vec![f.clone()];
    for _ in 1..n {
        let (k, incl) = maps.last().expect("nonempty").kernel();
        let a = approximate_from_right(b, &k, choice)?;
        let d = a.then(&incl)?;
        terms.push(d.source().clone());
        maps.push(d);
    }
    let (k, incl) = maps.last().expect("nonempty").kernel();
    if b.contains(&k)?.is_none() {
        return Err(Error::ClusterTilting(format!("the last kernel (dim {}) is not in the subcategory", k.dim())));
    }
    terms.push(k);
    maps.push(incl);
    Ok(NExactSequence { n, terms, maps })
}

/// Dual of [`complete_n_exact_from_epi`], starting from a monomorphism
/// `b_{n+1} -> b_n`.
pub fn complete_n_exact_from_mono(b: &AddSubcategory, f: &ModuleHom, n: usize, choice: ApproxChoice) -> Result<NExactSequence> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if !f.is_mono() {
        return Err(Error::Precondition("map is not a monomorphism".into()));
    }
    for m in [f.source(), f.target()] {
        if b.contains(m)?.is_none() {
            return Err(Error::Membership("end terms must lie in the subcategory".into()));
        }
    }
    // built from the top down, reversed at the end
    let mut terms = vec![f.source().clone(), f.target().clone()];
    let mut maps = vec![f.clone()];
    for _ in 1..n {
        let (c, p) = maps.last().expect("nonempty").cokernel();
        let a = approximate_from_left(b, &c, choice)?;
        let d = p.then(&a)?;
        terms.push(d.target().clone());
        maps.push(d);
    }
    let (c, p) = maps.last().expect("nonempty").cokernel();
    if b.contains(&c)?.is_none() {
        return Err(Error::ClusterTilting(format!("the last cokernel (dim {}) is not in the subcategory", c.dim())));
    }
    terms.push(c);
    maps.push(p);
    terms.reverse();
    maps.reverse();
    Ok(NExactSequence { n, terms, maps })
}

/// A chain map `from -> to` extending `u : b_0 -> b'_0`, lifting degree by
/// degree. `None` when some lift does not exist.
pub fn chain_map_from_bottom(from: &NExactSequence, to: &NExactSequence, u: &ModuleHom) -> Result<Option<Vec<ModuleHom>>> {
    let mut phi = vec![u.clone()];
    for i in 0..=from.n {
        let g = from.maps[i].then(&phi[i])?;
        match to.maps[i].lift_along(&g)? {
            Some(h) => phi.push(h),
            None => return Ok(None),
        }
    }
    Ok(Some(phi))
}

/// A chain map `from -> to` extending `v : b_{n+1} -> b'_{n+1}`; entry `i`
/// is the component in degree `i`.
pub fn chain_map_from_top(from: &NExactSequence, to: &NExactSequence, v: &ModuleHom) -> Result<Option<Vec<ModuleHom>>> {
    let n = from.n;
    let mut phi = vec![v.clone()];
    for i in (0..=n).rev() {
        let g = phi.last().expect("nonempty").then(&to.maps[i])?;
        match from.maps[i].extend_along(&g)? {
            Some(h) => phi.push(h),
            None => return Ok(None),
        }
    }
    phi.reverse();
    Ok(Some(phi))
}
