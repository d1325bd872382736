use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::module::{
    ar_translate, ar_translate_inverse, cosyzygy_unstripped, injectives, iso_indecomposable, projectives, simples, syzygy_unstripped,
    vertex_count, vertex_name, ArSequence, RightModule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Provenance {
    UserSupplied,
    Knitted,
}

/// Every indecomposable module up to isomorphism, with names.
#[derive(Clone, Debug)]
pub struct IndecUniverse {
    pub algebra: Algebra,
    pub indecs: Vec<RightModule>,
    pub names: Vec<String>,
    pub provenance: Provenance,
}

impl IndecUniverse {
    /// A universe given by hand; summands are checked to be indecomposable
    /// and pairwise non-isomorphic.
    pub fn supplied(algebra: &Algebra, mods: Vec<(String, RightModule)>) -> Result<IndecUniverse> {
        let mut names = Vec::new();
        let mut indecs: Vec<RightModule> = Vec::new();
        for (n, m) in mods {
            if m.algebra() != algebra {
                return Err(Error::AlgebraMismatch);
            }
            if !m.is_indecomposable()? {
                return Err(Error::Membership(format!("{n} is not indecomposable")));
            }
            for (k, o) in indecs.iter().enumerate() {
                if iso_indecomposable(o, &m)?.is_some() {
                    return Err(Error::Membership(format!("{n} repeats {}", names[k])));
                }
            }
            names.push(n);
            indecs.push(m);
        }
        Ok(IndecUniverse { algebra: algebra.clone(), indecs, names, provenance: Provenance::UserSupplied })
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    /// Index of the member isomorphic to an indecomposable module.
    pub fn find(&self, m: &RightModule) -> Result<Option<usize>> {
        for (i, x) in self.indecs.iter().enumerate() {
            if iso_indecomposable(x, m)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn get(&self, name: &str) -> Option<&RightModule> {
        self.position(name).map(|i| &self.indecs[i])
    }
}

struct Knitter {
    found: Vec<(RightModule, Vec<usize>)>,
    queue: Vec<usize>,
    bound: usize,
}

impl Knitter {
    fn offer(&mut self, m: &RightModule) -> Result<()> {
        if m.dim() == 0 {
            return Ok(());
        }
        for piece in m.decompose()?.summands.into_iter().map(|(p, _)| p) {
            let dv = piece.dimension_vector()?;
            let mut seen = false;
            for (o, odv) in &self.found {
                if *odv == dv && iso_indecomposable(o, &piece)?.is_some() {
                    seen = true;
                    break;
                }
            }
            if !seen {
                if self.found.len() >= self.bound {
                    return Err(Error::KnittingBound(self.bound));
                }
                self.found.push((piece, dv));
                self.queue.push(self.found.len() - 1);
            }
        }
        Ok(())
    }
}

/// Knits the indecomposables of a representation-finite algebra: starts from
/// projectives, injectives and simples and closes under `τ`, `τ⁻`, syzygies,
/// cosyzygies, radicals of projectives, injectives modulo socle and middle
/// terms of almost split sequences. The default bound is `10 dim Λ`.
pub fn enumerate_indecomposables(alg: &Algebra, bound: Option<usize>) -> Result<IndecUniverse> {
    let bound = bound.unwrap_or(10 * alg.dim());
    let mut k = Knitter { found: Vec::new(), queue: Vec::new(), bound };
    if alg.dim() == 0 {
        return Ok(IndecUniverse { algebra: alg.clone(), indecs: vec![], names: vec![], provenance: Provenance::Knitted });
    }
    let ps = projectives(alg)?;
    let is = injectives(alg)?;
    let ss = simples(alg)?;
    for m in ps.iter().chain(&ss).chain(&is) {
        k.offer(m)?;
    }
    for p in &ps {
        let rad = p.radical_subspace()?;
        k.offer(&p.submodule_on(&rad).0)?;
    }
    for i in &is {
        let soc = i.socle_subspace()?;
        k.offer(&i.quotient(&soc).0)?;
    }
    while let Some(idx) = k.queue.pop() {
        let m = k.found[idx].0.clone();
        let tau = ar_translate(&m)?;
        k.offer(&tau)?;
        k.offer(&ar_translate_inverse(&m)?)?;
        k.offer(&syzygy_unstripped(&m, 1)?)?;
        k.offer(&cosyzygy_unstripped(&m, 1)?)?;
        if tau.dim() > 0 {
            k.offer(&ArSequence::ending_at(&m)?.middle)?;
        }
    }
    let mut indecs: Vec<RightModule> = k.found.into_iter().map(|(m, _)| m).collect();
    // deterministic order: by dimension vector then by discovery
    let mut keyed: Vec<(Vec<usize>, usize, RightModule)> = Vec::new();
    for (i, m) in indecs.drain(..).enumerate() {
        keyed.push((m.dimension_vector()?, i, m));
    }
    keyed.sort_by(|a, b| a.2.dim().cmp(&b.2.dim()).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
    let indecs: Vec<RightModule> = keyed.into_iter().map(|(_, _, m)| m).collect();
    let names = standard_names(alg, &indecs)?;
    Ok(IndecUniverse { algebra: alg.clone(), indecs, names, provenance: Provenance::Knitted })
}

/// `S<v>`, `P<v>`, `I<v>` in that priority, otherwise `M<k>`. Vertex names
/// that are not numbers are parenthesized, as in `S(R)`.
pub fn standard_names(alg: &Algebra, mods: &[RightModule]) -> Result<Vec<String>> {
    let n = vertex_count(alg)?;
    let vname = |v: usize| -> Result<String> {
        let s = vertex_name(alg, v)?;
        Ok(if s.chars().all(|c| c.is_ascii_digit()) { s } else { format!("({s})") })
    };
    let mut named: Vec<(String, RightModule)> = Vec::new();
    let ss = simples(alg)?;
    let ps = projectives(alg)?;
    let is = injectives(alg)?;
    for (kind, mods) in [("S", ss), ("P", ps), ("I", is)] {
        for (v, m) in mods.into_iter().enumerate().take(n) {
            named.push((format!("{kind}{}", vname(v)?), m));
        }
    }
    let mut out = Vec::with_capacity(mods.len());
    let mut other = 0;
    for m in mods {
        let mut name = None;
        for (nm, x) in &named {
            if x.dim() == m.dim() && iso_indecomposable(x, m)?.is_some() {
                name = Some(nm.clone());
                break;
            }
        }
        out.push(name.unwrap_or_else(|| {
            other += 1;
            format!("M{other}")
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;
    use crate::linalg::FieldSpec;
    use crate::module::tests::{a2, a3_rad2, dual_numbers};

    #[test]
    fn knitted_counts() {
        let k = QuiverPresentation::new(FieldSpec::Rationals, vec!["1".into()], 1).to_algebra().unwrap();
        assert_eq!(enumerate_indecomposables(&k, None).unwrap().len(), 1);
        assert_eq!(enumerate_indecomposables(&dual_numbers(), None).unwrap().len(), 2);
        assert_eq!(enumerate_indecomposables(&a2(), None).unwrap().len(), 3);
        let u = enumerate_indecomposables(&a3_rad2(), None).unwrap();
        let mut names = u.names.clone();
        names.sort();
        assert_eq!(names, ["P1", "P2", "S1", "S2", "S3"]);
    }

    #[test]
    fn bound_is_reported() {
        let err = enumerate_indecomposables(&a3_rad2(), Some(3)).unwrap_err();
        assert_eq!(err, Error::KnittingBound(3));
    }
}
