use std::collections::HashMap;

use super::{Algebra, Block};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path in the quiver; `arrows` empty means the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The same path read in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }
}

/// A linear combination of parallel paths, given as arrow index sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub max_path_length: usize,
}

impl QuiverPresentation {
    pub fn new(field: FieldSpec, vertices: Vec<String>, max_path_length: usize) -> QuiverPresentation {
        QuiverPresentation { field, vertices, arrows: vec![], relations: vec![], max_path_length }
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<()> {
        let (Some(s), Some(t)) = (self.vertex(source), self.vertex(target)) else {
            return Err(Error::Semantic(format!("arrow {name} uses an unknown vertex")));
        };
        if self.arrow(name).is_some() {
            return Err(Error::Semantic(format!("arrow {name} declared twice")));
        }
        self.arrows.push(Arrow { name: name.to_string(), source: s, target: t });
        Ok(())
    }

    fn path_of(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut t = self.arrows[first].source;
        for &a in arrows {
            if self.arrows[a].source != t {
                return None;
            }
            t = self.arrows[a].target;
        }
        Some(Path { source: self.arrows[first].source, target: t, arrows: arrows.to_vec() })
    }

    fn check_relation(&self, r: &Relation) -> Result<()> {
        let mut ends = None;
        for (_, arrows) in &r.terms {
            let p = self.path_of(arrows).ok_or_else(|| Error::Semantic("relation term is not a path".into()))?;
            if p.len() < 2 {
                return Err(Error::Semantic("relation terms must have length at least 2".into()));
            }
            match ends {
                None => ends = Some((p.source, p.target)),
                Some(e) if e != (p.source, p.target) => return Err(Error::Semantic("relation terms are not parallel".into())),
                _ => {}
            }
        }
        Ok(())
    }

    pub fn label(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// All paths of length at most `max`, by length and then lexicographically.
    fn paths_up_to(&self, max: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        let mut layer: Vec<Path> = out.clone();
        for _ in 0..max {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { source: p.source, target: a.target, arrows });
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Path algebra modulo the relations, with residue paths as basis.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let f = self.field;
        for r in &self.relations {
            self.check_relation(r)?;
        }
        let l = self.max_path_length;
        let paths = self.paths_up_to(l);
        let np = paths.len();
        let index: HashMap<(usize, Vec<usize>), usize> = paths.iter().enumerate().map(|(i, p)| ((p.source, p.arrows.clone()), i)).collect();
        // reversed columns so row reduction pivots on long paths first
        let col = |i: usize| np - 1 - i;
        let mut rows = Vec::new();
        for r in &self.relations {
            let (s, t) = {
                let p = self.path_of(&r.terms[0].1).unwrap();
                (p.source, p.target)
            };
            for p in paths.iter().filter(|p| p.target == s) {
                for q in paths.iter().filter(|q| q.source == t) {
                    let mut v = vec![Scalar::ZERO; np];
                    for (c, arrows) in &r.terms {
                        let mut full = p.arrows.clone();
                        full.extend(arrows);
                        full.extend(&q.arrows);
                        if full.len() > l {
                            continue;
                        }
                        let i = index[&(p.source, full)];
                        v[col(i)] = f.add(&v[col(i)], c);
                    }
                    if v.iter().any(|x| !x.is_zero()) {
                        rows.push(v);
                    }
                }
            }
        }
        let ideal = Subspace::span(f, np, &rows);
        for (i, p) in paths.iter().enumerate() {
            if p.len() == l && l > 0 {
                let mut v = vec![Scalar::ZERO; np];
                v[col(i)] = Scalar::ONE;
                if !ideal.contains(&v) {
                    return Err(Error::DimensionBound(l));
                }
            }
        }
        if l == 0 && !self.arrows.is_empty() {
            return Err(Error::DimensionBound(0));
        }
        let mut basis: Vec<usize> = ideal.complement_indices().into_iter().map(col).collect();
        basis.sort_unstable();
        let k = basis.len();
        let reduce = |i: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::ZERO; np];
            v[col(i)] = Scalar::ONE;
            let red = ideal.reduce(&v);
            basis.iter().map(|&b| red[col(b)].clone()).collect()
        };
        let product = |a: &Path, b: &Path| -> Vec<Scalar> {
            if a.target != b.source {
                return vec![Scalar::ZERO; k];
            }
            let mut full = a.arrows.clone();
            full.extend(&b.arrows);
            if full.len() > l {
                return vec![Scalar::ZERO; k];
            }
            reduce(index[&(a.source, full)])
        };
        let bpaths: Vec<Path> = basis.iter().map(|&i| paths[i].clone()).collect();
        let right: Vec<Mat> = (0..k).map(|j| Mat::from_rows(f, k, (0..k).map(|i| product(&bpaths[i], &bpaths[j])).collect())).collect();
        let mut unit = vec![Scalar::ZERO; k];
        let mut blocks = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            let pos = bpaths.iter().position(|p| p.is_trivial() && p.source == v).unwrap();
            unit[pos] = Scalar::ONE;
            let mut e = vec![Scalar::ZERO; k];
            e[pos] = Scalar::ONE;
            blocks.push(Block { name: name.clone(), element: e });
        }
        let labels = bpaths.iter().map(|p| self.label(p)).collect();
        let a = Algebra::assemble(f, right, unit, labels, blocks, Some(bpaths));
        a.check_axioms()?;
        Ok(a)
    }

    /// The quiver with every arrow reversed.
    pub fn reversed(&self) -> QuiverPresentation {
        let arrows = self.arrows.iter().map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source }).collect();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation { terms: r.terms.iter().map(|(c, p)| (c.clone(), p.iter().rev().copied().collect())).collect() })
            .collect();
        QuiverPresentation { field: self.field, vertices: self.vertices.clone(), arrows, relations, max_path_length: self.max_path_length }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn verts(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn single_vertex_is_the_field() {
        let q = QuiverPresentation::new(Q, verts(1), 1);
        let a = q.to_algebra().unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn loop_with_square_zero() {
        let mut q = QuiverPresentation::new(Q, verts(1), 2);
        q.add_arrow("x", "1", "1").unwrap();
        q.relations.push(Relation { terms: vec![(Scalar::ONE, vec![0, 0])] });
        let a = q.to_algebra().unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), &["e1".to_string(), "x".to_string()]);
        // x * x = 0, e * x = x
        assert!(a.basis_product(1, 1).iter().all(Scalar::is_zero));
        assert_eq!(a.basis_product(0, 1), vec![Scalar::ZERO, Scalar::ONE]);
    }

    #[test]
    fn a3_modulo_radical_square() {
        let mut q = QuiverPresentation::new(Q, verts(3), 2);
        q.add_arrow("a", "1", "2").unwrap();
        q.add_arrow("b", "2", "3").unwrap();
        q.relations.push(Relation { terms: vec![(Scalar::ONE, vec![0, 1])] });
        assert_eq!(q.to_algebra().unwrap().dim(), 5);
        q.relations.clear();
        q.max_path_length = 3;
        assert_eq!(q.to_algebra().unwrap().dim(), 6);
    }

    #[test]
    fn bound_exceeded_names_length() {
        let mut q = QuiverPresentation::new(Q, verts(1), 3);
        q.add_arrow("x", "1", "1").unwrap();
        assert_eq!(q.to_algebra().unwrap_err(), Error::DimensionBound(3));
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let mut q = QuiverPresentation::new(Q, verts(3), 3);
        q.add_arrow("a", "1", "2").unwrap();
        q.add_arrow("b", "2", "3").unwrap();
        q.add_arrow("c", "2", "2").unwrap();
        q.relations.push(Relation { terms: vec![(Scalar::ONE, vec![0, 1]), (Scalar::ONE, vec![0, 2])] });
        assert!(q.to_algebra().is_err());
    }
}
