use super::homological::*;
use super::*;
use crate::algebra::{QuiverPresentation, Relation};
use crate::linalg::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn verts(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub(crate) fn dual_numbers() -> Algebra {
    let mut q = QuiverPresentation::new(Q, verts(1), 2);
    q.add_arrow("x", "1", "1").unwrap();
    q.relations.push(Relation { terms: vec![(Scalar::ONE, vec![0, 0])] });
    q.to_algebra().unwrap()
}

pub(crate) fn a2() -> Algebra {
    let mut q = QuiverPresentation::new(Q, verts(2), 2);
    q.add_arrow("a", "1", "2").unwrap();
    q.to_algebra().unwrap()
}

pub(crate) fn a3_rad2() -> Algebra {
    let mut q = QuiverPresentation::new(Q, verts(3), 2);
    q.add_arrow("a", "1", "2").unwrap();
    q.add_arrow("b", "2", "3").unwrap();
    q.relations.push(Relation { terms: vec![(Scalar::ONE, vec![0, 1])] });
    q.to_algebra().unwrap()
}

fn iso(x: &RightModule, y: &RightModule) -> bool {
    find_isomorphism(x, y).unwrap().is_some()
}

use super::decompose::find_isomorphism;

#[test]
fn dual_numbers_hom_table() {
    let a = dual_numbers();
    let r = RightModule::regular(&a);
    let s = simple(&a, 0).unwrap();
    assert_eq!(hom_basis(&s, &s).unwrap().dim(), 1);
    assert_eq!(hom_basis(&s, &r).unwrap().dim(), 1);
    assert_eq!(hom_basis(&r, &s).unwrap().dim(), 1);
    assert_eq!(hom_basis(&r, &r).unwrap().dim(), 2);
}

#[test]
fn a2_hom_total_is_five() {
    let a = a2();
    let mods = [projective(&a, 0).unwrap(), projective(&a, 1).unwrap(), simple(&a, 0).unwrap()];
    let total: usize = mods.iter().flat_map(|x| mods.iter().map(move |y| hom_basis(x, y).unwrap().dim())).sum();
    assert_eq!(total, 5);
}

#[test]
fn kernel_of_x_is_simple() {
    let a = dual_numbers();
    let r = RightModule::regular(&a);
    let x = ModuleHom::new(&r, &r, a.left_mult(&a.basis_vector(1))).unwrap();
    let (k, _) = x.kernel();
    assert!(iso(&k, &simple(&a, 0).unwrap()));
    assert!(ModuleHom::identity(&r).kernel().0.is_zero());
    assert_eq!(ModuleHom::zero(&k, &r).cokernel().0.dim(), 2);
}

#[test]
fn dual_regular_is_regular_for_dual_numbers() {
    let a = dual_numbers();
    let d = RightModule::regular(&a).dual();
    let reg = RightModule::regular(d.algebra());
    assert!(iso(&d, &reg));
}

#[test]
fn decompositions() {
    let a = a2();
    let d = RightModule::regular(&a).decompose().unwrap();
    assert_eq!(d.count(), 2);
    assert!(d.iso.is_iso() && d.iso.intertwines());
    let s = simple(&a, 1).unwrap();
    let d2 = s.power(2).decompose().unwrap();
    assert_eq!(d2.summands.len(), 1);
    assert_eq!(d2.summands[0].1, 2);
}

/// `x` in the basis given by the rows of a dense invertible matrix.
fn scrambled(x: &RightModule) -> RightModule {
    let n = x.dim();
    let l = Mat::from_fn(Q, n, n, |i, j| {
        if i == j {
            Q.one()
        } else if i > j {
            Q.from_i64(((3 * i + 5 * j) % 7) as i64 - 3)
        } else {
            Q.zero()
        }
    });
    let u = Mat::from_fn(Q, n, n, |i, j| {
        if i == j {
            Q.one()
        } else if i < j {
            Q.from_i64(((2 * i + 3 * j) % 5) as i64 - 2)
        } else {
            Q.zero()
        }
    });
    let p = l.mul(&u);
    let inv = p.invert().unwrap();
    RightModule::new(x.algebra(), n, x.actions().iter().map(|m| inv.mul(m).mul(&p)).collect()).unwrap()
}

#[test]
fn scrambled_powers_decompose() {
    let a = a2();
    let d = scrambled(&projective(&a, 0).unwrap().power(3)).decompose().unwrap();
    assert_eq!(d.summands.len(), 1);
    assert_eq!(d.summands[0].1, 3);
    let b = a3_rad2();
    let (p1, p2) = (projective(&b, 0).unwrap(), projective(&b, 1).unwrap());
    let sum = RightModule::direct_sum_all(&b, &[p2.clone(), p2.clone(), p1.clone()]).unwrap();
    let d = scrambled(&sum).decompose().unwrap();
    assert_eq!(d.count(), 3);
    assert!(d.iso.is_iso() && d.iso.intertwines());
    let r = dual_numbers();
    let d = scrambled(&RightModule::regular(&r).power(3)).decompose().unwrap();
    assert_eq!(d.summands[0].1, 3);
}

#[test]
fn covers_and_hulls() {
    let a = dual_numbers();
    let s = simple(&a, 0).unwrap();
    let c = projective_cover(&s).unwrap();
    assert_eq!(c.module.dim(), 2);
    assert!(c.map.is_epi());
    let a = a3_rad2();
    let s3 = simple(&a, 2).unwrap();
    assert_eq!(s3.dim(), 1);
    let h = injective_hull(&s3).unwrap();
    assert_eq!(h.module.dim(), 2);
    assert!(h.map.is_mono() && h.map.intertwines());
    assert!(iso(&h.module, &projective(&a, 1).unwrap()));
}

#[test]
fn simples_of_a3() {
    let a = a3_rad2();
    let dims: Vec<usize> = projectives(&a).unwrap().iter().map(|p| p.dim()).collect();
    assert_eq!(dims, vec![2, 2, 1]);
}

#[test]
fn presentations_and_syzygies() {
    let a = dual_numbers();
    let s = simple(&a, 0).unwrap();
    let p = min_proj_presentation(&s).unwrap();
    assert_eq!((p.p1.module.dim(), p.p0.module.dim()), (2, 2));
    assert!(iso(&syzygy(&s, 1).unwrap(), &s));
    let reg = RightModule::regular(&a);
    assert!(min_proj_presentation(&reg).unwrap().p1.module.is_zero());
    assert!(syzygy(&reg, 1).unwrap().is_zero());

    let a = a3_rad2();
    let s1 = simple(&a, 0).unwrap();
    assert!(iso(&syzygy(&s1, 1).unwrap(), &simple(&a, 1).unwrap()));
}

#[test]
fn ext_values() {
    let a = dual_numbers();
    let s = simple(&a, 0).unwrap();
    assert_eq!(ext(&s, &s, 1).unwrap().dim, 1);
    assert_eq!(ext(&s, &s, 0).unwrap().dim, 1);
    let r = RightModule::regular(&a);
    assert_eq!(ext(&r, &s, 1).unwrap().dim, 0);

    let a = a3_rad2();
    let s1 = simple(&a, 0).unwrap();
    let s3 = simple(&a, 2).unwrap();
    assert_eq!(ext(&s1, &s3, 2).unwrap().dim, 1);
}

#[test]
fn transpose_and_tau() {
    let a = dual_numbers();
    let s = simple(&a, 0).unwrap();
    let t = transpose(&s).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(transpose(&RightModule::regular(&a)).unwrap().is_zero());
    let tt = transpose(&t).unwrap();
    assert!(iso(&tt, &s));
    assert!(iso(&ar_translate(&s).unwrap(), &s));

    let a = a3_rad2();
    let ss: Vec<_> = simples(&a).unwrap();
    assert!(iso(&ar_translate(&ss[0]).unwrap(), &ss[1]));
    assert!(iso(&ar_translate(&ss[1]).unwrap(), &ss[2]));
    assert!(ar_translate(&projective(&a, 0).unwrap()).unwrap().is_zero());
    assert!(iso(&ar_translate_inverse(&ar_translate(&ss[0]).unwrap()).unwrap(), &ss[0]));
}

#[test]
fn stable_homs() {
    let a = dual_numbers();
    let s = simple(&a, 0).unwrap();
    assert_eq!(stable_hom_proj(&s, &s).unwrap().dim, 1);
    assert_eq!(stable_hom_proj(&s, &RightModule::regular(&a)).unwrap().dim, 0);
    let a = a3_rad2();
    let s3 = simple(&a, 2).unwrap();
    assert_eq!(stable_hom_inj(&s3, &s3).unwrap().dim, 1);
}

#[test]
fn almost_split_sequences() {
    let a = a2();
    let s1 = simple(&a, 0).unwrap();
    let seq = ArSequence::ending_at(&s1).unwrap();
    // 0 -> S2 -> P1 -> S1 -> 0
    assert_eq!(seq.middle.dim(), 2);
    assert!(seq.middle.is_indecomposable().unwrap());
    let a = dual_numbers();
    let s = simple(&a, 0).unwrap();
    let seq = ArSequence::ending_at(&s).unwrap();
    assert!(iso(&seq.middle, &RightModule::regular(&a)));
}

#[test]
fn partial_action_builds_representations() {
    let a = a2();
    let f = Q;
    let idx = |l: &str| a.labels().iter().position(|x| x == l).unwrap();
    let e1 = Mat::from_i64(f, &[&[1, 0], &[0, 0]]);
    let e2 = Mat::from_i64(f, &[&[0, 0], &[0, 1]]);
    let arr = Mat::from_i64(f, &[&[0, 1], &[0, 0]]);
    let m = RightModule::from_partial_action(&a, 2, &[(idx("e1"), e1), (idx("e2"), e2), (idx("a"), arr)]).unwrap();
    assert!(iso(&m, &projective(&a, 0).unwrap()));
    let bad = Mat::from_i64(f, &[&[0, 0], &[1, 0]]);
    let e1 = Mat::from_i64(f, &[&[1, 0], &[0, 0]]);
    let e2 = Mat::from_i64(f, &[&[0, 0], &[0, 1]]);
    assert!(RightModule::from_partial_action(&a, 2, &[(idx("e1"), e1), (idx("e2"), e2), (idx("a"), bad)]).is_err());
}
