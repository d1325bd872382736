//! Fixtures and property checks shared by the property suite and the
//! acceptance target.

#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use recoll::algebra::Relation;
use recoll::higher_ar::{enumerate_indecomposables, IndecUniverse};
use recoll::module::{find_isomorphism, hom_basis, RightModule};
use recoll::{Algebra, FieldSpec, Mat, QuiverPresentation, Scalar};

pub fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)], zero: &[&[usize]], max_len: usize) -> Algebra {
    let mut q = QuiverPresentation::new(FieldSpec::Rationals, vertices.iter().map(|v| v.to_string()).collect(), max_len);
    for (a, s, t) in arrows {
        q.add_arrow(a, s, t).unwrap();
    }
    for p in zero {
        q.relations.push(Relation { terms: vec![(Scalar::ONE, p.to_vec())] });
    }
    q.to_algebra().unwrap()
}

pub fn dual_numbers() -> Algebra {
    quiver(&["1"], &[("x", "1", "1")], &[&[0, 0]], 2)
}

pub fn a2() -> Algebra {
    quiver(&["1", "2"], &[("a", "1", "2")], &[], 2)
}

pub fn a3_rad2() -> Algebra {
    quiver(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[&[0, 1]], 2)
}

thread_local! {
    static UNIVERSES: OnceLock<Vec<IndecUniverse>> = const { OnceLock::new() };
}

/// Knitted indecomposables of the three fixture algebras.
pub fn universes() -> Vec<IndecUniverse> {
    UNIVERSES.with(|u| {
        u.get_or_init(|| [dual_numbers(), a2(), a3_rad2()].iter().map(|a| enumerate_indecomposables(a, None).unwrap()).collect()).clone()
    })
}

pub const PRIMES: [u32; 4] = [2, 3, 5, 7];

/// A field and a small integer matrix over it.
pub fn small_matrix() -> impl Strategy<Value = Mat> {
    (0usize..5, 0usize..7, 0usize..7)
        .prop_flat_map(|(f, r, c)| (Just(f), Just(r), Just(c), proptest::collection::vec(-4i64..=4, r * c)))
        .prop_map(|(f, r, c, v)| {
            let field = if f == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(PRIMES[f - 1]) };
            Mat::from_fn(field, r, c, |i, j| field.from_i64(v[i * c + j]))
        })
}

/// `m` transported along `v -> v P`.
pub fn transport(m: &RightModule, p: &Mat) -> RightModule {
    let inv = p.invert().expect("invertible");
    let action = m.actions().iter().map(|a| inv.mul(a).mul(p)).collect();
    RightModule::new(m.algebra(), m.dim(), action).unwrap()
}

/// Unitriangular factors give an invertible change of basis.
fn change_of_basis(n: usize, lower: &[i64], upper: &[i64]) -> Mat {
    let f = FieldSpec::Rationals;
    let l = Mat::from_fn(f, n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => f.one(),
        std::cmp::Ordering::Greater => f.from_i64(lower[i * n + j]),
        std::cmp::Ordering::Less => f.zero(),
    });
    let u = Mat::from_fn(f, n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => f.one(),
        std::cmp::Ordering::Less => f.from_i64(upper[i * n + j]),
        std::cmp::Ordering::Greater => f.zero(),
    });
    l.mul(&u)
}

/// A direct sum of knitted indecomposables in a scrambled basis, with the
/// universe indices of its summands.
pub fn small_module() -> impl Strategy<Value = (usize, Vec<usize>, RightModule)> {
    (
        0usize..3,
        proptest::collection::vec(0usize..16, 1..=3),
        proptest::collection::vec(-2i64..=2, 100),
        proptest::collection::vec(-2i64..=2, 100),
    )
        .prop_map(|(a, picks, lower, upper)| {
            let u = &universes()[a];
            let picks: Vec<usize> = picks.into_iter().map(|i| i % u.len()).collect();
            let parts: Vec<RightModule> = picks.iter().map(|&i| u.indecs[i].clone()).collect();
            let sum = RightModule::direct_sum_all(&u.algebra, &parts).unwrap();
            let p = change_of_basis(sum.dim(), &lower, &upper);
            (a, picks, transport(&sum, &p))
        })
}

pub fn rank_nullity(m: &Mat) -> Result<(), TestCaseError> {
    let r = m.rank();
    let k = m.kernel_basis();
    prop_assert_eq!(r + k.rows(), m.cols());
    prop_assert_eq!(r + m.left_kernel().rows(), m.rows());
    prop_assert!(m.mul(&k.transpose()).is_zero());
    prop_assert_eq!(k.rank(), k.rows());
    prop_assert_eq!(m.image_basis().rows(), r);
    Ok(())
}

pub fn rref_idempotent(m: &Mat) -> Result<(), TestCaseError> {
    let (r, p) = m.rref();
    let (rr, pp) = r.rref();
    prop_assert_eq!(&rr, &r);
    prop_assert_eq!(pp, p.clone());
    // same row space
    let stacked = m.vstack(&r);
    prop_assert_eq!(stacked.rank(), p.len());
    Ok(())
}

pub fn decomposition_deterministic(u: &IndecUniverse, picks: &[usize], m: &RightModule) -> Result<(), TestCaseError> {
    let d1 = m.decompose().unwrap();
    let fresh = RightModule::new(m.algebra(), m.dim(), m.actions().to_vec()).unwrap();
    let d2 = fresh.decompose().unwrap();
    prop_assert_eq!(d1.summands.len(), d2.summands.len());
    for ((a, k), (b, l)) in d1.summands.iter().zip(&d2.summands) {
        prop_assert!(a == b && k == l);
    }
    prop_assert_eq!(d1.iso.matrix(), d2.iso.matrix());
    prop_assert!(d1.iso.is_iso() && d1.iso.intertwines());
    // Krull-Schmidt: the multiset of summands is the one we started from
    let mut found: Vec<usize> = Vec::new();
    for (s, k) in &d1.summands {
        let i = u.find(s).unwrap();
        prop_assert!(i.is_some());
        found.extend(std::iter::repeat_n(i.unwrap(), *k));
    }
    let mut expected = picks.to_vec();
    expected.sort_unstable();
    found.sort_unstable();
    prop_assert_eq!(found, expected);
    Ok(())
}

pub fn duality_involution(u: &IndecUniverse, m: &RightModule) -> Result<(), TestCaseError> {
    let d = m.dual();
    prop_assert_eq!(d.dim(), m.dim());
    prop_assert!(*d.algebra() == u.algebra.opposite());
    let dd = d.dual();
    prop_assert!(*dd.algebra() == u.algebra);
    prop_assert!(find_isomorphism(&dd, m).unwrap().is_some());
    for x in &u.indecs {
        let h = hom_basis(x, m).unwrap().dim();
        let hd = hom_basis(&d, &x.dual()).unwrap().dim();
        prop_assert_eq!(h, hd);
    }
    Ok(())
}
