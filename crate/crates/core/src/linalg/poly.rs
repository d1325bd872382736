//! Univariate polynomials over a [`FieldSpec`], just enough for minimal
//! polynomials and idempotent splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg::scalar::{FieldSpec, Scalar};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `x - root`
    pub fn linear(field: FieldSpec, root: &Scalar) -> Poly {
        Poly::new(field, vec![field.neg(root), Scalar::ONE])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lead()).unwrap();
        self.scale(&inv)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| self.field.mul(c, s)).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or(Scalar::ZERO);
                let b = o.coeffs.get(i).cloned().unwrap_or(Scalar::ZERO);
                f.add(&a, &b)
            })
            .collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&self.field.from_i64(-1)))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![Scalar::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, c)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::constant(self.field, Scalar::ONE);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.field;
        let dd = d.degree().unwrap();
        let inv = f.inv(&d.lead()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut q = vec![Scalar::ZERO; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(&r[i + dd], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = f.sub(&r[i + j], &f.mul(&c, dc));
            }
            q[i] = c;
        }
        (Poly::new(f, q), Poly::new(f, r))
    }

    /// Monic gcd together with Bezout cofactors: `s a + t b = g`.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let f = a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::constant(f, Scalar::ONE), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::constant(f, Scalar::ONE));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(&r0.lead()).unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        self.coeffs.iter().rev().fold(Scalar::ZERO, |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Distinct roots lying in the base field, in a deterministic order.
    ///
    /// Over GF(p) this is exhaustive. Over the rationals it applies the
    /// rational root test and gives up on coefficients too large to factor
    /// by trial division.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        match self.field {
            FieldSpec::Prime(_) => self.field.elements().unwrap().filter(|x| self.eval(x).is_zero()).collect(),
            FieldSpec::Rationals => self.rational_roots(),
        }
    }

    fn rational_roots(&self) -> Vec<Scalar> {
        let f = self.field;
        // clear denominators
        let mut lcm = BigInt::from(1);
        for c in &self.coeffs {
            let (_, d) = c.parts();
            lcm = lcm.lcm(&d);
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let (n, d) = c.parts();
                n * (&lcm / d)
            })
            .collect();
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(Scalar::ZERO);
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
            return roots;
        };
        const LIMIT: u64 = 1_000_000_000_000;
        if a0 > LIMIT || an > LIMIT {
            return roots;
        }
        let mut cands = Vec::new();
        for p in divisors(a0) {
            for q in divisors(an) {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let r = f.from_ratio(&BigInt::from(sign * p as i64), &BigInt::from(q as i64)).unwrap();
                    cands.push(r);
                }
            }
        }
        for c in cands {
            if !roots.contains(&c) && self.eval(&c).is_zero() {
                roots.push(c);
            }
        }
        roots
    }

    /// Multiplicity of `root` as a root.
    pub fn multiplicity(&self, root: &Scalar) -> usize {
        let lin = Poly::linear(self.field, root);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, r) = p.divrem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn p(c: &[i64]) -> Poly {
        Poly::new(Q, c.iter().map(|&v| Q.from_i64(v)).collect())
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
        let roots = p(&[0, -3, 5, 2]).roots();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&Q.parse("1/2").unwrap()));
        assert!(roots.contains(&Q.from_i64(-3)));
        assert!(p(&[1, 0, 1]).roots().is_empty());
    }

    #[test]
    fn bezout_identity() {
        let a = p(&[-1, 1]).pow(2);
        let b = p(&[2, 1]);
        let (g, s, t) = Poly::ext_gcd(&a, &b);
        assert_eq!(g, p(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), p(&[1]));
    }

    #[test]
    fn multiplicity_counts() {
        let f = p(&[-1, 1]).pow(3).mul(&p(&[5, 1]));
        assert_eq!(f.multiplicity(&Q.from_i64(1)), 3);
        assert_eq!(f.multiplicity(&Q.from_i64(-5)), 1);
        assert_eq!(f.multiplicity(&Q.from_i64(2)), 0);
    }

    #[test]
    fn gf_roots_exhaustive() {
        let f = FieldSpec::prime(7).unwrap();
        let x2m2 = Poly::new(f, vec![f.from_i64(-2), Scalar::ZERO, Scalar::ONE]);
        assert_eq!(x2m2.roots(), vec![f.from_i64(3), f.from_i64(4)]);
    }
}
