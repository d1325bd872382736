use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact scalar.
///
/// Rationals are kept as a reduced `i64` fraction while they fit and fall
/// back to arbitrary precision otherwise. Elements of a prime field are
/// stored as `Small(v, 1)` with `0 <= v < p`. Every value has exactly one
/// representation, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Small(0, 1);
    pub const ONE: Scalar = Scalar::Small(1, 1);

    pub fn int(v: i64) -> Scalar {
        Scalar::Small(v, 1)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Small(1, 1))
    }

    fn from_i128(n: i128, d: i128) -> Scalar {
        debug_assert!(d != 0);
        let (mut n, mut d) = (n, d);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Scalar::Small(n, d),
            _ => Scalar::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Scalar::Small(n, d);
            }
        }
        Scalar::Big(Box::new(r))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(b) => (**b).clone(),
        }
    }

    pub fn to_big_rational(&self) -> BigRational {
        self.to_big()
    }

    pub fn from_big_rational(r: BigRational) -> Scalar {
        Scalar::from_big(r)
    }

    fn q_add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        if s != i64::MIN {
                            return Scalar::Small(s, 1);
                        }
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                    (Some(x), Some(y), Some(z)) => match x.checked_add(y) {
                        Some(s) => Scalar::from_i128(s, z),
                        None => Scalar::from_big(self.to_big() + o.to_big()),
                    },
                    _ => Scalar::from_big(self.to_big() + o.to_big()),
                }
            }
            _ => Scalar::from_big(self.to_big() + o.to_big()),
        }
    }

    fn q_mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Scalar::ZERO;
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(c), b.checked_mul(d)) {
                    (Some(x), Some(y)) => Scalar::from_i128(x, y),
                    _ => Scalar::from_big(self.to_big() * o.to_big()),
                }
            }
            _ => Scalar::from_big(self.to_big() * o.to_big()),
        }
    }

    fn q_neg(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => Scalar::Small(-n, *d),
            Scalar::Big(b) => Scalar::from_big(-(**b).clone()),
        }
    }

    fn q_inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Small(0, _) => None,
            Scalar::Small(n, d) => {
                if *n < 0 {
                    Some(Scalar::Small(-d, -n))
                } else {
                    Some(Scalar::Small(*d, *n))
                }
            }
            Scalar::Big(b) => Some(Scalar::from_big(b.recip())),
        }
    }

    /// Numerator and denominator as big integers.
    pub fn parts(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(b) => (b.numer().clone(), b.denom().clone()),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Small(_, d) => *d == 1,
            Scalar::Big(b) => b.is_integer(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The coefficient field: the rationals or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if !is_prime(p) || p >= (1 << 16) {
            return Err(Error::InvalidField(format!("GF({p}) requires a prime below 65536")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Characteristic, 0 for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::ZERO
    }

    pub fn one(&self) -> Scalar {
        Scalar::ONE
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::int(v),
            FieldSpec::Prime(p) => Scalar::int(v.rem_euclid(*p as i64)),
        }
    }

    /// Maps a rational into the field. Fails over GF(p) when p divides the
    /// denominator.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::from_big(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_i64().unwrap();
                let d = den.mod_floor(&pb).to_i64().unwrap();
                if d == 0 {
                    return Err(Error::Parse(format!("denominator divisible by {p}")));
                }
                let di = self.inv(&Scalar::int(d)).unwrap();
                Ok(self.mul(&Scalar::int(n), &di))
            }
        }
    }

    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
        let d = BigInt::from_str(d).map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
        self.from_ratio(&n, &d)
    }

    #[inline]
    fn residue(v: &Scalar) -> i64 {
        match v {
            Scalar::Small(n, _) => *n,
            Scalar::Big(_) => unreachable!("prime field elements are always small"),
        }
    }

    #[inline]
    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a.q_add(b),
            FieldSpec::Prime(p) => {
                let s = Self::residue(a) + Self::residue(b);
                let p = *p as i64;
                Scalar::Small(if s >= p { s - p } else { s }, 1)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a.q_neg(),
            FieldSpec::Prime(p) => {
                let v = Self::residue(a);
                Scalar::Small(if v == 0 { 0 } else { *p as i64 - v }, 1)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a.q_mul(b),
            FieldSpec::Prime(p) => Scalar::Small((Self::residue(a) * Self::residue(b)) % *p as i64, 1),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => a.q_inv(),
            FieldSpec::Prime(p) => {
                let v = Self::residue(a);
                if v == 0 {
                    return None;
                }
                // extended Euclid
                let (mut r0, mut r1) = (*p as i64, v);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                Some(Scalar::Small(t0.rem_euclid(*p as i64), 1))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Every element of a prime field, in increasing residue order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..*p as i64).map(|v| Scalar::Small(v, 1))),
        }
    }

    /// Checks that a scalar is a canonical element of this field.
    pub fn is_valid(&self, a: &Scalar) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::Prime(p) => matches!(a, Scalar::Small(v, 1) if *v >= 0 && *v < *p as i64),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
