//! Exact coefficient arithmetic over ℚ and prime fields F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive). Products of two residues fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A reduced fraction with positive denominator; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Canonical form of `n/d`.
    pub fn normalize(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Deterministic primality test by trial division; adequate below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p, stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFieldElement {
    value: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: u32) -> Self {
        let v = value.rem_euclid(modulus as i64) as u32;
        PrimeFieldElement { value: v, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn with(&self, v: u64) -> Self {
        PrimeFieldElement { value: (v % self.modulus as u64) as u32, modulus: self.modulus }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(PrimeFieldElement::new(s0, self.modulus))
    }

    /// Representative in (-p/2, p/2], used for printing.
    pub fn symmetric(&self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }
}

/// The coefficient field of a ring, as written in ring-definition files.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u32 },
}

impl FieldSpec {
    /// F_p, with `p` checked to be a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidInput(format!("modulus {p} must be below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("modulus {p} is not prime")));
        }
        Ok(FieldSpec::Prime { p: p as u32 })
    }

    /// Re-checks the primality invariant (for values built by deserialization).
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => FieldSpec::prime(p as u64).map(|_| ()),
        }
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            FieldSpec::Rational => Coeff::Rational(Rational::from_integer(n)),
            FieldSpec::Prime { p } => Coeff::Prime(PrimeFieldElement::new(n, p)),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            FieldSpec::Rational => Coeff::Rational(Rational::from_integer(n.clone())),
            FieldSpec::Prime { p } => {
                let r = n.mod_floor(&BigInt::from(p)).to_i64().expect("residue fits");
                Coeff::Prime(PrimeFieldElement::new(r, p))
            }
        }
    }

    /// The field element `n/d`; fails when `d` vanishes in the field.
    pub fn from_fraction(&self, n: &BigInt, d: &BigInt) -> Result<Coeff> {
        match *self {
            FieldSpec::Rational => Ok(Coeff::Rational(Rational::normalize(n.clone(), d.clone())?)),
            FieldSpec::Prime { .. } => {
                let den = self.from_bigint(d);
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(&self.from_bigint(n) * &den.inverse()?)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "QQ"),
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

/// A coefficient in one of the supported fields. Mixing fields is a logic error.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coeff {
    Rational(Rational),
    Prime(PrimeFieldElement),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Prime(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.0.is_one(),
            Coeff::Prime(a) => a.value == 1,
        }
    }

    pub fn inverse(&self) -> Result<Coeff> {
        match self {
            Coeff::Rational(r) => r.inverse().map(Coeff::Rational),
            Coeff::Prime(a) => a.inverse().map(Coeff::Prime),
        }
    }

    /// `self / rhs`; panics on a zero divisor, callers divide by leading coefficients only.
    pub fn div(&self, rhs: &Coeff) -> Coeff {
        self * &rhs.inverse().expect("division by a nonzero coefficient")
    }

    /// Whether the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.0.is_negative(),
            Coeff::Prime(a) => a.symmetric() < 0,
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiply by a machine integer (used for formal derivatives).
    pub fn mul_u64(&self, n: u64) -> Coeff {
        match self {
            Coeff::Rational(r) => Coeff::Rational(Rational(&r.0 * BigRational::from_integer(n.into()))),
            Coeff::Prime(a) => Coeff::Prime(a.with((a.value as u64) * (n % a.modulus as u64))),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => write!(f, "{r}"),
            Coeff::Prime(a) => write!(f, "{}", a.symmetric()),
        }
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &'a Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Prime(a), Coeff::Prime(b)) => {
                debug_assert_eq!(a.modulus, b.modulus);
                Coeff::Prime(a.with(a.value as u64 + b.value as u64))
            }
            _ => panic!("coefficients from different fields"),
        }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &'a Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a - b),
            (Coeff::Prime(a), Coeff::Prime(b)) => {
                debug_assert_eq!(a.modulus, b.modulus);
                Coeff::Prime(a.with(a.value as u64 + (a.modulus - b.value) as u64))
            }
            _ => panic!("coefficients from different fields"),
        }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &'a Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Prime(a), Coeff::Prime(b)) => {
                debug_assert_eq!(a.modulus, b.modulus);
                Coeff::Prime(a.with(a.value as u64 * b.value as u64))
            }
            _ => panic!("coefficients from different fields"),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Prime(a) => Coeff::Prime(a.with((a.modulus - a.value) as u64)),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}
