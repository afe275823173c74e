//! Exact arithmetic over the supported base rings: the integers, the
//! rationals, and residue rings `Z/n` for any modulus `n >= 2`.
//!
//! Elements always carry a canonical representative, so structural
//! equality is ring equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A supported commutative ring with unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    /// `Z/n`; composite moduli are allowed.
    ModN(u64),
}

impl Ring {
    pub fn modn(modulus: u64) -> Result<Ring> {
        if modulus < 2 {
            return Err(Error::Parse(format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(Ring::ModN(modulus))
    }

    pub fn zero(self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, value: i64) -> RingElement {
        self.from_bigint(&BigInt::from(value))
    }

    /// Image of an integer under the canonical map `Z -> A`.
    pub fn from_bigint(self, value: &BigInt) -> RingElement {
        match self {
            Ring::Integers => RingElement::Int(value.clone()),
            Ring::Rationals => RingElement::Rat(BigRational::from_integer(value.clone())),
            Ring::ModN(n) => {
                let r = value.mod_floor(&BigInt::from(n));
                RingElement::Mod { value: r.to_u64().expect("residue fits modulus"), modulus: n }
            }
        }
    }

    /// Builds `num / den`, which must exist in this ring.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<RingElement> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self {
            Ring::Rationals => Ok(RingElement::Rat(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let d = self.from_bigint(den);
                let inv = d.inverse_of_unit()?;
                Ok(&self.from_bigint(num) * &inv)
            }
        }
    }

    /// Parses a decimal integer or, over `Q`, a fraction `"p/q"`.
    pub fn parse_element(self, text: &str) -> Result<RingElement> {
        let text = text.trim();
        match text.split_once('/') {
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = parse_int(den)?;
                self.from_fraction(&num, &den)
            }
            None => Ok(self.from_bigint(&parse_int(text)?)),
        }
    }

    /// True when every nonzero element is a unit.
    pub fn is_field(self) -> bool {
        match self {
            Ring::Integers => false,
            Ring::Rationals => true,
            Ring::ModN(n) => is_prime_u64(n),
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Ring::ModN(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::ModN(n) => write!(f, "Z/{n}"),
        }
    }
}

fn parse_int(text: &str) -> Result<BigInt> {
    let text = text.trim();
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not an integer: {text:?}")));
    }
    BigInt::from_str(text).map_err(|e| Error::Parse(format!("{text:?}: {e}")))
}

/// An element of a [`Ring`] in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Int(BigInt),
    /// Reduced, positive denominator (maintained by `BigRational`).
    Rat(BigRational),
    /// Residue in `[0, modulus)`.
    Mod {
        value: u64,
        modulus: u64,
    },
}

impl RingElement {
    pub fn ring(&self) -> Ring {
        match self {
            RingElement::Int(_) => Ring::Integers,
            RingElement::Rat(_) => Ring::Rationals,
            RingElement::Mod { modulus, .. } => Ring::ModN(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(a) => a.is_zero(),
            RingElement::Rat(a) => a.is_zero(),
            RingElement::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Int(a) => a.is_one(),
            RingElement::Rat(a) => a.is_one(),
            RingElement::Mod { value, .. } => *value == 1,
        }
    }

    fn check_same(&self, other: &RingElement) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(self.ring(), other.ring()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_same(other)?;
        Ok(self * other)
    }

    /// Re-normalizes the representative. Values built through this crate
    /// are already canonical, so this is the identity on them.
    pub fn canonical(&self) -> RingElement {
        match self {
            RingElement::Int(a) => RingElement::Int(a.clone()),
            RingElement::Rat(a) => RingElement::Rat(BigRational::new(a.numer().clone(), a.denom().clone())),
            RingElement::Mod { value, modulus } => RingElement::Mod { value: value % modulus, modulus: *modulus },
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Int(a) => a.abs().is_one(),
            RingElement::Rat(a) => !a.is_zero(),
            RingElement::Mod { value, modulus } => value.gcd(modulus) == 1,
        }
    }

    pub fn inverse_of_unit(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{self} in {}", self.ring())));
        }
        Ok(match self {
            RingElement::Int(a) => RingElement::Int(a.clone()),
            RingElement::Rat(a) => RingElement::Rat(a.recip()),
            RingElement::Mod { value, modulus } => {
                let e = BigInt::from(*value).extended_gcd(&BigInt::from(*modulus));
                Ring::ModN(*modulus).from_bigint(&e.x)
            }
        })
    }

    /// The integer representative for `Z` and `Z/n`; `None` over `Q`
    /// unless the denominator is 1.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            RingElement::Int(a) => Some(a.clone()),
            RingElement::Rat(a) => a.is_integer().then(|| a.numer().clone()),
            RingElement::Mod { value, .. } => Some(BigInt::from(*value)),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            RingElement::Int(a) => Some(a),
            _ => None,
        }
    }

    pub fn pow(&self, mut exp: u32) -> RingElement {
        let mut base = self.clone();
        let mut acc = self.ring().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    fn mismatch(&self, other: &RingElement) -> ! {
        panic!("ring mismatch in arithmetic: {} vs {}", self.ring(), other.ring())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(a) => write!(f, "{a}"),
            RingElement::Rat(a) if a.is_integer() => write!(f, "{}", a.numer()),
            RingElement::Rat(a) => write!(f, "{}/{}", a.numer(), a.denom()),
            RingElement::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_add(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

// Operators panic on a ring mismatch; use the `checked_*` methods at API
// boundaries. Matrices validate their ring once on construction.
impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a + b),
            (RingElement::Rat(a), RingElement::Rat(b)) => RingElement::Rat(a + b),
            (RingElement::Mod { value: a, modulus: n }, RingElement::Mod { value: b, modulus: m }) if n == m => {
                RingElement::Mod { value: mod_add(*a, *b, *n), modulus: *n }
            }
            _ => self.mismatch(rhs),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a * b),
            (RingElement::Rat(a), RingElement::Rat(b)) => RingElement::Rat(a * b),
            (RingElement::Mod { value: a, modulus: n }, RingElement::Mod { value: b, modulus: m }) if n == m => {
                RingElement::Mod { value: mod_mul(*a, *b, *n), modulus: *n }
            }
            _ => self.mismatch(rhs),
        }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        match self {
            RingElement::Int(a) => RingElement::Int(-a),
            RingElement::Rat(a) => RingElement::Rat(-a),
            RingElement::Mod { value, modulus } => {
                RingElement::Mod { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mod_mul(acc, b, n);
            }
            b = mod_mul(b, b, n);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
