use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

/// Univariate polynomial in `X`; `coeffs[k]` is the coefficient of `X^k`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    coeffs: Vec<RingElement>,
}

impl Polynomial {
    pub fn new(ring: Ring, coeffs: Vec<RingElement>) -> Result<Polynomial> {
        if let Some(bad) = coeffs.iter().find(|c| c.ring() != ring) {
            return Err(Error::RingMismatch(ring, bad.ring()));
        }
        let mut p = Polynomial { ring, coeffs };
        p.trim();
        Ok(p)
    }

    pub fn from_i64s(ring: Ring, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(ring, coeffs.iter().map(|&c| ring.from_i64(c)).collect()).unwrap()
    }

    pub fn zero(ring: Ring) -> Polynomial {
        Polynomial { ring, coeffs: Vec::new() }
    }

    pub fn constant(c: RingElement) -> Polynomial {
        let ring = c.ring();
        Polynomial::new(ring, vec![c]).unwrap()
    }

    /// The monomial `X`.
    pub fn x(ring: Ring) -> Polynomial {
        Polynomial { ring, coeffs: vec![ring.zero(), ring.one()] }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(RingElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RingElement::is_one)
    }

    pub fn coeff(&self, k: usize) -> RingElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn eval(&self, x: &RingElement) -> RingElement {
        self.coeffs.iter().rev().fold(self.ring.zero(), |acc, c| &(&acc * x) + c)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Polynomial::new(self.ring, coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.ring, coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*X")?,
                _ => write!(f, "{c}*X^{k}")?,
            }
        }
        Ok(())
    }
}
