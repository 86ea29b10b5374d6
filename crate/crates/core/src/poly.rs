//! Dense univariate polynomials over a residue ring.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::ring::ResidueRing;

/// A polynomial with canonical coefficients in ascending degree order.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<ResidueRing>,
    coeffs: Vec<GaussianInt>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Poly {}

fn same_ring(a: &Arc<ResidueRing>, b: &Arc<ResidueRing>) -> bool {
    Arc::ptr_eq(a, b) || a.delta() == b.delta()
}

impl Poly {
    /// Canonicalizes every coefficient and trims trailing zeros.
    pub fn new(ring: Arc<ResidueRing>, coeffs: impl IntoIterator<Item = GaussianInt>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| ring.canonicalize(c)).collect();
        let mut out = Self { ring, coeffs };
        out.trim();
        out
    }

    pub fn zero(ring: Arc<ResidueRing>) -> Self {
        Self { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: Arc<ResidueRing>) -> Self {
        Self::new(ring, [GaussianInt::ONE])
    }

    /// `c·x^deg`.
    pub fn monomial(ring: Arc<ResidueRing>, c: GaussianInt, deg: usize) -> Self {
        let mut coeffs = vec![GaussianInt::ZERO; deg + 1];
        coeffs[deg] = c;
        Self::new(ring, coeffs)
    }

    /// `x - root`.
    pub fn linear(ring: Arc<ResidueRing>, root: GaussianInt) -> Self {
        Self::new(ring, [-root, GaussianInt::ONE])
    }

    /// `x^n - lambda`.
    pub fn binomial(ring: Arc<ResidueRing>, n: usize, lambda: GaussianInt) -> Self {
        let mut coeffs = vec![GaussianInt::ZERO; n + 1];
        coeffs[0] = -lambda;
        coeffs[n] += GaussianInt::ONE;
        Self::new(ring, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[GaussianInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> GaussianInt {
        self.coeffs.get(j).copied().unwrap_or(GaussianInt::ZERO)
    }

    pub fn leading(&self) -> GaussianInt {
        self.coeffs.last().copied().unwrap_or(GaussianInt::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == GaussianInt::ONE
    }

    /// Coefficients zero-padded to `len`. Panics if the polynomial does not fit.
    pub fn padded(&self, len: usize) -> Vec<GaussianInt> {
        assert!(self.coeffs.len() <= len, "degree {:?} does not fit in {len} slots", self.degree());
        let mut out = self.coeffs.clone();
        out.resize(len, GaussianInt::ZERO);
        out
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) + other.coeff(j));
        Ok(Self::new(self.ring.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) - other.coeff(j));
        Ok(Self::new(self.ring.clone(), coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.ring.clone(), self.coeffs.iter().map(|&c| -c))
    }

    pub fn scale(&self, c: GaussianInt) -> Self {
        Self::new(self.ring.clone(), self.coeffs.iter().map(|&a| self.ring.mul(a, c)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let mut acc = vec![GaussianInt::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (a_idx, &a) in self.coeffs.iter().enumerate() {
            for (b_idx, &b) in other.coeffs.iter().enumerate() {
                let slot = &mut acc[a_idx + b_idx];
                *slot = self.ring.add(*slot, self.ring.mul(a, b));
            }
        }
        Ok(Self::new(self.ring.clone(), acc))
    }

    /// Long division by a divisor whose leading coefficient is a unit.
    /// Returns `(q, r)` with `self = d·q + r` and `deg r < deg d`.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_ring(d)?;
        let Some(d_deg) = d.degree() else {
            return Err(Error::DivisionByZero);
        };
        let ring = &self.ring;
        let lead_inv = ring
            .inverse(d.leading())
            .map_err(|_| Error::NonUnitLeadingCoefficient(d.leading()))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Self::zero(ring.clone()), self.clone()));
        }
        let mut quot = vec![GaussianInt::ZERO; rem.len() - d_deg];
        for top in (d_deg..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let q = ring.mul(c, lead_inv);
            let shift = top - d_deg;
            quot[shift] = q;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[shift + j] = ring.sub(rem[shift + j], ring.mul(q, dc));
            }
        }
        rem.truncate(d_deg);
        Ok((Self::new(ring.clone(), quot), Self::new(ring.clone(), rem)))
    }

    /// Horner evaluation at `x0`.
    pub fn eval(&self, x0: GaussianInt) -> GaussianInt {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianInt::ZERO, |acc, &c| self.ring.add(self.ring.mul(acc, x0), c))
    }

    /// Coefficients reversed about the degree: `x^deg · f(1/x)`.
    pub fn reciprocal(&self) -> Self {
        Self::new(self.ring.clone(), self.coeffs.iter().rev().copied())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c == GaussianInt::ONE && j > 0 {
                String::new()
            } else {
                format!("({c})")
            };
            match j {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{j}")?,
            }
        }
        Ok(())
    }
}
