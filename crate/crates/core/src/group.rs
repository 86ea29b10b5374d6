//! Structure of the unit group `G_δ*`.
//!
//! For `δ = π^k` the unit group is cyclic of order `φ(p^k)`, and every
//! generator `g` has `g^(φ/4) = ±i`. For `δ = π₁···π_m` the group is a direct
//! product; the elements congruent to 1 modulo all primes except `π_j` form a
//! cyclic subgroup isomorphic to `G_{π_j}*`.

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::ring::{prime_divisors, ResidueRing};

/// A pair of generators whose `φ/4`-th powers are `i` and `-i` respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourthRootPair {
    pub plus: GaussianInt,
    pub minus: GaussianInt,
}

impl ResidueRing {
    /// Least `t ≥ 1` with `x^t = 1`, found by stripping prime factors from `φ(N)`.
    pub fn multiplicative_order(&self, x: GaussianInt) -> Result<u64> {
        let x = self.canonicalize(x);
        if !self.is_unit(x) {
            return Err(Error::NotAUnit(x));
        }
        let one = self.int_to_residue(1);
        let phi = self.euler_phi();
        let mut t = phi as u64;
        for q in prime_divisors(phi) {
            let q = q as u64;
            while t.is_multiple_of(q) && self.power(x, t / q) == one {
                t /= q;
            }
        }
        Ok(t)
    }

    fn is_generator(&self, x: GaussianInt, phi: i64, primes: &[i64]) -> bool {
        let one = self.int_to_residue(1);
        self.power(x, phi as u64) == one
            && primes.iter().all(|&q| self.power(x, (phi / q) as u64) != one)
    }

    /// Generators of `G_δ*` in scan order: `int_to_residue(2), int_to_residue(3), …`.
    pub fn generators(&self) -> Result<impl Iterator<Item = GaussianInt> + '_> {
        if !self.is_prime_power() {
            return Err(Error::NoGenerator);
        }
        let phi = self.euler_phi();
        let primes = prime_divisors(phi);
        Ok((2..self.order())
            .map(|m| self.int_to_residue(m))
            .filter(|&x| self.is_unit(x))
            .filter(move |&x| self.is_generator(x, phi, &primes)))
    }

    /// The first generator in scan order. Fails for multi-prime moduli, whose
    /// unit group is not cyclic.
    pub fn find_generator(&self) -> Result<GaussianInt> {
        let mut gens = self.generators()?;
        gens.next()
            .ok_or_else(|| Error::Internal(format!("no generator found for {self}")))
    }

    /// Generators `g₊, g₋` with `g₊^(φ/4) = i` and `g₋^(φ/4) = -i`.
    ///
    /// The negation of a generator has the opposite fourth-root value exactly
    /// when `φ/4` is odd (`p ≡ 5 mod 8`). Otherwise the missing slot is filled
    /// by continuing the generator scan.
    pub fn fourth_root_pair(&self) -> Result<FourthRootPair> {
        if !self.is_prime_power() {
            return Err(Error::WrongModulusShape(
                "fourth-root pairs need a prime-power modulus".into(),
            ));
        }
        let i = self.canonicalize(GaussianInt::I);
        let minus_i = self.neg(i);
        let quarter = (self.euler_phi() / 4) as u64;
        let g = self.find_generator()?;
        let value = self.power(g, quarter);
        let (first, want) = if value == i {
            (g, minus_i)
        } else if value == minus_i {
            (g, i)
        } else {
            return Err(Error::Internal(format!(
                "generator {g} has g^{quarter} = {value}, expected ±i"
            )));
        };
        let negated = self.neg(g);
        let other = if quarter % 2 == 1 {
            debug_assert_eq!(self.power(negated, quarter), want);
            negated
        } else {
            self.generators()?
                .find(|&h| self.power(h, quarter) == want)
                .ok_or_else(|| Error::Internal(format!("no generator with value {want}")))?
        };
        Ok(if value == i {
            FourthRootPair { plus: first, minus: other }
        } else {
            FourthRootPair { plus: other, minus: first }
        })
    }

    /// An element of order `φ(p_j)` that is congruent to 1 modulo every prime
    /// factor other than `π_j`. `which_factor` is 1-based.
    pub fn find_subgroup_generator(&self, which_factor: usize) -> Result<GaussianInt> {
        if self.is_prime_power() {
            return Err(Error::WrongModulusShape(
                "subgroup generators need a product of distinct primes".into(),
            ));
        }
        let factors = self.factors();
        if which_factor == 0 || which_factor > factors.len() {
            return Err(Error::WrongModulusShape(format!(
                "factor index {which_factor} out of range 1..={}",
                factors.len()
            )));
        }
        let target = factors[which_factor - 1].0;
        let others: Vec<GaussianInt> = factors
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != which_factor - 1)
            .map(|(_, (q, _))| q.pi())
            .collect();
        let want = (target.p() - 1) as u64;
        (2..self.order())
            .map(|m| self.int_to_residue(m))
            .filter(|&x| {
                others
                    .iter()
                    .all(|&pi| ResidueRing::divides(pi, x - GaussianInt::ONE))
            })
            .find(|&x| self.multiplicative_order(x).ok() == Some(want))
            .ok_or_else(|| Error::Internal(format!("no subgroup generator for factor {which_factor}")))
    }
}
