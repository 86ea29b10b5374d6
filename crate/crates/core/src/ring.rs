//! Residue-class rings `Z[i]/<δ>` and their canonical representatives.
//!
//! A residue `z mod δ` is represented by `z - [z·conj(δ)/N(δ)]·δ`, where the
//! bracket rounds real and imaginary parts to the nearest integer. When the
//! real and imaginary parts of `δ` are coprime, the ring is isomorphic to
//! `Z_N` with `N = N(δ)`; every modulus accepted here has that property.

use std::fmt;

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;

/// Largest supported modulus norm; keeps every unreduced product inside `i64`.
pub const MAX_NORM: i64 = 1 << 30;

/// A Gaussian prime `π = a + bi` lying over a rational prime `p = a² + b² = 4n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussianPrimeSpec {
    pi: GaussianInt,
    p: i64,
    n: i64,
}

impl GaussianPrimeSpec {
    pub fn new(pi: GaussianInt) -> Result<Self> {
        let p = pi.norm();
        if !is_prime(p) {
            return Err(Error::InvalidPrime(format!("norm of {pi} is {p}, not a rational prime")));
        }
        if p % 4 != 1 {
            return Err(Error::InvalidPrime(format!("norm of {pi} is {p}, not 1 mod 4")));
        }
        if p > MAX_NORM {
            return Err(Error::InvalidPrime(format!("{p} exceeds the supported range")));
        }
        Ok(Self { pi, p, n: (p - 1) / 4 })
    }

    /// The prime `a + bi` with `a > b > 0` and `a² + b² = p`.
    pub fn from_rational(p: i64) -> Result<Self> {
        if !is_prime(p) || p % 4 != 1 {
            return Err(Error::InvalidPrime(format!("{p} is not a prime congruent to 1 mod 4")));
        }
        let mut b = 1;
        while 2 * b * b < p {
            let a_sq = p - b * b;
            let a = isqrt(a_sq);
            if a * a == a_sq {
                return Self::new(GaussianInt::new(a, b));
            }
            b += 1;
        }
        Err(Error::Internal(format!("{p} ≡ 1 mod 4 but no two-square decomposition found")))
    }

    pub fn pi(&self) -> GaussianInt {
        self.pi
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// `(p - 1) / 4`.
    pub fn n(&self) -> i64 {
        self.n
    }
}

/// `Z[i]/<δ>` for `δ = π^k` or `δ = π₁···π_m` with pairwise distinct norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRing {
    delta: GaussianInt,
    norm: i64,
    factors: Vec<(GaussianPrimeSpec, u32)>,
}

impl ResidueRing {
    pub fn prime_power(prime: GaussianPrimeSpec, exp: u32) -> Result<Self> {
        Self::from_factors(vec![(prime, exp)])
    }

    pub fn product(primes: &[GaussianPrimeSpec]) -> Result<Self> {
        if primes.len() < 2 {
            return Err(Error::WrongModulusShape(
                "a product modulus needs at least two primes".into(),
            ));
        }
        Self::from_factors(primes.iter().map(|&q| (q, 1)).collect())
    }

    /// Validates the factorization shape and multiplies it out.
    pub fn from_factors(factors: Vec<(GaussianPrimeSpec, u32)>) -> Result<Self> {
        match factors.as_slice() {
            [] => return Err(Error::WrongModulusShape("empty factorization".into())),
            [(_, 0)] => return Err(Error::WrongModulusShape("exponent must be at least 1".into())),
            [_] => {}
            many => {
                if many.iter().any(|&(_, e)| e != 1) {
                    return Err(Error::WrongModulusShape(
                        "multi-prime moduli must be squarefree".into(),
                    ));
                }
                for (idx, (a, _)) in many.iter().enumerate() {
                    if many[idx + 1..].iter().any(|(b, _)| b.p == a.p) {
                        return Err(Error::WrongModulusShape(format!(
                            "prime {} appears more than once",
                            a.p
                        )));
                    }
                }
            }
        }
        let mut delta = GaussianInt::ONE;
        let mut norm: i64 = 1;
        for &(q, e) in &factors {
            for _ in 0..e {
                norm = norm
                    .checked_mul(q.p)
                    .filter(|&v| v <= MAX_NORM)
                    .ok_or_else(|| Error::TooLarge("modulus norm exceeds 2^30".into()))?;
                delta = delta * q.pi;
            }
        }
        debug_assert_eq!(delta.norm(), norm);
        Ok(Self { delta, norm, factors })
    }

    pub fn delta(&self) -> GaussianInt {
        self.delta
    }

    /// `N = norm(δ)`, the number of residues.
    pub fn order(&self) -> i64 {
        self.norm
    }

    pub fn factors(&self) -> &[(GaussianPrimeSpec, u32)] {
        &self.factors
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn canonicalize(&self, z: GaussianInt) -> GaussianInt {
        reduce(z, self.delta)
    }

    pub fn is_canonical(&self, z: GaussianInt) -> bool {
        self.canonicalize(z) == z
    }

    pub fn add(&self, x: GaussianInt, y: GaussianInt) -> GaussianInt {
        self.canonicalize(x + y)
    }

    pub fn sub(&self, x: GaussianInt, y: GaussianInt) -> GaussianInt {
        self.canonicalize(x - y)
    }

    pub fn neg(&self, x: GaussianInt) -> GaussianInt {
        self.canonicalize(-x)
    }

    pub fn mul(&self, x: GaussianInt, y: GaussianInt) -> GaussianInt {
        self.canonicalize(x * y)
    }

    /// Mannheim distance `w_M(canonicalize(x - y))`.
    pub fn mannheim_distance(&self, x: GaussianInt, y: GaussianInt) -> i64 {
        self.sub(x, y).mannheim_weight()
    }

    pub fn is_unit(&self, x: GaussianInt) -> bool {
        self.inverse(x).is_ok()
    }

    /// Multiplicative inverse by the extended Euclidean algorithm over `Z[i]`.
    pub fn inverse(&self, x: GaussianInt) -> Result<GaussianInt> {
        let x = self.canonicalize(x);
        let (mut old_r, mut r) = (self.delta, x);
        let (mut old_t, mut t) = (GaussianInt::ZERO, GaussianInt::ONE);
        while !r.is_zero() {
            let q = old_r.round_div(r)?;
            (old_r, r) = (r, old_r - q * r);
            (old_t, t) = (t, self.canonicalize(old_t - q * t));
        }
        // old_t * x ≡ old_r (mod δ); old_r is the gcd
        if !old_r.is_unit() {
            return Err(Error::NotAUnit(x));
        }
        Ok(self.mul(old_t, old_r.conj()))
    }

    /// `φ(N) = Π p^(k-1) (p - 1)`.
    pub fn euler_phi(&self) -> i64 {
        self.factors
            .iter()
            .map(|&(q, e)| q.p.pow(e - 1) * (q.p - 1))
            .product()
    }

    /// The image of a rational integer under `Z → Z[i]/<δ>`.
    pub fn int_to_residue(&self, m: i64) -> GaussianInt {
        self.canonicalize(GaussianInt::from_int(m))
    }

    /// The unique `m ∈ [0, N)` with `int_to_residue(m) = x`.
    pub fn residue_to_int(&self, x: GaussianInt) -> Result<i64> {
        let x = self.canonicalize(x);
        // Find q with Im(x + q·δ) = 0, i.e. q.re·δ.im + q.im·δ.re = -Im(x).
        let (g, s, t) = ext_gcd(self.delta.im, self.delta.re);
        if g.abs() != 1 {
            return Err(Error::Internal(format!(
                "real and imaginary parts of {} are not coprime",
                self.delta
            )));
        }
        let scale = -x.im * g;
        let q = GaussianInt::new(scale * s, scale * t);
        let lifted = x + q * self.delta;
        if lifted.im != 0 {
            return Err(Error::Internal(format!("failed to lift {x} to Z")));
        }
        let m = lifted.re.rem_euclid(self.norm);
        if self.int_to_residue(m) != x {
            return Err(Error::Internal(format!("lift of {x} does not round-trip")));
        }
        Ok(m)
    }

    /// `x^k` by square-and-multiply, reducing after every product.
    pub fn power(&self, x: GaussianInt, mut k: u64) -> GaussianInt {
        let mut base = self.canonicalize(x);
        let mut acc = self.int_to_residue(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// True when `modulus` divides `z` in `Z[i]`.
    pub fn divides(modulus: GaussianInt, z: GaussianInt) -> bool {
        reduce(z, modulus).is_zero()
    }
}

impl fmt::Display for ResidueRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_(")?;
        for (idx, (q, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "·")?;
            }
            write!(f, "({})", q.pi)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        write!(f, ") = G_({})", self.delta)
    }
}

fn reduce(z: GaussianInt, modulus: GaussianInt) -> GaussianInt {
    if modulus.is_zero() {
        return z;
    }
    let q = z.round_div(modulus).expect("nonzero modulus");
    z - q * modulus
}

/// Returns `(g, s, t)` with `s·a + t·b = g = ±gcd(a, b)`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

fn isqrt(v: i64) -> i64 {
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

pub(crate) fn is_prime(v: i64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub(crate) fn prime_divisors(mut v: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}
