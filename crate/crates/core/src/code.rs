//! Constacyclic codes `<g(x)> ⊂ R[x]/<x^n - λ>` over Gaussian residue rings.
//!
//! Three families are built from the unit-group structure of the ring:
//!
//! * quarter length, `n = φ(p^k)/4`, `λ = ±i`, `g(x) = x - g±`;
//! * half length, `n = φ(p^k)/2`, `λ = -1`, `g(x) = (x - g₊)(x - g₋)`;
//! * multi-prime, `n = φ(p_j)`, `λ = 1`, `g(x) = x - e` with `e^n = 1`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, UNITS};
use crate::poly::Poly;
use crate::ring::{GaussianPrimeSpec, ResidueRing};

pub type Matrix = Vec<Vec<GaussianInt>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstacyclicCode {
    ring: Arc<ResidueRing>,
    n: usize,
    lambda: GaussianInt,
    gen: Poly,
    check: Poly,
}

impl ConstacyclicCode {
    /// Assembles a code and checks `gen · check = x^n - λ`.
    pub fn from_parts(
        ring: Arc<ResidueRing>,
        n: usize,
        lambda: GaussianInt,
        gen: Poly,
        check: Poly,
    ) -> Result<Self> {
        let lambda = ring.canonicalize(lambda);
        if !UNITS.contains(&lambda) {
            return Err(Error::InvalidDescriptor(format!("twist {lambda} is not one of 1, i, -1, -i")));
        }
        if !gen.is_monic() {
            return Err(Error::InvalidDescriptor(format!("generator {gen} is not monic")));
        }
        let deg = gen.degree().unwrap_or(0);
        if deg >= n {
            return Err(Error::InvalidDescriptor(format!(
                "generator degree {deg} leaves no message symbols at length {n}"
            )));
        }
        let modulus = Poly::binomial(ring.clone(), n, lambda);
        if gen.mul(&check)? != modulus {
            return Err(Error::IdentityViolation(format!(
                "({gen}) · ({check}) != {modulus}"
            )));
        }
        Ok(Self { ring, n, lambda, gen, check })
    }

    /// Derives the check polynomial as `(x^n - λ) / gen`.
    pub fn from_generator(ring: Arc<ResidueRing>, n: usize, lambda: GaussianInt, gen: Poly) -> Result<Self> {
        let modulus = Poly::binomial(ring.clone(), n, lambda);
        let (check, rem) = modulus.divmod(&gen)?;
        if !rem.is_zero() {
            return Err(Error::IdentityViolation(format!(
                "{gen} does not divide {modulus} (remainder {rem})"
            )));
        }
        Self::from_parts(ring, n, lambda, gen, check)
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> GaussianInt {
        self.lambda
    }

    pub fn gen(&self) -> &Poly {
        &self.gen
    }

    pub fn check(&self) -> &Poly {
        &self.check
    }

    /// Message length `n - deg g`.
    pub fn k(&self) -> usize {
        self.n - self.redundancy()
    }

    /// `deg g`, the number of parity symbols.
    pub fn redundancy(&self) -> usize {
        self.gen.degree().unwrap_or(0)
    }

    /// Row `i` holds the coefficients of `x^i · g(x)`.
    pub fn generator_matrix(&self) -> Matrix {
        let g = self.gen.coeffs();
        (0..self.k())
            .map(|i| {
                let mut row = vec![GaussianInt::ZERO; self.n];
                row[i..i + g.len()].copy_from_slice(g);
                row
            })
            .collect()
    }

    /// Row `i` holds the reciprocal of `h(x)` shifted right by `i`.
    pub fn parity_check_matrix(&self) -> Matrix {
        let k = self.k();
        (0..self.redundancy())
            .map(|i| {
                let mut row = vec![GaussianInt::ZERO; self.n];
                for (off, slot) in row[i..=i + k].iter_mut().enumerate() {
                    *slot = self.check.coeff(k - off);
                }
                row
            })
            .collect()
    }

    pub fn to_poly(&self, v: &[GaussianInt]) -> Result<Poly> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: v.len() });
        }
        Ok(Poly::new(self.ring.clone(), v.iter().copied()))
    }

    /// Non-systematic encoding `c(x) = m(x) · g(x)`.
    pub fn encode(&self, message: &[GaussianInt]) -> Result<Vec<GaussianInt>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), actual: message.len() });
        }
        let m = Poly::new(self.ring.clone(), message.iter().copied());
        Ok(m.mul(&self.gen)?.padded(self.n))
    }

    /// The message `m` with `m(x) · g(x) = c(x)`, if `c` is a codeword.
    pub fn message_of(&self, codeword: &[GaussianInt]) -> Result<Option<Vec<GaussianInt>>> {
        let (q, r) = self.to_poly(codeword)?.divmod(&self.gen)?;
        Ok(r.is_zero().then(|| q.padded(self.k())))
    }

    pub fn is_codeword(&self, v: &[GaussianInt]) -> Result<bool> {
        let (_, r) = self.to_poly(v)?.divmod(&self.gen)?;
        Ok(r.is_zero())
    }

    /// `x · v(x) mod (x^n - λ)`: rotate right, multiplying the wrapped symbol by `λ`.
    pub fn shift(&self, v: &[GaussianInt]) -> Result<Vec<GaussianInt>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: v.len() });
        }
        let mut out = Vec::with_capacity(self.n);
        out.push(self.ring.mul(v[self.n - 1], self.lambda));
        out.extend(v[..self.n - 1].iter().map(|&c| self.ring.canonicalize(c)));
        Ok(out)
    }
}

impl fmt::Display for ConstacyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring:   {}", self.ring)?;
        writeln!(f, "n = {}, k = {}, lambda = {}", self.n, self.k(), self.lambda)?;
        writeln!(f, "g(x) = {}", self.gen)?;
        write!(f, "h(x) = {}", self.check)
    }
}

fn prime_power_ring(p: i64, k_exp: u32) -> Result<Arc<ResidueRing>> {
    if k_exp == 0 {
        return Err(Error::WrongModulusShape("exponent must be at least 1".into()));
    }
    let prime = GaussianPrimeSpec::from_rational(p)?;
    Ok(Arc::new(ResidueRing::prime_power(prime, k_exp)?))
}

/// Length `φ(p^k)/4` code with `λ = i` (plus) or `λ = -i` (minus) and
/// generator `x - root`. The root defaults to the matching member of
/// [`ResidueRing::fourth_root_pair`].
pub fn build_quarter_code(p: i64, k_exp: u32, sign: Sign, root: Option<GaussianInt>) -> Result<ConstacyclicCode> {
    let ring = prime_power_ring(p, k_exp)?;
    let n = (ring.euler_phi() / 4) as usize;
    let lambda = match sign {
        Sign::Plus => GaussianInt::I,
        Sign::Minus => -GaussianInt::I,
    };
    let root = match root {
        Some(r) => ring.canonicalize(r),
        None => {
            let pair = ring.fourth_root_pair()?;
            match sign {
                Sign::Plus => pair.plus,
                Sign::Minus => pair.minus,
            }
        }
    };
    let gen = Poly::linear(ring.clone(), root);
    ConstacyclicCode::from_generator(ring, n, lambda, gen)
}

/// Length `φ(p^k)/2` negacyclic code with generator `(x - r₁)(x - r₂)`.
pub fn build_half_code(p: i64, k_exp: u32, roots: Option<(GaussianInt, GaussianInt)>) -> Result<ConstacyclicCode> {
    let ring = prime_power_ring(p, k_exp)?;
    let n = (ring.euler_phi() / 2) as usize;
    let (a, b) = match roots {
        Some(pair) => pair,
        None => {
            let pair = ring.fourth_root_pair()?;
            (pair.plus, pair.minus)
        }
    };
    let gen = Poly::linear(ring.clone(), a).mul(&Poly::linear(ring.clone(), b))?;
    ConstacyclicCode::from_generator(ring, n, -GaussianInt::ONE, gen)
}

/// Length `φ(p_j)` cyclic code over `G_{π₁···π_m}` with generator `x - e`.
/// `length_from` is the 1-based index `j`; the root defaults to
/// [`ResidueRing::find_subgroup_generator`].
pub fn build_multiprime_code(
    primes: &[GaussianPrimeSpec],
    length_from: usize,
    root: Option<GaussianInt>,
) -> Result<ConstacyclicCode> {
    let ring = Arc::new(ResidueRing::product(primes)?);
    if length_from == 0 || length_from > primes.len() {
        return Err(Error::WrongModulusShape(format!(
            "length index {length_from} out of range 1..={}",
            primes.len()
        )));
    }
    let n = (primes[length_from - 1].p() - 1) as usize;
    let root = match root {
        Some(r) => ring.canonicalize(r),
        None => ring.find_subgroup_generator(length_from)?,
    };
    let gen = Poly::linear(ring.clone(), root);
    ConstacyclicCode::from_generator(ring, n, GaussianInt::ONE, gen)
}

/// Every entry of `a · bᵀ`.
pub fn mul_transpose(ring: &ResidueRing, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .map(|ra| {
            b.iter()
                .map(|rb| {
                    ra.iter()
                        .zip(rb)
                        .fold(GaussianInt::ZERO, |acc, (&x, &y)| ring.add(acc, ring.mul(x, y)))
                })
                .collect()
        })
        .collect()
}

/// Fixed-width text rendering, one row per line.
pub fn render_matrix(m: &Matrix) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn example_one() -> ConstacyclicCode {
        build_half_code(5, 2, Some((g(2, 0), g(1, -1)))).unwrap()
    }

    fn example_two() -> ConstacyclicCode {
        let primes = [GaussianPrimeSpec::from_rational(5).unwrap(), GaussianPrimeSpec::from_rational(13).unwrap()];
        build_multiprime_code(&primes, 1, Some(g(3, 1))).unwrap()
    }

    fn is_zero_matrix(m: &Matrix) -> bool {
        m.iter().flatten().all(|c| c.is_zero())
    }

    #[test]
    fn quarter_codes() {
        let plus = build_quarter_code(5, 2, Sign::Plus, None).unwrap();
        assert_eq!((plus.n(), plus.k(), plus.lambda()), (5, 4, g(0, 1)));
        assert_eq!(plus.gen().coeffs(), &[g(2, 0), g(1, 0)]);
        let minus = build_quarter_code(5, 2, Sign::Minus, None).unwrap();
        assert_eq!(minus.lambda(), g(0, -1));
        assert_eq!(minus.gen().coeffs(), &[g(-2, 0), g(1, 0)]);
        // 1-i is another root of x^5 - i
        let alt = build_quarter_code(5, 2, Sign::Plus, Some(g(1, -1))).unwrap();
        assert_eq!(alt.gen().coeffs(), &[g(-1, 1), g(1, 0)]);
        assert_eq!(build_quarter_code(13, 2, Sign::Plus, None).unwrap().n(), 39);
        // 2 is a root of x^5 + i, not x^5 - i
        assert!(matches!(
            build_quarter_code(5, 2, Sign::Plus, Some(g(2, 0))),
            Err(Error::IdentityViolation(_))
        ));
        assert!(matches!(build_quarter_code(7, 2, Sign::Plus, None), Err(Error::InvalidPrime(_))));
    }

    #[test]
    fn half_code_matches_example_one() {
        let code = example_one();
        assert_eq!((code.n(), code.k(), code.lambda()), (10, 8, g(-1, 0)));
        assert_eq!(code.gen().coeffs(), &[g(-2, 1), g(1, -2), g(1, 0)]);
        assert_eq!(code.ring().delta(), g(3, 4));
        let default = build_half_code(5, 2, None).unwrap();
        assert_eq!(default.gen().degree(), Some(2));
        assert_eq!(build_half_code(13, 2, None).unwrap().n(), 78);
    }

    #[test]
    fn multiprime_matches_example_two() {
        let code = example_two();
        assert_eq!((code.n(), code.k()), (4, 3));
        assert_eq!(code.check().coeffs(), &[g(2, -2), g(4, -1), g(3, 1), g(1, 0)]);
        assert_eq!(code.generator_matrix(), vec![
            vec![g(-3, -1), g(1, 0), g(0, 0), g(0, 0)],
            vec![g(0, 0), g(-3, -1), g(1, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(-3, -1), g(1, 0)],
        ]);
        assert_eq!(code.parity_check_matrix(), vec![vec![g(1, 0), g(3, 1), g(4, -1), g(2, -2)]]);

        let primes = [GaussianPrimeSpec::from_rational(5).unwrap(), GaussianPrimeSpec::from_rational(13).unwrap()];
        let long = build_multiprime_code(&primes, 2, None).unwrap();
        assert_eq!(long.n(), 12);
        assert_eq!(long.ring().multiplicative_order(-long.gen().coeff(0)).unwrap(), 12);
        assert!(matches!(build_multiprime_code(&primes, 3, None), Err(Error::WrongModulusShape(_))));
        assert!(matches!(build_multiprime_code(&primes[..1], 1, None), Err(Error::WrongModulusShape(_))));
    }

    #[test]
    fn matrices_are_orthogonal() {
        let primes = [GaussianPrimeSpec::from_rational(5).unwrap(), GaussianPrimeSpec::from_rational(13).unwrap()];
        let codes = [
            example_one(),
            example_two(),
            build_quarter_code(5, 2, Sign::Plus, None).unwrap(),
            build_quarter_code(13, 2, Sign::Minus, None).unwrap(),
            build_half_code(17, 2, None).unwrap(),
            build_multiprime_code(&primes, 2, None).unwrap(),
        ];
        for code in codes {
            let gm = code.generator_matrix();
            let hm = code.parity_check_matrix();
            assert_eq!((gm.len(), hm.len()), (code.k(), code.n() - code.k()));
            assert!(is_zero_matrix(&mul_transpose(code.ring(), &gm, &hm)), "{code}");
            assert!(code.gen().is_monic());
        }
    }

    #[test]
    fn encoding() {
        let code = example_one();
        let gm = code.generator_matrix();
        let mut msg = vec![GaussianInt::ZERO; 8];
        assert_eq!(code.encode(&msg).unwrap(), vec![GaussianInt::ZERO; 10]);
        msg[0] = GaussianInt::ONE;
        assert_eq!(code.encode(&msg).unwrap(), gm[0]);
        msg.swap(0, 1);
        assert_eq!(code.encode(&msg).unwrap(), gm[1]);
        assert_eq!(code.encode(&msg[..3]), Err(Error::LengthMismatch { expected: 8, actual: 3 }));
    }

    #[test]
    fn membership_and_shift() {
        let code = example_one();
        let msg: Vec<_> = (0..8).map(|j| code.ring().int_to_residue(j * 3 + 1)).collect();
        let c = code.encode(&msg).unwrap();
        assert!(code.is_codeword(&c).unwrap());
        assert_eq!(code.message_of(&c).unwrap(), Some(msg));
        assert!(code.is_codeword(&[GaussianInt::ZERO; 10]).unwrap());
        let mut r = code.generator_matrix()[0].clone();
        r[3] = GaussianInt::I;
        assert!(!code.is_codeword(&r).unwrap());
        assert_eq!(code.message_of(&r).unwrap(), None);

        let mut v = c.clone();
        for _ in 0..25 {
            v = code.shift(&v).unwrap();
            assert!(code.is_codeword(&v).unwrap());
        }
        // 2n shifts multiply every symbol by λ² = 1
        let mut w = c.clone();
        for _ in 0..20 {
            w = code.shift(&w).unwrap();
        }
        assert_eq!(w, c);
    }

    #[test]
    fn corrupted_parts_are_rejected() {
        let code = example_two();
        let ring = code.ring().clone();
        let bad_check = code.check().add(&Poly::one(ring.clone())).unwrap();
        assert!(matches!(
            ConstacyclicCode::from_parts(ring.clone(), 4, GaussianInt::ONE, code.gen().clone(), bad_check),
            Err(Error::IdentityViolation(_))
        ));
        let non_monic = code.gen().scale(GaussianInt::I);
        assert!(matches!(
            ConstacyclicCode::from_parts(ring.clone(), 4, GaussianInt::ONE, non_monic, code.check().clone()),
            Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(
            ConstacyclicCode::from_parts(ring, 4, g(2, 0), code.gen().clone(), code.check().clone()),
            Err(Error::InvalidDescriptor(_))
        ));
    }

    #[test]
    fn text_rendering() {
        let code = example_two();
        let text = render_matrix(&code.parity_check_matrix());
        assert_eq!(text, "1+0i  3+1i  4-1i  2-2i");
    }
}
