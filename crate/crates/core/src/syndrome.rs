//! Coset-leader syndrome decoding of Mannheim-weight-1 errors.
//!
//! The syndrome of a received word is the remainder of `r(x)` modulo `g(x)`.
//! The table maps the syndrome of every error `u·x^j` (`u` a unit, `0 ≤ j < n`)
//! back to that error, so all four associates of a monomial are stored
//! explicitly and lookup is a single hash probe.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::code::ConstacyclicCode;
use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, UNITS};
use crate::poly::Poly;

/// An error pattern of Mannheim weight at most one: `value · x^position`, or
/// the zero error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CosetLeader {
    pub position: Option<usize>,
    pub value: GaussianInt,
}

impl CosetLeader {
    pub const ZERO: Self = Self { position: None, value: GaussianInt::ZERO };

    pub fn monomial(position: usize, value: GaussianInt) -> Self {
        Self { position: Some(position), value }
    }

    pub fn to_vector(&self, n: usize) -> Vec<GaussianInt> {
        let mut v = vec![GaussianInt::ZERO; n];
        if let Some(j) = self.position {
            v[j] = self.value;
        }
        v
    }
}

impl fmt::Display for CosetLeader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            None => write!(f, "0"),
            Some(j) => write!(f, "({})x^{j}", self.value),
        }
    }
}

/// Remainder of `r(x)` divided by the generator polynomial.
pub fn syndrome(code: &ConstacyclicCode, r: &[GaussianInt]) -> Result<Poly> {
    let (_, rem) = code.to_poly(r)?.divmod(code.gen())?;
    Ok(rem)
}

/// Fixed-length lookup key: the remainder's coefficients padded to `deg g`.
fn key_of(code: &ConstacyclicCode, s: &Poly) -> Vec<GaussianInt> {
    s.padded(code.redundancy())
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub leader: Vec<GaussianInt>,
    pub syndrome: Vec<GaussianInt>,
}

#[derive(Clone, Debug)]
pub struct SyndromeTable {
    code: ConstacyclicCode,
    rows: Vec<(CosetLeader, Poly)>,
    index: HashMap<Vec<GaussianInt>, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub syndrome: Poly,
    pub error: CosetLeader,
    pub codeword: Vec<GaussianInt>,
    pub message: Vec<GaussianInt>,
}

impl SyndromeTable {
    /// Fails with [`Error::SyndromeCollision`] if two weight-≤1 errors share a
    /// syndrome.
    pub fn build(code: &ConstacyclicCode) -> Result<Self> {
        let n = code.n();
        let ring = code.ring();
        let mut leaders = vec![CosetLeader::ZERO];
        for j in 0..n {
            for u in UNITS {
                leaders.push(CosetLeader::monomial(j, ring.canonicalize(u)));
            }
        }
        let mut rows = Vec::with_capacity(leaders.len());
        let mut index = HashMap::with_capacity(leaders.len());
        for leader in leaders {
            let s = syndrome(code, &leader.to_vector(n))?;
            if let Some(&prev) = index.get(&key_of(code, &s)) {
                let (first, _): &(CosetLeader, Poly) = &rows[prev];
                return Err(Error::SyndromeCollision {
                    first: first.to_string(),
                    second: leader.to_string(),
                });
            }
            index.insert(key_of(code, &s), rows.len());
            rows.push((leader, s));
        }
        Ok(Self { code: code.clone(), rows, index })
    }

    pub fn code(&self) -> &ConstacyclicCode {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows ordered by position, then unit index `1, i, -1, -i`; zero first.
    pub fn rows(&self) -> &[(CosetLeader, Poly)] {
        &self.rows
    }

    pub fn lookup(&self, s: &Poly) -> Option<CosetLeader> {
        self.index.get(&key_of(&self.code, s)).map(|&idx| self.rows[idx].0)
    }

    pub fn dump(&self) -> Vec<TableRow> {
        self.rows
            .iter()
            .map(|(leader, s)| TableRow {
                leader: leader.to_vector(self.code.n()),
                syndrome: s.coeffs().to_vec(),
            })
            .collect()
    }

    /// Corrects a single error of Mannheim weight at most one.
    pub fn decode(&self, r: &[GaussianInt]) -> Result<Decoded> {
        let code = &self.code;
        let ring = code.ring();
        let s = syndrome(code, r)?;
        let error = self.lookup(&s).ok_or(Error::Uncorrectable)?;
        let codeword: Vec<GaussianInt> = r
            .iter()
            .zip(error.to_vector(code.n()))
            .map(|(&a, e)| ring.sub(a, e))
            .collect();
        let message = code.message_of(&codeword)?.ok_or_else(|| {
            Error::Internal(format!("correcting by {error} left a nonzero remainder"))
        })?;
        Ok(Decoded { syndrome: s, error, codeword, message })
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|(l, _)| l.to_string().len()).max().unwrap_or(1);
        self.rows
            .iter()
            .map(|(leader, s)| format!("{:>width$}  ->  {}", leader.to_string(), s))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_half_code, build_multiprime_code};
    use crate::ring::GaussianPrimeSpec;
    use proptest::prelude::*;

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

    fn vec_of(pairs: &[(i64, i64)]) -> Vec<GaussianInt> {
        pairs.iter().map(|&p| GaussianInt::from(p)).collect()
    }

    #[test]
    fn example_one_trace() {
        let code = example_one();
        let r = vec_of(&[(-2, 1), (1, -2), (1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)]);
        assert_eq!(syndrome(&code, &r).unwrap().coeffs(), &[g(2, 1), g(1, 2)]);
        let table = SyndromeTable::build(&code).unwrap();
        assert_eq!(table.len(), 41);
        let out = table.decode(&r).unwrap();
        assert_eq!(out.error, CosetLeader::monomial(3, GaussianInt::I));
        assert_eq!(out.codeword, vec_of(&[(-2, 1), (1, -2), (1, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)]));
        let mut msg = vec![GaussianInt::ZERO; 8];
        msg[0] = GaussianInt::ONE;
        assert_eq!(out.message, msg);
    }

    #[test]
    fn example_two_trace() {
        let code = example_two();
        let r = vec_of(&[(-3, -1), (1, 0), (0, 1), (0, 0)]);
        assert_eq!(syndrome(&code, &r).unwrap().coeffs(), &[g(1, 4)]);
        let table = SyndromeTable::build(&code).unwrap();
        assert_eq!(table.len(), 17);
        let out = table.decode(&r).unwrap();
        assert_eq!(out.error, CosetLeader::monomial(2, GaussianInt::I));
        assert_eq!(out.codeword, vec_of(&[(-3, -1), (1, 0), (0, 0), (0, 0)]));
        assert_eq!(out.message, vec_of(&[(1, 0), (0, 0), (0, 0)]));
    }

    #[test]
    fn monomial_syndromes() {
        let code = example_one();
        let table = SyndromeTable::build(&code).unwrap();
        let of = |j: usize| {
            table.rows().iter().find(|(l, _)| *l == CosetLeader::monomial(j, GaussianInt::ONE)).unwrap().1.clone()
        };
        assert_eq!(of(2).coeffs(), &[g(2, -1), g(-1, 2)]);
        assert_eq!(of(3).coeffs(), &[g(1, -2), g(2, -1)]);

        let code = example_two();
        let table = SyndromeTable::build(&code).unwrap();
        let got: Vec<_> = (0..4)
            .map(|j| table.rows()[1 + 4 * j].1.coeffs().to_vec())
            .collect();
        assert_eq!(got, vec![vec![g(1, 0)], vec![g(3, 1)], vec![g(4, -1)], vec![g(2, -2)]]);
    }

    #[test]
    fn zero_and_codewords() {
        let code = example_two();
        let table = SyndromeTable::build(&code).unwrap();
        assert_eq!(table.rows()[0].0, CosetLeader::ZERO);
        assert!(table.rows()[0].1.is_zero());
        let c = code.encode(&vec_of(&[(1, 2), (0, -3), (5, 1)])).unwrap();
        let out = table.decode(&c).unwrap();
        assert_eq!(out.error, CosetLeader::ZERO);
        assert_eq!(out.codeword, c);
        assert!(syndrome(&code, &c).unwrap().is_zero());
    }

    #[test]
    fn heavy_error_is_uncorrectable() {
        let code = example_one();
        let table = SyndromeTable::build(&code).unwrap();
        // search for a weight-2 pattern whose syndrome misses the table
        let mut found = false;
        'outer: for j in 0..10 {
            for l in (j + 1)..10 {
                let mut e = vec![GaussianInt::ZERO; 10];
                e[j] = GaussianInt::ONE;
                e[l] = GaussianInt::ONE;
                if table.lookup(&syndrome(&code, &e).unwrap()).is_none() {
                    assert_eq!(table.decode(&e), Err(Error::Uncorrectable));
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn collisions_are_reported() {
        // x - 1 over x^4 - 1 mod 4+7i: every x^j has syndrome 1
        let primes = [GaussianPrimeSpec::from_rational(5).unwrap(), GaussianPrimeSpec::from_rational(13).unwrap()];
        let code = build_multiprime_code(&primes, 1, Some(GaussianInt::ONE)).unwrap();
        assert!(matches!(SyndromeTable::build(&code), Err(Error::SyndromeCollision { .. })));
    }

    #[test]
    fn length_checked() {
        let code = example_two();
        let table = SyndromeTable::build(&code).unwrap();
        assert_eq!(table.decode(&[GaussianInt::ZERO; 3]), Err(Error::LengthMismatch { expected: 4, actual: 3 }));
    }

    fn arb_word() -> impl Strategy<Value = Vec<GaussianInt>> {
        proptest::collection::vec((-6i64..6, -6i64..6).prop_map(GaussianInt::from), 10)
    }

    proptest! {
        #[test]
        fn syndrome_is_linear(a in arb_word(), b in arb_word()) {
            let code = example_one();
            let ring = code.ring();
            let sum: Vec<_> = a.iter().zip(&b).map(|(&x, &y)| ring.add(x, y)).collect();
            let lhs = syndrome(&code, &sum).unwrap();
            let rhs = syndrome(&code, &a).unwrap().add(&syndrome(&code, &b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn syndrome_is_unit_equivariant(a in arb_word(), u in 0usize..4) {
            let code = example_one();
            let ring = code.ring();
            let unit = UNITS[u];
            let scaled: Vec<_> = a.iter().map(|&x| ring.mul(x, unit)).collect();
            prop_assert_eq!(syndrome(&code, &scaled).unwrap(), syndrome(&code, &a).unwrap().scale(unit));
        }

        #[test]
        fn zero_syndrome_iff_codeword(a in arb_word()) {
            let code = example_one();
            prop_assert_eq!(syndrome(&code, &a).unwrap().is_zero(), code.is_codeword(&a).unwrap());
        }
    }
}
