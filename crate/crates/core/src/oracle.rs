//! Brute-force cross-checks. Nothing here uses square-and-multiply, divisor
//! pruning, or polynomial division; the checks enumerate instead.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{mul_transpose, ConstacyclicCode};
use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, UNITS};
use crate::ring::ResidueRing;
use crate::syndrome::{CosetLeader, SyndromeTable};

pub const DEFAULT_SEED: u64 = 42;

const MAX_RESIDUES: i64 = 100_000;
const MAX_CODEWORDS: u128 = 10_000_000;

/// All `N` residues, in the order `int_to_residue(0), …, int_to_residue(N-1)`.
pub fn brute_residues(ring: &ResidueRing) -> Result<Vec<GaussianInt>> {
    let n = ring.order();
    if n > MAX_RESIDUES {
        return Err(Error::TooLarge(format!("{n} residues exceeds the enumeration limit")));
    }
    let all: Vec<GaussianInt> = (0..n).map(|m| ring.int_to_residue(m)).collect();
    let distinct: HashSet<_> = all.iter().collect();
    if distinct.len() != all.len() {
        return Err(Error::Internal(format!("residue map of {ring} is not injective")));
    }
    Ok(all)
}

/// Order of `x` by repeated multiplication.
pub fn brute_order(ring: &ResidueRing, x: GaussianInt) -> Result<u64> {
    let phi = ring.euler_phi();
    if phi > MAX_RESIDUES {
        return Err(Error::TooLarge(format!("group order {phi} exceeds the enumeration limit")));
    }
    let x = ring.canonicalize(x);
    let mut acc = x;
    // a unit's order divides φ ≤ N, so N steps without reaching 1 means x is no unit
    for t in 1..=ring.order() as u64 {
        if acc == GaussianInt::ONE {
            return Ok(t);
        }
        acc = ring.mul(acc, x);
    }
    Err(Error::NotAUnit(x))
}

/// `Σ_j w_M(c_j)` for a vector of canonical residues.
pub fn vector_weight(v: &[GaussianInt]) -> i64 {
    v.iter().map(|c| c.mannheim_weight()).sum()
}

/// Minimum Mannheim weight over all nonzero codewords, enumerating every
/// message and encoding through the generator matrix.
pub fn brute_min_mannheim_distance(code: &ConstacyclicCode) -> Result<i64> {
    let ring = code.ring();
    let residues = brute_residues(ring)?;
    let base = residues.len() as u128;
    let k = code.k() as u32;
    let total = base
        .checked_pow(k)
        .filter(|&t| t <= MAX_CODEWORDS)
        .ok_or_else(|| Error::TooLarge(format!("{}^{k} messages exceeds the enumeration limit", base)))?;
    let gm = code.generator_matrix();
    let n = code.n();
    (1..total as u64)
        .into_par_iter()
        .map(|index| {
            let mut rest = index as u128;
            let mut word = vec![GaussianInt::ZERO; n];
            for row in &gm {
                let m = residues[(rest % base) as usize];
                rest /= base;
                if m.is_zero() {
                    continue;
                }
                for (slot, &g) in word.iter_mut().zip(row) {
                    *slot = ring.add(*slot, ring.mul(m, g));
                }
            }
            vector_weight(&word)
        })
        .min()
        .ok_or_else(|| Error::Internal("code has no nonzero messages".into()))
}

#[derive(Clone, Copy, Debug)]
pub enum MessageSample {
    Random { count: usize, seed: u64 },
    Exhaustive,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub message: Vec<GaussianInt>,
    pub error: Vec<GaussianInt>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecodeReport {
    pub trials: u64,
    pub failure_count: u64,
    /// First failures only; `failure_count` has the total.
    pub failures: Vec<Failure>,
    pub table_size: usize,
    pub distinct_syndromes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<i64>,
}

impl DecodeReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.distinct_syndromes
    }
}

const FAILURES_KEPT: usize = 20;

/// Syndromes `H·eᵀ` of every weight-≤1 error are pairwise distinct.
fn parity_syndromes_distinct(code: &ConstacyclicCode) -> bool {
    let n = code.n();
    let hm = code.parity_check_matrix();
    let mut errors = vec![CosetLeader::ZERO.to_vector(n)];
    for j in 0..n {
        for u in UNITS {
            errors.push(CosetLeader::monomial(j, code.ring().canonicalize(u)).to_vector(n));
        }
    }
    let syndromes = mul_transpose(code.ring(), &errors, &hm);
    let distinct: HashSet<_> = syndromes.iter().collect();
    distinct.len() == errors.len()
}

fn messages(code: &ConstacyclicCode, sample: MessageSample) -> Result<Vec<Vec<GaussianInt>>> {
    let ring = code.ring();
    let k = code.k();
    match sample {
        MessageSample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..count)
                .map(|_| (0..k).map(|_| ring.int_to_residue(rng.gen_range(0..ring.order()))).collect())
                .collect())
        }
        MessageSample::Exhaustive => {
            let residues = brute_residues(ring)?;
            let base = residues.len() as u128;
            let total = base
                .checked_pow(k as u32)
                .filter(|&t| t <= MAX_CODEWORDS)
                .ok_or_else(|| Error::TooLarge(format!("{base}^{k} messages exceeds the enumeration limit")))?;
            Ok((0..total)
                .map(|mut rest| {
                    (0..k)
                        .map(|_| {
                            let m = residues[(rest % base) as usize];
                            rest /= base;
                            m
                        })
                        .collect()
                })
                .collect())
        }
    }
}

/// Encodes each sampled message, adds each of the `4n + 1` weight-≤1 errors,
/// decodes, and compares against the originals.
pub fn exhaustive_decode_check(
    code: &ConstacyclicCode,
    table: &SyndromeTable,
    sample: MessageSample,
) -> Result<DecodeReport> {
    let ring = code.ring();
    let n = code.n();
    let mut errors = vec![CosetLeader::ZERO];
    for j in 0..n {
        for u in UNITS {
            errors.push(CosetLeader::monomial(j, ring.canonicalize(u)));
        }
    }
    let msgs = messages(code, sample)?;

    let per_message = |m: &Vec<GaussianInt>| -> (u64, Vec<Failure>) {
        let mut fails = Vec::new();
        let c = match code.encode(m) {
            Ok(c) => c,
            Err(err) => {
                fails.push(Failure { message: m.clone(), error: vec![], detail: err.to_string() });
                return (errors.len() as u64, fails);
            }
        };
        for e in &errors {
            let ev = e.to_vector(n);
            let r: Vec<_> = c.iter().zip(&ev).map(|(&a, &b)| ring.add(a, b)).collect();
            let detail = match table.decode(&r) {
                Ok(out) if out.codeword == c && out.error == *e && out.message == *m => continue,
                Ok(out) => format!("decoded error {} instead of {e}", out.error),
                Err(err) => err.to_string(),
            };
            fails.push(Failure { message: m.clone(), error: ev, detail });
        }
        (errors.len() as u64, fails)
    };

    let (trials, failure_count, failures) = msgs
        .par_iter()
        .map(per_message)
        .map(|(t, f)| (t, f.len() as u64, f))
        .reduce(
            || (0, 0, Vec::new()),
            |(t1, c1, mut f1), (t2, c2, f2)| {
                f1.extend(f2);
                f1.truncate(FAILURES_KEPT);
                (t1 + t2, c1 + c2, f1)
            },
        );

    Ok(DecodeReport {
        trials,
        failure_count,
        failures,
        table_size: table.len(),
        distinct_syndromes: table.len() == 4 * n + 1 && parity_syndromes_distinct(code),
        min_distance: None,
    })
}
