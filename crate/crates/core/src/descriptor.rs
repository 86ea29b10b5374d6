//! JSON file formats.
//!
//! Gaussian integers are `[re, im]` pairs and polynomials are arrays of pairs
//! in ascending degree. Redundant fields (`delta`, `N`, `p`) are validated on
//! load.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::{ConstacyclicCode, Matrix};
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::poly::Poly;
use crate::ring::{GaussianPrimeSpec, ResidueRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDescriptor {
    pub pi: GaussianInt,
    pub p: i64,
    pub exp: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub factors: Vec<FactorDescriptor>,
    pub delta: GaussianInt,
    #[serde(rename = "N")]
    pub norm: i64,
}

impl From<&ResidueRing> for RingDescriptor {
    fn from(ring: &ResidueRing) -> Self {
        Self {
            factors: ring
                .factors()
                .iter()
                .map(|&(q, exp)| FactorDescriptor { pi: q.pi(), p: q.p(), exp })
                .collect(),
            delta: ring.delta(),
            norm: ring.order(),
        }
    }
}

impl TryFrom<&RingDescriptor> for ResidueRing {
    type Error = Error;

    fn try_from(desc: &RingDescriptor) -> Result<Self> {
        let mut factors = Vec::with_capacity(desc.factors.len());
        for f in &desc.factors {
            let spec = GaussianPrimeSpec::new(f.pi)?;
            if spec.p() != f.p {
                return Err(Error::InvalidDescriptor(format!("norm of {} is {}, not {}", f.pi, spec.p(), f.p)));
            }
            factors.push((spec, f.exp));
        }
        let ring = ResidueRing::from_factors(factors)?;
        if ring.delta() != desc.delta {
            return Err(Error::InvalidDescriptor(format!(
                "factors multiply to {}, descriptor says {}",
                ring.delta(),
                desc.delta
            )));
        }
        if ring.order() != desc.norm {
            return Err(Error::InvalidDescriptor(format!("N = {} but norm(delta) = {}", desc.norm, ring.order())));
        }
        Ok(ring)
    }
}

/// Code file contents. Unknown fields (such as the matrices written by
/// `construct --json`) are ignored on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub ring: RingDescriptor,
    pub n: usize,
    pub lambda: GaussianInt,
    pub gen: Vec<GaussianInt>,
    pub check: Vec<GaussianInt>,
}

impl From<&ConstacyclicCode> for CodeDescriptor {
    fn from(code: &ConstacyclicCode) -> Self {
        Self {
            ring: RingDescriptor::from(code.ring().as_ref()),
            n: code.n(),
            lambda: code.lambda(),
            gen: code.gen().coeffs().to_vec(),
            check: code.check().coeffs().to_vec(),
        }
    }
}

fn canonical_coeffs(ring: &ResidueRing, what: &str, coeffs: &[GaussianInt]) -> Result<()> {
    match coeffs.iter().find(|&&c| !ring.is_canonical(c)) {
        Some(c) => Err(Error::InvalidDescriptor(format!("{what} coefficient {c} is not canonical"))),
        None => Ok(()),
    }
}

impl TryFrom<&CodeDescriptor> for ConstacyclicCode {
    type Error = Error;

    fn try_from(desc: &CodeDescriptor) -> Result<Self> {
        let ring = Arc::new(ResidueRing::try_from(&desc.ring)?);
        canonical_coeffs(&ring, "gen", &desc.gen)?;
        canonical_coeffs(&ring, "check", &desc.check)?;
        let gen = Poly::new(ring.clone(), desc.gen.iter().copied());
        let check = Poly::new(ring.clone(), desc.check.iter().copied());
        ConstacyclicCode::from_parts(ring, desc.n, desc.lambda, gen, check)
    }
}

/// Descriptor plus both matrices, as written by `construct --json`.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructOutput {
    #[serde(flatten)]
    pub code: CodeDescriptor,
    pub generator_matrix: Matrix,
    pub parity_check_matrix: Matrix,
}

impl From<&ConstacyclicCode> for ConstructOutput {
    fn from(code: &ConstacyclicCode) -> Self {
        Self {
            code: CodeDescriptor::from(code),
            generator_matrix: code.generator_matrix(),
            parity_check_matrix: code.parity_check_matrix(),
        }
    }
}

pub fn parse_code(json: &str) -> Result<ConstacyclicCode> {
    let desc: CodeDescriptor =
        serde_json::from_str(json).map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
    ConstacyclicCode::try_from(&desc)
}

pub fn parse_vector(json: &str) -> Result<Vec<GaussianInt>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(format!("expected an array of [re, im] pairs: {e}")))
}
