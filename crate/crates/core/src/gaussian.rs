//! Exact arithmetic on Gaussian integers `a + bi`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A Gaussian integer `re + im·i`.
///
/// Components are fixed-width. Every residue ring in this crate reduces after
/// each multiplication, so products never exceed the square of the modulus norm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

/// The four units of `Z[i]`, in the fixed order `1, i, -1, -i`.
pub const UNITS: [GaussianInt; 4] = [
    GaussianInt::new(1, 0),
    GaussianInt::new(0, 1),
    GaussianInt::new(-1, 0),
    GaussianInt::new(0, -1),
];

pub fn units() -> [GaussianInt; 4] {
    UNITS
}

impl GaussianInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const I: Self = Self::new(0, 1);

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub const fn from_int(re: i64) -> Self {
        Self { re, im: 0 }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    /// `|re| + |im|`. Only meaningful on canonical residues.
    pub fn mannheim_weight(self) -> i64 {
        self.re.abs() + self.im.abs()
    }

    /// All unit multiples of `self`, deduplicated (so `0` has a single associate).
    pub fn associates(self) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::with_capacity(4);
        for u in UNITS {
            let a = u * self;
            if !out.contains(&a) {
                out.push(a);
            }
        }
        out
    }

    /// Nearest-integer quotient `[z / w]`, rounding real and imaginary parts
    /// independently. Exact halves round toward `+∞`.
    pub fn round_div(self, w: Self) -> Result<Self, Error> {
        if w.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = i128::from(w.norm());
        let (zr, zi) = (i128::from(self.re), i128::from(self.im));
        let (wr, wi) = (i128::from(w.re), i128::from(w.im));
        // z * conj(w)
        let num_re = zr * wr + zi * wi;
        let num_im = zi * wr - zr * wi;
        Ok(Self::new(round_ratio(num_re, n), round_ratio(num_im, n)))
    }

    /// `self^k` over `Z[i]` without any reduction.
    pub fn pow(self, mut k: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }
}

/// `floor(a/n + 1/2)` for `n > 0`.
fn round_ratio(a: i128, n: i128) -> i64 {
    let q = (2 * a + n).div_euclid(2 * n);
    i64::try_from(q).expect("rounded quotient exceeds i64")
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussianInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for GaussianInt {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        Self::from_int(re)
    }
}

impl From<(i64, i64)> for GaussianInt {
    fn from((re, im): (i64, i64)) -> Self {
        Self::new(re, im)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

impl FromStr for GaussianInt {
    type Err = Error;

    /// Accepts `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` (whitespace ignored).
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a Gaussian integer: {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return t.parse::<i64>().map(Self::from_int).map_err(|_| bad());
        };
        // split at the last sign that is not the leading character
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            0
        } else {
            re_part.parse::<i64>().map_err(|_| bad())?
        };
        let im = match im_part {
            "" | "+" => 1,
            "-" => -1,
            other => other.parse::<i64>().map_err(|_| bad())?,
        };
        Ok(Self::new(re, im))
    }
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.re, self.im].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [re, im] = <[i64; 2]>::deserialize(deserializer)?;
        Ok(Self::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    /// Nearest lattice point by enumerating every candidate within distance 2
    /// of the truncated quotient, ranking by componentwise distance.
    fn round_div_oracle(z: GaussianInt, w: GaussianInt) -> GaussianInt {
        let n = w.norm() as f64;
        let num = z * w.conj();
        let (xr, xi) = (num.re as f64 / n, num.im as f64 / n);
        let mut best = None;
        for a in (xr as i64 - 2)..=(xr as i64 + 2) {
            for b in (xi as i64 - 2)..=(xi as i64 + 2) {
                let key = ((a as f64 - xr).abs(), (b as f64 - xi).abs());
                if key.0 < 0.5 && key.1 < 0.5 {
                    best = Some(g(a, b));
                }
            }
        }
        best.expect("no tie for odd norms")
    }

    #[test]
    fn addition() {
        assert_eq!(g(2, 1) + GaussianInt::ZERO, g(2, 1));
        assert_eq!(g(3, 4) + g(-3, -4), GaussianInt::ZERO);
        assert_eq!(g(1, -2) + g(-2, 1), g(-1, -1));
    }

    #[test]
    fn multiplication() {
        assert_eq!(g(2, 1) * g(2, -1), g(5, 0));
        assert_eq!(g(2, 1) * g(2, 1), g(3, 4));
        assert_eq!(GaussianInt::I * g(2, -1), g(1, 2));
    }

    #[test]
    fn conj_and_norm() {
        assert_eq!(g(2, 1).conj(), g(2, -1));
        assert_eq!(g(5, 0).conj(), g(5, 0));
        assert_eq!(g(3, 4).conj().conj(), g(3, 4));
        assert_eq!(g(2, 1).norm(), 5);
        assert_eq!(g(3, 2).norm(), 13);
        assert_eq!(GaussianInt::ZERO.norm(), 0);
    }

    #[test]
    fn unit_list_and_associates() {
        assert_eq!(units(), [g(1, 0), g(0, 1), g(-1, 0), g(0, -1)]);
        assert_eq!(GaussianInt::ZERO.associates(), vec![GaussianInt::ZERO]);
        assert_eq!(g(0, 1).associates(), vec![g(0, 1), g(-1, 0), g(0, -1), g(1, 0)]);
    }

    #[test]
    fn rounded_division() {
        assert_eq!(g(3, 0).round_div(g(2, 1)).unwrap(), g(1, -1));
        assert_eq!(g(3, 0).round_div(g(2, 1)).unwrap(), round_div_oracle(g(3, 0), g(2, 1)));
        assert_eq!(g(32, 0).round_div(g(3, 4)).unwrap(), g(4, -5));
        assert_eq!(g(32, 0).round_div(g(3, 4)).unwrap(), round_div_oracle(g(32, 0), g(3, 4)));
        assert_eq!(GaussianInt::ZERO.round_div(g(7, -3)).unwrap(), GaussianInt::ZERO);
        assert_eq!(g(1, 1).round_div(GaussianInt::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn halves_round_up() {
        // 1/2 and -1/2 both go toward +inf
        assert_eq!(g(1, 0).round_div(g(2, 0)).unwrap(), g(1, 0));
        assert_eq!(g(-1, 0).round_div(g(2, 0)).unwrap(), g(0, 0));
        assert_eq!(g(0, -3).round_div(g(2, 0)).unwrap(), g(0, -1));
    }

    #[test]
    fn weights() {
        assert_eq!(g(-2, 1).mannheim_weight(), 3);
        assert_eq!(GaussianInt::ZERO.mannheim_weight(), 0);
        for u in UNITS {
            assert_eq!(u.mannheim_weight(), 1);
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(g(-2, 1).to_string(), "-2+1i");
        assert_eq!(g(3, -4).to_string(), "3-4i");
        assert_eq!(g(0, 0).to_string(), "0+0i");
        for (s, v) in [
            ("3+1i", g(3, 1)),
            ("1-1i", g(1, -1)),
            ("-2+1i", g(-2, 1)),
            ("2", g(2, 0)),
            ("-7", g(-7, 0)),
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            ("-3i", g(0, -3)),
            ("3+i", g(3, 1)),
            (" 4 - 2i ", g(4, -2)),
        ] {
            assert_eq!(s.parse::<GaussianInt>().unwrap(), v, "{s}");
        }
        for s in ["", "abc", "1+2j", "1+i+i", "+-1i"] {
            assert!(s.parse::<GaussianInt>().is_err(), "{s}");
        }
    }

    #[test]
    fn json_is_pair() {
        assert_eq!(serde_json::to_string(&g(-3, -1)).unwrap(), "[-3,-1]");
        assert_eq!(serde_json::from_str::<GaussianInt>("[4,7]").unwrap(), g(4, 7));
        assert!(serde_json::from_str::<GaussianInt>("[4]").is_err());
    }

    fn small() -> impl Strategy<Value = GaussianInt> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #[test]
        fn remainder_shrinks_norm(z in small(), w in small()) {
            prop_assume!(!w.is_zero());
            let q = z.round_div(w).unwrap();
            prop_assert!((z - q * w).norm() < w.norm());
        }

        #[test]
        fn norm_is_multiplicative(x in small(), y in small()) {
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn weight_is_unit_invariant(z in small()) {
            for u in UNITS {
                prop_assert_eq!((u * z).mannheim_weight(), z.mannheim_weight());
            }
        }

        #[test]
        fn conj_is_multiplicative(x in small(), y in small()) {
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
        }

        #[test]
        fn display_parses_back(z in small()) {
            prop_assert_eq!(z.to_string().parse::<GaussianInt>().unwrap(), z);
        }
    }
}
