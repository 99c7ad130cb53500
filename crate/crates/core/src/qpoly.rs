//! Dense integer polynomials in q and their q-analogues.
//!
//! q-factorials use the normalized form Π_{m=1..k} (1 + q + … + q^{m−1})
//! rather than Π (1 − q^m). The (1 − q)^k factors cancel in every Gaussian
//! binomial, so binomials agree under both conventions and all intermediate
//! polynomials keep non-negative coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient of q^k at index k. Never stores trailing zeros.
///
/// Serializes low-to-high as decimal strings, `["1","2","3","1"]` for
/// 1 + 2q + 3q² + q³; deserializes from strings or plain integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Str(String),
        }
        let raw = Vec::<Coeff>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                Coeff::Int(x) => Ok(BigInt::from(x)),
                Coeff::Str(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// q^k
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly(c)
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = IntPoly(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        IntPoly(c)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        let Some(dd) = d.degree() else {
            return Err(Error::Invariant("polynomial division by zero".into()));
        };
        let lead = d.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(IntPoly::zero())
            } else {
                Err(Error::Invariant(format!("{} is not divisible by {}", self, d)))
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (qk, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::Invariant(format!("{} is not divisible by {}", self, d)));
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Invariant(format!("{} is not divisible by {}", self, d)));
        }
        Ok(IntPoly::from_coeffs(quot))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", a)?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", k)?,
            }
        }
        Ok(())
    }
}

/// 1 + q + … + q^{m−1}
fn q_integer(m: usize) -> IntPoly {
    IntPoly::from_coeffs(std::iter::repeat_n(1, m))
}

/// Normalized q-factorial Π_{m=1..k} [m]_q.
pub fn q_factorial(k: usize) -> IntPoly {
    (1..=k).map(q_integer).product()
}

/// Gaussian binomial; zero when `m < 0`, `n < 0` or `n < m`.
pub fn q_binomial(n: i64, m: i64) -> IntPoly {
    if n < 0 || m < 0 || n < m {
        return IntPoly::zero();
    }
    let (n, m) = (n as usize, m as usize);
    let den = &q_factorial(m) * &q_factorial(n - m);
    q_factorial(n)
        .div_exact(&den)
        .expect("q-factorial ratio is a polynomial")
}

/// Number of m-dimensional subspaces of F_q^n, i.e. the Gaussian binomial at q.
pub fn q_binomial_at(n: i64, m: i64, q: u64) -> BigInt {
    if n < 0 || m < 0 || n < m {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m as u32 {
        num *= q.pow(n as u32 - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}
