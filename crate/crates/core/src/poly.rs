//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients are stored constant term first with no trailing zeros, so the
/// zero polynomial is the empty vector and equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        IntPoly {
            coeffs: vec![-root, BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies in place by `(x - root)`.
    pub fn mul_linear(&mut self, root: &BigInt) {
        if self.coeffs.is_empty() {
            return;
        }
        // new_k = old_{k-1} - root * old_k
        self.coeffs.insert(0, BigInt::zero());
        if root.is_zero() {
            return;
        }
        for k in 0..self.coeffs.len() - 1 {
            let t = &self.coeffs[k + 1] * root;
            self.coeffs[k] -= t;
        }
    }

    /// Synthetic division by `(x - root)`: returns quotient and remainder.
    pub fn div_linear(&self, root: &BigInt) -> (IntPoly, BigInt) {
        let Some(deg) = self.degree() else {
            return (IntPoly::zero(), BigInt::zero());
        };
        if deg == 0 {
            return (IntPoly::zero(), self.coeffs[0].clone());
        }
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for k in (0..=deg).rev() {
            carry = &carry * root + &self.coeffs[k];
            if k > 0 {
                quotient[k - 1] = carry.clone();
            }
        }
        (IntPoly::from_coeffs(quotient), carry)
    }

    /// `P(x - c)`, computed by repeated synthetic division (Taylor shift).
    pub fn shift(&self, c: &BigInt) -> IntPoly {
        let neg = -c;
        let mut work = self.coeffs.clone();
        let d = work.len();
        // Horner-style Taylor expansion at -c.
        for i in 0..d {
            for k in (i..d - 1).rev() {
                let t = &work[k + 1] * &neg;
                work[k] += t;
            }
        }
        IntPoly::from_coeffs(work)
    }

    pub fn pow(&self, mut e: u64) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Exact coefficient-wise equality.
pub fn poly_equal(a: &IntPoly, b: &IntPoly) -> bool {
    a == b
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    /// Coefficient list, constant first, as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}
