//! Independent ground truth for Laplacian spectra.
//!
//! The oracle never looks at group structure beyond building the power graph:
//! it forms `L = D - A`, computes `det(xI - L)` exactly, and factors the result
//! over the integers. Two characteristic polynomial routes are provided:
//!
//! - Faddeev-LeVerrier over big integers. Every division in the trace
//!   recursion is exact. Quartic cost, so only used for small matrices.
//! - Hessenberg reduction modulo many word-size primes, followed by Chinese
//!   remainder reconstruction. Enough primes are used that their product
//!   exceeds twice the Gershgorin bound `(1 + R)^d` on every coefficient,
//!   where `R` is the largest absolute row sum.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::poly::IntPoly;
use crate::power_graph::{build_power_graph, Graph};
use crate::spectrum::Spectrum;

/// Default dimension cap for the exact characteristic polynomial.
pub const DEFAULT_ORACLE_CAP: usize = 300;

/// Matrices up to this size use Faddeev-LeVerrier under [`CharPolyMethod::Auto`].
pub const FADDEEV_LEVERRIER_MAX: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParams(
                "matrix rows must all have length equal to the row count".into(),
            ));
        }
        Ok(IntMatrix {
            dim,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Symmetric, zero row sums, off-diagonal entries in `{0, -1}`.
    pub fn is_laplacian(&self) -> bool {
        self.is_symmetric()
            && (0..self.dim).all(|i| {
                let row_sum: BigInt = (0..self.dim).map(|j| self.get(i, j)).sum();
                row_sum.is_zero()
                    && (0..self.dim).all(|j| i == j || self.get(i, j).is_zero() || *self.get(i, j) == BigInt::from(-1))
            })
    }

    fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let d = self.dim;
        let mut out = IntMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Largest absolute row sum; bounds every eigenvalue in absolute value.
    fn gershgorin_radius(&self) -> BigUint {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j).magnitude().clone())
                    .sum::<BigUint>()
            })
            .max()
            .unwrap_or_default()
    }
}

/// `L = D - A`.
pub fn laplacian_matrix(graph: &Graph) -> IntMatrix {
    let n = graph.vertex_count();
    let mut m = IntMatrix::zeros(n);
    for v in 0..n {
        let mut deg = 0i64;
        for u in graph.neighbors(v) {
            m.set(v, u, BigInt::from(-1));
            deg += 1;
        }
        m.set(v, v, BigInt::from(deg));
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CharPolyMethod {
    FaddeevLeVerrier,
    Modular,
    #[default]
    Auto,
}

/// Exact `det(xI - M)`.
pub fn char_poly_exact(matrix: &IntMatrix, cap: usize) -> Result<IntPoly> {
    char_poly_with(matrix, cap, CharPolyMethod::Auto)
}

pub fn char_poly_with(matrix: &IntMatrix, cap: usize, method: CharPolyMethod) -> Result<IntPoly> {
    if matrix.dim > cap {
        return Err(Error::CapExceeded {
            what: "matrix",
            size: matrix.dim.to_string(),
            cap,
        });
    }
    Ok(match method {
        CharPolyMethod::FaddeevLeVerrier => char_poly_faddeev_leverrier(matrix),
        CharPolyMethod::Modular => char_poly_modular(matrix),
        CharPolyMethod::Auto if matrix.dim <= FADDEEV_LEVERRIER_MAX => char_poly_faddeev_leverrier(matrix),
        CharPolyMethod::Auto => char_poly_modular(matrix),
    })
}

/// `M_1 = I`, `c_{d-k} = -tr(A M_k)/k`, `M_{k+1} = A M_k + c_{d-k} I`.
pub fn char_poly_faddeev_leverrier(matrix: &IntMatrix) -> IntPoly {
    let d = matrix.dim;
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    let mut m_k = IntMatrix::identity(d);
    for k in 1..=d {
        let am = matrix.mul(&m_k);
        let tr = am.trace();
        let (c, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "trace recursion division must be exact");
        coeffs[d - k] = c.clone();
        m_k = am;
        for i in 0..d {
            m_k.entries[i * d + i] += &c;
        }
    }
    IntPoly::from_coeffs(coeffs)
}

/// Primes below `2^32`, descending.
fn word_primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 32)).rev().filter(|&q| q % 2 == 1 && is_prime(q))
}

/// Characteristic polynomial modulo `q` via Hessenberg reduction.
fn char_poly_mod(matrix: &IntMatrix, q: u64) -> Vec<u64> {
    let n = matrix.dim;
    let big_q = BigInt::from(q);
    let mut h: Vec<u64> = matrix
        .entries
        .iter()
        .map(|v| v.mod_floor(&big_q).to_u64().expect("reduced mod a u64"))
        .collect();
    let at = |i: usize, j: usize| i * n + j;
    let sub = |a: u64, b: u64| if a >= b { a - b } else { a + q - b };

    for j in 0..n.saturating_sub(2) {
        let Some(pivot) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if pivot != j + 1 {
            for c in 0..n {
                h.swap(at(pivot, c), at(j + 1, c));
            }
            for r in 0..n {
                h.swap(at(r, pivot), at(r, j + 1));
            }
        }
        let inv = pow_mod(h[at(j + 1, j)], q - 2, q);
        for i in j + 2..n {
            let u = mul_mod(h[at(i, j)], inv, q);
            if u == 0 {
                continue;
            }
            // row_i -= u * row_{j+1}
            for c in 0..n {
                let t = mul_mod(u, h[at(j + 1, c)], q);
                h[at(i, c)] = sub(h[at(i, c)], t);
            }
            // col_{j+1} += u * col_i
            for r in 0..n {
                let t = mul_mod(u, h[at(r, i)], q);
                h[at(r, j + 1)] = (h[at(r, j + 1)] + t) % q;
            }
        }
    }

    // polys[k] is the characteristic polynomial of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let diag = h[at(m - 1, m - 1)];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % q;
            next[k] = sub(next[k], mul_mod(diag, c, q));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[at(m - i, m - i - 1)], q);
            if t == 0 {
                break;
            }
            let factor = mul_mod(t, h[at(m - i - 1, m - 1)], q);
            if factor == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = sub(next[k], mul_mod(factor, c, q));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 entries")
}

/// Characteristic polynomial by multi-modular Hessenberg reduction and CRT.
pub fn char_poly_modular(matrix: &IntMatrix) -> IntPoly {
    let d = matrix.dim;
    if d == 0 {
        return IntPoly::one();
    }
    let bound = (matrix.gershgorin_radius() + 1u32).pow(d as u32);
    let target = bound << 1u32;
    let mut primes = Vec::new();
    let mut product = BigUint::one();
    for q in word_primes() {
        if product > target {
            break;
        }
        product *= q;
        primes.push(q);
    }

    let residues: Vec<Vec<u64>> = primes.par_iter().map(|&q| char_poly_mod(matrix, q)).collect();

    let mut modulus = BigUint::one();
    let mut values = vec![BigUint::zero(); d + 1];
    for (&q, res) in primes.iter().zip(&residues) {
        let inv = pow_mod((&modulus % q).to_u64().expect("below q"), q - 2, q);
        for (value, &r) in values.iter_mut().zip(res) {
            let current = (&*value % q).to_u64().expect("below q");
            let diff = if r >= current { r - current } else { r + q - current };
            let t = mul_mod(diff, inv, q);
            *value += &modulus * t;
        }
        modulus *= q;
    }
    let half = &modulus >> 1u32;
    let coeffs = values
        .into_iter()
        .map(|v| {
            if v > half {
                BigInt::from_biguint(Sign::Minus, &modulus - v)
            } else {
                BigInt::from(v)
            }
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// Factors a monic polynomial as `prod (x - mu)^mult` with integer roots in
/// `[0, bound]`, scanning roots upward and extracting each to full multiplicity.
pub fn integer_root_factor(poly: &IntPoly, bound: u64) -> Result<Spectrum> {
    if !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut rest = poly.clone();
    let mut spectrum = Spectrum::new();
    for mu in 0..=bound {
        if rest.degree() == Some(0) {
            break;
        }
        let root = BigInt::from(mu);
        let mut mult = 0u64;
        loop {
            let (q, r) = rest.div_linear(&root);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        spectrum.insert(BigUint::from(mu), BigUint::from(mult));
    }
    match rest.degree() {
        Some(0) => Ok(spectrum),
        d => Err(Error::NonIntegralSpectrum {
            bound: bound.to_string(),
            degree: d.unwrap_or(0),
        }),
    }
}

/// Laplacian spectrum of a concrete graph via the exact characteristic polynomial.
pub fn graph_spectrum(graph: &Graph, cap: usize) -> Result<Spectrum> {
    let poly = char_poly_exact(&laplacian_matrix(graph), cap)?;
    integer_root_factor(&poly, graph.vertex_count() as u64)
}

/// Laplacian spectrum of the power graph of `group`, computed from scratch.
pub fn brute_spectrum(group: &GroupSpec, cap: usize) -> Result<Spectrum> {
    group.order_within(cap)?;
    graph_spectrum(&build_power_graph(group, cap)?, cap)
}

/// Whether a polynomial is the Laplacian polynomial of something: monic,
/// constant term zero, next coefficient the negated trace.
pub fn looks_like_laplacian_poly(poly: &IntPoly, matrix: &IntMatrix) -> bool {
    let d = matrix.dim();
    poly.is_monic()
        && poly.degree() == Some(d)
        && (d == 0 || poly.coeff(0).is_zero())
        && (d == 0 || poly.coeff(d - 1) == -matrix.trace())
}
