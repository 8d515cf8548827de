//! Closed-form Laplacian spectra for `Z_{p^m}^n` and `Z_2^r x Z_4^s`, the
//! element and degree counting formulas for `Z_2^r x Z_4^s`, and the
//! completeness, flower and planarity classifiers.
//!
//! Each spectrum is assembled from a fixed list of factor families
//! ([`EigenvalueTerm`]). Families whose multiplicity evaluates to zero are kept
//! in the term list, so callers can report them, but never reach the emitted
//! [`Spectrum`]. When two families produce the same eigenvalue their
//! multiplicities add, which is what the product form of the polynomial means.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{big_pow, is_prime, two_pow};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::spectrum::Spectrum;

pub use crate::expr::euler_phi_prime_power;

/// Parameters of `Z_{p^m}^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZpmnParams {
    p: u64,
    m: u32,
    n: u32,
}

impl ZpmnParams {
    pub fn new(p: u64, m: u32, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "m and n must be positive, got m={m}, n={n}"
            )));
        }
        Ok(ZpmnParams { p, m, n })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(p^n - 1)/(p - 1)`, the number of cyclic subgroups of order `p`.
    pub fn l(&self) -> BigUint {
        (big_pow(self.p, self.n as u64) - 1u32) / (self.p - 1)
    }

    /// `p^(mn)`.
    pub fn group_order(&self) -> BigUint {
        big_pow(self.p, self.m as u64 * self.n as u64)
    }

    fn pow(&self, k: u64) -> BigUint {
        big_pow(self.p, k)
    }

    fn phi(&self, k: u32) -> BigUint {
        euler_phi_prime_power(self.p, k).expect("k >= 1")
    }

    pub fn group(&self) -> GroupSpec {
        GroupSpec::homocyclic(self.p, self.m, self.n).expect("validated parameters")
    }
}

impl fmt::Display for ZpmnParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.m, self.n)
    }
}

/// Which factor of a closed-form polynomial produced an eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermSource {
    /// `x`
    Zero,
    /// `x - |G|`
    GroupOrder,
    /// `(x - 1)^(l-1)`, or `(x - 1)^(2^(r+s) - 2)`.
    One,
    /// `(x - p^m)^(...)(phi(p^m) - 1)`.
    TopPower,
    /// `(x - p^i)^(...)(p^(n-1) - 1)` for `1 <= i < m`.
    Power(u32),
    /// `(x - c_i)^(...)phi(p^i)` for `1 <= i < m`.
    Joined(u32),
    /// `(x - 2)^((2^s - 1)(2^(r+s-1) - 1))`.
    Two,
    /// `(x - 4)^(2^(r+s-1)(2^s - 1))`.
    Four,
    /// `(x - 2 - 2^(r+s))^(2^s - 1)`.
    Hub,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenvalueTerm {
    #[serde(serialize_with = "decimal")]
    pub eigenvalue: BigUint,
    #[serde(serialize_with = "decimal")]
    pub multiplicity: BigUint,
    pub source: TermSource,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for EigenvalueTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x - {})^{} [{:?}]", self.eigenvalue, self.multiplicity, self.source)
    }
}

fn term(eigenvalue: BigUint, multiplicity: BigUint, source: TermSource) -> EigenvalueTerm {
    EigenvalueTerm {
        eigenvalue,
        multiplicity,
        source,
    }
}

fn assemble(terms: &[EigenvalueTerm]) -> Spectrum {
    let mut s = Spectrum::new();
    for t in terms {
        s.insert(t.eigenvalue.clone(), t.multiplicity.clone());
    }
    s
}

/// `c_i = p^i + sum_{j=i+1..m} p^((j-i)(n-1)) phi(p^j)`, the eigenvalue contributed
/// by the `i`-th nested join.
pub fn joined_eigenvalue_c(i: u32, params: &ZpmnParams) -> Result<BigUint> {
    if i == 0 || i >= params.m {
        return Err(Error::InvalidParams(format!(
            "i = {i} outside 1..={}",
            params.m.saturating_sub(1)
        )));
    }
    let step = params.n as u64 - 1;
    let tail: BigUint = (i + 1..=params.m)
        .map(|j| params.pow((j - i) as u64 * step) * params.phi(j))
        .sum();
    Ok(params.pow(i as u64) + tail)
}

/// `c_i` evaluated in the nested form
/// `p^i + p^(n-1)(phi(p^(i+1)) + p^(n-1)(... + p^(n-1) phi(p^m)))`.
pub fn joined_eigenvalue_c_nested(i: u32, params: &ZpmnParams) -> Result<BigUint> {
    if i == 0 || i >= params.m {
        return Err(Error::InvalidParams(format!(
            "i = {i} outside 1..={}",
            params.m.saturating_sub(1)
        )));
    }
    let branching = params.pow(params.n as u64 - 1);
    let mut inner = params.phi(params.m);
    for j in (i + 1..params.m).rev() {
        inner = params.phi(j) + &branching * inner;
    }
    Ok(params.pow(i as u64) + branching * inner)
}

/// All factor families of the Laplacian polynomial of `G(Z_{p^m}^n)`,
/// including those with multiplicity zero.
pub fn zpmn_terms(params: &ZpmnParams) -> Vec<EigenvalueTerm> {
    let (m, n) = (params.m as u64, params.n as u64);
    let l = params.l();
    let mut terms = vec![
        term(BigUint::zero(), BigUint::one(), TermSource::Zero),
        term(params.group_order(), BigUint::one(), TermSource::GroupOrder),
        term(BigUint::one(), &l - 1u32, TermSource::One),
        term(
            params.pow(m),
            &l * params.pow((m - 1) * (n - 1)) * (params.phi(params.m) - 1u32),
            TermSource::TopPower,
        ),
    ];
    for i in 1..params.m {
        let weight = &l * params.pow((i as u64 - 1) * (n - 1));
        terms.push(term(
            params.pow(i as u64),
            &weight * (params.pow(n - 1) - 1u32),
            TermSource::Power(i),
        ));
        terms.push(term(
            joined_eigenvalue_c(i, params).expect("i in range"),
            weight * params.phi(i),
            TermSource::Joined(i),
        ));
    }
    terms
}

/// Laplacian spectrum of `G(Z_{p^m}^n)` from the closed-form polynomial.
pub fn laplacian_spectrum_zpmn(params: &ZpmnParams) -> Spectrum {
    assemble(&zpmn_terms(params))
}

fn check_s(s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidParams("s must be at least 1".into()));
    }
    Ok(())
}

/// All factor families of the Laplacian polynomial of `G(Z_2^r x Z_4^s)`.
pub fn z2r4s_terms(r: u32, s: u32) -> Result<Vec<EigenvalueTerm>> {
    check_s(s)?;
    let (r, s) = (r as u64, s as u64);
    let blocks = two_pow(s) - 1u32;
    let half = two_pow(r + s - 1);
    Ok(vec![
        term(BigUint::zero(), BigUint::one(), TermSource::Zero),
        term(BigUint::one(), two_pow(r + s) - 2u32, TermSource::One),
        term(BigUint::from(2u32), &blocks * (&half - 1u32), TermSource::Two),
        term(BigUint::from(4u32), &half * &blocks, TermSource::Four),
        term(two_pow(r + s) + 2u32, blocks, TermSource::Hub),
        term(two_pow(r + 2 * s), BigUint::one(), TermSource::GroupOrder),
    ])
}

/// Laplacian spectrum of `G(Z_2^r x Z_4^s)` from the closed-form polynomial.
pub fn laplacian_spectrum_z2r4s(r: u32, s: u32) -> Result<Spectrum> {
    Ok(assemble(&z2r4s_terms(r, s)?))
}

/// Distinct eigenvalue count of `G(Z_{p^m}^n)` next to the claimed `2(m + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctCount {
    pub actual: usize,
    pub claimed: usize,
}

impl DistinctCount {
    pub fn matches(&self) -> bool {
        self.actual == self.claimed
    }
}

pub fn distinct_eigenvalue_count_zpmn(params: &ZpmnParams) -> DistinctCount {
    DistinctCount {
        actual: laplacian_spectrum_zpmn(params).distinct_count(),
        claimed: 2 * (params.m as usize + 1),
    }
}

/// Whether the element orders `{1, p, ..., p^m}` all occur as Laplacian eigenvalues.
pub fn spectrum_containment_zpmn(params: &ZpmnParams) -> bool {
    let spectrum = laplacian_spectrum_zpmn(params);
    (0..=params.m as u64).all(|k| spectrum.contains(&params.pow(k)))
}

/// The power graph is complete iff the group is cyclic of prime-power (or unit) order.
pub fn is_power_graph_complete(group: &GroupSpec) -> bool {
    match group.invariant_factors().as_slice() {
        [] => true,
        [single] => {
            let divisors = group.elementary_divisors();
            // One invariant factor of prime-power order means one elementary divisor.
            divisors.len() == 1 && BigUint::from(divisors[0]) == *single
        }
        _ => false,
    }
}

/// `G(Z_{p^m}^n)` is a flower graph iff `n >= 2` and `m = 1`.
pub fn is_flower_zpmn(params: &ZpmnParams) -> bool {
    params.n >= 2 && params.m == 1
}

/// Planarity of the power graph of an abelian group: the group must be one of
/// `Z_2^n`, `Z_3^n`, `Z_4^n` or `Z_2^r x Z_4^s` (trivial group included).
pub fn is_planar_power_graph_abelian(group: &GroupSpec) -> bool {
    let divisors = group.elementary_divisors();
    divisors.iter().all(|&q| q == 3) || divisors.iter().all(|&q| q == 2 || q == 4)
}

/// Number of elements of order two in `Z_2^r x Z_4^s`: `2^(r+s) - 1`.
pub fn count_order2_z2r4s(r: u32, s: u32) -> Result<BigUint> {
    check_s(s)?;
    Ok(two_pow(r as u64 + s as u64) - 1u32)
}

/// Number of elements of order four in `Z_2^r x Z_4^s`: `2^(r+s)(2^s - 1)`.
pub fn count_order4_z2r4s(r: u32, s: u32) -> Result<BigUint> {
    check_s(s)?;
    Ok(two_pow(r as u64 + s as u64) * (two_pow(s as u64) - 1u32))
}

/// Validates `alpha` as an order-two element of `Z_2^r x Z_4^s`.
fn check_order_two(alpha: &GroupElement, r: u32, s: u32) -> Result<()> {
    check_s(s)?;
    let group = GroupSpec::two_four(r, s)?;
    group.element(alpha.coords())?;
    let c = alpha.coords();
    let nonzero = c.iter().any(|&x| x != 0);
    let z4_even = c[r as usize..].iter().all(|&x| x % 2 == 0);
    if !(nonzero && z4_even) {
        return Err(Error::NotOrderTwo);
    }
    Ok(())
}

/// For `alpha` of order two in `Z_2^r x Z_4^s`: whether `alpha` lies in some
/// cyclic subgroup of order four, i.e. its `Z_2` coordinates all vanish.
pub fn order2_lies_in_cyclic4(alpha: &GroupElement, r: u32, s: u32) -> Result<bool> {
    check_order_two(alpha, r, s)?;
    Ok(alpha.coords()[..r as usize].iter().all(|&x| x == 0))
}

/// Degree of an order-two `alpha` in `G(Z_2^r x Z_4^s)`: 1 when a `Z_2`
/// coordinate is nonzero, `2^(r+s) + 1` otherwise.
pub fn degree_order2_closed(alpha: &GroupElement, r: u32, s: u32) -> Result<BigUint> {
    if order2_lies_in_cyclic4(alpha, r, s)? {
        Ok(two_pow(r as u64 + s as u64) + 1u32)
    } else {
        Ok(BigUint::one())
    }
}

/// Numbers of order-two elements of degree 1 and of degree `2^(r+s) + 1`:
/// `2^s(2^r - 1)` and `2^s - 1`.
pub fn degree_class_counts_z2r4s(r: u32, s: u32) -> Result<(BigUint, BigUint)> {
    check_s(s)?;
    let (r, s) = (r as u64, s as u64);
    Ok((two_pow(s) * (two_pow(r) - 1u32), two_pow(s) - 1u32))
}
