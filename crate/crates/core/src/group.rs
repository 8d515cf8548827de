//! Finite abelian groups written as ordered direct products of cyclic groups.
//!
//! A group is a list of cyclic factor orders `[k_1, ..., k_t]`, each at least 2;
//! the empty list is the trivial group. Elements are coordinate tuples written
//! additively, and are numbered lexicographically (first coordinate most
//! significant) so that vertex numbering in derived graphs is deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, prime_power};
use crate::error::{Error, Result};

/// Families of groups that have closed-form power graph spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `n` copies of `Z_{p^m}`.
    PrimePowerHomocyclic {
        p: u64,
        m: u32,
        n: u32,
    },
    /// `r` copies of `Z_2` followed by `s >= 1` copies of `Z_4`.
    TwoFour {
        r: u32,
        s: u32,
    },
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    factors: Vec<u64>,
    family: Family,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Builds a group from cyclic factor orders, preserving their order.
pub fn make_group(factors: &[u64]) -> Result<GroupSpec> {
    GroupSpec::new(factors.to_vec())
}

impl GroupSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&k| k < 2) {
            return Err(Error::InvalidFactor(bad));
        }
        let family = detect_family(&factors);
        Ok(GroupSpec { factors, family })
    }

    pub fn trivial() -> Self {
        GroupSpec {
            factors: Vec::new(),
            family: Family::General,
        }
    }

    /// `Z_{p^m}^n`.
    pub fn homocyclic(p: u64, m: u32, n: u32) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "m and n must be positive, got m={m}, n={n}"
            )));
        }
        let q = p
            .checked_pow(m)
            .ok_or_else(|| Error::InvalidParams(format!("{p}^{m} overflows a 64-bit factor")))?;
        GroupSpec::new(vec![q; n as usize])
    }

    /// `Z_2^r x Z_4^s`.
    pub fn two_four(r: u32, s: u32) -> Result<Self> {
        let mut factors = vec![2; r as usize];
        factors.extend(std::iter::repeat_n(4, s as usize));
        GroupSpec::new(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &k| acc * k)
    }

    /// Group order as `usize` when it is at most `cap`.
    pub fn order_within(&self, cap: usize) -> Result<usize> {
        let order = self.order();
        match order.to_usize() {
            Some(n) if n <= cap => Ok(n),
            _ => Err(Error::CapExceeded {
                what: "group",
                size: order.to_string(),
                cap,
            }),
        }
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &k| acc.lcm(&BigUint::from(k)))
    }

    /// `(p, m, n)` when the factor multiset is `n` copies of `p^m`, in any order.
    pub fn homocyclic_params(&self) -> Option<(u64, u32, u32)> {
        let first = *self.factors.first()?;
        if self.factors.iter().any(|&k| k != first) {
            return None;
        }
        let (p, m) = prime_power(first)?;
        Some((p, m, self.factors.len() as u32))
    }

    /// `(r, s)` when the factor multiset is `r` twos and `s >= 1` fours, in any order.
    pub fn two_four_params(&self) -> Option<(u32, u32)> {
        let mut r = 0;
        let mut s = 0;
        for &k in &self.factors {
            match k {
                2 => r += 1,
                4 => s += 1,
                _ => return None,
            }
        }
        (s >= 1).then_some((r, s))
    }

    /// The factor list sorted ascending; an isomorphic group.
    pub fn sorted(&self) -> GroupSpec {
        let mut factors = self.factors.clone();
        factors.sort_unstable();
        GroupSpec::new(factors).expect("factors already validated")
    }

    /// Elementary divisors (prime-power cyclic factors), sorted ascending.
    pub fn elementary_divisors(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .factors
            .iter()
            .flat_map(|&k| factorize(k).into_iter().map(|(p, e)| p.pow(e)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Invariant factors `d_1 | d_2 | ... | d_t`, each at least 2.
    pub fn invariant_factors(&self) -> Vec<BigUint> {
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for q in self.elementary_divisors() {
            let (p, _) = prime_power(q).expect("elementary divisor is a prime power");
            by_prime.entry(p).or_default().push(q);
        }
        let width = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![BigUint::one(); width];
        for powers in by_prime.values() {
            // `powers` is ascending; align the largest powers with the last invariant factor.
            let offset = width - powers.len();
            for (i, &q) in powers.iter().enumerate() {
                out[offset + i] *= q;
            }
        }
        out
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors().len() <= 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.factors.len()],
        }
    }

    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::ElementArity {
                expected: self.factors.len(),
                got: coords.len(),
            });
        }
        for (index, (&value, &factor)) in coords.iter().zip(&self.factors).enumerate() {
            if value >= factor {
                return Err(Error::CoordinateOutOfRange { index, value, factor });
            }
        }
        Ok(GroupElement {
            coords: coords.to_vec(),
        })
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        self.element(&a.coords).map(|_| ())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.factors)
            .map(|((&x, &y), &k)| ((x as u128 + y as u128) % k as u128) as u64)
            .collect();
        GroupElement { coords }
    }

    /// `k * a` in additive notation.
    pub fn scale(&self, a: &GroupElement, k: &BigUint) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&self.factors)
            .map(|(&x, &f)| ((k % f) * x % f).to_u64().expect("reduced below a u64 factor"))
            .collect();
        GroupElement { coords }
    }

    /// Least `k >= 1` with `k * a = 0`: the lcm of `k_i / gcd(k_i, a_i)`.
    pub fn element_order(&self, a: &GroupElement) -> Result<BigUint> {
        self.check(a)?;
        Ok(self.order_unchecked(a))
    }

    fn order_unchecked(&self, a: &GroupElement) -> BigUint {
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(BigUint::one(), |acc, (&x, &k)| acc.lcm(&BigUint::from(k / k.gcd(&x))))
    }

    /// True iff `b` lies in the cyclic subgroup generated by `a`.
    ///
    /// Solves `k * a_i = b_i (mod k_i)` coordinate-wise and merges the
    /// resulting congruences on `k` by the generalized Chinese remainder rule.
    pub fn is_power_of(&self, a: &GroupElement, b: &GroupElement) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        // k = residue (mod modulus)
        let mut residue = BigInt::zero();
        let mut modulus = BigInt::one();
        for ((&ai, &bi), &ki) in a.coords.iter().zip(&b.coords).zip(&self.factors) {
            let g = ai.gcd(&ki);
            if bi % g != 0 {
                return Ok(false);
            }
            let m = BigInt::from(ki / g);
            let r = if m.is_one() {
                BigInt::zero()
            } else {
                let inv = mod_inverse(&BigInt::from(ai / g), &m).expect("coprime after dividing by gcd");
                (BigInt::from(bi / g) * inv).mod_floor(&m)
            };
            match merge_congruence(&residue, &modulus, &r, &m) {
                Some((res, md)) => {
                    residue = res;
                    modulus = md;
                }
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Iterates over all elements in lexicographic order.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            group: self,
            next: Some(self.identity()),
        }
    }

    /// Lexicographic index of `a`.
    pub fn index_of(&self, a: &GroupElement) -> Result<usize> {
        self.check(a)?;
        let mut idx: usize = 0;
        for (&x, &k) in a.coords.iter().zip(&self.factors) {
            idx = idx
                .checked_mul(k as usize)
                .and_then(|v| v.checked_add(x as usize))
                .ok_or_else(|| Error::CapExceeded {
                    what: "element index",
                    size: self.order().to_string(),
                    cap: usize::MAX,
                })?;
        }
        Ok(idx)
    }

    /// Enumerates the set of element orders up to `cap` elements.
    pub fn enumerate_orders(&self, cap: usize) -> Result<Vec<BigUint>> {
        self.order_within(cap)?;
        Ok(self.elements().map(|a| self.order_unchecked(&a)).collect())
    }

    /// The set of element orders. Enumerated when `|G| <= cap`, otherwise the
    /// divisor set of the exponent, which coincides for every abelian group.
    pub fn group_spectrum(&self, cap: usize) -> BTreeSet<BigUint> {
        match self.enumerate_orders(cap) {
            Ok(orders) => orders.into_iter().collect(),
            Err(_) => self.exponent_divisors(),
        }
    }

    /// Divisors of the exponent.
    pub fn exponent_divisors(&self) -> BTreeSet<BigUint> {
        let mut prime_exp: BTreeMap<u64, u32> = BTreeMap::new();
        for &k in &self.factors {
            for (p, e) in factorize(k) {
                let slot = prime_exp.entry(p).or_insert(0);
                *slot = (*slot).max(e);
            }
        }
        let mut divisors = vec![BigUint::one()];
        for (&p, &e) in &prime_exp {
            let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
            for d in &divisors {
                let mut q = d.clone();
                for _ in 0..=e {
                    next.push(q.clone());
                    q *= p;
                }
            }
            divisors = next;
        }
        divisors.into_iter().collect()
    }

    /// Number of elements of each order, by enumeration.
    pub fn order_class_counts(&self, cap: usize) -> Result<BTreeMap<BigUint, usize>> {
        let mut counts = BTreeMap::new();
        for order in self.enumerate_orders(cap)? {
            *counts.entry(order).or_insert(0) += 1;
        }
        Ok(counts)
    }
}

fn detect_family(factors: &[u64]) -> Family {
    let Some(&first) = factors.first() else {
        return Family::General;
    };
    if factors.iter().all(|&k| k == first) {
        if let Some((p, m)) = prime_power(first) {
            return Family::PrimePowerHomocyclic {
                p,
                m,
                n: factors.len() as u32,
            };
        }
    }
    let r = factors.iter().take_while(|&&k| k == 2).count();
    let s = factors.len() - r;
    if s >= 1 && factors[r..].iter().all(|&k| k == 4) {
        return Family::TwoFour {
            r: r as u32,
            s: s as u32,
        };
    }
    Family::General
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Merges `x = r1 (mod m1)` and `x = r2 (mod m2)`; `None` when incompatible.
fn merge_congruence(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Option<(BigInt, BigInt)> {
    let e = m1.extended_gcd(m2);
    let g = e.gcd;
    let diff = r2 - r1;
    if !(&diff % &g).is_zero() {
        return None;
    }
    let lcm = m1 / &g * m2;
    let step = (&diff / &g * e.x).mod_floor(&(m2 / &g));
    let x = (r1 + m1 * step).mod_floor(&lcm);
    Some((x, lcm))
}

pub struct Elements<'a> {
    group: &'a GroupSpec,
    next: Option<GroupElement>,
}

impl Iterator for Elements<'_> {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for (c, &k) in succ.coords.iter_mut().zip(&self.group.factors).rev() {
            *c += 1;
            if *c < k {
                carried = false;
                break;
            }
            *c = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

impl fmt::Display for GroupSpec {
    /// Canonical descriptor, e.g. `Z2^3 x Z4^2`; the trivial group prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.factors.len() {
            let k = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&x| x == k).count();
            if !first {
                write!(f, " x ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "Z{k}")?;
            } else {
                write!(f, "Z{k}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Upper bound on the number of cyclic factors a descriptor may expand to.
pub const MAX_DESCRIPTOR_RANK: u64 = 1 << 16;

/// Parses a descriptor such as `Z2^3 x Z4^2`. Whitespace is ignored.
/// `1` (or `trivial`) denotes the trivial group.
pub fn parse_descriptor(text: &str) -> Result<GroupSpec> {
    let compact: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Descriptor {
            pos: 0,
            msg: "empty descriptor".into(),
        });
    }
    let joined: String = compact.iter().map(|&(_, c)| c).collect();
    if joined == "1" || joined.eq_ignore_ascii_case("trivial") {
        return Ok(GroupSpec::trivial());
    }
    let pos_of = |i: usize| compact.get(i).map_or(text.len(), |&(p, _)| p);
    let chars: Vec<char> = compact.iter().map(|&(_, c)| c).collect();
    let mut i = 0;
    let mut factors = Vec::new();

    let read_int = |i: &mut usize| -> Result<u64> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return Err(Error::Descriptor {
                pos: pos_of(start),
                msg: "expected a decimal integer".into(),
            });
        }
        let digits: String = chars[start..*i].iter().collect();
        digits.parse::<u64>().map_err(|_| Error::Descriptor {
            pos: pos_of(start),
            msg: format!("integer {digits} is too large"),
        })
    };

    loop {
        if chars.get(i) != Some(&'Z') {
            return Err(Error::Descriptor {
                pos: pos_of(i),
                msg: "expected 'Z'".into(),
            });
        }
        i += 1;
        let at = pos_of(i);
        let k = read_int(&mut i)?;
        if k < 2 {
            return Err(Error::Descriptor {
                pos: at,
                msg: format!("cyclic factor order must be at least 2, got {k}"),
            });
        }
        let mut reps = 1;
        if chars.get(i) == Some(&'^') {
            i += 1;
            let at = pos_of(i);
            reps = read_int(&mut i)?;
            if reps == 0 {
                return Err(Error::Descriptor {
                    pos: at,
                    msg: "repetition must be at least 1".into(),
                });
            }
            if factors.len() as u64 + reps > MAX_DESCRIPTOR_RANK {
                return Err(Error::Descriptor {
                    pos: at,
                    msg: format!("more than {MAX_DESCRIPTOR_RANK} cyclic factors"),
                });
            }
        }
        factors.extend(std::iter::repeat_n(k, reps as usize));
        match chars.get(i) {
            None => break,
            Some('x') => i += 1,
            Some(c) => {
                return Err(Error::Descriptor {
                    pos: pos_of(i),
                    msg: format!("unexpected '{c}'"),
                });
            }
        }
    }
    GroupSpec::new(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(factors: &[u64]) -> GroupSpec {
        make_group(factors).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Oracle: add `a` to itself until reaching the identity.
    fn order_by_repeated_addition(group: &GroupSpec, a: &GroupElement) -> u64 {
        let id = group.identity();
        let mut acc = a.clone();
        let mut k = 1;
        while acc != id {
            acc = group.add(&acc, a);
            k += 1;
        }
        k
    }

    /// Oracle: walk the multiples of `a`.
    fn power_by_walking(group: &GroupSpec, a: &GroupElement, b: &GroupElement) -> bool {
        let mut acc = group.identity();
        loop {
            if &acc == b {
                return true;
            }
            acc = group.add(&acc, a);
            if acc == group.identity() {
                return false;
            }
        }
    }

    #[test]
    fn family_detection() {
        assert_eq!(g(&[4, 4]).family(), Family::PrimePowerHomocyclic { p: 2, m: 2, n: 2 });
        assert_eq!(g(&[2, 4]).family(), Family::TwoFour { r: 1, s: 1 });
        assert_eq!(g(&[6]).family(), Family::General);
        assert_eq!(g(&[4, 2]).family(), Family::General);
        assert_eq!(g(&[2, 2]).family(), Family::PrimePowerHomocyclic { p: 2, m: 1, n: 2 });
        assert_eq!(g(&[]).family(), Family::General);
        assert_eq!(g(&[4, 2]).two_four_params(), Some((1, 1)));
    }

    #[test]
    fn rejects_small_factors() {
        assert_eq!(make_group(&[2, 1]), Err(Error::InvalidFactor(1)));
        assert_eq!(make_group(&[0]), Err(Error::InvalidFactor(0)));
        assert_eq!(g(&[]).order(), big(1));
    }

    #[test]
    fn element_order_examples() {
        let z2z4 = g(&[2, 4]);
        assert_eq!(z2z4.element_order(&z2z4.element(&[1, 2]).unwrap()).unwrap(), big(2));
        assert_eq!(z2z4.element_order(&z2z4.element(&[1, 1]).unwrap()).unwrap(), big(4));
        let z4z4 = g(&[4, 4]);
        assert_eq!(z4z4.element_order(&z4z4.identity()).unwrap(), big(1));
        assert!(z2z4.element(&[2, 0]).is_err());
    }

    #[test]
    fn element_order_matches_repeated_addition() {
        for factors in [&[2u64, 4][..], &[3, 9], &[6, 4], &[8], &[2, 2, 3], &[5, 5]] {
            let group = g(factors);
            let exponent = group.exponent();
            for a in group.elements() {
                let order = group.element_order(&a).unwrap();
                assert_eq!(order, big(order_by_repeated_addition(&group, &a)));
                assert!((&exponent % &order).is_zero());
            }
        }
    }

    #[test]
    fn group_spectrum_examples() {
        let set = |v: &[u64]| v.iter().map(|&x| big(x)).collect::<BTreeSet<_>>();
        assert_eq!(g(&[8]).group_spectrum(4096), set(&[1, 2, 4, 8]));
        assert_eq!(g(&[2, 2]).group_spectrum(4096), set(&[1, 2]));
        assert_eq!(g(&[]).group_spectrum(4096), set(&[1]));
        // Beyond the cap the exponent rule takes over.
        assert_eq!(g(&[2, 2]).group_spectrum(1), set(&[1, 2]));
    }

    #[test]
    fn group_spectrum_is_exponent_divisors() {
        for factors in [&[2u64, 2][..], &[2, 4], &[3, 6], &[4, 4, 2], &[12], &[5, 25], &[]] {
            let group = g(factors);
            assert_eq!(group.group_spectrum(4096), group.exponent_divisors(), "{group}");
        }
    }

    #[test]
    fn order_class_count_examples() {
        let counts = |f: &[u64]| {
            g(f).order_class_counts(4096)
                .unwrap()
                .into_iter()
                .map(|(k, v)| (k.to_u64().unwrap(), v))
                .collect::<Vec<_>>()
        };
        assert_eq!(counts(&[2, 4]), vec![(1, 1), (2, 3), (4, 4)]);
        assert_eq!(counts(&[3]), vec![(1, 1), (3, 2)]);
        assert_eq!(counts(&[2, 2]), vec![(1, 1), (2, 3)]);
        assert!(matches!(
            g(&[64, 64, 2]).order_class_counts(4096),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn is_power_of_examples() {
        let z8 = g(&[8]);
        assert!(z8
            .is_power_of(&z8.element(&[1]).unwrap(), &z8.element(&[5]).unwrap())
            .unwrap());
        let z2z4 = g(&[2, 4]);
        let a = z2z4.element(&[0, 1]).unwrap();
        let b = z2z4.element(&[0, 2]).unwrap();
        assert!(z2z4.is_power_of(&a, &b).unwrap());
        assert!(!z2z4.is_power_of(&b, &a).unwrap());
    }

    #[test]
    fn is_power_of_matches_walk() {
        for factors in [&[2u64, 4][..], &[4, 6], &[3, 9], &[2, 2, 2], &[12]] {
            let group = g(factors);
            let elems: Vec<_> = group.elements().collect();
            for a in &elems {
                for b in &elems {
                    assert_eq!(
                        group.is_power_of(a, b).unwrap(),
                        power_by_walking(&group, a, b),
                        "{group}: {a} -> {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn mutual_powers_generate_same_subgroup() {
        for factors in [&[2u64, 4][..], &[4, 4], &[3, 3], &[6]] {
            let group = g(factors);
            let elems: Vec<_> = group.elements().collect();
            let subgroup = |a: &GroupElement| {
                let mut set = BTreeSet::new();
                let mut acc = group.identity();
                loop {
                    set.insert(acc.clone());
                    acc = group.add(&acc, a);
                    if acc == group.identity() {
                        return set;
                    }
                }
            };
            for a in &elems {
                for b in &elems {
                    let both = group.is_power_of(a, b).unwrap() && group.is_power_of(b, a).unwrap();
                    assert_eq!(both, subgroup(a) == subgroup(b));
                }
            }
        }
    }

    #[test]
    fn elements_are_lexicographic() {
        let group = g(&[2, 3]);
        let listed: Vec<Vec<u64>> = group.elements().map(|e| e.coords().to_vec()).collect();
        assert_eq!(
            listed,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        for (i, e) in group.elements().enumerate() {
            assert_eq!(group.index_of(&e).unwrap(), i);
        }
        assert_eq!(g(&[]).elements().count(), 1);
    }

    #[test]
    fn invariant_factors() {
        let inv = |f: &[u64]| {
            g(f).invariant_factors()
                .iter()
                .map(|x| x.to_u64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(inv(&[2, 3]), vec![6]);
        assert_eq!(inv(&[2, 4]), vec![2, 4]);
        assert_eq!(inv(&[6, 4]), vec![2, 12]);
        assert_eq!(inv(&[]), Vec::<u64>::new());
        assert!(g(&[2, 3]).is_cyclic());
        assert!(!g(&[2, 2]).is_cyclic());
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(parse_descriptor("Z2^3 x Z4^2").unwrap().factors(), &[2, 2, 2, 4, 4]);
        assert_eq!(parse_descriptor(" Z 8 ").unwrap().factors(), &[8]);
        assert_eq!(parse_descriptor("Z2^2xZ4").unwrap().factors(), &[2, 2, 4]);
        assert_eq!(parse_descriptor("1").unwrap(), GroupSpec::trivial());
        assert!(matches!(parse_descriptor("Z1"), Err(Error::Descriptor { .. })));
        assert!(matches!(parse_descriptor("Z2 x"), Err(Error::Descriptor { .. })));
        assert!(matches!(parse_descriptor("Z2^0"), Err(Error::Descriptor { .. })));
        assert!(matches!(
            parse_descriptor("Z2.5"),
            Err(Error::Descriptor { pos: 2, .. })
        ));
        assert!(matches!(parse_descriptor(""), Err(Error::Descriptor { .. })));
        assert!(matches!(
            parse_descriptor("Z2^99999999999"),
            Err(Error::Descriptor { pos: 3, .. })
        ));
        let group = parse_descriptor("Z2^3 x Z4^2 x Z3").unwrap();
        assert_eq!(group.to_string(), "Z2^3 x Z4^2 x Z3");
        assert_eq!(parse_descriptor(&group.to_string()).unwrap(), group);
    }
}
