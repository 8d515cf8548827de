//! Laplacian spectra as exact eigenvalue multisets, with the disjoint union and
//! join composition rules.
//!
//! Every graph this crate produces is Laplacian integral, so a spectrum is a map
//! from non-negative integer eigenvalue to positive multiplicity. The join rule
//! works on the multiset directly: the rational factor in the join formula
//! always cancels against the shifted zero eigenvalue of each operand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{Error as _, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Spectrum {
    roots: BTreeMap<BigUint, BigUint>,
}

impl Spectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I, A, B>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<BigUint>,
        B: Into<BigUint>,
    {
        let mut s = Spectrum::new();
        for (mu, mult) in pairs {
            s.insert(mu.into(), mult.into());
        }
        s
    }

    /// Adds `mult` copies of `mu`. Zero multiplicities are ignored.
    pub fn insert(&mut self, mu: BigUint, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.roots.entry(mu).or_default() += mult;
    }

    /// Removes one copy of `mu`; returns whether it was present.
    fn remove_one(&mut self, mu: &BigUint) -> bool {
        match self.roots.get_mut(mu) {
            Some(m) if m.is_one() => {
                self.roots.remove(mu);
                true
            }
            Some(m) => {
                *m -= 1u32;
                true
            }
            None => false,
        }
    }

    /// `(eigenvalue, multiplicity)` pairs, eigenvalues ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, &BigUint)> {
        self.roots.iter()
    }

    pub fn multiplicity(&self, mu: &BigUint) -> BigUint {
        self.roots.get(mu).cloned().unwrap_or_default()
    }

    pub fn contains(&self, mu: &BigUint) -> bool {
        self.roots.contains_key(mu)
    }

    pub fn distinct_count(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Sum of multiplicities; the vertex count of the underlying graph.
    pub fn total_multiplicity(&self) -> BigUint {
        self.roots.values().sum()
    }

    /// Sum of eigenvalues with multiplicity; twice the edge count for a Laplacian.
    pub fn trace(&self) -> BigUint {
        self.roots.iter().map(|(mu, m)| mu * m).sum()
    }

    pub fn max_eigenvalue(&self) -> Option<&BigUint> {
        self.roots.keys().next_back()
    }

    /// Multiplicity of eigenvalue 0, i.e. the number of connected components.
    pub fn zero_multiplicity(&self) -> BigUint {
        self.multiplicity(&BigUint::zero())
    }

    /// Spectrum of `K_k`: `{0^1, k^(k-1)}`.
    pub fn complete(k: &BigUint) -> Result<Spectrum> {
        if k.is_zero() {
            return Err(Error::InvalidParams("K_0 has no vertices".into()));
        }
        let mut s = Spectrum::new();
        s.insert(BigUint::zero(), BigUint::one());
        s.insert(k.clone(), k - 1u32);
        Ok(s)
    }

    /// Disjoint union of `count` copies of each part.
    pub fn union<'a>(parts: impl IntoIterator<Item = (&'a Spectrum, &'a BigUint)>) -> Result<Spectrum> {
        let mut out = Spectrum::new();
        let mut any = false;
        for (part, count) in parts {
            if count.is_zero() {
                return Err(Error::ZeroCount);
            }
            any = true;
            for (mu, m) in part.iter() {
                out.insert(mu.clone(), m * count);
            }
        }
        if !any {
            return Err(Error::EmptyUnion);
        }
        Ok(out)
    }

    /// Spectrum of the join of two graphs with the given spectra.
    ///
    /// Drops one zero from each side, shifts the rest of each side by the
    /// other side's vertex count, and adds `0` and `n1 + n2`.
    pub fn join(left: &Spectrum, right: &Spectrum) -> Result<Spectrum> {
        let n1 = left.total_multiplicity();
        let n2 = right.total_multiplicity();
        let mut a = left.clone();
        let mut b = right.clone();
        if !a.remove_one(&BigUint::zero()) || !b.remove_one(&BigUint::zero()) {
            return Err(Error::NotLaplacian);
        }
        let mut out = Spectrum::new();
        out.insert(BigUint::zero(), BigUint::one());
        out.insert(&n1 + &n2, BigUint::one());
        for (mu, m) in a.roots {
            out.insert(mu + &n2, m);
        }
        for (mu, m) in b.roots {
            out.insert(mu + &n1, m);
        }
        Ok(out)
    }

    /// The monic polynomial `prod (x - mu)^mult`.
    ///
    /// Panics if the total multiplicity does not fit in memory as a dense polynomial.
    pub fn expand(&self) -> IntPoly {
        let mut poly = IntPoly::one();
        for (mu, m) in &self.roots {
            let root = BigInt::from(mu.clone());
            let times = m.to_u64().expect("multiplicity too large to expand");
            for _ in 0..times {
                poly.mul_linear(&root);
            }
        }
        poly
    }

    /// The eigenvalue set as a sorted vector.
    pub fn eigenvalues(&self) -> Vec<BigUint> {
        self.roots.keys().cloned().collect()
    }

    /// First eigenvalue (ascending) whose multiplicity differs, with both multiplicities.
    pub fn first_difference(&self, other: &Spectrum) -> Option<(BigUint, BigUint, BigUint)> {
        let mut keys: Vec<&BigUint> = self.roots.keys().chain(other.roots.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|mu| {
            let a = self.multiplicity(mu);
            let b = other.multiplicity(mu);
            (a != b).then(|| (mu.clone(), a, b))
        })
    }

    /// `{0^{1}, 8^{7}}`-style rendering for LaTeX tables.
    pub fn to_latex(&self) -> String {
        let body: Vec<String> = self.roots.iter().map(|(mu, m)| format!("{mu}^{{{m}}}")).collect();
        format!("\\{{{}\\}}", body.join(", "))
    }

    /// Space separated `mu^m` tokens, e.g. `0^1 8^7`.
    pub fn to_compact(&self) -> String {
        let body: Vec<String> = self.roots.iter().map(|(mu, m)| format!("{mu}^{m}")).collect();
        body.join(" ")
    }
}

/// Spectrum of `K_k`.
pub fn spectrum_of_complete(k: u64) -> Result<Spectrum> {
    Spectrum::complete(&BigUint::from(k))
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (mu, m)) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{mu}^{m}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for Spectrum {
    type Err = Error;

    /// Accepts `{0^1, 8^7}` or `0^1 8^7`; a bare eigenvalue means multiplicity 1.
    fn from_str(text: &str) -> Result<Spectrum> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut s = Spectrum::new();
        for token in inner.split([',', ' ', ';']).filter(|t| !t.trim().is_empty()) {
            let token = token.trim();
            let (mu, m) = token.split_once('^').unwrap_or((token, "1"));
            let bad = || Error::Parse {
                pos: 0,
                msg: format!("bad spectrum term {token:?}"),
            };
            let mu: BigUint = mu.trim().parse().map_err(|_| bad())?;
            let m: BigUint = m.trim().parse().map_err(|_| bad())?;
            if m.is_zero() {
                return Err(bad());
            }
            s.insert(mu, m);
        }
        Ok(s)
    }
}

impl Serialize for Spectrum {
    /// JSON object keyed by decimal eigenvalue strings, ascending. Multiplicities
    /// are numbers when they fit in 64 bits and decimal strings otherwise.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.roots.len()))?;
        for (mu, m) in &self.roots {
            match m.to_u64() {
                Some(small) => map.serialize_entry(&mu.to_string(), &small)?,
                None => map.serialize_entry(&mu.to_string(), &m.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct SpectrumVisitor;

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Mult {
            Small(u64),
            Big(String),
        }

        impl<'de> Visitor<'de> for SpectrumVisitor {
            type Value = Spectrum;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from decimal eigenvalue strings to multiplicities")
            }

            fn visit_map<M: MapAccess<'de>>(self, mut access: M) -> std::result::Result<Spectrum, M::Error> {
                let mut s = Spectrum::new();
                while let Some((key, value)) = access.next_entry::<String, Mult>()? {
                    let mu: BigUint = key
                        .parse()
                        .map_err(|_| M::Error::custom(format!("bad eigenvalue {key:?}")))?;
                    let m = match value {
                        Mult::Small(v) => BigUint::from(v),
                        Mult::Big(t) => t
                            .parse()
                            .map_err(|_| M::Error::custom(format!("bad multiplicity {t:?}")))?,
                    };
                    if m.is_zero() {
                        return Err(M::Error::custom("multiplicity must be positive"));
                    }
                    s.insert(mu, m);
                }
                Ok(s)
            }
        }

        deserializer.deserialize_map(SpectrumVisitor)
    }
}
