//! Join/union expressions over complete graphs.
//!
//! Union parts carry repetition counts instead of materialized copies, so the
//! spectrum of an expression with billions of vertices is still cheap to
//! evaluate. Graphs are only built on request through [`GraphExpr::realize`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{big_pow, is_prime, two_pow};
use crate::error::{Error, Result};
use crate::power_graph::Graph;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    /// `K_k`, `k >= 1`.
    Complete(BigUint),
    /// Disjoint union of `count` copies of each part; nonempty, counts `>= 1`.
    Union(Vec<(BigUint, GraphExpr)>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn complete(k: impl Into<BigUint>) -> Result<GraphExpr> {
        let k = k.into();
        if k.is_zero() {
            return Err(Error::InvalidParams("K_0 has no vertices".into()));
        }
        Ok(GraphExpr::Complete(k))
    }

    pub fn union(parts: Vec<(BigUint, GraphExpr)>) -> Result<GraphExpr> {
        if parts.is_empty() {
            return Err(Error::EmptyUnion);
        }
        if parts.iter().any(|(c, _)| c.is_zero()) {
            return Err(Error::ZeroCount);
        }
        Ok(GraphExpr::Union(parts))
    }

    /// `count` copies of `part`.
    pub fn copies(count: impl Into<BigUint>, part: GraphExpr) -> Result<GraphExpr> {
        GraphExpr::union(vec![(count.into(), part)])
    }

    pub fn join(left: GraphExpr, right: GraphExpr) -> GraphExpr {
        GraphExpr::Join(Box::new(left), Box::new(right))
    }

    /// Checks the size and count invariants throughout the tree.
    pub fn validate(&self) -> Result<()> {
        match self {
            GraphExpr::Complete(k) if k.is_zero() => Err(Error::InvalidParams("K_0 has no vertices".into())),
            GraphExpr::Complete(_) => Ok(()),
            GraphExpr::Union(parts) => {
                if parts.is_empty() {
                    return Err(Error::EmptyUnion);
                }
                for (count, part) in parts {
                    if count.is_zero() {
                        return Err(Error::ZeroCount);
                    }
                    part.validate()?;
                }
                Ok(())
            }
            GraphExpr::Join(l, r) => {
                l.validate()?;
                r.validate()
            }
        }
    }

    pub fn vertex_count(&self) -> BigUint {
        match self {
            GraphExpr::Complete(k) => k.clone(),
            GraphExpr::Union(parts) => parts.iter().map(|(c, p)| c * p.vertex_count()).sum(),
            GraphExpr::Join(l, r) => l.vertex_count() + r.vertex_count(),
        }
    }

    /// Edge count, computed without realizing the graph.
    pub fn edge_count(&self) -> BigUint {
        match self {
            GraphExpr::Complete(k) => k * (k - 1u32) / 2u32,
            GraphExpr::Union(parts) => parts.iter().map(|(c, p)| c * p.edge_count()).sum(),
            GraphExpr::Join(l, r) => l.edge_count() + r.edge_count() + l.vertex_count() * r.vertex_count(),
        }
    }

    /// Laplacian spectrum by recursive application of the union and join rules.
    pub fn spectrum(&self) -> Result<Spectrum> {
        match self {
            GraphExpr::Complete(k) => Spectrum::complete(k),
            GraphExpr::Union(parts) => {
                let evaluated = parts
                    .iter()
                    .map(|(c, p)| Ok((p.spectrum()?, c)))
                    .collect::<Result<Vec<_>>>()?;
                Spectrum::union(evaluated.iter().map(|(s, c)| (s, *c)))
            }
            GraphExpr::Join(l, r) => Spectrum::join(&l.spectrum()?, &r.spectrum()?),
        }
    }

    /// Builds the concrete graph. Vertices are numbered depth-first, left to right.
    pub fn realize(&self, cap: usize) -> Result<Graph> {
        self.validate()?;
        let total = self.vertex_count();
        let n = match total.to_usize() {
            Some(n) if n <= cap => n,
            _ => {
                return Err(Error::CapExceeded {
                    what: "expression",
                    size: total.to_string(),
                    cap,
                })
            }
        };
        let mut graph = Graph::empty(n);
        let used = self.realize_into(&mut graph, 0);
        debug_assert_eq!(used, n);
        Ok(graph)
    }

    fn realize_into(&self, graph: &mut Graph, offset: usize) -> usize {
        match self {
            GraphExpr::Complete(k) => {
                let k = k.to_usize().expect("checked against cap");
                for u in offset..offset + k {
                    for v in u + 1..offset + k {
                        graph.set_edge(u, v);
                    }
                }
                k
            }
            GraphExpr::Union(parts) => {
                let mut at = offset;
                for (count, part) in parts {
                    let count = count.to_usize().expect("checked against cap");
                    for _ in 0..count {
                        at += part.realize_into(graph, at);
                    }
                }
                at - offset
            }
            GraphExpr::Join(l, r) => {
                let n1 = l.realize_into(graph, offset);
                let n2 = r.realize_into(graph, offset + n1);
                for u in offset..offset + n1 {
                    for v in offset + n1..offset + n1 + n2 {
                        graph.set_edge(u, v);
                    }
                }
                n1 + n2
            }
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::print_expr(self))
    }
}

/// Euler's totient of `p^k`, `k >= 1`.
pub fn euler_phi_prime_power(p: u64, k: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParams("phi(p^k) needs k >= 1".into()));
    }
    Ok(big_pow(p, k as u64) - big_pow(p, k as u64 - 1))
}

/// `K_1 + l (K_phi(p) + p^(n-1) (K_phi(p^2) + ... + p^(n-1) K_phi(p^m)))` with
/// `l = (p^n - 1)/(p - 1)`: the power graph of `Z_{p^m}^n`.
pub fn power_graph_expr_zpmn(p: u64, m: u32, n: u32) -> Result<GraphExpr> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || n == 0 {
        return Err(Error::InvalidParams(format!(
            "m and n must be positive, got m={m}, n={n}"
        )));
    }
    let branching = big_pow(p, n as u64 - 1);
    let mut nested = GraphExpr::Complete(euler_phi_prime_power(p, m)?);
    for i in (1..m).rev() {
        nested = GraphExpr::join(
            GraphExpr::Complete(euler_phi_prime_power(p, i)?),
            GraphExpr::copies(branching.clone(), nested)?,
        );
    }
    let l = (big_pow(p, n as u64) - 1u32) / (p - 1);
    Ok(GraphExpr::join(
        GraphExpr::Complete(BigUint::one()),
        GraphExpr::copies(l, nested)?,
    ))
}

/// `K_1 + (2^s(2^r - 1) K_1  u  (2^s - 1)(K_1 + 2^(r+s-1) K_2))`: the power
/// graph of `Z_2^r x Z_4^s`. A zero-count leading part (`r = 0`) is omitted.
pub fn power_graph_expr_z2r4s(r: u32, s: u32) -> Result<GraphExpr> {
    if s == 0 {
        return Err(Error::InvalidParams(
            "s must be at least 1; use the Z_2^n builder for s = 0".into(),
        ));
    }
    let (r64, s64) = (r as u64, s as u64);
    let leaves = two_pow(s64) * (two_pow(r64) - 1u32);
    let blocks = two_pow(s64) - 1u32;
    let pairs = two_pow(r64 + s64 - 1);
    let k1 = || GraphExpr::Complete(BigUint::one());
    let block = GraphExpr::join(
        k1(),
        GraphExpr::copies(pairs, GraphExpr::Complete(BigUint::from(2u32)))?,
    );
    let mut parts = Vec::new();
    if !leaves.is_zero() {
        parts.push((leaves, k1()));
    }
    parts.push((blocks, block));
    Ok(GraphExpr::join(k1(), GraphExpr::union(parts)?))
}
