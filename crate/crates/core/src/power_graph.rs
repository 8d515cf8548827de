//! Simple undirected graphs on a dense bit matrix, and the power graph of a group.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

const WORD: usize = 64;

/// A finite simple graph. Adjacency is a symmetric, irreflexive bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    labels: Option<Vec<GroupElement>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD);
        Graph {
            vertex_count: n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u != v {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.bits[u * self.words_per_row + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words_per_row + u / WORD] |= 1 << (u % WORD);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn labels(&self) -> Option<&[GroupElement]> {
        self.labels.as_deref()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.row(u)[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            });
        }
        Ok(self.row(v).iter().map(|w| w.count_ones() as usize).sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count)
            .map(|v| self.degree(v).expect("in range"))
            .collect()
    }

    /// Degrees sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.vertex_count).filter(move |&u| row[u / WORD] >> (u % WORD) & 1 == 1)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// One `u v` pair per line, 0-based, `u < v`, sorted.
    pub fn edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            writeln!(s, "{u} {v}").expect("writing to a String");
        }
        s
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut components = 0;
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        components
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.vertex_count * self.vertex_count.saturating_sub(1)
    }
}

/// Power graph of `group`: vertices are the elements in lexicographic order and
/// distinct `a`, `b` are adjacent when one lies in the cyclic subgroup of the other.
pub fn build_power_graph(group: &GroupSpec, cap: usize) -> Result<Graph> {
    let n = group.order_within(cap)?;
    let elements: Vec<GroupElement> = group.elements().collect();
    let mut graph = Graph::empty(n);
    for (i, a) in elements.iter().enumerate() {
        // Walk 2a, 3a, ... until the cycle returns to a.
        let mut acc = group.add(a, a);
        while acc != *a {
            graph.set_edge(i, group.index_of(&acc)?);
            acc = group.add(&acc, a);
        }
    }
    graph.labels = Some(elements);
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    fn pg(factors: &[u64]) -> Graph {
        build_power_graph(&make_group(factors).unwrap(), 4096).unwrap()
    }

    /// Oracle: adjacency straight from the definition via `is_power_of`.
    fn brute_power_graph(group: &GroupSpec) -> Graph {
        let elems: Vec<_> = group.elements().collect();
        let mut edges = Vec::new();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i + 1) {
                if group.is_power_of(a, b).unwrap() || group.is_power_of(b, a).unwrap() {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(elems.len(), edges).unwrap()
    }

    #[test]
    fn matches_definition() {
        for factors in [
            &[8u64][..],
            &[2, 4],
            &[4, 4],
            &[3, 3],
            &[6],
            &[2, 2, 2],
            &[2, 6],
            &[9, 3],
        ] {
            let group = make_group(factors).unwrap();
            let fast = build_power_graph(&group, 4096).unwrap();
            let slow = brute_power_graph(&group);
            assert_eq!(fast.edges(), slow.edges(), "{group}");
        }
    }

    #[test]
    fn cyclic_prime_power_is_complete() {
        let g = pg(&[8]);
        assert!(g.is_complete());
        assert_eq!(g.edge_count(), 28);
        assert_eq!(g.degree(3).unwrap(), 7);
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128] {
            assert!(pg(&[q]).is_complete(), "Z{q}");
        }
        assert!(!pg(&[6]).is_complete());
    }

    #[test]
    fn small_examples() {
        let trivial = pg(&[]);
        assert_eq!(trivial.vertex_count(), 1);
        assert_eq!(trivial.edge_count(), 0);

        let star = pg(&[2, 2]);
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(star.edge_list(), "0 1\n0 2\n0 3\n");

        let z2z4 = make_group(&[2, 4]).unwrap();
        let g = build_power_graph(&z2z4, 4096).unwrap();
        let idx = |c: &[u64]| z2z4.index_of(&z2z4.element(c).unwrap()).unwrap();
        assert_eq!(g.degree(idx(&[0, 2])).unwrap(), 5);
        assert_eq!(g.degree(idx(&[1, 0])).unwrap(), 1);
        assert_eq!(pg(&[4, 4]).edge_count(), 33);
        assert!(g.degree(8).is_err());
    }

    #[test]
    fn identity_is_universal_and_graph_connected() {
        for factors in [&[2u64, 4][..], &[3, 3, 3], &[4, 4], &[6, 2], &[5, 5]] {
            let g = pg(factors);
            assert_eq!(g.degree(0).unwrap(), g.vertex_count() - 1);
            assert_eq!(g.component_count(), 1);
            assert!(g.degrees().iter().all(|&d| d < g.vertex_count()));
            for u in 0..g.vertex_count() {
                assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    assert!(g.has_edge(v, u));
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let group = make_group(&[64, 64, 2]).unwrap();
        assert!(matches!(
            build_power_graph(&group, 4096),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (2, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.component_count(), 2);
    }
}
