//! Simple undirected graphs on at most 64 vertices, stored as one
//! neighbor bitmask per vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids packed into a 64-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
///
/// Equality is labeled edge-set equality. Use
/// [`canonical_form`](crate::canon::canonical_form) to compare up to
/// isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse into one
    /// edge; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from neighbor masks. Panics if the masks are not a
    /// valid symmetric loop-free adjacency.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> u & 1, 0, "self-loop at {u}");
            for v in VertexSet(row) {
                debug_assert!(v < adj.len() && adj[v] >> u & 1 == 1);
            }
        }
        Graph { adj }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { what: "cycle", n, min: 3 });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..4, spokes i ~ i+5, inner
    /// pentagram on 5..9.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("static edge list")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            let above = u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
            for v in VertexSet(self.adj[u] & above) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, VertexSet::full(self.n())) == VertexSet::full(self.n())
    }

    /// Vertices reachable from `start` inside `allowed`.
    pub(crate) fn reach(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let allowed = allowed.0;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Breaks `G - removed` into its connected components.
    pub fn components_after_removal(&self, removed: VertexSet) -> Components {
        let mut rest = VertexSet(VertexSet::full(self.n()).0 & !removed.0);
        let mut blocks = Vec::new();
        while let Some(v) = rest.first() {
            let block = self.reach(v, rest);
            rest.0 &= !block.0;
            blocks.push(block);
        }
        Components { blocks }
    }

    /// Number of components of `G - removed`, stopping early once the count
    /// exceeds `stop_above`.
    #[inline]
    pub(crate) fn count_components_capped(&self, removed: u64, stop_above: usize) -> usize {
        let mut rest = VertexSet::full(self.n()).0 & !removed;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let block = self.reach(v, VertexSet(rest)).0;
            rest &= !block;
            count += 1;
            if count > stop_above {
                break;
            }
        }
        count
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![0u64; self.n()];
        for (u, &pu) in perm.iter().enumerate() {
            let mut row = 0u64;
            for v in self.neighbors(u) {
                row |= 1u64 << perm[v];
            }
            adj[pu] = row;
        }
        Graph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let off = self.n();
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        Ok(g)
    }

    /// Deletes `removed` and renumbers the survivors in increasing order.
    /// Returns the new graph and the old-to-new id map.
    pub fn remove_vertices(&self, removed: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(next)?;
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                g.add_edge(a, b);
            }
        }
        Ok((g, map))
    }

    /// Appends `k` isolated vertices, returning the id of the first one.
    pub(crate) fn add_vertices(&mut self, k: usize) -> Result<usize> {
        let first = self.n();
        if first + k > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: first + k,
                max: MAX_VERTICES,
            });
        }
        self.adj.resize(first + k, 0);
        Ok(first)
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Connected components of a graph after vertex deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub blocks: Vec<VertexSet>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

/// Vertex degrees in non-increasing order. Displays as `6-4-4-4-2-2-2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut d = s
            .trim()
            .split('-')
            .map(|t| t.trim().parse())
            .collect::<std::result::Result<Vec<usize>, _>>()?;
        d.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_k4() {
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(c3.degree_sequence().to_string(), "2-2-2");
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.degree_sequence().to_string(), "3-3-3-3");
        assert_eq!(k4, Graph::complete(4).unwrap());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(5, &[(0, 0)]), Err(Error::SelfLoop { v: 0 })));
        let err = Graph::new(3, &[(0, 3)]).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { u: 0, v: 3, n: 3 }));
        assert!(err.to_string().contains("{0,3}"));
        assert!(matches!(Graph::new(0, &[]), Err(Error::EmptyGraph)));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Graph::cycle(5).unwrap().degree_sequence().to_string(), "2-2-2-2-2");
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degree_sequence().0.iter().all(|&d| d == 3));
        let s: DegreeSequence = "2-6-4-4-2-4-2".parse().unwrap();
        assert_eq!(s.to_string(), "6-4-4-4-2-2-2");
    }

    #[test]
    fn components_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.components_after_removal(VertexSet::singleton(1)).count(), 2);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.components_after_removal(VertexSet::EMPTY).count(), 1);
        let star = Graph::star(3).unwrap();
        let comps = star.components_after_removal(VertexSet::singleton(0));
        assert_eq!(comps.count(), 3);
        assert_eq!(comps.blocks, vec![VertexSet(0b10), VertexSet(0b100), VertexSet(0b1000)]);
        let all = star.components_after_removal(star.vertices());
        assert_eq!(all.count(), 0);
        assert!(all.blocks.is_empty());
    }

    #[test]
    fn remove_and_relabel() {
        let c5 = Graph::cycle(5).unwrap();
        let (p, map) = c5.remove_vertices(VertexSet::singleton(0)).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edge_count(), 3);
        assert_eq!(map[0], None);
        assert_eq!(map[4], Some(3));
        let r = c5.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(r.edge_count(), 5);
        assert!(r.has_edge(4, 3) && r.has_edge(0, 4));
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 5, 63].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(63) && !s.contains(2));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 5, 63]);
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
