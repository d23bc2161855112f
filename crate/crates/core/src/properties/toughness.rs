use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Outcome of the 1-toughness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessVerdict {
    pub tough: bool,
    /// A set `S` with more than `|S|` components in `G - S`.
    pub violating_set: Option<VertexSet>,
}

impl ToughnessVerdict {
    fn tough() -> Self {
        ToughnessVerdict {
            tough: true,
            violating_set: None,
        }
    }

    fn violated(s: VertexSet) -> Self {
        ToughnessVerdict {
            tough: false,
            violating_set: Some(s),
        }
    }
}

/// Decides 1-toughness: for every `S` whose removal disconnects the graph,
/// `G - S` has at most `|S|` components.
///
/// A disconnected graph fails with `S = {}`. Since a violation needs at
/// least `|S| + 1` components among the `n - |S|` survivors, only sets with
/// `|S| <= (n - 1) / 2` are searched, smallest first, so the returned witness
/// has minimum size.
pub fn is_tough(g: &Graph) -> ToughnessVerdict {
    let n = g.n();
    if !g.is_connected() {
        return ToughnessVerdict::violated(VertexSet::EMPTY);
    }
    for size in 1..=(n - 1) / 2 {
        if let Some(s) = violating_set_of_size(g, size) {
            return ToughnessVerdict::violated(s);
        }
    }
    ToughnessVerdict::tough()
}

/// Smallest-first search over `size`-subsets in increasing mask order.
pub(crate) fn violating_set_of_size(g: &Graph, size: usize) -> Option<VertexSet> {
    let n = g.n();
    if size == 0 || size > n {
        return None;
    }
    if size == 1 {
        // cut vertices: cheap dedicated pass
        return (0..n)
            .find(|&v| g.count_components_capped(1u64 << v, 1) > 1)
            .map(VertexSet::singleton);
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s: u64 = (1u64 << size) - 1;
    loop {
        if g.count_components_capped(s, size) > size {
            return Some(VertexSet(s));
        }
        // Gosper's hack: next mask with the same popcount
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r & !limit != 0 {
            return None;
        }
        let next = (((r ^ s) >> 2) / c) | r;
        if next & !limit != 0 {
            return None;
        }
        s = next;
    }
}

/// True if `s` witnesses non-toughness of `g`.
pub fn replays_violation(g: &Graph, s: VertexSet) -> bool {
    g.components_after_removal(s).count() > s.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_are_tough() {
        for n in 3..12 {
            assert!(is_tough(&Graph::cycle(n).unwrap()).tough, "C{n}");
        }
    }

    #[test]
    fn star_fails_at_center() {
        let v = is_tough(&Graph::star(3).unwrap());
        assert!(!v.tough);
        assert_eq!(v.violating_set, Some(VertexSet::singleton(0)));
    }

    #[test]
    fn disconnected_fails_with_empty_set() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let v = is_tough(&g);
        assert_eq!(v.violating_set, Some(VertexSet::EMPTY));
        assert!(replays_violation(&g, VertexSet::EMPTY));
    }

    #[test]
    fn tiny_graphs() {
        assert!(is_tough(&Graph::empty(1).unwrap()).tough);
        assert!(is_tough(&Graph::complete(2).unwrap()).tough);
        assert!(!is_tough(&Graph::empty(2).unwrap()).tough);
        assert!(!is_tough(&Graph::path(3).unwrap()).tough);
    }

    #[test]
    fn k_2_3_needs_a_two_set() {
        // K_{2,3}: removing the two hubs leaves three isolated vertices
        let g = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let v = is_tough(&g);
        assert!(!v.tough);
        assert_eq!(v.violating_set, Some(VertexSet(0b11)));
    }

    #[test]
    fn complete_graph_has_no_violation() {
        let g = Graph::complete(10).unwrap();
        for size in 1..=4 {
            assert!(violating_set_of_size(&g, size).is_none());
        }
    }

    #[test]
    fn finds_violation_on_last_mask() {
        // only {8, 9} separates: vertex 10 hangs on both, 11 likewise
        let mut edges = vec![(10, 8), (10, 9), (11, 8), (11, 9)];
        for u in 0..10 {
            for v in u + 1..10 {
                edges.push((u, v));
            }
        }
        let g = Graph::new(12, &edges).unwrap();
        // removing {8,9} leaves K8 + 10 + 11 = 3 components > 2
        assert_eq!(violating_set_of_size(&g, 2), Some(VertexSet((1 << 8) | (1 << 9))));
    }
}
