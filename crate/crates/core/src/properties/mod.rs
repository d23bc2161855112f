//! Eulerian, toughness, Hamiltonicity and Harris checks, each with a
//! witness that can be replayed against the input graph.

mod hamilton;
mod toughness;

use serde::{Deserialize, Serialize};

pub use hamilton::{
    backtrack_cycle, dp_cycle, exhaustive_cycle, find_hamiltonian_cycle, heuristic_cycle,
    validate_cycle, HamiltonicityVerdict, DP_MAX_ORDER,
};
pub use toughness::{is_tough, replays_violation, ToughnessVerdict};

use crate::graph::Graph;

/// Harris graphs need at least this many vertices; smaller orders are
/// excluded by convention.
pub const HARRIS_MIN_ORDER: usize = 3;

/// Largest order the front ends will run the full check on. Toughness scans
/// every vertex set up to size `(n - 1) / 2`, which takes seconds at 26 and
/// minutes past 30.
pub const VERIFY_MAX_ORDER: usize = 28;

/// Why a graph fails to be Eulerian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EulerWitness {
    OddVertex(usize),
    /// Two vertices in different components.
    Disconnection(usize, usize),
}

/// Connected with every degree even. `K1` counts as Eulerian.
pub fn is_eulerian(g: &Graph) -> (bool, Option<EulerWitness>) {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) % 2 == 1) {
        return (false, Some(EulerWitness::OddVertex(v)));
    }
    let reached = g.reach(0, g.vertices());
    if let Some(v) = (0..g.n()).find(|&v| !reached.contains(v)) {
        return (false, Some(EulerWitness::Disconnection(0, v)));
    }
    (true, None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarrisVerdict {
    pub eulerian: bool,
    pub euler_witness: Option<EulerWitness>,
    pub toughness: ToughnessVerdict,
    pub hamiltonicity: HamiltonicityVerdict,
    pub is_harris: bool,
}

/// Runs all three checks and fills every field.
pub fn is_harris(g: &Graph) -> HarrisVerdict {
    let (eulerian, euler_witness) = is_eulerian(g);
    let toughness = is_tough(g);
    let hamiltonicity = find_hamiltonian_cycle(g);
    let is_harris = g.n() >= HARRIS_MIN_ORDER
        && eulerian
        && toughness.tough
        && !hamiltonicity.hamiltonian;
    HarrisVerdict {
        eulerian,
        euler_witness,
        toughness,
        hamiltonicity,
        is_harris,
    }
}

/// Same answer as `is_harris(g).is_harris`, stopping at the first failed
/// check (Eulerian, then Hamiltonicity heuristic, then toughness, then the
/// exhaustive cycle search).
pub fn is_harris_fast(g: &Graph) -> bool {
    if g.n() < HARRIS_MIN_ORDER || !is_eulerian(g).0 {
        return false;
    }
    if heuristic_cycle(g, 0x4841_4d43).is_some() {
        return false;
    }
    is_tough(g).tough && exhaustive_cycle(g).is_none()
}

/// Minimum of `deg(u) + deg(v)` over non-adjacent pairs, or `None` when
/// every pair is adjacent.
pub fn sigma2(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let s = g.degree(u) + g.degree(v);
                best = Some(best.map_or(s, |b| b.min(s)));
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JungOutcome {
    HamiltonianByLemma,
    Unknown,
}

/// A 1-tough graph on at least 11 vertices with `sigma2 >= n - 4` is
/// Hamiltonian. Never reports non-Hamiltonicity. Toughness is computed when
/// the caller does not pass a verdict.
pub fn jung_shortcut(g: &Graph, toughness: Option<&ToughnessVerdict>) -> JungOutcome {
    let n = g.n();
    if n < 11 {
        return JungOutcome::Unknown;
    }
    // complete graphs have no independent pair and are Hamiltonian anyway
    let degree_ok = sigma2(g).is_none_or(|s| s + 4 >= n);
    if !degree_ok {
        return JungOutcome::Unknown;
    }
    let tough = match toughness {
        Some(t) => t.tough,
        None => is_tough(g).tough,
    };
    if tough {
        JungOutcome::HamiltonianByLemma
    } else {
        JungOutcome::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_examples() {
        assert_eq!(is_eulerian(&Graph::cycle(5).unwrap()), (true, None));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(is_eulerian(&p3), (false, Some(EulerWitness::OddVertex(0))));
        let tt = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(is_eulerian(&tt), (false, Some(EulerWitness::Disconnection(0, 3))));
        assert_eq!(is_eulerian(&Graph::empty(1).unwrap()), (true, None));
    }

    #[test]
    fn harris_negative_examples() {
        let c5 = is_harris(&Graph::cycle(5).unwrap());
        assert!(c5.eulerian && c5.toughness.tough && c5.hamiltonicity.hamiltonian);
        assert!(!c5.is_harris);
        let star = is_harris(&Graph::star(3).unwrap());
        assert!(!star.eulerian && !star.toughness.tough && !star.is_harris);
        // K1 is Eulerian, tough and non-Hamiltonian but below the order guard
        let k1 = is_harris(&Graph::empty(1).unwrap());
        assert!(k1.eulerian && k1.toughness.tough && !k1.hamiltonicity.hamiltonian);
        assert!(!k1.is_harris);
        assert!(!is_harris_fast(&Graph::empty(1).unwrap()));
    }

    #[test]
    fn sigma2_examples() {
        assert_eq!(sigma2(&Graph::complete(5).unwrap()), None);
        assert_eq!(sigma2(&Graph::cycle(5).unwrap()), Some(4));
        assert_eq!(sigma2(&Graph::star(3).unwrap()), Some(2));
    }

    #[test]
    fn jung_needs_eleven_vertices() {
        assert_eq!(jung_shortcut(&Graph::complete(10).unwrap(), None), JungOutcome::Unknown);
        assert_eq!(
            jung_shortcut(&Graph::complete(11).unwrap(), None),
            JungOutcome::HamiltonianByLemma
        );
        // C11 is tough but sigma2 = 4 < 7
        assert_eq!(jung_shortcut(&Graph::cycle(11).unwrap(), None), JungOutcome::Unknown);
    }

    #[test]
    fn jung_uses_supplied_verdict() {
        let k = Graph::complete(12).unwrap();
        let fake = ToughnessVerdict {
            tough: false,
            violating_set: None,
        };
        assert_eq!(jung_shortcut(&k, Some(&fake)), JungOutcome::Unknown);
    }
}
