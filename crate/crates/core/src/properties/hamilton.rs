use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Largest order solved by the subset dynamic program; larger graphs go to
/// the pruned backtracking search.
pub const DP_MAX_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonicityVerdict {
    pub hamiltonian: bool,
    /// A spanning cycle as a vertex sequence; the closing edge is implied.
    pub cycle: Option<Vec<usize>>,
}

impl HamiltonicityVerdict {
    fn from_cycle(cycle: Option<Vec<usize>>) -> Self {
        HamiltonicityVerdict {
            hamiltonian: cycle.is_some(),
            cycle,
        }
    }
}

/// Exact Hamiltonicity test with a cycle witness on success.
///
/// Runs a rotation-extension heuristic first; if it fails, the subset
/// dynamic program (n <= 24) or backtracking (n > 24) settles the question.
pub fn find_hamiltonian_cycle(g: &Graph) -> HamiltonicityVerdict {
    if trivially_non_hamiltonian(g) {
        return HamiltonicityVerdict::from_cycle(None);
    }
    if let Some(c) = heuristic_cycle(g, 0x4841_4d43) {
        return HamiltonicityVerdict::from_cycle(Some(c));
    }
    HamiltonicityVerdict::from_cycle(exhaustive_cycle(g))
}

/// Exhaustive search only; no heuristic pass.
pub fn exhaustive_cycle(g: &Graph) -> Option<Vec<usize>> {
    if trivially_non_hamiltonian(g) {
        return None;
    }
    if g.n() <= DP_MAX_ORDER {
        dp_cycle(g)
    } else {
        backtrack_cycle(g)
    }
}

fn trivially_non_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_connected()
}

/// Checks that `cycle` visits every vertex once along edges of `g` and
/// closes back to its start.
pub fn validate_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &v in cycle {
        if v >= n || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Pósa rotation-extension with a fixed seed. A returned cycle is always
/// valid; `None` proves nothing.
pub fn heuristic_cycle(g: &Graph, seed: u64) -> Option<Vec<usize>> {
    let n = g.n();
    if trivially_non_hamiltonian(g) {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let restarts = 4;
    let steps = 8 * n * n;
    let mut path: Vec<usize> = Vec::with_capacity(n);
    let mut choices: Vec<usize> = Vec::with_capacity(n);

    for _ in 0..restarts {
        path.clear();
        let start = rng.random_range(0..n);
        path.push(start);
        let mut on_path = 1u64 << start;

        for _ in 0..steps {
            let end = *path.last().expect("path is non-empty");
            let fresh = g.row(end) & !on_path;
            if fresh != 0 {
                choices.clear();
                choices.extend(VertexSet(fresh));
                let next = *choices.choose(&mut rng).expect("non-empty");
                path.push(next);
                on_path |= 1u64 << next;
                continue;
            }
            if path.len() == n && g.has_edge(end, path[0]) {
                return Some(path.clone());
            }
            // rotate: pick a path neighbor p_i of the end, reverse the tail
            // after it so p_{i+1} becomes the new end
            let len = path.len();
            choices.clear();
            choices.extend(
                (0..len.saturating_sub(2)).filter(|&i| g.has_edge(end, path[i])),
            );
            let Some(&i) = choices.choose(&mut rng) else {
                break;
            };
            path[i + 1..].reverse();
        }
    }
    None
}

/// Held-Karp style reachability over (visited set, endpoint) with the last
/// vertex as the fixed start.
pub fn dp_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    assert!(n <= DP_MAX_ORDER, "dp_cycle supports n <= {DP_MAX_ORDER}");
    if n < 3 {
        return None;
    }
    let start = n - 1;
    let m = n - 1;
    let low = (1u32 << m) - 1;
    let adj: Vec<u32> = (0..n).map(|v| (g.row(v) as u32) & low).collect();
    let start_adj = adj[start];

    // reach[mask] = endpoints v in mask with a path start -> v through exactly mask
    let mut reach = vec![0u32; 1usize << m];
    for v in VertexSet(start_adj as u64) {
        reach[1usize << v] = 1u32 << v;
    }
    for mask in 1usize..(1usize << m) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = adj[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros();
                ext &= ext - 1;
                reach[mask | (1usize << w)] |= 1u32 << w;
            }
        }
    }

    let full = low as usize;
    let closing = reach[full] & start_adj;
    if closing == 0 {
        return None;
    }
    let mut v = closing.trailing_zeros() as usize;
    let mut mask = full;
    let mut rev = vec![v];
    while mask.count_ones() > 1 {
        let prev = mask & !(1usize << v);
        let cand = reach[prev] & adj[v];
        let u = cand.trailing_zeros() as usize;
        rev.push(u);
        mask = prev;
        v = u;
    }
    let mut cycle = vec![start];
    cycle.extend(rev.into_iter().rev());
    debug_assert!(validate_cycle(g, &cycle));
    Some(cycle)
}

/// Depth-first path extension with forced-edge and connectivity pruning.
pub fn backtrack_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if trivially_non_hamiltonian(g) {
        return None;
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 3");
    let mut search = Backtrack {
        g,
        n,
        start,
        path: vec![start],
        on_path: 1u64 << start,
    };
    if search.extend() {
        Some(search.path)
    } else {
        None
    }
}

struct Backtrack<'a> {
    g: &'a Graph,
    n: usize,
    start: usize,
    path: Vec<usize>,
    on_path: u64,
}

impl Backtrack<'_> {
    fn extend(&mut self) -> bool {
        let end = *self.path.last().expect("non-empty");
        if self.path.len() == self.n {
            return self.g.has_edge(end, self.start);
        }
        let all = VertexSet::full(self.n).0;
        let rest = all & !self.on_path;
        let open = rest | (1u64 << end) | (1u64 << self.start);

        // every unvisited vertex needs two cycle neighbors among open vertices;
        // a vertex with exactly two must use both edges
        let mut forced_end: Option<usize> = None;
        let mut forced_start = 0usize;
        for w in VertexSet(rest) {
            let avail = self.g.row(w) & open;
            let k = avail.count_ones();
            if k < 2 {
                return false;
            }
            if k == 2 && self.path.len() > 1 {
                if avail >> end & 1 == 1 {
                    if forced_end.is_some() {
                        return false;
                    }
                    forced_end = Some(w);
                }
                if avail >> self.start & 1 == 1 {
                    forced_start += 1;
                    if forced_start > 1 && rest.count_ones() > 1 {
                        return false;
                    }
                }
            }
        }
        // the remaining path runs from end through all of rest to start
        if self.g.reach(end, VertexSet(open)).0 & rest != rest {
            return false;
        }

        let candidates = match forced_end {
            Some(w) => 1u64 << w,
            None => self.g.row(end) & rest,
        };
        for w in VertexSet(candidates) {
            self.path.push(w);
            self.on_path |= 1u64 << w;
            if self.extend() {
                return true;
            }
            self.on_path &= !(1u64 << w);
            self.path.pop();
        }
        false
    }
}
