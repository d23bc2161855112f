//! Slow, obviously-correct reference implementations. They work on
//! adjacency matrices built from `Graph::edges()` and share no code with the
//! library's algorithms.

#![allow(dead_code)]

use harris::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub struct UnionFind(Vec<usize>);

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Components of the graph with the vertices in `removed` deleted.
pub fn components(m: &Matrix, removed: &[bool]) -> usize {
    let n = m.len();
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if m[u][v] && !removed[u] && !removed[v] {
                uf.union(u, v);
            }
        }
    }
    let mut roots: Vec<usize> = (0..n).filter(|&v| !removed[v]).map(|v| uf.find(v)).collect();
    roots.sort();
    roots.dedup();
    roots.len()
}

/// Every subset, every size: no removal leaves more than |S| components
/// (except S empty, where the graph must be connected).
pub fn tough(g: &Graph) -> bool {
    let m = matrix(g);
    let n = g.n();
    for mask in 0u64..(1u64 << n) {
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let s = mask.count_ones() as usize;
        if s == n {
            continue;
        }
        let c = components(&m, &removed);
        if s == 0 && c > 1 {
            return false;
        }
        if s > 0 && c > s {
            return false;
        }
    }
    true
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Tries every ordering of vertices 1..n after vertex 0.
pub fn hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let m = matrix(g);
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut ok = m[0][rest[0]] && m[*rest.last().unwrap()][0];
        for w in rest.windows(2) {
            ok &= m[w[0]][w[1]];
        }
        if ok {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

pub fn connected(g: &Graph) -> bool {
    components(&matrix(g), &vec![false; g.n()]) == 1
}

pub fn eulerian(g: &Graph) -> bool {
    connected(g) && (0..g.n()).all(|v| g.edges().iter().filter(|&&(a, b)| a == v || b == v).count() % 2 == 0)
}

pub fn harris(g: &Graph) -> bool {
    g.n() >= 3 && eulerian(g) && tough(g) && !hamiltonian(g)
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ma, mb) = (matrix(a), matrix(b));
    let n = a.n();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|u| (u + 1..n).all(|v| ma[u][v] == mb[p[u]][p[v]])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random spanning tree plus extra random edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}
