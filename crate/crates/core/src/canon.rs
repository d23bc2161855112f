//! Canonical labeling by equitable-partition refinement and a search tree
//! over individualized vertices, pruned with automorphisms discovered at the
//! leaves.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{emit_graph6, pack_upper_triangle};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 32;

const MAX_GENERATORS: usize = 128;

/// Isomorphism-invariant fingerprint: the order followed by the packed
/// upper triangle of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn order(&self) -> usize {
        self.bytes[0] as usize
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:02x?})", self.bytes)
    }
}

/// Result of canonical labeling: the relabeled graph and the map
/// `labeling[v]` = canonical id of original vertex `v`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub graph: Graph,
    pub labeling: Vec<usize>,
}

impl Canonical {
    pub fn form(&self) -> CanonicalForm {
        let mut bytes = vec![self.graph.n() as u8];
        bytes.extend(pack_upper_triangle(&self.graph));
        CanonicalForm { bytes }
    }

    pub fn graph6(&self) -> String {
        emit_graph6(&self.graph)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonicalize(g)?.form())
}

/// graph6 string of the canonical relabeling; the census stores these.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(canonicalize(g)?.graph6())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

pub fn canonicalize(g: &Graph) -> Result<Canonical> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return Err(Error::Unsupported {
            what: "canonical labeling",
            n,
            ceiling: CANON_MAX_ORDER,
        });
    }
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut root = vec![VertexSet::full(n).0];
    refine(g, &mut root);
    let mut prefix = Vec::with_capacity(n);
    let _ = search.descend(&root, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    Ok(Canonical {
        graph: Graph::from_rows(best.rows),
        labeling: best.labeling,
    })
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbors in every other cell. Cells are ordered; a split cell is
/// replaced in place by its pieces sorted by neighbor count, so the result
/// depends only on the graph structure and the input cell order.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut splitter = 0;
    while splitter < cells.len() {
        let w = cells[splitter];
        let mut changed_at = None;
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            // bucket by neighbor count into w; counts are <= 64
            let mut buckets: [u64; 65] = [0; 65];
            let mut lo = 64usize;
            let mut hi = 0usize;
            for v in VertexSet(cell) {
                let c = (g.row(v) & w).count_ones() as usize;
                buckets[c] |= 1u64 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            let pieces: Vec<u64> = buckets[lo..=hi].iter().copied().filter(|&b| b != 0).collect();
            let k = pieces.len();
            cells.splice(i..=i, pieces);
            changed_at = Some(changed_at.map_or(i, |c: usize| c.min(i)));
            i += k;
        }
        splitter = match changed_at {
            // restart from the earliest changed cell so all new splitters are applied
            Some(c) => c.min(splitter + 1),
            None => splitter + 1,
        };
    }
}

struct Leaf {
    rows: Vec<u64>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when the search should unwind to depth `d`: the
    /// subtree being explored is the automorphic image of one already
    /// finished.
    fn descend(&mut self, cells: &[u64], prefix: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(cells, prefix);
        }
        let depth = prefix.len();
        // target: first smallest non-singleton cell
        let (ti, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");

        let mut tried: Vec<usize> = Vec::new();
        for v in VertexSet(target) {
            if !tried.is_empty() && self.equivalent_to_tried(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.descend(&child, prefix);
            prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// True if some automorphism fixing `prefix` pointwise maps a vertex in
    /// `tried` to `v`. Orbits come from the stored generators that fix the
    /// prefix.
    fn equivalent_to_tried(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for perm in &self.generators {
            if prefix.iter().all(|&p| perm[p] == p) {
                any = true;
                for (a, &b) in perm.iter().enumerate() {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let mut labeling = vec![0usize; self.n];
        for (pos, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        let rows = relabel_rows(self.g, &labeling);
        let leaf = Leaf {
            rows,
            labeling,
            path: path.to_vec(),
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                rows: leaf.rows.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let aut = automorphism(&first.labeling, &leaf.labeling);
            let d = common_prefix(&first.path, &leaf.path);
            self.push_generator(aut);
            return Some(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        match compare_rows(&leaf.rows, &best.rows) {
            Ordering::Equal => {
                let aut = automorphism(&best.labeling, &leaf.labeling);
                let d = common_prefix(&best.path, &leaf.path);
                self.push_generator(aut);
                Some(d)
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Less => None,
        }
    }

    fn push_generator(&mut self, aut: Vec<usize>) {
        if self.generators.len() < MAX_GENERATORS && aut.iter().enumerate().any(|(i, &j)| i != j) {
            self.generators.push(aut);
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Maps `v` to the vertex that `reference` labels the same way `other`
/// labels `v`.
fn automorphism(reference: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; reference.len()];
    for (v, &l) in reference.iter().enumerate() {
        inv[l] = v;
    }
    other.iter().map(|&l| inv[l]).collect()
}

fn relabel_rows(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for (u, &lu) in labeling.iter().enumerate() {
        let mut r = 0u64;
        for v in g.neighbors(u) {
            r |= 1u64 << labeling[v];
        }
        rows[lu] = r;
    }
    rows
}

fn compare_rows(a: &[u64], b: &[u64]) -> Ordering {
    a.iter().cmp(b.iter())
}
