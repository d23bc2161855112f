//! Barnacles: maximal paths whose internal vertices all have degree 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A maximal chain `x - internal[0] - ... - internal[k-2] - y` where every
/// internal vertex has degree 2 and neither endpoint does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barnacle {
    pub x: usize,
    pub y: usize,
    /// Internal vertices ordered from `x` to `y`.
    pub internal: Vec<usize>,
    /// Length in edges, `internal.len() + 1`.
    pub k: usize,
}

impl Barnacle {
    /// `x`, the internal vertices, then `y`.
    pub fn path(&self) -> Vec<usize> {
        let mut p = Vec::with_capacity(self.k + 1);
        p.push(self.x);
        p.extend_from_slice(&self.internal);
        p.push(self.y);
        p
    }

    /// Checks the barnacle against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidBarnacle(msg));
        let n = g.n();
        if self.internal.is_empty() {
            return fail("no internal vertex".into());
        }
        if self.k != self.internal.len() + 1 {
            return fail(format!("k={} but {} internal vertices", self.k, self.internal.len()));
        }
        if self.x == self.y {
            return fail(format!("both endpoints are {}", self.x));
        }
        let path = self.path();
        if let Some(&v) = path.iter().find(|&&v| v >= n) {
            return fail(format!("vertex {v} out of range"));
        }
        let distinct: VertexSet = path.iter().copied().collect();
        if distinct.len() != path.len() {
            return fail("path repeats a vertex".into());
        }
        for w in path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return fail(format!("{{{},{}}} is not an edge", w[0], w[1]));
            }
        }
        if let Some(&v) = self.internal.iter().find(|&&v| g.degree(v) != 2) {
            return fail(format!("internal vertex {v} has degree {}", g.degree(v)));
        }
        if g.degree(self.x) == 2 || g.degree(self.y) == 2 {
            return fail("an endpoint has degree 2, chain is not maximal".into());
        }
        Ok(())
    }
}

/// Degree-2 chains that are not barnacles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degenerate {
    /// A whole component that is a cycle of degree-2 vertices.
    Cycle(Vec<usize>),
    /// A chain leaving and re-entering the same vertex.
    Loop { anchor: usize, internal: Vec<usize> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BarnacleScan {
    pub barnacles: Vec<Barnacle>,
    pub diagnostics: Vec<Degenerate>,
}

/// All maximal barnacles, ordered by smallest internal vertex.
pub fn find_barnacles(g: &Graph) -> Vec<Barnacle> {
    scan_barnacles(g).barnacles
}

pub fn scan_barnacles(g: &Graph) -> BarnacleScan {
    let mut scan = BarnacleScan::default();
    let mut seen = VertexSet::EMPTY;
    for v in 0..g.n() {
        if g.degree(v) != 2 || seen.contains(v) {
            continue;
        }
        let mut nbrs = g.neighbors(v).iter();
        let (a, b) = (nbrs.next().unwrap(), nbrs.next().unwrap());
        let (left, left_end) = walk(g, v, a);
        if left_end == v {
            // closed loop of degree-2 vertices
            let mut cyc = vec![v];
            cyc.extend(left);
            for &u in &cyc {
                seen.insert(u);
            }
            scan.diagnostics.push(Degenerate::Cycle(cyc));
            continue;
        }
        let (right, right_end) = walk(g, v, b);
        let mut chain: Vec<usize> = left.into_iter().rev().collect();
        chain.push(v);
        chain.extend(right);
        for &u in &chain {
            seen.insert(u);
        }
        if left_end == right_end {
            scan.diagnostics.push(Degenerate::Loop {
                anchor: left_end,
                internal: chain,
            });
            continue;
        }
        let (x, y) = if left_end < right_end {
            (left_end, right_end)
        } else {
            chain.reverse();
            (right_end, left_end)
        };
        let k = chain.len() + 1;
        scan.barnacles.push(Barnacle {
            x,
            y,
            internal: chain,
            k,
        });
    }
    scan
}

/// Follows degree-2 vertices from `from` through `next`. Returns the
/// degree-2 vertices passed and the first vertex of other degree (or `from`
/// if the walk closes up).
fn walk(g: &Graph, from: usize, mut next: usize) -> (Vec<usize>, usize) {
    let mut prev = from;
    let mut passed = Vec::new();
    while next != from && g.degree(next) == 2 {
        passed.push(next);
        let onward = g.row(next) & !(1u64 << prev);
        prev = next;
        next = onward.trailing_zeros() as usize;
    }
    (passed, next)
}

pub fn is_barnacle_free(g: &Graph) -> bool {
    find_barnacles(g).is_empty()
}

/// Replaces a k-barnacle (k > 2) by a 2-barnacle. The first internal vertex
/// is kept as the new middle vertex; the rest are deleted and the surviving
/// vertices renumbered in increasing order.
pub fn simplify_barnacle(g: &Graph, b: &Barnacle) -> Result<Graph> {
    b.validate(g)?;
    if b.k == 2 {
        return Err(Error::AlreadyMinimal);
    }
    let mut h = g.clone();
    let keep = b.internal[0];
    h.add_edge(keep, b.y);
    let dropped: VertexSet = b.internal[1..].iter().copied().collect();
    let (out, _) = h.remove_vertices(dropped)?;
    Ok(out)
}

/// Subdivides the barnacle's last edge `extra` times. New vertices get ids
/// `n .. n + extra`.
pub fn grow_barnacle(g: &Graph, b: &Barnacle, extra: usize) -> Result<Graph> {
    Ok(grow_barnacle_tracked(g, b, extra)?.0)
}

/// Like [`grow_barnacle`], also returning the lengthened barnacle.
pub fn grow_barnacle_tracked(g: &Graph, b: &Barnacle, extra: usize) -> Result<(Graph, Barnacle)> {
    b.validate(g)?;
    if extra == 0 {
        return Err(Error::InvalidBarnacle("extra must be at least 1".into()));
    }
    let mut h = g.clone();
    let first = h.add_vertices(extra)?;
    let last = *b.internal.last().expect("validated");
    h.remove_edge(last, b.y);
    let mut prev = last;
    for v in first..first + extra {
        h.add_edge(prev, v);
        prev = v;
    }
    h.add_edge(prev, b.y);
    let mut internal = b.internal.clone();
    internal.extend(first..first + extra);
    let grown = Barnacle {
        x: b.x,
        y: b.y,
        k: internal.len() + 1,
        internal,
    };
    Ok((h, grown))
}

/// Shrinks every barnacle to length 2.
pub fn simplify_all(g: &Graph) -> Graph {
    let mut h = g.clone();
    while let Some(b) = find_barnacles(&h).into_iter().find(|b| b.k > 2) {
        h = simplify_barnacle(&h, &b).expect("freshly scanned barnacle is valid");
    }
    h
}
