//! Grafting two graphs through W5 subdivisions, and flowering a graph into
//! an even-degree one by adding 2-barnacles along shortest paths.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where a W5 (4-cycle plus hub) was spliced into an edge `{x, y}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W5Subdivision {
    pub x: usize,
    pub y: usize,
    pub hub: usize,
    /// Rim in cyclic order; `rim[0]` is joined to `x`, `rim[2]` to `y`.
    pub rim: [usize; 4],
    pub attach_x: usize,
    pub attach_y: usize,
    /// The two rim vertices left with degree 3, lower id first.
    pub free_pair: [usize; 2],
}

/// Removes `{x, y}` and splices in a W5 whose opposite rim vertices connect
/// to `x` and `y`. New vertices are `n` (hub) and `n+1 .. n+4` (rim).
pub fn subdivide_edge_by_w5(g: &Graph, x: usize, y: usize) -> Result<(Graph, W5Subdivision)> {
    if !g.has_edge(x, y) {
        return Err(Error::MissingEdge { u: x, v: y });
    }
    let mut h = g.clone();
    let hub = h.add_vertices(5)?;
    let rim = [hub + 1, hub + 2, hub + 3, hub + 4];
    h.remove_edge(x, y);
    for i in 0..4 {
        h.add_edge(hub, rim[i]);
        h.add_edge(rim[i], rim[(i + 1) % 4]);
    }
    h.add_edge(x, rim[0]);
    h.add_edge(y, rim[2]);
    let sub = W5Subdivision {
        x,
        y,
        hub,
        rim,
        attach_x: rim[0],
        attach_y: rim[2],
        free_pair: [rim[1], rim[3]],
    };
    Ok((h, sub))
}

/// `G ⊕ H`: subdivide `eg` in `g` and `eh` in `h` by W5, take the disjoint
/// union, and join the free pairs lower id to lower id.
///
/// The result is not Harris for every choice of edges. Grafting the order-7
/// graph with itself gives a Harris graph for 36 of the 144 edge pairs:
/// exactly those where both edges touch a degree-2 vertex. For the other
/// pairs, removing an endpoint of the cut edge along with nearby vertices
/// breaks toughness. See `examples/graft_edges.rs`.
pub fn graft(g: &Graph, eg: (usize, usize), h: &Graph, eh: (usize, usize)) -> Result<Graph> {
    let (g5, sg) = subdivide_edge_by_w5(g, eg.0, eg.1)?;
    let (h5, sh) = subdivide_edge_by_w5(h, eh.0, eh.1)?;
    let off = g5.n();
    let mut out = g5.disjoint_union(&h5)?;
    for i in 0..2 {
        out.add_edge(sg.free_pair[i], sh.free_pair[i] + off);
    }
    Ok(out)
}

/// Pairs up odd-degree vertices by adding 2-barnacles along shortest paths
/// until every degree is even. Input vertices and edges are kept; each new
/// vertex has degree 2.
///
/// Tie-breaks: the lowest-id odd vertex starts; the nearest odd vertex is
/// chosen by BFS distance, then lowest id; the path follows BFS parents
/// discovered in ascending neighbor order.
///
/// Flowering never makes a non-Hamiltonian graph Hamiltonian, but it can
/// destroy toughness. `G?LS~W` is tough and non-Hamiltonian, yet every
/// flowering of it puts a second 2-barnacle beside an existing one, and
/// deleting their two shared endpoints leaves three components.
pub fn flower(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut h = g.clone();
    loop {
        let Some(start) = (0..h.n()).find(|&v| h.degree(v) % 2 == 1) else {
            return Ok(h);
        };
        let path = path_to_nearest_odd(&h, start);
        for pair in path.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let b_was_odd = h.degree(b) % 2 == 1;
            let c = h.add_vertices(1)?;
            h.add_edge(a, c);
            h.add_edge(c, b);
            if b_was_odd {
                break;
            }
        }
    }
}

/// BFS from `start` to the closest other odd-degree vertex; returns the
/// path `start .. target`.
fn path_to_nearest_odd(g: &Graph, start: usize) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut target: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        if let Some(t) = target {
            if dist[u] >= dist[t] {
                break;
            }
        }
        for w in g.neighbors(u) {
            if dist[w] != usize::MAX {
                continue;
            }
            dist[w] = dist[u] + 1;
            parent[w] = u;
            if g.degree(w) % 2 == 1 {
                target = Some(target.map_or(w, |t| t.min(w)));
            }
            queue.push_back(w);
        }
    }
    // handshake lemma guarantees a second odd vertex in a connected graph
    let mut v = target.expect("connected graph has an even number of odd vertices");
    let mut path = vec![v];
    while v != start {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}
