//! The per-graph JSON report emitted by `harris check`.

use serde::{Deserialize, Serialize};

use crate::barnacles::{find_barnacles, Barnacle};
use crate::graph::{Graph, VertexSet};
use crate::properties::{is_harris, EulerWitness};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnection: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_cycle: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub order: usize,
    pub edges: usize,
    pub eulerian: bool,
    pub tough: bool,
    pub hamiltonian: bool,
    pub harris: bool,
    pub witnesses: Witnesses,
    pub barnacles: Vec<Barnacle>,
    pub degree_sequence: String,
}

impl Report {
    pub fn new(input: &str, g: &Graph) -> Report {
        let v = is_harris(g);
        let mut witnesses = Witnesses::default();
        match v.euler_witness {
            Some(EulerWitness::OddVertex(x)) => witnesses.odd_vertex = Some(x),
            Some(EulerWitness::Disconnection(a, b)) => witnesses.disconnection = Some([a, b]),
            None => {}
        }
        witnesses.violating_set = v.toughness.violating_set;
        witnesses.hamiltonian_cycle = v.hamiltonicity.cycle.clone();
        Report {
            input: input.to_string(),
            order: g.n(),
            edges: g.edge_count(),
            eulerian: v.eulerian,
            tough: v.toughness.tough,
            hamiltonian: v.hamiltonicity.hamiltonian,
            harris: v.is_harris,
            witnesses,
            barnacles: find_barnacles(g),
            degree_sequence: g.degree_sequence().to_string(),
        }
    }
}
