//! The Hirotaka, Shaw and Justine families of Harris graphs.
//!
//! Hirotaka and Shaw graphs grow step by step from a labeled base graph;
//! the role names (`A`, `B`, `C`, `v1..vk` and `a`, `b_i`, `c_i`, `d_i`,
//! `e_i`) say where the next step attaches. Justine graphs are built
//! directly from an odd cycle length.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hirotaka,
    Shaw,
    Justine,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hirotaka => "hirotaka",
            Family::Shaw => "shaw",
            Family::Justine => "justine",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hirotaka" => Ok(Family::Hirotaka),
            "shaw" => Ok(Family::Shaw),
            "justine" => Ok(Family::Justine),
            other => Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        }
    }
}

/// A family member together with its named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledFamilyState {
    pub family: Family,
    pub graph: Graph,
    pub roles: BTreeMap<String, usize>,
    pub step: usize,
}

impl LabeledFamilyState {
    pub fn role(&self, name: &str) -> Option<usize> {
        self.roles.get(name).copied()
    }

    /// Roles sorted by vertex id, for reports.
    pub fn roles_by_vertex(&self) -> Vec<(usize, &str)> {
        let mut v: Vec<_> = self.roles.iter().map(|(k, &id)| (id, k.as_str())).collect();
        v.sort();
        v
    }

    fn require(&self, family: Family, name: &str) -> Result<usize> {
        self.role(name).ok_or_else(|| Error::SchemaMismatch {
            family: family.name(),
            reason: format!("missing role {name}"),
        })
    }

    /// Every role names a distinct live vertex.
    fn check_roles_distinct(&self) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        for (name, &v) in &self.roles {
            if v >= self.graph.n() || seen.contains(v) {
                return Err(Error::SchemaMismatch {
                    family: self.family.name(),
                    reason: format!("role {name} -> {v} is out of range or shared"),
                });
            }
            seen.insert(v);
        }
        Ok(())
    }
}

fn roles(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// The unique Harris graph of order 7 (degrees 6-4-4-4-2-2-2): a `K4` on
/// `{A, C, v2, v3}` with 2-barnacles `A-B-C`, `C-v1-v2` and `v3-v4-C`.
///
/// `C` is adjacent to everything and `A` is not adjacent to `v4`, so the
/// step's new edge `{A, v_k}` is always fresh.
pub fn hirotaka_base() -> LabeledFamilyState {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const V1: usize = 3;
    const V2: usize = 4;
    const V3: usize = 5;
    const V4: usize = 6;
    let edges = [
        (A, B),
        (B, C),
        (A, C),
        (C, V1),
        (V1, V2),
        (V2, A),
        (V2, C),
        (V2, V3),
        (V3, A),
        (V3, C),
        (V3, V4),
        (V4, C),
    ];
    LabeledFamilyState {
        family: Family::Hirotaka,
        graph: Graph::new(7, &edges).expect("static edge list"),
        roles: roles(&[
            ("A", A),
            ("B", B),
            ("C", C),
            ("v1", V1),
            ("v2", V2),
            ("v3", V3),
            ("v4", V4),
        ]),
        step: 0,
    }
}

/// Adds `v_{k+1}`, `v_{k+2}` and the edges `{v_k, v_{k+1}}`,
/// `{v_{k+1}, v_{k+2}}`, `{A, v_k}`, `{A, v_{k+1}}`, `{C, v_{k+1}}`,
/// `{C, v_{k+2}}`.
pub fn hirotaka_step(state: &LabeledFamilyState) -> Result<LabeledFamilyState> {
    let fam = Family::Hirotaka;
    if state.family != fam {
        return Err(Error::SchemaMismatch {
            family: fam.name(),
            reason: format!("state belongs to the {} family", state.family),
        });
    }
    state.check_roles_distinct()?;
    let k = state.graph.n().checked_sub(3).filter(|&k| k >= 1).ok_or_else(|| {
        Error::SchemaMismatch {
            family: fam.name(),
            reason: "graph too small".into(),
        }
    })?;
    if state.roles.len() != k + 3 {
        return Err(Error::SchemaMismatch {
            family: fam.name(),
            reason: format!("expected {} roles, found {}", k + 3, state.roles.len()),
        });
    }
    let a = state.require(fam, "A")?;
    let c = state.require(fam, "C")?;
    state.require(fam, "B")?;
    for i in 1..=k {
        state.require(fam, &format!("v{i}"))?;
    }
    let vk = state.require(fam, &format!("v{k}"))?;
    if state.graph.has_edge(a, vk) {
        return Err(Error::SchemaMismatch {
            family: fam.name(),
            reason: format!("A is already adjacent to v{k}"),
        });
    }

    let mut g = state.graph.clone();
    let v1 = g.add_vertices(2)?;
    let v2 = v1 + 1;
    for (x, y) in [(vk, v1), (v1, v2), (a, vk), (a, v1), (c, v1), (c, v2)] {
        g.add_edge(x, y);
    }
    let mut roles = state.roles.clone();
    roles.insert(format!("v{}", k + 1), v1);
    roles.insert(format!("v{}", k + 2), v2);
    Ok(LabeledFamilyState {
        family: fam,
        graph: g,
        roles,
        step: state.step + 1,
    })
}

/// Shaw-9-14: hub `a` joined by 2-barnacles `a-b1-d1`, `a-c1-e1`,
/// `a-b2-d2`, `a-c2-e2` to a `K4` on `{d1, e1, d2, e2}`.
pub fn shaw_base() -> LabeledFamilyState {
    let names = ["a", "b1", "c1", "d1", "e1", "b2", "c2", "d2", "e2"];
    let id = |s: &str| names.iter().position(|&n| n == s).expect("known role");
    let mut edges = Vec::new();
    for i in 1..=2 {
        let (b, c, d, e) = (
            id(&format!("b{i}")),
            id(&format!("c{i}")),
            id(&format!("d{i}")),
            id(&format!("e{i}")),
        );
        edges.extend([(id("a"), b), (b, d), (id("a"), c), (c, e)]);
    }
    let k4 = [id("d1"), id("e1"), id("d2"), id("e2")];
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push((k4[i], k4[j]));
        }
    }
    LabeledFamilyState {
        family: Family::Shaw,
        graph: Graph::new(9, &edges).expect("static edge list"),
        roles: names.iter().enumerate().map(|(i, n)| (n.to_string(), i)).collect(),
        step: 0,
    }
}

/// Adds `b_{k+1}, c_{k+1}, d_{k+1}, e_{k+1}`: two new 2-barnacles from `a`
/// and a new `K4` on `{d_k, e_k, d_{k+1}, e_{k+1}}`.
///
/// The barnacles through `b_k` and `c_k` still end at `d_k` and `e_k`, so
/// removing `{a, d_k, e_k}` leaves four components and the result is not
/// 1-tough. The step is applied as specified; callers should check the
/// output rather than assume it is Harris.
pub fn shaw_step(state: &LabeledFamilyState) -> Result<LabeledFamilyState> {
    let fam = Family::Shaw;
    if state.family != fam {
        return Err(Error::SchemaMismatch {
            family: fam.name(),
            reason: format!("state belongs to the {} family", state.family),
        });
    }
    state.check_roles_distinct()?;
    let k = (state.graph.n().saturating_sub(1)) / 4;
    if k < 2 || state.graph.n() != 4 * k + 1 || state.roles.len() != 4 * k + 1 {
        return Err(Error::SchemaMismatch {
            family: fam.name(),
            reason: format!("order {} is not 4k+1 with matching roles", state.graph.n()),
        });
    }
    let a = state.require(fam, "a")?;
    for i in 1..=k {
        for p in ["b", "c", "d", "e"] {
            state.require(fam, &format!("{p}{i}"))?;
        }
    }
    let dk = state.require(fam, &format!("d{k}"))?;
    let ek = state.require(fam, &format!("e{k}"))?;

    let mut g = state.graph.clone();
    let b = g.add_vertices(4)?;
    let (c, d, e) = (b + 1, b + 2, b + 3);
    for (x, y) in [
        (a, b),
        (a, c),
        (b, d),
        (c, e),
        (dk, e),
        (ek, d),
        (dk, d),
        (ek, e),
        (d, e),
    ] {
        g.add_edge(x, y);
    }
    let mut roles = state.roles.clone();
    let j = k + 1;
    roles.insert(format!("b{j}"), b);
    roles.insert(format!("c{j}"), c);
    roles.insert(format!("d{j}"), d);
    roles.insert(format!("e{j}"), e);
    Ok(LabeledFamilyState {
        family: fam,
        graph: g,
        roles,
        step: state.step + 1,
    })
}

/// Two `n`-cycles `a_1..a_n` and `b_1..b_n`, rungs `{a_i, b_i}`, and a
/// 2-barnacle `a_i - c_i - b_i` beside every rung. Requires odd `n >= 3`.
pub fn justine(n: usize) -> Result<Graph> {
    Ok(justine_state(n)?.graph)
}

/// Justine graph with roles `a{i}`, `b{i}`, `c{i}` (1-based). Vertex ids:
/// `a_i = i-1`, `b_i = n+i-1`, `c_i = 2n+i-1`.
pub fn justine_state(n: usize) -> Result<LabeledFamilyState> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidFamily(format!(
            "Justine cycle length must be odd and at least 3, got {n}"
        )));
    }
    let mut edges = Vec::with_capacity(5 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((i, j));
        edges.push((n + i, n + j));
        edges.push((i, n + i));
        edges.push((i, 2 * n + i));
        edges.push((2 * n + i, n + i));
    }
    let mut roles = BTreeMap::new();
    for i in 0..n {
        roles.insert(format!("a{}", i + 1), i);
        roles.insert(format!("b{}", i + 1), n + i);
        roles.insert(format!("c{}", i + 1), 2 * n + i);
    }
    Ok(LabeledFamilyState {
        family: Family::Justine,
        graph: Graph::new(3 * n, &edges)?,
        roles,
        step: (n - 3) / 2,
    })
}

/// Base state followed by `steps` applications of the family step.
pub fn iterate(family: Family, steps: usize) -> Result<Vec<LabeledFamilyState>> {
    let (base, step): (LabeledFamilyState, fn(&LabeledFamilyState) -> Result<LabeledFamilyState>) =
        match family {
            Family::Hirotaka => (hirotaka_base(), hirotaka_step),
            Family::Shaw => (shaw_base(), shaw_step),
            Family::Justine => {
                return (0..=steps).map(|s| justine_state(3 + 2 * s)).collect();
            }
        };
    let mut out = vec![base];
    for _ in 0..steps {
        let next = step(out.last().expect("non-empty"))?;
        out.push(next);
    }
    Ok(out)
}
