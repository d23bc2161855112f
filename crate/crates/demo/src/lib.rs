//! Browser front end: check a graph, generate a family member, or transform
//! a graph, each returning a JSON document with a drawing layout.
//!
//! The `*_json` functions are plain Rust so they can be tested natively; the
//! `#[wasm_bindgen]` wrappers only convert errors into JS exceptions.

mod layout;

use serde::Serialize;
use wasm_bindgen::prelude::*;

use harris::barnacles::{find_barnacles, grow_barnacle, simplify_all};
use harris::constructions::flower;
use harris::families::{iterate, justine_state, Family, LabeledFamilyState};
use harris::{emit_graph6, parse_graph6, Graph, Report};

pub use layout::layout;

/// Above this order the page draws the graph but skips the Harris check;
/// the toughness scan would freeze the tab.
pub const DEMO_VERIFY_MAX_ORDER: usize = 24;

#[derive(Serialize)]
struct View<'a> {
    graph6: String,
    order: usize,
    edges: Vec<(usize, usize)>,
    positions: Vec<[f64; 2]>,
    /// `None` when the graph is too large to check here.
    report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roles: Option<&'a std::collections::BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

fn view(g: &Graph, roles: Option<&LabeledFamilyState>, notes: Vec<String>) -> String {
    let graph6 = emit_graph6(g);
    let report = (g.n() <= DEMO_VERIFY_MAX_ORDER).then(|| Report::new(&graph6, g));
    let mut notes = notes;
    if report.is_none() {
        notes.push(format!(
            "order {} is above the in-browser check limit of {DEMO_VERIFY_MAX_ORDER}; use the CLI",
            g.n()
        ));
    }
    let v = View {
        order: g.n(),
        edges: g.edges(),
        positions: layout(g),
        report,
        roles: roles.map(|s| &s.roles),
        notes,
        graph6,
    };
    serde_json::to_string(&v).expect("view serializes")
}

fn parse(text: &str) -> Result<Graph, String> {
    parse_graph6(text.trim()).map_err(|e| e.to_string())
}

pub fn check_json(graph6: &str) -> Result<String, String> {
    Ok(view(&parse(graph6)?, None, Vec::new()))
}

/// `param` is the step count for hirotaka and shaw, the cycle length for
/// justine.
pub fn family_json(name: &str, param: usize) -> Result<String, String> {
    let family: Family = name.parse().map_err(|e: harris::Error| e.to_string())?;
    let state = match family {
        Family::Justine => justine_state(param).map_err(|e| e.to_string())?,
        f => iterate(f, param)
            .map_err(|e| e.to_string())?
            .pop()
            .expect("iterate returns the base at least"),
    };
    Ok(view(&state.graph, Some(&state), Vec::new()))
}

/// `op` is `flower`, `simplify` or `grow` (grows the first barnacle by one).
pub fn transform_json(op: &str, graph6: &str) -> Result<String, String> {
    let g = parse(graph6)?;
    let mut notes = Vec::new();
    let out = match op {
        "flower" => flower(&g).map_err(|e| e.to_string())?,
        "simplify" => {
            if find_barnacles(&g).iter().all(|b| b.k == 2) {
                notes.push("nothing to simplify".to_string());
            }
            simplify_all(&g)
        }
        "grow" => {
            let found = find_barnacles(&g);
            let b = found.first().ok_or("graph has no barnacle to grow")?;
            grow_barnacle(&g, b, 1).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown transform {other:?}")),
    };
    Ok(view(&out, None, notes))
}

#[wasm_bindgen]
pub fn check(graph6: &str) -> Result<String, JsValue> {
    check_json(graph6).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn family(name: &str, param: usize) -> Result<String, JsValue> {
    family_json(name, param).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn transform(op: &str, graph6: &str) -> Result<String, JsValue> {
    transform_json(op, graph6).map_err(|e| JsValue::from_str(&e))
}
