use harris::barnacles::{find_barnacles, grow_barnacle, simplify_all, simplify_barnacle, Barnacle};
use harris::constructions::{flower, graft};
use harris::{emit_graph6, Graph};

use crate::failure::{graph_arg, verdict_line, verify, Failure};
use crate::TransformCmd;

pub fn run(cmd: &TransformCmd) -> Result<(), Failure> {
    let (out, check) = match cmd {
        TransformCmd::Graft {
            g,
            h,
            edge_g,
            edge_h,
            verify,
        } => {
            let (_, g) = graph_arg(g)?;
            let (_, h) = graph_arg(h)?;
            let eg = pick_edge(&g, edge_g.as_deref(), "--edge-g")?;
            let eh = pick_edge(&h, edge_h.as_deref(), "--edge-h")?;
            (graft(&g, eg, &h, eh)?, *verify)
        }
        TransformCmd::Flower { g, verify } => {
            let (_, g) = graph_arg(g)?;
            (flower(&g)?, *verify)
        }
        TransformCmd::Simplify { g, barnacle, verify } => {
            let (_, g) = graph_arg(g)?;
            let found = find_barnacles(&g);
            let out = if found.is_empty() {
                eprintln!("warning: graph has no barnacles; output is unchanged");
                g
            } else if let Some(i) = barnacle {
                simplify_barnacle(&g, nth(&found, *i)?)?
            } else {
                if found.iter().all(|b| b.k == 2) {
                    eprintln!("warning: every barnacle already has length 2; output is unchanged");
                }
                simplify_all(&g)
            };
            (out, *verify)
        }
        TransformCmd::Grow {
            g,
            barnacle,
            by,
            verify,
        } => {
            let (_, g) = graph_arg(g)?;
            let found = find_barnacles(&g);
            (grow_barnacle(&g, nth(&found, *barnacle)?, *by)?, *verify)
        }
    };
    if check {
        let v = verify(&out)?;
        println!("{}", emit_graph6(&out));
        eprintln!("{}", verdict_line(&v));
    } else {
        println!("{}", emit_graph6(&out));
    }
    Ok(())
}

fn nth(found: &[Barnacle], i: usize) -> Result<&Barnacle, Failure> {
    found.get(i).ok_or_else(|| {
        Failure::invalid(format!(
            "barnacle index {i} out of range; the graph has {} barnacle(s)",
            found.len()
        ))
    })
}

fn pick_edge(g: &Graph, text: Option<&str>, flag: &str) -> Result<(usize, usize), Failure> {
    let Some(text) = text else {
        return g
            .edges()
            .first()
            .copied()
            .ok_or_else(|| Failure::invalid("graph has no edges to subdivide"));
    };
    let parsed = text
        .split_once([',', '-'])
        .and_then(|(u, v)| Some((u.trim().parse().ok()?, v.trim().parse().ok()?)));
    parsed.ok_or_else(|| Failure::usage(format!("{flag} expects `u,v`, got {text:?}")))
}
