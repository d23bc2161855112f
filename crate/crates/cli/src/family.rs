use std::fs;

use serde_json::{json, Map, Value};

use harris::emit_graph6;
use harris::families::{iterate, justine_state, Family, LabeledFamilyState};

use crate::failure::{verdict_line, verify, within_ceiling, Failure};
use crate::FamilyArgs;

pub fn run(args: &FamilyArgs) -> Result<(), Failure> {
    let family: Family = args.name.parse()?;
    let states = match (family, args.n) {
        (Family::Justine, Some(n)) => vec![justine_state(n)?],
        (_, Some(_)) => return Err(Failure::usage("--n only applies to the justine family")),
        (f, None) => iterate(f, args.steps)?,
    };
    if args.verify {
        // refuse up front rather than after printing half the output
        for s in &states {
            within_ceiling(&s.graph)?;
        }
    }
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|e| Failure::invalid(format!("{}: {e}", dir.display())))?;
    }

    let mut catalog = String::new();
    for s in &states {
        let g6 = emit_graph6(&s.graph);
        let verdict = if args.verify { Some(verify(&s.graph)?) } else { None };
        let mut record = role_record(s, &g6);
        if let Some(v) = &verdict {
            record["harris"] = json!(v.is_harris);
        }
        if args.json {
            println!("{record}");
        } else {
            println!("{g6}");
            if let Some(v) = &verdict {
                eprintln!("{family} step {} order {}: {}", s.step, s.graph.n(), verdict_line(v));
            }
        }
        if let Some(dir) = &args.out {
            let path = dir.join(format!("{family}-{}.json", s.step));
            let body = serde_json::to_string_pretty(&record).expect("JSON value serializes");
            fs::write(&path, body + "\n").map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
        }
        catalog.push_str(&g6);
        catalog.push('\n');
    }
    if let Some(dir) = &args.out {
        let path = dir.join(format!("{family}.g6"));
        fs::write(&path, catalog).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn role_record(s: &LabeledFamilyState, g6: &str) -> Value {
    let roles: Map<String, Value> = s.roles.iter().map(|(k, &v)| (k.clone(), json!(v))).collect();
    json!({
        "family": s.family,
        "step": s.step,
        "order": s.graph.n(),
        "graph6": g6,
        "roles": roles,
    })
}
