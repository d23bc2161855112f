//! Grafts two catalog graphs along every pair of edges and reports which
//! choices give a Harris graph.
//!
//! Usage: `cargo run --release --example graft_edges [order-of-G] [order-of-H]`

use harris::constructions::graft;
use harris::enumeration::enumerate_harris;
use harris::{emit_graph6, is_harris};
use rayon::prelude::*;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("order"));
    let (a, b) = (args.next().unwrap_or(7), args.next().unwrap_or(7));
    let g = enumerate_harris(a).unwrap().graphs().remove(0);
    let h = enumerate_harris(b).unwrap().graphs().remove(0);
    let combos: Vec<_> = g.edges().into_iter().flat_map(|x| h.edges().into_iter().map(move |y| (x, y))).collect();
    let results: Vec<_> = combos
        .par_iter()
        .map(|&(x, y)| (x, y, is_harris(&graft(&g, x, &h, y).unwrap()).is_harris))
        .collect();
    let touches_two = |gr: &harris::Graph, (u, v): (usize, usize)| gr.degree(u) == 2 || gr.degree(v) == 2;
    for (x, y, ok) in &results {
        println!(
            "{x:?} {y:?} {} (degree-2 endpoint: {} / {})",
            if *ok { "harris" } else { "not harris" },
            touches_two(&g, *x),
            touches_two(&h, *y)
        );
    }
    let ok = results.iter().filter(|r| r.2).count();
    println!("{} + {}: {ok} of {} edge pairs give a Harris graph", emit_graph6(&g), emit_graph6(&h), results.len());
}
