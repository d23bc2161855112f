//! Prints the Harris graphs of one order with their degree sequences.
//!
//!     cargo run --release --example census -- 8

use harris::enumeration::enumerate_harris;

fn main() -> harris::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let result = enumerate_harris(n)?;
    for g in result.graphs() {
        println!("{} {}", harris::emit_graph6(&g), g.degree_sequence());
    }
    eprintln!(
        "{} Harris graphs of order {n} in {:.2}s",
        result.harris_count, result.wall_time_secs
    );
    Ok(())
}
