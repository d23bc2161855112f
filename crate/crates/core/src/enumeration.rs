//! Exhaustive census of Harris graphs of a fixed order.
//!
//! Every even-degree labeled graph on `n` vertices is a sum of triangles
//! `{0, i, j}` (the fundamental cycles of the star at vertex 0 in `K_n`), so
//! the search space is the `C(n-1, 2)`-dimensional cycle space of `K_n`.
//! It is walked in Gray-code order, one triangle toggle per step. The space
//! is cut into work units by fixing the highest basis coefficients; units are
//! independent and can be processed in any order or in parallel.
//!
//! Labeled survivors must have non-increasing degrees `deg(0) >= deg(1) >=
//! ...`. Every isomorphism class has such a labeling, so this keeps at least
//! one representative per class while discarding most relabelings early.
//! After the structural filters each survivor is canonically labeled and
//! each class is classified once per unit.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_graph6;
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::graph6::parse_graph6;
use crate::properties::{exhaustive_cycle, heuristic_cycle, is_tough};

/// Largest order the census accepts by default.
pub const CENSUS_MAX_ORDER: usize = 10;
/// Hard limit with [`CensusConfig::allow_beyond_ceiling`]; beyond desk scale.
pub const CENSUS_HARD_MAX_ORDER: usize = 12;
pub const CENSUS_MIN_ORDER: usize = 3;
pub const CHECKPOINT_FORMAT: u32 = 1;

const HEURISTIC_SEED: u64 = 0x4841_4d43;

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub threads: usize,
    /// Number of basis coefficients fixed per work unit; clamped to the
    /// cycle-space dimension.
    pub unit_bits: u32,
    /// Written after every batch of units when set.
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many units have completed (including previously
    /// completed ones when resuming) and return a checkpoint.
    pub stop_after_units: Option<usize>,
    pub allow_beyond_ceiling: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            threads: 1,
            unit_bits: 10,
            checkpoint: None,
            stop_after_units: None,
            allow_beyond_ceiling: false,
        }
    }
}

/// Why an isomorphism class was rejected, or that it is Harris.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassVerdict {
    HamiltonianHeuristic,
    HamiltonianExhaustive,
    NotTough,
    Harris,
}

/// Filter-stage counts. Labeled counts cover every visited labeled graph;
/// class counts cover distinct isomorphism classes reaching classification.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageStats {
    pub labeled_visited: u64,
    pub labeled_degree_ordered: u64,
    pub labeled_connected: u64,
    pub labeled_biconnected: u64,
    pub classes: u64,
    pub rejected_hamiltonian_heuristic: u64,
    pub rejected_hamiltonian_exhaustive: u64,
    pub rejected_not_tough: u64,
    pub harris: u64,
}

impl StageStats {
    fn add_labeled(&mut self, other: &LabeledCounts) {
        self.labeled_visited += other.visited;
        self.labeled_degree_ordered += other.degree_ordered;
        self.labeled_connected += other.connected;
        self.labeled_biconnected += other.biconnected;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
struct LabeledCounts {
    visited: u64,
    degree_ordered: u64,
    connected: u64,
    biconnected: u64,
}

impl LabeledCounts {
    fn merge(&mut self, o: &LabeledCounts) {
        self.visited += o.visited;
        self.degree_ordered += o.degree_ordered;
        self.connected += o.connected;
        self.biconnected += o.biconnected;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusResult {
    pub order: usize,
    pub harris_count: usize,
    /// Canonical graph6 strings, ascending.
    pub catalog: Vec<String>,
    pub stats: StageStats,
    pub wall_time_secs: f64,
}

impl CensusResult {
    pub fn graphs(&self) -> Vec<Graph> {
        self.catalog
            .iter()
            .map(|s| parse_graph6(s).expect("catalog holds valid graph6"))
            .collect()
    }
}

/// Resumable census state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusCheckpoint {
    pub format: u32,
    pub crate_version: String,
    pub order: usize,
    pub unit_bits: u32,
    /// Completed unit ids, ascending.
    pub completed: Vec<u64>,
    labeled: LabeledCounts,
    /// Canonical graph6 of every classified class and its verdict.
    classes: BTreeMap<String, ClassVerdict>,
    /// Seconds spent before this checkpoint.
    pub elapsed_secs: f64,
}

impl CensusCheckpoint {
    fn fresh(order: usize, unit_bits: u32) -> Self {
        CensusCheckpoint {
            format: CHECKPOINT_FORMAT,
            crate_version: env!("CARGO_PKG_VERSION").to_string(),
            order,
            unit_bits,
            completed: Vec::new(),
            labeled: LabeledCounts::default(),
            classes: BTreeMap::new(),
            elapsed_secs: 0.0,
        }
    }

    pub fn total_units(&self) -> u64 {
        1u64 << self.unit_bits
    }

    pub fn is_complete(&self) -> bool {
        self.completed.len() as u64 == self.total_units()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Writes atomically through a sibling temporary file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let json = serde_json::to_string(self)?;
        fs::write(&tmp, json).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
    }

    fn finish(&self, started: Instant) -> CensusResult {
        let mut stats = StageStats::default();
        stats.add_labeled(&self.labeled);
        stats.classes = self.classes.len() as u64;
        let mut catalog = Vec::new();
        for (g6, verdict) in &self.classes {
            match verdict {
                ClassVerdict::HamiltonianHeuristic => stats.rejected_hamiltonian_heuristic += 1,
                ClassVerdict::HamiltonianExhaustive => stats.rejected_hamiltonian_exhaustive += 1,
                ClassVerdict::NotTough => stats.rejected_not_tough += 1,
                ClassVerdict::Harris => {
                    stats.harris += 1;
                    catalog.push(g6.clone());
                }
            }
        }
        CensusResult {
            order: self.order,
            harris_count: catalog.len(),
            catalog,
            stats,
            wall_time_secs: self.elapsed_secs + started.elapsed().as_secs_f64(),
        }
    }
}

/// Outcome of [`run_census`].
#[derive(Clone, Debug)]
pub enum CensusRun {
    Complete(CensusResult),
    Interrupted(CensusCheckpoint),
}

/// All Harris graphs of order `n`, single-threaded.
pub fn enumerate_harris(n: usize) -> Result<CensusResult> {
    match run_census(n, &CensusConfig::default())? {
        CensusRun::Complete(r) => Ok(r),
        CensusRun::Interrupted(_) => unreachable!("no stop condition configured"),
    }
}

pub fn run_census(n: usize, config: &CensusConfig) -> Result<CensusRun> {
    check_order(n, config.allow_beyond_ceiling)?;
    let bits = unit_bits_for(n, config.unit_bits);
    drive(CensusCheckpoint::fresh(n, bits), config)
}

/// Continues a census from a checkpoint. Refuses checkpoints written by a
/// different format or crate version, or with a different unit split.
pub fn resume(checkpoint: CensusCheckpoint, config: &CensusConfig) -> Result<CensusRun> {
    if checkpoint.format != CHECKPOINT_FORMAT {
        return Err(Error::Checkpoint(format!(
            "format {} (expected {CHECKPOINT_FORMAT})",
            checkpoint.format
        )));
    }
    if checkpoint.crate_version != env!("CARGO_PKG_VERSION") {
        return Err(Error::Checkpoint(format!(
            "written by version {} (this is {})",
            checkpoint.crate_version,
            env!("CARGO_PKG_VERSION")
        )));
    }
    check_order(checkpoint.order, config.allow_beyond_ceiling)?;
    let expected = unit_bits_for(checkpoint.order, config.unit_bits);
    if checkpoint.unit_bits != expected {
        return Err(Error::Checkpoint(format!(
            "unit split {} does not match configured {expected}",
            checkpoint.unit_bits
        )));
    }
    if checkpoint.completed.iter().any(|&u| u >= checkpoint.total_units())
        || checkpoint.completed.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::Checkpoint("completed unit list is corrupt".into()));
    }
    drive(checkpoint, config)
}

/// Like [`resume`], but also insists the checkpoint is for order `n`.
pub fn resume_order(n: usize, checkpoint: CensusCheckpoint, config: &CensusConfig) -> Result<CensusRun> {
    if checkpoint.order != n {
        return Err(Error::Checkpoint(format!(
            "checkpoint is for order {}, requested {n}",
            checkpoint.order
        )));
    }
    resume(checkpoint, config)
}

fn check_order(n: usize, allow_beyond: bool) -> Result<()> {
    let ceiling = if allow_beyond {
        CENSUS_HARD_MAX_ORDER
    } else {
        CENSUS_MAX_ORDER
    };
    if n > ceiling {
        return Err(Error::Unsupported {
            what: "census",
            n,
            ceiling,
        });
    }
    if n < CENSUS_MIN_ORDER {
        return Err(Error::TooSmall {
            what: "census",
            n,
            min: CENSUS_MIN_ORDER,
        });
    }
    Ok(())
}

fn unit_bits_for(n: usize, requested: u32) -> u32 {
    requested.min(CycleSpace::new(n).dim() as u32)
}

fn drive(mut state: CensusCheckpoint, config: &CensusConfig) -> Result<CensusRun> {
    let started = Instant::now();
    let n = state.order;
    let space = CycleSpace::new(n);
    let done: BTreeSet<u64> = state.completed.iter().copied().collect();
    let mut pending: Vec<u64> = (0..state.total_units()).filter(|u| !done.contains(u)).collect();
    if let Some(stop) = config.stop_after_units {
        pending.truncate(stop.saturating_sub(done.len()));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .expect("thread pool");
    let batch = (config.threads.max(1) * 4).max(16);

    for chunk in pending.chunks(batch) {
        let results: Vec<UnitResult> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&u| process_unit(&space, u, state.unit_bits))
                .collect()
        });
        for (u, r) in chunk.iter().zip(results) {
            state.labeled.merge(&r.labeled);
            state.classes.extend(r.classes);
            state.completed.push(*u);
        }
        state.completed.sort_unstable();
        if let Some(path) = &config.checkpoint {
            let mut snapshot = state.clone();
            snapshot.elapsed_secs += started.elapsed().as_secs_f64();
            snapshot.save(path)?;
        }
    }

    if state.is_complete() {
        Ok(CensusRun::Complete(state.finish(started)))
    } else {
        state.elapsed_secs += started.elapsed().as_secs_f64();
        Ok(CensusRun::Interrupted(state))
    }
}

struct UnitResult {
    labeled: LabeledCounts,
    classes: HashMap<String, ClassVerdict>,
}

fn process_unit(space: &CycleSpace, unit: u64, unit_bits: u32) -> UnitResult {
    let n = space.n;
    let mut labeled = LabeledCounts::default();
    let mut classes: HashMap<String, ClassVerdict> = HashMap::new();
    labeled.visited = space.scan_unit(unit, unit_bits, |rows| {
        labeled.degree_ordered += 1;
        if !rows_connected(rows, n, 0) {
            return;
        }
        labeled.connected += 1;
        if !rows_biconnected(rows, n) {
            return;
        }
        labeled.biconnected += 1;
        let g = Graph::from_rows(rows[..n].iter().map(|&r| r as u64).collect());
        let key = canonical_graph6(&g).expect("census orders are below the canonical ceiling");
        if classes.contains_key(&key) {
            return;
        }
        let canon = parse_graph6(&key).expect("own output");
        let verdict = classify(&canon);
        classes.insert(key, verdict);
    });
    UnitResult { labeled, classes }
}

/// Harris check on a graph already known to be connected, even and
/// 2-connected, in the census filter order.
fn classify(g: &Graph) -> ClassVerdict {
    if heuristic_cycle(g, HEURISTIC_SEED).is_some() {
        return ClassVerdict::HamiltonianHeuristic;
    }
    if exhaustive_cycle(g).is_some() {
        return ClassVerdict::HamiltonianExhaustive;
    }
    if !is_tough(g).tough {
        return ClassVerdict::NotTough;
    }
    ClassVerdict::Harris
}

/// One representative per isomorphism class of connected even-degree graphs
/// on `n` vertices (minimum degree 2 for `n >= 3`), sorted by canonical
/// graph6.
pub fn enumerate_even_connected(n: usize) -> Result<Vec<Graph>> {
    check_order(n, false)?;
    let space = CycleSpace::new(n);
    let bits = unit_bits_for(n, 10);
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for unit in 0..(1u64 << bits) {
        space.scan_unit(unit, bits, |rows| {
            if rows_connected(rows, n, 0) {
                let g = Graph::from_rows(rows[..n].iter().map(|&r| r as u64).collect());
                seen.insert(canonical_graph6(&g).expect("small order"));
            }
        });
    }
    Ok(seen.iter().map(|s| parse_graph6(s).expect("own output")).collect())
}

/// Sorted degree sequences of the catalog members.
pub fn census_degree_histogram(result: &CensusResult) -> Vec<DegreeSequence> {
    let mut h: Vec<DegreeSequence> = result.graphs().iter().map(Graph::degree_sequence).collect();
    h.sort();
    h
}

/// Basis of the cycle space of `K_n`: triangles `{0, i, j}`, `1 <= i < j < n`.
struct CycleSpace {
    n: usize,
    /// (i, j) per basis index.
    basis: Vec<(usize, usize)>,
}

impl CycleSpace {
    fn new(n: usize) -> Self {
        let mut basis = Vec::new();
        for j in 2..n {
            for i in 1..j {
                basis.push((i, j));
            }
        }
        CycleSpace { n, basis }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    fn toggle(&self, rows: &mut [u16; 16], idx: usize) {
        let (i, j) = self.basis[idx];
        rows[0] ^= (1 << i) | (1 << j);
        rows[i] ^= 1 | (1 << j);
        rows[j] ^= 1 | (1 << i);
    }

    /// Walks every labeled even graph in `unit` (the top `unit_bits` basis
    /// coefficients equal `unit`) and calls `visit` on those whose degrees
    /// are non-increasing in vertex order with minimum degree 2. Returns the
    /// number of labeled graphs walked.
    fn scan_unit(&self, unit: u64, unit_bits: u32, mut visit: impl FnMut(&[u16; 16])) -> u64 {
        let n = self.n;
        let low = self.dim() - unit_bits as usize;
        let mut rows = [0u16; 16];
        for t in 0..unit_bits as usize {
            if unit >> t & 1 == 1 {
                self.toggle(&mut rows, low + t);
            }
        }
        let steps: u64 = 1u64 << low;
        let mut step = 0u64;
        loop {
            if degrees_ordered(&rows, n) {
                visit(&rows);
            }
            step += 1;
            if step == steps {
                break;
            }
            self.toggle(&mut rows, step.trailing_zeros() as usize);
        }
        steps
    }
}

#[inline]
fn degrees_ordered(rows: &[u16; 16], n: usize) -> bool {
    let mut prev = rows[0].count_ones();
    for r in &rows[1..n] {
        let d = r.count_ones();
        if d > prev {
            return false;
        }
        prev = d;
    }
    prev >= 2
}

fn rows_reach(rows: &[u16; 16], n: usize, start: usize, allowed: u16) -> u16 {
    let _ = n;
    let mut seen: u16 = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn rows_connected(rows: &[u16; 16], n: usize, start: usize) -> bool {
    let all = ((1u32 << n) - 1) as u16;
    rows_reach(rows, n, start, all) == all
}

fn rows_biconnected(rows: &[u16; 16], n: usize) -> bool {
    let all = ((1u32 << n) - 1) as u16;
    (0..n).all(|v| {
        let allowed = all & !(1 << v);
        let start = if v == 0 { 1 } else { 0 };
        rows_reach(rows, n, start, allowed) == allowed
    })
}

/// `harris-<n>.g6` inside `dir`.
pub fn catalog_path(dir: &Path, order: usize) -> PathBuf {
    dir.join(format!("harris-{order}.g6"))
}

/// Writes the sorted catalog, one graph6 line each, LF terminated.
pub fn write_catalog(dir: &Path, result: &CensusResult) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let path = catalog_path(dir, result.order);
    let mut body = String::new();
    for line in &result.catalog {
        body.push_str(line);
        body.push('\n');
    }
    fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusSummary {
    pub order: usize,
    pub count: usize,
    pub stage_statistics: StageStats,
    pub wall_time: f64,
}

impl From<&CensusResult> for CensusSummary {
    fn from(r: &CensusResult) -> Self {
        CensusSummary {
            order: r.order,
            count: r.harris_count,
            stage_statistics: r.stats.clone(),
            wall_time: r.wall_time_secs,
        }
    }
}

/// Writes `harris-<n>.json` and updates the `counts.csv` table
/// (`order,harris_count`) in `dir`.
pub fn write_summary(dir: &Path, result: &CensusResult) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let path = dir.join(format!("harris-{}.json", result.order));
    let json = serde_json::to_string_pretty(&CensusSummary::from(result))?;
    fs::write(&path, json + "\n").map_err(|e| Error::io(&path, e))?;

    let csv = dir.join("counts.csv");
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    if let Ok(text) = fs::read_to_string(&csv) {
        for line in text.lines().skip(1) {
            if let Some((o, c)) = line.split_once(',') {
                if let (Ok(o), Ok(c)) = (o.trim().parse(), c.trim().parse()) {
                    rows.insert(o, c);
                }
            }
        }
    }
    rows.insert(result.order, result.harris_count);
    let mut f = fs::File::create(&csv).map_err(|e| Error::io(&csv, e))?;
    let mut out = String::from("order,harris_count\n");
    for (o, c) in rows {
        out.push_str(&format!("{o},{c}\n"));
    }
    f.write_all(out.as_bytes()).map_err(|e| Error::io(&csv, e))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gray_walk_visits_every_even_graph_once() {
        let space = CycleSpace::new(5);
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for unit in 0..4u64 {
            let mut rows = [0u16; 16];
            let low = space.dim() - 2;
            for t in 0..2 {
                if unit >> t & 1 == 1 {
                    space.toggle(&mut rows, low + t);
                }
            }
            for step in 0..(1u64 << low) {
                if step > 0 {
                    space.toggle(&mut rows, step.trailing_zeros() as usize);
                }
                assert!(rows[..5].iter().all(|r| r.count_ones() % 2 == 0));
                seen.insert(rows);
                total += 1;
            }
        }
        assert_eq!(total, 64);
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn triangle_is_the_only_even_connected_graph_on_three() {
        let all = enumerate_even_connected(3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].edge_count(), 3);
    }

    #[test]
    fn small_orders_have_no_harris_graphs() {
        for n in 3..7 {
            assert_eq!(enumerate_harris(n).unwrap().harris_count, 0, "n={n}");
        }
    }

    #[test]
    fn order_limits() {
        assert!(matches!(enumerate_harris(11), Err(Error::Unsupported { ceiling: 10, .. })));
        assert!(enumerate_harris(2).is_err());
        assert!(enumerate_even_connected(11).is_err());
    }

    #[test]
    fn biconnectivity_on_rows() {
        let mut rows = [0u16; 16];
        // bowtie: triangles 0-1-2 and 0-3-4 share the cut vertex 0
        for (u, v) in [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)] {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        assert!(rows_connected(&rows, 5, 0));
        assert!(!rows_biconnected(&rows, 5));
    }
}
