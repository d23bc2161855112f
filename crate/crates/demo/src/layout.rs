use harris::Graph;

const ITERATIONS: usize = 300;

/// Deterministic spring layout in the unit square. Starts from a circle and
/// runs Fruchterman-Reingold with a linearly cooling step.
pub fn layout(g: &Graph) -> Vec<[f64; 2]> {
    let n = g.n();
    if n == 1 {
        return vec![[0.5, 0.5]];
    }
    let mut pos: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            [0.5 + 0.4 * t.cos(), 0.5 + 0.4 * t.sin()]
        })
        .collect();
    let k = (1.0 / n as f64).sqrt();
    let edges = g.edges();
    let mut disp = vec![[0.0f64; 2]; n];
    for it in 0..ITERATIONS {
        disp.iter_mut().for_each(|d| *d = [0.0, 0.0]);
        for u in 0..n {
            for v in u + 1..n {
                let (dx, dy) = (pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]);
                let d2 = (dx * dx + dy * dy).max(1e-6);
                let f = k * k / d2;
                disp[u][0] += dx * f;
                disp[u][1] += dy * f;
                disp[v][0] -= dx * f;
                disp[v][1] -= dy * f;
            }
        }
        for &(u, v) in &edges {
            let (dx, dy) = (pos[u][0] - pos[v][0], pos[u][1] - pos[v][1]);
            let d = (dx * dx + dy * dy).sqrt().max(1e-3);
            let f = d / k;
            disp[u][0] -= dx * f;
            disp[u][1] -= dy * f;
            disp[v][0] += dx * f;
            disp[v][1] += dy * f;
        }
        let temp = 0.1 * (1.0 - it as f64 / ITERATIONS as f64) + 1e-3;
        for (p, d) in pos.iter_mut().zip(&disp) {
            let len = (d[0] * d[0] + d[1] * d[1]).sqrt();
            if len > 0.0 {
                let step = len.min(temp);
                p[0] += d[0] / len * step;
                p[1] += d[1] / len * step;
            }
        }
    }
    normalize(&mut pos);
    pos
}

fn normalize(pos: &mut [[f64; 2]]) {
    let (mut lo, mut hi) = ([f64::MAX; 2], [f64::MIN; 2]);
    for p in pos.iter() {
        for a in 0..2 {
            lo[a] = lo[a].min(p[a]);
            hi[a] = hi[a].max(p[a]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    for p in pos.iter_mut() {
        for a in 0..2 {
            let centred = (p[a] - lo[a]) + (span - (hi[a] - lo[a])) / 2.0;
            p[a] = 0.05 + 0.9 * centred / span;
        }
    }
}
