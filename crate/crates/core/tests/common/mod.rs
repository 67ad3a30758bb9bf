#![allow(dead_code)]

use confplan_core::path::PiecewisePath;
use confplan_core::Configuration;

pub const ORACLE_SAMPLES: usize = 4096;

/// Minimum of `|(1 - t) d0 + t d1|` over `[0, 1]` by dense sampling, then
/// ternary search on the bracket around the best sample. The distance is
/// convex in `t`, so the refinement converges to the true minimum.
pub fn dense_min_distance(d0: &[f64], d1: &[f64]) -> (f64, f64) {
    let dist = |t: f64| -> f64 {
        d0.iter()
            .zip(d1)
            .map(|(a, b)| {
                let v = (1.0 - t) * a + t * b;
                v * v
            })
            .sum::<f64>()
            .sqrt()
    };
    let step = 1.0 / (ORACLE_SAMPLES - 1) as f64;
    let (mut best_t, mut best) = (0.0, f64::INFINITY);
    for s in 0..ORACLE_SAMPLES {
        let t = s as f64 * step;
        let d = dist(t);
        if d < best {
            best = d;
            best_t = t;
        }
    }
    let (mut lo, mut hi) = ((best_t - step).max(0.0), (best_t + step).min(1.0));
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if dist(m1) <= dist(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let t = 0.5 * (lo + hi);
    let d = dist(t);
    if d < best {
        (t, d)
    } else {
        (best_t, best)
    }
}

/// Oracle clearance of a whole linear segment between configurations.
pub fn dense_segment_clearance(c0: &Configuration, c1: &Configuration) -> f64 {
    let n = c0.dim();
    let k = c0.len();
    let mut best = f64::INFINITY;
    for i in 0..k {
        for j in i + 1..k {
            let d0: Vec<f64> = (0..n).map(|c| c0.point(i)[c] - c0.point(j)[c]).collect();
            let d1: Vec<f64> = (0..n).map(|c| c1.point(i)[c] - c1.point(j)[c]).collect();
            best = best.min(dense_min_distance(&d0, &d1).1);
        }
    }
    best
}

/// Largest coordinate difference between two paths sampled on a uniform grid
/// plus the breakpoint times of both.
pub fn sampled_sup_distance(a: &PiecewisePath, b: &PiecewisePath, samples: usize) -> f64 {
    let mut times: Vec<f64> = (0..=samples).map(|s| s as f64 / samples as f64).collect();
    times.extend(a.breakpoints().iter().map(|bp| bp.t));
    times.extend(b.breakpoints().iter().map(|bp| bp.t));
    times
        .into_iter()
        .map(|t| {
            a.positions_at(t)
                .iter()
                .zip(b.positions_at(t))
                .map(|(p, q)| (p - q).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}
