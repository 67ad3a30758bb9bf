//! Exact collision detection and minimum clearance for simultaneous
//! straight-line motions of labeled points.
//!
//! Along a linear piece from `c0` to `c1`, the difference of two points is
//! `d(t) = d0 + t (d1 - d0)`. The pair collides iff this affine curve passes
//! through the origin for some `t` in `[0, 1]`, which is decided coordinate by
//! coordinate: every coordinate that changes must vanish at one common
//! parameter `t*`, and every coordinate that does not change must already be
//! zero. The clearance is the minimum of the convex function `|d(t)|` on
//! `[0, 1]`, found at the endpoints or the clamped stationary point.

use serde::Serialize;

use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::path::PiecewisePath;

/// Absolute tolerance for the "coordinate is zero" tests.
pub const DEFAULT_EPS: f64 = 1e-12;

/// A colliding pair: segment index (0-based), the two labels (0-based) and the
/// segment-local time of contact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub segment: usize,
    pub pair: (usize, usize),
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollisionReport {
    pub colliding: bool,
    pub witnesses: Vec<Witness>,
    pub min_clearance: f64,
}

impl CollisionReport {
    /// Report for "no motion checked yet". Identity for [`merge`](Self::merge).
    pub fn empty() -> Self {
        CollisionReport {
            colliding: false,
            witnesses: Vec::new(),
            min_clearance: f64::INFINITY,
        }
    }

    /// Associative combination of two reports.
    pub fn merge(mut self, other: CollisionReport) -> CollisionReport {
        self.colliding |= other.colliding;
        self.witnesses.extend(other.witnesses);
        self.min_clearance = self.min_clearance.min(other.min_clearance);
        self
    }

    fn shift_segment(mut self, segment: usize) -> Self {
        for w in &mut self.witnesses {
            w.segment = segment;
        }
        self
    }
}

/// Outcome for a single pair along one linear piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairMotion {
    /// Contact time, if the pair collides.
    pub contact: Option<f64>,
    /// Minimum distance over `[0, 1]`; zero when `contact` is set.
    pub clearance: f64,
}

/// Decides whether `d(t) = d0 + t (d1 - d0)` vanishes on `[0, 1]` and computes
/// `min |d(t)|`.
pub fn pair_motion(d0: &[f64], d1: &[f64], eps: f64) -> PairMotion {
    debug_assert_eq!(d0.len(), d1.len());
    let contact = crossing_time(d0, d1, eps);
    let clearance = if contact.is_some() {
        0.0
    } else {
        closest_approach(d0, d1)
    };
    match (contact, clearance) {
        (None, 0.0) => PairMotion {
            contact: Some(closest_time(d0, d1)),
            clearance: 0.0,
        },
        _ => PairMotion { contact, clearance },
    }
}

fn crossing_time(d0: &[f64], d1: &[f64], eps: f64) -> Option<f64> {
    let scale = d0.iter().chain(d1).fold(1.0f64, |m, v| m.max(v.abs()));
    // Solve on the coordinate with the largest change; check the rest.
    let (pivot, change) =
        d0.iter()
            .zip(d1)
            .map(|(a, b)| b - a)
            .enumerate()
            .fold((0, 0.0f64), |best, (c, e)| {
                if e.abs() > best.1.abs() {
                    (c, e)
                } else {
                    best
                }
            });
    let t = if change.abs() <= eps {
        // Relative position is constant.
        0.0
    } else {
        -d0[pivot] / change
    };
    if t < -eps || t > 1.0 + eps {
        return None;
    }
    let consistent = d0.iter().zip(d1).all(|(a, b)| {
        let e = b - a;
        if e.abs() <= eps {
            a.abs() <= eps
        } else {
            (a + t * e).abs() <= eps * scale
        }
    });
    consistent.then(|| t.clamp(0.0, 1.0))
}

fn closest_time(d0: &[f64], d1: &[f64]) -> f64 {
    let (mut de, mut ee) = (0.0, 0.0);
    for (a, b) in d0.iter().zip(d1) {
        let e = b - a;
        de += a * e;
        ee += e * e;
    }
    if ee > 0.0 {
        (-de / ee).clamp(0.0, 1.0)
    } else {
        0.0
    }
}

fn distance_at(d0: &[f64], d1: &[f64], t: f64) -> f64 {
    d0.iter()
        .zip(d1)
        .map(|(a, b)| {
            let v = (1.0 - t) * a + t * b;
            v * v
        })
        .sum::<f64>()
        .sqrt()
}

fn closest_approach(d0: &[f64], d1: &[f64]) -> f64 {
    let t = closest_time(d0, d1);
    distance_at(d0, d1, 0.0)
        .min(distance_at(d0, d1, 1.0))
        .min(distance_at(d0, d1, t))
}

fn pair_differences(c: &Configuration, i: usize, j: usize, out: &mut [f64]) {
    for ((o, a), b) in out.iter_mut().zip(c.point(i)).zip(c.point(j)) {
        *o = a - b;
    }
}

pub fn segment_collision(c0: &Configuration, c1: &Configuration) -> Result<CollisionReport> {
    segment_collision_with(c0, c1, DEFAULT_EPS)
}

/// Checks the simultaneous linear motion `c0 -> c1` over all pairs.
pub fn segment_collision_with(
    c0: &Configuration,
    c1: &Configuration,
    eps: f64,
) -> Result<CollisionReport> {
    c0.check_compatible(c1)?;
    let k = c0.len();
    let n = c0.dim();
    let mut d0 = vec![0.0; n];
    let mut d1 = vec![0.0; n];
    let mut report = CollisionReport::empty();
    for i in 0..k {
        for j in i + 1..k {
            pair_differences(c0, i, j, &mut d0);
            pair_differences(c1, i, j, &mut d1);
            let m = pair_motion(&d0, &d1, eps);
            if let Some(t) = m.contact {
                report.colliding = true;
                report.witnesses.push(Witness {
                    segment: 0,
                    pair: (i, j),
                    t,
                });
            }
            report.min_clearance = report.min_clearance.min(m.clearance);
        }
    }
    if k < 2 {
        report.min_clearance = f64::INFINITY;
    }
    Ok(report)
}

/// Minimum inter-point distance along the linear motion `c0 -> c1`.
pub fn min_pair_clearance(c0: &Configuration, c1: &Configuration) -> Result<f64> {
    Ok(segment_collision(c0, c1)?.min_clearance)
}

pub fn verify_path(path: &PiecewisePath) -> Result<CollisionReport> {
    verify_path_with(path, DEFAULT_EPS)
}

/// Aggregates [`segment_collision_with`] over every piece of `path`, after
/// re-validating each breakpoint configuration.
pub fn verify_path_with(path: &PiecewisePath, eps: f64) -> Result<CollisionReport> {
    for (n, b) in path.breakpoints().iter().enumerate() {
        Configuration::from_flat(b.config.dim(), b.config.as_flat().to_vec())
            .map_err(|e| Error::Structural(format!("breakpoint {}: {e}", n + 1)))?;
    }
    path.segments()
        .enumerate()
        .try_fold(CollisionReport::empty(), |acc, (s, (a, b))| {
            Ok(acc.merge(segment_collision_with(a, b, eps)?.shift_segment(s)))
        })
}
