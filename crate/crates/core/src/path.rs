//! Time-stamped piecewise-linear motions of labeled configurations.

use serde::{Deserialize, Serialize};

use crate::config_space::Configuration;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Breakpoint {
    pub t: f64,
    pub config: Configuration,
}

/// A motion through configurations with linear interpolation between
/// breakpoints. Times strictly increase from exactly 0 to exactly 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct PiecewisePath {
    breakpoints: Vec<Breakpoint>,
}

#[derive(Deserialize)]
struct RawPath {
    breakpoints: Vec<Breakpoint>,
}

impl TryFrom<RawPath> for PiecewisePath {
    type Error = Error;

    fn try_from(raw: RawPath) -> Result<Self> {
        PiecewisePath::new(raw.breakpoints)
    }
}

impl PiecewisePath {
    pub fn new(breakpoints: Vec<Breakpoint>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::Structural(format!(
                "a path needs at least two breakpoints, got {}",
                breakpoints.len()
            )));
        }
        let first = &breakpoints[0];
        if first.t != 0.0 {
            return Err(Error::Structural(format!("path starts at t = {}", first.t)));
        }
        let last = breakpoints.last().unwrap();
        if last.t != 1.0 {
            return Err(Error::Structural(format!("path ends at t = {}", last.t)));
        }
        for (n, w) in breakpoints.windows(2).enumerate() {
            if w[0].t.partial_cmp(&w[1].t) != Some(std::cmp::Ordering::Less) {
                return Err(Error::Structural(format!(
                    "breakpoint times not strictly increasing at index {}",
                    n + 1
                )));
            }
            w[0].config
                .check_compatible(&w[1].config)
                .map_err(|e| Error::Structural(format!("breakpoint {}: {e}", n + 1)))?;
        }
        Ok(PiecewisePath { breakpoints })
    }

    /// Straight-line motion over `[0, 1]`.
    pub fn segment(from: Configuration, to: Configuration) -> Result<Self> {
        Self::from_uniform(vec![from, to])
    }

    /// Breakpoints at evenly spaced times `m / (len - 1)`.
    pub fn from_uniform(configs: Vec<Configuration>) -> Result<Self> {
        let slices = configs.len().saturating_sub(1).max(1) as f64;
        let breakpoints = configs
            .into_iter()
            .enumerate()
            .map(|(m, config)| Breakpoint {
                t: m as f64 / slices,
                config,
            })
            .collect();
        Self::new(breakpoints)
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    pub fn start(&self) -> &Configuration {
        &self.breakpoints[0].config
    }

    pub fn end(&self) -> &Configuration {
        &self.breakpoints.last().unwrap().config
    }

    pub fn dim(&self) -> usize {
        self.start().dim()
    }

    /// Number of points moved.
    pub fn k(&self) -> usize {
        self.start().len()
    }

    pub fn segment_count(&self) -> usize {
        self.breakpoints.len() - 1
    }

    /// Endpoint configurations of each linear piece.
    pub fn segments(&self) -> impl Iterator<Item = (&Configuration, &Configuration)> + '_ {
        self.breakpoints
            .windows(2)
            .map(|w| (&w[0].config, &w[1].config))
    }

    /// Row-major point positions at time `t` (clamped to `[0, 1]`).
    pub fn positions_at(&self, t: f64) -> Vec<f64> {
        let t = t.clamp(0.0, 1.0);
        let idx = self
            .breakpoints
            .partition_point(|b| b.t <= t)
            .clamp(1, self.breakpoints.len() - 1);
        let (a, b) = (&self.breakpoints[idx - 1], &self.breakpoints[idx]);
        if t == a.t {
            return a.config.as_flat().to_vec();
        }
        if t == b.t {
            return b.config.as_flat().to_vec();
        }
        let s = (t - a.t) / (b.t - a.t);
        a.config
            .as_flat()
            .iter()
            .zip(b.config.as_flat())
            .map(|(p, q)| (1.0 - s) * p + s * q)
            .collect()
    }

    /// The same motion traversed backwards.
    pub fn reversed(&self) -> PiecewisePath {
        let breakpoints = self
            .breakpoints
            .iter()
            .rev()
            .map(|b| Breakpoint {
                t: 1.0 - b.t,
                config: b.config.clone(),
            })
            .collect();
        PiecewisePath { breakpoints }
    }

    /// Concatenates paths whose endpoints match bitwise, giving part `i` a
    /// share `weights[i] / sum(weights)` of the unit time interval.
    pub fn concat_weighted(parts: &[(&PiecewisePath, f64)]) -> Result<PiecewisePath> {
        if parts.is_empty() {
            return Err(Error::Argument("nothing to concatenate".into()));
        }
        if parts.iter().any(|(_, w)| !(*w > 0.0 && w.is_finite())) {
            return Err(Error::Argument(
                "concatenation weights must be positive".into(),
            ));
        }
        let total: f64 = parts.iter().map(|(_, w)| w).sum();
        let mut breakpoints = vec![parts[0].0.breakpoints[0].clone()];
        let mut offset = 0.0;
        for (n, (part, w)) in parts.iter().enumerate() {
            if part.start() != &breakpoints.last().unwrap().config {
                return Err(Error::Argument(format!(
                    "path {} does not start where path {} ends",
                    n + 1,
                    n
                )));
            }
            let share = w / total;
            let last = n + 1 == parts.len();
            for (m, b) in part.breakpoints.iter().enumerate().skip(1) {
                let t = if last && m + 1 == part.breakpoints.len() {
                    1.0
                } else {
                    offset + b.t * share
                };
                breakpoints.push(Breakpoint {
                    t,
                    config: b.config.clone(),
                });
            }
            offset += share;
        }
        PiecewisePath::new(breakpoints)
    }

    /// Concatenation with equal time shares.
    pub fn concat(parts: &[&PiecewisePath]) -> Result<PiecewisePath> {
        let weighted: Vec<_> = parts.iter().map(|p| (*p, 1.0)).collect();
        Self::concat_weighted(&weighted)
    }
}
