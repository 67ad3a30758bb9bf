//! Retractions of configuration spaces onto products of spheres.
//!
//! The embedding sends unit vectors `(u_1, .., u_j)` to the partial sums
//! `S_l = u_1 + 3 u_2 + .. + 3^(l-1) u_l`. Since `|S_l| <= (3^l - 1) / 2` and
//! `|S_{l+1}| >= 3^l - |S_l| >= (3^l + 1) / 2`, the norms strictly increase, so
//! the points have pairwise distinct norms: they are distinct even up to any
//! orthogonal transformation. The retraction normalizes consecutive
//! differences, which recovers the unit vectors exactly.

use serde::{Deserialize, Serialize};

use crate::config_space::Configuration;
use crate::error::{Error, Result};

/// Unit-norm tolerance for [`UnitTuple`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// A point of a product of unit spheres `(S^{n-1})^j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawUnitTuple", into = "RawUnitTuple")]
pub struct UnitTuple {
    dim: usize,
    vectors: Vec<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
struct RawUnitTuple {
    vectors: Vec<Vec<f64>>,
}

impl TryFrom<RawUnitTuple> for UnitTuple {
    type Error = Error;

    fn try_from(raw: RawUnitTuple) -> Result<Self> {
        let dim = raw.vectors.first().map(Vec::len).ok_or_else(|| {
            Error::Argument("unit tuple without vectors needs a dimension".into())
        })?;
        UnitTuple::new(dim, raw.vectors)
    }
}

impl From<UnitTuple> for RawUnitTuple {
    fn from(u: UnitTuple) -> Self {
        RawUnitTuple { vectors: u.vectors }
    }
}

impl UnitTuple {
    pub fn new(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Argument(format!(
                "ambient dimension must be at least 2, got {dim}"
            )));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            let norm = norm(v);
            if norm.is_nan() || (norm - 1.0).abs() > UNIT_TOLERANCE {
                return Err(Error::Argument(format!(
                    "vector {} has norm {norm}, expected 1",
                    i + 1
                )));
            }
        }
        Ok(UnitTuple { dim, vectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// Largest coordinate difference to `other`.
    pub fn max_deviation(&self, other: &UnitTuple) -> f64 {
        self.vectors
            .iter()
            .flatten()
            .zip(other.vectors.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

/// `v / |v|`.
pub fn normalize(v: &[f64]) -> Result<Vec<f64>> {
    let n = norm(v);
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::Argument(format!("cannot normalize {v:?}")));
    }
    Ok(v.iter().map(|c| c / n).collect())
}

/// The embedding of the sphere product into configuration space.
///
/// Unpunctured: `(u_1, .., u_{k-1}) -> (0, S_1, .., S_{k-1})`.
/// Punctured: `(u_1, .., u_k) -> (S_1, .., S_k)`, avoiding the origin.
pub fn sphere_to_config(u: &UnitTuple, punctured: bool) -> Result<Configuration> {
    let n = u.dim();
    let mut coords = Vec::with_capacity((u.len() + 1) * n);
    if !punctured {
        coords.resize(n, 0.0);
    }
    let mut sum = vec![0.0; n];
    let mut scale = 1.0;
    for v in u.vectors() {
        for (s, c) in sum.iter_mut().zip(v) {
            *s += scale * c;
        }
        coords.extend_from_slice(&sum);
        scale *= 3.0;
    }
    if coords.is_empty() {
        return Err(Error::Argument(
            "punctured embedding of an empty tuple has no points".into(),
        ));
    }
    Configuration::from_flat(n, coords)
        .map_err(|e| Error::Internal(format!("embedding produced an invalid configuration: {e}")))
}

/// The retraction onto the sphere product: normalized consecutive differences,
/// preceded by the normalized first point in the punctured case.
pub fn config_to_sphere(x: &Configuration, punctured: bool) -> Result<UnitTuple> {
    let n = x.dim();
    let mut vectors = Vec::with_capacity(x.len());
    if punctured {
        vectors.push(
            normalize(x.point(0))
                .map_err(|_| Error::Argument("first point lies at the removed origin".into()))?,
        );
    }
    for l in 1..x.len() {
        let diff: Vec<f64> = x
            .point(l)
            .iter()
            .zip(x.point(l - 1))
            .map(|(a, b)| a - b)
            .collect();
        vectors.push(
            normalize(&diff)
                .map_err(|_| Error::Internal(format!("points {l} and {} coincide", l + 1)))?,
        );
    }
    UnitTuple::new(n, vectors)
}

/// Which orbits must be distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    /// `x_i != x_j`.
    Trivial,
    /// `{+1, -1}`: `x_i != +-x_j`.
    Antipodal,
    /// `O(n)`: `|x_i| != |x_j|`.
    FullOrthogonal,
}

/// An ambient space `R^n`, optionally punctured at the origin and with a set
/// of removed obstacle points, quotiented by a group for orbit distinctness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub dim: usize,
    pub group: GroupSpec,
    pub puncture_origin: bool,
    pub obstacles: Vec<Vec<f64>>,
}

impl SpaceSpec {
    pub fn new(
        dim: usize,
        group: GroupSpec,
        puncture_origin: bool,
        obstacles: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if obstacles.iter().any(|o| o.len() != dim) {
            return Err(Error::Argument(format!(
                "obstacles must have {dim} coordinates"
            )));
        }
        for (i, a) in obstacles.iter().enumerate() {
            if obstacles[i + 1..].contains(a) {
                return Err(Error::Argument(format!("obstacle {} is repeated", i + 1)));
            }
        }
        Ok(SpaceSpec {
            dim,
            group,
            puncture_origin,
            obstacles,
        })
    }

    pub fn plain(dim: usize) -> Self {
        SpaceSpec {
            dim,
            group: GroupSpec::Trivial,
            puncture_origin: false,
            obstacles: Vec::new(),
        }
    }
}

fn same_orbit(group: GroupSpec, p: &[f64], q: &[f64]) -> bool {
    match group {
        GroupSpec::Trivial => p == q,
        GroupSpec::Antipodal => p == q || p.iter().zip(q).all(|(a, b)| *a == -*b),
        GroupSpec::FullOrthogonal => {
            let sq = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>();
            sq(p) == sq(q)
        }
    }
}

/// Whether `x` is a configuration of the space described by `space`.
pub fn membership(x: &Configuration, space: &SpaceSpec) -> bool {
    if x.dim() != space.dim {
        return false;
    }
    let pts: Vec<&[f64]> = x.points().collect();
    if space.puncture_origin && pts.iter().any(|p| p.iter().all(|c| *c == 0.0)) {
        return false;
    }
    if pts
        .iter()
        .any(|p| space.obstacles.iter().any(|o| o.as_slice() == *p))
    {
        return false;
    }
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if same_orbit(space.group, p, q) {
                return false;
            }
        }
    }
    true
}
