//! Configurations of labeled distinct points, the reverse-lexicographic order
//! and the stratification by level structure.
//!
//! A *level* of a configuration is a maximal set of points sharing the same
//! last coordinate. Sorting the points in reverse-lexicographic order (last
//! coordinate first) groups each level into a contiguous run; the run lengths
//! form the [`Partition`] `A_x` and the sorting order is the [`Permutation`]
//! `sigma_x`. Together they identify the stratum `F_{A,sigma}` containing `x`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Compares two points in reverse-lexicographic order: the last coordinate
/// dominates, ties are broken by the previous coordinate, down to the first.
///
/// For points in the plane this is `(b1, b2) <= (c1, c2)` iff `b2 < c2`, or
/// `b2 == c2` and `b1 <= c1`.
pub fn lex_compare(p: &[f64], q: &[f64]) -> Result<Ordering> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    Ok(lex_cmp_unchecked(p, q))
}

pub(crate) fn lex_cmp_unchecked(p: &[f64], q: &[f64]) -> Ordering {
    for (a, b) in p.iter().rev().zip(q.iter().rev()) {
        // Coordinates are finite, so partial_cmp never fails.
        match a.partial_cmp(b).unwrap_or(Ordering::Equal) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// An ordered tuple of `k` pairwise-distinct labeled points in `R^dim`.
///
/// Coordinates are stored row-major; label `i` (0-based) owns
/// `coords[i * dim..(i + 1) * dim]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration", into = "RawConfiguration")]
pub struct Configuration {
    dim: usize,
    coords: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawConfiguration {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl TryFrom<RawConfiguration> for Configuration {
    type Error = Error;

    fn try_from(raw: RawConfiguration) -> Result<Self> {
        Configuration::new(raw.dim, raw.points)
    }
}

impl From<Configuration> for RawConfiguration {
    fn from(c: Configuration) -> Self {
        RawConfiguration {
            dim: c.dim,
            points: c.points().map(<[f64]>::to_vec).collect(),
        }
    }
}

impl Configuration {
    /// Builds a configuration from a list of points, validating shape,
    /// finiteness and pairwise distinctness.
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        let mut coords = Vec::with_capacity(points.len() * dim);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::InvalidConfiguration(format!(
                    "point {} has {} coordinates, expected {dim}",
                    i + 1,
                    p.len()
                )));
            }
            coords.extend_from_slice(p);
        }
        Self::from_flat(dim, coords)
    }

    /// Builds a configuration from row-major coordinates.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidConfiguration(format!(
                "ambient dimension must be at least 2, got {dim}"
            )));
        }
        if coords.is_empty() {
            return Err(Error::InvalidConfiguration(
                "a configuration needs at least one point".into(),
            ));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::InvalidConfiguration(format!(
                "{} coordinates do not split into points of dimension {dim}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidConfiguration(format!(
                "non-finite coordinate in point {}",
                bad / dim + 1
            )));
        }
        let cfg = Configuration { dim, coords };
        let order = cfg.sorted_labels();
        for w in order.windows(2) {
            if cfg.point(w[0]) == cfg.point(w[1]) {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::InvalidConfiguration(format!(
                    "points {} and {} coincide",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(cfg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points `k`.
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false: a configuration holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, label: usize) -> &[f64] {
        &self.coords[label * self.dim..(label + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    /// Last coordinate of a point.
    pub fn height(&self, label: usize) -> f64 {
        self.coords[(label + 1) * self.dim - 1]
    }

    fn sorted_labels(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| lex_cmp_unchecked(self.point(a), self.point(b)));
        order
    }

    /// Checks that `other` has the same ambient dimension and point count.
    pub fn check_compatible(&self, other: &Configuration) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.len() != other.len() {
            return Err(Error::CountMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// The configuration with its points listed in the order given by `perm`:
    /// entry `m` of the result is point `perm[m]` of `self`.
    pub fn permuted(&self, perm: &Permutation) -> Result<Configuration> {
        if perm.len() != self.len() {
            return Err(Error::CountMismatch {
                expected: self.len(),
                found: perm.len(),
            });
        }
        let coords = perm
            .as_slice()
            .iter()
            .flat_map(|&l| self.point(l).iter().copied())
            .collect();
        Ok(Configuration {
            dim: self.dim,
            coords,
        })
    }
}

/// A bijection of `{0, .., k-1}` stored as its image list.
///
/// As the sorting permutation of a configuration, entry `m` is the label of
/// the `m`-th smallest point. Serialized 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Builds a permutation from a 0-based image list.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::Argument(format!(
                    "{images:?} is not a permutation of 0..{k}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// 1-based image list, as printed in reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(one_based: Vec<usize>) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(Error::Argument("permutation entries are 1-based".into()));
        }
        Permutation::new(one_based.into_iter().map(|i| i - 1).collect())
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_based()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter().map(|i| i + 1))
    }
}

/// An ordered composition `(a_1, .., a_l)` of `k` into positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Argument(
                "a partition needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::Argument(format!(
                "partition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The number of levels `|A|`.
    pub fn levels(&self) -> usize {
        self.0.len()
    }

    /// The integer `k` being partitioned.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// All `2^(k-1)` ordered partitions of `k`, in lexicographic order of
    /// their part lists.
    pub fn all(k: usize) -> Vec<Partition> {
        fn extend(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for a in 1..=rest {
                prefix.push(a);
                extend(rest - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if k > 0 {
            extend(k, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter().copied())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = usize>) -> fmt::Result {
    f.write_str("(")?;
    for (n, v) in items.enumerate() {
        if n > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// Strictly increasing heights `h_1 < .. < h_l` of the levels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelHeights(Vec<f64>);

impl LevelHeights {
    pub fn new(heights: Vec<f64>) -> Result<Self> {
        if heights
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(Ordering::Less))
        {
            return Err(Error::Argument(format!(
                "level heights must be strictly increasing, got {heights:?}"
            )));
        }
        Ok(LevelHeights(heights))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest distance between consecutive heights, `+inf` for one level.
    pub fn min_gap(&self) -> f64 {
        self.0
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }
}

/// Identifies the stratum `F_{A,sigma}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumId {
    pub partition: Partition,
    pub order: Permutation,
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[A={}, sigma={}]", self.partition, self.order)
    }
}

/// The permutation sorting `x` into strictly increasing reverse-lex order.
pub fn sort_permutation(x: &Configuration) -> Permutation {
    Permutation(x.sorted_labels())
}

/// Level structure of `x`: group sizes of the sorted points by equal last
/// coordinate, in ascending height order, and the heights themselves.
pub fn partition_of(x: &Configuration) -> (Partition, LevelHeights) {
    levels_of(x, &sort_permutation(x))
}

pub(crate) fn levels_of(x: &Configuration, sigma: &Permutation) -> (Partition, LevelHeights) {
    let mut parts = Vec::new();
    let mut heights: Vec<f64> = Vec::new();
    for &label in sigma.as_slice() {
        let h = x.height(label);
        match heights.last() {
            Some(&last) if last == h => *parts.last_mut().unwrap() += 1,
            _ => {
                heights.push(h);
                parts.push(1);
            }
        }
    }
    (Partition(parts), LevelHeights(heights))
}

/// The level count `|A_x|`.
pub fn level_count(x: &Configuration) -> usize {
    partition_of(x).0.levels()
}

pub fn stratum_of(x: &Configuration) -> StratumId {
    let order = sort_permutation(x);
    let (partition, _) = levels_of(x, &order);
    StratumId { partition, order }
}

/// The planning domain `i = |A_x| + |A_y|`, in `2..=2k`.
pub fn domain_index(x: &Configuration, y: &Configuration) -> Result<usize> {
    x.check_compatible(y)?;
    Ok(level_count(x) + level_count(y))
}
