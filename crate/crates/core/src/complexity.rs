//! Closed-form topological complexity and LS-category values.
//!
//! Covered cases, for `n, k >= 2`:
//!
//! | space | cat | TC | TC_s |
//! |---|---|---|---|
//! | `F(R^n, k)`, `n` odd | `k` | `2k - 1` | `s(k - 1) + 1` |
//! | `F(R^n, k)`, `n` even | `k` | `2k - 2` | uncovered |
//! | `F(R^n \ Q_r, k)`, `r > 0`, `n` odd | `k + 1` | `2k + 1` | `sk + 1` |
//! | `F(R^n \ Q_r, k)`, `r > 0`, `n` even | `k + 1` | uncovered | uncovered |
//! | `F_G(R^n \ 0, k)`, `G` finite and free, `n` odd | `k + 1` | `2k + 1` | `sk + 1` |

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceQuery {
    pub dim: usize,
    pub k: usize,
    /// Number of removed obstacle points.
    pub r: usize,
    /// Orbit space of a finite group acting freely on `R^n \ 0`.
    pub group_free_odd: bool,
}

impl SpaceQuery {
    pub fn new(dim: usize, k: usize, r: usize, group_free_odd: bool) -> Result<Self> {
        let q = SpaceQuery {
            dim,
            k,
            r,
            group_free_odd,
        };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if self.dim < 2 || self.k < 2 {
            return Err(Error::InvalidQuery(format!(
                "need dim >= 2 and k >= 2, got dim = {}, k = {}",
                self.dim, self.k
            )));
        }
        if self.group_free_odd && self.dim.is_multiple_of(2) {
            return Err(Error::InvalidQuery(format!(
                "a free finite group action needs odd dimension, got {}",
                self.dim
            )));
        }
        Ok(())
    }

    fn odd(&self) -> bool {
        self.dim % 2 == 1
    }
}

pub fn tc_value(q: &SpaceQuery) -> Result<usize> {
    q.validate()?;
    let k = q.k;
    match (q.group_free_odd, q.r, q.odd()) {
        (true, _, _) => Ok(2 * k + 1),
        (false, 0, true) => Ok(2 * k - 1),
        (false, 0, false) => Ok(2 * k - 2),
        (false, _, true) => Ok(2 * k + 1),
        (false, r, false) => Err(Error::Uncovered(format!(
            "TC with {r} obstacles in even dimension {}",
            q.dim
        ))),
    }
}

pub fn cat_value(q: &SpaceQuery) -> Result<usize> {
    q.validate()?;
    if q.group_free_odd || q.r > 0 {
        Ok(q.k + 1)
    } else {
        Ok(q.k)
    }
}

/// Higher topological complexity `TC_s` (odd dimensions only).
pub fn tcn_value(order: usize, q: &SpaceQuery) -> Result<usize> {
    q.validate()?;
    if order < 2 {
        return Err(Error::InvalidQuery(format!(
            "TC order must be at least 2, got {order}"
        )));
    }
    if !q.odd() {
        return Err(Error::Uncovered(format!(
            "TC_{order} in even dimension {}",
            q.dim
        )));
    }
    if q.group_free_odd || q.r > 0 {
        Ok(order * q.k + 1)
    } else {
        Ok(order * (q.k - 1) + 1)
    }
}

/// Number of planning domains `F_2, .., F_2k` used by the planner.
pub fn domain_count(k: usize) -> usize {
    2 * k - 1
}
