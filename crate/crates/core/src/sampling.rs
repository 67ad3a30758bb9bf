//! Seeded random generators for configurations, strata and unit tuples.
//!
//! Used by the property suites, the benches and the CLI demo; every stream is
//! reproducible from its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config_space::{sort_permutation, Configuration, Partition, Permutation};
use crate::retractions::UnitTuple;

/// Spacing of sampled configurations. Consecutive level heights, and
/// consecutive sort keys within a level, differ by a gap drawn from
/// `[min_gap, max_gap]`; free coordinates are uniform in `[-half_width,
/// half_width]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spacing {
    pub min_gap: f64,
    pub max_gap: f64,
    pub half_width: f64,
}

impl Default for Spacing {
    fn default() -> Self {
        Spacing {
            min_gap: 0.05,
            max_gap: 3.0,
            half_width: 5.0,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniformly random ordered partition of `k` into `levels` parts.
    pub fn composition(&mut self, k: usize, levels: usize) -> Partition {
        assert!(1 <= levels && levels <= k, "need 1 <= levels <= k");
        let mut cuts: Vec<usize> = (1..k).collect();
        cuts.shuffle(&mut self.rng);
        let mut cuts = cuts[..levels - 1].to_vec();
        cuts.sort_unstable();
        cuts.push(k);
        let mut prev = 0;
        let parts = cuts
            .into_iter()
            .map(|c| {
                let a = c - prev;
                prev = c;
                a
            })
            .collect();
        Partition::new(parts).expect("positive parts")
    }

    pub fn permutation(&mut self, k: usize) -> Permutation {
        let mut images: Vec<usize> = (0..k).collect();
        images.shuffle(&mut self.rng);
        Permutation::new(images).expect("shuffled identity")
    }

    fn gap(&mut self, spacing: &Spacing) -> f64 {
        self.rng.random_range(spacing.min_gap..=spacing.max_gap)
    }

    /// A configuration in the stratum `F_{A,sigma}`.
    pub fn configuration_in_stratum(
        &mut self,
        dim: usize,
        partition: &Partition,
        order: &Permutation,
        spacing: &Spacing,
    ) -> Configuration {
        let k = partition.total();
        assert_eq!(order.len(), k);
        let w = spacing.half_width;
        let mut coords = vec![0.0; dim * k];
        let mut height = self.rng.random_range(-w..=w);
        let mut rank = 0;
        for (j, &size) in partition.parts().iter().enumerate() {
            if j > 0 {
                height += self.gap(spacing);
            }
            let mut key = self.rng.random_range(-w..=w);
            for m in 0..size {
                if m > 0 {
                    key += self.gap(spacing);
                }
                let label = order.as_slice()[rank];
                let p = &mut coords[label * dim..(label + 1) * dim];
                for c in p.iter_mut().take(dim - 2) {
                    *c = self.rng.random_range(-w..=w);
                }
                p[dim - 2] = key;
                p[dim - 1] = height;
                rank += 1;
            }
        }
        Configuration::from_flat(dim, coords).expect("sampled points are distinct")
    }

    /// A configuration with exactly `levels` levels and random labels.
    pub fn configuration_with_levels(
        &mut self,
        dim: usize,
        k: usize,
        levels: usize,
        spacing: &Spacing,
    ) -> Configuration {
        let partition = self.composition(k, levels);
        let order = self.permutation(k);
        self.configuration_in_stratum(dim, &partition, &order, spacing)
    }

    /// A configuration whose level count is uniform in `1..=k`.
    pub fn configuration(&mut self, dim: usize, k: usize, spacing: &Spacing) -> Configuration {
        let levels = self.rng.random_range(1..=k);
        self.configuration_with_levels(dim, k, levels, spacing)
    }

    /// Points with independent uniform coordinates; almost surely all levels
    /// are singletons.
    pub fn generic_configuration(
        &mut self,
        dim: usize,
        k: usize,
        half_width: f64,
    ) -> Configuration {
        loop {
            let coords = (0..dim * k)
                .map(|_| self.rng.random_range(-half_width..=half_width))
                .collect();
            if let Ok(c) = Configuration::from_flat(dim, coords) {
                return c;
            }
        }
    }

    pub fn unit_vector(&mut self, dim: usize) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..dim)
                .map(|_| self.rng.random_range(-1.0..=1.0))
                .collect();
            let sq: f64 = v.iter().map(|c| c * c).sum();
            if sq > 1e-4 && sq <= 1.0 {
                let n = sq.sqrt();
                return v.into_iter().map(|c| c / n).collect();
            }
        }
    }

    pub fn unit_tuple(&mut self, dim: usize, len: usize) -> UnitTuple {
        let vectors = (0..len).map(|_| self.unit_vector(dim)).collect();
        UnitTuple::new(dim, vectors).expect("normalized vectors")
    }

    /// A point uniformly distributed in the open ball of radius `radius`.
    pub fn point_in_ball(&mut self, dim: usize, radius: f64) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..dim).map(|_| self.rng.random_range(-1.0..1.0)).collect();
            if v.iter().map(|c| c * c).sum::<f64>() < 1.0 {
                return v.into_iter().map(|c| c * radius).collect();
            }
        }
    }

    /// A perturbation direction with entries in `[-1, 1]` that moves every
    /// level of `x` rigidly in the last coordinate, so small multiples keep
    /// the level structure.
    pub fn level_preserving_direction(&mut self, x: &Configuration) -> Vec<f64> {
        let dim = x.dim();
        let sigma = sort_permutation(x);
        let mut dir: Vec<f64> = (0..x.len() * dim)
            .map(|_| self.rng.random_range(-1.0..=1.0))
            .collect();
        let mut level_shift = 0.0;
        let mut last_height = None;
        for &label in sigma.as_slice() {
            let h = x.height(label);
            if last_height != Some(h) {
                level_shift = self.rng.random_range(-1.0..=1.0);
                last_height = Some(h);
            }
            dir[label * dim + dim - 1] = level_shift;
        }
        dir
    }
}

/// `x + delta * direction`, if the result is still a valid configuration.
pub fn displaced(x: &Configuration, direction: &[f64], delta: f64) -> Option<Configuration> {
    let coords = x
        .as_flat()
        .iter()
        .zip(direction)
        .map(|(c, d)| c + delta * d)
        .collect();
    Configuration::from_flat(x.dim(), coords).ok()
}
