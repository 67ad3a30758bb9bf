//! Built-in example configurations.

use crate::config_space::Configuration;

/// Eight points on four levels with partition `(3, 2, 1, 2)`, already in
/// sorted order.
pub fn figure_configuration() -> Configuration {
    let points = [
        [0.4, 0.0],
        [1.2, 0.0],
        [2.0, 0.0],
        [0.8, 1.0],
        [1.8, 1.0],
        [1.5, 1.5],
        [1.5, 2.5],
        [2.5, 2.5],
    ];
    Configuration::new(2, points.iter().map(|p| p.to_vec()).collect())
        .expect("figure configuration is valid")
}

/// Two points exchanging places on the first axis. Both stacks order the
/// labels differently, so a simultaneous transfer between them collides.
pub fn swap_pair() -> (Configuration, Configuration) {
    let x = Configuration::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0]]).expect("valid");
    let y = Configuration::new(2, vec![vec![1.0, 0.0], vec![0.0, 0.0]]).expect("valid");
    (x, y)
}
