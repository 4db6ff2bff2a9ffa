//! Seeded random regular graphs.
//!
//! A circulant graph is built first and then randomised by a walk of
//! random edge switchings. The walk never fails where the pairing model
//! would reject most attempts (degree near `n/2`).

use crate::error::GeneratorError;
use crate::graph::Graph;
use crate::moves::{count_feasible, EdgePool};
use crate::rng::SearchRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    pub n: usize,
    pub r: usize,
    pub seed: u64,
    pub mixing_steps: usize,
}

impl GeneratorParams {
    /// Parameters with the default walk length of `10 n r` switchings.
    pub fn new(n: usize, r: usize, seed: u64) -> Self {
        GeneratorParams {
            n,
            r,
            seed,
            mixing_steps: default_mixing_steps(n, r),
        }
    }
}

pub fn default_mixing_steps(n: usize, r: usize) -> usize {
    10 * n * r
}

fn check(n: usize, r: usize) -> Result<(), GeneratorError> {
    if r >= n.max(1) || !(n * r).is_multiple_of(2) {
        return Err(GeneratorError::NoSuchRegularGraph { n, r });
    }
    Ok(())
}

/// Vertex `i` joined to `i +- 1, ..., i +- floor(r/2)` mod `n`, plus the
/// antipode `i + n/2` when `r` is odd.
pub fn circulant_regular(n: usize, r: usize) -> Result<Graph, GeneratorError> {
    check(n, r)?;
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for d in 1..=r / 2 {
            g.add_edge(i, (i + d) % n);
        }
        if r % 2 == 1 {
            g.add_edge(i, (i + n / 2) % n);
        }
    }
    Ok(g)
}

pub fn random_regular(params: &GeneratorParams) -> Result<Graph, GeneratorError> {
    let mut g = circulant_regular(params.n, params.r)?;
    if params.mixing_steps == 0 {
        return Ok(g);
    }
    let mut rng = SearchRng::seed_from(params.seed);
    let mut pool = EdgePool::new(&g);
    if count_feasible(&g) == 0 {
        // Only the empty and complete graphs get here.
        return Err(crate::error::MoveError::NoFeasibleSwitching { attempts: 0 }.into());
    }
    for _ in 0..params.mixing_steps {
        pool.random_switch(&mut g, &mut rng)?;
    }
    Ok(g)
}
