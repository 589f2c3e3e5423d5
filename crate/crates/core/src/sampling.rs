//! Random tower specs for differential testing.

use rand::Rng;

use crate::error::{Error, Result};
use crate::tower::TowerSpec;

/// Inclusive bounds: `m ∈ [1, max_m]`, `n_j ∈ [1, max_n]`,
/// `|c| <= max_abs_c`, `|ℓ| <= max_abs_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpecBounds {
    pub max_m: usize,
    pub max_n: usize,
    pub max_abs_c: i64,
    pub max_abs_l: i64,
}

impl RandomSpecBounds {
    pub fn check(&self) -> Result<()> {
        if self.max_m == 0 || self.max_n == 0 {
            return Err(Error::NonPositiveDimension { level: 0, value: 0 });
        }
        if self.max_abs_c < 0 || self.max_abs_l < 0 {
            return Err(Error::Parse("coefficient bounds must be non-negative".into()));
        }
        Ok(())
    }
}

/// Draws `m`, then every `n_j`, then every `ℓ_j`, then the coupling rows in
/// `(i, j, k)` order, all uniformly.
pub fn random_spec<R: Rng + ?Sized>(rng: &mut R, bounds: &RandomSpecBounds) -> Result<TowerSpec> {
    bounds.check()?;
    let m = rng.gen_range(1..=bounds.max_m);
    let n: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=bounds.max_n) as i64).collect();
    let l: Vec<i64> = (0..m).map(|_| rng.gen_range(-bounds.max_abs_l..=bounds.max_abs_l)).collect();
    let mut c = Vec::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            let row = (0..n[j - 1])
                .map(|_| rng.gen_range(-bounds.max_abs_c..=bounds.max_abs_c))
                .collect();
            c.push(((i, j), row));
        }
    }
    TowerSpec::new(&n, &l, c)
}
