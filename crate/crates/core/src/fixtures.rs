//! Small towers with hand-checked characters.

use crate::tower::TowerSpec;

/// `n = (1, 2)`, `ℓ = (1, 2)`, `c_{1,2} = (2, -1)`: twelve cube points, two of
/// them with sign -1.
pub fn mixed_sign_tower() -> TowerSpec {
    TowerSpec::new(&[1, 2], &[1, 2], [((1, 2), vec![2, -1])]).expect("valid fixture")
}

/// `n = (2, 1)`, `ℓ = (2, -6)`, `c_{1,2} = (-1)`: five cube points, all sign -1.
pub fn negative_tower() -> TowerSpec {
    TowerSpec::new(&[2, 1], &[2, -6], [((1, 2), vec![-1])]).expect("valid fixture")
}

/// `n = (2, 2)`, `ℓ = (1, 2)`, `c_{1,2} = (2, -1)`: twenty-one cube points, all
/// sign +1.
pub fn balanced_tower() -> TowerSpec {
    TowerSpec::new(&[2, 2], &[1, 2], [((1, 2), vec![2, -1])]).expect("valid fixture")
}
