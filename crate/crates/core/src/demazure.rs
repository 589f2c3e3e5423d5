//! Demazure-type operators `D_i` on `Z[T]` and the character recursion
//! `χ = D_1 ⋯ D_m(λ^{e_{m+1}})`.
//!
//! `D_i` expands a monomial `λ^μ` according to the sign regime of the twist
//! `k = k_i(μ)`:
//!
//! * `k >= 0`: `Σ_{0<=r<=k} Σ_{z ∈ Δ⁻_{n_i,r}} λ^{μ + z}`
//! * `-n_i <= k <= -1`: nothing
//! * `k <= -n_i - 1`: `(-1)^{n_i} Σ_{n_i+1<=r<=-k} Σ_{z ∈ Δ⁺_{n_i,r}} λ^{μ + z}`
//!
//! where `z` is written into the level-`i` block of `μ`.

use crate::character::{LaurentPolynomial, Weight};
use crate::compositions::Compositions;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::tower::TowerSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimplexKind {
    /// `{z ∈ Z_{<=0}^n : Σz = -r}`
    Neg,
    /// `{z ∈ Z_{>0}^n : Σz = r - 1}`
    Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexSet {
    pub n: usize,
    pub r: i64,
    pub kind: SimplexKind,
    pub elements: Vec<Vec<i64>>,
}

/// Lattice points of the simplex slice `Δ^±_{n,r}`, lexicographically sorted.
pub fn simplex(n: usize, r: i64, kind: SimplexKind) -> SimplexSet {
    let mut elements = Vec::new();
    match kind {
        SimplexKind::Neg => {
            let mut comps = Compositions::new(r, n, 0);
            while let Some(c) = comps.next() {
                elements.push(c.iter().map(|v| -v).collect());
            }
        }
        SimplexKind::Pos => {
            if let Some(total) = r.checked_sub(1) {
                let mut comps = Compositions::new(total, n, 1);
                while let Some(c) = comps.next() {
                    elements.push(c.to_vec());
                }
            }
        }
    }
    elements.sort_unstable();
    SimplexSet { n, r, kind, elements }
}

/// Twist `k_i(μ) = ℓ_i + Σ_{j>i} Σ_k c_{i,j}^{(k)} μ_{j,k}`.
///
/// Only defined when `μ = e_{m+1} + (coordinates of levels above i)`; any
/// other weight means operators were applied out of order.
pub fn twist(spec: &TowerSpec, i: usize, mu: &Weight) -> Result<i64> {
    let i = spec.level_checked(i)?;
    if mu.dim() != spec.weight_dim() {
        return Err(Error::DimensionMismatch { expected: spec.weight_dim(), found: mu.dim() });
    }
    if mu.circle_exponent() != 1 {
        return Err(Error::MalformedWeight { level: i, reason: "circle exponent is not 1" });
    }
    let coords = mu.coords();
    if coords[..spec.block(i).end].iter().any(|&v| v != 0) {
        return Err(Error::MalformedWeight { level: i, reason: "support at or below this level" });
    }
    let overflow = || Error::Overflow("twist");
    let mut k = spec.twist(i);
    for j in (i + 1)..=spec.height() {
        for (&c, &x) in spec.coupling(i, j).iter().zip(&coords[spec.block(j)]) {
            k = k.checked_add(c.checked_mul(x).ok_or_else(overflow)?).ok_or_else(overflow)?;
        }
    }
    Ok(k)
}

fn placed(mu: &Weight, spec: &TowerSpec, i: usize, z: impl IntoIterator<Item = i64>) -> Weight {
    let mut w = mu.clone();
    for (dst, v) in w.coords_mut()[spec.block(i)].iter_mut().zip(z) {
        *dst = v;
    }
    w
}

/// Linear extension of `D_i` applied to `chi`.
pub fn apply_d<C: Coefficient>(
    spec: &TowerSpec,
    i: usize,
    chi: &LaurentPolynomial<C>,
) -> Result<LaurentPolynomial<C>> {
    let n = spec.level_checked(i).map(|i| spec.dim(i))?;
    let n_signed = n as i64;
    let mut out = Vec::new();
    for (mu, coeff) in chi.iter() {
        // Distinct `mu` differ above level `i`, so sorting each chunk keeps
        // `out` sorted when `chi` is.
        let start = out.len();
        let k = twist(spec, i, mu)?;
        if k >= 0 {
            for r in 0..=k {
                let mut comps = Compositions::new(r, n, 0);
                while let Some(z) = comps.next() {
                    out.push((placed(mu, spec, i, z.iter().map(|v| -v)), coeff));
                }
            }
        } else if k < -n_signed {
            let signed = coeff.checked_product(C::sign_power(n))?;
            for r in (n_signed + 1)..=-k {
                let mut comps = Compositions::new(r - 1, n, 1);
                while let Some(z) = comps.next() {
                    out.push((placed(mu, spec, i, z.iter().copied()), signed));
                }
            }
        }
        out[start..].sort_unstable_by(|a, b| a.0.cmp(&b.0));
    }
    LaurentPolynomial::from_terms(chi.dim(), out)
}

/// `D_i` for a level with `n_i = 1`, written out directly:
/// `λ^μ + λ^{μ-e} + .. + λ^{μ-k e}` for `k >= 0`, zero for `k = -1`, and
/// `-λ^{μ+e} - .. - λ^{μ-(k+1)e}` for `k <= -2`.
pub fn apply_d_rank_one<C: Coefficient>(
    spec: &TowerSpec,
    i: usize,
    chi: &LaurentPolynomial<C>,
) -> Result<LaurentPolynomial<C>> {
    let n = spec.level_checked(i).map(|i| spec.dim(i))?;
    if n != 1 {
        return Err(Error::NotRankOne { level: i, n });
    }
    let mut out = Vec::new();
    for (mu, coeff) in chi.iter() {
        let k = twist(spec, i, mu)?;
        if k >= 0 {
            for step in 0..=k {
                out.push((placed(mu, spec, i, [-step]), coeff));
            }
        } else if k <= -2 {
            let negated = coeff.checked_negation()?;
            for step in 1..=-(k + 1) {
                out.push((placed(mu, spec, i, [step]), negated));
            }
        }
    }
    LaurentPolynomial::from_terms(chi.dim(), out)
}

/// `χ = D_1 ⋯ D_m(λ^{e_{m+1}})`, applying `D_m` first.
pub fn demazure_character<C: Coefficient>(spec: &TowerSpec) -> Result<LaurentPolynomial<C>> {
    let dim = spec.weight_dim();
    let mut chi = LaurentPolynomial::monomial(Weight::unit(dim, dim - 1), C::one());
    for i in (1..=spec.height()).rev() {
        chi = apply_d(spec, i, &chi)?;
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Character;

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn twist_examples() {
        let spec = fixtures::negative_tower();
        assert_eq!(twist(&spec, 2, &w(&[0, 0, 0, 1])).unwrap(), -6);
        assert_eq!(twist(&spec, 1, &w(&[0, 0, 5, 1])).unwrap(), -3);
        let spec = fixtures::mixed_sign_tower();
        assert_eq!(twist(&spec, 1, &w(&[0, 0, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn twist_rejects_out_of_order_weights() {
        let spec = fixtures::mixed_sign_tower();
        assert!(matches!(
            twist(&spec, 2, &w(&[0, -1, 0, 1])),
            Err(Error::MalformedWeight { level: 2, .. })
        ));
        assert!(matches!(
            twist(&spec, 1, &w(&[0, 0, 0, 2])),
            Err(Error::MalformedWeight { .. })
        ));
        assert!(matches!(twist(&spec, 1, &w(&[0, 1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn simplex_examples() {
        assert_eq!(simplex(2, 1, SimplexKind::Neg).elements, vec![vec![-1, 0], vec![0, -1]]);
        assert_eq!(simplex(2, 3, SimplexKind::Pos).elements, vec![vec![1, 1]]);
        assert!(simplex(2, 2, SimplexKind::Pos).elements.is_empty());
        assert!(simplex(2, -1, SimplexKind::Neg).elements.is_empty());
        assert!(simplex(3, i64::MIN, SimplexKind::Pos).elements.is_empty());
    }

    #[test]
    fn top_operator_on_mixed_sign_tower() {
        let spec = fixtures::mixed_sign_tower();
        let seed = Character::monomial(w(&[0, 0, 0, 1]), 1);
        let got = apply_d(&spec, 2, &seed).unwrap();
        let want = Character::from_terms(
            4,
            [[0, 0, 0], [0, -1, 0], [0, 0, -1], [0, -2, 0], [0, -1, -1], [0, 0, -2]]
                .map(|x| (Weight::with_circle(&x, 1), 1)),
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn top_operator_on_negative_tower() {
        let spec = fixtures::negative_tower();
        let seed = Character::monomial(w(&[0, 0, 0, 1]), 1);
        let got = apply_d(&spec, 2, &seed).unwrap();
        let want = Character::from_terms(
            4,
            (1..=5).map(|s| (Weight::with_circle(&[0, 0, s], 1), -1)),
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn rank_one_cases() {
        // single level with n = 1: k_1 = ℓ_1
        let at = |l: i64| TowerSpec::new(&[1], &[l], []).unwrap();
        let seed = Character::monomial(w(&[0, 1]), 1);

        let got = apply_d_rank_one(&at(2), 1, &seed).unwrap();
        let want = Character::from_terms(2, [(w(&[0, 1]), 1), (w(&[-1, 1]), 1), (w(&[-2, 1]), 1)]).unwrap();
        assert_eq!(got, want);

        assert!(apply_d_rank_one(&at(-1), 1, &seed).unwrap().is_empty());
        assert!(apply_d(&at(-1), 1, &seed).unwrap().is_empty());

        let got = apply_d_rank_one(&at(-3), 1, &seed).unwrap();
        let want = Character::from_terms(2, [(w(&[1, 1]), -1), (w(&[2, 1]), -1)]).unwrap();
        assert_eq!(got, want);
        assert_eq!(apply_d(&at(-3), 1, &seed).unwrap(), want);

        let spec = fixtures::negative_tower();
        assert_eq!(
            apply_d_rank_one(&spec, 1, &seed.clone()).unwrap_err(),
            Error::NotRankOne { level: 1, n: 2 }
        );
    }

    #[test]
    fn recursion_reproduces_small_examples() {
        let chi: Character = demazure_character(&fixtures::negative_tower()).unwrap();
        assert_eq!(chi.len(), 5);
        assert!(chi.iter().all(|(_, c)| c == -1));
        let chi: Character = demazure_character(&fixtures::balanced_tower()).unwrap();
        assert_eq!(chi.len(), 21);
        assert!(chi.iter().all(|(mu, c)| c == 1 && mu.circle_exponent() == 1));
    }
}
