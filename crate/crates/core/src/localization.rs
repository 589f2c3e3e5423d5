//! Numeric cross-check of a character against a fixed-point (localization)
//! expression `λ^g Σ_t λ^{a_t} / ∏_r (1 - λ^{w_{t,r}})`.

use num_complex::Complex;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::character::{monomial_value, LaurentPolynomial, Weight};
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Real};

/// Minimum admissible `|1 - t^w|` for any denominator factor.
pub const POLE_GUARD: f64 = 1e-6;

/// Below this reference magnitude errors are measured absolutely.
pub const RELATIVE_FLOOR: f64 = 1e-6;

/// Maximum comparison error accepted by the localization check.
pub const AGREEMENT_TOLERANCE: f64 = 1e-9;

/// Pole rejections tolerated per requested trial before giving up.
pub const REJECTIONS_PER_TRIAL: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalTerm {
    #[serde(rename = "num")]
    pub numerator: Weight,
    #[serde(rename = "den")]
    pub denominators: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawExpr")]
pub struct RationalCharacterExpr {
    #[serde(rename = "global")]
    pub global_factor: Weight,
    pub terms: Vec<RationalTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExpr {
    global: Weight,
    terms: Vec<RationalTerm>,
}

impl TryFrom<RawExpr> for RationalCharacterExpr {
    type Error = Error;

    fn try_from(raw: RawExpr) -> Result<Self> {
        Self::new(raw.global, raw.terms)
    }
}

impl RationalCharacterExpr {
    pub fn new(global_factor: Weight, terms: Vec<RationalTerm>) -> Result<Self> {
        let dim = global_factor.dim();
        for (idx, term) in terms.iter().enumerate() {
            if term.numerator.dim() != dim {
                return Err(Error::MalformedExpr(format!("term {idx}: numerator has wrong length")));
            }
            if term.denominators.is_empty() {
                return Err(Error::MalformedExpr(format!("term {idx}: no denominator factors")));
            }
            for w in &term.denominators {
                if w.dim() != dim {
                    return Err(Error::MalformedExpr(format!("term {idx}: denominator has wrong length")));
                }
                if w.is_zero() {
                    return Err(Error::MalformedExpr(format!("term {idx}: zero denominator weight")));
                }
            }
        }
        Ok(Self { global_factor, terms })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn dim(&self) -> usize {
        self.global_factor.dim()
    }
}

/// Fixed-point expression of the character of the two-stage tower with
/// `n = (1, 2)`, `ℓ = (1, 2)`, `c_{1,2} = (2, -1)`, in coordinates
/// `(x_{1,1}, x_{2,1}, x_{2,2}, s)`.
pub fn mixed_sign_localization() -> RationalCharacterExpr {
    // (e_{1,1}, e_{2,1}, e_{2,2}) multiplicities; circle exponent is 0
    let v = |a: i64, b: i64, c: i64| Weight::new(vec![a, b, c, 0]);
    let term = |num: Weight, den: [Weight; 3]| RationalTerm { numerator: num, denominators: den.to_vec() };
    let terms = vec![
        term(v(0, 0, 0), [v(-1, 0, 0), v(0, -1, 0), v(0, 0, -1)]),
        term(v(0, 0, -2), [v(-1, 0, 0), v(0, -1, 1), v(0, 0, 1)]),
        term(v(0, -2, 0), [v(-1, 0, 0), v(0, 1, -1), v(0, 1, 0)]),
        term(v(-1, 0, 0), [v(1, 0, 0), v(2, -1, 0), v(-1, 0, -1)]),
        term(v(-3, 0, -2), [v(1, 0, 0), v(3, -1, 1), v(1, 0, 1)]),
        term(v(3, -2, 0), [v(1, 0, 0), v(-3, 1, -1), v(-2, 1, 0)]),
    ];
    RationalCharacterExpr::new(Weight::new(vec![0, 0, 0, 1]), terms)
        .expect("built-in localization data is well formed")
}

/// Evaluates the expression at `t`, refusing points where some
/// `|1 - t^w| <= guard`.
pub fn evaluate_rational<F: Real>(
    expr: &RationalCharacterExpr,
    t: &[Complex<F>],
    guard: F,
) -> Result<Complex<F>> {
    if t.len() != expr.dim() {
        return Err(Error::DimensionMismatch { expected: expr.dim(), found: t.len() });
    }
    let one = Complex::new(F::one(), F::zero());
    let mut total = Complex::new(F::zero(), F::zero());
    for term in &expr.terms {
        let mut denominator = one;
        for w in &term.denominators {
            let factor = one - monomial_value(w, t)?;
            if factor.norm() <= guard {
                return Err(Error::NearPole { guard: guard.to_f64().unwrap_or(f64::NAN) });
            }
            denominator = denominator * factor;
        }
        total = total + monomial_value(&term.numerator, t)? / denominator;
    }
    Ok(total * monomial_value(&expr.global_factor, t)?)
}

/// Relative error of `value` against `reference`, absolute when the reference
/// is smaller than [`RELATIVE_FLOOR`].
pub fn comparison_error<F: Real>(value: Complex<F>, reference: Complex<F>) -> F {
    let diff = (value - reference).norm();
    let scale = reference.norm();
    let floor = F::from(RELATIVE_FLOOR).unwrap_or_else(F::epsilon);
    if scale < floor {
        diff
    } else {
        diff / scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalizationReport<F> {
    pub trials: usize,
    pub pole_rejections: usize,
    pub max_error: F,
}

/// Uniform sample on the annulus `0.5 <= |z| <= 2` with uniform phase.
pub fn sample_torus_point<F: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex<F>> {
    (0..dim)
        .map(|_| {
            let modulus: f64 = rng.gen_range(0.5..=2.0);
            let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let z = Complex::from_polar(modulus, phase);
            Complex::new(F::from(z.re).unwrap(), F::from(z.im).unwrap())
        })
        .collect()
}

/// Compares `expr` against the Laurent polynomial `chi` at `trials` random
/// generic torus points, resampling near poles.
pub fn localization_check<F: Real, C: Coefficient, R: Rng + ?Sized>(
    chi: &LaurentPolynomial<C>,
    expr: &RationalCharacterExpr,
    trials: usize,
    rng: &mut R,
) -> Result<LocalizationReport<F>> {
    localization_check_guarded(chi, expr, trials, F::from(POLE_GUARD).unwrap(), rng)
}

/// [`localization_check`] with an explicit pole guard.
pub fn localization_check_guarded<F: Real, C: Coefficient, R: Rng + ?Sized>(
    chi: &LaurentPolynomial<C>,
    expr: &RationalCharacterExpr,
    trials: usize,
    guard: F,
    rng: &mut R,
) -> Result<LocalizationReport<F>> {
    if chi.dim() != expr.dim() {
        return Err(Error::DimensionMismatch { expected: chi.dim(), found: expr.dim() });
    }
    let max_rejections = trials.saturating_mul(REJECTIONS_PER_TRIAL).max(REJECTIONS_PER_TRIAL);
    let mut report = LocalizationReport { trials: 0, pole_rejections: 0, max_error: F::zero() };
    while report.trials < trials {
        let t = sample_torus_point::<F, _>(rng, expr.dim());
        let value = match evaluate_rational(expr, &t, guard) {
            Ok(v) => v,
            Err(Error::NearPole { .. }) => {
                report.pole_rejections += 1;
                if report.pole_rejections > max_rejections {
                    return Err(Error::ExhaustedSampling { rejected: report.pole_rejections });
                }
                continue;
            }
            Err(e) => return Err(e),
        };
        let reference = chi.evaluate(&t)?;
        let err = comparison_error(value, reference);
        if err > report.max_error || err.is_nan() {
            report.max_error = err;
        }
        report.trials += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::TowerSpec;
    use crate::{fixtures, Character};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn built_in_expression_shape() {
        let expr = mixed_sign_localization();
        assert_eq!(expr.terms.len(), 6);
        assert!(expr.terms.iter().all(|t| t.denominators.len() == 3));
        assert!(expr.terms[0].numerator.is_zero());
        assert_eq!(
            expr.terms[0].denominators,
            vec![Weight::new(vec![-1, 0, 0, 0]), Weight::new(vec![0, -1, 0, 0]), Weight::new(vec![0, 0, -1, 0])]
        );
        assert_eq!(expr.terms[2].numerator, Weight::new(vec![0, -2, 0, 0]));
        assert_eq!(
            expr.terms[2].denominators,
            vec![Weight::new(vec![-1, 0, 0, 0]), Weight::new(vec![0, 1, -1, 0]), Weight::new(vec![0, 1, 0, 0])]
        );
    }

    #[test]
    fn geometric_factor() {
        let expr = RationalCharacterExpr::new(
            Weight::zero(2),
            vec![RationalTerm { numerator: Weight::zero(2), denominators: vec![Weight::new(vec![-1, 0])] }],
        )
        .unwrap();
        let t = [Complex::new(2.0, 0.0), Complex::new(1.0, 0.0)];
        let v = evaluate_rational(&expr, &t, 1e-6).unwrap();
        assert!((v - Complex::new(2.0, 0.0)).norm() < 1e-15);

        let pole = [Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)];
        assert!(matches!(evaluate_rational(&expr, &pole, 1e-6), Err(Error::NearPole { .. })));
    }

    #[test]
    fn rejects_malformed_expressions() {
        let bad = RationalCharacterExpr::new(
            Weight::zero(2),
            vec![RationalTerm { numerator: Weight::zero(2), denominators: vec![] }],
        );
        assert!(matches!(bad, Err(Error::MalformedExpr(_))));
        let bad = RationalCharacterExpr::new(
            Weight::zero(2),
            vec![RationalTerm { numerator: Weight::zero(2), denominators: vec![Weight::zero(2)] }],
        );
        assert!(matches!(bad, Err(Error::MalformedExpr(_))));
    }

    #[test]
    fn json_round_trip() {
        let expr = mixed_sign_localization();
        let text = serde_json::to_string(&expr).unwrap();
        assert!(text.starts_with(r#"{"global":[0,0,0,1],"terms":[{"num":[0,0,0,0],"den":[[-1,0,0,0]"#));
        assert_eq!(RationalCharacterExpr::from_json(&text).unwrap(), expr);
        assert!(RationalCharacterExpr::from_json(r#"{"global":[0],"terms":[{"num":[0],"den":[]}]}"#).is_err());
    }

    #[test]
    fn agrees_with_character_of_the_matching_tower() {
        let chi: Character = crate::demazure::demazure_character(&fixtures::mixed_sign_tower()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let report = localization_check::<f64, _, _>(&chi, &mixed_sign_localization(), 20, &mut rng).unwrap();
        assert_eq!(report.trials, 20);
        assert!(report.max_error < 1e-9, "{report:?}");
    }

    #[test]
    fn empty_character_against_empty_expression() {
        let chi = Character::zero(3);
        let expr = RationalCharacterExpr::new(Weight::zero(3), vec![]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let report = localization_check::<f64, _, _>(&chi, &expr, 5, &mut rng).unwrap();
        assert_eq!(report.max_error, 0.0);
    }

    #[test]
    fn mismatched_pair_is_far_off() {
        let chi: Character = crate::demazure::demazure_character(&fixtures::balanced_tower()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let err = localization_check::<f64, _, _>(&chi, &mixed_sign_localization(), 5, &mut rng);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));

        let wrong: Character = crate::demazure::demazure_character(
            &TowerSpec::new(&[1, 2], &[1, 3], [((1, 2), vec![2, -1])]).unwrap(),
        )
        .unwrap();
        let report = localization_check::<f64, _, _>(&wrong, &mixed_sign_localization(), 5, &mut rng).unwrap();
        assert!(report.max_error > 1e-3);
    }

    #[test]
    fn guard_wider_than_the_annulus_exhausts_sampling() {
        // |1 - t| <= 3 on the sampling annulus
        let expr = RationalCharacterExpr::new(
            Weight::zero(1),
            vec![RationalTerm { numerator: Weight::zero(1), denominators: vec![Weight::new(vec![1])] }],
        )
        .unwrap();
        let chi = Character::zero(1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let err = localization_check_guarded(&chi, &expr, 2, 10.0_f64, &mut rng).unwrap_err();
        assert!(matches!(err, Error::ExhaustedSampling { .. }));
    }
}
