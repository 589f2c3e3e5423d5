use bott_index::character::Weight;
use bott_index::demazure::demazure_character;
use bott_index::localization::{
    evaluate_rational, localization_check, mixed_sign_localization, sample_torus_point, RationalCharacterExpr,
};
use bott_index::{fixtures, Character, Complex64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn fixed_point_sum_matches_character_in_double_and_single_precision() {
    let chi: Character = demazure_character(&fixtures::mixed_sign_tower()).unwrap();
    let expr = mixed_sign_localization();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let report = localization_check::<f64, _, _>(&chi, &expr, 200, &mut rng).unwrap();
    assert!(report.max_error < 1e-9, "{report:?}");
    let report = localization_check::<f32, _, _>(&chi, &expr, 50, &mut rng).unwrap();
    assert!(report.max_error < 1e-2, "{report:?}");
}

#[test]
fn reordering_terms_and_factors_is_harmless() {
    let expr = mixed_sign_localization();
    let mut shuffled = expr.clone();
    shuffled.terms.reverse();
    for t in &mut shuffled.terms {
        t.denominators.rotate_left(1);
    }
    let shuffled = RationalCharacterExpr::new(shuffled.global_factor, shuffled.terms).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut compared = 0;
    while compared < 50 {
        let t: Vec<Complex64> = sample_torus_point(&mut rng, 4);
        let (Ok(a), Ok(b)) = (evaluate_rational(&expr, &t, 1e-6), evaluate_rational(&shuffled, &t, 1e-6)) else {
            continue;
        };
        assert!((a - b).norm() <= 1e-12 * a.norm().max(1.0), "{a} vs {b}");
        compared += 1;
    }
}

#[test]
fn global_factor_shifts_the_circle_exponent() {
    let expr = mixed_sign_localization();
    assert_eq!(expr.global_factor, Weight::new(vec![0, 0, 0, 1]));
    let t = [Complex64::new(1.7, 0.3), Complex64::new(0.6, -0.9), Complex64::new(-1.1, 0.4), Complex64::new(2.0, 0.0)];
    let mut no_circle = expr.clone();
    no_circle.global_factor = Weight::zero(4);
    let with = evaluate_rational(&expr, &t, 1e-6).unwrap();
    let without = evaluate_rational(&no_circle, &t, 1e-6).unwrap();
    assert!((with - without * 2.0).norm() < 1e-12 * with.norm());
}
