mod common;

use common::*;
use motivic_zeta::*;
use num_bigint::BigInt;
use proptest::prelude::*;

// Z[L] is a commutative ring and L -> 1 is a ring map.
proptest! {
    #[test]
    fn poly_ring_axioms(
        a in poly_strategy(4, 5),
        b in poly_strategy(4, 5),
        c in poly_strategy(4, 5),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &LefschetzPoly::zero(), a.clone());
        prop_assert_eq!(&a * &LefschetzPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn eval_one_is_ring_homomorphism(a in poly_strategy(4, 5), b in poly_strategy(4, 5)) {
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        prop_assert_eq!((&a + &b).eval_one(), a.eval_one() + b.eval_one());
    }

    #[test]
    fn series_inverse_is_exact(f in (0usize..=24).prop_flat_map(|n| unit_series_strategy(n, 6))) {
        let n = f.precision();
        prop_assert_eq!(f.mul(&f.inverse().unwrap()), IntSeries::one(n));
    }

    #[test]
    fn poly_series_inverse_is_exact(
        coeffs in prop::collection::vec(poly_strategy(3, 3), 0..10),
    ) {
        let n = coeffs.len();
        let mut all = vec![LefschetzPoly::one()];
        all.extend(coeffs);
        let f = PolySeries::new(all, n);
        prop_assert_eq!(f.mul(&f.inverse().unwrap()), PolySeries::one(n));
    }

    #[test]
    fn series_pow_adds_exponents(
        f in unit_series_strategy(10, 4),
        a in -4i64..=4,
        b in -4i64..=4,
    ) {
        let lhs = f.powi(a + b).unwrap();
        let rhs = f.powi(a).unwrap().mul(&f.powi(b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_pow_matches_repeated_convolution(f in unit_series_strategy(8, 5), e in 0usize..5) {
        let mut expected = IntSeries::one(8).into_coeffs();
        for _ in 0..e {
            expected = convolve(&expected, f.coeffs(), 8);
        }
        prop_assert_eq!(f.powi(e as i64).unwrap().into_coeffs(), expected);
    }

    #[test]
    fn substitution_is_multiplicative(
        f in unit_series_strategy(12, 5),
        g in unit_series_strategy(12, 5),
        k in 1usize..6,
    ) {
        let lhs = f.mul(&g).substitute_tk(k, 12).unwrap();
        let rhs = f.substitute_tk(k, 12).unwrap().mul(&g.substitute_tk(k, 12).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

// λ-ring structure.
proptest! {
    #[test]
    fn sigma_turns_sums_into_products(c in poly_strategy(4, 5), d in poly_strategy(4, 5)) {
        let lhs = sigma_series(&(&c + &d), 12);
        let rhs = sigma_series(&c, 12).mul(&sigma_series(&d, 12));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn categorical_sigma_turns_sums_into_products(a in -6i64..=6, b in -6i64..=6) {
        let lhs = sigma_series_categorical(&BigInt::from(a + b), 12);
        let rhs = sigma_series_categorical(&BigInt::from(a), 12)
            .mul(&sigma_series_categorical(&BigInt::from(b), 12));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sigma_one_is_identity(c in poly_strategy(5, 5)) {
        let s = sigma_series(&c, 3);
        prop_assert!(s.coeff(0).is_one());
        prop_assert_eq!(s.coeff(1), &c);
    }

    #[test]
    fn sym_power_counts_multisets(c in effective_poly_strategy(3, 2), n in 0usize..5) {
        prop_assert_eq!(sym_power(&c, n), sym_by_multisets(&c, n));
    }

    #[test]
    fn newton_identity(c in poly_strategy(3, 3)) {
        let sigma = sigma_series(&c, 10);
        for n in 1..=10usize {
            let lhs = &LefschetzPoly::constant(n as i64) * sigma.coeff(n);
            let rhs = (1..=n).fold(LefschetzPoly::zero(), |acc, i| {
                let psi = adams(&c, i as u32).unwrap();
                &acc + &(&psi * sigma.coeff(n - i))
            });
            prop_assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn adams_is_multiplicative_ring_map(
        a in poly_strategy(4, 5),
        b in poly_strategy(4, 5),
        k in 1u32..=5,
        j in 1u32..=5,
    ) {
        prop_assert_eq!(adams(&(&a * &b), k).unwrap(), &adams(&a, k).unwrap() * &adams(&b, k).unwrap());
        prop_assert_eq!(adams(&(&a + &b), k).unwrap(), &adams(&a, k).unwrap() + &adams(&b, k).unwrap());
        prop_assert_eq!(adams(&adams(&a, j).unwrap(), k).unwrap(), adams(&a, k * j).unwrap());
        prop_assert_eq!(adams(&a, 1).unwrap(), a);
    }

    #[test]
    fn lambda_sigma_duality(c in poly_strategy(4, 5)) {
        let product = lambda_series(&c, 10).mul(&sigma_series(&c, 10).negate_variable());
        prop_assert_eq!(product, PolySeries::one(10));
    }
}

// Transforms.
proptest! {
    #[test]
    fn exp_and_mobius_are_inverse(f in unit_series_strategy(24, 5)) {
        let there = exp_transform(&f, 24).unwrap();
        prop_assert_eq!(mobius_transform(&there, 24).unwrap(), f.clone());
        let back = mobius_transform(&f, 24).unwrap();
        prop_assert_eq!(exp_transform(&back, 24).unwrap(), f);
    }

    #[test]
    fn exp_transform_is_multiplicative(f in unit_series_strategy(12, 4), g in unit_series_strategy(12, 4)) {
        let lhs = exp_transform(&f.mul(&g), 12).unwrap();
        let rhs = exp_transform(&f, 12).unwrap().mul(&exp_transform(&g, 12).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_transform_is_local(f in unit_series_strategy(16, 4), cut in 1usize..16, noise in -9i64..=9) {
        let mut perturbed = f.clone().into_coeffs();
        for c in perturbed.iter_mut().skip(cut + 1) {
            *c += noise;
        }
        let perturbed = IntSeries::new(perturbed, 16);
        let a = exp_transform(&f, 16).unwrap();
        let b = exp_transform(&perturbed, 16).unwrap();
        prop_assert_eq!(&a.coeffs()[..=cut], &b.coeffs()[..=cut]);
    }
}

// Zeta functions.
proptest! {
    #[test]
    fn theorem_holds_for_polynomial_classes(c in poly_strategy(5, 4)) {
        let report = verify_theorem(&c, 16);
        prop_assert!(report.verified(), "{}: {}", c, report);
    }

    #[test]
    fn mult_identities_hold(c in poly_strategy(4, 5), d in poly_strategy(4, 5)) {
        prop_assert!(verify_mult_kap(&c, &d, 12).verified());
        prop_assert!(verify_mult_cat(&c, &d, 12).verified());
    }

    #[test]
    fn pn_power_holds(c in poly_strategy(3, 3), n in 0u32..=3) {
        prop_assert!(verify_pn_power(&c, n, 12).verified());
    }

    #[test]
    fn theorem_rhs_is_truncation_stable(c in poly_strategy(4, 3), extra in 1usize..8) {
        let short = zeta_theorem_rhs(&c, 10);
        let long = zeta_theorem_rhs(&c, 10 + extra);
        prop_assert_eq!(long.truncate(10), short);
    }

    #[test]
    fn specialized_motivic_zeta_is_geometric_power(c in poly_strategy(5, 4)) {
        let lhs = zeta_motivic(&c, 12).specialize();
        let geometric = IntSeries::from_ints([1, -1], 12);
        let rhs = geometric.pow(&-c.eval_one()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

// Expression language.
proptest! {
    #[test]
    fn render_parse_round_trip(p in poly_strategy(6, 50)) {
        let text = render(&p);
        let reparsed = parse_class(&text).unwrap();
        prop_assert_eq!(&reparsed, &p);
        prop_assert_eq!(render(&reparsed), text);
    }

    #[test]
    fn parse_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..40)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse(&text);
    }

    #[test]
    fn parse_never_panics_on_grammar_soup(
        pieces in prop::collection::vec(
            prop::sample::select(vec!["L", "pt", "A", "P", "^", "2", "10", "(", ")", "+", "-", "*", " ", "x", "1.5"]),
            0..30,
        )
    ) {
        let text: String = pieces.concat();
        if let Err(e) = parse(&text) {
            prop_assert!(e.offset().is_none_or(|o| o >= 1 && o <= text.len() + 1));
        }
    }
}

#[test]
fn partition_oracles_agree() {
    let dp = partition_numbers(30);
    for (n, p) in dp.iter().enumerate() {
        assert_eq!(p, &BigInt::from(partitions_by_enumeration(n as u32)), "p({n})");
    }
}

#[test]
fn partition_dp_matches_euler_product_at_100() {
    let dp = partition_numbers(100);
    let product = exp_transform(&IntSeries::from_ints(vec![1; 101], 100), 100).unwrap();
    assert_eq!(product.coeff(100), &dp[100]);
    assert_eq!(zeta_categorical(&LefschetzPoly::one(), 100).coeff(100), &dp[100]);
}

#[test]
fn hand_derived_examples() {
    // (1 + t + 2t^2)^3 mod t^3 by explicit convolution
    let f = [big(1), big(1), big(2)];
    let expected = convolve(&convolve(&f, &f, 2), &f, 2);
    assert_eq!(expected, vec![big(1), big(3), big(9)]);
    assert_eq!(IntSeries::from_ints([1, 1, 2], 2).powi(3).unwrap().into_coeffs(), expected);
    assert_eq!(zeta_theorem_rhs(&LefschetzPoly::projective(2), 2).into_coeffs(), expected);

    // Sym^2 P^1 = P^2 by multiset enumeration
    let p1 = LefschetzPoly::projective(1);
    assert_eq!(sym_by_multisets(&p1, 2), LefschetzPoly::projective(2));
    assert_eq!(sym_power(&p1, 2), sym_by_multisets(&p1, 2));

    // (1 + t)(1 + t^2)(1 + t^3)(1 + t^4) mod t^5
    let mut product = vec![big(1)];
    for k in 1..=4usize {
        let mut factor = vec![big(0); k + 1];
        factor[0] = big(1);
        factor[k] = big(1);
        product = convolve(&product, &factor, 4);
    }
    assert_eq!(
        exp_transform(&IntSeries::from_ints([1, 1], 4), 4).unwrap().into_coeffs(),
        product
    );
}
