use abel_cc::poly::{gcd_bi_in_w, nullspace, solve_linear, BiPoly, CPoly};
use abel_cc::scalar::{rat, GaussRational, Rational};
use abel_cc::{LaurentPoly, RatFunc, TrigPoly};
use num_complex::Complex64;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn gauss() -> impl Strategy<Value = GaussRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussRational::new(re, im))
}

fn trig(max_deg: usize) -> impl Strategy<Value = TrigPoly> {
    (
        rational(),
        prop::collection::vec((rational(), rational()), 0..=max_deg),
    )
        .prop_map(|(a0, terms)| {
            let terms = terms
                .into_iter()
                .enumerate()
                .map(|(i, (a, b))| (i + 1, a, b));
            TrigPoly::new(a0, terms.collect::<Vec<_>>()).unwrap()
        })
}

fn cpoly(max_deg: usize) -> impl Strategy<Value = CPoly> {
    prop::collection::vec(gauss(), 1..=max_deg + 1).prop_map(CPoly::new)
}

fn bipoly(max_w: usize, max_z: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(cpoly(max_z), 1..=max_w + 1).prop_map(BiPoly::new)
}

fn half_angle_substitution() -> RatFunc {
    // z = (1 + i x) / (1 − i x)
    let i = GaussRational::i();
    let one = GaussRational::from_int(1);
    RatFunc::new(
        CPoly::new(vec![one.clone(), i.clone()]),
        CPoly::new(vec![one, -i]),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauss_arithmetic(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        prop_assert_eq!((a.clone() + b.clone()).conj(), a.conj() + b.conj());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        if !num_traits::Zero::is_zero(&b.norm_sqr()) {
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(q * b, a.clone());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<GaussRational>().unwrap(), a);
    }

    #[test]
    fn phi_is_a_ring_map(f in trig(6), g in trig(6)) {
        let (pf, pg) = (f.to_laurent(), g.to_laurent());
        prop_assert_eq!((&f + &g).to_laurent(), &pf + &pg);
        prop_assert_eq!((&f - &g).to_laurent(), &pf - &pg);
        prop_assert_eq!((&f * &g).to_laurent(), &pf * &pg);
        prop_assert!(pf.is_real_type());
        prop_assert_eq!(TrigPoly::from_laurent(&pf).unwrap(), f.clone());
    }

    #[test]
    fn product_degrees_add(f in trig(6), g in trig(6)) {
        let fg = &f * &g;
        if f.is_zero() || g.is_zero() {
            prop_assert!(fg.is_zero());
        } else {
            prop_assert_eq!(fg.degree(), f.degree() + g.degree());
        }
    }

    #[test]
    fn eval_matches_laurent_on_circle(f in trig(8), theta in 0.0f64..std::f64::consts::TAU) {
        let direct = f.eval(theta);
        let via = f.to_laurent().eval(Complex64::from_polar(1.0, theta));
        prop_assert!((direct - via.re).abs() <= 1e-9 * (1.0 + direct.abs()));
        prop_assert!(via.im.abs() <= 1e-9 * (1.0 + direct.abs()));
    }

    #[test]
    fn half_angle_is_phi_after_cayley(f in trig(5)) {
        let via_phi = f.to_laurent().to_ratfunc().compose(&half_angle_substitution());
        prop_assert_eq!(f.to_half_angle(), via_phi);
    }

    #[test]
    fn antiderivative_inverts_derivative(f in trig(6)) {
        let zero_mean = &f - &TrigPoly::constant(f.a0().clone());
        prop_assert_eq!(zero_mean.antiderivative().unwrap().derivative(), zero_mean.clone());
        // antiderivatives vanish at θ = 0
        let at_zero = f.terms().fold(f.a0().clone(), |acc, (_, a, _)| acc + a);
        prop_assert_eq!(f.derivative().antiderivative().unwrap(), &f - &TrigPoly::constant(at_zero));
    }

    #[test]
    fn laurent_conj_reciprocal_is_involution(coeffs in prop::collection::vec(gauss(), 1..6), lo in -4i64..4) {
        let l = LaurentPoly::new(lo, coeffs);
        prop_assert_eq!(l.conj_reciprocal().conj_reciprocal(), l.clone());
        let sym = &l + &l.conj_reciprocal();
        prop_assert!(sym.is_real_type());
    }

    #[test]
    fn solve_linear_satisfies_system(
        rows in prop::collection::vec(prop::collection::vec(rational(), 4), 1..6),
        x in prop::collection::vec(rational(), 4),
    ) {
        let rhs: Vec<Rational> = rows
            .iter()
            .map(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();
        let sol = solve_linear(&rows, &rhs).unwrap().expect("consistent by construction");
        for (r, b) in rows.iter().zip(&rhs) {
            let lhs: Rational = r.iter().zip(&sol).map(|(a, s)| a * s).sum();
            prop_assert_eq!(&lhs, b);
        }
        for v in nullspace(&rows, 4).unwrap() {
            for r in &rows {
                let dot: Rational = r.iter().zip(&v).map(|(a, s)| a * s).sum();
                prop_assert!(num_traits::Zero::is_zero(&dot));
            }
        }
    }

    #[test]
    fn bivariate_gcd_contains_common_factor(d in bipoly(2, 2), a in bipoly(2, 2), b in bipoly(2, 2)) {
        prop_assume!(!d.is_zero() && !a.is_zero() && !b.is_zero());
        let (p, q) = (d.mul(&a), d.mul(&b));
        let g = gcd_bi_in_w(&p, &q).unwrap();
        prop_assert!(g.divides_in_w(&p) && g.divides_in_w(&q));
        if d.deg_w() > 0 {
            prop_assert!(d.divides_in_w(&g));
        }
    }
}
