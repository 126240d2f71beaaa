//! Property tests for the norm, envelope and factorisation invariants.

use num_complex::Complex64;
use proptest::prelude::*;

use orlicz_core::majorant::least_concave_majorant;
use orlicz_core::nfunction::NFunction;
use orlicz_core::oracle;
use orlicz_core::orlicz_space::{calderon_factorize, luxemburg_norm, modular, FiniteSequence};

fn sequence_strategy(max_len: usize) -> impl Strategy<Value = FiniteSequence> {
    prop::collection::vec(
        (
            -30i64..=30,
            prop::num::f64::NORMAL.prop_map(|x| x.rem_euclid(4.0) + 0.05),
            -1.0f64..1.0,
        ),
        1..max_len,
    )
    .prop_map(|triples| {
        let mut pairs: Vec<(i64, Complex64)> = Vec::new();
        for (k, r, phase) in triples {
            if !pairs.iter().any(|(j, _)| *j == k) {
                pairs.push((k, Complex64::from_polar(r, phase * std::f64::consts::PI)));
            }
        }
        FiniteSequence::new(&pairs).unwrap()
    })
}

fn phis() -> Vec<NFunction> {
    vec![
        NFunction::power(2.0).unwrap(),
        NFunction::power(3.0).unwrap(),
        NFunction::power_log(2.0, 1.0).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_axioms(f in sequence_strategy(8), g in sequence_strategy(6),
                   scale_re in -2.0f64..2.0, scale_im in -2.0f64..2.0,
                   which in 0usize..3) {
        let phi = &phis()[which];
        let lam = Complex64::new(scale_re, scale_im);
        prop_assume!(lam.norm() > 1e-3);
        let nf = luxemburg_norm(phi, &f).unwrap();
        let ng = luxemburg_norm(phi, &g).unwrap();
        // absolute homogeneity
        let nsc = luxemburg_norm(phi, &f.scale(lam)).unwrap();
        prop_assert!((nsc - lam.norm() * nf).abs() <= 1e-12 * (lam.norm() * nf).max(1.0));
        // triangle inequality
        let nsum = luxemburg_norm(phi, &f.add(&g)).unwrap();
        prop_assert!(nsum <= nf + ng + 1e-12 * (nf + ng).max(1.0));
        // lattice property
        let shrunk = f.scale(Complex64::new(0.37, 0.0));
        prop_assert!(shrunk.dominated_by(&f));
        prop_assert!(luxemburg_norm(phi, &shrunk).unwrap() <= nf * (1.0 + 1e-12));
        // the modular at the norm sits just below one
        let m = modular(phi, &f, nf).unwrap();
        prop_assert!(m <= 1.0 + 1e-12 && m >= 1.0 - 1e-9, "modular {m}");
    }

    #[test]
    fn norm_matches_p_norm_for_powers(f in sequence_strategy(8), p in 1.2f64..4.0) {
        let phi = NFunction::power(p).unwrap();
        let lux = luxemburg_norm(&phi, &f).unwrap();
        let pn = oracle::p_norm(f.values(), p);
        prop_assert!((lux - pn).abs() <= 1e-10 * pn.max(1.0), "{lux} vs {pn}");
    }

    #[test]
    fn envelope_dominates_and_is_idempotent(
        raw in prop::collection::vec((0.01f64..100.0, 0.01f64..10.0), 3..24)
    ) {
        let mut samples: Vec<(f64, f64)> = raw;
        samples.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        samples.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9);
        prop_assume!(samples.len() >= 2);
        let env = least_concave_majorant(&samples).unwrap();
        prop_assert!(env.slopes_nonincreasing());
        for &(t, v) in &samples {
            let e = env.eval(t).unwrap();
            prop_assert!(e >= v * (1.0 - 1e-13), "t={t}: {e} < {v}");
        }
        // breakpoints touch the source
        for (b, val) in env.breakpoints.iter().zip(&env.values) {
            if *b == 0.0 { continue; }
            let src = samples.iter().find(|(t, _)| t == b).unwrap();
            prop_assert_eq!(src.1, *val);
        }
        let vertices: Vec<(f64, f64)> = env
            .breakpoints
            .iter()
            .zip(&env.values)
            .map(|(&a, &b)| (a, b))
            .collect();
        let again = least_concave_majorant(&vertices).unwrap();
        prop_assert_eq!(again.breakpoints, env.breakpoints);
        prop_assert_eq!(again.values, env.values);
    }

    #[test]
    fn calderon_post_conditions(f in sequence_strategy(8), theta in 0.1f64..0.9) {
        // closed-form factor spaces keep the property test fast
        let phi = NFunction::power(2.0).unwrap();
        let p_theta = 1.0 / ((0.5 - theta / 2.0) / (1.0 - theta));
        let phi0 = NFunction::power(p_theta).unwrap();
        let phi1 = NFunction::power(2.0).unwrap();
        let fact = calderon_factorize(&phi, &phi0, &phi1, theta, &f).unwrap();
        prop_assert!(luxemburg_norm(&phi0, &fact.y).unwrap() <= 1.0 + 1e-9);
        prop_assert!(luxemburg_norm(&phi1, &fact.z).unwrap() <= 1.0 + 1e-9);
        for (&k, v) in f.support().iter().zip(f.values()) {
            let bound = fact.lambda
                * fact.y.get(k).norm().powf(1.0 - theta)
                * fact.z.get(k).norm().powf(theta);
            prop_assert!(v.norm() <= bound * (1.0 + 1e-9));
        }
    }
}
