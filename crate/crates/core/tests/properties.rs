mod common;

use proptest::prelude::*;
use quiverkit::dt::{
    conjugate_monomial, dt_order_probe, dt_product, factors_of, verify_identity, y_seed_mutate, YSeed,
};
use quiverkit::qalgebra::{Exponent, QCoefficient, QuantumSeries};
use quiverkit::quiver::brute_force_frozen_isomorphism;
use quiverkit::search::{
    build_exchange_graph, enumerate_mutation_class, fixture, search_green_sequences, verify_sequence,
    SearchBounds, Verdict, Want,
};
use quiverkit::{canonical_form, frozen_isomorphism, MutationState, Quiver, VertexStatus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn quiver_from_upper(n: usize, upper: &[i64]) -> Quiver {
    let mut m = vec![vec![0i64; n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let x = *it.next().unwrap();
            m[i][j] = x;
            m[j][i] = -x;
        }
    }
    Quiver::from_matrix(&m).unwrap()
}

fn quiver_and_sequence(max_n: usize, bound: i64, max_len: usize) -> impl Strategy<Value = (Quiver, Vec<usize>)> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(-bound..=bound, n * (n - 1) / 2),
            prop::collection::vec(1..=n, 0..=max_len),
        )
            .prop_map(move |(upper, seq)| (quiver_from_upper(n, &upper), seq))
    })
}

proptest! {
    #[test]
    fn mutation_preserves_skew_symmetry_and_is_an_involution((q, seq) in quiver_and_sequence(6, 3, 12)) {
        let mut p = q.clone();
        for &k in &seq {
            let Ok(m) = p.mutate(k) else { break };
            prop_assert!(m.is_skew_symmetric());
            prop_assert_eq!(&m.mutate(k).unwrap(), &p);
            p = m;
        }
    }

    #[test]
    fn c_vectors_are_sign_coherent((q, seq) in quiver_and_sequence(6, 3, 12)) {
        let mut state = MutationState::frame(&q).unwrap();
        for &k in &seq {
            let Ok(next) = state.mutate(k) else { break };
            state = next;
            let c = state.c_matrix_unchecked();
            prop_assert!(c.is_sign_coherent());
            for v in 1..=q.n() {
                let row = c.row(v - 1);
                let green = row.iter().all(|&x| x >= 0);
                let status = state.vertex_status(v).unwrap();
                prop_assert_eq!(status == VertexStatus::Green, green);
            }
            prop_assert_eq!(state.greens().len() + state.reds().len(), q.n());
        }
    }

    #[test]
    fn undo_reverts_mutation((q, seq) in quiver_and_sequence(5, 2, 6), k in 1usize..=5) {
        let state = MutationState::frame(&q).unwrap().apply_sequence(&seq).unwrap();
        let k = 1 + (k - 1) % q.n();
        let back = state.mutate(k).unwrap().undo().unwrap();
        prop_assert_eq!(back.quiver(), state.quiver());
        prop_assert_eq!(back.history(), state.history());
    }

    #[test]
    fn canonical_form_ignores_labels((q, _) in quiver_and_sequence(7, 2, 0), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = common::random_permutation(&mut rng, q.n());
        prop_assert_eq!(canonical_form(&q), canonical_form(&q.relabel(&perm)));
    }

    #[test]
    fn frozen_isomorphism_agrees_with_brute_force(
        (q, seq) in quiver_and_sequence(6, 2, 8),
        other in prop::collection::vec(1usize..=6, 0..=8),
        seed in any::<u64>(),
    ) {
        let n = q.n();
        let a = MutationState::frame(&q).unwrap().apply_sequence(&seq).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = common::random_permutation(&mut rng, n);
        let relabelled = a.quiver().relabel(&perm);

        let sigma = quiverkit::quiver::frozen_isomorphism_of_quivers(a.quiver(), &relabelled).unwrap();
        prop_assert!(sigma.is_some());
        prop_assert!(brute_force_frozen_isomorphism(a.quiver(), &relabelled).is_some());
        // reflexive, and symmetric through the inverse
        prop_assert!(frozen_isomorphism(&a, &a).unwrap().is_some());
        let back = quiverkit::quiver::frozen_isomorphism_of_quivers(&relabelled, a.quiver()).unwrap();
        prop_assert!(back.is_some());

        let other: Vec<usize> = other.into_iter().map(|k| 1 + (k - 1) % n).collect();
        let b = MutationState::frame(&q).unwrap().apply_sequence(&other).unwrap();
        let fast = frozen_isomorphism(&a, &b).unwrap();
        let slow = brute_force_frozen_isomorphism(a.quiver(), b.quiver());
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(s) = fast {
            let d = q.n() + q.n();
            let image = |i: usize| if i < n { s.apply(i) } else { i };
            for i in 0..n {
                for j in 0..d {
                    prop_assert_eq!(a.quiver().b(image(i), image(j)), b.quiver().b(i, j));
                }
            }
        }
    }

    #[test]
    fn found_sequences_reverify((q, _) in quiver_and_sequence(4, 2, 0)) {
        let bounds = SearchBounds { max_depth: 12, max_nodes: 2000 };
        let out = search_green_sequences(&q, bounds, Want::All).unwrap();
        for s in &out.sequences {
            prop_assert_eq!(verify_sequence(&q, s).unwrap().verdict, Verdict::MaximalGreen);
        }
        if !out.truncated {
            let g = build_exchange_graph(&q, 5000).unwrap();
            if !g.truncated {
                prop_assert!(g.has_unique_source());
                prop_assert!(g.sink_count() <= 1);
                for s in &out.sequences {
                    let path = g.walk(s);
                    prop_assert!(path.is_some());
                    let end = path.unwrap().last().copied();
                    prop_assert_eq!(end, g.sinks.first().copied());
                }
            }
        }
    }

    #[test]
    fn mutation_class_is_a_class_invariant(seq in prop::collection::vec(1usize..=4, 0..=10)) {
        let q = Quiver::from_arrows(4, &[(1, 2, 1), (2, 3, 1), (3, 4, 1)]).unwrap();
        let member = q.mutate_sequence(&seq).unwrap();
        let a = enumerate_mutation_class(&q, 1000).unwrap();
        let b = enumerate_mutation_class(&member, 1000).unwrap();
        prop_assert!(a.complete && b.complete);
        prop_assert_eq!(a.representatives, b.representatives);
    }

    #[test]
    fn y_seed_mutation_is_reduced_and_involutive((q, seq) in quiver_and_sequence(3, 1, 4)) {
        let mut s = YSeed::initial(&q);
        for &k in &seq {
            let t = y_seed_mutate(&s, k).unwrap();
            prop_assert!(t.y.iter().all(|y| y.is_reduced()));
            prop_assert_eq!(&y_seed_mutate(&t, k).unwrap(), &s);
            s = t;
        }
    }

    #[test]
    fn green_sequences_have_positive_factors((q, seq) in quiver_and_sequence(4, 2, 8)) {
        let (Ok(report), Ok(factors)) = (verify_sequence(&q, &seq), factors_of(&q, &seq)) else {
            return Ok(());
        };
        if report.steps.iter().all(|s| s.was_green) {
            prop_assert!(factors.iter().all(|f| f.eps == 1));
        }
        for (f, s) in factors.iter().zip(&report.steps) {
            prop_assert_eq!(f.eps, s.sign);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_product_is_associative(seed in any::<u64>(), n in 1usize..=3, cap in 1u32..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = common::random_lambda(&mut rng, n);
        let a = common::random_series(&mut rng, &l, cap, 4);
        let b = common::random_series(&mut rng, &l, cap, 4);
        let c = common::random_series(&mut rng, &l, cap, 4);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_round_trips(seed in any::<u64>(), n in 1usize..=3, cap in 1u32..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = common::random_lambda(&mut rng, n);
        let a = common::random_unit_series(&mut rng, &l, cap, 5);
        let inv = a.inverse().unwrap();
        let one = QuantumSeries::one(&l, cap);
        prop_assert_eq!(&a.mul(&inv).unwrap(), &one);
        prop_assert_eq!(&inv.mul(&a).unwrap(), &one);
    }

    #[test]
    fn monomials_twist_by_lambda(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = common::random_lambda(&mut rng, n);
        let cap = 8;
        let alpha = common::random_exponent(&mut rng, n, 3);
        let beta = common::random_exponent(&mut rng, n, 3);
        let ya = QuantumSeries::monomial(&l, cap, alpha.clone(), QCoefficient::one());
        let yb = QuantumSeries::monomial(&l, cap, beta.clone(), QCoefficient::one());
        let ab = ya.mul(&yb).unwrap();
        let ba = yb.mul(&ya).unwrap();
        let sum: Vec<u32> = alpha.as_slice().iter().zip(beta.as_slice()).map(|(x, y)| x + y).collect();
        let ratio = ab.coeff(&sum).checked_div(&ba.coeff(&sum)).unwrap();
        prop_assert_eq!(ratio, QCoefficient::v_pow(2 * l.pair(&alpha, &beta)));
    }

    #[test]
    fn coefficient_equality_is_cross_multiplication(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_coeff(&mut rng);
        let b = common::random_coeff(&mut rng);
        let c = common::random_coeff(&mut rng);
        // a/b == (a c)/(b c)
        let x = a.checked_div(&b).unwrap();
        let y = (&a * &c).checked_div(&(&b * &c)).unwrap();
        prop_assert_eq!(&x, &y);
        let lhs = a.numerator() * b.denominator();
        let rhs = b.numerator() * a.denominator();
        prop_assert_eq!(a == b, lhs == rhs);
    }
}

#[test]
fn reddening_finals_are_frozen_isomorphic() {
    for name in ["a2", "a3-alternating", "a2-square-a2"] {
        let f = fixture(name).unwrap();
        let bounds = SearchBounds { max_depth: 16, max_nodes: 50_000 };
        let found = search_green_sequences(&f.quiver, bounds, Want::All).unwrap();
        assert!(found.sequences.len() >= 2, "{name}");
        let first = MutationState::frame(&f.quiver).unwrap().apply_sequence(&found.sequences[0]).unwrap();
        for s in &found.sequences[1..] {
            let other = MutationState::frame(&f.quiver).unwrap().apply_sequence(s).unwrap();
            assert!(frozen_isomorphism(&first, &other).unwrap().is_some(), "{name} {s:?}");
        }
    }
}

#[test]
fn reddening_products_agree_on_small_fixtures() {
    for name in ["a2", "a3-alternating", "a3-linear", "triangle-path", "a2-square-a2"] {
        let f = fixture(name).unwrap();
        let bounds = SearchBounds { max_depth: 16, max_nodes: 50_000 };
        let found = search_green_sequences(&f.quiver, bounds, Want::All).unwrap();
        let seqs = &found.sequences;
        let cap = if f.quiver.n() <= 3 { 8 } else { 5 };
        // compare the first sequence with a spread of the others
        let step = (seqs.len() / 4).max(1);
        for s in seqs.iter().skip(1).step_by(step) {
            assert!(verify_identity(&f.quiver, &seqs[0], s, cap).unwrap().is_equal(), "{name} {s:?}");
        }
    }
}

#[test]
fn conjugation_starts_with_the_monomial() {
    let q = Quiver::from_arrows(3, &[(1, 2, 1), (2, 3, 1)]).unwrap();
    let e = dt_product(&q, &[1, 2, 3], 5).unwrap();
    for alpha in [[1, 0, 0], [0, 1, 1], [2, 0, 1]] {
        let c = conjugate_monomial(&e, &alpha, 5).unwrap();
        let lowest = c.terms().next().unwrap();
        assert_eq!(lowest.0, &Exponent::new(alpha.to_vec()));
        assert!(lowest.1.is_one());
    }
}

#[test]
fn probe_period_is_independent_of_the_sequence() {
    let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
    assert_eq!(
        dt_order_probe(&q, &[1, 2], 10).unwrap(),
        dt_order_probe(&q, &[2, 1, 2], 10).unwrap()
    );
}
