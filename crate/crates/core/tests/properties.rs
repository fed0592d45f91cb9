mod common;

use common::{
    brute_tn, brute_tp, cofactor_det, int_rect, int_square, matrix, oracle_contiguous, oracle_det, oracle_minor, q, r,
    rows_of, subsets,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use tpkit::compound::{compound, lex_rank};
use tpkit::condensation::{condensation_sequence, condense, sylvester_check};
use tpkit::corpus::random_sylvester_instance;
use tpkit::determinant::{determinant, minor};
use tpkit::hankel::{hankel_from_sequence, is_tp_hankel, moment_spec, HankelSpec};
use tpkit::io::{matrix_to_csv, matrix_to_json, params_to_json, parse_matrix, parse_params, Format};
use tpkit::matrix::{ExactMatrix, IndexSet};
use tpkit::netfact::{
    assemble, build_s_matrix, displayed_minors, factorize, generate_tp, lindstrom_minor, random_tn_params,
    random_tp_params, FactorizationParams, PlanarNetwork, SMatrixParams, TopWeights,
};
use tpkit::positivity::{is_tn_k, is_tp_k, permutations, Property};
use tpkit::rational::{pow, Rational};
use tpkit::rng::SplitMix64;

fn set(v: &[usize], n: usize) -> IndexSet {
    IndexSet::new(v.to_vec(), n).unwrap()
}

/// Leibniz formula, used for small orders as a second oracle.
fn permutation_sum(a: &ExactMatrix) -> Rational {
    let n = a.rows();
    permutations(n)
        .iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term = (0..n).fold(r(1), |acc, i| acc * a.get(i + 1, p[i] + 1));
            if inversions % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .fold(r(0), |acc, t| acc + t)
}

fn square_pair(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
    (lo..=hi).prop_flat_map(move |n| {
        let m = prop::collection::vec(prop::collection::vec(-bound..=bound, n), n).prop_map(matrix);
        (m.clone(), m)
    })
}

fn reversal(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| if i + j == n + 1 { r(1) } else { r(0) }).unwrap()
}

fn alternating(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| if i != j { r(0) } else if i % 2 == 1 { r(1) } else { r(-1) }).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn determinant_matches_cofactor_expansion(a in int_square(1, 6, 9)) {
        prop_assert_eq!(determinant(&a).unwrap(), oracle_det(&a));
    }

    #[test]
    fn determinant_of_rational_matrices(
        (n, vals) in (1usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec((-9i64..=9, 1i64..=7), n * n)))
    ) {
        let a = ExactMatrix::new(n, n, vals.into_iter().map(|(p, d)| q(p, d)).collect()).unwrap();
        prop_assert_eq!(determinant(&a).unwrap(), cofactor_det(&rows_of(&a)));
        prop_assert_eq!(determinant(&a).unwrap(), permutation_sum(&a));
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in square_pair(1, 5, 6)) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(determinant(&ab).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn minors_match_permutation_sum(a in int_rect(1, 4, 9), seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let k = rng.range_usize(1, a.rows().min(a.cols()));
        let rs = rng.subset(a.rows(), k);
        let cs = rng.subset(a.cols(), k);
        let sub = a.submatrix(&set(&rs, a.rows()), &set(&cs, a.cols())).unwrap();
        let m = minor(&a, &set(&rs, a.rows()), &set(&cs, a.cols())).unwrap();
        prop_assert_eq!(&m, &permutation_sum(&sub));
        prop_assert_eq!(&m, &determinant(&sub).unwrap());
        let t = a.transpose();
        prop_assert_eq!(minor(&t, &set(&cs, a.cols()), &set(&rs, a.rows())).unwrap(), m);
    }

    #[test]
    fn compound_entries_are_minors(a in int_rect(1, 6, 5), k in 1usize..=3) {
        prop_assume!(k <= a.rows().min(a.cols()));
        let c = compound(&a, k).unwrap();
        let row_sets = subsets(a.rows(), k);
        let col_sets = subsets(a.cols(), k);
        prop_assert_eq!((c.rows(), c.cols()), (row_sets.len(), col_sets.len()));
        for (i, rs) in row_sets.iter().enumerate() {
            for (j, cs) in col_sets.iter().enumerate() {
                prop_assert_eq!(c.get(i + 1, j + 1), &oracle_minor(&a, rs, cs));
            }
        }
    }

    #[test]
    fn compound_is_multiplicative((a, b) in square_pair(1, 5, 4), k in 1usize..=5) {
        prop_assume!(k <= a.rows());
        let lhs = compound(&a.checked_mul(&b).unwrap(), k).unwrap();
        let rhs = compound(&a, k).unwrap().checked_mul(&compound(&b, k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversed_transposed_compound_is_the_signed_adjugate(a in int_square(2, 5, 9)) {
        let n = a.rows();
        let det = determinant(&a).unwrap();
        let (rev, s) = (reversal(n), alternating(n));
        let c = compound(&a, n - 1).unwrap();
        let adj_like = rev.checked_mul(&c.transpose()).unwrap().checked_mul(&rev).unwrap();
        let sas = s.checked_mul(&a).unwrap().checked_mul(&s).unwrap();
        let id = ExactMatrix::identity(n).unwrap();
        prop_assert_eq!(adj_like.checked_mul(&sas).unwrap(), id.scale(&det));
    }

    #[test]
    fn condensation_entries_are_contiguous_minors(a in int_square(2, 6, 4)) {
        let n = a.rows();
        let seq = condensation_sequence(&a).unwrap();
        for k in 1..n {
            let d = seq.stage(k);
            prop_assert_eq!((d.rows(), d.cols()), (n - k, n - k));
            let c = compound(&a, k + 1).unwrap();
            for i in 1..=n - k {
                for j in 1..=n - k {
                    let want = oracle_contiguous(&a, i, j, k + 1);
                    prop_assert_eq!(d.get(i, j), &want);
                    let rs: Vec<usize> = (i..=i + k).collect();
                    let cs: Vec<usize> = (j..=j + k).collect();
                    prop_assert_eq!(c.get(lex_rank(&rs, n), lex_rank(&cs, n)), &want);
                }
            }
        }
        prop_assert_eq!(seq.determinant(), &oracle_det(&a));
    }

    #[test]
    fn condensation_satisfies_the_two_by_two_rule(a in int_square(3, 6, 5)) {
        let n = a.rows();
        let stage = |k: usize| if k == 0 { a.clone() } else { condense(&a, k).unwrap() };
        for k in 1..n - 1 {
            let (prev, cur, next) = (stage(k - 1), stage(k), stage(k + 1));
            for i in 1..n - k {
                for j in 1..n - k {
                    let lhs = cur.get(i, j) * cur.get(i + 1, j + 1) - cur.get(i, j + 1) * cur.get(i + 1, j);
                    prop_assert_eq!(lhs, next.get(i, j) * prev.get(i + 1, j + 1));
                }
            }
        }
    }

    #[test]
    fn sylvester_identity_holds(n in 3usize..=6, seed in any::<u64>()) {
        let inst = random_sylvester_instance(n, seed).unwrap();
        prop_assert!(sylvester_check(&inst.a, &inst.alpha, &inst.delta, &inst.gamma).unwrap().holds);
    }

    #[test]
    fn tp_orders_are_monotone(a in int_square(1, 5, 9)) {
        let n = a.rows();
        let holds: Vec<bool> = (1..=n).map(|k| is_tp_k(&a, k).unwrap().holds).collect();
        for k in 1..n {
            prop_assert!(!holds[k] || holds[k - 1]);
        }
    }

    #[test]
    fn tn_witnesses_reproduce(a in int_square(1, 5, 3), k in 1usize..=5) {
        prop_assume!(k <= a.rows());
        let v = is_tn_k(&a, k).unwrap();
        prop_assert_eq!(v.property.clone(), Property::Tn);
        prop_assert_eq!(v.holds, brute_tn(&a, k));
        if let Some(w) = &v.witness {
            prop_assert!(!v.holds);
            prop_assert!(w.value.is_negative());
            prop_assert_eq!(&w.value, &oracle_minor(&a, w.rows.indices(), w.cols.indices()));
            prop_assert!(v.witness_reproduces(&a));
        }
    }

    #[test]
    fn compounds_of_symmetric_matrices_are_symmetric(a in int_square(1, 5, 9), k in 1usize..=5) {
        prop_assume!(k <= a.rows());
        let sym = a.checked_add(&a.transpose()).unwrap();
        prop_assert!(compound(&sym, k).unwrap().is_symmetric());
    }

    #[test]
    fn factorization_round_trips(n in 1usize..=6, seed in any::<u64>(), tn in any::<bool>()) {
        let params = if tn { random_tn_params(n, seed, 9) } else { random_tp_params(n, seed, 9) };
        let a = assemble(&params).unwrap();
        let f = factorize(&a).unwrap();
        prop_assert_eq!(assemble(&f).unwrap(), a);
        // zero parameters can be traded between factors, so only TP inputs pin them down
        if !tn {
            prop_assert_eq!(f, params);
        }
    }

    #[test]
    fn path_sums_equal_minors(n in 1usize..=5, seed in any::<u64>()) {
        let params = random_tn_params(n, seed, 9);
        let a = assemble(&params).unwrap();
        let net = PlanarNetwork::from_params(&params).unwrap();
        let mut rng = SplitMix64::new(seed ^ 0x5eed);
        let k = rng.range_usize(1, n.min(3));
        let rs = rng.subset(n, k);
        let cs = rng.subset(n, k);
        prop_assert_eq!(lindstrom_minor(&net, &set(&rs, n), &set(&cs, n)).unwrap(), oracle_minor(&a, &rs, &cs));
    }

    #[test]
    fn matrix_json_round_trips(a in int_rect(1, 5, 99), d in 1i64..=12) {
        let a = a.scale(&q(1, d));
        let json = matrix_to_json(&a);
        let back = parse_matrix(&json, Some(Format::Json)).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(matrix_to_json(&back), json);
        prop_assert_eq!(parse_matrix(&matrix_to_csv(&a), Some(Format::Csv)).unwrap(), a);
    }

    #[test]
    fn params_json_round_trips(n in 1usize..=5, seed in any::<u64>()) {
        let p = random_tn_params(n, seed, 9);
        let text = params_to_json(&p);
        prop_assert_eq!(parse_params(&text).unwrap(), p);
    }
}

#[test]
fn unreversed_compound_is_not_the_adjugate() {
    let a = matrix(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 4, 5]]);
    let det = determinant(&a).unwrap();
    let s = alternating(3);
    let sas = s.checked_mul(&a).unwrap().checked_mul(&s).unwrap();
    let c = compound(&a, 2).unwrap();
    let id = ExactMatrix::identity(3).unwrap().scale(&det);
    assert_ne!(c.checked_mul(&sas).unwrap(), id);
    let rev = reversal(3);
    let fixed = rev.checked_mul(&c.transpose()).unwrap().checked_mul(&rev).unwrap();
    assert_eq!(fixed.checked_mul(&sas).unwrap(), id);
}

#[test]
fn fekete_agrees_with_all_minors() {
    let mut rng = SplitMix64::new(2024);
    let mut tp_seen = 0;
    for t in 0..500u64 {
        let n = 1 + (t % 5) as usize;
        let a = match t % 4 {
            // generated TP matrices, and small perturbations of them
            0 | 1 => {
                let mut a = generate_tp(n, t, 4).unwrap().0;
                if t % 4 == 1 {
                    let (i, j) = (rng.range_usize(1, n), rng.range_usize(1, n));
                    let bumped = a.get(i, j) * q(rng.range_i64(1, 12), 6);
                    a.set(i, j, bumped);
                }
                a
            }
            2 => ExactMatrix::from_fn(n, n, |i, j| r(rng.range_i64(1, 9)) + r(((i * j) as i64).pow(2))).unwrap(),
            _ => ExactMatrix::from_fn(n, n, |_, _| r(rng.range_i64(1, 9))).unwrap(),
        };
        for k in 1..=n {
            let v = is_tp_k(&a, k).unwrap();
            assert_eq!(v.holds, brute_tp(&a, k), "trial {t}, k={k}");
            if let Some(w) = &v.witness {
                assert!(!w.value.is_positive());
                assert!(v.witness_reproduces(&a));
            }
        }
        tp_seen += brute_tp(&a, n) as usize;
    }
    assert!(tp_seen > 100, "corpus has too few TP matrices: {tp_seen}");
}

#[test]
fn hankel_criterion_agrees_with_all_minors() {
    let mut agree_tp = 0;
    for seed in 0..200u64 {
        let mut rng = SplitMix64::new(seed);
        let order = 1 + (seed % 5) as usize;
        let spec = match seed % 3 {
            0 => moment_spec(order, seed, 9).unwrap(),
            1 => {
                // moments with one term nudged
                let mut s = moment_spec(order, seed, 9).unwrap().sequence;
                let idx = rng.range_usize(0, s.len() - 1);
                s[idx] = &s[idx] * q(rng.range_i64(1, 16), 8);
                HankelSpec::new(s).unwrap()
            }
            _ => HankelSpec::new((0..2 * order - 1).map(|_| r(rng.range_i64(1, 30))).collect()).unwrap(),
        };
        let a = hankel_from_sequence(&spec).unwrap();
        assert_eq!(a.rows(), order);
        let brute = brute_tp(&a, order);
        assert_eq!(is_tp_hankel(&a).unwrap().holds, brute, "seed {seed}");
        agree_tp += brute as usize;
    }
    assert!(agree_tp > 50 && agree_tp < 200, "corpus is not mixed: {agree_tp} TP");
}

#[test]
fn positive_parameters_give_tp_and_single_zeros_break_it() {
    for seed in 0..10 {
        let p = random_tp_params(4, seed, 9);
        let a = assemble(&p).unwrap();
        assert!(is_tp_k(&a, 4).unwrap().holds);
        let lowers = p.lower_values();
        let uppers = p.upper_values();
        for idx in 0..12 {
            let (mut l, mut u) = (lowers.clone(), uppers.clone());
            if idx < 6 {
                l[idx] = r(0);
            } else {
                u[idx - 6] = r(0);
            }
            let zeroed = FactorizationParams::new(4, l, u, p.diag.clone()).unwrap();
            let b = assemble(&zeroed).unwrap();
            assert!(is_tn_k(&b, 4).unwrap().holds);
            let v = is_tp_k(&b, 4).unwrap();
            assert!(!v.holds, "seed {seed}, zeroed parameter {idx}");
            assert!(v.witness.unwrap().value.is_zero());
        }
    }
}

#[test]
fn lindstrom_exhaustive_at_order_four() {
    for seed in 0..4 {
        let p = if seed % 2 == 0 { random_tp_params(4, seed, 9) } else { random_tn_params(4, seed, 9) };
        let a = assemble(&p).unwrap();
        let net = PlanarNetwork::from_params(&p).unwrap();
        for k in 1..=4 {
            for rs in subsets(4, k) {
                for cs in subsets(4, k) {
                    assert_eq!(lindstrom_minor(&net, &set(&rs, 4), &set(&cs, 4)).unwrap(), oracle_minor(&a, &rs, &cs));
                }
            }
        }
    }
}

#[test]
fn s_matrix_minors_depend_only_on_top_weights() {
    let mut rng = SplitMix64::new(77);
    for n in [5usize, 6] {
        for _ in 0..4 {
            let top = TopWeights::random(&mut rng, 9);
            let values: Vec<Vec<Rational>> = (0..5u64)
                .map(|fill| {
                    let p = SMatrixParams::with_random_fill(n, top.clone(), 100 + fill, 9).unwrap();
                    let mut base = p.network_params();
                    base.diag = vec![r(1); n];
                    let (s, _) = build_s_matrix(&SMatrixParams::new(top.clone(), base).unwrap()).unwrap();
                    displayed_minors(&top).iter().map(|m| minor(&s, &m.row_set(), &m.col_set()).unwrap()).collect()
                })
                .collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]), "n={n}");
            let expected: Vec<Rational> = displayed_minors(&top).into_iter().map(|m| m.value).collect();
            assert_eq!(values[0], expected);
        }
    }
}

#[test]
fn s_matrix_signs_survive_positive_diagonals() {
    let mut rng = SplitMix64::new(78);
    for n in 4..=6usize {
        for t in 0..8u64 {
            let top = TopWeights::random(&mut rng, 9);
            let p = SMatrixParams::with_random_fill(n, top.clone(), 200 + t, 9).unwrap();
            let (s, _) = build_s_matrix(&p).unwrap();
            for m in displayed_minors(&top) {
                let v = minor(&s, &m.row_set(), &m.col_set()).unwrap();
                assert!(m.has_expected_sign(&v), "n={n} t={t} {}", m.formula);
            }
        }
    }
}

#[test]
fn geometric_matrices_meet_the_ratio_condition() {
    // a_{ij} = q^{ij} has every adjacent 2x2 ratio equal to q
    let ratio = q(5, 2);
    let a = ExactMatrix::from_fn(4, 4, |i, j| pow(&ratio, (i * j) as u32)).unwrap();
    for i in 1..4 {
        for j in 1..4 {
            let rr = a.get(i, j) * a.get(i + 1, j + 1) / (a.get(i, j + 1) * a.get(i + 1, j));
            assert_eq!(rr, ratio);
        }
    }
}
