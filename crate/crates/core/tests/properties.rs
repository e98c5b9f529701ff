use proptest::prelude::*;

use kimmerse::cmc::brute_force_chi_prime_r;
use kimmerse::factor::{brute_force_deficiency, deficiency, max_f_bounded_subgraph};
use kimmerse::generators::{gen_alpha2, gen_random_multigraph, gen_region_instance};
use kimmerse::immersion::{audit_colouring, chi_alpha2, refine_split};
use kimmerse::oracles::{brute_alpha, brute_chi};
use kimmerse::{construct_immersion, critical_colouring, validate_decorated, verify_immersion, Multigraph};

fn multigraph(n_max: usize, mult: usize) -> impl Strategy<Value = Multigraph> {
    (1..=n_max, 0.0..1.0f64, any::<u64>()).prop_map(move |(n, d, seed)| gen_random_multigraph(n, d, mult, seed))
}

fn alpha2(n_max: usize) -> impl Strategy<Value = Multigraph> {
    (1..=n_max, 0.0..1.0f64, any::<u64>()).prop_map(|(n, d, seed)| gen_alpha2(n, d, seed))
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in multigraph(15, 3)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn doubling_doubles_degrees(g in multigraph(12, 2)) {
        let d = g.doubled();
        prop_assert_eq!(d.graph.m(), 2 * g.m());
        for v in 0..g.n() {
            prop_assert_eq!(d.graph.degree(v), 2 * g.degree(v));
        }
    }

    #[test]
    fn complement_is_an_involution(g in multigraph(12, 1)) {
        prop_assert_eq!(g.complement().unwrap().complement().unwrap(), g);
    }

    #[test]
    fn independent_triple_detection(g in multigraph(10, 1)) {
        prop_assert_eq!(g.alpha_at_most_2(), brute_alpha(&g).unwrap() <= 2);
    }

    #[test]
    fn deficiency_bounds_every_two_bounded_subgraph(
        g in multigraph(8, 2),
        roles in proptest::collection::vec(0u8..3, 8),
    ) {
        let h = g.doubled().graph;
        let n = h.n();
        let s: Vec<usize> = (0..n).filter(|&x| roles[x] == 1).collect();
        let t: Vec<usize> = (0..n).filter(|&x| roles[x] == 2).collect();
        let (sub, pair) = max_f_bounded_subgraph(&h).unwrap();
        let f = vec![2; n];
        let covered = sub.degree_sum() as i64;
        prop_assert!(covered <= 2 * n as i64 - deficiency(&h, &f, &s, &t).unwrap());
        prop_assert_eq!(covered, 2 * n as i64 - pair.value);
        prop_assert_eq!(pair.value, brute_force_deficiency(&h, &f).unwrap().value);
    }

    #[test]
    fn chi_prime_r_is_monotone(g in multigraph(6, 2).prop_filter("m ≤ 9", |g| g.m() <= 9)) {
        let values: Vec<usize> = (1..=3).map(|r| brute_force_chi_prime_r(&g, r).unwrap()).collect();
        for r in 1..=3 {
            prop_assert!(values[r - 1] >= g.max_degree().div_ceil(r));
        }
        prop_assert!(values[0] >= values[1] && values[1] >= values[2]);
    }

    #[test]
    fn chi_matches_brute_force(g in alpha2(12)) {
        prop_assert_eq!(chi_alpha2(&g).unwrap().0, brute_chi(&g).unwrap());
    }

    #[test]
    fn immersions_have_at_least_half_the_vertices(g in alpha2(24)) {
        let imm = construct_immersion(&g).unwrap();
        prop_assert!(imm.t() >= g.n().div_ceil(2));
        prop_assert!(verify_immersion(&g, &imm, imm.t()).accepted);
    }

    #[test]
    fn decorated_colouring_round_trips(n in 1usize..=14, d in 0.1..0.9f64, seed in any::<u64>()) {
        let (g, regions) = gen_region_instance(n, d, seed);
        let dec = critical_colouring(&g, &regions).unwrap();
        let report = validate_decorated(&g, &regions, &dec);
        prop_assert!(report.valid, "{:?}", report.failures);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn refined_colourings_pass_structural_audits(g in alpha2(30)) {
        let (_, col) = chi_alpha2(&g).unwrap();
        let col = refine_split(&g, &col).unwrap();
        let failures = audit_colouring(&g, &col);
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }
}

#[test]
fn single_vertex_deficiency() {
    let g = Multigraph::empty(1);
    let pair = brute_force_deficiency(&g, &[2]).unwrap();
    assert_eq!((pair.s, pair.t, pair.value), (vec![], vec![0], 2));
    let pair = brute_force_deficiency(&g, &[0]).unwrap();
    assert_eq!((pair.s, pair.t, pair.value), (vec![], vec![], 0));
}

#[test]
fn marking_survives_a_greedy_dead_end() {
    let (g, regions) = gen_region_instance(12, 0.25, 40_035);
    let dec = critical_colouring(&g, &regions).unwrap();
    let report = validate_decorated(&g, &regions, &dec);
    assert!(report.valid, "{:?}", report.failures);
}
