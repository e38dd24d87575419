use proptest::prelude::*;

use zerosum::decompositions::{hamilton_cycle_decomposition, hamilton_path_decomposition};
use zerosum::families::{interpolate, FamilyKind};
use zerosum::finders::{
    find_zero_sum_diam3_tree, find_zero_sum_path_leq4, find_zero_sum_spanning_path,
    find_zero_sum_spanning_tree,
};
use zerosum::io::{parse_edge_list, write_edge_list};
use zerosum::oracle::{family_masks, validate_report, zero_sum_short_path, EnumerationBudget, TheoremId};
use zerosum::sample::{random_diam3_tree, random_hamiltonian_path, random_spanning_tree};
use zerosum::thresholds::{binom2, master_verdict};
use zerosum::{ColoredGraph, EdgeSubgraph, HostClass, Sign};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn coloring(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), binom2(n)).prop_map(move |bits| {
            let mut i = 0;
            ColoredGraph::complete(n, |_| {
                i += 1;
                if bits[i - 1] { Sign::Minus } else { Sign::Plus }
            })
        })
    })
}

fn mask_of(h: &EdgeSubgraph<'_>) -> u64 {
    h.edge_ids().iter().fold(0, |m, &id| m | 1 << id)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn census_is_consistent(g in coloring(9)) {
        let c = g.census();
        prop_assert_eq!(c.e_minus + c.e_plus, g.edge_count());
        prop_assert_eq!(c.total_weight, c.e_plus as i64 - c.e_minus as i64);
        prop_assert_eq!(g.full().weight(), c.total_weight);
        let f = g.flipped().census();
        prop_assert_eq!((f.e_minus, f.e_plus), (c.e_plus, c.e_minus));
    }

    #[test]
    fn parity_law(g in coloring(9), pick in proptest::collection::vec(any::<bool>(), 36)) {
        let ids: Vec<usize> = (0..g.edge_count()).filter(|&i| pick[i % pick.len()]).collect();
        let h = g.subgraph(ids).unwrap();
        prop_assert_eq!((h.weight() - h.edge_count() as i64).rem_euclid(2), 0);
    }

    #[test]
    fn edge_list_round_trip(g in coloring(9)) {
        let text = write_edge_list(&g, &["round trip".to_string()]);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn interpolation_lands_on_balanced_member(g in coloring(9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = g.n();
        for kind in FamilyKind::ALL {
            let draw = |rng: &mut ChaCha8Rng| match kind {
                FamilyKind::SpanningTrees => random_spanning_tree(rng, &g).unwrap(),
                FamilyKind::HamiltonianPaths => random_hamiltonian_path(rng, &g),
                FamilyKind::Diam3Trees => random_diam3_tree(rng, &g),
            };
            let (a, b) = (draw(&mut rng), draw(&mut rng));
            let (lo, hi) = if a.weight() <= b.weight() { (a, b) } else { (b, a) };
            if lo.weight() > 0 || hi.weight() < 0 {
                prop_assert!(interpolate(kind, &lo, &hi).is_err());
                continue;
            }
            let chain = kind.exchange_chain(&lo, &hi).unwrap();
            chain.validate(kind).unwrap();
            let r = interpolate(kind, &lo, &hi).unwrap();
            prop_assert!(r.weight.abs() <= 1);
            prop_assert_eq!((r.weight - (n as i64 - 1)).rem_euclid(2), 0);
            prop_assert!(kind.contains(&r.member));
            let limit = match kind {
                FamilyKind::SpanningTrees => n - 1,
                FamilyKind::HamiltonianPaths => 2 * (n - 1),
                FamilyKind::Diam3Trees => 2 * (n - 2),
            };
            prop_assert!(chain.replacements() <= limit);
        }
    }

    #[test]
    fn tree_finder_meets_its_theorem(g in coloring(10)) {
        let r = find_zero_sum_spanning_tree(&g, HostClass::Complete);
        if TheoremId::SpanningTree.hypothesis(&g) {
            prop_assert!(validate_report(&g, &r, Some(FamilyKind::SpanningTrees)).is_ok(), "{}", r.certificate);
            prop_assert!(r.chain_replacements < g.n());
        }
        if r.found {
            validate_report(&g, &r, Some(FamilyKind::SpanningTrees)).unwrap();
        }
    }

    #[test]
    fn path_finder_meets_its_theorem(g in coloring(11)) {
        let r = find_zero_sum_spanning_path(&g);
        let census = TheoremId::SpanningPathCensus.hypothesis(&g);
        let decomposition = TheoremId::SpanningPathDecomposition.hypothesis(&g);
        if census || decomposition {
            prop_assert!(validate_report(&g, &r, Some(FamilyKind::HamiltonianPaths)).is_ok(), "{}", r.certificate);
            prop_assert!(r.chain_replacements <= 2 * (g.n() - 1));
        }
        if decomposition {
            prop_assert!(r.certificate.starts_with("decomposition route"));
        }
    }

    #[test]
    fn diam3_finder_meets_its_theorem(g in coloring(11)) {
        let r = find_zero_sum_diam3_tree(&g);
        if TheoremId::Diam3.hypothesis(&g) {
            prop_assert!(validate_report(&g, &r, Some(FamilyKind::Diam3Trees)).is_ok(), "{}", r.certificate);
            prop_assert!(r.chain_replacements <= 2 * (g.n() - 2));
        }
    }

    #[test]
    fn short_path_finder_agrees_with_brute_force(g in coloring(9), x in 0usize..9, y in 0usize..9) {
        let n = g.n();
        let (x, y) = (x % n, y % n);
        prop_assume!(x != y);
        let r = find_zero_sum_path_leq4(&g, x, y).unwrap();
        prop_assert_eq!(r.found, zero_sum_short_path(&g, x, y).is_some());
        if r.found {
            validate_report(&g, &r, None).unwrap();
            prop_assert!(r.edges.len() == 2 || r.edges.len() == 4);
        }
        if n >= 6 && TheoremId::Connectivity.hypothesis(&g) {
            prop_assert!(r.found);
        }
    }

    #[test]
    fn finder_output_is_an_oracle_member(g in coloring(7)) {
        let budget = EnumerationBudget::default();
        let n = g.n();
        for (kind, r) in [
            (FamilyKind::SpanningTrees, find_zero_sum_spanning_tree(&g, HostClass::Complete)),
            (FamilyKind::HamiltonianPaths, find_zero_sum_spanning_path(&g)),
            (FamilyKind::Diam3Trees, find_zero_sum_diam3_tree(&g)),
        ] {
            if r.found {
                let h = r.subgraph(&g).unwrap();
                prop_assert!(family_masks(n, kind, &budget).unwrap().contains(&mask_of(&h)));
            }
        }
    }

    #[test]
    fn one_coloured_hosts_fail_gracefully(n in 3usize..12, minus in any::<bool>()) {
        let s = if minus { Sign::Minus } else { Sign::Plus };
        let g = ColoredGraph::complete(n, |_| s);
        prop_assert!(!find_zero_sum_spanning_tree(&g, HostClass::Complete).found);
        prop_assert!(!find_zero_sum_diam3_tree(&g).found);
    }

    #[test]
    fn master_conditions_match_closed_forms(g in coloring(12)) {
        let n = g.n();
        let v = master_verdict(&g, FamilyKind::HamiltonianPaths).unwrap();
        let f = g.census().total_weight.unsigned_abs() as usize;
        // |f| < 3n/2 for even n, |f| < 3(n-1)/2 for odd n
        if n % 2 == 0 {
            prop_assert_eq!(v.condition2.unwrap().holds, 2 * f < 3 * n);
        } else {
            prop_assert_eq!(v.condition3.unwrap().holds, 2 * f < 3 * (n - 1));
        }
    }
}

#[test]
fn walecki_parts_are_disjoint_and_cover() {
    for n in 2..=24 {
        let d = if n % 2 == 0 {
            hamilton_path_decomposition(n).unwrap()
        } else {
            hamilton_cycle_decomposition(n).unwrap()
        };
        let g = ColoredGraph::complete(n, |_| Sign::Plus);
        let mut seen = vec![false; g.edge_count()];
        for p in d.edge_parts(&g).unwrap() {
            for &id in p.edge_ids() {
                assert!(!seen[id], "n={n}: edge {id} twice");
                seen[id] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "n={n}");
    }
}
