//! Acceptance suite. Prints one PASS/FAIL line per check and exits
//! non-zero if any check fails.
//!
//! Set `ACCEPTANCE_SKIP_N7=1` to skip the 2^21-colouring runs.

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zerosum::decompositions::{hamilton_cycle_decomposition, hamilton_path_decomposition, Decomposition};
use zerosum::extremal::{make_extremal_graph, verify_extremal, ConstructionId, TuranVariant};
use zerosum::families::{interpolate, FamilyKind};
use zerosum::oracle::{
    count_family, enumerate_perfect_matchings, exhaustive_theorem_check, zero_sum_short_path,
    EnumerationBudget, TheoremId,
};
use zerosum::sample::{random_coloring, random_diam3_tree, random_hamiltonian_path, random_spanning_tree};
use zerosum::thresholds::{
    ex_forest, ex_linear_forest, ex_star, forest_bound_degenerate, forest_bound_planar,
    forest_bound_triangle_free, spanning_path_threshold,
};
use zerosum::{ColoredGraph, EdgeSubgraph, Sign};

struct Suite {
    failed: Vec<String>,
    passed: usize,
    unattainable: usize,
}

impl Suite {
    fn check(&mut self, criterion: u32, name: &str, ok: bool, detail: impl AsRef<str>) {
        let status = if ok { "PASS" } else { "FAIL" };
        println!("[{status}] criterion {criterion}: {name} ({})", detail.as_ref());
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(format!("criterion {criterion}: {name}"));
        }
    }

    /// A check that cannot pass because the claim itself is false. It is
    /// reported as FAIL; only an unexpected pass fails the run.
    fn unattainable(&mut self, criterion: u32, name: &str, ok: bool, detail: impl AsRef<str>) {
        if ok {
            self.check(criterion, name, false, "expected to be unattainable but passed");
        } else {
            println!("[FAIL] criterion {criterion}: {name} (unattainable: {})", detail.as_ref());
            self.unattainable += 1;
        }
    }
}

fn formulas(s: &mut Suite) {
    let t = Instant::now();
    let cases: [(&str, usize, usize); 16] = [
        ("ex_linear_forest(10,5)", ex_linear_forest(10, 5).unwrap(), 17),
        ("ex_linear_forest(10,4)", ex_linear_forest(10, 4).unwrap(), 10),
        // listed as 12 from "15 - 3"; C(4,2) = 6, so the formula gives max{10, 9}
        ("ex_linear_forest(6,5)", ex_linear_forest(6, 5).unwrap(), 10),
        ("ex_forest(10,4)", ex_forest(10, 4).unwrap(), 6),
        ("ex_forest(10,1)", ex_forest(10, 1).unwrap(), 0),
        ("ex_forest(7,7)", ex_forest(7, 7).unwrap(), 21),
        ("ex_star(7,3)", ex_star(7, 3).unwrap(), 7),
        ("ex_star(5,1)", ex_star(5, 1).unwrap(), 0),
        ("ex_star(9,4)", ex_star(9, 4).unwrap(), 13),
        ("forest_bound_triangle_free(4)", forest_bound_triangle_free(4).unwrap(), 4),
        ("forest_bound_degenerate(5,2)", forest_bound_degenerate(5, 2).unwrap(), 7),
        ("forest_bound_planar(5)", forest_bound_planar(5).unwrap(), 10),
        ("spanning_path_threshold(10)", spanning_path_threshold(10).unwrap(), 10),
        ("spanning_path_threshold(7)", spanning_path_threshold(7).unwrap(), 6),
        ("ex_forest(3,4) refused", ex_forest(3, 4).is_err() as usize, 1),
        ("forest_bound_planar(2) refused", forest_bound_planar(2).is_err() as usize, 1),
    ];
    let wrong: Vec<String> = cases
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name} = {got}, expected {want}"))
        .collect();
    s.check(1, "worked formula values", wrong.is_empty(), if wrong.is_empty() {
        format!("{} values exact", cases.len())
    } else {
        wrong.join("; ")
    });
    let mismatch: Vec<usize> = (3..=50)
        .filter(|&n| spanning_path_threshold(n).unwrap() != ex_linear_forest(n, (n - 1) / 2).unwrap())
        .collect();
    s.check(
        1,
        "spanning_path_threshold(n) = ex_linear_forest(n, floor((n-1)/2)), 3 <= n <= 50",
        mismatch.is_empty(),
        format!("mismatches {mismatch:?}, {:.2?}", t.elapsed()),
    );
}

fn qualifying_pair<'g, R: Rng>(
    rng: &mut R,
    g: &'g ColoredGraph,
    kind: FamilyKind,
) -> Option<(EdgeSubgraph<'g>, EdgeSubgraph<'g>)> {
    let mut lo = None;
    let mut hi = None;
    for _ in 0..200 {
        let h = match kind {
            FamilyKind::SpanningTrees => random_spanning_tree(rng, g)?,
            FamilyKind::HamiltonianPaths => random_hamiltonian_path(rng, g),
            FamilyKind::Diam3Trees => random_diam3_tree(rng, g),
        };
        if h.weight() <= 0 && lo.is_none() {
            lo = Some(h);
        } else if h.weight() >= 0 && hi.is_none() {
            hi = Some(h);
        }
        if lo.is_some() && hi.is_some() {
            return lo.zip(hi);
        }
    }
    None
}

fn interpolation(s: &mut Suite) {
    const TRIALS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x2e50);
    for kind in FamilyKind::ALL {
        let t = Instant::now();
        let mut problems = Vec::new();
        let mut done = 0;
        let mut longest = 0;
        while done < TRIALS {
            let n = 5 + done % 5;
            let p = rng.gen_range(0.2..0.8);
            let g = random_coloring(&mut rng, n, p);
            let Some((lo, hi)) = qualifying_pair(&mut rng, &g, kind) else {
                continue;
            };
            done += 1;
            let chain = kind.exchange_chain(&lo, &hi).unwrap();
            let limit = match kind {
                FamilyKind::SpanningTrees => n - 1,
                FamilyKind::HamiltonianPaths => 2 * (n - 1),
                FamilyKind::Diam3Trees => 2 * (n - 2),
            };
            longest = longest.max(chain.replacements());
            if let Err(e) = chain.validate(kind) {
                problems.push(format!("n={n}: invalid chain: {e}"));
            }
            if chain.start() != &lo || chain.last() != hi {
                problems.push(format!("n={n}: chain endpoints differ"));
            }
            if chain.replacements() > limit {
                problems.push(format!("n={n}: {} replacements > {limit}", chain.replacements()));
            }
            match interpolate(kind, &lo, &hi) {
                Ok(r) => {
                    let w = r.member.weight();
                    if w.abs() > 1 || (w - (n as i64 - 1)).rem_euclid(2) != 0 || !kind.contains(&r.member) {
                        problems.push(format!("n={n}: interpolation returned weight {w}"));
                    }
                }
                Err(e) => problems.push(format!("n={n}: {e}")),
            }
        }
        s.check(
            2,
            &format!("interpolation over {kind}"),
            problems.is_empty(),
            format!(
                "{TRIALS} random pairs, n = 5..9, longest chain {longest}, {} problems{}, {:.1?}",
                problems.len(),
                problems.first().map(|p| format!(" (first: {p})")).unwrap_or_default(),
                t.elapsed()
            ),
        );
    }
}

fn exhaustive(s: &mut Suite) {
    let budget = EnumerationBudget::extended();
    let skip7 = std::env::var_os("ACCEPTANCE_SKIP_N7").is_some();
    let runs: &[(TheoremId, &[usize])] = &[
        (TheoremId::SpanningTree, &[5, 6, 7]),
        (TheoremId::Connectivity, &[6, 7]),
        (TheoremId::Diam3, &[6, 7]),
        (TheoremId::SpanningPathCensus, &[6, 7]),
        (TheoremId::SpanningPathDecomposition, &[6, 7]),
    ];
    for &(theorem, sizes) in runs {
        for &n in sizes {
            if n == 7 && skip7 {
                s.check(3, &format!("{theorem} n={n}"), false, "skipped by ACCEPTANCE_SKIP_N7");
                continue;
            }
            let t = Instant::now();
            match exhaustive_theorem_check(theorem, n, None, &budget) {
                Ok(r) => s.check(
                    3,
                    &format!("theorem `{theorem}` exhaustively at n={n}"),
                    r.passed() && r.oracle_checked && r.colorings == 1 << r.host_edges,
                    format!(
                        "{} colourings, {} meet the hypothesis, {} counterexamples{}, {:.1?}",
                        r.colorings,
                        r.hypothesis_met,
                        r.counterexamples,
                        r.examples.first().map(|c| format!(" (first: {})", c.reason)).unwrap_or_default(),
                        t.elapsed()
                    ),
                ),
                Err(e) => s.check(3, &format!("theorem `{theorem}` n={n}"), false, e.to_string()),
            }
        }
    }
    // host-class versions on their smallest interesting hosts
    for (theorem, n) in [
        (TheoremId::BipartiteTree, 8),
        (TheoremId::DegenerateTree(2), 8),
        (TheoremId::PlanarTree, 8),
    ] {
        let t = Instant::now();
        match exhaustive_theorem_check(theorem, n, None, &budget) {
            Ok(r) => s.check(
                3,
                &format!("theorem `{theorem}` exhaustively at n={n}"),
                r.passed() && r.oracle_checked,
                format!(
                    "{} colourings, {} meet the hypothesis, {} counterexamples, {:.1?}",
                    r.colorings,
                    r.hypothesis_met,
                    r.counterexamples,
                    t.elapsed()
                ),
            ),
            Err(e) => s.check(3, &format!("theorem `{theorem}` n={n}"), false, e.to_string()),
        }
    }
}

fn sharpness(s: &mut Suite) {
    use ConstructionId::*;
    let budget = EnumerationBudget::extended();
    let holds = [
        TuranLinearForest(10, 5, TuranVariant::JoinPlusEdge),
        TuranLinearForest(10, 4, TuranVariant::JoinPlusEdge),
        TuranLinearForest(8, 5, TuranVariant::CliquePlusIsolated),
        ForestExtremal(10, 4),
        StarExtremalCirculant(7, 3),
        StarExtremalCirculant(9, 4),
        TreeSharpness(7),
        PathSharpness(7),
        BipartiteSharpness(9),
        BipartiteSharpness(11),
        DTreeSharpness(8, 2),
        PlanarSharpness(9),
        ConnectivitySmall(4),
        ConnectivitySmall(5),
        ConnectivityMatching(6),
        ConnectivityMatching(7),
        ConnectivityMatching(8),
        ConnectivityMatching(9),
        NoLength2(7),
        NoZeroSumStar(21),
        MatchingK4n(1),
        MatchingK4n(2),
    ];
    for id in holds {
        let t = Instant::now();
        let g = make_extremal_graph(id).unwrap();
        let c = g.census();
        let verdict = verify_extremal(id, &budget);
        s.check(
            4,
            &id.to_string(),
            matches!(verdict, Ok(true)),
            format!(
                "e(-1) = {}, e(1) = {}, verified: {verdict:?}, {:.1?}",
                c.e_minus,
                c.e_plus,
                t.elapsed()
            ),
        );
    }

    let g = make_extremal_graph(MatchingK4n(2)).unwrap();
    let c = g.census();
    let total = enumerate_perfect_matchings(&g, &budget).map(|m| m.len()).unwrap_or(0);
    s.check(
        4,
        "matching-k4n 2 counts",
        (c.e_plus, c.e_minus, total) == (63, 57, 2_027_025),
        format!("e(1) = {}, e(-1) = {}, perfect matchings = {total}", c.e_plus, c.e_minus),
    );

    // the 4n-vertex construction, smaller than the even orders listed for it,
    // does not work: an (n-1)-edge -1 forest from H yields weight 1
    for order in [8, 10] {
        let id = BipartiteSharpness(order);
        let verdict = verify_extremal(id, &budget);
        s.unattainable(
            4,
            &format!("{id} (even order)"),
            matches!(verdict, Ok(true)),
            format!(
                "verified: {verdict:?}; at order 2n a spanning tree has 2n-1 edges, and n-1 \
                 forest edges of H coloured -1 give weight 1, so the colouring admits an \
                 almost zero-sum tree and is not a sharpness witness"
            ),
        );
    }

    let g = make_extremal_graph(ConnectivityMatching(6)).unwrap();
    let blocked = zero_sum_short_path(&g, 0, 1).is_none();
    s.check(
        4,
        "connectivity-matching 6 fails the conclusion one below the bound",
        blocked && g.census().min() + 1 == 4,
        format!("min census {}, pair 0 1 blocked: {blocked}", g.census().min()),
    );
}

fn check_decomposition(d: &Decomposition) -> Result<(), String> {
    let n = d.n;
    let g = ColoredGraph::complete(n, |_| Sign::Plus);
    let parts = d.edge_parts(&g).map_err(|e| e.to_string())?;
    let mut seen = vec![0u32; g.edge_count()];
    for (i, p) in parts.iter().enumerate() {
        for &id in p.edge_ids() {
            seen[id] += 1;
        }
        let is_path = n % 2 == 0;
        if is_path && !p.is_hamiltonian_path() {
            return Err(format!("part {i} is not a Hamiltonian path"));
        }
        if !is_path {
            if !p.is_hamiltonian_cycle() {
                return Err(format!("part {i} is not a Hamiltonian cycle"));
            }
            for &id in p.edge_ids() {
                let rest = p.edge_ids().iter().copied().filter(|&x| x != id);
                if !g.subgraph(rest).unwrap().is_hamiltonian_path() {
                    return Err(format!("part {i} minus edge {id} is not a Hamiltonian path"));
                }
            }
        }
    }
    if let Some(id) = seen.iter().position(|&c| c != 1) {
        return Err(format!("edge {} covered {} times", g.edge(id), seen[id]));
    }
    Ok(())
}

fn decompositions(s: &mut Suite) {
    let t = Instant::now();
    let mut errors = Vec::new();
    for n in (2..=14).step_by(2) {
        if let Err(e) = check_decomposition(&hamilton_path_decomposition(n).unwrap()) {
            errors.push(format!("paths n={n}: {e}"));
        }
    }
    s.check(5, "Hamiltonian path decompositions, even n <= 14", errors.is_empty(), format!("{errors:?} {:.1?}", t.elapsed()));
    let t = Instant::now();
    let mut errors = Vec::new();
    for n in (3..=15).step_by(2) {
        if let Err(e) = check_decomposition(&hamilton_cycle_decomposition(n).unwrap()) {
            errors.push(format!("cycles n={n}: {e}"));
        }
    }
    s.check(5, "Hamiltonian cycle decompositions, odd n <= 15", errors.is_empty(), format!("{errors:?} {:.1?}", t.elapsed()));
}

fn oracle_counts(s: &mut Suite) {
    let budget = EnumerationBudget::extended();
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=8usize {
        let g = ColoredGraph::complete(n, |_| Sign::Plus);
        let trees = count_family(&g, FamilyKind::SpanningTrees, &budget).unwrap();
        if trees != (n as u128).pow(n.saturating_sub(2) as u32) {
            bad.push(format!("trees n={n}: {trees}"));
        }
        let paths = count_family(&g, FamilyKind::HamiltonianPaths, &budget).unwrap();
        let want = if n == 1 { 1 } else { (1..=n as u128).product::<u128>() / 2 };
        if paths != want {
            bad.push(format!("paths n={n}: {paths}"));
        }
    }
    s.check(6, "spanning trees n^(n-2) and Hamiltonian paths n!/2, n <= 8", bad.is_empty(), format!("{bad:?} {:.1?}", t.elapsed()));
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in (2..=16usize).step_by(2) {
        let g = ColoredGraph::complete(n, |_| Sign::Plus);
        let got = enumerate_perfect_matchings(&g, &budget).unwrap().len() as u128;
        let want: u128 = (1..n as u128).step_by(2).product();
        if got != want {
            bad.push(format!("n={n}: {got} != {want}"));
        }
    }
    s.check(6, "perfect matchings (n-1)!!, even n <= 16", bad.is_empty(), format!("{bad:?} {:.1?}", t.elapsed()));
}

fn main() {
    let mut s = Suite {
        failed: Vec::new(),
        passed: 0,
        unattainable: 0,
    };
    let filter: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let want = |c: u32| filter.is_empty() || filter.contains(&c);
    let t = Instant::now();
    if want(1) {
        formulas(&mut s);
    }
    if want(2) {
        interpolation(&mut s);
    }
    if want(3) {
        exhaustive(&mut s);
    }
    if want(4) {
        sharpness(&mut s);
    }
    if want(5) {
        decompositions(&mut s);
    }
    if want(6) {
        oracle_counts(&mut s);
    }
    println!(
        "acceptance: {} passed, {} failed, {} unattainable, {:.1?}",
        s.passed,
        s.failed.len(),
        s.unattainable,
        t.elapsed()
    );
    if !s.failed.is_empty() {
        for f in &s.failed {
            println!("  failed: {f}");
        }
        std::process::exit(1);
    }
}
