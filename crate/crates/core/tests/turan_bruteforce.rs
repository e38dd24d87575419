//! Turán numbers and forest bounds against every graph on at most 6 vertices.

use zerosum::oracle::has_monochromatic_forest;
use zerosum::thresholds::{
    binom2, ex_forest, ex_linear_forest, ex_star, forest_bound_degenerate,
    forest_bound_triangle_free,
};
use zerosum::{ColoredGraph, Sign};

/// Every graph on `n` vertices as the -1 class of a colouring of `K_n`.
fn all_graphs(n: usize) -> impl Iterator<Item = ColoredGraph> {
    (0..1u64 << binom2(n)).map(move |m| ColoredGraph::complete_from_minus_mask(n, m).unwrap())
}

fn edges(g: &ColoredGraph) -> usize {
    g.census().e_minus
}

fn has_triangle(g: &ColoredGraph) -> bool {
    let n = g.n();
    let minus = |a, b| g.sign_between(a, b) == Some(Sign::Minus);
    (0..n).any(|a| (a + 1..n).any(|b| minus(a, b) && (b + 1..n).any(|c| minus(a, c) && minus(b, c))))
}

fn degeneracy(g: &ColoredGraph) -> usize {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let deg = |v: usize, alive: &[bool]| {
            (0..n)
                .filter(|&w| w != v && alive[w] && g.sign_between(v, w) == Some(Sign::Minus))
                .count()
        };
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| deg(v, &alive)).unwrap();
        best = best.max(deg(v, &alive));
        alive[v] = false;
    }
    best
}

#[test]
fn linear_forest_turan_numbers() {
    for n in 2..=6 {
        let graphs: Vec<_> = all_graphs(n).collect();
        for k in 1..n {
            let brute = graphs
                .iter()
                .filter(|g| !has_monochromatic_forest(g, Sign::Minus, k, true))
                .map(edges)
                .max()
                .unwrap();
            assert_eq!(ex_linear_forest(n, k).unwrap(), brute, "n={n} k={k}");
        }
    }
}

#[test]
fn forest_and_star_turan_numbers() {
    for n in 2..=6 {
        let graphs: Vec<_> = all_graphs(n).collect();
        for k in 1..=n {
            let brute = graphs
                .iter()
                .filter(|g| !has_monochromatic_forest(g, Sign::Minus, k, false))
                .map(edges)
                .max()
                .unwrap();
            assert_eq!(ex_forest(n, k).unwrap(), brute, "forest n={n} k={k}");
            let brute = graphs
                .iter()
                .filter(|g| (0..n).all(|v| g.sign_degree(v, Sign::Minus) < k))
                .map(edges)
                .max()
                .unwrap();
            assert_eq!(ex_star(n, k).unwrap(), brute, "star n={n} k={k}");
        }
    }
}

#[test]
fn class_forest_bounds_force_forests() {
    let graphs: Vec<_> = all_graphs(6).collect();
    for g in &graphs {
        let e = edges(g);
        let triangle_free = !has_triangle(g);
        let d = degeneracy(g);
        for k in 1..=6 {
            if triangle_free && e > forest_bound_triangle_free(k).unwrap() {
                assert!(has_monochromatic_forest(g, Sign::Minus, k, false));
            }
            if d >= 1 && e > forest_bound_degenerate(k, d).unwrap() {
                assert!(has_monochromatic_forest(g, Sign::Minus, k, false), "d={d} k={k}");
            }
        }
    }
}
