//! Browser bindings. Every export returns a JSON string so the page needs
//! no generated TypeScript types; errors come back as `{"error": "..."}`.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use zerosum::finders::{
    find_zero_sum_diam3_tree, find_zero_sum_path_leq4, find_zero_sum_spanning_path,
    find_zero_sum_spanning_tree, FindReport,
};
use zerosum::io::{parse_edge_list, write_edge_list};
use zerosum::sample::random_coloring;
use zerosum::thresholds;
use zerosum::HostClass;

/// Largest order the page offers; keeps the path search and drawing snappy.
pub const MAX_N: usize = 16;

#[derive(Serialize)]
struct Demo {
    n: usize,
    /// `[u, v, sign]` triples in canonical order.
    edges: Vec<(usize, usize, i64)>,
    e_minus: usize,
    e_plus: usize,
    total_weight: i64,
    /// The colouring as an edge list, for feeding back into `short_path`.
    edge_list: String,
    report: FindReport,
}

#[derive(Serialize)]
struct ThresholdRow {
    n: usize,
    tree: usize,
    path: Option<usize>,
    diam3: Option<usize>,
    connect: usize,
    edges: usize,
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e),
    }
}

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

/// Colours `K_n` at random and runs the finder for `family`
/// (`tree`, `path` or `diam3`).
pub fn random_find_json(n: usize, p_minus: f64, seed: u64, family: &str) -> String {
    to_json((|| {
        if !(2..=MAX_N).contains(&n) {
            return Err(format!("n must be between 2 and {MAX_N}"));
        }
        if !(0.0..=1.0).contains(&p_minus) {
            return Err("probability must lie in [0, 1]".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_coloring(&mut rng, n, p_minus);
        let report = match family {
            "tree" => find_zero_sum_spanning_tree(&g, HostClass::Complete),
            "path" => find_zero_sum_spanning_path(&g),
            "diam3" => find_zero_sum_diam3_tree(&g),
            other => return Err(format!("unknown family `{other}`")),
        };
        let census = g.census();
        Ok(Demo {
            n,
            edges: g.edges().iter().zip(g.signs()).map(|(e, s)| (e.u(), e.v(), s.value())).collect(),
            e_minus: census.e_minus,
            e_plus: census.e_plus,
            total_weight: census.total_weight,
            edge_list: write_edge_list(&g, &[]),
            report,
        })
    })())
}

/// Zero-sum path of length 2 or 4 between `x` and `y` in an edge-list graph.
pub fn short_path_json(edge_list: &str, x: usize, y: usize) -> String {
    to_json((|| {
        let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
        find_zero_sum_path_leq4(&g, x, y).map_err(|e| e.to_string())
    })())
}

/// Census thresholds of every theorem for `3 <= n <= n_max`.
pub fn thresholds_json(n_max: usize) -> String {
    to_json((|| {
        if !(3..=200).contains(&n_max) {
            return Err("n_max must be between 3 and 200".into());
        }
        Ok((3..=n_max)
            .map(|n| ThresholdRow {
                n,
                tree: thresholds::spanning_tree_threshold(n),
                path: thresholds::spanning_path_threshold(n).ok(),
                diam3: thresholds::diam3_threshold(n).ok(),
                connect: thresholds::connectivity_threshold(n),
                edges: thresholds::binom2(n),
            })
            .collect::<Vec<_>>())
    })())
}

#[wasm_bindgen]
pub fn random_find(n: usize, p_minus: f64, seed: u64, family: &str) -> String {
    random_find_json(n, p_minus, seed, family)
}

#[wasm_bindgen]
pub fn short_path(edge_list: &str, x: usize, y: usize) -> String {
    short_path_json(edge_list, x, y)
}

#[wasm_bindgen]
pub fn threshold_table(n_max: usize) -> String {
    thresholds_json(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn random_find_is_reproducible() {
        let a = random_find_json(8, 0.5, 11, "tree");
        assert_eq!(a, random_find_json(8, 0.5, 11, "tree"));
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["edges"].as_array().unwrap().len(), 28);
        assert_eq!(v["report"]["kind"], "tree");
        if v["report"]["found"] == true {
            assert!(v["report"]["weight"].as_i64().unwrap().abs() <= 1);
        }
    }

    #[test]
    fn bad_parameters_are_errors() {
        let v: Value = serde_json::from_str(&random_find_json(40, 0.5, 1, "tree")).unwrap();
        assert!(v["error"].is_string());
        let v: Value = serde_json::from_str(&random_find_json(6, 0.5, 1, "cycle")).unwrap();
        assert!(v["error"].is_string());
        let v: Value = serde_json::from_str(&short_path_json("3 1\n0 0 1\n", 0, 1)).unwrap();
        assert!(v["error"].as_str().unwrap().contains("line 2"));
    }

    #[test]
    fn short_path_round_trips_the_demo_graph() {
        let v: Value = serde_json::from_str(&random_find_json(9, 0.5, 4, "path")).unwrap();
        let text = v["edge_list"].as_str().unwrap();
        let r: Value = serde_json::from_str(&short_path_json(text, 0, 5)).unwrap();
        assert_eq!(r["kind"], "connect");
        if r["found"] == true {
            assert_eq!(r["weight"], 0);
        }
    }

    #[test]
    fn table_has_one_row_per_order() {
        let v: Value = serde_json::from_str(&thresholds_json(10)).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[7]["n"], 10);
        assert_eq!(rows[7]["path"], 10);
    }
}
