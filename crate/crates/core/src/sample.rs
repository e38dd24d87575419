//! Random colourings and random family members for property tests and
//! sampled verification. Distributions are convenient, not uniform.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dsu::Dsu;
use crate::graph::{ColoredGraph, EdgeSubgraph, Sign};

/// `K_n` with each edge coloured -1 with probability `p_minus`.
pub fn random_coloring<R: Rng + ?Sized>(rng: &mut R, n: usize, p_minus: f64) -> ColoredGraph {
    ColoredGraph::complete(n, |_| {
        if rng.gen_bool(p_minus) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    })
}

/// Recolours an arbitrary host at random.
pub fn random_recoloring<R: Rng + ?Sized>(rng: &mut R, g: &ColoredGraph, p_minus: f64) -> ColoredGraph {
    g.recolored(|_, _| if rng.gen_bool(p_minus) { Sign::Minus } else { Sign::Plus })
}

/// Kruskal over a shuffled edge order. `None` for a disconnected host.
pub fn random_spanning_tree<'g, R: Rng + ?Sized>(rng: &mut R, g: &'g ColoredGraph) -> Option<EdgeSubgraph<'g>> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    let mut dsu = Dsu::new(g.n());
    let ids = order.into_iter().filter(|&id| {
        let e = g.edge(id);
        dsu.union(e.u(), e.v())
    });
    let t = EdgeSubgraph::new(g, ids.collect::<Vec<_>>()).ok()?;
    t.is_spanning_tree().then_some(t)
}

/// A uniformly random vertex order of a complete host.
pub fn random_hamiltonian_path<'g, R: Rng + ?Sized>(rng: &mut R, g: &'g ColoredGraph) -> EdgeSubgraph<'g> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    EdgeSubgraph::from_walk(g, &order).expect("complete host")
}

/// A star or double star of a complete host on at least two vertices.
pub fn random_diam3_tree<'g, R: Rng + ?Sized>(rng: &mut R, g: &'g ColoredGraph) -> EdgeSubgraph<'g> {
    let n = g.n();
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    let star = rng.gen_bool(0.25);
    let mut pairs = vec![(a, b)];
    for v in (0..n).filter(|&v| v != a && v != b) {
        let centre = if star || rng.gen_bool(0.5) { a } else { b };
        pairs.push((centre, v));
    }
    EdgeSubgraph::from_pairs(g, &pairs).expect("complete host")
}
