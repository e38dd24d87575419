//! Constructive versions of the existence theorems.
//!
//! Every finder returns a [`FindReport`]. A report with `found == true`
//! carries the subgraph, its weight and a human-readable certificate naming
//! the condition that guaranteed it; `found == false` names the inequality
//! or route that failed.

use serde::{Deserialize, Serialize};

use crate::decompositions::{hamilton_cycle_decomposition, hamilton_path_decomposition};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::families::{interpolate, FamilyKind};
use crate::graph::{host_class_check, ColoredGraph, Edge, EdgeSubgraph, HostClass, Sign};
use crate::thresholds::{
    binom2, connectivity_threshold, diam3_threshold, forest_bound_degenerate,
    forest_bound_planar, forest_bound_triangle_free, master_verdict, spanning_path_threshold,
    spanning_tree_threshold,
};

/// Largest host for which the spanning-path finder falls back to searching
/// for monochromatic linear forests.
pub const DEFAULT_PATH_SEARCH_MAX_N: usize = 12;

const LINEAR_FOREST_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FindKind {
    Tree,
    Path,
    Diam3,
    Connect,
    Matching,
}

impl FindKind {
    pub fn family(self) -> Option<FamilyKind> {
        match self {
            FindKind::Tree => Some(FamilyKind::SpanningTrees),
            FindKind::Path => Some(FamilyKind::HamiltonianPaths),
            FindKind::Diam3 => Some(FamilyKind::Diam3Trees),
            FindKind::Connect | FindKind::Matching => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindReport {
    pub found: bool,
    pub kind: FindKind,
    pub edges: Vec<Edge>,
    pub weight: i64,
    pub certificate: String,
    pub chain_replacements: usize,
}

impl FindReport {
    fn missing(kind: FindKind, certificate: impl Into<String>) -> Self {
        FindReport {
            found: false,
            kind,
            edges: Vec::new(),
            weight: 0,
            certificate: certificate.into(),
            chain_replacements: 0,
        }
    }

    fn hit(kind: FindKind, h: &EdgeSubgraph<'_>, certificate: String, replacements: usize) -> Self {
        FindReport {
            found: true,
            kind,
            edges: h.edges().collect(),
            weight: h.weight(),
            certificate,
            chain_replacements: replacements,
        }
    }

    /// Re-attaches the reported edges to `host`.
    pub fn subgraph<'g>(&self, host: &'g ColoredGraph) -> Result<EdgeSubgraph<'g>> {
        let pairs: Vec<_> = self.edges.iter().map(|e| (e.u(), e.v())).collect();
        EdgeSubgraph::from_pairs(host, &pairs)
    }
}

/// A forest of one colour, as large as requested when the host allows it.
#[derive(Clone, Debug)]
pub struct ForestExtraction<'g> {
    pub forest: EdgeSubgraph<'g>,
    /// The colour class exceeds the bound that guarantees `k` edges.
    pub hypothesis_met: bool,
    pub bound: usize,
}

/// Edge count of `sign` that forces a `k`-edge forest in `class`, and
/// whether the bound is reached with `>=` (planar) rather than `>`.
fn forest_guarantee(class: HostClass, k: usize) -> (usize, bool) {
    let general = binom2(k);
    match class {
        HostClass::Complete => (general, false),
        HostClass::TriangleFree => (forest_bound_triangle_free(k).unwrap_or(0), false),
        HostClass::DTree(d) => (forest_bound_degenerate(k, d).unwrap_or(general), false),
        HostClass::MaximalPlanarStacked => match forest_bound_planar(k) {
            Ok(b) => (b, true),
            Err(_) => (general, false),
        },
    }
}

/// Greedy maximal forest of the `sign` class truncated to `k` edges.
///
/// A maximal forest of a graph has the largest possible size, so whenever
/// any `k`-edge forest exists in the colour class this returns one.
pub fn extract_monochromatic_forest(
    g: &ColoredGraph,
    sign: Sign,
    k: usize,
    class: HostClass,
) -> ForestExtraction<'_> {
    let mut dsu = Dsu::new(g.n());
    let mut chosen = Vec::with_capacity(k);
    for id in g.sign_class(sign) {
        if chosen.len() == k {
            break;
        }
        let e = g.edge(id);
        if dsu.union(e.u(), e.v()) {
            chosen.push(id);
        }
    }
    let (bound, reach) = forest_guarantee(class, k);
    let have = g.census().count(sign);
    let exceeds = if reach { have >= bound } else { have > bound };
    let full = chosen.len() == k;
    ForestExtraction {
        forest: EdgeSubgraph::from_sorted_unchecked(g, chosen),
        hypothesis_met: exceeds && full,
        bound,
    }
}

/// Extends a forest to a spanning tree with host edges in canonical order.
pub fn complete_to_spanning_tree<'g>(forest: &EdgeSubgraph<'g>) -> Option<EdgeSubgraph<'g>> {
    let g = forest.host();
    let mut dsu = Dsu::new(g.n());
    let mut ids = Vec::with_capacity(g.n().saturating_sub(1));
    for e in forest.edges() {
        if !dsu.union(e.u(), e.v()) {
            return None;
        }
    }
    ids.extend_from_slice(forest.edge_ids());
    for (id, e) in g.edges().iter().enumerate() {
        if ids.len() + 1 >= g.n() {
            break;
        }
        if dsu.union(e.u(), e.v()) {
            ids.push(id);
        }
    }
    ids.sort_unstable();
    let tree = EdgeSubgraph::from_sorted_unchecked(g, ids);
    tree.is_spanning_tree().then_some(tree)
}

fn parity_ok(weight: i64, m: usize) -> bool {
    weight.abs() <= 1 && (weight - m as i64).rem_euclid(2) == 0
}

/// Two members with weights on opposite sides of zero: return one that is
/// already balanced, or interpolate between them.
fn settle<'g>(
    kind: FindKind,
    family: FamilyKind,
    low: &EdgeSubgraph<'g>,
    high: &EdgeSubgraph<'g>,
    reason: &str,
) -> FindReport {
    let m = family.member_edge_count(low.host().n());
    for (label, h) in [("negative", low), ("positive", high)] {
        if parity_ok(h.weight(), m) {
            return FindReport::hit(
                kind,
                h,
                format!("{reason}; the {label} endpoint is already balanced"),
                0,
            );
        }
    }
    match interpolate(family, low, high) {
        Ok(r) => FindReport::hit(
            kind,
            &r.member,
            format!(
                "{reason}; interpolated over {family} ({} of {} replacements)",
                r.steps, r.chain_replacements
            ),
            r.steps,
        ),
        Err(e) => FindReport::missing(kind, format!("{reason}; interpolation failed: {e}")),
    }
}

/// Forest size and the census inequality for each host class.
fn tree_hypothesis(g: &ColoredGraph, class: HostClass) -> (usize, std::result::Result<String, String>) {
    let n = g.n();
    let min = g.census().min();
    let k = (n - 1) / 2;
    match class {
        HostClass::Complete => {
            let b = spanning_tree_threshold(n);
            let text = format!("min{{e(-1),e(1)}} = {min} > C({k},2) = {b}");
            (k, if min > b { Ok(text) } else { Err(text.replace('>', "<=")) })
        }
        HostClass::TriangleFree => {
            let h = n / 2;
            let need = h * h / 2 + 2;
            if g.edge_count() < need {
                return (
                    h,
                    Err(format!("e(G) = {} < floor({h}^2/2) + 2 = {need}", g.edge_count())),
                );
            }
            let b = h * h / 4;
            let text = format!("min{{e(-1),e(1)}} = {min} > floor({h}^2/4) = {b}");
            (h, if min > b { Ok(text) } else { Err(text.replace('>', "<=")) })
        }
        HostClass::DTree(d) => {
            if n < 2 * d + 2 {
                return (k, Err(format!("n = {n} < 2d + 2 = {}", 2 * d + 2)));
            }
            let b = k * d - binom2(d + 1);
            let text = format!("min{{e(-1),e(1)}} = {min} > {k}*{d} - C({},2) = {b}", d + 1);
            (k, if min > b { Ok(text) } else { Err(text.replace('>', "<=")) })
        }
        HostClass::MaximalPlanarStacked => {
            if n < 7 {
                return (k, Err(format!("n = {n} < 7")));
            }
            let b = 3 * k - 5;
            let text = format!("min{{e(-1),e(1)}} = {min} >= 3*{k} - 5 = {b}");
            (k, if min >= b { Ok(text) } else { Err(text.replace(">=", "<")) })
        }
    }
}

/// Zero-sum or almost zero-sum spanning tree of a host in `class`.
pub fn find_zero_sum_spanning_tree(g: &ColoredGraph, class: HostClass) -> FindReport {
    let kind = FindKind::Tree;
    let n = g.n();
    if n == 0 {
        return FindReport::missing(kind, "empty host");
    }
    if n == 1 {
        return FindReport::hit(kind, &g.subgraph([]).expect("empty"), "single vertex".into(), 0);
    }
    if !g.is_connected() {
        return FindReport::missing(kind, "host is not connected");
    }
    if !host_class_check(g, class) {
        return FindReport::missing(kind, format!("host is not {class}"));
    }
    let (k, hypothesis) = tree_hypothesis(g, class);
    let reason = match hypothesis {
        Ok(text) => format!("{class} host, {text}"),
        Err(text) => return FindReport::missing(kind, format!("hypothesis unmet: {text}")),
    };
    let minus = extract_monochromatic_forest(g, Sign::Minus, k, class);
    let plus = extract_monochromatic_forest(g, Sign::Plus, k, class);
    if minus.forest.edge_count() < k || plus.forest.edge_count() < k {
        return FindReport::missing(kind, format!("{reason}; no {k}-edge monochromatic forest"));
    }
    let (Some(low), Some(high)) = (
        complete_to_spanning_tree(&minus.forest),
        complete_to_spanning_tree(&plus.forest),
    ) else {
        return FindReport::missing(kind, "forest does not extend to a spanning tree");
    };
    settle(kind, FamilyKind::SpanningTrees, &low, &high, &reason)
}

/// Orders a linear forest's components into one Hamiltonian path of `K_n`.
fn linear_forest_to_path<'g>(g: &'g ColoredGraph, forest: &[usize]) -> Option<EdgeSubgraph<'g>> {
    let n = g.n();
    let mut next: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &id in forest {
        let e = g.edge(id);
        next[e.u()].push(e.v());
        next[e.v()].push(e.u());
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] || next[start].len() > 1 {
            continue;
        }
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            seen[cur] = true;
            order.push(cur);
            match next[cur].iter().find(|&&w| w != prev) {
                Some(&w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
    }
    if order.len() != n {
        return None;
    }
    EdgeSubgraph::from_walk(g, &order).ok()
}

/// Depth-first search for `k` edges of `sign` forming a linear forest.
/// `end[v]` is the other end of the path through `v` (itself if isolated).
pub(crate) fn search_linear_forest(g: &ColoredGraph, sign: Sign, k: usize) -> Option<Vec<usize>> {
    struct Search<'a> {
        g: &'a ColoredGraph,
        class: Vec<usize>,
        deg: Vec<u8>,
        end: Vec<usize>,
        chosen: Vec<usize>,
        nodes: u64,
    }
    impl Search<'_> {
        fn go(&mut self, from: usize, k: usize) -> bool {
            if self.chosen.len() == k {
                return true;
            }
            self.nodes += 1;
            if self.nodes > LINEAR_FOREST_NODE_BUDGET {
                return false;
            }
            let need = k - self.chosen.len();
            for i in from..self.class.len() {
                if self.class.len() - i < need {
                    return false;
                }
                let id = self.class[i];
                let e = self.g.edge(id);
                let (u, v) = (e.u(), e.v());
                if self.deg[u] >= 2 || self.deg[v] >= 2 || self.end[u] == v {
                    continue;
                }
                let (a, b) = (self.end[u], self.end[v]);
                self.end[a] = b;
                self.end[b] = a;
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.chosen.push(id);
                if self.go(i + 1, k) {
                    return true;
                }
                self.chosen.pop();
                self.deg[u] -= 1;
                self.deg[v] -= 1;
                self.end[a] = u;
                self.end[b] = v;
                // a path end points at itself only when isolated
                if self.deg[u] == 0 {
                    self.end[u] = u;
                }
                if self.deg[v] == 0 {
                    self.end[v] = v;
                }
            }
            false
        }
    }
    let n = g.n();
    let mut s = Search {
        g,
        class: g.sign_class(sign),
        deg: vec![0; n],
        end: (0..n).collect(),
        chosen: Vec::with_capacity(k),
        nodes: 0,
    };
    s.go(0, k).then_some(s.chosen)
}

/// Zero-sum or almost zero-sum Hamiltonian path of a complete host, using
/// the Walecki decomposition first and a linear-forest search for hosts
/// up to [`DEFAULT_PATH_SEARCH_MAX_N`] vertices second.
pub fn find_zero_sum_spanning_path(g: &ColoredGraph) -> FindReport {
    find_zero_sum_spanning_path_with_limit(g, DEFAULT_PATH_SEARCH_MAX_N)
}

pub fn find_zero_sum_spanning_path_with_limit(g: &ColoredGraph, search_max_n: usize) -> FindReport {
    let kind = FindKind::Path;
    let n = g.n();
    if !g.is_complete() {
        return FindReport::missing(kind, "host is not complete");
    }
    if n <= 2 {
        let walk: Vec<usize> = (0..n).collect();
        return match EdgeSubgraph::from_walk(g, &walk) {
            Ok(p) if n > 0 => FindReport::hit(kind, &p, "trivial host".into(), 0),
            _ => FindReport::missing(kind, "empty host"),
        };
    }
    let mut attempts = Vec::new();
    match decomposition_route(g) {
        Ok(report) => return report,
        Err(why) => attempts.push(why),
    }

    let threshold = spanning_path_threshold(n).expect("n >= 3");
    let min = g.census().min();
    let census_text = if min > threshold {
        format!("min{{e(-1),e(1)}} = {min} > {threshold}")
    } else {
        format!("census condition unmet: min{{e(-1),e(1)}} = {min} <= {threshold}")
    };
    if n > search_max_n {
        attempts.push(format!(
            "linear-forest search skipped: n = {n} exceeds search limit {search_max_n} ({census_text})"
        ));
        return FindReport::missing(kind, attempts.join("; "));
    }
    let k = (n - 1) / 2;
    let forests = (
        search_linear_forest(g, Sign::Minus, k),
        search_linear_forest(g, Sign::Plus, k),
    );
    let (Some(fm), Some(fp)) = forests else {
        attempts.push(format!(
            "linear-forest search: no {k}-edge monochromatic linear forest in both colours ({census_text})"
        ));
        return FindReport::missing(kind, attempts.join("; "));
    };
    let low = linear_forest_to_path(g, &fm).expect("linear forest orders into a path");
    let high = linear_forest_to_path(g, &fp).expect("linear forest orders into a path");
    let reason = format!(
        "linear-forest search (constructive gap filled by bounded search), {census_text}; {}",
        attempts.join("; ")
    );
    settle(kind, FamilyKind::HamiltonianPaths, &low, &high, &reason)
}

/// Weight condition 2 (paths, n even) or 3 (cycles, n odd).
fn decomposition_route(g: &ColoredGraph) -> std::result::Result<FindReport, String> {
    let kind = FindKind::Path;
    let n = g.n();
    let verdict = master_verdict(g, FamilyKind::HamiltonianPaths).expect("n >= 3");
    let (label, condition) = if n % 2 == 0 {
        ("Hamiltonian path decomposition, condition 2", verdict.condition2)
    } else {
        ("Hamiltonian cycle decomposition, condition 3", verdict.condition3)
    };
    let condition = condition.expect("complete host");
    let status = format!(
        "{label} {} (|f| = {} {} {}/{})",
        if condition.holds { "holds" } else { "fails" },
        condition.abs_weight,
        if condition.holds { "<" } else { ">=" },
        condition.numerator,
        condition.denominator
    );

    let mut candidates: Vec<EdgeSubgraph<'_>> = Vec::new();
    if n % 2 == 0 {
        let d = hamilton_path_decomposition(n).expect("even n");
        candidates = d.edge_parts(g).expect("complete host");
    } else {
        let d = hamilton_cycle_decomposition(n).expect("odd n");
        for cycle in d.edge_parts(g).expect("complete host") {
            // dropping a +1 edge lowers the weight, a -1 edge raises it
            for sign in [Sign::Plus, Sign::Minus] {
                if let Some(&id) = cycle.edge_ids().iter().find(|&&id| g.sign(id) == sign) {
                    let rest = cycle.edge_ids().iter().copied().filter(|&x| x != id);
                    candidates.push(EdgeSubgraph::new(g, rest).expect("subset"));
                }
            }
        }
    }
    let m = n - 1;
    if let Some(p) = candidates.iter().find(|p| parity_ok(p.weight(), m)) {
        return Ok(FindReport::hit(
            kind,
            p,
            format!("decomposition route: {status}; a part is already balanced"),
            0,
        ));
    }
    let low = candidates.iter().min_by_key(|p| p.weight()).expect("non-empty");
    let high = candidates.iter().max_by_key(|p| p.weight()).expect("non-empty");
    if low.weight() > 0 || high.weight() < 0 {
        return Err(format!(
            "decomposition route: {status}; all parts one-signed (weights {}..{})",
            low.weight(),
            high.weight()
        ));
    }
    let report = settle(
        kind,
        FamilyKind::HamiltonianPaths,
        low,
        high,
        &format!("decomposition route: {status}"),
    );
    if report.found {
        Ok(report)
    } else {
        Err(report.certificate)
    }
}

/// Zero-sum or almost zero-sum spanning tree of diameter at most 3 of `K_n`.
pub fn find_zero_sum_diam3_tree(g: &ColoredGraph) -> FindReport {
    let kind = FindKind::Diam3;
    let n = g.n();
    if !g.is_complete() {
        return FindReport::missing(kind, "host is not complete");
    }
    if n < 3 {
        return FindReport::missing(kind, format!("needs n >= 3, got {n}"));
    }
    let bound = diam3_threshold(n).expect("n >= 3");
    let min = g.census().min();
    if min <= bound {
        return FindReport::missing(
            kind,
            format!(
                "hypothesis unmet: min{{e(-1),e(1)}} = {min} <= floor({n}/2 * floor({}/2)) = {bound}",
                n - 3
            ),
        );
    }
    let k = (n - 1) / 2;
    // more than ex(n, K_{1,k}) edges of a colour put k of them at one vertex
    let centre_for = |sign: Sign| {
        (0..n)
            .max_by_key(|&v| (g.sign_degree(v, sign), std::cmp::Reverse(v)))
            .filter(|&v| g.sign_degree(v, sign) >= k)
    };
    let (Some(cm), Some(cp)) = (centre_for(Sign::Minus), centre_for(Sign::Plus)) else {
        return FindReport::missing(kind, "no monochromatic star of the forced size");
    };
    let star = |c: usize| {
        let ids = g.neighbors(c).iter().map(|&(_, id)| id);
        EdgeSubgraph::new(g, ids).expect("star")
    };
    let reason = format!(
        "min{{e(-1),e(1)}} = {min} > {bound}; -1 star at {cm}, +1 star at {cp} (star bound is an upper bound)"
    );
    settle(kind, FamilyKind::Diam3Trees, &star(cm), &star(cp), &reason)
}

/// Zero-sum path of length 2 or 4 between `x` and `y` in `K_n`.
///
/// Follows the case analysis on the sets `A` (both edges to `x`, `y`
/// positive) and `B` (both negative). When the census hypothesis fails and
/// the cases find nothing, all paths of length 4 are scanned.
pub fn find_zero_sum_path_leq4(g: &ColoredGraph, x: usize, y: usize) -> Result<FindReport> {
    let kind = FindKind::Connect;
    let n = g.n();
    if x >= n || y >= n || x == y {
        return Err(Error::input(format!("need two distinct vertices below {n}, got {x}, {y}")));
    }
    if !g.is_complete() {
        return Ok(FindReport::missing(kind, "host is not complete"));
    }
    let min = g.census().min();
    let need = connectivity_threshold(n);
    let hypothesis = n >= 6 && min >= need;
    let hyp_text = if hypothesis {
        format!("min{{e(-1),e(1)}} = {min} >= {need}")
    } else if n < 6 {
        format!("hypothesis unmet: n = {n} < 6")
    } else {
        format!("hypothesis unmet: min{{e(-1),e(1)}} = {min} < {need}")
    };
    let hit = |walk: &[usize], case: &str| -> Result<FindReport> {
        let p = EdgeSubgraph::from_walk(g, walk)?;
        debug_assert_eq!(p.weight(), 0);
        Ok(FindReport::hit(kind, &p, format!("{case}; {hyp_text}"), 0))
    };

    let s = |a: usize, b: usize| g.sign_between(a, b).expect("complete").value();
    let others: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    if let Some(&u) = others.iter().find(|&&u| s(x, u) != s(u, y)) {
        return hit(&[x, u, y], "length 2: f(xu) != f(uy)");
    }
    let mut a: Vec<usize> = others.iter().copied().filter(|&u| s(x, u) == 1).collect();
    let mut b: Vec<usize> = others.iter().copied().filter(|&u| s(x, u) == -1).collect();
    // sigma flips all colours so that |A| >= |B|
    let sigma = if a.len() >= b.len() {
        1
    } else {
        std::mem::swap(&mut a, &mut b);
        -1
    };
    let f = |p: usize, q: usize| sigma * s(p, q);

    let found: Option<(Vec<usize>, &str)> = if b.is_empty() {
        // Case 1: a -1 path u-v-w inside A
        a.iter().find_map(|&v| {
            let nb: Vec<usize> = a.iter().copied().filter(|&u| u != v && f(u, v) == -1).collect();
            (nb.len() >= 2).then(|| (vec![x, nb[0], v, nb[1], y], "case |B| = 0"))
        })
    } else if b.len() == 1 {
        let z = b[0];
        let negative: Vec<usize> = a.iter().copied().filter(|&u| f(z, u) == -1).collect();
        if negative.len() >= 2 {
            Some((vec![x, negative[0], z, negative[1], y], "case |B| = 1, two -1 edges at z"))
        } else if let [u] = negative[..] {
            let rest: Vec<usize> = a.iter().copied().filter(|&v| v != u).collect();
            if let Some(&v) = rest.iter().find(|&&v| f(v, u) == 1) {
                Some((vec![x, v, u, z, y], "case |B| = 1, one -1 edge at z, +1 edge at u"))
            } else if rest.len() >= 2 {
                Some((vec![x, rest[0], u, rest[1], y], "case |B| = 1, one -1 edge at z, -1 edges at u"))
            } else {
                None
            }
        } else {
            a.iter().find_map(|&u| {
                a.iter()
                    .find(|&&v| v != u && f(u, v) == -1)
                    .map(|&v| (vec![x, u, v, z, y], "case |B| = 1, -1 edge inside A"))
            })
        }
    } else {
        // Case 3
        let (u, v) = (a[0], a[1]);
        let (mut z, mut w) = (b[0], b[1]);
        if f(u, z) == 1 && f(u, w) == 1 {
            Some((vec![x, z, u, w, y], "case |B| >= 2, +1 edges uz, uw"))
        } else {
            if f(u, z) == 1 {
                std::mem::swap(&mut z, &mut w);
            }
            if f(v, u) == 1 {
                Some((vec![x, v, u, z, y], "case |B| >= 2, f(vu) = 1"))
            } else if f(v, z) == -1 {
                Some((vec![x, v, z, u, y], "case |B| >= 2, f(vz) = -1"))
            } else {
                Some((vec![x, z, v, u, y], "case |B| >= 2, f(vz) = 1"))
            }
        }
    };
    if let Some((walk, case)) = found {
        return hit(&walk, case);
    }
    if hypothesis {
        return Ok(FindReport::missing(kind, format!("case analysis failed; {hyp_text}")));
    }
    for &u in &others {
        for &v in others.iter().filter(|&&v| v != u) {
            for &w in others.iter().filter(|&&w| w != u && w != v) {
                if s(x, u) + s(u, v) + s(v, w) + s(w, y) == 0 {
                    return hit(&[x, u, v, w, y], "exhaustive length-4 scan");
                }
            }
        }
    }
    Ok(FindReport::missing(kind, format!("no zero-sum path of length <= 4; {hyp_text}")))
}

/// Backtracking search for a zero-sum perfect matching of `K_n`, `4 | n`.
/// An experimental probe; no sufficient condition is known.
pub fn check_zero_sum_matching(g: &ColoredGraph) -> Result<FindReport> {
    let n = g.n();
    if n == 0 || n % 4 != 0 {
        return Err(Error::domain(format!("zero-sum perfect matching needs 4 | n, got n = {n}")));
    }
    if !g.is_complete() {
        return Err(Error::precondition("matching probe needs a complete host"));
    }
    let quota = n / 4;
    let mut matched = vec![false; n];
    let mut chosen = Vec::with_capacity(n / 2);
    let mut nodes = 0u64;
    fn go(
        g: &ColoredGraph,
        matched: &mut [bool],
        chosen: &mut Vec<usize>,
        minus: usize,
        plus: usize,
        quota: usize,
        nodes: &mut u64,
    ) -> bool {
        let Some(a) = matched.iter().position(|&m| !m) else {
            return true;
        };
        *nodes += 1;
        matched[a] = true;
        for b in a + 1..matched.len() {
            if matched[b] {
                continue;
            }
            let id = g.edge_id(a, b).expect("complete");
            let (m2, p2) = match g.sign(id) {
                Sign::Minus => (minus + 1, plus),
                Sign::Plus => (minus, plus + 1),
            };
            if m2 > quota || p2 > quota {
                continue;
            }
            matched[b] = true;
            chosen.push(id);
            if go(g, matched, chosen, m2, p2, quota, nodes) {
                return true;
            }
            chosen.pop();
            matched[b] = false;
        }
        matched[a] = false;
        false
    }
    if go(g, &mut matched, &mut chosen, 0, 0, quota, &mut nodes) {
        let m = EdgeSubgraph::new(g, chosen)?;
        Ok(FindReport::hit(
            FindKind::Matching,
            &m,
            format!("backtracking search, {nodes} nodes"),
            0,
        ))
    } else {
        Ok(FindReport::missing(
            FindKind::Matching,
            format!("no zero-sum perfect matching (exhaustive backtracking, {nodes} nodes)"),
        ))
    }
}
