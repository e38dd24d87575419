//! Brute-force ground truth at desk scale.
//!
//! Enumerators visit every member of a family exactly once and refuse
//! instances whose member count exceeds the [`EnumerationBudget`]. The
//! exhaustive theorem checker walks colourings as bitmasks in canonical
//! edge order, so any range of masks is an independent shard.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{balanced_bipartite_host, d_tree_host, stacked_planar_host};
use crate::families::FamilyKind;
use crate::finders::{
    find_zero_sum_diam3_tree, find_zero_sum_path_leq4, find_zero_sum_spanning_path,
    find_zero_sum_spanning_tree, FindReport,
};
use crate::graph::{ColoredGraph, Edge, EdgeSubgraph, HostClass, Sign};
use crate::io::write_edge_list;
use crate::thresholds::{
    binom2, connectivity_threshold, diam3_threshold, master_verdict, spanning_path_threshold,
    spanning_tree_threshold,
};

/// Caps on what the oracle will enumerate. Overflow is refused, never sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBudget {
    pub max_spanning_trees: u128,
    pub max_colorings: u128,
    pub max_matchings: u128,
    pub max_paths: u128,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_spanning_trees: 262_144,
            max_colorings: 1 << 15,
            max_matchings: 2_027_025,
            max_paths: 1_814_400,
        }
    }
}

impl EnumerationBudget {
    /// Large enough for every colouring of `K_7`.
    pub fn extended() -> Self {
        EnumerationBudget {
            max_spanning_trees: 10_000_000,
            max_colorings: 1 << 22,
            max_matchings: 40_000_000,
            max_paths: 20_000_000,
        }
    }

    fn check(required: u128, limit: u128, what: &'static str) -> Result<()> {
        if required > limit {
            Err(Error::Budget {
                what,
                required,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

/// Kirchhoff's matrix-tree theorem with fraction-free elimination.
/// Saturates at `u128::MAX` if intermediate values overflow.
pub fn spanning_tree_count(g: &ColoredGraph) -> u128 {
    let n = g.n();
    if n <= 1 {
        return 1;
    }
    let size = n - 1;
    let mut a = vec![vec![0i128; size]; size];
    for e in g.edges() {
        let (u, v) = (e.u(), e.v());
        for (x, y) in [(u, v), (v, u)] {
            if x < size {
                a[x][x] += 1;
                if y < size {
                    a[x][y] -= 1;
                }
            }
        }
    }
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..size {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..size).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let Some(t) = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                else {
                    return u128::MAX;
                };
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[size - 1][size - 1]) as u128
}

fn factorial_half(n: usize) -> u128 {
    if n <= 1 {
        return 1;
    }
    (3..=n as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

fn double_factorial_odd(n: usize) -> u128 {
    // (n-1)!! for even n
    (1..n as u128).step_by(2).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Number of spanning trees of `K_n` with diameter at most 3.
pub fn diam3_tree_count(n: usize) -> u128 {
    match n {
        0 => 0,
        1 | 2 => 1,
        _ => {
            let sides = 1u128.checked_shl(n as u32 - 2).unwrap_or(u128::MAX);
            (n as u128).saturating_add((binom2(n) as u128).saturating_mul(sides - 2))
        }
    }
}

/// Member count of `kind` in `g` (for complete-host families the count of
/// `K_n`), used for budget checks before enumerating.
pub fn family_size(g: &ColoredGraph, kind: FamilyKind) -> u128 {
    match kind {
        FamilyKind::SpanningTrees => spanning_tree_count(g),
        FamilyKind::HamiltonianPaths => factorial_half(g.n()),
        FamilyKind::Diam3Trees => diam3_tree_count(g.n()),
    }
}

struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push((rb, ra));
        true
    }

    fn undo(&mut self) {
        let (child, root) = self.history.pop().expect("undo after union");
        self.parent[child] = child;
        self.size[root] -= self.size[child];
    }

    fn components(&self) -> usize {
        (0..self.parent.len()).filter(|&x| self.parent[x] == x).count()
    }
}

/// Include/exclude search over edges in id order. Excluding an edge is
/// allowed only while the chosen edges plus the undecided ones still
/// connect the host, so every leaf of the search is a spanning tree.
pub fn for_each_spanning_tree(
    g: &ColoredGraph,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    if n == 0 {
        return ControlFlow::Continue(());
    }
    fn still_connects(g: &ColoredGraph, dsu: &RollbackDsu, from: usize) -> bool {
        let mut scratch = crate::dsu::Dsu::new(g.n());
        let mut parts = g.n();
        for x in 0..g.n() {
            let r = dsu.find(x);
            if r != x && scratch.union(x, r) {
                parts -= 1;
            }
        }
        for e in &g.edges()[from..] {
            if scratch.union(e.u(), e.v()) {
                parts -= 1;
                if parts == 1 {
                    return true;
                }
            }
        }
        parts == 1
    }
    fn go(
        g: &ColoredGraph,
        i: usize,
        dsu: &mut RollbackDsu,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if chosen.len() + 1 == g.n() {
            return f(chosen);
        }
        if i == g.edge_count() {
            return ControlFlow::Continue(());
        }
        let e = g.edge(i);
        if dsu.union(e.u(), e.v()) {
            chosen.push(i);
            let flow = go(g, i + 1, dsu, chosen, f);
            chosen.pop();
            dsu.undo();
            flow?;
        }
        if still_connects(g, dsu, i + 1) {
            go(g, i + 1, dsu, chosen, f)?;
        }
        ControlFlow::Continue(())
    }
    let mut dsu = RollbackDsu::new(n);
    if n > 1 && {
        let mut probe = RollbackDsu::new(n);
        for e in g.edges() {
            probe.union(e.u(), e.v());
        }
        probe.components() != 1
    } {
        return ControlFlow::Continue(());
    }
    go(g, 0, &mut dsu, &mut Vec::with_capacity(n), &mut f)
}

/// Every Hamiltonian path once (a path and its reversal are one member).
/// Edge ids are passed sorted.
pub fn for_each_hamiltonian_path(
    g: &ColoredGraph,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    if n == 0 {
        return ControlFlow::Continue(());
    }
    if n == 1 {
        return f(&[]);
    }
    fn go(
        g: &ColoredGraph,
        start: usize,
        v: usize,
        visited: &mut [bool],
        depth: usize,
        ids: &mut Vec<usize>,
        scratch: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if depth == g.n() {
            if start < v {
                scratch.clear();
                scratch.extend_from_slice(ids);
                scratch.sort_unstable();
                return f(scratch);
            }
            return ControlFlow::Continue(());
        }
        for &(w, id) in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            ids.push(id);
            let flow = go(g, start, w, visited, depth + 1, ids, scratch, f);
            ids.pop();
            visited[w] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
    let mut visited = vec![false; n];
    let mut ids = Vec::with_capacity(n);
    let mut scratch = Vec::with_capacity(n);
    for start in 0..n {
        visited[start] = true;
        go(g, start, start, &mut visited, 1, &mut ids, &mut scratch, &mut f)?;
        visited[start] = false;
    }
    ControlFlow::Continue(())
}

/// Every perfect matching once: the lowest unmatched vertex is paired with
/// each free neighbour in turn. Edge ids are passed sorted.
pub fn for_each_perfect_matching(
    g: &ColoredGraph,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go(
        g: &ColoredGraph,
        matched: &mut [bool],
        ids: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some(a) = matched.iter().position(|&m| !m) else {
            // the lowest free vertex increases, so ids arrive sorted
            return f(ids);
        };
        matched[a] = true;
        for &(b, id) in g.neighbors(a) {
            if matched[b] {
                continue;
            }
            matched[b] = true;
            ids.push(id);
            let flow = go(g, matched, ids, f);
            ids.pop();
            matched[b] = false;
            if flow.is_break() {
                matched[a] = false;
                return flow;
            }
        }
        matched[a] = false;
        ControlFlow::Continue(())
    }
    if g.n() % 2 == 1 {
        return ControlFlow::Continue(());
    }
    let mut matched = vec![false; g.n()];
    go(g, &mut matched, &mut Vec::with_capacity(g.n() / 2), &mut f)
}

/// Stars and double stars of a complete host.
pub fn for_each_diam3_tree(
    g: &ColoredGraph,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let n = g.n();
    if !g.is_complete() {
        return Err(Error::precondition("diameter-3 trees are enumerated in complete hosts"));
    }
    let id = |a: usize, b: usize| g.edge_id(a, b).expect("complete");
    let mut ids = Vec::with_capacity(n);
    let mut emit = |ids: &mut Vec<usize>| {
        ids.sort_unstable();
        f(ids)
    };
    match n {
        0 => return Ok(ControlFlow::Continue(())),
        1 => return Ok(emit(&mut ids)),
        2 => {
            ids.push(0);
            return Ok(emit(&mut ids));
        }
        _ => {}
    }
    for c in 0..n {
        ids.clear();
        ids.extend((0..n).filter(|&v| v != c).map(|v| id(c, v)));
        if emit(&mut ids).is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            let full = (1u64 << rest.len()) - 1;
            for side in 1..full {
                ids.clear();
                ids.push(id(a, b));
                for (i, &v) in rest.iter().enumerate() {
                    ids.push(if side >> i & 1 == 1 { id(b, v) } else { id(a, v) });
                }
                if emit(&mut ids).is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Budget-checked visit of every member of `kind` in `g`.
pub fn for_each_member(
    g: &ColoredGraph,
    kind: FamilyKind,
    budget: &EnumerationBudget,
    f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let size = family_size(g, kind);
    match kind {
        FamilyKind::SpanningTrees => {
            EnumerationBudget::check(size, budget.max_spanning_trees, "spanning trees")?;
            Ok(for_each_spanning_tree(g, f))
        }
        FamilyKind::HamiltonianPaths => {
            if !g.is_complete() {
                return Err(Error::precondition("Hamiltonian paths are enumerated in complete hosts"));
            }
            EnumerationBudget::check(size, budget.max_paths, "Hamiltonian paths")?;
            Ok(for_each_hamiltonian_path(g, f))
        }
        FamilyKind::Diam3Trees => {
            EnumerationBudget::check(size, budget.max_spanning_trees, "diameter-3 trees")?;
            for_each_diam3_tree(g, f)
        }
    }
}

pub fn enumerate_family<'g>(
    g: &'g ColoredGraph,
    kind: FamilyKind,
    budget: &EnumerationBudget,
) -> Result<Vec<EdgeSubgraph<'g>>> {
    let mut out = Vec::new();
    let _ = for_each_member(g, kind, budget, |ids| {
        out.push(EdgeSubgraph::from_sorted_unchecked(g, ids.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_family(g: &ColoredGraph, kind: FamilyKind, budget: &EnumerationBudget) -> Result<u128> {
    let mut count = 0u128;
    let _ = for_each_member(g, kind, budget, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

pub fn enumerate_perfect_matchings<'g>(
    g: &'g ColoredGraph,
    budget: &EnumerationBudget,
) -> Result<Vec<EdgeSubgraph<'g>>> {
    EnumerationBudget::check(matching_bound(g), budget.max_matchings, "perfect matchings")?;
    let mut out = Vec::new();
    let _ = for_each_perfect_matching(g, |ids| {
        out.push(EdgeSubgraph::from_sorted_unchecked(g, ids.to_vec()));
        ControlFlow::Continue(())
    });
    Ok(out)
}

fn matching_bound(g: &ColoredGraph) -> u128 {
    if g.n() % 2 == 1 {
        0
    } else {
        double_factorial_odd(g.n())
    }
}

/// Counts perfect matchings and the zero-sum ones among them.
pub fn perfect_matching_census(g: &ColoredGraph, budget: &EnumerationBudget) -> Result<(u128, u128)> {
    EnumerationBudget::check(matching_bound(g), budget.max_matchings, "perfect matchings")?;
    let (mut total, mut zero) = (0u128, 0u128);
    let _ = for_each_perfect_matching(g, |ids| {
        total += 1;
        if ids.iter().map(|&id| g.sign(id).value()).sum::<i64>() == 0 {
            zero += 1;
        }
        ControlFlow::Continue(())
    });
    Ok((total, zero))
}

/// Members of `kind` in `K_n` as bitmasks over canonical edge ids.
pub fn family_masks(n: usize, kind: FamilyKind, budget: &EnumerationBudget) -> Result<Vec<u64>> {
    if binom2(n) > 64 {
        return Err(Error::domain(format!("K_{n} has more than 64 edges")));
    }
    let g = ColoredGraph::complete(n, |_| Sign::Plus);
    host_family_masks(&g, kind, budget)
}

fn host_family_masks(g: &ColoredGraph, kind: FamilyKind, budget: &EnumerationBudget) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let _ = for_each_member(g, kind, budget, |ids| {
        out.push(ids.iter().fold(0u64, |m, &id| m | 1 << id));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// All `x`-`y` paths of length 2 and 4 through distinct vertices of `g`.
pub fn short_paths(g: &ColoredGraph, x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut walk = vec![x];
    fn go(g: &ColoredGraph, y: usize, walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *walk.last().expect("non-empty");
        let len = walk.len() - 1;
        for &(w, _) in g.neighbors(v) {
            if walk.contains(&w) {
                continue;
            }
            if w == y {
                if len + 1 == 2 || len + 1 == 4 {
                    let mut p = walk.clone();
                    p.push(y);
                    out.push(p);
                }
            } else if len + 1 < 4 {
                walk.push(w);
                go(g, y, walk, out);
                walk.pop();
            }
        }
    }
    go(g, y, &mut walk, &mut out);
    out
}

pub fn path_weight(g: &ColoredGraph, walk: &[usize]) -> i64 {
    walk.windows(2)
        .map(|p| g.sign_between(p[0], p[1]).expect("edge").value())
        .sum()
}

/// Some zero-sum `x`-`y` path of length 2 or 4, by brute force.
pub fn zero_sum_short_path(g: &ColoredGraph, x: usize, y: usize) -> Option<Vec<usize>> {
    short_paths(g, x, y).into_iter().find(|p| path_weight(g, p) == 0)
}

/// Brute-force search for `k` edges of `sign` forming a forest, or a linear
/// forest when `linear` is set. Both properties are closed under taking
/// subsets, so partial selections that violate them are pruned.
pub fn has_monochromatic_forest(g: &ColoredGraph, sign: Sign, k: usize, linear: bool) -> bool {
    let class: Vec<Edge> = g.sign_class(sign).into_iter().map(|id| g.edge(id)).collect();
    fn ok(n: usize, chosen: &[Edge], linear: bool) -> bool {
        let mut dsu = crate::dsu::Dsu::new(n);
        let mut deg = vec![0u8; n];
        for e in chosen {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
            if !dsu.union(e.u(), e.v()) || (linear && (deg[e.u()] > 2 || deg[e.v()] > 2)) {
                return false;
            }
        }
        true
    }
    fn go(n: usize, class: &[Edge], from: usize, k: usize, chosen: &mut Vec<Edge>, linear: bool) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in from..class.len() {
            if class.len() - i < k - chosen.len() {
                return false;
            }
            chosen.push(class[i]);
            if ok(n, chosen, linear) && go(n, class, i + 1, k, chosen, linear) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(g.n(), &class, 0, k, &mut Vec::with_capacity(k), linear)
}

/// Theorems with an exhaustive small-order check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// Complete host, `min > C(floor((n-1)/2), 2)`.
    SpanningTree,
    /// Complete host, `n >= 6`, `min >= ceil((n+1)/2)`; every pair.
    Connectivity,
    /// Complete host, `min > floor(n/2 * floor((n-3)/2))`.
    Diam3,
    /// Complete host, `min` above the linear-forest Turán number.
    SpanningPathCensus,
    /// Complete host, `|f|` below the decomposition bound.
    SpanningPathDecomposition,
    /// Balanced complete bipartite host on `n` vertices.
    BipartiteTree,
    /// Sliding-window `d`-tree host.
    DegenerateTree(usize),
    /// Stacked triangulation host.
    PlanarTree,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremId::SpanningTree => f.write_str("tree"),
            TheoremId::Connectivity => f.write_str("connected"),
            TheoremId::Diam3 => f.write_str("diam3"),
            TheoremId::SpanningPathCensus => f.write_str("path"),
            TheoremId::SpanningPathDecomposition => f.write_str("path-decomposition"),
            TheoremId::BipartiteTree => f.write_str("bipartite-tree"),
            TheoremId::DegenerateTree(d) => write!(f, "{d}-tree"),
            TheoremId::PlanarTree => f.write_str("planar-tree"),
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tree" => TheoremId::SpanningTree,
            "connected" | "connectivity" => TheoremId::Connectivity,
            "diam3" => TheoremId::Diam3,
            "path" => TheoremId::SpanningPathCensus,
            "path-decomposition" => TheoremId::SpanningPathDecomposition,
            "bipartite-tree" => TheoremId::BipartiteTree,
            "planar-tree" => TheoremId::PlanarTree,
            other => match other.strip_suffix("-tree").map(str::parse::<usize>) {
                Some(Ok(d)) if d >= 1 => TheoremId::DegenerateTree(d),
                _ => return Err(Error::input(format!("unknown theorem `{other}`"))),
            },
        })
    }
}

impl TheoremId {
    pub const COMPLETE_HOST: [TheoremId; 5] = [
        TheoremId::SpanningTree,
        TheoremId::Connectivity,
        TheoremId::Diam3,
        TheoremId::SpanningPathCensus,
        TheoremId::SpanningPathDecomposition,
    ];

    /// The uncoloured host whose colourings the theorem quantifies over.
    pub fn host(self, n: usize) -> Result<ColoredGraph> {
        let min_n = match self {
            TheoremId::Connectivity => 6,
            TheoremId::PlanarTree => 7,
            TheoremId::DegenerateTree(d) => 2 * d + 2,
            TheoremId::BipartiteTree => 2,
            _ => 3,
        };
        if n < min_n {
            return Err(Error::domain(format!("{self} is stated for n >= {min_n}, got {n}")));
        }
        let g = match self {
            TheoremId::BipartiteTree => balanced_bipartite_host(n),
            TheoremId::DegenerateTree(d) => d_tree_host(n, d)?,
            TheoremId::PlanarTree => stacked_planar_host(n)?,
            _ => ColoredGraph::complete(n, |_| Sign::Plus),
        };
        if g.edge_count() > 63 {
            return Err(Error::domain(format!(
                "{self} host on {n} vertices has {} > 63 edges",
                g.edge_count()
            )));
        }
        Ok(g)
    }

    fn family(self) -> FamilyKind {
        match self {
            TheoremId::Diam3 => FamilyKind::Diam3Trees,
            TheoremId::SpanningPathCensus | TheoremId::SpanningPathDecomposition => {
                FamilyKind::HamiltonianPaths
            }
            _ => FamilyKind::SpanningTrees,
        }
    }

    /// Whether colouring `g` satisfies the theorem's hypothesis.
    pub fn hypothesis(self, g: &ColoredGraph) -> bool {
        let n = g.n();
        let min = g.census().min();
        match self {
            TheoremId::SpanningTree => min > spanning_tree_threshold(n),
            TheoremId::Connectivity => min >= connectivity_threshold(n),
            TheoremId::Diam3 => diam3_threshold(n).is_ok_and(|b| min > b),
            TheoremId::SpanningPathCensus => spanning_path_threshold(n).is_ok_and(|b| min > b),
            TheoremId::SpanningPathDecomposition => {
                master_verdict(g, FamilyKind::HamiltonianPaths).is_ok_and(|v| {
                    v.condition2.or(v.condition3).is_some_and(|c| c.holds)
                })
            }
            TheoremId::BipartiteTree => {
                let h = n / 2;
                g.edge_count() >= h * h / 2 + 2 && min > h * h / 4
            }
            TheoremId::DegenerateTree(d) => {
                let k = (n - 1) / 2;
                min > k * d - binom2(d + 1)
            }
            TheoremId::PlanarTree => min >= 3 * ((n - 1) / 2) - 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub mask: u64,
    pub reason: String,
    /// The colouring in edge-list format.
    pub edge_list: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub host_edges: usize,
    /// Half-open mask range covered; `None` for sampled runs.
    pub range: Option<(u64, u64)>,
    pub colorings: u64,
    pub hypothesis_met: u64,
    pub verified: u64,
    pub counterexamples: u64,
    /// The first few counterexamples by mask.
    pub examples: Vec<Counterexample>,
    /// Whether every conclusion was also confirmed by enumeration.
    pub oracle_checked: bool,
}

const MAX_EXAMPLES: usize = 8;

impl TheoremReport {
    fn empty(theorem: TheoremId, n: usize, host_edges: usize, oracle_checked: bool) -> Self {
        TheoremReport {
            theorem,
            n,
            host_edges,
            range: None,
            colorings: 0,
            hypothesis_met: 0,
            verified: 0,
            counterexamples: 0,
            examples: Vec::new(),
            oracle_checked,
        }
    }

    /// Combines reports of disjoint shards. Adjacent ranges are joined;
    /// otherwise the range is dropped.
    pub fn merge(mut self, other: TheoremReport) -> Result<TheoremReport> {
        if (self.theorem, self.n) != (other.theorem, other.n) {
            return Err(Error::input("cannot merge reports of different runs"));
        }
        self.range = match (self.range, other.range) {
            (Some((a, b)), Some((c, d))) if b == c => Some((a, d)),
            (Some((a, b)), Some((c, d))) if d == a => Some((c, b)),
            _ => None,
        };
        self.colorings += other.colorings;
        self.hypothesis_met += other.hypothesis_met;
        self.verified += other.verified;
        self.counterexamples += other.counterexamples;
        self.oracle_checked &= other.oracle_checked;
        self.examples.extend(other.examples);
        self.examples.sort_by_key(|c| c.mask);
        self.examples.truncate(MAX_EXAMPLES);
        Ok(self)
    }

    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

/// Precomputed ground truth shared by all colourings of one run.
struct Context {
    theorem: TheoremId,
    host: ColoredGraph,
    /// Family members as masks; `None` when over budget (sampling only).
    members: Option<Vec<u64>>,
    /// For connectivity: per pair, short path masks.
    pairs: Vec<(usize, usize, Vec<u64>)>,
}

impl Context {
    fn new(theorem: TheoremId, n: usize, budget: &EnumerationBudget, require_oracle: bool) -> Result<Self> {
        let host = theorem.host(n)?;
        let mut members = None;
        let mut pairs = Vec::new();
        if theorem == TheoremId::Connectivity {
            for x in 0..n {
                for y in x + 1..n {
                    let masks = short_paths(&host, x, y)
                        .iter()
                        .map(|p| {
                            p.windows(2).fold(0u64, |m, w| {
                                m | 1 << host.edge_id(w[0], w[1]).expect("edge")
                            })
                        })
                        .collect();
                    pairs.push((x, y, masks));
                }
            }
        } else {
            match host_family_masks(&host, theorem.family(), budget) {
                Ok(m) => members = Some(m),
                Err(e) if require_oracle => return Err(e),
                Err(_) => {}
            }
        }
        Ok(Context {
            theorem,
            host,
            members,
            pairs,
        })
    }

    fn oracle_checked(&self) -> bool {
        self.theorem == TheoremId::Connectivity || self.members.is_some()
    }

    /// `Ok(true)` if the hypothesis held and the conclusion was confirmed,
    /// `Ok(false)` if the hypothesis failed, `Err` with the reason otherwise.
    fn check(&self, g: &mut ColoredGraph, mask: u64) -> std::result::Result<bool, String> {
        g.set_signs_from_mask(mask);
        if !self.theorem.hypothesis(g) {
            return Ok(false);
        }
        let n = g.n();
        if self.theorem == TheoremId::Connectivity {
            for (x, y, masks) in &self.pairs {
                let exists = masks
                    .iter()
                    .any(|&p| 2 * (p & mask).count_ones() == p.count_ones());
                if !exists {
                    return Err(format!("oracle: no zero-sum path of length <= 4 between {x} and {y}"));
                }
                let report = find_zero_sum_path_leq4(g, *x, *y).map_err(|e| e.to_string())?;
                validate_report(g, &report, None).map_err(|e| format!("finder, pair {x} {y}: {e}"))?;
            }
            return Ok(true);
        }
        if let Some(members) = &self.members {
            let m = n as u32 - 1;
            if !members
                .iter()
                .any(|&t| (m as i64 - 2 * (t & mask).count_ones() as i64).abs() <= 1)
            {
                return Err(format!("oracle: no {} of weight in {{-1,0,1}}", self.theorem.family()));
            }
        }
        let report = match self.theorem {
            TheoremId::SpanningTree => find_zero_sum_spanning_tree(g, HostClass::Complete),
            TheoremId::BipartiteTree => find_zero_sum_spanning_tree(g, HostClass::TriangleFree),
            TheoremId::DegenerateTree(d) => find_zero_sum_spanning_tree(g, HostClass::DTree(d)),
            TheoremId::PlanarTree => find_zero_sum_spanning_tree(g, HostClass::MaximalPlanarStacked),
            TheoremId::Diam3 => find_zero_sum_diam3_tree(g),
            TheoremId::SpanningPathCensus | TheoremId::SpanningPathDecomposition => {
                find_zero_sum_spanning_path(g)
            }
            TheoremId::Connectivity => unreachable!(),
        };
        validate_report(g, &report, Some(self.theorem.family())).map_err(|e| format!("finder: {e}"))?;
        if self.theorem == TheoremId::SpanningPathDecomposition
            && !report.certificate.starts_with("decomposition route")
        {
            return Err(format!("finder left the decomposition route: {}", report.certificate));
        }
        Ok(true)
    }

    fn fold(&self, report: &mut TheoremReport, g: &mut ColoredGraph, mask: u64) {
        report.colorings += 1;
        match self.check(g, mask) {
            Ok(false) => {}
            Ok(true) => {
                report.hypothesis_met += 1;
                report.verified += 1;
            }
            Err(reason) => {
                report.hypothesis_met += 1;
                report.counterexamples += 1;
                if report.examples.len() < MAX_EXAMPLES {
                    report.examples.push(Counterexample {
                        mask,
                        reason,
                        edge_list: write_edge_list(g, &[]),
                    });
                }
            }
        }
    }
}

/// Re-checks a finder's report against the host from scratch.
pub fn validate_report(
    g: &ColoredGraph,
    report: &FindReport,
    family: Option<FamilyKind>,
) -> std::result::Result<(), String> {
    if !report.found {
        return Err(format!("not found: {}", report.certificate));
    }
    let h = report.subgraph(g).map_err(|e| e.to_string())?;
    if h.weight() != report.weight {
        return Err(format!("reported weight {} but edges sum to {}", report.weight, h.weight()));
    }
    if (h.weight() - h.edge_count() as i64).rem_euclid(2) != 0 {
        return Err("parity law violated".into());
    }
    match family {
        Some(kind) => {
            if !kind.contains(&h) {
                return Err(format!("result is not in {kind}"));
            }
            if h.weight().abs() > 1 {
                return Err(format!("weight {} is not in {{-1,0,1}}", h.weight()));
            }
        }
        None => {
            if h.weight() != 0 {
                return Err(format!("weight {} is not zero", h.weight()));
            }
        }
    }
    Ok(())
}

/// Checks every colouring with mask in `range` (all of them when `None`).
///
/// For colourings meeting the hypothesis, both the finder and an
/// independent enumeration must produce a qualifying subgraph.
pub fn exhaustive_theorem_check(
    theorem: TheoremId,
    n: usize,
    range: Option<(u64, u64)>,
    budget: &EnumerationBudget,
) -> Result<TheoremReport> {
    let ctx = Context::new(theorem, n, budget, true)?;
    let m = ctx.host.edge_count();
    let space = 1u64 << m;
    let (start, end) = range.unwrap_or((0, space));
    if start > end || end > space {
        return Err(Error::input(format!("shard {start}..{end} is outside 0..{space}")));
    }
    EnumerationBudget::check((end - start) as u128, budget.max_colorings, "colourings")?;

    const CHUNK: u64 = 1 << 12;
    let chunks: Vec<u64> = (start..end).step_by(CHUNK as usize).collect();
    let empty = || TheoremReport::empty(theorem, n, m, true);
    let mut report = chunks
        .into_par_iter()
        .map(|lo| {
            let mut r = empty();
            let mut g = ctx.host.clone();
            for mask in lo..(lo + CHUNK).min(end) {
                ctx.fold(&mut r, &mut g, mask);
            }
            r
        })
        .reduce(empty, |a, b| a.merge(b).expect("same run"));
    report.range = Some((start, end));
    Ok(report)
}

/// Checks `samples` uniformly random colourings. The enumeration oracle is
/// used when the family fits the budget; the finder's output is always
/// re-validated.
pub fn sampled_theorem_check<R: Rng + ?Sized>(
    theorem: TheoremId,
    n: usize,
    samples: u64,
    rng: &mut R,
    budget: &EnumerationBudget,
) -> Result<TheoremReport> {
    let ctx = Context::new(theorem, n, budget, false)?;
    let m = ctx.host.edge_count();
    let mut report = TheoremReport::empty(theorem, n, m, ctx.oracle_checked());
    let mut g = ctx.host.clone();
    for _ in 0..samples {
        let mask = rng.gen::<u64>() & ((1u64 << m) - 1);
        ctx.fold(&mut report, &mut g, mask);
    }
    report.examples.sort_by_key(|c| c.mask);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> ColoredGraph {
        ColoredGraph::complete(n, |_| Sign::Plus)
    }

    #[test]
    fn kirchhoff_matches_cayley() {
        for n in 1..=12usize {
            assert_eq!(spanning_tree_count(&k(n)), (n as u128).pow(n.saturating_sub(2) as u32));
        }
        let cycle = ColoredGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5, Sign::Plus))).unwrap();
        assert_eq!(spanning_tree_count(&cycle), 5);
    }

    #[test]
    fn small_family_counts() {
        let b = EnumerationBudget::default();
        assert_eq!(count_family(&k(4), FamilyKind::SpanningTrees, &b).unwrap(), 16);
        assert_eq!(count_family(&k(4), FamilyKind::HamiltonianPaths, &b).unwrap(), 12);
        assert_eq!(count_family(&k(4), FamilyKind::Diam3Trees, &b).unwrap(), 16);
        assert_eq!(enumerate_perfect_matchings(&k(6), &b).unwrap().len(), 15);
    }

    #[test]
    fn budget_is_refused() {
        let b = EnumerationBudget::default();
        let err = count_family(&k(9), FamilyKind::SpanningTrees, &b).unwrap_err();
        assert!(err.to_string().starts_with("unverifiable at this size"));
    }

    #[test]
    fn short_path_counts() {
        // 4 length-2 paths and 4*3*2 length-4 paths in K_6
        assert_eq!(short_paths(&k(6), 0, 1).len(), 4 + 24);
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in [
            TheoremId::SpanningTree,
            TheoremId::Connectivity,
            TheoremId::Diam3,
            TheoremId::SpanningPathCensus,
            TheoremId::SpanningPathDecomposition,
            TheoremId::BipartiteTree,
            TheoremId::DegenerateTree(2),
            TheoremId::PlanarTree,
        ] {
            assert_eq!(t.to_string().parse::<TheoremId>().unwrap(), t);
        }
    }

    #[test]
    fn tree_theorem_n5() {
        let r = exhaustive_theorem_check(TheoremId::SpanningTree, 5, None, &EnumerationBudget::default())
            .unwrap();
        assert_eq!(r.colorings, 1024);
        assert!(r.passed(), "{:?}", r.examples);
        assert!(r.hypothesis_met > 0);
    }

    #[test]
    fn shards_merge() {
        let b = EnumerationBudget::default();
        let a = exhaustive_theorem_check(TheoremId::Diam3, 5, Some((0, 300)), &b).unwrap();
        let c = exhaustive_theorem_check(TheoremId::Diam3, 5, Some((300, 1024)), &b).unwrap();
        let whole = exhaustive_theorem_check(TheoremId::Diam3, 5, None, &b).unwrap();
        assert_eq!(a.merge(c).unwrap(), whole);
    }
}
