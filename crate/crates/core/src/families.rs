//! Closed families of spanning subgraphs and edge-replacement chains.
//!
//! A chain is stored as its first member plus the list of single-edge
//! swaps; members are materialised on demand. Every constructor here
//! returns a chain whose members all belong to the family, which
//! [`ExchangeChain::validate`] re-checks from scratch.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, EdgeSubgraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// Spanning trees of any connected host.
    SpanningTrees,
    /// Hamiltonian paths of a complete host.
    HamiltonianPaths,
    /// Spanning trees of diameter at most 3 of a complete host.
    Diam3Trees,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::SpanningTrees => "spanning trees",
            FamilyKind::HamiltonianPaths => "Hamiltonian paths",
            FamilyKind::Diam3Trees => "spanning trees of diameter <= 3",
        })
    }
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::SpanningTrees,
        FamilyKind::HamiltonianPaths,
        FamilyKind::Diam3Trees,
    ];

    /// Membership predicate. The complete-host requirement is part of it.
    pub fn contains(self, h: &EdgeSubgraph<'_>) -> bool {
        match self {
            FamilyKind::SpanningTrees => h.is_spanning_tree(),
            FamilyKind::HamiltonianPaths => h.host().is_complete() && h.is_hamiltonian_path(),
            FamilyKind::Diam3Trees => {
                h.host().is_complete() && h.tree_diameter().is_ok_and(|d| d <= 3)
            }
        }
    }

    /// Every member of every family has `n - 1` edges.
    pub fn member_edge_count(self, n: usize) -> usize {
        n.saturating_sub(1)
    }

    pub fn exchange_chain<'g>(
        self,
        from: &EdgeSubgraph<'g>,
        to: &EdgeSubgraph<'g>,
    ) -> Result<ExchangeChain<'g>> {
        match self {
            FamilyKind::SpanningTrees => tree_exchange_chain(from, to),
            FamilyKind::HamiltonianPaths => hampath_exchange_chain(from, to),
            FamilyKind::Diam3Trees => diam3_exchange_chain(from, to),
        }
    }
}

/// Swap `removed` out and `added` in (host edge ids).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Replacement {
    pub removed: usize,
    pub added: usize,
}

#[derive(Clone, Debug)]
pub struct ExchangeChain<'g> {
    start: EdgeSubgraph<'g>,
    swaps: Vec<Replacement>,
}

impl<'g> ExchangeChain<'g> {
    pub fn trivial(start: EdgeSubgraph<'g>) -> Self {
        ExchangeChain {
            start,
            swaps: Vec::new(),
        }
    }

    pub fn start(&self) -> &EdgeSubgraph<'g> {
        &self.start
    }

    pub fn swaps(&self) -> &[Replacement] {
        &self.swaps
    }

    /// Number of edge replacements.
    pub fn replacements(&self) -> usize {
        self.swaps.len()
    }

    /// Number of members, `replacements() + 1`.
    pub fn len(&self) -> usize {
        self.swaps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Weights of all members, computed from the swapped edges only.
    pub fn weights(&self) -> Vec<i64> {
        let host = self.start.host();
        let mut w = self.start.weight();
        let mut out = Vec::with_capacity(self.len());
        out.push(w);
        for s in &self.swaps {
            w += host.sign(s.added).value() - host.sign(s.removed).value();
            out.push(w);
        }
        out
    }

    /// Member `i`, `0 <= i <= replacements()`.
    pub fn member(&self, i: usize) -> EdgeSubgraph<'g> {
        let mut ids = self.start.edge_ids().to_vec();
        for s in &self.swaps[..i] {
            let pos = ids.iter().position(|&x| x == s.removed).expect("swap removes a member edge");
            ids[pos] = s.added;
        }
        ids.sort_unstable();
        EdgeSubgraph::from_sorted_unchecked(self.start.host(), ids)
    }

    pub fn members(&self) -> impl Iterator<Item = EdgeSubgraph<'g>> + '_ {
        let mut cur = Some(self.start.clone());
        let mut next_swap = 0;
        std::iter::from_fn(move || {
            let out = cur.take()?;
            if let Some(s) = self.swaps.get(next_swap) {
                next_swap += 1;
                cur = Some(out.replaced(s.removed, s.added).expect("valid swap"));
            }
            Some(out)
        })
    }

    pub fn last(&self) -> EdgeSubgraph<'g> {
        self.member(self.swaps.len())
    }

    /// Re-checks every chain invariant: family membership of every member,
    /// single-edge symmetric differences and weight steps in {-2, 0, 2}.
    pub fn validate(&self, kind: FamilyKind) -> Result<()> {
        let host = self.start.host();
        let m = kind.member_edge_count(host.n());
        let mut prev: Option<EdgeSubgraph<'_>> = None;
        for (i, h) in self.members().enumerate() {
            if !kind.contains(&h) {
                return Err(Error::precondition(format!("chain member {i} is not in {kind}")));
            }
            if h.edge_count() != m {
                return Err(Error::precondition(format!("chain member {i} has wrong size")));
            }
            if (h.weight() - m as i64).rem_euclid(2) != 0 {
                return Err(Error::precondition(format!("chain member {i} breaks parity")));
            }
            if let Some(p) = &prev {
                let gone = p.edge_ids().iter().filter(|&&e| !h.contains(e)).count();
                let came = h.edge_ids().iter().filter(|&&e| !p.contains(e)).count();
                if gone != 1 || came != 1 {
                    return Err(Error::precondition(format!(
                        "members {} and {i} are not one replacement apart",
                        i - 1
                    )));
                }
                if (p.weight() - h.weight()).abs() > 2 {
                    return Err(Error::precondition(format!("weight jump at member {i}")));
                }
            }
            prev = Some(h);
        }
        Ok(())
    }
}

fn same_host(a: &EdgeSubgraph<'_>, b: &EdgeSubgraph<'_>) -> Result<()> {
    if std::ptr::eq(a.host(), b.host()) {
        Ok(())
    } else {
        Err(Error::precondition("subgraphs live in different hosts"))
    }
}

/// Matroid basis exchange between two spanning trees.
///
/// Repeatedly removes the smallest edge of `T \ T'` and adds the smallest
/// edge of `T'` reconnecting the two sides, so exactly `|T \ T'|`
/// replacements are made.
pub fn tree_exchange_chain<'g>(
    from: &EdgeSubgraph<'g>,
    to: &EdgeSubgraph<'g>,
) -> Result<ExchangeChain<'g>> {
    same_host(from, to)?;
    if !from.is_spanning_tree() || !to.is_spanning_tree() {
        return Err(Error::precondition("tree exchange needs two spanning trees"));
    }
    let host = from.host();
    let n = host.n();
    let mut cur: Vec<usize> = from.edge_ids().to_vec();
    let mut swaps = Vec::new();
    loop {
        let Some(&out) = cur.iter().find(|&&e| !to.contains(e)) else {
            break;
        };
        // side of the cut containing one endpoint of `out`
        let mut adj = vec![Vec::new(); n];
        for &id in cur.iter().filter(|&&id| id != out) {
            let e = host.edge(id);
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        let mut side = vec![false; n];
        let root = host.edge(out).u();
        side[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !side[y] {
                    side[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let added = to
            .edge_ids()
            .iter()
            .copied()
            .find(|&id| {
                let e = host.edge(id);
                side[e.u()] != side[e.v()]
            })
            .expect("a spanning tree crosses every cut");
        let pos = cur.iter().position(|&x| x == out).expect("present");
        cur[pos] = added;
        cur.sort_unstable();
        swaps.push(Replacement { removed: out, added });
    }
    Ok(ExchangeChain {
        start: from.clone(),
        swaps,
    })
}

fn require_complete(host: &ColoredGraph) -> Result<()> {
    if host.is_complete() {
        Ok(())
    } else {
        Err(Error::precondition("this chain needs a complete host"))
    }
}

/// Hamiltonian-path chain in a complete host by growing a matched prefix
/// of the target vertex order.
///
/// With the prefix `t[0..i]` in place and `v = t[i]` further along, `v`
/// is first made the free end (cut the edge before it, reattach the
/// severed tail reversed), then the edge after the prefix is exchanged
/// for the edge from the prefix to `v`. Both target orientations are
/// tried and the shorter chain is kept; at most `2n - 3` replacements.
pub fn hampath_exchange_chain<'g>(
    from: &EdgeSubgraph<'g>,
    to: &EdgeSubgraph<'g>,
) -> Result<ExchangeChain<'g>> {
    same_host(from, to)?;
    let host = from.host();
    require_complete(host)?;
    let (Some(source), Some(target)) = (from.path_order(), to.path_order()) else {
        return Err(Error::precondition("path exchange needs two Hamiltonian paths"));
    };
    let forward = prefix_growing_swaps(host, &source, &target);
    let reversed: Vec<usize> = target.iter().rev().copied().collect();
    let backward = prefix_growing_swaps(host, &source, &reversed);
    let swaps = if backward.len() < forward.len() {
        backward
    } else {
        forward
    };
    Ok(ExchangeChain {
        start: from.clone(),
        swaps,
    })
}

fn prefix_growing_swaps(host: &ColoredGraph, source: &[usize], target: &[usize]) -> Vec<Replacement> {
    let n = source.len();
    let id = |a: usize, b: usize| host.edge_id(a, b).expect("complete host");
    let mut path = source.to_vec();
    let mut swaps = Vec::new();
    if n < 2 {
        return swaps;
    }
    // bring t[0] to the front
    let j = path.iter().position(|&x| x == target[0]).expect("same vertex set");
    if j == n - 1 {
        path.reverse();
    } else if j != 0 {
        swaps.push(Replacement {
            removed: id(path[j - 1], path[j]),
            added: id(path[n - 1], path[0]),
        });
        path.rotate_left(j);
    }
    for i in 1..n - 1 {
        let v = target[i];
        let j = path.iter().position(|&x| x == v).expect("same vertex set");
        debug_assert!(j >= i);
        if j == i {
            continue;
        }
        if j < n - 1 {
            // detach: p[..j] + reversed p[j..]
            swaps.push(Replacement {
                removed: id(path[j - 1], path[j]),
                added: id(path[j - 1], path[n - 1]),
            });
            path[j..].reverse();
        }
        // v is now the last vertex; splice it after the prefix
        swaps.push(Replacement {
            removed: id(path[i - 1], path[i]),
            added: id(path[i - 1], path[n - 1]),
        });
        path[i..].reverse();
        debug_assert_eq!(path[i], v);
    }
    swaps
}

/// Structure of a spanning tree of diameter at most 3: every non-centre
/// vertex hangs off one of at most two adjacent centres.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Diam3Shape {
    centres: Vec<usize>,
    /// `attach[z]` is the centre `z` hangs from, `usize::MAX` for centres.
    attach: Vec<usize>,
}

impl Diam3Shape {
    fn of(h: &EdgeSubgraph<'_>) -> Option<Diam3Shape> {
        let n = h.host().n();
        if h.tree_diameter().ok()? > 3 {
            return None;
        }
        let deg = h.degrees();
        let mut centres: Vec<usize> = (0..n).filter(|&v| deg[v] >= 2).collect();
        if centres.is_empty() {
            // n <= 2: a single edge or a single vertex
            centres.push(0);
        }
        let mut attach = vec![usize::MAX; n];
        for e in h.edges() {
            let (a, b) = (e.u(), e.v());
            match (centres.contains(&a), centres.contains(&b)) {
                (true, false) => attach[b] = a,
                (false, true) => attach[a] = b,
                _ => {}
            }
        }
        Some(Diam3Shape { centres, attach })
    }

    /// Leaves hanging from `c`, other than `except`.
    fn leaves_of(&self, c: usize, except: usize) -> Vec<usize> {
        (0..self.attach.len())
            .filter(|&z| self.attach[z] == c && z != except)
            .collect()
    }
}

/// Chain between spanning trees of diameter <= 3 of `K_n` made of leaf
/// migrations: collapse the source onto one of its centres, move the star
/// to a centre of the target, then expand into the target. The cheapest
/// choice of centres is taken, which never exceeds `2(n - 2)` replacements.
pub fn diam3_exchange_chain<'g>(
    from: &EdgeSubgraph<'g>,
    to: &EdgeSubgraph<'g>,
) -> Result<ExchangeChain<'g>> {
    same_host(from, to)?;
    let host = from.host();
    require_complete(host)?;
    let (Some(src), Some(dst)) = (Diam3Shape::of(from), Diam3Shape::of(to)) else {
        return Err(Error::precondition(
            "diameter-3 exchange needs two spanning trees of diameter at most 3",
        ));
    };
    if from == to {
        return Ok(ExchangeChain::trivial(from.clone()));
    }
    let n = host.n();
    let id = |a: usize, b: usize| host.edge_id(a, b).expect("complete host");
    let migrate = |z: usize, old: usize, new: usize| Replacement {
        removed: id(z, old),
        added: id(z, new),
    };

    let mut best: Option<Vec<Replacement>> = None;
    let mut consider = |swaps: Vec<Replacement>| {
        if best.as_ref().is_none_or(|b| swaps.len() < b.len()) {
            best = Some(swaps);
        }
    };

    // Same two centres on both sides: move only the misplaced leaves.
    if src.centres.len() == 2 && dst.centres.len() == 2 {
        let (mut a, mut b) = (src.centres.clone(), dst.centres.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a == b {
            let swaps = (0..n)
                .filter(|&z| src.attach[z] != dst.attach[z])
                .map(|z| migrate(z, src.attach[z], dst.attach[z]))
                .collect();
            consider(swaps);
        }
    }

    for &cs in &src.centres {
        for &ct in &dst.centres {
            let mut swaps = Vec::new();
            // collapse onto cs
            if let Some(&other) = src.centres.iter().find(|&&c| c != cs) {
                for z in src.leaves_of(other, cs) {
                    swaps.push(migrate(z, other, cs));
                }
            }
            // relocate the star from cs to ct
            if cs != ct {
                for z in (0..n).filter(|&z| z != cs && z != ct) {
                    swaps.push(migrate(z, cs, ct));
                }
            }
            // expand into the target
            if let Some(&other) = dst.centres.iter().find(|&&c| c != ct) {
                for z in dst.leaves_of(other, ct) {
                    swaps.push(migrate(z, ct, other));
                }
            }
            consider(swaps);
        }
    }
    Ok(ExchangeChain {
        start: from.clone(),
        swaps: best.expect("at least one route"),
    })
}

/// Result of walking a chain to its first member of weight in {-1, 0, 1}.
#[derive(Clone, Debug)]
pub struct Interpolation<'g> {
    pub member: EdgeSubgraph<'g>,
    pub weight: i64,
    /// Replacements walked before reaching `member`.
    pub steps: usize,
    /// Total length of the chain that was built.
    pub chain_replacements: usize,
}

/// Walks the family chain between a non-positive and a non-negative member
/// and returns the first member with `|weight| <= 1`. The endpoints may be
/// given in either order.
pub fn interpolate<'g>(
    kind: FamilyKind,
    a: &EdgeSubgraph<'g>,
    b: &EdgeSubgraph<'g>,
) -> Result<Interpolation<'g>> {
    same_host(a, b)?;
    for (name, h) in [("first", a), ("second", b)] {
        if !kind.contains(h) {
            return Err(Error::precondition(format!("{name} endpoint is not in {kind}")));
        }
    }
    let (lo, hi) = if a.weight() <= b.weight() { (a, b) } else { (b, a) };
    if lo.weight() > 0 {
        return Err(Error::precondition(format!(
            "lower endpoint has weight {} > 0",
            lo.weight()
        )));
    }
    if hi.weight() < 0 {
        return Err(Error::precondition(format!(
            "upper endpoint has weight {} < 0",
            hi.weight()
        )));
    }
    let chain = kind.exchange_chain(lo, hi)?;
    let weights = chain.weights();
    let steps = weights
        .iter()
        .position(|w| w.abs() <= 1)
        .expect("weights move by at most 2 from <= 0 to >= 0 with fixed parity");
    Ok(Interpolation {
        member: chain.member(steps),
        weight: weights[steps],
        steps,
        chain_replacements: chain.replacements(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn k(n: usize) -> ColoredGraph {
        ColoredGraph::complete(n, |_| Sign::Plus)
    }

    fn star(g: &ColoredGraph, c: usize) -> EdgeSubgraph<'_> {
        let pairs: Vec<_> = (0..g.n()).filter(|&z| z != c).map(|z| (c, z)).collect();
        EdgeSubgraph::from_pairs(g, &pairs).unwrap()
    }

    #[test]
    fn identity_chains() {
        let g = k(5);
        let s = star(&g, 0);
        for kind in [FamilyKind::SpanningTrees, FamilyKind::Diam3Trees] {
            assert_eq!(kind.exchange_chain(&s, &s).unwrap().len(), 1);
        }
        let p = EdgeSubgraph::from_walk(&g, &[0, 1, 2, 3, 4]).unwrap();
        let r = EdgeSubgraph::from_walk(&g, &[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(hampath_exchange_chain(&p, &r).unwrap().len(), 1);
    }

    #[test]
    fn star_to_star_k4() {
        let g = k(4);
        let chain = tree_exchange_chain(&star(&g, 0), &star(&g, 1)).unwrap();
        assert!(chain.replacements() <= 3);
        chain.validate(FamilyKind::SpanningTrees).unwrap();
        assert_eq!(chain.last(), star(&g, 1));
    }

    #[test]
    fn path_example_k4() {
        let g = k(4);
        let p = EdgeSubgraph::from_walk(&g, &[0, 1, 2, 3]).unwrap();
        let q = EdgeSubgraph::from_walk(&g, &[0, 2, 1, 3]).unwrap();
        let chain = hampath_exchange_chain(&p, &q).unwrap();
        assert!(chain.len() <= 5);
        chain.validate(FamilyKind::HamiltonianPaths).unwrap();
        assert_eq!(chain.last(), q);
    }

    #[test]
    fn double_star_collapse_counts_leaves() {
        // S_{1,2} on 5 vertices: centre 0 with leaf 2, centre 1 with leaves 3, 4
        let g = k(5);
        let ds = EdgeSubgraph::from_pairs(&g, &[(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        let chain = diam3_exchange_chain(&ds, &star(&g, 1)).unwrap();
        assert_eq!(chain.replacements(), 1);
        chain.validate(FamilyKind::Diam3Trees).unwrap();
    }

    #[test]
    fn rejects_wrong_inputs() {
        let g = k(5);
        let path = EdgeSubgraph::from_walk(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert!(diam3_exchange_chain(&path, &star(&g, 0)).is_err());
        assert!(hampath_exchange_chain(&star(&g, 0), &path).is_err());
        let partial = EdgeSubgraph::from_pairs(&g, &[(0, 1)]).unwrap();
        assert!(tree_exchange_chain(&partial, &path).is_err());
        // non-complete host
        let sparse = ColoredGraph::new(
            3,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus)],
        )
        .unwrap();
        let p = EdgeSubgraph::from_walk(&sparse, &[0, 1, 2]).unwrap();
        assert!(hampath_exchange_chain(&p, &p).is_err());
    }

    #[test]
    fn interpolate_returns_immediately_at_zero() {
        let g = ColoredGraph::complete(5, |e| if e.v() <= 2 { Sign::Minus } else { Sign::Plus });
        let s = star(&g, 0);
        assert_eq!(s.weight(), 0);
        let other = star(&g, 4);
        let r = interpolate(FamilyKind::SpanningTrees, &s, &other).unwrap();
        assert_eq!(r.steps, 0);
        assert_eq!(r.member, s);
    }

    #[test]
    fn interpolate_reports_failed_bound() {
        let g = k(5);
        let err = interpolate(FamilyKind::SpanningTrees, &star(&g, 0), &star(&g, 1)).unwrap_err();
        assert!(err.to_string().contains("lower endpoint"));
        let g = ColoredGraph::complete(5, |_| Sign::Minus);
        let err = interpolate(FamilyKind::SpanningTrees, &star(&g, 0), &star(&g, 1)).unwrap_err();
        assert!(err.to_string().contains("upper endpoint"));
    }
}
