//! Coloured host graphs, edge subgraphs and structural predicates.
//!
//! Vertices are the dense integers `0..n`. Edges are stored once, as
//! canonical `(min, max)` pairs sorted lexicographically, so an edge id is
//! simply its position in that order. For a complete graph the id of
//! `(u, v)` is therefore the canonical index returned by
//! [`complete_edge_index`], which is what the bitmask oracle relies on.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::Dsu;
use crate::error::{Error, Result};

const NO_EDGE: u32 = u32::MAX;

/// Colour of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    /// Only -1 and 1 are colours; 0 and everything else is rejected.
    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// An unordered vertex pair, always stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Position of `(u, v)` in the canonical edge order of `K_n`.
pub fn complete_edge_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(v < n && u != v);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Sizes of the two colour classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorCensus {
    pub e_minus: usize,
    pub e_plus: usize,
    pub total_weight: i64,
}

impl ColorCensus {
    pub fn min(&self) -> usize {
        self.e_minus.min(self.e_plus)
    }

    pub fn count(&self, sign: Sign) -> usize {
        match sign {
            Sign::Minus => self.e_minus,
            Sign::Plus => self.e_plus,
        }
    }
}

/// A simple graph with a sign on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<Edge>,
    signs: Vec<Sign>,
    lookup: Vec<u32>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl ColoredGraph {
    /// Builds a graph from `(u, v, sign)` triples in any order.
    ///
    /// Loops, out-of-range endpoints and repeated pairs are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<ColoredGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut sorted = BTreeMap::new();
        for (a, b, sign) in edges {
            if a >= n || b >= n {
                return Err(Error::input(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::input(format!("loop at vertex {a}")));
            }
            if sorted.insert(Edge::new(a, b), sign).is_some() {
                return Err(Error::input(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(Self::from_sorted(n, sorted.into_iter().unzip()))
    }

    fn from_sorted(n: usize, (edges, signs): (Vec<Edge>, Vec<Sign>)) -> ColoredGraph {
        assert!(edges.len() < NO_EDGE as usize);
        let mut lookup = vec![NO_EDGE; n * n];
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            lookup[e.u() * n + e.v()] = id as u32;
            lookup[e.v() * n + e.u()] = id as u32;
            adjacency[e.u()].push((e.v(), id));
            adjacency[e.v()].push((e.u(), id));
        }
        ColoredGraph {
            n,
            edges,
            signs,
            lookup,
            adjacency,
        }
    }

    /// `K_n` with signs chosen per edge.
    pub fn complete(n: usize, mut sign: impl FnMut(Edge) -> Sign) -> ColoredGraph {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut signs = Vec::with_capacity(edges.capacity());
        for u in 0..n {
            for v in u + 1..n {
                let e = Edge(u, v);
                edges.push(e);
                signs.push(sign(e));
            }
        }
        Self::from_sorted(n, (edges, signs))
    }

    /// `K_n` where bit `i` of `mask` set means canonical edge `i` is -1.
    pub fn complete_from_minus_mask(n: usize, mask: u64) -> Result<ColoredGraph> {
        let m = n * n.saturating_sub(1) / 2;
        if m > 64 {
            return Err(Error::domain(format!("K_{n} has {m} > 64 edges")));
        }
        if m < 64 && mask >> m != 0 {
            return Err(Error::input(format!("mask {mask:#x} has bits beyond edge {m}")));
        }
        let mut i = 0;
        Ok(Self::complete(n, |_| {
            let s = if mask >> i & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            };
            i += 1;
            s
        }))
    }

    /// Same edges, signs replaced.
    pub fn recolored(&self, mut sign: impl FnMut(usize, Edge) -> Sign) -> ColoredGraph {
        let mut g = self.clone();
        for (id, e) in self.edges.iter().enumerate() {
            g.signs[id] = sign(id, *e);
        }
        g
    }

    /// Overwrites signs in place: bit `id` of `mask` set means edge `id` is -1.
    pub(crate) fn set_signs_from_mask(&mut self, mask: u64) {
        for (id, s) in self.signs.iter_mut().enumerate() {
            *s = if mask >> id & 1 == 1 { Sign::Minus } else { Sign::Plus };
        }
    }

    /// Every sign negated.
    pub fn flipped(&self) -> ColoredGraph {
        self.recolored(|id, _| self.signs[id].flip())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn sign(&self, id: usize) -> Sign {
        self.signs[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.lookup[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Sign of `uv`, `None` if the pair is not an edge.
    pub fn sign_between(&self, u: usize, v: usize) -> Option<Sign> {
        self.edge_id(u, v).map(|id| self.signs[id])
    }

    /// `(neighbour, edge id)` pairs, sorted by neighbour.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Number of edges of the given sign at `v`.
    pub fn sign_degree(&self, v: usize, sign: Sign) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&&(_, id)| self.signs[id] == sign)
            .count()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.n
    }

    pub fn census(&self) -> ColorCensus {
        let e_minus = self.signs.iter().filter(|&&s| s == Sign::Minus).count();
        let e_plus = self.signs.len() - e_minus;
        ColorCensus {
            e_minus,
            e_plus,
            total_weight: e_plus as i64 - e_minus as i64,
        }
    }

    /// Ids of every edge carrying `sign`.
    pub fn sign_class(&self, sign: Sign) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&id| self.signs[id] == sign)
            .collect()
    }

    /// Bitmask of -1 edges; only meaningful when the graph has at most 64 edges.
    pub fn minus_mask(&self) -> Option<u64> {
        if self.edges.len() > 64 {
            return None;
        }
        Some(
            self.signs
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == Sign::Minus)
                .fold(0, |acc, (i, _)| acc | 1 << i),
        )
    }

    pub fn subgraph(&self, ids: impl IntoIterator<Item = usize>) -> Result<EdgeSubgraph<'_>> {
        EdgeSubgraph::new(self, ids)
    }

    /// The whole edge set as a subgraph.
    pub fn full(&self) -> EdgeSubgraph<'_> {
        EdgeSubgraph {
            host: self,
            edges: (0..self.edges.len()).collect(),
        }
    }
}

/// A subset of the edges of a host graph.
#[derive(Clone, Debug)]
pub struct EdgeSubgraph<'g> {
    host: &'g ColoredGraph,
    edges: Vec<usize>,
}

impl PartialEq for EdgeSubgraph<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.host, other.host) && self.edges == other.edges
    }
}

impl Eq for EdgeSubgraph<'_> {}

impl<'g> EdgeSubgraph<'g> {
    pub fn new(host: &'g ColoredGraph, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut edges: Vec<usize> = ids.into_iter().collect();
        edges.sort_unstable();
        if let Some(&last) = edges.last() {
            if last >= host.edge_count() {
                return Err(Error::input(format!("edge id {last} is not in the host")));
            }
        }
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("repeated edge in subgraph"));
        }
        Ok(EdgeSubgraph { host, edges })
    }

    /// Looks up each pair in the host; a non-edge is an input error.
    pub fn from_pairs(host: &'g ColoredGraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let ids = pairs
            .iter()
            .map(|&(u, v)| {
                host.edge_id(u, v)
                    .ok_or_else(|| Error::input(format!("({u},{v}) is not an edge of the host")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(host, ids)
    }

    /// Consecutive vertices of `walk` joined in the host.
    pub fn from_walk(host: &'g ColoredGraph, walk: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = walk.windows(2).map(|w| (w[0], w[1])).collect();
        Self::from_pairs(host, &pairs)
    }

    pub(crate) fn from_sorted_unchecked(host: &'g ColoredGraph, edges: Vec<usize>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        EdgeSubgraph { host, edges }
    }

    pub fn host(&self) -> &'g ColoredGraph {
        self.host
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|&id| self.host.edge(id))
    }

    /// Signed sum of the host colours over this edge set.
    pub fn weight(&self) -> i64 {
        self.edges.iter().map(|&id| self.host.sign(id).value()).sum()
    }

    pub fn count_sign(&self, sign: Sign) -> usize {
        self.edges
            .iter()
            .filter(|&&id| self.host.sign(id) == sign)
            .count()
    }

    /// The edge set as a bitmask over host edge ids (hosts with at most 64 edges).
    pub fn mask(&self) -> Option<u64> {
        if self.host.edge_count() > 64 {
            return None;
        }
        Some(self.edges.iter().fold(0, |acc, &id| acc | 1 << id))
    }

    /// `self - removed + added`.
    pub fn replaced(&self, removed: usize, added: usize) -> Result<Self> {
        let pos = self
            .edges
            .binary_search(&removed)
            .map_err(|_| Error::precondition(format!("edge {removed} is not in the subgraph")))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        match edges.binary_search(&added) {
            Ok(_) => Err(Error::precondition(format!(
                "edge {added} is already in the subgraph"
            ))),
            Err(at) => {
                edges.insert(at, added);
                Ok(EdgeSubgraph {
                    host: self.host,
                    edges,
                })
            }
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.host.n()];
        for e in self.edges() {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        deg
    }

    pub fn is_forest(&self) -> bool {
        let mut dsu = Dsu::new(self.host.n());
        self.edges().all(|e| dsu.union(e.u(), e.v()))
    }

    /// Acyclic with `n - 1` edges, hence connected on all vertices.
    pub fn is_spanning_tree(&self) -> bool {
        let n = self.host.n();
        n > 0 && self.edges.len() == n - 1 && self.is_forest()
    }

    pub fn is_linear_forest(&self) -> bool {
        self.degrees().iter().all(|&d| d <= 2) && self.is_forest()
    }

    pub fn is_hamiltonian_path(&self) -> bool {
        self.is_spanning_tree() && self.degrees().iter().all(|&d| d <= 2)
    }

    pub fn is_hamiltonian_cycle(&self) -> bool {
        let n = self.host.n();
        if n < 3 || self.edges.len() != n || self.degrees().iter().any(|&d| d != 2) {
            return false;
        }
        let mut dsu = Dsu::new(n);
        let mut joins = 0;
        for e in self.edges() {
            if dsu.union(e.u(), e.v()) {
                joins += 1;
            }
        }
        joins == n - 1
    }

    pub fn is_matching(&self) -> bool {
        self.degrees().iter().all(|&d| d <= 1)
    }

    pub fn is_perfect_matching(&self) -> bool {
        self.degrees().iter().all(|&d| d == 1)
    }

    /// Vertex sequence of a Hamiltonian path, starting from its smaller end.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_hamiltonian_path() {
            return None;
        }
        let n = self.host.n();
        if n == 1 {
            return Some(vec![0]);
        }
        let mut next: Vec<Vec<usize>> = vec![Vec::with_capacity(2); n];
        for e in self.edges() {
            next[e.u()].push(e.v());
            next[e.v()].push(e.u());
        }
        let start = (0..n).find(|&v| next[v].len() == 1)?;
        let mut order = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            order.push(cur);
            match next[cur].iter().find(|&&w| w != prev) {
                Some(&w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        Some(order)
    }

    /// Number of edges on a longest path of a spanning tree.
    pub fn tree_diameter(&self) -> Result<usize> {
        if !self.is_spanning_tree() {
            return Err(Error::precondition("tree_diameter needs a spanning tree"));
        }
        let n = self.host.n();
        let mut adj = vec![Vec::new(); n];
        for e in self.edges() {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        let bfs = |src: usize| {
            let mut dist = vec![usize::MAX; n];
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            let mut far = (src, 0);
            while let Some(x) = queue.pop_front() {
                if dist[x] > far.1 {
                    far = (x, dist[x]);
                }
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            far
        };
        let (end, _) = bfs(0);
        Ok(bfs(end).1)
    }
}

/// Host graph classes that come with their own forest-extraction bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HostClass {
    Complete,
    TriangleFree,
    /// Maximal `d`-degenerate graph grown from `K_{d+1}`.
    DTree(usize),
    /// Triangulation grown from a triangle by inserting vertices into faces.
    MaximalPlanarStacked,
}

impl fmt::Display for HostClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostClass::Complete => write!(f, "complete"),
            HostClass::TriangleFree => write!(f, "triangle-free"),
            HostClass::DTree(d) => write!(f, "{d}-tree"),
            HostClass::MaximalPlanarStacked => write!(f, "stacked maximal planar"),
        }
    }
}

/// Membership test for a host class. A `false` may be conservative for
/// the planar class, but a `true` is always backed by a certificate.
pub fn host_class_check(g: &ColoredGraph, class: HostClass) -> bool {
    match class {
        HostClass::Complete => g.is_complete(),
        HostClass::TriangleFree => is_triangle_free(g),
        HostClass::DTree(d) => is_d_tree(g, d),
        HostClass::MaximalPlanarStacked => stacking_order(g).is_some(),
    }
}

fn is_triangle_free(g: &ColoredGraph) -> bool {
    g.edges().iter().all(|e| {
        g.neighbors(e.u())
            .iter()
            .all(|&(w, _)| w == e.v() || !g.has_edge(w, e.v()))
    })
}

/// Peels minimum-degree vertices; a d-degenerate graph with exactly
/// `nd - C(d+1, 2)` edges must peel every vertex at degree `d` and leave
/// `K_{d+1}`, which reverses into a valid construction.
fn is_d_tree(g: &ColoredGraph, d: usize) -> bool {
    let n = g.n();
    if d == 0 || n < d + 1 || g.edge_count() + d * (d + 1) / 2 != n * d {
        return false;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    for _ in 0..n - (d + 1) {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| deg[v])
            .expect("alive vertex");
        if deg[v] != d {
            return false;
        }
        alive[v] = false;
        for &(w, _) in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    rest.iter()
        .enumerate()
        .all(|(i, &a)| rest[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// One face insertion: `vertex` joined to the three corners of `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub vertex: usize,
    pub face: [usize; 3],
}

/// Recovers an insertion order certifying that `g` is a stacked
/// triangulation, then replays it against the face set. `None` if either
/// step fails.
pub fn stacking_order(g: &ColoredGraph) -> Option<([usize; 3], Vec<Insertion>)> {
    let n = g.n();
    if n < 3 || g.edge_count() != 3 * n - 6 {
        return None;
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut peeled = Vec::with_capacity(n - 3);
    for _ in 0..n - 3 {
        let found = (0..n).find_map(|v| {
            if !alive[v] || deg[v] != 3 {
                return None;
            }
            let nb: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| alive[w])
                .collect();
            let tri = [nb[0], nb[1], nb[2]];
            (g.has_edge(tri[0], tri[1]) && g.has_edge(tri[0], tri[2]) && g.has_edge(tri[1], tri[2]))
                .then_some(Insertion { vertex: v, face: tri })
        })?;
        alive[found.vertex] = false;
        for &w in &found.face {
            deg[w] -= 1;
        }
        peeled.push(found);
    }
    let base: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let base = [base[0], base[1], base[2]];
    if !(g.has_edge(base[0], base[1]) && g.has_edge(base[0], base[2]) && g.has_edge(base[1], base[2]))
    {
        return None;
    }
    peeled.reverse();
    let mut faces: BTreeMap<[usize; 3], usize> = BTreeMap::new();
    faces.insert(base, 2);
    for ins in &peeled {
        let mut key = ins.face;
        key.sort_unstable();
        match faces.get_mut(&key) {
            Some(c) if *c > 0 => *c -= 1,
            _ => return None,
        }
        let [a, b, c] = key;
        for mut f in [[a, b, ins.vertex], [a, c, ins.vertex], [b, c, ins.vertex]] {
            f.sort_unstable();
            *faces.entry(f).or_insert(0) += 1;
        }
    }
    Some((base, peeled))
}
