//! Exact Turán-type numbers and the three sufficient conditions.
//!
//! Everything here is integer arithmetic. Rational bounds of the form
//! `|f| < p/q * C(n,2)` are compared after cross-multiplying.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilyKind;
use crate::graph::{ColorCensus, ColoredGraph};

pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Maximum edges of an `n`-vertex graph with no linear forest on `k` edges.
pub fn ex_linear_forest(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k + 1 > n {
        return Err(Error::domain(format!("linear forest needs 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let c = (k - 1) % 2;
    let joined = binom2(n) - binom2(n - (k - 1) / 2) + c;
    Ok(binom2(k).max(joined))
}

/// Maximum edges of an `n`-vertex graph with no forest on `k` edges.
pub fn ex_forest(n: usize, k: usize) -> Result<usize> {
    if k == 0 || n < k {
        return Err(Error::domain(format!("forest needs n >= k >= 1, got n={n}, k={k}")));
    }
    Ok(binom2(k))
}

/// Maximum edges of an `n`-vertex graph with no `K_{1,k}`.
pub fn ex_star(n: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::domain("star needs k >= 1"));
    }
    Ok((k - 1) * n / 2)
}

/// A triangle-free graph with more edges than this has a `k`-edge forest.
pub fn forest_bound_triangle_free(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::domain("forest bound needs k >= 1"));
    }
    Ok(k * k / 4)
}

/// A `d`-degenerate graph with more edges than this has a `k`-edge forest.
pub fn forest_bound_degenerate(k: usize, d: usize) -> Result<usize> {
    if k == 0 || d == 0 {
        return Err(Error::domain("degenerate bound needs k >= 1 and d >= 1"));
    }
    Ok(if k <= d {
        binom2(k)
    } else {
        k * d - binom2(d + 1)
    })
}

/// A planar graph with at least this many edges has a `k`-edge forest.
pub fn forest_bound_planar(k: usize) -> Result<usize> {
    if k < 3 {
        return Err(Error::domain(format!("planar forest bound needs k >= 3, got {k}")));
    }
    Ok(3 * k - 5)
}

/// The census bound for spanning paths of `K_n`; equals
/// `ex_linear_forest(n, (n-1)/2)`.
pub fn spanning_path_threshold(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::domain(format!("spanning path bound needs n >= 3, got {n}")));
    }
    let c = ((n - 1) / 2 - 1) % 2;
    Ok(binom2(n) - binom2(n - (n - 3) / 4) + c)
}

/// `C(floor((n-1)/2), 2)`: the census bound for spanning trees of `K_n`.
pub fn spanning_tree_threshold(n: usize) -> usize {
    binom2(n.saturating_sub(1) / 2)
}

/// `floor(n/2 * floor((n-3)/2))`: the census bound for diameter-3 trees.
pub fn diam3_threshold(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::domain(format!("diameter-3 bound needs n >= 3, got {n}")));
    }
    Ok(n * ((n - 3) / 2) / 2)
}

/// `ceil((n+1)/2)`: minimum census forcing zero-sum connectivity.
pub fn connectivity_threshold(n: usize) -> usize {
    (n + 2) / 2
}

/// Census condition: `min{e(-1), e(1)} > bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCondition {
    pub holds: bool,
    pub min_census: usize,
    pub bound: usize,
    /// `false` when `bound` is only an upper bound on the Turán number.
    pub exact: bool,
}

/// Decomposition condition: `|f(K_n)| < numerator / denominator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCondition {
    pub holds: bool,
    pub abs_weight: usize,
    pub numerator: usize,
    pub denominator: usize,
}

impl WeightCondition {
    fn new(abs_weight: usize, numerator: usize, denominator: usize) -> Self {
        WeightCondition {
            holds: abs_weight * denominator < numerator,
            abs_weight,
            numerator,
            denominator,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasterVerdict {
    pub family: FamilyKind,
    pub n: usize,
    /// Edges per family member.
    pub m: usize,
    /// Parity of `m`.
    pub c: usize,
    pub census: ColorCensus,
    pub condition1: CensusCondition,
    /// Present when `K_n` decomposes into members (Hamiltonian paths, n even).
    pub condition2: Option<WeightCondition>,
    /// Present when `K_n` decomposes into a covering family (Hamiltonian cycles, n odd).
    pub condition3: Option<WeightCondition>,
}

impl MasterVerdict {
    pub fn any_holds(&self) -> bool {
        self.condition1.holds
            || self.condition2.as_ref().is_some_and(|c| c.holds)
            || self.condition3.as_ref().is_some_and(|c| c.holds)
    }
}

/// Evaluates every condition available for `kind` on `g`.
pub fn master_verdict(g: &ColoredGraph, kind: FamilyKind) -> Result<MasterVerdict> {
    let n = g.n();
    if n < 3 {
        return Err(Error::domain(format!("conditions need n >= 3, got {n}")));
    }
    let m = n - 1;
    let c = m % 2;
    let census = g.census();
    let (bound, exact) = match kind {
        FamilyKind::SpanningTrees => (ex_forest(n, m / 2)?, true),
        FamilyKind::HamiltonianPaths => (spanning_path_threshold(n)?, true),
        FamilyKind::Diam3Trees => (ex_star(n, m / 2)?, false),
    };
    let condition1 = CensusCondition {
        holds: census.min() > bound,
        min_census: census.min(),
        bound,
        exact,
    };
    // Hamiltonian paths are spanning trees, and of diameter <= 3 only when n <= 4.
    let paths_belong = match kind {
        FamilyKind::SpanningTrees | FamilyKind::HamiltonianPaths => true,
        FamilyKind::Diam3Trees => n <= 4,
    };
    let abs_weight = census.total_weight.unsigned_abs() as usize;
    let available = g.is_complete() && paths_belong;
    let condition2 =
        (available && n % 2 == 0).then(|| WeightCondition::new(abs_weight, (2 + c) * binom2(n), m));
    let condition3 = (available && n % 2 == 1)
        .then(|| WeightCondition::new(abs_weight, (3 + c) * binom2(n), m + 1));
    Ok(MasterVerdict {
        family: kind,
        n,
        m,
        c,
        census,
        condition1,
        condition2,
        condition3,
    })
}
