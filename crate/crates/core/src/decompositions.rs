//! Walecki decompositions of `K_n` into Hamiltonian paths (n even) or
//! Hamiltonian cycles (n odd).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, EdgeSubgraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartKind {
    HamiltonianPath,
    HamiltonianCycle,
}

/// Edge-disjoint parts covering `K_n`, each given as a vertex sequence.
/// Cycle parts list each vertex once; the closing edge is implied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub kind: PartKind,
    pub parts: Vec<Vec<usize>>,
}

impl Decomposition {
    /// The edge sets of the parts inside `host`, which must contain every
    /// edge of `K_n`.
    pub fn edge_parts<'g>(&self, host: &'g ColoredGraph) -> Result<Vec<EdgeSubgraph<'g>>> {
        if host.n() != self.n || !host.is_complete() {
            return Err(Error::precondition(format!("decomposition needs K_{}", self.n)));
        }
        self.parts
            .iter()
            .map(|seq| {
                let mut walk = seq.clone();
                if self.kind == PartKind::HamiltonianCycle {
                    walk.push(seq[0]);
                }
                EdgeSubgraph::from_walk(host, &walk)
            })
            .collect()
    }
}

/// The zig-zag path `i, i+1, i-1, i+2, i-2, ..., i + n/2` on `Z_n`.
fn zigzag(n: usize, i: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(n);
    seq.push(i);
    for step in 1..n {
        let offset = step.div_ceil(2);
        let v = if step % 2 == 1 {
            i + offset
        } else {
            i + n - offset
        };
        seq.push(v % n);
    }
    seq
}

/// `n/2` edge-disjoint Hamiltonian paths of `K_n`, `n` even.
pub fn hamilton_path_decomposition(n: usize) -> Result<Decomposition> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::domain(format!("path decomposition needs even n >= 2, got {n}")));
    }
    Ok(Decomposition {
        n,
        kind: PartKind::HamiltonianPath,
        parts: (0..n / 2).map(|i| zigzag(n, i)).collect(),
    })
}

/// `(n-1)/2` edge-disjoint Hamiltonian cycles of `K_n`, `n` odd: the path
/// decomposition of `K_{n-1}` with both ends of every path joined to the
/// extra vertex `n-1`.
pub fn hamilton_cycle_decomposition(n: usize) -> Result<Decomposition> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::domain(format!("cycle decomposition needs odd n >= 3, got {n}")));
    }
    let paths = hamilton_path_decomposition(n - 1)?;
    Ok(Decomposition {
        n,
        kind: PartKind::HamiltonianCycle,
        parts: paths
            .parts
            .into_iter()
            .map(|mut p| {
                p.push(n - 1);
                p
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    #[test]
    fn small_cases() {
        let d = hamilton_path_decomposition(2).unwrap();
        assert_eq!(d.parts, vec![vec![0, 1]]);
        let d = hamilton_cycle_decomposition(3).unwrap();
        assert_eq!(d.parts.len(), 1);
        let g = ColoredGraph::complete(3, |_| Sign::Plus);
        assert!(d.edge_parts(&g).unwrap()[0].is_hamiltonian_cycle());
    }

    #[test]
    fn counts() {
        let d = hamilton_path_decomposition(6).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert_eq!(d.parts.iter().map(|p| p.len() - 1).sum::<usize>(), 15);
        let d = hamilton_cycle_decomposition(5).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts.iter().map(|p| p.len()).sum::<usize>(), 10);
    }

    #[test]
    fn parity_errors() {
        assert!(hamilton_path_decomposition(7).is_err());
        assert!(hamilton_cycle_decomposition(8).is_err());
        assert!(hamilton_path_decomposition(0).is_err());
    }
}
