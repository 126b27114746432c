//! Graphs and the free-vertex collapse recursion.
//!
//! Starting from `A = ∅`, repeatedly remove a vertex that lies on exactly one
//! edge of the graph induced on `W = V \ A`. The number of removals `ℓ`, the
//! removed set `A` and the remaining core `W` are returned. `ℓ` does not
//! depend on the choices made, and equals `|V| - 1` exactly for trees; for
//! connected non-trees `A` and `W` are invariants as well.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph on `{0, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    nverts: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(nverts: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if nverts > 64 {
            return Err(Error::SizeLimit(format!("{nverts} vertices (at most 64 supported)")));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= nverts || b >= nverts {
                return Err(Error::Domain(format!("edge ({a},{b}) outside 0..{nverts}")));
            }
            if a == b {
                return Err(Error::Domain(format!("loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::Domain(format!("repeated edge ({a},{b})")));
            }
        }
        Ok(Graph { nverts, edges: set })
    }

    pub fn path(nverts: usize) -> Self {
        let edges: Vec<_> = (1..nverts).map(|i| (i - 1, i)).collect();
        Self::new(nverts, &edges).expect("valid path")
    }

    pub fn cycle(nverts: usize) -> Self {
        let edges: Vec<_> = (0..nverts).map(|i| (i, (i + 1) % nverts)).collect();
        Self::new(nverts, &edges).expect("valid cycle")
    }

    /// Star with the given center joined to every other vertex.
    pub fn star(nverts: usize, center: usize) -> Self {
        let edges: Vec<_> = (0..nverts).filter(|&v| v != center).map(|v| (v, center)).collect();
        Self::new(nverts, &edges).expect("valid star")
    }

    pub fn vertex_count(&self) -> usize {
        self.nverts
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    fn degree_within(&self, v: usize, w: u64) -> usize {
        self.neighbors(v).filter(|&u| w & (1 << u) != 0).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.nverts == 0 {
            return true;
        }
        let mut seen = vec![false; self.nverts];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.nverts
    }

    /// Every labelled graph on `nverts` vertices, in edge-bitmask order.
    pub fn all_graphs(nverts: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..nverts)
            .flat_map(|a| (a + 1..nverts).map(move |b| (a, b)))
            .collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(nverts, &edges).expect("valid edge subset")
        })
    }
}

fn mask_of(w: &BTreeSet<usize>) -> u64 {
    w.iter().fold(0u64, |acc, &v| acc | (1 << v))
}

fn free_in_mask(g: &Graph, w: u64) -> Vec<usize> {
    (0..g.nverts)
        .filter(|&v| w & (1 << v) != 0 && g.degree_within(v, w) == 1)
        .collect()
}

/// Vertices of the induced graph on `w` lying on exactly one edge.
pub fn free_vertices(g: &Graph, w: &BTreeSet<usize>) -> Vec<usize> {
    free_in_mask(g, mask_of(w))
}

/// Output of the collapse recursion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CollapseResult {
    pub ell: usize,
    /// Removed vertices in removal order. Only the set is an invariant.
    pub removed: Vec<usize>,
    pub core: BTreeSet<usize>,
}

/// The order-free part of a [`CollapseResult`], used to compare branches.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CollapseInvariants {
    pub ell: usize,
    pub removed: BTreeSet<usize>,
    pub core: BTreeSet<usize>,
}

impl CollapseResult {
    pub fn invariants(&self) -> CollapseInvariants {
        CollapseInvariants {
            ell: self.ell,
            removed: self.removed.iter().copied().collect(),
            core: self.core.clone(),
        }
    }
}

/// Collapse, always removing the smallest free vertex.
pub fn collapse(g: &Graph) -> CollapseResult {
    let mut w: u64 = if g.nverts == 64 { u64::MAX } else { (1u64 << g.nverts) - 1 };
    let mut removed = Vec::new();
    while let Some(&v) = free_in_mask(g, w).first() {
        removed.push(v);
        w &= !(1 << v);
    }
    CollapseResult {
        ell: removed.len(),
        removed,
        core: (0..g.nverts).filter(|&v| w & (1 << v) != 0).collect(),
    }
}

/// Default vertex bound for [`collapse_all_branches`].
pub const DEFAULT_BRANCH_BOUND: usize = 8;

/// Explore every sequence of free-vertex choices and collect the distinct
/// outcomes (removed set compared as a set).
pub fn collapse_all_branches(g: &Graph, bound: usize) -> Result<BTreeSet<CollapseInvariants>> {
    if g.nverts > bound {
        return Err(Error::SizeLimit(format!(
            "{} vertices exceeds the branch-exploration bound {bound}",
            g.nverts
        )));
    }
    let full: u64 = (1u64 << g.nverts) - 1;
    let mut outcomes = BTreeSet::new();
    let mut visited: HashSet<u64> = HashSet::new();
    let mut stack = vec![full];
    while let Some(w) = stack.pop() {
        if !visited.insert(w) {
            continue;
        }
        let free = free_in_mask(g, w);
        if free.is_empty() {
            let removed: BTreeSet<usize> = (0..g.nverts).filter(|&v| w & (1 << v) == 0).collect();
            outcomes.insert(CollapseInvariants {
                ell: removed.len(),
                removed,
                core: (0..g.nverts).filter(|&v| w & (1 << v) != 0).collect(),
            });
        }
        for v in free {
            stack.push(w & !(1 << v));
        }
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> BTreeSet<usize> {
        (0..n).collect()
    }

    #[test]
    fn free_vertex_examples() {
        assert!(free_vertices(&Graph::cycle(4), &all(4)).is_empty());
        assert_eq!(free_vertices(&Graph::path(4), &all(4)), vec![0, 3]);
        assert_eq!(free_vertices(&Graph::star(4, 3), &all(4)), vec![0, 1, 2]);
    }

    #[test]
    fn collapse_examples() {
        let c = collapse(&Graph::cycle(4));
        assert_eq!((c.ell, c.removed.len(), c.core.len()), (0, 0, 4));
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let c = collapse(&g);
        assert_eq!(c.ell, 1);
        assert_eq!(c.removed, vec![3]);
        assert_eq!(c.core, BTreeSet::from([0, 1, 2]));
        assert_eq!(collapse_all_branches(&g, 8).unwrap().len(), 1);
        for n in 2..8 {
            assert_eq!(collapse(&Graph::path(n)).ell, n - 1);
        }
    }

    #[test]
    fn branch_set_of_the_square_is_a_singleton() {
        let b = collapse_all_branches(&Graph::cycle(4), 8).unwrap();
        assert_eq!(b.len(), 1);
        let only = b.into_iter().next().unwrap();
        assert_eq!((only.ell, only.removed.len(), only.core.len()), (0, 0, 4));
    }

    #[test]
    fn trees_reach_every_vertex_but_one() {
        let b = collapse_all_branches(&Graph::star(5, 2), 8).unwrap();
        assert!(b.iter().all(|r| r.ell == 4));
        assert!(b.len() > 1, "the surviving vertex depends on the choices");
        assert!(collapse_all_branches(&Graph::path(9), 8).is_err());
    }

    #[test]
    fn tree_and_connectivity_oracles() {
        assert!(Graph::star(4, 3).is_tree());
        assert!(!Graph::cycle(4).is_tree());
        assert!(!Graph::new(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert_eq!(Graph::all_graphs(4).count(), 64);
    }
}
