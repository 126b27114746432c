use std::collections::BTreeSet;
use std::fmt;

use crate::collapse::Graph;
use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::poly::Monomial;

/// A face: a subset of `{0, ..., 63}` stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        Face(vertices.into_iter().fold(0u64, |acc, v| {
            assert!(v < 64, "vertex index {v} out of range");
            acc | (1 << v)
        }))
    }

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `|face| - 1`.
    pub fn dimension(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn intersects(self, other: Face) -> bool {
        self.0 & other.0 != 0
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&v| self.0 & (1 << v) != 0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Face(sub);
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vertices().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// Canonical ordering used for face lists: by size, then by sorted vertex list.
fn face_key(f: &Face) -> (usize, Vec<usize>) {
    (f.len(), f.to_vec())
}

/// A simplicial complex on `{0, ..., nverts-1}` stored by its facets.
///
/// The void complex (no faces at all) has an empty facet list; the
/// complex `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    pub fn from_faces(nverts: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        if nverts > 64 {
            return Err(Error::SizeLimit(format!("{nverts} vertices (at most 64 supported)")));
        }
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for f in &faces {
            if let Some(v) = f.vertices().find(|&v| v >= nverts) {
                return Err(Error::Domain(format!("vertex {v} outside 0..{nverts}")));
            }
        }
        let mut facets: Vec<Face> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset_of(*g)))
            .copied()
            .collect();
        facets.sort_by_key(face_key);
        Ok(SimplicialComplex { nverts, facets })
    }

    pub fn from_facets(nverts: usize, facets: &[Vec<usize>]) -> Result<Self> {
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v >= nverts.min(64)) {
                return Err(Error::Domain(format!("vertex {v} outside 0..{nverts}")));
            }
        }
        Self::from_faces(nverts, facets.iter().map(|f| Face::new(f.iter().copied())))
    }

    pub fn simplex(nverts: usize) -> Self {
        Self::from_faces(nverts, [Face::new(0..nverts)]).expect("valid simplex")
    }

    /// The graph as a 1-dimensional complex (edges plus isolated vertices).
    pub fn from_graph(g: &Graph) -> Self {
        let mut faces: Vec<Face> = g.edges().map(|(a, b)| Face::new([a, b])).collect();
        faces.extend((0..g.vertex_count()).map(|v| Face::new([v])));
        Self::from_faces(g.vertex_count(), faces).expect("graph vertices in range")
    }

    /// The complex whose Stanley–Reisner ideal is `m`.
    pub fn from_monomial_ideal(m: &MonomialIdeal) -> Result<Self> {
        if !m.is_squarefree() {
            return Err(Error::Domain(format!("{m} is not squarefree")));
        }
        let n = m.nvars();
        if n > 20 {
            return Err(Error::SizeLimit(format!("{n} vertices is too many to enumerate subsets")));
        }
        let gens: Vec<Face> = m.generators().iter().map(|g| Face::new(g.support())).collect();
        let faces = (0..(1u64 << n))
            .map(Face::from_bits)
            .filter(|f| !gens.iter().any(|g| g.is_subset_of(*f)));
        Self::from_faces(n, faces)
    }

    pub fn vertex_count(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and for the void complex.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.dimension()).max().unwrap_or(-1)
    }

    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(*g))
    }

    /// Does every vertex `{v}` belong to the complex?
    pub fn has_full_vertex_set(&self) -> bool {
        (0..self.nverts).all(|v| self.contains(Face::new([v])))
    }

    /// Returns the complex unchanged if every vertex is a face.
    pub fn require_full_vertex_set(self) -> Result<Self> {
        if let Some(v) = (0..self.nverts).find(|&v| !self.contains(Face::new([v]))) {
            return Err(Error::Precondition(format!("vertex {v} is not a face of the complex")));
        }
        Ok(self)
    }

    /// All faces (including `∅` for non-void complexes), sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let set: BTreeSet<Face> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        let mut v: Vec<Face> = set.into_iter().collect();
        v.sort_by_key(face_key);
        v
    }

    pub fn faces_of_dimension(&self, d: i64) -> Vec<Face> {
        self.faces().into_iter().filter(|f| f.dimension() == d).collect()
    }

    /// `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dimension();
        let mut f = vec![0usize; (d + 2).max(0) as usize];
        for face in self.faces() {
            f[(face.dimension() + 1) as usize] += 1;
        }
        f
    }

    /// Number of edges containing `v`.
    pub fn vertex_degree(&self, v: usize) -> usize {
        self.faces_of_dimension(1).into_iter().filter(|e| e.contains(v)).count()
    }

    pub fn link(&self, sigma: Face) -> SimplicialComplex {
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.minus(sigma))
            .collect();
        Self::from_faces(self.nverts, faces).expect("same vertex set")
    }

    /// `mnf(Δ)`: subsets not in the complex all of whose proper subsets are.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let faces = self.faces();
        let mut out: BTreeSet<Face> = BTreeSet::new();
        let candidates: Vec<Face> = if faces.is_empty() {
            vec![Face::EMPTY]
        } else {
            faces
                .iter()
                .flat_map(|t| (0..self.nverts).filter(move |&v| !t.contains(v)).map(move |v| t.with(v)))
                .collect()
        };
        for s in candidates {
            if self.contains(s) {
                continue;
            }
            if s.vertices().all(|v| self.contains(s.without(v))) {
                out.insert(s);
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_by_key(face_key);
        v
    }

    /// `I_Δ = (X_σ : σ ∈ mnf(Δ))`.
    pub fn stanley_reisner(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nverts,
            self.minimal_nonfaces()
                .into_iter()
                .map(|s| Monomial::squarefree(self.nverts, s.vertices())),
        )
    }

    /// The 1-skeleton as a graph.
    pub fn to_graph(&self) -> Result<Graph> {
        if self.dimension() > 1 {
            return Err(Error::Domain(format!("complex of dimension {} is not a graph", self.dimension())));
        }
        let edges: Vec<(usize, usize)> = self
            .faces_of_dimension(1)
            .into_iter()
            .map(|e| {
                let v = e.to_vec();
                (v[0], v[1])
            })
            .collect();
        Graph::new(self.nverts, &edges)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", facets.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
        SimplicialComplex::from_graph(&Graph::new(n, edges).unwrap())
    }

    fn faces(v: &[Face]) -> Vec<Vec<usize>> {
        v.iter().map(|f| f.to_vec()).collect()
    }

    #[test]
    fn simplex_has_no_nonfaces() {
        assert!(SimplicialComplex::simplex(4).minimal_nonfaces().is_empty());
    }

    #[test]
    fn square_nonfaces_are_diagonals() {
        let c = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(faces(&c.minimal_nonfaces()), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn hollow_triangle_misses_the_2_face() {
        let c = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(faces(&c.minimal_nonfaces()), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn stanley_reisner_of_path_and_star() {
        let path = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.stanley_reisner().to_string(), "(X0*X2, X0*X3, X1*X3)");
        let star = graph(4, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(star.stanley_reisner().to_string(), "(X0*X1, X0*X2, X1*X2)");
        assert_eq!(SimplicialComplex::from_monomial_ideal(&star.stanley_reisner()).unwrap(), star);
    }

    #[test]
    fn non_squarefree_ideal_is_rejected() {
        let m = MonomialIdeal::new(2, [Monomial::new([2, 0])]);
        assert!(matches!(SimplicialComplex::from_monomial_ideal(&m), Err(Error::Domain(_))));
    }

    #[test]
    fn missing_vertex_is_a_minimal_nonface() {
        let c = SimplicialComplex::from_facets(3, &[vec![0, 1]]).unwrap();
        assert!(!c.has_full_vertex_set());
        assert!(c.clone().require_full_vertex_set().is_err());
        assert_eq!(faces(&c.minimal_nonfaces()), vec![vec![2]]);
    }

    #[test]
    fn links_and_f_vectors() {
        let c = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(c.f_vector(), vec![1, 4, 4]);
        let lk = c.link(Face::new([0]));
        assert_eq!(faces(lk.facets()), vec![vec![1], vec![3]]);
        assert_eq!(c.vertex_degree(0), 2);
    }
}
