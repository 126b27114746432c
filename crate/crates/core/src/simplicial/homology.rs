use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::linalg;
use crate::poly::Field;

use super::{Face, SimplicialComplex};

/// Ranks of reduced homology `H̃_i(Δ; K)` for `i = -1, ..., dim Δ`.
/// Over a field these equal the reduced cohomology ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: Field,
    /// `ranks[k]` is the rank in degree `k - 1`.
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H̃_i`, zero outside the computed range.
    pub fn rank(&self, i: i64) -> usize {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Rank of the boundary map from faces of `source` (dimension d) to `target` (dimension d-1).
fn boundary_rank(source: &[Face], target: &[Face], field: Field) -> usize {
    if source.is_empty() || target.is_empty() {
        return 0;
    }
    let index: HashMap<Face, usize> = target.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let rows: Vec<Vec<i64>> = source
        .iter()
        .map(|s| {
            let mut row = vec![0i64; target.len()];
            for (pos, v) in s.vertices().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                row[index[&s.without(v)]] = sign;
            }
            row
        })
        .collect();
    match field {
        Field::Rational => linalg::rank_integer(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
        Field::Prime(p) => linalg::rank_mod_p(&rows, p),
    }
}

/// Reduced homology over `field` from exact boundary-matrix ranks.
pub fn reduced_homology(delta: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    if delta.is_void() {
        return Err(Error::Precondition("reduced homology of the void complex".into()));
    }
    let dim = delta.dimension();
    let by_dim: Vec<Vec<Face>> = (-1..=dim).map(|d| delta.faces_of_dimension(d)).collect();
    // boundary rank from dimension d to d-1, for d = 0..=dim
    let ranks_d: Vec<usize> = (0..=dim)
        .map(|d| boundary_rank(&by_dim[(d + 1) as usize], &by_dim[d as usize], field))
        .collect();
    let ranks = (-1..=dim)
        .map(|i| {
            let k = (i + 1) as usize;
            let out = if i >= 0 { ranks_d[i as usize] } else { 0 };
            let inc = if i < dim { ranks_d[(i + 1) as usize] } else { 0 };
            by_dim[k].len() - out - inc
        })
        .collect();
    Ok(HomologyProfile { field, ranks })
}

/// `H̃_i(Δ; K) = 0` for all `0 <= i <= d`.
pub fn is_acyclic(delta: &SimplicialComplex, field: Field, d: i64) -> Result<bool> {
    let h = reduced_homology(delta, field)?;
    Ok((0..=d).all(|i| h.rank(i) == 0))
}

/// Reisner's criterion: `H̃_i(lk σ; K) = 0` for `i < dim lk σ`, for every face σ.
pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    for sigma in delta.faces() {
        let lk = delta.link(sigma);
        let d = lk.dimension();
        let h = reduced_homology(&lk, field)?;
        if (-1..d).any(|i| h.rank(i) != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-0 top local cohomology vanishes: `H̃^{dim Δ}(Δ; K) = 0`.
pub fn a_invariant_negative(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    let h = reduced_homology(delta, field)?;
    Ok(h.rank(delta.dimension()) == 0)
}

/// `dim_K H_m^{i+1}(S/I_Δ)_0` for `i = 0, ..., dim Δ`, via Hochster's formula
/// `H_m^{i+1}(S/I_Δ)_0 = H̃^i(Δ; K)`. Entry `i` of the result is that dimension.
pub fn hochster_degree_zero(delta: &SimplicialComplex, field: Field) -> Result<Vec<usize>> {
    let h = reduced_homology(delta, field)?;
    Ok((0..=delta.dimension()).map(|i| h.rank(i)).collect())
}

/// Hilbert series of the Stanley–Reisner ring from the f-vector:
/// `sum_i f_{i-1} t^i (1-t)^{d-i} / (1-t)^d` with `d = dim Δ + 1`.
pub fn hilbert_series(delta: &SimplicialComplex) -> HilbertSeries {
    let f = delta.f_vector();
    let d = (delta.dimension() + 1).max(0) as usize;
    let mut num = vec![BigInt::zero(); d + 1];
    for (i, fi) in f.iter().enumerate().take(d + 1) {
        // f_{i-1} t^i (1-t)^{d-i}
        let mut binom = BigInt::from(1);
        for k in 0..=(d - i) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            num[i + k] += BigInt::from(*fi as i64 * sign) * &binom;
            binom = binom * BigInt::from((d - i - k) as i64) / BigInt::from(k as i64 + 1);
        }
    }
    while num.last().is_some_and(Zero::is_zero) {
        num.pop();
    }
    HilbertSeries {
        numerator: num,
        denominator_power: d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::Graph;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
        SimplicialComplex::from_graph(&Graph::new(n, edges).unwrap())
    }

    fn cycle(k: usize) -> SimplicialComplex {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        graph(k, &edges)
    }

    #[test]
    fn trees_are_acyclic() {
        let t = graph(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        for f in [Field::Rational, Field::Prime(2)] {
            assert!(reduced_homology(&t, f).unwrap().is_zero());
            assert!(is_acyclic(&t, f, 1).unwrap());
        }
    }

    #[test]
    fn cycles_have_one_loop() {
        for k in 3..7 {
            for f in [Field::Rational, Field::Prime(2)] {
                let h = reduced_homology(&cycle(k), f).unwrap();
                assert_eq!((h.rank(0), h.rank(1)), (0, 1), "cycle {k} over {f}");
            }
        }
    }

    #[test]
    fn two_edges_have_two_components() {
        let c = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(reduced_homology(&c, Field::Rational).unwrap().rank(0), 1);
        assert!(!is_cohen_macaulay(&c, Field::Rational).unwrap());
    }

    #[test]
    fn empty_face_complex() {
        let c = SimplicialComplex::from_faces(2, [Face::EMPTY]).unwrap();
        let h = reduced_homology(&c, Field::Rational).unwrap();
        assert_eq!(h.ranks, vec![1]);
        let void = SimplicialComplex::from_faces(2, []).unwrap();
        assert!(reduced_homology(&void, Field::Rational).is_err());
    }

    #[test]
    fn cohen_macaulay_and_a_invariant() {
        let path = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(is_cohen_macaulay(&path, Field::Rational).unwrap());
        assert!(a_invariant_negative(&path, Field::Rational).unwrap());
        let square = cycle(4);
        assert!(is_cohen_macaulay(&square, Field::Rational).unwrap());
        assert!(!a_invariant_negative(&square, Field::Rational).unwrap());
    }

    #[test]
    fn hochster_dictionary() {
        let tree = graph(4, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(hochster_degree_zero(&tree, Field::Rational).unwrap(), vec![0, 0]);
        assert_eq!(hochster_degree_zero(&cycle(4), Field::Rational).unwrap(), vec![0, 1]);
        assert_eq!(hochster_degree_zero(&cycle(3), Field::Prime(3)).unwrap(), vec![0, 1]);
    }

    #[test]
    fn hilbert_series_from_f_vector() {
        let point = SimplicialComplex::from_facets(1, &[vec![0]]).unwrap();
        let hs = hilbert_series(&point);
        assert_eq!(hs.numerator, vec![BigInt::from(1)]);
        assert_eq!(hs.denominator_power, 1);
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(hilbert_series(&path).numerator, vec![BigInt::from(1), BigInt::from(1)]);
    }
}
