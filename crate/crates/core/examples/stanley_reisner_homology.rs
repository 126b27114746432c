// Stanley-Reisner ideals, reduced homology, Reisner's criterion and the
// degree-zero Hochster identity on small complexes.

use herzog::poly::Field;
use herzog::simplicial::{
    a_invariant_negative, hilbert_series, hochster_degree_zero, is_acyclic, is_cohen_macaulay, reduced_homology,
    SimplicialComplex,
};
use herzog::Result;

pub fn run_example() -> Result<()> {
    let cases: [(&str, usize, Vec<Vec<usize>>); 5] = [
        ("path", 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]),
        ("4-cycle", 4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]),
        ("two edges", 4, vec![vec![0, 1], vec![2, 3]]),
        ("filled triangle", 3, vec![vec![0, 1, 2]]),
        ("octahedron boundary", 6, vec![
            vec![0, 2, 4], vec![0, 2, 5], vec![0, 3, 4], vec![0, 3, 5],
            vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 4], vec![1, 3, 5],
        ]),
    ];
    for (name, nverts, facets) in cases {
        let delta = SimplicialComplex::from_facets(nverts, &facets)?;
        println!("{name}: I = {}", delta.stanley_reisner());
        for field in [Field::Rational, Field::Prime(2)] {
            let h = reduced_homology(&delta, field)?;
            println!(
                "  {field}: ranks {:?}, acyclic {}, CM {}, a < 0 {}, Hochster {:?}",
                h.ranks,
                is_acyclic(&delta, field, delta.dimension())?,
                is_cohen_macaulay(&delta, field)?,
                a_invariant_negative(&delta, field)?,
                hochster_degree_zero(&delta, field)?,
            );
        }
        println!("  f = {:?}, P(t) = {}", delta.f_vector(), hilbert_series(&delta).hilbert_polynomial());
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
