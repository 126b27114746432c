// Genus from the Hilbert polynomial of the initial ideal, checked against
// graded dimensions computed by linear algebra on the ideal itself.

use herzog::corpus::{plane_cubic, quadric_intersection, rational_normal_curve, star_example};
use herzog::geometry::genus;
use herzog::groebner::{buchberger, GbConfig};
use herzog::hilbert::{count_standard_monomials, graded_dimension_by_linear_algebra};
use herzog::poly::{Field, MonomialOrder};
use herzog::Result;

pub fn run_example() -> Result<()> {
    let q = Field::Rational;
    let ord = MonomialOrder::DegRevLex;
    let cfg = GbConfig::default();
    let curves = [
        ("plane cubic", plane_cubic(q)?),
        ("two quadrics in P^3", quadric_intersection(q)?),
        ("twisted cubic", rational_normal_curve(q, 3)),
        ("star smoothing", star_example(q)),
    ];
    for (name, ideal) in curves {
        let s = genus(&ideal, &ord, &cfg)?;
        let init = buchberger(&ideal, &ord, &cfg)?.initial_ideal();
        let dims: Vec<(usize, usize)> = (0..=6)
            .map(|d| Ok((graded_dimension_by_linear_algebra(&ideal, d)?, count_standard_monomials(&init, d))))
            .collect::<Result<_>>()?;
        assert!(dims.iter().all(|(a, b)| a == b));
        let tail = dims.last().expect("seven degrees").0 as i64;
        assert_eq!(tail, s.hilbert_polynomial[1] * 6 + s.hilbert_polynomial[0]);
        println!(
            "{name}: degree {}, genus {}, dim (S/I)_d for d = 0..6: {:?}",
            s.degree,
            s.genus,
            dims.iter().map(|d| d.0).collect::<Vec<_>>()
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
