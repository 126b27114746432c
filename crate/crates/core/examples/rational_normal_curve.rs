// The rational normal curve of degree n: its 2-minors are a lex Groebner
// basis whose initial ideal is the Stanley-Reisner ideal of a path.

use herzog::collapse::collapse;
use herzog::corpus::{path_initial_ideal, rational_normal_curve, rational_normal_curve_graph};
use herzog::geometry::{curve_summary, SmoothnessConfig};
use herzog::groebner::{buchberger, GbConfig};
use herzog::poly::{Field, MonomialOrder};
use herzog::simplicial::SimplicialComplex;
use herzog::Result;

pub fn run_example() -> Result<()> {
    let ord = MonomialOrder::Lex;
    for n in 3..=6 {
        let ideal = rational_normal_curve(Field::Rational, n);
        let gb = buchberger(&ideal, &ord, &GbConfig::default())?;
        let init = gb.initial_ideal();
        assert_eq!(init, path_initial_ideal(n));

        let delta = SimplicialComplex::from_monomial_ideal(&init)?;
        assert_eq!(delta, SimplicialComplex::from_graph(&rational_normal_curve_graph(n)));
        let ell = collapse(&delta.to_graph()?).ell;

        let s = curve_summary(&ideal, &ord, &SmoothnessConfig::default())?;
        println!(
            "n = {n}: {} minors, in = {init}, ell = {ell}, P(t) = {}t + {}, genus {}, {:?}",
            ideal.generators().len(),
            s.hilbert_polynomial[1],
            s.hilbert_polynomial[0],
            s.genus,
            s.smoothness.expect("requested"),
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
