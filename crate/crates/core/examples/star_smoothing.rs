// A smoothing of the star with edges 03, 13, 23, checked over several
// fields and orders, and found again by a seeded candidate search.

use herzog::corpus::{star_example, star_graph};
use herzog::geometry::{curve_summary, SmoothnessConfig};
use herzog::groebner::{buchberger, GbConfig};
use herzog::poly::{Field, MonomialOrder};
use herzog::search::{coefficient_grid, find_tree_smoothing, CandidateFamily, SearchMode, SmoothingSearch, SweepBudget};
use herzog::simplicial::SimplicialComplex;
use herzog::Result;

pub fn run_example() -> Result<()> {
    let star = SimplicialComplex::from_graph(&star_graph());
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)] {
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let ideal = star_example(field);
            let init = buchberger(&ideal, &ord, &GbConfig::default())?.initial_ideal();
            assert_eq!(init, star.stanley_reisner());
            let s = curve_summary(&ideal, &ord, &SmoothnessConfig::default())?;
            println!("{field:>5} {ord:>9}: in = {init}, genus {}, {:?}", s.genus, s.smoothness.expect("requested"));
        }
    }

    // The reduced basis of the minors lies in the coefficient grid {-1, 0, 1},
    // so a search over that grid finds a smoothing too.
    let field = Field::Rational;
    let family = CandidateFamily::new(
        &star_graph(),
        MonomialOrder::Lex,
        field,
        coefficient_grid(field, -1, 1),
        SearchMode::Random { seed: 7, count: 200 },
    )?
    .with_seeds(vec![star_example(field)]);
    match find_tree_smoothing(&family, &SweepBudget::default())? {
        SmoothingSearch::Found { label, generators, summary, .. } => {
            println!("found {label} (genus {}):", summary.genus);
            for g in generators {
                println!("  {g}");
            }
        }
        SmoothingSearch::NotFoundWithinBudget { examined } => println!("nothing smooth among {examined} candidates"),
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
