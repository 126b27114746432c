// Exhaustive candidate sweeps over a triangle and a 4-cycle: every ideal
// with the prescribed squarefree initial ideal defines a singular curve.

use herzog::collapse::Graph;
use herzog::poly::{Field, MonomialOrder};
use herzog::search::{coefficient_grid, verify_non_tree_is_singular, CandidateFamily, SearchMode, SweepBudget};
use herzog::Result;

pub fn run_example() -> Result<()> {
    let budget = SweepBudget::default();
    for (graph, field) in [
        (Graph::cycle(3), Field::Prime(2)),
        (Graph::cycle(3), Field::Prime(3)),
        (Graph::cycle(4), Field::Prime(2)),
    ] {
        let family = CandidateFamily::new(&graph, MonomialOrder::Lex, field, coefficient_grid(field, 0, 0), SearchMode::Exhaustive)?;
        let report = verify_non_tree_is_singular(&family, &budget)?;
        print!("{}", report.table());
        let mut common: Vec<_> = report.singular_points.iter().collect();
        common.sort_by(|a, b| b.1.cmp(a.1));
        for (p, k) in common.into_iter().take(3) {
            println!("  singular at {p} in {k} candidates");
        }
    }

    let field = Field::Rational;
    let family = CandidateFamily::new(
        &Graph::cycle(4),
        MonomialOrder::Lex,
        field,
        coefficient_grid(field, -2, 2),
        SearchMode::Random { seed: 1, count: 500 },
    )?;
    print!("{}", verify_non_tree_is_singular(&family, &budget)?.table());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
