// Projection from P0 by extracting the basis elements free of X0, and the
// point of the curve lying over a coordinate point of the projection.

use herzog::corpus::rational_normal_curve;
use herzog::geometry::{fiber_over_coordinate_point, project_from_p0};
use herzog::groebner::{buchberger, GbConfig};
use herzog::poly::{Field, MonomialOrder, Scalar};
use herzog::search::triangular_perturbations;
use herzog::{Error, Result};

pub fn run_example() -> Result<()> {
    let field = Field::Rational;
    let ord = MonomialOrder::Lex;
    let cfg = GbConfig::default();
    let grid: Vec<Scalar> = (-2..=2).map(|c| Scalar::from_i64(field, c)).collect();
    let base = rational_normal_curve(field, 3);
    for (k, ideal) in triangular_perturbations(&base, &grid, 4, 11)?.into_iter().enumerate() {
        let gb = buchberger(&ideal, &ord, &cfg)?.reduced_basis();
        let projected = project_from_p0(&ideal, &gb, &cfg)?;
        println!("instance {k}:");
        for g in gb.elements() {
            println!("  {}", g.to_string_ordered(&ord));
        }
        let p: Vec<String> = projected.elements().iter().map(|g| g.to_string_ordered(&ord)).collect();
        println!("  projection: {}", p.join(", "));
        for a in 1..ideal.nvars() {
            match fiber_over_coordinate_point(&ideal, &gb, a) {
                Ok(f) => println!(
                    "  over P'_{a}: Q = {}, mu = {}, lambda = {}, alpha = {}, nonsingular {} / {}",
                    f.q, f.mu, f.lambda, f.alpha, f.q_nonsingular, f.projected_nonsingular
                ),
                Err(Error::HypothesisNotMet(why)) => println!("  over P'_{a}: skipped, {why}"),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
