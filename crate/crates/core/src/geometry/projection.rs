use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{elimination_basis, free_vertex_extraction, ideals_equal, GbConfig, GroebnerBasis, Ideal};
use crate::poly::{Monomial, Scalar};

use super::jacobian::jacobian_rank_at;
use super::point::{point_on_variety, ProjectivePoint};

/// Ideal of the closure of the projection of `V(I)` from `P0` to `{X0 = 0}`.
///
/// Uses the extraction `G' = {g in G : X0 does not divide in(g)}`, which
/// requires vertex 0 to be free in the initial complex and `G` to be
/// 0-reduced, and cross-checks it against block elimination.
pub fn project_from_p0(ideal: &Ideal, gb: &GroebnerBasis, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let extracted = free_vertex_extraction(gb)?;
    let rest = gb.order().restrict_drop_prefix(1);
    let general = elimination_basis(ideal, &[0], &rest, cfg)?;
    if !ideals_equal(&extracted.to_ideal(), &general.to_ideal(), &rest, cfg)? {
        return Err(Error::InternalConsistency(format!(
            "projection routes disagree: extraction {} vs elimination {}",
            extracted.to_ideal(),
            general.to_ideal()
        )));
    }
    Ok(extracted)
}

/// The point of `X` over `P'_a` and the data that locates it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberResult {
    /// `Q = [mu : 0 : ... : 1 : ... : 0]` with the 1 in position `a`.
    pub q: ProjectivePoint,
    #[serde(serialize_with = "as_string")]
    pub mu: Scalar,
    /// Coefficient of `X0*X_a` in `g_{0j}`.
    #[serde(serialize_with = "as_string")]
    pub lambda: Scalar,
    /// Coefficient of `X_a^2` in `g_{0j}`.
    #[serde(serialize_with = "as_string")]
    pub alpha: Scalar,
    pub a: usize,
    pub j: usize,
    pub q_nonsingular: bool,
    pub projected_nonsingular: bool,
}

fn as_string<S: serde::Serializer>(v: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Locate the unique point `Q` of `X` projecting to the coordinate point
/// `P'_a` of `X'`, and compare the Jacobian verdicts at `Q` and `P'_a`.
///
/// `gb` must be 0-reduced with 0 a free vertex of its initial complex, and
/// `X'` must contain `P'_a`. The witness `g_{0j}` is the element with
/// leading monomial `X0*X_j` whose support contains `X0*X_a`.
pub fn fiber_over_coordinate_point(ideal: &Ideal, gb: &GroebnerBasis, a: usize) -> Result<FiberResult> {
    let n = gb.nvars();
    let field = gb.field();
    if a == 0 || a >= n {
        return Err(Error::Domain(format!("vertex {a} is not in 1..{}", n - 1)));
    }
    let projected = free_vertex_extraction(gb)?;
    let p_prime = ProjectivePoint::coordinate(field, n - 1, a - 1);
    if !point_on_variety(&projected.to_ideal(), &p_prime)? {
        return Err(Error::HypothesisNotMet(format!("P'_{a} is not on the projected curve")));
    }
    let x0xa = Monomial::squarefree(n, [0, a]);
    let xa2 = Monomial::var(n, a).with_exponent(a, 2);
    let witness = gb
        .elements()
        .iter()
        .zip(gb.leading_monomials())
        .enumerate()
        .find_map(|(idx, (g, lead))| {
            let support: Vec<usize> = lead.support().collect();
            let j = match support[..] {
                [0, j] if lead.is_squarefree() => j,
                _ => return None,
            };
            g.coefficient(&x0xa).map(|lambda| (idx, j, lambda.clone()))
        });
    let Some((idx, j, lambda)) = witness else {
        return Err(Error::HypothesisNotMet(format!(
            "no element g_0j has X0*X{a} in its support (the second case of the main argument)"
        )));
    };
    let g = &gb.elements()[idx];
    let alpha = g.coefficient(&xa2).cloned().unwrap_or_else(|| Scalar::zero(field));
    let mu = -&(&alpha / &lambda);
    let mut coords = vec![Scalar::zero(field); n];
    coords[0] = mu.clone();
    coords[a] = Scalar::one(field);
    let q = ProjectivePoint::new(coords)?;
    if !point_on_variety(ideal, &q)? {
        return Err(Error::InternalConsistency(format!("fiber point {q} does not lie on the curve")));
    }
    let q_nonsingular = jacobian_rank_at(&gb.to_ideal(), &q)? == n - 2;
    let projected_nonsingular = jacobian_rank_at(&projected.to_ideal(), &p_prime)? == n - 3;
    Ok(FiberResult {
        q,
        mu,
        lambda,
        alpha,
        a,
        j,
        q_nonsingular,
        projected_nonsingular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::poly::{parse_polynomial, Field, MonomialOrder};

    const QQ: Field = Field::Rational;

    fn lex_gb(n: usize, gens: &[&str]) -> (Ideal, GroebnerBasis) {
        let i = Ideal::new(QQ, n, gens.iter().map(|s| parse_polynomial(s, QQ, n).unwrap()).collect()).unwrap();
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap().reduced_basis();
        (i, gb)
    }

    #[test]
    fn monomial_projection_drops_x0() {
        let (i, gb) = lex_gb(4, &["X0*X1", "X0*X2", "X1*X2"]);
        let p = project_from_p0(&i, &gb, &GbConfig::default()).unwrap();
        let s: Vec<String> = p.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(s, vec!["X0*X1"]);
    }

    #[test]
    fn projection_of_the_twisted_cubic_is_a_conic() {
        let (i, gb) = lex_gb(4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        let p = project_from_p0(&i, &gb, &GbConfig::default()).unwrap();
        let s: Vec<String> = p.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(s, vec!["X0*X2 - X1^2"]);
    }

    #[test]
    fn fiber_with_zero_alpha_is_the_coordinate_point() {
        let (i, gb) = lex_gb(4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        let f = fiber_over_coordinate_point(&i, &gb, 3).unwrap();
        assert_eq!(f.j, 3);
        assert!(f.mu.is_zero());
        assert_eq!(f.q, ProjectivePoint::coordinate(QQ, 4, 3));
        assert!(f.q_nonsingular && f.projected_nonsingular);
    }

    #[test]
    fn fiber_solves_the_witness_equation() {
        // g_02 = X0*X2 + 3*X2^2 after the change X0 -> X0 + 3*X2 of the conic
        let (i, gb) = lex_gb(3, &["X0*X2 + 3*X2^2 - X1^2"]);
        let f = fiber_over_coordinate_point(&i, &gb, 2).unwrap();
        assert_eq!(f.mu, Scalar::from_i64(QQ, -3));
        assert!((&(&f.mu * &f.lambda) + &f.alpha).is_zero());
        assert_eq!(f.q_nonsingular, f.projected_nonsingular);
    }

    #[test]
    fn missing_witness_is_reported() {
        let (i, gb) = lex_gb(3, &["X0*X2 - X1^2"]);
        assert!(matches!(fiber_over_coordinate_point(&i, &gb, 1), Err(Error::HypothesisNotMet(_))));
    }
}
