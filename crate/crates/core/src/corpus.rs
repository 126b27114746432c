//! Built-in example ideals.

use serde::Serialize;

use crate::collapse::{collapse, Graph};
use crate::error::Result;
use crate::geometry::{curve_summary, SmoothnessConfig};
use crate::groebner::{buchberger, Ideal, MonomialIdeal};
use crate::hilbert::{count_standard_monomials, graded_dimension_by_linear_algebra};
use crate::poly::{parse_polynomial, Field, Monomial, MonomialOrder, Polynomial};
use crate::search::{coefficient_grid, verify_non_tree_is_singular, CandidateFamily, SearchMode, SweepBudget};
use crate::simplicial::SimplicialComplex;

fn x(field: Field, nvars: usize, i: usize) -> Polynomial {
    Polynomial::var(field, nvars, i)
}

fn minor(a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial) -> Polynomial {
    &(a * d) - &(b * c)
}

/// 2-minors of `[[X0 .. X_{n-1}], [X1 .. X_n]]`: the rational normal curve of
/// degree `n` in `P^n`. Minor `(i, j)`, `i < j`, is `X_i X_{j+1} - X_j X_{i+1}`.
pub fn rational_normal_curve(field: Field, n: usize) -> Ideal {
    let nv = n + 1;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            gens.push(minor(&x(field, nv, i), &x(field, nv, j), &x(field, nv, i + 1), &x(field, nv, j + 1)));
        }
    }
    Ideal::new(field, nv, gens).expect("well-formed generators")
}

/// The path `0 - 1 - ... - n`.
pub fn rational_normal_curve_graph(n: usize) -> Graph {
    Graph::path(n + 1)
}

/// 2-minors of
/// `[[X1+X2+X3, X1+X3, X1], [X1+X3, X1, X0+X1]]`, whose initial ideal is
/// `(X0X1, X0X2, X1X2)` for every order with `X0 > X1 > X2 > X3`.
pub fn star_example(field: Field) -> Ideal {
    let p = |s: &str| parse_polynomial(s, field, 4).expect("valid literal");
    let top = [p("X1 + X2 + X3"), p("X1 + X3"), p("X1")];
    let bottom = [p("X1 + X3"), p("X1"), p("X0 + X1")];
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            gens.push(minor(&top[i], &top[j], &bottom[i], &bottom[j]));
        }
    }
    Ideal::new(field, 4, gens).expect("well-formed generators")
}

/// The star with edges `03, 13, 23`.
pub fn star_graph() -> Graph {
    Graph::star(4, 3)
}

/// Two quadrics in `P^3` meeting in a smooth genus-one curve.
pub fn quadric_intersection(field: Field) -> Result<Ideal> {
    let gens = ["X0^2 + X1^2 + X2^2 + X3^2", "X0^2 + 2*X1^2 + 3*X2^2 + 4*X3^2"]
        .iter()
        .map(|s| parse_polynomial(s, field, 4))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(field, 4, gens)
}

/// The Fermat plane cubic.
pub fn plane_cubic(field: Field) -> Result<Ideal> {
    Ideal::new(field, 3, vec![parse_polynomial("X0^3 + X1^3 + X2^3", field, 3)?])
}

/// `(X_i X_{j+1} : 0 <= i < j <= n-1)`.
pub fn path_initial_ideal(n: usize) -> MonomialIdeal {
    MonomialIdeal::new(
        n + 1,
        (0..n).flat_map(|i| (i + 1..n).map(move |j| Monomial::squarefree(n + 1, [i, j + 1]))),
    )
}

/// One line of the built-in corpus check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> ExampleCheck {
    ExampleCheck {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn flat_degrees(ideal: &Ideal, ord: &MonomialOrder, cfg: &SmoothnessConfig, top: u32) -> Result<bool> {
    let gb = buchberger(ideal, ord, &cfg.gb)?;
    let init = gb.initial_ideal();
    for d in 0..=top {
        if graded_dimension_by_linear_algebra(ideal, d)? != count_standard_monomials(&init, d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-certify the built-in examples: rational normal curves, the star
/// example over several fields and orders, the triangle and 4-cycle sweeps
/// over `F_2`, and the genus-one curves.
pub fn verify_examples(cfg: &SmoothnessConfig) -> Result<Vec<ExampleCheck>> {
    let mut out = Vec::new();
    for n in 3..=6 {
        let ideal = rational_normal_curve(Field::Rational, n);
        let gb = buchberger(&ideal, &MonomialOrder::Lex, &cfg.gb)?;
        let init = gb.initial_ideal();
        let delta = SimplicialComplex::from_monomial_ideal(&init)?;
        let path = rational_normal_curve_graph(n);
        let ell = collapse(&delta.to_graph()?).ell;
        let summary = curve_summary(&ideal, &MonomialOrder::Lex, cfg)?;
        let ok = init == path_initial_ideal(n)
            && delta == SimplicialComplex::from_graph(&path)
            && ell == n
            && summary.hilbert_polynomial == vec![1, n as i64]
            && summary.genus == 0
            && summary.smoothness.as_ref().is_some_and(|s| s.is_smooth())
            && flat_degrees(&ideal, &MonomialOrder::Lex, cfg, 4)?;
        out.push(check(
            format!("rational normal curve n={n}"),
            ok,
            format!("in = {init}, ell = {ell}, P(t) = {}t + {}, genus {}", n, summary.hilbert_polynomial[0], summary.genus),
        ));
    }
    let star = SimplicialComplex::from_graph(&star_graph());
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)] {
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let ideal = star_example(field);
            let init = buchberger(&ideal, &ord, &cfg.gb)?.initial_ideal();
            let summary = curve_summary(&ideal, &ord, cfg)?;
            let ok = init == star.stanley_reisner()
                && SimplicialComplex::from_monomial_ideal(&init)? == star
                && summary.genus == 0
                && summary.smoothness.as_ref().is_some_and(|s| s.is_smooth());
            out.push(check(format!("star example {field} {ord}"), ok, format!("in = {init}, genus {}", summary.genus)));
        }
    }
    let budget = SweepBudget {
        smoothness: cfg.clone(),
        ..SweepBudget::default()
    };
    for (name, graph) in [("triangle", Graph::cycle(3)), ("4-cycle", Graph::cycle(4))] {
        let field = Field::Prime(2);
        let family = CandidateFamily::new(&graph, MonomialOrder::Lex, field, coefficient_grid(field, 0, 1), SearchMode::Exhaustive)?;
        let r = verify_non_tree_is_singular(&family, &budget)?;
        out.push(check(
            format!("{name} sweep Fp:2"),
            r.pass && r.p0_violations.is_empty() && !r.truncated,
            format!("{} valid, {} smooth, {} inconclusive", r.valid, r.smooth, r.inconclusive),
        ));
    }
    for (name, ideal) in [("plane cubic", plane_cubic(Field::Rational)?), ("two quadrics", quadric_intersection(Field::Rational)?)] {
        let s = curve_summary(&ideal, &MonomialOrder::DegRevLex, cfg)?;
        let ok = s.genus == 1 && s.smoothness.as_ref().is_some_and(|v| v.is_smooth());
        out.push(check(format!("genus of {name}"), ok, format!("degree {}, genus {}", s.degree, s.genus)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_shapes() {
        let rnc = rational_normal_curve(Field::Rational, 3);
        let s: Vec<String> = rnc.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(s, vec!["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        assert_eq!(rational_normal_curve(Field::Rational, 6).generators().len(), 15);
        assert_eq!(star_example(Field::Rational).generators().len(), 3);
        assert!(star_example(Field::Prime(2)).is_homogeneous());
    }
}
