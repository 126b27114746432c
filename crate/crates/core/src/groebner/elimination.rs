use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Scalar};
use crate::simplicial::SimplicialComplex;

use super::{buchberger, GbConfig, GroebnerBasis, Ideal, MonomialIdeal};

fn prefix_len(drop_vars: &[usize]) -> Result<usize> {
    let mut sorted = drop_vars.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().enumerate().any(|(k, &v)| k != v) {
        return Err(Error::UnsupportedElimination(format!(
            "variables {drop_vars:?} are not a prefix X0..Xk of the variable list"
        )));
    }
    Ok(sorted.len())
}

/// Gröbner basis of `I ∩ K[X_k..X_n]` (renumbered from `X0`) under the
/// restriction of `rest_order`, computed with the block order
/// `(lex on the dropped block, rest_order on the others)`.
pub fn elimination_basis(
    ideal: &Ideal,
    drop_vars: &[usize],
    rest_order: &MonomialOrder,
    cfg: &GbConfig,
) -> Result<GroebnerBasis> {
    let k = prefix_len(drop_vars)?;
    if k > ideal.nvars() {
        return Err(Error::UnsupportedElimination(format!(
            "cannot drop {k} variables from a ring with {}",
            ideal.nvars()
        )));
    }
    let block = MonomialOrder::elimination(k, rest_order.clone());
    let gb = buchberger(ideal, &block, cfg)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| (0..k).all(|v| !g.involves(v)))
        .map(|g| g.drop_prefix(k))
        .collect::<Result<Vec<_>>>()?;
    let restricted = rest_order.restrict_drop_prefix(k);
    Ok(GroebnerBasis::from_elements_unchecked(ideal.field(), ideal.nvars() - k, kept, restricted).reduced_basis())
}

/// `I ∩ K[remaining variables]` by block elimination; `drop_vars` must be a
/// prefix `{X0, ..., Xk}`.
pub fn eliminate(ideal: &Ideal, drop_vars: &[usize], rest_order: &MonomialOrder, cfg: &GbConfig) -> Result<Ideal> {
    Ok(elimination_basis(ideal, drop_vars, rest_order, cfg)?.to_ideal())
}

/// Is vertex 0 free (in exactly one edge) in the graph `complex_of(in(G))`?
pub fn zero_is_free(initial: &MonomialIdeal) -> Result<bool> {
    let delta = SimplicialComplex::from_monomial_ideal(initial)?;
    Ok(delta.dimension() <= 1 && delta.vertex_degree(0) == 1)
}

/// Projection basis for a 0-reduced basis whose complex has 0 as a free
/// vertex: the elements `g_sigma` with `0 ∉ sigma`, moved to `K[X1..Xn]`.
/// They form a Gröbner basis of `I ∩ K[X1..Xn]`.
pub fn free_vertex_extraction(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    let initial = gb.initial_ideal();
    if !initial.is_squarefree() {
        return Err(Error::Precondition("initial ideal is not squarefree".into()));
    }
    if !zero_is_free(&initial)? {
        return Err(Error::Precondition(
            "vertex 0 is not a free vertex of the initial complex; use general elimination".into(),
        ));
    }
    if !gb.is_zero_reduced() {
        return Err(Error::Precondition(
            "basis is not 0-reduced; call zero_reduce first or use general elimination".into(),
        ));
    }
    let mut kept = Vec::new();
    for (g, lead) in gb.elements().iter().zip(gb.leading_monomials()) {
        if lead.exponent(0) > 0 {
            continue;
        }
        if g.involves(0) {
            return Err(Error::InternalConsistency(format!(
                "element {g} has leading monomial free of X0 but involves X0"
            )));
        }
        kept.push(g.drop_prefix(1)?);
    }
    let order = gb.order().restrict_drop_prefix(1);
    let out = GroebnerBasis::from_elements_unchecked(gb.field(), gb.nvars() - 1, kept, order);
    out.verify()
        .map_err(|e| Error::InternalConsistency(format!("extracted basis is not a Groebner basis: {e}")))?;
    Ok(out)
}

/// Equality of ideals by mutual normal-form membership.
pub fn ideals_equal(a: &Ideal, b: &Ideal, ord: &MonomialOrder, cfg: &GbConfig) -> Result<bool> {
    if a.field() != b.field() || a.nvars() != b.nvars() {
        return Ok(false);
    }
    let ga = buchberger(a, ord, cfg)?;
    let gb = buchberger(b, ord, cfg)?;
    for g in b.generators() {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Eliminate `X_v` using a linear form `X_v + sum_{i>v} c_i X_i` in the
/// ideal: substitute `X_v -> -sum c_i X_i` into the basis and drop `X_v`.
///
/// The result is checked to be a Gröbner basis of the smaller ring whose
/// initial ideal is the old one with the generator `X_v` removed.
pub fn substitute_linear(gb: &GroebnerBasis, v: usize, coeffs: &BTreeMap<usize, Scalar>) -> Result<GroebnerBasis> {
    let field = gb.field();
    let n = gb.nvars();
    if v >= n {
        return Err(Error::Dimension { expected: n, found: v + 1 });
    }
    if let Some((&bad, _)) = coeffs.iter().find(|(&i, _)| i <= v || i >= n) {
        return Err(Error::OrderViolation(format!(
            "coefficient on X{bad}: the linear form may only involve variables smaller than X{v}"
        )));
    }
    let mut form = Polynomial::var(field, n, v);
    let mut replacement = Polynomial::zero(field, n);
    for (&i, c) in coeffs {
        let term = Polynomial::monomial(field, Monomial::var(n, i), c.clone());
        form = &form + &term;
        replacement = &replacement - &term;
    }
    if !gb.contains(&form)? {
        return Err(Error::Precondition(format!("linear form {form} is not in the ideal")));
    }
    let mut elements = Vec::new();
    let mut leads = Vec::new();
    for (g, lead) in gb.elements().iter().zip(gb.leading_monomials()) {
        if lead.exponent(v) > 0 {
            continue;
        }
        let h = g.substitute(v, &replacement)?.remove_var(v)?;
        if !h.is_zero() {
            elements.push(h);
            leads.push(lead.remove_var(v));
        }
    }
    let order = gb.order().restrict_remove_var(v);
    let out = GroebnerBasis::from_elements_unchecked(field, n - 1, elements, order);
    out.verify()
        .map_err(|e| Error::InternalConsistency(format!("substituted basis lost the Groebner property: {e}")))?;
    let expected = MonomialIdeal::new(n - 1, leads);
    if out.initial_ideal() != expected {
        return Err(Error::InternalConsistency(format!(
            "initial ideal changed under substitution: {} vs {}",
            out.initial_ideal(),
            expected
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Field};

    const QQ: Field = Field::Rational;

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::new(QQ, n, gens.iter().map(|s| parse_polynomial(s, QQ, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn monomial_elimination_keeps_monomials_without_dropped_vars() {
        let i = ideal(4, &["X0*X1", "X1*X2", "X2*X3^2"]);
        let e = eliminate(&i, &[0], &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        let strs: Vec<String> = e.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["X0*X1", "X1*X2^2"]);
    }

    #[test]
    fn non_prefix_elimination_is_rejected() {
        let i = ideal(3, &["X0*X1"]);
        assert!(matches!(
            eliminate(&i, &[1], &MonomialOrder::Lex, &GbConfig::default()),
            Err(Error::UnsupportedElimination(_))
        ));
    }

    #[test]
    fn substitution_drops_the_variable() {
        let i = ideal(3, &["X0 + X1", "X1*X2"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        let coeffs = BTreeMap::from([(1, Scalar::one(QQ))]);
        let out = substitute_linear(&gb, 0, &coeffs).unwrap();
        assert_eq!(out.nvars(), 2);
        assert_eq!(out.elements(), &[parse_polynomial("X0*X1", QQ, 2).unwrap()]);
    }

    #[test]
    fn identity_substitution() {
        let i = ideal(3, &["X1", "X0*X2 - X2^2"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        let out = substitute_linear(&gb, 1, &BTreeMap::new()).unwrap();
        assert_eq!(out.elements(), &[parse_polynomial("X0*X1 - X1^2", QQ, 2).unwrap()]);
    }

    #[test]
    fn substitution_rejects_larger_variables() {
        let i = ideal(3, &["X1 + X0"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        let coeffs = BTreeMap::from([(0, Scalar::one(QQ))]);
        assert!(matches!(substitute_linear(&gb, 1, &coeffs), Err(Error::OrderViolation(_))));
    }
}
