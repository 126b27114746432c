use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GbConfig, Ideal};
use crate::hilbert::{HilbertPolynomial, HilbertSeries};
use crate::poly::{Field, MonomialOrder};

use super::jacobian::{is_smooth_projective_curve, Smoothness, SmoothnessConfig};

/// Numerical invariants of a projective curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveSummary {
    pub field: Field,
    /// `[c0, c1]` with `P(t) = c1*t + c0`.
    pub hilbert_polynomial: Vec<i64>,
    pub degree: i64,
    /// Arithmetic genus `1 - P(0)`.
    pub genus: i64,
    pub smoothness: Option<Smoothness>,
}

fn linear_hilbert_polynomial(ideal: &Ideal, ord: &MonomialOrder, cfg: &GbConfig) -> Result<Vec<i64>> {
    if !ideal.is_homogeneous() {
        return Err(Error::Domain("the Hilbert polynomial needs a homogeneous ideal".into()));
    }
    let gb = buchberger(ideal, ord, cfg)?;
    let hp: HilbertPolynomial = HilbertSeries::of_monomial_ideal(&gb.initial_ideal()).hilbert_polynomial();
    if hp.degree() != 1 {
        return Err(Error::NotACurve(hp.degree()));
    }
    hp.integer_coefficients()
        .ok_or_else(|| Error::InternalConsistency(format!("Hilbert polynomial {hp} has fractional coefficients")))
}

/// Hilbert polynomial, degree and arithmetic genus from the initial ideal.
pub fn genus(ideal: &Ideal, ord: &MonomialOrder, cfg: &GbConfig) -> Result<CurveSummary> {
    let c = linear_hilbert_polynomial(ideal, ord, cfg)?;
    Ok(CurveSummary {
        field: ideal.field(),
        degree: c[1],
        genus: 1 - c[0],
        hilbert_polynomial: c,
        smoothness: None,
    })
}

/// [`genus`] together with the smoothness verdict.
pub fn curve_summary(ideal: &Ideal, ord: &MonomialOrder, cfg: &SmoothnessConfig) -> Result<CurveSummary> {
    let mut s = genus(ideal, ord, &cfg.gb)?;
    s.smoothness = Some(is_smooth_projective_curve(ideal, cfg)?);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        let q = Field::Rational;
        Ideal::new(q, n, gens.iter().map(|s| parse_polynomial(s, q, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn genus_of_standard_curves() {
        let cfg = GbConfig::default();
        let cubic = genus(&ideal(3, &["X0^3 + X1^3 + X2^3"]), &MonomialOrder::DegRevLex, &cfg).unwrap();
        assert_eq!((cubic.degree, cubic.genus), (3, 1));
        let ci = genus(
            &ideal(4, &["X0^2 + X1^2 + X2^2 + X3^2", "X0^2 + 2*X1^2 + 3*X2^2 + 4*X3^2"]),
            &MonomialOrder::DegRevLex,
            &cfg,
        )
        .unwrap();
        assert_eq!(ci.hilbert_polynomial, vec![0, 4]);
        assert_eq!(ci.genus, 1);
        let twisted = genus(&ideal(4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]), &MonomialOrder::Lex, &cfg).unwrap();
        assert_eq!(twisted.hilbert_polynomial, vec![1, 3]);
        assert_eq!(twisted.genus, 0);
    }

    #[test]
    fn non_curves_are_rejected() {
        let r = genus(&ideal(3, &["X0", "X1"]), &MonomialOrder::Lex, &GbConfig::default());
        assert!(matches!(r, Err(Error::NotACurve(0))));
    }
}
