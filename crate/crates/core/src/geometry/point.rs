use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Field, Scalar};

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::Domain("projective point with all coordinates zero".into()));
        };
        let field = first.field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: "mixed coordinate fields".into(),
            });
        }
        let inv = first.inverse()?;
        Ok(ProjectivePoint {
            coords: coords.iter().map(|c| c * &inv).collect(),
        })
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Scalar::from_i64(field, c)).collect())
    }

    /// `P_a`: the point whose only nonzero coordinate is at position `a`.
    pub fn coordinate(field: Field, nvars: usize, a: usize) -> Self {
        let mut coords = vec![Scalar::zero(field); nvars];
        coords[a] = Scalar::one(field);
        ProjectivePoint { coords }
    }

    pub fn coordinates(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// Every point of `P^{nvars-1}` over a prime field, in a canonical order.
    pub fn all_over_prime_field(p: u32, nvars: usize) -> Vec<ProjectivePoint> {
        let field = Field::Prime(p);
        let mut out = Vec::new();
        for lead in 0..nvars {
            let tail = nvars - lead - 1;
            let count = (p as u64).pow(tail as u32);
            for idx in 0..count {
                let mut coords = vec![Scalar::zero(field); nvars];
                coords[lead] = Scalar::one(field);
                let mut rest = idx;
                for c in coords.iter_mut().skip(lead + 1) {
                    *c = Scalar::from_i64(field, (rest % p as u64) as i64);
                    rest /= p as u64;
                }
                out.push(ProjectivePoint { coords });
            }
        }
        out
    }

    /// Points of `P^{nvars-1}(Q)` with coordinates in `{-h, ..., h}`, up to scaling.
    pub fn small_rational(nvars: usize, h: i64) -> Vec<ProjectivePoint> {
        let base = (2 * h + 1) as u64;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for idx in 1..base.pow(nvars as u32) {
            let mut rest = idx;
            let coords: Vec<i64> = (0..nvars)
                .map(|_| {
                    let c = (rest % base) as i64 - h;
                    rest /= base;
                    c
                })
                .collect();
            if let Ok(p) = Self::from_i64(Field::Rational, &coords) {
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        parts.serialize(s)
    }
}

/// Does every generator of `ideal` vanish at `p`?
pub fn point_on_variety(ideal: &Ideal, p: &ProjectivePoint) -> Result<bool> {
    if p.nvars() != ideal.nvars() {
        return Err(Error::Dimension {
            expected: ideal.nvars(),
            found: p.nvars(),
        });
    }
    for g in ideal.generators() {
        if !g.evaluate(p.coordinates())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    #[test]
    fn normalization_is_canonical() {
        let a = ProjectivePoint::from_i64(Field::Rational, &[0, 2, 4]).unwrap();
        let b = ProjectivePoint::from_i64(Field::Rational, &[0, -1, -2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[0:1:2]");
        assert!(ProjectivePoint::from_i64(Field::Rational, &[0, 0]).is_err());
    }

    #[test]
    fn point_counts() {
        assert_eq!(ProjectivePoint::all_over_prime_field(2, 3).len(), 7);
        assert_eq!(ProjectivePoint::all_over_prime_field(3, 4).len(), 40);
        assert_eq!(ProjectivePoint::small_rational(2, 1).len(), 4);
    }

    #[test]
    fn membership() {
        let q = Field::Rational;
        let i = Ideal::new(q, 3, vec![parse_polynomial("X0 - X1", q, 3).unwrap()]).unwrap();
        assert!(point_on_variety(&i, &ProjectivePoint::from_i64(q, &[1, 1, 1]).unwrap()).unwrap());
        let j = Ideal::new(
            q,
            3,
            vec![
                parse_polynomial("X1^2 - X0*X2", q, 3).unwrap(),
                parse_polynomial("X1", q, 3).unwrap(),
            ],
        )
        .unwrap();
        assert!(!point_on_variety(&j, &ProjectivePoint::coordinate(q, 3, 1)).unwrap());
        assert!(point_on_variety(&j, &ProjectivePoint::coordinate(q, 3, 0)).unwrap());
    }
}
