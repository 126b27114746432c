use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::{Field, Monomial, MonomialOrder, Scalar};

/// A multivariate polynomial over an exact field.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored. Views sorted by a particular term order are produced on
/// demand with [`Polynomial::sorted_terms`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
    homogeneous_degree: Option<u32>,
}

impl Polynomial {
    fn from_map(field: Field, nvars: usize, terms: BTreeMap<Monomial, Scalar>) -> Self {
        let mut degs = terms.keys().map(Monomial::degree);
        let homogeneous_degree = match degs.next() {
            None => None,
            Some(d) => degs.all(|e| e == d).then_some(d),
        };
        Polynomial {
            field,
            nvars,
            terms,
            homogeneous_degree,
        }
    }

    pub fn zero(field: Field, nvars: usize) -> Self {
        Self::from_map(field, nvars, BTreeMap::new())
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Self {
        Self::monomial(field, Monomial::one(nvars), c)
    }

    pub fn monomial(field: Field, m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            assert_eq!(c.field(), field, "coefficient field differs from polynomial field");
            terms.insert(m, c);
        }
        Self::from_map(field, nvars, terms)
    }

    pub fn var(field: Field, nvars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::var(nvars, i), Scalar::one(field))
    }

    /// Sum the given terms, checking that every monomial and coefficient
    /// belongs to the ring `field[X0..X{nvars-1}]`.
    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: c.field().to_string(),
                });
            }
            accumulate(&mut map, m, c);
        }
        Ok(Self::from_map(field, nvars, map))
    }

    /// Build from integer-coefficient terms, a convenience for tests and corpora.
    pub fn from_int_terms(field: Field, terms: &[(i64, &[u32])]) -> Self {
        let nvars = terms.first().map_or(0, |(_, e)| e.len());
        Self::from_terms(
            field,
            nvars,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.iter().copied()), Scalar::from_i64(field, *c))),
        )
        .expect("consistent term list")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lex-ascending) storage order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// `supp(f)`.
    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Common total degree of all terms, when the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.homogeneous_degree
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree.is_some()
    }

    /// Maximal total degree of a term (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Does any term involve variable `v`?
    pub fn involves(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Terms sorted descending by `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.terms.keys().reduce(|a, b| ord.max(a, b))
    }

    /// `in_<(f)` together with its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, Scalar)> {
        let m = self.leading_monomial(ord).ok_or(Error::EmptyPolynomial)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    pub fn leading_coefficient(&self, ord: &MonomialOrder) -> Option<&Scalar> {
        self.leading_monomial(ord).map(|m| &self.terms[m])
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut map = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut map, m.clone(), c.clone());
        }
        Ok(Self::from_map(self.field, self.nvars, map))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut map = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut map, m.clone(), -c);
        }
        Ok(Self::from_map(self.field, self.nvars, map))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut map = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut map, m1.mul(m2), c1 * c2);
            }
        }
        Ok(Self::from_map(self.field, self.nvars, map))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        let map = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Self::from_map(self.field, self.nvars, map)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        let map = self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect();
        Self::from_map(self.field, self.nvars, map)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::constant(self.field, self.nvars, Scalar::one(self.field));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(ord) {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Formal partial derivative with respect to `X_k`. In characteristic
    /// `p` the terms whose exponent is divisible by `p` vanish.
    pub fn derivative(&self, k: usize) -> Polynomial {
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(k);
            if e == 0 {
                continue;
            }
            let coeff = c.mul_u64(e as u64);
            if coeff.is_zero() {
                continue;
            }
            map.insert(m.with_exponent(k, e - 1), coeff);
        }
        Self::from_map(self.field, self.nvars, map)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: point.len(),
            });
        }
        if let Some(bad) = point.iter().find(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: bad.field().to_string(),
            });
        }
        let mut acc = Scalar::zero(self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e);
                    if t.is_zero() {
                        break;
                    }
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Replace `X_v` by `replacement` (same ring).
    pub fn substitute(&self, v: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(replacement)?;
        let mut powers: Vec<Polynomial> = vec![Self::constant(self.field, self.nvars, Scalar::one(self.field))];
        let mut acc = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * replacement;
                powers.push(next);
            }
            let rest = m.with_exponent(v, 0);
            acc = &acc + &powers[e].mul_term(&rest, c);
        }
        Ok(acc)
    }

    /// Apply a linear change of coordinates `X_i -> images[i]` simultaneously.
    pub fn substitute_all(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: images.len(),
            });
        }
        for img in images {
            self.check_same_ring(img)?;
        }
        let one = Self::constant(self.field, self.nvars, Scalar::one(self.field));
        let mut acc = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let mut t = one.scale(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = &t * &images[i];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Reinterpret in the ring without `X_v`. Fails if `X_v` occurs.
    pub fn remove_var(&self, v: usize) -> Result<Polynomial> {
        if self.involves(v) {
            return Err(Error::Domain(format!("polynomial {self} involves X{v}")));
        }
        let map = self.terms.iter().map(|(m, c)| (m.remove_var(v), c.clone())).collect();
        Ok(Self::from_map(self.field, self.nvars - 1, map))
    }

    /// Reinterpret in the ring without `X0..X{k-1}`; those variables must not occur.
    pub fn drop_prefix(&self, k: usize) -> Result<Polynomial> {
        if let Some(v) = (0..k).find(|&v| self.involves(v)) {
            return Err(Error::Domain(format!("polynomial {self} involves X{v}")));
        }
        let map = self.terms.iter().map(|(m, c)| (m.drop_prefix(k), c.clone())).collect();
        Ok(Self::from_map(self.field, self.nvars - k, map))
    }

    /// Embed into a ring with `k` new leading variables.
    pub fn prepend_vars(&self, k: usize) -> Polynomial {
        let map = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps = std::iter::repeat_n(0, k).chain(m.exponents().iter().copied());
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Self::from_map(self.field, self.nvars + k, map)
    }

    /// Render with terms in descending `ord` order.
    pub fn to_string_ordered(&self, ord: &MonomialOrder) -> String {
        format_terms(self.sorted_terms(ord).into_iter())
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Monomial, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let negative = c.prints_negative();
        let abs = if negative { -c } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{abs}*{m}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    /// Terms in lex-descending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().rev()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&Scalar::one(self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    const QQ: Field = Field::Rational;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, QQ, 4).unwrap()
    }

    #[test]
    fn addition_cancels() {
        let f = p("X0*X2 - X1^2");
        let g = p("X1^2 - X3^2");
        assert_eq!(&f + &g, p("X0*X2 - X3^2"));
    }

    #[test]
    fn derivative_is_formal() {
        let f = p("X0*X2 - X1^2");
        assert_eq!(f.derivative(1), p("-2*X1"));
        let f2 = parse_polynomial("X0*X2 - X1^2", Field::Prime(2), 4).unwrap();
        assert!(f2.derivative(1).is_zero());
    }

    #[test]
    fn evaluation_with_zero_factor() {
        let f = parse_polynomial("X0*X1*X2", QQ, 3).unwrap();
        let pt = [Scalar::one(QQ), Scalar::zero(QQ), Scalar::zero(QQ)];
        assert!(f.evaluate(&pt).unwrap().is_zero());
        assert!(f.evaluate(&pt[..2]).is_err());
    }

    #[test]
    fn leading_terms() {
        let f = p("X0*X2 - X1*X3");
        let (m, c) = f.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(m.to_string(), "X0*X2");
        assert!(c.is_one());
        assert_eq!(Polynomial::zero(QQ, 4).leading_term(&MonomialOrder::Lex), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let f = p("X0");
        let g = parse_polynomial("X0", Field::Prime(3), 4).unwrap();
        assert!(matches!(f.checked_add(&g), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn homogeneity_flag() {
        assert_eq!(p("X0*X1 + X2^2").homogeneous_degree(), Some(2));
        assert!(!p("X0*X1 + X2").is_homogeneous());
        assert!(Polynomial::zero(QQ, 2).is_homogeneous());
    }

    #[test]
    fn substitution_and_variable_removal() {
        let f = p("X0*X2 + X1*X2");
        let g = f.substitute(0, &(-&p("X1"))).unwrap();
        assert!(g.is_zero());
        let h = p("X1*X2 + X3^2").remove_var(0).unwrap();
        assert_eq!(h.nvars(), 3);
        assert_eq!(h.to_string(), "X0*X1 + X2^2");
        assert!(p("X0*X1").remove_var(0).is_err());
        assert_eq!(h.prepend_vars(1), p("X1*X2 + X3^2"));
    }

    #[test]
    fn ordered_rendering() {
        let f = p("X0*X3 + X1*X2");
        assert_eq!(f.to_string_ordered(&MonomialOrder::DegRevLex), "X1*X2 + X0*X3");
        assert_eq!(f.to_string_ordered(&MonomialOrder::Lex), "X0*X3 + X1*X2");
    }
}
