//! Hilbert series and Hilbert polynomials of graded quotients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{terms, Ideal, MonomialIdeal};
use crate::poly::{Monomial, MonomialOrder, Scalar};

/// `HS(t) = numerator(t) / (1 - t)^denominator_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficients of the numerator, lowest degree first, trailing zeros trimmed.
    pub numerator: Vec<BigInt>,
    pub denominator_power: usize,
}

/// A polynomial in one variable with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_add_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
    trim(a);
}

/// `1 - t^d`.
fn one_minus_t_pow(d: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] = BigInt::one();
    v[d as usize] -= BigInt::one();
    trim(&mut v);
    v
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Numerator of the Hilbert series of `S/M` over `(1-t)^nvars`, by the
/// pivot recursion `N(M) = N(M + (x)) + t N(M : x)`.
fn numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let minimal = MonomialIdeal::new(gens.first().map_or(0, Monomial::nvars), gens.iter().cloned());
    let gens = minimal.generators();
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens
            .iter()
            .fold(vec![BigInt::one()], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }
    // pivot on the variable occurring in the most non-coprime generators
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|g| g.support().count() > 1) {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot_var = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("nonempty");
    let x = Monomial::var(n, pivot_var);
    let mut sum: Vec<Monomial> = gens.to_vec();
    sum.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.with_exponent(pivot_var, g.exponent(pivot_var).saturating_sub(1)))
        .collect();
    let mut out = numerator(&sum);
    poly_add_shifted(&mut out, &numerator(&colon), 1);
    out
}

impl HilbertSeries {
    /// Hilbert series of `S / M` for `S` in `M.nvars()` variables.
    pub fn of_monomial_ideal(m: &MonomialIdeal) -> Self {
        let mut num = if m.is_zero() {
            vec![BigInt::one()]
        } else {
            numerator(m.generators())
        };
        trim(&mut num);
        HilbertSeries {
            numerator: num,
            denominator_power: m.nvars(),
        }
    }

    /// Cancel factors `(1 - t)` so that the numerator does not vanish at 1.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut d = self.denominator_power;
        while d > 0 && !num.is_empty() && num.iter().sum::<BigInt>().is_zero() {
            // synthetic division by (1 - t): q_i = sum_{j <= i} num_j
            let mut q = Vec::with_capacity(num.len());
            let mut acc = BigInt::zero();
            for c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            trim(&mut q);
            num = q;
            d -= 1;
        }
        HilbertSeries {
            numerator: num,
            denominator_power: d,
        }
    }

    /// Krull dimension of the quotient: the pole order at `t = 1`.
    pub fn krull_dimension(&self) -> usize {
        let r = self.reduced();
        if r.numerator.is_empty() {
            0
        } else {
            r.denominator_power
        }
    }

    /// Coefficient of `t^k` in the expansion.
    pub fn coefficient(&self, k: u32) -> BigInt {
        let n = self.denominator_power as i64;
        if n == 0 {
            return self.numerator.get(k as usize).cloned().unwrap_or_default();
        }
        self.numerator
            .iter()
            .enumerate()
            .filter(|(i, _)| *i as u32 <= k)
            .map(|(i, c)| c * binomial(k as i64 - i as i64 + n - 1, n - 1))
            .sum()
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        let r = self.reduced();
        let d = r.denominator_power;
        if d == 0 || r.numerator.is_empty() {
            return HilbertPolynomial { coeffs: Vec::new() };
        }
        // sum_i h_i * C(k - i + d - 1, d - 1)
        let mut total: Vec<BigRational> = vec![BigRational::zero(); d];
        for (i, h) in r.numerator.iter().enumerate() {
            let mut poly: Vec<BigRational> = vec![BigRational::one()];
            for j in 1..d {
                // multiply by (k - i + j) / j
                let shift = BigRational::from_integer(BigInt::from(j as i64 - i as i64));
                let inv = BigRational::new(BigInt::one(), BigInt::from(j));
                let mut next = vec![BigRational::zero(); poly.len() + 1];
                for (e, c) in poly.iter().enumerate() {
                    next[e + 1] += c * &inv;
                    next[e] += c * &shift * &inv;
                }
                poly = next;
            }
            for (e, c) in poly.into_iter().enumerate() {
                total[e] += c * BigRational::from_integer(h.clone());
            }
        }
        let mut hp = HilbertPolynomial { coeffs: total };
        hp.trim();
        hp
    }
}

impl HilbertPolynomial {
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        let mut hp = HilbertPolynomial { coeffs };
        hp.trim();
        hp
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn evaluate(&self, k: i64) -> BigRational {
        let k = BigRational::from_integer(BigInt::from(k));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &k + c)
    }

    /// Integer coefficients, when all coefficients are integral.
    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }
}

impl std::fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let coeff = if a.is_one() && e > 0 { String::new() } else { a.to_string() };
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            parts.push((sign, format!("{coeff}{var}")));
        }
        for (i, (sign, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl Serialize for HilbertPolynomial {
    /// Serialized as the list of coefficients, constant term first.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.integer_coefficients() {
            Some(ints) => ints.serialize(s),
            None => self
                .coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .serialize(s),
        }
    }
}

/// Number of monomials of degree `d` outside `m` (brute-force enumeration).
pub fn count_standard_monomials(m: &MonomialIdeal, d: u32) -> usize {
    Monomial::all_of_degree(m.nvars(), d)
        .into_iter()
        .filter(|x| !m.contains(x))
        .count()
}

/// `dim_K (S/I)_d` by linear algebra on the span of `{m * g}` in degree `d`,
/// without any Gröbner basis. Requires homogeneous generators.
pub fn graded_dimension_by_linear_algebra(ideal: &Ideal, d: u32) -> Result<usize> {
    if !ideal.is_homogeneous() {
        return Err(Error::Precondition("graded dimensions need a homogeneous ideal".into()));
    }
    let n = ideal.nvars();
    let ord = MonomialOrder::DegRevLex;
    let total = Monomial::all_of_degree(n, d).len();
    // echelon form keyed by pivot monomial
    let mut pivots: BTreeMap<Monomial, Vec<(Monomial, Scalar)>> = BTreeMap::new();
    for g in ideal.generators() {
        let gd = g.homogeneous_degree().expect("homogeneous");
        if gd > d {
            continue;
        }
        let g_sorted = terms::sorted(g, &ord);
        for m in Monomial::all_of_degree(n, d - gd) {
            let mut row: Vec<(Monomial, Scalar)> = g_sorted.iter().map(|(x, c)| (x.mul(&m), c.clone())).collect();
            while let Some((lead, c)) = row.first() {
                match pivots.get(lead) {
                    Some(p) => {
                        let factor = c.clone();
                        row = terms::sub_scaled(&row, &factor, &Monomial::one(n), p, &ord);
                    }
                    None => break,
                }
            }
            if !row.is_empty() {
                terms::make_monic(&mut row);
                pivots.insert(row[0].0.clone(), row);
            }
        }
    }
    Ok(total - pivots.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Field};

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn polynomial_ring_series() {
        let s = HilbertSeries::of_monomial_ideal(&MonomialIdeal::new(3, []));
        assert_eq!(s.coefficient(2), BigInt::from(6));
        assert_eq!(s.krull_dimension(), 3);
        assert_eq!(s.hilbert_polynomial().to_string(), "1/2t^2 + 3/2t + 1");
    }

    #[test]
    fn series_matches_brute_force_counts() {
        let ideals = [
            MonomialIdeal::new(4, [m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 0, 1])]),
            MonomialIdeal::new(3, [m(&[2, 1, 0]), m(&[0, 2, 2]), m(&[1, 0, 3])]),
            MonomialIdeal::new(3, [m(&[1, 1, 1])]),
        ];
        for i in &ideals {
            let s = HilbertSeries::of_monomial_ideal(i);
            for d in 0..8 {
                assert_eq!(s.coefficient(d), BigInt::from(count_standard_monomials(i, d)), "{i} degree {d}");
            }
        }
    }

    #[test]
    fn path_ideal_gives_twisted_cubic_polynomial() {
        let i = MonomialIdeal::new(4, [m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 0, 1])]);
        let hp = HilbertSeries::of_monomial_ideal(&i).hilbert_polynomial();
        assert_eq!(hp.integer_coefficients(), Some(vec![1, 3]));
        assert_eq!(hp.to_string(), "3t + 1");
    }

    #[test]
    fn linear_algebra_dimensions() {
        let f = Field::Rational;
        let i = Ideal::new(f, 3, vec![parse_polynomial("X0^3 + X1^3 + X2^3", f, 3).unwrap()]).unwrap();
        let dims: Vec<usize> = (0..6).map(|d| graded_dimension_by_linear_algebra(&i, d).unwrap()).collect();
        assert_eq!(dims, vec![1, 3, 6, 9, 12, 15]);
    }
}
