use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, extend_basis, GbConfig, GroebnerBasis, Ideal};
use crate::hilbert::HilbertSeries;
use crate::linalg;
use crate::poly::{Field, MonomialOrder, Polynomial, Scalar};

use super::point::{point_on_variety, ProjectivePoint};

/// Formal partial derivatives: `rows[i][k] = d gens[i] / d X_k`.
pub fn jacobian(gens: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    gens.iter()
        .map(|g| (0..g.nvars()).map(|k| g.derivative(k)).collect())
        .collect()
}

fn rank_at(jac: &[Vec<Polynomial>], p: &ProjectivePoint) -> Result<usize> {
    let rows = jac
        .iter()
        .map(|row| row.iter().map(|d| d.evaluate(p.coordinates())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(rows))
}

/// Rank of the Jacobian matrix of the generators of `ideal` at `p`.
pub fn jacobian_rank_at(ideal: &Ideal, p: &ProjectivePoint) -> Result<usize> {
    if !point_on_variety(ideal, p)? {
        return Err(Error::Precondition(format!("{p} is not a point of the variety")));
    }
    rank_at(&jacobian(ideal.generators()), p)
}

/// Jacobian criterion at `p` for a variety of dimension `dim` in `P^n`:
/// nonsingular iff the rank equals `n - dim`.
pub fn is_nonsingular_at(ideal: &Ideal, p: &ProjectivePoint, dim: usize) -> Result<bool> {
    let n = ideal.nvars() - 1;
    if dim > n {
        return Err(Error::Domain(format!("dimension {dim} exceeds that of P^{n}")));
    }
    Ok(jacobian_rank_at(ideal, p)? == n - dim)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessConfig {
    /// Largest power `X_i^k` tried as a certificate of emptiness.
    pub power_bound: u32,
    pub gb: GbConfig,
    /// Seed for the random row combinations of the Jacobian.
    pub seed: u64,
    /// Number of random row combinations tried before the full minor set.
    pub random_batches: usize,
    /// Largest number of minors the full fallback may generate.
    pub full_minor_limit: usize,
    /// Largest number of points probed when looking for a singular witness.
    pub point_search_limit: usize,
}

impl Default for SmoothnessConfig {
    fn default() -> Self {
        SmoothnessConfig {
            power_bound: 8,
            gb: GbConfig::default(),
            seed: 0,
            random_batches: 4,
            full_minor_limit: 4000,
            point_search_limit: 5000,
        }
    }
}

/// Outcome of the global smoothness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Smoothness {
    Smooth,
    /// `points` are singular points found by search; `variable_without_power`
    /// names a variable with no pure power in the initial ideal of the
    /// complete singular-locus ideal, which proves the locus is nonempty.
    Singular {
        points: Vec<ProjectivePoint>,
        variable_without_power: Option<usize>,
    },
    Inconclusive {
        reason: String,
    },
}

impl Smoothness {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Smoothness::Smooth)
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, Smoothness::Singular { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Smoothness::Inconclusive { .. })
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// Determinants of `rows` against every `rows.len()`-subset of columns,
/// by Laplace expansion along the first row with shared sub-minors.
fn maximal_minors(rows: &[Vec<Polynomial>], ncols: usize) -> Vec<Polynomial> {
    fn det(rows: &[Vec<Polynomial>], depth: usize, cols: u64, memo: &mut HashMap<(usize, u64), Polynomial>) -> Polynomial {
        if let Some(p) = memo.get(&(depth, cols)) {
            return p.clone();
        }
        let row = &rows[depth];
        let zero = Polynomial::zero(row[0].field(), row[0].nvars());
        let out = if depth + 1 == rows.len() {
            row[cols.trailing_zeros() as usize].clone()
        } else {
            let mut acc = zero;
            for (pos, c) in (0..64).filter(|c| cols & (1 << c) != 0).enumerate() {
                if row[c].is_zero() {
                    continue;
                }
                let sub = det(rows, depth + 1, cols & !(1 << c), memo);
                if sub.is_zero() {
                    continue;
                }
                let term = &row[c] * &sub;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        };
        memo.insert((depth, cols), out.clone());
        out
    }
    let mut memo = HashMap::new();
    k_subsets(ncols, rows.len())
        .into_iter()
        .map(|cols| det(rows, 0, cols, &mut memo))
        .collect()
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Rational => Scalar::from_i64(field, rng.gen_range(-7..=7)),
        Field::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p as i64)),
    }
}

/// Smallest `k` such that `X_i^k` is a leading monomial, per variable.
fn pure_powers(gb: &GroebnerBasis) -> Vec<Option<u32>> {
    let n = gb.nvars();
    let mut out = vec![None; n];
    for m in gb.leading_monomials() {
        let support: Vec<usize> = m.support().collect();
        if let [i] = support[..] {
            let e = m.exponent(i);
            out[i] = Some(out[i].map_or(e, |old: u32| old.min(e)));
        }
    }
    out
}

enum Certificate {
    Empty,
    TooLarge(usize, u32),
    Missing(usize),
}

fn certificate(gb: &GroebnerBasis, bound: u32) -> Certificate {
    let powers = pure_powers(gb);
    if let Some(i) = powers.iter().position(Option::is_none) {
        return Certificate::Missing(i);
    }
    if let Some((i, e)) = powers.iter().enumerate().find_map(|(i, e)| e.filter(|&e| e > bound).map(|e| (i, e))) {
        return Certificate::TooLarge(i, e);
    }
    Certificate::Empty
}

/// Add the nonzero normal forms of `minors` to the basis.
fn absorb(gb: &GroebnerBasis, minors: Vec<Polynomial>, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let mut fresh = Vec::new();
    for m in minors {
        if m.is_zero() {
            continue;
        }
        let nf = gb.normal_form(&m)?;
        if !nf.is_zero() {
            fresh.push(nf);
        }
    }
    if fresh.is_empty() {
        return Ok(gb.clone());
    }
    extend_basis(gb, &fresh, cfg)
}

fn witness_candidates(field: Field, nvars: usize, limit: usize) -> Vec<ProjectivePoint> {
    match field {
        Field::Prime(p) => {
            let count = (1..=nvars as u32).map(|k| (p as u64).saturating_pow(k - 1)).sum::<u64>();
            if count as usize <= limit {
                ProjectivePoint::all_over_prime_field(p, nvars)
            } else {
                Vec::new()
            }
        }
        Field::Rational => {
            if 3usize.saturating_pow(nvars as u32) <= limit {
                ProjectivePoint::small_rational(nvars, 1)
            } else {
                Vec::new()
            }
        }
    }
}

fn singular_points(
    ideal: &Ideal,
    jac: &[Vec<Polynomial>],
    codim: usize,
    points: impl IntoIterator<Item = ProjectivePoint>,
) -> Result<Vec<ProjectivePoint>> {
    let mut out = Vec::new();
    for p in points {
        if point_on_variety(ideal, &p)? && rank_at(jac, &p)? < codim {
            out.push(p);
        }
    }
    Ok(out)
}

fn degree_or_inconclusive<T>(r: Result<T>) -> Result<std::result::Result<T, Smoothness>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::DegreeCeiling { ceiling, degree }) => Ok(Err(Smoothness::Inconclusive {
            reason: format!("Groebner basis degree {degree} exceeded the ceiling {ceiling}"),
        })),
        Err(e) => Err(e),
    }
}

/// Largest Macaulay matrix (rows) built by the linear emptiness test.
const MACAULAY_ROW_LIMIT: usize = 6000;

/// Prime used for the modular rank in the linear certificate over `Q`.
const CERTIFICATE_PRIME: u32 = 2_147_483_629;

/// Is every monomial of degree `d` in `I + (extra)`? `gb` is a Gröbner
/// basis of the homogeneous ideal `I`; the test compares the span of the
/// normal forms of `m * f` (`f` in `extra`, `deg m = d - deg f`) with the
/// standard monomials of degree `d`.
fn fills_degree(gb: &GroebnerBasis, extra: &[Polynomial], d: u32) -> Result<Option<bool>> {
    let n = gb.nvars();
    let initial = gb.initial_ideal();
    let standard: Vec<_> = crate::poly::Monomial::all_of_degree(n, d)
        .into_iter()
        .filter(|m| !initial.contains(m))
        .collect();
    if standard.is_empty() {
        return Ok(Some(true));
    }
    let index: HashMap<_, usize> = standard.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut rows_needed = 0usize;
    for f in extra {
        let e = f.total_degree();
        if e <= d {
            rows_needed += binomial((d - e) as usize + n - 1, n - 1);
        }
    }
    if rows_needed > MACAULAY_ROW_LIMIT {
        return Ok(None);
    }
    let field = gb.field();
    let one = Scalar::one(field);
    // rank over Q is at least the rank modulo any prime
    let p = match field {
        Field::Prime(p) => p,
        Field::Rational => CERTIFICATE_PRIME,
    };
    let mut rows = Vec::with_capacity(rows_needed);
    for f in extra {
        let e = f.total_degree();
        if e > d {
            continue;
        }
        for m in crate::poly::Monomial::all_of_degree(n, d - e) {
            let nf = gb.normal_form(&f.mul_term(&m, &one))?;
            let mut row = vec![0u64; standard.len()];
            for (mono, c) in nf.terms() {
                match linalg::residue(c, p) {
                    Some(r) => row[index[mono]] = r,
                    None => return Ok(Some(false)),
                }
            }
            rows.push(row);
        }
    }
    Ok(Some(linalg::rank_residues(rows, p as u64) == standard.len()))
}

/// Linear certificate that `V(I + extra)` is empty: some degree up to
/// `bound` is filled completely.
fn linearly_empty(gb: &GroebnerBasis, extra: &[Polynomial], bound: u32, degrees: u32) -> Result<bool> {
    let Some(low) = extra.iter().filter(|f| !f.is_zero()).map(Polynomial::total_degree).min() else {
        return Ok(false);
    };
    for d in (low..=bound.max(low)).take(degrees as usize) {
        match fills_degree(gb, extra, d)? {
            Some(true) => return Ok(true),
            Some(false) => continue,
            None => break,
        }
    }
    Ok(false)
}

/// Decide whether `V(I)` is a smooth curve over the algebraic closure of the
/// coefficient field.
///
/// Coordinate points are probed first. Then the singular-locus ideal
/// `I + (maximal minors of the Jacobian)` is shown to be irrelevant: first
/// with minors of random row combinations of the Jacobian (which lie in the
/// ideal of minors) by filling a whole degree, then with every minor through
/// a Gröbner basis, where `V` is empty exactly when every variable has a pure
/// power among the leading monomials.
pub fn is_smooth_projective_curve(ideal: &Ideal, cfg: &SmoothnessConfig) -> Result<Smoothness> {
    let field = ideal.field();
    let nvars = ideal.nvars();
    if nvars < 2 {
        return Err(Error::NotACurve(-1));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::Domain("smoothness of a projective curve needs a homogeneous ideal".into()));
    }
    let ord = MonomialOrder::DegRevLex;
    let gb = match degree_or_inconclusive(buchberger(ideal, &ord, &cfg.gb))? {
        Ok(gb) => gb,
        Err(v) => return Ok(v),
    };
    let hp = HilbertSeries::of_monomial_ideal(&gb.initial_ideal()).hilbert_polynomial();
    if hp.degree() != 1 {
        return Err(Error::NotACurve(hp.degree()));
    }
    let gens = gb.elements().to_vec();
    let jac = jacobian(&gens);
    let codim = nvars - 2;
    let basis_ideal = gb.to_ideal();

    let coordinate: Vec<ProjectivePoint> = (0..nvars).map(|a| ProjectivePoint::coordinate(field, nvars, a)).collect();
    let found = singular_points(&basis_ideal, &jac, codim, coordinate)?;
    if !found.is_empty() {
        return Ok(Smoothness::Singular {
            points: found,
            variable_without_power: None,
        });
    }
    if codim == 0 {
        return Ok(Smoothness::Smooth);
    }

    let total = binomial(gens.len(), codim).saturating_mul(binomial(nvars, codim));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let batches = if gens.len() > codim { cfg.random_batches } else { 0 };
    let mut sampled = Vec::new();
    for _ in 0..batches {
        let rows: Vec<Vec<Polynomial>> = (0..codim)
            .map(|_| {
                let coeffs: Vec<Scalar> = gens.iter().map(|_| random_scalar(field, &mut rng)).collect();
                (0..nvars)
                    .map(|k| {
                        jac.iter()
                            .zip(&coeffs)
                            .fold(Polynomial::zero(field, nvars), |acc, (row, c)| &acc + &row[k].scale(c))
                    })
                    .collect()
            })
            .collect();
        sampled.extend(maximal_minors(&rows, nvars).into_iter().filter(|m| !m.is_zero()));
        if linearly_empty(&gb, &sampled, cfg.power_bound, 1)? {
            return Ok(Smoothness::Smooth);
        }
    }
    if batches > 0 && linearly_empty(&gb, &sampled, cfg.power_bound, u32::MAX)? {
        return Ok(Smoothness::Smooth);
    }

    if total > cfg.full_minor_limit {
        return Ok(Smoothness::Inconclusive {
            reason: format!("{total} Jacobian minors exceed the limit {}", cfg.full_minor_limit),
        });
    }
    let mut all = Vec::with_capacity(total);
    for rows in k_subsets(gens.len(), codim) {
        let sub: Vec<Vec<Polynomial>> = (0..gens.len())
            .filter(|r| rows & (1 << r) != 0)
            .map(|r| jac[r].clone())
            .collect();
        all.extend(maximal_minors(&sub, nvars).into_iter().filter(|m| !m.is_zero()));
    }
    if batches == 0 && linearly_empty(&gb, &all, cfg.power_bound, u32::MAX)? {
        return Ok(Smoothness::Smooth);
    }
    let current = match degree_or_inconclusive(absorb(&gb, all, &cfg.gb))? {
        Ok(g) => g,
        Err(v) => return Ok(v),
    };
    match certificate(&current, cfg.power_bound) {
        Certificate::Empty => Ok(Smoothness::Smooth),
        Certificate::TooLarge(i, e) => Ok(Smoothness::Inconclusive {
            reason: format!("smallest power of X{i} in the singular locus ideal is {e}, above the bound {}", cfg.power_bound),
        }),
        Certificate::Missing(i) => {
            let points = singular_points(
                &basis_ideal,
                &jac,
                codim,
                witness_candidates(field, nvars, cfg.point_search_limit),
            )?;
            Ok(Smoothness::Singular {
                points,
                variable_without_power: Some(i),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    const QQ: Field = Field::Rational;

    fn ideal(field: Field, n: usize, gens: &[&str]) -> Ideal {
        Ideal::new(field, n, gens.iter().map(|s| parse_polynomial(s, field, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn ranks_at_the_first_coordinate_point() {
        let p0 = ProjectivePoint::coordinate(QQ, 3, 0);
        let triangle = ideal(QQ, 3, &["X0*X1*X2"]);
        assert_eq!(jacobian_rank_at(&triangle, &p0).unwrap(), 0);
        assert!(!is_nonsingular_at(&triangle, &p0, 1).unwrap());
        let conic = ideal(QQ, 3, &["X0*X2 - X1^2"]);
        assert_eq!(jacobian_rank_at(&conic, &p0).unwrap(), 1);
        assert!(is_nonsingular_at(&conic, &p0, 1).unwrap());
        let off = ProjectivePoint::coordinate(QQ, 3, 1);
        assert!(matches!(jacobian_rank_at(&conic, &off), Err(Error::Precondition(_))));
    }

    #[test]
    fn minors_of_a_two_by_three_matrix() {
        let rows = vec![
            vec![Polynomial::var(QQ, 3, 0), Polynomial::var(QQ, 3, 1), Polynomial::var(QQ, 3, 2)],
            vec![Polynomial::var(QQ, 3, 1), Polynomial::var(QQ, 3, 2), Polynomial::var(QQ, 3, 0)],
        ];
        let m: Vec<String> = maximal_minors(&rows, 3).iter().map(|p| p.to_string()).collect();
        assert_eq!(m, vec!["X0*X2 - X1^2", "X0^2 - X1*X2", "X0*X1 - X2^2"]);
    }

    #[test]
    fn conic_and_twisted_cubic_are_smooth() {
        let conic = ideal(QQ, 3, &["X0*X2 - X1^2"]);
        assert_eq!(is_smooth_projective_curve(&conic, &SmoothnessConfig::default()).unwrap(), Smoothness::Smooth);
        let cubic = ideal(QQ, 4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        assert_eq!(is_smooth_projective_curve(&cubic, &SmoothnessConfig::default()).unwrap(), Smoothness::Smooth);
    }

    #[test]
    fn nodal_cubic_is_singular() {
        let nodal = ideal(QQ, 3, &["X1^2*X2 - X0^3 - X0^2*X2"]);
        let v = is_smooth_projective_curve(&nodal, &SmoothnessConfig::default()).unwrap();
        match v {
            Smoothness::Singular { points, .. } => {
                assert_eq!(points, vec![ProjectivePoint::coordinate(QQ, 3, 2)]);
            }
            other => panic!("expected singular, got {other:?}"),
        }
        // node moved to [1:1:1], away from the coordinate points
        let f = parse_polynomial("X1^2*X2 - X0^3 - X0^2*X2", QQ, 3).unwrap();
        let shift = [
            parse_polynomial("X0 - X2", QQ, 3).unwrap(),
            parse_polynomial("X1 - X2", QQ, 3).unwrap(),
            parse_polynomial("X2", QQ, 3).unwrap(),
        ];
        let shifted = Ideal::new(QQ, 3, vec![f.substitute_all(&shift).unwrap()]).unwrap();
        let v = is_smooth_projective_curve(&shifted, &SmoothnessConfig::default()).unwrap();
        let one = ProjectivePoint::from_i64(QQ, &[1, 1, 1]).unwrap();
        assert!(matches!(&v, Smoothness::Singular { points, variable_without_power: Some(_) } if points == &vec![one]));
    }

    #[test]
    fn surfaces_are_rejected() {
        let plane = ideal(QQ, 4, &["X0"]);
        assert!(matches!(
            is_smooth_projective_curve(&plane, &SmoothnessConfig::default()),
            Err(Error::NotACurve(2))
        ));
    }
}
