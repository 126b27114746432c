use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar};

use super::terms::{self, Term};
use super::{Ideal, MonomialIdeal};

/// Knobs for a single Buchberger run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbConfig {
    /// Abort once an S-pair of larger total degree has to be processed.
    pub degree_ceiling: u32,
    /// Re-check every S-pair of the output after the run.
    pub verify: bool,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            degree_ceiling: 12,
            verify: cfg!(debug_assertions),
        }
    }
}

impl GbConfig {
    pub fn with_ceiling(degree_ceiling: u32) -> Self {
        GbConfig {
            degree_ceiling,
            ..Self::default()
        }
    }
}

/// Result of dividing a polynomial by a list of divisors:
/// `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// `(lcm/in f) * f * lc(g) - (lcm/in g) * g * lc(f)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let (mf, cf) = f.leading_term(ord)?;
    let (mg, cg) = g.leading_term(ord)?;
    let lcm = mf.lcm(&mg);
    let a = f.mul_term(&lcm.div(&mf).expect("lcm"), &cg);
    let b = g.mul_term(&lcm.div(&mg).expect("lcm"), &cf);
    a.checked_sub(&b)
}

/// Multivariate division of `f` by `divisors`. When several leading
/// monomials divide the current term, the order-largest one is used.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<Reduction> {
    for d in divisors {
        if d.is_zero() {
            return Err(Error::EmptyPolynomial);
        }
        if d.field() != f.field() {
            return Err(Error::FieldMismatch {
                left: f.field().to_string(),
                right: d.field().to_string(),
            });
        }
        if d.nvars() != f.nvars() {
            return Err(Error::Dimension {
                expected: f.nvars(),
                found: d.nvars(),
            });
        }
    }
    let basis: Vec<Vec<Term>> = divisors.iter().map(|d| terms::sorted(d, ord)).collect();
    let leads: Vec<Monomial> = basis.iter().map(|b| b[0].0.clone()).collect();
    let (rem, quots) = terms::reduce_terms(terms::sorted(f, ord), &basis, &leads, ord, true);
    Ok(Reduction {
        remainder: terms::to_poly(f.field(), f.nvars(), rem),
        quotients: quots
            .into_iter()
            .map(|q| terms::to_poly(f.field(), f.nvars(), q))
            .collect(),
    })
}

/// A Gröbner basis together with its order and cached leading monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: Field,
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
    is_reduced: bool,
    is_zero_reduced: bool,
}

impl GroebnerBasis {
    /// Wrap a list the caller asserts to be a Gröbner basis. Nothing is checked
    /// beyond ring consistency; see [`GroebnerBasis::from_elements`].
    pub fn from_elements_unchecked(field: Field, nvars: usize, elements: Vec<Polynomial>, order: MonomialOrder) -> Self {
        let elements: Vec<Polynomial> = elements.into_iter().filter(|e| !e.is_zero()).collect();
        let leads = elements
            .iter()
            .map(|e| e.leading_monomial(&order).expect("nonzero").clone())
            .collect();
        let mut gb = GroebnerBasis {
            field,
            nvars,
            order,
            elements,
            leads,
            is_reduced: false,
            is_zero_reduced: false,
        };
        gb.is_zero_reduced = gb.check_zero_reduced();
        gb.is_reduced = gb.check_reduced();
        gb
    }

    /// Wrap a list and certify the Gröbner property by reducing every S-pair.
    pub fn from_elements(field: Field, nvars: usize, elements: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        Ideal::new(field, nvars, elements.clone())?;
        let gb = Self::from_elements_unchecked(field, nvars, elements, order);
        gb.verify()?;
        Ok(gb)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_reduced(&self) -> bool {
        self.is_reduced
    }

    pub fn is_zero_reduced(&self) -> bool {
        self.is_zero_reduced
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.field, self.nvars, self.elements.clone()).expect("same ring")
    }

    /// The element whose leading monomial is `m`, if any.
    pub fn element_with_lead(&self, m: &Monomial) -> Option<&Polynomial> {
        self.leads.iter().position(|l| l == m).map(|k| &self.elements[k])
    }

    fn sorted_elements(&self) -> Vec<Vec<Term>> {
        self.elements.iter().map(|e| terms::sorted(e, &self.order)).collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Reduction> {
        reduce(f, &self.elements, &self.order)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.field() != self.field || f.nvars() != self.nvars {
            return Err(Error::FieldMismatch {
                left: format!("{}[{} vars]", self.field, self.nvars),
                right: format!("{}[{} vars]", f.field(), f.nvars()),
            });
        }
        let basis = self.sorted_elements();
        let (rem, _) = terms::reduce_terms(terms::sorted(f, &self.order), &basis, &self.leads, &self.order, false);
        Ok(terms::to_poly(self.field, self.nvars, rem))
    }

    /// Ideal membership via normal form.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Check that every S-polynomial reduces to zero.
    pub fn verify(&self) -> Result<()> {
        let basis: Vec<Vec<Term>> = self
            .sorted_elements()
            .into_iter()
            .map(|mut t| {
                terms::make_monic(&mut t);
                t
            })
            .collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if self.leads[i].is_coprime(&self.leads[j]) {
                    continue;
                }
                let s = terms::s_poly_monic(&basis[i], &basis[j], &self.order);
                let (rem, _) = terms::reduce_terms(s, &basis, &self.leads, &self.order, false);
                if !rem.is_empty() {
                    return Err(Error::Precondition(format!(
                        "not a Groebner basis: S({i},{j}) has nonzero normal form {}",
                        terms::to_poly(self.field, self.nvars, rem)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Minimal generators of the ideal of leading monomials.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.leads.iter().cloned())
    }

    fn check_zero_reduced(&self) -> bool {
        for (i, li) in self.leads.iter().enumerate() {
            if li.exponent(0) == 0 {
                continue;
            }
            for (j, e) in self.elements.iter().enumerate() {
                if i != j && e.contains_monomial(li) {
                    return false;
                }
            }
        }
        true
    }

    fn check_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, e)| {
            e.leading_coefficient(&self.order).is_some_and(Scalar::is_one)
                && e.support().all(|m| {
                    self.leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }

    /// The reduced Gröbner basis: minimal, monic, tails fully reduced,
    /// sorted by descending leading monomial.
    pub fn reduced_basis(&self) -> GroebnerBasis {
        let ord = &self.order;
        let mut keep: Vec<usize> = Vec::new();
        for (i, li) in self.leads.iter().enumerate() {
            let redundant = self
                .leads
                .iter()
                .enumerate()
                .any(|(j, lj)| j != i && lj.divides(li) && (lj != li || j < i));
            if !redundant {
                keep.push(i);
            }
        }
        let basis: Vec<Vec<Term>> = keep.iter().map(|&i| terms::sorted(&self.elements[i], ord)).collect();
        let leads: Vec<Monomial> = keep.iter().map(|&i| self.leads[i].clone()).collect();
        let mut out: Vec<(Monomial, Polynomial)> = Vec::new();
        for (k, b) in basis.iter().enumerate() {
            let others: Vec<Vec<Term>> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, t)| t.clone())
                .collect();
            let other_leads: Vec<Monomial> = leads
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, l)| l.clone())
                .collect();
            let (mut rem, _) = terms::reduce_terms(b.clone(), &others, &other_leads, ord, false);
            terms::make_monic(&mut rem);
            out.push((leads[k].clone(), terms::to_poly(self.field, self.nvars, rem)));
        }
        out.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let elements = out.into_iter().map(|(_, p)| p).collect();
        let mut gb = GroebnerBasis::from_elements_unchecked(self.field, self.nvars, elements, ord.clone());
        gb.is_reduced = true;
        gb
    }

    /// Reduce tails so that no leading monomial divisible by `X0` occurs in
    /// the support of another element. The ideal is unchanged.
    pub fn zero_reduce(&self) -> GroebnerBasis {
        let ord = &self.order;
        let mut elems: Vec<Vec<Term>> = self.sorted_elements();
        'outer: loop {
            let leads: Vec<Monomial> = elems.iter().map(|e| e[0].0.clone()).collect();
            for (i, li) in leads.iter().enumerate() {
                if li.exponent(0) == 0 {
                    continue;
                }
                for j in 0..elems.len() {
                    if i == j {
                        continue;
                    }
                    if let Some((_, c)) = elems[j].iter().find(|(m, _)| m == li) {
                        let factor = c / &elems[i][0].1;
                        let one = Monomial::one(self.nvars);
                        let next = terms::sub_scaled(&elems[j], &factor, &one, &elems[i], ord);
                        if next.is_empty() {
                            elems.remove(j);
                        } else {
                            elems[j] = next;
                        }
                        continue 'outer;
                    }
                }
            }
            break;
        }
        let elements = elems
            .into_iter()
            .map(|t| terms::to_poly(self.field, self.nvars, t))
            .collect();
        let gb = GroebnerBasis::from_elements_unchecked(self.field, self.nvars, elements, ord.clone());
        debug_assert!(gb.is_zero_reduced);
        gb
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and the coprimality and chain criteria. The output is a
/// minimal Gröbner basis of monic elements, in order of discovery.
pub fn buchberger(ideal: &Ideal, ord: &MonomialOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let elems: Vec<Vec<Term>> = ideal.generators().iter().map(|g| terms::sorted(g, ord)).collect();
    run(ideal.field(), ideal.nvars(), elems, 0, ord, cfg)
}

/// Extend a known Gröbner basis by new generators; pairs among the old
/// elements are not revisited.
pub fn extend_basis(gb: &GroebnerBasis, new: &[Polynomial], cfg: &GbConfig) -> Result<GroebnerBasis> {
    let ord = gb.order();
    let mut elems: Vec<Vec<Term>> = gb.elements().iter().map(|g| terms::sorted(g, ord)).collect();
    let first_new = elems.len();
    for p in new {
        if p.field() != gb.field() || p.nvars() != gb.nvars() {
            return Err(Error::FieldMismatch {
                left: format!("{}[{} vars]", gb.field(), gb.nvars()),
                right: format!("{}[{} vars]", p.field(), p.nvars()),
            });
        }
        if !p.is_zero() {
            elems.push(terms::sorted(p, ord));
        }
    }
    run(gb.field(), gb.nvars(), elems, first_new, ord, cfg)
}

fn run(
    field: Field,
    nvars: usize,
    mut basis: Vec<Vec<Term>>,
    first_new: usize,
    ord: &MonomialOrder,
    cfg: &GbConfig,
) -> Result<GroebnerBasis> {
    for b in basis.iter_mut() {
        terms::make_monic(b);
    }
    let mut leads: Vec<Monomial> = basis.iter().map(|b| b[0].0.clone()).collect();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let add_pairs = |j: usize, leads: &[Monomial], pending: &mut Vec<Pair>, set: &mut HashSet<(usize, usize)>, lo: usize| {
        for i in 0..j {
            if i < lo && j < lo {
                continue;
            }
            pending.push(Pair {
                i,
                j,
                lcm: leads[i].lcm(&leads[j]),
            });
            set.insert((i, j));
        }
    };
    for j in 0..basis.len() {
        add_pairs(j, &leads, &mut pending, &mut pending_set, first_new);
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm degree, then smallest lcm in the order
        let mut best = 0;
        for k in 1..pending.len() {
            let (a, b) = (&pending[k], &pending[best]);
            let key = a.lcm.degree().cmp(&b.lcm.degree()).then_with(|| ord.cmp(&a.lcm, &b.lcm));
            if key == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pending.swap_remove(best);
        pending_set.remove(&(pair.i, pair.j));

        if leads[pair.i].is_coprime(&leads[pair.j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && leads[k].divides(&pair.lcm)
                && !pending_set.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending_set.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        let degree = pair.lcm.degree();
        if degree > cfg.degree_ceiling {
            return Err(Error::DegreeCeiling {
                ceiling: cfg.degree_ceiling,
                degree,
            });
        }
        let s = terms::s_poly_monic(&basis[pair.i], &basis[pair.j], ord);
        let (mut rem, _) = terms::reduce_terms(s, &basis, &leads, ord, false);
        if rem.is_empty() {
            continue;
        }
        terms::make_monic(&mut rem);
        let d = rem[0].0.degree();
        if d > cfg.degree_ceiling {
            return Err(Error::DegreeCeiling {
                ceiling: cfg.degree_ceiling,
                degree: d,
            });
        }
        leads.push(rem[0].0.clone());
        basis.push(rem);
        let j = basis.len() - 1;
        add_pairs(j, &leads, &mut pending, &mut pending_set, 0);
    }

    // minimalize, keeping the earliest element among equal leading monomials
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let mut by_index: BTreeMap<usize, Vec<Term>> = BTreeMap::new();
    for i in keep {
        by_index.insert(i, std::mem::take(&mut basis[i]));
    }
    let elements = by_index
        .into_values()
        .map(|t| terms::to_poly(field, nvars, t))
        .collect();
    let gb = GroebnerBasis::from_elements_unchecked(field, nvars, elements, ord.clone());
    if cfg.verify {
        gb.verify()
            .map_err(|e| Error::InternalConsistency(format!("Buchberger output failed verification: {e}")))?;
    }
    Ok(gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    const QQ: Field = Field::Rational;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, QQ, 4).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(QQ, 4, gens.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn s_polynomial_of_coprime_monomials_vanishes() {
        let s = s_polynomial(&p("X0*X2"), &p("X1*X3"), &MonomialOrder::Lex).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn s_polynomial_by_hand() {
        // X2*f - X0*g = X0*X3^2 - X2*X3^2
        let f = p("X0*X1 - X3^2");
        let g = p("X1*X2 - X3^2");
        let s = s_polynomial(&f, &g, &MonomialOrder::Lex).unwrap();
        let oracle = &p("X2").checked_mul(&f).unwrap() - &p("X0").checked_mul(&g).unwrap();
        assert_eq!(s, oracle);
        assert_eq!(s, p("X3^2*X0 - X3^2*X2"));
        let lcm = p("X0*X1*X2").leading_monomial(&MonomialOrder::Lex).unwrap().clone();
        assert_eq!(
            MonomialOrder::Lex.cmp(s.leading_monomial(&MonomialOrder::Lex).unwrap(), &lcm),
            std::cmp::Ordering::Less
        );
        assert_eq!(s_polynomial(&Polynomial::zero(QQ, 4), &g, &MonomialOrder::Lex), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn division_examples() {
        let g = [p("X0*X2 - X1^2")];
        let r = reduce(&p("X1^2"), &g, &MonomialOrder::Lex).unwrap();
        assert_eq!(r.remainder, p("X1^2"));
        assert!(r.quotients[0].is_zero());
        let r = reduce(&p("X0*X2"), &g, &MonomialOrder::Lex).unwrap();
        assert_eq!(r.remainder, p("X1^2"));
        assert_eq!(r.quotients[0], p("1"));
    }

    #[test]
    fn division_prefers_largest_leading_monomial() {
        // both X0 and X0*X1 divide X0*X1*X2; X0*X1 is larger in lex
        let divs = [p("X0 - X3"), p("X0*X1 - X2^2")];
        let r = reduce(&p("X0*X1*X2"), &divs, &MonomialOrder::Lex).unwrap();
        assert!(!r.quotients[1].is_zero());
        let recombined = &(&(&r.quotients[0] * &divs[0]) + &(&r.quotients[1] * &divs[1])) + &r.remainder;
        assert_eq!(recombined, p("X0*X1*X2"));
    }

    #[test]
    fn monomial_input_is_returned_unchanged() {
        let i = ideal(&["X0*X2", "X1*X3"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), i.generators());
        assert!(gb.is_reduced());
    }

    #[test]
    fn hankel_minors_are_a_basis() {
        let i = ideal(&["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), i.generators());
        assert_eq!(gb.initial_ideal().to_string(), "(X0*X2, X0*X3, X1*X3)");
    }

    #[test]
    fn degree_ceiling_aborts() {
        let i = ideal(&["X0^3 - X1*X2^2", "X1^3 - X0*X3^2"]);
        let cfg = GbConfig::with_ceiling(3);
        assert!(matches!(
            buchberger(&i, &MonomialOrder::Lex, &cfg),
            Err(Error::DegreeCeiling { .. })
        ));
    }

    #[test]
    fn zero_reduction_replaces_the_offending_element() {
        let g = GroebnerBasis::from_elements_unchecked(
            QQ,
            4,
            vec![p("X0*X1 - X3^2"), p("X0*X2 + X0*X1")],
            MonomialOrder::Lex,
        );
        assert!(!g.is_zero_reduced());
        let z = g.zero_reduce();
        assert_eq!(z.elements(), &[p("X0*X1 - X3^2"), p("X0*X2 + X3^2")]);
        assert!(z.is_zero_reduced());
        // cross-check with the division oracle
        let r = reduce(&p("X0*X2 + X0*X1"), &[p("X0*X1 - X3^2")], &MonomialOrder::Lex).unwrap();
        assert_eq!(r.remainder, p("X0*X2 + X3^2"));
    }

    #[test]
    fn reduced_and_monomial_bases_are_fixed_points() {
        let i = ideal(&["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &GbConfig::default()).unwrap().reduced_basis();
        assert!(gb.is_reduced() && gb.is_zero_reduced());
        assert_eq!(gb.zero_reduce(), gb);
        assert_eq!(gb.reduced_basis(), gb);
        let mono = buchberger(&ideal(&["X0*X1", "X2^2"]), &MonomialOrder::Lex, &GbConfig::default()).unwrap();
        assert_eq!(mono.zero_reduce().elements(), mono.elements());
        assert_eq!(mono.reduced_basis().elements(), mono.elements());
    }

    #[test]
    fn from_elements_rejects_non_bases() {
        let r = GroebnerBasis::from_elements(QQ, 4, vec![p("X0*X1 - X3^2"), p("X0*X2 + X3^2")], MonomialOrder::Lex);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
