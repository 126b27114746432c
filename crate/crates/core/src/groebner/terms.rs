//! Term vectors sorted descending by a monomial order: the working
//! representation for division and Buchberger's algorithm.

use std::cmp::Ordering;

use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar};

pub(crate) type Term = (Monomial, Scalar);

pub(crate) fn sorted(p: &Polynomial, ord: &MonomialOrder) -> Vec<Term> {
    p.sorted_terms(ord)
        .into_iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

pub(crate) fn to_poly(field: Field, nvars: usize, terms: Vec<Term>) -> Polynomial {
    Polynomial::from_terms(field, nvars, terms).expect("terms come from the same ring")
}

/// `a - c * m * b`, both inputs sorted descending.
pub(crate) fn sub_scaled(a: &[Term], c: &Scalar, m: &Monomial, b: &[Term], ord: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<Term> = b.first().map(|(bm, bc)| (bm.mul(m), bc * c));
    while i < a.len() || bj.is_some() {
        let take = match (&a.get(i), &bj) {
            (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match take {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (ym, yc) = bj.take().expect("present");
                out.push((ym, -&yc));
                j += 1;
                bj = b.get(j).map(|(bm, bc)| (bm.mul(m), bc * c));
            }
            Ordering::Equal => {
                let (ym, yc) = bj.take().expect("present");
                let s = &a[i].1 - &yc;
                if !s.is_zero() {
                    out.push((ym, s));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|(bm, bc)| (bm.mul(m), bc * c));
            }
        }
    }
    out
}

pub(crate) fn make_monic(t: &mut [Term]) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inverse().expect("nonzero");
            for (_, c) in t.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// Index of the reducer for monomial `m`: among elements whose leading
/// monomial divides `m`, the one with the order-largest leading monomial
/// (lowest index on ties).
pub(crate) fn find_divisor(m: &Monomial, leads: &[Monomial], ord: &MonomialOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, l) in leads.iter().enumerate() {
        if l.divides(m) {
            best = match best {
                Some(b) if ord.cmp(l, &leads[b]) != Ordering::Greater => Some(b),
                _ => Some(k),
            };
        }
    }
    best
}

/// Full reduction of `f` modulo `basis` (each element sorted, nonzero).
/// Returns the remainder and, when requested, the quotients as term lists.
pub(crate) fn reduce_terms(
    mut f: Vec<Term>,
    basis: &[Vec<Term>],
    leads: &[Monomial],
    ord: &MonomialOrder,
    track_quotients: bool,
) -> (Vec<Term>, Vec<Vec<Term>>) {
    let mut rem: Vec<Term> = Vec::new();
    let mut quotients: Vec<Vec<Term>> = if track_quotients {
        vec![Vec::new(); basis.len()]
    } else {
        Vec::new()
    };
    let mut start = 0;
    while start < f.len() {
        let (m, c) = &f[start];
        match find_divisor(m, leads, ord) {
            Some(k) => {
                let g = &basis[k];
                let factor = c / &g[0].1;
                let mono = m.div(&g[0].0).expect("divides");
                if track_quotients {
                    quotients[k].push((mono.clone(), factor.clone()));
                }
                f = sub_scaled(&f[start..], &factor, &mono, g, ord);
                start = 0;
            }
            None => {
                rem.push(f[start].clone());
                start += 1;
            }
        }
    }
    (rem, quotients)
}

/// S-polynomial of two monic sorted polynomials.
pub(crate) fn s_poly_monic(f: &[Term], g: &[Term], ord: &MonomialOrder) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = lcm.div(&f[0].0).expect("lcm");
    let mg = lcm.div(&g[0].0).expect("lcm");
    let field = f[0].1.field();
    let zero: Vec<Term> = Vec::new();
    let a = sub_scaled(&zero, &-&Scalar::one(field), &mf, f, ord);
    let a = &a[..];
    sub_scaled(a, &Scalar::one(field), &mg, g, ord)
}
