use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Dense exponent vector over `X0..Xn`.
///
/// The derived `Ord` compares exponent vectors lexicographically, which
/// coincides with the lex order for `X0 > X1 > ... > Xn`. It is used for
/// canonical storage only; term orders go through [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    /// `X_sigma`: the squarefree product of the listed variables.
    pub fn squarefree(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(nvars);
        for v in vars {
            m.exps[v] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }

    /// Drop variable `i`, renumbering the later ones down by one.
    pub fn remove_var(&self, i: usize) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &e)| e)
                .collect(),
        }
    }

    /// Drop the first `k` variables.
    pub fn drop_prefix(&self, k: usize) -> Monomial {
        Monomial {
            exps: self.exps[k..].iter().copied().collect(),
        }
    }

    /// All monomials of total degree `d` in `nvars` variables, in lex-descending order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::new(cur.iter().copied()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{i}")?;
            } else {
                write!(f, "X{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial order with `X0 > X1 > ... > Xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Compare weighted degree, break ties by degrevlex. Weights are positive
    /// and non-increasing so that `X0 > X1 > ... > Xn` still holds.
    Weighted(Vec<u64>),
    /// Lex on the first `block` variables, then `rest` on the remaining ones.
    Elimination { block: usize, rest: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::OrderViolation("weights must be positive".into()));
        }
        if weights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OrderViolation(
                "weights must be non-increasing to keep X0 > X1 > ... > Xn".into(),
            ));
        }
        Ok(MonomialOrder::Weighted(weights))
    }

    /// Block order eliminating the first `block` variables.
    pub fn elimination(block: usize, rest: MonomialOrder) -> Self {
        MonomialOrder::Elimination {
            block,
            rest: Box::new(rest),
        }
    }

    /// The order induced on the variables after dropping the first `k`.
    pub fn restrict_drop_prefix(&self, k: usize) -> MonomialOrder {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => self.clone(),
            MonomialOrder::Weighted(w) => MonomialOrder::Weighted(w.get(k..).unwrap_or(&[]).to_vec()),
            MonomialOrder::Elimination { block, rest } => {
                if k >= *block {
                    rest.restrict_drop_prefix(k - block)
                } else {
                    MonomialOrder::Elimination {
                        block: block - k,
                        rest: rest.clone(),
                    }
                }
            }
        }
    }

    /// The order induced after removing variable `v`.
    pub fn restrict_remove_var(&self, v: usize) -> MonomialOrder {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => self.clone(),
            MonomialOrder::Weighted(w) => {
                let mut w = w.clone();
                if v < w.len() {
                    w.remove(v);
                }
                MonomialOrder::Weighted(w)
            }
            MonomialOrder::Elimination { block, rest } => {
                if v < *block {
                    MonomialOrder::Elimination {
                        block: block - 1,
                        rest: rest.clone(),
                    }
                } else {
                    MonomialOrder::Elimination {
                        block: *block,
                        rest: Box::new(rest.restrict_remove_var(v - block)),
                    }
                }
            }
        }
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Dimension {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if let MonomialOrder::Weighted(w) = self {
            if w.len() != a.nvars() {
                return Err(Error::Dimension {
                    expected: w.len(),
                    found: a.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; both monomials must live in the same ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_slices(self, a.exponents(), b.exponents())
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent on the last differing variable is larger
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

fn cmp_slices(ord: &MonomialOrder, a: &[u32], b: &[u32]) -> Ordering {
    match ord {
        MonomialOrder::Lex => lex(a, b),
        MonomialOrder::DegRevLex => degrevlex(a, b),
        MonomialOrder::Weighted(w) => {
            let wa: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
            let wb: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
            wa.cmp(&wb).then_with(|| degrevlex(a, b))
        }
        MonomialOrder::Elimination { block, rest } => {
            let k = (*block).min(a.len());
            lex(&a[..k], &b[..k]).then_with(|| cmp_slices(rest, &a[k..], &b[k..]))
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Weighted(w) => {
                let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "weighted:{}", w.join(","))
            }
            MonomialOrder::Elimination { block, rest } => write!(f, "elim({block},{rest})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            other => {
                if let Some(w) = other.strip_prefix("weighted:") {
                    let weights = w
                        .split(',')
                        .map(|x| x.trim().parse::<u64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| Error::OrderViolation(format!("bad weight vector `{w}`")))?;
                    MonomialOrder::weighted(weights)
                } else {
                    Err(Error::OrderViolation(format!(
                        "unknown monomial order `{other}` (expected lex or degrevlex)"
                    )))
                }
            }
        }
    }
}

impl Serialize for MonomialOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MonomialOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
