//! Sweeps over ideals `J` with `in(J) = I_Δ` for a graph `Δ`.
//!
//! A candidate is `J = (X_σ + Σ c_m m : σ ∈ mnf(Δ))` where `m` runs over the
//! standard monomials of degree `|σ|` below `X_σ` (its slots) and the `c_m`
//! come from a coefficient grid. A candidate is valid when the initial ideal
//! of its Gröbner basis is exactly `I_Δ`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::Graph;
use crate::error::{Error, Result};
use crate::geometry::{
    curve_summary, is_nonsingular_at, is_smooth_projective_curve, point_on_variety, CurveSummary, ProjectivePoint,
    Smoothness, SmoothnessConfig,
};
use crate::groebner::{buchberger, GbConfig, GroebnerBasis, Ideal, MonomialIdeal};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar};
use crate::simplicial::SimplicialComplex;

/// How candidates are drawn from the grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchMode {
    /// Every coefficient vector, in mixed-radix order.
    Exhaustive,
    /// `count` vectors drawn uniformly from the grid.
    Random { seed: u64, count: usize },
}

/// Budgets shared by every candidate of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepBudget {
    pub max_candidates: usize,
    pub smoothness: SmoothnessConfig,
    /// Stop generating new work once this much time has passed.
    pub wall_clock: Option<Duration>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SweepBudget {
    fn default() -> Self {
        SweepBudget {
            max_candidates: 1_000_000,
            smoothness: SmoothnessConfig::default(),
            wall_clock: None,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CandidateFamily {
    graph: Graph,
    complex: SimplicialComplex,
    target: MonomialIdeal,
    order: MonomialOrder,
    field: Field,
    leads: Vec<Monomial>,
    slots: Vec<Vec<Monomial>>,
    grid: Vec<Scalar>,
    mode: SearchMode,
    seeds: Vec<Ideal>,
}

/// The whole field for a prime field, `{lo, ..., hi}` otherwise.
pub fn coefficient_grid(field: Field, lo: i64, hi: i64) -> Vec<Scalar> {
    match field.elements() {
        Some(all) => all,
        None => (lo..=hi).map(|c| Scalar::from_i64(field, c)).collect(),
    }
}

impl CandidateFamily {
    pub fn new(graph: &Graph, order: MonomialOrder, field: Field, grid: Vec<Scalar>, mode: SearchMode) -> Result<Self> {
        let complex = SimplicialComplex::from_graph(graph).require_full_vertex_set()?;
        let target = complex.stanley_reisner();
        let n = graph.vertex_count();
        if grid.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: "coefficient grid".into(),
            });
        }
        let mut leads: Vec<Monomial> = target.generators().to_vec();
        leads.sort_by(|a, b| order.cmp(b, a));
        let slots = leads
            .iter()
            .map(|lead| {
                let mut below: Vec<Monomial> = Monomial::all_of_degree(n, lead.degree())
                    .into_iter()
                    .filter(|m| order.cmp(m, lead).is_lt() && !target.contains(m))
                    .collect();
                below.sort_by(|a, b| order.cmp(b, a));
                below
            })
            .collect();
        Ok(CandidateFamily {
            graph: graph.clone(),
            complex,
            target,
            order,
            field,
            leads,
            slots,
            grid,
            mode,
            seeds: Vec::new(),
        })
    }

    /// Known candidates evaluated before the grid.
    pub fn with_seeds(mut self, seeds: Vec<Ideal>) -> Self {
        self.seeds = seeds;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn target(&self) -> &MonomialIdeal {
        &self.target
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mode(&self) -> &SearchMode {
        &self.mode
    }

    pub fn seeds(&self) -> &[Ideal] {
        &self.seeds
    }

    /// Leading monomials `X_σ`, order-descending.
    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    /// Trailing monomials allowed for each lead.
    pub fn slots(&self) -> &[Vec<Monomial>] {
        &self.slots
    }

    pub fn slot_count(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    /// Size of the exhaustive grid, if it fits in `u128`.
    pub fn grid_size(&self) -> Option<u128> {
        (self.grid.len() as u128).checked_pow(self.slot_count() as u32)
    }

    fn build(&self, coeffs: &[Scalar]) -> Ideal {
        let n = self.graph.vertex_count();
        let mut it = coeffs.iter();
        let gens = self
            .leads
            .iter()
            .zip(&self.slots)
            .map(|(lead, slots)| {
                let mut terms = vec![(lead.clone(), Scalar::one(self.field))];
                for m in slots {
                    terms.push((m.clone(), it.next().expect("one coefficient per slot").clone()));
                }
                Polynomial::from_terms(self.field, n, terms).expect("terms live in the ring")
            })
            .collect();
        Ideal::new(self.field, n, gens).expect("generators live in the ring")
    }

    /// The candidate with mixed-radix index `idx` (slot 0 least significant).
    pub fn candidate_at(&self, idx: u128) -> Ideal {
        let base = self.grid.len() as u128;
        let mut rest = idx;
        let coeffs: Vec<Scalar> = (0..self.slot_count())
            .map(|_| {
                let c = self.grid[(rest % base) as usize].clone();
                rest /= base;
                c
            })
            .collect();
        self.build(&coeffs)
    }

    /// Inverse of [`candidate_at`](Self::candidate_at) for generators of the
    /// family's shape (monic, leads `X_σ`, trailing terms in the slots, grid
    /// coefficients), in any order.
    pub fn index_of(&self, ideal: &Ideal) -> Option<u128> {
        let base = self.grid.len() as u128;
        let mut digits = Vec::new();
        for (lead, slots) in self.leads.iter().zip(&self.slots) {
            let g = ideal
                .generators()
                .iter()
                .find(|g| g.leading_monomial(&self.order) == Some(lead))?;
            if !g.leading_coefficient(&self.order)?.is_one() || g.len() > slots.len() + 1 {
                return None;
            }
            if g.support().any(|m| m != lead && !slots.contains(m)) {
                return None;
            }
            for m in slots {
                let c = g.coefficient(m).cloned().unwrap_or_else(|| Scalar::zero(self.field));
                digits.push(self.grid.iter().position(|x| *x == c)? as u128);
            }
        }
        Some(digits.iter().rev().fold(0u128, |acc, d| acc * base + d))
    }

    /// Candidates to evaluate, with their labels, after the seeds.
    /// The flag reports truncation by `max_candidates`.
    fn stream(&self, max: usize) -> (Vec<(String, Ideal)>, bool) {
        let mut out: Vec<(String, Ideal)> = self
            .seeds
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("seed:{i}"), s.clone()))
            .collect();
        let room = max.saturating_sub(out.len());
        match &self.mode {
            SearchMode::Exhaustive => {
                let total = self.grid_size().unwrap_or(u128::MAX);
                let take = total.min(room as u128);
                out.extend((0..take).map(|i| (format!("grid:{i}"), self.candidate_at(i))));
                (out, take < total)
            }
            SearchMode::Random { seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let take = (*count).min(room);
                for k in 0..take {
                    let coeffs: Vec<Scalar> = (0..self.slot_count())
                        .map(|_| self.grid[rng.gen_range(0..self.grid.len())].clone())
                        .collect();
                    out.push((format!("random:{k}"), self.build(&coeffs)));
                }
                (out, take < *count)
            }
        }
    }
}

/// Everything learned about one candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateOutcome {
    pub label: String,
    pub generators: Vec<String>,
    pub valid: bool,
    /// Why a candidate was rejected, when it was.
    pub rejection: Option<String>,
    pub smoothness: Option<Smoothness>,
    /// Jacobian verdict at `P0`, for valid candidates.
    pub p0_nonsingular: Option<bool>,
}

impl CandidateOutcome {
    fn singular_points(&self) -> &[ProjectivePoint] {
        match &self.smoothness {
            Some(Smoothness::Singular { points, .. }) => points,
            _ => &[],
        }
    }
}

/// Certify `in(J) = I_Δ` and return the Gröbner basis.
pub fn certify_candidate(family: &CandidateFamily, ideal: &Ideal, cfg: &GbConfig) -> Result<Option<GroebnerBasis>> {
    let gb = buchberger(ideal, &family.order, cfg)?;
    Ok((gb.initial_ideal() == family.target).then_some(gb))
}

/// Validity, smoothness and the `P0` verdict for one candidate.
pub fn evaluate_candidate(family: &CandidateFamily, label: &str, ideal: &Ideal, cfg: &SmoothnessConfig) -> Result<CandidateOutcome> {
    let mut out = CandidateOutcome {
        label: label.to_string(),
        generators: ideal.generators().iter().map(|g| g.to_string_ordered(&family.order)).collect(),
        valid: false,
        rejection: None,
        smoothness: None,
        p0_nonsingular: None,
    };
    let gb = match certify_candidate(family, ideal, &cfg.gb) {
        Ok(Some(gb)) => gb,
        Ok(None) => {
            out.rejection = Some("initial ideal differs from the target".into());
            return Ok(out);
        }
        Err(Error::DegreeCeiling { ceiling, degree }) => {
            out.rejection = Some(format!("Groebner basis degree {degree} exceeded the ceiling {ceiling}"));
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    out.valid = true;
    let basis = gb.to_ideal();
    let p0 = ProjectivePoint::coordinate(family.field, ideal.nvars(), 0);
    if point_on_variety(&basis, &p0)? {
        out.p0_nonsingular = Some(is_nonsingular_at(&basis, &p0, 1)?);
    }
    out.smoothness = Some(is_smooth_projective_curve(ideal, cfg)?);
    Ok(out)
}

/// Counts and witnesses of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph_edges: Vec<(usize, usize)>,
    pub vertex_count: usize,
    pub field: Field,
    pub order: String,
    pub search: SearchMode,
    pub slot_count: usize,
    pub generated: usize,
    pub valid: usize,
    pub rejected: usize,
    pub smooth: usize,
    pub singular: usize,
    pub inconclusive: usize,
    pub truncated: bool,
    /// Valid candidates where the `P0` verdict disagrees with vertex 0 being free.
    pub p0_checked: usize,
    pub p0_violations: Vec<String>,
    /// Singular points found, with the number of candidates they occur in.
    pub singular_points: BTreeMap<String, usize>,
    pub exemplars: BTreeMap<String, CandidateOutcome>,
    /// Smooth candidates of a non-tree, or smooth candidates of positive genus.
    pub alarms: Vec<CandidateOutcome>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    /// A fixed-width summary table.
    pub fn table(&self) -> String {
        let rows = [
            ("generated", self.generated),
            ("valid", self.valid),
            ("rejected", self.rejected),
            ("smooth", self.smooth),
            ("singular", self.singular),
            ("inconclusive", self.inconclusive),
            ("p0 checked", self.p0_checked),
            ("p0 violations", self.p0_violations.len()),
        ];
        let mut s = format!(
            "graph {:?} on {} vertices, {} {}, {} slots{}\n",
            self.graph_edges,
            self.vertex_count,
            self.field,
            self.order,
            self.slot_count,
            if self.truncated { " (truncated)" } else { "" }
        );
        for (k, v) in rows {
            s.push_str(&format!("  {k:<14}{v:>10}\n"));
        }
        s.push_str(&format!("  {:<14}{:>10}\n", "verdict", if self.pass { "PASS" } else { "FAIL" }));
        s
    }
}

fn run_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Io(format!("thread pool: {e}"))),
    }
}

/// Evaluate every candidate of the family. Outcomes are merged in stream
/// order, so the report does not depend on scheduling.
pub fn sweep(family: &CandidateFamily, budget: &SweepBudget) -> Result<VerificationReport> {
    let start = Instant::now();
    let (stream, mut truncated) = family.stream(budget.max_candidates);
    let mut outcomes = Vec::with_capacity(stream.len());
    for chunk in stream.chunks(256) {
        if budget.wall_clock.is_some_and(|limit| start.elapsed() > limit) {
            truncated = true;
            break;
        }
        let part = run_pool(budget.jobs, || {
            chunk
                .par_iter()
                .map(|(label, ideal)| evaluate_candidate(family, label, ideal, &budget.smoothness))
                .collect::<Result<Vec<_>>>()
        })??;
        outcomes.extend(part);
    }

    let zero_free = family.complex.vertex_degree(0) == 1;
    let is_tree = family.graph.is_tree();
    let genus = family.graph.edge_count() as i64 + 1 - family.graph.vertex_count() as i64;
    let mut report = VerificationReport {
        graph_edges: family.graph.edges().collect(),
        vertex_count: family.graph.vertex_count(),
        field: family.field,
        order: family.order.to_string(),
        search: family.mode.clone(),
        slot_count: family.slot_count(),
        generated: outcomes.len(),
        valid: 0,
        rejected: 0,
        smooth: 0,
        singular: 0,
        inconclusive: 0,
        truncated,
        p0_checked: 0,
        p0_violations: Vec::new(),
        singular_points: BTreeMap::new(),
        exemplars: BTreeMap::new(),
        alarms: Vec::new(),
        pass: false,
        elapsed: Duration::ZERO,
    };
    for o in outcomes {
        if !o.valid {
            report.rejected += 1;
            report.exemplars.entry("rejected".into()).or_insert(o);
            continue;
        }
        report.valid += 1;
        if let Some(ok) = o.p0_nonsingular {
            report.p0_checked += 1;
            if ok != zero_free {
                report.p0_violations.push(o.label.clone());
            }
        }
        for p in o.singular_points() {
            *report.singular_points.entry(p.to_string()).or_default() += 1;
        }
        let key = match &o.smoothness {
            Some(Smoothness::Smooth) => {
                report.smooth += 1;
                if !is_tree || genus != 0 {
                    report.alarms.push(o.clone());
                }
                "smooth"
            }
            Some(Smoothness::Singular { .. }) => {
                report.singular += 1;
                "singular"
            }
            _ => {
                report.inconclusive += 1;
                "inconclusive"
            }
        };
        report.exemplars.entry(key.into()).or_insert(o);
    }
    report.pass = report.smooth == 0 && report.inconclusive == 0;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Sweep a connected non-tree: every valid candidate must be singular.
pub fn verify_non_tree_is_singular(family: &CandidateFamily, budget: &SweepBudget) -> Result<VerificationReport> {
    if family.graph.is_tree() || !family.graph.is_connected() {
        return Err(Error::Precondition("the sweep needs a connected graph that is not a tree".into()));
    }
    sweep(family, budget)
}

/// Result of looking for a smoothing of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SmoothingSearch {
    Found {
        label: String,
        generators: Vec<String>,
        summary: CurveSummary,
        examined: usize,
    },
    /// Nothing found among the candidates examined; says nothing about existence.
    NotFoundWithinBudget { examined: usize },
}

/// First valid candidate (seeds first) that is smooth of genus 0.
pub fn find_tree_smoothing(family: &CandidateFamily, budget: &SweepBudget) -> Result<SmoothingSearch> {
    if !family.graph.is_tree() {
        return Err(Error::Precondition("smoothings are searched for trees only".into()));
    }
    let start = Instant::now();
    let (stream, _) = family.stream(budget.max_candidates);
    let mut examined = 0;
    for (label, ideal) in stream {
        if budget.wall_clock.is_some_and(|limit| start.elapsed() > limit) {
            break;
        }
        examined += 1;
        let gb = match certify_candidate(family, &ideal, &budget.smoothness.gb) {
            Ok(Some(gb)) => gb,
            Ok(None) | Err(Error::DegreeCeiling { .. }) => continue,
            Err(e) => return Err(e),
        };
        let summary = curve_summary(&ideal, &family.order, &budget.smoothness)?;
        if summary.smoothness.as_ref().is_some_and(Smoothness::is_smooth) && summary.genus == 0 {
            return Ok(SmoothingSearch::Found {
                label,
                generators: gb.elements().iter().map(|g| g.to_string_ordered(&family.order)).collect(),
                summary,
                examined,
            });
        }
    }
    Ok(SmoothingSearch::NotFoundWithinBudget { examined })
}

/// `count` images of `base` under random substitutions
/// `X_i -> X_i + Σ_{j>i} c_ij X_j` with `c_ij` drawn from `grid`. Such
/// substitutions fix the leading monomial of every polynomial, so the
/// initial ideal is unchanged.
pub fn triangular_perturbations(base: &Ideal, grid: &[Scalar], count: usize, seed: u64) -> Result<Vec<Ideal>> {
    let n = base.nvars();
    let field = base.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let images: Vec<Polynomial> = (0..n)
                .map(|i| {
                    let mut terms = vec![(Monomial::var(n, i), Scalar::one(field))];
                    for j in i + 1..n {
                        terms.push((Monomial::var(n, j), grid[rng.gen_range(0..grid.len())].clone()));
                    }
                    Polynomial::from_terms(field, n, terms)
                })
                .collect::<Result<_>>()?;
            base.substitute_all(&images)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn slot_counts() {
        let f2 = Field::Prime(2);
        let t = CandidateFamily::new(&triangle(), MonomialOrder::Lex, f2, coefficient_grid(f2, 0, 0), SearchMode::Exhaustive).unwrap();
        assert_eq!(t.slot_count(), 5);
        assert_eq!(t.grid_size(), Some(32));
        let c = CandidateFamily::new(&Graph::cycle(4), MonomialOrder::Lex, f2, coefficient_grid(f2, 0, 0), SearchMode::Exhaustive).unwrap();
        assert_eq!(c.slots().iter().map(Vec::len).collect::<Vec<_>>(), vec![6, 3]);
        let s = CandidateFamily::new(
            &corpus::star_graph(),
            MonomialOrder::Lex,
            Field::Rational,
            coefficient_grid(Field::Rational, -1, 1),
            SearchMode::Exhaustive,
        )
        .unwrap();
        assert_eq!(s.slot_count(), 16);
    }

    #[test]
    fn zero_coefficients_give_the_monomial_ideal() {
        let f3 = Field::Prime(3);
        let fam = CandidateFamily::new(&triangle(), MonomialOrder::Lex, f3, coefficient_grid(f3, 0, 0), SearchMode::Exhaustive).unwrap();
        let j = fam.candidate_at(0);
        assert_eq!(j.generators()[0].to_string(), "X0*X1*X2");
        assert_eq!(fam.index_of(&j), Some(0));
        assert_eq!(fam.index_of(&fam.candidate_at(200)), Some(200));
    }

    #[test]
    fn star_minors_sit_in_the_unit_grid() {
        let q = Field::Rational;
        let fam = CandidateFamily::new(&corpus::star_graph(), MonomialOrder::Lex, q, coefficient_grid(q, -1, 1), SearchMode::Exhaustive).unwrap();
        let gb = buchberger(&corpus::star_example(q), &MonomialOrder::Lex, &GbConfig::default())
            .unwrap()
            .reduced_basis();
        let idx = fam.index_of(&gb.to_ideal()).expect("reduced basis has unit coefficients");
        let j = fam.candidate_at(idx);
        let out = evaluate_candidate(&fam, "star", &j, &SmoothnessConfig::default()).unwrap();
        assert!(out.valid);
        assert_eq!(out.smoothness, Some(Smoothness::Smooth));
        assert_eq!(out.p0_nonsingular, Some(true));
    }

    #[test]
    fn triangle_over_f2_is_never_smooth() {
        let f2 = Field::Prime(2);
        let fam = CandidateFamily::new(&triangle(), MonomialOrder::Lex, f2, coefficient_grid(f2, 0, 0), SearchMode::Exhaustive).unwrap();
        let r = verify_non_tree_is_singular(&fam, &SweepBudget::default()).unwrap();
        assert_eq!(r.generated, 32);
        assert_eq!(r.valid, 32);
        assert_eq!((r.smooth, r.inconclusive), (0, 0));
        assert!(r.pass && r.p0_violations.is_empty());
    }

    #[test]
    fn tree_searches() {
        let q = Field::Rational;
        let fam = CandidateFamily::new(&corpus::star_graph(), MonomialOrder::Lex, q, coefficient_grid(q, -1, 1), SearchMode::Exhaustive)
            .unwrap()
            .with_seeds(vec![corpus::star_example(q)]);
        let budget = SweepBudget {
            max_candidates: 1,
            ..SweepBudget::default()
        };
        assert!(matches!(find_tree_smoothing(&fam, &budget).unwrap(), SmoothingSearch::Found { examined: 1, .. }));

        let f2 = Field::Prime(2);
        let path = CandidateFamily::new(&Graph::path(3), MonomialOrder::Lex, f2, coefficient_grid(f2, 0, 0), SearchMode::Exhaustive).unwrap();
        let tiny = SweepBudget {
            max_candidates: 1,
            ..SweepBudget::default()
        };
        assert_eq!(
            find_tree_smoothing(&path, &tiny).unwrap(),
            SmoothingSearch::NotFoundWithinBudget { examined: 1 }
        );
    }

    #[test]
    fn perturbations_keep_the_initial_ideal() {
        let q = Field::Rational;
        let base = corpus::rational_normal_curve(q, 3);
        let grid = coefficient_grid(q, -2, 2);
        let cfg = GbConfig::default();
        let before = buchberger(&base, &MonomialOrder::Lex, &cfg).unwrap().initial_ideal();
        for j in triangular_perturbations(&base, &grid, 5, 7).unwrap() {
            assert_eq!(buchberger(&j, &MonomialOrder::Lex, &cfg).unwrap().initial_ideal(), before);
        }
    }
}
