//! Command-line front end.
//!
//! Every verb writes one JSON report (to stdout or `--out`) that starts with
//! a provenance block. Timings and the optional table go to stderr, so the
//! JSON is byte-identical across runs with the same inputs and flags.
//!
//! Exit codes: 0 success, 1 verdict failure, 2 input error, 3 budget
//! exhausted or inconclusive.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::collapse::{collapse, collapse_all_branches, DEFAULT_BRANCH_BOUND};
use crate::corpus::verify_examples;
use crate::error::{Error, Result};
use crate::geometry::{fiber_over_coordinate_point, genus, is_smooth_projective_curve, project_from_p0, Smoothness, SmoothnessConfig};
use crate::groebner::{buchberger, elimination_basis, zero_is_free, GbConfig, GroebnerBasis};
use crate::io::{parse_complex_json, reconcile, parse_ideal_file, parse_sweep_spec, ComplexJson, IdealFile, Provenance};
use crate::poly::{Field, MonomialOrder, Scalar};
use crate::search::{coefficient_grid, find_tree_smoothing, verify_non_tree_is_singular, CandidateFamily, SearchMode, SmoothingSearch, SweepBudget};
use crate::simplicial::{a_invariant_negative, hilbert_series, hochster_degree_zero, is_acyclic, is_cohen_macaulay, reduced_homology, SimplicialComplex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "herzog", version, about = "Groebner degenerations, Stanley-Reisner complexes and smooth curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Monomial order: lex or degrevlex.
    #[arg(long, global = true, value_parser = parse_order)]
    pub order: Option<MonomialOrder>,
    /// Coefficient field: QQ or Fp:<p>.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Largest S-pair degree Buchberger may process.
    #[arg(long, global = true)]
    pub degree_ceiling: Option<u32>,
    /// Largest pure power tried as a smoothness certificate.
    #[arg(long, global = true)]
    pub power_bound: Option<u32>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also print a human-readable table to stderr.
    #[arg(long, global = true)]
    pub table: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis and initial ideal.
    Gb {
        file: PathBuf,
        /// Report the 0-reduced basis obtained from the unreduced one instead.
        #[arg(long)]
        zero_reduced: bool,
    },
    /// Initial ideal and its Stanley-Reisner complex.
    Initial { file: PathBuf },
    /// Eliminate X0..X(k-1).
    Eliminate {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        drop: usize,
    },
    /// Reduced homology, Cohen-Macaulayness and acyclicity of a complex.
    Homology { file: PathBuf },
    /// Free-vertex collapse of a graph.
    Collapse { file: PathBuf },
    /// Smoothness of a projective curve.
    Smooth { file: PathBuf },
    /// Hilbert polynomial, degree and arithmetic genus of a curve.
    Genus { file: PathBuf },
    /// Projection from P0 to the hyperplane X0 = 0.
    Project { file: PathBuf },
    /// The point over the coordinate point P'_a of the projection.
    Fiber {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Sweep the candidates of a sweep spec file.
    Sweep { file: PathBuf },
    /// Re-certify the built-in examples.
    VerifyExamples,
}

fn parse_order(s: &str) -> std::result::Result<MonomialOrder, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit code for an error.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::DegreeCeiling { .. } | Error::SizeLimit(_) => EXIT_BUDGET,
        Error::InternalConsistency(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

/// A finished report and the exit code it implies.
pub struct Outcome {
    pub report: Value,
    pub table: Option<String>,
    pub code: i32,
}

fn read(path: &Path) -> Result<(String, Vec<u8>)> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::Io(format!("{}: not valid UTF-8", path.display())))?;
    Ok((text, bytes))
}

impl Flags {
    fn gb_config(&self) -> GbConfig {
        match self.degree_ceiling {
            Some(c) => GbConfig::with_ceiling(c),
            None => GbConfig::default(),
        }
    }

    fn smoothness(&self) -> SmoothnessConfig {
        let d = SmoothnessConfig::default();
        SmoothnessConfig {
            power_bound: self.power_bound.unwrap_or(d.power_bound),
            gb: self.gb_config(),
            seed: self.seed.unwrap_or(d.seed),
            ..d
        }
    }

    fn provenance(&self, input: &[u8], order: &MonomialOrder, field: Field) -> Provenance {
        let s = self.smoothness();
        Provenance::new(input, order, field, s.seed, s.gb.degree_ceiling, s.power_bound)
    }
}

fn strings(gb: &GroebnerBasis) -> Vec<String> {
    gb.elements().iter().map(|g| g.to_string_ordered(gb.order())).collect()
}

fn facets(delta: &SimplicialComplex) -> Vec<Vec<usize>> {
    delta.facets().iter().map(|f| f.to_vec()).collect()
}

fn report(verb: &str, prov: &Provenance, result: impl Serialize) -> Result<Value> {
    let result = serde_json::to_value(result).map_err(|e| Error::Io(e.to_string()))?;
    Ok(json!({ "command": verb, "provenance": prov, "result": result }))
}

fn ok(report: Value) -> Outcome {
    Outcome {
        report,
        table: None,
        code: EXIT_OK,
    }
}

struct IdealInput {
    file: IdealFile,
    bytes: Vec<u8>,
}

fn load_ideal(path: &Path, flags: &Flags) -> Result<IdealInput> {
    let (text, bytes) = read(path)?;
    let file = parse_ideal_file(&text, &path.display().to_string(), flags.field, flags.order.clone())?;
    Ok(IdealInput { file, bytes })
}

/// Smoothness report: `smooth` is `true`, `false` or `"inconclusive"`.
fn smoothness_json(s: &Smoothness) -> (Value, Vec<String>) {
    match s {
        Smoothness::Smooth => (json!(true), Vec::new()),
        Smoothness::Singular { points, .. } => (json!(false), points.iter().map(|p| p.to_string()).collect()),
        Smoothness::Inconclusive { .. } => (json!("inconclusive"), Vec::new()),
    }
}

/// Run one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let flags = &cli.flags;
    match &cli.command {
        Command::Gb { file, zero_reduced } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let raw = buchberger(ideal, order, &flags.gb_config())?;
            let basis = if *zero_reduced { raw.zero_reduce() } else { raw.reduced_basis() };
            let init = basis.initial_ideal();
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            let init_strings: Vec<String> = init.generators().iter().map(|m| m.to_string()).collect();
            let mut table = format!("basis ({order}):\n");
            for g in strings(&basis) {
                table.push_str(&format!("  {g}\n"));
            }
            table.push_str(&format!("initial ideal: {init}\n"));
            let r = report(
                "gb",
                &prov,
                json!({
                    "basis": strings(&basis),
                    "form": if *zero_reduced { "zero_reduced" } else { "reduced" },
                    "initial_ideal": init_strings,
                    "squarefree": init.is_squarefree(),
                    "zero_reduced": basis.is_zero_reduced(),
                }),
            )?;
            Ok(Outcome {
                table: Some(table),
                ..ok(r)
            })
        }
        Command::Initial { file } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let init = buchberger(ideal, order, &flags.gb_config())?.initial_ideal();
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            let mut result = json!({
                "initial_ideal": init.generators().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "squarefree": init.is_squarefree(),
            });
            if init.is_squarefree() {
                let delta = SimplicialComplex::from_monomial_ideal(&init)?;
                result["complex"] = json!({ "n": delta.vertex_count() - 1, "facets": facets(&delta) });
                result["dimension"] = json!(delta.dimension());
                if let Ok(g) = delta.to_graph() {
                    result["graph"] = json!({
                        "is_tree": g.is_tree(),
                        "is_connected": g.is_connected(),
                        "zero_is_free": zero_is_free(&init)?,
                    });
                }
            }
            Ok(ok(report("initial", &prov, result)?))
        }
        Command::Eliminate { file, drop } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let dropped: Vec<usize> = (0..*drop).collect();
            let gb = elimination_basis(ideal, &dropped, order, &flags.gb_config())?;
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            Ok(ok(report(
                "eliminate",
                &prov,
                json!({ "dropped": dropped, "nvars": gb.nvars(), "basis": strings(&gb) }),
            )?))
        }
        Command::Homology { file } => {
            let (text, bytes) = read(file)?;
            let input = parse_complex_json(&text, &file.display().to_string())?;
            let field = flags.field.unwrap_or(Field::Rational);
            let delta = input.complex.require_full_vertex_set()?;
            let h = reduced_homology(&delta, field)?;
            let prov = flags.provenance(&bytes, flags.order.as_ref().unwrap_or(&MonomialOrder::Lex), field);
            let result = json!({
                "f_vector": delta.f_vector(),
                "dimension": delta.dimension(),
                "reduced_homology": h.ranks,
                "acyclic": is_acyclic(&delta, field, delta.dimension())?,
                "cohen_macaulay": is_cohen_macaulay(&delta, field)?,
                "a_invariant_negative": a_invariant_negative(&delta, field)?,
                "hochster_degree_zero": hochster_degree_zero(&delta, field)?,
                "stanley_reisner": delta.stanley_reisner().generators().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "hilbert_polynomial": hilbert_series(&delta).hilbert_polynomial(),
            });
            let table = format!("f-vector {:?}\nreduced homology ranks (from degree -1) {:?}\n", delta.f_vector(), h.ranks);
            Ok(Outcome {
                table: Some(table),
                ..ok(report("homology", &prov, result)?)
            })
        }
        Command::Collapse { file } => {
            let (text, bytes) = read(file)?;
            let input = parse_complex_json(&text, &file.display().to_string())?;
            let g = input
                .graph
                .ok_or_else(|| Error::Domain("collapse needs a graph (a complex of dimension at most 1)".into()))?;
            let c = collapse(&g);
            let n = g.vertex_count() - 1;
            let branches = match collapse_all_branches(&g, DEFAULT_BRANCH_BOUND) {
                Ok(b) => Some(b),
                Err(Error::SizeLimit(_)) => None,
                Err(e) => return Err(e),
            };
            let prov = flags.provenance(&bytes, flags.order.as_ref().unwrap_or(&MonomialOrder::Lex), flags.field.unwrap_or(Field::Rational));
            let result = json!({
                "graph": ComplexJson::from_graph(&g),
                "ell": c.ell,
                "n": n,
                "ell_equals_n": c.ell == n,
                "removed": c.removed,
                "core": c.core,
                "is_tree": g.is_tree(),
                "is_connected": g.is_connected(),
                "distinct_branch_outcomes": branches.as_ref().map(|b| b.len()),
                "branches_agree": branches.as_ref().map(|b| b.len() == 1),
            });
            let table = format!("ell = {} (n = {n}), removed {:?}, core {:?}\n", c.ell, c.removed, c.core);
            Ok(Outcome {
                table: Some(table),
                ..ok(report("collapse", &prov, result)?)
            })
        }
        Command::Smooth { file } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let cfg = flags.smoothness();
            let g = genus(ideal, order, &cfg.gb)?;
            let s = is_smooth_projective_curve(ideal, &cfg)?;
            let (smooth, points) = smoothness_json(&s);
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            let result = json!({
                "smooth": smooth,
                "genus": g.genus,
                "degree": g.degree,
                "singular_points": points,
                "hilbert_polynomial": g.hilbert_polynomial,
                "detail": s,
            });
            Ok(Outcome {
                report: report("smooth", &prov, result)?,
                table: Some(format!("smooth: {smooth}, degree {}, genus {}\n", g.degree, g.genus)),
                code: if s.is_inconclusive() { EXIT_BUDGET } else { EXIT_OK },
            })
        }
        Command::Genus { file } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let g = genus(ideal, order, &flags.gb_config())?;
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            Ok(ok(report(
                "genus",
                &prov,
                json!({ "hilbert_polynomial": g.hilbert_polynomial, "degree": g.degree, "genus": g.genus }),
            )?))
        }
        Command::Project { file } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let cfg = flags.gb_config();
            let gb = buchberger(ideal, order, &cfg)?.reduced_basis();
            let projected = project_from_p0(ideal, &gb, &cfg)?;
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            Ok(ok(report(
                "project",
                &prov,
                json!({ "basis": strings(&gb), "projected_nvars": projected.nvars(), "projected": strings(&projected) }),
            )?))
        }
        Command::Fiber { file, vertex } => {
            let input = load_ideal(file, flags)?;
            let (ideal, order) = (&input.file.ideal, &input.file.order);
            let gb = buchberger(ideal, order, &flags.gb_config())?.reduced_basis();
            let f = fiber_over_coordinate_point(ideal, &gb, *vertex)?;
            let prov = flags.provenance(&input.bytes, order, ideal.field());
            Ok(Outcome {
                code: if f.q_nonsingular == f.projected_nonsingular { EXIT_OK } else { EXIT_FAIL },
                ..ok(report("fiber", &prov, &f)?)
            })
        }
        Command::Sweep { file } => run_sweep(file, flags),
        Command::VerifyExamples => {
            let cfg = flags.smoothness();
            let checks = verify_examples(&cfg)?;
            let all = checks.iter().all(|c| c.passed);
            let prov = flags.provenance(b"builtin corpus", &MonomialOrder::Lex, Field::Rational);
            let mut table = String::new();
            for c in &checks {
                table.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
            }
            Ok(Outcome {
                report: report("verify-examples", &prov, json!({ "checks": checks, "pass": all }))?,
                table: Some(table),
                code: if all { EXIT_OK } else { EXIT_FAIL },
            })
        }
    }
}

fn run_sweep(file: &Path, flags: &Flags) -> Result<Outcome> {
    let (text, bytes) = read(file)?;
    let name = file.display().to_string();
    let spec = parse_sweep_spec(&text, &name)?;
    let spec_field = spec.field.as_deref().map(str::parse::<Field>).transpose()?;
    let spec_order = spec.order.as_deref().map(str::parse::<MonomialOrder>).transpose()?;
    let field = reconcile("field", spec_field, flags.field, Field::Rational)?;
    let order = reconcile("order", spec_order, flags.order.clone(), MonomialOrder::Lex)?;
    let graph = spec
        .complex
        .resolve()?
        .graph
        .ok_or_else(|| Error::Domain("sweeps need a graph".into()))?;
    let grid = match &spec.coeff_grid {
        Some(cs) => cs.iter().map(|&c| Scalar::from_i64(field, c)).collect(),
        None => coefficient_grid(field, -2, 2),
    };
    let seed = flags.seed.or(spec.sampler.as_ref().map(|s| s.seed)).unwrap_or(0);
    let mode = match &spec.sampler {
        Some(s) => SearchMode::Random {
            seed,
            count: s.count as usize,
        },
        None => SearchMode::Exhaustive,
    };
    let mut smoothness = flags.smoothness();
    if flags.degree_ceiling.is_none() {
        if let Some(c) = spec.degree_ceiling {
            smoothness.gb = GbConfig::with_ceiling(c);
        }
    }
    if flags.power_bound.is_none() {
        if let Some(p) = spec.power_bound {
            smoothness.power_bound = p;
        }
    }
    smoothness.seed = seed;
    let budget = SweepBudget {
        max_candidates: spec.max_candidates.map_or(SweepBudget::default().max_candidates, |m| m as usize),
        smoothness: smoothness.clone(),
        wall_clock: None,
        jobs: flags.jobs,
    };
    let mut prov = Provenance::new(&bytes, &order, field, seed, smoothness.gb.degree_ceiling, smoothness.power_bound);
    prov.max_candidates = Some(budget.max_candidates as u64);
    let family = CandidateFamily::new(&graph, order, field, grid, mode)?;
    if graph.is_tree() {
        let found = find_tree_smoothing(&family, &budget)?;
        let code = match found {
            SmoothingSearch::Found { .. } => EXIT_OK,
            SmoothingSearch::NotFoundWithinBudget { .. } => EXIT_BUDGET,
        };
        return Ok(Outcome {
            report: report("sweep", &prov, &found)?,
            table: None,
            code,
        });
    }
    let r = verify_non_tree_is_singular(&family, &budget)?;
    let code = if r.smooth > 0 || !r.p0_violations.is_empty() {
        EXIT_FAIL
    } else if r.inconclusive > 0 || r.truncated {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        report: report("sweep", &prov, &r)?,
        table: Some(r.table()),
        code,
    })
}

/// Parse arguments, run, write the report and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    text.push('\n');
    let written = match &cli.flags.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_INPUT;
    }
    if cli.flags.table {
        if let Some(t) = &outcome.table {
            eprint!("{t}");
        }
    }
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    outcome.code
}
