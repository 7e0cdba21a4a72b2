//! Machine checks of the generator systems: invariance, independence,
//! orbit dimensions, count identities, non-vanishing witnesses and the
//! supporting lemmas, gathered into a deterministic report.
//!
//! Every comparison is an identity of rationals. Trials use disjoint ChaCha
//! streams derived from `(seed, check, trial)`, so the order in which rayon
//! schedules them does not affect the result.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generators::{
    build_generators, build_osp_system, nonvanishing_witness, signed_monomial, EvalPoint, GeneratorDescriptor,
    Recipe,
};
use crate::linalg::{format_rational, inverse, rank, DualScalar, Matrix, Rational, RationalMatrix};
use crate::sampling::{lie_algebra_basis, GroupPoint, LieScope, Sampler, Seed, ShapeSampler, SliceVariant};
use crate::shapes::{dim_g0, dim_group, dim_unipotent_radical, index_set, FlagShape, GroupKind, IndexPair};

/// Stream namespaces, one per check.
mod stream {
    pub const INVARIANCE: u32 = 1;
    pub const INDEPENDENCE: u32 = 2;
    pub const ORBIT: u32 = 3;
    pub const WITNESS: u32 = 4;
    pub const ADJUGATE_LEMMA: u32 = 5;
    pub const MONOMIAL: u32 = 6;
    pub const BRUHAT: u32 = 7;
    pub const NEGATIVE: u32 = 8;
    pub const CIRC_SLICE: u32 = 9;
}

/// Points used for generic-rank claims.
pub const GENERIC_POINTS: u32 = 3;
/// Samples searched for a nonzero value of each generator.
pub const WITNESS_SAMPLES: u32 = 10;
pub const ADJUGATE_LEMMA_TRIALS: u32 = 50;
pub const MONOMIAL_POINTS: u32 = 20;
pub const BRUHAT_TRIALS: u32 = 10;
/// Mutated descriptors tried per shape (at most), and how many must be caught.
pub const MUTANT_CANDIDATES: usize = 24;
pub const MUTANTS_REQUIRED: usize = 3;

/// An invariant candidate with a printable label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGenerator {
    pub label: String,
    pub descriptor: GeneratorDescriptor,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckOutcome {
    fn new(name: &str, pass: bool, details: Value) -> Self {
        CheckOutcome {
            name: name.to_string(),
            pass,
            details,
            counterexample: None,
        }
    }

    fn with_counterexample(mut self, c: Option<Value>) -> Self {
        self.counterexample = c;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub shape: FlagShape,
    pub seed: u64,
    pub bound: i64,
    pub trials: u32,
    pub checks: Vec<CheckOutcome>,
    /// Sign of the corner block of `S°` found by the form test (O/SP only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_circ_sign: Option<i8>,
    /// Field generation is not checked directly; it is reported as the
    /// conjunction of invariance, independence and the count identity.
    pub field_generation_proxy: Value,
    /// Wall-clock time; left empty unless timing is requested so that
    /// identical inputs give byte-identical reports.
    pub duration_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: u32,
    pub bound: i64,
    /// Replace the generator family by mutated descriptors (negative control).
    pub mutate: bool,
    /// Also run invariance on the second component of O(N).
    pub swap_component: bool,
}

impl SuiteOptions {
    pub fn new(seed: u64, trials: u32, bound: i64) -> Self {
        SuiteOptions {
            seed,
            trials,
            bound,
            mutate: false,
            swap_component: false,
        }
    }
}

fn pair_label(prefix: &str, p: IndexPair) -> String {
    format!("{prefix}({},{})", p.i, p.j)
}

/// The invariants whose `U`-invariance is checked: `J` for GL/SL;
/// `J°`, `M0` and `M_ij` for O/SP.
pub fn invariant_family(shape: &FlagShape) -> Result<Vec<LabeledGenerator>> {
    match shape.kind() {
        GroupKind::Gl | GroupKind::Sl => Ok(build_generators(shape)?
            .into_iter()
            .map(|d| LabeledGenerator {
                label: pair_label("J", d.pair),
                descriptor: d,
            })
            .collect()),
        GroupKind::O | GroupKind::Sp => {
            let sys = build_osp_system(shape)?;
            let mut out: Vec<LabeledGenerator> = sys
                .j_circ
                .iter()
                .map(|d| LabeledGenerator {
                    label: pair_label("J°", d.pair),
                    descriptor: d.clone(),
                })
                .collect();
            if let Some(m0) = &sys.m0 {
                out.push(LabeledGenerator {
                    label: "M0".into(),
                    descriptor: GeneratorDescriptor {
                        pair: IndexPair::new(0, 0),
                        recipe: Recipe::Minor(m0.clone()),
                    },
                });
            }
            for d in &sys.ratios {
                let num = sys.numerator(d.pair).expect("ratio numerator").clone();
                out.push(LabeledGenerator {
                    label: pair_label("M", d.pair),
                    descriptor: GeneratorDescriptor {
                        pair: d.pair,
                        recipe: Recipe::Minor(num),
                    },
                });
            }
            Ok(out)
        }
    }
}

/// The family whose Jacobian rank is measured: `J` (GL), `J` without `(1,n)`
/// (SL), `J°` followed by the ratios `P_ij` (O/SP).
fn independence_family(shape: &FlagShape) -> Result<(Vec<GeneratorDescriptor>, usize)> {
    match shape.kind() {
        GroupKind::Gl | GroupKind::Sl => {
            let g = build_generators(shape)?;
            let k = g.len();
            Ok((g, k))
        }
        GroupKind::O | GroupKind::Sp => {
            let sys = build_osp_system(shape)?;
            let k = sys.j_circ.len();
            let mut all = sys.j_circ;
            all.extend(sys.ratios);
            Ok((all, k))
        }
    }
}

/// Number of free generators the field of invariants should have.
pub fn expected_generator_count(shape: &FlagShape) -> usize {
    index_set(shape).len() + dim_g0(shape)
}

fn eval_family<T: crate::linalg::Scalar>(family: &[GeneratorDescriptor], point: &Matrix<T>) -> Result<Vec<T>> {
    let ctx = EvalPoint::new(point)?;
    family.iter().map(|d| d.eval(&ctx)).collect()
}

fn conjugate(x: &RationalMatrix, g: &RationalMatrix) -> Result<RationalMatrix> {
    let gi = inverse(g)?.ok_or_else(|| Error::Consistency("singular radical element".into()))?;
    gi.mul(x)?.mul(g)
}

fn descriptor_json(d: &GeneratorDescriptor) -> Value {
    d.to_json()
}

/// Runs `trial` for `0..trials` in parallel and returns the first failure.
fn first_failure<F>(trials: u32, trial: F) -> Option<Value>
where
    F: Fn(u32) -> Result<Option<Value>> + Sync,
{
    let results: Vec<Option<Value>> = (0..trials)
        .into_par_iter()
        .map(|t| match trial(t) {
            Ok(r) => r,
            Err(e) => Some(json!({ "trial": t, "error": e.to_string() })),
        })
        .collect();
    results.into_iter().flatten().next()
}

fn invariance_trial(
    sampler: &ShapeSampler,
    family: &[LabeledGenerator],
    seed: u64,
    check: u32,
    t: u32,
    bound: i64,
    swap: bool,
) -> Result<Option<Value>> {
    let mut rng = Sampler::new(Seed::for_trial(seed, check, t));
    let x = sampler.sample_group_point(&mut rng, bound, swap)?;
    let g = sampler.sample_unipotent_radical(&mut rng, bound)?;
    let y = conjugate(x.matrix(), g.matrix())?;
    let (cx, cy) = (EvalPoint::new(x.matrix())?, EvalPoint::new(&y)?);
    for f in family {
        let (a, b) = (f.descriptor.eval(&cx)?, f.descriptor.eval(&cy)?);
        if a != b {
            return Ok(Some(json!({
                "trial": t,
                "generator": f.label,
                "descriptor": descriptor_json(&f.descriptor),
                "x": x.matrix().to_json(),
                "g": g.matrix().to_json(),
                "value_at_x": format_rational(&a),
                "value_at_conjugate": format_rational(&b),
            })));
        }
    }
    Ok(None)
}

fn invariance_of(
    name: &str,
    shape: &FlagShape,
    family: &[LabeledGenerator],
    opts: &SuiteOptions,
    check: u32,
    swap: bool,
) -> CheckOutcome {
    let sampler = ShapeSampler::new(shape);
    let fail = first_failure(opts.trials, |t| {
        invariance_trial(&sampler, family, opts.seed, check, t, opts.bound, swap)
    });
    CheckOutcome::new(
        name,
        fail.is_none(),
        json!({ "generators": family.len(), "trials": opts.trials }),
    )
    .with_counterexample(fail)
}

/// `f(g⁻¹xg) = f(x)` for every invariant, `x ∈ G`, `g ∈ U`.
pub fn check_invariance(shape: &FlagShape, seed: u64, trials: u32, bound: i64) -> Result<CheckOutcome> {
    let family = invariant_family(shape)?;
    Ok(invariance_of("invariance", shape, &family, &SuiteOptions::new(seed, trials, bound), stream::INVARIANCE, false))
}

/// Deliberately broken variants of GL recipes, used as negative controls.
pub fn mutants(shape: &FlagShape) -> Vec<LabeledGenerator> {
    let n = shape.n();
    let base = match invariant_family(shape) {
        Ok(f) => f,
        Err(_) => return Vec::new(),
    };
    let shift_first = |rows: &[usize]| -> Option<Vec<usize>> {
        let first = rows[0];
        let cand = if first < n { first + 1 } else { first - 1 };
        (cand >= 1 && !rows.contains(&cand)).then(|| {
            let mut r = rows.to_vec();
            r[0] = cand;
            r
        })
    };
    let shift_cols = |cols: &[usize]| -> Option<Vec<usize>> {
        (cols.last().copied().unwrap_or(n) < n).then(|| cols.iter().map(|c| c + 1).collect())
    };
    let mut out = Vec::new();
    for f in &base {
        let d = &f.descriptor;
        let mut push = |tag: &str, recipe: Recipe| {
            out.push(LabeledGenerator {
                label: format!("{}~{tag}", f.label),
                descriptor: GeneratorDescriptor { pair: d.pair, recipe },
            })
        };
        match &d.recipe {
            Recipe::Minor(m) => {
                if let Some(rows) = shift_first(&m.rows) {
                    push("row", Recipe::Minor(crate::generators::MinorSpec::new(rows, m.cols.clone())));
                }
                if let Some(cols) = shift_cols(&m.cols) {
                    push("col", Recipe::Minor(crate::generators::MinorSpec::new(m.rows.clone(), cols)));
                }
            }
            Recipe::Stacked { x_rows, adj_rows, cols } => {
                if let Some(rows) = shift_first(x_rows) {
                    push(
                        "row",
                        Recipe::Stacked { x_rows: rows, adj_rows: adj_rows.clone(), cols: cols.clone() },
                    );
                }
                if adj_rows.first().copied().unwrap_or(1) > 1 && adj_rows.last() == Some(&n) {
                    push(
                        "adj",
                        Recipe::Stacked {
                            x_rows: x_rows.clone(),
                            adj_rows: adj_rows.iter().map(|r| r - 1).collect(),
                            cols: cols.clone(),
                        },
                    );
                }
            }
            Recipe::Ratio { .. } => {}
        }
    }
    out
}

fn check_negative_controls(shape: &FlagShape, opts: &SuiteOptions) -> CheckOutcome {
    if dim_unipotent_radical(shape) == 0 {
        return CheckOutcome::new(
            "negative_controls",
            true,
            json!({ "skipped": "unipotent radical is trivial; every function is invariant" }),
        );
    }
    let sampler = ShapeSampler::new(shape);
    let candidates = mutants(shape);
    let mut caught: Vec<(String, bool)> = Vec::new();
    for (k, m) in candidates.iter().enumerate() {
        let fam = std::slice::from_ref(m);
        let check = stream::NEGATIVE * 1000 + k as u32;
        let fail = first_failure(opts.trials, |t| invariance_trial(&sampler, fam, opts.seed, check, t, opts.bound, false));
        caught.push((m.label.clone(), fail.is_some()));
        if caught.iter().filter(|c| c.1).count() >= MUTANTS_REQUIRED || caught.len() >= MUTANT_CANDIDATES {
            break;
        }
    }
    let n_caught = caught.iter().filter(|c| c.1).count();
    // transposed radical elements live in the opposite parabolic
    let family = invariant_family(shape).unwrap_or_default();
    let wrong_block = first_failure(opts.trials, |t| {
        let mut rng = Sampler::new(Seed::for_trial(opts.seed, stream::NEGATIVE, t));
        let x = sampler.sample_group_point(&mut rng, opts.bound, false)?;
        let g = sampler.sample_unipotent_radical(&mut rng, opts.bound)?.matrix().transpose();
        let y = conjugate(x.matrix(), &g)?;
        let (cx, cy) = (EvalPoint::new(x.matrix())?, EvalPoint::new(&y)?);
        for f in &family {
            if f.descriptor.eval(&cx)? != f.descriptor.eval(&cy)? {
                return Ok(Some(json!({ "trial": t, "generator": f.label })));
            }
        }
        Ok(None)
    });
    CheckOutcome::new(
        "negative_controls",
        n_caught >= MUTANTS_REQUIRED && wrong_block.is_some(),
        json!({
            "wrong_block_detected": wrong_block.is_some(),
            "mutants": caught.iter().map(|(l, c)| json!({ "mutant": l, "detected": c })).collect::<Vec<_>>(),
            "detected": n_caught,
            "required": MUTANTS_REQUIRED,
        }),
    )
}

/// Dimension of the tangent space of the `U`-orbit through `point`:
/// rank of `A ↦ xA − Ax` over a basis of the radical's Lie algebra.
pub fn orbit_dimension(shape: &FlagShape, point: &RationalMatrix) -> Result<usize> {
    let n = shape.n();
    if point.rows() != n || point.cols() != n {
        return Err(Error::Dimension(format!("point must be {n}x{n}")));
    }
    let basis = lie_algebra_basis(shape, LieScope::UnipotentRadical);
    if basis.is_empty() {
        return Ok(0);
    }
    let mut m = RationalMatrix::zeros(n * n, basis.len());
    for (k, a) in basis.iter().enumerate() {
        let v = point.mul(a)?.sub(&a.mul(point)?)?;
        for (idx, e) in v.entries().iter().enumerate() {
            m.set(idx, k, e.clone());
        }
    }
    Ok(rank(&m))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceRank {
    pub rank: usize,
    pub expected: usize,
    /// Rank and expected rank of the ratio family alone (O/SP with odd block count).
    pub gamma_rank: Option<usize>,
    pub gamma_expected: Option<usize>,
}

/// Rank of the generator Jacobian on the tangent space `{x·A}` of the group at `point`.
pub fn independence_rank(shape: &FlagShape, point: &RationalMatrix) -> Result<IndependenceRank> {
    let n = shape.n();
    if point.rows() != n || point.cols() != n {
        return Err(Error::Dimension(format!("point must be {n}x{n}")));
    }
    let (family, j_count) = independence_family(shape)?;
    let directions = lie_algebra_basis(shape, LieScope::FullGroup);
    let columns: Vec<Vec<Rational>> = directions
        .par_iter()
        .map(|a| {
            let dir = point.mul(a)?;
            let seeded = Matrix::from_fn(n, n, |r, c| DualScalar::new(point.get(r, c).clone(), dir.get(r, c).clone()));
            Ok(eval_family(&family, &seeded)?.into_iter().map(|v| v.derivative).collect())
        })
        .collect::<Result<_>>()?;
    let jac = RationalMatrix::from_fn(family.len(), columns.len(), |r, c| columns[c][r].clone());
    let full = rank(&jac);
    let (gamma_rank, gamma_expected) = if family.len() > j_count {
        let rows: Vec<usize> = (j_count..family.len()).collect();
        let cols: Vec<usize> = (0..columns.len()).collect();
        (Some(rank(&jac.select(&rows, &cols))), Some(dim_g0(shape)))
    } else {
        (None, None)
    };
    Ok(IndependenceRank {
        rank: full,
        expected: expected_generator_count(shape),
        gamma_rank,
        gamma_expected,
    })
}

/// Group point at which every ratio is defined, for independence testing.
fn generic_point(sampler: &ShapeSampler, seed: u64, check: u32, t: u32, bound: i64, swap: bool) -> Result<GroupPoint> {
    let shape = sampler.shape();
    let m0 = if shape.kind().is_classical_form() { build_osp_system(shape)?.m0 } else { None };
    for attempt in 0..crate::sampling::RESAMPLE_BUDGET as u32 {
        let mut rng = Sampler::new(Seed::for_trial(seed, check, t * 1000 + attempt));
        let x = sampler.sample_group_point(&mut rng, bound, swap)?;
        match &m0 {
            Some(m) if x.matrix().minor(&m.rows, &m.cols)?.is_zero() => continue,
            _ => return Ok(x),
        }
    }
    Err(Error::Sampling("M0 vanished at every sampled point".into()))
}

/// Whether both connected components are sampled (O(N) only).
fn components(shape: &FlagShape) -> &'static [bool] {
    if shape.kind() == GroupKind::O {
        &[false, true]
    } else {
        &[false]
    }
}

fn check_independence(shape: &FlagShape, opts: &SuiteOptions) -> CheckOutcome {
    let sampler = ShapeSampler::new(shape);
    let comps = components(shape);
    let mut ranks: Vec<Vec<IndependenceRank>> = vec![Vec::new(); comps.len()];
    let mut points = Vec::new();
    for (ci, &swap) in comps.iter().enumerate() {
        for t in 0..GENERIC_POINTS {
            let got = generic_point(&sampler, opts.seed, stream::INDEPENDENCE, t + 100 * ci as u32, opts.bound, swap)
                .and_then(|x| Ok((independence_rank(shape, x.matrix())?, x)));
            match got {
                Ok((r, x)) => {
                    points.push(x.matrix().to_json());
                    ranks[ci].push(r);
                }
                Err(e) => return CheckOutcome::new("independence", false, json!({ "error": e.to_string() })),
            }
        }
    }
    let expected = expected_generator_count(shape);
    let all = || ranks.iter().flatten();
    let best = all().map(|r| r.rank).max().unwrap_or(0);
    let best_gamma = all().filter_map(|r| r.gamma_rank).max();
    let gamma_ok = best_gamma.is_none_or(|g| g == dim_g0(shape));
    let pass = best == expected && gamma_ok;
    let per = |ci: usize| ranks[ci].iter().map(|r| r.rank).collect::<Vec<_>>();
    let per_gamma = |ci: usize| ranks[ci].iter().map(|r| r.gamma_rank).collect::<Vec<_>>();
    let mut details = json!({
        "ranks": per(0),
        "gamma_ranks": per_gamma(0),
        "max_rank": best,
        "expected": expected,
        "gamma_expected": best_gamma.map(|_| dim_g0(shape)),
        "tangent_dimension": dim_group(shape),
    });
    if comps.len() > 1 {
        details["second_component_ranks"] = json!(per(1));
        details["second_component_gamma_ranks"] = json!(per_gamma(1));
        let id_best = ranks[0].iter().map(|r| r.rank).max().unwrap_or(0);
        details["identity_component_deficit"] = json!(expected.saturating_sub(id_best));
    }
    let mut outcome = CheckOutcome::new("independence", pass, details);
    if !pass {
        outcome.counterexample = Some(json!({ "points": points }));
    }
    outcome
}

fn check_counts(shape: &FlagShape, opts: &SuiteOptions) -> CheckOutcome {
    let sampler = ShapeSampler::new(shape);
    let dims: Result<Vec<usize>> = (0..GENERIC_POINTS)
        .map(|t| {
            let mut rng = Sampler::new(Seed::for_trial(opts.seed, stream::ORBIT, t));
            let x = sampler.sample_group_point(&mut rng, opts.bound, false)?;
            orbit_dimension(shape, x.matrix())
        })
        .collect();
    let dims = match dims {
        Ok(d) => d,
        Err(e) => return CheckOutcome::new("count_identity", false, json!({ "error": e.to_string() })),
    };
    let gl = shape.as_gl();
    let gl_pairs = index_set(&gl).len();
    let n = shape.n();
    let gl_ok = gl_pairs + dim_unipotent_radical(&gl) == n * n;
    let du = dim_unipotent_radical(shape);
    let orbit = dims.iter().copied().max().unwrap_or(0);
    let stable = dims.iter().all(|&d| d == orbit);
    let count = expected_generator_count(shape);
    let pass = gl_ok && stable && orbit == du && count + orbit == dim_group(shape);
    CheckOutcome::new(
        "count_identity",
        pass,
        json!({
            "gl_pairs": gl_pairs,
            "n_squared_minus_dim_u_gl": n * n - dim_unipotent_radical(&gl),
            "index_set": index_set(shape).len(),
            "dim_g0": dim_g0(shape),
            "generators": count,
            "dim_group": dim_group(shape),
            "dim_u": du,
            "orbit_dimensions": dims,
            "orbit_stable": stable,
        }),
    )
}

fn check_witnesses(shape: &FlagShape, opts: &SuiteOptions) -> CheckOutcome {
    let family = match invariant_family(shape) {
        Ok(f) => f,
        Err(e) => return CheckOutcome::new("nonvanishing", false, json!({ "error": e.to_string() })),
    };
    let sampler = ShapeSampler::new(shape);
    // for O(N) the samples alternate between the two components
    let comps = components(shape);
    let samples: Result<Vec<Vec<bool>>> = (0..WITNESS_SAMPLES)
        .into_par_iter()
        .map(|t| {
            let mut rng = Sampler::new(Seed::for_trial(opts.seed, stream::WITNESS, t));
            let swap = comps[t as usize % comps.len()];
            let x = sampler.sample_group_point(&mut rng, opts.bound, swap)?;
            let ctx = EvalPoint::new(x.matrix())?;
            family.iter().map(|f| Ok(!f.descriptor.eval(&ctx)?.is_zero())).collect()
        })
        .collect();
    let samples = match samples {
        Ok(s) => s,
        Err(e) => return CheckOutcome::new("nonvanishing", false, json!({ "error": e.to_string() })),
    };
    let first_hit: Vec<Option<usize>> = (0..family.len())
        .map(|k| samples.iter().position(|s| s[k]))
        .collect();
    let missing: Vec<&str> = family
        .iter()
        .zip(&first_hit)
        .filter(|(_, h)| h.is_none())
        .map(|(f, _)| f.label.as_str())
        .collect();

    // explicit 0/1 witnesses below the anti-diagonal (GL/SL)
    let mut explicit_fail = Vec::new();
    let mut explicit_checked = 0;
    if !shape.kind().is_classical_form() {
        let set = index_set(shape);
        for f in &family {
            if set.is_sigma0(f.descriptor.pair) {
                continue;
            }
            explicit_checked += 1;
            let w = nonvanishing_witness(shape.n(), f.descriptor.pair);
            match f.descriptor.eval_at(&w) {
                Ok(v) if !v.is_zero() => {}
                _ => explicit_fail.push(f.label.clone()),
            }
        }
    }
    let pass = missing.is_empty() && explicit_fail.is_empty();
    let mut out = CheckOutcome::new(
        "nonvanishing",
        pass,
        json!({
            "generators": family.len(),
            "samples": WITNESS_SAMPLES,
            "max_first_witness": first_hit.iter().flatten().max(),
            "explicit_witnesses_checked": explicit_checked,
        }),
    );
    if !pass {
        out.counterexample = Some(json!({ "vanishing": missing, "explicit_witness_failures": explicit_fail }));
    }
    out
}

/// `M_{I,J}(adj(xg)) = M_{I,J}(adj(x))` for trailing segments `I` and upper
/// unitriangular `g`.
pub fn check_adjugate_minor_lemma(n: usize, seed: u64, trials: u32, bound: i64) -> CheckOutcome {
    let fail = first_failure(trials, |t| {
        let mut rng = Sampler::new(Seed::for_trial(seed, stream::ADJUGATE_LEMMA, t));
        let x = rng.int_matrix(n, n, bound);
        let mut g = RationalMatrix::identity(n);
        for r in 0..n {
            for c in r + 1..n {
                g.set(r, c, rng.int(bound));
            }
        }
        let size = 1 + rng.index(n);
        let rows: Vec<usize> = (n - size + 1..=n).collect();
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut cols = Vec::with_capacity(size);
        for _ in 0..size {
            cols.push(pool.remove(rng.index(pool.len())));
        }
        let before = x.adjugate()?.minor(&rows, &cols)?;
        let after = x.mul(&g)?.adjugate()?.minor(&rows, &cols)?;
        Ok((before != after).then(|| {
            json!({
                "trial": t, "x": x.to_json(), "g": g.to_json(), "rows": rows, "cols": cols,
                "before": format_rational(&before), "after": format_rational(&after),
            })
        }))
    });
    CheckOutcome::new(
        "adjugate_minor_lemma",
        fail.is_none(),
        json!({ "n": n, "trials": trials }),
    )
    .with_counterexample(fail)
}

fn check_monomial_restriction(shape: &FlagShape, opts: &SuiteOptions) -> CheckOutcome {
    let family = match build_generators(shape) {
        Ok(f) => f,
        Err(e) => return CheckOutcome::new("monomial_restriction", false, json!({ "error": e.to_string() })),
    };
    let set = index_set(shape);
    let sampler = ShapeSampler::new(shape);
    let fail = first_failure(MONOMIAL_POINTS, |t| {
        let mut rng = Sampler::new(Seed::for_trial(opts.seed, stream::MONOMIAL, t));
        let p = sampler.sample_slice(&mut rng, opts.bound, SliceVariant::S0)?;
        let x = p.point.matrix();
        for d in family.iter().filter(|d| set.is_sigma0(d.pair)) {
            let v = d.eval_at(x)?;
            let m = signed_monomial(x, d.pair);
            if v != m {
                return Ok(Some(json!({
                    "trial": t, "pair": [d.pair.i, d.pair.j], "point": x.to_json(),
                    "value": format_rational(&v), "monomial": format_rational(&m),
                })));
            }
        }
        Ok(None)
    });
    CheckOutcome::new(
        "monomial_restriction",
        fail.is_none(),
        json!({ "points": MONOMIAL_POINTS, "pairs": set.sigma0().count() }),
    )
    .with_counterexample(fail)
}

/// `n_L · w0 · b` lies on the slice pattern for `n_L` upper unitriangular
/// inside the Levi blocks and `b` upper triangular.
fn check_bruhat(shape: &FlagShape, opts: &SuiteOptions) -> CheckOutcome {
    let n = shape.n();
    let fail = first_failure(BRUHAT_TRIALS, |t| {
        let mut rng = Sampler::new(Seed::for_trial(opts.seed, stream::BRUHAT, t));
        let mut nl = RationalMatrix::identity(n);
        for p in shape.diagonal_block_positions() {
            if p.i < p.j {
                nl.set(p.i - 1, p.j - 1, rng.int(opts.bound));
            }
        }
        let mut b = RationalMatrix::zeros(n, n);
        for r in 0..n {
            b.set(r, r, rng.nonzero_int(opts.bound));
            for c in r + 1..n {
                b.set(r, c, rng.int(opts.bound));
            }
        }
        let m = nl.mul(&RationalMatrix::anti_identity(n))?.mul(&b)?;
        for i in 1..=n {
            for j in 1..=n {
                if !shape.in_slice_pattern(i, j) && !m.get(i - 1, j - 1).is_zero() {
                    return Ok(Some(json!({ "trial": t, "position": [i, j], "product": m.to_json() })));
                }
            }
        }
        Ok(None)
    });
    CheckOutcome::new("bruhat_inclusion", fail.is_none(), json!({ "trials": BRUHAT_TRIALS }))
        .with_counterexample(fail)
}

/// `S°` samples lie in the group and on the slice pattern.
fn check_circ_slice(shape: &FlagShape, opts: &SuiteOptions) -> (CheckOutcome, Option<i8>) {
    let sampler = ShapeSampler::new(shape);
    let mut signs = Vec::new();
    for t in 0..5u32 {
        let mut rng = Sampler::new(Seed::for_trial(opts.seed, stream::CIRC_SLICE, t));
        let p = match sampler.sample_slice(&mut rng, opts.bound, SliceVariant::SCirc) {
            Ok(p) => p,
            Err(e) => return (CheckOutcome::new("circ_slice", false, json!({ "error": e.to_string() })), None),
        };
        let m = p.point.matrix();
        for i in 1..=shape.n() {
            for j in 1..=shape.n() {
                if !shape.in_slice_pattern(i, j) && !m.get(i - 1, j - 1).is_zero() {
                    let out = CheckOutcome::new("circ_slice", false, json!({ "trial": t }))
                        .with_counterexample(Some(json!({ "position": [i, j], "point": m.to_json() })));
                    return (out, p.sign);
                }
            }
        }
        signs.push(p.sign.unwrap_or(0));
    }
    let consistent = signs.windows(2).all(|w| w[0] == w[1]);
    (
        CheckOutcome::new("circ_slice", consistent, json!({ "samples": signs.len(), "signs": signs })),
        signs.first().copied(),
    )
}

/// Fixed values from the worked examples, for the shapes they belong to.
fn check_golden(shape: &FlagShape) -> Option<CheckOutcome> {
    let parts = shape.parts();
    if shape.kind() == GroupKind::Gl && parts == [1, 2, 2] {
        let gens = build_generators(shape).ok()?;
        let expected: Vec<IndexPair> = [
            (5, 1), (4, 1), (5, 2), (4, 2), (5, 3), (4, 3), (3, 3), (2, 3),
            (5, 4), (4, 4), (3, 4), (2, 4), (5, 5), (4, 5), (3, 5), (2, 5), (1, 5),
        ]
        .iter()
        .map(|&(i, j)| IndexPair::new(i, j))
        .collect();
        let order_ok = gens.iter().map(|d| d.pair).eq(expected.iter().copied());
        let find = |i, j| gens.iter().find(|d| d.pair == IndexPair::new(i, j));
        let j44 = find(4, 4).and_then(|d| d.eval_at(&nonvanishing_witness(5, IndexPair::new(4, 4))).ok());
        let j51_ok = find(5, 1).is_some_and(|d| {
            d.recipe == Recipe::Minor(crate::generators::MinorSpec::new(vec![5], vec![1]))
        });
        let j42_ok = find(4, 2).is_some_and(|d| {
            d.recipe == Recipe::Minor(crate::generators::MinorSpec::new(vec![4, 5], vec![1, 2]))
        });
        let j15_ok = find(1, 5).is_some_and(|d| {
            d.recipe == Recipe::Minor(crate::generators::MinorSpec::new((1..=5).collect(), (1..=5).collect()))
        });
        let j44_ok = j44.as_ref().is_some_and(One::is_one);
        return Some(CheckOutcome::new(
            "golden_example",
            order_ok && j44_ok && j51_ok && j42_ok && j15_ok,
            json!({
                "pairs_in_order": order_ok,
                "j44_at_witness": j44.as_ref().map(format_rational),
                "j51_is_entry": j51_ok,
                "j42_is_2x2_minor": j42_ok,
                "j15_is_det": j15_ok,
            }),
        ));
    }
    if shape.kind() == GroupKind::Sp && shape.n() == 8 && parts == [1, 2, 2, 2, 1] {
        let set = index_set(shape);
        let rows_ok = [(6, 2..=6), (7, 2..=7), (8, 1..=8)]
            .into_iter()
            .all(|(i, js)| js.clone().all(|j| set.contains(IndexPair::new(i, j))));
        let ok = set.len() == 19 && rows_ok && set.gamma0().len() == 4 && dim_g0(shape) == 3;
        return Some(CheckOutcome::new(
            "golden_example",
            ok,
            json!({ "index_set": set.len(), "gamma0": set.gamma0().len(), "dim_g0": dim_g0(shape) }),
        ));
    }
    None
}

/// Runs every check that applies to the shape.
pub fn run_suite(shape: &FlagShape, opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    if let Some(g) = check_golden(shape) {
        checks.push(g);
    }
    let family = if opts.mutate {
        mutants(shape)
    } else {
        invariant_family(shape)?
    };
    checks.push(invariance_of("invariance", shape, &family, opts, stream::INVARIANCE, false));
    if opts.swap_component && shape.kind() == GroupKind::O {
        checks.push(invariance_of("invariance_second_component", shape, &family, opts, stream::INVARIANCE + 100, true));
    }
    checks.push(check_negative_controls(shape, opts));
    checks.push(check_independence(shape, opts));
    checks.push(check_counts(shape, opts));
    checks.push(check_witnesses(shape, opts));
    checks.push(check_adjugate_minor_lemma(shape.n(), opts.seed, opts.trials.min(ADJUGATE_LEMMA_TRIALS), opts.bound));
    let mut sign = None;
    if shape.kind().is_classical_form() {
        let (c, s) = check_circ_slice(shape, opts);
        sign = s;
        checks.push(c);
    } else {
        checks.push(check_monomial_restriction(shape, opts));
        checks.push(check_bruhat(shape, opts));
    }
    let status = |name: &str| checks.iter().find(|c| c.name == name).is_some_and(|c| c.pass);
    let proxy = json!({
        "invariance": status("invariance"),
        "independence": status("independence"),
        "count_identity": status("count_identity"),
        "holds": status("invariance") && status("independence") && status("count_identity"),
    });
    Ok(VerificationReport {
        shape: shape.clone(),
        seed: opts.seed,
        bound: opts.bound,
        trials: opts.trials,
        checks,
        s_circ_sign: sign,
        field_generation_proxy: proxy,
        duration_ms: None,
    })
}
