//! Randomized and exhaustive property sweeps.
//!
//! Every sample draws from its own ChaCha stream keyed by
//! `(seed, group, property, index)`, and results are collected in index
//! order, so a report does not depend on the number of worker threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use coadjoint_core::chamber::{self, Face, Sheet};
use coadjoint_core::quant::{self, SignedIrrep};
use coadjoint_core::{int, orbits, rat, GroupSpec, Rational, RootDatum, Sign, WeightVec};
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ball;
use crate::oracle::{self, OracleError};

pub const DEFAULT_GROUPS: [&str; 5] = ["SU(2)", "SU(3)", "Sp(2)", "G2", "U(4)"];
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_RADIUS_SQ: i128 = 20;

/// Failures kept per result; the count is always complete.
const MAX_REPORTED_FAILURES: usize = 20;
const HOL_SAMPLES_PER_COMPONENT: usize = 100;
const FIXEDPOINT_ORBITS: usize = 50;
const FIXEDPOINT_X: usize = 100;
const DISTANCE_RANDOM_PAIRS: usize = 1000;
const DISTANCE_BALL_SQ: i128 = 8;
const EXHAUSTIVE_DISTANCE_RANK: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    MagicalChain,
    TraceInequality,
    ShiftAdmissibility,
    Trichotomy,
    Duality,
    Ancestors,
    HolOracle,
    DistanceOracle,
    FixedPoint,
    WeylOrbitOrder,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::MagicalChain,
        Property::TraceInequality,
        Property::ShiftAdmissibility,
        Property::Trichotomy,
        Property::Duality,
        Property::Ancestors,
        Property::HolOracle,
        Property::DistanceOracle,
        Property::FixedPoint,
        Property::WeylOrbitOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::MagicalChain => "magical_chain",
            Property::TraceInequality => "trace_inequality",
            Property::ShiftAdmissibility => "shift_admissibility",
            Property::Trichotomy => "trichotomy",
            Property::Duality => "duality",
            Property::Ancestors => "ancestors",
            Property::HolOracle => "hol_oracle",
            Property::DistanceOracle => "distance_oracle",
            Property::FixedPoint => "fixedpoint",
            Property::WeylOrbitOrder => "weyl_orbit_order",
        }
    }

    fn needs_oracle(self) -> bool {
        matches!(
            self,
            Property::DistanceOracle | Property::FixedPoint | Property::WeylOrbitOrder
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property {s:?}"))
    }
}

/// Deliberate defects for testing the harness itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// The shift check uses `2ρ^{K_σ}` in place of `ρ^{K_σ}`.
    CorruptLeviRho,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub seed: u64,
    pub samples: usize,
    pub radius_sq: Rational,
    pub groups: Vec<GroupSpec>,
    pub properties: Vec<Property>,
    pub threads: usize,
    pub fault: Option<Fault>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            radius_sq: int(DEFAULT_RADIUS_SQ),
            groups: DEFAULT_GROUPS.iter().map(|g| g.parse().expect("preset group")).collect(),
            properties: Property::ALL.to_vec(),
            threads: 1,
            fault: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] coadjoint_core::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Exact inputs; vectors in native coordinates.
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub property: String,
    pub group: String,
    pub samples: usize,
    /// Samples hitting the special case: equality for the inequalities, a
    /// regular shift, a zero Q^spin, a non-self-dual orbit, more than one
    /// ancestor, a nonzero induced representation or character.
    pub special_cases: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub radius_sq: String,
    pub samples: usize,
    pub results: Vec<PropertyResult>,
    pub counterexamples: usize,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }

    pub fn result(&self, property: Property, group: &str) -> Option<&PropertyResult> {
        self.results
            .iter()
            .find(|r| r.property == property.name() && r.group == group)
    }

    /// Stable JSON: object keys sorted, rationals as strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is serializable")
    }
}

/// `Ok(true)` marks a sample that hit the property's special case.
type Check = Result<bool, Failure>;

fn failure(inputs: &[(&str, String)], expected: impl Into<String>, got: impl Into<String>) -> Failure {
    Failure {
        inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        expected: expected.into(),
        got: got.into(),
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn sample_rng(seed: u64, group: &str, property: Property, index: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&fnv1a(group).to_le_bytes());
    key[16..24].copy_from_slice(&fnv1a(property.name()).to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index as u64);
    rng
}

/// Per-group data shared by all properties.
struct GroupCtx {
    name: String,
    datum: RootDatum,
    radius_sq: Rational,
    /// Dominant points of ½Λ within the radius, built on first use.
    ball: OnceLock<Vec<WeightVec>>,
}

impl GroupCtx {
    fn new(spec: &GroupSpec, radius_sq: Rational) -> Result<Self, SweepError> {
        let datum = RootDatum::new(spec)?;
        Ok(GroupCtx {
            name: spec.canonical(),
            datum,
            radius_sq,
            ball: OnceLock::new(),
        })
    }

    fn ball(&self) -> &[WeightVec] {
        self.ball
            .get_or_init(|| ball::dominant_half_lattice_ball(&self.datum, self.radius_sq))
    }

    fn admissible_points(&self) -> Vec<&WeightVec> {
        self.ball()
            .iter()
            .filter(|v| orbits::is_admissible_point(&self.datum, v))
            .collect()
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    if config.samples == 0 {
        return Err(SweepError::Config("samples must be positive".into()));
    }
    if !config.radius_sq.is_positive() {
        return Err(SweepError::Config("radius must be positive".into()));
    }
    if config.threads == 0 {
        return Err(SweepError::Config("threads must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    pool.install(|| {
        let mut results = Vec::new();
        for spec in &config.groups {
            let ctx = GroupCtx::new(spec, config.radius_sq)?;
            for &p in &config.properties {
                results.push(run_property(&ctx, p, config)?);
            }
        }
        let counterexamples = results.iter().map(|r| r.failure_count).sum();
        Ok(SweepReport {
            seed: config.seed,
            radius_sq: config.radius_sq.to_string(),
            samples: config.samples,
            results,
            counterexamples,
        })
    })
}

fn summarize(ctx: &GroupCtx, property: Property, outcomes: Vec<Check>) -> PropertyResult {
    let samples = outcomes.len();
    let special_cases = outcomes.iter().filter(|o| matches!(o, Ok(true))).count();
    let failures: Vec<Failure> = outcomes.into_iter().filter_map(Result::err).collect();
    PropertyResult {
        property: property.name().into(),
        group: ctx.name.clone(),
        samples,
        special_cases,
        failure_count: failures.len(),
        failures: failures.into_iter().take(MAX_REPORTED_FAILURES).collect(),
        skipped: None,
    }
}

fn by_index<F>(n: usize, f: F) -> Vec<Check>
where
    F: Fn(usize) -> Check + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

fn run_property(ctx: &GroupCtx, property: Property, config: &SweepConfig) -> Result<PropertyResult, SweepError> {
    let d = &ctx.datum;
    if property.needs_oracle() && d.semisimple_rank() > oracle::RANK_CAP {
        let mut r = summarize(ctx, property, Vec::new());
        r.skipped = Some(format!("semisimple rank above the oracle cap {}", oracle::RANK_CAP));
        return Ok(r);
    }
    let rng = |i: usize| sample_rng(config.seed, &ctx.name, property, i);
    let outcomes = match property {
        Property::MagicalChain => by_index(config.samples, |i| check_magical(d, &mut rng(i))),
        Property::TraceInequality => by_index(config.samples, |i| check_trace(d, &mut rng(i))),
        Property::ShiftAdmissibility => {
            by_index(ctx.ball().len(), |i| check_shift(d, &ctx.ball()[i], config.fault))
        }
        Property::Trichotomy => by_index(ctx.ball().len(), |i| check_trichotomy(d, &ctx.ball()[i])),
        Property::Duality => {
            let pts = ctx.admissible_points();
            by_index(pts.len(), |i| check_duality(d, pts[i]))
        }
        Property::Ancestors => run_ancestors(ctx, config)?,
        Property::HolOracle => run_hol(ctx, config, &rng)?,
        Property::DistanceOracle => run_distance(ctx, config, &rng),
        Property::FixedPoint => {
            let pts = ctx.admissible_points();
            let n = config.samples.min(FIXEDPOINT_ORBITS).min(pts.len());
            // evenly spaced, hence distinct, orbits
            by_index(n, |i| check_fixedpoint(d, pts[i * pts.len() / n], &mut rng(i)))
        }
        Property::WeylOrbitOrder => {
            let n = ctx.ball().len().min(config.samples);
            by_index(n, |i| check_weyl_orbit(d, &ctx.ball()[i]))
        }
    };
    Ok(summarize(ctx, property, outcomes))
}

fn show(v: &WeightVec) -> String {
    v.to_string()
}

fn show_irrep(q: &SignedIrrep) -> String {
    match q {
        SignedIrrep::Zero => "zero".into(),
        SignedIrrep::Irrep { sign, label } => format!("{sign}[{label}]"),
    }
}

fn full_mask(d: &RootDatum) -> u64 {
    (1u64 << d.semisimple_rank()) - 1
}

fn random_face<R: Rng>(rng: &mut R, d: &RootDatum) -> Face {
    Face::new(d, rng.random::<u64>() & full_mask(d))
}

/// `ρ + d` with `d` dominant; about a third of the simple directions are
/// left at zero so the boundary of the shifted chamber is hit often.
fn shifted_chamber_point<R: Rng>(rng: &mut R, d: &RootDatum) -> WeightVec {
    let mut c = Vec::with_capacity(d.dim());
    for _ in 0..d.semisimple_rank() {
        c.push(if rng.random_ratio(1, 3) {
            int(0)
        } else {
            rat(rng.random_range(1..=8), 2)
        });
    }
    for _ in 0..d.central_rank() {
        c.push(rat(rng.random_range(-6..=6), 2));
    }
    d.rho() + &d.from_fundamental_coords(&c)
}

fn random_weyl<R: Rng>(rng: &mut R, d: &RootDatum, v: &WeightVec, max_len: usize) -> WeightVec {
    let mut w = v.clone();
    if d.semisimple_rank() == 0 {
        return w;
    }
    for _ in 0..rng.random_range(1..=max_len) {
        w = d.reflect(&w, rng.random_range(0..d.semisimple_rank()));
    }
    w
}

/// λ in the shifted chamber against μ drawn at random, on the equality
/// locus `λ − ρ^{K_σ}`, or a Weyl translate of it.
fn check_magical(d: &RootDatum, rng: &mut ChaCha8Rng) -> Check {
    let lambda = shifted_chamber_point(rng, d);
    let face = random_face(rng, d);
    let on_locus = &lambda - &chamber::rho_levi(d, &face);
    let mu = match rng.random_range(0..4) {
        0 => ball::random_half_lattice(rng, d, 4),
        1 => on_locus,
        2 => random_weyl(rng, d, &on_locus, 3),
        _ => &lambda - &ball::random_half_lattice(rng, d, 1),
    };
    let inputs = [("lambda", show(&lambda)), ("mu", show(&mu))];
    let r = orbits::magical_check(d, &lambda, &mu)
        .map_err(|e| failure(&inputs, "a report", e.to_string()))?;
    let got = || {
        format!(
            "lhs={} mid={} rhs={} equality={} witness={:?}",
            r.lhs, r.mid, r.rhs, r.equality, r.witness
        )
    };
    if !r.consistent() {
        return Err(failure(
            &inputs,
            "lhs >= mid >= rhs, lhs = mid only with lhs = rhs, witness clauses on equality",
            got(),
        ));
    }
    if d.is_dominant(&mu) {
        let f = Face::new(d, chamber::zero_mask(d, &mu));
        if lambda == &mu + &chamber::rho_levi(d, &f) && !r.equality {
            return Err(failure(&inputs, "equality on the shift relation", got()));
        }
    }
    Ok(r.equality)
}

/// Very regular λ = w(ρ + d) against random μ or `w(λ₀ − ρ^{K_σ})`.
fn check_trace(d: &RootDatum, rng: &mut ChaCha8Rng) -> Check {
    let lambda0 = shifted_chamber_point(rng, d);
    let face = random_face(rng, d);
    let mu0 = &lambda0 - &chamber::rho_levi(d, &face);
    let word: Vec<usize> = if d.semisimple_rank() == 0 {
        Vec::new()
    } else {
        (0..rng.random_range(0..=4))
            .map(|_| rng.random_range(0..d.semisimple_rank()))
            .collect()
    };
    let act = |v: &WeightVec| word.iter().fold(v.clone(), |x, &i| d.reflect(&x, i));
    let lambda = act(&lambda0);
    let structured = rng.random_ratio(1, 2);
    let mu = if structured {
        act(&mu0)
    } else {
        ball::random_half_lattice(rng, d, 4)
    };
    let inputs = [("lambda", show(&lambda)), ("mu", show(&mu))];
    let r = orbits::trace_inequality_check(d, &lambda, &mu)
        .map_err(|e| failure(&inputs, "a report", e.to_string()))?;
    if !r.consistent() {
        return Err(failure(
            &inputs,
            "norm_sq >= half_trace and all equality clauses",
            format!("{r:?}"),
        ));
    }
    if structured && orbits::in_face(d, &mu0, &face) && !r.equality {
        return Err(failure(&inputs, "equality", format!("{r:?}")));
    }
    Ok(r.equality)
}

fn levi_rho(d: &RootDatum, face: &Face, fault: Option<Fault>) -> WeightVec {
    let r = chamber::rho_levi(d, face);
    match fault {
        Some(Fault::CorruptLeviRho) => r.scale(int(2)),
        None => r,
    }
}

/// Both directions of the shift theorem and the closed form of Q^spin at
/// one dominant point μ.
fn check_shift(d: &RootDatum, mu: &WeightVec, fault: Option<Fault>) -> Check {
    let face = Face::new(d, chamber::zero_mask(d, mu));
    let lambda = mu + &levi_rho(d, &face, fault);
    let inputs = [("mu", show(mu)), ("shift", show(&lambda))];
    let admissible = orbits::is_admissible_point(d, mu);
    if d.is_regular(&lambda) {
        let shift_admissible = orbits::is_admissible_point(d, &lambda);
        if admissible {
            let n = &lambda - d.rho();
            let in_closure = d.in_lattice(&n)
                && d.is_dominant(&n)
                && face.zero_set_indices().iter().all(|&i| d.pairing_idx(&n, i).is_zero());
            let ok = d.is_dominant(&lambda)
                && orbits::in_shifted_chamber(d, &lambda)
                && shift_admissible
                && in_closure;
            if !ok {
                return Err(failure(
                    &inputs,
                    "regular shift dominant, admissible, in rho + (Λ≥0 ∩ closure of the face)",
                    format!(
                        "dominant={} shifted_chamber={} admissible={} closure={}",
                        d.is_dominant(&lambda),
                        orbits::in_shifted_chamber(d, &lambda),
                        shift_admissible,
                        in_closure
                    ),
                ));
            }
        } else if shift_admissible {
            return Err(failure(&inputs, "mu admissible", "mu not admissible"));
        }
    }
    if admissible {
        let orbit = orbits::orbit_from_point(d, mu).map_err(|e| failure(&inputs, "orbit", e.to_string()))?;
        let expected = if d.is_regular(&lambda) {
            SignedIrrep::Irrep {
                sign: Sign::Plus,
                label: lambda.clone(),
            }
        } else {
            SignedIrrep::Zero
        };
        match quant::qspin(d, &orbit) {
            Ok(q) if q == expected => {}
            Ok(q) => return Err(failure(&inputs, show_irrep(&expected), show_irrep(&q))),
            Err(e) => return Err(failure(&inputs, show_irrep(&expected), e.to_string())),
        }
    }
    Ok(admissible && d.is_regular(&lambda))
}

/// Zero or a regular admissible label, equal to Q^spin of the shift; and
/// regular admissible points are exactly `ρ + Λ≥0`.
fn check_trichotomy(d: &RootDatum, p: &WeightVec) -> Check {
    let inputs = [("mu", show(p))];
    let admissible = orbits::is_admissible_point(d, p);
    let regular_admissible = d.is_regular(p) && admissible;
    let n = p - d.rho();
    let in_rho_cone = d.in_lattice(&n) && d.is_dominant(&n);
    if regular_admissible != in_rho_cone {
        return Err(failure(
            &inputs,
            format!("regular admissible = {in_rho_cone}"),
            format!("{regular_admissible}"),
        ));
    }
    if !admissible {
        return Ok(false);
    }
    let err = |e: coadjoint_core::Error| failure(&inputs, "qspin", e.to_string());
    let orbit = orbits::orbit_from_point(d, p).map_err(err)?;
    let q = quant::qspin(d, &orbit).map_err(err)?;
    let s = orbits::shift(d, &orbit);
    match &q {
        SignedIrrep::Zero => {
            if d.is_regular(&orbits::shift_point(d, &orbit)) {
                return Err(failure(&inputs, "nonzero for a regular shift", "zero"));
            }
        }
        SignedIrrep::Irrep { sign, label } => {
            let good_label = *sign == Sign::Plus
                && d.is_regular(label)
                && d.is_dominant(label)
                && orbits::is_admissible_point(d, label)
                && label == s.rep();
            let of_shift = quant::qspin(d, &s).map_err(err)?;
            let own = !d.is_regular(p) || label == p;
            let trivial = p != d.rho() || label == d.rho();
            if !good_label || of_shift != q || !own || !trivial {
                return Err(failure(
                    &inputs,
                    format!("+[{}] equal to qspin of the shift", s.rep()),
                    format!("{} (shift gives {})", show_irrep(&q), show_irrep(&of_shift)),
                ));
            }
        }
    }
    Ok(q.is_zero())
}

fn check_duality(d: &RootDatum, p: &WeightVec) -> Check {
    let inputs = [("mu", show(p))];
    let err = |e: coadjoint_core::Error| failure(&inputs, "dual data", e.to_string());
    let orbit = orbits::orbit_from_point(d, p).map_err(err)?;
    let dual = orbits::dual_orbit(d, &orbit);
    if orbits::dual_orbit(d, &dual) != orbit
        || !orbits::is_admissible(d, &dual)
        || orbits::shift(d, &dual) != orbits::dual_orbit(d, &orbits::shift(d, &orbit))
    {
        return Err(failure(
            &inputs,
            "involutive, admissible, commuting with shift",
            format!("dual {}", dual.rep()),
        ));
    }
    let q = quant::qspin(d, &orbit).map_err(err)?;
    let qd = quant::qspin(d, &dual).map_err(err)?;
    if qd != q.dual(d) {
        return Err(failure(&inputs, show_irrep(&q.dual(d)), show_irrep(&qd)));
    }
    quant::qspin_dual(d, &orbit).map_err(err)?;
    Ok(dual != orbit)
}

/// `(s − a − b)² ≤ 4ab` or `s ≤ a + b`: exact form of `√s ≤ √a + √b`.
fn within_sum_of_norms(s: Rational, a: Rational, b: Rational) -> bool {
    let t = s - a - b;
    !t.is_positive() || t * t <= int(4) * a * b
}

fn run_ancestors(ctx: &GroupCtx, config: &SweepConfig) -> Result<Vec<Check>, SweepError> {
    let d = &ctx.datum;
    let sheets = chamber::sheets(d)?;
    let rho_sq = d.inner_sq(d.rho());
    let scan = ball::dominant_half_lattice_ball(d, int(2) * (config.radius_sq + rho_sq));
    let scan: Vec<(WeightVec, Rational, Option<usize>)> = scan
        .into_iter()
        .map(|p| {
            let n = d.inner_sq(&p);
            let sheet = chamber::sheet_index(&sheets, &Face::new(d, chamber::zero_mask(d, &p)));
            (p, n, sheet)
        })
        .collect();
    let regular: Vec<&WeightVec> = ctx
        .ball()
        .iter()
        .filter(|v| d.is_regular(v) && orbits::is_admissible_point(d, v))
        .collect();
    Ok(by_index(regular.len(), |i| {
        check_ancestors(d, regular[i], &sheets, &scan)
    }))
}

fn check_ancestors(
    d: &RootDatum,
    o: &WeightVec,
    sheets: &[Sheet],
    scan: &[(WeightVec, Rational, Option<usize>)],
) -> Check {
    let inputs = [("orbit", show(o))];
    let err = |e: coadjoint_core::Error| failure(&inputs, "ancestors", e.to_string());
    let orbit = orbits::orbit_from_point(d, o).map_err(err)?;
    let q = quant::qspin(d, &orbit).map_err(err)?;
    let o_sq = d.inner_sq(o);
    let mut found = 0;
    for (s, sheet) in sheets.iter().enumerate() {
        let by_face: BTreeSet<WeightVec> = orbits::ancestors(d, &orbit, Some(sheet))
            .map_err(err)?
            .into_iter()
            .map(|p| p.rep().clone())
            .collect();
        let mut by_scan = BTreeSet::new();
        for (p, p_sq, p_sheet) in scan {
            if !within_sum_of_norms(*p_sq, o_sq, sheet.rho_levi_sq) {
                continue;
            }
            let dist = d.inner_sq(&(o - p));
            if *p_sheet == Some(s) && dist == sheet.rho_levi_sq {
                by_scan.insert(p.clone());
            }
            let stab = d.inner_sq(&chamber::rho_levi(d, &Face::new(d, chamber::zero_mask(d, p))));
            if dist < stab {
                return Err(failure(
                    &[("orbit", show(o)), ("p", show(p))],
                    format!("distance² >= {stab}"),
                    dist.to_string(),
                ));
            }
        }
        if by_face != by_scan {
            let list = |s: &BTreeSet<WeightVec>| s.iter().map(show).collect::<Vec<_>>().join(" ; ");
            return Err(failure(
                &[("orbit", show(o)), ("sheet", s.to_string())],
                list(&by_scan),
                list(&by_face),
            ));
        }
        found += by_face.len();
        for p in &by_face {
            let po = orbits::orbit_from_point(d, p).map_err(err)?;
            let qp = quant::qspin(d, &po).map_err(err)?;
            if orbits::shift(d, &po) != orbit || qp != q {
                return Err(failure(
                    &[("orbit", show(o)), ("ancestor", show(p))],
                    show_irrep(&q),
                    show_irrep(&qp),
                ));
            }
        }
    }
    Ok(found > 1)
}

/// Levi-dominant by reflections in the zero-set simple roots.
fn levi_dominantize(d: &RootDatum, face: &Face, v: &WeightVec) -> WeightVec {
    let mut w = v.clone();
    while let Some(i) = face
        .zero_set_indices()
        .into_iter()
        .find(|&i| d.pairing_idx(&w, i).is_negative())
    {
        w = d.reflect(&w, i);
    }
    w
}

fn levi_admissible(d: &RootDatum, face: &Face, v: &WeightVec) -> bool {
    let positive = face
        .levi_positive_roots()
        .iter()
        .copied()
        .filter(|&k| d.pairing_idx(v, k).is_positive());
    d.in_lattice(&(v - &d.half_sum(positive)))
}

fn run_hol<F>(ctx: &GroupCtx, config: &SweepConfig, rng: &F) -> Result<Vec<Check>, SweepError>
where
    F: Fn(usize) -> ChaCha8Rng + Sync,
{
    let d = &ctx.datum;
    let per = config.samples.min(HOL_SAMPLES_PER_COMPONENT);
    let mut items = Vec::new();
    for face in chamber::faces(d) {
        for c in quant::components(d, &face)? {
            items.push((face.clone(), c));
        }
    }
    Ok(by_index(items.len() * per, |i| {
        let (face, c) = &items[i / per];
        check_hol(d, face, c, &mut rng(i))
    }))
}

fn check_hol(d: &RootDatum, face: &Face, c: &quant::Component, rng: &mut ChaCha8Rng) -> Check {
    let base = [("face", face.to_string()), ("component", c.pattern())];
    let mut mu = None;
    for _ in 0..2000 {
        let v = levi_dominantize(d, face, &ball::random_half_lattice(rng, d, 4));
        if levi_admissible(d, face, &v) {
            mu = Some(v);
            break;
        }
    }
    let Some(mu) = mu else {
        return Err(failure(&base, "an H-admissible sample", "none found"));
    };
    let mut inputs = base.to_vec();
    inputs.push(("mu", show(&mu)));
    let closed = quant::hol_induce(d, face, c, &mu);
    let oracle = quant::hol_induce_oracle(d, face, c, &mu);
    match (closed, oracle) {
        (Ok(a), Ok(b)) if a == b => Ok(!a.is_zero()),
        (a, b) => Err(failure(
            &inputs,
            b.map_or_else(|e| e.to_string(), |q| show_irrep(&q)),
            a.map_or_else(|e| e.to_string(), |q| show_irrep(&q)),
        )),
    }
}

fn run_distance<F>(ctx: &GroupCtx, config: &SweepConfig, rng: &F) -> Vec<Check>
where
    F: Fn(usize) -> ChaCha8Rng + Sync,
{
    let d = &ctx.datum;
    let mut pairs: Vec<(WeightVec, WeightVec)> = Vec::new();
    if d.semisimple_rank() <= EXHAUSTIVE_DISTANCE_RANK {
        let radius = config.radius_sq.min(int(DISTANCE_BALL_SQ));
        let pts = ball::dominant_half_lattice_ball(d, radius);
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i..] {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let exhaustive = pairs.len();
    let random = config.samples.min(DISTANCE_RANDOM_PAIRS);
    by_index(exhaustive + random, |i| {
        let (a, b) = if i < exhaustive {
            pairs[i].clone()
        } else {
            let mut r = rng(i - exhaustive);
            (
                ball::random_half_lattice(&mut r, d, 3),
                ball::random_half_lattice(&mut r, d, 3),
            )
        };
        check_distance(d, &a, &b)
    })
}

fn check_distance(d: &RootDatum, a: &WeightVec, b: &WeightVec) -> Check {
    let inputs = [("v", show(a)), ("w", show(b))];
    let err = |e: coadjoint_core::Error| failure(&inputs, "orbits", e.to_string());
    let o1 = orbits::orbit_from_point(d, a).map_err(err)?;
    let o2 = orbits::orbit_from_point(d, b).map_err(err)?;
    let fast = orbits::orbit_distance_sq(d, &o1, &o2);
    match oracle::distance_bruteforce(d, &o1, &o2) {
        Ok(slow) if slow == fast => Ok(false),
        Ok(slow) => Err(failure(&inputs, slow.to_string(), fast.to_string())),
        Err(e) => Err(failure(&inputs, fast.to_string(), e.to_string())),
    }
}

fn check_fixedpoint(d: &RootDatum, p: &WeightVec, rng: &mut ChaCha8Rng) -> Check {
    let inputs = [("mu", show(p))];
    let err = |e: coadjoint_core::Error| failure(&inputs, "qspin", e.to_string());
    let orbit = orbits::orbit_from_point(d, p).map_err(err)?;
    let q = quant::qspin(d, &orbit).map_err(err)?;
    for _ in 0..FIXEDPOINT_X {
        let mut attempt = 0;
        let (x, expected, got) = loop {
            attempt += 1;
            let x = oracle::random_x(rng, d.dim());
            let expected = match &q {
                SignedIrrep::Zero => Ok(Complex64::zero()),
                SignedIrrep::Irrep { sign, label } => {
                    oracle::character_eval(d, label, &x).map(|c| c * sign.value() as f64)
                }
            };
            match (expected, oracle::fixedpoint_eval(d, &orbit, &x)) {
                (Ok(e), Ok(g)) => break (x, e, g),
                (Err(OracleError::DenominatorVanishes), _) | (_, Err(OracleError::DenominatorVanishes))
                    if attempt < 1000 => {}
                (Err(e), _) | (_, Err(e)) => return Err(failure(&inputs, "evaluation", e.to_string())),
            }
        };
        if !oracle::close(got.value, expected, got.mass) {
            let xs = x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            return Err(failure(
                &[("mu", show(p)), ("x", xs)],
                format!("{expected}"),
                format!("{} (term mass {})", got.value, got.mass),
            ));
        }
    }
    Ok(!q.is_zero())
}

fn check_weyl_orbit(d: &RootDatum, p: &WeightVec) -> Check {
    let inputs = [("mu", show(p))];
    let orbit = oracle::weyl_orbit(d, p).map_err(|e| failure(&inputs, "orbit", e.to_string()))?;
    let size = orbit.len() as u128;
    let dominant: Vec<&WeightVec> = orbit.iter().filter(|v| d.is_dominant(v)).collect();
    if d.weyl_order() % size != 0 || dominant != [p] {
        return Err(failure(
            &inputs,
            format!("orbit size dividing {} with one dominant point", d.weyl_order()),
            format!("size {size}, {} dominant points", dominant.len()),
        ));
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
    }

    #[test]
    fn streams_are_distinct() {
        let a: u64 = sample_rng(1, "SU(2)", Property::MagicalChain, 0).random();
        let b: u64 = sample_rng(1, "SU(2)", Property::MagicalChain, 1).random();
        let c: u64 = sample_rng(1, "SU(3)", Property::MagicalChain, 0).random();
        assert!(a != b && a != c);
        let again: u64 = sample_rng(1, "SU(2)", Property::MagicalChain, 0).random();
        assert_eq!(a, again);
    }

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig {
            samples: 200,
            radius_sq: int(8),
            groups: vec!["SU(2)".parse().unwrap(), "SU(3)".parse().unwrap()],
            ..SweepConfig::default()
        };
        let report = run_sweep(&config).unwrap();
        assert!(report.passed(), "{:#?}", report);
    }
}
