//! Command-line interface. [`execute`] runs one invocation in-process and
//! returns the exit code with the text for standard output and error.
//!
//! Exit codes: 0 success, 1 verification counterexamples, 2 malformed
//! input, 3 mathematical precondition failure (with a JSON error object on
//! standard output).

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coadjoint_core::chamber::{self, Face, Sheet};
use coadjoint_core::coords::{self, Basis};
use coadjoint_core::quant::{self, Component};
use coadjoint_core::spec::{parse_rational, parse_rational_list};
use coadjoint_core::{orbits, Error, GroupSpec, Orbit, RootDatum, WeightVec};
use serde_json::{json, Value};

use crate::json;
use crate::lattice_file::LatticeFile;
use crate::sweep::{self, Property, SweepConfig};

#[derive(Debug, Parser)]
#[command(name = "coadjoint", version, about = "Exact coadjoint orbit calculus for compact Lie groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group data.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Orbit data.
    Orbit {
        #[command(subcommand)]
        action: OrbitAction,
    },
    /// Dixmier sheets of the group.
    Sheets(GroupArgs),
    /// Ancestors of a regular admissible orbit.
    Ancestors(AncestorArgs),
    /// Spin quantization of an admissible orbit and of its dual.
    Qspin(WeightArgs),
    /// Holomorphic induction from the Levi subgroup of a face.
    Induce(InduceArgs),
    /// The magical inequality for λ in the shifted chamber and any μ.
    Magical(MagicalArgs),
    /// Randomized and exhaustive verification sweep.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum GroupAction {
    /// Ranks, roots, ρ, faces and the sheet table.
    Show(GroupArgs),
}

#[derive(Debug, Subcommand)]
pub enum OrbitAction {
    /// Dominant representative, face, integrality, admissibility, shift and Q^spin.
    Info(WeightArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group spec, e.g. `SU(3)`, `U(2)xG2`, `Sp(2)@scale=1/2`.
    pub spec: String,
    /// JSON file with a custom character lattice.
    #[arg(long)]
    pub lattice: Option<PathBuf>,
    /// Coordinate basis: ambient, fundamental or native.
    #[arg(long)]
    pub basis: Option<String>,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Debug, Args)]
pub struct AncestorArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Restrict to one sheet (index from `sheets`).
    #[arg(long)]
    pub sheet: Option<usize>,
}

#[derive(Debug, Args)]
pub struct InduceArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Simple roots vanishing on the face, 1-based and comma-separated;
    /// `none` for the open chamber.
    #[arg(long)]
    pub face: String,
    /// Component index or sign pattern such as `+-+`; all components if omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub component: Option<String>,
}

#[derive(Debug, Args)]
pub struct MagicalArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = sweep::DEFAULT_SEED)]
    pub seed: u64,
    /// Random samples per group for the sampled properties.
    #[arg(long, default_value_t = sweep::DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Squared radius of the exhaustive half-lattice balls.
    #[arg(long, default_value_t = sweep::DEFAULT_RADIUS_SQ.to_string())]
    pub radius: String,
    /// Groups to sweep.
    #[arg(long, value_delimiter = ',')]
    pub groups: Vec<String>,
    /// Properties to check (all by default).
    #[arg(long, value_delimiter = ',')]
    pub properties: Vec<String>,
    /// Worker threads.
    #[arg(long, env = "COADJOINT_THREADS")]
    pub threads: Option<usize>,
}

enum Failure {
    /// Exit 1 with the given document on standard output.
    Counterexamples(Value),
    Input(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Math(e)
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let render = |v: &Value| {
        let mut s = match cli.output {
            OutputFormat::Json => serde_json::to_string(v),
            OutputFormat::Pretty => serde_json::to_string_pretty(v),
        }
        .expect("JSON values serialize");
        s.push('\n');
        s
    };
    match dispatch(&cli.command) {
        Ok(v) => Outcome { code: 0, stdout: render(&v), stderr: String::new() },
        Err(Failure::Counterexamples(v)) => Outcome { code: 1, stdout: render(&v), stderr: String::new() },
        Err(Failure::Input(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Math(e)) => Outcome { code: 3, stdout: render(&json::error(&e)), stderr: String::new() },
    }
}

fn dispatch(command: &Command) -> Result<Value, Failure> {
    match command {
        Command::Group { action: GroupAction::Show(g) } => group_show(g),
        Command::Orbit { action: OrbitAction::Info(w) } => orbit_info(w),
        Command::Sheets(g) => {
            let ctx = Ctx::new(g)?;
            Ok(json!({ "group": ctx.datum.spec().canonical(), "sheets": ctx.sheet_table()? }))
        }
        Command::Ancestors(a) => ancestors(a),
        Command::Qspin(w) => qspin(w),
        Command::Induce(i) => induce(i),
        Command::Magical(m) => magical(m),
        Command::Verify(v) => verify(v),
    }
}

struct Ctx {
    datum: RootDatum,
    basis: Basis,
}

impl Ctx {
    fn new(args: &GroupArgs) -> Result<Self, Failure> {
        let spec: GroupSpec = args.spec.parse()?;
        let mut datum = RootDatum::new(&spec)?;
        if let Some(path) = &args.lattice {
            datum = LatticeFile::read(path)?.apply(&datum)?;
        }
        let basis = match &args.basis {
            Some(b) => b.parse()?,
            None => coords::default_basis(&datum),
        };
        if basis == Basis::Ambient && !coords::supports_ambient(&datum) {
            return Err(Error::UnsupportedBasis(format!("ambient coordinates are not available for {spec}")).into());
        }
        Ok(Ctx { datum, basis })
    }

    fn read(&self, text: &str) -> Result<WeightVec, Failure> {
        Ok(coords::to_native(&self.datum, &parse_rational_list(text)?, self.basis)?)
    }

    fn vec(&self, v: &WeightVec) -> Value {
        json::vector(&self.datum, v, self.basis).expect("basis checked")
    }

    fn irrep(&self, q: &quant::SignedIrrep) -> Value {
        json::irrep(&self.datum, q).expect("fundamental basis always exists")
    }

    fn sheets(&self) -> Result<Vec<Sheet>, Failure> {
        Ok(chamber::sheets(&self.datum)?)
    }

    fn sheet_table(&self) -> Result<Value, Failure> {
        Ok(self
            .sheets()?
            .iter()
            .enumerate()
            .map(|(i, s)| {
                json!({
                    "index": i,
                    "faces": s.faces.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    "rho_levi_sq": json::rational(&s.rho_levi_sq),
                    "semisimple_rank": s.semisimple_rank,
                })
            })
            .collect())
    }

    fn header(&self) -> Value {
        json!({ "group": self.datum.spec().canonical(), "basis": self.basis.to_string() })
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut base, extra) {
        a.extend(b);
    }
    base
}

fn group_show(args: &GroupArgs) -> Result<Value, Failure> {
    let ctx = Ctx::new(args)?;
    let d = &ctx.datum;
    let roots: Vec<Value> = d.positive_roots().iter().map(|r| ctx.vec(r)).collect();
    let simple: Vec<Value> = d.simple_roots().iter().map(|r| ctx.vec(r)).collect();
    Ok(merge(
        ctx.header(),
        json!({
            "semisimple_rank": d.semisimple_rank(),
            "central_rank": d.central_rank(),
            "dim": d.dim(),
            "simple_roots": simple,
            "positive_roots": roots,
            "rho": ctx.vec(d.rho()),
            "rho_norm_sq": json::rational(&d.inner_sq(d.rho())),
            "weyl_order": d.weyl_order().to_string(),
            "faces": chamber::faces(d).len(),
            "sheets": ctx.sheet_table()?,
        }),
    ))
}

fn orbit_record(ctx: &Ctx, orbit: &Orbit) -> Result<Value, Failure> {
    let d = &ctx.datum;
    let admissible = orbits::is_admissible(d, orbit);
    let shift = orbits::shift_point(d, orbit);
    let shift_dominant = chamber::dominantize(d, &shift).1;
    let qspin = if admissible {
        ctx.irrep(&quant::qspin(d, orbit)?)
    } else {
        Value::Null
    };
    Ok(merge(
        ctx.header(),
        json!({
            "dominant": ctx.vec(orbit.rep()),
            "face": orbit.face().to_string(),
            "levi_rank": orbit.face().levi_rank(),
            "rho_levi_sq": json::rational(&d.inner_sq(&chamber::rho_levi(d, orbit.face()))),
            "regular": orbit.is_regular(),
            "integral": orbits::is_integral(d, orbit),
            "admissible": admissible,
            "very_regular": orbits::is_very_regular(d, orbit),
            "shift": ctx.vec(&shift),
            "shift_dominant": ctx.vec(&shift_dominant),
            "shift_singular": !d.is_regular(&shift),
            "shift_is_dominant": d.is_dominant(&shift),
            "shift_admissible": orbits::is_admissible_point(d, &shift),
            "qspin": qspin,
        }),
    ))
}

fn orbit_info(args: &WeightArgs) -> Result<Value, Failure> {
    let ctx = Ctx::new(&args.group)?;
    let v = ctx.read(&args.weight)?;
    let orbit = orbits::orbit_from_point(&ctx.datum, &v)?;
    orbit_record(&ctx, &orbit)
}

fn ancestors(args: &AncestorArgs) -> Result<Value, Failure> {
    let ctx = Ctx::new(&args.weight.group)?;
    let d = &ctx.datum;
    let v = ctx.read(&args.weight.weight)?;
    let orbit = orbits::orbit_from_point(d, &v)?;
    let sheets = ctx.sheets()?;
    let restrict = match args.sheet {
        Some(i) => Some(
            sheets
                .get(i)
                .ok_or_else(|| Failure::Input(format!("sheet index {i} out of range (0..{})", sheets.len())))?,
        ),
        None => None,
    };
    let list = orbits::ancestors(d, &orbit, restrict)?;
    let q = quant::qspin(d, &orbit)?;
    let entries: Vec<Value> = list
        .iter()
        .map(|p| {
            json!({
                "rep": ctx.vec(p.rep()),
                "face": p.face().to_string(),
                "sheet": chamber::sheet_index(&sheets, p.face()),
                "distance_sq": json::rational(&orbits::orbit_distance_sq(d, p, &orbit)),
                "rho_levi_sq": json::rational(&d.inner_sq(&chamber::rho_levi(d, p.face()))),
            })
        })
        .collect();
    let points: Vec<Vec<Value>> = std::iter::once(&orbit)
        .chain(&list)
        .map(|p| {
            coords::from_native(d, p.rep(), ctx.basis)
                .expect("basis checked")
                .iter()
                .map(json::rational)
                .collect()
        })
        .collect();
    Ok(merge(
        ctx.header(),
        json!({
            "orbit": ctx.vec(orbit.rep()),
            "qspin": ctx.irrep(&q),
            "count": list.len(),
            "ancestors": entries,
            "points": points,
        }),
    ))
}

fn qspin(args: &WeightArgs) -> Result<Value, Failure> {
    let ctx = Ctx::new(&args.group)?;
    let d = &ctx.datum;
    let orbit = orbits::orbit_from_point(d, &ctx.read(&args.weight)?)?;
    let q = quant::qspin(d, &orbit)?;
    let dual = orbits::dual_orbit(d, &orbit);
    let qd = quant::qspin_dual(d, &orbit)?;
    Ok(merge(
        ctx.header(),
        json!({
            "orbit": ctx.vec(orbit.rep()),
            "qspin": ctx.irrep(&q),
            "dual_orbit": ctx.vec(dual.rep()),
            "qspin_dual": ctx.irrep(&qd),
        }),
    ))
}

fn parse_face(d: &RootDatum, text: &str) -> Result<Face, Failure> {
    let t = text.trim();
    if t.is_empty() || t == "none" {
        return Ok(Face::new(d, 0));
    }
    let idx = t
        .split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(Failure::Input(format!("bad simple root index {s:?} (1-based)"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Face::from_indices(d, &idx)?)
}

fn pick_components(all: Vec<Component>, which: Option<&str>) -> Result<Vec<(usize, Component)>, Failure> {
    let indexed = all.into_iter().enumerate();
    match which {
        None => Ok(indexed.collect()),
        Some(w) if w.chars().all(|c| c == '+' || c == '-') && !w.is_empty() => indexed
            .filter(|(_, c)| c.pattern() == w)
            .map(Ok)
            .next()
            .map(|r| r.map(|x| vec![x]))
            .unwrap_or_else(|| Err(Failure::Input(format!("no component with sign pattern {w}")))),
        Some(w) => {
            let i: usize = w
                .trim()
                .parse()
                .map_err(|_| Failure::Input(format!("component must be an index or a +/- pattern, got {w:?}")))?;
            let all: Vec<_> = indexed.collect();
            let n = all.len();
            all.into_iter()
                .nth(i)
                .map(|x| vec![x])
                .ok_or_else(|| Failure::Input(format!("component index {i} out of range (0..{n})")))
        }
    }
}

fn induce(args: &InduceArgs) -> Result<Value, Failure> {
    let ctx = Ctx::new(&args.weight.group)?;
    let d = &ctx.datum;
    let face = parse_face(d, &args.face)?;
    let mu = ctx.read(&args.weight.weight)?;
    let comps = pick_components(quant::components(d, &face)?, args.component.as_deref())?;
    let mut out = Vec::new();
    for (i, c) in comps {
        let closed = quant::hol_induce(d, &face, &c, &mu)?;
        let oracle = quant::hol_induce_oracle(d, &face, &c, &mu)?;
        out.push(json!({
            "component": i,
            "pattern": c.pattern(),
            "rho_c": ctx.vec(c.rho_c()),
            "result": ctx.irrep(&closed),
            "oracle": ctx.irrep(&oracle),
            "oracle_agrees": closed == oracle,
        }));
    }
    let single = args.component.is_some();
    Ok(merge(
        ctx.header(),
        json!({
            "face": face.to_string(),
            "mu": ctx.vec(&mu),
            "components": if single { Value::Null } else { Value::Array(out.clone()) },
            "induced": if single { out.into_iter().next().unwrap_or(Value::Null) } else { Value::Null },
        }),
    ))
}

fn magical(args: &MagicalArgs) -> Result<Value, Failure> {
    let ctx = Ctx::new(&args.group)?;
    let lambda = ctx.read(&args.lambda)?;
    let mu = ctx.read(&args.mu)?;
    let r = orbits::magical_check(&ctx.datum, &lambda, &mu)?;
    Ok(merge(
        merge(ctx.header(), json!({ "lambda": ctx.vec(&lambda), "mu": ctx.vec(&mu) })),
        json::magical(&r),
    ))
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn verify(args: &VerifyArgs) -> Result<Value, Failure> {
    let groups = if args.groups.is_empty() {
        sweep::DEFAULT_GROUPS.iter().map(|s| s.to_string()).collect()
    } else {
        args.groups.clone()
    };
    let properties = if args.properties.is_empty() {
        Property::ALL.to_vec()
    } else {
        args.properties
            .iter()
            .map(|p| p.parse::<Property>().map_err(Failure::Input))
            .collect::<Result<_, _>>()?
    };
    let config = SweepConfig {
        seed: args.seed,
        samples: args.samples,
        radius_sq: parse_rational(&args.radius)?,
        groups: groups.iter().map(|g| g.parse()).collect::<Result<_, _>>()?,
        properties,
        threads: args.threads.unwrap_or_else(default_threads),
        fault: None,
    };
    let report = sweep::run_sweep(&config).map_err(|e| match e {
        sweep::SweepError::Core(e) => Failure::from(e),
        other => Failure::Input(other.to_string()),
    })?;
    let v = report.to_json();
    if report.passed() {
        Ok(v)
    } else {
        Err(Failure::Counterexamples(v))
    }
}
