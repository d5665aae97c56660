//! Batch command-line interface: subcommands, JSON reports and the
//! verification ledger.

pub mod ledger;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use scatterlab::curve::{
    abs_irred_probe, bezout_check, branches_at, build_cf, build_df, build_g, multiplicity_at, numerator,
    point_census, singularity_survey, BivarPoly, CensusMode, CurveJson, DEFAULT_BLOWUP_BUDGET,
    DEFAULT_CENSUS_BUDGET,
};
use scatterlab::gf::FieldCtx;
use scatterlab::linpoly::LinPoly;
use scatterlab::mrd::mrd_audit;
use scatterlab::scatter::{exceptional_probe, is_scattered, scatter_witness, weight_distribution};
use scatterlab::verify::{
    check_inequalities, classify_records, family_classify, replay, sporadic_witness, verify_branch_lemmas, ClaimRecord,
    Outcome, SporadicCase,
};
use scatterlab::Error;

use ledger::{Ack, LedgerError, VerifyLedger};

pub const DEFAULT_LEDGER: &str = "scatterlab-ledger.jsonl";
pub const DEFAULT_EXT_BOUND: u32 = 12;

#[derive(Parser, Debug)]
#[command(name = "scatterlab", version, about = "Scattered linearized polynomials, rank-metric codes and their curves")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Command,
    /// Spaces of JSON indentation; 0 prints one line.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    /// Field string, e.g. p=2,n=5 or p=2,e=2,n=3,mod=1,1,0,1.
    #[arg(long)]
    pub field: String,
    /// Terms k:coords separated by ';', e.g. "0:1;2:0,1".
    #[arg(long)]
    pub poly: String,
    /// Index t of the subspace {(x^(q^t), f(x))}.
    #[arg(long, default_value_t = 0)]
    pub index: u32,
}

#[derive(Args, Debug, Clone)]
pub struct Budgets {
    /// Largest field order a census may iterate over.
    #[arg(long, default_value_t = DEFAULT_CENSUS_BUDGET)]
    pub budget_census: u64,
    /// Quadratic transforms allowed per branch count.
    #[arg(long, default_value_t = DEFAULT_BLOWUP_BUDGET)]
    pub budget_blowups: u32,
    /// Largest extension degree used for splitting points.
    #[arg(long, default_value_t = DEFAULT_EXT_BOUND)]
    pub budget_ext: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Which {
    Cf,
    Df,
    G,
    Numerator,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Suite {
    Branches,
    Inequalities,
    Classify,
    Sporadic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Scatteredness, weight distribution and optional probe over extensions.
    CheckScattered {
        #[command(flatten)]
        poly: PolyArgs,
        /// Also test over F_{q^(mn)} for m = 1..=M.
        #[arg(long)]
        probe: Option<u32>,
    },
    /// Rank distribution of the associated code.
    MrdAudit {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Builds one of the attached plane curves.
    CurveBuild {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value = "cf")]
        which: Which,
        /// Also factor the curve over extensions up to this degree.
        #[arg(long)]
        irreducibility: Option<u32>,
    },
    /// Singular points of the curve and their branch counts.
    SingularSurvey {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Multiplicity and branch count at an affine point.
    Branches {
        #[arg(long)]
        field: String,
        /// Curve as JSON [[i, j, [coords]], ...]; alternatively --poly.
        #[arg(long, conflicts_with = "poly")]
        curve: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 0)]
        index: u32,
        #[arg(long, value_enum, default_value = "cf")]
        which: Which,
        /// Coordinates of x (default 0).
        #[arg(long, default_value = "0")]
        x: String,
        #[arg(long, default_value = "0")]
        y: String,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Points (x, y) of C_f over F_{q^r} with y/x outside F_q.
    Census {
        #[command(flatten)]
        poly: PolyArgs,
        /// Largest r; every multiple of n up to it is tried.
        #[arg(long)]
        rmax: Option<u32>,
        /// Stop at the first qualifying point.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Sum of intersection multiplicities of two curves against deg * deg.
    BezoutCheck {
        #[arg(long)]
        field: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Runs a verification suite and appends its records to the ledger.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Suite parameters as JSON; --field/--poly/--index fill gaps.
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        index: Option<u32>,
        #[arg(long, env = "SCATTERLAB_LEDGER", default_value = DEFAULT_LEDGER)]
        ledger: PathBuf,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Prints ledger entries, optionally re-running each one.
    LedgerShow {
        #[arg(long, env = "SCATTERLAB_LEDGER", default_value = DEFAULT_LEDGER)]
        ledger: PathBuf,
        #[arg(long)]
        claim_id: Option<String>,
        #[arg(long)]
        replay: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                Error::BudgetExceeded(_)
                | Error::ResolutionBudgetExceeded(_)
                | Error::NoWitnessWithinBudget(_)
                | Error::FieldTooLarge { .. },
            ) => 3,
            CliError::Core(Error::DiscrepancyAlert(_)) | CliError::Ledger(LedgerError::Discrepancy { .. }) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::DiscrepancyAlert(_)) | CliError::Ledger(LedgerError::Discrepancy { .. }) => {
                "DiscrepancyAlert"
            }
            CliError::Ledger(LedgerError::Io(_)) => "IoFailure",
            CliError::Ledger(LedgerError::Corrupt { .. }) => "CorruptLedger",
            CliError::Usage(_) => "UsageError",
            CliError::Core(_) if self.exit_code() == 3 => "BudgetExceeded",
            CliError::Core(_) => "InvalidInput",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.kind(), "message": self.to_string() })
    }
}

/// A report and the exit code it implies.
pub struct Report {
    pub value: Value,
    pub code: i32,
}

impl Report {
    fn ok(value: Value) -> Report {
        Report { value, code: 0 }
    }
}

fn load(p: &PolyArgs) -> Result<(FieldCtx, LinPoly), CliError> {
    let ctx = FieldCtx::parse(&p.field)?;
    let f = LinPoly::parse(&ctx, &p.poly)?;
    Ok((ctx, f))
}

fn curve_of(f: &LinPoly, t: u32, which: Which) -> Result<BivarPoly, Error> {
    match which {
        Which::Cf => build_cf(f, t),
        Which::Df => build_df(f, t),
        Which::G => build_g(f, t),
        Which::Numerator => numerator(f, t),
    }
}

fn parse_curve(ctx: &FieldCtx, s: &str) -> Result<BivarPoly, CliError> {
    let j: CurveJson = serde_json::from_str(s).map_err(|e| CliError::Usage(format!("curve JSON: {e}")))?;
    Ok(BivarPoly::from_json(ctx, &j)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.cmd {
        Command::CheckScattered { poly, probe } => {
            let (ctx, f) = load(poly)?;
            let t = poly.index;
            let scattered = is_scattered(&f, t, &ctx)?;
            let witness = scatter_witness(&f, t, &ctx)?.map(|(x, y)| [ctx.coords(x), ctx.coords(y)]);
            let probe = match probe {
                Some(m) => Some(exceptional_probe(&f, t, *m)?),
                None => None,
            };
            Ok(Report::ok(json!({
                "field": ctx.spec_string(),
                "poly": f.to_text(),
                "index": t,
                "scattered": scattered,
                "weight_distribution": weight_distribution(&f, t, &ctx)?,
                "witness": witness,
                "probe": probe,
                "family": family_classify(&f, t),
            })))
        }
        Command::MrdAudit { poly } => {
            let (_, f) = load(poly)?;
            Ok(Report::ok(to_value(&mrd_audit(&f, poly.index))))
        }
        Command::CurveBuild { poly, which, irreducibility } => {
            let (_, f) = load(poly)?;
            let c = curve_of(&f, poly.index, *which)?;
            let probe = match irreducibility {
                Some(d) => Some(to_value(&abs_irred_probe(&c, *d)?)),
                None => None,
            };
            Ok(Report::ok(json!({
                "which": format!("{which:?}").to_lowercase(),
                "total_degree": c.total_degree(),
                "hom_degree": c.hom_degree(),
                "curve": c.to_json(),
                "irreducibility": probe,
            })))
        }
        Command::SingularSurvey { poly, budgets } => {
            let (_, f) = load(poly)?;
            let r = singularity_survey(&f, poly.index, budgets.budget_ext, budgets.budget_blowups)?;
            Ok(Report::ok(to_value(&r)))
        }
        Command::Branches { field, curve, poly, index, which, x, y, budgets } => {
            let ctx = FieldCtx::parse(field)?;
            let c = match (curve, poly) {
                (Some(s), _) => parse_curve(&ctx, s)?,
                (None, Some(p)) => curve_of(&LinPoly::parse(&ctx, p)?, *index, *which)?,
                (None, None) => return Err(CliError::Usage("one of --curve or --poly is required".into())),
            };
            let c = if c.hom_degree().is_some() { c.affine_part() } else { c };
            let (x, y) = (ctx.parse_elem(x)?, ctx.parse_elem(y)?);
            let (m, cone) = multiplicity_at(&c, x, y)?;
            let b = branches_at(&c, x, y, budgets.budget_blowups)?;
            let code = if b.count().is_some() { 0 } else { 3 };
            Ok(Report {
                value: json!({ "multiplicity": m, "tangent_cone": cone.to_json(), "branches": b }),
                code,
            })
        }
        Command::Census { poly, rmax, witness, budgets } => {
            let (ctx, f) = load(poly)?;
            let c = build_cf(&f, poly.index)?;
            let n = ctx.n();
            let rmax = rmax.unwrap_or(n);
            let mode = if *witness { CensusMode::FirstWitness } else { CensusMode::Count };
            let mut rows = Vec::new();
            for r in (n..=rmax).step_by(n as usize) {
                let cen = point_census(&c, r, mode, budgets.budget_census)?;
                let found = cen.witness.is_some();
                rows.push(to_value(&cen));
                if found {
                    break;
                }
            }
            Ok(Report::ok(json!({ "poly": f.to_text(), "index": poly.index, "census": rows })))
        }
        Command::BezoutCheck { field, a, b, budgets } => {
            let ctx = FieldCtx::parse(field)?;
            let (a, b) = (parse_curve(&ctx, a)?, parse_curve(&ctx, b)?);
            let r = bezout_check(&a, &b, budgets.budget_ext)?;
            let code = if r.holds { 0 } else { 1 };
            Ok(Report { value: to_value(&r), code })
        }
        Command::Verify { suite, params, field, poly, index, ledger, budgets } => {
            let params: Value = match params {
                Some(s) => serde_json::from_str(s).map_err(|e| CliError::Usage(format!("--params: {e}")))?,
                None => json!({}),
            };
            let ctx = Fallback { field: field.clone(), poly: poly.clone(), index: *index };
            let records = run_suite(*suite, params, &ctx, budgets)?;
            let led = VerifyLedger::new(ledger);
            let (mut appended, mut duplicates) = (0, 0);
            for r in &records {
                match led.append(r)? {
                    Ack::Appended => appended += 1,
                    Ack::Duplicate => duplicates += 1,
                }
            }
            let code = if records.iter().any(|r| r.outcome == Outcome::Fail) {
                1
            } else if records.iter().any(|r| r.outcome == Outcome::Unresolved) {
                3
            } else {
                0
            };
            Ok(Report {
                value: json!({
                    "records": records,
                    "ledger": { "path": led.path(), "appended": appended, "duplicates": duplicates },
                }),
                code,
            })
        }
        Command::LedgerShow { ledger, claim_id, replay: do_replay } => {
            let led = VerifyLedger::new(ledger);
            let entries: Vec<ClaimRecord> = led
                .entries()?
                .into_iter()
                .filter(|r| claim_id.as_ref().map_or(true, |c| &r.claim_id == c))
                .collect();
            if !do_replay {
                return Ok(Report::ok(json!({ "path": led.path(), "entries": entries })));
            }
            let mut code = 0;
            let mut rows = Vec::new();
            for r in &entries {
                let ok = replay(r)?;
                if !ok {
                    code = 1;
                }
                rows.push(json!({ "key": r.key, "claim_id": r.claim_id, "outcome": r.outcome, "reproduced": ok }));
            }
            Ok(Report { value: json!({ "path": led.path(), "replayed": rows }), code })
        }
    }
}

struct Fallback {
    field: Option<String>,
    poly: Option<String>,
    index: Option<u32>,
}

impl Fallback {
    fn field(&self, v: Option<String>) -> Result<FieldCtx, CliError> {
        let s = v.or_else(|| self.field.clone()).ok_or_else(|| CliError::Usage("a field is required".into()))?;
        Ok(FieldCtx::parse(&s)?)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    fn items(&self) -> Vec<T> {
        match self {
            OneOrMany::One(x) => vec![x.clone()],
            OneOrMany::Many(v) => v.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IneqParams {
    q: OneOrMany<u64>,
    t: OneOrMany<u32>,
    k_max: OneOrMany<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Instance {
    poly: String,
    t: u32,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct BranchParams {
    field: Option<String>,
    #[serde(default)]
    instances: Vec<Instance>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassifyParams {
    field: Option<String>,
    t: Option<u32>,
    max_km: u32,
    #[serde(default = "default_probe")]
    probe_m: u32,
    #[serde(default = "default_true")]
    orbit_reduction: bool,
}

fn default_probe() -> u32 {
    2
}
fn default_true() -> bool {
    true
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SporadicParams {
    field: Option<String>,
    case: SporadicCase,
    a: Option<String>,
    b: String,
    #[serde(default = "default_rmax")]
    r_max: u32,
    budget: Option<u64>,
}

fn default_rmax() -> u32 {
    14
}

fn params<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Usage(format!("--params: {e}")))
}

fn run_suite(suite: Suite, p: Value, fb: &Fallback, b: &Budgets) -> Result<Vec<ClaimRecord>, CliError> {
    match suite {
        Suite::Inequalities => {
            let p: IneqParams = params(p)?;
            let mut out = Vec::new();
            for q in p.q.items() {
                for t in p.t.items() {
                    for k in p.k_max.items() {
                        out.push(check_inequalities(q, t, k)?);
                    }
                }
            }
            Ok(out)
        }
        Suite::Branches => {
            let p: BranchParams = if p.as_object().map_or(true, |o| o.is_empty()) { BranchParams::default() } else { params(p)? };
            let ctx = fb.field(p.field)?;
            let mut inst = Vec::new();
            for i in &p.instances {
                inst.push((LinPoly::parse(&ctx, &i.poly)?, i.t));
            }
            if inst.is_empty() {
                let poly = fb.poly.as_ref().ok_or_else(|| CliError::Usage("no instances and no --poly".into()))?;
                inst.push((LinPoly::parse(&ctx, poly)?, fb.index.unwrap_or(0)));
            }
            Ok(verify_branch_lemmas(&inst, b.budget_ext, b.budget_blowups)?)
        }
        Suite::Classify => {
            let p: ClassifyParams = params(p)?;
            let ctx = fb.field(p.field)?;
            let t = p.t.or(fb.index).unwrap_or(0);
            Ok(classify_records(&ctx, t, p.max_km, p.probe_m, p.orbit_reduction)?)
        }
        Suite::Sporadic => {
            let p: SporadicParams = params(p)?;
            let ctx = fb.field(p.field)?;
            let a = match &p.a {
                Some(s) => Some(ctx.coords(ctx.parse_elem(s)?)),
                None => None,
            };
            let bb = ctx.coords(ctx.parse_elem(&p.b)?);
            let rec = sporadic_witness(&ctx, p.case, a, bb, p.r_max, p.budget.unwrap_or(b.budget_census))?;
            Ok(vec![rec])
        }
    }
}

pub fn render(v: &Value, indent: usize) -> String {
    if indent == 0 {
        return serde_json::to_string(v).expect("serializable");
    }
    let pad = vec![b' '; indent];
    let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
    serde::Serialize::serialize(v, &mut ser).expect("serializable");
    String::from_utf8(buf).expect("utf-8")
}
