use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use tubealg::algebra::{
    associativity_check, gram_identity_check, star_checks, star_iso_check, structure_constants, trace_symmetry_check,
    unit_check,
};
use tubealg::annular_bh::{bh_verify_star_iso, box_checks, tube_cutdown};
use tubealg::coho::{gauge_fix_bh, gl_relations_check, omega_hk1_check};
use tubealg::io::{BHFile, CocycleFile, GroupFile, RepFile};
use tubealg::phase::{coboundary2, cocycle3_check, is_normalized, normalize3_with_gauge};
use tubealg::rep::{decompose, decompose_regular, induce, representation_check, support_check, support_decompose};
use tubealg::{
    AnnularAlgebra, BHSetup, BlockIso, Cochain2, Cocycle3, Coverage, Error, Failure, GroupTable, Pointed, StarAlgebra,
    TubeAlgebra, TwistedGroupAlgebra, VerifyConfig,
};

mod report;

use report::RunReport;

/// Tolerance for numerical representation checks.
const REP_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "tubealg", version, about = "Build and verify tube and annular algebras of pointed categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    #[arg(long, global = true)]
    group: Option<PathBuf>,
    #[arg(long, global = true)]
    cocycle: Option<PathBuf>,
    #[arg(long, global = true)]
    bh: Option<PathBuf>,
    #[arg(long, global = true)]
    rep: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Conjugacy class index, for `rep induce`.
    #[arg(long, global = true)]
    class: Option<usize>,
    /// Largest group order handled exhaustively.
    #[arg(long, global = true, env = "TUBEALG_MAX_EXHAUSTIVE", default_value_t = 24)]
    max_exhaustive: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check the group axioms of a multiplication table or permutation set.
    VerifyGroup,
    /// Check the 3-cocycle identity.
    VerifyCocycle,
    /// Replace a 3-cocycle by a normalized cohomologous one.
    Normalize,
    /// Gauge-fix the cocycle of a Bisch–Haagerup setup.
    GaugeFix,
    #[command(subcommand)]
    Tube(Algebra),
    #[command(subcommand)]
    Bh(Algebra),
    #[command(subcommand)]
    Rep(RepCommand),
}

#[derive(Subcommand, Clone, Copy)]
enum Algebra {
    /// Dump structure constants.
    Build,
    /// Verify the algebra laws and the block isomorphism.
    Check,
    /// Count irreducible representations.
    Simples,
}

#[derive(Subcommand, Clone, Copy)]
enum RepCommand {
    /// Induce a representation of a twisted centralizer algebra.
    Induce,
    /// Decompose a representation, or the regular one without `--rep`.
    Decompose,
}

/// Failures that end the run early.
enum Stop {
    Input(String),
    Verification,
}

impl From<Error> for Stop {
    fn from(e: Error) -> Stop {
        Stop::Input(e.to_string())
    }
}

type Run<T> = Result<T, Stop>;

/// Records a library error: witness-carrying failures count as
/// verification failures, everything else as bad input.
fn absorb<T>(report: &mut RunReport, name: &str, r: tubealg::Result<T>) -> Run<T> {
    match r {
        Ok(v) => Ok(v),
        Err(e) => match e.failure() {
            Some(f) => {
                report.check(name, Err(f.clone()));
                Err(Stop::Verification)
            }
            None if matches!(e, Error::Numerical(_)) => {
                report.check(name, Err(Failure::new("numerical", vec![], e.to_string())));
                Err(Stop::Verification)
            }
            None => Err(e.into()),
        },
    }
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> Run<&'a Path> {
    p.as_deref().ok_or_else(|| Stop::Input(format!("--{flag} is required")))
}

fn parse<T: for<'de> serde::Deserialize<'de>>(report: &mut RunReport, flag: &str, path: &Path) -> Run<T> {
    let bytes = report.read(flag, path)?;
    serde_json::from_slice(&bytes).map_err(|e| Stop::Input(format!("{}: {e}", path.display())))
}

fn load_group(report: &mut RunReport, opts: &Opts) -> Run<GroupTable> {
    let file: GroupFile = parse(report, "group", need(&opts.group, "group")?)?;
    absorb(report, "group_axioms", file.build())
}

fn load_cocycle(report: &mut RunReport, opts: &Opts, g: &GroupTable) -> Run<Cocycle3> {
    let file: CocycleFile = parse(report, "cocycle", need(&opts.cocycle, "cocycle")?)?;
    Ok(file.build(g.order())?)
}

fn load_pointed(report: &mut RunReport, opts: &Opts) -> Run<Pointed> {
    let g = load_group(report, opts)?;
    let w = load_cocycle(report, opts, &g)?;
    absorb(report, "pointed", Pointed::new(g, w, opts.max_exhaustive))
}

fn load_bh(report: &mut RunReport, opts: &Opts) -> Run<BHSetup> {
    let path = need(&opts.bh, "bh")?;
    let file: BHFile = parse(report, "bh", path)?;
    let setup = absorb(report, "setup", file.build(path.parent()))?;
    if setup.group.order() > opts.max_exhaustive {
        return Err(Error::TooLarge { order: setup.group.order(), limit: opts.max_exhaustive }.into());
    }
    Ok(setup)
}

fn config(opts: &Opts) -> VerifyConfig {
    VerifyConfig { max_exhaustive: opts.max_exhaustive, ..VerifyConfig::with_seed(opts.seed) }
}

fn cochain_entries(c: &Cochain2) -> Value {
    let mut out = vec![];
    for &g in c.elements() {
        for &h in c.elements() {
            let p = c.get(g, h);
            if !p.is_one() {
                out.push(json!([g, h, p]));
            }
        }
    }
    Value::Array(out)
}

fn verify_group(report: &mut RunReport, opts: &Opts) -> Run<Value> {
    let g = load_group(report, opts)?;
    report.check("group_axioms", Ok(()));
    let cd = tubealg::grp::conjugacy_data(&g);
    let classes: Vec<Value> = (0..cd.len())
        .map(|c| json!({"rep": cd.rep[c], "size": cd.classes[c].len(), "centralizer_order": cd.centralizers[c].len()}))
        .collect();
    Ok(json!({"order": g.order(), "classes": classes}))
}

fn verify_cocycle(report: &mut RunReport, opts: &Opts) -> Run<Value> {
    let g = load_group(report, opts)?;
    let w = load_cocycle(report, opts, &g)?;
    report.check("cocycle", cocycle3_check(&g, &w));
    Ok(json!({"normalized": is_normalized(&w)}))
}

fn normalize(report: &mut RunReport, opts: &Opts) -> Run<Value> {
    let g = load_group(report, opts)?;
    let w = load_cocycle(report, opts, &g)?;
    let (n, gauge) = absorb(report, "cocycle", normalize3_with_gauge(&g, &w))?;
    report.check("cocycle", Ok(()));
    Ok(json!({"cocycle": CocycleFile::from_cocycle(&n), "gauge": cochain_entries(&gauge)}))
}

fn gauge_fix(report: &mut RunReport, opts: &Opts) -> Run<Value> {
    let s = load_bh(report, opts)?;
    let fix = absorb(report, "gauge_fix", gauge_fix_bh(&s))?;
    report.check("gl_relations", gl_relations_check(&s.group, &s.h, &s.k, &fix.omega));
    report.check("cocycle", cocycle3_check(&s.group, &fix.omega));
    let normalized = if is_normalized(&fix.omega) { Ok(()) } else { Err(Failure::new("normalized", vec![], "")) };
    report.check("normalized", normalized);
    report.check("omega_hk1", omega_hk1_check(&s.h, &s.k, &fix.omega));
    let relation = fix.omega.times(&s.omega.conj()) == coboundary2(&s.group, &fix.phi);
    report.check("coboundary", if relation { Ok(()) } else { Err(Failure::new("coboundary", vec![], "")) });
    Ok(json!({
        "cocycle": CocycleFile::from_cocycle(&fix.omega),
        "phi": cochain_entries(&fix.phi),
        "a_reps": fix.a_reps,
        "v_reps": fix.v_reps,
    }))
}

fn algebra_checks<A: BlockIso>(report: &mut RunReport, alg: &A, order: usize, cfg: &VerifyConfig) {
    let cov = if order <= cfg.max_exhaustive { Coverage::Exhaustive } else { Coverage::Sampled(cfg.triple_samples) };
    report.check("associativity", associativity_check(alg, cov, cfg));
    report.check("star", star_checks(alg));
    report.check("trace_symmetry", trace_symmetry_check(alg));
    report.check("gram_identity", gram_identity_check(alg));
    report.check("unit", unit_check(alg));
    report.check("star_iso", star_iso_check(alg));
}

fn regular_count<A: StarAlgebra>(report: &mut RunReport, alg: &A, seed: u64, exact: usize) -> Run<Value> {
    let d = absorb(report, "decomposition", decompose_regular(alg, seed))?;
    let found = d.irreps.len();
    let agree = if found == exact { Ok(()) } else { Err(Failure::new("count_agreement", vec![exact, found], "")) };
    report.check("count_agreement", agree);
    let dims: Vec<usize> = d.irreps.iter().map(|r| r.dimension).collect();
    Ok(json!({"regular_count": found, "irrep_dimensions": dims, "attempts": d.attempts}))
}

fn tube(report: &mut RunReport, opts: &Opts, cmd: Algebra) -> Run<Value> {
    let p = load_pointed(report, opts)?;
    let cfg = config(opts);
    let t = absorb(report, "tube", TubeAlgebra::new(p))?;
    match cmd {
        Algebra::Build => Ok(json!({"dimension": t.dimension(), "structure_constants": structure_constants(&t)})),
        Algebra::Check => {
            let order = t.data().order();
            report.check("phi_cocycles", t.data().phi_cocycle_check());
            report.check("gamma_identity", t.data().gamma_identity_check(&cfg));
            algebra_checks(report, &t, order, &cfg);
            Ok(json!({"dimension": t.dimension()}))
        }
        Algebra::Simples => {
            let count = t.simple_count();
            let regular = regular_count(report, &t, opts.seed, count.total)?;
            Ok(json!({"per_class": count.per_class, "total": count.total, "regular": regular}))
        }
    }
}

fn bh(report: &mut RunReport, opts: &Opts, cmd: Algebra) -> Run<Value> {
    let s = load_bh(report, opts)?;
    let cfg = config(opts);
    let a = absorb(report, "annular", AnnularAlgebra::new(s.clone()))?;
    match cmd {
        Algebra::Build => Ok(json!({"dimension": a.dimension(), "structure_constants": structure_constants(&a)})),
        Algebra::Check => {
            let conventions = absorb(report, "conventions", bh_verify_star_iso(&s))?;
            algebra_checks(report, &a, s.group.order(), &cfg);
            let fixed = absorb(report, "gauge_fix", gauge_fix_bh(&s))?;
            let fixed = absorb(report, "gauge_fix", s.with_omega(fixed.omega))?;
            report.check("box_calculus", box_checks(&fixed));
            Ok(json!({"dimension": a.dimension(), "conventions": conventions}))
        }
        Algebra::Simples => {
            let count = a.simple_count();
            let cut = absorb(report, "cutdown", tube_cutdown(&s, opts.seed))?;
            let agree = if cut.simple_count == count.total {
                Ok(())
            } else {
                Err(Failure::new("cutdown_count", vec![count.total, cut.simple_count], ""))
            };
            report.check("cutdown_count", agree);
            let regular = regular_count(report, &a, opts.seed, count.total)?;
            Ok(json!({
                "per_class": count.per_class,
                "total": count.total,
                "regular": regular,
                "cutdown": {
                    "double_cosets": cut.double_cosets,
                    "projections": cut.projections,
                    "blocks": cut.blocks,
                    "dimension": cut.dimension,
                    "simple_count": cut.simple_count,
                },
            }))
        }
    }
}

fn rep_on<A: BlockIso>(report: &mut RunReport, opts: &Opts, alg: &A, cmd: RepCommand) -> Run<Value> {
    match cmd {
        RepCommand::Induce => {
            let class = opts.class.ok_or_else(|| Stop::Input("--class is required".into()))?;
            let blocks = alg.blocks();
            let bc = blocks.classes.get(class).ok_or_else(|| Stop::Input(format!("class {class} out of range")))?;
            let tga = TwistedGroupAlgebra::new_unchecked(&blocks.group, &bc.centralizer, bc.twist.clone());
            let file: RepFile = parse(report, "rep", need(&opts.rep, "rep")?)?;
            let pi = file.build(&tga)?;
            report.check("input_representation", representation_check(&tga, &pi, REP_TOL));
            let big = induce(alg, class, &pi)?;
            report.check("induced_representation", representation_check(alg, &big, REP_TOL));
            Ok(serde_json::to_value(RepFile::from_rep(alg, &big)).expect("serializable"))
        }
        RepCommand::Decompose => {
            let d = match &opts.rep {
                Some(path) => {
                    let file: RepFile = parse(report, "rep", path)?;
                    let rep = file.build(alg)?;
                    report.check("representation", representation_check(alg, &rep, REP_TOL));
                    let supports = support_decompose(alg, &rep);
                    report.check("supports", support_check(&rep, &supports));
                    let dims: Vec<usize> = supports.iter().map(|s| s.dimension).collect();
                    let d = absorb(report, "decomposition", decompose(&rep, opts.seed))?;
                    (d, Some(dims))
                }
                None => (absorb(report, "decomposition", decompose_regular(alg, opts.seed))?, None),
            };
            let (d, supports) = d;
            let irreps: Vec<Value> =
                d.irreps.iter().map(|r| json!({"dimension": r.dimension, "multiplicity": r.multiplicity})).collect();
            Ok(json!({
                "irreps": irreps,
                "null_dimension": d.null_dimension,
                "support_dimensions": supports,
                "attempts": d.attempts,
            }))
        }
    }
}

fn rep(report: &mut RunReport, opts: &Opts, cmd: RepCommand) -> Run<Value> {
    if opts.bh.is_some() {
        let s = load_bh(report, opts)?;
        let a = absorb(report, "annular", AnnularAlgebra::new(s))?;
        rep_on(report, opts, &a, cmd)
    } else {
        let p = load_pointed(report, opts)?;
        let t = absorb(report, "tube", TubeAlgebra::new(p))?;
        rep_on(report, opts, &t, cmd)
    }
}

fn dispatch(report: &mut RunReport, cli: &Cli) -> Run<Value> {
    let o = &cli.opts;
    match cli.command {
        Command::VerifyGroup => verify_group(report, o),
        Command::VerifyCocycle => verify_cocycle(report, o),
        Command::Normalize => normalize(report, o),
        Command::GaugeFix => gauge_fix(report, o),
        Command::Tube(c) => tube(report, o, c),
        Command::Bh(c) => bh(report, o, c),
        Command::Rep(c) => rep(report, o, c),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(std::env::args().skip(1).collect(), cli.opts.seed, cli.opts.max_exhaustive);
    let outcome = dispatch(&mut report, &cli);
    let code = match outcome {
        Ok(v) => {
            report.result = Some(v);
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(Stop::Verification) => 1,
        Err(Stop::Input(msg)) => {
            log::error!("{msg}");
            report.error = Some(msg);
            2
        }
    };
    report.elapsed_ms = start.elapsed().as_millis();
    let text = serde_json::to_string_pretty(&report).expect("serializable");
    // A closed pipe on stdout is not worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code)
}
