//! `gorenlab`: command-line front end. Reports go to stdout as JSON, a
//! short human summary goes to stderr.
//!
//! Exit codes: 0 expectations met, 1 mismatch or failed recheck, 2 usage or
//! input error, 3 undecided verdicts under `--strict`.

mod resolve;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use gorenlab::claims::ClaimId;
use gorenlab::corpus::{corpus, find_case};
use gorenlab::engine::{Engine, Requirement, SearchBounds};
use gorenlab::homology::{ext_dimension, relative_pd, DimObstruction, DimVerdict};
use gorenlab::module::{decompose, hom_dim};
use gorenlab::quiver::{parse_presentation, PathAlgebra};
use gorenlab::report::{
    micros, recheck, run_cases, AuditItem, Body, CaseSummary, ClassData, DimRow, Flag, FlagSummary, LoopResult,
    ModuleData, Query, Report, Timing,
};
use gorenlab::verdict::{Outcome, Verdict};

use resolve::{read, Context, Fail};

#[derive(Parser)]
#[command(name = "gorenlab", version, about = "Periodic relative Gorenstein modules over quiver algebras")]
struct Cli {
    /// Exit with status 3 when any verdict is undecided.
    #[arg(long, global = true)]
    strict: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    bounds: BoundArgs,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, global = true, env = "GORENLAB_MAX_STEP_DIM")]
    max_step_dim: Option<usize>,
    #[arg(long, global = true, env = "GORENLAB_HOM_ENUM_CAP")]
    hom_enum_cap: Option<u64>,
    #[arg(long, global = true, env = "GORENLAB_EXT_WINDOW")]
    ext_window: Option<usize>,
    #[arg(long, global = true, env = "GORENLAB_DEPTH")]
    depth: Option<usize>,
}

impl BoundArgs {
    fn bounds(&self) -> SearchBounds {
        let d = SearchBounds::default();
        SearchBounds {
            max_step_dim: self.max_step_dim.unwrap_or(d.max_step_dim),
            hom_enum_cap: self.hom_enum_cap.unwrap_or(d.hom_enum_cap),
            ext_window: self.ext_window.unwrap_or(d.ext_window),
            depth: self.depth.unwrap_or(d.depth),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Algebra presentations.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Module files.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// dim Hom(M, N).
    Hom {
        #[arg(long)]
        algebra: Option<PathBuf>,
        source: PathBuf,
        target: PathBuf,
    },
    /// dim Ext^i(M, N).
    Ext {
        #[arg(short = 'i', default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        algebra: Option<PathBuf>,
        source: PathBuf,
        target: PathBuf,
    },
    /// Search for a loop of class objects at a module.
    Loop {
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Class A of loop terms.
        #[arg(long)]
        class: String,
        /// Class B tested by the requirement (defaults to A).
        #[arg(long)]
        test: Option<String>,
        #[arg(long, default_value_t = 1)]
        length: usize,
        #[arg(long, default_value = "into-acyclic")]
        require: Requirement,
        module: PathBuf,
    },
    /// All projective and injective membership flags at one length.
    Classify {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        class: String,
        #[arg(long)]
        test: Option<String>,
        #[arg(long, default_value_t = 1)]
        length: usize,
        module: PathBuf,
    },
    /// Relative and Gorenstein dimensions.
    Dim {
        #[command(subcommand)]
        cmd: DimCmd,
    },
    /// Check the claims pinned for a corpus case.
    Verify {
        #[arg(long = "case")]
        case: String,
        #[arg(long)]
        claim: Option<ClaimId>,
    },
    /// The built-in corpus.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
    /// Re-verify the certificates in a saved report.
    Recheck { report: PathBuf },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Parse, build the path basis and audit standard invariants.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Dimensions, top, socle, endomorphisms and summands.
    Info {
        #[arg(long)]
        algebra: Option<PathBuf>,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum DimCmd {
    /// pd relative to a class: smallest d with Ext^{>d}(M, B) = 0.
    Relative {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        class: String,
        module: PathBuf,
    },
    /// Gorenstein projective dimension relative to (A, B).
    Gorenstein {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        class: String,
        #[arg(long)]
        test: Option<String>,
        module: PathBuf,
    },
    /// gl.GPD, gl.GID, FGPD and FGID over a corpus case's universe.
    Universe {
        #[arg(long = "case")]
        case: String,
        #[arg(long, default_value = "proj")]
        a: String,
        #[arg(long, default_value = "proj")]
        b: String,
        #[arg(long, default_value = "inj")]
        z: String,
        #[arg(long, default_value = "inj")]
        w: String,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Names and contents of the cases.
    List,
    /// Run every pinned expectation, cases in parallel.
    Run {
        #[arg(long)]
        threads: Option<usize>,
        /// Re-verify all certificates without searching.
        #[arg(long)]
        recheck: bool,
        /// Restrict to one case.
        #[arg(long = "case")]
        case: Option<String>,
    },
}

/// Command result: the report plus the verdict summary driving the exit code.
struct Done {
    report: Report,
    mismatch: bool,
    unknown: bool,
}

impl Done {
    fn ok(report: Report) -> Done {
        Done { report, mismatch: false, unknown: false }
    }
}

fn query(command: &str, args: &[(&str, String)]) -> Query {
    Query { command: command.into(), args: args.iter().map(|(k, v)| (k.to_string(), v.clone())).collect() }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn dim_text(v: &DimVerdict) -> String {
    match v {
        Verdict::Yes(g) => match g.window {
            Some(w) => format!("{} (window {w})", g.value),
            None => g.value.to_string(),
        },
        Verdict::No(DimObstruction::Infinite { period }) => format!("infinite (period {period})"),
        Verdict::No(o) => format!("no ({o:?})"),
        Verdict::Unknown(e) => format!("unknown ({})", e.bound),
    }
}

fn algebra_check(file: &Path, bounds: SearchBounds) -> Result<Done, Fail> {
    let text = read(file)?;
    let alg = PathAlgebra::from_text(&text)?;
    let n = alg.num_vertices();
    let proj: Vec<Vec<usize>> = (0..n).map(|v| alg.projective_dims(v)).collect();
    let inj: Vec<Vec<usize>> = (0..n).map(|v| alg.injective_dims(v)).collect();
    let total = |xs: &[Vec<usize>]| xs.iter().map(|d| d.iter().sum::<usize>()).sum::<usize>();
    let modules: Vec<_> = (0..n).map(|v| gorenlab::module::Module::projective(&alg, v)).collect();
    let pres = parse_presentation(&text)?;
    let mut back = pres.opposite().opposite();
    back.name = pres.name.clone();
    let audit = vec![
        AuditItem { check: "dim equals the sum of dim P(i)".into(), passed: total(&proj) == alg.dimension() },
        AuditItem { check: "dim equals the sum of dim I(i)".into(), passed: total(&inj) == alg.dimension() },
        AuditItem {
            check: "every P(i) satisfies the relations".into(),
            passed: modules.iter().all(|m| m.violated_relation().is_none()),
        },
        AuditItem {
            check: "P(i) at j counts basis paths from i to j".into(),
            passed: (0..n).all(|i| (0..n).all(|j| proj[i][j] == alg.paths_between(i, j).len())),
        },
        AuditItem { check: "opposite is an involution".into(), passed: back == pres },
    ];
    let passed = audit.iter().all(|a| a.passed);
    eprintln!("algebra {} over GF({}): dimension {}", alg.name(), alg.p(), alg.dimension());
    for a in &audit {
        eprintln!("  [{}] {}", if a.passed { "ok" } else { "FAIL" }, a.check);
    }
    let body = Body::AlgebraCheck {
        name: alg.name().to_string(),
        characteristic: alg.p(),
        vertices: n,
        arrows: alg.num_arrows(),
        relations: pres.relations.len(),
        dimension: alg.dimension(),
        projective_dims: proj,
        injective_dims: inj,
        audit,
    };
    let report = Report::new(query("algebra check", &[("file", path_str(file))]), Some(text), bounds, body);
    Ok(Done { report, mismatch: !passed, unknown: false })
}

fn module_info(algebra: Option<&Path>, file: &Path, bounds: SearchBounds) -> Result<Done, Fail> {
    let ctx = Context::for_module(file, algebra)?;
    let (name, m) = ctx.module(file)?;
    let (summands, unknown) = match decompose(&m, bounds.hom_enum_cap) {
        Ok(parts) => (parts.iter().map(|p| p.dims.clone()).collect(), false),
        Err(e) => {
            eprintln!("decomposition undecided: {e}");
            (Vec::new(), true)
        }
    };
    let body = Body::ModuleInfo {
        module: name.clone(),
        dims: m.dims.clone(),
        top: m.top_dims(),
        socle: m.socle_dims(),
        end_dim: hom_dim(&m, &m),
        summands,
    };
    if let Body::ModuleInfo { dims, top, socle, end_dim, summands, .. } = &body {
        eprintln!("{name}: dims {dims:?}, top {top:?}, socle {socle:?}, dim End {end_dim}, summands {summands:?}");
    }
    let report = Report::new(query("module info", &[("file", path_str(file))]), Some(ctx.text), bounds, body);
    Ok(Done { report, mismatch: false, unknown })
}

fn hom_ext(degree: Option<usize>, algebra: Option<&Path>, s: &Path, t: &Path, bounds: SearchBounds) -> Result<Done, Fail> {
    let ctx = Context::for_module(s, algebra)?;
    let (sn, sm) = ctx.module(s)?;
    let (tn, tm) = ctx.module(t)?;
    let (cmd, body) = match degree {
        None => {
            let dim = hom_dim(&sm, &tm);
            eprintln!("dim Hom({sn}, {tn}) = {dim}");
            ("hom", Body::Hom { source: sn, target: tn, dim })
        }
        Some(i) => {
            let dim = ext_dimension(i, &sm, &tm);
            eprintln!("dim Ext^{i}({sn}, {tn}) = {dim}");
            ("ext", Body::Ext { degree: i, source: sn, target: tn, dim })
        }
    };
    let mut args = vec![("source", path_str(s)), ("target", path_str(t))];
    if let Some(i) = degree {
        args.push(("degree", i.to_string()));
    }
    Ok(Done::ok(Report::new(query(cmd, &args), Some(ctx.text), bounds, body)))
}

struct LoopArgs<'a> {
    algebra: Option<&'a Path>,
    class: &'a str,
    test: Option<&'a str>,
    length: usize,
    module: &'a Path,
}

fn loop_cmd(la: LoopArgs, require: Requirement, bounds: SearchBounds) -> Result<Done, Fail> {
    let ctx = Context::for_module(la.module, la.algebra)?;
    let (name, m) = ctx.module(la.module)?;
    let a = ctx.class(la.class, bounds.hom_enum_cap)?;
    let b = ctx.class(la.test.unwrap_or(la.class), bounds.hom_enum_cap)?;
    if la.length == 0 {
        return Err(Fail("--length must be at least 1".into()));
    }
    let t = Instant::now();
    let v = Engine::new(bounds).find_loop(&m, &a, la.length, require, &b);
    let result = LoopResult::of(&v);
    eprintln!("{name} {} loop of length {} in add {}: {}", require.name(), la.length, a.name, result.summary());
    let unknown = result.outcome() == Outcome::Unknown;
    let body = Body::Loop {
        module: name,
        module_data: ModuleData::of(&m),
        a: ClassData::of(&a),
        b: ClassData::of(&b),
        length: la.length,
        requirement: require,
        result,
    };
    let q = query(
        "loop",
        &[
            ("module", path_str(la.module)),
            ("class", la.class.to_string()),
            ("test", la.test.unwrap_or(la.class).to_string()),
            ("length", la.length.to_string()),
            ("require", require.name().to_string()),
        ],
    );
    let mut report = Report::new(q, Some(ctx.text), bounds, body);
    report.timings.push(Timing { label: "search".into(), micros: micros(t) });
    Ok(Done { report, mismatch: false, unknown })
}

fn classify_cmd(la: LoopArgs, bounds: SearchBounds) -> Result<Done, Fail> {
    let ctx = Context::for_module(la.module, la.algebra)?;
    let (name, m) = ctx.module(la.module)?;
    let a = ctx.class(la.class, bounds.hom_enum_cap)?;
    let b = ctx.class(la.test.unwrap_or(la.class), bounds.hom_enum_cap)?;
    if la.length == 0 {
        return Err(Fail("--length must be at least 1".into()));
    }
    let t = Instant::now();
    let r = Engine::new(bounds).classify(&name, &m, &a, &b, la.length);
    let projective: Vec<Flag> =
        r.projective.verdicts.iter().map(|(q, v)| Flag { requirement: *q, result: LoopResult::of(v) }).collect();
    let injective: Vec<FlagSummary> = r
        .injective
        .verdicts
        .iter()
        .map(|(q, v)| FlagSummary { requirement: *q, outcome: v.outcome(), detail: LoopResult::of(v).summary() })
        .collect();
    for f in &projective {
        eprintln!("  projective {:<12} {}", f.requirement.name(), f.result.summary());
    }
    for f in &injective {
        eprintln!("  injective  {:<12} {}", f.requirement.name(), f.detail);
    }
    let unknown = projective.iter().any(|f| f.result.outcome() == Outcome::Unknown)
        || injective.iter().any(|f| f.outcome == Outcome::Unknown);
    let implications_hold = r.implications_hold();
    let body = Body::Classify {
        module: name,
        module_data: ModuleData::of(&m),
        a: ClassData::of(&a),
        b: ClassData::of(&b),
        length: la.length,
        projective,
        injective,
        implications_hold,
    };
    let q = query(
        "classify",
        &[
            ("module", path_str(la.module)),
            ("class", la.class.to_string()),
            ("test", la.test.unwrap_or(la.class).to_string()),
            ("length", la.length.to_string()),
        ],
    );
    let mut report = Report::new(q, Some(ctx.text), bounds, body);
    report.timings.push(Timing { label: "classify".into(), micros: micros(t) });
    Ok(Done { report, mismatch: !implications_hold, unknown })
}

fn dim_cmd(cmd: &DimCmd, bounds: SearchBounds) -> Result<Done, Fail> {
    let cap = bounds.hom_enum_cap;
    match cmd {
        DimCmd::Relative { algebra, class, module } => {
            let ctx = Context::for_module(module, algebra.as_deref())?;
            let (name, m) = ctx.module(module)?;
            let b = ctx.class(class, cap)?;
            let value = relative_pd(&m, &b, bounds.ext_window, cap);
            eprintln!("pd_{}({name}) = {}", b.name, dim_text(&value));
            let unknown = value.is_unknown();
            let body = Body::RelativeDimension { module: name, class: b.name.clone(), side: "pd".into(), value };
            let q = query("dim relative", &[("module", path_str(module)), ("class", class.clone())]);
            Ok(Done { report: Report::new(q, Some(ctx.text), bounds, body), mismatch: false, unknown })
        }
        DimCmd::Gorenstein { algebra, class, test, module } => {
            let ctx = Context::for_module(module, algebra.as_deref())?;
            let (name, m) = ctx.module(module)?;
            let a = ctx.class(class, cap)?;
            let b = ctx.class(test.as_deref().unwrap_or(class), cap)?;
            let universe: Vec<_> = match &ctx.case {
                Some(c) => c.build().map(|bc| bc.universe.into_iter().map(|(_, u)| u).collect()).unwrap_or_default(),
                None => Vec::new(),
            };
            let value = Engine::new(bounds).gorenstein_pd(&m, &a, &b, &universe);
            eprintln!("Gpd_({}, {})({name}) = {}", a.name, b.name, dim_text(&value));
            let unknown = value.is_unknown();
            let body = Body::RelativeDimension { module: name, class: format!("({}, {})", a.name, b.name), side: "gpd".into(), value };
            let q = query("dim gorenstein", &[("module", path_str(module)), ("class", class.clone())]);
            Ok(Done { report: Report::new(q, Some(ctx.text), bounds, body), mismatch: false, unknown })
        }
        DimCmd::Universe { case, a, b, z, w } => {
            let c = find_case(case)?;
            let built = c.build()?;
            let get = |n: &str| built.class(n).ok_or_else(|| Fail(format!("case {case} has no class `{n}`")));
            let (ca, cb, cz, cw) = (get(a)?, get(b)?, get(z)?, get(w)?);
            let t = Instant::now();
            let d = Engine::new(bounds).universe_dims(&built.universe, ca, cb, cz, cw);
            let rows: Vec<DimRow> =
                d.entries.iter().map(|e| DimRow { module: e.module.clone(), gpd: e.gpd.clone(), gid: e.gid.clone() }).collect();
            for r in &rows {
                eprintln!("  {:<6} Gpd {:<16} Gid {}", r.module, dim_text(&r.gpd), dim_text(&r.gid));
            }
            eprintln!("gl.GPD {:?}, gl.GID {:?}, FGPD {:?}, FGID {:?}", d.gl_gpd, d.gl_gid, d.fgpd, d.fgid);
            let unknown = rows.iter().any(|r| r.gpd.is_unknown() || r.gid.is_unknown());
            let body = Body::Dimensions {
                a: a.clone(),
                b: b.clone(),
                z: z.clone(),
                w: w.clone(),
                rows,
                gl_gpd: d.gl_gpd,
                gl_gid: d.gl_gid,
                fgpd: d.fgpd,
                fgid: d.fgid,
            };
            let q = query("dim universe", &[("case", case.clone()), ("a", a.clone()), ("b", b.clone()), ("z", z.clone()), ("w", w.clone())]);
            let mut report = Report::new(q, Some(c.algebra.clone()), bounds, body);
            report.timings.push(Timing { label: "universe".into(), micros: micros(t) });
            Ok(Done { report, mismatch: false, unknown })
        }
    }
}

fn cases_done(command: &str, args: &[(&str, String)], cases: Vec<gorenlab::corpus::CorpusCase>, bounds: SearchBounds) -> Result<Done, Fail> {
    let (reports, mut timings) = run_cases(&cases, bounds)?;
    timings.sort_by(|x, y| x.label.cmp(&y.label));
    let mut mismatch = false;
    let mut unknown = false;
    for c in &reports {
        for r in &c.claims {
            let tag = if r.met { "ok" } else { "MISMATCH" };
            eprintln!(
                "{} {}: {} (expected {}, hypotheses {}) [{tag}]",
                c.case,
                r.expected.claim,
                r.report.agreement,
                r.expected.expected,
                r.report.hypotheses_hold()
            );
        }
        for m in &c.memberships {
            let e = &m.expected;
            let tag = if m.met { "ok" } else { "MISMATCH" };
            eprintln!(
                "{} {} {}@{} in add {}: {} (expected {}) [{tag}]",
                c.case,
                e.module,
                e.requirement.name(),
                e.length,
                e.a,
                m.result.summary(),
                e.expected
            );
        }
        mismatch |= !c.all_met();
        unknown |= c.has_unknown();
    }
    let mut report = Report::new(query(command, args), None, bounds, Body::Cases { cases: reports });
    report.timings = timings;
    Ok(Done { report, mismatch, unknown })
}

fn verify_cmd(case: &str, claim: Option<ClaimId>, bounds: SearchBounds) -> Result<Done, Fail> {
    let mut c = find_case(case)?;
    if let Some(id) = claim {
        c.claims.retain(|e| e.claim == id);
        c.memberships.clear();
        if c.claims.is_empty() {
            let have: Vec<String> = find_case(case)?.claims.iter().map(|e| e.claim.to_string()).collect();
            return Err(Fail(format!("case {case} pins no `{id}` claim (pinned: {})", have.join(", "))));
        }
    }
    let mut args = vec![("case", case.to_string())];
    if let Some(id) = claim {
        args.push(("claim", id.to_string()));
    }
    cases_done("verify", &args, vec![c], bounds)
}

fn corpus_cmd(cmd: &CorpusCmd, bounds: SearchBounds) -> Result<Done, Fail> {
    match cmd {
        CorpusCmd::List => {
            let cases: Vec<CaseSummary> = corpus()
                .iter()
                .map(|c| {
                    eprintln!("{:<14} {}", c.name, c.summary);
                    CaseSummary {
                        name: c.name.to_string(),
                        summary: c.summary.to_string(),
                        modules: c
                            .modules
                            .iter()
                            .filter_map(|t| gorenlab::module::module_header(t).ok().map(|(n, _)| n))
                            .collect(),
                        classes: c.classes.iter().map(|(n, _)| n.clone()).collect(),
                        claims: c.claims.len(),
                        memberships: c.memberships.len(),
                    }
                })
                .collect();
            Ok(Done::ok(Report::new(query("corpus list", &[]), None, bounds, Body::CorpusList { cases })))
        }
        CorpusCmd::Run { threads, recheck: do_recheck, case } => {
            let cases = match case {
                Some(n) => vec![find_case(n)?],
                None => corpus(),
            };
            let mut args = Vec::new();
            if let Some(n) = case {
                args.push(("case", n.clone()));
            }
            let run = || cases_done("corpus run", &args, cases.clone(), bounds);
            let mut done = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new().num_threads(*n).build()?.install(run)?,
                None => run()?,
            };
            if *do_recheck {
                done.mismatch |= !recheck_items(&done.report)?;
            }
            Ok(done)
        }
    }
}

/// Print recheck results; true when all pass.
fn recheck_items(report: &Report) -> Result<bool, Fail> {
    let items = recheck(report)?;
    for i in &items {
        eprintln!("recheck {}: {} ({})", i.label, if i.passed { "ok" } else { "FAILED" }, i.detail);
    }
    eprintln!("recheck: {} of {} certificates verified", items.iter().filter(|i| i.passed).count(), items.len());
    Ok(items.iter().all(|i| i.passed))
}

fn run(cli: &Cli) -> Result<Done, Fail> {
    let bounds = cli.bounds.bounds();
    match &cli.cmd {
        Cmd::Algebra { cmd: AlgebraCmd::Check { file } } => algebra_check(file, bounds),
        Cmd::Module { cmd: ModuleCmd::Info { algebra, file } } => module_info(algebra.as_deref(), file, bounds),
        Cmd::Hom { algebra, source, target } => hom_ext(None, algebra.as_deref(), source, target, bounds),
        Cmd::Ext { degree, algebra, source, target } => hom_ext(Some(*degree), algebra.as_deref(), source, target, bounds),
        Cmd::Loop { algebra, class, test, length, require, module } => loop_cmd(
            LoopArgs { algebra: algebra.as_deref(), class, test: test.as_deref(), length: *length, module },
            *require,
            bounds,
        ),
        Cmd::Classify { algebra, class, test, length, module } => classify_cmd(
            LoopArgs { algebra: algebra.as_deref(), class, test: test.as_deref(), length: *length, module },
            bounds,
        ),
        Cmd::Dim { cmd } => dim_cmd(cmd, bounds),
        Cmd::Verify { case, claim } => verify_cmd(case, *claim, bounds),
        Cmd::Corpus { cmd } => corpus_cmd(cmd, bounds),
        Cmd::Recheck { report } => {
            let r = Report::from_json(&read(report)?)?;
            let ok = recheck_items(&r)?;
            Ok(Done { report: r, mismatch: !ok, unknown: false })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let done = match run(&cli) {
        Ok(d) => d,
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    // a recheck echoes nothing: the report already exists on disk
    if !matches!(cli.cmd, Cmd::Recheck { .. }) {
        let json = done.report.to_json();
        match &cli.out {
            Some(p) => {
                if let Err(e) = std::fs::write(p, json + "\n") {
                    eprintln!("error: {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            }
            None => println!("{json}"),
        }
    }
    if done.mismatch {
        ExitCode::from(1)
    } else if cli.strict && done.unknown {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
