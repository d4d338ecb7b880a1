//! Machine-readable reports (JSON, schema `gorenlab-report/1`), corpus
//! runs, and re-verification of embedded certificates.
//!
//! Certificates carry every module and map as full matrices, so a report can
//! be re-checked against nothing but the algebra text it embeds.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::claims::{Agreement, ClaimReport, Verifier};
use crate::class::ClassSpec;
use crate::corpus::{CorpusCase, CorpusError, ExpectedClaim, ExpectedMembership};
use crate::engine::{Engine, LoopObstruction, LoopVerdict, Requirement, SearchBounds, Sup};
use crate::homology::{ext_vanishes, DimVerdict, LoopComplex, LoopStep};
use crate::linalg::Matrix;
use crate::module::{Module, ModuleError, ModuleMap};
use crate::quiver::{PathAlgebra, QuiverError};
use crate::verdict::{Exhausted, Outcome, Truth, Verdict};

pub const SCHEMA: &str = "gorenlab-report/1";

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("algebra: {0}")]
    Algebra(#[from] QuiverError),
    #[error("module: {0}")]
    Module(#[from] ModuleError),
    #[error("corpus: {0}")]
    Corpus(#[from] CorpusError),
    #[error("certificate: {0}")]
    Certificate(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleData {
    pub dims: Vec<usize>,
    pub action: Vec<Matrix>,
}

impl ModuleData {
    pub fn of(m: &Module) -> ModuleData {
        ModuleData { dims: m.dims.clone(), action: m.action.clone() }
    }

    pub fn to_module(&self, alg: &Arc<PathAlgebra>) -> Result<Module, ModuleError> {
        Module::new(alg.clone(), self.dims.clone(), self.action.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub name: String,
    pub generators: Vec<ModuleData>,
}

impl ClassData {
    pub fn of(c: &ClassSpec) -> ClassData {
        ClassData { name: c.name.clone(), generators: c.generators.iter().map(ModuleData::of).collect() }
    }

    pub fn to_class(&self, alg: &Arc<PathAlgebra>, cap: u64) -> Result<ClassSpec, ModuleError> {
        let gens = self.generators.iter().map(|g| g.to_module(alg)).collect::<Result<Vec<_>, _>>()?;
        ClassSpec::new(&self.name, alg, gens, cap)
    }
}

/// A loop `W_0 -> B_1 -> W_1 -> ... -> B_m -> W_m ≅ W_0` in full.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopCertificate {
    pub length: usize,
    /// `W_0, ..., W_m`.
    pub cycles: Vec<ModuleData>,
    /// `B_1, ..., B_m`.
    pub middles: Vec<ModuleData>,
    /// Vertex blocks of `W_{j-1} -> B_j`.
    pub monos: Vec<Vec<Matrix>>,
    /// Vertex blocks of `B_j -> W_j`.
    pub epis: Vec<Vec<Matrix>>,
    /// Vertex blocks of the isomorphism `W_m -> W_0`.
    pub closing: Vec<Matrix>,
}

impl LoopCertificate {
    pub fn of(lp: &LoopComplex) -> LoopCertificate {
        let mut cycles: Vec<ModuleData> = lp.steps.iter().map(|s| ModuleData::of(s.left())).collect();
        cycles.push(ModuleData::of(&lp.closing.source));
        LoopCertificate {
            length: lp.length(),
            cycles,
            middles: lp.steps.iter().map(|s| ModuleData::of(s.middle())).collect(),
            monos: lp.steps.iter().map(|s| s.mono.blocks.clone()).collect(),
            epis: lp.steps.iter().map(|s| s.epi.blocks.clone()).collect(),
            closing: lp.closing.blocks.clone(),
        }
    }

    /// Rebuild the loop; every map is validated as a module homomorphism.
    pub fn to_loop(&self, alg: &Arc<PathAlgebra>) -> Result<LoopComplex, ReportError> {
        let m = self.length;
        if m == 0
            || self.cycles.len() != m + 1
            || self.middles.len() != m
            || self.monos.len() != m
            || self.epis.len() != m
        {
            return Err(ReportError::Certificate(format!("inconsistent sizes for a loop of length {m}")));
        }
        let cycles = self.cycles.iter().map(|c| c.to_module(alg)).collect::<Result<Vec<_>, _>>()?;
        let middles = self.middles.iter().map(|c| c.to_module(alg)).collect::<Result<Vec<_>, _>>()?;
        let mut steps = Vec::with_capacity(m);
        for j in 0..m {
            let mono = ModuleMap::new(cycles[j].clone(), middles[j].clone(), self.monos[j].clone())?;
            let epi = ModuleMap::new(middles[j].clone(), cycles[j + 1].clone(), self.epis[j].clone())?;
            steps.push(LoopStep { mono, epi });
        }
        let closing = ModuleMap::new(cycles[m].clone(), cycles[0].clone(), self.closing.clone())?;
        Ok(LoopComplex { base: cycles[0].clone(), steps, closing })
    }
}

/// A loop verdict with its payload in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum LoopResult {
    Yes { certificate: LoopCertificate },
    No { obstruction: LoopObstruction },
    Unknown { exhausted: Exhausted },
}

impl LoopResult {
    pub fn of(v: &LoopVerdict) -> LoopResult {
        match v {
            Verdict::Yes(lp) => LoopResult::Yes { certificate: LoopCertificate::of(lp) },
            Verdict::No(o) => LoopResult::No { obstruction: o.clone() },
            Verdict::Unknown(e) => LoopResult::Unknown { exhausted: e.clone() },
        }
    }

    pub fn outcome(&self) -> Outcome {
        match self {
            LoopResult::Yes { .. } => Outcome::Yes,
            LoopResult::No { .. } => Outcome::No,
            LoopResult::Unknown { .. } => Outcome::Unknown,
        }
    }

    /// Short human-readable description.
    pub fn summary(&self) -> String {
        match self {
            LoopResult::Yes { certificate } => {
                let dims: Vec<String> = certificate.middles.iter().map(|m| format!("{:?}", m.dims)).collect();
                format!("yes: loop through {}", dims.join(" -> "))
            }
            LoopResult::No { obstruction } => format!("no ({})", obstruction.tag()),
            LoopResult::Unknown { exhausted } => format!("unknown ({}: {})", exhausted.bound, exhausted.detail),
        }
    }
}

/// One pinned loop search: the query, the result and whether it matched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipResult {
    pub expected: ExpectedMembership,
    pub module: ModuleData,
    pub result: LoopResult,
    pub met: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub expected: ExpectedClaim,
    pub report: ClaimReport,
    pub met: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub summary: String,
    /// Presentation text; certificates are rebuilt over it.
    pub algebra: String,
    pub classes: Vec<ClassData>,
    pub claims: Vec<ClaimResult>,
    pub memberships: Vec<MembershipResult>,
}

impl CaseReport {
    pub fn all_met(&self) -> bool {
        self.claims.iter().all(|c| c.met) && self.memberships.iter().all(|m| m.met)
    }

    pub fn has_unknown(&self) -> bool {
        self.claims.iter().any(|c| c.report.agreement == Agreement::Undecided)
            || self.memberships.iter().any(|m| m.result.outcome() == Outcome::Unknown)
    }
}

/// Projective-side flag of a classification; injective flags live over the
/// opposite algebra and are reported without certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub requirement: Requirement,
    pub result: LoopResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagSummary {
    pub requirement: Requirement,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub module: String,
    pub gpd: DimVerdict,
    pub gid: DimVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub name: String,
    pub summary: String,
    pub modules: Vec<String>,
    pub classes: Vec<String>,
    pub claims: usize,
    pub memberships: usize,
}

/// Command-specific payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Body {
    AlgebraCheck {
        name: String,
        characteristic: u32,
        vertices: usize,
        arrows: usize,
        relations: usize,
        dimension: usize,
        projective_dims: Vec<Vec<usize>>,
        injective_dims: Vec<Vec<usize>>,
        audit: Vec<AuditItem>,
    },
    ModuleInfo {
        module: String,
        dims: Vec<usize>,
        top: Vec<usize>,
        socle: Vec<usize>,
        end_dim: usize,
        summands: Vec<Vec<usize>>,
    },
    Hom {
        source: String,
        target: String,
        dim: usize,
    },
    Ext {
        degree: usize,
        source: String,
        target: String,
        dim: usize,
    },
    Loop {
        module: String,
        module_data: ModuleData,
        a: ClassData,
        b: ClassData,
        length: usize,
        requirement: Requirement,
        result: LoopResult,
    },
    Classify {
        module: String,
        module_data: ModuleData,
        a: ClassData,
        b: ClassData,
        length: usize,
        projective: Vec<Flag>,
        injective: Vec<FlagSummary>,
        implications_hold: bool,
    },
    Dimensions {
        a: String,
        b: String,
        z: String,
        w: String,
        rows: Vec<DimRow>,
        gl_gpd: Sup,
        gl_gid: Sup,
        fgpd: Sup,
        fgid: Sup,
    },
    RelativeDimension {
        module: String,
        class: String,
        side: String,
        value: DimVerdict,
    },
    CorpusList {
        cases: Vec<CaseSummary>,
    },
    Cases {
        cases: Vec<CaseReport>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditItem {
    pub check: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    pub args: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub label: String,
    pub micros: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: Tool,
    pub query: Query,
    /// Algebra text for single-algebra commands; corpus cases carry their own.
    pub algebra: Option<String>,
    pub bounds: SearchBounds,
    pub body: Body,
    pub timings: Vec<Timing>,
}

impl Report {
    pub fn new(query: Query, algebra: Option<String>, bounds: SearchBounds, body: Body) -> Report {
        Report {
            schema: SCHEMA.to_string(),
            tool: Tool { name: "gorenlab".into(), version: env!("CARGO_PKG_VERSION").into() },
            query,
            algebra,
            bounds,
            body,
            timings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// The report with timings removed: identical across runs and thread
    /// counts.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timings.clear();
        r.to_json()
    }
}

/// Microseconds elapsed since `t`.
pub fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

// ---------------------------------------------------------------------------
// Corpus runs

enum Item<'c> {
    Claim(&'c ExpectedClaim),
    Member(&'c ExpectedMembership),
}

enum Finished {
    Claim(ClaimResult),
    Member(MembershipResult),
}

fn run_item(built: &crate::corpus::BuiltCase, item: &Item, bounds: SearchBounds) -> Result<Finished, ReportError> {
    // a fresh engine per item keeps results independent of scheduling
    let engine = Engine::new(bounds);
    match item {
        Item::Claim(ec) => {
            let ctx = built.context(&ec.params);
            let report = Verifier::new(&engine, &ctx)
                .verify(ec.claim)
                .map_err(|e| ReportError::Certificate(format!("{}: {e}", ec.claim)))?;
            let met = report.agreement == ec.expected;
            Ok(Finished::Claim(ClaimResult { expected: (*ec).clone(), report, met }))
        }
        Item::Member(em) => {
            let missing = |what: &str| ReportError::Certificate(format!("unknown {what}"));
            let m = built.module(&em.module).ok_or_else(|| missing(&format!("module `{}`", em.module)))?;
            let a = built.class(&em.a).ok_or_else(|| missing(&format!("class `{}`", em.a)))?;
            let b = built.class(&em.b).ok_or_else(|| missing(&format!("class `{}`", em.b)))?;
            let v = engine.find_loop(m, a, em.length, em.requirement, b);
            let result = LoopResult::of(&v);
            let met = result.outcome() == em.expected;
            Ok(Finished::Member(MembershipResult { expected: (*em).clone(), module: ModuleData::of(m), result, met }))
        }
    }
}

/// Run every expectation of the given cases. Work is spread over the current
/// rayon pool; output order is by case name, then declaration order.
pub fn run_cases(cases: &[CorpusCase], bounds: SearchBounds) -> Result<(Vec<CaseReport>, Vec<Timing>), ReportError> {
    let mut cases: Vec<&CorpusCase> = cases.iter().collect();
    cases.sort_by_key(|c| c.name);
    let built: Vec<crate::corpus::BuiltCase> = cases.iter().map(|c| c.build()).collect::<Result<_, _>>()?;
    let mut jobs: Vec<(usize, String, Item)> = Vec::new();
    for (ci, c) in cases.iter().enumerate() {
        for (k, ec) in c.claims.iter().enumerate() {
            jobs.push((ci, format!("{}/claim{}:{}", c.name, k, ec.claim), Item::Claim(ec)));
        }
        for (k, em) in c.memberships.iter().enumerate() {
            jobs.push((ci, format!("{}/loop{}:{}", c.name, k, em.module), Item::Member(em)));
        }
    }
    let results: Vec<Result<(usize, Finished, Timing), ReportError>> = jobs
        .par_iter()
        .map(|(ci, label, item)| {
            let t = Instant::now();
            let out = run_item(&built[*ci], item, bounds)?;
            Ok((*ci, out, Timing { label: label.clone(), micros: micros(t) }))
        })
        .collect();
    let mut reports: Vec<CaseReport> = cases
        .iter()
        .zip(&built)
        .map(|(c, b)| CaseReport {
            case: c.name.to_string(),
            summary: c.summary.to_string(),
            algebra: c.algebra.clone(),
            classes: b.classes.iter().map(ClassData::of).collect(),
            claims: Vec::new(),
            memberships: Vec::new(),
        })
        .collect();
    let mut timings = Vec::new();
    for r in results {
        let (ci, out, t) = r?;
        match out {
            Finished::Claim(c) => reports[ci].claims.push(c),
            Finished::Member(m) => reports[ci].memberships.push(m),
        }
        timings.push(t);
    }
    Ok((reports, timings))
}

// ---------------------------------------------------------------------------
// Re-verification

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecheckItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Re-verify a loop certificate for `module` with classes `a`, `b` under
/// `req`, using exactness, isomorphism, Hom-dimension counts and Ext
/// vanishing only.
pub fn recheck_loop(
    alg: &Arc<PathAlgebra>,
    cert: &LoopCertificate,
    module: Option<&ModuleData>,
    a: &ClassData,
    b: &ClassData,
    req: Requirement,
    bounds: &SearchBounds,
) -> Result<String, String> {
    let cap = bounds.hom_enum_cap;
    let lp = cert.to_loop(alg).map_err(|e| e.to_string())?;
    let check = lp.check();
    if !check.ok() {
        return Err(format!("loop is not exact and closed: {check:?}"));
    }
    if let Some(md) = module {
        let m = md.to_module(alg).map_err(|e| e.to_string())?;
        if m != lp.base {
            return Err("loop base differs from the queried module".into());
        }
    }
    let a = a.to_class(alg, cap).map_err(|e| e.to_string())?;
    let b = b.to_class(alg, cap).map_err(|e| e.to_string())?;
    for (j, mid) in lp.middles().into_iter().enumerate() {
        if !a.contains(mid, cap).is_yes() {
            return Err(format!("middle term {} is not in add {}", j + 1, a.name));
        }
    }
    let mut notes = Vec::new();
    if req != Requirement::None && !lp.into_acyclic(&b) {
        return Err("not Hom(-,B)-acyclic".into());
    }
    if matches!(req, Requirement::Proper | Requirement::ProperWeak) && !lp.from_acyclic(&a) {
        return Err("not Hom(A,-)-acyclic".into());
    }
    if matches!(req, Requirement::CyclesPerp | Requirement::ProperWeak) {
        let mut t = Truth::True;
        for w in lp.cycles() {
            for g in &b.indecomposables {
                t = t.and(ext_vanishes(w, &g.module, bounds.ext_window, cap));
            }
            if req == Requirement::ProperWeak {
                for g in &a.indecomposables {
                    t = t.and(ext_vanishes(&g.module, w, bounds.ext_window, cap));
                }
            }
        }
        match t {
            Truth::False => return Err("a cycle has nonvanishing Ext against the classes".into()),
            Truth::WindowTrue { window } => notes.push(format!("orthogonality checked up to degree {window}")),
            Truth::True => {}
        }
    }
    notes.insert(0, format!("length {} loop verified", lp.length()));
    Ok(notes.join("; "))
}

/// Re-verify a `no-embedding` obstruction: the minimal left approximation
/// of the module is not injective.
fn recheck_no_embedding(alg: &Arc<PathAlgebra>, module: &ModuleData, a: &ClassData, cap: u64) -> Result<String, String> {
    let m = module.to_module(alg).map_err(|e| e.to_string())?;
    let a = a.to_class(alg, cap).map_err(|e| e.to_string())?;
    let approx = a.left_approximation(&m);
    if approx.map.is_injective() {
        Err("the module embeds in add A".into())
    } else {
        Ok(format!("left approximation has kernel of dimension {}", m.total_dim() - approx.map.rank()))
    }
}

fn recheck_result(
    alg: &Arc<PathAlgebra>,
    result: &LoopResult,
    module: &ModuleData,
    a: &ClassData,
    b: &ClassData,
    req: Requirement,
    bounds: &SearchBounds,
) -> Option<Result<String, String>> {
    match result {
        LoopResult::Yes { certificate } => Some(recheck_loop(alg, certificate, Some(module), a, b, req, bounds)),
        LoopResult::No { obstruction: LoopObstruction::NoEmbedding { .. } } => {
            Some(recheck_no_embedding(alg, module, a, bounds.hom_enum_cap))
        }
        _ => None,
    }
}

fn push(items: &mut Vec<RecheckItem>, label: String, r: Result<String, String>) {
    match r {
        Ok(detail) => items.push(RecheckItem { label, passed: true, detail }),
        Err(detail) => items.push(RecheckItem { label, passed: false, detail }),
    }
}

/// Re-verify every certificate embedded in a report.
pub fn recheck(report: &Report) -> Result<Vec<RecheckItem>, ReportError> {
    let bounds = &report.bounds;
    let mut items = Vec::new();
    match &report.body {
        Body::Cases { cases } => {
            for c in cases {
                let alg = PathAlgebra::from_text(&c.algebra)?;
                let class = |name: &str| {
                    c.classes
                        .iter()
                        .find(|k| k.name == name)
                        .ok_or_else(|| ReportError::Certificate(format!("case {} lacks class `{name}`", c.case)))
                };
                for (k, m) in c.memberships.iter().enumerate() {
                    let e = &m.expected;
                    let (a, b) = (class(&e.a)?, class(&e.b)?);
                    if let Some(r) = recheck_result(&alg, &m.result, &m.module, a, b, e.requirement, bounds) {
                        let label = format!("{}/loop{}:{} {} {}@{}", c.case, k, e.module, e.requirement.name(), e.a, e.length);
                        push(&mut items, label, r);
                    }
                }
            }
        }
        Body::Loop { module, module_data, a, b, length, requirement, result } => {
            let text = report.algebra.as_ref().ok_or_else(|| ReportError::Certificate("report lacks algebra".into()))?;
            let alg = PathAlgebra::from_text(text)?;
            if let Some(r) = recheck_result(&alg, result, module_data, a, b, *requirement, bounds) {
                push(&mut items, format!("{module} {} {}@{length}", requirement.name(), a.name), r);
            }
        }
        Body::Classify { module, module_data, a, b, length, projective, .. } => {
            let text = report.algebra.as_ref().ok_or_else(|| ReportError::Certificate("report lacks algebra".into()))?;
            let alg = PathAlgebra::from_text(text)?;
            for f in projective {
                if let Some(r) = recheck_result(&alg, &f.result, module_data, a, b, f.requirement, bounds) {
                    push(&mut items, format!("{module} {} {}@{length}", f.requirement.name(), a.name), r);
                }
            }
        }
        _ => {}
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::find_case;

    #[test]
    fn certificates_round_trip_and_recheck() {
        let case = find_case("paper-ex-3.4").unwrap();
        let (cases, timings) = run_cases(&[case], SearchBounds::default()).unwrap();
        assert!(!timings.is_empty());
        let report = Report::new(
            Query { command: "corpus run".into(), args: vec![] },
            None,
            SearchBounds::default(),
            Body::Cases { cases },
        );
        let back = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        let items = recheck(&back).unwrap();
        assert!(items.iter().any(|i| i.detail.contains("loop verified")));
        assert!(items.iter().all(|i| i.passed), "{items:#?}");
    }

    #[test]
    fn tampered_certificate_fails() {
        let case = find_case("nakayama-4").unwrap();
        let (mut cases, _) = run_cases(&[case], SearchBounds::default()).unwrap();
        let m = cases[0].memberships.iter_mut().find(|m| m.result.outcome() == Outcome::Yes && m.expected.length == 2).unwrap();
        if let LoopResult::Yes { certificate } = &mut m.result {
            let blk = &mut certificate.closing[0];
            blk.entries.iter_mut().for_each(|e| *e = 0);
        }
        let report = Report::new(Query { command: "t".into(), args: vec![] }, None, SearchBounds::default(), Body::Cases { cases });
        let items = recheck(&report).unwrap();
        assert!(items.iter().any(|i| !i.passed));
    }
}
