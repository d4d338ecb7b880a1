//! Built-in test cases: small algebras with a full list of indecomposables,
//! named classes, and the outcomes expected from each claim.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::claims::{Agreement, ClaimContext, ClaimId};
use crate::class::ClassSpec;
use crate::engine::Requirement;
use crate::module::{parse_module, Module, ModuleError, DEFAULT_ENUM_CAP};
use crate::quiver::{PathAlgebra, QuiverError};
use crate::verdict::Outcome;

/// Where an expected outcome comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    /// Stated for this example in the literature the tool follows.
    Source,
    /// Worked out by hand or by an independent computation.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

/// Classes and lengths handed to a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub a: String,
    pub b: String,
    pub z: Option<String>,
    pub w: Option<String>,
    pub m: usize,
    pub n: usize,
}

impl Params {
    pub fn new(a: &str, b: &str, m: usize, n: usize) -> Params {
        Params { a: a.into(), b: b.into(), z: None, w: None, m, n }
    }

    pub fn with_injective(mut self, z: &str, w: &str) -> Params {
        self.z = Some(z.into());
        self.w = Some(w.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedClaim {
    pub claim: ClaimId,
    pub params: Params,
    pub expected: Agreement,
    pub origin: Origin,
}

/// A single loop search whose outcome is pinned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedMembership {
    pub module: String,
    pub a: String,
    pub b: String,
    pub length: usize,
    pub requirement: Requirement,
    pub expected: Outcome,
    pub origin: Origin,
}

#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub name: &'static str,
    pub summary: &'static str,
    /// Presentation in the algebra file format.
    pub algebra: String,
    /// Module files; together they form the universe.
    pub modules: Vec<String>,
    /// Class name and the names of its generators.
    pub classes: Vec<(String, Vec<String>)>,
    pub claims: Vec<ExpectedClaim>,
    pub memberships: Vec<ExpectedMembership>,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("algebra: {0}")]
    Algebra(#[from] QuiverError),
    #[error("module: {0}")]
    Module(#[from] ModuleError),
    #[error("class `{class}` names unknown module `{module}`")]
    UnknownModule { class: String, module: String },
    #[error("no corpus case named `{0}`")]
    UnknownCase(String),
}

/// A parsed case.
#[derive(Clone)]
pub struct BuiltCase {
    pub alg: Arc<PathAlgebra>,
    pub universe: Vec<(String, Module)>,
    pub classes: Vec<ClassSpec>,
}

impl BuiltCase {
    pub fn module(&self, name: &str) -> Option<&Module> {
        self.universe.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn class(&self, name: &str) -> Option<&ClassSpec> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn context(&self, p: &Params) -> ClaimContext {
        ClaimContext {
            alg: self.alg.clone(),
            universe: self.universe.clone(),
            classes: self.classes.clone(),
            a: p.a.clone(),
            b: p.b.clone(),
            z: p.z.clone(),
            w: p.w.clone(),
            m: p.m,
            n: p.n,
        }
    }
}

impl CorpusCase {
    pub fn build(&self) -> Result<BuiltCase, CorpusError> {
        let alg = PathAlgebra::from_text(&self.algebra)?;
        let universe = self.modules.iter().map(|t| parse_module(t, &alg)).collect::<Result<Vec<_>, _>>()?;
        let mut classes = Vec::new();
        for (cname, gens) in &self.classes {
            let mods = gens
                .iter()
                .map(|g| {
                    universe
                        .iter()
                        .find(|(n, _)| n == g)
                        .map(|(_, m)| m.clone())
                        .ok_or_else(|| CorpusError::UnknownModule { class: cname.clone(), module: g.clone() })
                })
                .collect::<Result<Vec<_>, _>>()?;
            classes.push(ClassSpec::new(cname, &alg, mods, DEFAULT_ENUM_CAP)?);
        }
        Ok(BuiltCase { alg, universe, classes })
    }
}

// ---------------------------------------------------------------------------
// Case data

fn module_text(name: &str, alg: &str, dims: &str, arrows: &[(&str, &str)]) -> String {
    let mut s = format!("module {name} over {alg}\ndims: {dims}\n");
    for (label, m) in arrows {
        s.push_str(&format!("arrow {label}: {m}\n"));
    }
    s
}

/// `k[x]/(x^j)` as a module over `k[x]/(x^n)`: one Jordan block.
fn jordan(alg: &str, j: usize) -> String {
    let rows: Vec<String> = (0..j)
        .map(|r| {
            let row: Vec<&str> = (0..j).map(|c| if r == c + 1 { "1" } else { "0" }).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    module_text(&format!("M{j}"), alg, &format!("1={j}"), &[("x", &format!("[{}]", rows.join(",")))])
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn claim(claim: ClaimId, params: &Params, expected: Agreement, origin: Origin) -> ExpectedClaim {
    ExpectedClaim { claim, params: params.clone(), expected, origin }
}

fn member(module: &str, class: &str, length: usize, requirement: Requirement, expected: Outcome, origin: Origin) -> ExpectedMembership {
    ExpectedMembership {
        module: module.into(),
        a: class.into(),
        b: class.into(),
        length,
        requirement,
        expected,
        origin,
    }
}

pub const LAMBDA: &str = "algebra Lambda over GF(2)\n\
vertices: 1 2 3\n\
arrows: a: 1 -> 2, b: 2 -> 1, c: 3 -> 2\n\
relations: a*b, b*a\n";

fn paper_ex_3_4() -> CorpusCase {
    let l = "Lambda";
    let modules = vec![
        module_text("S1", l, "1=1 2=0 3=0", &[]),
        module_text("S2", l, "1=0 2=1 3=0", &[]),
        module_text("S3", l, "1=0 2=0 3=1", &[]),
        module_text("P1", l, "1=1 2=1 3=0", &[("a", "[[1]]")]),
        module_text("P2", l, "1=1 2=1 3=0", &[("b", "[[1]]")]),
        module_text("P3", l, "1=1 2=1 3=1", &[("b", "[[1]]"), ("c", "[[1]]")]),
        module_text("I2", l, "1=1 2=1 3=1", &[("a", "[[1]]"), ("c", "[[1]]")]),
        module_text("Q32", l, "1=0 2=1 3=1", &[("c", "[[1]]")]),
    ];
    let classes = vec![
        ("X".to_string(), names(&["S1", "P2", "S2", "P1"])),
        ("PX".to_string(), names(&["P1", "P2"])),
        ("proj".to_string(), names(&["P1", "P2", "P3"])),
        ("inj".to_string(), names(&["P3", "I2", "S3"])),
    ];
    let px = Params::new("PX", "PX", 2, 4);
    let pr = Params::new("proj", "proj", 2, 4).with_injective("inj", "inj");
    use Agreement::*;
    use ClaimId::*;
    use Origin::*;
    let claims = vec![
        claim(OmegaTrace, &px, Agree, Source),
        claim(WsgpEqSgp, &px, Agree, Derived),
        claim(GpCapPeriodic, &px, Agree, Derived),
        claim(Shifting, &px, Agree, Derived),
        claim(Schanuel, &px, Agree, Derived),
        claim(OrthEquiv, &px, Agree, Derived),
        claim(RigidAcyc, &px, Agree, Derived),
        claim(EquivThm, &px, Agree, Derived),
        claim(SelfOrth, &px, Agree, Derived),
        claim(Gcd, &px, Agree, Derived),
        claim(GpFixed, &px, Agree, Derived),
        claim(AddPi1, &px, Agree, Derived),
        claim(DimEqual, &pr, Agree, Derived),
        claim(ClusterTilt, &Params::new("PX", "PX", 2, 1), Agree, Derived),
        claim(CtIdentities, &Params::new("PX", "PX", 2, 1), Agree, Derived),
        claim(ClusterTilt, &Params::new("PX", "X", 2, 1), Disagree, Derived),
    ];
    let memberships = vec![
        member("S1", "PX", 2, Requirement::IntoAcyclic, Outcome::Yes, Source),
        member("S1", "PX", 1, Requirement::IntoAcyclic, Outcome::No, Source),
        member("S2", "PX", 2, Requirement::Proper, Outcome::Yes, Derived),
        member("P1", "PX", 1, Requirement::ProperWeak, Outcome::Yes, Trivial),
        member("P3", "PX", 1, Requirement::None, Outcome::No, Source),
        member("P3", "PX", 2, Requirement::None, Outcome::No, Source),
        member("P3", "PX", 3, Requirement::None, Outcome::No, Source),
        member("P3", "PX", 4, Requirement::None, Outcome::No, Source),
    ];
    CorpusCase {
        name: "paper-ex-3.4",
        summary: "three-vertex algebra with a 2-cycle; X and P(X) on its eight indecomposables",
        algebra: LAMBDA.to_string(),
        modules,
        classes,
        claims,
        memberships,
    }
}

fn truncated_polynomial(case: &'static str, summary: &'static str, n: usize) -> CorpusCase {
    let alg = format!("algebra N{n} over GF(2)\nvertices: 1\narrows: x: 1 -> 1\nrelations: {}\n", vec!["x"; n].join("*"));
    let name = format!("N{n}");
    let modules: Vec<String> = (1..=n).map(|j| jordan(&name, j)).collect();
    let top = format!("M{n}");
    let classes = vec![("proj".to_string(), vec![top.clone()]), ("inj".to_string(), vec![top.clone()])];
    let base = Params::new("proj", "proj", 2, 4).with_injective("inj", "inj");
    use Agreement::*;
    use ClaimId::*;
    use Origin::*;
    let mut claims = vec![
        claim(DimEqual, &base, Agree, Derived),
        claim(OmegaTrace, &base, Agree, Derived),
        claim(WsgpEqSgp, &base, Agree, Derived),
        claim(GpCapPeriodic, &base, Agree, Derived),
        claim(Shifting, &base, Agree, Derived),
        claim(OrthEquiv, &base, Agree, Derived),
        claim(EquivThm, &base, Agree, Derived),
        claim(GpFixed, &base, Agree, Derived),
        claim(AddPi1, &base, Agree, Derived),
    ];
    let mut memberships = vec![member(&top, "proj", 1, Requirement::ProperWeak, Outcome::Yes, Trivial)];
    if n == 2 {
        let p1 = Params { m: 1, n: 1, ..base.clone() };
        claims.push(claim(SelfOrth, &p1, Agree, Derived));
        claims.push(claim(RigidAcyc, &p1, Agree, Derived));
        memberships.push(member("M1", "proj", 1, Requirement::ProperWeak, Outcome::Yes, Derived));
    } else {
        claims.push(claim(Gcd, &base, Agree, Derived));
        claims.push(claim(SelfOrth, &base, Agree, Derived));
        claims.push(claim(Schanuel, &base, Agree, Derived));
        claims.push(claim(CtIdentities, &Params { n: 1, ..base.clone() }, Agree, Derived));
        for (len, o) in [(1, Outcome::No), (2, Outcome::Yes), (3, Outcome::No), (4, Outcome::Yes)] {
            memberships.push(member("M1", "proj", len, Requirement::Proper, o, Derived));
        }
        memberships.push(member("M2", "proj", 1, Requirement::Proper, Outcome::Yes, Derived));
    }
    CorpusCase { name: case, summary, algebra: alg, modules, classes, claims, memberships }
}

fn semisimple_2() -> CorpusCase {
    let alg = "algebra K2 over GF(2)\nvertices: 1 2\n".to_string();
    let modules = vec![module_text("S1", "K2", "1=1 2=0", &[]), module_text("S2", "K2", "1=0 2=1", &[])];
    let classes = vec![
        ("all".to_string(), names(&["S1", "S2"])),
        ("first".to_string(), names(&["S1"])),
    ];
    let p = Params::new("all", "all", 1, 2).with_injective("all", "all");
    let mut claims: Vec<ExpectedClaim> = ClaimId::ALL
        .into_iter()
        .filter(|c| !matches!(c, ClaimId::ClusterTilt | ClaimId::CtIdentities | ClaimId::Ncotorsion))
        .map(|c| claim(c, &p, Agreement::Agree, Origin::Trivial))
        .collect();
    claims.push(claim(ClaimId::ClusterTilt, &Params::new("all", "all", 1, 1), Agreement::Agree, Origin::Trivial));
    claims.push(claim(ClaimId::CtIdentities, &Params::new("all", "all", 1, 1), Agreement::Agree, Origin::Trivial));
    let memberships = vec![
        member("S1", "all", 1, Requirement::ProperWeak, Outcome::Yes, Origin::Trivial),
        member("S2", "first", 1, Requirement::None, Outcome::No, Origin::Trivial),
    ];
    CorpusCase {
        name: "semisimple-2",
        summary: "two orthogonal simples; every class equality holds trivially",
        algebra: alg,
        modules,
        classes,
        claims,
        memberships,
    }
}

fn hereditary_a2() -> CorpusCase {
    let alg = "algebra A2 over GF(2)\nvertices: 1 2\narrows: a: 1 -> 2\n".to_string();
    let modules = vec![
        module_text("S1", "A2", "1=1 2=0", &[]),
        module_text("S2", "A2", "1=0 2=1", &[]),
        module_text("P1", "A2", "1=1 2=1", &[("a", "[[1]]")]),
    ];
    let classes = vec![
        ("proj".to_string(), names(&["P1", "S2"])),
        ("inj".to_string(), names(&["S1", "P1"])),
        ("simples".to_string(), names(&["S1", "S2"])),
        ("all".to_string(), names(&["S1", "S2", "P1"])),
    ];
    let pr = Params::new("proj", "proj", 1, 2).with_injective("inj", "inj");
    let ps = Params::new("proj", "simples", 1, 2);
    use Agreement::*;
    use ClaimId::*;
    use Origin::*;
    let claims = vec![
        claim(DimEqual, &pr, Agree, Derived),
        claim(OmegaTrace, &pr, Agree, Derived),
        claim(WsgpEqSgp, &pr, Agree, Derived),
        claim(GpCapPeriodic, &pr, Agree, Derived),
        claim(GpFixed, &pr, Agree, Derived),
        claim(Shifting, &ps, Agree, Derived),
        claim(WsgpEqSgp, &ps, Agree, Derived),
        claim(Ncotorsion, &Params::new("all", "inj", 1, 1), Disagree, Derived),
        claim(ClusterTilt, &Params::new("proj", "proj", 1, 1), Agree, Trivial),
        claim(RigidAcyc, &Params::new("proj", "proj", 1, 1), Agree, Derived),
        claim(Schanuel, &pr, Agree, Derived),
    ];
    let memberships = vec![
        member("P1", "proj", 1, Requirement::ProperWeak, Outcome::Yes, Trivial),
        member("S1", "proj", 1, Requirement::IntoAcyclic, Outcome::No, Derived),
        member("S1", "proj", 2, Requirement::IntoAcyclic, Outcome::No, Derived),
    ];
    CorpusCase {
        name: "hereditary-A2",
        summary: "the path algebra of 1 -> 2; gl.dim 1, so only projectives are Gorenstein projective",
        algebra: alg,
        modules,
        classes,
        claims,
        memberships,
    }
}

/// All cases, sorted by name.
pub fn corpus() -> Vec<CorpusCase> {
    let mut v = vec![
        paper_ex_3_4(),
        truncated_polynomial("dual-numbers", "k[x]/(x^2), self-injective with one non-projective indecomposable", 2),
        truncated_polynomial("nakayama-4", "k[x]/(x^4) with the four uniserial modules M1..M4", 4),
        semisimple_2(),
        hereditary_a2(),
    ];
    v.sort_by_key(|c| c.name);
    v
}

pub fn find_case(name: &str) -> Result<CorpusCase, CorpusError> {
    corpus().into_iter().find(|c| c.name == name).ok_or_else(|| CorpusError::UnknownCase(name.to_string()))
}
