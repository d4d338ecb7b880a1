//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use gorenlab::claims::{Agreement, ClaimId, Verifier};
use gorenlab::class::ClassSpec;
use gorenlab::corpus::{corpus, find_case, BuiltCase, CorpusCase, LAMBDA};
use gorenlab::engine::{Engine, LoopObstruction, Requirement, SearchBounds, Sup};
use gorenlab::homology::ext_dimension;
use gorenlab::module::{direct_sum, is_isomorphic, Module, DEFAULT_ENUM_CAP as CAP};
use gorenlab::quiver::PathAlgebra;
use gorenlab::report::{run_cases, Body, Query, Report};
use gorenlab::verdict::{Outcome, Verdict};

fn built(name: &str) -> (CorpusCase, BuiltCase) {
    let case = find_case(name).unwrap();
    let b = case.build().unwrap();
    (case, b)
}

fn claim_agrees(case: &CorpusCase, b: &BuiltCase, claim: ClaimId) {
    let exp = case.claims.iter().find(|c| c.claim == claim).expect("claim listed for case");
    let ctx = b.context(&exp.params);
    let e = Engine::new(SearchBounds::default());
    let r = Verifier::new(&e, &ctx).verify(claim).unwrap();
    assert_eq!(r.agreement, Agreement::Agree, "{}: {claim} {r:#?}", case.name);
}

fn px(alg: &std::sync::Arc<PathAlgebra>) -> ClassSpec {
    ClassSpec::new("PX", alg, vec![Module::projective(alg, 0), Module::projective(alg, 1)], CAP).unwrap()
}

fn lambda_shape() {
    let alg = PathAlgebra::from_text(LAMBDA).unwrap();
    assert_eq!(alg.dimension(), 7);
    assert_eq!(alg.projective_dims(0), vec![1, 1, 0]);
    assert_eq!(alg.projective_dims(1), vec![1, 1, 0]);
    assert_eq!(alg.projective_dims(2), vec![1, 1, 1]);
    assert_eq!(alg.injective_dims(2), vec![0, 0, 1]);
    assert!(is_isomorphic(&Module::injective(&alg, 0), &Module::projective(&alg, 2), CAP).is_yes());
}

fn simple_one_loop() {
    let alg = PathAlgebra::from_text(LAMBDA).unwrap();
    let a = px(&alg);
    let e = Engine::new(SearchBounds::default());
    let s1 = Module::simple(&alg, 0);
    let lp = e.find_loop(&s1, &a, 2, Requirement::IntoAcyclic, &a).yes().expect("length-two loop");
    assert!(lp.check().ok());
    let mids = lp.middles();
    assert!(is_isomorphic(mids[0], &Module::projective(&alg, 1), CAP).is_yes(), "first middle is P(2)");
    assert!(is_isomorphic(mids[1], &Module::projective(&alg, 0), CAP).is_yes(), "second middle is P(1)");
    let cycles = lp.cycles();
    assert_eq!(cycles.len(), 2);
    assert!(is_isomorphic(cycles[0], &s1, CAP).is_yes(), "loop starts at S(1)");
    assert!(is_isomorphic(cycles[1], &Module::simple(&alg, 1), CAP).is_yes(), "P(2) / S(1) = S(2)");
    let short = e.find_loop(&s1, &a, 1, Requirement::IntoAcyclic, &a);
    assert!(short.is_no(), "length one: {:?}", short.outcome());
    let s12 = direct_sum(&alg, &[s1, Module::simple(&alg, 1)]).module;
    let r = e.classify("S1+S2", &s12, &a, &a, 1);
    assert_eq!(r.projective.outcome(Requirement::IntoAcyclic), Outcome::Yes);
    assert!(r.implications_hold());
}

fn p3_never_embeds() {
    let alg = PathAlgebra::from_text(LAMBDA).unwrap();
    let a = px(&alg);
    let e = Engine::new(SearchBounds::default());
    let p3 = Module::projective(&alg, 2);
    for m in 1..=4 {
        for r in Requirement::ALL {
            let v = e.find_loop(&p3, &a, m, r, &a);
            assert!(matches!(v, Verdict::No(LoopObstruction::NoEmbedding { .. })), "m = {m}, {}", r.name());
        }
    }
}

fn omega_trace() {
    let (case, b) = built("paper-ex-3.4");
    let cls = b.class("PX").unwrap();
    let e = Engine::new(SearchBounds::default());
    let mods: Vec<Module> = b.universe.iter().map(|(_, m)| m.clone()).collect();
    let mut members = Vec::new();
    for (name, m) in &b.universe {
        let in_b = cls.contains(m, CAP).is_yes();
        let proper = e.find_loop(m, cls, 2, Requirement::Proper, cls).outcome();
        let gp = e.find_loop(m, cls, 2, Requirement::IntoAcyclic, cls).outcome();
        let in_gp = e.in_gp(m, cls, cls, &mods).outcome();
        for o in [proper, gp, in_gp] {
            assert_ne!(o, Outcome::Unknown, "{name} undecided");
            if in_b {
                assert_eq!(o, Outcome::Yes, "{name} lies in B");
            }
        }
        if in_b {
            members.push(name.clone());
        }
    }
    members.sort();
    assert_eq!(members, vec!["P1".to_string(), "P2".to_string()]);
    assert_eq!(b.universe.len(), 8);
    claim_agrees(&case, &b, ClaimId::OmegaTrace);
}

fn nakayama_periods() {
    let (case, b) = built("nakayama-4");
    let proj = b.class("proj").unwrap();
    let e = Engine::new(SearchBounds::default());
    let proper = |name: &str, m: usize| e.find_loop(b.module(name).unwrap(), proj, m, Requirement::Proper, proj).outcome();
    use Outcome::{No, Yes};
    assert_eq!([1, 2, 3, 4].map(|m| proper("M1", m)), [No, Yes, No, Yes]);
    claim_agrees(&case, &b, ClaimId::Gcd);
    // π₃ ∩ π₂ = π₁ on M1 (both sides empty) and on Λ (both sides Yes)
    for (name, expected) in [("M1", No), ("M4", Yes)] {
        let lhs = if proper(name, 3) == Yes && proper(name, 2) == Yes { Yes } else { No };
        assert_eq!(lhs, proper(name, 1), "{name}");
        assert_eq!(lhs, expected, "{name}");
    }
}

fn property_suite() {
    common::loops_are_sound_and_splice_monotone();
    common::no_embedding_is_final();
    common::membership_implications_and_duality();
    common::homological_lemmas_have_no_violations();
}

fn ext_of_simples() {
    for name in ["paper-ex-3.4", "hereditary-A2"] {
        let (_, b) = built(name);
        let alg = &b.alg;
        let n = alg.num_vertices();
        for i in 0..n {
            for j in 0..n {
                let (si, sj) = (Module::simple(alg, i), Module::simple(alg, j));
                assert_eq!(ext_dimension(1, &si, &sj), alg.arrow_count(i, j), "{name}: Ext1(S{i}, S{j})");
                assert_eq!(ext_dimension(2, &si, &sj), alg.relation_count(i, j), "{name}: Ext2(S{i}, S{j})");
            }
        }
    }
}

fn self_injective_dims() {
    for name in ["dual-numbers", "nakayama-4"] {
        let (case, b) = built(name);
        let (proj, inj) = (b.class("proj").unwrap(), b.class("inj").unwrap());
        let e = Engine::new(SearchBounds::default());
        let d = e.universe_dims(&b.universe, proj, proj, inj, inj);
        assert_eq!(d.gl_gpd, Sup::Finite(0), "{name}");
        assert_eq!(d.gl_gid, Sup::Finite(0), "{name}");
        claim_agrees(&case, &b, ClaimId::DimEqual);
    }
}

fn deterministic_runs() {
    let bounds = SearchBounds::default();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let (cases, timings) = pool.install(|| run_cases(&corpus(), bounds)).unwrap();
        let mut r = Report::new(Query { command: "corpus run".into(), args: vec![] }, None, bounds, Body::Cases { cases });
        r.timings = timings;
        r.canonical_json()
    };
    let one = run(1);
    assert_eq!(one, run(8));
    assert_eq!(one, run(3));
}

fn main() {
    let criteria: [(&str, fn()); 9] = [
        ("Lambda dimensions and I(1) = P(3)", lambda_shape),
        ("S(1) loop through P(2) and P(1); S(1)+S(2) at length one", simple_one_loop),
        ("P(3) admits no loop at any length", p3_never_embeds),
        ("proper, periodic and Gorenstein members of B are add(P1+P2)", omega_trace),
        ("nakayama-4 periods, gcd and intersection", nakayama_periods),
        ("property suite over corpus loops and class pairs", property_suite),
        ("Ext of simples counts arrows and relations", ext_of_simples),
        ("global Gorenstein dimensions vanish on self-injective cases", self_injective_dims),
        ("corpus reports are thread-count independent", deterministic_runs),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(()) => println!("PASS {}: {title}", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL {}: {title}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
