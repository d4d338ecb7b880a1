//! Structural properties quantified over every corpus case, every ordered
//! pair of its classes, every universe module and small loop lengths. Shared
//! by the property tests and the acceptance run.

use gorenlab::claims::{ClaimId, Verifier};
use gorenlab::corpus::{corpus, BuiltCase, Params};
use gorenlab::engine::{loop_meets, Engine, LoopObstruction, Requirement, SearchBounds};
use gorenlab::homology::{splice, verify_complex};
use gorenlab::verdict::{Outcome, Verdict};

const MAX_LEN: usize = 3;

/// Tighter than the defaults so exhaustive quantification stays fast; every
/// assertion below is about decided verdicts, which bounds cannot fake.
pub fn bounds() -> SearchBounds {
    SearchBounds { max_step_dim: 3, hom_enum_cap: 1 << 12, ..SearchBounds::default() }
}

fn cases() -> Vec<(String, BuiltCase)> {
    corpus().into_iter().map(|c| (c.name.to_string(), c.build().unwrap())).collect()
}

fn pairs(b: &BuiltCase) -> Vec<(usize, usize)> {
    let n = b.classes.len();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

pub fn loops_are_sound_and_splice_monotone() {
    let bounds = bounds();
    let mut checked = 0;
    for (name, b) in cases() {
        let e = Engine::new(bounds);
        for (i, j) in pairs(&b) {
            let (a, cb) = (&b.classes[i], &b.classes[j]);
            for (mname, m) in &b.universe {
                for len in 1..=MAX_LEN {
                    for req in Requirement::ALL {
                        let Verdict::Yes(lp) = e.find_loop(m, a, len, req, cb) else { continue };
                        let ctx = format!("{name}: {mname} {} in add {} vs {} at {len}", req.name(), a.name, cb.name);
                        assert!(lp.check().ok(), "{ctx}: certificate does not re-verify");
                        assert!(loop_meets(&lp, a, cb, req, &bounds).holds(), "{ctx}: requirement fails");
                        assert!(lp.euler_characteristic().iter().all(|&x| x == 0), "{ctx}: Euler sum nonzero");
                        let rep = verify_complex(&lp.to_complex());
                        assert!(rep.is_complex, "{ctx}: not a complex");
                        if len == 1 {
                            let twice = e.find_loop(m, a, 2 * len, req, cb);
                            assert!(twice.is_yes(), "{ctx}: Yes at {len} but {:?} at {}", twice.outcome(), 2 * len);
                            let sp = splice(&lp, &lp, bounds.hom_enum_cap).unwrap();
                            assert!(loop_meets(&sp, a, cb, req, &bounds).holds(), "{ctx}: splice loses the requirement");
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} loops found");
}

pub fn no_embedding_is_final() {
    let e = Engine::new(bounds());
    for (name, b) in cases() {
        for (i, j) in pairs(&b) {
            let (a, cb) = (&b.classes[i], &b.classes[j]);
            for (mname, m) in &b.universe {
                if let Verdict::No(LoopObstruction::NoEmbedding { .. }) = e.find_loop(m, a, 1, Requirement::None, cb) {
                    for len in 1..=4 {
                        for req in Requirement::ALL {
                            assert!(e.find_loop(m, a, len, req, cb).is_no(), "{name}: {mname} at {len}");
                        }
                    }
                }
            }
        }
    }
}

pub fn membership_implications_and_duality() {
    let bounds = bounds();
    let cap = bounds.hom_enum_cap;
    for (name, b) in cases() {
        let e = Engine::new(bounds);
        for (i, j) in pairs(&b) {
            let (a, cb) = (&b.classes[i], &b.classes[j]);
            let (da, db) = (a.dualize(cap).unwrap(), cb.dualize(cap).unwrap());
            for (mname, m) in &b.universe {
                for len in 1..=2 {
                    let r = e.classify(mname, m, a, cb, len);
                    assert!(r.implications_hold(), "{name}: {mname} ({}, {}) at {len}", a.name, cb.name);
                    let dual = e.classify(mname, &m.dualize(), &da, &db, len);
                    for req in Requirement::ALL {
                        assert_eq!(
                            r.projective.outcome(req),
                            dual.injective.outcome(req),
                            "{name}: duality for {mname} ({}, {}) {} at {len}",
                            a.name,
                            cb.name,
                            req.name()
                        );
                    }
                }
            }
        }
    }
}

/// Claims whose checks must agree whenever their hypotheses are verified.
pub fn homological_lemmas_have_no_violations() {
    let bounds = bounds();
    let claims = [ClaimId::Shifting, ClaimId::OrthEquiv, ClaimId::RigidAcyc, ClaimId::Gcd, ClaimId::Schanuel];
    let mut applicable = 0;
    for (name, b) in cases() {
        let e = Engine::new(bounds);
        for (i, j) in pairs(&b) {
            for m in 1..=2 {
                let p = Params::new(&b.classes[i].name, &b.classes[j].name, m, 2);
                let ctx = b.context(&p);
                let v = Verifier::new(&e, &ctx);
                for c in claims {
                    let r = v.verify(c).unwrap();
                    assert!(!r.is_violation(), "{name} {c} with {p:?}: {r:#?}");
                    if r.hypotheses_hold() == Outcome::Yes {
                        applicable += 1;
                    }
                }
            }
        }
    }
    assert!(applicable > 20, "only {applicable} applicable instances");
}
