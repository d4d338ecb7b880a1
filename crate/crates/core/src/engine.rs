//! Loop search with certificates, membership verdicts for the periodic
//! Gorenstein classes, and relative Gorenstein dimensions.
//!
//! Two search strategies are used. When every admissible step of a loop is
//! forced to be an approximation (Hom(-,B)-acyclic steps into a class with
//! `A ⊆ add B`, or Hom(A,-)-acyclic steps for the proper variants), each
//! step is the minimal approximation plus a split summand, and membership
//! reduces to `M ≅ Σ^m M ⊕ Y` with `Y ∈ add A`. This is decided exactly.
//! Otherwise a bounded depth-first search over monomorphisms is used.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::class::ClassSpec;
use crate::homology::{
    check_hereditary_pair, ext1_dim, ext_vanishes, ext_vanishes_with, splice, step_from_acyclic, step_into_acyclic,
    DimObstruction, DimVerdict, Graded, LoopComplex, LoopStep, Side, SyzygyOrbit,
};
use crate::linalg::subspaces;
use crate::module::{
    cokernel, decompose_with_inclusions, direct_sum, hom_dim, is_isomorphic, map_from_sum, map_into_sum,
    sum_of_maps, HomSpace, Module, ModuleMap,
};
use crate::verdict::{Exhausted, Outcome, Truth, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Cap on `dim A_k - dim Z_k` for each step object.
    pub max_step_dim: usize,
    pub hom_enum_cap: u64,
    pub ext_window: usize,
    pub depth: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_step_dim: 8, hom_enum_cap: 1 << 20, ext_window: 6, depth: 6 }
    }
}

/// What a loop must satisfy beyond exactness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Requirement {
    /// Any loop: `π_m(A)`.
    None,
    /// Hom(-,B)-acyclic: `πGP`.
    IntoAcyclic,
    /// Cycles in `⊥B`: `πWGP`.
    CyclesPerp,
    /// Hom(A,-)- and Hom(-,B)-acyclic: `πGP^ppr`.
    Proper,
    /// Cycles in `A^⊥ ∩ ⊥B`: `πWGP^ppr`.
    ProperWeak,
}

impl Requirement {
    pub const ALL: [Requirement; 5] = [
        Requirement::None,
        Requirement::IntoAcyclic,
        Requirement::CyclesPerp,
        Requirement::Proper,
        Requirement::ProperWeak,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Requirement::None => "none",
            Requirement::IntoAcyclic => "into-acyclic",
            Requirement::CyclesPerp => "cycles-perp",
            Requirement::Proper => "proper",
            Requirement::ProperWeak => "proper-weak",
        }
    }

    /// Requirements implied by this one.
    pub fn weaker(self) -> &'static [Requirement] {
        use Requirement::*;
        match self {
            None => &[],
            IntoAcyclic => &[None],
            CyclesPerp => &[IntoAcyclic, None],
            Proper => &[IntoAcyclic, None],
            ProperWeak => &[CyclesPerp, Proper, IntoAcyclic, None],
        }
    }

    fn needs_into(self) -> bool {
        self != Requirement::None
    }
}

impl std::str::FromStr for Requirement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Requirement::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown requirement `{s}` (expected none, into-acyclic, cycles-perp, proper, proper-weak)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepFailure {
    NotMono,
    NotEpi,
    NotAcyclicInto,
    NotAcyclicFrom,
    /// The base is not `W ⊕ Y` with `W` the last cycle and `Y ∈ add A`.
    NoComplement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LoopObstruction {
    /// The minimal left approximation of the base has a kernel of this
    /// dimension, so the base embeds in no object of the class.
    NoEmbedding { kernel_dim: usize },
    /// `2·dim M` is not a nonnegative (length 1) or integer (odd length)
    /// combination of class dimension vectors.
    DimensionLattice { length: usize, target: Vec<usize> },
    /// The canonical sequence of minimal approximations fails at `step`;
    /// every admissible loop contains it as a direct summand.
    MinimalSequence { step: usize, failure: StepFailure },
    /// A cycle that every admissible loop must contain (up to summands) has
    /// nonvanishing Ext against the named class indecomposable.
    ExtNonvanishing { cycle: usize, side: Side, generator: usize },
    /// The whole search space was enumerated.
    ExhaustiveSearch { nodes: u64 },
}

impl LoopObstruction {
    pub fn tag(&self) -> &'static str {
        match self {
            LoopObstruction::NoEmbedding { .. } => "no-embedding",
            LoopObstruction::DimensionLattice { .. } => "dimension-lattice",
            LoopObstruction::MinimalSequence { .. } => "minimal-sequence",
            LoopObstruction::ExtNonvanishing { .. } => "ext-nonvanishing",
            LoopObstruction::ExhaustiveSearch { .. } => "exhaustive-search",
        }
    }
}

pub type LoopVerdict = Verdict<LoopComplex, LoopObstruction>;

// ---------------------------------------------------------------------------
// Iso-class cache

/// Cheap invariants used to bucket modules before a full isomorphism test.
pub type Signature = (Vec<usize>, usize, Vec<usize>, Vec<usize>);

/// Shared table of iso-class representatives, safe under concurrent use.
#[derive(Default)]
pub struct IsoCache {
    table: Mutex<HashMap<(String, Signature), Vec<Module>>>,
}

impl IsoCache {
    pub fn signature(m: &Module, class: &ClassSpec) -> Signature {
        (m.dims.clone(), hom_dim(m, m), class.hom_from(m), class.hom_into(m))
    }

    /// Stable id of the iso class of `m` within its signature bucket, or
    /// `None` when an isomorphism test is undecided.
    pub fn intern(&self, m: &Module, class: &ClassSpec, cap: u64) -> Option<(Signature, usize)> {
        let sig = Self::signature(m, class);
        let key = (class.name.clone(), sig.clone());
        let known: Vec<Module> = self.table.lock().expect("cache lock").get(&key).cloned().unwrap_or_default();
        for (i, r) in known.iter().enumerate() {
            match is_isomorphic(m, r, cap) {
                Verdict::Yes(_) => return Some((sig, i)),
                Verdict::No(_) => {}
                Verdict::Unknown(_) => return None,
            }
        }
        let mut table = self.table.lock().expect("cache lock");
        let bucket = table.entry(key).or_default();
        // another thread may have inserted meanwhile; those entries were not
        // compared, so only append when nothing changed
        if bucket.len() != known.len() {
            return None;
        }
        bucket.push(m.clone());
        Some((sig, bucket.len() - 1))
    }

    pub fn len(&self) -> usize {
        self.table.lock().expect("cache lock").values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

// ---------------------------------------------------------------------------
// Complements in add A

/// `iso: n ⊕ y -> m` with `y ∈ add A`.
#[derive(Debug, Clone)]
pub struct Complement {
    pub y: Module,
    pub multiplicities: Vec<usize>,
    pub iso: ModuleMap,
}

/// Decide whether `m ≅ n ⊕ y` for some `y ∈ add(class)` by Krull-Schmidt.
pub fn complement(m: &Module, n: &Module, class: &ClassSpec, cap: u64) -> Verdict<Complement, ()> {
    let alg = &m.alg;
    let too_big = |e| Verdict::Unknown(Exhausted::new("hom_enum_cap", format!("decomposition undecided: {e}")));
    let dm = match decompose_with_inclusions(m, cap) {
        Ok(d) => d,
        Err(e) => return too_big(e),
    };
    let dn = match decompose_with_inclusions(n, cap) {
        Ok(d) => d,
        Err(e) => return too_big(e),
    };
    let mut used = vec![false; dm.len()];
    let mut n_parts: Vec<ModuleMap> = Vec::new();
    for kappa in &dn {
        let mut hit = None;
        for (k, iota) in dm.iter().enumerate() {
            if used[k] {
                continue;
            }
            match is_isomorphic(&kappa.source, &iota.source, cap) {
                Verdict::Yes(phi) => {
                    hit = Some((k, phi));
                    break;
                }
                Verdict::No(_) => {}
                Verdict::Unknown(u) => return Verdict::Unknown(u),
            }
        }
        let Some((k, phi)) = hit else { return Verdict::No(()) };
        used[k] = true;
        n_parts.push(phi.then(&dm[k]));
    }
    let mut multiplicities = vec![0; class.len()];
    let mut leftovers: Vec<(usize, ModuleMap)> = Vec::new();
    for (k, iota) in dm.iter().enumerate() {
        if used[k] {
            continue;
        }
        match class.find(&iota.source, cap) {
            Verdict::Yes(i) => {
                let chi = is_isomorphic(&class.indecomposables[i].module, &iota.source, cap);
                let Verdict::Yes(chi) = chi else {
                    return Verdict::Unknown(Exhausted::new("hom_enum_cap", "isomorphism undecided"));
                };
                multiplicities[i] += 1;
                leftovers.push((i, chi.then(iota)));
            }
            Verdict::No(()) => return Verdict::No(()),
            Verdict::Unknown(u) => return Verdict::Unknown(u),
        }
    }
    leftovers.sort_by_key(|(i, _)| *i);
    let y_parts: Vec<Module> = leftovers.iter().map(|(_, f)| f.source.clone()).collect();
    let y_sum = direct_sum(alg, &y_parts);
    let y_maps: Vec<ModuleMap> = leftovers.into_iter().map(|(_, f)| f).collect();
    let psi_y = map_from_sum(&y_sum, m, &y_maps);
    // n -> ⊕ n_l -> m
    let n_sum = direct_sum(alg, &dn.iter().map(|f| f.source.clone()).collect::<Vec<_>>());
    let n_iso = map_from_sum(&n_sum, n, &dn);
    let Some(n_inv) = n_iso.inverse() else {
        return Verdict::Unknown(Exhausted::new("decomposition", "summand inclusions do not assemble"));
    };
    let psi_n = n_inv.then(&map_from_sum(&n_sum, m, &n_parts));
    let total = direct_sum(alg, &[n.clone(), y_sum.module.clone()]);
    let iso = map_from_sum(&total, m, &[psi_n, psi_y]);
    debug_assert!(iso.is_isomorphism());
    Verdict::Yes(Complement { y: y_sum.module, multiplicities, iso })
}

// ---------------------------------------------------------------------------
// Dimension lattice

fn in_monoid(vectors: &[Vec<i64>], target: &[i64]) -> bool {
    if target.iter().all(|&t| t == 0) {
        return true;
    }
    let Some((v, rest)) = vectors.split_first() else { return false };
    let mut t = target.to_vec();
    loop {
        if in_monoid(rest, &t) {
            return true;
        }
        for (a, b) in t.iter_mut().zip(v) {
            *a -= b;
        }
        if t.iter().any(|&x| x < 0) {
            return false;
        }
    }
}

/// Membership of `target` in the integer span of `vectors`, via an
/// echelon basis obtained by Euclidean row operations.
pub fn in_integer_span(vectors: &[Vec<i64>], target: &[i64]) -> bool {
    let n = target.len();
    let mut rows: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&i) = nonzero.first() {
                    rows.swap(r, i);
                    pivots.push((r, c));
                    r += 1;
                }
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&i| rows[i][c].abs()).expect("nonempty");
            rows.swap(r, best);
            for i in r + 1..rows.len() {
                if rows[i][c] != 0 {
                    let q = rows[i][c] / rows[r][c];
                    for k in 0..n {
                        rows[i][k] -= q * rows[r][k];
                    }
                }
            }
        }
    }
    let mut t: Vec<i128> = target.iter().map(|&x| x as i128).collect();
    for (ri, c) in pivots {
        let piv = rows[ri][c];
        if t[c] % piv != 0 {
            return false;
        }
        let q = t[c] / piv;
        for k in 0..n {
            t[k] -= q * rows[ri][k];
        }
    }
    t.iter().all(|&x| x == 0)
}

/// Alternating-sum constraint for loops of odd length: `2·dim M` must be a
/// combination of class dimension vectors (nonnegative for length 1).
pub fn lattice_obstruction(m: &Module, class: &ClassSpec, len: usize) -> Option<LoopObstruction> {
    if len.is_multiple_of(2) {
        return None;
    }
    let target: Vec<i64> = m.dims.iter().map(|&d| 2 * d as i64).collect();
    let mut vectors: Vec<Vec<i64>> =
        class.indecomposables.iter().map(|x| x.module.dims.iter().map(|&d| d as i64).collect()).collect();
    vectors.sort();
    vectors.dedup();
    let ok = if len == 1 { in_monoid(&vectors, &target) } else { in_integer_span(&vectors, &target) };
    (!ok).then(|| LoopObstruction::DimensionLattice { length: len, target: m.dims.iter().map(|d| 2 * d).collect() })
}

// ---------------------------------------------------------------------------
// Orthogonality checks shared by one query

struct Perp<'a> {
    a: &'a ClassSpec,
    b: &'a ClassSpec,
    window: usize,
    cap: u64,
    hereditary: OnceLock<Truth>,
    a_orbits: OnceLock<Vec<SyzygyOrbit>>,
}

impl<'a> Perp<'a> {
    fn new(a: &'a ClassSpec, b: &'a ClassSpec, bounds: &SearchBounds) -> Self {
        Perp {
            a,
            b,
            window: bounds.ext_window,
            cap: bounds.hom_enum_cap,
            hereditary: OnceLock::new(),
            a_orbits: OnceLock::new(),
        }
    }

    fn hereditary(&self) -> Truth {
        *self.hereditary.get_or_init(|| check_hereditary_pair(self.a, self.b, self.window, self.cap))
    }

    /// `w ∈ ⊥B` with the first failing generator. Under a certified
    /// hereditary pair `⊥_1` suffices for the cycles of a loop.
    fn cycle_in_perp_b(&self, w: &Module, loop_cycle: bool) -> (Truth, Option<usize>) {
        if loop_cycle && self.hereditary() == Truth::True {
            for (i, g) in self.b.indecomposables.iter().enumerate() {
                if ext1_dim(w, &g.module) != 0 {
                    return (Truth::False, Some(i));
                }
            }
            return (Truth::True, None);
        }
        let orbit = SyzygyOrbit::compute(w, self.window, self.cap);
        let mut acc = Truth::True;
        for (i, g) in self.b.indecomposables.iter().enumerate() {
            acc = acc.and(ext_vanishes_with(&orbit, &g.module, self.window));
            if acc.is_false() {
                return (acc, Some(i));
            }
        }
        (acc, None)
    }

    /// `w ∈ A^⊥`.
    fn cycle_in_a_perp(&self, w: &Module) -> (Truth, Option<usize>) {
        let orbits = self
            .a_orbits
            .get_or_init(|| self.a.indecomposables.iter().map(|x| SyzygyOrbit::compute(&x.module, self.window, self.cap)).collect());
        let mut acc = Truth::True;
        for (i, o) in orbits.iter().enumerate() {
            acc = acc.and(ext_vanishes_with(o, w, self.window));
            if acc.is_false() {
                return (acc, Some(i));
            }
        }
        (acc, None)
    }

    /// Orthogonality demanded by `req` on all `cycles` of a loop.
    fn check_cycles(&self, cycles: &[&Module], req: Requirement) -> Result<Truth, LoopObstruction> {
        let mut acc = Truth::True;
        if matches!(req, Requirement::CyclesPerp | Requirement::ProperWeak) {
            for (j, w) in cycles.iter().enumerate() {
                let (t, g) = self.cycle_in_perp_b(w, true);
                if t.is_false() {
                    return Err(LoopObstruction::ExtNonvanishing { cycle: j, side: Side::IntoClass, generator: g.unwrap_or(0) });
                }
                acc = acc.and(t);
            }
        }
        if req == Requirement::ProperWeak {
            for (j, w) in cycles.iter().enumerate() {
                let (t, g) = self.cycle_in_a_perp(w);
                if t.is_false() {
                    return Err(LoopObstruction::ExtNonvanishing { cycle: j, side: Side::FromClass, generator: g.unwrap_or(0) });
                }
                acc = acc.and(t);
            }
        }
        Ok(acc)
    }
}

fn step_acyclicity(step: &LoopStep, a: &ClassSpec, b: &ClassSpec, req: Requirement) -> Option<StepFailure> {
    if req.needs_into() && !b.indecomposables.iter().all(|g| step_into_acyclic(step, &g.module)) {
        return Some(StepFailure::NotAcyclicInto);
    }
    if matches!(req, Requirement::Proper | Requirement::ProperWeak)
        && !a.indecomposables.iter().all(|g| step_from_acyclic(step, &g.module))
    {
        return Some(StepFailure::NotAcyclicFrom);
    }
    None
}

/// Whether a finished loop meets `req` (step acyclicity and cycle
/// orthogonality). Used to re-check certificates.
pub fn loop_meets(lp: &LoopComplex, a: &ClassSpec, b: &ClassSpec, req: Requirement, bounds: &SearchBounds) -> Truth {
    if !lp.check().ok() {
        return Truth::False;
    }
    if lp.steps.iter().any(|s| step_acyclicity(s, a, b, req).is_some()) {
        return Truth::False;
    }
    let perp = Perp::new(a, b, bounds);
    let cycles = lp.cycles();
    match perp.check_cycles(&cycles, req) {
        Ok(t) => t,
        Err(_) => Truth::False,
    }
}

fn zero_loop(m: &Module, len: usize) -> LoopComplex {
    let step = LoopStep { mono: ModuleMap::identity(m), epi: ModuleMap::zero(m, m) };
    LoopComplex { base: m.clone(), steps: vec![step; len], closing: ModuleMap::identity(m) }
}

/// `M -> M ⊕ M -> M` repeated `len` times.
pub fn split_loop(m: &Module, len: usize) -> LoopComplex {
    let sum = direct_sum(&m.alg, &[m.clone(), m.clone()]);
    let step = LoopStep { mono: sum.injections[0].clone(), epi: sum.projections[1].clone() };
    LoopComplex { base: m.clone(), steps: vec![step; len], closing: ModuleMap::identity(m) }
}

/// Splice `copies` copies of a loop.
pub fn repeat_loop(lp: &LoopComplex, copies: usize, cap: u64) -> Option<LoopComplex> {
    let mut acc = lp.clone();
    for _ in 1..copies {
        acc = splice(&acc, lp, cap)?;
    }
    Some(acc)
}

// ---------------------------------------------------------------------------
// Membership report

/// Verdicts for the five loop requirements, in [`Requirement::ALL`] order.
#[derive(Debug, Clone)]
pub struct SideReport {
    pub verdicts: Vec<(Requirement, LoopVerdict)>,
}

impl SideReport {
    pub fn get(&self, r: Requirement) -> &LoopVerdict {
        &self.verdicts.iter().find(|(q, _)| *q == r).expect("all requirements present").1
    }

    pub fn outcome(&self, r: Requirement) -> Outcome {
        self.get(r).outcome()
    }

    /// Every Yes implies Yes for all weaker requirements.
    pub fn implications_hold(&self) -> bool {
        Requirement::ALL
            .iter()
            .all(|&r| !self.get(r).is_yes() || r.weaker().iter().all(|&w| self.get(w).is_yes()))
    }
}

/// Membership in `π_m(A)`, `πGP`, `πWGP`, `πGP^ppr`, `πWGP^ppr` and their
/// injective duals. The injective side is `πGI_{(B,A,m)}` and friends:
/// loops of `A`-objects acyclic under `Hom(B,-)`, computed over the
/// opposite algebra, so its certificates live there.
#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub module: String,
    pub a: String,
    pub b: String,
    pub length: usize,
    pub bounds: SearchBounds,
    pub projective: SideReport,
    pub injective: SideReport,
}

impl MembershipReport {
    pub fn implications_hold(&self) -> bool {
        self.projective.implications_hold() && self.injective.implications_hold()
    }
}

/// Per-module entries and suprema for relative Gorenstein dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Sup {
    Finite(usize),
    Infinite,
    /// Some entries were undecided; the decided ones reach this value.
    AtLeast(usize),
}

impl Sup {
    pub fn of<'v>(vs: impl Iterator<Item = &'v DimVerdict>, finite_only: bool) -> Sup {
        let mut max = 0;
        let mut infinite = false;
        let mut unknown = false;
        for v in vs {
            match v {
                Verdict::Yes(g) => max = max.max(g.value),
                Verdict::No(_) => infinite = true,
                Verdict::Unknown(_) => unknown = true,
            }
        }
        if infinite && !finite_only {
            Sup::Infinite
        } else if unknown {
            Sup::AtLeast(max)
        } else {
            Sup::Finite(max)
        }
    }
}

#[derive(Debug, Clone)]
pub struct DimEntry {
    pub module: String,
    pub gpd: DimVerdict,
    pub gid: DimVerdict,
}

#[derive(Debug, Clone)]
pub struct UniverseDims {
    pub entries: Vec<DimEntry>,
    pub gl_gpd: Sup,
    pub gl_gid: Sup,
    pub fgpd: Sup,
    pub fgid: Sup,
}

#[derive(Debug, Clone)]
pub enum GpWitness {
    Loop(LoopComplex),
    /// `m ⊕ complement` carries the loop.
    Summand { complement: Module, lp: LoopComplex },
}

// ---------------------------------------------------------------------------
// The engine

pub struct Engine {
    pub bounds: SearchBounds,
    cache: IsoCache,
}

impl Engine {
    pub fn new(bounds: SearchBounds) -> Self {
        Engine { bounds, cache: IsoCache::default() }
    }

    pub fn cache(&self) -> &IsoCache {
        &self.cache
    }

    fn cap(&self) -> u64 {
        self.bounds.hom_enum_cap
    }

    /// Search for a loop of length `len` at `m` built from `add a` and
    /// satisfying `req` relative to `b` (ignored for `Requirement::None`).
    pub fn find_loop(&self, m: &Module, a: &ClassSpec, len: usize, req: Requirement, b: &ClassSpec) -> LoopVerdict {
        if len == 0 {
            return Verdict::Unknown(Exhausted::new("length", "loop length must be positive"));
        }
        if m.is_zero() {
            return Verdict::Yes(zero_loop(m, len));
        }
        let approx = a.left_approximation(m);
        if !approx.map.is_injective() {
            return Verdict::No(LoopObstruction::NoEmbedding { kernel_dim: m.total_dim() - approx.map.rank() });
        }
        if let Some(ob) = lattice_obstruction(m, a, len) {
            return Verdict::No(ob);
        }
        let perp = Perp::new(a, b, &self.bounds);
        match req {
            Requirement::Proper | Requirement::ProperWeak => return self.backward(m, a, b, len, req, &perp),
            Requirement::IntoAcyclic | Requirement::CyclesPerp => {
                if a.is_subclass_of(b, self.cap()).is_yes() {
                    return self.forward(m, a, b, len, req, &perp);
                }
            }
            Requirement::None => {}
        }
        // no exact criterion: cheap candidates, shorter lengths, then search
        if a.contains(m, self.cap()).is_yes() {
            let lp = split_loop(m, len);
            match perp.check_cycles(&[m], req) {
                Ok(Truth::True) => return Verdict::Yes(lp),
                Err(ob) => return Verdict::No(ob),
                _ => {}
            }
        }
        for cand in [self.forward(m, a, b, len, Requirement::None, &perp), self.backward(m, a, b, len, Requirement::None, &perp)] {
            if let Verdict::Yes(lp) = cand {
                if loop_meets(&lp, a, b, req, &self.bounds) == Truth::True {
                    return Verdict::Yes(lp);
                }
            }
        }
        for d in (1..len).filter(|d| len.is_multiple_of(*d)) {
            if let Verdict::Yes(lp) = self.find_loop(m, a, d, req, b) {
                if let Some(full) = repeat_loop(&lp, len / d, self.cap()) {
                    return Verdict::Yes(full);
                }
            }
        }
        if req == Requirement::CyclesPerp {
            let (t, g) = perp.cycle_in_perp_b(m, false);
            if t.is_false() {
                return Verdict::No(LoopObstruction::ExtNonvanishing { cycle: 0, side: Side::IntoClass, generator: g.unwrap_or(0) });
            }
        }
        Dfs::new(self, m, a, b, len, req, &perp).run()
    }

    /// Minimal left approximations forward from `m`.
    fn forward(&self, m: &Module, a: &ClassSpec, b: &ClassSpec, len: usize, req: Requirement, perp: &Perp) -> LoopVerdict {
        let mut steps: Vec<LoopStep> = Vec::new();
        let mut w = m.clone();
        for j in 0..len {
            let Some((ap, proj)) = a.left_cosyzygy(&w) else {
                let failure = StepFailure::NotMono;
                return Verdict::No(LoopObstruction::MinimalSequence { step: j, failure });
            };
            let step = LoopStep { mono: ap.map, epi: proj };
            if let Some(failure) = step_acyclicity(&step, a, b, req) {
                return Verdict::No(LoopObstruction::MinimalSequence { step: j, failure });
            }
            w = step.right().clone();
            steps.push(step);
        }
        let comp = match complement(m, &w, a, self.cap()) {
            Verdict::Yes(c) => c,
            Verdict::No(()) => {
                return Verdict::No(LoopObstruction::MinimalSequence { step: len, failure: StepFailure::NoComplement })
            }
            Verdict::Unknown(u) => return Verdict::Unknown(u),
        };
        let alg = &m.alg;
        if !comp.y.is_zero() {
            let last = steps.pop().expect("len >= 1");
            let mid = direct_sum(alg, &[last.middle().clone(), comp.y.clone()]);
            let mono = map_into_sum(last.left(), &mid, &[last.mono.clone(), ModuleMap::zero(last.left(), &comp.y)]);
            let epi = sum_of_maps(alg, &[last.epi.clone(), ModuleMap::identity(&comp.y)]);
            steps.push(LoopStep { mono, epi });
        }
        let lp = LoopComplex { base: m.clone(), steps, closing: comp.iso };
        self.finish(lp, req, perp)
    }

    /// Minimal right approximations backward from `m`.
    fn backward(&self, m: &Module, a: &ClassSpec, b: &ClassSpec, len: usize, req: Requirement, perp: &Perp) -> LoopVerdict {
        let mut back: Vec<LoopStep> = Vec::new();
        let mut v = m.clone();
        for j in 0..len {
            let Some((ap, incl)) = a.right_syzygy(&v) else {
                return Verdict::No(LoopObstruction::MinimalSequence { step: j, failure: StepFailure::NotEpi });
            };
            let step = LoopStep { mono: incl, epi: ap.map };
            if let Some(failure) = step_acyclicity(&step, a, b, req) {
                return Verdict::No(LoopObstruction::MinimalSequence { step: j, failure });
            }
            v = step.left().clone();
            back.push(step);
        }
        let comp = match complement(m, &v, a, self.cap()) {
            Verdict::Yes(c) => c,
            Verdict::No(()) => {
                return Verdict::No(LoopObstruction::MinimalSequence { step: len, failure: StepFailure::NoComplement })
            }
            Verdict::Unknown(u) => return Verdict::Unknown(u),
        };
        let Some(phi) = comp.iso.inverse() else {
            return Verdict::Unknown(Exhausted::new("decomposition", "complement map is not invertible"));
        };
        let alg = &m.alg;
        back.reverse();
        let first = back.remove(0);
        let (mono, epi) = if comp.y.is_zero() {
            (phi.then(&first.mono), first.epi.clone())
        } else {
            let inner = sum_of_maps(alg, &[first.mono.clone(), ModuleMap::identity(&comp.y)]);
            let mid = direct_sum(alg, &[first.middle().clone(), comp.y.clone()]);
            let epi = map_from_sum(&mid, first.right(), &[first.epi.clone(), ModuleMap::zero(&comp.y, first.right())]);
            (phi.then(&inner), epi)
        };
        let mut steps = vec![LoopStep { mono, epi }];
        steps.extend(back);
        let lp = LoopComplex { base: m.clone(), steps, closing: ModuleMap::identity(m) };
        self.finish(lp, req, perp)
    }

    fn finish(&self, lp: LoopComplex, req: Requirement, perp: &Perp) -> LoopVerdict {
        match perp.check_cycles(&lp.cycles(), req) {
            Ok(Truth::True) => Verdict::Yes(lp),
            Ok(t) => Verdict::Unknown(Exhausted::new(
                "ext_window",
                format!("cycle orthogonality holds only on the window ({t:?})"),
            )),
            Err(ob) => Verdict::No(ob),
        }
    }

    /// Run [`Engine::find_loop`] for every requirement, propagating decided
    /// verdicts along the implication lattice.
    pub fn classify_side(&self, m: &Module, a: &ClassSpec, b: &ClassSpec, len: usize) -> SideReport {
        let mut verdicts: Vec<(Requirement, LoopVerdict)> = Vec::new();
        for r in Requirement::ALL {
            let inherited = r.weaker().iter().find_map(|w| {
                verdicts.iter().find(|(q, v)| q == w && v.is_no()).map(|(_, v)| v.clone())
            });
            let v = inherited.unwrap_or_else(|| self.find_loop(m, a, len, r, b));
            verdicts.push((r, v));
        }
        for r in Requirement::ALL.into_iter().rev() {
            let found = verdicts.iter().find(|(q, _)| *q == r).and_then(|(_, v)| v.as_yes().cloned());
            if let Some(lp) = found {
                for w in r.weaker() {
                    let slot = verdicts.iter_mut().find(|(q, _)| q == w).expect("present");
                    if !slot.1.is_yes() {
                        slot.1 = Verdict::Yes(lp.clone());
                    }
                }
            }
        }
        SideReport { verdicts }
    }

    pub fn classify(&self, name: &str, m: &Module, a: &ClassSpec, b: &ClassSpec, len: usize) -> MembershipReport {
        let projective = self.classify_side(m, a, b, len);
        let injective = match (a.dualize(self.cap()), b.dualize(self.cap())) {
            (Ok(da), Ok(db)) => self.classify_side(&m.dualize(), &da, &db, len),
            _ => SideReport {
                verdicts: Requirement::ALL
                    .iter()
                    .map(|&r| (r, Verdict::Unknown(Exhausted::new("hom_enum_cap", "dual class undecided"))))
                    .collect(),
            },
        };
        MembershipReport {
            module: name.to_string(),
            a: a.name.clone(),
            b: b.name.clone(),
            length: len,
            bounds: self.bounds,
            projective,
            injective,
        }
    }

    /// Semi-decision of `(A,B)`-Gorenstein projectivity: a Hom(-,B)-acyclic
    /// loop at `m` (or at `m ⊕ U` for `U` in the universe) of length at most
    /// `depth`.
    pub fn in_gp(&self, m: &Module, a: &ClassSpec, b: &ClassSpec, universe: &[Module]) -> Verdict<GpWitness, LoopObstruction> {
        if m.is_zero() {
            return Verdict::Yes(GpWitness::Loop(zero_loop(m, 1)));
        }
        let approx = a.left_approximation(m);
        if !approx.map.is_injective() {
            return Verdict::No(LoopObstruction::NoEmbedding { kernel_dim: m.total_dim() - approx.map.rank() });
        }
        let perp = Perp::new(a, b, &self.bounds);
        if perp.hereditary() == Truth::True {
            let (t, g) = perp.cycle_in_perp_b(m, false);
            if t.is_false() {
                return Verdict::No(LoopObstruction::ExtNonvanishing { cycle: 0, side: Side::IntoClass, generator: g.unwrap_or(0) });
            }
        }
        for len in 1..=self.bounds.depth.max(1) {
            if let Verdict::Yes(lp) = self.find_loop(m, a, len, Requirement::IntoAcyclic, b) {
                return Verdict::Yes(GpWitness::Loop(lp));
            }
        }
        if a.is_subclass_of(b, self.cap()).is_yes() {
            for u in universe {
                if u.is_zero() || is_isomorphic(u, m, self.cap()).is_yes() {
                    continue;
                }
                let s = direct_sum(&m.alg, &[m.clone(), u.clone()]).module;
                for len in 1..=self.bounds.depth.max(1) {
                    if let Verdict::Yes(lp) = self.find_loop(&s, a, len, Requirement::IntoAcyclic, b) {
                        return Verdict::Yes(GpWitness::Summand { complement: u.clone(), lp });
                    }
                }
            }
        }
        Verdict::Unknown(Exhausted::new("depth", format!("no Hom(-,B)-acyclic loop of length <= {}", self.bounds.depth)))
    }

    /// `Gpd_{(A,B)}(m)`: the first `k` whose `A`-syzygy (from minimal right
    /// approximations) is recognised as Gorenstein projective.
    pub fn gorenstein_pd(&self, m: &Module, a: &ClassSpec, b: &ClassSpec, universe: &[Module]) -> DimVerdict {
        let mut x = m.clone();
        let mut seen: Vec<Module> = Vec::new();
        let mut all_no = true;
        for k in 0..=self.bounds.depth {
            match self.in_gp(&x, a, b, universe) {
                Verdict::Yes(_) => return Verdict::Yes(Graded { value: k, window: None }),
                Verdict::No(_) => {}
                Verdict::Unknown(_) => all_no = false,
            }
            if all_no {
                if let Some(pos) = seen.iter().position(|y| is_isomorphic(y, &x, self.cap()).is_yes()) {
                    return Verdict::No(DimObstruction::Infinite { period: k - pos });
                }
            }
            seen.push(x.clone());
            match a.right_syzygy(&x) {
                Some((_, incl)) => x = incl.source,
                None => {
                    return Verdict::Unknown(Exhausted::new(
                        "approximation",
                        format!("step {k} is not an epimorphic image of the class"),
                    ))
                }
            }
        }
        Verdict::Unknown(Exhausted::new("depth", format!("no Gorenstein projective syzygy within {} steps", self.bounds.depth)))
    }

    /// `Gid_{(Z,W)}(m)`, computed as a Gorenstein projective dimension of the
    /// dual module over the opposite algebra.
    pub fn gorenstein_id(&self, m: &Module, z: &ClassSpec, w: &ClassSpec, universe: &[Module]) -> DimVerdict {
        let (Ok(dw), Ok(dz)) = (w.dualize(self.cap()), z.dualize(self.cap())) else {
            return Verdict::Unknown(Exhausted::new("hom_enum_cap", "dual class undecided"));
        };
        let du: Vec<Module> = universe.iter().map(Module::dualize).collect();
        self.gorenstein_pd(&m.dualize(), &dw, &dz, &du)
    }

    /// Suprema of Gorenstein projective and injective dimensions over a
    /// finite universe of modules.
    pub fn universe_dims(
        &self,
        universe: &[(String, Module)],
        a: &ClassSpec,
        b: &ClassSpec,
        z: &ClassSpec,
        w: &ClassSpec,
    ) -> UniverseDims {
        let mods: Vec<Module> = universe.iter().map(|(_, m)| m.clone()).collect();
        let entries: Vec<DimEntry> = universe
            .iter()
            .map(|(name, m)| DimEntry {
                module: name.clone(),
                gpd: self.gorenstein_pd(m, a, b, &mods),
                gid: self.gorenstein_id(m, z, w, &mods),
            })
            .collect();
        UniverseDims {
            gl_gpd: Sup::of(entries.iter().map(|e| &e.gpd), false),
            gl_gid: Sup::of(entries.iter().map(|e| &e.gid), false),
            fgpd: Sup::of(entries.iter().map(|e| &e.gpd), true),
            fgid: Sup::of(entries.iter().map(|e| &e.gid), true),
            entries,
        }
    }
}

// ---------------------------------------------------------------------------
// Bounded depth-first search

/// Multiplicity vectors with total dimension in `lo..=hi`, ordered by total
/// dimension and then lexicographically.
pub fn multiplicity_vectors(dims: &[usize], lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn rec(dims: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == dims.len() {
            out.push(cur.clone());
            return;
        }
        let d = dims[i].max(1);
        for n in 0..=left / d {
            cur.push(n);
            rec(dims, i + 1, left - n * d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dims, 0, hi, &mut Vec::new(), &mut out);
    let total = |v: &Vec<usize>| v.iter().zip(dims).map(|(n, d)| n * d).sum::<usize>();
    out.retain(|v| total(v) >= lo);
    out.sort_by(|x, y| total(x).cmp(&total(y)).then_with(|| x.cmp(y)));
    out
}

struct Dfs<'e> {
    engine: &'e Engine,
    base: &'e Module,
    a: &'e ClassSpec,
    b: &'e ClassSpec,
    len: usize,
    req: Requirement,
    perp: &'e Perp<'e>,
    visited: HashSet<(usize, Signature, usize)>,
    nodes: u64,
    pruned_by_dim: bool,
    capped: bool,
    window_only: bool,
}

impl<'e> Dfs<'e> {
    fn new(
        engine: &'e Engine,
        base: &'e Module,
        a: &'e ClassSpec,
        b: &'e ClassSpec,
        len: usize,
        req: Requirement,
        perp: &'e Perp<'e>,
    ) -> Self {
        Dfs {
            engine,
            base,
            a,
            b,
            len,
            req,
            perp,
            visited: HashSet::new(),
            nodes: 0,
            pruned_by_dim: false,
            capped: false,
            window_only: false,
        }
    }

    fn run(mut self) -> LoopVerdict {
        let mut steps = Vec::new();
        if let Some(lp) = self.node(self.base.clone(), &mut steps) {
            return Verdict::Yes(lp);
        }
        if self.capped {
            Verdict::Unknown(Exhausted::new("hom_enum_cap", format!("search stopped after {} nodes", self.nodes)))
        } else if self.window_only {
            Verdict::Unknown(Exhausted::new("ext_window", "a loop was found whose cycle orthogonality is only window-certified"))
        } else if self.pruned_by_dim {
            Verdict::Unknown(Exhausted::new(
                "max_step_dim",
                format!("no loop with steps of excess dimension <= {}", self.engine.bounds.max_step_dim),
            ))
        } else {
            Verdict::No(LoopObstruction::ExhaustiveSearch { nodes: self.nodes })
        }
    }

    fn node(&mut self, w: Module, steps: &mut Vec<LoopStep>) -> Option<LoopComplex> {
        let cap = self.engine.cap();
        self.nodes += 1;
        if self.nodes > cap {
            self.capped = true;
            return None;
        }
        let j = steps.len();
        if j == self.len {
            return self.close(&w, steps);
        }
        let last = j + 1 == self.len;
        let dw = w.total_dim();
        let class_dims: Vec<usize> = self.a.indecomposables.iter().map(|x| x.module.total_dim()).collect();
        let (lo, hi) = if last {
            (dw + self.base.total_dim(), dw + self.base.total_dim())
        } else {
            self.pruned_by_dim = true;
            (dw, dw + self.engine.bounds.max_step_dim)
        };
        let spaces: Vec<HomSpace> =
            self.a.indecomposables.iter().map(|x| HomSpace::new(&w, &x.module).expect("same algebra")).collect();
        let p = w.p();
        for mults in multiplicity_vectors(&class_dims, lo, hi) {
            if last {
                let dv = self.a.dim_vector(&mults);
                if dv.iter().zip(&w.dims).zip(&self.base.dims).any(|((d, x), y)| *d != x + y) {
                    continue;
                }
            }
            // per class indecomposable: candidate spans in Hom(w, X_i)
            let mut choices: Vec<Vec<Vec<Vec<u32>>>> = Vec::new();
            let mut total: u64 = 1;
            for (i, &n) in mults.iter().enumerate() {
                let h = spaces[i].dim();
                let mut opts = Vec::new();
                for k in 0..=n.min(h) {
                    match subspaces(p, h, k, cap) {
                        Some(s) => opts.extend(s),
                        None => {
                            self.capped = true;
                        }
                    }
                }
                total = total.saturating_mul(opts.len().max(1) as u64);
                choices.push(opts);
            }
            if total > cap {
                self.capped = true;
                continue;
            }
            let mut idx = vec![0usize; choices.len()];
            loop {
                // every candidate map counts against the budget
                self.nodes += 1;
                if self.nodes > cap {
                    self.capped = true;
                    return None;
                }
                if let Some(lp) = self.try_tuple(&w, &mults, &choices, &idx, &spaces, steps) {
                    return Some(lp);
                }
                if self.capped && self.nodes > cap {
                    return None;
                }
                // odometer over the tuple of choices
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        break;
                    }
                    idx[pos] += 1;
                    if idx[pos] < choices[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == idx.len() {
                    break;
                }
            }
        }
        None
    }

    fn try_tuple(
        &mut self,
        w: &Module,
        mults: &[usize],
        choices: &[Vec<Vec<Vec<u32>>>],
        idx: &[usize],
        spaces: &[HomSpace],
        steps: &mut Vec<LoopStep>,
    ) -> Option<LoopComplex> {
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        for (i, &n) in mults.iter().enumerate() {
            let x = &self.a.indecomposables[i].module;
            let basis: &[Vec<u32>] = choices[i].get(idx[i]).map(|v| v.as_slice()).unwrap_or(&[]);
            for k in 0..n {
                parts.push(x.clone());
                maps.push(match basis.get(k) {
                    Some(coeffs) => spaces[i].map_of(&spaces[i].combine(coeffs)),
                    None => ModuleMap::zero(w, x),
                });
            }
        }
        let sum = direct_sum(&w.alg, &parts);
        let mono = map_into_sum(w, &sum, &maps);
        if !mono.is_injective() {
            return None;
        }
        let epi = cokernel(&mono);
        let step = LoopStep { mono, epi };
        if step_acyclicity(&step, self.a, self.b, self.req).is_some() {
            return None;
        }
        if matches!(self.req, Requirement::CyclesPerp | Requirement::ProperWeak) {
            // ⊥_1 is necessary for every cycle
            if self.b.indecomposables.iter().any(|g| ext1_dim(step.right(), &g.module) != 0) {
                return None;
            }
        }
        let next = step.right().clone();
        let j = steps.len() + 1;
        if j < self.len && !self.can_continue(&next, j) {
            return None;
        }
        if j < self.len {
            if let Some((sig, id)) = self.engine.cache.intern(&next, self.a, self.engine.cap()) {
                if !self.visited.insert((j, sig, id)) {
                    return None;
                }
            }
        }
        steps.push(step);
        let found = self.node(next, steps);
        steps.pop();
        found
    }

    /// Necessary conditions on a cycle `w = W_j` with `j < len`: it embeds in
    /// `add a`, and for the last cycle `dim w + dim M` is a sum of class
    /// dimension vectors.
    fn can_continue(&self, w: &Module, j: usize) -> bool {
        if !self.a.left_approximation(w).map.is_injective() {
            return false;
        }
        if j + 1 == self.len {
            let vectors: Vec<Vec<i64>> =
                self.a.indecomposables.iter().map(|x| x.module.dims.iter().map(|&d| d as i64).collect()).collect();
            let target: Vec<i64> = w.dims.iter().zip(&self.base.dims).map(|(x, y)| (x + y) as i64).collect();
            return in_monoid(&vectors, &target);
        }
        true
    }

    fn close(&mut self, w: &Module, steps: &[LoopStep]) -> Option<LoopComplex> {
        let iso = match is_isomorphic(w, self.base, self.engine.cap()) {
            Verdict::Yes(f) => f,
            Verdict::No(_) => return None,
            Verdict::Unknown(_) => {
                self.capped = true;
                return None;
            }
        };
        let lp = LoopComplex { base: self.base.clone(), steps: steps.to_vec(), closing: iso };
        match self.perp.check_cycles(&lp.cycles(), self.req) {
            Ok(Truth::True) => Some(lp),
            Ok(_) => {
                self.window_only = true;
                None
            }
            Err(_) => None,
        }
    }
}

/// Dimension vector of `m` and its `Hom` profile against a class; handy for
/// reports.
pub fn hom_profile(m: &Module, class: &ClassSpec) -> (Vec<usize>, Vec<usize>) {
    (class.hom_from(m), class.hom_into(m))
}

/// Whether `m` is projective: its dimension equals that of its projective
/// cover.
pub fn is_projective(m: &Module) -> bool {
    let top = m.top_dims();
    let alg: &Arc<_> = &m.alg;
    let mut dims = vec![0; m.dims.len()];
    for (v, &t) in top.iter().enumerate() {
        for (acc, d) in dims.iter_mut().zip(alg.projective_dims(v)) {
            *acc += t * d;
        }
    }
    dims == m.dims
}

/// Ext-window orthogonality `m ∈ ⊥class` (all positive degrees, certified by
/// syzygy periodicity when possible).
pub fn in_left_perp(m: &Module, class: &ClassSpec, window: usize, cap: u64) -> Truth {
    class.indecomposables.iter().fold(Truth::True, |acc, g| acc.and(ext_vanishes(m, &g.module, window, cap)))
}

/// `m ∈ class^⊥`.
pub fn in_right_perp(m: &Module, class: &ClassSpec, window: usize, cap: u64) -> Truth {
    class.indecomposables.iter().fold(Truth::True, |acc, g| acc.and(ext_vanishes(&g.module, m, window, cap)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::is_hom_acyclic;
    use crate::module::DEFAULT_ENUM_CAP as CAP;
    use crate::quiver::PathAlgebra;

    const LAMBDA: &str = "algebra Lambda over GF(2)\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 1, c: 3 -> 2\nrelations: a*b, b*a\n";
    const NAK4: &str = "algebra nak4 over GF(2)\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x*x*x\n";

    fn lambda() -> Arc<PathAlgebra> {
        PathAlgebra::from_text(LAMBDA).unwrap()
    }

    fn px(alg: &Arc<PathAlgebra>) -> ClassSpec {
        ClassSpec::new("PX", alg, vec![Module::projective(alg, 0), Module::projective(alg, 1)], CAP).unwrap()
    }

    #[test]
    fn integer_span() {
        assert!(in_integer_span(&[vec![2, 0], vec![0, 3]], &[4, 6]));
        assert!(!in_integer_span(&[vec![2, 0], vec![0, 3]], &[1, 0]));
        assert!(in_integer_span(&[vec![4, 6], vec![6, 9]], &[2, 3]));
        assert!(!in_integer_span(&[vec![4]], &[2]));
        assert!(in_monoid(&[vec![1, 1, 0]], &[2, 2, 0]));
        assert!(!in_monoid(&[vec![1, 1, 0]], &[2, 0, 0]));
    }

    #[test]
    fn simple_one_has_length_two_loop() {
        let alg = lambda();
        let a = px(&alg);
        let s1 = Module::simple(&alg, 0);
        let e = Engine::new(SearchBounds::default());
        let lp = e.find_loop(&s1, &a, 2, Requirement::IntoAcyclic, &a).yes().expect("loop");
        assert!(lp.check().ok());
        assert!(lp.to_complex().verify().exact_everywhere);
        let mids: Vec<Vec<usize>> = lp.middles().iter().map(|m| m.dims.clone()).collect();
        assert_eq!(mids, vec![vec![1, 1, 0], vec![1, 1, 0]]);
        assert!(is_isomorphic(lp.middles()[0], &Module::projective(&alg, 1), CAP).is_yes());
        assert!(is_isomorphic(lp.middles()[1], &Module::projective(&alg, 0), CAP).is_yes());
        assert!(is_hom_acyclic(&lp.to_complex(), &a, Side::IntoClass));
        let no = e.find_loop(&s1, &a, 1, Requirement::IntoAcyclic, &a);
        assert!(matches!(no, Verdict::No(LoopObstruction::DimensionLattice { .. })));
        let s12 = direct_sum(&alg, &[s1.clone(), Module::simple(&alg, 1)]).module;
        assert!(e.find_loop(&s12, &a, 1, Requirement::IntoAcyclic, &a).is_yes());
    }

    #[test]
    fn p3_never_embeds() {
        let alg = lambda();
        let a = px(&alg);
        let p3 = Module::projective(&alg, 2);
        let e = Engine::new(SearchBounds::default());
        for m in 1..=4 {
            for r in Requirement::ALL {
                assert!(matches!(e.find_loop(&p3, &a, m, r, &a), Verdict::No(LoopObstruction::NoEmbedding { .. })));
            }
        }
    }

    #[test]
    fn generators_have_split_loops() {
        let alg = lambda();
        let a = px(&alg);
        let b = ClassSpec::new("S2", &alg, vec![Module::simple(&alg, 1)], CAP).unwrap();
        let e = Engine::new(SearchBounds::default());
        for g in a.modules() {
            let lp = e.find_loop(&g, &a, 1, Requirement::IntoAcyclic, &b).yes().expect("split loop");
            assert!(lp.check().ok());
        }
    }

    #[test]
    fn nakayama_periods() {
        let alg = PathAlgebra::from_text(NAK4).unwrap();
        let lam = ClassSpec::new("proj", &alg, vec![Module::regular(&alg)], CAP).unwrap();
        let e = Engine::new(SearchBounds::default());
        let m1 = Module::simple(&alg, 0);
        for (m, yes) in [(1, false), (2, true), (3, false), (4, true)] {
            let v = e.find_loop(&m1, &lam, m, Requirement::Proper, &lam);
            assert_eq!(v.is_yes(), yes, "m = {m}");
            if !yes {
                assert!(v.is_no());
            }
        }
        // M2 = k[x]/(x^2) sits in the middle: M2 -> Λ -> M2
        let m2 = crate::module::cokernel(&ModuleMap::new(
            Module::projective(&alg, 0),
            Module::projective(&alg, 0),
            vec![Module::projective(&alg, 0).action[0].pow(2)],
        )
        .unwrap())
        .target;
        assert_eq!(m2.total_dim(), 2);
        assert!(e.find_loop(&m2, &lam, 1, Requirement::Proper, &lam).is_yes());
    }

    #[test]
    fn classify_dual_numbers() {
        let alg = PathAlgebra::from_text("algebra dual over GF(2)\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x\n").unwrap();
        let lam = ClassSpec::new("proj", &alg, vec![Module::regular(&alg)], CAP).unwrap();
        let e = Engine::new(SearchBounds::default());
        let s = Module::simple(&alg, 0);
        let r = e.classify("S", &s, &lam, &lam, 1);
        for req in Requirement::ALL {
            assert_eq!(r.projective.outcome(req), Outcome::Yes, "{req:?}");
        }
        assert!(r.implications_hold());
    }

    #[test]
    fn dfs_finds_length_one_loops() {
        let alg = lambda();
        let x = ClassSpec::new(
            "X",
            &alg,
            vec![Module::simple(&alg, 0), Module::projective(&alg, 1), Module::simple(&alg, 1), Module::projective(&alg, 0)],
            CAP,
        )
        .unwrap();
        let s3 = Module::simple(&alg, 2);
        let e = Engine::new(SearchBounds { max_step_dim: 4, ..SearchBounds::default() });
        // S(3) has no nonzero map into X, so it cannot even embed
        assert!(matches!(e.find_loop(&s3, &x, 1, Requirement::None, &x), Verdict::No(LoopObstruction::NoEmbedding { .. })));
        let s1 = Module::simple(&alg, 0);
        let pa = px(&alg);
        let lp = e.find_loop(&s1, &x, 1, Requirement::IntoAcyclic, &pa).yes().expect("split loop in X");
        assert!(lp.check().ok());
        // length one over PX with no acyclicity: the search is finite and empty
        let v = e.find_loop(&s1, &pa, 1, Requirement::None, &pa);
        assert!(v.is_no());
    }

    #[test]
    fn gorenstein_dimensions() {
        let alg = lambda();
        let proj = ClassSpec::new("proj", &alg, vec![Module::regular(&alg)], CAP).unwrap();
        let e = Engine::new(SearchBounds::default());
        let s3 = Module::simple(&alg, 2);
        assert_eq!(e.gorenstein_pd(&s3, &proj, &proj, &[]).yes().map(|g| g.value), Some(1));
        let p1 = Module::projective(&alg, 0);
        assert!(e.in_gp(&p1, &proj, &proj, &[]).is_yes());
        assert!(e.in_gp(&Module::simple(&alg, 2), &proj, &proj, &[]).is_no());
    }
}
