//! Complexes, loops, Ext groups and resolution dimensions.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::class::ClassSpec;
use crate::linalg::Matrix;
use crate::module::{
    direct_sum, hom_dim, is_isomorphic, kernel, map_from_projective, map_from_sum, projective_cover, HomSpace, Module,
    ModuleMap,
};
use crate::quiver::PathAlgebra;
use crate::verdict::{Exhausted, Truth, Verdict};

/// A bounded complex `0 -> C_hi -> ... -> C_lo -> 0` (homological grading).
/// `objects[k]` sits in degree `lo + k` and `diffs[k]: objects[k+1] -> objects[k]`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub lo: i64,
    pub objects: Vec<Module>,
    pub diffs: Vec<ModuleMap>,
    /// Period when the complex is a window of a periodic complex.
    pub period: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub is_complex: bool,
    /// Degrees at which homology vanishes.
    pub exact_at: Vec<i64>,
    pub exact_everywhere: bool,
}

impl ChainComplex {
    pub fn new(lo: i64, objects: Vec<Module>, diffs: Vec<ModuleMap>) -> Self {
        assert_eq!(objects.len(), diffs.len() + 1, "one differential between consecutive objects");
        ChainComplex { lo, objects, diffs, period: None }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    /// Check `d∘d = 0` and compare kernel and image dimensions per degree.
    pub fn verify(&self) -> ComplexReport {
        let n = self.objects.len();
        let shapes_ok = self.diffs.iter().enumerate().all(|(k, d)| {
            d.source.dims == self.objects[k + 1].dims
                && d.target.dims == self.objects[k].dims
                && d.failing_arrow().is_none()
        });
        let mut is_complex = shapes_ok;
        if shapes_ok {
            for k in 0..self.diffs.len().saturating_sub(1) {
                if !self.diffs[k + 1].then(&self.diffs[k]).is_zero() {
                    is_complex = false;
                }
            }
        }
        let ranks: Vec<usize> = self.diffs.iter().map(|d| d.rank()).collect();
        let mut exact_at = Vec::new();
        if is_complex {
            for k in 0..n {
                let dim = self.objects[k].total_dim();
                let out = if k > 0 { ranks[k - 1] } else { 0 };
                let inc = if k < self.diffs.len() { ranks[k] } else { 0 };
                if dim == out + inc {
                    exact_at.push(self.lo + k as i64);
                }
            }
        }
        let exact_everywhere = is_complex && exact_at.len() == n;
        ComplexReport { is_complex, exact_at, exact_everywhere }
    }
}

pub fn verify_complex(c: &ChainComplex) -> ComplexReport {
    c.verify()
}

/// Rank of `Hom(f, n): Hom(f.target, n) -> Hom(f.source, n)`.
fn rank_pullback(f: &ModuleMap, n: &Module) -> usize {
    let space = HomSpace::new(&f.target, n).expect("same algebra");
    if space.dim() == 0 {
        return 0;
    }
    let cols: Vec<Vec<u32>> = space.maps().iter().map(|g| f.then(g).to_vec()).collect();
    let width = cols[0].len();
    Matrix::from_columns(f.source.p(), width, &cols).rank()
}

/// Rank of `Hom(n, f): Hom(n, f.source) -> Hom(n, f.target)`.
fn rank_pushforward(f: &ModuleMap, n: &Module) -> usize {
    let space = HomSpace::new(n, &f.source).expect("same algebra");
    if space.dim() == 0 {
        return 0;
    }
    let cols: Vec<Vec<u32>> = space.maps().iter().map(|g| g.then(f).to_vec()).collect();
    let width = cols[0].len();
    Matrix::from_columns(f.source.p(), width, &cols).rank()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `Hom(C, G)` exact for every generator `G`.
    IntoClass,
    /// `Hom(G, C)` exact for every generator `G`.
    FromClass,
}

/// Exactness of `Hom(C, G)` or `Hom(G, C)` for all class indecomposables.
pub fn is_hom_acyclic(c: &ChainComplex, class: &ClassSpec, side: Side) -> bool {
    class.indecomposables.iter().all(|g| {
        let g = &g.module;
        let ranks: Vec<usize> = c
            .diffs
            .iter()
            .map(|d| match side {
                Side::IntoClass => rank_pullback(d, g),
                Side::FromClass => rank_pushforward(d, g),
            })
            .collect();
        (0..c.objects.len()).all(|k| {
            let dim = match side {
                Side::IntoClass => hom_dim(&c.objects[k], g),
                Side::FromClass => hom_dim(g, &c.objects[k]),
            };
            let a = if k > 0 { ranks[k - 1] } else { 0 };
            let b = if k < ranks.len() { ranks[k] } else { 0 };
            dim == a + b
        })
    })
}

// ---------------------------------------------------------------------------
// Loops

/// One step `0 -> W_{j-1} -> B_j -> W_j -> 0` of a loop.
#[derive(Debug, Clone)]
pub struct LoopStep {
    pub mono: ModuleMap,
    pub epi: ModuleMap,
}

impl LoopStep {
    pub fn middle(&self) -> &Module {
        &self.mono.target
    }

    pub fn left(&self) -> &Module {
        &self.mono.source
    }

    pub fn right(&self) -> &Module {
        &self.epi.target
    }
}

/// An exact loop `0 -> M -> B_1 -> ... -> B_m -> M -> 0` presented as
/// short exact steps `W_{j-1} -> B_j -> W_j` with `W_0 = M` and an
/// isomorphism `W_m -> M` closing the loop. In the descending numbering
/// `A_k = B_{m+1-k}` this is `0 -> M -> A_m -> ... -> A_1 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct LoopComplex {
    pub base: Module,
    pub steps: Vec<LoopStep>,
    pub closing: ModuleMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopCheck {
    pub maps_are_morphisms: bool,
    pub steps_exact: bool,
    pub closing_is_iso: bool,
    pub chained: bool,
}

impl LoopCheck {
    pub fn ok(&self) -> bool {
        self.maps_are_morphisms && self.steps_exact && self.closing_is_iso && self.chained
    }
}

impl LoopComplex {
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// `W_0, ..., W_{m-1}` (the distinct cycles; `W_m ≅ W_0`).
    pub fn cycles(&self) -> Vec<&Module> {
        self.steps.iter().map(|s| s.left()).collect()
    }

    pub fn middles(&self) -> Vec<&Module> {
        self.steps.iter().map(|s| s.middle()).collect()
    }

    /// Independent re-verification of every structural claim.
    pub fn check(&self) -> LoopCheck {
        let maps_are_morphisms = self.steps.iter().all(|s| {
            s.mono.failing_arrow().is_none()
                && s.epi.failing_arrow().is_none()
                && s.mono.target.violated_relation().is_none()
                && s.epi.target.violated_relation().is_none()
        }) && self.closing.failing_arrow().is_none();
        let steps_exact = self.steps.iter().all(|s| {
            s.mono.target == s.epi.source
                && s.mono.is_injective()
                && s.epi.is_surjective()
                && s.mono.then(&s.epi).is_zero()
                && s.middle().total_dim() == s.left().total_dim() + s.right().total_dim()
        });
        let closing_is_iso = self.closing.is_isomorphism()
            && self.steps.last().is_some_and(|s| s.right() == &self.closing.source)
            && self.closing.target == self.base;
        let chained = !self.steps.is_empty()
            && self.steps[0].left() == &self.base
            && self.steps.windows(2).all(|w| w[0].right() == w[1].left());
        LoopCheck { maps_are_morphisms, steps_exact, closing_is_iso, chained }
    }

    /// The bounded complex `0 -> M -> B_1 -> ... -> B_m -> M -> 0`, with `M`
    /// in degree `m + 1` and the right-hand `M` in degree 0.
    pub fn to_complex(&self) -> ChainComplex {
        let m = self.length();
        let mut objects: Vec<Module> = vec![self.base.clone()];
        let mut diffs: Vec<ModuleMap> = Vec::new();
        // degree 0 is the final M; degree k (1..=m) is B_{m+1-k}
        let last = &self.steps[m - 1];
        diffs.push(last.epi.then(&self.closing));
        for k in 1..=m {
            let j = m + 1 - k; // B_j
            objects.push(self.steps[j - 1].middle().clone());
            if j > 1 {
                diffs.push(self.steps[j - 2].epi.then(&self.steps[j - 1].mono));
            }
        }
        objects.push(self.base.clone());
        diffs.push(self.steps[0].mono.clone());
        ChainComplex { lo: 0, objects, diffs, period: Some(m) }
    }

    /// `copies` consecutive periods glued at `M`: a window of the periodic
    /// complex obtained by splicing the loop with itself.
    pub fn unroll(&self, copies: usize) -> ChainComplex {
        let m = self.length();
        let mut objects: Vec<Module> = Vec::new();
        let mut diffs: Vec<ModuleMap> = Vec::new();
        // closing iso composed in front of the first mono: W_m -> M -> B_1
        let wrap = self.closing.then(&self.steps[0].mono);
        for c in 0..copies {
            for j in (1..=m).rev() {
                objects.push(self.steps[j - 1].middle().clone());
                let is_last = c + 1 == copies && j == 1;
                if !is_last {
                    let d = if j > 1 {
                        self.steps[j - 2].epi.then(&self.steps[j - 1].mono)
                    } else {
                        self.steps[m - 1].epi.then(&wrap)
                    };
                    diffs.push(d);
                }
            }
        }
        // entries run B_m, ..., B_1, B_m, ... and each map goes from an entry
        // to its predecessor
        ChainComplex { lo: 0, objects, diffs, period: Some(m) }
    }

    /// `Hom(-, G)` exactness of every step, tested by dimension count.
    pub fn into_acyclic(&self, class: &ClassSpec) -> bool {
        class.indecomposables.iter().all(|g| self.steps.iter().all(|s| step_into_acyclic(s, &g.module)))
    }

    /// `Hom(G, -)` exactness of every step.
    pub fn from_acyclic(&self, class: &ClassSpec) -> bool {
        class.indecomposables.iter().all(|g| self.steps.iter().all(|s| step_from_acyclic(s, &g.module)))
    }

    /// Alternating sum of dimension vectors of `M, B_1, ..., B_m, M`.
    pub fn euler_characteristic(&self) -> Vec<i64> {
        let m = self.length();
        let nv = self.base.dims.len();
        let mut acc = vec![0i64; nv];
        let add = |acc: &mut Vec<i64>, dims: &[usize], sign: i64| {
            for (a, &d) in acc.iter_mut().zip(dims) {
                *a += sign * d as i64;
            }
        };
        add(&mut acc, &self.base.dims, 1);
        for (j, s) in self.steps.iter().enumerate() {
            let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
            add(&mut acc, &s.middle().dims, sign);
        }
        add(&mut acc, &self.base.dims, if (m + 1).is_multiple_of(2) { 1 } else { -1 });
        acc
    }
}

/// `Hom(B, G) -> Hom(W_{j-1}, G)` surjective.
pub fn step_into_acyclic(s: &LoopStep, g: &Module) -> bool {
    hom_dim(s.middle(), g) == hom_dim(s.left(), g) + hom_dim(s.right(), g)
}

/// `Hom(G, B) -> Hom(G, W_j)` surjective.
pub fn step_from_acyclic(s: &LoopStep, g: &Module) -> bool {
    hom_dim(g, s.middle()) == hom_dim(g, s.left()) + hom_dim(g, s.right())
}

/// Concatenate two loops at (isomorphic) bases.
pub fn splice(first: &LoopComplex, second: &LoopComplex, cap: u64) -> Option<LoopComplex> {
    // first closes W_m -> M1; second starts at M2 = second.base.
    let bridge = match is_isomorphic(&first.base, &second.base, cap) {
        Verdict::Yes(f) => f,
        _ => return None,
    };
    let mut steps = first.steps.clone();
    // replace the last epi target by the second loop's base via closing ∘ bridge
    let last = steps.pop()?;
    let to_second = first.closing.then(&bridge);
    let epi = last.epi.then(&to_second);
    steps.push(LoopStep { mono: last.mono, epi });
    steps.extend(second.steps.iter().cloned());
    let back = bridge.inverse()?;
    let closing = second.closing.then(&back);
    Some(LoopComplex { base: first.base.clone(), steps, closing })
}

// ---------------------------------------------------------------------------
// Projective resolutions and Ext

/// Iterated syzygies `Ω^0 M, Ω^1 M, ...` with detection of eventual
/// periodicity (`Ω^a ≅ Ω^b`, `a < b`) or vanishing.
#[derive(Debug, Clone)]
pub struct SyzygyOrbit {
    pub syzygies: Vec<Module>,
    /// `Some((a, b))` when `Ω^a ≅ Ω^b` (with `b = a + 1` and `Ω^a = 0` for
    /// finite projective dimension).
    pub closed: Option<(usize, usize)>,
}

impl SyzygyOrbit {
    pub fn compute(m: &Module, max_len: usize, cap: u64) -> SyzygyOrbit {
        let mut syzygies = vec![m.clone()];
        let mut closed = None;
        for k in 0..max_len {
            let cur = &syzygies[k];
            if cur.is_zero() {
                closed = Some((k, k + 1));
                break;
            }
            let next = crate::module::syzygy(cur);
            let mut hit = None;
            for (a, earlier) in syzygies.iter().enumerate() {
                if earlier.dims == next.dims && is_isomorphic(earlier, &next, cap).is_yes() {
                    hit = Some(a);
                    break;
                }
            }
            syzygies.push(next);
            if let Some(a) = hit {
                closed = Some((a, k + 1));
                break;
            }
        }
        SyzygyOrbit { syzygies, closed }
    }

    /// `Ω^k M` for any `k`, when known (directly or through periodicity).
    pub fn get(&self, k: usize) -> Option<&Module> {
        if k < self.syzygies.len() {
            return Some(&self.syzygies[k]);
        }
        let (a, b) = self.closed?;
        let period = b - a;
        Some(&self.syzygies[a + (k - a) % period])
    }

    /// `true` when `get` is defined for every `k`.
    pub fn is_closed(&self) -> bool {
        self.closed.is_some()
    }
}

/// `dim Ext^1(x, n)` from `0 -> Ωx -> P -> x -> 0`.
pub fn ext1_dim(x: &Module, n: &Module) -> usize {
    if x.is_zero() {
        return 0;
    }
    let omega = crate::module::syzygy(x);
    let top = x.top_dims();
    let hom_p: usize = top.iter().zip(&n.dims).map(|(t, d)| t * d).sum();
    hom_dim(&omega, n) + hom_dim(x, n) - hom_p
}

/// `dim Ext^i(m, n)`, computed as `Ext^1(Ω^{i-1} m, n)`.
pub fn ext_dimension(i: usize, m: &Module, n: &Module) -> usize {
    if i == 0 {
        return hom_dim(m, n);
    }
    let mut x = m.clone();
    for _ in 1..i {
        if x.is_zero() {
            return 0;
        }
        x = crate::module::syzygy(&x);
    }
    ext1_dim(&x, n)
}

/// A projective resolution `P_len -> ... -> P_0` of `m` (without `m`), with
/// generators of each cover taken in the given vertex order.
pub fn projective_resolution(m: &Module, len: usize, reverse_generators: bool) -> ChainComplex {
    let alg = m.alg.clone();
    let mut objects = Vec::new();
    let mut diffs: Vec<ModuleMap> = Vec::new();
    let mut current = m.clone();
    let mut prev_inclusion: Option<ModuleMap> = None;
    for _ in 0..=len {
        let cover = ordered_cover(&alg, &current, reverse_generators);
        if let Some(inc) = &prev_inclusion {
            // P_k -> Ω^k -> P_{k-1}
            diffs.push(cover.then(inc));
        }
        objects.push(cover.source.clone());
        let k = kernel(&cover);
        current = k.source.clone();
        prev_inclusion = Some(k);
    }
    ChainComplex::new(0, objects, diffs)
}

fn ordered_cover(alg: &Arc<PathAlgebra>, m: &Module, reverse: bool) -> ModuleMap {
    if !reverse {
        return projective_cover(m);
    }
    let gens = m.top_generators();
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for (v, gs) in gens.iter().enumerate().rev() {
        for g in gs.iter().rev() {
            let f = map_from_projective(m, v, g);
            parts.push(f.source.clone());
            maps.push(f);
        }
    }
    let sum = direct_sum(alg, &parts);
    map_from_sum(&sum, m, &maps)
}

/// `dim Ext^i(m, n)` as cohomology of `Hom(P_•, n)` for an explicit
/// resolution; used to cross-check [`ext_dimension`].
pub fn ext_dimension_via_complex(i: usize, m: &Module, n: &Module, reverse_generators: bool) -> usize {
    let res = projective_resolution(m, i + 1, reverse_generators);
    let dim = hom_dim(&res.objects[i], n);
    // d_{i+1}: P_{i+1} -> P_i induces Hom(P_i, n) -> Hom(P_{i+1}, n)
    let out = rank_pullback(&res.diffs[i], n);
    let inc = if i > 0 { rank_pullback(&res.diffs[i - 1], n) } else { 0 };
    dim - out - inc
}

/// Vanishing of `Ext^{≥1}(m, n)`. Certified when the syzygy orbit of `m`
/// closes within the window; otherwise reported on the window.
pub fn ext_vanishes(m: &Module, n: &Module, window: usize, cap: u64) -> Truth {
    let orbit = SyzygyOrbit::compute(m, window, cap);
    ext_vanishes_with(&orbit, n, window)
}

pub fn ext_vanishes_with(orbit: &SyzygyOrbit, n: &Module, window: usize) -> Truth {
    let horizon = match orbit.closed {
        Some((_, b)) => b.max(1),
        None => window,
    };
    for i in 1..=horizon.max(1) {
        let Some(x) = orbit.get(i - 1) else { return Truth::WindowTrue { window: i - 1 } };
        if ext1_dim(x, n) != 0 {
            return Truth::False;
        }
    }
    if orbit.is_closed() {
        Truth::True
    } else {
        Truth::WindowTrue { window }
    }
}

/// `Ext^{1..=n}` vanishing for the given degree range only.
pub fn ext_vanishes_in_range(m: &Module, n: &Module, lo: usize, hi: usize) -> bool {
    let mut x = m.clone();
    for i in 1..=hi {
        if i >= lo && ext1_dim(&x, n) != 0 {
            return false;
        }
        if x.is_zero() {
            return true;
        }
        x = crate::module::syzygy(&x);
    }
    true
}

// ---------------------------------------------------------------------------
// Relative dimensions

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graded {
    pub value: usize,
    /// `None` when the value is certified in all degrees; otherwise the
    /// window on which it was established.
    pub window: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DimObstruction {
    /// The approximation at this step is not an epimorphism (resolution)
    /// or not a monomorphism (coresolution), so no finite one exists.
    ApproximationFails { step: usize },
    /// Nonzero Ext in infinitely many degrees (certified by periodicity).
    Infinite { period: usize },
}

pub type DimVerdict = Verdict<Graded, DimObstruction>;

/// `pd_B(m)`: smallest `d` with `Ext^{>d}(m, B) = 0`.
pub fn relative_pd(m: &Module, b: &ClassSpec, window: usize, cap: u64) -> DimVerdict {
    let orbit = SyzygyOrbit::compute(m, window.max(1), cap);
    let horizon = match orbit.closed {
        Some((_, hb)) => hb.max(1),
        None => window,
    };
    let nonzero: Vec<bool> = (1..=horizon)
        .map(|i| match orbit.get(i - 1) {
            Some(x) => b.indecomposables.iter().any(|g| ext1_dim(x, &g.module) != 0),
            None => false,
        })
        .collect();
    match orbit.closed {
        Some((a, hb)) => {
            // degrees i with i-1 >= a repeat with period hb - a
            let periodic_nonzero = (a + 1..=hb).any(|i| nonzero[i - 1]);
            if periodic_nonzero {
                return Verdict::No(DimObstruction::Infinite { period: hb - a });
            }
            let d = nonzero.iter().rposition(|&z| z).map_or(0, |i| i + 1);
            Verdict::Yes(Graded { value: d, window: None })
        }
        None => {
            if nonzero.last().copied().unwrap_or(false) {
                Verdict::Unknown(Exhausted::new("ext_window", format!("Ext^{window} into the class is nonzero")))
            } else {
                let d = nonzero.iter().rposition(|&z| z).map_or(0, |i| i + 1);
                Verdict::Yes(Graded { value: d, window: Some(window) })
            }
        }
    }
}

/// `Ext^{1..=n}(gen A, gen B) = 0`.
pub fn check_hereditary_pair(a: &ClassSpec, b: &ClassSpec, window: usize, cap: u64) -> Truth {
    let mut acc = Truth::True;
    for x in &a.indecomposables {
        let orbit = SyzygyOrbit::compute(&x.module, window, cap);
        for y in &b.indecomposables {
            acc = acc.and(ext_vanishes_with(&orbit, &y.module, window));
            if acc.is_false() {
                return acc;
            }
        }
    }
    acc
}

/// `Ext^{1..=n}(gen A, gen A) = 0`.
pub fn is_rigid(a: &ClassSpec, n: usize) -> bool {
    a.indecomposables
        .iter()
        .all(|x| a.indecomposables.iter().all(|y| ext_vanishes_in_range(&x.module, &y.module, 1, n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResolutionSide {
    Resolution,
    Coresolution,
}

/// Length of the shortest `A`-(co)resolution built from minimal
/// approximations, searched up to `depth` steps.
pub fn resolution_dim(m: &Module, a: &ClassSpec, depth: usize, side: ResolutionSide, cap: u64) -> DimVerdict {
    let mut current = m.clone();
    for k in 0..=depth {
        match a.contains(&current, cap) {
            Verdict::Yes(_) => return Verdict::Yes(Graded { value: k, window: None }),
            Verdict::Unknown(u) => return Verdict::Unknown(u),
            Verdict::No(_) => {}
        }
        if k == depth {
            break;
        }
        let next = match side {
            ResolutionSide::Resolution => a.right_syzygy(&current).map(|(_, k)| k.source),
            ResolutionSide::Coresolution => a.left_cosyzygy(&current).map(|(_, c)| c.target),
        };
        match next {
            Some(n) => current = n,
            None => return Verdict::No(DimObstruction::ApproximationFails { step: k }),
        }
    }
    Verdict::Unknown(Exhausted::new("depth", format!("no finite resolution within {depth} steps")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{direct_sum, DEFAULT_ENUM_CAP as CAP};

    const LAMBDA: &str = "algebra Lambda over GF(2)\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 1, c: 3 -> 2\nrelations: a*b, b*a\n";

    fn lambda() -> Arc<PathAlgebra> {
        PathAlgebra::from_text(LAMBDA).unwrap()
    }

    #[test]
    fn ext_matches_arrow_and_relation_counts() {
        let alg = lambda();
        let s: Vec<Module> = (0..3).map(|v| Module::simple(&alg, v)).collect();
        assert_eq!(ext_dimension(1, &s[0], &s[1]), 1);
        assert_eq!(ext_dimension(2, &s[0], &s[0]), 1);
        let p3 = Module::projective(&alg, 2);
        for x in &s {
            for i in 1..4 {
                assert_eq!(ext_dimension(i, &p3, x), 0);
            }
        }
    }

    #[test]
    fn ext_via_complex_agrees() {
        let alg = lambda();
        let s: Vec<Module> = (0..3).map(|v| Module::simple(&alg, v)).collect();
        for i in 0..4 {
            for x in &s {
                for y in &s {
                    let a = ext_dimension(i, x, y);
                    assert_eq!(a, ext_dimension_via_complex(i, x, y, false));
                    assert_eq!(a, ext_dimension_via_complex(i, x, y, true));
                }
            }
        }
    }

    #[test]
    fn relative_dimensions() {
        let alg = lambda();
        let px = ClassSpec::new("PX", &alg, vec![Module::projective(&alg, 0), Module::projective(&alg, 1)], CAP).unwrap();
        let p1 = Module::projective(&alg, 0);
        assert_eq!(relative_pd(&p1, &px, 6, CAP), Verdict::Yes(Graded { value: 0, window: None }));
        let s1 = Module::simple(&alg, 0);
        // S(1) is Ext-orthogonal to P(1) and P(2) in every positive degree
        assert_eq!(relative_pd(&s1, &px, 6, CAP), Verdict::Yes(Graded { value: 0, window: None }));
        let simples = ClassSpec::new("S", &alg, (0..3).map(|v| Module::simple(&alg, v)).collect(), CAP).unwrap();
        assert!(matches!(relative_pd(&s1, &simples, 6, CAP), Verdict::No(DimObstruction::Infinite { period: 2 })));
        assert_eq!(check_hereditary_pair(&px, &px, 6, CAP), Truth::True);
        let a = ClassSpec::new("S1", &alg, vec![Module::simple(&alg, 0)], CAP).unwrap();
        let b = ClassSpec::new("S2", &alg, vec![Module::simple(&alg, 1)], CAP).unwrap();
        assert_eq!(check_hereditary_pair(&a, &b, 1, CAP), Truth::False);
        assert!(is_rigid(&px, 3));
        let s12 = ClassSpec::new("S12", &alg, vec![Module::simple(&alg, 0), Module::simple(&alg, 1)], CAP).unwrap();
        assert!(!is_rigid(&s12, 1));
        assert!(is_rigid(&ClassSpec::zero("0", &alg), 4));
    }

    #[test]
    fn resolution_dimensions() {
        let alg = lambda();
        let px = ClassSpec::new("PX", &alg, vec![Module::projective(&alg, 0), Module::projective(&alg, 1)], CAP).unwrap();
        let proj = ClassSpec::new("proj", &alg, vec![Module::regular(&alg)], CAP).unwrap();
        let p1 = Module::projective(&alg, 0);
        assert_eq!(resolution_dim(&p1, &px, 3, ResolutionSide::Resolution, CAP).yes().unwrap().value, 0);
        let s3 = Module::simple(&alg, 2);
        assert_eq!(resolution_dim(&s3, &proj, 3, ResolutionSide::Resolution, CAP).yes().unwrap().value, 1);
        let s1 = Module::simple(&alg, 0);
        assert!(resolution_dim(&s1, &px, 4, ResolutionSide::Resolution, CAP).is_unknown());
    }

    #[test]
    fn complex_checks() {
        let alg = lambda();
        let p1 = Module::projective(&alg, 0);
        let sum = direct_sum(&alg, &[p1.clone(), p1.clone()]);
        let c = ChainComplex::new(0, vec![p1.clone(), sum.module.clone(), p1.clone()], vec![
            sum.projections[1].clone(),
            sum.injections[0].clone(),
        ]);
        assert!(c.verify().exact_everywhere);
        let px = ClassSpec::new("PX", &alg, vec![p1.clone()], CAP).unwrap();
        assert!(is_hom_acyclic(&c, &px, Side::IntoClass));
        assert!(is_hom_acyclic(&c, &px, Side::FromClass));
        let bad = ChainComplex::new(0, vec![p1.clone(), p1.clone(), p1.clone()], vec![
            ModuleMap::identity(&p1),
            ModuleMap::identity(&p1),
        ]);
        assert!(!bad.verify().is_complex);
    }
}
