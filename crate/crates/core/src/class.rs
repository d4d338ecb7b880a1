//! Classes of modules given as `add` of finitely many generators, together
//! with minimal approximations by such classes.

use std::sync::Arc;

use crate::linalg::{RowSpace, Scalar};
use crate::module::{
    cokernel, decompose, direct_sum, hom_dim, is_isomorphic, kernel, map_from_sum, map_into_sum, HomSpace, Module,
    ModuleError, ModuleMap,
};
use crate::quiver::PathAlgebra;
use crate::verdict::{Exhausted, Verdict};

/// An indecomposable summand of the generators together with the data
/// needed for minimal approximations.
#[derive(Debug, Clone)]
pub struct Indecomposable {
    pub module: Module,
    /// Basis of `End(X)`.
    pub end_basis: Vec<ModuleMap>,
    /// Basis of the radical of `End(X)` (its nilpotent elements).
    pub rad_basis: Vec<ModuleMap>,
}

impl Indecomposable {
    fn new(module: Module, cap: u64) -> Result<Self, ModuleError> {
        let space = HomSpace::new(&module, &module)?;
        let n = module.total_dim().max(1) as u64;
        let nilpotent = |v: &[Scalar]| space.blocks_of(v).iter().all(|b| b.pow(n).is_zero());
        // End(X) is local, so its nilpotent elements form the radical
        let mut rad = RowSpace::new(module.p(), space.width());
        let mut rad_vectors: Vec<Vec<Scalar>> = Vec::new();
        let (_, complete) = crate::module::search_hom(&space, cap, |v| {
            if !rad.contains(v) && nilpotent(v) {
                rad.insert(v);
                rad_vectors.push(v.to_vec());
            }
            false
        });
        if !complete {
            return Err(ModuleError::EnumerationCapExceeded { dim: space.dim(), cap });
        }
        Ok(Indecomposable {
            end_basis: space.maps(),
            rad_basis: rad_vectors.iter().map(|v| space.map_of(v)).collect(),
            module,
        })
    }

    /// Dimension of `End(X) / rad End(X)` over the ground field.
    pub fn residue_dim(&self) -> usize {
        self.end_basis.len() - self.rad_basis.len()
    }
}

/// `add(generators)`: finite sums of summands of the generators.
#[derive(Debug, Clone)]
pub struct ClassSpec {
    pub name: String,
    pub alg: Arc<PathAlgebra>,
    pub generators: Vec<Module>,
    pub indecomposables: Vec<Indecomposable>,
    /// `radical[j][i]`: basis of radical maps `X_j -> X_i`.
    radical: Vec<Vec<Vec<ModuleMap>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct NotInAdd {
    /// Dimension vector of an indecomposable summand matching no class member.
    pub summand_dims: Vec<usize>,
}

/// A minimal approximation together with the multiplicity of each class
/// indecomposable in its middle term.
#[derive(Debug, Clone)]
pub struct Approximation {
    pub map: ModuleMap,
    pub multiplicities: Vec<usize>,
}

impl ClassSpec {
    pub fn new(name: &str, alg: &Arc<PathAlgebra>, generators: Vec<Module>, cap: u64) -> Result<ClassSpec, ModuleError> {
        let mut indecs: Vec<Module> = Vec::new();
        for g in &generators {
            if !g.same_algebra(&Module::zero(alg)) {
                return Err(ModuleError::AlgebraMismatch);
            }
            for x in decompose(g, cap)? {
                let mut known = false;
                for y in &indecs {
                    match is_isomorphic(&x, y, cap) {
                        Verdict::Yes(_) => {
                            known = true;
                            break;
                        }
                        Verdict::No(_) => {}
                        Verdict::Unknown(_) => {
                            return Err(ModuleError::EnumerationCapExceeded { dim: x.total_dim(), cap })
                        }
                    }
                }
                if !known {
                    indecs.push(x);
                }
            }
        }
        // deterministic order: by dimension vector then total dimension
        indecs.sort_by(|a, b| (a.total_dim(), &a.dims).cmp(&(b.total_dim(), &b.dims)));
        let indecomposables =
            indecs.into_iter().map(|m| Indecomposable::new(m, cap)).collect::<Result<Vec<_>, _>>()?;
        let radical = indecomposables
            .iter()
            .enumerate()
            .map(|(j, xj)| {
                indecomposables
                    .iter()
                    .enumerate()
                    .map(|(i, xi)| {
                        if i == j {
                            xj.rad_basis.clone()
                        } else {
                            HomSpace::new(&xj.module, &xi.module).expect("same algebra").maps()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(ClassSpec { name: name.to_string(), alg: alg.clone(), generators, indecomposables, radical })
    }

    pub fn zero(name: &str, alg: &Arc<PathAlgebra>) -> ClassSpec {
        ClassSpec { name: name.to_string(), alg: alg.clone(), generators: Vec::new(), indecomposables: Vec::new(), radical: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.indecomposables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecomposables.is_empty()
    }

    pub fn modules(&self) -> Vec<Module> {
        self.indecomposables.iter().map(|x| x.module.clone()).collect()
    }

    /// The class of duals over the opposite algebra.
    pub fn dualize(&self, cap: u64) -> Result<ClassSpec, ModuleError> {
        let op = self.alg.opposite();
        let gens = self.generators.iter().map(|g| g.dualize()).collect();
        ClassSpec::new(&format!("D({})", self.name), &op, gens, cap)
    }

    /// Index of the class indecomposable isomorphic to `x`, if any.
    pub fn find(&self, x: &Module, cap: u64) -> Verdict<usize, ()> {
        let mut unknown = false;
        for (i, y) in self.indecomposables.iter().enumerate() {
            match is_isomorphic(x, &y.module, cap) {
                Verdict::Yes(_) => return Verdict::Yes(i),
                Verdict::No(_) => {}
                Verdict::Unknown(_) => unknown = true,
            }
        }
        if unknown {
            Verdict::Unknown(Exhausted::new("hom_enum_cap", "isomorphism test undecided"))
        } else {
            Verdict::No(())
        }
    }

    /// Membership in `add`; `Yes` carries the multiplicity of each class
    /// indecomposable.
    pub fn contains(&self, m: &Module, cap: u64) -> Verdict<Vec<usize>, NotInAdd> {
        let parts = match decompose(m, cap) {
            Ok(p) => p,
            Err(e) => return Verdict::Unknown(Exhausted::new("hom_enum_cap", e.to_string())),
        };
        let mut mult = vec![0; self.len()];
        for x in parts {
            match self.find(&x, cap) {
                Verdict::Yes(i) => mult[i] += 1,
                Verdict::No(()) => return Verdict::No(NotInAdd { summand_dims: x.dims.clone() }),
                Verdict::Unknown(u) => return Verdict::Unknown(u),
            }
        }
        Verdict::Yes(mult)
    }

    /// `⊕ X_i^{n_i}`.
    pub fn sum(&self, multiplicities: &[usize]) -> Module {
        let parts: Vec<Module> = self
            .indecomposables
            .iter()
            .zip(multiplicities)
            .flat_map(|(x, &n)| std::iter::repeat_n(x.module.clone(), n))
            .collect();
        direct_sum(&self.alg, &parts).module
    }

    pub fn dim_vector(&self, multiplicities: &[usize]) -> Vec<usize> {
        let mut d = vec![0; self.alg.num_vertices()];
        for (x, &n) in self.indecomposables.iter().zip(multiplicities) {
            for (acc, v) in d.iter_mut().zip(&x.module.dims) {
                *acc += n * v;
            }
        }
        d
    }

    /// Minimal left approximation `w -> E` with `E` in the class.
    pub fn left_approximation(&self, w: &Module) -> Approximation {
        let spaces: Vec<HomSpace> =
            self.indecomposables.iter().map(|x| HomSpace::new(w, &x.module).expect("same algebra")).collect();
        let mut chosen: Vec<(usize, ModuleMap)> = Vec::new();
        let mut multiplicities = vec![0; self.len()];
        for (i, xi) in self.indecomposables.iter().enumerate() {
            let space = &spaces[i];
            let mut v = RowSpace::new(w.p(), space.width());
            for (j, sj) in spaces.iter().enumerate() {
                for rho in &self.radical[j][i] {
                    for h in sj.maps() {
                        v.insert(&h.then(rho).to_vec());
                    }
                }
            }
            for b in 0..space.dim() {
                if v.dim() == space.dim() {
                    break;
                }
                let g = space.map(b);
                if v.contains(&g.to_vec()) {
                    continue;
                }
                for u in &xi.end_basis {
                    v.insert(&g.then(u).to_vec());
                }
                chosen.push((i, g));
                multiplicities[i] += 1;
            }
        }
        chosen.sort_by_key(|(i, _)| *i);
        let parts: Vec<Module> = chosen.iter().map(|(_, g)| g.target.clone()).collect();
        let maps: Vec<ModuleMap> = chosen.into_iter().map(|(_, g)| g).collect();
        let sum = direct_sum(&self.alg, &parts);
        Approximation { map: map_into_sum(w, &sum, &maps), multiplicities }
    }

    /// Minimal right approximation `E -> w` with `E` in the class.
    pub fn right_approximation(&self, w: &Module) -> Approximation {
        let spaces: Vec<HomSpace> =
            self.indecomposables.iter().map(|x| HomSpace::new(&x.module, w).expect("same algebra")).collect();
        let mut chosen: Vec<(usize, ModuleMap)> = Vec::new();
        let mut multiplicities = vec![0; self.len()];
        for (i, xi) in self.indecomposables.iter().enumerate() {
            let space = &spaces[i];
            let mut v = RowSpace::new(w.p(), space.width());
            for (j, sj) in spaces.iter().enumerate() {
                for rho in &self.radical[i][j] {
                    for h in sj.maps() {
                        v.insert(&rho.then(&h).to_vec());
                    }
                }
            }
            for b in 0..space.dim() {
                if v.dim() == space.dim() {
                    break;
                }
                let g = space.map(b);
                if v.contains(&g.to_vec()) {
                    continue;
                }
                for u in &xi.end_basis {
                    v.insert(&u.then(&g).to_vec());
                }
                chosen.push((i, g));
                multiplicities[i] += 1;
            }
        }
        chosen.sort_by_key(|(i, _)| *i);
        let parts: Vec<Module> = chosen.iter().map(|(_, g)| g.source.clone()).collect();
        let maps: Vec<ModuleMap> = chosen.into_iter().map(|(_, g)| g).collect();
        let sum = direct_sum(&self.alg, &parts);
        Approximation { map: map_from_sum(&sum, w, &maps), multiplicities }
    }

    /// Cokernel of the minimal left approximation, when it is a monomorphism.
    pub fn left_cosyzygy(&self, w: &Module) -> Option<(Approximation, ModuleMap)> {
        let approx = self.left_approximation(w);
        if !approx.map.is_injective() {
            return None;
        }
        let coker = cokernel(&approx.map);
        Some((approx, coker))
    }

    /// Kernel of the minimal right approximation, when it is an epimorphism.
    pub fn right_syzygy(&self, w: &Module) -> Option<(Approximation, ModuleMap)> {
        let approx = self.right_approximation(w);
        if !approx.map.is_surjective() {
            return None;
        }
        let ker = kernel(&approx.map);
        Some((approx, ker))
    }

    /// `dim Hom(X_i, m)` for each class indecomposable.
    pub fn hom_from(&self, m: &Module) -> Vec<usize> {
        self.indecomposables.iter().map(|x| hom_dim(&x.module, m)).collect()
    }

    /// `dim Hom(m, X_i)` for each class indecomposable.
    pub fn hom_into(&self, m: &Module) -> Vec<usize> {
        self.indecomposables.iter().map(|x| hom_dim(m, &x.module)).collect()
    }

    /// Whether every class indecomposable lies in `other`.
    pub fn is_subclass_of(&self, other: &ClassSpec, cap: u64) -> Verdict<(), usize> {
        for (i, x) in self.indecomposables.iter().enumerate() {
            match other.find(&x.module, cap) {
                Verdict::Yes(_) => {}
                Verdict::No(()) => return Verdict::No(i),
                Verdict::Unknown(u) => return Verdict::Unknown(u),
            }
        }
        Verdict::Yes(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::DEFAULT_ENUM_CAP as CAP;

    const LAMBDA: &str = "algebra Lambda over GF(2)\nvertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 1, c: 3 -> 2\nrelations: a*b, b*a\n";

    fn setup() -> (Arc<PathAlgebra>, ClassSpec) {
        let alg = PathAlgebra::from_text(LAMBDA).unwrap();
        let gens = vec![Module::projective(&alg, 0), Module::projective(&alg, 1)];
        let px = ClassSpec::new("PX", &alg, gens, CAP).unwrap();
        (alg, px)
    }

    #[test]
    fn add_membership() {
        let (alg, px) = setup();
        let p12 = direct_sum(&alg, &[Module::projective(&alg, 0), Module::projective(&alg, 1)]).module;
        assert!(px.contains(&p12, CAP).is_yes());
        assert!(px.contains(&Module::projective(&alg, 2), CAP).is_no());
        assert!(px.contains(&Module::zero(&alg), CAP).is_yes());
    }

    #[test]
    fn radicals_of_local_endomorphism_rings() {
        let (_, px) = setup();
        for x in &px.indecomposables {
            assert_eq!(x.end_basis.len(), 1);
            assert_eq!(x.rad_basis.len(), 0);
            assert_eq!(x.residue_dim(), 1);
        }
        let nak = PathAlgebra::from_text("algebra N over GF(2)\nvertices: 1\narrows: x: 1 -> 1\nrelations: x*x*x*x\n").unwrap();
        let c = ClassSpec::new("proj", &nak, vec![Module::projective(&nak, 0)], CAP).unwrap();
        assert_eq!(c.indecomposables[0].rad_basis.len(), 3);
    }

    #[test]
    fn approximations_of_simples() {
        let (alg, px) = setup();
        let s1 = Module::simple(&alg, 0);
        let (approx, coker) = px.left_cosyzygy(&s1).unwrap();
        assert_eq!(approx.multiplicities.iter().sum::<usize>(), 1);
        assert!(is_isomorphic(&approx.map.target, &Module::projective(&alg, 1), CAP).is_yes());
        assert!(is_isomorphic(&coker.target, &Module::simple(&alg, 1), CAP).is_yes());
        assert!(px.left_cosyzygy(&Module::projective(&alg, 2)).is_none());
        let right = px.right_approximation(&s1);
        assert!(is_isomorphic(&right.map.source, &Module::projective(&alg, 0), CAP).is_yes());
    }

    #[test]
    fn approximation_of_class_member_is_iso() {
        let (alg, px) = setup();
        let p1 = Module::projective(&alg, 0);
        let a = px.left_approximation(&p1);
        assert!(a.map.is_isomorphism());
        let b = px.right_approximation(&p1);
        assert!(b.map.is_isomorphism());
    }
}
