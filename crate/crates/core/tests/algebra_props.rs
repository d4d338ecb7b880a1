//! Randomized checks of the exact linear algebra and module layers.

use std::sync::Arc;

use gorenlab::linalg::{Matrix, Scalar};
use gorenlab::module::{cokernel, decompose, direct_sum, hom_dim, is_isomorphic, kernel, Module, ModuleMap, DEFAULT_ENUM_CAP};
use gorenlab::quiver::PathAlgebra;
use proptest::prelude::*;

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (0usize..4, 0usize..6, 0usize..6).prop_flat_map(|(pi, r, c)| {
        let p = PRIMES[pi];
        prop::collection::vec(0..p, r * c).prop_map(move |entries| Matrix { p, rows: r, cols: c, entries })
    })
}

fn is_rref(m: &Matrix, pivots: &[usize]) -> bool {
    for (i, &pc) in pivots.iter().enumerate() {
        if m.get(i, pc) != 1 {
            return false;
        }
        if (0..m.rows).any(|r| r != i && m.get(r, pc) != 0) {
            return false;
        }
        if (0..pc).any(|c| m.get(i, c) != 0) {
            return false;
        }
    }
    pivots.windows(2).all(|w| w[0] < w[1]) && (pivots.len()..m.rows).all(|r| m.row(r).iter().all(|&v| v == 0))
}

proptest! {
    #[test]
    fn rref_is_reduced_and_idempotent(m in matrix_strategy()) {
        let r = m.rref();
        prop_assert!(is_rref(&r.reduced, &r.pivots));
        prop_assert_eq!(r.rank, r.pivots.len());
        let again = r.reduced.rref();
        prop_assert_eq!(&again.reduced, &r.reduced);
        // same row space: stacking adds no rank
        prop_assert_eq!(m.vstack(&r.reduced).rank(), r.rank);
    }

    #[test]
    fn rank_nullity(m in matrix_strategy()) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.len() + m.rank(), m.cols);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
        if !k.is_empty() {
            let km = Matrix::from_columns(m.p, m.cols, &k);
            prop_assert_eq!(km.rank(), k.len());
        }
    }

    #[test]
    fn solve_is_sound_and_complete(m in matrix_strategy(), seed in prop::collection::vec(0u32..7, 6)) {
        let x0: Vec<Scalar> = (0..m.cols).map(|i| seed[i] % m.p).collect();
        let b = m.mul_vec(&x0);
        let x = m.solve(&b).unwrap();
        prop_assert!(x.is_some());
        prop_assert_eq!(m.mul_vec(&x.unwrap()), b);
        // a right-hand side outside the column space has no solution
        if m.rank() < m.rows {
            let f = m.field();
            let found = (0..m.rows).find_map(|i| {
                let mut e = vec![0; m.rows];
                e[i] = f.from_i64(1);
                m.solve(&e).unwrap().is_none().then_some(())
            });
            prop_assert!(found.is_some());
        }
    }

    #[test]
    fn transpose_reverses_products(a in matrix_strategy(), c in 0usize..5) {
        let b = Matrix { p: a.p, rows: a.cols, cols: c, entries: (0..a.cols * c).map(|i| (i as u32 * 7 + 3) % a.p).collect() };
        let ab = a.mul(&b);
        prop_assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
        prop_assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn inverse_of_invertible(m in matrix_strategy()) {
        if m.is_square() && m.is_invertible() {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(m.mul(&inv), Matrix::identity(m.p, m.rows));
        }
    }
}

fn kronecker() -> Arc<PathAlgebra> {
    PathAlgebra::from_text("algebra K over GF(2)\nvertices: 1 2\narrows: a: 1 -> 2, b: 1 -> 2\n").unwrap()
}

fn lambda() -> Arc<PathAlgebra> {
    PathAlgebra::from_text(gorenlab::corpus::LAMBDA).unwrap()
}

/// Random Kronecker representations (no relations, so every pair of
/// matrices is a module).
fn kronecker_module() -> impl Strategy<Value = Module> {
    (0usize..3, 0usize..3).prop_flat_map(|(d1, d2)| {
        let n = d1 * d2;
        (prop::collection::vec(0u32..2, n), prop::collection::vec(0u32..2, n)).prop_map(move |(x, y)| {
            let alg = kronecker();
            let a = Matrix { p: 2, rows: d2, cols: d1, entries: x };
            let b = Matrix { p: 2, rows: d2, cols: d1, entries: y };
            Module::new(alg, vec![d1, d2], vec![a, b]).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn duality_is_an_involution(m in kronecker_module()) {
        let dd = m.dualize().dualize();
        prop_assert!(is_isomorphic(&m, &dd, DEFAULT_ENUM_CAP).is_yes());
        prop_assert_eq!(hom_dim(&m, &m), hom_dim(&m.dualize(), &m.dualize()));
    }

    #[test]
    fn hom_from_projectives_counts_dimensions(m in kronecker_module()) {
        let alg = kronecker();
        for v in 0..2 {
            prop_assert_eq!(hom_dim(&Module::projective(&alg, v), &m), m.dims[v]);
            prop_assert_eq!(hom_dim(&m, &Module::injective(&alg, v)), m.dims[v]);
        }
    }

    #[test]
    fn decomposition_reassembles(m in kronecker_module()) {
        let parts = decompose(&m, DEFAULT_ENUM_CAP).unwrap();
        let total: usize = parts.iter().map(Module::total_dim).sum();
        prop_assert_eq!(total, m.total_dim());
        if !parts.is_empty() {
            let s = direct_sum(&m.alg, &parts).module;
            prop_assert!(is_isomorphic(&s, &m, DEFAULT_ENUM_CAP).is_yes());
        }
    }

    #[test]
    fn kernel_and_cokernel_are_exact(m in kronecker_module(), n in kronecker_module(), pick in 0usize..64) {
        let maps = gorenlab::module::HomSpace::new(&m, &n).unwrap().maps();
        if !maps.is_empty() {
            let f = &maps[pick % maps.len()];
            let k = kernel(f);
            let c = cokernel(f);
            prop_assert!(k.is_injective());
            prop_assert!(c.is_surjective());
            prop_assert!(k.then(f).is_zero());
            prop_assert!(f.then(&c).is_zero());
            prop_assert_eq!(k.source.total_dim() + f.rank(), m.total_dim());
            prop_assert_eq!(c.target.total_dim() + f.rank(), n.total_dim());
        }
    }
}

#[test]
fn lambda_projectives_satisfy_relations_and_dualize() {
    let alg = lambda();
    let op = alg.opposite();
    for v in 0..3 {
        let p = Module::projective(&alg, v);
        assert!(p.violated_relation().is_none());
        assert_eq!(p.dims, alg.projective_dims(v));
        // D(I(v)) over the opposite algebra is its projective at v
        let di = Module::injective(&alg, v).dualize();
        assert!(is_isomorphic(&di, &Module::projective(&op, v), DEFAULT_ENUM_CAP).is_yes());
    }
    let id = ModuleMap::identity(&Module::regular(&alg));
    assert!(id.is_isomorphism());
}
