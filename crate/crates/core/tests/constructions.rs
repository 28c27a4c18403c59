use hjl_core::algebra::{
    check_axioms, check_delta_hom_associative, commutator_algebra, direct_sum, graph_subspace, is_morphism,
    is_subalgebra, AlgebraMorphism,
};
use hjl_core::derivations::{derivation_extension, derivation_space};
use hjl_core::fixtures;
use hjl_core::linalg::int;
use hjl_core::quadratic::{jordancyclic_cocycles, tstar_extension};
use hjl_core::representations::{
    adjoint_representation, central_extension, coadjoint_representation, cohomology2, semidirect_product,
    trivial_representation,
};
use hjl_core::{HjlAlgebra, Matrix, Sign, Tensor3};
use proptest::prelude::*;

fn passing(l: &HjlAlgebra) -> bool {
    check_axioms(l).is_multiplicative_algebra()
}

#[test]
fn corpus_passes_axioms() {
    for (name, l) in fixtures::corpus() {
        assert!(check_axioms(&l).all_hold(), "{name}");
    }
}

#[test]
fn every_constructor_yields_valid_algebras() {
    let corpus = fixtures::corpus();
    for (name, l) in &corpus {
        for (other, g) in &corpus {
            if l.delta() == g.delta() && l.dim() + g.dim() <= 6 {
                assert!(passing(&direct_sum(l, g).unwrap()), "{name} + {other}");
            }
        }
        for d in derivation_space(l, 1).unwrap() {
            if let Ok(ext) = derivation_extension(l, &d) {
                assert!(passing(&ext), "{name} extended by {d:?}");
            }
        }
        let mut reps = vec![trivial_representation(l)];
        reps.extend(adjoint_representation(l, 0).ok());
        reps.extend(coadjoint_representation(l));
        for r in &reps {
            assert!(passing(&semidirect_product(r).unwrap()), "{name} semidirect");
        }
        for theta in cohomology2(&trivial_representation(l)).unwrap().z2 {
            assert!(passing(&central_extension(l, &theta).unwrap()), "{name} central");
        }
        if coadjoint_representation(l).is_some() {
            let n = l.dim();
            let mut ws = vec![Tensor3::zeros((n, n, n))];
            ws.extend(jordancyclic_cocycles(l).unwrap());
            for w in ws {
                assert!(passing(tstar_extension(l, &w).unwrap().algebra()), "{name} T*");
            }
        }
    }
    let ut = fixtures::upper_triangular();
    assert!(check_delta_hom_associative(&ut).holds());
    assert!(passing(&commutator_algebra(&ut).unwrap()));
}

fn map_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..3, rows * cols).prop_map(move |d| Matrix::from_i64(rows, cols, &d))
}

proptest! {
    #[test]
    fn graph_is_subalgebra_iff_morphism(phi in map_strategy(3, 3)) {
        let h = fixtures::heisenberg();
        let m = AlgebraMorphism::new(h.clone(), h, phi).unwrap();
        let sum = direct_sum(m.source(), m.target()).unwrap();
        prop_assert_eq!(is_subalgebra(&sum, &graph_subspace(&m)).unwrap(), is_morphism(&m));
    }

    #[test]
    fn graph_criterion_across_algebras(phi in map_strategy(2, 2)) {
        for l in [fixtures::aff2(), fixtures::aff2_twisted(), fixtures::symmetric_plane()] {
            let m = AlgebraMorphism::new(l.clone(), l, phi.clone()).unwrap();
            let sum = direct_sum(m.source(), m.target()).unwrap();
            prop_assert_eq!(is_subalgebra(&sum, &graph_subspace(&m)).unwrap(), is_morphism(&m));
        }
    }

    #[test]
    fn commutator_of_random_associative_table(entries in proptest::collection::vec(-1i64..2, 8), a in 1i64..3) {
        let mut m = Tensor3::zeros((2, 2, 2));
        for (idx, x) in entries.iter().enumerate() {
            m.set(idx / 4, (idx / 2) % 2, idx % 2, int(*x));
        }
        for delta in [Sign::Plus, Sign::Minus] {
            let alg = hjl_core::algebra::DeltaHomAssociative::new(delta, m.clone(), Matrix::identity(2).scale(&int(a))).unwrap();
            if check_delta_hom_associative(&alg).holds() {
                let l = commutator_algebra(&alg).unwrap();
                let report = check_axioms(&l);
                prop_assert!(report.jordan_symmetric.holds() && report.hom_jacobi.holds());
            }
        }
    }
}
