use hjl_core::algebra::{check_axioms, is_ideal};
use hjl_core::fixtures;
use hjl_core::linalg::int;
use hjl_core::quadratic::{
    check_length_bounds, equivalence_map_report, form_invariance, hyperbolic_form, is_isotropic, is_jordancyclic,
    jordancyclic_cocycles, reconstruct_from_isotropic_ideal, tstar_bracket, tstar_coboundary, tstar_cocycle_report,
    tstar_equivalence, tstar_extension,
};
use hjl_core::representations::{coadjoint_representation, cochain2_space};
use hjl_core::{HjlAlgebra, Matrix, Subspace, Tensor3};
use proptest::prelude::*;

fn with_coadjoint() -> Vec<(&'static str, HjlAlgebra)> {
    fixtures::corpus()
        .into_iter()
        .filter(|(_, l)| coadjoint_representation(l).is_some())
        .collect()
}

fn extensions() -> Vec<(String, HjlAlgebra, Tensor3)> {
    let mut out = Vec::new();
    for (name, l) in with_coadjoint() {
        let n = l.dim();
        out.push((format!("{name}/zero"), l.clone(), Tensor3::zeros((n, n, n))));
        for (idx, w) in jordancyclic_cocycles(&l).unwrap().into_iter().enumerate() {
            out.push((format!("{name}/{idx}"), l.clone(), w));
        }
    }
    out
}

#[test]
fn extensions_are_quadratic_with_abelian_dual_ideal() {
    for (name, l, w) in extensions() {
        let n = l.dim();
        let t = tstar_extension(&l, &w).unwrap();
        assert_eq!(t.form().rank(), 2 * n, "{name}");
        let dual = Subspace::coordinate(2 * n, n..2 * n);
        assert!(is_ideal(t.algebra(), &dual).unwrap(), "{name}");
        for a in n..2 * n {
            for b in n..2 * n {
                assert!(t.algebra().br_basis(a, b).iter().all(|x| x == &int(0)), "{name}");
            }
        }
    }
}

#[test]
fn round_trip_through_reconstruction() {
    for (name, l, w) in extensions() {
        let n = l.dim();
        let t = tstar_extension(&l, &w).unwrap();
        let dual = Subspace::coordinate(2 * n, n..2 * n);
        // every isotropic half-dimension ideal is abelian
        assert!(is_isotropic(t.form(), &dual).unwrap());
        let r = reconstruct_from_isotropic_ideal(&t, &dual).unwrap();
        let pulled = &(&r.phi.transpose() * r.extension.form()) * &r.phi;
        assert_eq!(&pulled, t.form(), "{name}");
        assert_eq!(r.base.dim(), n);
        assert!(check_axioms(r.extension.algebra()).all_hold(), "{name}");
    }
}

#[test]
fn length_bounds_on_corpus() {
    let mut violations = Vec::new();
    for (name, l, w) in extensions() {
        if l.dim() == 0 {
            continue;
        }
        let b = check_length_bounds(&l, &w).unwrap();
        assert!(b.solvable.as_ref().is_none_or(|s| s.holds()), "{name}");
        if let Some(nil) = &b.nilpotent {
            // r ≤ 2k always holds
            assert!(nil.r.is_some_and(|r| nil.k <= r && r <= 2 * nil.k), "{name}");
            if !nil.holds() {
                violations.push((name.clone(), nil.k, nil.r));
            }
        }
    }
    // an abelian algebra (k = 1) with a nonzero cocycle gives r = 2 > 2k − 1
    assert_eq!(violations, vec![("abelian3/0".to_string(), 1, Some(2))]);
}

#[test]
fn cocycle_conditions_agree() {
    for (name, l) in with_coadjoint() {
        let r = coadjoint_representation(&l).unwrap();
        for w in cochain2_space(&r) {
            // errors if the two formulations disagree
            tstar_cocycle_report(&l, &w).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn non_isometric_equivalence_has_exact_form_defect() {
    // z = e1* ⊗ e1 on h3 has zero coboundary, so it relates ω to itself
    let h = fixtures::heisenberg();
    let w = jordancyclic_cocycles(&h).unwrap().remove(0);
    let z = Matrix::diagonal(&[int(1), int(0), int(0)]);
    assert!(tstar_coboundary(&h, &z).is_zero());
    let report = equivalence_map_report(&h, &w, &w, &z).unwrap();
    assert!(report.is_equivalence());
    assert!(!report.isometric);
    assert!(report.isometry_defect);
    assert!(report.symmetric_part_invariant.holds());
    assert!(tstar_equivalence(&h, &w, &w, true).unwrap().isometric());
}

#[test]
fn no_compat_reading_widens_the_search() {
    let l = fixtures::abelian_n(3);
    let w = jordancyclic_cocycles(&l).unwrap().remove(0);
    let zero = Tensor3::zeros((3, 3, 3));
    for compat in [true, false] {
        assert!(!tstar_equivalence(&l, &w, &zero, compat).unwrap().equivalent());
    }
}

fn sign_rule_tensor(entries: Vec<i64>) -> Tensor3 {
    // skew completion of the entries above the diagonal on a dim-2 algebra
    let mut w = Tensor3::zeros((2, 2, 2));
    w.set(0, 1, 0, int(entries[0]));
    w.set(1, 0, 0, int(-entries[0]));
    w.set(0, 1, 1, int(entries[1]));
    w.set(1, 0, 1, int(-entries[1]));
    w
}

proptest! {
    #[test]
    fn invariance_iff_jordancyclic(entries in proptest::collection::vec(-2i64..3, 2), raw in proptest::collection::vec(-1i64..2, 8)) {
        let l = fixtures::aff2();
        let q = hyperbolic_form(2);
        let w = sign_rule_tensor(entries);
        prop_assert_eq!(form_invariance(&tstar_bracket(&l, &w), &q).holds(), is_jordancyclic(&w).holds());
        let raw = Tensor3::from_flat((2, 2, 2), &raw.iter().map(|&x| int(x)).collect::<Vec<_>>());
        prop_assert_eq!(form_invariance(&tstar_bracket(&l, &raw), &q).holds(), is_jordancyclic(&raw).holds());
    }
}
