use num_traits::Zero;

use crate::algebra::{check_axioms, morphism_report, AlgebraMorphism, HjlAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{matrix_of_linear_map, scale_vector, sub_vectors, Matrix, Tensor3};

use super::cochains::{cochain1_space, cochain2_report, d1, d2};
use super::{check_representation, trivial_representation, Representation};

/// `L ⊕ V` with `[u+X, v+Y] = [u,v] + δρ(u)Y − ρ(v)X` and twist `α ⊕ A`,
/// built without checks.
pub fn semidirect_product_unchecked(r: &Representation) -> Result<HjlAlgebra> {
    let l = r.algebra();
    let (n, m) = (l.dim(), r.module_dim());
    let d = l.delta().rational();
    let mut bracket = Tensor3::zeros((n + m, n + m, n + m));
    for ((i, j, k), c) in l.bracket().iter() {
        bracket.set(i, j, k, c.clone());
    }
    for (i, rho) in r.rho().iter().enumerate() {
        for a in 0..m {
            for b in 0..m {
                let x = &rho[(b, a)];
                if x.is_zero() {
                    continue;
                }
                bracket.set(i, n + a, n + b, &d * x);
                bracket.set(n + a, i, n + b, -x);
            }
        }
    }
    HjlAlgebra::new(l.delta(), bracket, l.alpha().block_diag(r.a()))
}

/// The semidirect product of a valid representation. The result is checked
/// against the axioms, since for `δ = −1` they need more than the
/// representation identities.
pub fn semidirect_product(r: &Representation) -> Result<HjlAlgebra> {
    let base = check_axioms(r.algebra());
    base.jordan_symmetric.require("Jordan symmetry of the base algebra")?;
    base.hom_jacobi.require("hom-Jacobi identity of the base algebra")?;
    base.multiplicative.require("multiplicativity of the base algebra")?;
    let report = check_representation(r);
    report.twist.require("representation twist identity")?;
    report.bracket.require("representation bracket identity")?;
    let out = semidirect_product_unchecked(r)?;
    let axioms = check_axioms(&out);
    axioms
        .hom_jacobi
        .require("hom-Jacobi identity of the semidirect product")?;
    axioms
        .multiplicative
        .require("multiplicativity of the semidirect product")?;
    Ok(out)
}

/// `L ⊕ Qz` with `[u, v]_θ = [u, v] + θ(u, v) z` and twist `α ⊕ 1`. Checks
/// only shape and the sign rule.
pub fn central_extension_unchecked(l: &HjlAlgebra, theta: &Tensor3) -> Result<HjlAlgebra> {
    let n = l.dim();
    let r = trivial_representation(l);
    let report = cochain2_report(&r, theta)?;
    if let Some(w) = report.sign_rule.witness() {
        return Err(Error::SignRule {
            i: w.indices[0],
            j: w.indices[1],
            k: 0,
        });
    }
    let mut bracket = Tensor3::zeros((n + 1, n + 1, n + 1));
    for ((i, j, k), c) in l.bracket().iter() {
        bracket.set(i, j, k, c.clone());
    }
    for ((i, j, _), c) in theta.iter() {
        bracket.set(i, j, n, c.clone());
    }
    HjlAlgebra::new(l.delta(), bracket, l.alpha().block_diag(&Matrix::identity(1)))
}

/// Central extension by a closed, compatible, Jordan-symmetric θ.
pub fn central_extension(l: &HjlAlgebra, theta: &Tensor3) -> Result<HjlAlgebra> {
    let r = trivial_representation(l);
    let report = cochain2_report(&r, theta)?;
    if let Some(w) = report.sign_rule.witness() {
        return Err(Error::SignRule {
            i: w.indices[0],
            j: w.indices[1],
            k: 0,
        });
    }
    report.compatible.require("theta commutes with alpha")?;
    if let Some(witness) = d2(&r, theta)?.first_nonzero() {
        return Err(Error::Violated {
            condition: "d2 theta = 0",
            witness,
        });
    }
    central_extension_unchecked(l, theta)
}

/// Looks for `f` with `θ₁ − θ₂ = δ·d_T f` and `fα = f`. On success the map
/// `(u, s) ↦ (u, s + f(u))` is verified to be an isomorphism of the two
/// central extensions before `f` (a `1 × n` row) is returned.
pub fn central_extensions_equivalent(l: &HjlAlgebra, theta1: &Tensor3, theta2: &Tensor3) -> Result<Option<Matrix>> {
    let ext1 = central_extension(l, theta1)?;
    let ext2 = central_extension(l, theta2)?;
    let r = trivial_representation(l);
    let n = l.dim();
    let d = l.delta().rational();
    let basis = cochain1_space(&r);
    let combine = |c: &[crate::linalg::Rational]| {
        let mut f = Matrix::zeros(1, n);
        for (x, b) in c.iter().zip(&basis) {
            f = &f + &b.scale(x);
        }
        f
    };
    let system = matrix_of_linear_map(basis.len(), n * n, |c| {
        scale_vector(&d, &d1(&r, &combine(c)).expect("shape").to_flat())
    });
    let rhs = sub_vectors(&theta1.to_flat(), &theta2.to_flat());
    let Some(coeffs) = system.solve(&rhs) else {
        return Ok(None);
    };
    let f = combine(&coeffs);

    let mut phi = Matrix::identity(n + 1);
    for c in 0..n {
        phi[(n, c)] = f[(0, c)].clone();
    }
    let report = morphism_report(&AlgebraMorphism::new(ext1, ext2, phi)?);
    report.brackets.require("equivalence map preserves brackets")?;
    report.twists.require("equivalence map commutes with twists")?;
    Ok(Some(f))
}
