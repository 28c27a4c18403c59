//! Representations `ρ_A: L → End(V)`, the twisted cochain complex in degrees
//! one and two, and the algebras built from them.
//!
//! A representation stores `A` and one matrix `ρ(e_i)` per basis element. It
//! is valid when `ρ(αu)A = Aρ(u)` and `ρ([u,v])A = ρ(αu)ρ(v) − δρ(αv)ρ(u)`.

mod cochains;
mod extensions;

pub use cochains::{
    cochain1_report, cochain1_space, cochain2_report, cochain2_space, cocycle_derivation_match, cohomology2, d1, d2,
    z1, Cochain2Report, Cochain3, CocycleDerivationMatch, Cohomology2,
};
pub use extensions::{
    central_extension, central_extension_unchecked, central_extensions_equivalent, semidirect_product,
    semidirect_product_unchecked,
};

use crate::algebra::HjlAlgebra;
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{add_vectors, scale_vector, Matrix, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: HjlAlgebra,
    a: Matrix,
    rho: Vec<Matrix>,
}

impl Representation {
    /// Validates shapes only; see [`check_representation`] for the axioms.
    pub fn new(algebra: HjlAlgebra, a: Matrix, rho: Vec<Matrix>) -> Result<Self> {
        let m = a.rows();
        if !a.is_square() {
            return Err(Error::Shape(format!(
                "module twist is {}x{}, expected square",
                a.rows(),
                a.cols()
            )));
        }
        if rho.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of dimension {}",
                rho.len(),
                algebra.dim()
            )));
        }
        if let Some(i) = rho.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::Shape(format!("action matrix {i} is not {m}x{m}")));
        }
        Ok(Representation { algebra, a, rho })
    }

    pub fn algebra(&self) -> &HjlAlgebra {
        &self.algebra
    }

    /// Dimension of the module `V`.
    pub fn module_dim(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(u) = Σ u_i ρ(e_i)`.
    pub fn rho_of(&self, u: &[Rational]) -> Matrix {
        let m = self.module_dim();
        let mut out = Matrix::zeros(m, m);
        for (c, r) in u.iter().zip(&self.rho) {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &r.scale(c);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    /// `ρ(αu)A = Aρ(u)`, witnessed on `(e_i, v_a)`.
    pub twist: Verdict,
    /// `ρ([u,v])A = ρ(αu)ρ(v) − δρ(αv)ρ(u)`, witnessed on `(e_i, e_j, v_a)`.
    pub bracket: Verdict,
}

impl RepresentationReport {
    pub fn holds(&self) -> bool {
        self.twist.holds() && self.bracket.holds()
    }
}

#[allow(clippy::needless_range_loop)]
pub fn check_representation(r: &Representation) -> RepresentationReport {
    let l = &r.algebra;
    let n = l.dim();
    let d = l.delta().rational();
    let rho_alpha: Vec<Matrix> = (0..n).map(|i| r.rho_of(&l.alpha().column(i))).collect();

    let twist = (|| {
        for i in 0..n {
            let lhs = &rho_alpha[i] * &r.a;
            let rhs = &r.a * &r.rho[i];
            if let Some(a) = first_differing_column(&lhs, &rhs) {
                return Some(Witness::new(vec![i, a], lhs.column(a), rhs.column(a)));
            }
        }
        None
    })()
    .into();

    let bracket = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = &r.rho_of(&l.br_basis(i, j)) * &r.a;
                let rhs = &(&rho_alpha[i] * &r.rho[j]) - &(&rho_alpha[j] * &r.rho[i]).scale(&d);
                if let Some(a) = first_differing_column(&lhs, &rhs) {
                    return Some(Witness::new(vec![i, j, a], lhs.column(a), rhs.column(a)));
                }
            }
        }
        None
    })()
    .into();

    RepresentationReport { twist, bracket }
}

fn first_differing_column(a: &Matrix, b: &Matrix) -> Option<usize> {
    (0..a.cols()).find(|&c| a.column(c) != b.column(c))
}

/// `V = Q`, `ρ = 0`, `A = 1`.
pub fn trivial_representation(l: &HjlAlgebra) -> Representation {
    Representation::new(l.clone(), Matrix::identity(1), vec![Matrix::zeros(1, 1); l.dim()])
        .expect("trivial representation shapes")
}

/// `ad_s(u)(v) = δ[α^s u, v]` on `V = L` with `A = α`.
pub fn adjoint_representation(l: &HjlAlgebra, s: i64) -> Result<Representation> {
    let alpha_s = l.alpha_pow(s)?;
    let d = l.delta().rational();
    let rho = (0..l.dim()).map(|i| l.left_mul(&alpha_s.column(i)).scale(&d)).collect();
    Representation::new(l.clone(), l.alpha().clone(), rho)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoadjointReport {
    /// `α∘ad(αx) = ad(x)∘α`, witnessed on `(x, y) = (e_i, e_j)`.
    pub twist: Verdict,
    /// `ad x∘ad αy − δ ad y∘ad αx = α∘ad[x,y]`, witnessed on `(e_i, e_j, e_k)`.
    pub bracket: Verdict,
}

impl CoadjointReport {
    pub fn holds(&self) -> bool {
        self.twist.holds() && self.bracket.holds()
    }
}

/// The two conditions under which the dual of the adjoint action is a
/// representation. Here `ad(x) = δ[x, ·]`.
pub fn coadjoint_report(l: &HjlAlgebra) -> CoadjointReport {
    let n = l.dim();
    let d = l.delta().rational();
    let alpha = l.alpha();
    let ad = |x: &[Rational]| l.left_mul(x).scale(&d);
    let ad_basis: Vec<Matrix> = (0..n).map(|i| ad(&l.basis_vector(i))).collect();
    let ad_alpha: Vec<Matrix> = (0..n).map(|i| ad(&alpha.column(i))).collect();

    let twist = (|| {
        for i in 0..n {
            let lhs = alpha * &ad_alpha[i];
            let rhs = &ad_basis[i] * alpha;
            if let Some(j) = first_differing_column(&lhs, &rhs) {
                return Some(Witness::new(vec![i, j], lhs.column(j), rhs.column(j)));
            }
        }
        None
    })()
    .into();

    let bracket = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = &(&ad_basis[i] * &ad_alpha[j]) - &(&ad_basis[j] * &ad_alpha[i]).scale(&d);
                let rhs = alpha * &ad(&l.br_basis(i, j));
                if let Some(k) = first_differing_column(&lhs, &rhs) {
                    return Some(Witness::new(vec![i, j, k], lhs.column(k), rhs.column(k)));
                }
            }
        }
        None
    })()
    .into();

    CoadjointReport { twist, bracket }
}

/// `π(x)f = −δ f∘ad(x)` on `L*` with twist `f ↦ f∘α`, in the dual basis:
/// `A = αᵀ`, `π(e_i) = −δ ad(e_i)ᵀ`. `None` when [`coadjoint_report`] fails.
pub fn coadjoint_representation(l: &HjlAlgebra) -> Option<Representation> {
    if !coadjoint_report(l).holds() {
        return None;
    }
    Some(coadjoint_unchecked(l))
}

pub(crate) fn coadjoint_unchecked(l: &HjlAlgebra) -> Representation {
    // −δ·(δ L_x)ᵀ = −L_xᵀ
    let rho = (0..l.dim())
        .map(|i| -&l.left_mul(&l.basis_vector(i)).transpose())
        .collect();
    Representation::new(l.clone(), l.alpha().transpose(), rho).expect("coadjoint shapes")
}

/// `ρ(u)x`, the action on a module vector.
pub(crate) fn act(r: &Representation, u: &[Rational], x: &[Rational]) -> Vector {
    r.rho_of(u).mul_vec(x)
}

pub(crate) fn combine(terms: &[(Rational, Vector)], len: usize) -> Vector {
    let mut out = crate::linalg::zero_vector(len);
    for (c, v) in terms {
        out = add_vectors(&out, &scale_vector(c, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, Sign};
    use crate::fixtures;
    use crate::linalg::{frac, int};

    #[test]
    fn basic_representations() {
        let l = fixtures::aff2();
        let zero = Representation::new(l.clone(), Matrix::from_i64(1, 1, &[5]), vec![Matrix::zeros(1, 1); 2]).unwrap();
        assert!(check_representation(&zero).holds());
        assert!(check_representation(&trivial_representation(&l)).holds());

        let ad = adjoint_representation(&l, 0).unwrap();
        assert!(check_representation(&ad).holds());
        assert_eq!(ad.rho()[0].column(1), vec![int(1), int(0)]);
        assert_eq!(ad.rho()[1].column(0), vec![int(-1), int(0)]);

        let t = fixtures::aff2_twisted();
        let ad = adjoint_representation(&t, -1).unwrap();
        assert_eq!(ad.rho()[0].column(1), vec![frac(1, 2), int(0)]);
        assert!(check_representation(&ad).holds());

        let a = abelian(Sign::Minus, Matrix::identity(2)).unwrap();
        assert!(adjoint_representation(&a, 0).unwrap().rho().iter().all(Matrix::is_zero));
        assert!(adjoint_representation(&l.with_alpha(Matrix::zeros(2, 2)).unwrap(), -1).is_err());
    }

    #[test]
    fn shapes_are_validated() {
        let l = fixtures::aff2();
        assert!(Representation::new(l.clone(), Matrix::identity(2), vec![Matrix::zeros(2, 2)]).is_err());
        assert!(Representation::new(l, Matrix::identity(2), vec![Matrix::zeros(2, 2), Matrix::zeros(1, 1)]).is_err());
    }

    #[test]
    fn broken_representation_has_witness() {
        let l = fixtures::aff2();
        let rho = vec![Matrix::identity(1), Matrix::zeros(1, 1)];
        let r = Representation::new(l, Matrix::identity(1), rho).unwrap();
        let report = check_representation(&r);
        assert!(report.twist.holds());
        // ρ([e1,e2]) = 1 but ρ(e1)ρ(e2) − ρ(e2)ρ(e1) = 0
        assert_eq!(report.bracket.witness().unwrap().indices, vec![0, 1, 0]);
    }

    #[test]
    fn coadjoint() {
        let a = fixtures::abelian_n(2);
        assert!(coadjoint_representation(&a).unwrap().rho().iter().all(Matrix::is_zero));
        for l in [fixtures::aff2(), fixtures::heisenberg(), fixtures::symmetric_plane()] {
            let r = coadjoint_representation(&l).expect("identity twist");
            assert!(check_representation(&r).holds());
        }
        // aff2 with α = diag(2,1): α∘ad(αe1) e2 = 4e1 but ad(e1)∘α e2 = e1
        let report = coadjoint_report(&fixtures::aff2_twisted());
        let w = report.twist.witness().unwrap();
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(
            (w.lhs.clone(), w.rhs.clone()),
            (vec![int(4), int(0)], vec![int(1), int(0)])
        );
        assert!(coadjoint_representation(&fixtures::aff2_twisted()).is_none());
    }
}
