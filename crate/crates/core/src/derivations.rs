//! α^k-derivations: `Dα = αD` and `D[u,v] = δ^k([Du, α^k v] + [α^k u, Dv])`.

use num_traits::Zero;

use crate::algebra::HjlAlgebra;
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{add_vectors, matrix_of_linear_map, scale_vector, Matrix, Rational, Tensor3, Vector};

/// A derivation together with the exponent it was certified for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub k: i64,
    pub map: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    /// `Dα = αD`, witnessed on a basis vector.
    pub commutes: Verdict,
    /// The twisted Leibniz rule, witnessed on a basis pair.
    pub leibniz: Verdict,
}

impl DerivationReport {
    pub fn holds(&self) -> bool {
        self.commutes.holds() && self.leibniz.holds()
    }
}

fn check_map_shape(l: &HjlAlgebra, d: &Matrix) -> Result<()> {
    if d.rows() != l.dim() || d.cols() != l.dim() {
        return Err(Error::Shape(format!(
            "map is {}x{}, algebra has dimension {}",
            d.rows(),
            d.cols(),
            l.dim()
        )));
    }
    Ok(())
}

/// `D[u,v] - δ^k([Du, α^k v] + [α^k u, Dv])` on `(e_i, e_j)`.
fn leibniz_defect(l: &HjlAlgebra, ak: &Matrix, sign: &Rational, d: &Matrix, i: usize, j: usize) -> Vector {
    let lhs = d.mul_vec(&l.br_basis(i, j));
    let rhs = add_vectors(&l.br(&d.column(i), &ak.column(j)), &l.br(&ak.column(i), &d.column(j)));
    add_vectors(&lhs, &scale_vector(&-sign, &rhs))
}

pub fn derivation_report(l: &HjlAlgebra, d: &Matrix, k: i64) -> Result<DerivationReport> {
    check_map_shape(l, d)?;
    let ak = l.alpha_pow(k)?;
    let sign = l.delta().pow(k).rational();
    let n = l.dim();
    let alpha = l.alpha();

    let commutes = (|| {
        for i in 0..n {
            let lhs = d.mul_vec(&alpha.column(i));
            let rhs = alpha.mul_vec(&d.column(i));
            if lhs != rhs {
                return Some(Witness::new(vec![i], lhs, rhs));
            }
        }
        None
    })()
    .into();

    let leibniz = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = d.mul_vec(&l.br_basis(i, j));
                let rhs = scale_vector(
                    &sign,
                    &add_vectors(&l.br(&d.column(i), &ak.column(j)), &l.br(&ak.column(i), &d.column(j))),
                );
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        None
    })()
    .into();

    Ok(DerivationReport { commutes, leibniz })
}

/// Errors when `k < 0` and `α` is not invertible.
pub fn is_alpha_k_derivation(l: &HjlAlgebra, d: &Matrix, k: i64) -> Result<bool> {
    Ok(derivation_report(l, d, k)?.holds())
}

/// Basis of `Der_{α^k}(L)`, from one linear system in the `n²` entries of
/// `D` (row-major), in echelon-normal order.
pub fn derivation_space(l: &HjlAlgebra, k: i64) -> Result<Vec<Matrix>> {
    let n = l.dim();
    let ak = l.alpha_pow(k)?;
    let sign = l.delta().pow(k).rational();
    let alpha = l.alpha().clone();
    let system = matrix_of_linear_map(n * n, n * n + n * n * n, |x| {
        let d = Matrix::from_data(n, n, x.to_vec());
        let mut out = (&(&d * &alpha) - &(&alpha * &d)).data().to_vec();
        for i in 0..n {
            for j in 0..n {
                out.extend(leibniz_defect(l, &ak, &sign, &d, i, j));
            }
        }
        out
    });
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_data(n, n, v))
        .collect())
}

/// `D(v) = δ[u, α^k v]`, an α^{k+1}-derivation when `αu = u` and `δ^k = 1`.
pub fn inner_derivation(l: &HjlAlgebra, u: &[Rational], k: i64) -> Result<Derivation> {
    if u.len() != l.dim() {
        return Err(Error::Shape(format!(
            "vector has length {}, algebra has dimension {}",
            u.len(),
            l.dim()
        )));
    }
    if !l.delta().pow(k).is_plus() {
        return Err(Error::Precondition(format!(
            "delta^{k} must be 1 for an inner derivation"
        )));
    }
    let au = l.alpha_apply(u);
    if au != u {
        return Err(Error::Violated {
            condition: "alpha(u) = u",
            witness: Witness::new(Vec::new(), au, u.to_vec()),
        });
    }
    let ak = l.alpha_pow(k)?;
    let map = l.left_mul(u).scale(&l.delta().rational());
    let map = &map * &ak;
    derivation_report(l, &map, k + 1)?
        .leibniz
        .clone()
        .require("inner derivation Leibniz rule")?;
    Ok(Derivation { k: k + 1, map })
}

/// `[D1, D2] = D1 D2 − D2 D1`, certified at exponent `k1 + k2`.
pub fn derivation_commutator(l: &HjlAlgebra, d1: &Derivation, d2: &Derivation) -> Result<Derivation> {
    for d in [d1, d2] {
        let report = derivation_report(l, &d.map, d.k)?;
        report.commutes.require("derivation commutes with alpha")?;
        report.leibniz.require("derivation Leibniz rule")?;
    }
    let map = d1.map.commutator(&d2.map);
    let k = d1.k + d2.k;
    let report = derivation_report(l, &map, k)?;
    report.commutes.require("commutator commutes with alpha")?;
    report.leibniz.require("commutator Leibniz rule")?;
    Ok(Derivation { k, map })
}

/// `L ⊕ QD` with `[d, u] = Du`, `[u, d] = −δDu` and twist `α ⊕ 1`, built
/// without checking anything.
pub fn derivation_extension_unchecked(l: &HjlAlgebra, d: &Matrix) -> Result<HjlAlgebra> {
    check_map_shape(l, d)?;
    let n = l.dim();
    let delta = l.delta().rational();
    let mut bracket = Tensor3::zeros((n + 1, n + 1, n + 1));
    for ((i, j, k), c) in l.bracket().iter() {
        bracket.set(i, j, k, c.clone());
    }
    for i in 0..n {
        for (k, x) in d.column(i).into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            bracket.set(i, n, k, -&delta * &x);
            bracket.set(n, i, k, x);
        }
    }
    let alpha = l.alpha().block_diag(&Matrix::identity(1));
    HjlAlgebra::new(l.delta(), bracket, alpha)
}

/// The extension of `L` by an α-derivation `D` with `(1 − δ)D² = 0`.
pub fn derivation_extension(l: &HjlAlgebra, d: &Matrix) -> Result<HjlAlgebra> {
    let report = derivation_report(l, d, 1)?;
    report.commutes.require("D commutes with alpha")?;
    report.leibniz.require("D is an alpha-derivation")?;
    if !l.delta().is_plus() {
        let d2 = d * d;
        if let Some(c) = (0..d2.cols()).find(|&c| !d2.column(c).iter().all(Zero::is_zero)) {
            return Err(Error::Violated {
                condition: "(1 - delta) D^2 = 0",
                witness: Witness::nonzero(vec![c], scale_vector(&crate::linalg::int(2), &d2.column(c))),
            });
        }
    }
    derivation_extension_unchecked(l, d)
}
