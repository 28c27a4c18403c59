//! One-parameter deformations `[u, v]_t = [u, v] + tψ(u, v)` and the trivial
//! deformations generated by hom-Nijenhuis operators.
//!
//! The parameter `t` is never instantiated: every identity in `t` is compared
//! coefficient by coefficient.

use crate::algebra::HjlAlgebra;
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, Matrix, Rational, Tensor3, Vector};
use crate::representations::{adjoint_representation, cochain2_report, d1, Cochain2Report};

fn require_commuting(l: &HjlAlgebra, n: &Matrix) -> Result<()> {
    if n.rows() != l.dim() || n.cols() != l.dim() {
        return Err(Error::Shape(format!(
            "operator is {}x{}, algebra has dimension {}",
            n.rows(),
            n.cols(),
            l.dim()
        )));
    }
    let lhs = n * l.alpha();
    let rhs = l.alpha() * n;
    if let Some(c) = (0..lhs.cols()).find(|&c| lhs.column(c) != rhs.column(c)) {
        return Err(Error::Violated {
            condition: "N commutes with alpha",
            witness: Witness::new(vec![c], lhs.column(c), rhs.column(c)),
        });
    }
    Ok(())
}

/// `[u, v]_N = [Nu, v] + [u, Nv] − N[u, v]`.
pub fn nijenhuis_bracket(l: &HjlAlgebra, n: &Matrix) -> Result<Tensor3> {
    require_commuting(l, n)?;
    let dim = l.dim();
    let mut out = Tensor3::zeros((dim, dim, dim));
    for i in 0..dim {
        for j in 0..dim {
            let v = add_vectors(
                &l.br(&n.column(i), &l.basis_vector(j)),
                &l.br(&l.basis_vector(i), &n.column(j)),
            );
            out.set_fiber(i, j, &sub_vectors(&v, &n.mul_vec(&l.br_basis(i, j))));
        }
    }
    Ok(out)
}

/// `[Nu, Nv] = N[u, v]_N` on basis pairs.
pub fn nijenhuis_report(l: &HjlAlgebra, n: &Matrix) -> Result<Verdict> {
    let bn = nijenhuis_bracket(l, n)?;
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let lhs = l.br(&n.column(i), &n.column(j));
            let rhs = n.mul_vec(&bn.fiber(i, j));
            if lhs != rhs {
                return Ok(Verdict::Fails(Witness::new(vec![i, j], lhs, rhs)));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Errors when `N` does not commute with `α`.
pub fn is_nijenhuis(l: &HjlAlgebra, n: &Matrix) -> Result<bool> {
    Ok(nijenhuis_report(l, n)?.holds())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    /// Sign rule and `α`-compatibility of ψ as a cochain with values in `L`.
    pub cochain: Cochain2Report,
    /// `ψ(αu, ψ(v, w)) + c.p. = 0`
    pub quadratic: Verdict,
    /// `ψ(αu, [v, w]) + [αu, ψ(v, w)] + c.p. = 0`
    pub linear: Verdict,
}

impl DeformationReport {
    pub fn holds(&self) -> bool {
        self.cochain.holds() && self.quadratic.holds() && self.linear.holds()
    }
}

fn cyclic_sum<F>(n: usize, term: F) -> Option<Witness>
where
    F: Fn(usize, usize, usize) -> Vector,
{
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = add_vectors(&add_vectors(&term(i, j, k), &term(j, k, i)), &term(k, i, j));
                if !is_zero_vector(&s) {
                    return Some(Witness::nonzero(vec![i, j, k], s));
                }
            }
        }
    }
    None
}

/// Checks both conditions for `[·,·] + tψ` to satisfy hom-Jacobi.
pub fn check_deformation(l: &HjlAlgebra, psi: &Tensor3) -> Result<DeformationReport> {
    let adj = adjoint_representation(l, 0)?;
    let cochain = cochain2_report(&adj, psi)?;
    let n = l.dim();
    let ac: Vec<Vector> = (0..n).map(|i| l.alpha().column(i)).collect();
    let quadratic = cyclic_sum(n, |i, j, k| psi.apply(&ac[i], &psi.fiber(j, k))).into();
    let linear = cyclic_sum(n, |i, j, k| {
        add_vectors(&psi.apply(&ac[i], &l.br_basis(j, k)), &l.br(&ac[i], &psi.fiber(j, k)))
    })
    .into();
    Ok(DeformationReport {
        cochain,
        quadratic,
        linear,
    })
}

/// Coefficients of `t⁰, t¹, t²` in the hom-Jacobiator of `[·,·] + tψ`,
/// computed by multiplying out the polynomial bracket. Each coefficient is
/// the flat `(i, j, k, ·)` array over basis triples.
pub fn jacobiator_coefficients(l: &HjlAlgebra, psi: &Tensor3) -> [Vec<Rational>; 3] {
    let n = l.dim();
    let terms = [l.bracket(), psi];
    let mut out: [Vec<Rational>; 3] = Default::default();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut coeffs = vec![crate::linalg::zero_vector(n); 3];
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let ax = l.alpha().column(x);
                    for (p, outer) in terms.iter().enumerate() {
                        for (q, inner) in terms.iter().enumerate() {
                            let v = outer.apply(&ax, &inner.fiber(y, z));
                            coeffs[p + q] = add_vectors(&coeffs[p + q], &v);
                        }
                    }
                }
                for (slot, c) in out.iter_mut().zip(coeffs) {
                    slot.extend(c);
                }
            }
        }
    }
    out
}

/// `ψ = [·,·]_N` for a Nijenhuis operator. When `α` is invertible this is
/// also checked to equal `δ·d_{−1}N` for the `α^{−1}`-adjoint representation.
pub fn deformation_from_nijenhuis(l: &HjlAlgebra, n: &Matrix) -> Result<Tensor3> {
    nijenhuis_report(l, n)?.require("Nijenhuis identity")?;
    let psi = nijenhuis_bracket(l, n)?;
    let adj = adjoint_representation(l, 0)?;
    cochain2_report(&adj, &psi)?
        .sign_rule
        .require("sign rule of the Nijenhuis bracket")?;
    if let Ok(ad_inv) = adjoint_representation(l, -1) {
        let dn = d1(&ad_inv, n)?.scale(&l.delta().rational());
        if let Some(((i, j, _), _)) = dn.sub(&psi).iter().next() {
            return Err(Error::Violated {
                condition: "Nijenhuis bracket equals delta d_{-1} N",
                witness: Witness::new(vec![i, j], psi.fiber(i, j), dn.fiber(i, j)),
            });
        }
    }
    Ok(psi)
}

/// Both sides of `T_t[u, v]_t = [T_t u, T_t v]` with `T_t = id + tN` and
/// `ψ = [·,·]_N`, compared per power of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityReport {
    /// `[u, v] = [u, v]`
    pub t0: Verdict,
    /// `[u, v]_N + N[u, v] = [Nu, v] + [u, Nv]`
    pub t1: Verdict,
    /// `N[u, v]_N = [Nu, Nv]`
    pub t2: Verdict,
}

impl TrivialityReport {
    pub fn holds(&self) -> bool {
        self.t0.holds() && self.t1.holds() && self.t2.holds()
    }
}

/// Coefficientwise comparison for any `N` commuting with `α`.
pub fn triviality_report(l: &HjlAlgebra, n: &Matrix) -> Result<TrivialityReport> {
    let bn = nijenhuis_bracket(l, n)?;
    let dim = l.dim();
    let compare = |lhs: &dyn Fn(usize, usize) -> Vector, rhs: &dyn Fn(usize, usize) -> Vector| -> Verdict {
        for i in 0..dim {
            for j in 0..dim {
                let (a, b) = (lhs(i, j), rhs(i, j));
                if a != b {
                    return Verdict::Fails(Witness::new(vec![i, j], a, b));
                }
            }
        }
        Verdict::Holds
    };
    let e = |i: usize| l.basis_vector(i);
    let t0 = compare(&|i, j| l.br_basis(i, j), &|i, j| l.br(&e(i), &e(j)));
    let t1 = compare(
        &|i, j| add_vectors(&bn.fiber(i, j), &n.mul_vec(&l.br_basis(i, j))),
        &|i, j| add_vectors(&l.br(&n.column(i), &e(j)), &l.br(&e(i), &n.column(j))),
    );
    let t2 = compare(&|i, j| n.mul_vec(&bn.fiber(i, j)), &|i, j| {
        l.br(&n.column(i), &n.column(j))
    });
    Ok(TrivialityReport { t0, t1, t2 })
}

/// Requires a Nijenhuis operator; true iff all three coefficients agree.
pub fn verify_trivial_deformation(l: &HjlAlgebra, n: &Matrix) -> Result<bool> {
    nijenhuis_report(l, n)?.require("Nijenhuis identity")?;
    Ok(triviality_report(l, n)?.holds())
}
