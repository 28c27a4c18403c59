use crate::algebra::{check_axioms, HjlAlgebra};
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{dot, Matrix, Subspace, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub nondegenerate: bool,
    /// `f([x, y], z) = f(x, [y, z])`
    pub invariant: Verdict,
    /// `f(x, y) = f(y, x)`
    pub jordansymmetric: Verdict,
}

impl FormReport {
    pub fn holds(&self) -> bool {
        self.nondegenerate && self.invariant.holds() && self.jordansymmetric.holds()
    }
}

fn pair(f: &Matrix, x: &[crate::linalg::Rational], y: &[crate::linalg::Rational]) -> crate::linalg::Rational {
    dot(x, &f.mul_vec(y))
}

/// Invariance of `f(e_i, e_j) = F(i, j)` against an arbitrary bracket
/// tensor, which need not satisfy any sign rule.
pub fn form_invariance(bracket: &Tensor3, f: &Matrix) -> Verdict {
    let n = f.rows();
    let e = |i| crate::linalg::unit_vector(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = pair(f, &bracket.fiber(i, j), &e(k));
                let rhs = pair(f, &e(i), &bracket.fiber(j, k));
                if lhs != rhs {
                    return Verdict::Fails(Witness::new(vec![i, j, k], vec![lhs], vec![rhs]));
                }
            }
        }
    }
    Verdict::Holds
}

pub fn check_form(l: &HjlAlgebra, f: &Matrix) -> Result<FormReport> {
    let n = l.dim();
    if f.rows() != n || f.cols() != n {
        return Err(Error::Shape(format!(
            "form is {}x{}, algebra has dimension {n}",
            f.rows(),
            f.cols()
        )));
    }
    let jordansymmetric = (|| {
        for i in 0..n {
            for j in 0..n {
                if f[(i, j)] != f[(j, i)] {
                    return Some(Witness::new(
                        vec![i, j],
                        vec![f[(i, j)].clone()],
                        vec![f[(j, i)].clone()],
                    ));
                }
            }
        }
        None
    })()
    .into();
    Ok(FormReport {
        nondegenerate: f.rank() == n,
        invariant: form_invariance(l.bracket(), f),
        jordansymmetric,
    })
}

/// `f(s, s') = 0` for all `s, s'` in `S`.
pub fn is_isotropic(f: &Matrix, s: &Subspace) -> Result<bool> {
    if s.ambient() != f.rows() || !f.is_square() {
        return Err(Error::Shape(format!(
            "subspace of dimension {} against a {}x{} form",
            s.ambient(),
            f.rows(),
            f.cols()
        )));
    }
    Ok(s.basis()
        .iter()
        .all(|x| s.basis().iter().all(|y| num_traits::Zero::is_zero(&pair(f, x, y)))))
}

/// An algebra with a nondegenerate, invariant, Jordan-symmetric form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticHjl {
    algebra: HjlAlgebra,
    form: Matrix,
}

impl QuadraticHjl {
    pub fn new(algebra: HjlAlgebra, form: Matrix) -> Result<Self> {
        let report = check_form(&algebra, &form)?;
        if !report.nondegenerate {
            let v = form.nullspace().remove(0);
            return Err(Error::Violated {
                condition: "form is nondegenerate",
                witness: Witness::nonzero(Vec::new(), v),
            });
        }
        report.invariant.require("form is invariant")?;
        report.jordansymmetric.require("form is Jordan-symmetric")?;
        Ok(QuadraticHjl { algebra, form })
    }

    pub fn algebra(&self) -> &HjlAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    /// Also requires the algebra axioms to hold.
    pub fn is_valid_algebra(&self) -> bool {
        check_axioms(&self.algebra).is_multiplicative_algebra()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn forms_on_small_algebras() {
        let a = fixtures::abelian_n(2);
        assert!(check_form(&a, &Matrix::identity(2)).unwrap().holds());
        assert!(!check_form(&a, &Matrix::zeros(2, 2)).unwrap().nondegenerate);
        // the identity form is not invariant on aff2: f([e1,e1],e2) = 0, f(e1,[e1,e2]) = 1
        let r = check_form(&fixtures::aff2(), &Matrix::identity(2)).unwrap();
        assert_eq!(r.invariant.witness().unwrap().indices, vec![0, 0, 1]);
        assert!(QuadraticHjl::new(fixtures::aff2(), Matrix::identity(2)).is_err());
    }

    #[test]
    fn isotropy() {
        let hyp = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(is_isotropic(&hyp, &Subspace::zero(2)).unwrap());
        assert!(is_isotropic(&hyp, &Subspace::coordinate(2, [0])).unwrap());
        assert!(!is_isotropic(&Matrix::identity(2), &Subspace::coordinate(2, [0])).unwrap());
        assert!(!is_isotropic(&hyp, &Subspace::full(2)).unwrap());
    }
}
