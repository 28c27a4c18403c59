use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{Matrix, Tensor3, Vector};

use super::{HjlAlgebra, Sign};

/// A δ-hom-associative algebra: product `e_i·e_j = Σ_k m(i,j,k) e_k` and a
/// twist `α` with `α(x)(yz) = δ(xy)α(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaHomAssociative {
    delta: Sign,
    product: Tensor3,
    alpha: Matrix,
}

impl DeltaHomAssociative {
    pub fn new(delta: Sign, product: Tensor3, alpha: Matrix) -> Result<Self> {
        let n = alpha.rows();
        if !alpha.is_square() || product.dims() != (n, n, n) {
            return Err(Error::Shape(format!(
                "product dims {:?} do not match a {}x{} twist",
                product.dims(),
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(DeltaHomAssociative { delta, product, alpha })
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn delta(&self) -> Sign {
        self.delta
    }

    pub fn product(&self) -> &Tensor3 {
        &self.product
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    fn mul(&self, x: &[crate::linalg::Rational], y: &[crate::linalg::Rational]) -> Vector {
        self.product.apply(x, y)
    }
}

/// Checks `α(e_i)(e_j e_k) = δ(e_i e_j)α(e_k)` on all basis triples.
pub fn check_delta_hom_associative(a: &DeltaHomAssociative) -> Verdict {
    let n = a.dim();
    let d = a.delta.rational();
    for i in 0..n {
        let ai = a.alpha.column(i);
        for j in 0..n {
            for k in 0..n {
                let lhs = a.mul(&ai, &a.product.fiber(j, k));
                let rhs: Vector = a
                    .mul(&a.product.fiber(i, j), &a.alpha.column(k))
                    .iter()
                    .map(|x| &d * x)
                    .collect();
                if lhs != rhs {
                    return Verdict::Fails(Witness::new(vec![i, j, k], lhs, rhs));
                }
            }
        }
    }
    Verdict::Holds
}

/// The bracket `[x, y] = xy − δ yx` with the same twist.
pub fn commutator_algebra(a: &DeltaHomAssociative) -> Result<HjlAlgebra> {
    check_delta_hom_associative(a).require("delta-hom-associativity")?;
    let n = a.dim();
    let d = a.delta.rational();
    let mut bracket = Tensor3::zeros((n, n, n));
    for ((i, j, k), m) in a.product.iter() {
        bracket.add_to(i, j, k, m);
        bracket.add_to(j, i, k, &(-&d * m));
    }
    HjlAlgebra::new(a.delta, bracket, a.alpha.clone())
}
