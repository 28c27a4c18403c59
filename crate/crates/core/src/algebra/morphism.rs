use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{Matrix, Subspace, Vector};

use super::HjlAlgebra;

/// A linear map `φ: source → target` between algebras of the same sign,
/// stored as a `target.dim() × source.dim()` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: HjlAlgebra,
    target: HjlAlgebra,
    phi: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: HjlAlgebra, target: HjlAlgebra, phi: Matrix) -> Result<Self> {
        if phi.rows() != target.dim() || phi.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "map is {}x{}, expected {}x{}",
                phi.rows(),
                phi.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if source.delta() != target.delta() {
            return Err(Error::SignMismatch(format!(
                "source has sign {}, target has sign {}",
                source.delta(),
                target.delta()
            )));
        }
        Ok(AlgebraMorphism { source, target, phi })
    }

    pub fn source(&self) -> &HjlAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HjlAlgebra {
        &self.target
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    /// `φ[u, v] = [φu, φv]`
    pub brackets: Verdict,
    /// `φ∘α = β∘φ`
    pub twists: Verdict,
}

impl MorphismReport {
    pub fn holds(&self) -> bool {
        self.brackets.holds() && self.twists.holds()
    }
}

#[allow(clippy::needless_range_loop)]
pub fn morphism_report(m: &AlgebraMorphism) -> MorphismReport {
    let (src, tgt, phi) = (&m.source, &m.target, &m.phi);
    let n = src.dim();
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();

    let brackets = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = phi.mul_vec(&src.br_basis(i, j));
                let rhs = tgt.br(&images[i], &images[j]);
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        None
    })()
    .into();

    let twists = (|| {
        for i in 0..n {
            let lhs = phi.mul_vec(&src.alpha().column(i));
            let rhs = tgt.alpha_apply(&images[i]);
            if lhs != rhs {
                return Some(Witness::new(vec![i], lhs, rhs));
            }
        }
        None
    })()
    .into();

    MorphismReport { brackets, twists }
}

pub fn is_morphism(m: &AlgebraMorphism) -> bool {
    morphism_report(m).holds()
}

/// `span{(e_i, φ e_i)}` inside `source ⊕ target`.
pub fn graph_subspace(m: &AlgebraMorphism) -> Subspace {
    let (n, k) = (m.source.dim(), m.target.dim());
    let vs: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = crate::linalg::unit_vector(n + k, i);
            for (r, x) in m.phi.column(i).into_iter().enumerate() {
                v[n + r] = x;
            }
            v
        })
        .collect();
    Subspace::span(n + k, &vs)
}
