//! The hom-Jordan-Lie algebra data model.
//!
//! An algebra is a sign `δ = ±1`, a bracket given by structure constants
//! `[e_i, e_j] = Σ_k c(i,j,k) e_k` with `c(i,j,k) = -δ c(j,i,k)`, and a
//! twisting map `α`. Every identity is multilinear, so all checks here run on
//! basis tuples and are exact and complete.

mod assoc;
mod morphism;

pub use assoc::{check_delta_hom_associative, commutator_algebra, DeltaHomAssociative};
pub use morphism::{graph_subspace, is_morphism, morphism_report, AlgebraMorphism, MorphismReport};

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{add_vectors, int, unit_vector, Matrix, Rational, Subspace, Tensor3, Vector};

/// The sign `δ` of the Jordan symmetry `[x, y] = -δ[y, x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn rational(self) -> Rational {
        int(self.value())
    }

    /// `δ^k`, defined for every integer `k`.
    pub fn pow(self, k: i64) -> Sign {
        if self == Sign::Minus && k.rem_euclid(2) == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A finite-dimensional hom-Jordan-Lie algebra presented by structure
/// constants. Construction validates shapes and the sign rule; the remaining
/// axioms are queried with [`check_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HjlAlgebra {
    delta: Sign,
    bracket: Tensor3,
    alpha: Matrix,
}

impl HjlAlgebra {
    pub fn new(delta: Sign, bracket: Tensor3, alpha: Matrix) -> Result<Self> {
        let n = alpha.rows();
        if !alpha.is_square() {
            return Err(Error::Shape(format!(
                "twist map is {}x{}, expected square",
                alpha.rows(),
                alpha.cols()
            )));
        }
        if bracket.dims() != (n, n, n) {
            return Err(Error::Shape(format!(
                "bracket has dims {:?}, expected ({n}, {n}, {n})",
                bracket.dims()
            )));
        }
        if let Some((i, j, k)) = sign_rule_violation(delta, &bracket) {
            return Err(Error::SignRule { i, j, k });
        }
        Ok(HjlAlgebra { delta, bracket, alpha })
    }

    /// Builds the bracket from entries `(i, j, k, c)` given for one ordering
    /// of each pair and completes the rest by the sign rule. Entries supplied
    /// for both `(i, j, k)` and `(j, i, k)` must agree.
    pub fn from_entries(
        delta: Sign,
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
        alpha: Matrix,
    ) -> Result<Self> {
        let mut bracket = Tensor3::zeros((dim, dim, dim));
        let mut given = std::collections::BTreeMap::new();
        for (i, j, k, c) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Shape(format!(
                    "bracket index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if let Some(prev) = given.insert((i, j, k), c.clone()) {
                if &prev != c {
                    return Err(Error::SignRule { i, j, k });
                }
            }
        }
        let d = delta.rational();
        for ((i, j, k), c) in &given {
            let mirrored = -&d * c;
            if let Some(other) = given.get(&(*j, *i, *k)) {
                if other != &mirrored {
                    return Err(Error::SignRule { i: *i, j: *j, k: *k });
                }
            }
            bracket.set(*i, *j, *k, c.clone());
            bracket.set(*j, *i, *k, mirrored);
        }
        Self::new(delta, bracket, alpha)
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn delta(&self) -> Sign {
        self.delta
    }

    pub fn bracket(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// `[u, v]` on coordinate vectors.
    pub fn br(&self, u: &[Rational], v: &[Rational]) -> Vector {
        self.bracket.apply(u, v)
    }

    /// `[e_i, e_j]`.
    pub fn br_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.fiber(i, j)
    }

    pub fn alpha_apply(&self, v: &[Rational]) -> Vector {
        self.alpha.mul_vec(v)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Matrix of left multiplication `v ↦ [x, v]`.
    pub fn left_mul(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.br(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of right multiplication `v ↦ [v, y]`.
    pub fn right_mul(&self, y: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|i| self.br(&self.basis_vector(i), y)).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn alpha_inverse(&self) -> Option<Matrix> {
        self.alpha.inverse()
    }

    /// `α^k` for any integer `k`; negative powers need an invertible twist.
    pub fn alpha_pow(&self, k: i64) -> Result<Matrix> {
        if k >= 0 {
            return Ok(self.alpha.pow(k as u32));
        }
        let inv = self
            .alpha_inverse()
            .ok_or_else(|| Error::Precondition(format!("alpha^{k} requires an invertible twist map")))?;
        Ok(inv.pow(k.unsigned_abs() as u32))
    }

    /// The same algebra with a different twist.
    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self> {
        Self::new(self.delta, self.bracket.clone(), alpha)
    }

    /// Bracket entries for `i < j` (`i <= j` when `δ = -1`), the compact
    /// form the file format uses.
    pub fn canonical_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        self.bracket
            .iter()
            .filter(|((i, j, _), _)| i < j || (i == j && !self.delta.is_plus()))
            .map(|((i, j, k), c)| (i, j, k, c.clone()))
            .collect()
    }
}

fn sign_rule_violation(delta: Sign, bracket: &Tensor3) -> Option<(usize, usize, usize)> {
    let d = delta.rational();
    let (n, _, _) = bracket.dims();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if bracket.get(i, j, k) != -&d * bracket.get(j, i, k) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Result of [`check_axioms`]. `regular` is `multiplicative` plus an
/// invertible twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub jordan_symmetric: Verdict,
    pub hom_jacobi: Verdict,
    pub multiplicative: Verdict,
    pub regular: bool,
}

impl AxiomReport {
    /// Jordan symmetry, hom-Jacobi and multiplicativity all hold.
    pub fn is_multiplicative_algebra(&self) -> bool {
        self.jordan_symmetric.holds() && self.hom_jacobi.holds() && self.multiplicative.holds()
    }

    pub fn all_hold(&self) -> bool {
        self.is_multiplicative_algebra() && self.regular
    }
}

pub fn check_axioms(l: &HjlAlgebra) -> AxiomReport {
    check_axioms_raw(l.delta, &l.bracket, &l.alpha)
}

/// Axiom check on unvalidated data, so that tensors breaking the sign rule
/// can be diagnosed instead of rejected.
pub fn check_axioms_raw(delta: Sign, bracket: &Tensor3, alpha: &Matrix) -> AxiomReport {
    let n = alpha.rows();
    assert_eq!(bracket.dims(), (n, n, n), "bracket/twist dimension mismatch");
    let d = delta.rational();

    let jordan_symmetric = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = bracket.fiber(i, j);
                let rhs: Vector = bracket.fiber(j, i).iter().map(|x| -&d * x).collect();
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        None
    })()
    .into();

    let alpha_cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    let hom_jacobi = (|| {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = jacobi_term(bracket, &alpha_cols[i], j, k);
                    let s = add_vectors(&s, &jacobi_term(bracket, &alpha_cols[j], k, i));
                    let s = add_vectors(&s, &jacobi_term(bracket, &alpha_cols[k], i, j));
                    if !crate::linalg::is_zero_vector(&s) {
                        return Some(Witness::nonzero(vec![i, j, k], s));
                    }
                }
            }
        }
        None
    })()
    .into();

    let multiplicative: Verdict = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = alpha.mul_vec(&bracket.fiber(i, j));
                let rhs = bracket.apply(&alpha_cols[i], &alpha_cols[j]);
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        None
    })()
    .into();

    let regular = multiplicative.holds() && alpha.inverse().is_some();
    AxiomReport {
        jordan_symmetric,
        hom_jacobi,
        multiplicative,
        regular,
    }
}

/// `[x, [e_j, e_k]]`.
fn jacobi_term(bracket: &Tensor3, x: &[Rational], j: usize, k: usize) -> Vector {
    let inner = bracket.fiber(j, k);
    bracket.apply(x, &inner)
}

fn check_subspace_dim(l: &HjlAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient() != l.dim() {
        return Err(Error::Shape(format!(
            "subspace lives in dimension {}, algebra has dimension {}",
            s.ambient(),
            l.dim()
        )));
    }
    Ok(())
}

/// `α(S) ⊆ S` and `[S, S] ⊆ S`.
pub fn is_subalgebra(l: &HjlAlgebra, s: &Subspace) -> Result<bool> {
    check_subspace_dim(l, s)?;
    Ok(closure_witness(l, s, s.basis()).is_none())
}

/// `α(S) ⊆ S` and `[S, L] ⊆ S`.
pub fn is_ideal(l: &HjlAlgebra, s: &Subspace) -> Result<bool> {
    check_subspace_dim(l, s)?;
    Ok(ideal_witness(l, s).is_none())
}

/// First failure of `α(S) ⊆ S` or `[S, L] ⊆ S`; for the bracket the indices
/// are (basis vector of S, basis vector of L).
pub fn ideal_witness(l: &HjlAlgebra, s: &Subspace) -> Option<Witness> {
    let all: Vec<Vector> = (0..l.dim()).map(|j| l.basis_vector(j)).collect();
    closure_witness(l, s, &all)
}

fn closure_witness(l: &HjlAlgebra, s: &Subspace, partners: &[Vector]) -> Option<Witness> {
    for (a, v) in s.basis().iter().enumerate() {
        let image = l.alpha_apply(v);
        if !s.contains(&image) {
            return Some(Witness::new(vec![a], image, Vec::new()));
        }
    }
    for (a, v) in s.basis().iter().enumerate() {
        for (b, w) in partners.iter().enumerate() {
            let br = l.br(v, w);
            if !s.contains(&br) {
                return Some(Witness::new(vec![a, b], br, Vec::new()));
            }
        }
    }
    None
}

/// Block direct sum with bracket `[u₁+v₁, u₂+v₂] = [u₁,u₂] + [v₁,v₂]` and
/// twist `α ⊕ β`.
pub fn direct_sum(l: &HjlAlgebra, g: &HjlAlgebra) -> Result<HjlAlgebra> {
    if l.delta != g.delta {
        return Err(Error::SignMismatch(format!(
            "cannot sum algebras with signs {} and {}",
            l.delta, g.delta
        )));
    }
    let (n, m) = (l.dim(), g.dim());
    let mut bracket = Tensor3::zeros((n + m, n + m, n + m));
    for ((i, j, k), c) in l.bracket.iter() {
        bracket.set(i, j, k, c.clone());
    }
    for ((i, j, k), c) in g.bracket.iter() {
        bracket.set(n + i, n + j, n + k, c.clone());
    }
    HjlAlgebra::new(l.delta, bracket, l.alpha.block_diag(&g.alpha))
}

/// The `n`-dimensional abelian algebra with the given twist.
pub fn abelian(delta: Sign, alpha: Matrix) -> Result<HjlAlgebra> {
    let n = alpha.rows();
    HjlAlgebra::new(delta, Tensor3::zeros((n, n, n)), alpha)
}

/// Is `v` in the kernel of every bracket with `v`-side on the left? Used by
/// callers that need the center.
pub fn is_central(l: &HjlAlgebra, v: &[Rational]) -> bool {
    (0..l.dim()).all(|j| l.br(v, &l.basis_vector(j)).iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::frac;

    fn diag(a: i64, b: i64) -> Matrix {
        Matrix::diagonal(&[int(a), int(b)])
    }

    #[test]
    fn abelian_passes_everything() {
        let report = check_axioms(&abelian(Sign::Plus, Matrix::identity(2)).unwrap());
        assert!(report.all_hold());
    }

    #[test]
    fn aff2_variants() {
        assert!(check_axioms(&fixtures::aff2()).all_hold());
        assert!(check_axioms(&fixtures::aff2().with_alpha(diag(2, 1)).unwrap()).all_hold());

        let bad = fixtures::aff2().with_alpha(diag(1, 2)).unwrap();
        let report = check_axioms(&bad);
        assert!(report.jordan_symmetric.holds());
        assert!(report.hom_jacobi.holds());
        assert!(!report.regular);
        let w = report.multiplicative.witness().expect("witness");
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.lhs, vec![int(1), int(0)]);
        assert_eq!(w.rhs, vec![int(2), int(0)]);
    }

    #[test]
    fn jacobi_witness_is_lexicographically_first() {
        // δ = -1 with [e1, e1] = e1 breaks hom-Jacobi already at (1, 1, 1)
        let l = HjlAlgebra::from_entries(Sign::Minus, 1, &[(0, 0, 0, int(1))], Matrix::identity(1)).unwrap();
        let report = check_axioms(&l);
        let w = report.hom_jacobi.witness().unwrap();
        assert_eq!(w.indices, vec![0, 0, 0]);
        assert_eq!(w.lhs, vec![int(3)]);
    }

    #[test]
    fn sign_rule_completion_and_rejection() {
        let l = fixtures::aff2();
        assert_eq!(l.bracket().get(1, 0, 0), int(-1));
        let err = HjlAlgebra::from_entries(
            Sign::Plus,
            2,
            &[(0, 1, 0, int(1)), (1, 0, 0, int(1))],
            Matrix::identity(2),
        )
        .unwrap_err();
        assert!(matches!(err, Error::SignRule { .. }));
        // diagonal entries are forbidden for δ = 1
        assert!(HjlAlgebra::from_entries(Sign::Plus, 1, &[(0, 0, 0, int(1))], Matrix::identity(1)).is_err());
        // raw tensors are validated too
        let mut t = Tensor3::zeros((2, 2, 2));
        t.set(0, 1, 0, int(1));
        assert!(HjlAlgebra::new(Sign::Plus, t, Matrix::identity(2)).is_err());
    }

    #[test]
    fn shape_errors() {
        let t = Tensor3::zeros((2, 2, 2));
        assert!(matches!(
            HjlAlgebra::new(Sign::Plus, t.clone(), Matrix::zeros(2, 3)),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            HjlAlgebra::new(Sign::Plus, t, Matrix::identity(3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn subalgebras_and_ideals() {
        let l = fixtures::aff2();
        let full = Subspace::full(2);
        assert!(is_subalgebra(&l, &full).unwrap());
        assert!(is_ideal(&l, &full).unwrap());
        let e1 = Subspace::coordinate(2, [0]);
        assert!(is_ideal(&l, &e1).unwrap());
        assert!(is_subalgebra(&l, &e1).unwrap());
        let e2 = Subspace::coordinate(2, [1]);
        assert!(is_subalgebra(&l, &e2).unwrap());
        assert!(!is_ideal(&l, &e2).unwrap());
        assert!(is_ideal(&l, &Subspace::zero(3)).is_err());
        // not α-stable
        let twisted = l.with_alpha(Matrix::from_i64(2, 2, &[1, 0, 1, 1])).unwrap();
        assert!(!is_subalgebra(&twisted, &e1).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let a2 = abelian(Sign::Plus, Matrix::identity(2)).unwrap();
        let a1 = abelian(Sign::Plus, Matrix::identity(1)).unwrap();
        let s = direct_sum(&a2, &a1).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.bracket().is_zero());

        let aff = fixtures::aff2();
        let s = direct_sum(&aff, &aff).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_axioms(&s).all_hold());
        assert_eq!(s.br_basis(2, 3), vec![int(0), int(0), int(1), int(0)]);

        let s = direct_sum(&aff, &a1).unwrap();
        assert_eq!(s.canonical_entries(), vec![(0, 1, 0, int(1))]);

        let sym = fixtures::symmetric_plane();
        assert!(matches!(direct_sum(&aff, &sym), Err(Error::SignMismatch(_))));
    }

    #[test]
    fn alpha_powers() {
        let l = fixtures::aff2().with_alpha(diag(2, 1)).unwrap();
        assert_eq!(l.alpha_pow(-1).unwrap(), Matrix::diagonal(&[frac(1, 2), int(1)]));
        assert_eq!(l.alpha_pow(2).unwrap(), diag(4, 1));
        let singular = l.with_alpha(Matrix::zeros(2, 2)).unwrap();
        assert!(singular.alpha_pow(-1).is_err());
        assert_eq!(Sign::Minus.pow(-3), Sign::Minus);
        assert_eq!(Sign::Minus.pow(2), Sign::Plus);
    }
}
