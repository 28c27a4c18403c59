//! Small named algebras used across tests, examples and the CLI corpus.

use crate::algebra::{abelian, DeltaHomAssociative, HjlAlgebra, Sign};
use crate::linalg::{int, Matrix, Tensor3};

pub fn abelian_n(n: usize) -> HjlAlgebra {
    abelian(Sign::Plus, Matrix::identity(n)).expect("abelian algebra")
}

/// The two-dimensional non-abelian Lie algebra `[e1, e2] = e1`.
pub fn aff2() -> HjlAlgebra {
    HjlAlgebra::from_entries(Sign::Plus, 2, &[(0, 1, 0, int(1))], Matrix::identity(2)).expect("aff2")
}

/// `aff2` twisted by `α = diag(2, 1)`, which is an automorphism.
pub fn aff2_twisted() -> HjlAlgebra {
    aff2()
        .with_alpha(Matrix::diagonal(&[int(2), int(1)]))
        .expect("twisted aff2")
}

/// Heisenberg algebra `[e1, e2] = e3`.
pub fn heisenberg() -> HjlAlgebra {
    HjlAlgebra::from_entries(Sign::Plus, 3, &[(0, 1, 2, int(1))], Matrix::identity(3)).expect("h3")
}

/// A symmetric (`δ = -1`) two-dimensional algebra with identity twist:
/// `[e1,e1] = [e2,e2] = e1 + e2`, `[e1,e2] = -e1 - e2`.
pub fn symmetric_plane() -> HjlAlgebra {
    HjlAlgebra::from_entries(
        Sign::Minus,
        2,
        &[
            (0, 0, 0, int(1)),
            (0, 0, 1, int(1)),
            (0, 1, 0, int(-1)),
            (0, 1, 1, int(-1)),
            (1, 1, 0, int(1)),
            (1, 1, 1, int(1)),
        ],
        Matrix::identity(2),
    )
    .expect("symmetric plane")
}

/// Upper-triangular 2×2 matrices on the basis `E11, E12, E22`.
pub fn upper_triangular() -> DeltaHomAssociative {
    let mut m = Tensor3::zeros((3, 3, 3));
    m.set(0, 0, 0, int(1));
    m.set(0, 1, 1, int(1));
    m.set(1, 2, 1, int(1));
    m.set(2, 2, 2, int(1));
    DeltaHomAssociative::new(Sign::Plus, m, Matrix::identity(3)).expect("upper triangular")
}

/// The trivial T*-extension of [`aff2`], four-dimensional.
pub fn tstar0_aff2() -> HjlAlgebra {
    crate::quadratic::tstar_extension(&aff2(), &Tensor3::zeros((2, 2, 2)))
        .expect("T*0(aff2)")
        .algebra()
        .clone()
}

/// The built-in corpus as `(name, algebra)` pairs, in a fixed order.
pub fn corpus() -> Vec<(&'static str, HjlAlgebra)> {
    vec![
        ("abelian1", abelian_n(1)),
        ("abelian2", abelian_n(2)),
        ("abelian3", abelian_n(3)),
        ("aff2", aff2()),
        ("aff2-twisted", aff2_twisted()),
        ("h3", heisenberg()),
        ("sym2", symmetric_plane()),
        ("tstar0-aff2", tstar0_aff2()),
    ]
}
