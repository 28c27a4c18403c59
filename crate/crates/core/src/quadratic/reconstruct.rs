use num_traits::Zero;

use crate::algebra::{ideal_witness, morphism_report, AlgebraMorphism, HjlAlgebra};
use crate::error::{Error, Result, Witness};
use crate::linalg::{axpy, dot, frac, zero_vector, Matrix, Rational, Subspace, Tensor3, Vector};

use super::form::{is_isotropic, QuadraticHjl};
use super::tstar::tstar_extension;

/// `B ≅ L/I`, the cocycle `ω` and the isometry `φ: L → T*_ω B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub base: HjlAlgebra,
    pub w: Tensor3,
    pub phi: Matrix,
    /// The isotropic, α-stable complement `B₀` of `I` that was used.
    pub complement: Subspace,
    pub extension: QuadraticHjl,
}

fn pair(q: &Matrix, x: &[Rational], y: &[Rational]) -> Rational {
    dot(x, &q.mul_vec(y))
}

/// Turns any complement of `I` into an isotropic one dual to the echelon
/// basis of `I`: first `q(c_a, i_b) = δ_ab`, then remove half of each
/// self-pairing along `I`.
fn isotropic_complement(q: &Matrix, ideal: &Subspace, complement: &[Vector]) -> Option<Vec<Vector>> {
    let m = complement.len();
    let is = ideal.basis();
    let g = Matrix::from_data(
        m,
        m,
        complement
            .iter()
            .flat_map(|c| is.iter().map(move |i| pair(q, c, i)))
            .collect(),
    );
    let ginv = g.inverse()?;
    let n = q.rows();
    let dual: Vec<Vector> = (0..m)
        .map(|a| {
            let mut v = zero_vector(n);
            for (d, c) in complement.iter().enumerate() {
                axpy(&mut v, &ginv[(a, d)], c);
            }
            v
        })
        .collect();
    let half = frac(1, 2);
    Some(
        dual.iter()
            .map(|ca| {
                let mut b = ca.clone();
                for (cb, ib) in dual.iter().zip(is) {
                    axpy(&mut b, &(-&half * pair(q, ca, cb)), ib);
                }
                b
            })
            .collect(),
    )
}

/// Coordinate subsets of size `k` from `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rebuilds `(B, ω)` from a quadratic algebra and an isotropic ideal of half
/// its dimension, and verifies the isometric isomorphism onto `T*_ω B`.
pub fn reconstruct_from_isotropic_ideal(qa: &QuadraticHjl, ideal: &Subspace) -> Result<Reconstruction> {
    let l = qa.algebra();
    let q = qa.form();
    let n = l.dim();
    if ideal.ambient() != n {
        return Err(Error::Shape(format!(
            "ideal lives in dimension {}, algebra has {n}",
            ideal.ambient()
        )));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("dimension {n} is odd")));
    }
    let m = n / 2;
    if ideal.dim() != m {
        return Err(Error::Precondition(format!(
            "ideal has dimension {}, expected {m}",
            ideal.dim()
        )));
    }
    if let Some(witness) = ideal_witness(l, ideal) {
        return Err(Error::Violated {
            condition: "I is an ideal",
            witness,
        });
    }
    if !is_isotropic(q, ideal)? {
        return Err(Error::Precondition("I is not isotropic".into()));
    }
    for (a, x) in ideal.basis().iter().enumerate() {
        for (b, y) in ideal.basis().iter().enumerate() {
            let v = l.br(x, y);
            if v.iter().any(|c| !c.is_zero()) {
                return Err(Error::Violated {
                    condition: "I is abelian",
                    witness: Witness::nonzero(vec![a, b], v),
                });
            }
        }
    }

    // B₀: the echelon complement first, then coordinate complements in order
    let mut candidates = vec![ideal.echelon_complement()];
    candidates.extend(subsets(n, m).into_iter().map(|s| Subspace::coordinate(n, s)));
    let b0 = candidates
        .iter()
        .filter(|c| c.intersection(ideal).is_zero())
        .filter_map(|c| isotropic_complement(q, ideal, c.basis()))
        .find(|bs| Subspace::span(n, bs).is_invariant_under(l.alpha()))
        .ok_or_else(|| Error::Precondition("no alpha-stable isotropic complement of I was found".into()))?;

    let cols: Vec<Vector> = b0.iter().chain(ideal.basis()).cloned().collect();
    let p = Matrix::from_columns(n, &cols);
    let pinv = p.inverse().expect("complement and ideal span L");
    let split = |x: &[Rational]| {
        let c = pinv.mul_vec(x);
        (c[..m].to_vec(), c[m..].to_vec())
    };

    let mut bracket = Tensor3::zeros((m, m, m));
    let mut w = Tensor3::zeros((m, m, m));
    for a in 0..m {
        for c in 0..m {
            let (p0, p1) = split(&l.br(&b0[a], &b0[c]));
            bracket.set_fiber(a, c, &p0);
            let mut i_part = zero_vector(n);
            for (coef, iv) in p1.iter().zip(ideal.basis()) {
                axpy(&mut i_part, coef, iv);
            }
            for (k, bk) in b0.iter().enumerate() {
                w.set(a, c, k, pair(q, &i_part, bk));
            }
        }
    }
    let beta_cols: Vec<Vector> = b0.iter().map(|b| split(&l.alpha_apply(b)).0).collect();
    let base = HjlAlgebra::new(l.delta(), bracket, Matrix::from_columns(m, &beta_cols))?;
    let extension = tstar_extension(&base, &w)?;

    // φ = (I ⊕ Q*)·P⁻¹ with q*(i_b) = Σ_a q(i_b, b_a) e*_a
    let mut block = Matrix::identity(n);
    for (b, ib) in ideal.basis().iter().enumerate() {
        for (a, ba) in b0.iter().enumerate() {
            block[(m + a, m + b)] = pair(q, ib, ba);
        }
    }
    let phi = &block * &pinv;

    let report = morphism_report(&AlgebraMorphism::new(
        l.clone(),
        extension.algebra().clone(),
        phi.clone(),
    )?);
    report.brackets.require("reconstruction map preserves brackets")?;
    report.twists.require("reconstruction map commutes with twists")?;
    if phi.inverse().is_none() {
        return Err(Error::Precondition("reconstruction map is not bijective".into()));
    }
    let pulled = &(&phi.transpose() * extension.form()) * &phi;
    if &pulled != q {
        let c = (0..n).find(|&c| pulled.column(c) != q.column(c)).expect("differs");
        return Err(Error::Violated {
            condition: "reconstruction map is an isometry",
            witness: Witness::new(vec![c], pulled.column(c), q.column(c)),
        });
    }
    Ok(Reconstruction {
        base,
        w,
        phi,
        complement: Subspace::span(n, &b0),
        extension,
    })
}
