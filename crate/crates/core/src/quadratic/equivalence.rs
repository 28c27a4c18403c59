use crate::algebra::{morphism_report, AlgebraMorphism, HjlAlgebra, MorphismReport};
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{frac, matrix_of_linear_map, Matrix, Rational, Tensor3, Vector};
use crate::representations::combine;

use super::form::check_form;
use super::tstar::tstar_extension;

/// `(x, y) ↦ δπ(x)z(y) − π(y)z(x) − z([x, y])`, the right-hand side of the
/// equivalence equation, as a dual cochain.
pub fn tstar_coboundary(l: &HjlAlgebra, z: &Matrix) -> Tensor3 {
    let n = l.dim();
    let d = l.delta().rational();
    let pi = crate::representations::coadjoint_unchecked(l);
    let mut out = Tensor3::zeros((n, n, n));
    for i in 0..n {
        for j in 0..n {
            let v = combine(
                &[
                    (d.clone(), pi.rho()[i].mul_vec(&z.column(j))),
                    (-crate::linalg::int(1), pi.rho()[j].mul_vec(&z.column(i))),
                    (-crate::linalg::int(1), z.mul_vec(&l.br_basis(i, j))),
                ],
                n,
            );
            out.set_fiber(i, j, &v);
        }
    }
    out
}

/// `Φ = [[I, 0], [Z, I]]`.
fn phi_of(z: &Matrix) -> Matrix {
    let n = z.rows();
    let mut phi = Matrix::identity(2 * n);
    for r in 0..n {
        for c in 0..n {
            phi[(n + r, c)] = z[(r, c)].clone();
        }
    }
    phi
}

/// Everything checked about `Φ(x + f) = x + z(x) + f` for a given `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceMapReport {
    /// `ω₁ − ω₂ = δπ(x)z(y) − π(y)z(x) − z([x, y])`
    pub equation: Verdict,
    /// `Zα = αᵀZ`
    pub compatible: Verdict,
    pub morphism: MorphismReport,
    /// `q(Φa, Φb) = q(a, b) + 2z_s(x)(y)` exactly.
    pub isometry_defect: bool,
    /// `z_s = 0`
    pub isometric: bool,
    /// Invariance of the bilinear form `z_s` on `L`.
    pub symmetric_part_invariant: Verdict,
}

impl EquivalenceMapReport {
    /// `Φ` is an isomorphism of T*-extensions (it fixes `L*` and induces the
    /// identity on `L` by construction).
    pub fn is_equivalence(&self) -> bool {
        self.equation.holds() && self.morphism.holds() && self.isometry_defect
    }
}

pub fn equivalence_map_report(l: &HjlAlgebra, w1: &Tensor3, w2: &Tensor3, z: &Matrix) -> Result<EquivalenceMapReport> {
    let n = l.dim();
    if z.rows() != n || z.cols() != n {
        return Err(Error::Shape(format!(
            "z is {}x{}, algebra has dimension {n}",
            z.rows(),
            z.cols()
        )));
    }
    let t1 = tstar_extension(l, w1)?;
    let t2 = tstar_extension(l, w2)?;

    let diff = w1.sub(w2);
    let cob = tstar_coboundary(l, z);
    let equation = (|| {
        for i in 0..n {
            for j in 0..n {
                if diff.fiber(i, j) != cob.fiber(i, j) {
                    return Some(Witness::new(vec![i, j], diff.fiber(i, j), cob.fiber(i, j)));
                }
            }
        }
        None
    })()
    .into();

    let lhs = z * l.alpha();
    let rhs = &l.alpha().transpose() * z;
    let compatible = (0..n)
        .find(|&c| lhs.column(c) != rhs.column(c))
        .map(|c| Witness::new(vec![c], lhs.column(c), rhs.column(c)))
        .into();

    let phi = phi_of(z);
    let morphism = morphism_report(&AlgebraMorphism::new(
        t1.algebra().clone(),
        t2.algebra().clone(),
        phi.clone(),
    )?);

    let zs = (z + &z.transpose()).scale(&frac(1, 2));
    let pulled = &(&phi.transpose() * t2.form()) * &phi;
    let defect = (&zs + &zs).block_diag(&Matrix::zeros(n, n));
    let expected = t1.form() + &defect;

    Ok(EquivalenceMapReport {
        equation,
        compatible,
        morphism,
        isometry_defect: pulled == expected,
        isometric: zs.is_zero(),
        symmetric_part_invariant: check_form(l, &zs)?.invariant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TstarEquivalence {
    /// Some solution of the equivalence equation, verified.
    pub z: Option<Matrix>,
    /// A solution with vanishing symmetric part, when one exists.
    pub isometric_z: Option<Matrix>,
}

impl TstarEquivalence {
    pub fn equivalent(&self) -> bool {
        self.z.is_some()
    }

    pub fn isometric(&self) -> bool {
        self.isometric_z.is_some()
    }
}

/// Solves `ω₁ − ω₂ = δπ(x)z(y) − π(y)z(x) − z([x, y])` for `z`, restricted to
/// `Zα = αᵀZ` unless `compat` is false, and separately with `z_s = 0`. Every
/// solution returned has passed [`equivalence_map_report`].
pub fn tstar_equivalence(l: &HjlAlgebra, w1: &Tensor3, w2: &Tensor3, compat: bool) -> Result<TstarEquivalence> {
    tstar_extension(l, w1)?;
    tstar_extension(l, w2)?;
    let n = l.dim();
    let rhs = w1.sub(w2).to_flat();
    let solve = |skew: bool| -> Result<Option<Matrix>> {
        let extra = if compat { n * n } else { 0 } + if skew { n * n } else { 0 };
        let system = matrix_of_linear_map(n * n, n * n * n + extra, |x| {
            let z = Matrix::from_data(n, n, x.to_vec());
            let mut out = tstar_coboundary(l, &z).to_flat();
            if compat {
                out.extend(
                    (&(&z * l.alpha()) - &(&l.alpha().transpose() * &z))
                        .data()
                        .iter()
                        .cloned(),
                );
            }
            if skew {
                out.extend((&z + &z.transpose()).data().iter().cloned());
            }
            out
        });
        let mut b: Vector = rhs.clone();
        b.extend(std::iter::repeat_n(Rational::default(), extra));
        let Some(x) = system.solve(&b) else {
            return Ok(None);
        };
        let z = Matrix::from_data(n, n, x);
        let report = equivalence_map_report(l, w1, w2, &z)?;
        report.equation.clone().require("equivalence equation")?;
        report
            .morphism
            .brackets
            .clone()
            .require("equivalence map preserves brackets")?;
        report
            .morphism
            .twists
            .clone()
            .require("equivalence map commutes with twists")?;
        if !report.isometry_defect {
            return Err(Error::Precondition(
                "form defect of the equivalence map is not 2 z_s".into(),
            ));
        }
        Ok(Some(z))
    };
    Ok(TstarEquivalence {
        z: solve(false)?,
        isometric_z: solve(true)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::int;

    #[test]
    fn equal_cochains() {
        let l = fixtures::aff2();
        let w = Tensor3::zeros((2, 2, 2));
        let e = tstar_equivalence(&l, &w, &w, true).unwrap();
        assert_eq!(e.z, Some(Matrix::zeros(2, 2)));
        assert!(e.isometric());
    }

    #[test]
    fn abelian_cyclic_cochains_are_inequivalent() {
        // the alternating tensor is the only cyclic, skew orbit in dimension 3
        let l3 = fixtures::abelian_n(3);
        let mut w = Tensor3::zeros((3, 3, 3));
        for (i, j, k, s) in [
            (0, 1, 2, 1),
            (1, 2, 0, 1),
            (2, 0, 1, 1),
            (1, 0, 2, -1),
            (0, 2, 1, -1),
            (2, 1, 0, -1),
        ] {
            w.set(i, j, k, int(s));
        }
        let zero = Tensor3::zeros((3, 3, 3));
        let e = tstar_equivalence(&l3, &w, &zero, true).unwrap();
        assert!(!e.equivalent());
        assert!(!e.isometric());
    }

    #[test]
    fn forward_construction_round_trips() {
        let l = fixtures::heisenberg();
        let w1 = Tensor3::zeros((3, 3, 3));
        // a skew z: symmetric part zero
        let z = Matrix::from_i64(3, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 0]);
        let w2 = w1.sub(&tstar_coboundary(&l, &z));
        let report = equivalence_map_report(&l, &w1, &w2, &z).unwrap();
        assert!(report.is_equivalence());
        assert!(report.isometric);
        let e = tstar_equivalence(&l, &w1, &w2, true).unwrap();
        assert!(e.equivalent() && e.isometric());
    }
}
