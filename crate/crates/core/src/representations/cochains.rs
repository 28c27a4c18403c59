use num_traits::Zero;

use crate::algebra::HjlAlgebra;
use crate::derivations::derivation_space;
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{matrix_of_linear_map, sub_vectors, Matrix, Rational, Subspace, Tensor3, Vector};

use super::{act, check_representation, combine, Representation};

/// Values of a 3-cochain: `t(i, j, k)` is the module vector at
/// `(e_i, e_j, e_k)`. Only ever produced by [`d2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3 {
    n: usize,
    m: usize,
    data: Vec<Rational>,
}

impl Cochain3 {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let start = ((i * self.n + j) * self.n + k) * self.m;
        &self.data[start..start + self.m]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First nonzero value in lexicographic order.
    pub fn first_nonzero(&self) -> Option<Witness> {
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let v = self.get(i, j, k);
                    if !v.iter().all(Zero::is_zero) {
                        return Some(Witness::nonzero(vec![i, j, k], v.to_vec()));
                    }
                }
            }
        }
        None
    }

    pub fn as_flat(&self) -> &[Rational] {
        &self.data
    }
}

fn check_cochain1_shape(r: &Representation, f: &Matrix) -> Result<()> {
    let (n, m) = (r.algebra().dim(), r.module_dim());
    if f.rows() != m || f.cols() != n {
        return Err(Error::Shape(format!(
            "1-cochain is {}x{}, expected {m}x{n}",
            f.rows(),
            f.cols()
        )));
    }
    Ok(())
}

fn check_cochain2_shape(r: &Representation, w: &Tensor3) -> Result<()> {
    let (n, m) = (r.algebra().dim(), r.module_dim());
    if w.dims() != (n, n, m) {
        return Err(Error::Shape(format!(
            "2-cochain has dims {:?}, expected ({n}, {n}, {m})",
            w.dims()
        )));
    }
    Ok(())
}

/// `Af = fα`, witnessed on a basis vector.
pub fn cochain1_report(r: &Representation, f: &Matrix) -> Result<Verdict> {
    check_cochain1_shape(r, f)?;
    let lhs = r.a() * f;
    let rhs = f * r.algebra().alpha();
    Ok((0..f.cols())
        .find(|&c| lhs.column(c) != rhs.column(c))
        .map(|c| Witness::new(vec![c], lhs.column(c), rhs.column(c)))
        .into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2Report {
    /// `w(u, v) = −δ w(v, u)`
    pub sign_rule: Verdict,
    /// `A w(u, v) = w(αu, αv)`
    pub compatible: Verdict,
}

impl Cochain2Report {
    pub fn holds(&self) -> bool {
        self.sign_rule.holds() && self.compatible.holds()
    }
}

pub fn cochain2_report(r: &Representation, w: &Tensor3) -> Result<Cochain2Report> {
    check_cochain2_shape(r, w)?;
    let l = r.algebra();
    let n = l.dim();
    let d = l.delta().rational();
    let sign_rule = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = w.fiber(i, j);
                let rhs: Vector = w.fiber(j, i).iter().map(|x| -&d * x).collect();
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        None
    })()
    .into();
    let compatible = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = r.a().mul_vec(&w.fiber(i, j));
                let rhs = w.apply(&l.alpha().column(i), &l.alpha().column(j));
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        None
    })()
    .into();
    Ok(Cochain2Report { sign_rule, compatible })
}

/// `d¹f(u₁,u₂) = ρ(αu₁)f(u₂) − δρ(αu₂)f(u₁) − δf([u₁,u₂])`.
pub fn d1(r: &Representation, f: &Matrix) -> Result<Tensor3> {
    check_cochain1_shape(r, f)?;
    let l = r.algebra();
    let (n, m) = (l.dim(), r.module_dim());
    let d = l.delta().rational();
    let one = Rational::from_integer(1.into());
    let mut out = Tensor3::zeros((n, n, m));
    for i in 0..n {
        for j in 0..n {
            let v = combine(
                &[
                    (one.clone(), act(r, &l.alpha().column(i), &f.column(j))),
                    (-&d, act(r, &l.alpha().column(j), &f.column(i))),
                    (-&d, f.mul_vec(&l.br_basis(i, j))),
                ],
                m,
            );
            out.set_fiber(i, j, &v);
        }
    }
    Ok(out)
}

/// `d²w(u₁,u₂,u₃) = ρ(α²u₁)w(u₂,u₃) − δρ(α²u₂)w(u₁,u₃) + ρ(α²u₃)w(u₁,u₂)
///                − w([u₁,u₂],αu₃) + δw([u₁,u₃],αu₂) − w([u₂,u₃],αu₁)`.
pub fn d2(r: &Representation, w: &Tensor3) -> Result<Cochain3> {
    check_cochain2_shape(r, w)?;
    let l = r.algebra();
    let (n, m) = (l.dim(), r.module_dim());
    let d = l.delta().rational();
    let one = Rational::from_integer(1.into());
    let alpha = l.alpha();
    let alpha2 = alpha * alpha;
    let rho2: Vec<Matrix> = (0..n).map(|i| r.rho_of(&alpha2.column(i))).collect();
    let ac: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    let mut data = Vec::with_capacity(n * n * n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = combine(
                    &[
                        (one.clone(), rho2[i].mul_vec(&w.fiber(j, k))),
                        (-&d, rho2[j].mul_vec(&w.fiber(i, k))),
                        (one.clone(), rho2[k].mul_vec(&w.fiber(i, j))),
                        (-&one, w.apply(&l.br_basis(i, j), &ac[k])),
                        (d.clone(), w.apply(&l.br_basis(i, k), &ac[j])),
                        (-&one, w.apply(&l.br_basis(j, k), &ac[i])),
                    ],
                    m,
                );
                data.extend(v);
            }
        }
    }
    Ok(Cochain3 { n, m, data })
}

/// Basis of `C¹`: maps `f` (row-major `m × n`) with `Af = fα`.
pub fn cochain1_space(r: &Representation) -> Vec<Matrix> {
    let (n, m) = (r.algebra().dim(), r.module_dim());
    let alpha = r.algebra().alpha();
    let system = matrix_of_linear_map(m * n, m * n, |x| {
        let f = Matrix::from_data(m, n, x.to_vec());
        (&(r.a() * &f) - &(&f * alpha)).data().to_vec()
    });
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_data(m, n, v))
        .collect()
}

/// Basis of the Jordan-symmetric, compatible 2-cochains, flattened as
/// `(i * n + j) * m + c`.
pub fn cochain2_space(r: &Representation) -> Vec<Tensor3> {
    let l = r.algebra();
    let (n, m) = (l.dim(), r.module_dim());
    let d = l.delta().rational();
    let dims = (n, n, m);
    let system = matrix_of_linear_map(n * n * m, 2 * n * n * m, |x| {
        let w = Tensor3::from_flat(dims, x);
        let mut out = Vec::with_capacity(2 * n * n * m);
        for i in 0..n {
            for j in 0..n {
                let mirrored: Vector = w.fiber(j, i).iter().map(|x| &d * x).collect();
                out.extend(crate::linalg::add_vectors(&w.fiber(i, j), &mirrored));
                out.extend(sub_vectors(
                    &r.a().mul_vec(&w.fiber(i, j)),
                    &w.apply(&l.alpha().column(i), &l.alpha().column(j)),
                ));
            }
        }
        out
    });
    system
        .nullspace()
        .into_iter()
        .map(|v| Tensor3::from_flat(dims, &v))
        .collect()
}

/// Closed 1-cochains, as a subspace of row-major `m × n` coordinates.
pub fn z1(r: &Representation) -> Subspace {
    let (n, m) = (r.algebra().dim(), r.module_dim());
    let basis = cochain1_space(r);
    let system = matrix_of_linear_map(basis.len(), n * n * m, |c| {
        let f = combine_matrices(&basis, c, m, n);
        d1(r, &f).expect("shape").to_flat()
    });
    let vs: Vec<Vector> = system
        .nullspace()
        .iter()
        .map(|c| combine_matrices(&basis, c, m, n).data().to_vec())
        .collect();
    Subspace::span(m * n, &vs)
}

fn combine_matrices(basis: &[Matrix], coeffs: &[Rational], rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = &out + &b.scale(c);
        }
    }
    out
}

/// `Z²`, `B²` and `dim H²`, with bases in echelon-normal flat coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology2 {
    pub z2: Vec<Tensor3>,
    pub b2: Vec<Tensor3>,
    pub h2: usize,
}

pub fn cohomology2(r: &Representation) -> Result<Cohomology2> {
    let report = check_representation(r);
    report.twist.require("representation twist identity")?;
    report.bracket.require("representation bracket identity")?;
    let l = r.algebra();
    let (n, m) = (l.dim(), r.module_dim());
    let dims = (n, n, m);
    let len = n * n * m;

    let valid = cochain2_space(r);
    let system = matrix_of_linear_map(valid.len(), n * n * n * m, |c| {
        d2(r, &combine_tensors(&valid, c, dims))
            .expect("shape")
            .as_flat()
            .to_vec()
    });
    let closed: Vec<Vector> = system
        .nullspace()
        .iter()
        .map(|c| combine_tensors(&valid, c, dims).to_flat())
        .collect();
    let z = Subspace::span(len, &closed);

    let exact: Vec<Vector> = cochain1_space(r)
        .iter()
        .map(|f| d1(r, f).map(|t| t.to_flat()))
        .collect::<Result<_>>()?;
    let b = Subspace::span(len, &exact);
    if let Some(v) = b.basis().iter().find(|v| !z.contains(v)) {
        // d²∘d¹ = 0 failing is a defect, not an input problem
        let t = Tensor3::from_flat(dims, v);
        let witness = d2(r, &t)?.first_nonzero().expect("not closed");
        return Err(Error::Violated {
            condition: "d2 d1 = 0",
            witness,
        });
    }
    let to_tensors = |s: &Subspace| {
        s.basis()
            .iter()
            .map(|v| Tensor3::from_flat(dims, v))
            .collect::<Vec<_>>()
    };
    Ok(Cohomology2 {
        h2: z.dim() - b.dim(),
        z2: to_tensors(&z),
        b2: to_tensors(&b),
    })
}

pub(crate) fn combine_tensors(basis: &[Tensor3], coeffs: &[Rational], dims: (usize, usize, usize)) -> Tensor3 {
    let mut out = Tensor3::zeros(dims);
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleDerivationMatch {
    pub cocycles: Subspace,
    pub derivations: Subspace,
}

impl CocycleDerivationMatch {
    pub fn equal(&self) -> bool {
        self.cocycles == self.derivations
    }
}

/// Closed 1-cochains of `ad_s` against `Der_{α^{s+1}}(L)`; needs `δ^{s+1} = 1`.
pub fn cocycle_derivation_match(l: &HjlAlgebra, s: i64) -> Result<CocycleDerivationMatch> {
    if !l.delta().pow(s + 1).is_plus() {
        return Err(Error::Precondition(format!("delta^{} must be 1", s + 1)));
    }
    let ad = super::adjoint_representation(l, s)?;
    let n = l.dim();
    let ders: Vec<Vector> = derivation_space(l, s + 1)?.iter().map(|d| d.data().to_vec()).collect();
    Ok(CocycleDerivationMatch {
        cocycles: z1(&ad),
        derivations: Subspace::span(n * n, &ders),
    })
}
