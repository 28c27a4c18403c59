use crate::algebra::{check_axioms, is_ideal, HjlAlgebra};
use crate::error::{Error, Result, Verdict, Witness};
use crate::linalg::{is_zero_vector, matrix_of_linear_map, Matrix, Rational, Subspace, Tensor3, Vector};
use crate::representations::{coadjoint_report, cochain2_report, d2, CoadjointReport, Cochain2Report, Representation};

use super::form::QuadraticHjl;

fn check_shape(l: &HjlAlgebra, w: &Tensor3) -> Result<()> {
    let n = l.dim();
    if w.dims() != (n, n, n) {
        return Err(Error::Shape(format!(
            "dual cochain has dims {:?}, expected ({n}, {n}, {n})",
            w.dims()
        )));
    }
    Ok(())
}

fn coadjoint(l: &HjlAlgebra) -> Representation {
    crate::representations::coadjoint_unchecked(l)
}

/// `ω(x, y)(z) = ω(y, z)(x)`.
pub fn is_jordancyclic(w: &Tensor3) -> Verdict {
    let (n, _, _) = w.dims();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b) = (w.get(i, j, k), w.get(j, k, i));
                if a != b {
                    return Verdict::Fails(Witness::new(vec![i, j, k], vec![a], vec![b]));
                }
            }
        }
    }
    Verdict::Holds
}

/// Sign rule and `ω(αx, αy) = ω(x, y)∘α`.
pub fn dual_cochain_report(l: &HjlAlgebra, w: &Tensor3) -> Result<Cochain2Report> {
    check_shape(l, w)?;
    cochain2_report(&coadjoint(l), w)
}

/// The cocycle identity in the form used for T*-extensions:
/// `δπ(αx)ω(y,z) − π(αy)ω(x,z) + δπ(αz)ω(x,y) + ω(αx,[y,z]) + ω([x,z],αy) − δω([x,y],αz) = 0`,
/// first failure in lexicographic order.
fn cocycle_defect(l: &HjlAlgebra, w: &Tensor3) -> Vec<Vector> {
    let n = l.dim();
    let d = l.delta().rational();
    let pi = coadjoint(l);
    let ac: Vec<Vector> = (0..n).map(|i| l.alpha().column(i)).collect();
    let pa: Vec<Matrix> = ac.iter().map(|a| pi.rho_of(a)).collect();
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let terms: [(Rational, Vector); 6] = [
                    (d.clone(), pa[i].mul_vec(&w.fiber(j, k))),
                    (-crate::linalg::int(1), pa[j].mul_vec(&w.fiber(i, k))),
                    (d.clone(), pa[k].mul_vec(&w.fiber(i, j))),
                    (crate::linalg::int(1), w.apply(&ac[i], &l.br_basis(j, k))),
                    (crate::linalg::int(1), w.apply(&l.br_basis(i, k), &ac[j])),
                    (-&d, w.apply(&l.br_basis(i, j), &ac[k])),
                ];
                out.push(crate::representations::combine(&terms, n));
            }
        }
    }
    out
}

/// The T* cocycle condition. For valid cochains on algebras with a coadjoint
/// representation it is cross-checked against `d²` over that representation;
/// a disagreement is an error.
pub fn tstar_cocycle_report(l: &HjlAlgebra, w: &Tensor3) -> Result<Verdict> {
    check_shape(l, w)?;
    let n = l.dim();
    let defect = cocycle_defect(l, w);
    let verdict: Verdict = defect
        .iter()
        .position(|v| !is_zero_vector(v))
        .map(|p| Witness::nonzero(vec![p / (n * n), (p / n) % n, p % n], defect[p].clone()))
        .into();
    if coadjoint_report(l).holds() && dual_cochain_report(l, w)?.holds() {
        let closed = d2(&coadjoint(l), w)?.is_zero();
        if closed != verdict.holds() {
            return Err(Error::Precondition(format!(
                "cocycle conditions diverge: T* identity {}, d2 over the coadjoint representation {}",
                verdict.holds(),
                closed
            )));
        }
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TstarPreconditions {
    pub coadjoint: CoadjointReport,
    pub cochain: Cochain2Report,
    pub jordancyclic: Verdict,
    pub cocycle: Verdict,
}

impl TstarPreconditions {
    pub fn holds(&self) -> bool {
        self.coadjoint.holds() && self.cochain.holds() && self.jordancyclic.holds() && self.cocycle.holds()
    }
}

pub fn tstar_preconditions(l: &HjlAlgebra, w: &Tensor3) -> Result<TstarPreconditions> {
    Ok(TstarPreconditions {
        coadjoint: coadjoint_report(l),
        cochain: dual_cochain_report(l, w)?,
        jordancyclic: is_jordancyclic(w),
        cocycle: tstar_cocycle_report(l, w)?,
    })
}

/// `[x+f, y+g] = [x,y] + ω(x,y) + δπ(x)g − π(y)f` as a raw tensor on
/// `L ⊕ L*`, whatever `ω` is.
pub fn tstar_bracket(l: &HjlAlgebra, w: &Tensor3) -> Tensor3 {
    let n = l.dim();
    let d = l.delta().rational();
    let mut t = Tensor3::zeros((2 * n, 2 * n, 2 * n));
    for ((i, j, k), c) in l.bracket().iter() {
        t.set(i, j, k, c.clone());
        // π(e_i) e*_k = −Σ_a c(i, a, k) e*_a
        t.add_to(i, n + k, n + j, &(-&d * c));
        t.add_to(n + k, i, n + j, c);
    }
    for ((i, j, k), c) in w.iter() {
        t.add_to(i, j, n + k, c);
    }
    t
}

/// `[[0, I], [I, 0]]`.
pub fn hyperbolic_form(n: usize) -> Matrix {
    let mut q = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        q[(i, n + i)] = crate::linalg::int(1);
        q[(n + i, i)] = crate::linalg::int(1);
    }
    q
}

/// `T*_ω L`, after checking each precondition and verifying the result.
pub fn tstar_extension(l: &HjlAlgebra, w: &Tensor3) -> Result<QuadraticHjl> {
    check_shape(l, w)?;
    let co = coadjoint_report(l);
    co.twist.require("coadjoint twist condition")?;
    co.bracket.require("coadjoint bracket condition")?;
    let cochain = dual_cochain_report(l, w)?;
    if let Some(wit) = cochain.sign_rule.witness() {
        return Err(Error::SignRule {
            i: wit.indices[0],
            j: wit.indices[1],
            k: 0,
        });
    }
    cochain.compatible.require("omega commutes with the twists")?;
    is_jordancyclic(w).require("omega is Jordancyclic")?;
    tstar_cocycle_report(l, w)?.require("omega is a 2-cocycle")?;

    let n = l.dim();
    let alpha = l.alpha().block_diag(&l.alpha().transpose());
    let algebra = HjlAlgebra::new(l.delta(), tstar_bracket(l, w), alpha)?;
    let axioms = check_axioms(&algebra);
    axioms.hom_jacobi.require("hom-Jacobi identity of the T*-extension")?;
    axioms.multiplicative.require("multiplicativity of the T*-extension")?;
    let dual = Subspace::coordinate(2 * n, n..2 * n);
    if !is_ideal(&algebra, &dual)? {
        return Err(Error::Precondition("L* is not an ideal of the T*-extension".into()));
    }
    QuadraticHjl::new(algebra, hyperbolic_form(n))
}

/// Basis of the Jordancyclic 2-cocycles with values in `L*` satisfying the
/// sign rule and twist compatibility, in flat echelon-normal order.
pub fn jordancyclic_cocycles(l: &HjlAlgebra) -> Result<Vec<Tensor3>> {
    let n = l.dim();
    let dims = (n, n, n);
    let d = l.delta().rational();
    let at = l.alpha().transpose();
    let system = matrix_of_linear_map(n * n * n, 3 * n * n * n + n * n * n * n, |x| {
        let w = Tensor3::from_flat(dims, x);
        let mut out = Vec::with_capacity(3 * n * n * n + n * n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.push(w.get(i, j, k) + &d * w.get(j, i, k));
                    out.push(w.get(i, j, k) - w.get(j, k, i));
                }
                let lhs = at.mul_vec(&w.fiber(i, j));
                let rhs = w.apply(&l.alpha().column(i), &l.alpha().column(j));
                out.extend(crate::linalg::sub_vectors(&lhs, &rhs));
            }
        }
        for v in cocycle_defect(l, &w) {
            out.extend(v);
        }
        out
    });
    Ok(system.nullspace().iter().map(|v| Tensor3::from_flat(dims, v)).collect())
}

/// `T*₀L = T*₀I ⊕ T*₀J` for `L = I ⊕ J`, with `T*₀I = I ⊕ J^⊥`.
pub fn tstar_split(l: &HjlAlgebra, i: &Subspace, j: &Subspace) -> Result<(Subspace, Subspace)> {
    let n = l.dim();
    for (name, s) in [("I", i), ("J", j)] {
        if s.is_zero() {
            return Err(Error::Precondition(format!("{name} must be a nonzero ideal")));
        }
        if let Some(witness) = crate::algebra::ideal_witness(l, s) {
            return Err(Error::Violated {
                condition: "summand is an ideal",
                witness,
            });
        }
    }
    if !i.intersection(j).is_zero() || i.sum(j) != Subspace::full(n) {
        return Err(Error::Precondition("I and J do not decompose L as a direct sum".into()));
    }
    let t = tstar_extension(l, &Tensor3::zeros((n, n, n)))?;
    let lift = |s: &Subspace, other: &Subspace| {
        let mut vs: Vec<Vector> = s
            .basis()
            .iter()
            .map(|v| [v.clone(), crate::linalg::zero_vector(n)].concat())
            .collect();
        vs.extend(
            other
                .annihilator()
                .basis()
                .iter()
                .map(|y| [crate::linalg::zero_vector(n), y.clone()].concat()),
        );
        Subspace::span(2 * n, &vs)
    };
    let (ti, tj) = (lift(i, j), lift(j, i));
    for s in [&ti, &tj] {
        if let Some(witness) = crate::algebra::ideal_witness(t.algebra(), s) {
            return Err(Error::Violated {
                condition: "T*-summand is an ideal",
                witness,
            });
        }
    }
    if !ti.intersection(&tj).is_zero() || ti.sum(&tj) != Subspace::full(2 * n) {
        return Err(Error::Precondition("T*-summands do not span the extension".into()));
    }
    Ok((ti, tj))
}
