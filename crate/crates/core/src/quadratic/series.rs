use crate::algebra::HjlAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{dot, matrix_of_linear_map, Subspace, Tensor3, Vector};

use super::tstar::tstar_extension;

/// Derived, lower central and upper central series. Each list runs from the
/// first term until the chain stabilizes; the last entry is the stable term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    /// `L^(0) = L`, `L^(k+1) = [L^(k), L^(k)]`
    pub derived: Vec<Subspace>,
    /// `L^0 = L`, `L^(k+1) = [L^k, L]`
    pub descending: Vec<Subspace>,
    /// `C_0 = 0`, `C_(k+1) = {a : [a, L] ⊆ C_k}`
    pub ascending: Vec<Subspace>,
    /// Smallest `k` with `L^(k) = 0`.
    pub solvable_length: Option<usize>,
    /// Smallest `k` with `L^k = 0`.
    pub nilpotent_length: Option<usize>,
}

fn bracket_span(l: &HjlAlgebra, s: &Subspace, t: &Subspace) -> Subspace {
    let vs: Vec<Vector> = s
        .basis()
        .iter()
        .flat_map(|x| t.basis().iter().map(move |y| l.br(x, y)))
        .collect();
    Subspace::span(l.dim(), &vs)
}

/// `{a : [a, L] ⊆ C}`.
fn centralizer_modulo(l: &HjlAlgebra, c: &Subspace) -> Subspace {
    let n = l.dim();
    let ann = c.annihilator();
    let checks = ann.dim() * n;
    let system = matrix_of_linear_map(n, checks, |a| {
        let mut out = Vec::with_capacity(checks);
        for j in 0..n {
            let br = l.br(a, &l.basis_vector(j));
            out.extend(ann.basis().iter().map(|y| dot(y, &br)));
        }
        out
    });
    Subspace::span(n, &system.nullspace())
}

fn iterate<F>(start: Subspace, step: F) -> Vec<Subspace>
where
    F: Fn(&Subspace) -> Subspace,
{
    let mut out = vec![start];
    loop {
        let next = step(out.last().expect("nonempty"));
        if &next == out.last().expect("nonempty") {
            return out;
        }
        out.push(next);
    }
}

pub fn series(l: &HjlAlgebra) -> Series {
    let n = l.dim();
    let full = Subspace::full(n);
    let derived = iterate(full.clone(), |s| bracket_span(l, s, s));
    let descending = iterate(full.clone(), |s| bracket_span(l, s, &full));
    let ascending = iterate(Subspace::zero(n), |c| centralizer_modulo(l, c));
    let length = |chain: &[Subspace]| chain.iter().position(Subspace::is_zero);
    Series {
        solvable_length: length(&derived),
        nilpotent_length: length(&descending),
        derived,
        descending,
        ascending,
    }
}

/// Lengths `k` of `L` and `r` of `T*_ω L` with the bounds they should obey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthBound {
    pub k: usize,
    pub r: Option<usize>,
    pub lower: usize,
    pub upper: usize,
}

impl LengthBound {
    pub fn holds(&self) -> bool {
        matches!(self.r, Some(r) if self.lower <= r && r <= self.upper)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthBounds {
    /// `k ≤ r ≤ k + 1`, present when `L` is solvable.
    pub solvable: Option<LengthBound>,
    /// `k ≤ r ≤ 2k − 1`, present when `L` is nilpotent.
    pub nilpotent: Option<LengthBound>,
}

impl LengthBounds {
    pub fn holds(&self) -> bool {
        self.solvable.as_ref().is_none_or(LengthBound::holds) && self.nilpotent.as_ref().is_none_or(LengthBound::holds)
    }
}

pub fn check_length_bounds(l: &HjlAlgebra, w: &Tensor3) -> Result<LengthBounds> {
    let t = tstar_extension(l, w)?;
    let base = series(l);
    let ext = series(t.algebra());
    let solvable = base.solvable_length.map(|k| LengthBound {
        k,
        r: ext.solvable_length,
        lower: k,
        upper: k + 1,
    });
    let nilpotent = base.nilpotent_length.map(|k| LengthBound {
        k,
        r: ext.nilpotent_length,
        lower: k,
        upper: (2 * k).saturating_sub(1).max(k),
    });
    let bounds = LengthBounds { solvable, nilpotent };
    if l.dim() == 0 {
        return Err(Error::Precondition("length bounds need a nonzero algebra".into()));
    }
    Ok(bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_series() {
        let a = series(&fixtures::abelian_n(2));
        assert_eq!((a.solvable_length, a.nilpotent_length), (Some(1), Some(1)));
        assert_eq!(a.ascending.last().unwrap(), &Subspace::full(2));

        let aff = series(&fixtures::aff2());
        assert_eq!(
            aff.derived,
            vec![Subspace::full(2), Subspace::coordinate(2, [0]), Subspace::zero(2)]
        );
        assert_eq!(aff.solvable_length, Some(2));
        assert_eq!(aff.descending.last().unwrap(), &Subspace::coordinate(2, [0]));
        assert_eq!(aff.nilpotent_length, None);
        assert_eq!(aff.ascending, vec![Subspace::zero(2)]);

        let h = series(&fixtures::heisenberg());
        assert_eq!((h.solvable_length, h.nilpotent_length), (Some(2), Some(2)));
        assert_eq!(
            h.ascending,
            vec![Subspace::zero(3), Subspace::coordinate(3, [2]), Subspace::full(3)]
        );
    }

    #[test]
    fn bounds() {
        let z = |n| Tensor3::zeros((n, n, n));
        let b = check_length_bounds(&fixtures::abelian_n(2), &z(2)).unwrap();
        assert!(b.holds());
        assert_eq!(b.solvable.as_ref().unwrap().r, Some(1));

        let b = check_length_bounds(&fixtures::aff2(), &z(2)).unwrap();
        let s = b.solvable.clone().unwrap();
        assert_eq!((s.k, s.r), (2, Some(3)));
        assert!(b.nilpotent.is_none());
        assert!(b.holds());

        let b = check_length_bounds(&fixtures::heisenberg(), &z(3)).unwrap();
        let nil = b.nilpotent.clone().unwrap();
        assert_eq!(nil.k, 2);
        assert!(b.holds());
    }
}
