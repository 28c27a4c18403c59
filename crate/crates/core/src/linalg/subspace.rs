use num_traits::Zero;

use super::{is_zero_vector, unit_vector, Matrix, Rational, Vector};

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon form. The normal form is unique, so derived `PartialEq` is
/// subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the given vectors. Panics on length mismatch.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
        }
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let ech = Matrix::from_rows(vectors).expect("uniform lengths").echelon();
        Subspace {
            ambient,
            basis: ech.rows,
            pivots: ech.pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis: Vec<Vector> = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vector> = indices.into_iter().map(|i| unit_vector(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Echelon-normal basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong length");
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, b) in r.iter_mut().zip(row) {
                    *x -= &f * b;
                }
            }
        }
        is_zero_vector(&r)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = Σ a_i s_i = Σ b_j t_j  <=>  (a, -b) in the kernel of [S | T]
        let cols: Vec<Vector> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()))
            .collect();
        let m = Matrix::from_columns(self.ambient, &cols);
        let vs: Vec<Vector> = m
            .nullspace()
            .iter()
            .map(|coeffs| {
                let mut v = super::zero_vector(self.ambient);
                for (c, b) in coeffs.iter().zip(&self.basis) {
                    super::axpy(&mut v, c, b);
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Vectors `y` with `y · s = 0` for every `s` in the subspace, i.e. the
    /// annihilator in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(&self.basis).expect("uniform lengths");
        Subspace::span(self.ambient, &m.nullspace())
    }

    /// The coordinate complement: standard basis vectors on the non-pivot
    /// columns of the echelon form.
    pub fn echelon_complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        Subspace::coordinate(self.ambient, (0..self.ambient).filter(|&c| !is_pivot[c]))
    }

    /// Image under a linear map with `self.ambient()` columns.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map has wrong domain");
        let vs: Vec<Vector> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Subspace::span(map.rows(), &vs)
    }

    pub fn is_invariant_under(&self, map: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&map.mul_vec(v)))
    }
}
